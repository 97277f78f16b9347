"""The dual algebra, the canonical pairing, the four actions, and the dual
integrals with their normalization cross-checks.

The dual basis is the canonical dual of the primal basis, so the pairing
matrix is the identity and all content lives in the structure constants:
the dual product is the transposed coproduct, the dual coproduct the
transposed product, the dual antipode the transposed antipode.

Conventions (the ones under which the hand-checked witnesses come out
right, and the only self-consistent choice here):
  pairing of a product in the dual:   <a, y*y'> = sum <a_(1), y><a_(2), y'>
  dual acts on the algebra:           y -> a = sum a_(1) <a_(2), y>
                                      a <- y = sum <a_(1), y> a_(2)
  algebra acts on the dual:           a -> y = sum y_(1) <a, y_(2)>
                                      y <- a = sum <a, y_(1)> y_(2)
"""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import CorruptedDataError, HopfAlgebra, LinearFunctional
from .linalg import Matrix, Tensor3, invert
from .modular import (ModularData, gram_matrix, left_integral, modular_automorphism,
                      modular_element, right_integral, scaling_constant)
from .scalars import Scalar


def build_dual(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the canonical dual basis.

    Fails hard if the dual does not validate: that can only happen through
    a convention error, never for honest input.
    """
    h.require_valid()
    n = h.dim
    zero = h.field.zero()
    mul_hat = [[[h.comul.entries[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    comul_hat = [[[h.mul.entries[j][k][i] for k in range(n)] for j in range(n)] for i in range(n)]
    unit_hat = list(h.counit)
    counit_hat = list(h.unit)
    antipode_hat = h.antipode.transpose()
    dual = HopfAlgebra(
        h.field,
        [f"{b}*" for b in h.basis_names],
        Tensor3(h.field, mul_hat),
        unit_hat,
        Tensor3(h.field, comul_hat),
        counit_hat,
        antipode_hat,
        name=f"dual({h.name})",
    )
    report = dual.validate()
    if not report.ok:
        bad = ", ".join(c.name for c in report.failures())
        raise CorruptedDataError(f"{dual.name}: dual fails validation ({bad})")
    return dual


def pairing_value(a, y) -> Scalar:
    """<a, y> for a primal column a and dual column y (identity pairing)."""
    acc = None
    for x, c in zip(a, y):
        if x.is_zero() or c.is_zero():
            continue
        term = x * c
        acc = term if acc is None else acc + term
    if acc is None:
        return a[0].field.zero() if a else y[0].field.zero()
    return acc


def _proportional(reference, candidate):
    """candidate == c * reference for a nonzero scalar c; returns c or None."""
    c = None
    for r, x in zip(reference, candidate):
        if not r.is_zero():
            c = x / r
            break
    if c is None or c.is_zero():
        return None
    for r, x in zip(reference, candidate):
        if x != c * r:
            return None
    return c


@dataclass(frozen=True)
class PairedSystem:
    """An algebra, its dual, the identity pairing, and both modular tuples."""

    primal: HopfAlgebra
    dual: HopfAlgebra
    pairing: Matrix
    primal_modular: ModularData
    dual_modular: ModularData

    # -- the four actions ---------------------------------------------------

    def dual_acts_left(self, y, a):
        """y -> a = sum a_(1) <a_(2), y> (element of the primal)."""
        h = self.primal
        out = h.zero_column()
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for p, q, c in h.comul_terms[i]:
                yq = y[q]
                if not yq.is_zero():
                    out[p] = out[p] + x * c * yq
        return out

    def dual_acts_right(self, a, y):
        """a <- y = sum <a_(1), y> a_(2) (element of the primal)."""
        h = self.primal
        out = h.zero_column()
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for p, q, c in h.comul_terms[i]:
                yp = y[p]
                if not yp.is_zero():
                    out[q] = out[q] + x * c * yp
        return out

    def primal_acts_left(self, a, y):
        """a -> y, the functional z -> y(z * a) (element of the dual)."""
        h = self.primal
        out = [h.field.zero()] * h.dim
        for q, x in enumerate(a):
            if x.is_zero():
                continue
            for p in range(h.dim):
                for j, c in h.mul_terms[p][q]:
                    yj = y[j]
                    if not yj.is_zero():
                        out[p] = out[p] + x * c * yj
        return out

    def primal_acts_right(self, y, a):
        """y <- a, the functional z -> y(a * z) (element of the dual)."""
        h = self.primal
        out = [h.field.zero()] * h.dim
        for p, x in enumerate(a):
            if x.is_zero():
                continue
            for q in range(h.dim):
                for j, c in h.mul_terms[p][q]:
                    yj = y[j]
                    if not yj.is_zero():
                        out[q] = out[q] + x * c * yj
        return out

    def dual_left_action_matrix(self, y) -> Matrix:
        cols = [self.dual_acts_left(y, self.primal.basis_column(i))
                for i in range(self.primal.dim)]
        return Matrix.from_columns(self.primal.field, cols)

    def dual_right_action_matrix(self, y) -> Matrix:
        cols = [self.dual_acts_right(self.primal.basis_column(i), y)
                for i in range(self.primal.dim)]
        return Matrix.from_columns(self.primal.field, cols)

    def primal_left_action_matrix(self, a) -> Matrix:
        cols = [self.primal_acts_left(a, self.dual.basis_column(i))
                for i in range(self.dual.dim)]
        return Matrix.from_columns(self.dual.field, cols)

    def primal_right_action_matrix(self, a) -> Matrix:
        cols = [self.primal_acts_right(self.dual.basis_column(i), a)
                for i in range(self.dual.dim)]
        return Matrix.from_columns(self.dual.field, cols)

    def swapped(self) -> "PairedSystem":
        """The system seen from the dual side: the dual becomes the primal
        and the bidual (canonically the original) becomes its dual."""
        bidual = build_dual(self.dual)
        bidual_modular = dual_integrals(self.dual, bidual, self.dual_modular)
        return PairedSystem(
            primal=self.dual,
            dual=bidual,
            pairing=Matrix.identity(self.dual.field, self.dual.dim),
            primal_modular=self.dual_modular,
            dual_modular=bidual_modular,
        )


def dual_integrals(h: HopfAlgebra, dual: HopfAlgebra, md: ModularData) -> ModularData:
    """Integrals and modular data of the dual, built from the defining
    normalizations and cross-checked against independent solves.

      psi_hat(w) = counit(a)  when w = phi(. a)
      phi_hat(w) = counit(a)  when w = psi(a .)

    Each formula is compared against the generic nullspace integral of the
    dual (up to a scalar), psi_hat must equal phi_hat o S exactly, and the
    modular element of the dual must agree with the pairing formula
    <a, delta_hat> = counit(sigma^-1(a)).  Any mismatch is a convention bug
    and fails hard.
    """
    field = h.field
    counit_row = list(h.counit)

    b_phi = gram_matrix(h, md.phi)  # column a -> row coords of phi(. a)
    psi_hat_coords = invert(b_phi).apply_row(counit_row)
    psi_hat = LinearFunctional(field, psi_hat_coords)

    b_psi_t = gram_matrix(h, md.psi).transpose()  # column a -> coords of psi(a .)
    phi_hat_coords = invert(b_psi_t).apply_row(counit_row)
    phi_hat = LinearFunctional(field, phi_hat_coords)

    if phi_hat.after(dual.antipode) != psi_hat:
        raise CorruptedDataError(
            f"{dual.name}: psi_hat does not equal phi_hat o S; conventions are broken")

    independent_right = right_integral(dual)
    if _proportional(independent_right.coords, psi_hat.coords) is None:
        raise CorruptedDataError(
            f"{dual.name}: formula right integral disagrees with the invariance solve")
    independent_left = left_integral(dual)
    if _proportional(independent_left.coords, phi_hat.coords) is None:
        raise CorruptedDataError(
            f"{dual.name}: formula left integral disagrees with the invariance solve")

    delta_hat, delta_hat_inv = modular_element(dual, phi_hat)
    pairing_route = invert(md.sigma).apply_row(counit_row)
    if list(delta_hat) != pairing_route:
        raise CorruptedDataError(
            f"{dual.name}: modular element of the dual disagrees with the "
            "counit-of-sigma-inverse pairing formula")

    sigma_hat = modular_automorphism(dual, phi_hat, "left")
    sigma_hat_prime = modular_automorphism(dual, psi_hat, "right")
    tau_hat = scaling_constant(dual, phi_hat)
    return ModularData(phi_hat, psi_hat, delta_hat, delta_hat_inv,
                       sigma_hat, sigma_hat_prime, tau_hat)


def pair_system(h: HopfAlgebra) -> PairedSystem:
    """Validate, dualize, and compute modular data on both sides."""
    h.require_valid()
    from .modular import modular_data
    dual = build_dual(h)
    md = modular_data(h)
    dual_md = dual_integrals(h, dual, md)
    return PairedSystem(
        primal=h,
        dual=dual,
        pairing=Matrix.identity(h.field, h.dim),
        primal_modular=md,
        dual_modular=dual_md,
    )
