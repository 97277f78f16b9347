"""Integrals and the modular apparatus of a validated algebra.

For a finite-dimensional Hopf algebra the space of left-invariant
functionals is exactly one-dimensional; the left integral here is the
basis vector of that nullspace normalized so its first nonzero coordinate
is 1, and the right integral is its composite with the antipode.  The
modular element, the two modular automorphisms, and the scaling constant
are all produced by exact linear solves and re-verified against their
defining relations before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import CorruptedDataError, HopfAlgebra, LinearFunctional
from .linalg import (Matrix, NonUniqueSolutionError, InconsistentSystemError,
                     SingularMatrixError, invert, nullspace, solve)
from .scalars import Scalar


@dataclass(frozen=True)
class ModularData:
    """The tuple attached to a left integral: (phi, psi, delta, sigma,
    sigma', tau), with delta's inverse carried alongside."""

    phi: LinearFunctional
    psi: LinearFunctional
    delta: tuple
    delta_inv: tuple
    sigma: Matrix
    sigma_prime: Matrix
    tau: Scalar


def _invariance_nullspace(h: HopfAlgebra, side: str):
    """Solution space of the left (right) invariance conditions."""
    n = h.dim
    zero = h.field.zero()
    rows = []
    for i in range(n):
        block = [[zero] * n for _ in range(n)]
        for j, k, c in h.comul_terms[i]:
            if side == "left":
                # sum_k comul[i][j][k] f(e_k) = f(e_i) * unit_j
                block[j][k] = block[j][k] + c
            else:
                # sum_j comul[i][j][k] f(e_j) = f(e_i) * unit_k
                block[k][j] = block[k][j] + c
        for j in range(n):
            block[j][i] = block[j][i] - h.unit[j]
        rows.extend(block)
    return nullspace(Matrix(h.field, rows))


def _integral(h: HopfAlgebra, side: str) -> LinearFunctional:
    h.require_valid()
    basis = _invariance_nullspace(h, side)
    if len(basis) == 0:
        raise CorruptedDataError(
            f"{h.name}: no {side} invariant functional; finite-dimensional "
            "Hopf data always has one, so the input is not what it claims")
    if len(basis) > 1:
        raise CorruptedDataError(
            f"{h.name}: {side} integrals form a {len(basis)}-dimensional space")
    return LinearFunctional(h.field, basis[0])


def left_integral(h: HopfAlgebra) -> LinearFunctional:
    """The left integral, normalized to first nonzero coordinate 1."""
    return _integral(h, "left")


def right_integral(h: HopfAlgebra) -> LinearFunctional:
    """The right integral by the mirrored solve (independent of phi o S)."""
    return _integral(h, "right")


def integral_space_dimensions(h: HopfAlgebra):
    """Dimensions of the left and right invariant solution spaces."""
    return len(_invariance_nullspace(h, "left")), len(_invariance_nullspace(h, "right"))


def gram_matrix(h: HopfAlgebra, functional: LinearFunctional) -> Matrix:
    """B[i][j] = functional(e_i * e_j); invertible iff the functional is
    faithful."""
    n = h.dim
    zero = h.field.zero()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k, c in h.mul_terms[i][j]:
                f = functional.coords[k]
                if not f.is_zero():
                    acc = acc + c * f
            row.append(acc)
        rows.append(row)
    return Matrix(h.field, rows)


def modular_element(h: HopfAlgebra, phi: LinearFunctional):
    """The group-like delta with phi(S(a)) = phi(a * delta), plus its inverse.

    delta comes from an n x n solve against the Gram matrix of phi
    (uniqueness is faithfulness of the integral); the inverse is solved from
    delta * x = 1 and cross-checked against S(delta).
    """
    h.require_valid()
    b = gram_matrix(h, phi)
    phi_s = phi.after(h.antipode)
    try:
        delta = solve(b, list(phi_s.coords))
    except NonUniqueSolutionError as exc:
        raise CorruptedDataError(f"{h.name}: integral is not faithful") from exc
    except InconsistentSystemError as exc:
        raise CorruptedDataError(f"{h.name}: modular element system inconsistent") from exc
    # group-likeness is a theorem; failure means the input data lied
    if h.coproduct(delta) != h.tensor_product_columns(delta, delta):
        raise CorruptedDataError(f"{h.name}: modular element is not group-like")
    if not h.counit_of(delta).is_one():
        raise CorruptedDataError(f"{h.name}: counit of the modular element is not 1")
    try:
        delta_inv = solve(h.left_mult_matrix(delta), h.unit_column())
    except (NonUniqueSolutionError, InconsistentSystemError) as exc:
        raise CorruptedDataError(f"{h.name}: modular element is not invertible") from exc
    if h.antipode.apply(delta) != delta_inv:
        raise CorruptedDataError(f"{h.name}: S(delta) disagrees with the solved inverse")
    return tuple(delta), tuple(delta_inv)


def modular_automorphism(h: HopfAlgebra, functional: LinearFunctional,
                         side: str = "left") -> Matrix:
    """The automorphism rho with functional(a*b) = functional(b * rho(a)).

    Computed in closed form from the Gram matrix B as B^-1 B^T, then
    re-verified to be a unital algebra automorphism.
    """
    h.require_valid()
    b = gram_matrix(h, functional)
    try:
        rho = invert(b) * b.transpose()
    except SingularMatrixError as exc:
        raise CorruptedDataError(
            f"{h.name}: {side} functional is not faithful (singular Gram matrix)") from exc
    if rho.apply(h.unit_column()) != h.unit_column():
        raise CorruptedDataError(f"{h.name}: modular automorphism does not fix 1")
    for i in range(h.dim):
        rho_i = rho.column(i)
        for j in range(h.dim):
            lhs = rho.apply(h.multiply(h.basis_column(i), h.basis_column(j)))
            rhs = h.multiply(rho_i, rho.column(j))
            if lhs != rhs:
                raise CorruptedDataError(
                    f"{h.name}: modular automorphism is not multiplicative at ({i},{j})")
    return rho


def scaling_constant(h: HopfAlgebra, phi: LinearFunctional) -> Scalar:
    """The scalar tau with phi(S^2(a)) = tau * phi(a) for every a.

    phi o S^2 is again left invariant, hence a multiple of phi; the
    proportionality is asserted coordinate by coordinate.
    """
    h.require_valid()
    composed = phi.after(h.antipode.pow(2))
    tau = None
    for a, b in zip(phi.coords, composed.coords):
        if not a.is_zero():
            tau = b / a
            break
    if tau is None:
        raise CorruptedDataError(f"{h.name}: integral is zero")
    if composed != phi.scale(tau):
        raise CorruptedDataError(
            f"{h.name}: phi o S^2 is not proportional to phi; integral data corrupt")
    return tau


def modular_data(h: HopfAlgebra) -> ModularData:
    """Compute the full integral apparatus of a validated algebra."""
    h.require_valid()
    phi = left_integral(h)
    psi = phi.after(h.antipode)
    delta, delta_inv = modular_element(h, phi)
    sigma = modular_automorphism(h, phi, "left")
    sigma_prime = modular_automorphism(h, psi, "right")
    tau = scaling_constant(h, phi)
    return ModularData(phi, psi, delta, delta_inv, sigma, sigma_prime, tau)
