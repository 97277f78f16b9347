"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_N).

Every scalar is an immutable, normalized value tied to a FieldSpec, so
equality is structural and all downstream checks can demand exact equality
(no tolerances anywhere).  A cyclotomic scalar is a residue modulo the N-th
cyclotomic polynomial, which is irreducible over Q; the quotient is a field
and every nonzero element is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re


class FieldMismatchError(ValueError):
    """Arithmetic between scalars of different field specs."""


class ZeroInversionError(ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class ScalarSyntaxError(ValueError):
    """A scalar literal that does not parse under the field spec."""


# ---------------------------------------------------------------------------
# polynomials over Q, ascending coefficient tuples
# ---------------------------------------------------------------------------

def _poly_trim(cs):
    n = len(cs)
    while n > 0 and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y == 0:
                continue
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(num, den):
    """Exact division of polynomials over Q; den need not be monic."""
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        if c != 0:
            q[k] = c
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return _poly_trim(q), _poly_trim(num)


def _poly_xgcd(a, b):
    """Extended gcd over Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = tuple(a), tuple(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    return r0, s0, t0


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _poly_trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the
    proper divisors of n; results are cached.
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    num = tuple(num)
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic_polynomial(d))
            if r:
                raise AssertionError("cyclotomic division left a remainder")
            num = q
    return num


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


# ---------------------------------------------------------------------------
# field specs and scalars
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q itself or Q(zeta_N) = Q[x]/Phi_N(x)."""

    kind: str
    order: int = 0

    def __post_init__(self):
        if self.kind not in ("rational", "cyclotomic"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "cyclotomic" and self.order < 1:
            raise ValueError("cyclotomic order must be >= 1")

    @property
    def degree(self) -> int:
        if self.kind == "rational":
            return 1
        return euler_phi(self.order)

    @property
    def modulus(self):
        if self.kind == "rational":
            return None
        return cyclotomic_polynomial(self.order)

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, or Scalar of this field into a Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar of {value.field} used in {self}")
            return value
        value = Fraction(value)
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = value
        return Scalar(self, tuple(coeffs))

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def generator(self) -> "Scalar":
        """The residue class of x, i.e. a primitive order-th root of unity."""
        if self.kind == "rational":
            raise ValueError("the rational field has no cyclotomic generator")
        coeffs = [Fraction(0)] * self.degree
        if self.degree == 1:
            # Phi_1 = x - 1 or Phi_2 = x + 1: x reduces to a constant.
            coeffs[0] = Fraction(1) if self.order == 1 else Fraction(-1)
        else:
            coeffs[1] = Fraction(1)
        return Scalar(self, tuple(coeffs))

    def root_of_unity(self, n: int) -> "Scalar":
        """A primitive n-th root of unity, when the field contains one."""
        if n < 1:
            raise ValueError("root order must be positive")
        if n == 1:
            return self.one()
        if n == 2:
            return self.scalar(-1)
        if self.kind != "cyclotomic" or self.order % n != 0:
            raise ValueError(f"{self} contains no primitive {n}-th root of unity")
        return self.generator() ** (self.order // n)

    def parse(self, text: str) -> "Scalar":
        return _parse_scalar(self, text)

    def __str__(self):
        if self.kind == "rational":
            return "Q"
        return f"Q(zeta_{self.order})"


RATIONAL = FieldSpec("rational")


def cyclotomic_field(n: int) -> FieldSpec:
    return FieldSpec("cyclotomic", n)


class Scalar:
    """An exact element of a FieldSpec, normalized and immutable.

    The coefficient tuple has length equal to the field degree and is the
    residue after reduction modulo the cyclotomic polynomial (rationals are
    the degenerate degree-1 case).
    """

    __slots__ = ("field", "coeffs", "_hash", "_zero")

    def __init__(self, field: FieldSpec, coeffs):
        if len(coeffs) != field.degree:
            raise ValueError(
                f"expected {field.degree} coefficients for {field}, got {len(coeffs)}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_zero", None)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        z = self._zero
        if z is None:
            z = all(c == 0 for c in self.coeffs)
            object.__setattr__(self, "_zero", z)
        return z

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        """The value as a Fraction; only for elements that lie in Q
        (constant residues, or anything in the degree-1 fields)."""
        if any(c != 0 for c in self.coeffs[1:]):
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine scalars over {self.field} and {other.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        if d == 1:
            return Scalar(self.field, (self.coeffs[0] * other.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                if y == 0:
                    continue
                prod[i + j] += x * y
        return Scalar(self.field, _reduce_mod(self.field, prod))

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise ZeroInversionError(f"cannot invert zero in {self.field}")
        if self.field.degree == 1:
            return Scalar(self.field, (1 / self.coeffs[0],))
        g, s, _ = _poly_xgcd(_poly_trim(self.coeffs), self.field.modulus)
        if len(g) != 1:
            # cannot happen for a true cyclotomic modulus; guards bad input
            raise ScalarSyntaxError(f"non-invertible residue in {self.field}")
        inv = _poly_mul(s, (1 / g[0],))
        return Scalar(self.field, _reduce_mod(self.field, list(inv)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({self.field}, {format_scalar(self)!r})"


def _reduce_mod(field: FieldSpec, coeffs):
    """Reduce an ascending coefficient list modulo the field's cyclotomic
    polynomial and pad to the field degree."""
    mod = field.modulus
    d = field.degree
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c != 0:
            coeffs[k] = Fraction(0)
            for j in range(len(mod) - 1):
                coeffs[k - len(mod) + 1 + j] -= c * mod[j]
    coeffs = coeffs[:d]
    while len(coeffs) < d:
        coeffs.append(Fraction(0))
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# textual form: "p/q" for rationals, polynomials in z for cyclotomics
# ---------------------------------------------------------------------------

def format_scalar(s: Scalar) -> str:
    """Canonical text form, e.g. "-2/3" or "1/2*z^2 - z + 3"."""
    terms = []
    for power in range(len(s.coeffs) - 1, -1, -1):
        c = s.coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            zpart = "z" if power == 1 else f"z^{power}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(
    r"""(?P<coeff>\d+(?:/\d+)?)?          # optional rational coefficient
        (?P<star>\*)?
        (?P<z>z(?:\^(?P<power>\d+))?)?    # optional power of z
        $""",
    re.VERBOSE,
)


def _parse_scalar(field: FieldSpec, text: str) -> Scalar:
    src = text.strip()
    if not src:
        raise ScalarSyntaxError("empty scalar literal")
    # split into signed terms at top level (no parentheses in this grammar)
    chunks = []
    sign = 1
    buf = ""
    signed = False
    for ch in src:
        if ch in "+-":
            if buf.strip():
                chunks.append((sign, buf.strip()))
                buf = ""
            elif signed or chunks:
                raise ScalarSyntaxError(f"dangling operator in {text!r}")
            sign = 1 if ch == "+" else -1
            signed = True
        else:
            buf += ch
            if ch.strip():
                signed = False
    if not buf.strip():
        raise ScalarSyntaxError(f"dangling operator in {text!r}")
    chunks.append((sign, buf.strip()))

    coeffs = [Fraction(0)] * max(field.degree, 1)
    accum = {}
    for sgn, term in chunks:
        m = _TERM_RE.match(term.replace(" ", ""))
        if not m or (m.group("coeff") is None and m.group("z") is None):
            raise ScalarSyntaxError(f"bad scalar term {term!r} in {text!r}")
        if m.group("star") and (m.group("coeff") is None or m.group("z") is None):
            raise ScalarSyntaxError(f"misplaced '*' in {term!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("z"):
            power = int(m.group("power")) if m.group("power") else 1
            if field.kind != "cyclotomic":
                raise ScalarSyntaxError(f"{text!r} uses z but the field is {field}")
        else:
            power = 0
        accum[power] = accum.get(power, Fraction(0)) + sgn * coeff
    top = max(accum) if accum else 0
    raw = [Fraction(0)] * (top + 1)
    for power, c in accum.items():
        raw[power] = c
    if field.kind == "rational":
        return Scalar(field, (raw[0],))
    return Scalar(field, _reduce_mod(field, raw))
