"""Dense univariate polynomials with exact integer coefficients.

Coefficients are stored in ascending degree order: ``coeffs[k]`` multiplies
``x**k``.  The canonical form is either the empty tuple (the zero polynomial)
or a tuple whose last entry is nonzero.  Rational numbers only ever appear as
evaluation points and interval endpoints; they are ``fractions.Fraction``
throughout.

The text format used by the CLI and all file I/O is comma-separated ascending
coefficients: ``"0,1,1"`` is x + x**2 and ``"0"`` is the zero polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BothZeroError, PolyFormatError

Rational = Fraction

# degree of the zero polynomial
NEG_INFINITY_DEGREE = -math.inf


def _canonical(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Poly:
    """Immutable polynomial over the integers."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = _canonical(self.coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        object.__setattr__(self, "coeffs", cs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_string(text: str) -> "Poly":
        """Parse the comma-separated ascending coefficient format."""
        parts = [p.strip() for p in text.strip().split(",")]
        if not parts or any(p == "" for p in parts):
            raise PolyFormatError(f"cannot parse polynomial from {text!r}")
        try:
            return Poly(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise PolyFormatError(f"cannot parse polynomial from {text!r}") from exc

    @staticmethod
    def monomial(k: int, c: int = 1) -> "Poly":
        return Poly((0,) * k + (c,))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree, with NEG_INFINITY_DEGREE for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY_DEGREE

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_positive(self) -> "Poly":
        """Divide out the content and normalize the leading coefficient to be positive."""
        if self.is_zero:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return Poly(tuple(a // c for a in self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(tuple(other * c for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(tuple(out))

    __rmul__ = __mul__

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    def __call__(self, t):
        """Evaluate by Horner's rule; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- rendering ---------------------------------------------------------

    def to_string(self) -> str:
        if self.is_zero:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.to_string()


ZERO = Poly(())
ONE = Poly((1,))
X = Poly((0, 1))


# -- module-level operations ---------------------------------------------------


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_derivative(a: Poly) -> Poly:
    return Poly(tuple(k * c for k, c in enumerate(a.coeffs) if k >= 1))


def eval_rational(a: Poly, t) -> Fraction:
    return Fraction(a(t))


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    """Remainder of a by b after scaling a by powers of b's leading coefficient.

    Only used inside the gcd loop, where sign and content are irrelevant.
    Requires b nonzero.
    """
    r = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lb = bc[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(bc):
            r[shift + i] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return Poly(tuple(r))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient, by a primitive
    pseudo-remainder sequence (no rational intermediates)."""
    if a.is_zero and b.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.primitive_positive()
    if b.is_zero:
        return a.primitive_positive()
    f, g = a.primitive_positive(), b.primitive_positive()
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero:
        r = _pseudo_rem(f, g)
        f, g = g, r.primitive_positive()
    return f


def frac_divmod(a: Poly, b: Poly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of a by b over the rationals, as coefficient lists."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a.coeffs]
    bc = [Fraction(c) for c in b.coeffs]
    db = len(bc) - 1
    q = [Fraction(0)] * max(len(r) - db, 1)
    while len(r) - 1 >= db and r:
        factor = r[-1] / bc[-1]
        shift = len(r) - 1 - db
        q[shift] = factor
        for i, c in enumerate(bc):
            r[shift + i] -= factor * c
        while r and r[-1] == 0:
            r.pop()
    return q, r


def exact_div(a: Poly, b: Poly) -> Poly:
    """Exact division in Z[x]; raises ValueError if b does not divide a there."""
    q, r = frac_divmod(a, b)
    if r:
        raise ValueError("division is not exact")
    if any(c.denominator != 1 for c in q):
        raise ValueError("quotient is not integral")
    return Poly(tuple(int(c) for c in q))


def divides(d: Poly, a: Poly) -> bool:
    """True if d divides a over the rationals (zero remainder)."""
    if d.is_zero:
        return a.is_zero
    _, r = frac_divmod(a, d)
    return not r


def scale_to_int(frac_coeffs) -> Poly:
    """Clear denominators and divide by the integer content, preserving sign.

    The scaling factor is a positive rational, so signs of all coefficients
    (and the sign of every evaluation) are preserved.
    """
    cs = [Fraction(c) for c in frac_coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return ZERO
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    g = math.gcd(*ints)
    return Poly(tuple(v // g for v in ints))


def parse_poly_list(text: str, sep: str = ";") -> list[Poly]:
    """Parse a separator-joined list of polynomials in the text format."""
    items = [p for p in (chunk.strip() for chunk in text.split(sep)) if p != ""]
    if not items:
        raise PolyFormatError(f"no polynomials in {text!r}")
    return [Poly.from_string(p) for p in items]
