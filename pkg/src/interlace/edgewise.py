"""Fast recurrences for the ascent-polynomial vectors and the f/h transform.

The vector (E^0, ..., E^{r-1}) of ascent polynomials of open words bucketed by
last letter satisfies a one-step recurrence

    E^i_n = sum_{h < i} x * E^h_{n-1} + sum_{h > i} E^h_{n-1},

which is the action of the r x r matrix with 0 on the diagonal, 1 above and
x below.  Component 0 of the n-step vector is the local h-polynomial of the
r-fold edgewise subdivision of the (n-1)-simplex.  The jump-restricted
generalization replaces that matrix by one whose entries depend on the
restriction profile.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParametersError, InvalidGammaError, MalformedVectorError
from .matrices import Entry, SymMatrix, apply
from .polys import ONE, Poly, X
from .words import GammaVector, oracle_E_gamma


@dataclass(frozen=True)
class EVector:
    """Ascent polynomials of open words of length n+1, indexed by last letter.

    Components have nonnegative coefficients and their values at 1 sum to the
    word count, which is (r-1)^n for the unrestricted family and at most that
    for jump-restricted ones.
    """

    r: int
    n: int
    polys: tuple[Poly, ...]

    def __post_init__(self):
        if self.r < 2 or self.n < 1:
            raise BadParametersError(f"need r >= 2 and n >= 1, got r={self.r}, n={self.n}")
        if len(self.polys) != self.r:
            raise BadParametersError("one component per letter required")
        if any(c < 0 for p in self.polys for c in p.coeffs):
            raise BadParametersError("components must have nonnegative coefficients")
        if sum(p(1) for p in self.polys) > (self.r - 1) ** self.n:
            raise BadParametersError("component mass exceeds the word count")


def e_base(r: int) -> EVector:
    """The n = 1 vector: component 0 is 0 and every other component is x."""
    if not isinstance(r, int) or r < 2:
        raise BadParametersError(f"need r >= 2, got {r}")
    return EVector(r, 1, (Poly(()),) + (X,) * (r - 1))


def e_step(v: EVector) -> EVector:
    """One application of the recurrence, via prefix/suffix sums."""
    r = v.r
    prefix = [Poly(())] * r
    suffix = [Poly(())] * r
    for i in range(1, r):
        prefix[i] = prefix[i - 1] + v.polys[i - 1]
    for i in range(r - 2, -1, -1):
        suffix[i] = suffix[i + 1] + v.polys[i + 1]
    polys = tuple(prefix[i].shift_up() + suffix[i] for i in range(r))
    return EVector(r, v.n + 1, polys)


def e_vector(r: int, n: int) -> EVector:
    """The n-step vector, from the base by repeated recurrence."""
    if not isinstance(n, int) or n < 1:
        raise BadParametersError(f"need n >= 1, got {n}")
    v = e_base(r)
    for _ in range(n - 1):
        v = e_step(v)
    return v


def local_h(r: int, n: int) -> Poly:
    """Component 0 of the n-step vector: the closed-word ascent polynomial."""
    return e_vector(r, n).polys[0]


def gamma_matrix(r: int, gamma: GammaVector) -> SymMatrix:
    """The r x r recurrence matrix of a restriction profile:
    entry (i, j) is 0 when |i - j| <= gamma[i], 1 when j - i > gamma[i], and
    x when i - j > gamma[i]."""
    if not isinstance(gamma, GammaVector) or gamma.r != r:
        raise InvalidGammaError(f"profile of length {r} required")
    g = gamma.gamma
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            if abs(i - j) <= g[i]:
                row.append(Entry.ZERO)
            elif j - i > g[i]:
                row.append(Entry.ONE)
            else:
                row.append(Entry.X)
        rows.append(tuple(row))
    return SymMatrix(tuple(rows))


def e_gamma(r: int, n: int, gamma: GammaVector) -> EVector:
    """Jump-restricted vector: enumerated base at n = 1, then matrix steps.

    No closed form is available for the restricted base case, so it is read
    off the (two-letter) enumeration directly.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParametersError(f"need n >= 1, got {n}")
    base = tuple(oracle_E_gamma(1, r, gamma))
    v = EVector(r, 1, base)
    M = gamma_matrix(r, gamma)
    for _ in range(n - 1):
        v = EVector(r, v.n + 1, tuple(apply(M, v.polys)))
    return v


# -- face-count / h-count transform -------------------------------------------


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_{d-1}) with f_{-1} = 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise MalformedVectorError("face vector must be nonempty")
        if self.entries[0] != 1:
            raise MalformedVectorError("face vector must start with 1")

    @property
    def d(self) -> int:
        return len(self.entries) - 1


@dataclass(frozen=True)
class HVector:
    """The transformed counts (h_0, ..., h_d)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise MalformedVectorError("h-vector must be nonempty")

    @property
    def d(self) -> int:
        return len(self.entries) - 1


def _binomial_transform(entries: tuple[int, ...], shift: Poly) -> tuple[int, ...]:
    """Coefficients of sum_i entries[i] * shift^(d-i), read off descending."""
    d = len(entries) - 1
    acc = Poly(())
    power = ONE
    powers = [power]
    for _ in range(d):
        power = power * shift
        powers.append(power)
    for i, c in enumerate(entries):
        acc = acc + c * powers[d - i]
    coeffs = list(acc.coeffs) + [0] * (d + 1 - len(acc.coeffs))
    return tuple(coeffs[d - k] for k in range(d + 1))


def fh_transform(f: FVector) -> HVector:
    """h_k = coefficient of x^(d-k) in sum_i f_{i-1} (x-1)^(d-i)."""
    return HVector(_binomial_transform(f.entries, Poly((-1, 1))))


def hf_transform(h: HVector) -> FVector:
    """Inverse transform, by substituting x + 1; requires h_0 = 1."""
    return FVector(_binomial_transform(h.entries, Poly((1, 1))))
