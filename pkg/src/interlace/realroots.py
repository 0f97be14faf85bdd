"""Exact real-root certification and the interleaving order on root sets.

Everything here is driven by Sturm chains over exact rational arithmetic:
counting distinct real roots, isolating them in disjoint rational intervals
(with multiplicities recovered from a repeated-gcd chain), deciding
real-rootedness, and deciding whether the roots of one polynomial weakly
alternate with the roots of another.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParametersError,
    CertificateMismatchError,
    EmptyIntervalError,
    NegativeLeadingCoefficientError,
    ZeroPolynomialError,
)
from .polys import Poly, exact_div, poly_derivative, poly_gcd, scale_to_int

# Refinement loops halve interval widths; at desk scale a root pair that is
# still unseparated after this many halvings indicates a logic error.
_MAX_HALVINGS = 512


@dataclass(frozen=True)
class RootInterval:
    """One isolating interval: a degenerate interval (lo == hi) is an exact root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def to_json_obj(self) -> dict:
        def fmt(q: Fraction) -> str:
            return f"{q.numerator}/{q.denominator}"

        return {"lo": fmt(self.lo), "hi": fmt(self.hi), "mult": self.multiplicity}


@dataclass(frozen=True)
class RootCertificate:
    """Disjoint isolating intervals, sorted ascending, one per distinct real root."""

    intervals: tuple[RootInterval, ...] = ()

    def __post_init__(self):
        ivs = self.intervals
        for prev, nxt in zip(ivs, ivs[1:]):
            if prev.hi > nxt.lo:
                raise ValueError("intervals overlap")
            if prev.hi == nxt.lo and prev.is_point and nxt.is_point:
                raise ValueError("duplicate exact root")

    def __len__(self) -> int:
        return len(self.intervals)

    def total_multiplicity(self) -> int:
        return sum(iv.multiplicity for iv in self.intervals)

    def to_json_obj(self) -> list[dict]:
        return [iv.to_json_obj() for iv in self.intervals]


def squarefree_part(f: Poly) -> Poly:
    """f / gcd(f, f'): same distinct roots, all simple; primitive, positive lead."""
    if f.is_zero:
        raise ZeroPolynomialError("squarefree part of 0 is undefined")
    if f.degree == 0:
        return Poly((1,))
    d = poly_gcd(f, poly_derivative(f))
    return exact_div(f, d).primitive_positive()


@dataclass(frozen=True)
class SturmChain:
    """Signed-remainder sequence of a squarefree polynomial.

    Each remainder is rescaled by a positive rational to keep integer
    coefficients, which leaves every sign evaluation unchanged.
    """

    chain: tuple[Poly, ...]

    @staticmethod
    def of_squarefree(p: Poly) -> "SturmChain":
        if p.is_zero:
            raise ZeroPolynomialError("Sturm chain of 0 is undefined")
        if p.degree == 0:
            return SturmChain((p,))
        chain = [p, poly_derivative(p)]
        while True:
            rem = _signed_rational_rem(chain[-2], chain[-1])
            if rem.is_zero:
                break
            chain.append(-rem)
        return SturmChain(tuple(chain))

    def variations_at(self, t: Fraction) -> int:
        return _sign_variations([p(t) for p in self.chain])

    def variations_at_neg_inf(self) -> int:
        return _sign_variations(
            [p.leading_coefficient * (-1) ** (len(p.coeffs) - 1) for p in self.chain]
        )

    def variations_at_pos_inf(self) -> int:
        return _sign_variations([p.leading_coefficient for p in self.chain])

    def count_in(self, lo, hi) -> int:
        """Distinct roots in (lo, hi]; None endpoints mean -inf / +inf."""
        va = self.variations_at(lo) if lo is not None else self.variations_at_neg_inf()
        vb = self.variations_at(hi) if hi is not None else self.variations_at_pos_inf()
        return va - vb


def _signed_rational_rem(a: Poly, b: Poly) -> Poly:
    """Euclidean remainder of a by b over Q, rescaled positively to Z[x]."""
    r = [Fraction(c) for c in a.coeffs]
    bc = [Fraction(c) for c in b.coeffs]
    db = len(bc) - 1
    while len(r) - 1 >= db and r:
        factor = r[-1] / bc[-1]
        shift = len(r) - 1 - db
        for i, c in enumerate(bc):
            r[shift + i] -= factor * c
        while r and r[-1] == 0:
            r.pop()
    return scale_to_int(r)


def _sign_variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(f: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of f in (lo, hi] by Sturm's theorem.

    ``lo=None`` / ``hi=None`` stand for -inf / +inf.
    """
    if f.is_zero:
        raise ZeroPolynomialError("root counting requires a nonzero polynomial")
    if lo is not None and hi is not None and Fraction(lo) > Fraction(hi):
        raise EmptyIntervalError(f"empty interval ({lo}, {hi}]")
    p = squarefree_part(f)
    if p.degree == 0:
        return 0
    chain = SturmChain.of_squarefree(p)
    return chain.count_in(
        None if lo is None else Fraction(lo),
        None if hi is None else Fraction(hi),
    )


def is_real_rooted(f: Poly) -> bool:
    """True iff all complex zeros of f are real; constants and 0 count as real-rooted."""
    if f.is_zero or f.degree == 0:
        return True
    p = squarefree_part(f)
    return count_real_roots(p) == p.degree


# -- root isolation -----------------------------------------------------------


def _root_bound(p: Poly) -> int:
    """Integer B with every real root of p strictly inside (-B, B) (Cauchy bound)."""
    an = abs(p.leading_coefficient)
    rest = [abs(c) for c in p.coeffs[:-1]]
    m = max(rest) if rest else 0
    return 1 + (-(-m // an))


def _bounded_divisors(n: int, limit: int = 4096) -> list[int] | None:
    """Positive divisors of |n|, or None when there would be too many to try.

    Trial division is capped; a leftover cofactor is treated as prime.  The
    list may then miss some divisors, which only makes rational-root snapping
    incomplete (isolating intervals stay correct).
    """
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n and d < 1_000_000:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divisors = [1]
    for prime, mult in factors.items():
        divisors = [d * prime**k for d in divisors for k in range(mult + 1)]
        if len(divisors) > limit:
            return None
    return sorted(divisors)


def _rational_root_candidates(q: Poly) -> list[Fraction]:
    """Candidate rational roots num/den with num | q(0) and den | lead(q)."""
    if q.is_zero or q.degree < 1 or q.coeffs[0] == 0:
        return []
    nums = _bounded_divisors(q.coeffs[0])
    dens = _bounded_divisors(q.leading_coefficient)
    if nums is None or dens is None:
        return []
    seen = set()
    out = []
    for den in dens:
        for num in nums:
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in seen:
                    seen.add(cand)
                    out.append(cand)
    return out


def _linear_from_root(a: Fraction) -> Poly:
    return Poly((-a.numerator, a.denominator))


def _isolate_squarefree(q: Poly) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Exact rational roots and open isolating intervals for the rest of q's roots.

    Interval endpoints are never roots of q.
    """
    points: list[Fraction] = []
    if q.coeffs and q.coeffs[0] == 0:
        points.append(Fraction(0))
        q = Poly(q.coeffs[1:])
    for cand in _rational_root_candidates(q):
        if q.degree < 1:
            break
        if q(cand) == 0:
            points.append(cand)
            q = exact_div(q, _linear_from_root(cand))
    intervals: list[tuple[Fraction, Fraction]] = []
    while q.degree >= 1:
        chain = SturmChain.of_squarefree(q)
        bound = Fraction(_root_bound(q))
        stack = [(-bound, bound)]
        restart = False
        found: list[tuple[Fraction, Fraction]] = []
        while stack:
            lo, hi = stack.pop()
            k = chain.count_in(lo, hi)
            if k == 0:
                continue
            if k == 1:
                found.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            if q(mid) == 0:
                # exact root not caught by the candidate scan; deflate and redo
                points.append(mid)
                q = exact_div(q, _linear_from_root(mid))
                restart = True
                break
            stack.append((lo, mid))
            stack.append((mid, hi))
        if not restart:
            intervals = found
            break
    # shrink intervals until no extracted exact root touches them
    cleaned = []
    for lo, hi in intervals:
        for _ in range(_MAX_HALVINGS):
            if not any(lo <= a <= hi for a in points):
                break
            mid = (lo + hi) / 2
            v = q(mid)
            if v == 0:
                points.append(mid)
                lo = hi = mid
                break
            if (q(lo) > 0) != (v > 0):
                hi = mid
            else:
                lo = mid
        else:
            raise AssertionError("failed to separate interval from exact roots")
        if lo == hi:
            continue
        cleaned.append((lo, hi))
    return points, cleaned


def _multiplicity_levels(f: Poly) -> list[Poly]:
    """Squarefree parts of the repeated-gcd chain; levels[k] holds the distinct
    roots of f of multiplicity at least k + 2."""
    levels = []
    g = f
    while True:
        g = poly_gcd(g, poly_derivative(g))
        if g.is_zero or g.degree < 1:
            break
        levels.append(squarefree_part(g))
    return levels


def _level_has_root(level: Poly, chain: SturmChain, lo: Fraction, hi: Fraction) -> bool:
    if lo == hi:
        return level(lo) == 0
    return chain.count_in(lo, hi) == 1


def _isolation_data(f: Poly) -> tuple[Poly, list[RootInterval]]:
    """Squarefree part of f plus sorted isolating intervals with multiplicities."""
    p = squarefree_part(f)
    if p.degree < 1:
        return p, []
    points, intervals = _isolate_squarefree(p)
    records: list[tuple[Fraction, Fraction]] = [(a, a) for a in points] + intervals
    records.sort(key=lambda iv: iv[0])
    levels = _multiplicity_levels(f)
    level_chains = [SturmChain.of_squarefree(s) for s in levels]
    out = []
    for lo, hi in records:
        mult = 1
        for level, chain in zip(levels, level_chains):
            if _level_has_root(level, chain, lo, hi):
                mult += 1
            else:
                break
        out.append(RootInterval(lo, hi, mult))
    return p, out


def isolate_roots(f: Poly) -> RootCertificate:
    """Disjoint rational isolating intervals for every distinct real root of f,
    with multiplicities recovered from the repeated-gcd chain."""
    if f.is_zero:
        raise ZeroPolynomialError("cannot isolate roots of 0")
    _, records = _isolation_data(f)
    return RootCertificate(tuple(records))


def _bisect_once(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """One sign-change bisection step on an interval holding one simple root of p."""
    mid = (lo + hi) / 2
    v = p(mid)
    if v == 0:
        return mid, mid
    if (p(lo) > 0) != (v > 0):
        return lo, mid
    return mid, hi


def refine_certificate(f: Poly, cert: RootCertificate, width) -> RootCertificate:
    """Shrink every non-degenerate interval of cert below the given width."""
    width = Fraction(width)
    if width <= 0:
        raise BadParametersError("width must be positive")
    if f.is_zero:
        raise CertificateMismatchError("the zero polynomial has no certificate")
    p = squarefree_part(f)
    _validate_certificate(f, p, cert)
    out = []
    for iv in cert.intervals:
        lo, hi = iv.lo, iv.hi
        for _ in range(_MAX_HALVINGS):
            if hi - lo < width:
                break
            lo, hi = _bisect_once(p, lo, hi)
        out.append(RootInterval(lo, hi, iv.multiplicity))
    return RootCertificate(tuple(out))


def _validate_certificate(f: Poly, p: Poly, cert: RootCertificate) -> None:
    chain = SturmChain.of_squarefree(p) if p.degree >= 1 else None
    distinct = chain.count_in(None, None) if chain else 0
    if len(cert.intervals) != distinct:
        raise CertificateMismatchError(
            f"certificate lists {len(cert.intervals)} roots, polynomial has {distinct}"
        )
    levels = _multiplicity_levels(f)
    level_chains = [SturmChain.of_squarefree(s) for s in levels]
    for iv in cert.intervals:
        if iv.is_point:
            if f(iv.lo) != 0:
                raise CertificateMismatchError(f"{iv.lo} is not a root")
        else:
            if p(iv.lo) == 0 or p(iv.hi) == 0:
                raise CertificateMismatchError("interval endpoint is a root")
            if chain.count_in(iv.lo, iv.hi) != 1:
                raise CertificateMismatchError(
                    f"interval ({iv.lo}, {iv.hi}) does not isolate one root"
                )
        mult = 1
        for level, lchain in zip(levels, level_chains):
            if _level_has_root(level, lchain, iv.lo, iv.hi):
                mult += 1
            else:
                break
        if mult != iv.multiplicity:
            raise CertificateMismatchError(
                f"multiplicity mismatch on ({iv.lo}, {iv.hi}): {iv.multiplicity} != {mult}"
            )


# -- interleaving --------------------------------------------------------------


class _Root:
    """Mutable handle on one distinct real root during an interleaving check.

    ``lo == hi`` means the root is known exactly.  ``key`` marks roots shared
    between the two polynomials (equal keys compare equal).
    """

    __slots__ = ("sf", "lo", "hi", "key")

    def __init__(self, sf: Poly, lo: Fraction, hi: Fraction):
        self.sf = sf
        self.lo = lo
        self.hi = hi
        self.key: int | None = None

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def halve(self) -> None:
        if not self.is_point:
            self.lo, self.hi = _bisect_once(self.sf, self.lo, self.hi)

    def make_point(self, value: Fraction) -> None:
        self.lo = self.hi = value


def _surely_below(a: _Root, b: _Root) -> bool:
    if a.hi < b.lo:
        return True
    if a.hi == b.lo:
        # touching is enough unless both are the same exact point
        return not (a.is_point and b.is_point)
    return False


def _compare(a: _Root, b: _Root) -> int:
    """-1, 0, +1 comparison of the real values of two isolated roots."""
    if a.key is not None and a.key == b.key:
        return 0
    if a.is_point and b.is_point:
        return -1 if a.lo < b.lo else (0 if a.lo == b.lo else 1)
    for _ in range(_MAX_HALVINGS):
        if _surely_below(a, b):
            return -1
        if _surely_below(b, a):
            return 1
        a.halve()
        b.halve()
    raise AssertionError("failed to separate two roots; missing shared-root match?")


def _try_match(droot: _Root, cand: _Root, d_sf: Poly, d_chain: SturmChain) -> bool:
    """Decide exactly whether cand isolates the same real number as droot.

    droot isolates one root of the gcd, which is also a root of cand's
    polynomial, so it equals cand's root iff it lies inside cand's interval;
    that membership is a Sturm count of d_sf over the interval intersection
    (interval endpoints are never roots of either polynomial).
    """
    if cand.is_point:
        if d_sf(cand.lo) != 0:
            return False
        if droot.is_point:
            return droot.lo == cand.lo
        if droot.lo < cand.lo < droot.hi:
            droot.make_point(cand.lo)
            return True
        return False
    if droot.is_point:
        if cand.lo < droot.lo < cand.hi:
            cand.make_point(droot.lo)
            return True
        return False
    lo, hi = max(droot.lo, cand.lo), min(droot.hi, cand.hi)
    if lo >= hi:
        return False
    return d_chain.count_in(lo, hi) == 1


def _distinct(roots: list[_Root]) -> list[_Root]:
    out: list[_Root] = []
    for r in roots:
        if not any(r is seen for seen in out):
            out.append(r)
    return out


def _match_shared(roots_f: list[_Root], roots_g: list[_Root], f: Poly, g: Poly) -> None:
    """Mark the common roots of f and g (the roots of their gcd) with equal keys."""
    d = poly_gcd(f, g)
    if d.degree < 1:
        return
    d_sf, ivs = _isolation_data(d)
    d_chain = SturmChain.of_squarefree(d_sf)
    for key, iv in enumerate(ivs):
        droot = _Root(d_sf, iv.lo, iv.hi)
        for side in (roots_f, roots_g):
            matched = [r for r in _distinct(side) if _try_match(droot, r, d_sf, d_chain)]
            if len(matched) != 1:
                raise AssertionError("gcd root failed to match exactly one root")
            matched[0].key = key


def _located_roots(f: Poly) -> list[_Root]:
    sf, ivs = _isolation_data(f)
    out = []
    for iv in ivs:
        root = _Root(sf, iv.lo, iv.hi)
        out.extend([root] * iv.multiplicity)
    return out


@functools.lru_cache(maxsize=8192)
def interleaves(f: Poly, g: Poly) -> bool:
    """The weak root-alternation order: largest root belongs to g, the lists
    alternate downward with multiplicity, and degrees differ by at most one.

    By convention every real-rooted polynomial (and 0 itself) interleaves 0 in
    both directions.  Nonzero inputs must have positive leading coefficients.
    """
    for p in (f, g):
        if not p.is_zero and p.leading_coefficient < 0:
            raise NegativeLeadingCoefficientError(f"{p} has a negative leading coefficient")
    if f.is_zero or g.is_zero:
        other = g if f.is_zero else f
        return other.is_zero or is_real_rooted(other)
    if not is_real_rooted(f) or not is_real_rooted(g):
        return False
    n, m = f.degree, g.degree
    if n not in (m - 1, m):
        return False
    alpha = _located_roots(f)[::-1]  # descending
    beta = _located_roots(g)[::-1]
    _match_shared(alpha, beta, f, g)
    for i in range(len(alpha)):
        if i < len(beta) and _compare(alpha[i], beta[i]) > 0:
            return False
        if i + 1 < len(beta) and _compare(alpha[i], beta[i + 1]) < 0:
            return False
    return True


def is_interlacing_seq(fs) -> bool:
    """True iff fs[i] interleaves fs[j] for every i < j (vacuously true for len <= 1)."""
    fs = list(fs)
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if not interleaves(fs[i], fs[j]):
                return False
    return True


def in_fplus(fs) -> bool:
    """Interlacing sequence with all coefficients nonnegative."""
    fs = list(fs)
    if any(c < 0 for p in fs for c in p.coeffs):
        return False
    return is_interlacing_seq(fs)
