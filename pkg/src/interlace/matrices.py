"""Symbolic {0, 1, x} matrices acting on sequences of polynomials.

A matrix acts on a sequence (f_1, ..., f_n) by g_k = sum_i G[k][i] * f_i with
the symbols substituted as 0, 1 and x.  The module decides, in two independent
ways, which 2x2 matrices map interlacing sequences with nonnegative
coefficients to interlacing sequences with nonnegative coefficients:

* a sampled test of the root-alternation inequality
  (lam*x + mu) * G[0][1] + G[1][1]  <<  (lam*x + mu) * G[0][0] + G[1][0]
  over a fixed grid of positive (lam, mu), exact at every sample;
* a closed-form rule engine of five rejection patterns with two explicit
  exceptions.

The two classifiers are cross-validated on all 81 cases, larger matrices are
screened through their 2x2 submatrices, and a seven-element generating set is
closed under multiplication inside the {0, 1, x} entry alphabet.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParametersError,
    DimensionMismatchError,
    NegativeEntryError,
    PolyFormatError,
    PreconditionViolatedError,
)
from .polys import ONE, X, ZERO, Poly
from .realroots import in_fplus, interleaves


class Entry(enum.Enum):
    ZERO = "0"
    ONE = "1"
    X = "x"

    def to_poly(self) -> Poly:
        return _ENTRY_POLY[self]

    @staticmethod
    def from_string(s: str) -> "Entry":
        try:
            return Entry(s)
        except ValueError:
            raise PolyFormatError(f"matrix entries must be '0', '1' or 'x', got {s!r}")


_ENTRY_POLY = {Entry.ZERO: ZERO, Entry.ONE: ONE, Entry.X: X}
_POLY_ENTRY = {ZERO: Entry.ZERO, ONE: Entry.ONE, X: Entry.X}


@dataclass(frozen=True)
class SymMatrix:
    """Rectangular grid of {0, 1, x} symbols."""

    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionMismatchError("matrix must have at least one row and column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise DimensionMismatchError("ragged rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @staticmethod
    def from_strings(grid) -> "SymMatrix":
        return SymMatrix(tuple(tuple(Entry.from_string(s) for s in row) for row in grid))

    def to_strings(self) -> list[list[str]]:
        return [[e.value for e in row] for row in self.entries]

    @staticmethod
    def from_json(text: str) -> "SymMatrix":
        try:
            grid = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PolyFormatError(f"invalid matrix JSON: {exc}") from exc
        if not isinstance(grid, list) or any(not isinstance(row, list) for row in grid):
            raise PolyFormatError("matrix JSON must be an array of arrays")
        return SymMatrix.from_strings(grid)

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    def submatrix(self, k: int, l: int, i: int, j: int) -> "SymMatrix":
        e = self.entries
        return SymMatrix(((e[k][i], e[k][j]), (e[l][i], e[l][j])))

    def __str__(self) -> str:
        return ";".join("".join(e.value for e in row) for row in self.entries)


def apply(G: SymMatrix, fs) -> list[Poly]:
    """g_k = sum_i G[k][i] * f_i with 0/1/x substituted for the symbols."""
    fs = list(fs)
    if G.cols != len(fs):
        raise DimensionMismatchError(f"{G.cols} columns cannot act on {len(fs)} polynomials")
    out = []
    for row in G.entries:
        g = ZERO
        for entry, f in zip(row, fs):
            if entry is Entry.ONE:
                g = g + f
            elif entry is Entry.X:
                g = g + f.shift_up()
        out.append(g)
    return out


# (lam, mu) sample pairs: a 5x5 grid of moderate ratios plus two extreme pairs
# standing in for the lam -> inf and lam, mu -> 0 regimes.
_BASE_WEIGHTS = (Fraction(1, 8), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(8))
DEFAULT_LAMBDA_MU_PAIRS = tuple(itertools.product(_BASE_WEIGHTS, repeat=2)) + (
    (Fraction(64), Fraction(1, 64)),
    (Fraction(1, 64), Fraction(1, 64)),
)


def _require_2x2(M: SymMatrix) -> None:
    if M.rows != 2 or M.cols != 2:
        raise DimensionMismatchError("a 2x2 matrix is required")


def _inequality_sides(M: SymMatrix, lam: Fraction, mu: Fraction) -> tuple[Poly, Poly]:
    """Denominator-cleared sides of the alternation inequality at one (lam, mu)."""
    scale = lam.denominator * mu.denominator // math.gcd(lam.denominator, mu.denominator)
    lin = Poly((int(mu * scale), int(lam * scale)))
    e = M.entries
    left = lin * e[0][1].to_poly() + scale * e[1][1].to_poly()
    right = lin * e[0][0].to_poly() + scale * e[1][0].to_poly()
    return left, right


def find_failing_sample(
    M: SymMatrix, pairs=DEFAULT_LAMBDA_MU_PAIRS
) -> tuple[Fraction, Fraction] | None:
    """First (lam, mu) in grid order at which the alternation inequality fails."""
    _require_2x2(M)
    if not pairs:
        raise BadParametersError("sample pairs must be nonempty")
    for lam, mu in pairs:
        left, right = _inequality_sides(M, Fraction(lam), Fraction(mu))
        if not interleaves(left, right):
            return (Fraction(lam), Fraction(mu))
    return None


def check_2x2_sampled(M: SymMatrix, pairs=DEFAULT_LAMBDA_MU_PAIRS) -> bool:
    """True iff the alternation inequality holds at every sampled (lam, mu)."""
    return find_failing_sample(M, pairs) is None


@dataclass(frozen=True)
class PatternVerdict:
    allowed: bool
    rule: str | None = None

    def __post_init__(self):
        if self.allowed != (self.rule is None):
            raise ValueError("rejected matrices carry the rejecting rule")


_EXCEPTIONS = (
    ((Entry.ONE, Entry.ONE), (Entry.X, Entry.X)),
    ((Entry.X, Entry.ONE), (Entry.X, Entry.ONE)),
)


def forbidden_pattern(M: SymMatrix) -> PatternVerdict:
    """Apply the five rejection rules in order; the first match names the rule.

    I)   a column equal to (x over 1);
    II)  a row equal to (1 x);
    III) diagonal (1, x) or (x, 1), or anti-diagonal top-right x over
         bottom-left 1 -- except [[1,1],[x,x]] and [[x,1],[x,1]];
    IV)  a zero-one matrix with negative determinant;
    V)   x times a zero-one matrix with negative determinant.
    """
    _require_2x2(M)
    e = M.entries
    for c in (0, 1):
        if e[0][c] is Entry.X and e[1][c] is Entry.ONE:
            return PatternVerdict(False, "I")
    for r in (0, 1):
        if e[r][0] is Entry.ONE and e[r][1] is Entry.X:
            return PatternVerdict(False, "II")
    diag_1x = e[0][0] is Entry.ONE and e[1][1] is Entry.X
    diag_x1 = e[0][0] is Entry.X and e[1][1] is Entry.ONE
    anti = e[0][1] is Entry.X and e[1][0] is Entry.ONE
    if (diag_1x or diag_x1 or anti) and e not in _EXCEPTIONS:
        return PatternVerdict(False, "III")
    flat = [entry for row in e for entry in row]
    if all(entry in (Entry.ZERO, Entry.ONE) for entry in flat):
        a, b, c, d = (1 if entry is Entry.ONE else 0 for entry in flat)
        if a * d - b * c < 0:
            return PatternVerdict(False, "IV")
    if all(entry in (Entry.ZERO, Entry.X) for entry in flat):
        a, b, c, d = (1 if entry is Entry.X else 0 for entry in flat)
        if a * d - b * c < 0:
            return PatternVerdict(False, "V")
    return PatternVerdict(True)


def all_2x2_matrices() -> list[SymMatrix]:
    """The 81 matrices over {0, 1, x}, in a fixed deterministic order."""
    out = []
    for a, b, c, d in itertools.product(Entry, repeat=4):
        out.append(SymMatrix(((a, b), (c, d))))
    return out


@dataclass(frozen=True)
class Classification:
    """Partition of the 81 matrices plus any classifier disagreements."""

    allowed: tuple[SymMatrix, ...]
    forbidden: tuple[SymMatrix, ...]
    disagreements: tuple[tuple[SymMatrix, bool, bool], ...]


def classify_all_2x2(pairs=DEFAULT_LAMBDA_MU_PAIRS) -> Classification:
    """Classify all 81 matrices by both the rule engine and the sampled test.

    The partition follows the rule engine; every case where the sampled test
    disagrees is recorded as (matrix, rule_allowed, sampled_allowed).
    """
    allowed, forbidden, disagreements = [], [], []
    for M in all_2x2_matrices():
        by_rules = forbidden_pattern(M).allowed
        by_samples = check_2x2_sampled(M, pairs)
        (allowed if by_rules else forbidden).append(M)
        if by_rules != by_samples:
            disagreements.append((M, by_rules, by_samples))
    return Classification(tuple(allowed), tuple(forbidden), tuple(disagreements))


SEVEN_GENERATORS = tuple(
    SymMatrix.from_strings(g)
    for g in (
        [["1", "0"], ["0", "1"]],
        [["1", "0"], ["x", "1"]],
        [["1", "1"], ["0", "1"]],
        [["1", "1"], ["x", "1"]],
        [["1", "0"], ["1", "1"]],
        [["0", "0"], ["1", "0"]],
        [["0", "1"], ["x", "0"]],
    )
)


def _symbolic_product(A: SymMatrix, B: SymMatrix) -> SymMatrix | None:
    """Matrix product with polynomial entries, kept only if every entry is 0, 1 or x."""
    rows = []
    for i in range(2):
        row = []
        for j in range(2):
            p = ZERO
            for k in range(2):
                p = p + A.entries[i][k].to_poly() * B.entries[k][j].to_poly()
            entry = _POLY_ENTRY.get(p)
            if entry is None:
                return None
            row.append(entry)
        rows.append(tuple(row))
    return SymMatrix(tuple(rows))


def generator_closure() -> frozenset[SymMatrix]:
    """Close the seven generators under products whose entries stay in {0, 1, x}.

    Products with entries outside the alphabet are discarded and never used as
    multiplicands; the generators themselves are members.
    """
    members = set(SEVEN_GENERATORS)
    grew = True
    while grew:
        grew = False
        for a, b in itertools.product(tuple(members), repeat=2):
            p = _symbolic_product(a, b)
            if p is not None and p not in members:
                members.add(p)
                grew = True
    return frozenset(members)


def preserves_check(G: SymMatrix) -> bool:
    """True iff every 2x2 submatrix is classified allowed by the rule engine."""
    for k in range(G.rows):
        for l in range(k + 1, G.rows):
            for i in range(G.cols):
                for j in range(i + 1, G.cols):
                    if not forbidden_pattern(G.submatrix(k, l, i, j)).allowed:
                        return False
    return True


def ferrers_check(G: SymMatrix) -> bool:
    """One-entries up-right closed and x-entries down-left closed."""
    e = G.entries
    for i in range(G.rows):
        for j in range(G.cols):
            if e[i][j] is Entry.ONE:
                if any(
                    e[k][l] is not Entry.ONE
                    for k in range(i + 1)
                    for l in range(j, G.cols)
                ):
                    return False
            elif e[i][j] is Entry.X:
                if any(
                    e[k][l] is not Entry.X
                    for k in range(i, G.rows)
                    for l in range(j + 1)
                ):
                    return False
    return True


def minors_nonneg(G) -> bool:
    """All 2x2 minors of a nonnegative numeric matrix are nonnegative."""
    rows = [list(map(Fraction, row)) for row in G]
    if any(v < 0 for row in rows for v in row):
        raise NegativeEntryError("matrix entries must be nonnegative")
    m, n = len(rows), len(rows[0]) if rows else 0
    if any(len(row) != n for row in rows):
        raise DimensionMismatchError("ragged rows")
    for k in range(m):
        for l in range(k + 1, m):
            for i in range(n):
                for j in range(i + 1, n):
                    if rows[k][i] * rows[l][j] - rows[k][j] * rows[l][i] < 0:
                        return False
    return True


@dataclass(frozen=True)
class ActionFailure:
    kind: str  # "negative_coefficient" | "not_interleaving"
    indices: tuple[int, ...]


@dataclass(frozen=True)
class ActionReport:
    passed: bool
    outputs: tuple[Poly, ...]
    failure: ActionFailure | None = None


def action_property_test(G: SymMatrix, fs) -> ActionReport:
    """Apply G to an admissible sequence and verify the output is admissible.

    The input must be an interlacing sequence with nonnegative coefficients;
    on failure the report pinpoints the offending output index or pair.
    """
    fs = list(fs)
    if not in_fplus(fs):
        raise PreconditionViolatedError("input sequence is not admissible")
    out = apply(G, fs)
    for k, p in enumerate(out):
        if any(c < 0 for c in p.coeffs):
            return ActionReport(False, tuple(out), ActionFailure("negative_coefficient", (k,)))
    for k in range(len(out)):
        for l in range(k + 1, len(out)):
            if not interleaves(out[k], out[l]):
                return ActionReport(False, tuple(out), ActionFailure("not_interleaving", (k, l)))
    return ActionReport(True, tuple(out))
