"""Brute-force enumeration of restricted words and their ascent polynomials.

These enumerators are the independent oracles for the fast recurrences: they
walk every admissible word, so they are deliberately free of any recursive
shortcut on the generating polynomials themselves.

Word families over the alphabet {0, ..., r-1}, always starting with 0:

* open words: consecutive letters distinct, last letter free;
* closed words: additionally end with 0;
* jump-restricted variants: arriving at letter i requires a jump of absolute
  size strictly greater than gamma[i] (gamma = all zeros reduces to the
  families above).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BadParametersError, BudgetExceededError, InvalidGammaError
from .polys import Poly

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Word:
    """A letter sequence together with its alphabet size."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        if len(self.letters) < 1:
            raise BadParametersError("a word has at least one letter")
        if any(not 0 <= c < self.alphabet_size for c in self.letters):
            raise BadParametersError("letter out of alphabet range")

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.letters)


def ascents(w: Word) -> int:
    """Number of positions i with w_i < w_{i+1}."""
    ls = w.letters
    return sum(1 for a, b in zip(ls, ls[1:]) if a < b)


@dataclass(frozen=True)
class GammaVector:
    """Jump-restriction profile: gamma[i] bounds the jump needed to land on i.

    Valid profiles have 0 <= gamma[i] <= r - 2 and consecutive entries
    differing by at most 1, with r = len(gamma).
    """

    gamma: tuple[int, ...]

    def __post_init__(self):
        g = self.gamma
        r = len(g)
        if r < 2:
            raise InvalidGammaError("profile needs at least two entries")
        if any(not isinstance(v, int) or not 0 <= v <= r - 2 for v in g):
            raise InvalidGammaError(f"entries must lie in [0, {r - 2}]: {g}")
        if any(abs(a - b) > 1 for a, b in zip(g, g[1:])):
            raise InvalidGammaError(f"consecutive entries may differ by at most 1: {g}")

    @property
    def r(self) -> int:
        return len(self.gamma)

    @staticmethod
    def zeros(r: int) -> "GammaVector":
        return GammaVector((0,) * r)


def _validate_nr(n: int, r: int) -> None:
    if not (isinstance(n, int) and isinstance(r, int) and n >= 1 and r >= 2):
        raise BadParametersError(f"need integers n >= 1 and r >= 2, got n={n}, r={r}")


def _check_budget(n: int, r: int, budget: int) -> None:
    if budget < 1:
        raise BadParametersError("budget must be positive")
    if (r - 1) ** n > budget:
        raise BudgetExceededError(f"(r-1)^n = {(r - 1) ** n} exceeds budget {budget}")


def enumerate_sw_prime(n: int, r: int, budget: int = DEFAULT_BUDGET) -> Iterator[Word]:
    """All (r-1)^n open words of length n+1 in lexicographic order."""
    _validate_nr(n, r)
    _check_budget(n, r, budget)

    def gen():
        word = [0] * (n + 1)

        def rec(pos: int) -> Iterator[Word]:
            if pos > n:
                yield Word(tuple(word), r)
                return
            for c in range(r):
                if c != word[pos - 1]:
                    word[pos] = c
                    yield from rec(pos + 1)

        yield from rec(1)

    return gen()


def word_in_sw_prime(w: Word) -> bool:
    ls = w.letters
    return ls[0] == 0 and all(a != b for a, b in zip(ls, ls[1:]))


def oracle_E(n: int, r: int, budget: int = DEFAULT_BUDGET) -> list[Poly]:
    """Ascent polynomials of the open words, bucketed by last letter.

    Computed by walking every word, tallying x^(ascents) into the bucket of
    the word's last letter.
    """
    _validate_nr(n, r)
    _check_budget(n, r, budget)
    counts = [[0] * (n + 1) for _ in range(r)]
    letters = range(r)

    def rec(pos: int, last: int, asc: int) -> None:
        if pos == n:
            counts[last][asc] += 1
            return
        nxt = pos + 1
        for c in letters:
            if c != last:
                rec(nxt, c, asc + 1 if last < c else asc)

    rec(0, 0, 0)
    return [Poly(tuple(row)) for row in counts]


def oracle_local_h(n: int, r: int, budget: int = DEFAULT_BUDGET) -> Poly:
    """Ascent polynomial of the closed words (first bucket of oracle_E)."""
    _validate_nr(n, r)
    _check_budget(n, r, budget)
    counts = [0] * (n + 1)
    letters = range(r)

    def rec(pos: int, last: int, asc: int) -> None:
        if pos == n:
            if last == 0:
                counts[asc] += 1
            return
        nxt = pos + 1
        for c in letters:
            if c != last:
                rec(nxt, c, asc + 1 if last < c else asc)

    rec(0, 0, 0)
    return Poly(tuple(counts))


def _gamma_transitions(r: int, gamma: GammaVector) -> list[list[int]]:
    """transitions[prev] = letters c reachable from prev, ascending."""
    g = gamma.gamma
    return [[c for c in range(r) if abs(c - prev) > g[c]] for prev in range(r)]


def _validate_gamma(r: int, gamma: GammaVector) -> None:
    if not isinstance(gamma, GammaVector):
        raise InvalidGammaError("expected a GammaVector")
    if gamma.r != r:
        raise InvalidGammaError(f"profile length {gamma.r} does not match r={r}")


def enumerate_sw_gamma(
    n: int, r: int, gamma: GammaVector, closed: bool, budget: int = DEFAULT_BUDGET
) -> Iterator[Word]:
    """Jump-restricted words in lexicographic order; closed ones end with 0."""
    _validate_nr(n, r)
    _validate_gamma(r, gamma)
    _check_budget(n, r, budget)
    trans = _gamma_transitions(r, gamma)

    def gen():
        word = [0] * (n + 1)

        def rec(pos: int) -> Iterator[Word]:
            if pos > n:
                if not closed or word[n] == 0:
                    yield Word(tuple(word), r)
                return
            for c in trans[word[pos - 1]]:
                word[pos] = c
                yield from rec(pos + 1)

        yield from rec(1)

    return gen()


def word_in_sw_gamma(w: Word, gamma: GammaVector, closed: bool) -> bool:
    _validate_gamma(w.alphabet_size, gamma)
    ls = w.letters
    if ls[0] != 0 or (closed and ls[-1] != 0):
        return False
    g = gamma.gamma
    return all(abs(b - a) > g[b] for a, b in zip(ls, ls[1:]))


def oracle_E_gamma(
    n: int, r: int, gamma: GammaVector, budget: int = DEFAULT_BUDGET
) -> list[Poly]:
    """Ascent polynomials of the open jump-restricted words, by last letter."""
    _validate_nr(n, r)
    _validate_gamma(r, gamma)
    _check_budget(n, r, budget)
    trans = _gamma_transitions(r, gamma)
    counts = [[0] * (n + 1) for _ in range(r)]

    def rec(pos: int, last: int, asc: int) -> None:
        if pos == n:
            counts[last][asc] += 1
            return
        nxt = pos + 1
        for c in trans[last]:
            rec(nxt, c, asc + 1 if last < c else asc)

    rec(0, 0, 0)
    return [Poly(tuple(row)) for row in counts]


def all_gamma_vectors(r: int) -> Iterator[GammaVector]:
    """Every valid profile of length r, in lexicographic order."""
    if r < 2:
        raise BadParametersError("need r >= 2")

    def rec(prefix: list[int]) -> Iterator[GammaVector]:
        if len(prefix) == r:
            yield GammaVector(tuple(prefix))
            return
        lo = max(0, prefix[-1] - 1) if prefix else 0
        hi = min(r - 2, prefix[-1] + 1) if prefix else r - 2
        for v in range(lo, hi + 1):
            yield from rec(prefix + [v])

    return rec([])
