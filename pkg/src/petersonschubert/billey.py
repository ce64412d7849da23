"""
Billey's localization formula.

For a reduced word ``b_1 ... b_L`` of ``w`` the root attached to position ``j``
is ``s_{b_1} ... s_{b_{j-1}}(alpha_{b_j})``.  The localization of the Schubert
class of ``v`` at ``w`` sums, over every choice of positions whose letters
spell a reduced word of ``v``, the product of the attached roots.

Two evaluators are provided:

* ``billey_polynomial`` expands the full polynomial in the simple roots by
  enumerating every embedding.  Exponential; for verification only.
* ``billey_specialized`` sends every simple root to ``t``, so each attached
  root becomes its height, and sums the weighted embeddings with a dynamic
  program over (position in the word of ``w``, matched prefix of ``v``).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .roots import Root, RootSystem
from .weyl import (
    DEFAULT_WORD_CAP, WeylElement, Word, all_reduced_words, inverse, length,
    right_descents,
)

__all__ = [
    "TMonomial",
    "RootPolynomial",
    "HeightList",
    "NonReducedWordError",
    "TermCapExceeded",
    "DEFAULT_TERM_CAP",
    "root_at",
    "roots_along",
    "heights_list",
    "billey_polynomial",
    "billey_specialized",
    "specialize",
    "specialized_from_heights",
    "specialized_single_word",
]

DEFAULT_TERM_CAP = 10**6


class NonReducedWordError(ValueError):
    pass


class TermCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TMonomial:
    """``coeff * t**degree`` with an exact rational coefficient.

    Zero monomials keep the degree they were produced with, but all zeros
    compare equal.
    """
    coeff: Fraction
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")

    @classmethod
    def zero(cls, degree: int = 0) -> "TMonomial":
        return cls(Fraction(0), degree)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, TMonomial):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.coeff == other.coeff and self.degree == other.degree

    def __hash__(self):
        return hash((0, 0) if self.is_zero else (self.coeff, self.degree))

    def _check_degree(self, other: "TMonomial") -> int:
        if self.is_zero:
            return other.degree
        if other.is_zero or self.degree == other.degree:
            return self.degree
        raise ValueError(f"cannot add monomials of degrees {self.degree} and {other.degree}")

    def __add__(self, other: "TMonomial") -> "TMonomial":
        return TMonomial(self.coeff + other.coeff, self._check_degree(other))

    def __sub__(self, other: "TMonomial") -> "TMonomial":
        return TMonomial(self.coeff - other.coeff, self._check_degree(other))

    def __mul__(self, other):
        if isinstance(other, TMonomial):
            return TMonomial(self.coeff * other.coeff, self.degree + other.degree)
        return TMonomial(self.coeff * Fraction(other), self.degree)

    __rmul__ = __mul__

    def __truediv__(self, other: "TMonomial") -> Fraction | "TMonomial":
        """Division by a nonzero monomial; a degree-0 result comes back as a Fraction."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero monomial")
        if self.is_zero:
            return Fraction(0)
        deg = self.degree - other.degree
        if deg < 0:
            raise ValueError("quotient is not a polynomial in t")
        q = self.coeff / other.coeff
        return q if deg == 0 else TMonomial(q, deg)

    def __str__(self):
        if self.is_zero:
            return "0"
        c = str(self.coeff)
        if self.degree == 0:
            return c
        t = "t" if self.degree == 1 else f"t^{self.degree}"
        return t if self.coeff == 1 else f"{c} {t}"

    def to_dict(self) -> dict:
        return {"num": str(self.coeff.numerator), "den": str(self.coeff.denominator),
                "deg": self.degree}

    @classmethod
    def from_dict(cls, obj: Mapping) -> "TMonomial":
        return cls(Fraction(int(obj["num"]), int(obj["den"])), int(obj["deg"]))


class RootPolynomial:
    """Polynomial in the simple roots: exponent vector -> integer coefficient."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.rank = rank
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def one(cls, rank: int) -> "RootPolynomial":
        return cls(rank, {(0,) * rank: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        if not isinstance(other, RootPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"a{i + 1}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


@dataclass(frozen=True)
class HeightList:
    word: Word
    heights: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"heights": list(self.heights), "word": list(self.word)}


def roots_along(rs: RootSystem, word: Sequence[int]) -> list[Root]:
    """The roots ``r(1), ..., r(L)`` attached to each position of a reduced word."""
    m = np.eye(rs.rank, dtype=np.int64)
    out = []
    for pos, i in enumerate(word, start=1):
        rs.check_index(i)
        col = m[:, i - 1]
        if (col < 0).any():
            raise NonReducedWordError(
                f"word {tuple(word)} is not reduced (fails at position {pos})")
        out.append(tuple(int(x) for x in col))
        m = m @ rs.simple_reflection_matrices[i - 1]
    return out


def root_at(rs: RootSystem, word: Sequence[int], j: int) -> Root:
    if not 1 <= j <= len(word):
        raise IndexError(f"position {j} out of range 1..{len(word)}")
    # reducedness is checked on the whole word, not just the prefix
    return roots_along(rs, word)[j - 1]


def heights_list(rs: RootSystem, word: Sequence[int]) -> HeightList:
    return HeightList(tuple(word), tuple(sum(r) for r in roots_along(rs, word)))


def billey_polynomial(rs: RootSystem, v: WeylElement, w_word: Sequence[int],
                      word_cap: int = DEFAULT_WORD_CAP,
                      term_cap: int = DEFAULT_TERM_CAP) -> RootPolynomial:
    """Full localization, expanded by brute force over embeddings.

    The number of terms grows exponentially with ``len(w_word)``; ``term_cap``
    bounds the number of embedding products accumulated.
    """
    roots = roots_along(rs, w_word)
    n = rs.rank
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    products = 0

    def times_linear(poly: dict, root: Root) -> dict:
        out: dict = defaultdict(int)
        for e, c in poly.items():
            for k, a in enumerate(root):
                if a:
                    e2 = e[:k] + (e[k] + 1,) + e[k + 1:]
                    out[e2] += c * a
        return out

    for vw in all_reduced_words(rs, v, cap=word_cap):
        def embed(start: int, depth: int, poly: dict):
            nonlocal products
            if depth == len(vw):
                products += 1
                if products > term_cap:
                    raise TermCapExceeded(f"more than {term_cap} embeddings")
                for e, c in poly.items():
                    acc[e] += c
                return
            letter = vw[depth]
            remaining = len(vw) - depth
            for j in range(start, len(w_word) - remaining + 1):
                if w_word[j] == letter:
                    embed(j + 1, depth + 1, times_linear(poly, roots[j]))

        embed(0, 0, {(0,) * n: 1})
    return RootPolynomial(n, acc)


def specialize(p: RootPolynomial) -> TMonomial:
    """Send every simple root to ``t``."""
    if not p.is_homogeneous:
        raise ValueError("cannot specialize a non-homogeneous polynomial to a monomial")
    if p.is_zero:
        return TMonomial.zero()
    (deg,) = p.degrees()
    return TMonomial(Fraction(sum(p.terms.values())), deg)


@lru_cache(maxsize=4096)
def _prefix_automaton(rs: RootSystem, v: WeylElement) -> tuple[int, tuple[dict[int, int], ...]]:
    """Weak-order prefixes of ``v`` as an automaton over simple letters.

    State 0 is "nothing matched"; the final state is "all of v matched".
    A state is the inverse of the unmatched suffix; letter ``i`` may be read
    when it is a right descent of that inverse.
    """
    start = inverse(v)
    index = {start: 0}
    order = [start]
    trans: list[dict[int, int]] = []
    k = 0
    while k < len(order):
        y = order[k]
        out = {}
        for i in right_descents(rs, y):
            nxt = WeylElement(y.matrix @ rs.simple_reflection_matrices[i - 1])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            out[i] = index[nxt]
        trans.append(out)
        k += 1
    final = next(idx for idx, y in enumerate(order) if not trans[idx])
    return final, tuple(trans)


def specialized_from_heights(rs: RootSystem, v: WeylElement, w_word: Sequence[int],
                             heights: Sequence[int]) -> TMonomial:
    """Dynamic program behind ``billey_specialized`` with precomputed heights."""
    final, trans = _prefix_automaton(rs, v)
    dp = [0] * len(trans)
    dp[0] = 1
    for letter, h in zip(w_word, heights):
        updates = [(t[letter], dp[s] * h) for s, t in enumerate(trans)
                   if dp[s] and letter in t]
        for target, val in updates:
            dp[target] += val
    return TMonomial(Fraction(dp[final]), length(rs, v))


def billey_specialized(rs: RootSystem, v: WeylElement, w_word: Sequence[int]) -> TMonomial:
    """Localization of the Schubert class of ``v`` at ``w``, with ``alpha_i -> t``."""
    hl = heights_list(rs, w_word)
    return specialized_from_heights(rs, v, hl.word, hl.heights)


def specialized_single_word(v_word: Sequence[int], w_word: Sequence[int],
                            heights: Sequence[int]) -> int:
    """Weighted count of embeddings of one fixed word ``v_word`` into ``w_word``.

    ``dp[k]`` is the weighted number of ways to match the first ``k`` letters.
    """
    m = len(v_word)
    dp = [1] + [0] * m
    for letter, h in zip(w_word, heights):
        for k in range(m, 0, -1):
            if v_word[k - 1] == letter:
                dp[k] += dp[k - 1] * h
    return dp[m]
