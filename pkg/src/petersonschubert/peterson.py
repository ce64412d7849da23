"""
Peterson Schubert calculus through localization at the fixed points ``w_K``.

Subsets of simple roots index both the fixed points (longest elements ``w_K``)
and the basis classes ``p_{v_K}``.  Everything is evaluated by the specialized
Billey formula, so every value is an exact monomial ``c t^d``.

>>> from petersonschubert.roots import build_root_system
>>> g2 = build_root_system("G2")
>>> [str(x) for x in basis_table(g2).matrix[3]]
['1', '6 t', '10 t', '30 t^2']
>>> monk(build_root_system("D5"), 5, {1, 2, 3, 4}).terms[frozenset(range(1, 6))]
Fraction(5, 2)
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .billey import TMonomial, heights_list, specialized_from_heights
from .row_words import row_longest_word
from .roots import RootSystem, SimpleSubset, all_subsets, classify_subset
from .weyl import (
    WeylElement, Word, canonical_word, count_reduced_words, element_of,
    longest_element,
)

__all__ = [
    "VerificationError",
    "PetersonClass",
    "BasisTable",
    "MonkExpansion",
    "GiambelliCertificate",
    "PetersonContext",
    "context",
    "v_word",
    "v_of",
    "fixed_points",
    "localization",
    "peterson_class",
    "basis_table",
    "monk",
    "giambelli",
    "scan_nonintegral",
    "subset_label",
    "dumps",
]


class VerificationError(AssertionError):
    """An identity that must hold at every fixed point failed."""


def subset_label(K: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(K)) + "}"


def _sorted_list(K: Iterable[int]) -> list[int]:
    return sorted(K)


def v_word(rs: RootSystem, K: Iterable[int]) -> Word:
    """Word of the Coxeter element ``v_K``: each component's letters in the
    order of its standard labels, components by smallest ambient index."""
    sub = classify_subset(rs, K)
    return tuple(i for comp in sub.components for i in comp.ordered)


def v_of(rs: RootSystem, K: Iterable[int]) -> WeylElement:
    return element_of(rs, v_word(rs, K))


@dataclass(frozen=True)
class PetersonClass:
    subset: SimpleSubset
    element: WeylElement
    localizations: dict[frozenset[int], TMonomial]


@dataclass(frozen=True)
class BasisTable:
    """``matrix[r][c]`` is the class of ``classes[c]`` at the fixed point of ``fixed_points[r]``."""
    lie_type: str
    fixed_points: tuple[frozenset[int], ...]
    classes: tuple[frozenset[int], ...]
    matrix: tuple[tuple[TMonomial, ...], ...]

    def to_dict(self) -> dict:
        return {
            "type": self.lie_type,
            "fixed_points": [_sorted_list(K) for K in self.fixed_points],
            "classes": [_sorted_list(K) for K in self.classes],
            "matrix": [[m.to_dict() for m in row] for row in self.matrix],
        }


@dataclass(frozen=True)
class MonkExpansion:
    """``p_{s_i} p_{v_K} = diagonal * p_{v_K} + sum_J terms[J] * p_{v_J}``."""
    i: int
    K: frozenset[int]
    diagonal: TMonomial
    terms: dict[frozenset[int], Fraction]

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "K": _sorted_list(self.K),
            "diagonal": self.diagonal.to_dict(),
            "terms": [{"J": _sorted_list(J), "coeff": _fraction_json(c)}
                      for J, c in self.terms.items()],
        }


@dataclass(frozen=True)
class GiambelliCertificate:
    """``constant * p_{v_K} = prod_{i in K} p_{s_i}``, checked at every fixed point."""
    K: SimpleSubset
    constant: Fraction
    reduced_word_counts: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "K": _sorted_list(self.K.indices),
            "components": [{"indices": _sorted_list(c.indices), "type": str(c.lie_type)}
                           for c in self.K.components],
            "constant": _fraction_json(self.constant),
            "reduced_word_counts": list(self.reduced_word_counts),
        }


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _fraction_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


class PetersonContext:
    """Lazily filled localization data for one root system.

    Cached values are written once and never changed, so results do not depend
    on the order in which they are requested.
    """

    def __init__(self, rs: RootSystem, paper_words: bool = False):
        self.rs = rs
        self.paper_words = paper_words
        self.subsets = tuple(all_subsets(rs.rank))
        self._words: dict[frozenset[int], Word] = {}
        self._heights: dict[frozenset[int], tuple[int, ...]] = {}
        self._v: dict[frozenset[int], WeylElement] = {}
        self._loc: dict[tuple[frozenset[int], frozenset[int]], TMonomial] = {}

    def w_word(self, K: frozenset[int]) -> Word:
        if K not in self._words:
            if self.paper_words:
                word = row_longest_word(self.rs, K)
            else:
                word = canonical_word(self.rs, longest_element(self.rs, K))
            self._words[K] = word
            self._heights[K] = heights_list(self.rs, word).heights
        return self._words[K]

    def v(self, J: frozenset[int]) -> WeylElement:
        if J not in self._v:
            self._v[J] = v_of(self.rs, J)
        return self._v[J]

    def loc(self, J: frozenset[int], K: frozenset[int]) -> TMonomial:
        """``p_{v_J}(w_K)``."""
        key = (J, K)
        if key not in self._loc:
            if not J <= K:
                # some s_j with j in J \ K lies below v_J but not below w_K
                self._loc[key] = TMonomial.zero(len(J))
            else:
                word = self.w_word(K)
                self._loc[key] = specialized_from_heights(
                    self.rs, self.v(J), word, self._heights[K])
        return self._loc[key]

    def generator(self, i: int, L: frozenset[int]) -> TMonomial:
        return self.loc(frozenset({i}), L)


@lru_cache(maxsize=64)
def context(rs: RootSystem, paper_words: bool = False) -> PetersonContext:
    return PetersonContext(rs, paper_words)


def _fs(K: Iterable[int], rs: RootSystem) -> frozenset[int]:
    K = frozenset(K)
    for i in K:
        rs.check_index(i)
    return K


def fixed_points(rs: RootSystem, paper_words: bool = False) -> list[tuple[frozenset[int], Word]]:
    ctx = context(rs, paper_words)
    return [(K, ctx.w_word(K)) for K in ctx.subsets]


def localization(rs: RootSystem, J: Iterable[int], K: Iterable[int],
                 paper_words: bool = False) -> TMonomial:
    """``p_{v_J}(w_K)``."""
    return context(rs, paper_words).loc(_fs(J, rs), _fs(K, rs))


def peterson_class(rs: RootSystem, K: Iterable[int], paper_words: bool = False) -> PetersonClass:
    ctx = context(rs, paper_words)
    K = _fs(K, rs)
    locs = {L: ctx.loc(K, L) for L in ctx.subsets}
    return PetersonClass(classify_subset(rs, K), ctx.v(K), locs)


def basis_table(rs: RootSystem, paper_words: bool = False) -> BasisTable:
    ctx = context(rs, paper_words)
    subs = ctx.subsets
    matrix = tuple(tuple(ctx.loc(J, K) for J in subs) for K in subs)
    return BasisTable(str(rs.lie_type), subs, subs, matrix)


def monk(rs: RootSystem, i: int, K: Iterable[int], paper_words: bool = False) -> MonkExpansion:
    """Expand ``p_{s_i} * p_{v_K}`` in the basis and verify it at every fixed point."""
    rs.check_index(i)
    ctx = context(rs, paper_words)
    K = _fs(K, rs)
    diagonal = ctx.generator(i, K)
    terms: dict[frozenset[int], Fraction] = {}
    for a in range(1, rs.rank + 1):
        if a in K:
            continue
        J = K | {a}
        diff = ctx.generator(i, J) - diagonal
        terms[J] = (diff * ctx.loc(K, J)) / ctx.loc(J, J)

    for L in ctx.subsets:
        lhs = ctx.generator(i, L) * ctx.loc(K, L)
        rhs = diagonal * ctx.loc(K, L)
        for J, c in terms.items():
            rhs = rhs + ctx.loc(J, L) * c
        if lhs != rhs:
            raise VerificationError(
                f"Monk expansion of p_s{i} * p_v{subset_label(K)} fails at "
                f"w_{subset_label(L)}: {lhs} != {rhs}")
    return MonkExpansion(i, K, diagonal, dict(sorted(terms.items(), key=lambda kv: sorted(kv[0]))))


def giambelli(rs: RootSystem, K: Iterable[int], paper_words: bool = False) -> GiambelliCertificate:
    """Constant ``C_K`` with ``C_K p_{v_K} = prod_{i in K} p_{s_i}``, verified pointwise."""
    ctx = context(rs, paper_words)
    K = _fs(K, rs)
    sub = classify_subset(rs, K)
    counts = []
    constant = Fraction(1)
    for comp in sub.components:
        r = count_reduced_words(rs, element_of(rs, comp.ordered))
        counts.append(r)
        constant *= Fraction(math.factorial(len(comp.indices)), r)

    for L in ctx.subsets:
        prod = TMonomial(1, 0)
        for i in sorted(K):
            prod = prod * ctx.generator(i, L)
        lhs = ctx.loc(K, L) * constant
        if lhs != prod:
            raise VerificationError(
                f"Giambelli identity for {subset_label(K)} fails at w_{subset_label(L)}: "
                f"{lhs} != {prod}")
    return GiambelliCertificate(sub, constant, tuple(counts))


def scan_nonintegral(rs: RootSystem, paper_words: bool = False
                     ) -> list[tuple[int, frozenset[int], frozenset[int], Fraction]]:
    """Every Monk coefficient that is not an integer, over all ``(i, K)``."""
    ctx = context(rs, paper_words)
    found = []
    for K in ctx.subsets:
        for i in range(1, rs.rank + 1):
            exp = monk(rs, i, K, paper_words)
            for J, c in exp.terms.items():
                if c.denominator != 1:
                    found.append((i, K, J, c))
    return found
