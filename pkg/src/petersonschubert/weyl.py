"""
Weyl group elements as integer matrices acting on simple-root coordinates.

An element is identified by its matrix (columns are the images of the simple
roots), so two words give the same element exactly when their matrix products
agree.  Words are tuples of 1-based simple indices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .roots import RootSystem

__all__ = [
    "Word",
    "WeylElement",
    "ReducedWordCapExceeded",
    "DEFAULT_WORD_CAP",
    "parse_word",
    "format_word",
    "identity",
    "element_of",
    "multiply",
    "inverse",
    "length",
    "right_descents",
    "left_descents",
    "is_reduced",
    "canonical_word",
    "all_reduced_words",
    "count_reduced_words",
    "bruhat_leq",
    "longest_element",
]

Word = tuple[int, ...]

DEFAULT_WORD_CAP = 10**6


class ReducedWordCapExceeded(RuntimeError):
    pass


class WeylElement:
    __slots__ = ("matrix", "_key")

    def __init__(self, matrix: np.ndarray):
        m = np.ascontiguousarray(matrix, dtype=np.int64)
        m.setflags(write=False)
        self.matrix = m
        self._key = m.tobytes()

    @property
    def key(self) -> bytes:
        return self._key

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"WeylElement({self.matrix.tolist()})"


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "e", "-"):
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}; expected e.g. '1,2,1'") from None


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(np.eye(rs.rank, dtype=np.int64))


def element_of(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    m = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        rs.check_index(i)
        m = m @ rs.simple_reflection_matrices[i - 1]
    return WeylElement(m)


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    return WeylElement(u.matrix @ v.matrix)


def _times_simple(rs: RootSystem, w: WeylElement, i: int) -> WeylElement:
    return WeylElement(w.matrix @ rs.simple_reflection_matrices[i - 1])


def _simple_times(rs: RootSystem, i: int, w: WeylElement) -> WeylElement:
    return WeylElement(rs.simple_reflection_matrices[i - 1] @ w.matrix)


def inverse(w: WeylElement) -> WeylElement:
    inv = np.rint(np.linalg.inv(w.matrix.astype(float))).astype(np.int64)
    if not np.array_equal(inv @ w.matrix, np.eye(len(inv), dtype=np.int64)):
        raise ArithmeticError("matrix is not invertible over the integers")
    return WeylElement(inv)


def _is_negative(col: np.ndarray) -> bool:
    # images of roots are roots, so a single negative coordinate decides the sign
    return bool((col < 0).any())


def length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    images = w.matrix @ rs.positive_root_array
    return int((images < 0).any(axis=0).sum())


def right_descents(rs: RootSystem, w: WeylElement) -> list[int]:
    """``i`` with ``l(w s_i) < l(w)``, i.e. ``w(alpha_i) < 0``."""
    return [i + 1 for i in range(rs.rank) if _is_negative(w.matrix[:, i])]


def left_descents(rs: RootSystem, w: WeylElement) -> list[int]:
    return right_descents(rs, inverse(w))


def is_reduced(rs: RootSystem, word: Sequence[int]) -> bool:
    m = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        rs.check_index(i)
        if _is_negative(m[:, i - 1]):
            return False
        m = m @ rs.simple_reflection_matrices[i - 1]
    return True


def canonical_word(rs: RootSystem, w: WeylElement) -> Word:
    """Reduced word obtained by repeatedly peeling the smallest left descent."""
    word = []
    cur = w
    while True:
        desc = left_descents(rs, cur)
        if not desc:
            break
        i = desc[0]
        word.append(i)
        cur = _simple_times(rs, i, cur)
    return tuple(word)


def all_reduced_words(rs: RootSystem, v: WeylElement,
                      cap: int = DEFAULT_WORD_CAP) -> list[Word]:
    """Every reduced word of ``v``, sorted.

    Raises ReducedWordCapExceeded when there are more than ``cap`` of them.
    """
    total = count_reduced_words(rs, v)
    if total > cap:
        raise ReducedWordCapExceeded(
            f"element has {total} reduced words, above the cap of {cap}")
    memo: dict[bytes, list[Word]] = {}

    def words(u: WeylElement) -> list[Word]:
        if u.key in memo:
            return memo[u.key]
        desc = right_descents(rs, u)
        if not desc:
            out = [()]
        else:
            out = []
            for i in desc:
                out.extend(p + (i,) for p in words(_times_simple(rs, u, i)))
        memo[u.key] = out
        return out

    return sorted(words(v))


def count_reduced_words(rs: RootSystem, v: WeylElement) -> int:
    memo: dict[bytes, int] = {}

    def count(u: WeylElement) -> int:
        if u.key not in memo:
            desc = right_descents(rs, u)
            memo[u.key] = 1 if not desc else sum(count(_times_simple(rs, u, i)) for i in desc)
        return memo[u.key]

    return count(v)


def bruhat_leq(rs: RootSystem, v: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison by induction on a left descent of ``w``."""
    e = identity(rs)
    while True:
        if v == e:
            return True
        if w == e:
            return False
        s = left_descents(rs, w)[0]
        if s in left_descents(rs, v):
            v = _simple_times(rs, s, v)
        w = _simple_times(rs, s, w)


def longest_element(rs: RootSystem, K: Iterable[int]) -> WeylElement:
    """Longest element of the parabolic subgroup generated by ``K``."""
    K = sorted(set(K))
    w = identity(rs)
    while True:
        ascents = [i for i in K if not _is_negative(w.matrix[:, i - 1])]
        if not ascents:
            return w
        w = _times_simple(rs, w, ascents[0])
