"""
Reduced words for longest elements laid out row by row, as in the skew-diagram
pictures: ``A_n`` rows ``s_1..s_k`` for k = n..1; ``B_n``/``C_n`` rows
``s_j..s_n`` for j = n..1 followed by ``s_1..s_k`` for k = n-1..1; ``D_n`` rows
``s_j..s_{n-2}`` capped alternately by ``s_n`` (j odd) or ``s_{n-1}`` (j even),
then the same tail as type B.  Exceptional words are read from bundled files.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from typing import Iterable

from .roots import LieType, RootSystem, classify_subset, parse_lie_type
from .weyl import Word, element_of, is_reduced, longest_element, parse_word

__all__ = ["bundled_word", "bundled_names", "template_word", "row_longest_word"]


def bundled_names() -> list[str]:
    files = resources.files("petersonschubert") / "data" / "words"
    return sorted(p.name[:-4] for p in files.iterdir() if p.name.endswith(".txt"))


@lru_cache(maxsize=None)
def bundled_word(name: str) -> Word:
    path = resources.files("petersonschubert") / "data" / "words" / f"{name}.txt"
    if not path.is_file():
        raise KeyError(f"no bundled word for {name}")
    return parse_word(path.read_text())


def template_word(t: LieType | str) -> Word:
    """Row-by-row reduced word of the longest element, in standard labels."""
    if isinstance(t, str):
        t = parse_lie_type(t)
    n = t.rank
    tail = [i for k in range(n - 1, 0, -1) for i in range(1, k + 1)]
    if t.family == "A":
        return tuple(i for k in range(n, 0, -1) for i in range(1, k + 1))
    if t.family in "BC":
        return tuple([i for j in range(n, 0, -1) for i in range(j, n + 1)] + tail)
    if t.family == "D":
        head = []
        for j in range(n - 1, 0, -1):
            head.extend(range(j, n - 1))
            head.append(n if j % 2 else n - 1)
        return tuple(head + tail)
    return bundled_word(str(t))


def row_longest_word(rs: RootSystem, K: Iterable[int]) -> Word:
    """Reduced word for the longest element of ``W_K`` built from the
    row-by-row templates of each connected component."""
    sub = classify_subset(rs, K)
    word: list[int] = []
    for comp in sub.components:
        amb = comp.ordered
        word.extend(amb[i - 1] for i in template_word(comp.lie_type))
    if not is_reduced(rs, word) or element_of(rs, word) != longest_element(rs, sub.indices):
        raise RuntimeError(f"template word for {sub.type_label} is not a reduced word of w_K")
    return tuple(word)
