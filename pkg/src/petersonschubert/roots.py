"""
Finite crystallographic root systems with a fixed labeling of the simple roots.

Node labels follow the usual Bourbaki pictures: chains 1-2-...-n for A, B, C;
D_n has the fork ``n-2 - n-1`` and ``n-2 - n``; E_n is the chain
1-3-4-...-n with node 2 hanging off node 4; F_4 has its double bond between
2 and 3; G_2 has its triple bond between 1 and 2.

The Cartan matrix is stored as ``cartan[i][j] = <alpha_j, alpha_i^vee>``
(0-based internally), so the simple reflection acts on root coordinates by

    s_i(r) = r - (sum_j cartan[i][j] * r_j) * alpha_i

Short roots: alpha_n in B_n, alpha_1..alpha_{n-1} in C_n, alpha_3 and alpha_4
in F_4, alpha_1 in G_2.

>>> rs = build_root_system("A2")
>>> rs.cartan
((2, -1), (-1, 2))
>>> rs.reflect(2, (1, 0))
(1, 1)
>>> len(build_root_system("E8").positive_roots)
120
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "LieType",
    "RootSystem",
    "Root",
    "Component",
    "SimpleSubset",
    "parse_lie_type",
    "parse_subset",
    "cartan_matrix",
    "build_root_system",
    "classify_subset",
    "height",
    "all_subsets",
]

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in "ABCDEFG" or len(self.family) != 1:
            raise ValueError(f"unknown Lie family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family in _MIN_RANK and self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, "
                f"got {self.rank}")
        if self.family in _FIXED_RANKS and self.rank not in _FIXED_RANKS[self.family]:
            allowed = ", ".join(str(r) for r in _FIXED_RANKS[self.family])
            raise ValueError(
                f"type {self.family} exists only in rank {allowed}, got {self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_lie_type(text: str) -> LieType:
    """Parse compact names such as ``"A3"``, ``"e8"`` or ``"G2"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
    if m is None:
        raise ValueError(f"cannot parse Lie type {text!r}; expected e.g. 'C3' or 'E8'")
    return LieType(m.group(1).upper(), int(m.group(2)))


def parse_subset(text: str, rank: int) -> frozenset[int]:
    """Parse ``"1,3,4"`` (1-based), ``"all"`` or ``""`` into a set of indices."""
    text = text.strip()
    if text.lower() == "all":
        return frozenset(range(1, rank + 1))
    if text in ("", "-", "{}"):
        return frozenset()
    try:
        indices = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse subset {text!r}; expected e.g. '1,3,4' or 'all'") from None
    for i in indices:
        if not 1 <= i <= rank:
            raise ValueError(f"simple root index {i} out of range 1..{rank}")
    return frozenset(indices)


def _edges(t: LieType) -> list[tuple[int, int]]:
    """Undirected simply-laced skeleton of the Dynkin diagram, 1-based."""
    n = t.rank
    if t.family in "ABCFG":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E_n: 1-3-4-...-n, 2-4
    return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]


def cartan_matrix(t: LieType | str) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``C[i][j] = <alpha_j, alpha_i^vee>`` (0-based rows/cols)."""
    if isinstance(t, str):
        t = parse_lie_type(t)
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _edges(t):
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1
    # multiple bonds: the long root's entry in the short root's row carries the multiplicity
    if t.family == "B":
        c[n - 1][n - 2] = -2
    elif t.family == "C":
        c[n - 2][n - 1] = -2
    elif t.family == "F":
        c[2][1] = -2
    elif t.family == "G":
        c[0][1] = -3
    return tuple(tuple(row) for row in c)


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    # numpy views are cached per instance; they are never mutated after creation
    @cached_property
    def cartan_array(self) -> np.ndarray:
        arr = np.array(self.cartan, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def simple_reflection_matrices(self) -> tuple[np.ndarray, ...]:
        """``S_i`` with columns ``s_i(alpha_j)``; index 0 is ``s_1``."""
        n = self.rank
        mats = []
        for i in range(n):
            m = np.eye(n, dtype=np.int64)
            m[i, :] -= self.cartan_array[i, :]
            m.setflags(write=False)
            mats.append(m)
        return tuple(mats)

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple index {i} out of range 1..{self.rank} for {self.lie_type}")

    def simple_root(self, i: int) -> Root:
        self.check_index(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def pairing(self, r: Sequence[int], i: int) -> int:
        """``<r, alpha_i^vee>``."""
        row = self.cartan[i - 1]
        return sum(row[j] * r[j] for j in range(self.rank))

    def reflect(self, i: int, r: Sequence[int]) -> Root:
        self.check_index(i)
        if len(r) != self.rank:
            raise ValueError(f"root has {len(r)} coordinates, expected {self.rank}")
        c = self.pairing(r, i)
        out = list(r)
        out[i - 1] -= c
        return tuple(out)

    @cached_property
    def positive_roots(self) -> frozenset[Root]:
        """Closure of the simple roots under simple reflections, positive half."""
        seen = {self.simple_root(i) for i in range(1, self.rank + 1)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(1, self.rank + 1):
                    s = self.reflect(i, r)
                    if all(x >= 0 for x in s) and s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return frozenset(seen)

    @cached_property
    def positive_root_array(self) -> np.ndarray:
        """Positive roots as columns, sorted by (height, coordinates)."""
        roots = sorted(self.positive_roots, key=lambda r: (sum(r), r))
        arr = np.array(roots, dtype=np.int64).T.reshape(self.rank, len(roots))
        arr.setflags(write=False)
        return arr

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0

    def __str__(self):
        return str(self.lie_type)


def build_root_system(t: LieType | str) -> RootSystem:
    if isinstance(t, str):
        t = parse_lie_type(t)
    return RootSystem(t, cartan_matrix(t))


def height(r: Sequence[int]) -> int:
    return sum(r)


@dataclass(frozen=True)
class Component:
    """A connected piece of a subset of simple roots.

    ``index_map`` sends each ambient index to its label in the standard diagram
    of ``lie_type``; ``ordered`` lists the ambient indices by standard label.
    """
    indices: frozenset[int]
    lie_type: LieType
    index_map: tuple[tuple[int, int], ...]

    @property
    def ordered(self) -> tuple[int, ...]:
        inv = {std: amb for amb, std in self.index_map}
        return tuple(inv[k] for k in range(1, len(self.indices) + 1))

    def to_standard(self, ambient: int) -> int:
        return dict(self.index_map)[ambient]


@dataclass(frozen=True)
class SimpleSubset:
    indices: frozenset[int]
    components: tuple[Component, ...]

    def __len__(self):
        return len(self.indices)

    @property
    def type_label(self) -> str:
        if not self.components:
            return "empty"
        return " x ".join(str(c.lie_type) for c in self.components)


def _connected_components(rs: RootSystem, indices: Iterable[int]) -> list[frozenset[int]]:
    remaining = set(indices)
    comps = []
    while remaining:
        start = min(remaining)
        stack, comp = [start], {start}
        while stack:
            a = stack.pop()
            for b in list(remaining):
                if b not in comp and rs.adjacent(a, b):
                    comp.add(b)
                    stack.append(b)
        remaining -= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def _candidate_types(k: int) -> list[LieType]:
    out = [LieType("A", k)]
    if k >= 2:
        out += [LieType("B", k), LieType("C", k)]
    if k >= 4:
        out.append(LieType("D", k))
    if k in (6, 7, 8):
        out.append(LieType("E", k))
    if k == 4:
        out.append(LieType("F", 4))
    if k == 2:
        out.append(LieType("G", 2))
    return out


def _first_isomorphism(sub: dict[tuple[int, int], int], nodes: list[int],
                       std: tuple[tuple[int, ...], ...]) -> tuple[int, ...] | None:
    """Lexicographically smallest ``(preimage of std 1, preimage of std 2, ...)``
    such that the induced Cartan entries agree, or None."""
    k = len(nodes)
    chosen: list[int] = []

    def extend() -> bool:
        pos = len(chosen)
        if pos == k:
            return True
        for a in nodes:
            if a in chosen:
                continue
            ok = all(sub[a, b] == std[pos][q] and sub[b, a] == std[q][pos]
                     for q, b in enumerate(chosen))
            if ok:
                chosen.append(a)
                if extend():
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend() else None


def _classify_component(rs: RootSystem, comp: frozenset[int]) -> Component:
    nodes = sorted(comp)
    sub = {(a, b): rs.cartan[a - 1][b - 1] for a in nodes for b in nodes}
    best = None
    for t in _candidate_types(len(nodes)):
        pre = _first_isomorphism(sub, nodes, cartan_matrix(t))
        if pre is not None and (best is None or pre < best[1]):
            best = (t, pre)
    if best is None:  # pragma: no cover - every connected finite diagram is listed
        raise RuntimeError(f"could not classify component {nodes} of {rs.lie_type}")
    t, pre = best
    index_map = tuple(sorted((amb, std + 1) for std, amb in enumerate(pre)))
    return Component(comp, t, index_map)


def classify_subset(rs: RootSystem, indices: Iterable[int]) -> SimpleSubset:
    """Split ``indices`` into connected components and label each one.

    Among all diagram isomorphisms onto a standard diagram, the one whose
    sequence of preimages of standard labels 1, 2, ... is lexicographically
    smallest wins; this also settles B_2 versus C_2 for two-node double bonds.
    """
    idx = frozenset(indices)
    for i in idx:
        rs.check_index(i)
    comps = tuple(_classify_component(rs, c) for c in _connected_components(rs, idx))
    return SimpleSubset(idx, comps)


def all_subsets(rank: int) -> list[frozenset[int]]:
    """Subsets of ``{1..rank}`` ordered by size, then lexicographically."""
    return [frozenset(c) for k in range(rank + 1)
            for c in itertools.combinations(range(1, rank + 1), k)]
