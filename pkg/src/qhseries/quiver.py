"""Quivers: parsing, validation, doubling, adjacency matrices.

A quiver here is a finite connected acyclic directed multigraph with
vertices labeled 1..r and uniquely named arrows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import matrices
from .errors import CycleError, DisconnectedError, DuplicateArrowName, ParseError
from .matrices import Matrix


class Arrow(NamedTuple):
    name: str
    tail: int
    head: int


@dataclass(frozen=True)
class Quiver:
    """Validated quiver; construction rejects cycles and disconnection."""

    vertex_count: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        r = self.vertex_count
        if r < 1:
            raise ParseError("vertex count must be positive")
        seen = set()
        for a in self.arrows:
            if not a.name or "*" in a.name or any(c.isspace() for c in a.name):
                raise ParseError(f"bad arrow name {a.name!r}")
            if a.name in seen:
                raise DuplicateArrowName(f"arrow name {a.name!r} used twice")
            seen.add(a.name)
            if not (1 <= a.tail <= r and 1 <= a.head <= r):
                raise ParseError(f"arrow {a.name!r} endpoint out of range 1..{r}")
        if self._has_directed_cycle():
            raise CycleError("quiver contains a directed cycle")
        if not self._is_connected():
            raise DisconnectedError("underlying graph is not connected")

    def _has_directed_cycle(self) -> bool:
        r = self.vertex_count
        indeg = [0] * (r + 1)
        out = [[] for _ in range(r + 1)]
        for a in self.arrows:
            indeg[a.head] += 1
            out[a.tail].append(a.head)
        queue = [v for v in range(1, r + 1) if indeg[v] == 0]
        removed = 0
        while queue:
            v = queue.pop()
            removed += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return removed != r

    def _is_connected(self) -> bool:
        r = self.vertex_count
        if r == 1:
            return True
        adj = [set() for _ in range(r + 1)]
        for a in self.arrows:
            adj[a.tail].add(a.head)
            adj[a.head].add(a.tail)
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == r

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)


def parse_quiver(text: str) -> Quiver:
    """Parse the line-oriented quiver file format.

    Format: a `vertices <r>` line, then `arrow <name> <tail> <head>` lines.
    `#` starts a comment; blank lines are ignored.
    """
    vertex_count = None
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if vertex_count is not None:
                raise ParseError(f"line {lineno}: duplicate vertices line")
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'vertices <r>'")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if vertex_count < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
        elif parts[0] == "arrow":
            if vertex_count is None:
                raise ParseError(f"line {lineno}: 'arrow' before 'vertices'")
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: expected 'arrow <name> <tail> <head>'")
            try:
                tail, head = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: endpoints must be integers") from None
            arrows.append(Arrow(parts[1], tail, head))
        else:
            raise ParseError(f"line {lineno}: unknown directive {parts[0]!r}")
    if vertex_count is None:
        raise ParseError("missing 'vertices' line")
    return Quiver(vertex_count, tuple(arrows))


def arrow_matrix(q: Quiver) -> Matrix:
    """[V] with entry (i, j) = number of arrows i -> j."""
    r = q.vertex_count
    counts = [[0] * r for _ in range(r)]
    for a in q.arrows:
        counts[a.tail - 1][a.head - 1] += 1
    return matrices.from_rows(counts)


def double_and_adjacency(q: Quiver) -> tuple[tuple[Arrow, ...], Matrix, Matrix]:
    """Double quiver arrows plus ([V], C = [V] + [V]^t).

    The returned arrow list holds the original arrows first, then their
    reversals; arrow k is paired with arrow k + len(q.arrows), and the
    reversal of `a` is named `a*`.
    """
    stars = tuple(Arrow(a.name + "*", a.head, a.tail) for a in q.arrows)
    v = arrow_matrix(q)
    c = matrices.add(v, matrices.transpose(v))
    return q.arrows + stars, v, c


def dynkin_quiver(type_name: str) -> Quiver:
    """Canonically oriented ADE quiver, e.g. "A5", "D6", "E7".

    A_n: a linear path 1 -> 2 -> ... -> n. D_n: path 1 -> ... -> n-2 with
    extra arrows (n-2) -> n-1 and (n-2) -> n. E_n: path 1 -> 3 -> 4 -> ...
    -> n with an extra arrow 2 -> 4.
    """
    letter, rank = type_name[0].upper(), int(type_name[1:])
    edges: list[tuple[int, int]] = []
    if letter == "A":
        if rank < 1:
            raise ValueError("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(1, rank)]
    elif letter == "D":
        if rank < 4:
            raise ValueError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
    elif letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        edges = [(1, 3)] + [(i, i + 1) for i in range(3, rank)] + [(2, 4)]
    else:
        raise ValueError(f"unknown Dynkin type {type_name!r}")
    arrows = tuple(Arrow(f"a{i}", t, h) for i, (t, h) in enumerate(edges, start=1))
    return Quiver(rank, arrows)
