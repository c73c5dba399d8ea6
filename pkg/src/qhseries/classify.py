"""Dynkin classification, positive roots, Coxeter number, Nakayama matrix.

Classification goes through the Tits form q(d) = sum d_i^2 - sum_{arrows}
d_tail d_head: the quiver is Dynkin iff q is positive definite, extended
Dynkin iff q is positive semidefinite with nontrivial radical, wild
otherwise. Definiteness is decided exactly from the integer characteristic
polynomial of the symmetrized Gram matrix 2I - C (a symmetric matrix is
positive semidefinite iff its characteristic polynomial coefficients
weakly alternate in sign, and definite iff additionally the determinant is
nonzero).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matrices
from .errors import NotDynkin
from .fields import PrimeField, WeightVector
from .matrices import Matrix
from .quiver import Quiver, arrow_matrix, double_and_adjacency

# Componentwise bound for the box enumeration of positive roots: no ADE
# highest root has a coefficient above 6 (attained by E8).
ROOT_COORD_BOUND = 6

# Box enumeration scans (ROOT_COORD_BOUND+1)^r vectors; beyond this rank we
# switch to closing the simple roots under simple reflections, which yields
# the same set (every positive root is reachable from a simple root through
# positive roots).
_MAX_BOX_RANK = 9


@dataclass(frozen=True)
class QuiverClass:
    verdict: str  # "Dynkin" | "ExtendedDynkin" | "Wild"
    dynkin_type: str | None = None  # e.g. "A2", "D5", "E7"
    relabeling: tuple[int, ...] | None = None  # vertex i -> canonical position

    @property
    def is_dynkin(self) -> bool:
        return self.verdict == "Dynkin"


@dataclass(frozen=True)
class RootData:
    positive_roots: frozenset[tuple[int, ...]]
    coxeter_number: int


@dataclass(frozen=True)
class NakayamaData:
    permutation: tuple[int, ...]  # 1-based images: vertex i -> permutation[i-1]
    matrix: Matrix


def tits_form(q: Quiver, d) -> int:
    """q(d) = sum d_i^2 - sum over arrows of d_tail * d_head."""
    total = sum(int(x) * int(x) for x in d)
    for a in q.arrows:
        total -= int(d[a.tail - 1]) * int(d[a.head - 1])
    return total


def _charpoly(m: list[list[int]]) -> list[int]:
    """Coefficients [c_0, ..., c_{r-1}] of det(xI - M) = x^r + sum c_k x^k.

    Faddeev-LeVerrier with exact integer arithmetic; every division is
    exact because the characteristic polynomial has integer coefficients.
    """
    r = len(m)
    coeffs = [0] * r
    b = [[int(i == j) for j in range(r)] for i in range(r)]
    for k in range(1, r + 1):
        mb = [[sum(m[i][s] * b[s][j] for s in range(r)) for j in range(r)] for i in range(r)]
        tr = sum(mb[i][i] for i in range(r))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("inexact division in characteristic polynomial")
        coeffs[r - k] = c
        b = [[mb[i][j] + (c if i == j else 0) for j in range(r)] for i in range(r)]
    return coeffs


def _gram(q: Quiver) -> list[list[int]]:
    _, _, c = double_and_adjacency(q)
    r = q.vertex_count
    return [[2 * int(i == j) - c[i][j] for j in range(r)] for i in range(r)]


def _neighbors(q: Quiver) -> list[set[int]]:
    adj = [set() for _ in range(q.vertex_count + 1)]
    for a in q.arrows:
        adj[a.tail].add(a.head)
        adj[a.head].add(a.tail)
    return adj


def _walk_branch(adj, start: int, away_from: int) -> list[int]:
    """Follow the chain from `start` away from `away_from` until a leaf."""
    branch = [start]
    prev, cur = away_from, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return branch
        prev, cur = cur, nxt[0]
        branch.append(cur)


def _dynkin_shape(q: Quiver) -> tuple[str, int, tuple[int, ...]]:
    """Type letter, rank, and relabeling for a quiver known to be definite.

    Positive definiteness forces the underlying graph to be a simple tree
    of ADE shape, so the shape can be read off from vertex degrees.
    """
    r = q.vertex_count
    adj = _neighbors(q)
    degrees = {v: len(adj[v]) for v in q.vertices}
    forks = [v for v, d in degrees.items() if d >= 3]
    canon = [0] * (r + 1)  # canon[v] = canonical position of v

    if not forks:
        # A_n: walk the path from one endpoint.
        if r == 1:
            return "A", 1, (1,)
        start = min(v for v, d in degrees.items() if d == 1)
        pos = 0
        prev, cur = None, start
        while cur is not None:
            pos += 1
            canon[cur] = pos
            nxt = [w for w in adj[cur] if w != prev]
            prev, cur = cur, nxt[0] if nxt else None
        return "A", r, tuple(canon[1:])

    center = forks[0]
    branches = sorted(
        (_walk_branch(adj, n, center) for n in adj[center]),
        key=lambda b: (len(b), b[-1]),
    )
    lengths = tuple(len(b) for b in branches)

    if lengths[0] == 1 and lengths[1] == 1:
        # D_n: long branch walked tip-first gives positions 1..n-2.
        long = branches[2]
        for pos, v in enumerate(reversed(long), start=1):
            canon[v] = pos
        canon[center] = r - 2
        canon[branches[0][0]] = r - 1
        canon[branches[1][0]] = r
        return "D", r, tuple(canon[1:])

    if lengths[0] == 1 and lengths[1] == 2:
        # E_6/E_7/E_8: positions 2 (short), 3-1 (middle), 5,6,.. (long), 4 center.
        canon[center] = 4
        canon[branches[0][0]] = 2
        canon[branches[1][0]] = 3
        canon[branches[1][1]] = 1
        for pos, v in enumerate(branches[2], start=5):
            canon[v] = pos
        return "E", r, tuple(canon[1:])

    raise AssertionError("positive definite quiver with non-ADE shape")


def classify(q: Quiver) -> QuiverClass:
    """Dynkin / ExtendedDynkin / Wild verdict, with type and relabeling."""
    r = q.vertex_count
    coeffs = _charpoly(_gram(q))
    # det(xI - M) = x^r + sum c_k x^k; eigenvalues all >= 0 iff signs
    # (-1)^(r-k) c_k >= 0 for every k.
    semidefinite = all((-1) ** (r - k) * coeffs[k] >= 0 for k in range(r))
    if not semidefinite:
        return QuiverClass("Wild")
    if coeffs[0] == 0:
        return QuiverClass("ExtendedDynkin")
    letter, rank, relabeling = _dynkin_shape(q)
    return QuiverClass("Dynkin", f"{letter}{rank}", relabeling)


def _roots_box(q: Quiver) -> frozenset[tuple[int, ...]]:
    r = q.vertex_count
    edges = [(a.tail - 1, a.head - 1) for a in q.arrows]
    base = ROOT_COORD_BOUND + 1
    total = base**r
    roots = []
    chunk = 1 << 20
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((idx.size, r), dtype=np.int64)
        rest = idx
        for col in range(r):
            digits[:, col] = rest % base
            rest = rest // base
        vals = (digits * digits).sum(axis=1)
        for u, w in edges:
            vals -= digits[:, u] * digits[:, w]
        for row in digits[vals == 1]:
            roots.append(tuple(int(x) for x in row))
    return frozenset(roots)


def _roots_reflection(q: Quiver) -> frozenset[tuple[int, ...]]:
    r = q.vertex_count
    gram = _gram(q)
    simples = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        d = frontier.pop()
        for i in range(r):
            pairing = sum(gram[i][j] * d[j] for j in range(r))
            image = tuple(
                d[j] - (pairing if j == i else 0) for j in range(r)
            )
            if all(x >= 0 for x in image) and image not in found:
                found.add(image)
                frontier.append(image)
    return frozenset(found)


def root_data(q: Quiver) -> RootData:
    """All positive roots (q(d) = 1, d >= 0) and the Coxeter number."""
    if not classify(q).is_dynkin:
        raise NotDynkin("positive roots are only enumerated for Dynkin quivers")
    if q.vertex_count <= _MAX_BOX_RANK:
        roots = _roots_box(q)
    else:
        roots = _roots_reflection(q)
    h, rem = divmod(2 * len(roots), q.vertex_count)
    if rem:
        raise ArithmeticError("2|roots| not divisible by rank")
    return RootData(roots, h)


def _canonical_involution(letter: str, rank: int) -> dict[int, int]:
    if letter == "A":
        return {i: rank + 1 - i for i in range(1, rank + 1)}
    if letter == "D":
        nu = {i: i for i in range(1, rank + 1)}
        if rank % 2 == 1:
            nu[rank - 1], nu[rank] = rank, rank - 1
        return nu
    if rank == 6:
        return {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    return {i: i for i in range(1, rank + 1)}  # E7, E8


def nakayama_matrix(q: Quiver) -> NakayamaData:
    """Nakayama permutation matrix P, transported through the relabeling.

    The involution per type (A_n: flip; D_odd: swap the fork tips; E6: the
    diagram flip; otherwise identity) is applied in canonical coordinates.
    """
    cls = classify(q)
    if not cls.is_dynkin:
        raise NotDynkin("Nakayama matrix is only defined for Dynkin quivers")
    letter, rank = cls.dynkin_type[0], int(cls.dynkin_type[1:])
    nu_canonical = _canonical_involution(letter, rank)
    to_canon = cls.relabeling
    from_canon = {pos: v for v, pos in enumerate(to_canon, start=1)}
    images = tuple(
        from_canon[nu_canonical[to_canon[i - 1]]] for i in q.vertices
    )
    return NakayamaData(images, matrices.permutation_matrix(images))


def pairing(v: WeightVector, root: tuple[int, ...]):
    """sum_i v_i * root_i evaluated in v's field."""
    total = sum(x * int(d) for x, d in zip(v.entries, root))
    if isinstance(v.field, PrimeField):
        total %= v.field.p
    return total


def is_regular(q: Quiver, v: WeightVector, roots: RootData | None = None) -> bool:
    """True iff v pairs to a nonzero field element with every positive root."""
    if roots is None:
        roots = root_data(q)
    elif not classify(q).is_dynkin:
        raise NotDynkin("regularity is only defined for Dynkin quivers")
    if len(v.entries) != q.vertex_count:
        raise ValueError("weight vector length does not match vertex count")
    return all(pairing(v, d) != 0 for d in roots.positive_roots)
