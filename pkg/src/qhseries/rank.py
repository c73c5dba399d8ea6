"""Exact rank of sparse integer rows, over Q (integer-preserving) or F_p.

Two interchangeable backends implement the same elimination: a compiled
Cython kernel (qhseries._rankcore) and a pure-Python fallback. The backend
is selected at import time; QH_RANK_BACKEND=pure|native overrides. Both
process rows in input order and pivot on the least column of each row, so
ranks (and pivot columns) are identical whichever backend runs — the
rational and modular code paths inside each backend share that pivoting
order too.

Over Q the rows are integer vectors (callers clear denominators; scaling a
row never changes rank) and elimination is fraction-free: combined rows
stay integral and are divided by their content to keep entries small. The
native kernel works in 64/128-bit integers and raises on overflow, in
which case the arbitrary-precision pure path recomputes the block.
"""

from __future__ import annotations

import os
from math import gcd
from typing import Sequence

import numpy as np

try:
    from . import _rankcore
except ImportError:  # pure-Python install
    _rankcore = None

Rows = Sequence[tuple[Sequence[int], Sequence[int]]]

# Native rows must start within comfortable 64-bit range; larger inputs go
# straight to the pure backend.
_NATIVE_VAL_LIMIT = 2**62


def available_backends() -> tuple[str, ...]:
    return ("pure", "native") if _rankcore is not None else ("pure",)


def default_backend() -> str:
    choice = os.environ.get("QH_RANK_BACKEND", "").strip().lower()
    if choice:
        if choice not in ("pure", "native"):
            raise ValueError(f"QH_RANK_BACKEND must be 'pure' or 'native', got {choice!r}")
        if choice == "native" and _rankcore is None:
            raise ValueError("QH_RANK_BACKEND=native but the compiled kernel is unavailable")
        return choice
    return "native" if _rankcore is not None else "pure"


def _merge_eliminate(row, piv, modulus):
    """Combine `row` with pivot row `piv` to kill row's lead entry."""
    out = []
    if modulus:
        f = row[0][1]  # piv is monic
        i = j = 0
        while i < len(row) and j < len(piv):
            ci, cj = row[i][0], piv[j][0]
            if ci == cj:
                v = (row[i][1] - f * piv[j][1]) % modulus
                if v:
                    out.append((ci, v))
                i += 1
                j += 1
            elif ci < cj:
                out.append(row[i])
                i += 1
            else:
                v = (-f * piv[j][1]) % modulus
                if v:
                    out.append((cj, v))
                j += 1
        out.extend(row[i:])
        for cj, pv in piv[j:]:
            v = (-f * pv) % modulus
            if v:
                out.append((cj, v))
        return out

    a, b = row[0][1], piv[0][1]
    g = gcd(a, b)
    mr, mp = b // g, a // g
    i = j = 0
    while i < len(row) and j < len(piv):
        ci, cj = row[i][0], piv[j][0]
        if ci == cj:
            v = mr * row[i][1] - mp * piv[j][1]
            if v:
                out.append((ci, v))
            i += 1
            j += 1
        elif ci < cj:
            out.append((ci, mr * row[i][1]))
            i += 1
        else:
            out.append((cj, -mp * piv[j][1]))
            j += 1
    for ci, rv in row[i:]:
        out.append((ci, mr * rv))
    for cj, pv in piv[j:]:
        out.append((cj, -mp * pv))
    content = 0
    for _, v in out:
        content = gcd(content, v)
    if content > 1:
        out = [(c, v // content) for c, v in out]
    return out


def _rank_pure(rows: Rows, ncols: int, modulus: int) -> int:
    pivots: dict[int, list[tuple[int, int]]] = {}
    rank = 0
    for cols, vals in rows:
        if modulus:
            row = [(c, v % modulus) for c, v in zip(cols, vals) if v % modulus]
        else:
            row = [(c, v) for c, v in zip(cols, vals) if v]
        while row:
            lead = row[0][0]
            piv = pivots.get(lead)
            if piv is None:
                if modulus:
                    inv = pow(row[0][1], -1, modulus)
                    row = [(c, (v * inv) % modulus) for c, v in row]
                else:
                    content = 0
                    for _, v in row:
                        content = gcd(content, v)
                    if row[0][1] < 0:
                        content = -content
                    row = [(c, v // content) for c, v in row]
                pivots[lead] = row
                rank += 1
                break
            row = _merge_eliminate(row, piv, modulus)
    return rank


def _to_csr(rows: Rows):
    lengths = [len(cols) for cols, _ in rows]
    indptr = np.zeros(len(rows) + 1, dtype=np.int64)
    np.cumsum(lengths, out=indptr[1:])
    cols = np.empty(int(indptr[-1]), dtype=np.int32)
    vals = np.empty(int(indptr[-1]), dtype=np.int64)
    at = 0
    for rcols, rvals in rows:
        n = len(rcols)
        cols[at : at + n] = rcols
        vals[at : at + n] = rvals
        at += n
    return indptr, cols, vals


def _validate(rows: Rows, ncols: int, modulus: int) -> None:
    if modulus and not 2 <= modulus < 2**31:
        raise ValueError("modulus must satisfy 2 <= p < 2**31")
    for cols, vals in rows:
        if len(cols) != len(vals):
            raise ValueError("row columns and values differ in length")
        if any(c2 <= c1 for c1, c2 in zip(cols, cols[1:])):
            raise ValueError("row columns must be strictly increasing")
        if cols and (cols[0] < 0 or cols[-1] >= ncols):
            raise ValueError("column index out of range")


def sparse_rank(rows: Rows, ncols: int, modulus: int = 0,
                backend: str | None = None) -> int:
    """Rank of the span of `rows` (sorted sparse (cols, vals) pairs).

    modulus 0 means rank over Q of integer rows; a prime p means rank
    over F_p.
    """
    _validate(rows, ncols, modulus)
    if backend is None:
        backend = default_backend()
    if backend == "native":
        if _rankcore is None:
            raise ValueError("native backend unavailable")
        if all(abs(v) < _NATIVE_VAL_LIMIT for _, vals in rows for v in vals):
            indptr, cols, vals = _to_csr(rows)
            try:
                return _rankcore.rank_csr(indptr, cols, vals, ncols, modulus)
            except _rankcore.KernelOverflow:
                pass  # entries outgrew 64 bits: redo exactly in pure Python
        return _rank_pure(rows, ncols, modulus)
    if backend == "pure":
        return _rank_pure(rows, ncols, modulus)
    raise ValueError(f"unknown backend {backend!r}")
