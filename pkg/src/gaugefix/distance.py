"""Minimum-weight dressed-logical search.

The production engine enumerates codewords of the relevant GF(2) kernel by
increasing combination size over a systematic (information-set) basis: a
codeword of weight w restricted to the pivot columns has weight at most w,
so finishing level j certifies that no codeword of weight <= j was missed.
For CSS inputs the X- and Z-sided searches run independently, which is
exact for CSS gauge groups.

``exhaustive_min_weight`` is an independent brute-force oracle over all
Pauli operators of bounded weight; it is deliberately kept free of the
information-set machinery.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .pauli import GeneratingSet, PauliOperator, nullspace_gf2, rref_gf2


@dataclass(frozen=True)
class DistanceResult:
    """Either an exact distance (exact=True) or a certified bound d > weight."""

    weight: int
    exact: bool

    def __str__(self) -> str:
        return str(self.weight) if self.exact else f">{self.weight}"


def _pack_rows(rows: np.ndarray) -> list[int]:
    out = []
    for r in rows:
        v = 0
        for i in np.flatnonzero(r):
            v |= 1 << int(i)
        out.append(v)
    return out


class _SpanTester:
    """Fast 'is this packed word inside the row span' tester."""

    def __init__(self, rows: np.ndarray):
        if rows.size:
            rref, _, pivots = rref_gf2(rows)
            self.rows = _pack_rows(rref)
            self.pivots = pivots
        else:
            self.rows = []
            self.pivots = []

    def contains(self, word: int) -> bool:
        for row, piv in zip(self.rows, self.pivots):
            if word >> piv & 1:
                word ^= row
        return word == 0


def min_weight_in_kernel(constraints: np.ndarray, exclude_span: np.ndarray,
                         n: int, cap: int) -> Optional[DistanceResult]:
    """Minimum Hamming weight over ker(constraints) minus rowspan(exclude_span).

    Returns None when the kernel contains nothing outside the excluded span
    (no logical in this sector); otherwise an exact weight <= cap or the
    certified statement weight > cap.
    """
    if constraints.size:
        kernel = nullspace_gf2(constraints)
    else:
        kernel = np.eye(n, dtype=np.uint8)
    if kernel.size == 0:
        return None
    kernel, _, _ = rref_gf2(kernel)
    k = kernel.shape[0]
    tester = _SpanTester(exclude_span)
    rows = _pack_rows(kernel)
    # quick emptiness check: sector has logicals iff kernel exceeds the span
    joint = np.concatenate([exclude_span, kernel], axis=0) if exclude_span.size else kernel
    if rref_gf2(joint)[0].shape[0] == (rref_gf2(exclude_span)[0].shape[0] if exclude_span.size else 0):
        return None

    best = n + 1
    level = 1
    while level <= min(cap, best - 1):
        for combo in combinations(range(k), level):
            word = 0
            for i in combo:
                word ^= rows[i]
            w = word.bit_count()
            if w < best and w <= cap and not tester.contains(word):
                best = w
        level += 1
    if best <= cap:
        return DistanceResult(best, exact=True)
    return DistanceResult(cap, exact=False)


def _split_css(basis: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Split a reduced CSS basis into (X-type rows' x-parts, Z-type rows' z-parts)."""
    x_rows = []
    z_rows = []
    for row in basis:
        has_x = row[:n].any()
        has_z = row[n:].any()
        if has_x and has_z:
            raise ValueError("basis contains a mixed-type row; not CSS")
        if has_x:
            x_rows.append(row[:n])
        elif has_z:
            z_rows.append(row[n:])
    xs = np.stack(x_rows) if x_rows else np.zeros((0, n), dtype=np.uint8)
    zs = np.stack(z_rows) if z_rows else np.zeros((0, n), dtype=np.uint8)
    return xs, zs


def is_css(gens: GeneratingSet) -> bool:
    n = gens.n
    m = gens.mat
    return not np.any(m[:, :n].any(axis=1) & m[:, n:].any(axis=1))


def css_dressed_distance(stabilizers: GeneratingSet, gauge_group: GeneratingSet,
                         cap: int) -> DistanceResult:
    """Min weight over C(S) \\ G for CSS S and G, split by sector."""
    n = stabilizers.n
    s_x, s_z = _split_css(stabilizers.basis, n)
    g_x, g_z = _split_css(gauge_group.basis, n)
    # Z-sided logicals: commute with X-type stabilizers, outside Z gauge span.
    res_z = min_weight_in_kernel(s_x, g_z, n, cap)
    # X-sided logicals: commute with Z-type stabilizers, outside X gauge span.
    res_x = min_weight_in_kernel(s_z, g_x, n, cap)
    results = [r for r in (res_z, res_x) if r is not None]
    if not results:
        raise ValueError("code has no dressed logical operators")
    exacts = [r for r in results if r.exact]
    if exacts:
        return DistanceResult(min(r.weight for r in exacts), exact=True)
    return DistanceResult(cap, exact=False)


def _letter_rows(w: int, n: int, support: Sequence[int]) -> np.ndarray:
    """All 3^w - but lazily built - symplectic rows for one support."""
    combos = np.indices((3,) * w).reshape(w, -1).T  # rows of trits: 0=X,1=Y,2=Z
    rows = np.zeros((combos.shape[0], 2 * n), dtype=np.uint8)
    for j, q in enumerate(support):
        t = combos[:, j]
        rows[t != 2, q] = 1          # X component for X and Y
        rows[t != 0, n + q] = 1      # Z component for Z and Y
    return rows


def exhaustive_min_weight(stabilizers: GeneratingSet, gauge_group: GeneratingSet,
                          cap: int) -> DistanceResult:
    """Brute-force oracle: scan every Pauli of weight 1..cap.

    Checks commutation with all stabilizer generators directly and span
    exclusion against the gauge group.  Only sensible for small n.
    """
    n = stabilizers.n
    m = stabilizers.mat
    comm = np.concatenate([m[:, n:], m[:, :n]], axis=1)  # anticommutation tester
    tester = _SpanTester(gauge_group.basis)
    for w in range(1, cap + 1):
        for support in combinations(range(n), w):
            rows = _letter_rows(w, n, support)
            if comm.size:
                bad = (rows @ comm.T) % 2
                ok = ~bad.any(axis=1)
            else:
                ok = np.ones(rows.shape[0], dtype=bool)
            for row in rows[ok]:
                word = 0
                for i in np.flatnonzero(row):
                    word |= 1 << int(i)
                if not tester.contains(word):
                    return DistanceResult(w, exact=True)
    return DistanceResult(cap, exact=False)
