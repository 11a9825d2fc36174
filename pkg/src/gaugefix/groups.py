"""Group-theoretic derived objects over GF(2).

Centralizers, centers and subspace intersections of Pauli groups, plus
conjugate-partner selection and the full center / gauge-pair / logical-pair
decomposition of a (generally non-abelian) Pauli subgroup.

All subspace computations run on unsigned symplectic vectors; signs are
recomputed afterwards by expressing results over the signed source sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .pauli import (
    DimensionMismatchError,
    GeneratingSet,
    Membership,
    PauliOperator,
    SignConflictError,
    nullspace_gf2,
    rref_gf2,
    solve_gf2,
    symplectic_product,
)


def _pauli_from_row(row: np.ndarray) -> PauliOperator:
    n = row.shape[0] // 2
    return PauliOperator(row[:n], row[n:], 0)


def _commutation_matrix(gens: GeneratingSet) -> np.ndarray:
    """Rows whose GF(2) kernel is the centralizer: [z | x] per generator."""
    n = gens.n
    m = gens.mat
    return np.concatenate([m[:, n:], m[:, :n]], axis=1)


def centralizer(group: GeneratingSet) -> GeneratingSet:
    """Basis of all unsigned Paulis commuting with every generator.

    Kernel of the symplectic-product map; 2n - rank(group) generators.
    """
    kernel = nullspace_gf2(_commutation_matrix(group))
    # Re-reduce for the deterministic leftmost-pivot basis.
    rref, _, _ = rref_gf2(kernel) if kernel.size else (kernel, None, [])
    gens = [_pauli_from_row(r) for r in rref]
    return GeneratingSet(gens, n=group.n)


def intersect(a: GeneratingSet, b: GeneratingSet,
              check_signs: bool = True) -> GeneratingSet:
    """Basis of span(a) & span(b), re-signed by expression in ``a``.

    With check_signs, raises SignConflictError when a common unsigned word
    carries opposite signs in the two groups (incompatible stabilizer sign
    conventions); pass check_signs=False when ``b`` is an unsigned span
    such as a centralizer.
    """
    if a.n != b.n:
        raise DimensionMismatchError("qubit counts differ")
    n2 = 2 * a.n
    ra = a.basis
    rb = b.basis
    if ra.shape[0] == 0 or rb.shape[0] == 0:
        return GeneratingSet([], n=a.n)
    # Zassenhaus: rows [A|A] and [B|0]; rows of the echelon form whose left
    # half is zero have right half in span(A) & span(B).
    top = np.concatenate([ra, ra], axis=1)
    bot = np.concatenate([rb, np.zeros_like(rb)], axis=1)
    stacked = np.concatenate([top, bot], axis=0)
    rref, _, _ = rref_gf2(stacked)
    left_zero = ~rref[:, :n2].any(axis=1)
    inter_rows = rref[left_zero][:, n2:]
    inter_rows = inter_rows[inter_rows.any(axis=1)]
    if inter_rows.size == 0:
        return GeneratingSet([], n=a.n)
    rref_i, _, _ = rref_gf2(inter_rows)
    out = []
    for row in rref_i:
        p = _pauli_from_row(row)
        ma = a.member(p)
        assert ma is not None
        pa = a.word_product(ma.coeffs)
        if check_signs:
            mb = b.member(p)
            assert mb is not None
            pb = b.word_product(mb.coeffs)
            if pa.phase != pb.phase:
                raise SignConflictError(
                    f"word {p.to_string()} carries opposite signs in the two groups")
        out.append(pa)
    return GeneratingSet(out, n=a.n)


def center(group: GeneratingSet) -> GeneratingSet:
    """Z(G) = C(G) & G, elements re-signed by their expression in G."""
    cent = centralizer(group)
    if len(group) == 0:
        return GeneratingSet([], n=group.n)
    # Unsigned subspace intersection, then signs from the group itself.
    n2 = 2 * group.n
    ra, rb = cent.basis, group.basis
    if ra.shape[0] == 0 or rb.shape[0] == 0:
        return GeneratingSet([], n=group.n)
    top = np.concatenate([ra, ra], axis=1)
    bot = np.concatenate([rb, np.zeros_like(rb)], axis=1)
    rref, _, _ = rref_gf2(np.concatenate([top, bot], axis=0))
    left_zero = ~rref[:, :n2].any(axis=1)
    rows = rref[left_zero][:, n2:]
    rows = rows[rows.any(axis=1)]
    if rows.size == 0:
        return GeneratingSet([], n=group.n)
    rows, _, _ = rref_gf2(rows)
    out = []
    for row in rows:
        m = group.member(_pauli_from_row(row))
        assert m is not None
        out.append(group.word_product(m.coeffs))
    return GeneratingSet(out, n=group.n)


def join(a: GeneratingSet, b: GeneratingSet) -> GeneratingSet:
    """Reduced basis of <a, b>."""
    return a.union(b).reduce()


def complement_basis(sub: GeneratingSet, within: GeneratingSet) -> GeneratingSet:
    """Generators extending span(sub) to span(within).

    Deterministic: scans the reduced basis of ``within`` in order and keeps
    rows that enlarge the span.  Signs follow the kept ``within`` words.
    """
    if sub.n != within.n:
        raise DimensionMismatchError("qubit counts differ")
    acc = [row for row in sub.basis]
    out: list[PauliOperator] = []
    for g in within.reduce():
        cand = acc + [g.symplectic()]
        r = rref_gf2(np.stack(cand))[0].shape[0] if cand else 0
        if r > len(acc):
            acc.append(g.symplectic())
            out.append(g)
    return GeneratingSet(out, n=sub.n)


def conjugate_partner(target: PauliOperator, within: GeneratingSet,
                      commuting_with: Optional[GeneratingSet] = None) -> PauliOperator:
    """Element of span(within) anticommuting with target, commuting with the rest.

    Solves a GF(2) linear system over the coefficients of ``within``'s
    reduced basis; the returned choice is the deterministic lowest-index
    solution (free variables zeroed).
    """
    if target.n != within.n:
        raise DimensionMismatchError("qubit counts differ")
    basis = within.basis
    k = basis.shape[0]
    if k == 0:
        raise ValueError("no conjugate partner: empty span")
    tgt = target.symplectic()
    rows = [np.array([symplectic_product(basis[j], tgt) for j in range(k)], dtype=np.uint8)]
    rhs = [1]
    if commuting_with is not None:
        for s in commuting_with:
            rows.append(np.array([symplectic_product(basis[j], s.symplectic())
                                  for j in range(k)], dtype=np.uint8))
            rhs.append(0)
    aug = np.concatenate([np.stack(rows), np.array(rhs, dtype=np.uint8)[:, None]], axis=1)
    rref, _, pivots = rref_gf2(aug)
    sol = np.zeros(k, dtype=np.uint8)
    for i, c in enumerate(pivots):
        if c == k:
            raise ValueError("no conjugate partner satisfies the constraints")
        sol[c] = rref[i, k]
    row = (sol @ basis) % 2
    return _pauli_from_row(row.astype(np.uint8))


@dataclass
class GroupDecomposition:
    """Center, gauge pairs and logical pairs of a Pauli subgroup."""

    group: GeneratingSet
    center: GeneratingSet
    gauge_pairs: list[tuple[PauliOperator, PauliOperator]]
    logical_pairs: list[tuple[PauliOperator, PauliOperator]]

    def counts_consistent(self) -> bool:
        n = self.group.n
        return n == self.center.rank + len(self.gauge_pairs) + len(self.logical_pairs)


def _symplectic_pairs(rows: np.ndarray) -> tuple[list[tuple[np.ndarray, np.ndarray]], np.ndarray]:
    """Symplectic Gram-Schmidt: anticommuting pairs plus leftover central rows."""
    work = [r.copy() for r in rows]
    pairs = []
    central = []
    while work:
        a = work.pop(0)
        mate = None
        for i, b in enumerate(work):
            if symplectic_product(a, b):
                mate = i
                break
        if mate is None:
            central.append(a)
            continue
        b = work.pop(mate)
        cleaned = []
        for c in work:
            if symplectic_product(c, b):
                c = c ^ a
            if symplectic_product(c, a):
                c = c ^ b
            cleaned.append(c)
        work = cleaned
        pairs.append((a, b))
    central_arr = (np.stack(central) if central
                   else np.zeros((0, rows.shape[1] if rows.size else 0), dtype=np.uint8))
    return pairs, central_arr


def decompose(group: GeneratingSet) -> GroupDecomposition:
    """Split a group into its center, gauge pairs and logical pairs.

    Gauge pairs span group / center; logical pairs span the quotient
    C(group) / <group, center>.  Both use unsigned representatives.
    """
    cen = center(group)
    cen_rows = cen.basis
    pairs, leftover = _symplectic_pairs(group.basis)
    # leftover rows of the group are central by construction
    gauge_pairs = [( _pauli_from_row(a), _pauli_from_row(b)) for a, b in pairs]

    cent = centralizer(group)
    # bare logicals: extend <center> to C(G) and pair the extension
    known = [r for r in cen_rows]
    log_rows = []
    for row in cent.basis:
        cand = known + log_rows + [row]
        if rref_gf2(np.stack(cand))[0].shape[0] > len(known) + len(log_rows):
            log_rows.append(row)
    log_pairs_raw, extra_central = _symplectic_pairs(np.stack(log_rows) if log_rows
                                                     else np.zeros((0, 2 * group.n), dtype=np.uint8))
    logical_pairs = [(_pauli_from_row(a), _pauli_from_row(b)) for a, b in log_pairs_raw]
    assert extra_central.shape[0] == 0, "centralizer quotient must pair up symplectically"
    return GroupDecomposition(group=group, center=cen,
                              gauge_pairs=gauge_pairs, logical_pairs=logical_pairs)
