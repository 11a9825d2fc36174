"""Subsystem code underlying one code-deformation step.

Given the stabilizer groups before and after a deformation, build the
gauge group whose two gauges are the two codes: the union group, its
center, the logicals it measures and prepares, the gauge directions it
fixes, and the augmented gauge group whose center is exactly the shared
stabilizer group.  The dressed distance of this subsystem code is the
fault-tolerance figure of merit for the step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import groups
from .distance import DistanceResult, css_dressed_distance, exhaustive_min_weight, is_css
from .groups import (
    center,
    centralizer,
    complement_basis,
    conjugate_partner,
    decompose,
    intersect,
    join,
)
from .pauli import GeneratingSet, PauliOperator, rref_gf2


@dataclass
class DeformationCode:
    """All derived objects for one deformation step."""

    old_stabilizers: GeneratingSet
    new_stabilizers: GeneratingSet
    gauge_union: GeneratingSet          # generated by both stabilizer groups
    gauge_union_center: GeneratingSet   # its center
    prepared: GeneratingSet             # logicals of the new code fixed by the old one
    measured: GeneratingSet             # logicals of the old code measured by the new one
    fixed_directions: GeneratingSet     # union-group directions outside the old code
    gauge_group: GeneratingSet          # union group plus conjugate partners
    stabilizers: GeneratingSet          # old & new intersection = center of gauge_group
    prep_partners: list[PauliOperator]
    meas_partners: list[PauliOperator]
    distance: Optional[DistanceResult] = None

    @property
    def n(self) -> int:
        return self.old_stabilizers.n


@dataclass
class FaultToleranceReport:
    distance_ok: bool
    distance: DistanceResult
    syndrome_map: list[np.ndarray]       # each stabilizer generator over new checks
    syndrome_map_total: bool
    gauge_fix_set: list[PauliOperator]   # per fixed direction, a certified correction
    gauge_fix_ok: bool

    def passed(self) -> bool:
        return self.distance_ok and self.syndrome_map_total and self.gauge_fix_ok


def _require_valid_stabilizers(name: str, s: GeneratingSet) -> None:
    if not s.is_abelian():
        raise ValueError(f"{name} is not abelian")
    if not s.is_independent():
        raise ValueError(f"{name} has dependent generators")


def build_deformation_code(old_stabilizers: GeneratingSet,
                           new_stabilizers: GeneratingSet) -> DeformationCode:
    """Construct the subsystem code for the step old -> new.

    Both inputs must be abelian, independent and act on the same register.
    Raises SignConflictError if their intersection carries opposite signs.
    """
    if old_stabilizers.n != new_stabilizers.n:
        raise ValueError("stabilizer groups act on different registers; embed into the union first")
    _require_valid_stabilizers("old stabilizer group", old_stabilizers)
    _require_valid_stabilizers("new stabilizer group", new_stabilizers)

    g_union = join(old_stabilizers, new_stabilizers)
    shared = intersect(old_stabilizers, new_stabilizers)  # sign conflicts surface here
    union_center = center(g_union)

    cent_old = centralizer(old_stabilizers)
    cent_new = centralizer(new_stabilizers)

    # Logicals of the new code already fixed by the old one, and vice versa.
    old_in_cent_new = intersect(old_stabilizers, cent_new, check_signs=False)
    prepared = complement_basis(shared, old_in_cent_new)
    new_in_cent_old = intersect(new_stabilizers, cent_old, check_signs=False)
    measured = complement_basis(shared, new_in_cent_old)

    fixed_directions = complement_basis(old_stabilizers, g_union)

    # Add a conjugate partner for each independent prepared/measured logical,
    # chosen inside the corresponding code's logical span and commuting with
    # the shared stabilizers and with the other targets.
    others = list(shared) + list(prepared) + list(measured)
    prep_partners: list[PauliOperator] = []
    for p in prepared:
        rest = GeneratingSet([o for o in others if not o.equal_unsigned(p)],
                             n=old_stabilizers.n)
        prep_partners.append(conjugate_partner(p, cent_new, rest))
    meas_partners: list[PauliOperator] = []
    for p in measured:
        rest = GeneratingSet([o for o in others if not o.equal_unsigned(p)],
                             n=old_stabilizers.n)
        meas_partners.append(conjugate_partner(p, cent_old, rest))

    gauge_group = join(g_union, GeneratingSet(prep_partners + meas_partners,
                                              n=old_stabilizers.n))

    code = DeformationCode(
        old_stabilizers=old_stabilizers,
        new_stabilizers=new_stabilizers,
        gauge_union=g_union,
        gauge_union_center=union_center,
        prepared=prepared,
        measured=measured,
        fixed_directions=fixed_directions,
        gauge_group=gauge_group,
        stabilizers=shared,
        prep_partners=prep_partners,
        meas_partners=meas_partners,
    )
    if not np.array_equal(center(gauge_group).basis, shared.basis):
        raise AssertionError("center of the augmented gauge group differs from the "
                             "stabilizer intersection")
    return code


def dressed_distance(code: DeformationCode, weight_cap: int) -> DistanceResult:
    """Exact minimum dressed-logical weight up to weight_cap.

    CSS inputs run as independent X- and Z-sided searches; the result is
    exact when <= weight_cap, otherwise a certified 'greater than' bound.
    The result is cached on the code object.
    """
    if weight_cap < 1:
        raise ValueError("weight_cap must be >= 1")
    if is_css(code.stabilizers) and is_css(code.gauge_group):
        res = css_dressed_distance(code.stabilizers, code.gauge_group, weight_cap)
    else:
        if code.n > 22:
            raise ValueError("non-CSS distance search is only supported for small registers")
        res = exhaustive_min_weight(code.stabilizers, code.gauge_group, weight_cap)
    code.distance = res
    return res


def stabilizer_code_distance(stabilizers: GeneratingSet, weight_cap: int) -> DistanceResult:
    """Distance of a plain stabilizer code (gauge group = stabilizer group)."""
    if is_css(stabilizers):
        return css_dressed_distance(stabilizers, stabilizers, weight_cap)
    return exhaustive_min_weight(stabilizers, stabilizers, weight_cap)


def check_fault_tolerance(code: DeformationCode, d_target: int,
                          weight_cap: Optional[int] = None) -> FaultToleranceReport:
    """Evaluate the three fault-tolerance criteria for a deformation step.

    1. the dressed distance reaches d_target;
    2. every shared stabilizer is expressible over the new checks;
    3. each fixed gauge direction has a correction inside gauge \\ stabilizer
       that commutes with every bare logical.
    """
    cap = weight_cap if weight_cap is not None else d_target + 2
    dist = code.distance
    if dist is None or not (dist.exact or dist.weight >= cap):
        dist = dressed_distance(code, cap)
    distance_ok = dist.weight >= d_target

    syndrome_map: list[np.ndarray] = []
    total = True
    for s in code.stabilizers:
        m = code.new_stabilizers.member(s)
        if m is None:
            total = False
            syndrome_map.append(np.zeros(len(code.new_stabilizers), dtype=np.uint8))
        else:
            syndrome_map.append(m.coeffs)

    bare = [p for pair in decompose(code.gauge_group).logical_pairs for p in pair]
    gauge_fix_set: list[PauliOperator] = []
    gauge_fix_ok = True
    for f in code.fixed_directions:
        try:
            fix = conjugate_partner(f, code.gauge_group,
                                    GeneratingSet(list(code.stabilizers) + bare, n=code.n))
        except ValueError:
            gauge_fix_ok = False
            continue
        in_gauge = code.gauge_group.contains_unsigned(fix)
        in_stab = code.stabilizers.contains_unsigned(fix)
        if not in_gauge or in_stab:
            gauge_fix_ok = False
        gauge_fix_set.append(fix)
    return FaultToleranceReport(
        distance_ok=distance_ok,
        distance=dist,
        syndrome_map=syndrome_map,
        syndrome_map_total=total,
        gauge_fix_set=gauge_fix_set,
        gauge_fix_ok=gauge_fix_ok,
    )


# -- named codes -------------------------------------------------------


def _steane_supports() -> list[list[int]]:
    # Hamming(7,4) parity checks on qubits 0..6 (labels 1..7 in binary).
    return [[q for q in range(7) if (q + 1) >> b & 1] for b in range(3)]


def build_named_code(name: str) -> tuple[GeneratingSet, GeneratingSet]:
    """Return (stabilizers, gauge_ops) for a named small code.

    ``steane7``: the [[7,1,3]] code, 3 X + 3 Z weight-4 stabilizers.
    ``reed_muller_15_fixed``: the [[15,1,3]] punctured Reed-Muller code in
    the gauge where its six weight-4 Z gauge operators are fixed; qubits
    are labelled 1..15 by their nonzero F_2^4 coordinate vectors.
    """
    if name == "steane7":
        n = 7
        gens = []
        for sup in _steane_supports():
            gens.append(PauliOperator.from_support(n, sup, "X"))
        for sup in _steane_supports():
            gens.append(PauliOperator.from_support(n, sup, "Z"))
        return GeneratingSet(gens, n=n), GeneratingSet([], n=n)
    if name == "reed_muller_15_fixed":
        n = 15
        coords = lambda b: [v - 1 for v in range(1, 16) if v >> b & 1]
        x_gens = [PauliOperator.from_support(n, coords(b), "X") for b in range(4)]
        z_wt8 = [PauliOperator.from_support(n, coords(b), "Z") for b in range(4)]
        z_gauge = []
        for a in range(4):
            for b in range(a + 1, 4):
                sup = [v - 1 for v in range(1, 16) if (v >> a & 1) and (v >> b & 1)]
                z_gauge.append(PauliOperator.from_support(n, sup, "Z"))
        stabs = GeneratingSet(x_gens + z_wt8 + z_gauge, n=n)
        return stabs, GeneratingSet(z_gauge, n=n)
    raise ValueError(f"unknown code name {name!r}")


def steane_to_reed_muller_step(scheme: str) -> tuple[GeneratingSet, GeneratingSet]:
    """(old, new) stabilizer groups for Steane -> Reed-Muller conversion.

    ``anderson``: the data block carries the Steane code and the eight new
    qubits hold an encoded entangled ancilla whose joint state makes the
    register a Reed-Muller code state with gauge operators fixed.
    ``colladay``: the eight new qubits start in |0>, which removes all
    X-type structure from the shared stabilizer group.
    """
    n = 15
    steane, _ = build_named_code("steane7")
    rm_fixed, _ = build_named_code("reed_muller_15_fixed")

    def embed(p: PauliOperator, offset: int) -> PauliOperator:
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        x[offset:offset + 7] = p.x_bits
        z[offset:offset + 7] = p.z_bits
        return PauliOperator(x, z, p.phase)

    # data Steane block on qubits 1..7 (labels with v4 = 0)
    old_gens = [embed(g, 0) for g in steane]
    if scheme == "colladay":
        for q in range(7, 15):
            old_gens.append(PauliOperator.single(n, q, "Z"))
    elif scheme == "anderson":
        # ancilla Steane block on labels 9..15 (v4 = 1, v != 8), plus the
        # GHZ-style stabilizers tying it to qubit 8: Zbar Z8 and Xbar X8.
        anc = [q + 8 for q in range(7)]  # qubit indices 8..14 hold labels 9..15
        for g in steane:
            x = np.zeros(n, dtype=np.uint8)
            z = np.zeros(n, dtype=np.uint8)
            x[anc] = g.x_bits
            z[anc] = g.z_bits
            old_gens.append(PauliOperator(x, z, g.phase))
        old_gens.append(PauliOperator.from_support(n, anc + [7], "Z"))
        old_gens.append(PauliOperator.from_support(n, anc + [7], "X"))
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    old = GeneratingSet(old_gens, n=n)
    return old, rm_fixed
