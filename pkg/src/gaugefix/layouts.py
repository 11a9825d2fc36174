"""Surface-code patches and deformation-protocol layouts on a shared grid.

Qubits sit on integer grid vertices (row, col); a cell at (r+1/2, c+1/2)
is written as the pair of its top-left vertex (r, c).  The checkerboard
colour of a cell is X when (r + c + parity) is even, Z otherwise, and
weight-2 boundary checks continue the checkerboard along each boundary,
keeping only cells whose colour matches the boundary label.  A patch is
described by its rectangle and the label (X or Z) of each of its four
sides; sides may share a label, which yields corner patches with fewer
boundary segments and hence fewer (or zero) logical qubits.

Layouts are value objects over a protocol-wide register: the union of all
patches of all steps of a protocol.  A layout's stabilizer group includes
the plaquettes of its patches plus single-qubit fixed states for register
qubits outside any patch.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .pauli import GeneratingSet, PauliOperator

Coord = tuple[int, int]


@dataclass(frozen=True)
class Plaquette:
    kind: str          # "X" or "Z"
    qubits: tuple[Coord, ...]
    cell: Coord        # top-left vertex of the defining cell

    @property
    def weight(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True)
class FixedQubit:
    basis: str         # "X" or "Z": qubit held in |+> or |0>
    qubit: Coord


@dataclass(frozen=True)
class LogicalRep:
    name: str
    kind: str          # "X" or "Z"
    qubits: tuple[Coord, ...]


@dataclass(frozen=True)
class Layout:
    name: str
    grid: tuple[Coord, ...]                 # active patch qubits, row-major
    plaquettes: tuple[Plaquette, ...]
    boundaries: tuple[tuple[str, tuple[Coord, ...]], ...]  # (label, vertices)
    logical_reps: tuple[LogicalRep, ...]
    fixed_states: tuple[FixedQubit, ...] = ()

    def qubit_set(self) -> set[Coord]:
        return set(self.grid) | {f.qubit for f in self.fixed_states}

    def stabilizer_group(self, register: Sequence[Coord]) -> GeneratingSet:
        """Plaquettes plus fixed single-qubit states over the given register."""
        index = {q: i for i, q in enumerate(register)}
        n = len(register)
        gens = []
        for p in self.plaquettes:
            gens.append(PauliOperator.from_support(n, [index[q] for q in p.qubits], p.kind))
        for f in self.fixed_states:
            gens.append(PauliOperator.single(n, index[f.qubit], f.basis))
        return GeneratingSet(gens, n=n)

    def logical(self, name: str, register: Sequence[Coord]) -> PauliOperator:
        index = {q: i for i, q in enumerate(register)}
        for rep in self.logical_reps:
            if rep.name == name:
                return PauliOperator.from_support(len(register),
                                                  [index[q] for q in rep.qubits], rep.kind)
        raise KeyError(f"no logical named {name!r}")

    def serialize(self) -> str:
        """Versioned, byte-stable JSON text."""
        doc = {
            "format": "gaugefix-layout/1",
            "name": self.name,
            "grid": [list(q) for q in self.grid],
            "plaquettes": [
                {"kind": p.kind, "cell": list(p.cell), "qubits": [list(q) for q in p.qubits]}
                for p in self.plaquettes
            ],
            "boundaries": [
                {"label": label, "vertices": [list(v) for v in verts]}
                for label, verts in self.boundaries
            ],
            "logicals": [
                {"name": r.name, "kind": r.kind, "qubits": [list(q) for q in r.qubits]}
                for r in self.logical_reps
            ],
            "fixed": [{"basis": f.basis, "qubit": list(f.qubit)} for f in self.fixed_states],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


@dataclass(frozen=True)
class ProtocolStep:
    before: Layout
    after: Layout
    label: str

    def register(self) -> tuple[Coord, ...]:
        qs = self.before.qubit_set() | self.after.qubit_set()
        return tuple(sorted(qs))

    def generating_sets(self, register: Optional[Sequence[Coord]] = None
                        ) -> tuple[GeneratingSet, GeneratingSet]:
        reg = tuple(register) if register is not None else self.register()
        return (self.before.stabilizer_group(reg), self.after.stabilizer_group(reg))


# -- patch construction ------------------------------------------------


@dataclass(frozen=True)
class PatchSpec:
    """A rectangle of qubits with boundary labels north/east/south/west."""

    rows: tuple[int, int]   # inclusive range (r0, r1)
    cols: tuple[int, int]
    north: str = "X"
    east: str = "Z"
    south: str = "X"
    west: str = "Z"

    def qubits(self) -> list[Coord]:
        return [(r, c) for r in range(self.rows[0], self.rows[1] + 1)
                for c in range(self.cols[0], self.cols[1] + 1)]


def _cell_colour(cell: Coord, parity: int) -> str:
    return "X" if (cell[0] + cell[1] + parity) % 2 == 0 else "Z"


def region_code(name: str, qubits: Iterable[Coord], side_labels, parity: int = 0,
                logicals: Sequence[LogicalRep] = (), holes: Iterable[Coord] = (),
                ) -> Layout:
    """Surface code on an arbitrary grid region.

    ``side_labels(edge_cell, direction)`` maps a boundary cell to "X", "Z"
    or None (no check).  Interior cells (all four vertices present) carry
    their checkerboard colour; boundary cells with exactly two adjacent
    vertices forming an edge carry a weight-2 check when their colour
    matches the side label.  Cells listed in ``holes`` are skipped.
    """
    qs = set(qubits)
    holeset = set(holes)
    cells: dict[Coord, list[Coord]] = {}
    for (r, c) in qs:
        for cell in ((r - 1, c - 1), (r - 1, c), (r, c - 1), (r, c)):
            cells.setdefault(cell, []).append((r, c))
    plaquettes = []
    boundary_cells: dict[str, list[Coord]] = {}
    for cell, members in sorted(cells.items()):
        if cell in holeset:
            continue
        colour = _cell_colour(cell, parity)
        if len(members) == 4:
            plaquettes.append(Plaquette(colour, tuple(sorted(members)), cell))
        elif len(members) == 3:
            # inner corner of a staircase region: triangular check
            plaquettes.append(Plaquette(colour, tuple(sorted(members)), cell))
        elif len(members) == 2:
            (r1, c1), (r2, c2) = sorted(members)
            if abs(r1 - r2) + abs(c1 - c2) != 1:
                continue  # diagonal pair: outer corner cell, no check
            if r1 == r2:   # horizontal pair: region lies south (N boundary) or north (S)
                direction = "N" if cell[0] < r1 else "S"
            else:
                direction = "W" if cell[1] < c1 else "E"
            label = side_labels(cell, direction)
            if label == colour:
                plaquettes.append(Plaquette(colour, tuple(sorted(members)), cell))
            if label is not None:
                boundary_cells.setdefault(label, []).append(cell)
    grid = tuple(sorted(qs))
    boundaries = tuple((label, tuple(sorted(set(v for v in verts))))
                       for label, verts in sorted(boundary_cells.items()))
    return Layout(name=name, grid=grid, plaquettes=tuple(plaquettes),
                  boundaries=boundaries, logical_reps=tuple(logicals))


def patch_layout(name: str, spec: PatchSpec, parity: int = 0,
                 logicals: Sequence[LogicalRep] = (), holes: Iterable[Coord] = ()) -> Layout:
    """Surface code on a single rectangle with per-side boundary labels."""

    def side_labels(cell: Coord, direction: str) -> Optional[str]:
        return {"N": spec.north, "E": spec.east, "S": spec.south, "W": spec.west}[direction]

    return region_code(name, spec.qubits(), side_labels, parity=parity,
                       logicals=logicals, holes=holes)


def multi_patch_layout(name: str, specs: Sequence[PatchSpec], parity: int = 0,
                       logicals: Sequence[LogicalRep] = (),
                       merged: Sequence[Sequence[int]] = (),
                       holes: Iterable[Coord] = ()) -> Layout:
    """Several patches on one grid; groups listed in ``merged`` are knitted.

    Patches in one merged group become a single region code; the side label
    at a boundary cell is taken from whichever patch owns the cell's edge
    qubits, with interfaces between group members becoming interior cells.
    """
    merged_groups = [set(g) for g in merged]
    grouped: list[list[int]] = [sorted(g) for g in merged_groups]
    solo = [i for i in range(len(specs)) if not any(i in g for g in merged_groups)]
    all_layouts: list[Layout] = []
    for group in grouped + [[i] for i in solo]:
        qubits: set[Coord] = set()
        for i in group:
            qubits |= set(specs[i].qubits())

        def side_labels(cell: Coord, direction: str, group=group) -> Optional[str]:
            # A boundary cell may straddle two member rectangles; if any of
            # them labels this side with the cell's colour, the check exists.
            claims = []
            for i in group:
                s = specs[i]
                r0, r1 = s.rows
                c0, c1 = s.cols
                if direction == "N" and cell[0] == r0 - 1 and c0 - 1 <= cell[1] <= c1:
                    claims.append(s.north)
                elif direction == "S" and cell[0] == r1 and c0 - 1 <= cell[1] <= c1:
                    claims.append(s.south)
                elif direction == "W" and cell[1] == c0 - 1 and r0 - 1 <= cell[0] <= r1:
                    claims.append(s.west)
                elif direction == "E" and cell[1] == c1 and r0 - 1 <= cell[0] <= r1:
                    claims.append(s.east)
            if not claims:
                return None
            colour = _cell_colour(cell, parity)
            return colour if colour in claims else claims[0]

        all_layouts.append(region_code(f"{name}", qubits, side_labels,
                                       parity=parity, holes=holes))
    grid = tuple(sorted(set(q for lay in all_layouts for q in lay.grid)))
    plaq = tuple(p for lay in all_layouts for p in lay.plaquettes)
    bounds = tuple(b for lay in all_layouts for b in lay.boundaries)
    return Layout(name=name, grid=grid, plaquettes=plaq, boundaries=bounds,
                  logical_reps=tuple(logicals))


# -- standard patches ---------------------------------------------------


def rotated_patch(d: int, origin: Coord = (0, 0), orientation: str = "x_ns",
                  parity: int = 0, name: Optional[str] = None) -> Layout:
    """Distance-d rotated surface code patch.

    ``x_ns``: X-type boundaries north and south (vertical logical X,
    horizontal logical Z); ``x_ew``: the transposed orientation.
    Weight-2 checks alternate along each boundary following the global
    checkerboard parity.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    r0, c0 = origin
    row = tuple((r0, c0 + j) for j in range(d))
    col = tuple((r0 + i, c0) for i in range(d))
    if orientation == "x_ns":
        spec = PatchSpec(rows=(r0, r0 + d - 1), cols=(c0, c0 + d - 1),
                         north="X", south="X", east="Z", west="Z")
        logicals = [LogicalRep("Z", "Z", row), LogicalRep("X", "X", col)]
    elif orientation == "x_ew":
        spec = PatchSpec(rows=(r0, r0 + d - 1), cols=(c0, c0 + d - 1),
                         north="Z", south="Z", east="X", west="X")
        logicals = [LogicalRep("Z", "Z", col), LogicalRep("X", "X", row)]
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return patch_layout(name or f"rotated_d{d}_{origin[0]}_{origin[1]}", spec,
                        parity=parity, logicals=logicals)
