"""Exact Pauli-operator arithmetic and GF(2) symplectic linear algebra.

Operators are stored in ZX form, ``i^phase * X(x) Z(z)``, with ``x`` and
``z`` GF(2) vectors over ``n`` qubits.  The sign exposed at the API
boundary is always +/-1; imaginary phases only arise transiently inside
products of non-Hermitian words and are rejected when reported.

Symplectic vectors use column order X_0..X_{n-1}, Z_0..Z_{n-1}; Gaussian
elimination always pivots on the leftmost unused column, so every reduced
basis is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np


class DimensionMismatchError(ValueError):
    """Two operators or sets defined on different qubit counts."""


class SignConflictError(ValueError):
    """An unsigned word lies in two groups whose signs disagree."""


def _as_bitvec(v, n: int) -> np.ndarray:
    a = np.asarray(v, dtype=np.uint8) & 1
    if a.shape != (n,):
        raise ValueError(f"expected bit vector of length {n}, got shape {a.shape}")
    return a


class PauliOperator:
    """A signed n-qubit Pauli operator, immutable after construction."""

    __slots__ = ("n", "x_bits", "z_bits", "phase")

    def __init__(self, x_bits, z_bits, phase: int = 0):
        x = np.asarray(x_bits, dtype=np.uint8) & 1
        z = np.asarray(z_bits, dtype=np.uint8) & 1
        if x.shape != z.shape or x.ndim != 1:
            raise DimensionMismatchError("x_bits and z_bits must be equal-length vectors")
        x.setflags(write=False)
        z.setflags(write=False)
        object.__setattr__(self, "n", int(x.shape[0]))
        object.__setattr__(self, "x_bits", x)
        object.__setattr__(self, "z_bits", z)
        object.__setattr__(self, "phase", int(phase) % 4)

    def __setattr__(self, *_):
        raise AttributeError("PauliOperator is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8), 0)

    @classmethod
    def single(cls, n: int, qubit: int, kind: str) -> "PauliOperator":
        """One-qubit X, Y or Z embedded in an n-qubit register."""
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        phase = 0
        if kind in ("X", "Y"):
            x[qubit] = 1
        if kind in ("Z", "Y"):
            z[qubit] = 1
        if kind == "Y":
            phase = 1  # Y = i XZ
        if kind not in ("X", "Y", "Z"):
            raise ValueError(f"kind must be X, Y or Z, got {kind!r}")
        return cls(x, z, phase)

    @classmethod
    def from_support(cls, n: int, qubits: Iterable[int], kind: str,
                     sign: int = +1) -> "PauliOperator":
        """X(s), Y(s) or Z(s) on the given support."""
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        qs = list(qubits)
        phase = 0
        if kind in ("X", "Y"):
            x[qs] = 1
        if kind in ("Z", "Y"):
            z[qs] = 1
        if kind == "Y":
            phase = len(qs) % 4
        if sign == -1:
            phase = (phase + 2) % 4
        elif sign != +1:
            raise ValueError("sign must be +1 or -1")
        return cls(x, z, phase)

    @classmethod
    def from_string(cls, s: str) -> "PauliOperator":
        """Parse '[+-]?[IXYZ]+' (e.g. '-XIZZY')."""
        s = s.strip()
        sign = +1
        if s and s[0] in "+-":
            sign = -1 if s[0] == "-" else +1
            s = s[1:]
        if not s or any(c not in "IXYZ" for c in s):
            raise ValueError(f"malformed Pauli string {s!r}")
        n = len(s)
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        n_y = 0
        for i, c in enumerate(s):
            if c in "XY":
                x[i] = 1
            if c in "ZY":
                z[i] = 1
            if c == "Y":
                n_y += 1
        phase = (n_y + (2 if sign == -1 else 0)) % 4
        return cls(x, z, phase)

    # -- views ---------------------------------------------------------

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.x_bits | self.z_bits))

    @property
    def sign(self) -> int:
        """+1 or -1; raises for non-Hermitian words (residual i phase)."""
        n_y = int(np.count_nonzero(self.x_bits & self.z_bits))
        residual = (self.phase - n_y) % 4
        if residual == 0:
            return +1
        if residual == 2:
            return -1
        raise ValueError("operator carries an imaginary phase; not a signed Pauli")

    def to_string(self) -> str:
        letters = np.full(self.n, "I", dtype="<U1")
        letters[self.x_bits == 1] = "X"
        letters[self.z_bits == 1] = "Z"
        letters[(self.x_bits & self.z_bits) == 1] = "Y"
        body = "".join(letters)
        return ("-" if self.sign == -1 else "") + body

    def symplectic(self) -> np.ndarray:
        """Row vector [x | z] of length 2n."""
        return np.concatenate([self.x_bits, self.z_bits])

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.x_bits | self.z_bits)

    # -- algebra --------------------------------------------------------

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def inverse(self) -> "PauliOperator":
        # P^-1 = P^dagger; for i^p X Z the dagger phase is -p + 2*(x.z)
        xz = int(np.count_nonzero(self.x_bits & self.z_bits))
        return PauliOperator(self.x_bits, self.z_bits, (-self.phase + 2 * xz) % 4)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return (self.n == other.n and self.phase == other.phase
                and np.array_equal(self.x_bits, other.x_bits)
                and np.array_equal(self.z_bits, other.z_bits))

    def equal_unsigned(self, other: "PauliOperator") -> bool:
        return (self.n == other.n
                and np.array_equal(self.x_bits, other.x_bits)
                and np.array_equal(self.z_bits, other.z_bits))

    def __hash__(self):
        return hash((self.n, self.phase, self.x_bits.tobytes(), self.z_bits.tobytes()))

    def __repr__(self):
        return f"PauliOperator({self.to_string()!r})"


def _check_same_n(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"operators act on {a.n} and {b.n} qubits")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Product a*b with ZX-convention phase bookkeeping.

    phase(a*b) = phase(a) + phase(b) + 2 * (z_a . x_b)  (mod 4).
    """
    _check_same_n(a, b)
    cross = int(np.count_nonzero(a.z_bits & b.x_bits))
    return PauliOperator(a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits,
                         (a.phase + b.phase + 2 * cross) % 4)


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    """True iff x_a.z_b + z_a.x_b = 0 over GF(2)."""
    _check_same_n(a, b)
    s = int(np.count_nonzero(a.x_bits & b.z_bits)) + int(np.count_nonzero(a.z_bits & b.x_bits))
    return s % 2 == 0


def symplectic_product(u: np.ndarray, v: np.ndarray) -> int:
    """Symplectic form of two [x|z] rows; 0 = commute, 1 = anticommute."""
    n = u.shape[0] // 2
    s = int(np.count_nonzero(u[:n] & v[n:])) + int(np.count_nonzero(u[n:] & v[:n]))
    return s % 2


# -- GF(2) elimination helpers -----------------------------------------


def rref_gf2(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(2), leftmost-column pivoting.

    Returns (rref_rows, transform, pivot_columns) where
    ``rref_rows = transform @ mat  (mod 2)`` and zero rows are dropped.
    """
    m = (np.asarray(mat, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape
    t = np.eye(rows, dtype=np.uint8)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.flatnonzero(m[r:, c]) + r
        if hits.size == 0:
            continue
        p = int(hits[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
            t[[r, p]] = t[[p, r]]
        others = np.flatnonzero(m[:, c])
        for i in others:
            if i != r:
                m[i, :] ^= m[r, :]
                t[i, :] ^= t[r, :]
        pivots.append(c)
        r += 1
    return m[:r], t[:r], pivots


def rank_gf2(mat: np.ndarray) -> int:
    if mat.size == 0:
        return 0
    return rref_gf2(mat)[0].shape[0]


def solve_gf2(basis_rref: np.ndarray, pivots: Sequence[int],
              v: np.ndarray) -> Optional[np.ndarray]:
    """Express v over an rref basis; None if v is outside the span."""
    coeffs = np.zeros(basis_rref.shape[0], dtype=np.uint8)
    resid = (np.asarray(v, dtype=np.uint8) & 1).copy()
    for i, c in enumerate(pivots):
        if resid[c]:
            coeffs[i] = 1
            resid ^= basis_rref[i]
    if resid.any():
        return None
    return coeffs


def nullspace_gf2(mat: np.ndarray) -> np.ndarray:
    """Basis (rows) of the right nullspace of ``mat`` over GF(2)."""
    mat = np.asarray(mat, dtype=np.uint8) & 1
    rows, cols = mat.shape
    if rows == 0:
        return np.eye(cols, dtype=np.uint8)
    rref, _, pivots = rref_gf2(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(pivots):
            if rref[i, f]:
                basis[k, p] = 1
    return basis


# -- generating sets ---------------------------------------------------


@dataclass(frozen=True)
class Membership:
    """Result of expressing an operator over a generating set."""

    coeffs: np.ndarray  # GF(2) coefficients over the original generators
    sign: int           # +1 if signs agree exactly, -1 if only up to sign


class GeneratingSet:
    """An ordered list of Pauli operators with a cached reduced basis."""

    def __init__(self, generators: Sequence[PauliOperator], n: Optional[int] = None):
        gens = tuple(generators)
        if gens:
            n_ = gens[0].n
            for g in gens:
                if g.n != n_:
                    raise DimensionMismatchError("generators act on differing qubit counts")
        elif n is None:
            raise ValueError("empty GeneratingSet needs an explicit qubit count n")
        else:
            n_ = int(n)
        self.n = n_
        self.generators = gens
        if gens:
            self.mat = np.stack([g.symplectic() for g in gens]).astype(np.uint8)
        else:
            self.mat = np.zeros((0, 2 * n_), dtype=np.uint8)
        self._rref_cache: Optional[tuple[np.ndarray, np.ndarray, list[int]]] = None

    # -- basics --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i: int) -> PauliOperator:
        return self.generators[i]

    def _rref(self) -> tuple[np.ndarray, np.ndarray, list[int]]:
        if self._rref_cache is None:
            self._rref_cache = rref_gf2(self.mat)
        return self._rref_cache

    @property
    def basis(self) -> np.ndarray:
        """Reduced row-echelon GF(2) form of the symplectic matrix."""
        return self._rref()[0]

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def is_independent(self) -> bool:
        return self.rank == len(self.generators)

    def is_abelian(self) -> bool:
        if not self.generators:
            return True
        n = self.n
        x, z = self.mat[:, :n], self.mat[:, n:]
        # Gram matrix of the symplectic form
        gram = (x @ z.T + z @ x.T) % 2
        return not gram.any()

    # -- group operations ----------------------------------------------

    def word_product(self, coeffs: np.ndarray) -> PauliOperator:
        """Multiply out generators^coeffs in ascending index order."""
        p = PauliOperator.identity(self.n)
        for i in np.flatnonzero(np.asarray(coeffs, dtype=np.uint8) & 1):
            p = multiply(p, self.generators[int(i)])
        return p

    def member(self, p: PauliOperator) -> Optional[Membership]:
        """Coefficients of p over the generators, or None if not in span.

        The sign is +1 when the word product reproduces p exactly and -1
        when only the unsigned (x, z) part matches.
        """
        if p.n != self.n:
            raise DimensionMismatchError(f"operator on {p.n} qubits vs set on {self.n}")
        rref, transform, pivots = self._rref()
        c_red = solve_gf2(rref, pivots, p.symplectic())
        if c_red is None:
            return None
        coeffs = (c_red @ transform) % 2 if c_red.size else np.zeros(len(self.generators), dtype=np.uint8)
        coeffs = coeffs.astype(np.uint8)
        word = self.word_product(coeffs)
        sign = +1 if word.phase == p.phase else -1
        return Membership(coeffs=coeffs, sign=sign)

    def contains_unsigned(self, p: PauliOperator) -> bool:
        rref, _, pivots = self._rref()
        return solve_gf2(rref, pivots, p.symplectic()) is not None

    def reduce(self) -> "GeneratingSet":
        """Independent generating set for the same group, deterministic order.

        Rows of the reduced symplectic matrix become the new generators;
        each keeps the sign of the generator word that produced it.
        """
        rref, transform, _ = self._rref()
        new_gens = []
        n = self.n
        for i in range(rref.shape[0]):
            p = self.word_product(transform[i])
            assert np.array_equal(p.symplectic(), rref[i])
            new_gens.append(p)
        return GeneratingSet(new_gens, n=n)

    def union(self, other: "GeneratingSet") -> "GeneratingSet":
        if other.n != self.n:
            raise DimensionMismatchError("qubit counts differ")
        return GeneratingSet(self.generators + other.generators, n=self.n)

    def __repr__(self):
        return f"GeneratingSet(n={self.n}, k={len(self.generators)}, rank={self.rank})"


def reduce(generating_set: GeneratingSet) -> GeneratingSet:
    """Module-level alias for GeneratingSet.reduce."""
    return generating_set.reduce()


def member(generating_set: GeneratingSet, p: PauliOperator) -> Optional[Membership]:
    """Module-level alias for GeneratingSet.member."""
    return generating_set.member(p)
