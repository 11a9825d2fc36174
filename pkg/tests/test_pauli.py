"""Tests for Pauli arithmetic and GF(2) generating sets."""
import numpy as np
import pytest

from gaugefix.pauli import (
    DimensionMismatchError,
    GeneratingSet,
    PauliOperator,
    commutes,
    member,
    multiply,
    nullspace_gf2,
    rank_gf2,
    reduce,
    rref_gf2,
)


def P(s: str) -> PauliOperator:
    return PauliOperator.from_string(s)


class TestMultiply:
    def test_self_inverse(self):
        x1 = P("XI")
        prod = multiply(x1, x1)
        assert prod.weight == 0
        assert prod.sign == +1

    def test_xz_phase_bookkeeping(self):
        # (X.Z)(X.Z) on one qubit resolves consistently with Y^2 = I
        xz = multiply(P("X"), P("Z"))
        sq = multiply(xz, xz)
        assert sq.weight == 0
        assert sq.phase == 2  # XZ = -iY, so (XZ)^2 = -I

        y = P("Y")
        assert multiply(y, y).sign == +1

    def test_plaquette_symmetric_difference(self):
        # two weight-4 Z plaquettes sharing 2 qubits -> weight-4 product
        n = 6
        p1 = PauliOperator.from_support(n, [0, 1, 2, 3], "Z")
        p2 = PauliOperator.from_support(n, [2, 3, 4, 5], "Z")
        prod = multiply(p1, p2)
        assert prod.weight == 4
        assert sorted(prod.support()) == [0, 1, 4, 5]
        assert prod.sign == +1

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            multiply(P("X"), P("XX"))

    def test_sign_through_strings(self):
        # (-XX)(-ZZ) = XX.ZZ = (XZ)x(XZ) = (-iY)(-iY) = -YY
        assert multiply(P("-XX"), P("-ZZ")).to_string() == "-YY"
        assert P("-XIZZY").to_string() == "-XIZZY"
        assert P("+XIZZY").to_string() == "XIZZY"

    def test_non_hermitian_product_rejected_at_boundary(self):
        xz = multiply(P("X"), P("Z"))
        with pytest.raises(ValueError):
            _ = xz.sign

    def test_parser_printer_roundtrip(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(1, 12))
            x = rng.integers(0, 2, n)
            z = rng.integers(0, 2, n)
            ny = int(np.count_nonzero(x & z))
            phase = (ny + 2 * int(rng.integers(0, 2))) % 4
            p = PauliOperator(x, z, phase)
            assert PauliOperator.from_string(p.to_string()) == p


class TestCommutes:
    def test_x_vs_z(self):
        assert commutes(P("X"), P("Z")) is False

    def test_even_overlap(self):
        assert commutes(P("XX"), P("ZZ")) is True

    def test_adjacent_plaquettes_share_edge(self):
        # X and Z plaquettes of a rotated code sharing exactly 2 qubits
        n = 6
        a = PauliOperator.from_support(n, [0, 1, 2, 3], "X")
        b = PauliOperator.from_support(n, [2, 3, 4, 5], "Z")
        assert commutes(a, b) is True

    def test_symmetry_and_squares(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            n = int(rng.integers(1, 10))
            a = PauliOperator(rng.integers(0, 2, n), rng.integers(0, 2, n))
            b = PauliOperator(rng.integers(0, 2, n), rng.integers(0, 2, n))
            assert commutes(a, b) == commutes(b, a)
            assert commutes(a, multiply(a, a)) is True

    def test_sign_flip_rule(self):
        # a.b = +/- b.a with the minus branch exactly on anticommutation
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = int(rng.integers(1, 8))
            a = PauliOperator(rng.integers(0, 2, n), rng.integers(0, 2, n))
            b = PauliOperator(rng.integers(0, 2, n), rng.integers(0, 2, n))
            ab = multiply(a, b)
            ba = multiply(b, a)
            assert np.array_equal(ab.x_bits, ba.x_bits)
            same_phase = ab.phase == ba.phase
            assert same_phase == commutes(a, b)


class TestGeneratingSet:
    def test_reduce_removes_duplicates(self):
        s = GeneratingSet([P("ZI"), P("ZI"), P("IZ")])
        assert reduce(s).rank == 2
        assert len(reduce(s)) == 2

    def test_reduce_removes_products(self):
        s = GeneratingSet([P("XXI"), P("IXX"), P("XIX")])
        assert reduce(s).rank == 2

    def test_reduce_idempotent(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(2, 8))
            k = int(rng.integers(1, 6))
            gens = []
            for _ in range(k):
                x = rng.integers(0, 2, n)
                z = rng.integers(0, 2, n)
                ny = int(np.count_nonzero(x & z))
                gens.append(PauliOperator(x, z, (ny + 2 * int(rng.integers(0, 2))) % 4))
            s = GeneratingSet(gens)
            r1 = reduce(s)
            r2 = reduce(r1)
            assert np.array_equal(r1.basis, r2.basis)
            assert all(a == b for a, b in zip(r1, r2))

    def test_member_simple(self):
        s = GeneratingSet([P("ZI"), P("IZ")])
        m = member(s, P("ZZ"))
        assert m is not None
        assert list(m.coeffs) == [1, 1]
        assert m.sign == +1

    def test_member_absent(self):
        s = GeneratingSet([P("ZI"), P("IZ")])
        assert member(s, P("XI")) is None

    def test_member_sign_mismatch(self):
        s = GeneratingSet([P("ZI"), P("IZ")])
        m = member(s, P("-ZZ"))
        assert m is not None
        assert m.sign == -1

    def test_member_reproduces_bits(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            n = int(rng.integers(2, 9))
            k = int(rng.integers(1, 7))
            gens = [PauliOperator(rng.integers(0, 2, n), rng.integers(0, 2, n))
                    for _ in range(k)]
            s = GeneratingSet(gens)
            coeffs = rng.integers(0, 2, k)
            target = s.word_product(coeffs)
            m = member(s, target)
            assert m is not None
            again = s.word_product(m.coeffs)
            assert again.equal_unsigned(target)
            assert m.sign == +1
            assert again.phase == target.phase

    def test_abelian_detection(self):
        assert GeneratingSet([P("XX"), P("ZZ")]).is_abelian()
        assert not GeneratingSet([P("XI"), P("ZI")]).is_abelian()


class TestGF2:
    def test_rank_and_nullspace(self):
        m = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.uint8)
        assert rank_gf2(m) == 2
        ns = nullspace_gf2(m)
        assert ns.shape[0] == 1
        assert not ((m @ ns.T) % 2).any()

    def test_rref_transform(self):
        rng = np.random.default_rng(2)
        m = rng.integers(0, 2, (6, 10)).astype(np.uint8)
        rref, t, pivots = rref_gf2(m)
        assert np.array_equal(rref, (t @ m) % 2)
        # pivot columns are unique unit columns
        for i, c in enumerate(pivots):
            col = rref[:, c]
            assert col[i] == 1 and col.sum() == 1
