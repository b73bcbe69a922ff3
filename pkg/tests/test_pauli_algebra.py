import numpy as np
import pytest

from ptliouville import (
    DimensionError,
    PauliOperator,
    anticommutator,
    as_identity_multiple,
    commutator,
    dagger,
    op_mul,
    sigma_minus,
    sigma_plus,
    string_mul,
)

from _oracles import dense_operator


def random_operator(rng, n, n_terms=4):
    terms = {}
    for _ in range(n_terms):
        word = "".join(rng.choice(list("IXYZ"), size=n))
        terms[word] = complex(rng.normal(), rng.normal())
    return PauliOperator(n, terms)


class TestStringMul:
    def test_single_site_table(self):
        assert string_mul("X", "Y") == (1j, "Z")
        assert string_mul("Y", "X") == (-1j, "Z")
        assert string_mul("Z", "Z") == (1.0, "I")
        assert string_mul("I", "Y") == (1.0, "Y")

    def test_sitewise_product_multiplies_phases(self):
        assert string_mul("XZ", "YI") == (1j, "ZZ")

    def test_involution(self):
        assert string_mul("YY", "YY") == (1.0, "II")

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            string_mul("XY", "X")

    def test_phase_closure(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(1, 5))
            a = "".join(rng.choice(list("IXYZ"), size=n))
            b = "".join(rng.choice(list("IXYZ"), size=n))
            phase, word = string_mul(a, b)
            assert phase in (1, 1j, -1, -1j)
            assert len(word) == n


class TestOperatorArithmetic:
    def test_raising_times_lowering_is_projector(self):
        prod = op_mul(sigma_plus(0, 1), sigma_minus(0, 1))
        assert prod == PauliOperator(1, {"I": 0.5, "Z": 0.5})

    def test_dephasing_square(self):
        g = 0.37
        lz = PauliOperator.single("Z", 0, 1, g)
        assert op_mul(lz, lz) == PauliOperator(1, {"I": g * g})

    def test_zero_absorbs(self):
        rng = np.random.default_rng(3)
        a = random_operator(rng, 2)
        assert op_mul(PauliOperator.zero(2), a) == PauliOperator.zero(2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            op_mul(PauliOperator.identity(1), PauliOperator.identity(2))

    def test_product_matches_dense(self):
        # bilinear extension of the string table agrees with matrix products
        rng = np.random.default_rng(7)
        for n in (1, 2, 3):
            for _ in range(10):
                a = random_operator(rng, n)
                b = random_operator(rng, n)
                got = dense_operator(op_mul(a, b))
                want = dense_operator(a) @ dense_operator(b)
                assert np.max(np.abs(got - want)) < 1e-12


class TestCommutators:
    def test_z_x(self):
        z = PauliOperator.term("Z")
        x = PauliOperator.term("X")
        assert commutator(z, x) == PauliOperator(1, {"Y": 2j})

    def test_family1_parity_commutes(self):
        rng = np.random.default_rng(5)
        n = 3
        h = PauliOperator.zero(n)
        for j in range(n):
            for k in range(j + 1, n):
                for letter in "XYZ":
                    h = h + (
                        PauliOperator.single(letter, j, n)
                        @ PauliOperator.single(letter, k, n)
                    ) * rng.normal()
            h = h + PauliOperator.single("X", j, n, rng.normal())
        u = PauliOperator.term("X" * n)
        assert commutator(h, u) == PauliOperator.zero(n)

    def test_raising_lowering_anticommutator(self):
        assert anticommutator(sigma_plus(0, 1), sigma_minus(0, 1)) == PauliOperator.identity(1)

    def test_antisymmetry_and_symmetry(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            a = random_operator(rng, 2)
            b = random_operator(rng, 2)
            assert commutator(a, b) == -commutator(b, a)
            assert anticommutator(a, b) == anticommutator(b, a)


class TestDagger:
    def test_phase_conjugated(self):
        assert dagger(PauliOperator.term("Z", 1j)) == PauliOperator.term("Z", -1j)

    def test_raising_to_lowering(self):
        a = 0.3 - 0.8j
        assert dagger(sigma_plus(0, 1) * a) == sigma_minus(0, 1) * a.conjugate()

    def test_hermitian_hamiltonian_fixed(self):
        h = PauliOperator(2, {"XX": 1.0, "YY": 1.0, "ZZ": 0.5, "XI": 0.3, "IX": 0.7})
        assert dagger(h) == h

    def test_involution_and_antimultiplicative(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            a = random_operator(rng, 2)
            b = random_operator(rng, 2)
            assert dagger(dagger(a)) == a
            # accumulation order differs between the two sides, so compare
            # coefficients up to rounding rather than exactly
            defect = dagger(op_mul(a, b)) - op_mul(dagger(b), dagger(a))
            assert defect.max_norm() < 1e-12


class TestIdentityMultiple:
    def test_dephasing_anticommutator(self):
        g = 0.2
        lz = PauliOperator.single("Z", 0, 1, g)
        value = as_identity_multiple(anticommutator(lz, dagger(lz)))
        assert value == pytest.approx(2 * g * g)

    def test_non_identity(self):
        assert as_identity_multiple(PauliOperator.term("Z")) is None

    def test_raising_channel(self):
        value = as_identity_multiple(anticommutator(sigma_plus(0, 1), sigma_minus(0, 1)))
        assert value == pytest.approx(1.0)

    def test_zero_operator(self):
        assert as_identity_multiple(PauliOperator.zero(2)) == 0


def test_pruning_keeps_canonical_form():
    tiny = PauliOperator(1, {"X": 1e-15})
    assert tiny == PauliOperator.zero(1)
    diff = PauliOperator.term("X") - PauliOperator.term("X")
    assert not diff.terms


def test_canonical_term_order():
    op = PauliOperator(1, {"Z": 1.0, "I": 2.0, "X": 3.0, "Y": 4.0})
    assert [w for w, _ in op.sorted_terms()] == ["I", "X", "Y", "Z"]
