import numpy as np
import pytest

from hopfib.algebra import (
    build_algebra,
    center,
    ideal_closure,
    is_central_subalgebra,
    is_commutative,
    is_subalgebra,
    quotient_algebra,
    regular_action,
    subalgebra_as_algebra,
)
from hopfib.errors import ImproperIdeal, NotAnIdeal, NotAssociative, NotASubalgebra, UnitAxiomFails
from hopfib.linalg import FieldSpec, Subspace

F5 = FieldSpec(5)
F7 = FieldSpec(7)


def cyclic_entries(n):
    """Multiplication table of the cyclic group algebra F_p[C_n]."""
    return [(i, j, (i + j) % n, 1) for i in range(n) for j in range(n)]


def matrix_units_entries():
    """2x2 matrix units e_ab, basis order (e00, e01, e10, e11)."""
    idx = {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}
    entries = []
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                entries.append((i, j, idx[(a, d)], 1))
    return entries


@pytest.fixture
def c3():
    return build_algebra(F7, 3, [1, 0, 0], cyclic_entries(3))


@pytest.fixture
def m2():
    return build_algebra(F7, 4, [1, 0, 0, 1], matrix_units_entries())


class TestBuild:
    def test_c3_group_algebra_valid(self, c3):
        assert c3.dim == 3

    def test_perturbed_constant_fails_with_witness(self):
        entries = cyclic_entries(3)
        entries[4] = (entries[4][0], entries[4][1], entries[4][2], 2)  # e1*e1 = 2*e2
        with pytest.raises(NotAssociative) as exc:
            build_algebra(F7, 3, [1, 0, 0], entries)
        i, j, k = exc.value.witness
        assert all(0 <= t < 3 for t in (i, j, k))

    def test_matrix_units_valid(self, m2):
        assert m2.dim == 4

    def test_bad_unit_reports_witness(self):
        with pytest.raises(UnitAxiomFails):
            build_algebra(F7, 3, [0, 1, 0], cyclic_entries(3))

    def test_multiply_matches_table(self, c3):
        g = np.array([0, 1, 0])
        assert np.array_equal(c3.multiply(g, g), [0, 0, 1])
        assert np.array_equal(c3.multiply(c3.multiply(g, g), g), [1, 0, 0])


class TestRegularModule:
    def test_unit_acts_as_identity(self, c3):
        l_unit = c3.left_mult_matrix(c3.unit)
        assert np.array_equal(l_unit, np.eye(3, dtype=np.int64))

    def test_group_element_is_permutation_matrix(self, c3):
        l_g = c3.left_mult_matrix([0, 1, 0])
        assert np.array_equal(np.sort(l_g.sum(axis=0)), [1, 1, 1])
        assert np.array_equal(np.sort(l_g.sum(axis=1)), [1, 1, 1])
        assert set(np.unique(l_g)) <= {0, 1}

    def test_homomorphism_identity_all_pairs(self, m2):
        left = regular_action(m2)
        for i in range(m2.dim):
            for j in range(m2.dim):
                prod = (left[i] @ left[j]) % 7
                expected = np.tensordot(m2.mul[i, j], left, axes=([0], [0])) % 7
                assert np.array_equal(prod, expected)


class TestIdealClosure:
    def test_closure_of_unit_is_everything(self, c3):
        seed = Subspace(F7, 3, [c3.unit])
        assert ideal_closure(c3, seed).dim == 3

    def test_closure_of_zero_is_zero(self, c3):
        assert ideal_closure(c3, Subspace.zero(F7, 3)).is_zero()

    def test_m2_is_simple(self, m2):
        # brute force over a spanning set of nonzero elements: every single
        # nonzero generator already generates the whole algebra
        rng = np.random.default_rng(5)
        vectors = list(np.eye(4, dtype=np.int64)) + [rng.integers(0, 7, size=4) for _ in range(20)]
        for v in vectors:
            if not v.any():
                continue
            assert ideal_closure(m2, Subspace(F7, 4, [v])).dim == 4

    def test_monotone_and_idempotent(self, m2):
        rng = np.random.default_rng(6)
        for _ in range(50):
            seed = Subspace(F7, 4, rng.integers(0, 7, size=(2, 4)))
            closed = ideal_closure(m2, seed)
            assert closed.contains(seed)
            assert ideal_closure(m2, closed) == closed


class TestQuotient:
    def test_quotient_by_zero_ideal_is_identity_copy(self, c3):
        q = quotient_algebra(c3, Subspace.zero(F7, 3))
        assert q.algebra.dim == 3
        assert np.array_equal(q.algebra.mul, c3.mul)
        assert np.array_equal(q.algebra.unit, c3.unit)

    def test_c4_mod_g2_minus_1_is_c2(self):
        c4 = build_algebra(F5, 4, [1, 0, 0, 0], cyclic_entries(4))
        seed = Subspace(F5, 4, [[-1 % 5, 0, 1, 0]])  # g^2 - 1
        ideal = ideal_closure(c4, seed)
        q = quotient_algebra(c4, ideal)
        c2 = build_algebra(F5, 2, [1, 0], cyclic_entries(2))
        assert q.algebra.dim == 2
        assert np.array_equal(q.algebra.mul, c2.mul)
        assert np.array_equal(q.algebra.unit, c2.unit)

    def test_quotient_by_ideal_containing_unit_rejected(self, c3):
        with pytest.raises(ImproperIdeal):
            quotient_algebra(c3, Subspace.full(F7, 3))

    def test_non_ideal_rejected(self, m2):
        sub = Subspace(F7, 4, [[0, 1, 0, 0]])  # e01 alone is not an ideal
        with pytest.raises(NotAnIdeal):
            quotient_algebra(m2, sub)

    def test_projection_kernel_is_ideal(self):
        c4 = build_algebra(F5, 4, [1, 0, 0, 0], cyclic_entries(4))
        ideal = ideal_closure(c4, Subspace(F5, 4, [[-1 % 5, 0, 1, 0]]))
        q = quotient_algebra(c4, ideal)
        from hopfib.linalg import kernel

        ker = Subspace(F5, 4, kernel(q.projection, 5))
        assert ker == ideal
        # projection is an algebra map
        for i in range(4):
            for j in range(4):
                lhs = (q.projection @ c4.mul[i, j]) % 5
                rhs = q.algebra.multiply(q.projection[:, i], q.projection[:, j])
                assert np.array_equal(lhs, rhs)


class TestCenter:
    def test_commutative_algebra_center_is_everything(self, c3):
        assert center(c3).dim == 3
        assert is_commutative(c3)

    def test_center_of_m2_is_scalars(self, m2):
        z = center(m2)
        assert z.dim == 1
        assert z.contains_vector(m2.unit)
        # cross-check by brute force: every center vector commutes with all basis
        for v in z.basis:
            for i in range(4):
                e = np.zeros(4, dtype=np.int64)
                e[i] = 1
                assert np.array_equal(m2.multiply(v, e), m2.multiply(e, v))

    def test_center_is_commutative_unital_subalgebra(self, m2):
        z = center(m2)
        assert is_subalgebra(m2, z)
        sub, _ = subalgebra_as_algebra(m2, z)
        assert is_commutative(sub)

    def test_is_central_subalgebra(self, m2):
        scalars = Subspace(F7, 4, [m2.unit])
        assert is_central_subalgebra(m2, scalars)
        # span{1, e01, e10} is not closed: e01*e10 = e00 lies outside
        offdiag = Subspace(F7, 4, [m2.unit, [0, 1, 0, 0], [0, 0, 1, 0]])
        with pytest.raises(NotASubalgebra):
            is_central_subalgebra(m2, offdiag)

    def test_non_central_subalgebra_detected(self, m2):
        diag = Subspace(F7, 4, [[1, 0, 0, 0], [0, 0, 0, 1]])
        assert is_subalgebra(m2, diag)
        assert not is_central_subalgebra(m2, diag)
