import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfib.errors import NoSuchRoot
from hopfib.linalg import (
    FieldSpec,
    Subspace,
    find_root_of_unity,
    invert,
    kernel,
    matmul_mod,
    modinv,
    rref,
    solve,
)

F7 = FieldSpec(7)


def brute_force_order(x, p):
    k = 1
    y = x % p
    while y != 1:
        y = (y * x) % p
        k += 1
    return k


class TestFieldSpec:
    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            FieldSpec(9)

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            FieldSpec(2)

    def test_accepts_large_prime(self):
        FieldSpec(2**31 - 1)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 31])
    def test_inverse_all_nonzero(self, p):
        f = FieldSpec(p)
        for x in range(1, p):
            assert (x * f.inv(x)) % p == 1

    def test_inverse_p2_standalone(self):
        # modinv itself is not restricted to odd p
        assert (1 * modinv(1, 2)) % 2 == 1


class TestRootOfUnity:
    def test_smallest_cube_root_mod_7(self):
        # oracle: scan every nonzero residue and compute its order directly
        orders = {x: brute_force_order(x, 7) for x in range(1, 7)}
        expected = min(x for x, o in orders.items() if o == 3)
        assert expected == 2
        assert find_root_of_unity(F7, 3) == 2

    def test_identity_case(self):
        assert find_root_of_unity(F7, 1) == 1

    def test_no_root_when_order_does_not_divide(self):
        with pytest.raises(NoSuchRoot):
            find_root_of_unity(F7, 5)

    @pytest.mark.parametrize("p,m", [(7, 2), (7, 3), (7, 6), (13, 3), (31, 5)])
    def test_returned_order_is_exact(self, p, m):
        x = find_root_of_unity(FieldSpec(p), m)
        assert brute_force_order(x, p) == m


class TestRref:
    def test_identity_fixed(self):
        r, rank, piv = rref(np.eye(4, dtype=np.int64), 7)
        assert rank == 4 and piv == (0, 1, 2, 3)
        assert np.array_equal(r, np.eye(4, dtype=np.int64))

    def test_proportional_rows(self):
        r, rank, _ = rref([[2, 4], [1, 2]], 7)
        assert rank == 1
        assert np.array_equal(r, [[1, 2], [0, 0]])

    def test_idempotent_on_seeded_random(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            m = rng.integers(0, 7, size=(5, 8))
            r1, rank1, piv1 = rref(m, 7)
            r2, rank2, piv2 = rref(r1, 7)
            assert np.array_equal(r1, r2) and rank1 == rank2 and piv1 == piv2


class TestSolve:
    def test_inconsistent_zero_matrix(self):
        sol = solve(np.zeros((2, 2), dtype=np.int64), [1, 0], 7)
        assert not sol.consistent and sol.particular is None

    def test_substitution_reproduces_rhs(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            m = rng.integers(0, 7, size=(4, 6))
            x = rng.integers(0, 7, size=6)
            rhs = (m @ x) % 7
            sol = solve(m, rhs, 7)
            assert sol.consistent
            assert np.array_equal((m @ sol.particular) % 7, rhs)
            # kernel rows really are homogeneous solutions
            if sol.kernel.shape[0]:
                assert not ((m @ sol.kernel.T) % 7).any()

    def test_matrix_rhs(self):
        m = np.array([[1, 2], [3, 4]], dtype=np.int64)
        inv = invert(m, 7)
        assert np.array_equal((m @ inv) % 7, np.eye(2, dtype=np.int64))

    def test_overflow_safe_matmul_large_prime(self):
        p = 2**31 - 1
        a = np.full((4, 4), p - 1, dtype=np.int64)
        got = matmul_mod(a, a, p)
        # (p-1)^2 * 4 mod p == (+1) * 4 since p-1 == -1 mod p
        assert np.array_equal(got, np.full((4, 4), 4, dtype=np.int64))


@st.composite
def random_subspace(draw, ambient=6, p=7):
    nrows = draw(st.integers(min_value=0, max_value=ambient))
    rows = draw(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=p - 1), min_size=ambient, max_size=ambient),
            min_size=nrows,
            max_size=nrows,
        )
    )
    return Subspace(FieldSpec(p), ambient, rows)


class TestSubspace:
    def test_intersect_idempotent(self):
        rng = np.random.default_rng(2)
        u = Subspace(F7, 6, rng.integers(0, 7, size=(3, 6)))
        assert u.intersect(u) == u

    def test_intersect_coordinate_lines(self):
        e1 = Subspace(F7, 3, [[1, 0, 0]])
        e2 = Subspace(F7, 3, [[0, 1, 0]])
        assert e1.intersect(e2).is_zero()

    def test_dimension_formula_1000_seeded_pairs(self):
        rng = np.random.default_rng(3)
        for _ in range(1000):
            u = Subspace(F7, 6, rng.integers(0, 7, size=(rng.integers(0, 5), 6)))
            v = Subspace(F7, 6, rng.integers(0, 7, size=(rng.integers(0, 5), 6)))
            assert (u + v).dim + u.intersect(v).dim == u.dim + v.dim

    @settings(max_examples=60, deadline=None)
    @given(random_subspace(), random_subspace())
    def test_sum_contains_both(self, u, v):
        s = u + v
        assert s.contains(u) and s.contains(v)
        w = u.intersect(v)
        assert u.contains(w) and v.contains(w)

    @settings(max_examples=60, deadline=None)
    @given(random_subspace())
    def test_canonical_form_idempotent(self, u):
        again = Subspace(u.field, u.ambient, u.basis)
        assert again == u and again.key() == u.key()

    def test_kernel_vectors_annihilate(self):
        rng = np.random.default_rng(4)
        m = rng.integers(0, 7, size=(3, 7))
        k = kernel(m, 7)
        assert k.shape[0] == 7 - rref(m, 7)[1]
        assert not ((m @ k.T) % 7).any()

    def test_equality_is_bitwise(self):
        u = Subspace(F7, 4, [[1, 2, 3, 4], [0, 1, 0, 1]])
        v = Subspace(F7, 4, [[2, 4, 6, 1], [0, 2, 0, 2], [1, 2, 3, 4]])
        assert u == v
        assert hash(u) == hash(v)
