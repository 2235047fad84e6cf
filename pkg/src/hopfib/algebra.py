"""Finite-dimensional associative unital algebras given by structure constants.

An algebra of dimension n over F_p is stored as a dense tensor
``mul[i, j, k]`` meaning e_i * e_j = sum_k mul[i, j, k] e_k, together with
the coefficient vector of the unit. Associativity and the unit axioms are
checked exhaustively at construction, so everything downstream can assume
a genuine algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    ImproperIdeal,
    NotAnIdeal,
    NotAssociative,
    NotASubalgebra,
    UnitAxiomFails,
)
from .linalg import (
    FieldSpec,
    Subspace,
    asmat,
    complement_projection,
    kernel,
    matmul_mod,
    tensordot_mod,
)


@dataclass
class StructureConstantAlgebra:
    """Associative unital algebra over F_p with an explicit basis.

    Do not call the constructor directly unless the data is already known
    to satisfy the axioms; use :func:`build_algebra`, which verifies them.
    """

    field: FieldSpec
    dim: int
    unit: np.ndarray
    mul: np.ndarray  # dense (dim, dim, dim) tensor
    labels: tuple[str, ...]

    def __post_init__(self):
        self.unit = asmat(self.unit, self.field.p)
        self.mul = asmat(self.mul, self.field.p)
        if self.unit.shape != (self.dim,):
            raise DimensionMismatch("unit vector has wrong length")
        if self.mul.shape != (self.dim, self.dim, self.dim):
            raise DimensionMismatch("multiplication tensor has wrong shape")
        if not self.labels:
            self.labels = tuple(f"e{i}" for i in range(self.dim))
        self.unit.setflags(write=False)
        self.mul.setflags(write=False)

    # -- arithmetic ------------------------------------------------------

    def multiply(self, u, v) -> np.ndarray:
        p = self.field.p
        u = asmat(u, p)
        v = asmat(v, p)
        uv = matmul_mod(u, self.mul.reshape(self.dim, self.dim * self.dim), p)
        return matmul_mod(v, uv.reshape(self.dim, self.dim), p)

    def left_mult_matrix(self, v) -> np.ndarray:
        """Matrix of x -> v * x acting on column vectors."""
        p = self.field.p
        v = asmat(v, p)
        # (v*e_j)_k = sum_i v_i mul[i, j, k]
        m = matmul_mod(v, self.mul.reshape(self.dim, self.dim * self.dim), p)
        return m.reshape(self.dim, self.dim).T

    def right_mult_matrix(self, v) -> np.ndarray:
        """Matrix of x -> x * v acting on column vectors."""
        p = self.field.p
        v = asmat(v, p)
        m = tensordot_mod(self.mul, v, ([1], [0]), p)  # (i, k)
        return m.T

    def left_regular(self) -> np.ndarray:
        """Stack of left multiplication matrices, one per basis element."""
        return self.mul.transpose(0, 2, 1).copy()

    def right_regular(self) -> np.ndarray:
        return self.mul.transpose(1, 2, 0).copy()

    def element_power(self, v, k: int) -> np.ndarray:
        out = self.unit.copy()
        base = asmat(v, self.field.p)
        while k:
            if k & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            k >>= 1
        return out

    def digest(self) -> bytes:
        return self.unit.tobytes() + self.mul.tobytes() + str(self.field.p).encode()

    def __repr__(self):
        return f"StructureConstantAlgebra(dim={self.dim}, p={self.field.p})"


def mul_entries(alg: StructureConstantAlgebra) -> list[tuple[int, int, int, int]]:
    """Sorted sparse (i, j, k, c) entries of the multiplication tensor."""
    idx = np.argwhere(alg.mul != 0)
    return [(int(i), int(j), int(k), int(alg.mul[i, j, k])) for i, j, k in idx]


def dense_mul_tensor(dim: int, entries, p: int) -> np.ndarray:
    mul = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, j, k, c in entries:
        mul[i, j, k] = (mul[i, j, k] + c) % p
    return mul


def _check_unit(field, dim, unit, mul):
    p = field.p
    left = matmul_mod(unit, mul.reshape(dim, dim * dim), p).reshape(dim, dim).T
    eye = np.eye(dim, dtype=np.int64)
    if not np.array_equal(left, eye):
        i = int(np.argmax((left != eye).any(axis=0)))
        raise UnitAxiomFails(i, "left")
    right = (tensordot_mod(mul, unit, ([1], [0]), p)).T
    if not np.array_equal(right, eye):
        i = int(np.argmax((right != eye).any(axis=0)))
        raise UnitAxiomFails(i, "right")


def _check_associative(field, dim, mul):
    """Exhaustive check of (e_i e_j) e_k = e_i (e_j e_k) for all triples.

    Equivalent formulation: left multiplication is an algebra map, i.e.
    L_{e_i} L_{e_j} = L_{e_i e_j} for all pairs. The multiplication tensor
    of every corpus algebra is sparse, so larger dimensions go through
    scipy's sparse kernels.
    """
    p = field.p
    left = np.ascontiguousarray(mul.transpose(0, 2, 1))  # L[i]
    flat = left.reshape(dim, dim * dim)
    use_sparse = dim >= 24 and dim * (p - 1) ** 2 < 2**63
    if use_sparse:
        from scipy import sparse

        # stacked[t, j*dim + col] = L_j[t, col]
        stacked = np.ascontiguousarray(left.transpose(1, 0, 2)).reshape(dim, dim * dim)
    for i in range(dim):
        if use_sparse:
            prod = (sparse.csr_matrix(left[i]) @ stacked) % p  # [r, j*dim+col]
            actual = np.asarray(prod).reshape(dim, dim, dim).transpose(1, 0, 2)
            expected = np.asarray(
                (sparse.csr_matrix(mul[i]) @ flat) % p
            ).reshape(dim, dim, dim)
        else:
            actual = matmul_mod(left[i], left, p)  # (dim, dim, dim): L_i @ L_j
            expected = matmul_mod(mul[i], flat, p).reshape(dim, dim, dim)
        if not np.array_equal(actual, expected):
            j = int(np.argmax((actual != expected).any(axis=(1, 2))))
            # locate a failing association triple for the witness
            for k in range(dim):
                lhs_vec = np.zeros(dim, dtype=np.int64)
                lhs_vec[k] = 1
                lhs = matmul_mod(actual[j], lhs_vec, p)
                rhs = matmul_mod(expected[j], lhs_vec, p)
                if not np.array_equal(lhs, rhs):
                    raise NotAssociative(i, j, k)
            raise NotAssociative(i, j, -1)


def build_algebra(field: FieldSpec, dim: int, unit, entries, labels=()) -> StructureConstantAlgebra:
    """Construct an algebra from sparse multiplication entries and verify it.

    Raises NotAssociative or UnitAxiomFails with a witness when the data
    does not define an associative unital algebra.
    """
    mul = dense_mul_tensor(dim, entries, field.p)
    unit = asmat(unit, field.p)
    if unit.shape != (dim,):
        raise DimensionMismatch("unit vector has wrong length")
    _check_unit(field, dim, unit, mul)
    _check_associative(field, dim, mul)
    return StructureConstantAlgebra(field, dim, unit, mul, tuple(labels))


def algebra_from_dense(field, unit, mul, labels=()) -> StructureConstantAlgebra:
    dim = mul.shape[0]
    _check_unit(field, dim, asmat(unit, field.p), asmat(mul, field.p))
    _check_associative(field, dim, asmat(mul, field.p))
    return StructureConstantAlgebra(field, dim, unit, mul, tuple(labels))


def regular_action(alg: StructureConstantAlgebra) -> np.ndarray:
    """Left-multiplication action matrices of the regular module."""
    return alg.left_regular()


# -- subspaces of an algebra ---------------------------------------------


def multiply_rows_by_basis(alg, rows, side) -> np.ndarray:
    """All products e_i * v (side='left') or v * e_i (side='right'), as rows."""
    p = alg.field.p
    rows = asmat(rows, p)
    if rows.shape[0] == 0:
        return np.zeros((0, alg.dim), dtype=np.int64)
    if side == "left":
        # out[i, r, k] = sum_j mul[i, j, k] * rows[r, j]
        prods = tensordot_mod(alg.mul, rows, ([1], [1]), p)  # (i, k, r)
        return prods.transpose(0, 2, 1).reshape(-1, alg.dim)
    # out[r, i, k] = sum_j rows[r, j] * mul[j, i, k]
    prods = tensordot_mod(rows, alg.mul, ([1], [0]), p)  # (r, i, k)
    return prods.reshape(-1, alg.dim)


def ideal_closure(alg: StructureConstantAlgebra, seed: Subspace) -> Subspace:
    """Smallest two-sided ideal containing the seed subspace."""
    if seed.ambient != alg.dim:
        raise DimensionMismatch("seed lives in the wrong ambient space")
    current = seed
    while True:
        rows = np.vstack(
            [
                current.basis,
                multiply_rows_by_basis(alg, current.basis, "left"),
                multiply_rows_by_basis(alg, current.basis, "right"),
            ]
        )
        bigger = Subspace(alg.field, alg.dim, rows)
        if bigger.dim == current.dim:
            return bigger
        current = bigger


def subalgebra_closure(alg: StructureConstantAlgebra, seed: Subspace) -> Subspace:
    """Smallest unital subalgebra containing the seed subspace."""
    current = Subspace(alg.field, alg.dim, np.vstack([seed.basis, alg.unit[None, :]]))
    while True:
        prods = []
        for v in current.basis:
            lm = alg.left_mult_matrix(v)
            prods.append(matmul_mod(current.basis, lm.T, alg.field.p))
        rows = np.vstack([current.basis] + prods)
        bigger = Subspace(alg.field, alg.dim, rows)
        if bigger.dim == current.dim:
            return bigger
        current = bigger


def is_subalgebra(alg: StructureConstantAlgebra, a: Subspace) -> bool:
    """True iff the subspace contains the unit and is closed under products."""
    if not a.contains_vector(alg.unit):
        return False
    for v in a.basis:
        lm = alg.left_mult_matrix(v)
        prods = matmul_mod(a.basis, lm.T, alg.field.p)
        if not a.contains_rows(prods):
            return False
    return True


def center(alg: StructureConstantAlgebra) -> Subspace:
    """Joint kernel of the commutator maps v -> e_i v - v e_i."""
    p = alg.field.p
    current = Subspace.full(alg.field, alg.dim)
    left = alg.left_regular()
    right = alg.right_regular()
    for i in range(alg.dim):
        comm = (left[i] - right[i]) % p
        if current.dim == 0:
            break
        imgs = matmul_mod(current.basis, comm.T, p)
        coeffs = kernel(imgs.T, p)  # combos of current basis killed by comm
        current = Subspace(alg.field, alg.dim, matmul_mod(coeffs, current.basis, p))
    return current


def is_central_subalgebra(alg: StructureConstantAlgebra, a: Subspace) -> bool:
    if not is_subalgebra(alg, a):
        raise NotASubalgebra("subspace is not a unital subalgebra")
    return center(alg).contains(a)


def is_commutative(alg: StructureConstantAlgebra) -> bool:
    return np.array_equal(alg.mul, alg.mul.transpose(1, 0, 2))


# -- quotients -------------------------------------------------------------


@dataclass
class QuotientData:
    """Quotient algebra together with the projection and a linear section.

    ``projection`` maps ambient coordinates onto quotient coordinates (a
    (q, n) matrix acting on column vectors) and ``section`` embeds quotient
    basis vectors back as ambient standard vectors ((n, q) matrix), so
    projection @ section = identity.
    """

    algebra: StructureConstantAlgebra
    projection: np.ndarray
    section: np.ndarray
    ideal: Subspace


def quotient_algebra(alg: StructureConstantAlgebra, ideal: Subspace) -> QuotientData:
    """Quotient by a proper two-sided ideal.

    The quotient basis consists of the images of the standard vectors at
    the non-pivot columns of the ideal's canonical basis, which makes the
    construction deterministic.
    """
    p = alg.field.p
    if ideal.ambient != alg.dim:
        raise DimensionMismatch("ideal lives in the wrong ambient space")
    if ideal_closure(alg, ideal) != ideal:
        raise NotAnIdeal("subspace is not a two-sided ideal")
    if ideal.contains_vector(alg.unit):
        raise ImproperIdeal("ideal contains the unit")
    n = alg.dim
    qdim = n - ideal.dim
    proj, section, nonpivot = complement_projection(ideal)
    assert len(nonpivot) == qdim
    # structure constants on the chosen representatives
    qmul = np.zeros((qdim, qdim, qdim), dtype=np.int64)
    for a in range(qdim):
        for b in range(qdim):
            prod = alg.mul[nonpivot[a], nonpivot[b]]
            qmul[a, b] = matmul_mod(proj, prod, p)
    qunit = matmul_mod(proj, alg.unit, p)
    qlabels = tuple(alg.labels[c] for c in nonpivot)
    qalg = algebra_from_dense(alg.field, qunit, qmul, qlabels)
    return QuotientData(qalg, proj, section, ideal)


def subalgebra_as_algebra(alg: StructureConstantAlgebra, a: Subspace):
    """Present a unital multiplicatively closed subspace as its own algebra.

    Returns (algebra, embedding) where embedding rows are the chosen basis
    of the subspace inside the ambient algebra.
    """
    if not is_subalgebra(alg, a):
        raise NotASubalgebra("subspace is not a unital subalgebra")
    p = alg.field.p
    k = a.dim
    basis = a.basis
    piv = list(a.pivots)
    sub_mul = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod = alg.multiply(basis[i], basis[j])
            sub_mul[i, j] = prod[piv]  # coordinates w.r.t. an RREF basis
    unit_coords = alg.unit[piv]
    sub = algebra_from_dense(alg.field, unit_coords, sub_mul, tuple(f"a{i}" for i in range(k)))
    return sub, basis
