"""Independent test oracles, deliberately ignorant of the library's chop path."""

import itertools

import numpy as np

from hopfib.algebra import StructureConstantAlgebra, subalgebra_closure
from hopfib.linalg import Subspace, solve


def greedy_generating_set(alg: StructureConstantAlgebra) -> list[int]:
    """Small set of basis indices generating the algebra as a unital algebra."""
    gens: list[int] = []
    current = subalgebra_closure(alg, Subspace.zero(alg.field, alg.dim))
    while current.dim < alg.dim:
        nxt = next(
            i for i in range(alg.dim)
            if not current.contains_vector(np.eye(alg.dim, dtype=np.int64)[i])
        )
        gens.append(nxt)
        rows = np.eye(alg.dim, dtype=np.int64)[gens]
        current = subalgebra_closure(alg, Subspace(alg.field, alg.dim, rows))
    return gens


def brute_force_characters(alg: StructureConstantAlgebra) -> list[tuple[int, ...]]:
    """Multiplicative functionals found by backtracking over generator images.

    For each candidate assignment of values to a generating set, spanning
    products with forced values are accumulated until they span the whole
    algebra, the unique linear functional matching them is solved for, and
    it is kept iff it is genuinely multiplicative. Completeness: a true
    character restricts to some assignment, and all the forced values are
    consequences of multiplicativity.
    """
    p = alg.field.p
    n = alg.dim
    gens = greedy_generating_set(alg)
    eye = np.eye(n, dtype=np.int64)
    found = set()
    for assignment in itertools.product(range(p), repeat=len(gens)):
        rows = [alg.unit.copy()]
        vals = [1]
        for g, val in zip(gens, assignment):
            rows.append(eye[g].copy())
            vals.append(val)
        span = Subspace(alg.field, n, np.array(rows))
        # close under products until the known values span everything
        grew = True
        while grew and span.dim < n:
            grew = False
            count = len(rows)
            for i in range(count):
                for j in range(count):
                    prod = alg.multiply(rows[i], rows[j])
                    if not span.contains_vector(prod):
                        rows.append(prod)
                        vals.append(vals[i] * vals[j] % p)
                        span = Subspace(alg.field, n, np.array(rows))
                        grew = True
        if span.dim < n:
            continue  # generators fail to generate; cannot happen by construction
        sol = solve(np.array(rows), np.array(vals), p)
        if not sol.consistent or sol.kernel.shape[0] != 0:
            continue
        cand = sol.particular
        lhs = np.tensordot(alg.mul, cand, axes=([2], [0])) % p
        if np.array_equal(lhs, np.outer(cand, cand) % p) and int(cand @ alg.unit % p) == 1:
            found.add(tuple(int(x) for x in cand))
    return sorted(found)


def highest_weight_module_small_sl2(instance):
    """Ladder module of top weight q^(l-1) for the small quantum sl2.

    Built directly from the classical weight/ladder formulas, independent
    of the chop machinery: K v_i = w q^(-2i) v_i, F v_i = v_{i+1},
    E v_i = [i] (w q^(1-i) - w^-1 q^(i-1)) / (q - q^-1) v_{i-1}.
    """
    from hopfib.linalg import modinv
    from hopfib.repn import ModuleRep

    p = instance.h.field.p
    ell = instance.provenance["ell"]
    q = instance.provenance["q"]
    qi = modinv(q, p)
    w = pow(q, ell - 1, p)  # highest weight
    m = ell
    kmat = np.diag([w * pow(qi, 2 * i, p) % p for i in range(m)]).astype(np.int64)
    fmat = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        fmat[i + 1, i] = 1
    emat = np.zeros((m, m), dtype=np.int64)
    denom = modinv((q - qi) % p, p)
    for i in range(1, m):
        bracket = (pow(q, i, p) - pow(qi, i, p)) * denom % p
        coeff = bracket * ((w * pow(qi, i - 1, p) - modinv(w, p) * pow(q, i - 1, p)) % p) % p
        emat[i - 1, i] = coeff * denom % p
    gen_mats = {"F": fmat, "K": kmat, "E": emat}
    labels = instance.h.alg.labels
    action = np.zeros((instance.h.dim, m, m), dtype=np.int64)
    for idx, label in enumerate(labels):
        mat = np.eye(m, dtype=np.int64)
        if label != "1":
            for letter in label.split("."):
                mat = (mat @ gen_mats[letter]) % p
        action[idx] = mat
    return ModuleRep(instance.h.alg, action, check=True)
