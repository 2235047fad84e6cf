"""Modules over structure-constant algebras and their composition factors.

The decomposition ("chop") follows the standard randomized strategy for
modules over small finite fields: draw random elements of the acting
algebra's image, split off kernels of irreducible factors of their minimal
polynomials, and spin up submodules. Irreducibility is certified by the
dual-module (Norton) criterion, which needs an element whose chosen
irreducible factor has kernel dimension equal to its degree; the search
retries with fresh random elements until one is found or the attempt
budget runs out.

All randomness is confined to one seeded generator per chop call, and all
public outputs are canonically ordered, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from .algebra import StructureConstantAlgebra, ideal_closure
from .errors import BudgetExceeded, DifferentAlgebras, DimensionMismatch
from .linalg import Subspace, asmat, complement_projection, kernel, matmul_mod, solve, tensordot_mod


@dataclass
class ChopConfig:
    """Attempt budget for the randomized splitting search."""

    max_attempts: int = 256
    spin_vectors_per_kernel: int = 8


class ModuleRep:
    """Left module given by one action matrix per algebra basis element.

    The action must be an algebra homomorphism (checked at construction
    unless the caller certifies it, as for restrictions of already-checked
    modules to invariant subspaces, which are homomorphisms by exactness).
    """

    __slots__ = ("alg", "dim", "action")

    def __init__(self, alg: StructureConstantAlgebra, action, check: bool = True):
        p = alg.field.p
        action = asmat(action, p)
        if action.ndim != 3 or action.shape[0] != alg.dim or action.shape[1] != action.shape[2]:
            raise DimensionMismatch(f"action stack has shape {action.shape}")
        self.alg = alg
        self.dim = int(action.shape[1])
        action.setflags(write=False)
        self.action = action
        if check:
            self._verify()

    def _verify(self):
        p = self.alg.field.p
        m = self.dim
        unit_action = tensordot_mod(self.alg.unit, self.action, ([0], [0]), p)
        if not np.array_equal(unit_action, np.eye(m, dtype=np.int64)):
            raise DimensionMismatch("unit does not act as the identity")
        flat = self.action.reshape(self.alg.dim, m * m)
        for i in range(self.alg.dim):
            actual = matmul_mod(self.action[i], self.action, p)
            expected = matmul_mod(self.alg.mul[i], flat, p).reshape(self.alg.dim, m, m)
            if not np.array_equal(actual, expected):
                j = int(np.argmax((actual != expected).any(axis=(1, 2))))
                raise DimensionMismatch(
                    f"action is not an algebra homomorphism at basis pair ({i}, {j})"
                )

    def act(self, algebra_vec, module_vec) -> np.ndarray:
        p = self.alg.field.p
        mat = tensordot_mod(asmat(algebra_vec, p), self.action, ([0], [0]), p)
        return matmul_mod(mat, asmat(module_vec, p), p)

    def __repr__(self):
        return f"ModuleRep(dim={self.dim}, alg_dim={self.alg.dim})"


@dataclass
class SimpleRecord:
    """An irreducible module with its annihilator and multiplicity."""

    module: ModuleRep
    annihilator: Subspace
    multiplicity: int


def regular_module(alg: StructureConstantAlgebra) -> ModuleRep:
    # homomorphism property equals associativity, certified at algebra build
    return ModuleRep(alg, alg.left_regular(), check=False)


def spin(action: np.ndarray, seed_rows, field) -> Subspace:
    """Smallest action-invariant subspace containing the seed rows."""
    p = field.p
    m = action.shape[1]
    sub = Subspace(field, m, seed_rows)
    new = sub.basis
    while new.shape[0] and sub.dim < m:
        imgs = matmul_mod(action, new.T, p)  # (n, m, k)
        imgs = imgs.transpose(0, 2, 1).reshape(-1, m)
        resid = sub.reduce_rows(imgs)
        resid = resid[resid.any(axis=1)]
        if resid.shape[0] == 0:
            break
        grown = Subspace(field, m, np.vstack([sub.basis, resid]))
        if grown.dim == sub.dim:
            break
        sub = grown
        new = resid
    return sub


def minpoly_on_vector(theta: np.ndarray, v: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of theta at v, dense descending coefficients."""
    rows = [v % p]
    while True:
        nxt = matmul_mod(theta, rows[-1], p)
        krylov = np.array(rows, dtype=np.int64)
        sol = solve(krylov.T, nxt, p)
        if sol.consistent:
            k = len(rows)
            coeffs = [1] + [int(-sol.particular[k - 1 - i]) % p for i in range(k)]
            return coeffs
        rows.append(nxt)


def factor_poly(coeffs_desc: list[int], p: int):
    """Irreducible factors over F_p, deterministically ordered."""
    lc, factors = gf_factor([int(c) % p for c in coeffs_desc], p, ZZ)
    out = [(tuple(int(c) for c in f), int(mult)) for f, mult in factors]
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


def poly_eval_matrix(coeffs_desc, theta: np.ndarray, p: int) -> np.ndarray:
    m = theta.shape[0]
    out = np.zeros((m, m), dtype=np.int64)
    eye = np.eye(m, dtype=np.int64)
    for c in coeffs_desc:
        out = (matmul_mod(out, theta, p) + (int(c) % p) * eye) % p
    return out


def restrict_action(action: np.ndarray, sub: Subspace, p: int) -> np.ndarray:
    """Action matrices on an invariant subspace, in its RREF basis."""
    m = action.shape[1]
    imgs = matmul_mod(action, sub.basis.T, p)  # (n, m, k)
    resid = sub.reduce_rows(imgs.transpose(0, 2, 1).reshape(-1, m))
    if resid.any():
        raise DimensionMismatch("subspace is not invariant under the action")
    piv = list(sub.pivots)
    return imgs[:, piv, :]


def quotient_action(action: np.ndarray, sub: Subspace, p: int) -> np.ndarray:
    proj, section, _ = complement_projection(sub)
    tmp = matmul_mod(action, section, p)  # (n, m, q)
    return matmul_mod(proj, tmp, p)  # broadcasts to (n, q, q)


def _try_split(action, field, rng, budget, config):
    """Return a proper nonzero invariant subspace, or None if certified simple."""
    p = field.p
    n, m, _ = action.shape
    if m == 1:
        return None
    dual_action = action.transpose(0, 2, 1)
    while budget[0] > 0:
        budget[0] -= 1
        coeffs = rng.integers(0, p, size=n)
        theta = tensordot_mod(coeffs, action, ([0], [0]), p)
        v = rng.integers(0, p, size=m)
        if not v.any():
            continue
        f = minpoly_on_vector(theta, v, p)
        if len(f) <= 1:
            continue
        for g, _mult in factor_poly(f, p):
            gtheta = poly_eval_matrix(g, theta, p)
            nullsp = kernel(gtheta, p)
            if nullsp.shape[0] == 0:
                continue
            for w in nullsp[: config.spin_vectors_per_kernel]:
                w_spun = spin(action, [w], field)
                if 0 < w_spun.dim < m:
                    return w_spun
            if nullsp.shape[0] == len(g) - 1:
                # good element: the dual criterion is decisive
                dual_null = kernel(poly_eval_matrix(g, theta.T % p, p), p)
                u_spun = spin(dual_action, [dual_null[0]], field)
                if u_spun.dim < m:
                    perp = Subspace(field, m, kernel(u_spun.basis, p))
                    assert 0 < perp.dim < m
                    return perp
                return None
    raise BudgetExceeded(
        f"no decisive splitting element found for a module of dimension {m} over "
        f"F_{p}; this usually signals a composition factor that only splits over "
        "an extension field"
    )


def chop(alg: StructureConstantAlgebra, module: ModuleRep, seed: int = 0,
         config: ChopConfig | None = None) -> list[tuple[ModuleRep, int]]:
    """Composition factors with multiplicities, canonically ordered.

    The multiset of factors is independent of the seed; the attempt budget
    guards the randomized search.
    """
    if module.alg.digest() != alg.digest():
        raise DifferentAlgebras("module is not over the given algebra")
    config = config or ChopConfig()
    rng = np.random.default_rng(seed)
    budget = [config.max_attempts]
    field = alg.field
    p = field.p
    leaves: list[np.ndarray] = []

    stack = [module.action]
    while stack:
        act = stack.pop()
        w = _try_split(act, field, rng, budget, config)
        if w is None:
            leaves.append(act)
            continue
        stack.append(restrict_action(act, w, p))
        stack.append(quotient_action(act, w, p))

    assert sum(a.shape[1] for a in leaves) == module.dim
    # cheap first pass: identical action stacks are identical modules
    # (for 1-dim factors the action is a canonical scalar vector)
    by_bytes: dict[bytes, tuple[np.ndarray, int]] = {}
    for act in leaves:
        key = act.tobytes() + bytes([act.shape[1]])
        stack_, count = by_bytes.get(key, (act, 0))
        by_bytes[key] = (stack_, count + 1)
    reps: list[tuple[ModuleRep, Subspace, int]] = []  # (module, annihilator, count)
    for act, count in by_bytes.values():
        cand = ModuleRep(alg, act, check=True)
        ann = annihilator(alg, cand)
        for idx, (rep, rep_ann, prev) in enumerate(reps):
            if rep.dim == cand.dim and rep_ann == ann and iso_simple(rep, cand):
                reps[idx] = (rep, rep_ann, prev + count)
                break
        else:
            reps.append((cand, ann, count))
    reps.sort(key=lambda t: (t[0].dim, t[1].key()))
    return [(rep, c) for rep, _ann, c in reps]


_SIMPLES_CACHE: dict[tuple, list] = {}


def simples(alg: StructureConstantAlgebra, seed: int = 0,
            config: ChopConfig | None = None) -> list[SimpleRecord]:
    """All simple modules of the algebra, via the regular module.

    Results are cached per (algebra, seed): algebras are immutable and the
    output is canonical, so recomputation would be pure waste.
    """
    import hashlib

    key = (hashlib.sha256(alg.digest()).hexdigest(), seed,
           None if config is None else (config.max_attempts, config.spin_vectors_per_kernel))
    if key in _SIMPLES_CACHE:
        return _SIMPLES_CACHE[key]
    factors = chop(alg, regular_module(alg), seed=seed, config=config)
    records = [
        SimpleRecord(module=rep, annihilator=annihilator(alg, rep), multiplicity=count)
        for rep, count in factors
    ]
    records.sort(key=lambda r: (r.module.dim, r.annihilator.key()))
    _SIMPLES_CACHE[key] = records
    return records


def iso_simple(m1: ModuleRep, m2: ModuleRep) -> bool:
    """True iff a nonzero intertwiner exists between two simple modules."""
    if m1.alg.digest() != m2.alg.digest():
        raise DifferentAlgebras("modules live over different algebras")
    if m1.dim != m2.dim:
        return False
    p = m1.alg.field.p
    m = m1.dim
    if m == 1:
        return bool(np.array_equal(m1.action, m2.action))
    ann1 = annihilator(m1.alg, m1)
    ann2 = annihilator(m1.alg, m2)
    if ann1 != ann2:
        return False
    if m > 12:
        # equal annihilators of simples over a finite field force isomorphism
        # (the common quotient is simple artinian with one simple module)
        return True
    eye = np.eye(m, dtype=np.int64)
    blocks = [
        (np.kron(eye, a.T) - np.kron(b, eye)) % p
        for a, b in zip(m1.action, m2.action)
    ]
    ker = kernel(np.vstack(blocks), p)
    return ker.shape[0] > 0


def annihilator(alg: StructureConstantAlgebra, module: ModuleRep) -> Subspace:
    """Kernel of the action map, as a canonical subspace of the algebra."""
    m = module.dim
    flat = module.action.reshape(alg.dim, m * m).T
    ann = Subspace(alg.field, alg.dim, kernel(flat, alg.field.p))
    assert ideal_closure(alg, ann) == ann, "annihilator must be a two-sided ideal"
    return ann
