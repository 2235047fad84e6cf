"""Exact computation with finite-dimensional bialgebras over prime fields.

The package represents bialgebras and Hopf algebras by explicit structure
constants, computes their characters, winding automorphisms and fiber
algebras, decomposes modules into composition factors, and checks on
concrete instances that the fibers of the primitive-ideal contraction map
onto a central subalgebra match the orbits of the character-group action.
"""

__version__ = "0.1.0"

from .algebra import (
    StructureConstantAlgebra,
    build_algebra,
    center,
    ideal_closure,
    is_central_subalgebra,
    quotient_algebra,
)
from .corpus import (
    CorpusInstance,
    GroupTable,
    builtin_group,
    group_algebra,
    group_algebra_pair,
    quantum_m2_kernel,
    quantum_sl2_kernel,
    shipped_instance,
    small_quantum_sl2,
)
from .hopf import (
    BialgebraData,
    Character,
    CoidealSubalgebra,
    adjoint_action,
    build_bialgebra,
    character_group_X,
    coideal_subalgebra,
    convolution_inverse,
    convolve,
    enumerate_characters,
    fiber_quotient,
    is_right_coideal,
    verify_structure,
    winding,
)
from .linalg import FieldSpec, Subspace, find_root_of_unity, modinv, rref, solve
from .repn import ModuleRep, SimpleRecord, annihilator, chop, iso_simple, regular_module, simples
from .rewrite import Presentation, complete_check, enumerate_basis, extract_bialgebra, normalize
from .specmap import (
    PrimItem,
    Verdict,
    contract,
    fibers,
    orbits,
    prim_enumerate,
    remark_uniform_fibers,
    verify_theorem,
)

__all__ = [
    "__version__",
    "BialgebraData",
    "Character",
    "CoidealSubalgebra",
    "CorpusInstance",
    "FieldSpec",
    "GroupTable",
    "ModuleRep",
    "Presentation",
    "PrimItem",
    "SimpleRecord",
    "StructureConstantAlgebra",
    "Subspace",
    "Verdict",
    "adjoint_action",
    "annihilator",
    "build_algebra",
    "build_bialgebra",
    "builtin_group",
    "center",
    "character_group_X",
    "chop",
    "coideal_subalgebra",
    "complete_check",
    "contract",
    "convolution_inverse",
    "convolve",
    "enumerate_basis",
    "enumerate_characters",
    "extract_bialgebra",
    "fiber_quotient",
    "fibers",
    "find_root_of_unity",
    "group_algebra",
    "group_algebra_pair",
    "ideal_closure",
    "is_central_subalgebra",
    "is_right_coideal",
    "iso_simple",
    "modinv",
    "normalize",
    "orbits",
    "prim_enumerate",
    "quantum_m2_kernel",
    "quantum_sl2_kernel",
    "quotient_algebra",
    "regular_module",
    "remark_uniform_fibers",
    "rref",
    "shipped_instance",
    "simples",
    "small_quantum_sl2",
    "solve",
    "verify_structure",
    "verify_theorem",
    "winding",
]
