"""JSON interchange for bialgebra instances and machine-readable reports.

The algebra file format (schema 1) stores everything as integers:

    {
      "schema": 1,
      "field": {"p": 7},
      "dim": 8,
      "basis_labels": ["g0", ...],
      "unit": [1, 0, ...],
      "mul": [[i, j, k, c], ...],          # e_i e_j contains c e_k
      "comul": [[i, a, b, c], ...],        # Delta(e_i) contains c e_a (x) e_b
      "counit": [1, ...],
      "antipode": [[i, j, c], ...],        # optional, matrix entries S[i, j] = c
      "subalgebra_A": {"basis_vectors": [[...], ...]},   # optional
      "provenance": {...}, "expected": {...}             # optional
    }

Sparse entry arrays are sorted lexicographically and JSON is emitted with
sorted keys and fixed indentation, so serialization is canonical:
parsing a canonical file and re-serializing reproduces it byte for byte.
"""

from __future__ import annotations

import hashlib
import json

import numpy as np

from . import __version__
from .algebra import build_algebra, mul_entries
from .corpus import CorpusInstance
from .errors import HopfibError
from .hopf import BialgebraData, build_bialgebra, coideal_subalgebra
from .linalg import FieldSpec, Subspace

SCHEMA = 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def instance_to_dict(b: BialgebraData, a_subspace: Subspace | None = None,
                     provenance: dict | None = None, expected: dict | None = None) -> dict:
    n = b.dim
    out = {
        "schema": SCHEMA,
        "field": {"p": b.field.p},
        "dim": n,
        "basis_labels": list(b.alg.labels),
        "unit": [int(x) for x in b.alg.unit],
        "mul": [list(e) for e in sorted(mul_entries(b.alg))],
        "comul": [list(e) for e in sorted(b.comul_entries())],
        "counit": [int(x) for x in b.counit],
    }
    if b.antipode is not None:
        entries = [
            [int(i), int(j), int(b.antipode[i, j])]
            for i, j in np.argwhere(b.antipode != 0)
        ]
        out["antipode"] = sorted(entries)
    if a_subspace is not None:
        out["subalgebra_A"] = {
            "basis_vectors": [[int(x) for x in row] for row in a_subspace.basis]
        }
    if provenance:
        out["provenance"] = provenance
    if expected:
        out["expected"] = expected
    return out


def corpus_instance_to_dict(inst: CorpusInstance) -> dict:
    return instance_to_dict(inst.h, inst.a.subspace, inst.provenance, inst.expected)


def raw_bialgebra_from_dict(d: dict) -> BialgebraData:
    """Shape the data without running any verification (for axiom reports)."""
    _require_schema(d)
    field = FieldSpec(int(d["field"]["p"]))
    n = int(d["dim"])
    alg = _raw_algebra(field, n, d)
    return BialgebraData(alg, d.get("comul", []), d["counit"], _antipode_matrix(d, n))


def _raw_algebra(field, n, d):
    from .algebra import StructureConstantAlgebra, dense_mul_tensor

    mul = dense_mul_tensor(n, d.get("mul", []), field.p)
    labels = tuple(d.get("basis_labels") or ())
    return StructureConstantAlgebra(field, n, np.asarray(d["unit"], dtype=np.int64), mul, labels)


def _antipode_matrix(d, n):
    if "antipode" not in d:
        return None
    s = np.zeros((n, n), dtype=np.int64)
    for i, j, c in d["antipode"]:
        s[int(i), int(j)] = int(c)
    return s


def _require_schema(d):
    if d.get("schema") != SCHEMA:
        raise HopfibError(f"unsupported schema {d.get('schema')!r}; expected {SCHEMA}")


def instance_from_dict(d: dict) -> CorpusInstance:
    """Parse and fully verify an instance; A defaults to the scalars."""
    _require_schema(d)
    field = FieldSpec(int(d["field"]["p"]))
    n = int(d["dim"])
    labels = tuple(d.get("basis_labels") or ())
    alg = build_algebra(field, n, d["unit"], d.get("mul", []), labels)
    b = build_bialgebra(alg, d.get("comul", []), d["counit"], _antipode_matrix(d, n))
    if "subalgebra_A" in d:
        rows = d["subalgebra_A"]["basis_vectors"]
        a_space = Subspace(field, n, rows)
    else:
        a_space = Subspace(field, n, [alg.unit])
    a = coideal_subalgebra(b, a_space)
    return CorpusInstance(b, a, d.get("provenance", {}), d.get("expected"))


def write_instance(path, inst: CorpusInstance) -> bytes:
    data = canonical_json(corpus_instance_to_dict(inst)).encode()
    with open(path, "wb") as fh:
        fh.write(data)
    return data


def read_instance(path) -> CorpusInstance:
    with open(path, "rb") as fh:
        return instance_from_dict(json.loads(fh.read().decode()))


def report_dict(command: str, seed: int | None, input_bytes: bytes | None, results: dict) -> dict:
    return {
        "schema": SCHEMA,
        "tool": {"name": "hopfib", "version": __version__},
        "command": command,
        "seed": seed,
        "input_digest": digest_bytes(input_bytes) if input_bytes is not None else None,
        "results": results,
        # wall-clock timing is reported on stderr only: report files must be
        # byte-identical for a fixed (input, seed, command)
        "timing": None,
    }
