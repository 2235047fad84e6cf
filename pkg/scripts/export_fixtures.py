#!/usr/bin/env python3
"""Write the shipped corpus to disk: JSON instance files plus presentation
text files for the rewriting-based families.

Usage: python3 scripts/export_fixtures.py [outdir]   (default: ./fixtures)
"""

import pathlib
import sys

from hopfib.corpus import (
    SHIPPED_NAMES,
    quantum_m2_presentation,
    quantum_sl2_presentation,
    shipped_instance,
    small_quantum_sl2_presentation,
)
from hopfib.fileio import write_instance
from hopfib.rewrite import render_presentation


def main() -> int:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    for name in SHIPPED_NAMES:
        inst = shipped_instance(name)
        path = outdir / f"{name}.json"
        data = write_instance(path, inst)
        print(f"{path} ({len(data)} bytes, dim {inst.dim})")
    presentations = {
        "qsl2": quantum_sl2_presentation(3, 7),
        "usl2": small_quantum_sl2_presentation(3, 7),
        "qm2": quantum_m2_presentation(3, 7),
    }
    for name, pres in presentations.items():
        path = outdir / f"{name}.pres"
        path.write_text(render_presentation(pres), encoding="utf-8")
        print(f"{path} ({len(pres.rules)} rules)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
