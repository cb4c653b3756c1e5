"""The engine is generic over the structure form.

Cross-validation on three classical stabilizers with known dimensions:
the 3-form on R^7 (dim 14), the self-dual 4-form on R^8 (dim 21), and
volume forms (traceless endomorphisms, dim N^2 - 1).
"""

import time

from qkverify.engine import (
    StructureContext, g2_form, cayley_form, volume_structure,
)


def main():
    cases = [
        ("3-form on R^7", g2_form(), 14),
        ("self-dual 4-form on R^8", cayley_form(), 21),
        ("volume form on R^3", volume_structure(3), 8),
        ("volume form on R^5", volume_structure(5), 24),
    ]
    for name, phi, expect in cases:
        t0 = time.time()
        ctx = StructureContext(phi)
        d = ctx.g.dim
        print(f"{name:26s} stabilizer dim {d:3d} (expected {expect})  "
              f"{'OK' if d == expect else 'MISMATCH'} "
              f"[{time.time()-t0:.2f}s]")


if __name__ == "__main__":
    main()
