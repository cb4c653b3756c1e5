"""The rank bookkeeping behind the key dimension identity at n = 3.

Checks, with exact integer arithmetic on R^12:

    rank A^2 = dim P^2 = dim Lambda^2 x V - dim g^2 = 24n^3-12n^2-12n = 504

together with the bijectivity of the wedge map V* x so(12) -> Lambda^2 x V
that makes g^2 a free module over the covectors.
"""

import time
from math import comb

from qkverify.rational_linalg import rank
from qkverify import engine


def timed(label, fn):
    t0 = time.time()
    out = fn()
    print(f"{label:46s} {out}   [{time.time()-t0:.2f}s]")
    return out


def main():
    n = 3
    N = 4 * n
    ctx = engine.qk_context(n)

    print(f"dim Lambda^2 x V = C({N},2) * {N} =", comb(N, 2) * N)
    timed("rank of the wedge map on V* x so(12)",
          lambda: rank(engine.a_map_matrix(N, engine.so_subspace(N))))
    g2 = timed("dim g^2 (wedges of covectors with g)", lambda: ctx.gk(2).dim)
    print(f"  = 12 * dim g = 12 * {ctx.g.dim} = {12 * ctx.g.dim}")
    p2 = timed("dim P^2 (orthogonal complement)", lambda: ctx.pk(2).dim)
    e2 = timed("rank A^2", lambda: ctx.ek(2).dim)
    print("formula 24n^3 - 12n^2 - 12n =", engine.ek_dimension_formula(n))

    chk = timed("A^2 restricted to P^2 bijective onto E^2",
                lambda: engine.restricted_ak_iso_check(ctx, 2))
    assert chk["injective"] and chk["image_is_ek"]
    assert e2 == p2 == 792 - g2 == engine.ek_dimension_formula(n) == 504
    print("\nall four numbers agree: 504")


if __name__ == "__main__":
    main()
