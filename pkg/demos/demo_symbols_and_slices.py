"""Symbol maps, exactness at k = 1, the slice condition, and the
constructive a = b + u (x) w decomposition.
"""

import random
import time

from qkverify.rational_linalg import QQ
from qkverify.exterior import KForm, Endomorphism
from qkverify import engine


def main():
    n = 3
    N = 4 * n
    ctx = engine.qk_context(n)

    print("exactness Im Sb_0(u) = Ker Sb_1(u) inside P^1:")
    covs = [("e1", KForm.monomial(N, (1,)))]
    covs += [(f"seeded {i}", u)
             for i, u in enumerate(engine.random_covectors(N, 2, seed=7), 1)]
    for name, u in covs:
        t0 = time.time()
        res = engine.exactness_at_1(ctx, u)
        print(f"  u = {name:10s} dims {res['dim_im_sb0']}/"
              f"{res['dim_ker_sb1']}, equal: {res['equal']} "
              f"[{time.time()-t0:.1f}s]")

    print("\nslice condition g ∩ {A : A_i^j = 0 for i, j != 1}:")
    for kind, label in ((0, "standard basis"), (1, "rotated (3/5, 4/5)"),
                        (2, "rotated (5/13, 12/13)")):
        basis = None if kind == 0 else engine.rotation_basis(N, kind)
        d = engine.condition_C2_intersection(ctx.g, N, basis)
        print(f"  {label:22s} intersection dim {d}")
    d = engine.condition_C2_intersection(engine.so_subspace(N), N)
    print(f"  full so(12) fails it: intersection dim {d}")

    print("\nconstructive decomposition a = b + u (x) w:")
    rng = random.Random(1)
    coords = {}
    for v in ctx.g.basis_vectors():
        c = rng.randint(-2, 2)
        if c:
            for pos, x in v.items():
                coords[pos] = coords.get(pos, QQ(0)) + c * x
    b0 = Endomorphism.from_coordinates(N, coords)
    u = KForm.monomial(N, (2,), QQ(3))
    w0 = {5: QQ(7, 2)}
    a = b0 + engine.tensor_endomorphism(N, u, w0)
    b, w = engine.lemma_decompose(ctx, a, u)
    recon = b + engine.tensor_endomorphism(N, u, w)
    print("  witnesses reconstruct a exactly:", recon == a,
          " b lies in g:", ctx.g.contains(b.coordinates()))


if __name__ == "__main__":
    main()
