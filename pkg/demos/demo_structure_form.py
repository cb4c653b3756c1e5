"""Walk through the basic quaternionic objects on R^{4n}.

Builds I, J, K, the three Kaehler 2-forms, the structure 4-form Phi, the
volume normalization Phi^n = c_n vol, and the stabilizer algebra, for
n = 1, 2, 3.
"""

import time

from qkverify.rational_linalg import rational_str, subspace_equal
from qkverify import quaternionic as q
from qkverify.engine import qk_context


def main():
    for n in (1, 2, 3):
        print(f"--- n = {n} (V = R^{4*n}) ---")
        t = q.build_triple(n)
        minus_id = t.I.compose(t.I)
        print("I^2 = -Id:", minus_id == t.J.compose(t.J) == t.K.compose(t.K))
        print("IJ = K:", t.I.compose(t.J) == t.K)

        wI, wJ, wK = q.kaehler_forms(n)
        print("omega_I =", wI)
        phi = q.build_phi(n)
        print("Phi has", len(phi.terms), "monomials")

        sc = q.structure_constants(n)
        print(f"Phi^{n} = {rational_str(sc.c_n)} vol,  "
              f"|Phi|^2 = {rational_str(sc.phi_norm2)}")

        t0 = time.time()
        ctx = qk_context(n)
        explicit = q.explicit_structure_algebra(n)
        print(f"stabilizer dim = {ctx.g.dim} "
              f"(2n^2+n+3 = {2*n*n+n+3}), "
              f"equals explicit sp(n)+sp(1): "
              f"{subspace_equal(ctx.g, explicit)} "
              f"[{time.time()-t0:.2f}s]")
        if n == 1:
            print("  (n = 1 is degenerate: Phi is a volume form, so the")
            print("   full stabilizer is sl(4), dim 15, not sp(1)+sp(1))")
        print()


if __name__ == "__main__":
    main()
