"""The splitting of E^1 and the eigenvalues of J(a) = *(a ^ Phi^{n-2}).

End(R^{4n}) = so (+) R Id (+) symm_0 pushes through A^1 to an orthogonal
splitting A+ (+) R Phi (+) A-; J acts as a scalar on each piece with
ratios 1, 1/(n-1), -1/(n-1).
"""

from qkverify.rational_linalg import rational_str
from qkverify import hodge, quaternionic


def main():
    n = 3
    print("A^1(Id) = 4 Phi:", hodge.euler_identity_check(n))

    split = hodge.split_E1(n)
    print(f"dim A+ / R Phi / A- = {split.a_plus.dim} / {split.r_phi.dim} / "
          f"{split.a_minus.dim}  (total {split.total_dim()} = rank A^1)")
    print("components pairwise orthogonal:",
          hodge.components_orthogonal(split))

    v = hodge.verify_j_eigenvalues(n)
    lam0 = v["base_eigenvalue"]
    sc = quaternionic.structure_constants(n)
    print(f"\nbase eigenvalue on R Phi: {rational_str(lam0)} "
          f"= c_n/|Phi|^2 = {rational_str(sc.c_n)}/{rational_str(sc.phi_norm2)}")
    for name in ("r_phi", "a_plus", "a_minus"):
        c = v["components"][name]
        print(f"  {name:8s} dim {c['dim']:3d}  eigenvalue "
              f"{rational_str(c['eigenvalue']):>4s}  ratio "
              f"{rational_str(c['eigenvalue'] / lam0)}  "
              f"(J - lambda) basis-annihilation: {c['annihilated']}")

    print("\nJ self-adjoint on seeded 4-forms:",
          hodge.j_self_adjoint_check(n))

    alg = quaternionic.explicit_structure_algebra(n)
    inv = hodge.invariant_subspace(alg, 4 * n, 4, check_bracket=False)
    phi = quaternionic.build_phi(n)
    print(f"\ninvariant 4-forms: dim {inv.dim}, contains Phi: "
          f"{inv.contains(phi.sparse_coordinates())}")
    oracle = hodge.a_minus_isotypic_check(n)
    print("A- isotypic content via the Casimir oracle:", oracle["oracle"],
          "matches expectation:", oracle["match"])


if __name__ == "__main__":
    main()
