from math import comb

import pytest

from qkverify.rational_linalg import QQ
from qkverify import rep


def test_weight_rule():
    assert rep.weight_of(3, 1, 3) == (2, 1, 0)
    assert rep.weight_of(5, 2, 3) == (2, 2, 1)
    assert rep.weight_of(1, 0, 3) == (1, 0, 0)
    assert rep.weight_of(4, 0, 3) is None      # p - q > n
    assert rep.weight_of(3, 2, 3) is None      # p < 2q


def test_weyl_dims_n3():
    expected = {(1, 0): 6, (2, 0): 14, (2, 1): 21, (3, 0): 14, (3, 1): 64,
                (4, 1): 70, (4, 2): 90, (5, 2): 126,
                (4, 0): 0, (5, 0): 0, (5, 1): 0}
    for (p, q), d in expected.items():
        assert rep.weyl_dim(p, q, 3) == d


def test_weyl_dim_adjoint():
    # lambda^2_1 is the adjoint module of sp(n)
    for n in (1, 2, 3, 4):
        assert rep.weyl_dim(2, 1, n) == n * (2 * n + 1)


def test_sigma_dims():
    assert [rep.sigma_dim(r) for r in range(5)] == [1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        rep.sigma_dim(-1)


def test_table_sums():
    assert rep.table_dimension_sum(rep.LAMBDA3_TABLE, 3) == comb(12, 3)
    assert rep.table_dimension_sum(rep.LAMBDA4_TABLE, 3) == comb(12, 4)
    # the transcribed degree-5 table overshoots the binomial at n = 3
    assert rep.table_dimension_sum(rep.LAMBDA5_TABLE, 3) == 876
    assert comb(12, 5) == 792
    # E-space tables
    assert rep.table_dimension_sum(rep.E0_TABLE, 3) == 12
    assert rep.table_dimension_sum(rep.E1_TABLE, 3) == 120
    assert rep.table_dimension_sum(rep.E2_TABLE, 3) == 504


def test_casimir_scalar_on_lambda1():
    s1, s2 = rep.casimir_scales(2)
    assert s1 != 0 and s2 != 0


def test_casimir_candidate_values_distinct_n3():
    vals = {}
    for p in range(6):
        for q in range(p // 2 + 1):
            v = rep.sp_n_casimir_value(p, q, 3)
            if v is None:
                continue
            assert v not in vals, f"collision {(p, q)} vs {vals[v]}"
            vals[v] = (p, q)
    assert vals[QQ(0)] == (0, 0)
    assert vals[QQ(7)] == (1, 0)
    assert vals[QQ(16)] == (2, 1)


def test_casimir_decompose_lambda2_n2():
    dec = rep.casimir_decompose(2, 2)
    assert dec.total == comb(8, 2)
    assert dec.unidentified_dim() == 0
    got = dec.as_dict()
    # Lambda^2 = sp(n) (+) sp(1) (+) (lambda^2_0 sigma^2 part) ...; at
    # least the two adjoint summands must appear with their dimensions
    assert got["L2_1"] == 10
    assert got["1*S2"] == 3


def test_casimir_decompose_lambda3_n3():
    dec = rep.casimir_decompose(3, 3)
    assert dec.as_dict() == {"L3_0*S3": 56, "L1_0*S3": 24,
                             "L3_1*S1": 128, "L1_0*S1": 12}
    cmp3 = rep.compare_with_table(dec)
    assert cmp3["agree"]


def test_casimir_commutes_n2():
    C1, C2 = rep.casimir_pair(2, 2)
    assert rep.commutes_with_action(C1, 2, 2)
    assert rep.commutes_with_action(C2, 2, 2)


def test_bochner_audit():
    audit = rep.audit_bochner()
    assert audit["all_match"]
    assert audit["checks"]["kappa"]
    assert audit["checks"]["B1,-2"]


def test_bochner_combination_at_n3():
    # at n = 3 the surviving coefficients specialize correctly
    r14, r15, r16 = rep.bochner_relations()
    n = QQ(3)
    c14, c15, c16 = QQ(8), QQ(-18), QQ(7, 2)
    coeff = {}
    for s in rep.SYMBOLS:
        coeff[s] = (c14 * r14.rhs[s](n) + c15 * r15.rhs[s](n)
                    + c16 * r16.rhs[s](n))
    np2 = QQ(5)
    assert coeff["B1,1"] == -7 * 1 * np2          # -(2n+1)(n-2)
    assert coeff["Bm1,1"] == -2 * 1 * 5 * np2     # -2(n-2)(n+2)
    assert coeff["Bm1,3"] == -4 * 7 * 4 * np2     # -4(2n+1)(n+1)
    assert coeff["B1,-2"] == 0
