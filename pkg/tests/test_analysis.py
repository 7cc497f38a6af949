"""Classification, minor determinants, self-duality, and distance oracles."""

import random
from itertools import combinations

import pytest

from tgrs.field import make_field
from tgrs.matrix import Matrix
from tgrs.code import TgrsCode
from tgrs.analysis import (BudgetExceeded, CodeReport, SelfDualShapeError,
                           build_report, classify, dual_min_distance_oracle,
                           k_minor_det, min_distance_oracle, recover_lambda,
                           self_dual_matrix, self_dual_structural,
                           subset_sum_witness)
from tgrs.examples import example_code

from helpers import random_code, random_distinct_elements

F13 = make_field(13)


def f13_code(alpha=(1, 2, 3, 4), v=(1, 1, 1, 1), k=2, eta=5):
    return TgrsCode(F13, [F13.element(a) for a in alpha],
                    [F13.element(x) for x in v], k, F13.element(eta))


# -- subset-sum witness ------------------------------------------------------------

def brute_force_hits(alpha, k, target):
    """Oracle: all 1-based witnesses via exhaustive combinations."""
    zero = target.ctx.zero()
    hits = []
    for sub in combinations(range(len(alpha)), k):
        total = zero
        for i in sub:
            total = total + alpha[i]
        if total == target:
            hits.append(tuple(i + 1 for i in sub))
    return hits


def test_witness_is_colex_first_among_all_hits():
    F61 = make_field(61)
    alpha = [F61.element(pow(16, i, 61)) for i in range(1, 15)]
    target = F61.element(30)
    hits = brute_force_hits(alpha, 7, target)
    assert len(hits) == 58
    colex_first = min(hits, key=lambda t: tuple(reversed(t)))
    got = subset_sum_witness(alpha, 7, target)
    assert got == colex_first == (1, 2, 3, 4, 6, 7, 9)
    # the recorded reference witness is also a member of the hit set
    assert (2, 5, 9, 11, 12, 13, 14) in hits


def test_witness_absent():
    F89 = make_field(89)
    alpha = [F89.element(pow(64, i, 89)) for i in range(1, 11)]
    assert subset_sum_witness(alpha, 5, F89.element(44)) is None
    assert brute_force_hits(alpha, 5, F89.element(44)) == []


def test_witness_full_subset_edge():
    alpha = [F13.element(a) for a in (1, 2, 3)]
    assert subset_sum_witness(alpha, 3, F13.element(6)) == (1, 2, 3)
    assert subset_sum_witness(alpha, 3, F13.element(7)) is None


def test_witness_k_out_of_range():
    alpha = [F13.element(a) for a in (1, 2, 3)]
    with pytest.raises(ValueError):
        subset_sum_witness(alpha, 0, F13.one())
    with pytest.raises(ValueError):
        subset_sum_witness(alpha, 4, F13.one())


def test_witness_against_brute_force_oracle():
    rng = random.Random(13)
    for _ in range(60):
        p = rng.choice([7, 11, 13, 17])
        F = make_field(p)
        n = rng.randrange(2, min(10, p + 1))
        k = rng.randrange(1, n + 1)
        alpha = random_distinct_elements(F, n, rng)
        target = F.random_element(rng)
        hits = brute_force_hits(alpha, k, target)
        got = subset_sum_witness(alpha, k, target)
        if hits:
            assert got == min(hits, key=lambda t: tuple(reversed(t)))
        else:
            assert got is None


def test_mitm_strategy_matches_direct():
    rng = random.Random(29)
    for _ in range(80):
        p = rng.choice([11, 13, 31])
        F = make_field(p)
        n = rng.randrange(3, min(12, p + 1))
        k = rng.randrange(1, n + 1)
        alpha = random_distinct_elements(F, n, rng)
        target = F.random_element(rng)
        direct = subset_sum_witness(alpha, k, target, strategy="direct")
        mitm = subset_sum_witness(alpha, k, target, strategy="mitm")
        assert direct == mitm


def test_large_n_uses_mitm_automatically():
    # n = 30 is served by the meet-in-the-middle split; integer sums of
    # fifteen of 1..30 range over [120, 345], far below the modulus
    F = make_field(1009)
    alpha = [F.element(i) for i in range(1, 31)]
    assert subset_sum_witness(alpha, 15, F.element(1000)) is None
    assert subset_sum_witness(alpha, 15, F.element(119)) is None
    assert subset_sum_witness(alpha, 15, F.element(120)) == tuple(range(1, 16))
    assert subset_sum_witness(alpha, 15, F.element(345)) == tuple(range(16, 31))


# -- classification ------------------------------------------------------------------

def test_classify_hand_example_nmds():
    cls = classify(f13_code())
    assert cls.verdict == "NMDS"
    # deterministic colex-first witness; positions 2,3 carry values 2+3 = 5 = -1/eta
    assert cls.witness == (2, 3)
    total = sum(a for a in (2, 3))
    assert F13.element(total) == -F13.element(5).inverse()
    # the pair {1,4} is an equally valid member of the witness set
    assert F13.element(1 + 4) == -F13.element(5).inverse()


def test_classify_reference_codes():
    assert classify(example_code("3.10")).verdict == "MDS"
    cls = classify(example_code("3.11"))
    assert cls.verdict == "NMDS"
    assert cls.witness is not None


def test_witness_soundness_columns_drop_rank():
    rng = random.Random(41)
    found = 0
    while found < 12:
        code = random_code(rng, q_max=60, n_max=10)
        cls = classify(code)
        if cls.verdict != "NMDS":
            continue
        found += 1
        total = code.ctx.zero()
        for pos in cls.witness:
            total = total + code.alpha[pos - 1]
        assert total == -code.eta.inverse()
        g = code.generator_matrix()
        cols = [g.column(pos - 1) for pos in cls.witness]
        sub = Matrix(code.ctx, list(map(list, zip(*cols))))
        assert sub.rank() == code.k - 1


# -- minor determinant identity ---------------------------------------------------------

def test_k_minor_det_examples():
    # 1 + eta*sum = 0 makes the minor vanish: subset {1,4}, eta=5 over F_13
    val = k_minor_det([F13.element(1), F13.element(4)], F13.element(5))
    assert val.is_zero()
    # k = 1: empty Vandermonde product leaves 1 + eta*alpha
    val = k_minor_det([F13.element(3)], F13.element(5))
    assert val == F13.element(1 + 5 * 3)


def test_k_minor_det_rejects_repeats():
    with pytest.raises(ValueError):
        k_minor_det([F13.one(), F13.one()], F13.element(5))


def test_k_minor_det_matches_literal_determinant():
    rng = random.Random(6)
    for _ in range(40):
        code = random_code(rng, q_max=50, n_max=8)
        g = code.generator_matrix()
        if any(not v == code.ctx.one() for v in code.v):
            # determinant identity is stated for v = 1 columns
            code = TgrsCode(code.ctx, code.alpha, [code.ctx.one()] * code.n,
                            code.k, code.eta)
            g = code.generator_matrix()
        for sub in combinations(range(code.n), code.k):
            literal = Matrix(code.ctx,
                             [[g[i, j] for j in sub] for i in range(code.k)]).det()
            closed = k_minor_det([code.alpha[j] for j in sub], code.eta)
            assert literal == closed


# -- self-duality -------------------------------------------------------------------------

def test_structural_reference_code():
    code = example_code("3.10")
    res = self_dual_structural(code)
    assert res.self_dual and res.structural
    assert res.lam == code.ctx.one()


def test_structural_rejects_odd_shape():
    with pytest.raises(SelfDualShapeError):
        self_dual_structural(f13_code(k=1))  # n=4, k=1


def test_structural_small_k_falls_back_to_matrix():
    code = f13_code(v=(2, 1, 5, 3))  # v_i^2 = 2*u_i and 2 + a*eta = 0
    res = self_dual_structural(code)
    assert res.self_dual and not res.structural
    assert res.lam == F13.element(2)
    assert self_dual_matrix(code)


def test_zero_sum_codes_never_self_dual():
    rng = random.Random(19)
    for _ in range(15):
        code = random_code(rng, q_max=100, n_max=12,
                           force_tag="ZERO_SUM", force_even_n=True)
        assert not self_dual_matrix(code)
        if code.k >= 3:
            assert not self_dual_structural(code).self_dual


def test_singular_codes_never_self_dual():
    rng = random.Random(23)
    for _ in range(15):
        code = random_code(rng, q_max=100, n_max=12,
                           force_tag="SINGULAR", force_even_n=True)
        assert not self_dual_matrix(code)
        if code.k >= 3:
            assert not self_dual_structural(code).self_dual


def test_structural_matches_matrix_on_random_even_codes():
    rng = random.Random(37)
    for _ in range(25):
        code = random_code(rng, q_max=100, n_max=12, force_even_n=True)
        if code.k < 3:
            continue
        assert self_dual_structural(code).self_dual == self_dual_matrix(code)


def test_matrix_test_detects_single_column_perturbation():
    code = example_code("3.11")
    assert self_dual_matrix(code)
    broken = 0
    for i in range(code.n):
        v = list(code.v)
        v[i] = v[i] + code.ctx.one()
        if v[i].is_zero():
            continue
        perturbed = TgrsCode(code.ctx, code.alpha, v, code.k, code.eta)
        if not self_dual_matrix(perturbed):
            broken += 1
    assert broken >= 1


def test_matrix_test_false_for_odd_shape():
    assert not self_dual_matrix(f13_code(k=1))


def test_recover_lambda_none_for_random_v():
    code = f13_code(v=(1, 2, 3, 4))
    assert recover_lambda(code) is None


# -- distance oracles ------------------------------------------------------------------------

def test_distances_hand_example():
    code = f13_code()  # NMDS [4,2]
    assert min_distance_oracle(code) == 2
    assert dual_min_distance_oracle(code) == 2


def test_distances_reference_codes():
    mds = example_code("3.10")
    assert min_distance_oracle(mds) == 6
    assert dual_min_distance_oracle(mds) == 6


def test_weight_one_codeword_detected():
    # n=2, k=1 with alpha containing -1/eta: the twist kills one coordinate
    F = make_field(13)
    eta = F.element(5)
    alpha = [-eta.inverse(), F.element(1)]
    code = TgrsCode(F, alpha, [F.one(), F.one()], 1, eta)
    assert min_distance_oracle(code) == 1


def test_budget_guard():
    code = example_code("3.11")
    with pytest.raises(BudgetExceeded):
        min_distance_oracle(code, budget=10)
    with pytest.raises(BudgetExceeded):
        dual_min_distance_oracle(code, budget=10)


def test_classification_agrees_with_oracle():
    rng = random.Random(47)
    for _ in range(40):
        code = random_code(rng, q_max=60, n_max=12)
        cls = classify(code)
        d = min_distance_oracle(code)
        if cls.verdict == "MDS":
            assert d == code.n - code.k + 1
        else:
            assert d == code.n - code.k
            assert dual_min_distance_oracle(code) == code.k


# -- reports ------------------------------------------------------------------------------------

def test_report_round_trip_and_fields():
    code = f13_code()
    report = build_report(code)
    doc = report.to_dict()
    assert doc["schema"] == 1
    assert doc["params"]["n"] == 4 and doc["params"]["k"] == 2
    assert doc["classification"] == "NMDS"
    assert doc["witness"] == [2, 3]
    assert doc["checks"]["G_Ht_zero"] is True
    assert CodeReport.from_dict(doc) == report


def test_report_classification_iff_witness():
    rng = random.Random(53)
    for _ in range(20):
        code = random_code(rng, q_max=80, n_max=10)
        report = build_report(code, with_distances=False)
        assert (report.classification == "NMDS") == (report.witness is not None)


def test_report_skips_distances_when_budget_exhausted():
    code = example_code("3.11")
    report = build_report(code, budget=10)
    assert report.min_distance is None
    assert report.dual_min_distance is None
    assert report.classification == "NMDS"


def test_report_text_carries_all_fields():
    report = build_report(f13_code())
    text = report.to_text()
    lines = dict(line.split(": ", 1) for line in text.splitlines())
    doc = report.to_dict()
    assert lines["field"] == doc["params"]["field"]
    assert int(lines["n"]) == doc["params"]["n"]
    assert lines["classification"] == doc["classification"]
    assert lines["witness"] == ",".join(map(str, doc["witness"]))
    assert (lines["self_dual"] == "true") == doc["self_dual"]
    assert int(lines["min_distance"]) == doc["min_distance"]
