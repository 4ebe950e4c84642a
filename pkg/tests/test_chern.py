import math
from fractions import Fraction

import pytest

from hmsurf.chern import (
    EXACT_C_CUTOFF,
    ChernError,
    ChernReport,
    HypothesisError,
    LinearForm,
    ModeMixError,
    TableRow,
    UniquenessError,
    adjunction_self_intersection,
    c1sq_lower_bound,
    c1sq_terms,
    c2_lower_check,
    chern_numbers,
    classify,
    curve_chern_integrality,
    default_discriminants,
    genus_gamma0_rational,
    norm_achievable,
    table_diff,
    theorem_table,
)
from hmsurf.elliptic import EllipticCounts
from hmsurf.field import NarrowClassError, UnsupportedShapeError, make_field
from hmsurf.forms import h_narrow_indefinite
from hmsurf.ntheory import is_prime
from hmsurf.reference_data import published_discriminants, published_row
from hmsurf.zeta import local_chern_divisor_sum


# ---------------------------------------------------------------------------
# linear forms and exact reports
# ---------------------------------------------------------------------------

def test_linear_form():
    f = LinearForm(Fraction(18), Fraction(3, 2))
    assert f(0) == 18 and f(6) == 27 and f(Fraction(1, 3)) == Fraction(37, 2)
    assert not f.is_constant
    assert str(f) == "18 + 3/2*a2"
    with pytest.raises(ChernError):
        f.as_fraction()
    g = LinearForm(Fraction(-3))
    assert g.is_constant and g.as_fraction() == -3 and str(g) == "-3"


def test_exact_pipeline_d13_norm4():
    rep = classify(13, 4)
    assert isinstance(rep, ChernReport)
    assert rep.mode == "exact" and (rep.D, rep.q, rep.n) == (13, 4, 5)
    assert rep.zeta == Fraction(1, 6)
    assert rep.c == -3 and rep.l == 3
    assert rep.c1_sq == Fraction(-3)
    assert (rep.c2.const, rep.c2.a2_coeff) == (Fraction(18), Fraction(3, 2))
    assert (rep.chi.const, rep.chi.a2_coeff) == (Fraction(5, 4), Fraction(1, 8))
    assert rep.verdict == "inconclusive"
    assert any("a2" in note for note in rep.notes)
    e = rep.counts.entries()
    assert (e["a3_plus"], e["a3_minus"], e["a4_plus"], e["a4_minus"]) == (2, 2, 1, 1)
    assert e["a2"] is None


def test_exact_pipeline_other_fixtures():
    rep3 = classify(13, 3)
    assert rep3.n == 4 and rep3.c1_sq == Fraction(-2)
    assert (rep3.c2.const, rep3.c2.a2_coeff) == (Fraction(8), Fraction(3, 2))
    rep5 = classify(5, 4)
    assert rep5.n == 5 and rep5.c1_sq == Fraction(-2)
    assert (rep5.c2.const, rep5.c2.a2_coeff) == (Fraction(11), Fraction(3, 2))
    for rep in (rep3, rep5):
        assert rep.verdict == "inconclusive"


def test_twelve_chi_identity():
    for D, q in ((13, 4), (13, 3), (5, 4)):
        rep = classify(D, q)
        assert 12 * rep.chi.const == rep.c1_sq + rep.c2.const
        assert 12 * rep.chi.a2_coeff == rep.c2.a2_coeff
        for a2 in (0, 1, 6, 10):
            assert 12 * rep.chi(a2) == rep.c1_sq + rep.c2(a2)


def test_classify_with_new_order2_is_constant():
    rep = classify(13, 4, new_order2=6)
    assert rep.chi.is_constant and rep.chi.as_fraction() == 2
    assert rep.c2.as_fraction() == 27
    assert rep.verdict == "inconclusive"  # c1^2 is still negative


def test_classify_never_general_type_on_nonpositive_c1sq():
    for D, q in ((13, 4), (13, 3), (5, 4)):
        rep = classify(D, q)
        assert rep.c1_sq <= 0 and rep.verdict != "general_type"


def test_classify_input_errors():
    with pytest.raises(ChernError, match="norm 6"):
        classify(13, 6)
    with pytest.raises(ChernError):
        classify(13, 2)  # 2 is inert: the degree-one norm-2 prime does not exist
    with pytest.raises(ChernError, match="involution"):
        classify(17, 2)  # no stored involution action for this field
    with pytest.raises(UnsupportedShapeError):
        classify(12, 4)
    with pytest.raises(ChernError):
        classify(13, 4, mode="banana")


def test_chern_numbers_mode_mixing():
    bound_counts = EllipticCounts(a2=Fraction(3, 2), mode="upper_bound",
                                  group_tag="w_gamma0")
    with pytest.raises(ModeMixError):
        chern_numbers(None, None, bound_counts, None, Fraction(1, 6), n=5)
    wrong_level = EllipticCounts(a2=1, a3_plus=2, a3_minus=2,
                                 mode="exact", group_tag="gamma0")
    with pytest.raises(ModeMixError):
        chern_numbers(None, None, wrong_level, None, Fraction(1, 6), n=5)
    exact = EllipticCounts(a2=1, a3_plus=2, a3_minus=2,
                           mode="exact", group_tag="w_gamma0")
    with pytest.raises(ModeMixError):
        chern_numbers(13, None, exact, None, Fraction(1, 6), mode="bound", n=5)


def test_chern_numbers_trivial_zero_counts():
    zero = EllipticCounts(a2=0, a3_plus=0, a3_minus=0, a4_plus=0, a4_minus=0,
                          a6_plus=0, a6_minus=0, mode="exact",
                          group_tag="w_gamma0")
    rep = chern_numbers(None, None, zero, None, Fraction(1, 6), n=5)
    assert rep.c1_sq == 2 * 5 * Fraction(1, 6)  # no cusp, no elliptic terms
    assert rep.c2.is_constant and rep.c2.as_fraction() == Fraction(5, 6)


# ---------------------------------------------------------------------------
# lower-bound machinery
# ---------------------------------------------------------------------------

def test_c2_lower_check_frozen():
    for D, n, ok in ((13, 93, True), (13, 92, False), (17, 62, True),
                     (17, 61, False), (853, 3, True), (5, 387, True),
                     (5, 386, False)):
        assert c2_lower_check(D, n) == ok, (D, n)


def test_c2_check_monotone():
    for D in (13, 101):
        passing = [n for n in range(3, 150) if c2_lower_check(D, n)]
        assert passing == list(range(passing[0], 150))


def test_c1sq_lower_bound_d109_mode_split():
    # the two zeta handlings straddle zero at n=4
    assert c1sq_lower_bound(109, 4) <= 0
    assert c1sq_lower_bound(109, 5) > 0
    assert c1sq_lower_bound(109, 4, zeta_mode="exact") > 0


def test_c1sq_lower_bound_monotone_in_n():
    for D in (109, 853):
        vals = [c1sq_lower_bound(D, n) for n in range(3, 13)]
        assert all(b > a for a, b in zip(vals, vals[1:]))


def test_c1sq_penalties_reduce_bound():
    for D in (109, 853):
        for n in (5, 10):
            g = c1sq_lower_bound(D, n, "generic")
            assert c1sq_lower_bound(D, n, "p2_inert") < g
            assert c1sq_lower_bound(D, n, "p3_inert") < g


def test_c1sq_terms_identity():
    t = c1sq_terms(109, 5)
    assert set(t) == {"volume_lb", "c_term_lb", "penalty_ub", "lower_bound"}
    assert all(isinstance(v, Fraction) for v in t.values())
    assert t["lower_bound"] == t["volume_lb"] + t["c_term_lb"] - t["penalty_ub"]
    assert t["penalty_ub"] > 0 and t["c_term_lb"] < 0


def test_c_mode_hypothesis_gate():
    with pytest.raises(HypothesisError):
        c1sq_lower_bound(109, 5, c_mode="bound_c")
    assert c1sq_lower_bound(853, 5, c_mode="bound_c") > 0
    assert EXACT_C_CUTOFF == 500


def test_exact_c_dominates_estimated_c():
    for n in (3, 5, 10):
        assert (c1sq_lower_bound(853, n, c_mode="exact_c")
                >= c1sq_lower_bound(853, n, c_mode="bound_c"))


def test_c_term_estimate_is_valid_for_table():
    # the analytic floor for c must sit below the true divisor-sum value
    for D in default_discriminants():
        floor = -(math.sqrt(D) / 2) * (3 / (2 * math.pi**2) * math.log(D) ** 2
                                       + 21 / 20 * math.log(D))
        assert local_chern_divisor_sum(D) >= floor - 1e-9, D


def test_c1sq_argument_validation():
    with pytest.raises(ChernError):
        c1sq_lower_bound(109, 5, "banana")
    with pytest.raises(ChernError):
        c1sq_lower_bound(109, 5, c_mode="banana")
    with pytest.raises(ChernError):
        c1sq_lower_bound(109, 5, zeta_mode="banana")
    with pytest.raises(ChernError, match="minimum 3"):
        classify(13, 1, mode="bound")


# ---------------------------------------------------------------------------
# bound-mode classification
# ---------------------------------------------------------------------------

def test_classify_bound_mode():
    rep = classify(13, 103, mode="bound")
    assert rep.mode == "bound" and rep.n == 104
    assert rep.verdict == "general_type"
    assert rep.c1_sq > 0 and rep.c2.as_fraction() > 0
    assert "c2_check:pass" in rep.notes and "p_case:generic" in rep.notes

    rep2 = classify(13, 4, mode="bound")
    assert rep2.verdict == "inconclusive"
    assert "p_case:p2_inert" in rep2.notes and "c2_check:fail" in rep2.notes

    # degree sweep: a norm with no actual degree-one prime is still assessed
    assert not norm_achievable(97, 4)
    assert classify(97, 4, mode="bound").verdict == "general_type"


def test_bound_mode_never_beats_exact_mode():
    # the certified floor must sit at or below the true exact value
    for D, q in ((13, 4), (13, 3), (5, 4)):
        assert classify(D, q, mode="bound").c1_sq <= classify(D, q).c1_sq


def test_norm_achievable():
    expect = {2: False, 3: True, 4: True, 9: False, 13: True, 17: True}
    for q, ok in expect.items():
        assert norm_achievable(13, q) == ok, q


# ---------------------------------------------------------------------------
# the classification table
# ---------------------------------------------------------------------------

def test_default_discriminants():
    ds = default_discriminants()
    assert len(ds) == 64 and ds[0] == 13 and ds[-1] == 853
    assert ds == sorted(ds)
    for D in ds:
        assert is_prime(D) and D % 4 == 1
        assert h_narrow_indefinite(D) == 1
    assert 229 not in ds and 257 not in ds
    assert default_discriminants(100) == [13, 17, 29, 37, 41, 53, 61, 73, 89, 97]


def test_table_row_allows():
    row = TableRow(D=29, n_min=28, exclusions=((5, "p2_inert"), (10, "p3_inert")))
    assert not row.allows(27) and row.allows(28) and row.allows(30)
    assert not row.allows(5) and not row.allows(10)


def test_theorem_table_spot_rows():
    rows = theorem_table()
    assert [r.D for r in rows] == default_discriminants()
    by_d = {r.D: r for r in rows}
    spots = {13: 93, 17: 62, 29: 28, 37: 20, 41: 17, 53: 12,
             61: 10, 73: 7, 89: 6, 97: 5}
    for D, n_min in spots.items():
        assert by_d[D].n_min == n_min, D
    assert by_d[853].n_min == 3 and by_d[853].exclusions == ()
    assert by_d[853].n_min_alt is None  # above the exact-c cutoff
    # secondary zeta handling shifts three close calls
    assert by_d[73].n_min_alt == 8
    assert by_d[89].n_min_alt == 7
    assert by_d[97].n_min_alt == 7
    for r in rows:
        assert r.source == "computed"
        for n, case in r.exclusions:
            assert n in (5, 10) and case in ("p2_inert", "p3_inert")


def test_theorem_table_exclusion_logic():
    by_d = {r.D: r for r in theorem_table()}
    want = {29: {5, 10}, 101: {5, 10}, 137: {10}, 157: {5}}
    for D, ns in want.items():
        assert {n for n, _ in by_d[D].exclusions} == ns, D
    # exclusions only ever appear for the matching inert prime
    for r in theorem_table():
        for n, case in r.exclusions:
            if case == "p2_inert":
                assert n == 5 and r.D % 8 == 5
            else:
                assert n == 10 and r.D % 3 == 2


def test_theorem_table_small_window():
    rows = theorem_table(dmax=100)
    assert [r.D for r in rows] == [13, 17, 29, 37, 41, 53, 61, 73, 89, 97]


def test_published_rows_cover_table():
    for D in default_discriminants():
        n_min, excl = published_row(D)
        assert n_min >= 3
        assert set(excl) <= {5, 10}
    assert published_discriminants() == default_discriminants(852)


def test_table_diff_frozen_observations():
    rows = theorem_table()
    diff = table_diff(rows)
    assert diff["compared"] == 64 and diff["unmatched"] == []
    assert diff["agree"] == 52
    ds = sorted(e["D"] for e in diff["discrepancies"])
    assert ds == [89, 109, 113, 233, 269, 281, 293, 317, 353, 389, 449, 461]
    for e in diff["discrepancies"]:
        assert e["disagree_at"], e["D"]
        assert set(e["breakdown"]) == {str(n) for n in e["disagree_at"]}
        for item in e["breakdown"].values():
            assert set(item) == {"c2_check", "c1sq_exact_zeta",
                                 "c1sq_bound_zeta", "p_case"}
            for part in ("c1sq_exact_zeta", "c1sq_bound_zeta"):
                terms = item[part]
                assert set(terms) == {"volume_lb", "c_term_lb",
                                      "penalty_ub", "lower_bound"}
                for pair in terms.values():
                    assert len(pair) == 2 and all(isinstance(x, int) for x in pair)
    # the mandatory spot checks are never among the disagreements
    assert not {13, 17, 29, 37, 41, 53, 61, 73, 97, 101, 137, 157, 853} & set(ds)


def test_table_diff_direction_examples():
    diff = table_diff(theorem_table())
    by_d = {e["D"]: e for e in diff["discrepancies"]}
    # one side stricter: our row admits n=4 for D=109 where the published
    # row starts at 6; secondary zeta handling agrees with the published one
    assert by_d[109]["computed"]["n_min"] == 4
    assert by_d[109]["published"]["n_min"] == 6
    assert by_d[109]["alt_agrees_with_published"] is True
    assert 4 in by_d[109]["disagree_at"]
    # published exclusions come through tagged but untyped
    for e in diff["discrepancies"]:
        for n, why in e["published"]["exclusions"]:
            assert n in (5, 10) and why == "published"


# ---------------------------------------------------------------------------
# modular-curve arithmetic
# ---------------------------------------------------------------------------

def test_genus_known_values():
    known = {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0, 7: 0, 8: 0, 9: 0, 10: 0,
             11: 1, 12: 0, 13: 0, 14: 1, 15: 1, 16: 0, 17: 1, 18: 0, 19: 1,
             20: 1, 21: 1, 22: 2, 23: 2, 24: 1, 25: 0, 26: 2, 27: 1, 28: 2,
             29: 2, 30: 3, 32: 1, 36: 1, 37: 2, 48: 3, 49: 1, 50: 2, 64: 3,
             81: 4, 97: 7, 100: 7, 389: 32}
    for N, g in known.items():
        assert genus_gamma0_rational(N) == g, N
    with pytest.raises(ChernError):
        genus_gamma0_rational(0)


def test_curve_integrality_fixtures():
    assert curve_chern_integrality(Fraction(-3, 2), 2, 1, 1) == (0, 1, 1)
    assert curve_chern_integrality(Fraction(-4, 3), 2, 1, 0) == (1, 0, 1)
    assert curve_chern_integrality(Fraction(-2), 2, 2, 1) == (0, 0, 0)


def test_curve_integrality_uniqueness_enforced():
    with pytest.raises(UniquenessError):
        curve_chern_integrality(Fraction(0), 0, 3, 2)  # several integral picks
    with pytest.raises(UniquenessError):
        curve_chern_integrality(Fraction(1, 5), 0, 1, 1)  # no integral pick
    with pytest.raises(ChernError):
        curve_chern_integrality(Fraction(1, 2), 0, -1, 0)


def test_adjunction():
    assert adjunction_self_intersection(1, 0) == -1
    assert adjunction_self_intersection(0, 0) == -2
    assert adjunction_self_intersection(0, 1) == 0
    assert adjunction_self_intersection(5, 2) == 7
    with pytest.raises(ChernError):
        adjunction_self_intersection(1, -1)
