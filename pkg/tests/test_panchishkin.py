import pytest
from hypothesis import given

from gsp4kit.errors import NotAdjacent, RangeViolation, WrongRegion
from gsp4kit.panchishkin import (
    ALL_LABELS,
    AB_BLOCK,
    ConstituentLabel,
    HodgeProfile,
    constituent_valuation,
    contributing_set,
    panchishkin_quotient,
    parabolic_of_region,
    pattern_of,
    quotient_for_regions,
    regenerate_table1,
    swap_symmetry,
    table1_diff,
    table1_reference,
)
from gsp4kit.weights import ADJACENT_PAIRS, LABELS, Weights, classify, region_is_empty, representative
from test_weights import weights

# The reference alpha/beta block, Y = contributes; columns a1a2, a1b2, b1a2, b1b2 for alpha then beta.
REFERENCE_ROWS = {
    "a": "YNYNYNYN",
    "b": "YYYNYNYN",
    "c": "YYYNYYYN",
    "d": "YYYYYNYN",
    "e": "YYYYYYYN",
    "f": "YYYYYYYY",
}


def test_partner_is_fixed_point_free_involution():
    for lab in ALL_LABELS:
        assert lab.partner != lab and lab.partner.partner == lab


def test_valuation_examples():
    wt = Weights(8, 4, 2, 2)
    assert constituent_valuation(ConstituentLabel(0, 0, 0), wt) == 0
    assert constituent_valuation(ConstituentLabel(1, 1, 1), wt) == 4


@given(weights())
def test_complement_valuations_sum(wt):
    for lab in ALL_LABELS:
        assert constituent_valuation(lab, wt) + constituent_valuation(lab.partner, wt) == 2 * wt.w + 1


@given(weights())
def test_contributing_set_one_per_pair(wt):
    s = contributing_set(wt)
    assert len(s) == 8
    assert all((lab in s) != (lab.partner in s) for lab in ALL_LABELS)


@given(weights(cmax=30).filter(lambda w: w.k2 >= 3))
def test_hodge_profile_consistency(wt):
    prof = HodgeProfile(wt)
    s = contributing_set(wt)
    for lab in ALL_LABELS:
        assert (lab in s) == (prof.hodge_number(lab) <= -1)


def test_hodge_profile_rejects_k2_two():
    with pytest.raises(RangeViolation):
        HodgeProfile(Weights(5, 2, 1, 2))


def test_contributing_examples():
    assert contributing_set(Weights(8, 4, 2, 2)) == frozenset(AB_BLOCK)
    e = contributing_set(Weights(3, 3, 2, 2))
    assert e == (frozenset(AB_BLOCK) - {ConstituentLabel(1, 1, 1)}) | {ConstituentLabel(2, 0, 0)}
    assert pattern_of(Weights(4, 4, 2, 20)) == "YNYNYNYN"


def test_reference_rows_match_embedded_copy():
    ref = table1_reference()
    for lab, pat in REFERENCE_ROWS.items():
        assert ref[lab][0] == pat


@pytest.mark.parametrize("k1,k2", [(8, 4), (6, 3), (14, 14), (5, 2)])
def test_table_regeneration_has_no_diff(k1, k2):
    assert table1_diff(k1, k2) == []
    rows = regenerate_table1(k1, k2)
    assert set(rows) == {lab for lab in LABELS if not region_is_empty(lab, k1, k2)}


def test_parabolics():
    assert parabolic_of_region("f") == ("Kl", "0", "0")
    assert parabolic_of_region("e") == ("B", "B", "B")
    assert parabolic_of_region("d'") == ("Sieg", "B", "0")


@pytest.mark.parametrize(
    "hearts,spades,triple",
    [("e", "f", (1, 1, 1)), ("e", "c", (3, 0, 0)), ("e", "d", (2, 1, 0)), ("f", "e", (2, 0, 0)), ("c", "e", (0, 1, 1))],
)
def test_quotient_examples(hearts, spades, triple):
    assert quotient_for_regions(hearts, spades, 8, 4) == triple


def test_quotient_errors():
    with pytest.raises(NotAdjacent):
        quotient_for_regions("a", "f", 8, 4)
    with pytest.raises(WrongRegion):
        panchishkin_quotient("e", "f", Weights(8, 4, 2, 2), Weights(8, 4, 2, 2))


def test_swap_symmetry_is_involution():
    for lab in ALL_LABELS:
        t = lab.graded_triple
        assert swap_symmetry(swap_symmetry(t)) == t


def test_quotients_over_sweep():
    for k1 in range(3, 15):
        for k2 in range(3, k1 + 1):
            for pair in ADJACENT_PAIRS:
                r1, r2 = sorted(pair)
                t = quotient_for_regions(r1, r2, k1, k2)
                assert swap_symmetry(t) == quotient_for_regions(r2, r1, k1, k2)


def test_contributing_set_constant_within_region():
    for k1, k2 in [(8, 4), (7, 3), (10, 10)]:
        seen = {}
        for c1 in range(1, 30):
            for c2 in range(1, 30):
                if (c1 + c2 - k1 - k2) % 2 == 0:
                    wt = Weights(k1, k2, c1, c2)
                    s = contributing_set(wt)
                    assert seen.setdefault(classify(wt).label, s) == s
        assert len(set(seen.values())) == 9
        for lab, s in seen.items():
            assert s == contributing_set(representative(lab, k1, k2))
