import pytest

from linecon.congruence import Congruence, parse, validate
from linecon.errors import ContractViolation, DomainError
from linecon.lattice import (
    CatalogCase,
    RestProfile,
    catalog_case,
    common_extremes,
    compatible,
    criterion,
    divisor_embedding,
    ideal,
    join,
    join_is_nontrivial,
    leq,
    meet,
    n_from_step_frequency,
    permutes,
    rest_profile,
    simplified_relation,
    step_of_join,
    step_of_join_product_formula,
)


def c(text, n):
    return parse(text, n)


def test_common_extremes():
    assert common_extremes(c("4;4,13", 18), c("6", 18)).eta == (0, 18)
    assert common_extremes(c("2", 12), c("3", 12)).eta == (0, 6, 12)
    assert common_extremes(c("1", 4), c("2", 4)).eta == (0, 2, 4)
    with pytest.raises(DomainError):
        common_extremes(c("total", 4), c("2", 4))


def test_compatible():
    assert compatible(c("6", 18), c("2", 18))
    assert compatible(c("4;4,13", 18), c("4;4,13", 18))
    # step 2 is an extreme of <2;2,5> and no rests are lost, yet 3 ~ 1 is not in a rest
    assert not compatible(c("2;2,5", 12), c("2", 12))
    assert not leq(c("2", 12), c("2;2,5", 12))


def test_leq():
    assert leq(c("4;4", 9), c("2;4", 9))
    assert not leq(c("2", 12), c("3", 12))
    assert not leq(c("3", 12), c("2", 12))
    for t in ("id", "1", "2;4", "total"):
        assert leq(c("id", 9), c(t, 9))
        assert leq(c(t, 9), c("total", 9))


def test_leq_with_step_one():
    # compatibility is vacuous here, the order still follows refinement
    assert not leq(c("1", 3), c("1;1", 3))
    assert not leq(c("3", 9), c("1;1,3,5,7", 9))
    assert leq(c("2", 4), c("1", 4))


def test_meet_examples():
    assert meet(c("1", 4), c("2", 4)) == c("2", 4)
    assert meet(c("2", 12), c("3", 12)) == c("6", 12)
    assert meet(c("2", 6), c("3", 6)).is_identity
    assert meet(c("total", 6), c("2", 6)) == c("2", 6)


def test_meet_when_join_is_total():
    a, b = c("4;4", 9), c("1", 9)
    assert join(a, b).is_total
    assert meet(a, b).is_identity


def test_join_examples():
    assert join(c("2", 6), c("3", 6)) == c("1", 6)
    assert join(c("4;4", 9), c("1", 9)).is_total
    assert join(c("2", 12), c("3", 12)) == c("1", 12)


def test_criterion_examples():
    assert join_is_nontrivial(c("4;4,13", 18), c("6", 18))
    assert not join_is_nontrivial(c("4;4", 9), c("1", 9))
    assert join_is_nontrivial(c("7;7,15,23,31", 39), c("9;9,19,29", 39))
    rep = criterion(c("4;4", 9), c("1", 9))
    assert rep.clauses == {"rest parts agree at common extremes": False}
    with pytest.raises(DomainError):
        criterion(c("total", 9), c("1", 9))


def test_permutes():
    assert permutes(c("4;4,13", 18), c("6", 18))
    assert permutes(c("2;4,7", 12), c("6", 12))
    # smallest non-permuting pair, found by scanning n <= 9
    assert not permutes(c("1;1", 4), c("1;2", 4))
    assert join(c("1;1", 4), c("1;2", 4)).is_total


def test_rest_profiles():
    assert rest_profile(c("4;4,13", 18)) == RestProfile.TOP_ONLY
    assert rest_profile(c("6", 18)) == RestProfile.NO_RESTS
    assert rest_profile(c("4;8,17", 22)) == RestProfile.BOTTOM_ONLY
    assert rest_profile(c("8;8,17,26,35", 44)) == RestProfile.EVERYWHERE
    assert rest_profile(c("2;2,7", 12)) == RestProfile.TOP_ONLY
    assert rest_profile(c("2;2,5", 12)) == RestProfile.IRREGULAR
    assert rest_profile(c("id", 5)) == RestProfile.NO_RESTS
    with pytest.raises(DomainError):
        rest_profile(c("total", 5))


@pytest.mark.parametrize(
    "n, a, b, case",
    [
        (22, "4;4,13", "7;7", CatalogCase.BOTH_ODD_TOP),
        (44, "7;14,29", "8;8,17,26,35", CatalogCase.ODD_BOTTOM_VS_ODD_EVERYWHERE),
        (44, "8;8,17,26,35", "7;14,29", CatalogCase.ODD_BOTTOM_VS_ODD_EVERYWHERE),
        (6, "2", "3", CatalogCase.FREQ_TWO_MIRRORED),
        (12, "2;4,7", "6", CatalogCase.FREQ_TWO_MIRRORED),
        (5, "id", "id", CatalogCase.FREQ_ONE),
        (12, "3", "4", CatalogCase.NO_RESTS),
    ],
)
def test_catalog_case(n, a, b, case):
    assert catalog_case(c(a, n), c(b, n)) == case


def test_catalog_case_preconditions():
    with pytest.raises(DomainError):
        catalog_case(c("4;4", 9), c("1", 9))
    with pytest.raises(DomainError):
        catalog_case(c("2", 12), c("3", 12))


def test_listed_mirrored_instance_is_not_a_congruence():
    assert not validate(12, 2, (7, 9))
    with pytest.raises(DomainError):
        Congruence.folded(12, 2, (7, 9))


def test_simplified_relation_matches():
    th = c("4;4,13", 18)
    rel = simplified_relation(RestProfile.TOP_ONLY, 4, 18)
    assert rel.pairs == th.to_partition().pairs()
    ev = c("7;7,15,23,31", 39)
    assert simplified_relation(RestProfile.EVERYWHERE, 7, 39).pairs == ev.to_partition().pairs()
    with pytest.raises(DomainError):
        simplified_relation(RestProfile.IRREGULAR, 2, 12)


def test_n_from_step_frequency():
    assert n_from_step_frequency(RestProfile.NO_RESTS, 6, 3) == 18
    assert n_from_step_frequency(RestProfile.TOP_ONLY, 4, 4) == 18
    assert n_from_step_frequency(RestProfile.TOP_ONLY, 7, 3) == 22
    assert n_from_step_frequency(RestProfile.BOTTOM_ONLY, 7, 4) == 29
    assert n_from_step_frequency(RestProfile.BOTTOM_ONLY, 4, 5) == 22
    assert n_from_step_frequency(RestProfile.EVERYWHERE, 7, 5) == 39
    with pytest.raises(DomainError):
        n_from_step_frequency(RestProfile.NO_RESTS, 6, 2)


def test_step_of_join():
    a, b = c("4;4,13", 18), c("6", 18)
    assert step_of_join(a, b) == 1 == join(a, b).step
    assert step_of_join_product_formula(a, b) == 1
    # the value is the step; the quotient has one more block
    assert join(a, b).to_partition().num_blocks == 2
    assert step_of_join(c("2", 12), c("3", 12)) == 1
    d = c("2;4,7", 12)
    assert step_of_join(d, c("id", 12)) == d.step
    with pytest.raises(DomainError):
        step_of_join(c("4;4", 9), c("1", 9))


def test_divisor_embedding():
    rep = divisor_embedding(c("1", 12))
    assert rep.ok
    assert sorted(rep.frequencies.values()) == [1, 2, 3, 4, 6, 12]
    assert [str(x) for x in ideal(c("2", 12))] == ["id", "2", "4", "6"]
    ident = divisor_embedding(c("id", 7))
    assert ident.ideal == (c("id", 7),) and ident.ok
    with pytest.raises(DomainError):
        ideal(c("total", 3))


def test_meet_closed_form_rejects_invalid_candidate():
    from linecon.lattice import meet_closed_form

    with pytest.raises(ContractViolation):
        meet_closed_form(c("1", 5), c("2;2", 5))
