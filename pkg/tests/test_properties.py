from math import gcd, lcm

from hypothesis import given, settings, strategies as st

from linecon.congruence import enumerate_congruences, parse
from linecon.frame import BinaryRelation, compose, equivalence_closure
from linecon.lattice import (
    RestProfile,
    common_extremes,
    criterion,
    join,
    leq,
    meet,
    permutes,
    rest_profile,
)
from linecon.trajectory import build_trajectory, crossing_counts, half_offset_violations
from linecon.verify import congruences, nontrivial

lines = st.integers(min_value=1, max_value=14)


@st.composite
def pair(draw, n_max=14):
    n = draw(st.integers(min_value=1, max_value=n_max))
    cs = congruences(n)
    a = draw(st.sampled_from(cs))
    b = draw(st.sampled_from(cs))
    return n, a, b


@st.composite
def nontrivial_pair(draw, n_max=14):
    n = draw(st.integers(min_value=1, max_value=n_max))
    cs = nontrivial(n)
    return n, draw(st.sampled_from(cs)), draw(st.sampled_from(cs))


@settings(max_examples=300, deadline=None)
@given(pair())
def test_order_is_refinement(p):
    _, a, b = p
    assert leq(a, b) == a.to_partition().refines(b.to_partition())


@settings(max_examples=300, deadline=None)
@given(pair())
def test_meet_and_join_are_bounds(p):
    _, a, b = p
    m, j = meet(a, b), join(a, b)
    assert leq(m, a) and leq(m, b) and leq(a, j) and leq(b, j)
    assert j == join(b, a) and m == meet(b, a)
    assert j.to_partition() == equivalence_closure(a.to_partition(), b.to_partition())


@settings(max_examples=300, deadline=None)
@given(nontrivial_pair())
def test_criterion_matches_closure(p):
    _, a, b = p
    assert criterion(a, b).nontrivial == (not join(a, b).is_total)


@settings(max_examples=200, deadline=None)
@given(nontrivial_pair())
def test_nontrivial_joins_permute(p):
    _, a, b = p
    if not join(a, b).is_total:
        assert permutes(a, b)


@settings(max_examples=200, deadline=None)
@given(pair())
def test_heights_decide_relatedness(p):
    n, a, _ = p
    if a.is_total:
        return
    h = a.heights()
    assert all((h[x] == h[y]) == a.related(x, y) for x in range(n + 1) for y in range(n + 1))


@settings(max_examples=200, deadline=None)
@given(nontrivial_pair())
def test_common_extreme_rest_parts_agree(p):
    """For nontrivial joins both congruences have the same rest part at each common extreme."""
    _, a, b = p
    if join(a, b).is_total:
        return
    assert all(a.rest_side(e) == b.rest_side(e) for e in common_extremes(a, b))


@settings(max_examples=200, deadline=None)
@given(nontrivial_pair())
def test_frequency_decomposition(p):
    _, a, b = p
    j = join(a, b)
    if j.is_total:
        return
    from linecon.congruence import restrict

    e1 = common_extremes(a, b).e1
    m = meet(a, b)
    ra, rb = restrict(a, e1), restrict(b, e1)
    f_ra = 1 if ra.is_total else ra.frequency
    assert a.frequency == f_ra * m.frequency
    assert m.frequency == gcd(a.frequency, b.frequency)
    rj = join(ra, rb) if not ra.is_total else ra
    f_rj = 1 if rj.is_total else rj.frequency
    assert j.frequency == f_rj * m.frequency


@settings(max_examples=150, deadline=None)
@given(nontrivial_pair())
def test_half_offset_and_endpoints(p):
    n, a, b = p
    if common_extremes(a, b).eta != (0, n) or join(a, b).is_total:
        return
    th, dl = (a, b) if a.step <= b.step else (b, a)
    d = build_trajectory(th, dl)
    assert half_offset_violations(d) == []
    assert d.points[n][1] == (0 if th.frequency % 2 == 0 else th.step)
    assert d.points[n][0] == (0 if dl.frequency % 2 == 0 else dl.step)


def test_near_bounce_and_uniform_bounces():
    """Extremes new to the join sit near a crossing; interior bounces on a side share a rest type."""
    for n in range(1, 15):
        cs = nontrivial(n)
        for i, a in enumerate(cs):
            for b in cs[i:]:
                if common_extremes(a, b).eta != (0, n):
                    continue
                j = join(a, b)
                if j.is_total:
                    continue
                th, dl = (a, b) if a.step <= b.step else (b, a)
                d = build_trajectory(th, dl)
                for x in j.extremes - th.extremes - dl.extremes:
                    px, py = 2 * d.points[x][0], 2 * d.points[x][1]
                    assert any((px - c.point2[0]) ** 2 + (py - c.point2[1]) ** 2 < 4 for c in d.crossings)
                if th.frequency >= 3 and dl.frequency >= 3:
                    for side in ("top", "bottom", "left", "right"):
                        assert len({bn.is_rest for bn in d.interior_bounces(side)}) <= 1
                assert crossing_counts(d).total * 2 == (th.frequency - 1) * (dl.frequency - 1)


def _rel(size, pred):
    return BinaryRelation(size, frozenset((x, y) for x in range(size + 1) for y in range(size + 1) if pred(x, y)))


def test_modular_relation_pairs_permute():
    def eq(m):
        return lambda x, y: (x - y) % m == 0

    def sym(m, c):
        return lambda x, y: (x + y + c) % m == 0

    for s in range(1, 9):
        for t in range(1, 9):
            size = lcm(s, t)
            pairs = [
                (eq(s), sym(t, 0)),
                (sym(s, 0), sym(t, 0)),
                (eq(s), sym(t, 1)),
                (sym(s, 1), sym(t, 1)),
            ]
            for f, g in pairs:
                a, b = _rel(size, f), _rel(size, g)
                assert compose(a, b) == compose(b, a), (s, t)
            # x+y = 0 against x+y+1 = 0: the two composites shift by -1 and +1
            # modulo gcd(s, t), so they agree only when that gcd is 1 or 2
            a, b = _rel(size, sym(s, 0)), _rel(size, sym(t, 1))
            assert (compose(a, b) == compose(b, a)) == (gcd(s, t) <= 2), (s, t)


def test_table_shaped_pair_with_trivial_join_need_not_permute():
    a, b = parse("3;3", 10), parse("3;6", 10)
    assert rest_profile(a) == RestProfile.TOP_ONLY and rest_profile(b) == RestProfile.BOTTOM_ONLY
    assert join(a, b).is_total
    assert not permutes(a, b)


def test_parse_text_round_trip():
    for n in range(0, 15):
        for c in enumerate_congruences(n):
            assert parse(c.text(), n) == c
