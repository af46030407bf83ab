import pytest

from linecon.congruence import canonicalize, enumerate_congruences, parse
from linecon.errors import EnumerationCapExceeded
from linecon.frame import Partition
from linecon.oracle import (
    all_partitions,
    build_lattice,
    congruences_bruteforce,
    find_m_antichain,
    find_pentagon,
    is_distributive,
    is_modular,
    is_pentagon,
    lattice_law_violations,
    principal_ideal,
)

BELL = [1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


def names(lat, idx):
    return [canonicalize(lat.elements[i]).text() for i in idx]


def test_partition_counts_are_bell_numbers():
    assert [sum(1 for _ in all_partitions(n)) for n in range(10)] == BELL


def test_partitions_are_lexicographic_and_distinct():
    ps = [p.block_of for p in all_partitions(4)]
    assert ps == sorted(ps)
    assert len(set(ps)) == len(ps)


def test_cap_refuses(monkeypatch):
    with pytest.raises(EnumerationCapExceeded):
        next(all_partitions(11))
    monkeypatch.setenv("LINECON_MAX_N", "3")
    with pytest.raises(EnumerationCapExceeded):
        next(all_partitions(4))
    assert next(all_partitions(4, cap=4)) == Partition.total(4)


def test_bruteforce_small_lines():
    assert congruences_bruteforce(1) == [Partition.total(1), Partition.identity(1)]
    got = {canonicalize(p).text() for p in congruences_bruteforce(4)}
    assert got == {"id", "total", "1", "1;1", "1;2", "2"}


def test_bruteforce_matches_closed_form():
    for n in range(10):
        assert set(congruences_bruteforce(n)) == {c.to_partition() for c in enumerate_congruences(n)}


def test_bruteforce_contains_pentagon_generators():
    found = set(congruences_bruteforce(9))
    for s in ("4;4", "2;4", "1"):
        assert parse(s, 9).to_partition() in found


def test_small_lattices():
    one = build_lattice(1)
    assert len(one) == 2 and one.covers == [(0, 1)]
    four = build_lattice(4)
    assert len(four) == 6
    assert names(four, [four.bottom, four.top]) == ["id", "total"]
    # not a chain: 1;1, 1;2 and 2 are the atoms
    atoms = sorted(names(four, [b for a, b in four.covers if a == four.bottom]))
    assert atoms == ["1;1", "1;2", "2"]


def test_lattice_laws():
    for n in range(1, 8):
        assert list(lattice_law_violations(build_lattice(n))) == []


def test_pentagon_in_con_l9():
    lat = build_lattice(9)
    five = tuple(lat.index(parse(s, 9).to_partition()) for s in ("id", "4;4", "2;4", "1", "total"))
    assert is_pentagon(lat, five)
    assert find_pentagon(lat) is not None
    assert not is_modular(lat)


def test_con_l4_already_has_a_pentagon():
    lat = build_lattice(4)
    assert names(lat, find_pentagon(lat)) == ["id", "2", "1", "1;2", "total"]


@pytest.mark.parametrize("p", [5, 7])
def test_antichains(p):
    lat = build_lattice(p)
    found = find_m_antichain(lat, p - 2)
    assert found is not None and len(found) == p - 2


def test_principal_ideals_distributive():
    lat = build_lattice(9)
    for i in range(len(lat) - 1):
        assert is_distributive(lat, principal_ideal(lat, i))
    assert not is_distributive(lat)


def test_lattice_from_supplied_elements():
    cs = enumerate_congruences(12)
    lat = build_lattice(12, [c.to_partition() for c in cs])
    assert len(lat) == 156
    i, j = (lat.index(parse(s, 12).to_partition()) for s in ("2", "3"))
    assert canonicalize(lat.elements[lat.meet(i, j)]).text() == "6"
    assert canonicalize(lat.elements[lat.join(i, j)]).text() == "1"
