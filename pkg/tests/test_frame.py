import random

import pytest

from linecon.errors import ContractViolation, DomainError
from linecon.frame import (
    BinaryRelation,
    Frame,
    Partition,
    compose,
    equivalence_closure,
    is_congruence,
    is_line_shaped,
    neighbors,
    quotient,
)
from linecon.oracle import is_bisimulation_naive, random_frame


def test_line_neighbors():
    f = Frame.line(4)
    assert neighbors(f, 0) == {0, 1}
    assert neighbors(f, 2) == {1, 2, 3}
    assert neighbors(f, 4) == {3, 4}
    with pytest.raises(DomainError):
        neighbors(f, 5)


def test_partition_is_canonical():
    p = Partition.from_labels("aabca")
    assert p.block_of == (0, 0, 1, 2, 0)
    assert p == Partition.from_blocks(4, [[3], [0, 1, 4], [2]])
    assert p.num_blocks == 3
    assert p.block(4) == [0, 1, 4]
    with pytest.raises(DomainError):
        Partition((1, 0))
    with pytest.raises(DomainError):
        Partition.from_blocks(2, [[0, 1]])


def test_refines_and_meet():
    a = Partition.from_labels([0, 0, 1, 1])
    b = Partition.from_labels([0, 0, 0, 1])
    assert Partition.identity(3).refines(a)
    assert a.refines(Partition.total(3))
    assert not a.refines(b) and not b.refines(a)
    assert a.meet(b) == Partition.from_labels([0, 0, 1, 2])


def test_closure_is_join_of_equivalences():
    a = Partition.from_labels([0, 0, 1, 2, 2])
    b = Partition.from_labels([0, 1, 1, 2, 3])
    assert equivalence_closure(a, b) == Partition.from_labels([0, 0, 0, 1, 1])


def test_compose_with_partitions():
    a = Partition.from_labels([0, 0, 1])
    b = Partition.from_labels([0, 1, 1])
    ab = compose(a, b)
    assert (0, 2) in ab and (2, 0) not in ab
    assert compose(b, a) != ab
    assert compose(BinaryRelation.identity(2), a) == a.to_relation()


def test_congruence_check_on_line():
    f = Frame.line(4)
    assert is_congruence(f, Partition.from_labels([0, 1, 2, 1, 0]))
    assert is_congruence(f, Partition.from_labels([0, 1, 0, 1, 0]))
    assert not is_congruence(f, Partition.from_labels([0, 0, 1, 1, 1]))
    with pytest.raises(DomainError):
        is_congruence(f, Partition.identity(2))


def test_quotient_of_line_is_line():
    f = Frame.line(5)
    q = quotient(f, Partition.from_labels([0, 1, 2, 2, 1, 0]))
    assert is_line_shaped(q) == 2
    with pytest.raises(ContractViolation):
        quotient(f, Partition.from_labels([0, 0, 1, 1, 1, 1]))


def test_line_shape_detection():
    assert is_line_shaped(Frame.line(0)) == 0
    assert is_line_shaped(Frame.line(7)) == 7
    assert is_line_shaped(Frame.from_edges(2, [(0, 0), (1, 1)])) is None
    cycle = Frame.from_edges(3, [(x, y) for x in range(3) for y in range(3)])
    assert is_line_shaped(cycle) is None


def test_partition_check_matches_literal_bisimulation():
    rng = random.Random(7)
    for _ in range(60):
        size = rng.randint(1, 5)
        f = random_frame(size, 0.4, rng)
        labels = [rng.randint(0, size - 1) for _ in range(size)]
        p = Partition.from_labels(labels)
        assert is_congruence(f, p) == is_bisimulation_naive(f, p.pairs())
