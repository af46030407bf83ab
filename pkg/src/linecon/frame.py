"""Finite frames, partitions and the relation algebra used everywhere else.

A frame is a finite directed graph ``<F, R>`` on nodes ``0..size-1``.  A
congruence is an equivalence relation that is also a bisimulation; for
partitions we test this by comparing neighbour-block sets, which is
equivalent because the relation is symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ContractViolation, DomainError


@dataclass(frozen=True)
class Frame:
    size: int
    edges: frozenset

    def __post_init__(self):
        if self.size < 1:
            raise DomainError(f"frame size must be positive, got {self.size}")
        for x, y in self.edges:
            if not (0 <= x < self.size and 0 <= y < self.size):
                raise DomainError(f"edge ({x}, {y}) outside [0, {self.size - 1}]")

    @classmethod
    def line(cls, n: int) -> Frame:
        """The line L_n on {0,...,n}: x R y iff |x - y| <= 1."""
        if n < 0:
            raise DomainError(f"line length must be >= 0, got {n}")
        edges = frozenset(
            (x, y) for x in range(n + 1) for y in (x - 1, x, x + 1) if 0 <= y <= n
        )
        return cls(n + 1, edges)

    @classmethod
    def from_edges(cls, size: int, edges: Iterable[tuple[int, int]]) -> Frame:
        return cls(size, frozenset((int(x), int(y)) for x, y in edges))

    def successors(self) -> list[frozenset]:
        out: list[set] = [set() for _ in range(self.size)]
        for x, y in self.edges:
            out[x].add(y)
        return [frozenset(s) for s in out]

    def is_connected(self) -> bool:
        adj = [set() for _ in range(self.size)]
        for x, y in self.edges:
            adj[x].add(y)
            adj[y].add(x)
        seen = {0}
        stack = [0]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.size


def neighbors(f: Frame, x: int) -> frozenset:
    """R[x]; its cardinality is v(x)."""
    if not 0 <= x < f.size:
        raise DomainError(f"node {x} outside [0, {f.size - 1}]")
    return frozenset(y for (a, y) in f.edges if a == x)


def _canonical_labels(labels: Iterable) -> tuple[int, ...]:
    seen: dict = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


@dataclass(frozen=True, order=True)
class Partition:
    """Equivalence relation on {0,...,n} as a restricted-growth block labelling.

    ``block_of[x]`` is the block index of ``x``; indices appear in order of
    first occurrence, so two partitions are equal iff their tuples are.
    """

    block_of: tuple

    def __post_init__(self):
        top = -1
        for b in self.block_of:
            if b > top + 1 or b < 0:
                raise DomainError(f"labels {self.block_of} are not a restricted growth string")
            top = max(top, b)
        if not self.block_of:
            raise DomainError("a partition needs a nonempty ground set")

    @classmethod
    def from_labels(cls, labels: Iterable) -> Partition:
        return cls(_canonical_labels(labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> Partition:
        labels = [None] * (n + 1)
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x <= n:
                    raise DomainError(f"element {x} outside [0, {n}]")
                if labels[x] is not None:
                    raise DomainError(f"element {x} appears in two blocks")
                labels[x] = i
        if None in labels:
            raise DomainError("blocks do not cover the ground set")
        return cls.from_labels(labels)

    @classmethod
    def identity(cls, n: int) -> Partition:
        return cls(tuple(range(n + 1)))

    @classmethod
    def total(cls, n: int) -> Partition:
        return cls((0,) * (n + 1))

    @property
    def n(self) -> int:
        return len(self.block_of) - 1

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return out

    def block(self, x: int) -> list[int]:
        b = self.block_of[x]
        return [y for y, c in enumerate(self.block_of) if c == b]

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def is_identity(self) -> bool:
        return self.num_blocks == len(self.block_of)

    def is_total(self) -> bool:
        return self.num_blocks == 1

    def refines(self, other: Partition) -> bool:
        """True iff every block of self lies inside a block of other."""
        _same_ground(self, other)
        image: dict = {}
        for a, b in zip(self.block_of, other.block_of):
            if image.setdefault(a, b) != b:
                return False
        return True

    def meet(self, other: Partition) -> Partition:
        """Intersection of the two equivalence relations."""
        _same_ground(self, other)
        return Partition.from_labels(zip(self.block_of, other.block_of))

    def restrict(self, a: int) -> Partition:
        return Partition.from_labels(self.block_of[: a + 1])

    def pairs(self) -> frozenset:
        blocks = self.blocks()
        return frozenset((x, y) for b in blocks for x in b for y in b)

    def to_relation(self) -> BinaryRelation:
        return BinaryRelation(self.n, self.pairs())

    def __str__(self):
        return " | ".join(",".join(map(str, b)) for b in self.blocks())


@dataclass(frozen=True)
class BinaryRelation:
    n: int
    pairs: frozenset

    def __post_init__(self):
        for x, y in self.pairs:
            if not (0 <= x <= self.n and 0 <= y <= self.n):
                raise DomainError(f"pair ({x}, {y}) outside [0, {self.n}]")

    @classmethod
    def identity(cls, n: int) -> BinaryRelation:
        return cls(n, frozenset((x, x) for x in range(n + 1)))

    @classmethod
    def full(cls, n: int) -> BinaryRelation:
        return cls(n, frozenset((x, y) for x in range(n + 1) for y in range(n + 1)))

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)


def _same_ground(a, b) -> None:
    if a.n != b.n:
        raise DomainError(f"ground sets differ: {{0..{a.n}}} vs {{0..{b.n}}}")


def _as_relation(a) -> BinaryRelation:
    if isinstance(a, BinaryRelation):
        return a
    if isinstance(a, Partition):
        return a.to_relation()
    if hasattr(a, "to_partition"):
        return a.to_partition().to_relation()
    raise TypeError(f"cannot treat {type(a).__name__} as a relation")


def compose(a, b) -> BinaryRelation:
    """{(x, z) | exists y: (x, y) in a and (y, z) in b}."""
    ra, rb = _as_relation(a), _as_relation(b)
    _same_ground(ra, rb)
    succ: dict[int, set] = {}
    for y, z in rb.pairs:
        succ.setdefault(y, set()).add(z)
    pairs = {(x, z) for x, y in ra.pairs for z in succ.get(y, ())}
    return BinaryRelation(ra.n, frozenset(pairs))


def equivalence_closure(a: Partition, b: Partition) -> Partition:
    """Finest partition coarsening both a and b (the join of equivalences)."""
    _same_ground(a, b)
    parent = list(range(a.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in (a, b):
        first: dict = {}
        for x, blk in enumerate(p.block_of):
            if blk in first:
                rx, ry = find(x), find(first[blk])
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
            else:
                first[blk] = x
    return Partition.from_labels(find(x) for x in range(a.n + 1))


def is_congruence(f: Frame, p: Partition) -> bool:
    """Whether p is a bisimulation of f.

    For an equivalence this is: related nodes see the same set of blocks.
    """
    if p.n + 1 != f.size:
        raise DomainError(f"partition on {p.n + 1} points, frame has {f.size}")
    succ = f.successors()
    seen: dict = {}
    for x in range(f.size):
        image = frozenset(p.block_of[y] for y in succ[x])
        if seen.setdefault(p.block_of[x], image) != image:
            return False
    return True


def quotient(f: Frame, p: Partition) -> Frame:
    if not is_congruence(f, p):
        raise ContractViolation(f"partition {p} is not a congruence of the frame")
    edges = frozenset((p.block_of[x], p.block_of[y]) for x, y in f.edges)
    return Frame(p.num_blocks, edges)


def is_line_shaped(f: Frame) -> int | None:
    """Return k if f is isomorphic to L_k, else None."""
    if f.size == 1:
        return 0 if f.edges == frozenset({(0, 0)}) else None
    succ = f.successors()
    if any(x not in succ[x] for x in range(f.size)):
        return None
    ends = [x for x in range(f.size) if len(succ[x]) == 2]
    if len(ends) != 2 or any(len(succ[x]) not in (2, 3) for x in range(f.size)):
        return None
    if any(x not in succ[y] for y in range(f.size) for x in succ[y]):
        return None
    # walk from one endpoint; a path visiting every node is a line
    prev, cur, count = None, ends[0], 1
    while True:
        nxt = [y for y in succ[cur] if y != cur and y != prev]
        if not nxt:
            break
        prev, cur, count = cur, nxt[0], count + 1
    return f.size - 1 if count == f.size else None
