"""Brute-force ground truth: partitions, congruences, and explicit lattices.

Nothing here uses the closed-form representation except to supply
elements for lines too long to search exhaustively (and only after the
two have been shown to agree on shorter lines).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import ContractViolation, EnumerationCapExceeded
from .frame import Frame, Partition, equivalence_closure, is_congruence

DEFAULT_CAP = 10


def enumeration_cap() -> int:
    raw = os.environ.get("LINECON_MAX_N")
    return int(raw) if raw else DEFAULT_CAP


def all_partitions(n: int, cap: int | None = None) -> Iterator[Partition]:
    """Every partition of {0,...,n}, lexicographic by restricted growth string."""
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise EnumerationCapExceeded(
            f"refusing to enumerate Bell({n + 1}) partitions (cap n <= {cap}); "
            "raise it with LINECON_MAX_N if you really mean it"
        )
    if n < 0:
        return
    size = n + 1
    a = [0] * size
    top = [0] * size  # top[i] = max(a[:i+1])
    while True:
        yield Partition(tuple(a))
        i = size - 1
        while i > 0 and a[i] > top[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top[i] = max(top[i - 1], a[i])
        for j in range(i + 1, size):
            a[j] = 0
            top[j] = top[i]


def congruences_bruteforce(n: int, cap: int | None = None) -> list[Partition]:
    f = Frame.line(n)
    return [p for p in all_partitions(n, cap) if is_congruence(f, p)]


def is_bisimulation_naive(f: Frame, pairs) -> bool:
    """Forth and back conditions checked literally on a set of pairs."""
    succ = f.successors()
    pairs = set(pairs)
    for x, y in pairs:
        for x2 in succ[x]:
            if not any((x2, y2) in pairs for y2 in succ[y]):
                return False
        for y2 in succ[y]:
            if not any((x2, y2) in pairs for x2 in succ[x]):
                return False
    return True


def random_frame(size: int, density: float, rng: random.Random) -> Frame:
    edges = [(x, y) for x in range(size) for y in range(size) if rng.random() < density]
    return Frame.from_edges(size, edges)


def _element_order(p: Partition):
    return (-p.num_blocks, p.block_of)


@dataclass
class CongruenceLattice:
    n: int
    elements: list
    order: list
    covers: list
    meet_table: list
    join_table: list

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def index(self, p: Partition) -> int:
        return self._index[p]

    def leq(self, i: int, j: int) -> bool:
        return self.order[i][j]

    def meet(self, i: int, j: int) -> int:
        return self.meet_table[i][j]

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def __len__(self):
        return len(self.elements)


def build_lattice(n: int, elements=None, cap: int | None = None) -> CongruenceLattice:
    """Materialize Con L_n with refinement order and search-based meets.

    ``elements`` may be given (as partitions) for lines beyond the brute-force cap.
    """
    if elements is None:
        elements = congruences_bruteforce(n, cap)
    elems = sorted(set(elements), key=_element_order)
    m = len(elems)
    index = {p: i for i, p in enumerate(elems)}
    order = [[a.refines(b) for b in elems] for a in elems]
    down = [sum(1 << i for i in range(m) if order[i][j]) for j in range(m)]

    meet_table = [[0] * m for _ in range(m)]
    join_table = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            lb = down[i] & down[j]
            glb = [g for g in range(m) if lb >> g & 1 and down[g] == lb]
            if len(glb) != 1:
                raise ContractViolation(f"no greatest lower bound for {elems[i]} and {elems[j]}")
            meet_table[i][j] = meet_table[j][i] = glb[0]
            c = equivalence_closure(elems[i], elems[j])
            if c not in index:
                raise ContractViolation(f"join of {elems[i]} and {elems[j]} is not a congruence")
            join_table[i][j] = join_table[j][i] = index[c]

    covers = []
    for i in range(m):
        for j in range(m):
            if i != j and order[i][j]:
                if not any(order[i][t] and order[t][j] for t in range(m) if t not in (i, j)):
                    covers.append((i, j))
    lat = CongruenceLattice(n, elems, order, covers, meet_table, join_table)
    lat._index = index
    return lat


def lattice_law_violations(lat: CongruenceLattice, triples=None):
    """Yield (law, elements) for every failure of the lattice identities."""
    m = len(lat)
    M, J = lat.meet_table, lat.join_table
    for a in range(m):
        for b in range(m):
            if M[a][b] != M[b][a]:
                yield "meet commutative", (a, b)
            if J[a][b] != J[b][a]:
                yield "join commutative", (a, b)
            if M[a][J[a][b]] != a:
                yield "absorption", (a, b)
            if J[a][M[a][b]] != a:
                yield "absorption", (a, b)
        if M[a][a] != a or J[a][a] != a:
            yield "idempotent", (a,)
    if triples is None:
        triples = ((a, b, c) for a in range(m) for b in range(m) for c in range(m))
    for a, b, c in triples:
        if M[a][M[b][c]] != M[M[a][b]][c]:
            yield "meet associative", (a, b, c)
        if J[a][J[b][c]] != J[J[a][b]][c]:
            yield "join associative", (a, b, c)


def is_pentagon(lat: CongruenceLattice, five) -> bool:
    """five = (0, a, b, c, 1) with 0 < a < b < 1 and c a complement of both."""
    z, a, b, c, o = five
    L, M, J = lat.order, lat.meet_table, lat.join_table
    return (
        len(set(five)) == 5
        and L[z][a] and L[a][b] and L[b][o]
        and not L[a][c] and not L[c][a] and not L[b][c] and not L[c][b]
        and J[a][c] == o and J[b][c] == o
        and M[a][c] == z and M[b][c] == z
        and M[a][b] == a and J[a][b] == b
        and M[z][c] == z and J[c][o] == o
    )


def find_pentagon(lat: CongruenceLattice):
    z, o = lat.bottom, lat.top
    L = lat.order
    inner = [i for i in range(len(lat)) if i not in (z, o)]
    for a in inner:
        for b in inner:
            if a == b or not L[a][b]:
                continue
            for c in inner:
                if is_pentagon(lat, (z, a, b, c, o)):
                    return (z, a, b, c, o)
    return None


def find_m_antichain(lat: CongruenceLattice, m: int):
    """m nontrivial elements, pairwise incomparable, meeting in 0 and joining to 1."""
    z, o = lat.bottom, lat.top
    inner = [i for i in range(len(lat)) if i not in (z, o)]

    def ok(a, b):
        return (
            not lat.order[a][b]
            and not lat.order[b][a]
            and lat.meet_table[a][b] == z
            and lat.join_table[a][b] == o
        )

    def grow(chosen, rest):
        if len(chosen) == m:
            return tuple(chosen)
        for i, x in enumerate(rest):
            if all(ok(x, y) for y in chosen):
                found = grow(chosen + [x], rest[i + 1:])
                if found:
                    return found
        return None

    return grow([], inner)


def is_distributive(lat: CongruenceLattice, subset=None) -> bool:
    idx = range(len(lat)) if subset is None else list(subset)
    M, J = lat.meet_table, lat.join_table
    return all(M[a][J[b][c]] == J[M[a][b]][M[a][c]] for a in idx for b in idx for c in idx)


def is_modular(lat: CongruenceLattice) -> bool:
    M, J, L = lat.meet_table, lat.join_table, lat.order
    m = len(lat)
    return all(
        J[a][M[b][c]] == M[J[a][b]][c]
        for a in range(m)
        for c in range(m)
        if L[a][c]
        for b in range(m)
    )


def principal_ideal(lat: CongruenceLattice, i: int) -> list[int]:
    return [j for j in range(len(lat)) if lat.order[j][i]]


def incomparable_pairs(lat: CongruenceLattice):
    return [(a, b) for a, b in combinations(range(len(lat)), 2) if not lat.order[a][b] and not lat.order[b][a]]
