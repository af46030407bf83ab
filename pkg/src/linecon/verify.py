"""Exhaustive verification suites.

Each suite sweeps every relevant congruence (or pair) up to a bound and
compares the closed forms with the brute-force oracle, stopping at the
first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import gcd, lcm

from .congruence import Congruence, canonicalize, enumerate_congruences, parse, validate, with_frequency
from .frame import compose, equivalence_closure
from .lattice import (
    CatalogCase,
    RestProfile,
    catalog_case,
    classify_catalog,
    common_extremes,
    criterion,
    divisor_embedding,
    join,
    leq,
    meet_closed_form,
    n_from_step_frequency,
    permutes,
    rest_profile,
    simplified_related,
    step_of_join,
)
from .oracle import (
    build_lattice,
    congruences_bruteforce,
    enumeration_cap,
    find_m_antichain,
    is_pentagon,
)
from .trajectory import build_trajectory, crossing_counts, folding

# reference pairs, with the case each one illustrates
CATALOG_EXAMPLES = (
    (18, "4;4,13", "6", CatalogCase.EVEN_TOP_VS_ODD_NO_RESTS),
    (30, "6", "7;7,22", CatalogCase.EVEN_TOP_VS_ODD_NO_RESTS),
    (22, "4;4,13", "7;7", CatalogCase.BOTH_ODD_TOP),
    (22, "4;8,17", "7;14", CatalogCase.SAME_PARITY_BOTTOM),
    (44, "7;14,29", "8;8,17,26,35", CatalogCase.ODD_BOTTOM_VS_ODD_EVERYWHERE),
    (29, "5;5,11,17,23", "7;14", CatalogCase.ODD_BOTTOM_VS_ODD_EVERYWHERE),
    (39, "7;7,15,23,31", "9;9,19,29", CatalogCase.BOTH_EVERYWHERE),
)

# listed as a mirrored frequency-two instance, but not a congruence of L_12
INVALID_MIRRORED_EXAMPLE = (12, 2, (7, 9))
MIRRORED_WITNESS = (12, "2;4,7", "6")


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    checked: int = 0
    counterexample: str | None = None
    notes: list = field(default_factory=list)

    def check(self, cond: bool, what) -> bool:
        self.checked += 1
        if not cond and self.ok:
            self.ok = False
            self.counterexample = what() if callable(what) else str(what)
        return cond

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first counterexample: {self.counterexample}"
        return f"{status} {self.name} ({self.checked} checks){tail}"


@lru_cache(maxsize=None)
def congruences(n: int) -> tuple:
    return tuple(enumerate_congruences(n))


def nontrivial(n: int) -> tuple:
    return tuple(c for c in congruences(n) if not c.is_total)


def closure_join(a: Congruence, b: Congruence) -> Congruence:
    return canonicalize(equivalence_closure(a.to_partition(), b.to_partition()))


@lru_cache(maxsize=None)
def oracle_lattice(n: int):
    """Brute-force lattice where feasible, else the lattice on the enumerated elements."""
    if n <= min(9, enumeration_cap()):
        return build_lattice(n)
    return build_lattice(n, [c.to_partition() for c in congruences(n)])


def _pairs(n):
    return combinations_with_replacement(nontrivial(n), 2)


def _fmt(n, *cs) -> str:
    return f"L_{n}: " + ", ".join(f"<{c}>" for c in cs)


def characterization(max_n: int = 9) -> SuiteResult:
    res = SuiteResult("characterization")
    for n in range(0, max_n + 1):
        brute = set(congruences_bruteforce(n))
        closed = {c.to_partition() for c in congruences(n)}
        res.check(brute == closed, lambda: f"L_{n}: {len(brute)} brute-force vs {len(closed)} closed-form")
        by_freq = {c for f in range(1, n + 1) for c in with_frequency(n, f)}
        res.check(by_freq == set(nontrivial(n)), f"L_{n}: frequency enumeration differs")
    return res


def order(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("order")
    for n in range(0, max_n + 1):
        cs = congruences(n)
        for a in cs:
            pa = a.to_partition()
            for b in cs:
                res.check(leq(a, b) == pa.refines(b.to_partition()), lambda: _fmt(n, a, b))
    return res


def meet_suite(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("meet")
    for n in range(1, max_n + 1):
        lat = oracle_lattice(n)
        for a, b in _pairs(n):
            if closure_join(a, b).is_total:
                continue
            glb = canonicalize(lat.elements[lat.meet(lat.index(a.to_partition()), lat.index(b.to_partition()))])
            m = meet_closed_form(a, b)
            res.check(m == glb, lambda: f"{_fmt(n, a, b)}: closed form <{m}>, oracle <{glb}>")
            res.check(m.frequency == gcd(a.frequency, b.frequency), lambda: f"{_fmt(n, a, b)}: gcd law")
    return res


def join_suite(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("join")
    for n in range(1, max_n + 1):
        for a, b in _pairs(n):
            j = closure_join(a, b)
            res.check(join(a, b) == j, lambda: f"{_fmt(n, a, b)}: join differs from closure")
            if j.is_total:
                continue
            fa, fb = a.frequency, b.frequency
            res.check(j.frequency == lcm(fa, fb), lambda: f"{_fmt(n, a, b)}: f_join {j.frequency} != lcm")
            res.check(step_of_join(a, b) == n // lcm(fa, fb) == j.step, lambda: f"{_fmt(n, a, b)}: step of join")
            pa, pb = a.to_partition(), b.to_partition()
            rel = j.to_partition().to_relation()
            res.check(
                compose(pa, pb) == rel and compose(pb, pa) == rel,
                lambda: f"{_fmt(n, a, b)}: composition is not the join",
            )
    return res


def criterion_suite(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("criterion")
    for n in range(1, max_n + 1):
        for a, b in _pairs(n):
            expected = not closure_join(a, b).is_total
            got = criterion(a, b)
            res.check(got.nontrivial == expected, lambda: f"{_fmt(n, a, b)}: criterion {got.clauses}")
    return res


def counting(max_n: int = 14) -> SuiteResult:
    res = SuiteResult("counting")
    for n in range(1, max_n + 1):
        for a, b in _pairs(n):
            if common_extremes(a, b).eta != (0, n):
                continue
            j = closure_join(a, b)
            if j.is_total:
                continue
            th, dl = (a, b) if a.step <= b.step else (b, a)
            d = build_trajectory(th, dl)
            cc = crossing_counts(d)
            ft, fd = th.frequency, dl.frequency
            where = _fmt(n, th, dl)
            res.check(not d.overlaps, lambda: f"{where}: overlapping segments")
            res.check(2 * cc.total == (ft - 1) * (fd - 1), lambda: f"{where}: {cc} crossings")
            if th.rests or dl.rests:
                res.check(
                    len(j.extremes) == len(th.extremes) + len(dl.extremes) + 2 * cc.i + 4 * cc.h - 2,
                    lambda: f"{where}: extreme count with {cc}",
                )
                res.check(j.frequency == ft + fd - 1 + 2 * cc.total, lambda: f"{where}: f_join from crossings")
            res.check(j.frequency == ft * fd and gcd(ft, fd) == 1, lambda: f"{where}: product law")
        # both frequencies even forces a common interior extreme
        for a, b in _pairs(n):
            if a.frequency % 2 == 0 and b.frequency % 2 == 0 and not closure_join(a, b).is_total:
                res.check(common_extremes(a, b).eta != (0, n), lambda: f"{_fmt(n, a, b)}: parity law")
    return res


def catalog_members(max_n: int):
    """Pairs with f >= 3, common extremes {0, n} and nontrivial join.

    Frequencies are drawn with f_a * f_b <= n, since a nontrivial join has
    frequency lcm(f_a, f_b) <= n.
    """
    for n in range(1, max_n + 1):
        fs = range(3, n // 3 + 1)
        cache = {f: with_frequency(n, f) for f in fs}
        for fa in fs:
            for fb in fs:
                if fb < fa or fa * fb > n:
                    continue
                for a in cache[fa]:
                    for b in cache[fb]:
                        if a.step == b.step or common_extremes(a, b).eta != (0, n):
                            continue
                        if not closure_join(a, b).is_total:
                            yield n, a, b


def catalog(max_n: int = 44, exhaustive_n: int = 14) -> SuiteResult:
    res = SuiteResult("catalog")
    for n in range(1, min(max_n, exhaustive_n) + 1):
        for a, b in _pairs(n):
            if common_extremes(a, b).eta != (0, n) or closure_join(a, b).is_total:
                continue
            res.check(classify_catalog(a, b) is not None, lambda: f"{_fmt(n, a, b)}: no catalog case")
    for n, sa, sb, case in CATALOG_EXAMPLES:
        if n > max_n:
            continue
        ok = validate(n, *_split(sa)) and validate(n, *_split(sb))
        res.check(bool(ok), f"L_{n}: <{sa}>, <{sb}> do not validate")
        if ok:
            a, b = parse(sa, n), parse(sb, n)
            res.check(not closure_join(a, b).is_total, f"L_{n}: <{sa}> v <{sb}> is trivial")
            res.check(catalog_case(a, b) == case, lambda: f"L_{n}: case {catalog_case(a, b)} != {case}")
    bad = validate(INVALID_MIRRORED_EXAMPLE[0], *INVALID_MIRRORED_EXAMPLE[1:])
    res.check(not bad, "the listed mirrored instance unexpectedly validates")
    n, sa, sb = MIRRORED_WITNESS
    if n <= max_n:
        a, b = parse(sa, n), parse(sb, n)
        res.check(a.is_mirrored and catalog_case(a, b) == CatalogCase.FREQ_TWO_MIRRORED, "mirrored witness")

    members = set()
    for n, a, b in catalog_members(max_n):
        res.check(classify_catalog(a, b) is not None, lambda: f"{_fmt(n, a, b)}: no catalog case")
        members.update((a, b))
    for c in sorted(members, key=lambda c: (c.n, c.sort_key())):
        prof = rest_profile(c)
        res.check(prof != RestProfile.IRREGULAR, lambda: f"<{c}> on L_{c.n}: irregular member")
        if prof == RestProfile.IRREGULAR:
            continue
        same = all(
            simplified_related(prof, c.step, x, y) == c.related(x, y)
            for x in range(c.n + 1)
            for y in range(c.n + 1)
        )
        res.check(same, lambda: f"<{c}> on L_{c.n}: simplified expression differs")
        res.check(
            n_from_step_frequency(prof, c.step, c.frequency) == c.n,
            lambda: f"<{c}> on L_{c.n}: table gives n={n_from_step_frequency(prof, c.step, c.frequency)}",
        )
    res.notes.append(f"{len(members)} catalog members up to n={max_n}")
    return res


def _split(text: str):
    head, _, tail = text.partition(";")
    return int(head), tuple(int(t) for t in tail.split(",")) if tail else ()


def _frequency_two_pairs(max_n: int):
    """(n, theta, delta) with f_delta = 2 and step(theta) <= step(delta)."""
    for n in range(1, max_n + 1):
        for a, b in combinations_with_replacement(nontrivial(n), 2):
            for th, dl in ((a, b),) if a == b else ((a, b), (b, a)):
                if dl.frequency == 2 and th.step <= dl.step:
                    yield n, th, dl


def frequency_two(max_n: int = 14) -> SuiteResult:
    """Join nontrivial iff theta mirrored, over every pair with f_delta = 2."""
    res = SuiteResult("frequency-two")
    for n, th, dl in _frequency_two_pairs(max_n):
        nt = not closure_join(th, dl).is_total
        res.check(nt == th.is_mirrored, lambda: f"{_fmt(n, th, dl)}: nontrivial={nt}, mirrored={th.is_mirrored}")
        if th.is_mirrored:
            res.check(permutes(th, dl), lambda: f"{_fmt(n, th, dl)}: mirrored pair does not permute")
    return res


def frequency_two_restricted(max_n: int = 14) -> SuiteResult:
    """The frequency-two law in the form that holds.

    Nontrivial implies mirrored, and mirrored pairs permute, for every pair;
    mirrored implies nontrivial once the common extremes are {0, n}.
    """
    res = SuiteResult("frequency-two-restricted")
    for n, th, dl in _frequency_two_pairs(max_n):
        nt = not closure_join(th, dl).is_total
        if nt:
            res.check(th.is_mirrored, lambda: f"{_fmt(n, th, dl)}: nontrivial but not mirrored")
        if th.is_mirrored:
            res.check(permutes(th, dl), lambda: f"{_fmt(n, th, dl)}: mirrored pair does not permute")
            if common_extremes(th, dl).eta == (0, n):
                res.check(nt, lambda: f"{_fmt(n, th, dl)}: mirrored with extremes {{0, n}} but trivial")
    return res


def embedding(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("embedding")
    for n in range(1, max_n + 1):
        lat = oracle_lattice(n)
        for rho in nontrivial(n):
            rep = divisor_embedding(rho)
            res.check(rep.ok, lambda: f"<{rho}> on L_{n}: {rep}")
            below = {canonicalize(lat.elements[j]) for j in range(len(lat)) if lat.leq(j, lat.index(rho.to_partition()))}
            res.check(below == set(rep.ideal), lambda: f"<{rho}> on L_{n}: ideal differs from oracle")
    return res


def structure() -> SuiteResult:
    res = SuiteResult("structure")
    lat = oracle_lattice(9)
    five = [parse(s, 9).to_partition() for s in ("id", "4;4", "2;4", "1", "total")]
    res.check(is_pentagon(lat, tuple(lat.index(p) for p in five)), "pentagon in Con L_9")
    for p in (5, 7):
        lat = oracle_lattice(p)
        found = find_m_antichain(lat, p - 2)
        res.check(found is not None, f"no antichain of size {p - 2} in Con L_{p}")
    return res


def diagrams() -> SuiteResult:
    res = SuiteResult("diagrams")
    th, dl = parse("4;4,13", 18), parse("6", 18)
    d = build_trajectory(th, dl)
    res.check(len(d.points) == 19, "19 points")
    res.check(d.points[0] == (0, 0), "starts at the origin")
    res.check(d.points[-1] == (6, 0), f"ends at {d.points[-1]}")
    tops = sorted(b.element for b in d.bounces if b.is_rest and b.sides == ("top",))
    res.check(tops == [4, 13], f"top rests at {tops}")
    res.check(len(d.crossings) == 3, f"{len(d.crossings)} crossings")
    res.check(folding(parse("2;2", 5)).heights == (0, 1, 2, 2, 1, 0), "folding of <2;2>")
    return res


SUITES = {
    "characterization": characterization,
    "order": order,
    "meet": meet_suite,
    "join": join_suite,
    "criterion": criterion_suite,
    "counting": counting,
    "catalog": catalog,
    "frequency-two": frequency_two,
    "frequency-two-restricted": frequency_two_restricted,
    "embedding": embedding,
    "structure": lambda max_n=None: structure(),
    "diagrams": lambda max_n=None: diagrams(),
}


# "all" runs the restricted frequency-two law; the unrestricted statement
# is false (mirrored pairs with a common interior extreme can join to total)
# and stays available on its own
ALL = [name for name in SUITES if name != "frequency-two"]


def run(suite: str, max_n: int) -> list[SuiteResult]:
    names = ALL if suite == "all" else [suite]
    out = []
    for name in names:
        fn = SUITES[name]
        if name == "characterization":
            out.append(fn(min(max_n, enumeration_cap())))
        else:
            out.append(fn(max_n))
    return out
