"""Order, meet, join, permutability and the nontriviality criterion.

All pairwise operations take two congruences of the same line.  Where a
closed form exists only under a hypothesis (nontrivial join, common
extremes {0, n}) the hypothesis is checked and the general path is used
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd, lcm

from .congruence import (
    RIGHT,
    Congruence,
    canonicalize,
    restrict,
    validate,
    with_frequency,
)
from .errors import ContractViolation, DomainError
from .frame import BinaryRelation, Partition, compose, equivalence_closure


class RestProfile(str, Enum):
    NO_RESTS = "NoRests"
    TOP_ONLY = "TopOnly"
    BOTTOM_ONLY = "BottomOnly"
    EVERYWHERE = "Everywhere"
    IRREGULAR = "Irregular"


class CatalogCase(str, Enum):
    FREQ_ONE = "FreqOne"
    FREQ_TWO_MIRRORED = "FreqTwoMirrored"
    NO_RESTS = "NoRests"
    EVEN_TOP_VS_ODD_NO_RESTS = "EvenTopVsOddNoRests"
    BOTH_ODD_TOP = "BothOddTop"
    SAME_PARITY_BOTTOM = "SameParityBottom"
    ODD_BOTTOM_VS_ODD_EVERYWHERE = "OddBottomVsOddEverywhere"
    BOTH_EVERYWHERE = "BothEverywhere"


def _same_line(a: Congruence, b: Congruence):
    if a.n != b.n:
        raise DomainError(f"congruences live on different lines: L_{a.n} and L_{b.n}")


def _nontrivial(*cs: Congruence):
    for c in cs:
        if c.is_total:
            raise DomainError("operation requires nontrivial congruences")


def _ordered(a: Congruence, b: Congruence):
    """Sort a pair so the first has the smaller step."""
    return (a, b) if a.step <= b.step else (b, a)


@dataclass(frozen=True)
class CommonExtremes:
    eta: tuple

    def __post_init__(self):
        if len(self.eta) < 1 or self.eta[0] != 0:
            raise ContractViolation(f"common extremes {self.eta} must start at 0")
        if any(b <= a for a, b in zip(self.eta, self.eta[1:])):
            raise ContractViolation(f"common extremes {self.eta} not strictly increasing")

    @property
    def e1(self) -> int:
        """First positive common extreme (0 on L_0)."""
        return self.eta[1] if len(self.eta) > 1 else 0

    def __iter__(self):
        return iter(self.eta)

    def __len__(self):
        return len(self.eta)


def common_extremes(a: Congruence, b: Congruence) -> CommonExtremes:
    _same_line(a, b)
    _nontrivial(a, b)
    return CommonExtremes(tuple(sorted(a.extremes & b.extremes)))


def compatible(th: Congruence, gamma: Congruence) -> bool:
    """Whether the rests of th are compatible with gamma.

    Every r outside ext(gamma) that belongs to a rest of th must have its
    whole gamma-class inside rests of th.
    """
    _same_line(th, gamma)
    _nontrivial(gamma)
    if not th.rests:
        return True
    ext_g = gamma.extremes
    gp = gamma.to_partition()
    for r in range(th.n + 1):
        if r in ext_g or not th.part_of_rest(r):
            continue
        if not all(th.part_of_rest(s) for s in gp.block(r)):
            return False
    return True


def leq(a: Congruence, b: Congruence) -> bool:
    """a <= b in Con L_n, via the three-clause order characterization."""
    _same_line(a, b)
    if a.is_identity or b.is_total:
        return True
    if a.is_total or b.is_identity:
        return a == b
    # with step 1 every point is an extreme and compatibility says nothing
    if a.step == 1 or b.step == 1:
        return a.to_partition().refines(b.to_partition())
    return a.step in b.extremes and set(a.rests) <= set(b.rests) and compatible(b, a)


def join(a: Congruence, b: Congruence) -> Congruence:
    """Canonical form of the equivalence closure of a and b."""
    _same_line(a, b)
    return canonicalize(equivalence_closure(a.to_partition(), b.to_partition()))


def _largest_congruence_below(p: Partition) -> Partition:
    """Coarsest refinement of p that is a congruence of the line."""
    n = p.n
    lab = p.block_of
    while True:
        sig = [
            (lab[x], frozenset(lab[y] for y in (x - 1, x, x + 1) if 0 <= y <= n))
            for x in range(n + 1)
        ]
        new = Partition.from_labels(sig)
        if new.num_blocks == max(lab) + 1:
            return new
        lab = new.block_of


def meet(a: Congruence, b: Congruence) -> Congruence:
    """Greatest lower bound.

    Uses the closed form <e1; r & s> when the join is nontrivial, and the
    largest congruence inside the intersection otherwise.
    """
    _same_line(a, b)
    if a.is_total:
        return b
    if b.is_total:
        return a
    if not join(a, b).is_total:
        return meet_closed_form(a, b)
    return canonicalize(_largest_congruence_below(a.to_partition().meet(b.to_partition())))


def meet_closed_form(a: Congruence, b: Congruence) -> Congruence:
    """<e1; r & s> with e1 the first positive common extreme."""
    e1 = common_extremes(a, b).e1
    shared = tuple(sorted(set(a.rests) & set(b.rests)))
    if e1 == a.n:
        return Congruence.identity(a.n)
    v = validate(a.n, e1, shared)
    if not v:
        raise ContractViolation(f"<{e1};{list(shared)}> is not a congruence: {v.report()}")
    return Congruence.folded(a.n, e1, shared)


def permutes(a: Congruence, b: Congruence) -> bool:
    _same_line(a, b)
    return compose(a.to_partition(), b.to_partition()) == compose(b.to_partition(), a.to_partition())


def rest_profile(c: Congruence) -> RestProfile:
    """Classify where the rests of c sit in its folding."""
    if c.is_total:
        raise DomainError("the total congruence has no rest profile")
    if not c.rests:
        return RestProfile.NO_RESTS
    # turning points of the folding: (at top?, carries a rest?)
    turns = []
    x = 1
    while x < c.n:
        h = c.height(x)
        if h in (0, c.k):
            if x in c.rests:
                turns.append((h == c.k, True))
                x += 2
                continue
            turns.append((h == c.k, False))
        x += 1
    top = [rest for is_top, rest in turns if is_top]
    bottom = [rest for is_top, rest in turns if not is_top]
    if all(top) and not any(bottom):
        return RestProfile.TOP_ONLY
    if all(bottom) and not any(top):
        return RestProfile.BOTTOM_ONLY
    if top and bottom and all(top) and all(bottom):
        return RestProfile.EVERYWHERE
    return RestProfile.IRREGULAR


def classify_catalog(a: Congruence, b: Congruence):
    """Catalog case of a pair with common extremes {0, n}, or None."""
    th, dl = _ordered(a, b)
    fd = dl.frequency
    if fd == 1:
        return CatalogCase.FREQ_ONE
    if fd == 2:
        return CatalogCase.FREQ_TWO_MIRRORED if th.is_mirrored else None
    pt, pd = rest_profile(th), rest_profile(dl)
    et, ed = th.frequency % 2 == 0, fd % 2 == 0
    P = RestProfile
    if pt == pd == P.NO_RESTS:
        return CatalogCase.NO_RESTS
    if (pt, et, pd, ed) in ((P.TOP_ONLY, True, P.NO_RESTS, False), (P.NO_RESTS, False, P.TOP_ONLY, True)):
        return CatalogCase.EVEN_TOP_VS_ODD_NO_RESTS
    if pt == pd == P.TOP_ONLY and not et and not ed:
        return CatalogCase.BOTH_ODD_TOP
    if pt == pd == P.BOTTOM_ONLY and et == ed:
        return CatalogCase.SAME_PARITY_BOTTOM
    if (pt, pd) in ((P.BOTTOM_ONLY, P.EVERYWHERE), (P.EVERYWHERE, P.BOTTOM_ONLY)):
        bottom_even = et if pt == P.BOTTOM_ONLY else ed
        everywhere_even = ed if pt == P.BOTTOM_ONLY else et
        if bottom_even and not everywhere_even:
            return CatalogCase.ODD_BOTTOM_VS_ODD_EVERYWHERE
    if pt == pd == P.EVERYWHERE:
        return CatalogCase.BOTH_EVERYWHERE
    return None


def catalog_case(a: Congruence, b: Congruence) -> CatalogCase:
    """The catalog case of a pair with nontrivial join and common extremes {0, n}."""
    _same_line(a, b)
    _nontrivial(a, b)
    if join(a, b).is_total:
        raise DomainError(f"join of {a} and {b} is trivial")
    eta = common_extremes(a, b).eta
    if eta != (0, a.n):
        raise DomainError(f"common extremes are {list(eta)}, not [0, n]")
    case = classify_catalog(a, b)
    if case is None:
        raise ContractViolation(
            f"pair ({a}, {b}) on L_{a.n} has a nontrivial join but matches no catalog case"
        )
    return case


CRITERION_CLAUSES = (
    "rest parts agree at common extremes",
    "meet candidate is a congruence",
    "restrictions form a catalog pair",
    "rests of first compatible with meet candidate",
    "rests of second compatible with meet candidate",
)


@dataclass(frozen=True)
class CriterionReport:
    eta: tuple
    gamma: Congruence | None
    clauses: dict = field(default_factory=dict)

    @property
    def nontrivial(self) -> bool:
        return len(self.clauses) == len(CRITERION_CLAUSES) and all(self.clauses.values())

    def lines(self):
        for name in CRITERION_CLAUSES:
            if name in self.clauses:
                yield name, self.clauses[name]
            else:
                yield name, None


def criterion(a: Congruence, b: Congruence) -> CriterionReport:
    """Evaluate the five-condition nontriviality criterion, stopping at the first failure."""
    _same_line(a, b)
    _nontrivial(a, b)
    n = a.n
    eta = common_extremes(a, b).eta
    clauses: dict = {}

    ok = all(a.rest_side(e) == b.rest_side(e) for e in eta)
    clauses[CRITERION_CLAUSES[0]] = ok
    if not ok:
        return CriterionReport(eta, None, clauses)

    e1 = eta[1] if len(eta) > 1 else 0
    shared = tuple(sorted(set(a.rests) & set(b.rests)))
    gamma = None
    if e1 == n:
        gamma = Congruence.identity(n)
    elif validate(n, e1, shared):
        gamma = Congruence.folded(n, e1, shared)
    clauses[CRITERION_CLAUSES[1]] = gamma is not None
    if gamma is None:
        return CriterionReport(eta, None, clauses)

    try:
        ra, rb = restrict(a, e1), restrict(b, e1)
        ok = classify_catalog(ra, rb) is not None
    except DomainError:
        ok = False
    clauses[CRITERION_CLAUSES[2]] = ok
    if not ok:
        return CriterionReport(eta, gamma, clauses)

    clauses[CRITERION_CLAUSES[3]] = compatible(a, gamma)
    if not clauses[CRITERION_CLAUSES[3]]:
        return CriterionReport(eta, gamma, clauses)
    clauses[CRITERION_CLAUSES[4]] = compatible(b, gamma)
    return CriterionReport(eta, gamma, clauses)


def join_is_nontrivial(a: Congruence, b: Congruence) -> bool:
    return criterion(a, b).nontrivial


def simplified_related(profile: RestProfile, k: int, x: int, y: int) -> bool:
    """Membership in the two-part modular expression of a catalog congruence."""
    P = RestProfile
    if profile == P.NO_RESTS:
        m, shift = 2 * k, 0
    elif profile == P.TOP_ONLY:
        m, shift = 2 * k + 1, 0
    elif profile == P.BOTTOM_ONLY:
        m, shift = 2 * k + 1, 1
    elif profile == P.EVERYWHERE:
        m, shift = 2 * k + 2, 1
    else:
        raise DomainError(f"no simplified expression for profile {profile.value}")
    return (x - y) % m == 0 or (x + y + shift) % m == 0


def simplified_relation(profile: RestProfile, k: int, n: int) -> BinaryRelation:
    pairs = frozenset(
        (x, y) for x in range(n + 1) for y in range(n + 1) if simplified_related(profile, k, x, y)
    )
    return BinaryRelation(n, pairs)


def n_from_step_frequency(profile: RestProfile, l: int, f: int) -> int:
    """Length of the line carrying a catalog congruence with this profile, step and frequency."""
    if f < 3:
        raise DomainError(f"table applies only to frequency >= 3, got {f}")
    P = RestProfile
    even = f % 2 == 0
    if profile == P.NO_RESTS:
        return l * f
    if profile == P.TOP_ONLY:
        return (2 * l + 1) * f // 2 if even else ((2 * l + 1) * f - 1) // 2
    if profile == P.BOTTOM_ONLY:
        return (2 * l + 1) * f // 2 - 1 if even else ((2 * l + 1) * f - 1) // 2
    if profile == P.EVERYWHERE:
        return (l + 1) * f - 1
    raise DomainError(f"no table row for profile {profile.value}")


def step_of_join(a: Congruence, b: Congruence) -> int:
    """n div lcm(f_a, f_b); equals the step of a nontrivial join."""
    _same_line(a, b)
    _nontrivial(a, b)
    if join(a, b).is_total:
        raise DomainError(f"join of {a} and {b} is trivial")
    return a.n // lcm(a.frequency, b.frequency)


def step_of_join_product_formula(a: Congruence, b: Congruence) -> int:
    """floor(n k l / ((n - |r|)(n - |s|))), the {0, n}-common-extreme variant."""
    n = a.n
    return (n * a.step * b.step) // ((n - len(a.rests)) * (n - len(b.rests)))


@dataclass(frozen=True)
class EmbeddingReport:
    rho: Congruence
    ideal: tuple
    frequencies: dict
    injective: bool
    into_divisors: bool
    meet_to_gcd: bool
    join_to_lcm: bool
    identity_to_one: bool
    top_to_frequency: bool
    distributive: bool

    @property
    def ok(self) -> bool:
        return all(
            (
                self.injective,
                self.into_divisors,
                self.meet_to_gcd,
                self.join_to_lcm,
                self.identity_to_one,
                self.top_to_frequency,
                self.distributive,
            )
        )


def ideal(rho: Congruence) -> list[Congruence]:
    """All congruences below rho; their frequencies divide f_rho."""
    if rho.is_total:
        raise DomainError("the ideal below the total congruence is the whole lattice")
    fr = rho.frequency
    below = []
    for d in range(1, fr + 1):
        if fr % d == 0:
            below.extend(c for c in with_frequency(rho.n, d) if leq(c, rho))
    return sorted(below, key=Congruence.sort_key)


def divisor_embedding(rho: Congruence) -> EmbeddingReport:
    """Check that theta -> f_theta embeds (rho] into the divisors of f_rho."""
    members = ideal(rho)
    freq = {c: c.frequency for c in members}
    fr = rho.frequency
    meets = {}
    joins = {}
    meet_ok = join_ok = True
    for i, x in enumerate(members):
        for y in members[i:]:
            m, j = meet(x, y), join(x, y)
            meets[x, y], joins[x, y] = m, j
            meet_ok &= m in freq and freq[m] == gcd(freq[x], freq[y])
            join_ok &= j in freq and freq[j] == lcm(freq[x], freq[y])

    def mt(x, y):
        return meets.get((x, y)) or meets[y, x]

    def jn(x, y):
        return joins.get((x, y)) or joins[y, x]

    distributive = meet_ok and join_ok and all(
        mt(x, jn(y, z)) == jn(mt(x, y), mt(x, z)) for x in members for y in members for z in members
    )
    ident = Congruence.identity(rho.n)
    return EmbeddingReport(
        rho=rho,
        ideal=tuple(members),
        frequencies=freq,
        injective=len(set(freq.values())) == len(freq),
        into_divisors=all(fr % f == 0 for f in freq.values()),
        meet_to_gcd=meet_ok,
        join_to_lcm=join_ok,
        identity_to_one=freq.get(ident) == 1,
        top_to_frequency=freq.get(rho) == fr,
        distributive=distributive,
    )
