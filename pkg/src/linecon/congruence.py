"""Canonical <k; r> representation of congruences of a line L_n.

A nontrivial congruence of L_n is a "folding" of the line: a zigzag of
height ``k`` (the step) whose horizontal pieces (rests) sit only at the top
or the bottom.  ``x <k; r> y`` holds iff ``x - D(x) = +-(y - D(y)) (mod 2k)``
where ``D(x)`` counts the rests strictly below ``x``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ContractViolation, DomainError, UndefinedOperation
from .frame import Partition

IDENTITY = "identity"
TOTAL = "total"
FOLDED = "folded"

LEFT = "left"
RIGHT = "right"


def delta(rests, x: int) -> int:
    """Number of rests strictly below x."""
    return bisect_left(rests, x)


@dataclass(frozen=True)
class Validation:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok

    def report(self) -> str:
        return "valid" if self.ok else "; ".join(self.violations)


def validate(n: int, k: int, rests) -> Validation:
    """Check whether <k; rests> is a nontrivial congruence of L_n.

    Each failed clause is named in the report.
    """
    rests = tuple(rests)
    bad = []
    if k < 1:
        return Validation(False, (f"step {k} must be positive",))
    if any(b <= a for a, b in zip(rests, rests[1:])):
        return Validation(False, (f"rests {list(rests)} must be strictly increasing",))
    if 2 * k > n:
        bad.append(f"step bound: k={k} exceeds n/2={n / 2:g}")
    outside = [r for r in rests if not k <= r <= n - k]
    if outside:
        bad.append(f"rest range: {outside} not inside [k, n-k]=[{k}, {n - k}]")
    for i, r in enumerate(rests, start=1):
        if (r - i + 1) % k:
            bad.append(f"rest divisibility: k={k} does not divide r_{i}-{i}+1={r - i + 1}")
    if (n - len(rests)) % k:
        bad.append(f"length divisibility: k={k} does not divide n-|r|={n - len(rests)}")
    # only bites when k == 1; for k >= 2 the clauses above already force gaps > k
    for a, b in zip(rests, rests[1:]):
        if b - a < 2:
            bad.append(f"rest gap: consecutive rests at {a} and {b}")
    if rests and (rests[0] == 0 or rests[-1] == n - 1):
        bad.append("rest at an end: a rest may not start at 0 or end at n")
    return Validation(not bad, tuple(bad))


@dataclass(frozen=True)
class Congruence:
    """A congruence of L_n: Identity, Total, or Folded(k, rests)."""

    n: int
    kind: str
    k: int = 0
    rests: tuple = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"line length must be >= 0, got {self.n}")
        if self.kind == FOLDED:
            object.__setattr__(self, "rests", tuple(self.rests))
            v = validate(self.n, self.k, self.rests)
            if not v:
                raise DomainError(f"<{self.k};{list(self.rests)}> on L_{self.n} is invalid: {v.report()}")
        elif self.kind == IDENTITY:
            if self.n == 0:
                raise DomainError("on L_0 the only congruence is represented as total")
            object.__setattr__(self, "k", self.n)
            object.__setattr__(self, "rests", ())
        elif self.kind == TOTAL:
            object.__setattr__(self, "k", 0)
            object.__setattr__(self, "rests", ())
        else:
            raise DomainError(f"unknown kind {self.kind!r}")

    @classmethod
    def identity(cls, n: int) -> Congruence:
        return cls(n, TOTAL) if n == 0 else cls(n, IDENTITY)

    @classmethod
    def total(cls, n: int) -> Congruence:
        return cls(n, TOTAL)

    @classmethod
    def folded(cls, n: int, k: int, rests=()) -> Congruence:
        return cls(n, FOLDED, k, tuple(rests))

    @property
    def is_total(self) -> bool:
        return self.kind == TOTAL

    @property
    def is_identity(self) -> bool:
        return self.kind == IDENTITY

    @property
    def step(self) -> int:
        return self.k

    @property
    def frequency(self) -> int:
        if self.is_total:
            raise UndefinedOperation("frequency of the total congruence is undefined")
        return (self.n - len(self.rests)) // self.k

    def _require_nontrivial(self, what: str):
        if self.is_total:
            raise UndefinedOperation(f"{what} is undefined for the total congruence")

    def height(self, x: int) -> int:
        """The unique j in [0, step] with x related to j."""
        self._check_point(x)
        if self.is_total:
            return 0
        h = (x - delta(self.rests, x)) % (2 * self.k)
        return min(h, 2 * self.k - h)

    def heights(self) -> tuple:
        return tuple(self.height(x) for x in range(self.n + 1))

    def related(self, x: int, y: int) -> bool:
        self._check_point(x)
        self._check_point(y)
        if self.is_total:
            return True
        m = 2 * self.k
        a = x - delta(self.rests, x)
        b = y - delta(self.rests, y)
        return (a - b) % m == 0 or (a + b) % m == 0

    def _check_point(self, x: int):
        if not 0 <= x <= self.n:
            raise DomainError(f"{x} outside [0, {self.n}]")

    @property
    def extremes(self) -> frozenset:
        """Elements whose class is an endpoint of the quotient line."""
        self._require_nontrivial("extremes")
        return frozenset(x for x in range(self.n + 1) if self.height(x) in (0, self.k))

    def rest_side(self, x: int):
        if x in self.rests:
            return LEFT
        if x - 1 in self.rests:
            return RIGHT
        return None

    def part_of_rest(self, x: int) -> bool:
        return self.rest_side(x) is not None

    def to_partition(self) -> Partition:
        if self.is_total:
            return Partition.total(self.n)
        return Partition.from_labels(self.heights())

    @property
    def is_mirrored(self) -> bool:
        self._require_nontrivial("mirroredness")
        rs = set(self.rests)
        return all((self.n - r - 1) in rs for r in rs)

    def sort_key(self):
        order = {IDENTITY: 0, FOLDED: 1, TOTAL: 2}[self.kind]
        return (order, self.k, self.rests)

    def text(self) -> str:
        if self.is_total:
            return "total"
        if self.is_identity:
            return "id"
        if self.rests:
            return f"{self.k};{','.join(map(str, self.rests))}"
        return str(self.k)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Congruence(L_{self.n}, {self.text()})"


class CongruenceParseError(DomainError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def parse(text: str, n: int) -> Congruence:
    """Parse "id", "total", "k" or "k;r1,r2,..." as a congruence of L_n."""
    s = text.strip().lower().replace(" ", "")
    if s in ("id", "identity"):
        return Congruence.identity(n)
    if s in ("total", "all"):
        return Congruence.total(n)
    head, _, tail = s.partition(";")
    try:
        k = int(head)
        rests = tuple(int(t) for t in tail.split(",")) if tail else ()
    except ValueError:
        raise CongruenceParseError(f"cannot parse congruence {text!r}") from None
    v = validate(n, k, rests)
    if not v:
        raise CongruenceParseError(f"{text!r} is not a congruence of L_{n}: {v.report()}", v)
    return Congruence.folded(n, k, rests)


def canonicalize(p: Partition) -> Congruence:
    """Canonical form of a congruence of the line given as a partition."""
    n = p.n
    if p.is_total():
        return Congruence.total(n)
    if p.is_identity():
        return Congruence.identity(n)
    lab = p.block_of

    def v(x):
        return len({lab[y] for y in (x - 1, x, x + 1) if 0 <= y <= n})

    k = next(x for x in range(1, n + 1) if v(x) == 2)
    rests = tuple(x for x in range(n) if lab[x] == lab[x + 1])
    check = validate(n, k, rests)
    if not check:
        raise ContractViolation(f"partition {p} is not a congruence of L_{n}: {check.report()}")
    c = Congruence.folded(n, k, rests)
    if c.to_partition() != p:
        raise ContractViolation(f"partition {p} is not a congruence of L_{n}")
    return c


def restrict(c: Congruence, a: int) -> Congruence:
    """The restriction of c to [0, a], as a congruence of L_a."""
    if c.is_total:
        raise DomainError("cannot restrict the total congruence at an extreme")
    if a not in c.extremes:
        raise DomainError(f"{a} is not an extreme of {c}")
    if c.rest_side(a) == RIGHT:
        raise DomainError(f"{a} is the right part of a rest of {c}")
    if a == 0:
        return Congruence.total(0)
    if a == c.k:
        return Congruence.identity(a)
    return Congruence.folded(a, c.k, tuple(r for r in c.rests if r < a))


def enumerate_congruences(n: int) -> list[Congruence]:
    """All congruences of L_n, identity first, then by (k, rests), total last."""
    if n == 0:
        return [Congruence.total(0)]
    out = [Congruence.identity(n)]
    for k in range(1, n // 2 + 1):
        found = []

        def extend(prefix, lo):
            if (n - len(prefix)) % k == 0:
                found.append(tuple(prefix))
            # next rest r_i must satisfy r_i = i - 1 (mod k)
            want = len(prefix) % k
            r = lo + (want - lo) % k
            while r <= n - k:
                if r != n - 1:
                    prefix.append(r)
                    extend(prefix, r + 2)
                    prefix.pop()
                r += k

        extend([], k)
        out.extend(Congruence.folded(n, k, rs) for rs in sorted(found))
    out.append(Congruence.total(n))
    return out


def with_frequency(n: int, f: int) -> list[Congruence]:
    """All congruences of L_n with frequency f.

    A folding with frequency f has f monotone runs of length k and f - 1
    turning points; choosing which turning points carry a rest fixes it.
    """
    if f < 1 or n < 1:
        return []
    if f == 1:
        return [Congruence.identity(n)]
    out = []
    for m in range(min(f - 1, n) + 1):
        if (n - m) % f:
            continue
        k = (n - m) // f
        if k < 1:
            continue
        for turns in combinations(range(1, f), m):
            rests = tuple(j * k + i for i, j in enumerate(turns))
            out.append(Congruence.folded(n, k, rests))
    return sorted(out, key=Congruence.sort_key)
