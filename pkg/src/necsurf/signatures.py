"""NEC signatures, their derived quantities, and the large-action catalog.

A signature ``(g; +/-; [m_1,...,m_r]; {(n_11,...), ..., (...)})`` encodes a
non-euclidean crystallographic group: orbit genus, orientability sign,
proper periods of the elliptic generators, and period cycles whose link
periods are the orders of corner points on the boundary of the quotient
orbifold.  The module computes the normalized hyperbolic area, transfers
genus to finite-index bordered surface subgroups, produces the canonical
Fuchsian subgroup signature, and holds the catalog of the ten quotient
families that can occur for a cyclic action of order N on a bordered
surface of algebraic genus p with N > p - 1 (equivalently, area < 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class NecSignature:
    genus: int
    orientable: bool
    proper_periods: tuple[int, ...] = ()
    period_cycles: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("orbit genus must be >= 0")
        if not self.orientable and self.genus < 1:
            raise ValueError("sign '-' requires orbit genus >= 1")
        if any(m < 2 for m in self.proper_periods):
            raise ValueError("proper periods must be >= 2")
        if any(n < 2 for cycle in self.period_cycles for n in cycle):
            raise ValueError("link periods must be >= 2")

    @property
    def epsilon(self) -> int:
        return 2 if self.orientable else 1

    @property
    def cycle_count(self) -> int:
        return len(self.period_cycles)

    def render(self) -> str:
        sign = "+" if self.orientable else "-"
        periods = ",".join(str(m) for m in self.proper_periods)
        cycles = ",".join(
            "(" + ",".join(str(n) for n in cycle) + ")" for cycle in self.period_cycles
        )
        return f"({self.genus};{sign};[{periods}];{{{cycles}}})"

    def __str__(self) -> str:
        return self.render()


def area(sig: NecSignature) -> Fraction:
    """Normalized hyperbolic area of a fundamental region, as an exact rational.

    eps*g + k - 2 + sum(1 - 1/m_i) + (1/2) * sum(1 - 1/n_ij).  The signature
    belongs to an NEC group precisely when this is positive.
    """
    total = Fraction(sig.epsilon * sig.genus + sig.cycle_count - 2)
    for m in sig.proper_periods:
        total += 1 - Fraction(1, m)
    for cycle in sig.period_cycles:
        for n in cycle:
            total += Fraction(1, 2) * (1 - Fraction(1, n))
    return total


def kernel_algebraic_genus(sig: NecSignature, N: int) -> int:
    """Algebraic genus of an index-N bordered surface subgroup.

    Hurwitz-Riemann: the subgroup has area N * area(sig), and a bordered
    surface group of algebraic genus p has area p - 1, so p = N*area + 1.
    Raises if the result is not an integer (no such subgroup).
    """
    mu = area(sig)
    if mu <= 0:
        raise ValueError(f"{sig} is not an NEC signature (area {mu})")
    p = N * mu + 1
    if p.denominator != 1:
        raise ValueError(f"order {N} is incompatible with {sig}: genus {p}")
    return int(p)


@dataclass(frozen=True)
class FuchsianSignature:
    genus: int
    periods: tuple[int, ...] = ()

    def render(self) -> str:
        if not self.periods:
            return f"({self.genus}; -)"
        return f"({self.genus}; " + ", ".join(str(m) for m in self.periods) + ")"

    def __str__(self) -> str:
        return self.render()


def fuchsian_area(fsig: FuchsianSignature) -> Fraction:
    total = Fraction(2 * fsig.genus - 2)
    for m in fsig.periods:
        total += 1 - Fraction(1, m)
    return total


def canonical_fuchsian(sig: NecSignature) -> FuchsianSignature:
    """Signature of the orientation-preserving index-2 subgroup.

    (eps*g + k - 1; m_1, m_1, ..., m_r, m_r, n_11, ..., n_ks_k).  Defined
    whenever the group has orientation-reversing elements, i.e. sign '-'
    or at least one period cycle.
    """
    if sig.orientable and sig.cycle_count == 0:
        raise ValueError("signature has no orientation-reversing elements")
    periods = []
    for m in sig.proper_periods:
        periods += [m, m]
    for cycle in sig.period_cycles:
        periods += list(cycle)
    genus = sig.epsilon * sig.genus + sig.cycle_count - 1
    return FuchsianSignature(genus, tuple(periods))


def is_admissible_quotient(sig: NecSignature, N: int) -> bool:
    """Can sig be the quotient signature of a cyclic-N bordered action?

    Requires at least one period cycle, every non-empty cycle an even
    number of periods equal to 2, and all cycles empty when N is odd.
    """
    if sig.cycle_count == 0:
        return False
    for cycle in sig.period_cycles:
        if cycle and (len(cycle) % 2 != 0 or any(n != 2 for n in cycle)):
            return False
        if cycle and N % 2 != 0:
            return False
    return True


# --- the ten large-action quotient families ------------------------------

#: kind -> (catalog family number, parameter names, description)
QUOTIENT_KINDS: dict[str, tuple[int, tuple[str, ...], str]] = {
    "d6": (1, (), "disc with 6 corner points"),
    "ann2": (2, (), "annulus with 2 corner points"),
    "mb2": (3, (), "Moebius band with 2 corner points"),
    "d12": (4, ("m",), "disc with 1 cone point and 2 corner points"),
    "d14": (5, ("m",), "disc with 1 cone point and 4 corner points"),
    "mb1": (6, ("m",), "Moebius band with 1 cone point"),
    "d21": (7, ("m", "n"), "disc with 2 cone points"),
    "ann1": (8, ("m",), "annulus with 1 cone point"),
    "d3-23m": (9, ("m",), "disc with 3 cone points of orders 2,3,m"),
    "d3-22m": (9, ("m",), "disc with 3 cone points of orders 2,2,m"),
    "d2c-3m": (10, ("m",), "disc with cone points 3,m and 2 corner points"),
    "d2c-2m": (10, ("m",), "disc with cone points 2,m and 2 corner points"),
}


@dataclass(frozen=True)
class QuotientType:
    """One of the ten quotient-orbifold families, with its cone orders."""

    kind: str
    m: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.kind not in QUOTIENT_KINDS:
            raise ValueError(f"unknown quotient kind {self.kind!r}")
        params = QUOTIENT_KINDS[self.kind][1]
        if ("m" in params) != (self.m is not None) or ("n" in params) != (
            self.n is not None
        ):
            raise ValueError(f"kind {self.kind!r} takes parameters {params}")
        if self.m is not None and self.m < 2:
            raise ValueError("cone orders must be >= 2")
        if self.n is not None and self.n < 2:
            raise ValueError("cone orders must be >= 2")
        if self.kind == "d12" and self.m < 3:
            raise ValueError("d12 needs m >= 3 (m = 2 has zero area)")
        if self.kind == "d21" and (self.m, self.n) == (2, 2):
            raise ValueError("d21 needs 1/m + 1/n < 1")
        if self.kind in ("d3-23m", "d2c-3m") and self.m not in (3, 4, 5):
            raise ValueError(f"{self.kind} needs m in {{3, 4, 5}}")

    def signature(self) -> NecSignature:
        m, n = self.m, self.n
        return {
            "d6": lambda: NecSignature(0, True, (), ((2,) * 6,)),
            "ann2": lambda: NecSignature(0, True, (), ((), (2, 2))),
            "mb2": lambda: NecSignature(1, False, (), ((2, 2),)),
            "d12": lambda: NecSignature(0, True, (m,), ((2, 2),)),
            "d14": lambda: NecSignature(0, True, (m,), ((2, 2, 2, 2),)),
            "mb1": lambda: NecSignature(1, False, (m,), ((),)),
            "d21": lambda: NecSignature(0, True, (m, n), ((),)),
            "ann1": lambda: NecSignature(0, True, (m,), ((), ())),
            "d3-23m": lambda: NecSignature(0, True, (2, 3, m), ((),)),
            "d3-22m": lambda: NecSignature(0, True, (2, 2, m), ((),)),
            "d2c-3m": lambda: NecSignature(0, True, (3, m), ((2, 2),)),
            "d2c-2m": lambda: NecSignature(0, True, (2, m), ((2, 2),)),
        }[self.kind]()

    def label(self) -> str:
        if self.n is not None:
            return f"{self.kind}({self.m},{self.n})"
        if self.m is not None:
            return f"{self.kind}({self.m})"
        return self.kind

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class CatalogFamily:
    number: int
    kinds: tuple[str, ...]
    description: str


_FAMILY_DESCRIPTIONS = {
    1: "disc with 6 corner points",
    2: "annulus with 2 corner points",
    3: "Moebius band with 2 corner points",
    4: "disc with 1 cone point and 2 corner points",
    5: "disc with 1 cone point and 4 corner points",
    6: "Moebius band with 1 cone point",
    7: "disc with 2 cone points",
    8: "annulus with 1 cone point",
    9: "disc with 3 cone points",
    10: "disc with 2 cone points and 2 corner points",
}


def large_action_catalog() -> tuple[CatalogFamily, ...]:
    """The ten quotient families admitting area < 1, in catalog order."""
    groups: dict[int, list[str]] = {}
    for kind, (number, _, _) in QUOTIENT_KINDS.items():
        groups.setdefault(number, []).append(kind)
    return tuple(
        CatalogFamily(number, tuple(sorted(groups[number])), _FAMILY_DESCRIPTIONS[number])
        for number in sorted(groups)
    )


def quotient_instances(kind: str, max_period: int) -> list[QuotientType]:
    """All parameter choices for a family with cone orders <= max_period."""
    params = QUOTIENT_KINDS[kind][1]
    if not params:
        return [QuotientType(kind)]
    if kind in ("d3-23m", "d2c-3m"):
        return [QuotientType(kind, m=m) for m in (3, 4, 5) if m <= max_period]
    if kind == "d21":
        out = []
        for m in range(2, max_period + 1):
            for n in range(m, max_period + 1):
                if (m, n) != (2, 2):
                    out.append(QuotientType(kind, m=m, n=n))
        return out
    lo = 3 if kind == "d12" else 2
    return [QuotientType(kind, m=m) for m in range(lo, max_period + 1)]


def _canon(sig: NecSignature):
    return (
        sig.genus,
        sig.orientable,
        tuple(sorted(sig.proper_periods)),
        tuple(sorted(sig.period_cycles)),
    )


def generate_admissible_signatures(max_period: int) -> set[NecSignature]:
    """Every admissible-shape signature with 0 < area < 1, by brute force.

    Cycles are empty or even runs of 2s, so only the base (eps*g + k - 2),
    the proper periods and the total cycle length matter.  Area < 1 bounds
    everything: eps*g + k <= 2, at most 3 proper periods, total cycle
    length at most 6.  Used as double-entry bookkeeping against the
    hard-coded catalog.
    """
    out = set()
    for orientable, g, k in ((True, 0, 1), (True, 0, 2), (False, 1, 1)):
        for r in range(4):
            for periods in _nondecreasing_tuples(r, 2, max_period):
                for lengths in _cycle_length_choices(k):
                    cycles = tuple((2,) * s for s in lengths)
                    sig = NecSignature(g, orientable, periods, cycles)
                    if 0 < area(sig) < 1:
                        out.add(NecSignature(g, orientable, periods, cycles))
    return out


def _nondecreasing_tuples(r, lo, hi):
    if r == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for rest in _nondecreasing_tuples(r - 1, first, hi):
            yield (first, *rest)


def _cycle_length_choices(k):
    per_cycle = (0, 2, 4, 6)
    if k == 1:
        return [(s,) for s in per_cycle]
    return [(s1, s2) for s1 in per_cycle for s2 in per_cycle if s1 <= s2]


def quotient_of_signature(sig: NecSignature) -> QuotientType | None:
    """Match a signature against the ten catalog families (None if no match)."""
    key = _canon(sig)
    periods, cycles = key[2], key[3]
    if not sig.orientable:
        if sig.genus == 1 and cycles == ((2, 2),) and not periods:
            return QuotientType("mb2")
        if sig.genus == 1 and cycles == ((),) and len(periods) == 1:
            return QuotientType("mb1", m=periods[0])
        return None
    if sig.genus != 0:
        return None
    if cycles == ((2, 2, 2, 2, 2, 2),) and not periods:
        return QuotientType("d6")
    if cycles == ((), (2, 2)) and not periods:
        return QuotientType("ann2")
    if cycles == ((2, 2),):
        if len(periods) == 1 and periods[0] >= 3:
            return QuotientType("d12", m=periods[0])
        if len(periods) == 2 and periods[0] == 2:
            return QuotientType("d2c-2m", m=periods[1])
        if len(periods) == 2 and periods[0] == 3 and periods[1] in (3, 4, 5):
            return QuotientType("d2c-3m", m=periods[1])
        return None
    if cycles == ((2, 2, 2, 2),) and len(periods) == 1:
        return QuotientType("d14", m=periods[0])
    if cycles == ((), ()) and len(periods) == 1:
        return QuotientType("ann1", m=periods[0])
    if cycles == ((),):
        if len(periods) == 2 and periods != (2, 2):
            return QuotientType("d21", m=periods[0], n=periods[1])
        if len(periods) == 3 and periods[:2] == (2, 2):
            return QuotientType("d3-22m", m=periods[2])
        if len(periods) == 3 and periods[0] == 2 and periods[1] == 3 and periods[2] in (3, 4, 5):
            return QuotientType("d3-23m", m=periods[2])
        return None
    return None


# --- covered surfaces -----------------------------------------------------


@dataclass(frozen=True)
class SurfaceTopology:
    """Topological type of a compact bordered surface of algebraic genus >= 2."""

    orientable: bool
    genus: int
    boundary_count: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 1:
            raise ValueError(f"bad surface data {self}")
        if not self.orientable and self.genus < 1:
            raise ValueError("non-orientable surfaces have genus >= 1")
        if self.algebraic_genus < 2:
            raise ValueError(f"{self} is not hyperbolic (algebraic genus < 2)")

    @property
    def epsilon(self) -> int:
        return 2 if self.orientable else 1

    @property
    def algebraic_genus(self) -> int:
        return self.epsilon * self.genus + self.boundary_count - 1

    def describe(self) -> str:
        if self.orientable:
            base = {0: "sphere", 1: "torus"}.get(self.genus, f"genus-{self.genus} surface")
        else:
            base = {1: "projective plane", 2: "Klein bottle"}.get(
                self.genus, f"non-orientable genus-{self.genus} surface"
            )
        return f"{self.boundary_count}-holed {base}"

    def __str__(self) -> str:
        return self.describe()
