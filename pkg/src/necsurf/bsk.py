"""Candidate bordered-surface-kernel (BSK) epimorphisms and their surfaces.

A BSK epimorphism theta: Lambda -> Z_N assigns residues to the canonical
generators of an NEC group so that the kernel is a bordered surface group.
Working additively in Z_N this means: every relation evaluates to zero,
every elliptic generator keeps its exact order, every pair of consecutive
canonical reflections keeps exact order 2 for its product, the images
generate Z_N, and at least one reflection lies in the kernel (the quotient
surface is bordered).

From a smooth assignment the module derives the topology of the covered
surface: orientability (via non-orientable words), the boundary count
(via the empty-cycle transfer rule), and the genus (via Hurwitz-Riemann).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .signatures import QuotientType, SurfaceTopology, kernel_algebraic_genus
from .zmod import order_mod


@dataclass(frozen=True)
class CycleSpec:
    """One period cycle: its distinct reflection names in cycle order.

    ``length`` is the number of link periods (0 for an empty cycle, in
    which case there is a single reflection).  ``tail`` names the extra
    generator identified with the conjugate of the first reflection, when
    the presentation keeps it (e.g. c2 in c0*x = x*c2).  ``connector``
    names the e-generator attached to the cycle, when one survives in the
    presentation; its image order drives the boundary count of empty
    cycles.
    """

    reflections: tuple[str, ...]
    length: int
    connector: str | None = None
    tail: str | None = None


@dataclass
class Presentation:
    """Presentation data for one catalog family, in its usual generator names."""

    quotient: QuotientType
    gens: tuple[str, ...]
    eps: dict[str, int]  # +1 orientation-preserving, -1 reversing
    free: tuple[str, ...]
    elliptic_orders: dict[str, int]
    cycles: tuple[CycleSpec, ...]
    glides: tuple[str, ...] = ()
    # sum over (coef, gen) must vanish mod N (the long relation), or None
    # when eliminating a redundant connector consumed it
    long_relation: tuple[tuple[int, str], ...] | None = None
    # dependent generator -> linear expression in terms of earlier ones
    derived: dict[str, tuple[tuple[int, str], ...]] = field(default_factory=dict)
    relations: tuple[str, ...] = ()

    @property
    def reflection_names(self) -> tuple[str, ...]:
        out = []
        for cyc in self.cycles:
            out.extend(cyc.reflections)
            if cyc.tail:
                out.append(cyc.tail)
        return tuple(out)

    def complete(self, free_images: dict[str, int], N: int) -> dict[str, int]:
        """Fill in dependent generator images from the free ones."""
        images = dict(free_images)
        for name, expr in self.derived.items():
            images[name] = sum(c * images[g] for c, g in expr) % N
        return {g: images[g] % N for g in self.gens}


def presentation_of(q: QuotientType) -> Presentation:
    """The presentation used for this quotient family.

    Generator names follow the usual conventions: x (elliptic), e
    (connector), c (reflection), d (glide).  Redundant connectors are
    eliminated exactly as in the standard presentations, e.g. e = (x*d^2)^-1
    for the once-punctured Moebius band.
    """
    kind, m, n = q.kind, q.m, q.n
    if kind == "d6":
        cs = tuple(f"c{i}" for i in range(6))
        return Presentation(
            quotient=q,
            gens=cs,
            eps={c: -1 for c in cs},
            free=cs,
            elliptic_orders={},
            cycles=(CycleSpec(cs, 6),),
            long_relation=None,  # e1 = 1 eliminates the connector entirely
            relations=tuple(f"{c}^2" for c in cs)
            + tuple(f"({cs[i]} {cs[(i + 1) % 6]})^2" for i in range(6)),
        )
    if kind == "ann2":
        gens = ("e1", "e2", "c10", "c20", "c21", "c22")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"e1": 1, "e2": 1, "c10": -1, "c20": -1, "c21": -1, "c22": -1},
            free=("e1", "c10", "c20", "c21"),
            elliptic_orders={},
            cycles=(
                CycleSpec(("c10",), 0, connector="e1"),
                CycleSpec(("c20", "c21"), 2, connector="e2", tail="c22"),
            ),
            long_relation=((1, "e1"), (1, "e2")),
            derived={"e2": ((-1, "e1"),), "c22": ((1, "c20"),)},
            relations=(
                "e1 e2",
                "c10^2",
                "c20^2",
                "c21^2",
                "c22^2",
                "(c20 c21)^2",
                "(c21 c22)^2",
                "e1 c10 = c10 e1",
                "e2 c20 = c22 e2",
            ),
        )
    if kind == "mb2":
        gens = ("d", "c0", "c1", "c2")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"d": -1, "c0": -1, "c1": -1, "c2": -1},
            free=("d", "c0", "c1"),
            elliptic_orders={},
            cycles=(CycleSpec(("c0", "c1"), 2, tail="c2"),),
            glides=("d",),
            long_relation=None,  # e1 = d^-2
            derived={"c2": ((1, "c0"),)},
            relations=("c0^2", "c1^2", "c2^2", "(c0 c1)^2", "(c1 c2)^2", "c0 d^2 = d^2 c2"),
        )
    if kind == "d12":
        gens = ("x", "c0", "c1", "c2")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"x": 1, "c0": -1, "c1": -1, "c2": -1},
            free=("x", "c0", "c1"),
            elliptic_orders={"x": m},
            cycles=(CycleSpec(("c0", "c1"), 2, tail="c2"),),
            long_relation=None,  # e1 = x^-1
            derived={"c2": ((1, "c0"),)},
            relations=(f"x^{m}", "c0^2", "c1^2", "c2^2", "(c0 c1)^2", "(c1 c2)^2", "c0 x = x c2"),
        )
    if kind == "d14":
        cs = tuple(f"c{i}" for i in range(5))
        gens = ("x",) + cs
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"x": 1, **{c: -1 for c in cs}},
            free=("x",) + cs[:4],
            elliptic_orders={"x": m},
            cycles=(CycleSpec(cs[:4], 4, tail="c4"),),
            long_relation=None,  # e1 = x^-1
            derived={"c4": ((1, "c0"),)},
            relations=(f"x^{m}",)
            + tuple(f"{c}^2" for c in cs)
            + tuple(f"({cs[i]} {cs[i + 1]})^2" for i in range(4))
            + ("c0 x = x c4",),
        )
    if kind == "mb1":
        gens = ("x", "d", "c", "e")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"x": 1, "d": -1, "c": -1, "e": 1},
            free=("x", "d", "c"),
            elliptic_orders={"x": m},
            cycles=(CycleSpec(("c",), 0, connector="e"),),
            glides=("d",),
            long_relation=((1, "x"), (1, "e"), (2, "d")),
            derived={"e": ((-1, "x"), (-2, "d"))},
            relations=(f"x^{m}", "c^2", "x e d^2", "e c = c e"),
        )
    if kind == "d21":
        gens = ("x1", "x2", "c", "e")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"x1": 1, "x2": 1, "c": -1, "e": 1},
            free=("x1", "x2", "c"),
            elliptic_orders={"x1": m, "x2": n},
            cycles=(CycleSpec(("c",), 0, connector="e"),),
            long_relation=((1, "x1"), (1, "x2"), (1, "e")),
            derived={"e": ((-1, "x1"), (-1, "x2"))},
            relations=(f"x1^{m}", f"x2^{n}", "c^2", "x1 x2 e", "e c = c e"),
        )
    if kind == "ann1":
        gens = ("x", "e1", "e2", "c1", "c2")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"x": 1, "e1": 1, "e2": 1, "c1": -1, "c2": -1},
            free=("x", "e1", "c1", "c2"),
            elliptic_orders={"x": m},
            cycles=(
                CycleSpec(("c1",), 0, connector="e1"),
                CycleSpec(("c2",), 0, connector="e2"),
            ),
            long_relation=((1, "x"), (1, "e1"), (1, "e2")),
            derived={"e2": ((-1, "x"), (-1, "e1"))},
            relations=(f"x^{m}", "c1^2", "c2^2", "x e1 e2", "e1 c1 = c1 e1", "e2 c2 = c2 e2"),
        )
    if kind in ("d3-22m", "d3-23m"):
        second = 2 if kind == "d3-22m" else 3
        gens = ("x1", "x2", "x3", "e", "c")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"x1": 1, "x2": 1, "x3": 1, "e": 1, "c": -1},
            free=("x1", "x2", "x3", "c"),
            elliptic_orders={"x1": 2, "x2": second, "x3": m},
            cycles=(CycleSpec(("c",), 0, connector="e"),),
            long_relation=((1, "x1"), (1, "x2"), (1, "x3"), (1, "e")),
            derived={"e": ((-1, "x1"), (-1, "x2"), (-1, "x3"))},
            relations=("x1^2", f"x2^{second}", f"x3^{m}", "c^2", "x1 x2 x3 e", "c e = e c"),
        )
    if kind in ("d2c-2m", "d2c-3m"):
        first = 2 if kind == "d2c-2m" else 3
        gens = ("x1", "x2", "e", "c0", "c1", "c2")
        return Presentation(
            quotient=q,
            gens=gens,
            eps={"x1": 1, "x2": 1, "e": 1, "c0": -1, "c1": -1, "c2": -1},
            free=("x1", "x2", "c0", "c1"),
            elliptic_orders={"x1": first, "x2": m},
            cycles=(CycleSpec(("c0", "c1"), 2, connector="e", tail="c2"),),
            long_relation=((1, "x1"), (1, "x2"), (1, "e")),
            derived={"e": ((-1, "x1"), (-1, "x2")), "c2": ((1, "c0"),)},
            relations=(
                f"x1^{first}",
                f"x2^{m}",
                "c0^2",
                "c1^2",
                "c2^2",
                "(c0 c1)^2",
                "(c1 c2)^2",
                "x1 x2 e",
                "c2 e = e c0",
            ),
        )
    raise ValueError(f"unknown quotient kind {kind!r}")


@dataclass(frozen=True)
class BskMap:
    """An assignment of residues mod N to the canonical generators."""

    quotient: QuotientType
    N: int
    images: tuple[tuple[str, int], ...]

    @classmethod
    def from_dict(cls, quotient: QuotientType, N: int, images: dict[str, int]) -> "BskMap":
        pres = presentation_of(quotient)
        if set(images) != set(pres.gens):
            raise ValueError(f"images must cover generators {pres.gens}")
        return cls(quotient, N, tuple((g, images[g] % N) for g in pres.gens))

    @property
    def image_dict(self) -> dict[str, int]:
        return dict(self.images)

    def vector(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.images)

    def to_json(self) -> str:
        payload = {
            "signature": self.quotient.signature().render(),
            "quotient": self.quotient.label(),
            "N": self.N,
            "images": self.image_dict,
        }
        return json.dumps(payload, sort_keys=True)

    def __str__(self) -> str:
        imgs = ", ".join(f"{g}->{v}" for g, v in self.images)
        return f"{self.quotient}@Z_{self.N}[{imgs}]"


def smoothness_failures(bmap: BskMap) -> list[str]:
    """All reasons the assignment fails to be a BSK epimorphism (empty = smooth)."""
    pres = presentation_of(bmap.quotient)
    N = bmap.N
    img = bmap.image_dict
    bad = []
    for name, want in pres.elliptic_orders.items():
        got = order_mod(img[name], N)
        if got != want:
            bad.append(f"{name} has order {got}, requires exact order {want}")
    for c in pres.reflection_names:
        if (2 * img[c]) % N != 0:
            bad.append(f"reflection {c} image {img[c]} does not square to 0")
    for cyc in pres.cycles:
        names = cyc.reflections + ((cyc.tail,) if cyc.tail else (cyc.reflections[0],))
        if cyc.tail and img[cyc.tail] != img[cyc.reflections[0]]:
            bad.append(f"{cyc.tail} must equal the conjugate image of {cyc.reflections[0]}")
        for j in range(cyc.length):
            a, b = names[j], names[j + 1] if j + 1 < len(names) else names[0]
            if order_mod(img[a] + img[b], N) != 2:
                bad.append(f"corner ({a} {b}) has order {order_mod(img[a] + img[b], N)}, not 2")
    if pres.long_relation is not None:
        total = sum(c * img[g] for c, g in pres.long_relation) % N
        if total != 0:
            bad.append(f"long relation evaluates to {total}")
    if math.gcd(N, *[v for v in img.values()]) != 1:
        bad.append("images do not generate Z_N")
    if not any(img[c] == 0 for c in pres.reflection_names):
        bad.append("kernel contains no reflection (surface would be unbordered)")
    return bad


def is_smooth(bmap: BskMap) -> bool:
    return not smoothness_failures(bmap)


def orientability(bmap: BskMap) -> bool:
    """True when the covered surface is orientable.

    The surface is non-orientable iff the kernel contains a non-orientable
    word: an orientation-reversing word, avoiding the reflections that lie
    in the kernel, with image 0.  Over the abelian target the reachable
    (image, orientation-character) pairs form the subgroup of Z_N x Z_2
    generated by the included generators, so the test is membership of
    (0, -1): with w one included reversing image, the surface is
    non-orientable iff w lies in the subgroup generated by the preserving
    images, the differences of reversing images, and 2w.
    """
    pres = presentation_of(bmap.quotient)
    N = bmap.N
    img = bmap.image_dict
    refl = set(pres.reflection_names)
    preserving = []
    reversing = []
    for g in pres.gens:
        if pres.eps[g] == 1:
            preserving.append(img[g])
        elif g in refl and img[g] == 0:
            continue  # kernel reflections may not appear in the word
        else:
            reversing.append(img[g])
    if not reversing:
        return True
    w = reversing[0]
    gens = preserving + [x - w for x in reversing[1:]] + [2 * w]
    d = math.gcd(N, *gens)
    return w % d != 0


def orientability_case_rule(bmap: BskMap) -> bool:
    """Per-family orientability criteria, as derived in the case analyses.

    Redundant with the general non-orientable-word test in orientability();
    kept as an assertion layer (surface_of checks they agree on every
    smooth map).  True means the covered surface is orientable.
    """
    kind, N = bmap.quotient.kind, bmap.N
    img = bmap.image_dict
    if kind in ("d6", "d21", "d3-22m", "d3-23m"):
        return True
    if kind == "d2c-2m":
        return False
    if kind == "d2c-3m":
        return bmap.quotient.m != 4
    if kind in ("d12", "d14"):
        return bmap.quotient.m % 2 == 1
    if kind == "ann2":
        return order_mod(img["e1"], N) != N
    if kind == "mb2":
        if order_mod(img["d"], N) == N:
            return (N // 2) % 2 == 1
        return False  # d^(N/2) lies in the kernel
    if kind == "mb1":
        return math.gcd(N, img["x"], img["e"]) != 1
    if kind == "ann1":
        if img["c1"] == 0 and img["c2"] == 0:
            return True
        return (N // 2) % math.gcd(N, img["x"], img["e1"]) != 0
    raise ValueError(f"unknown quotient kind {kind!r}")


def action_reverses_orientation(bmap: BskMap) -> bool | None:
    """For orientable covers: does a generator of the action reverse orientation?

    The orientation behaviour is a homomorphism Z_N -> Z_2; when it is
    non-trivial every generator of Z_N reverses.  It is non-trivial exactly
    when some orientation-reversing canonical generator survives outside
    the kernel reflections (a glide, or a reflection with image N/2).
    Returns None for non-orientable covers.
    """
    if not orientability(bmap):
        return None
    pres = presentation_of(bmap.quotient)
    img = bmap.image_dict
    if pres.glides:
        return True
    return any(img[c] != 0 for c in pres.reflection_names)


def boundary_count(bmap: BskMap) -> int:
    """Boundary components of the covered surface.

    Each period cycle contributes: 0 if empty with the reflection outside
    the kernel; N/order(theta(e)) if empty with the reflection in the
    kernel; s*N/4 if non-empty of length s.  Integrality of s*N/4 holds for
    every smooth map (non-empty cycles force N even) and is asserted, not
    rounded.
    """
    pres = presentation_of(bmap.quotient)
    N = bmap.N
    img = bmap.image_dict
    total = 0
    for cyc in pres.cycles:
        if cyc.length == 0:
            if img[cyc.reflections[0]] != 0:
                continue
            assert cyc.connector is not None
            total += N // order_mod(img[cyc.connector], N)
        else:
            s = cyc.length * N
            assert s % 4 == 0, f"cycle contribution {cyc.length}*{N}/4 is not integral"
            total += s // 4
    return total


def surface_of(bmap: BskMap) -> SurfaceTopology:
    """Topological type of the covered surface of a smooth map."""
    failures = smoothness_failures(bmap)
    if failures:
        raise ValueError(f"map is not smooth: {failures[0]}")
    orientable = orientability(bmap)
    assert orientable == orientability_case_rule(bmap), (
        f"general orientability test disagrees with the case rule on {bmap}"
    )
    k = boundary_count(bmap)
    p = kernel_algebraic_genus(bmap.quotient.signature(), bmap.N)
    eps = 2 if orientable else 1
    g2 = p + 1 - k
    assert g2 % eps == 0 and g2 >= 0, f"inconsistent genus for {bmap}: p={p}, k={k}"
    return SurfaceTopology(orientable, g2 // eps, k)
