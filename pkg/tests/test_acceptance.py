"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Criterion 4's non-orientable odd-prime itemization is a known-red
check: the recorded expected tallies double-count a family whose
non-orientable covers require even order, and contradict both the
enumeration oracle and criterion 1; the test states the verified counts in
its failure message.
"""

import time
from collections import Counter
from contextlib import contextmanager

import pytest

from necsurf.bsk import BskMap, is_smooth, presentation_of, surface_of
from necsurf.classify import actions_for_order, classify_ann1
from necsurf.extremal import (
    MAX_ORDER_VARIANTS,
    MIN_GENUS_VARIANTS,
    max_order_closed,
    max_order_search,
    min_genus_closed,
    min_genus_search,
)
from necsurf.oracle import cross_check, enumerate_smooth, moves_for, oracle_report
from necsurf.signatures import QuotientType, area, kernel_algebraic_genus
from necsurf.zmod import biggest_coprime_divisor, euler_phi, psi, units


@contextmanager
def criterion(num, title):
    try:
        yield
    except BaseException:
        print(f"criterion {num} ({title}): FAIL")
        raise
    print(f"criterion {num} ({title}): PASS")


def test_criterion_1_oracle_formula_agreement():
    """Exact orbit-count agreement for every family, N <= 48, single-threaded."""
    with criterion(1, "oracle vs closed form, N <= 48"):
        start = time.time()
        report = cross_check(n_max=48)
        elapsed = time.time() - start
        for fail in report.failures:
            print(fail.describe())
            print("  oracle:  ", fail.oracle_buckets)
            print("  expected:", fail.expected_buckets)
        assert report.passed, f"{len(report.failures)} mismatching parameter points"
        assert len(report.points) > 1000
        assert elapsed < 300, f"sweep took {elapsed:.1f}s, budget is 5 minutes"


def test_criterion_2_worked_examples():
    """The two quoted annulus-quotient worked examples, against the oracle."""
    with criterion(2, "annulus-quotient worked examples"):
        res = classify_ann1(12, 12, 7, True)
        assert res.class_count == 2
        for real in res.realizations:
            s = real.surface
            assert (s.orientable, s.genus, s.boundary_count) == (True, 3, 7)
        rep = oracle_report(QuotientType("ann1", m=12), 12)
        assert sum(1 for o in rep.orbits if o.surface.boundary_count == 7) == 2

        for m in (3, 5, 9, 15):
            N = 2 * m  # so N/2 = m is odd
            C = biggest_coprime_divisor(m, N // m)
            expected = euler_phi(m) + (euler_phi(m // C) * psi(C) + 1) // 2
            assert classify_ann1(N, m, 2, True).class_count == expected, m
            rep = oracle_report(QuotientType("ann1", m=m), N)
            got = sum(1 for o in rep.orbits
                      if o.surface.orientable and o.surface.boundary_count == 2)
            assert got == expected, (m, got, expected)


def _inventory(N):
    """(kind-tally, per-surface counter) split by orientation behaviour."""
    preserving, reversing, nonorientable = Counter(), Counter(), Counter()
    for rec in actions_for_order(N):
        surf, real = rec.surface, rec.realization
        if not surf.orientable:
            nonorientable[surf.describe()] += real.count
        elif real.reversing:
            reversing[surf.describe()] += real.count
        else:
            preserving[surf.describe()] += real.count
    return preserving, reversing, nonorientable


def test_criterion_3_order_two_inventory():
    """All 14 actions of order 2 on algebraic-genus-2 surfaces, under 1 second."""
    with criterion(3, "order-2 inventory 2/4/8"):
        start = time.time()
        preserving, reversing, nonorientable = _inventory(2)
        assert sum(preserving.values()) == 2
        assert sum(reversing.values()) == 4
        assert sum(nonorientable.values()) == 8
        assert nonorientable == Counter(
            {"1-holed Klein bottle": 5, "2-holed projective plane": 3}
        )
        assert preserving == Counter({"1-holed torus": 1, "3-holed sphere": 1})
        assert reversing == Counter({"1-holed torus": 2, "3-holed sphere": 2})
        assert cross_check(n_max=2).passed
        assert time.time() - start < 1.0


def test_criterion_4_odd_prime_orientable():
    """p++(N) = N - 1 with 1 class at k = N and (N-1)/2 classes at k = 1."""
    with criterion(4, "odd-prime orientable minima"):
        for N in (3, 5, 7, 11, 13):
            ans = min_genus_closed(N, "p++")
            assert ans.value == N - 1
            by_k = Counter()
            for r in ans.realizers:
                by_k[r.surface.boundary_count] += r.realization.count
            assert by_k == Counter({N: 1, 1: (N - 1) // 2}), (N, by_k)
            search = min_genus_search(N, "p++")
            assert search.value == ans.value


def test_criterion_4_odd_prime_nonorientable():
    """Recorded expectation: p-(N) = N with 2 classes at k = N, 3(N-1)/2 at k = 1.

    The value p-(N) = N holds.  The itemization does not: the annulus
    quotient contributes no non-orientable covers at odd N (its non-kernel
    reflection would need image N/2), so the verified inventory is 1 class
    at k = N and (N-1)/2 at k = 1, all from the Moebius-band quotient.
    Classification, catalog search and the enumeration oracle agree on
    this; the assertion against the recorded tallies is kept as stated and
    is expected to fail.
    """
    with criterion(4, "odd-prime non-orientable itemization (known red)"):
        for N in (3, 5, 7, 11, 13):
            ans = min_genus_closed(N, "p-")
            assert ans.value == N

            by_k = Counter()
            for r in ans.realizers:
                by_k[r.surface.boundary_count] += r.realization.count
            # triple agreement on the actual inventory
            search = min_genus_search(N, "p-")
            assert search.value == N
            assert sorted(map(str, search.realizers)) == sorted(map(str, ans.realizers))
            oracle_by_k = Counter()
            for kind in ("mb1", "ann1"):
                for o in oracle_report(QuotientType(kind, m=N), N).orbits:
                    s = o.surface
                    if not s.orientable and s.algebraic_genus == N:
                        oracle_by_k[s.boundary_count] += 1
            assert oracle_by_k == by_k, (N, oracle_by_k, by_k)

            stated = Counter({N: 2, 1: 3 * (N - 1) // 2})
            assert by_k == stated, (
                f"N={N}: verified inventory (classification = search = oracle) is "
                f"{dict(by_k)} classes by boundary count, not the recorded "
                f"{dict(stated)}; see the docstring and the decisions ledger"
            )


def test_criterion_5_extremal_closed_vs_search():
    """Closed forms match the catalog search, realizers and counts included."""
    with criterion(5, "extremal closed form vs search"):
        start = time.time()
        for N in range(2, 61):
            for variant in MIN_GENUS_VARIANTS:
                if variant == "p+-" and N % 2 != 0:
                    with pytest.raises(ValueError):
                        min_genus_closed(N, variant)
                    assert min_genus_search(N, variant).value is None
                    continue
                closed = min_genus_closed(N, variant)
                search = min_genus_search(N, variant)
                assert closed.value == search.value, (N, variant)
                assert sorted(map(str, closed.realizers)) == sorted(
                    map(str, search.realizers)
                ), (N, variant)
        for p in range(2, 31):
            for variant in MAX_ORDER_VARIANTS:
                closed = max_order_closed(p, variant)
                search = max_order_search(p, variant)
                assert closed.value == search.value, (p, variant)
                assert sorted(map(str, closed.realizers)) == sorted(
                    map(str, search.realizers)
                ), (p, variant)
        # realizer class counts from the uniqueness corollaries
        assert min_genus_closed(9, "p+").class_count == 2  # p - 1 with p = 3
        assert min_genus_closed(15, "p+").class_count == 1
        for N in (6, 10, 14):  # N = 2 mod 4
            assert min_genus_closed(N, "p++").class_count == 1
            assert min_genus_closed(N, "p+-").class_count == 1
        for N in (8, 16, 20):  # 4 | N
            assert min_genus_closed(N, "p++").class_count == 1
            assert min_genus_closed(N, "p+-").class_count == 1
        # N = 12 is the one coincidence: 1/3 + 1/4 = 1/2 + 1/12, so the
        # two-cone quotients (2,12) and (3,4) both attain the preserving
        # minimum; the oracle confirms one class each (two in total)
        ans12 = min_genus_closed(12, "p++")
        assert ans12.class_count == 2
        assert sorted(r.quotient.label() for r in ans12.realizers) == [
            "d21(2,12)", "d21(3,4)"
        ]
        assert min_genus_closed(12, "p+-").class_count == 1
        assert min_genus_closed(15, "p-").class_count == 1 + 1  # k = q and k = 1 cases
        for N in (4, 6, 8, 10):
            assert min_genus_closed(N, "p-").class_count == 1
        for p in range(2, 31):
            for variant in ("N-", "N++", "N+-"):
                assert max_order_closed(p, variant).class_count == 1, (p, variant)
        elapsed = time.time() - start
        assert elapsed < 120, f"extremal sweep took {elapsed:.1f}s, budget is 2 minutes"


def test_criterion_6_structural_invariants():
    """Per-map invariants for every smooth map at N <= 24, zero violations."""
    with criterion(6, "structural invariant suite N <= 24"):
        from necsurf.classify import parameter_space
        from necsurf.oracle import ALL_KINDS

        checked_maps = 0
        for N in range(2, 25):
            unit_list = units(N)
            for kind in ALL_KINDS:
                for q in parameter_space(kind, N):
                    pres = presentation_of(q)
                    maps = enumerate_smooth(q, N)
                    moves = moves_for(q)
                    mu = area(q.signature())
                    for bmap in maps:
                        checked_maps += 1
                        surf = surface_of(bmap)
                        # (a) Hurwitz-Riemann genus equals eps*g + k - 1
                        p = kernel_algebraic_genus(q.signature(), N)
                        assert p == surf.algebraic_genus
                        assert p == N * mu + 1
                        # (b) invariance under units and automorphism moves
                        img = bmap.image_dict
                        for u in unit_list:
                            scaled = BskMap.from_dict(
                                q, N, {g: (u * v) % N for g, v in img.items()}
                            )
                            assert surface_of(scaled) == surf
                        for move in moves:
                            moved = BskMap.from_dict(q, N, move.apply(img, N))
                            assert is_smooth(moved)
                            assert surface_of(moved) == surf
                        # (c) consecutive reflections have distinct images
                        for cyc in pres.cycles:
                            if cyc.length == 0:
                                continue
                            ring = [img[c] for c in cyc.reflections]
                            for j, value in enumerate(ring):
                                assert value != ring[(j + 1) % len(ring)]
        assert checked_maps > 5000


def test_criterion_7_number_theory_kernel():
    """Brute-force validation of the arithmetic kernel, under 10 seconds."""
    import math

    from necsurf.zmod import crt_solve, divisors, harvey_check, lift_unit, maclachlan, order_mod

    with criterion(7, "number-theory kernel vs brute force"):
        start = time.time()
        for n in range(1, 41):
            assert euler_phi(n) == sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)
            assert psi(n) == sum(
                1 for a in range(n) if math.gcd(a, n) == 1 and math.gcd(a + 1, n) == 1
            )
        for m in range(1, 21):
            for n in range(1, 21):
                lcm = math.lcm(m, n)
                for a in range(m):
                    for b in range(n):
                        hits = [x for x in range(lcm) if x % m == a and x % n == b]
                        want = hits[0] if hits else None
                        assert crt_solve(a, m, b, n) == want
        for N in range(1, 41):
            realizable = set()
            for a in range(N):
                for b in range(N):
                    c = (-a - b) % N
                    if math.gcd(N, math.gcd(a, math.gcd(b, c))) == 1:
                        realizable.add((order_mod(a, N), order_mod(b, N), order_mod(c, N)))
            for m in divisors(N):
                for n in divisors(N):
                    for l in divisors(N):
                        assert harvey_check(m, n, l, N) == ((m, n, l) in realizable)
                        if math.lcm(m, n) == math.lcm(m, l) == math.lcm(n, l) == N:
                            quad = maclachlan(m, n, l)
                            assert (quad.m, quad.n, quad.l, quad.order) == (m, n, l, N)
        for N in range(1, 41):
            for n in divisors(N):
                for a in units(n):
                    got = lift_unit(a, n, N)
                    assert got % n == a % n and math.gcd(got, N) == 1
                    assert all(math.gcd(c, N) != 1 for c in range(a % n, got, n))
        elapsed = time.time() - start
        assert elapsed < 10, f"kernel validation took {elapsed:.1f}s, budget is 10 seconds"
