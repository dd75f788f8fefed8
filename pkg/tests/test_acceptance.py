"""Acceptance criteria 1-10.

Each test records one PASS/FAIL line (printed in the terminal summary and,
with -s, inline) and then asserts the verdict.  Run on its own with

    python3 -m pytest tests/test_acceptance.py -v
"""

from __future__ import annotations

import sys
import time
from collections import defaultdict
from math import lcm

import pytest

from cayleymc.cayley import (CAYLEY_CUBIC, CAYLEY_CUBIC_STR, ParameterError, cayley_solution,
                             cubic_residual, evaluate_cubic, is_degenerate, match_cayley, parameter_grid,
                             trace_field)
from cayleymc.convolution import characters_of_exact_order, middle_convolve
from cayleymc.elliptic import LegendreCurve, flow_check, psi_p_map, scalar_mul_x, torsion_x_poly
from cayleymc.exactalg import QQ, CycNum, common_order, subfield_degree, two_cos, units
from cayleymc.finitefield import GF
from cayleymc.linalg import jordan_type
from cayleymc.mcg import DEFAULT_BOUND, orbit, orbit_of_point
from cayleymc.monodromy import is_irreducible, star_check, trace_coordinates
from cayleymc.poly import roots_in_field
from conftest import record
from oracles import derived_cayley_cubic, non_classified_tuple

pytestmark = pytest.mark.slow

ONE, MINUS_ONE = CycNum.rational(1), CycNum.rational(-1)
STAR_BOUNDARY = [CycNum.rational(v) for v in (2, 2, 2, -2)]


def _point(T) -> tuple:
    return tuple(v.descend() for v in trace_coordinates(T).xyz)


def _fmt(items, limit: int = 6) -> str:
    items = list(items)
    text = ", ".join(map(str, items[:limit]))
    return text + (", ..." if len(items) > limit else "")


# 1 ---------------------------------------------------------------------------


def test_c01_cayley_generator():
    checked, excluded, failures = 0, 0, []
    for p in parameter_grid(15):
        if lcm(p.alpha.denominator, p.beta.denominator) > 15:
            continue
        try:
            T = cayley_solution(p)
        except ParameterError:
            excluded += 1
            continue
        if T.Minf.is_scalar(1) or T.Minf.is_scalar(-1):
            excluded += 1
            continue
        checked += 1
        if not (star_check(T) and is_irreducible(T) and not cubic_residual(trace_coordinates(T))):
            failures.append(f"({p.alpha}, {p.beta})")
    ok = checked > 100 and not failures
    record(1, ok, f"{checked} parameter pairs (lcm of denominators <= 15), {excluded} excluded "
                  f"(x1 = 0 or product = +-I), failures: {_fmt(failures) or 'none'}")
    assert ok


# 2, 3 ------------------------------------------------------------------------


def test_c02_convolution_rank(convolution_outputs):
    bad = [chi for chi, V in convolution_outputs.items() if V.rank != 2]
    ok = not bad and len(convolution_outputs) > 100
    record(2, ok, f"{len(convolution_outputs)} characters of exact order 2..15, "
                  f"rank != 2: {_fmt((c.m, c.a, c.b) for c in bad) or 'none'}")
    assert ok


def test_c03_convolution_jordan_types(convolution_outputs):
    bad = []
    for chi, V in convolution_outputs.items():
        finite = all(jordan_type(M, [1]).blocks == ((ONE, 2),) for M in V.mats)
        infinite = jordan_type(V.Minf, [-1]).blocks == ((MINUS_ONE, 2),)
        if not (finite and infinite):
            bad.append((chi.m, chi.a, chi.b))
    ok = not bad
    record(3, ok, f"{len(convolution_outputs)} outputs, J(1,2)^3 + J(-1,2) violated by "
                  f"{len(bad)}: {_fmt(bad) or 'none'}")
    assert ok


# 4 ---------------------------------------------------------------------------


def test_c04_involutivity(convolution_outputs):
    tuples = []
    for p in parameter_grid(4):
        if not is_degenerate(p):
            tuples.append((f"cayley({p.alpha},{p.beta})", cayley_solution(p)))
    for chi, V in convolution_outputs.items():
        if chi.m <= 8 and star_check(V):
            tuples.append((f"mc(chi {chi.m},{chi.a},{chi.b})", V))
    bad = []
    for name, T in tuples:
        W = middle_convolve(middle_convolve(T, -1), -1)
        if W.rank != T.rank or trace_coordinates(W) != trace_coordinates(T):
            bad.append(name)
    ok = len(tuples) >= 20 and not bad
    record(4, ok, f"{len(tuples)} star tuples, all seven traces restored: "
                  f"{'yes' if not bad else 'no, ' + _fmt(bad)}")
    assert ok


# 5 ---------------------------------------------------------------------------


def _galois_orbits(points) -> int:
    remaining = set(points)
    count = 0
    while remaining:
        p = remaining.pop()
        n, vals = common_order(p)
        for k in units(n):
            remaining.discard(tuple(v.galois(k).descend() for v in vals))
        count += 1
    return count


def _character_classes(m: int) -> tuple[int, int]:
    """(classes under chi ~ chi^-1, orbits under chi -> chi^k for units k)."""
    chars = {(c.a, c.b) for c in characters_of_exact_order(m)}
    inv = {frozenset({(a, b), (-a % m, -b % m)}) for a, b in chars}
    orbits = {frozenset((k * a % m, k * b % m) for k in units(m)) for a, b in chars}
    return len(inv), len(orbits)


def test_c05_classification_round_trip(convolution_outputs):
    unmatched, by_order = [], defaultdict(set)
    matched_points = set()
    for chi, V in convolution_outputs.items():
        if chi.m > 10:
            continue
        pt = _point(V)
        by_order[chi.m].add(pt)
        m = match_cayley(V, 30) if star_check(V) and is_irreducible(V) else None
        if m is None or _point(cayley_solution(m)) != pt:
            unmatched.append((chi, pt, star_check(V)))
        else:
            matched_points.add(pt)
    count_errors = []
    for order, pts in sorted(by_order.items()):
        exp_points, exp_orbits = _character_classes(order)
        got_points, got_orbits = len(pts), _galois_orbits(pts)
        if (got_points, got_orbits) != (exp_points, exp_orbits):
            count_errors.append(f"m={order}: points {got_points}/{exp_points}, orbits {got_orbits}/{exp_orbits}")
    # evidence only: are unmatched star points in the pure braid orbit of a matched point?
    in_orbit = 0
    for _, pt, star in unmatched:
        if star:
            r = orbit_of_point(pt, STAR_BOUNDARY, 1000)
            if any(tuple(v.descend() for v in q) in matched_points for q in r.points):
                in_orbit += 1
    total = sum(1 for chi in convolution_outputs if chi.m <= 10)
    not_star = sum(1 for _, _, s in unmatched if not s)
    ok = not unmatched and not count_errors
    record(5, ok, f"{total} characters (m <= 10): {total - len(unmatched)} matched, "
                  f"{len(unmatched)} unmatched ({not_star} not star, {len(unmatched) - not_star} with y = 2 "
                  f"off the explicit family; {in_orbit} of those lie in a braid orbit of a matched point); "
                  f"point and Galois-orbit counts {'agree' if not count_errors else 'differ: ' + _fmt(count_errors)}")
    assert ok


# 6 ---------------------------------------------------------------------------


def test_c06_trace_fields(convolution_outputs):
    bad = []
    for chi, V in convolution_outputs.items():
        m = chi.exact_order
        expected = subfield_degree([two_cos(2, m)])   # [Q(zeta_m + zeta_m^-1) : Q]
        got = trace_field(V).degree
        if got != expected:
            bad.append(f"({chi.m},{chi.a},{chi.b}): {got} != {expected}")
    ok = not bad
    record(6, ok, f"{len(convolution_outputs)} characters, exact orders 2..15, "
                  f"degree mismatches: {_fmt(bad) or 'none'}")
    assert ok


# 7 ---------------------------------------------------------------------------


def test_c07_mcg_finiteness():
    t0 = time.perf_counter()
    known: dict[tuple, int] = {}
    seeds = degenerate = computed = 0
    infinite = []
    sizes = set()
    for p in parameter_grid(10):
        if is_degenerate(p):
            degenerate += 1
            continue
        seeds += 1
        T = cayley_solution(p)
        key = _point(T)
        if key in known:
            continue
        r = orbit(T, DEFAULT_BOUND)
        computed += 1
        if r.exceeded:
            infinite.append(f"({p.alpha}, {p.beta})")
            continue
        sizes.add(r.size)
        for q in r.points:
            known[tuple(v.descend() for v in q)] = r.size
    witness = orbit(non_classified_tuple(), DEFAULT_BOUND)
    ok = not infinite and witness.exceeded
    record(7, ok, f"{seeds} seeds ({degenerate} degenerate skipped), {computed} distinct orbits, "
                  f"largest {max(sizes)}, exceeded: {_fmt(infinite) or 'none'}; "
                  f"point (1/2, 1/2, 7/4) exceeds {DEFAULT_BOUND}: {witness.exceeded} "
                  f"[{time.perf_counter() - t0:.0f}s]")
    assert ok


# 8 ---------------------------------------------------------------------------


def test_c08_flow_diagram():
    lambdas, fields = (2, 3, 6), (11, 13)
    failures, runs = [], 0
    for p in (3, 5, 7):
        for lam in lambdas:
            deg_q = psi_p_map(LegendreCurve(QQ, lam), p).degree
            if deg_q != p * p:
                failures.append(f"deg over Q p={p} lambda={lam}: {deg_q}")
            for q in fields:
                r = flow_check(lam, p, q, samples=100, seed=p * 1000 + q)
                runs += 1
                if not (r.passed and r.samples >= 100 and r.reduction_agrees):
                    failures.append(f"p={p} lambda={lam} q={q}: {r.diagram_ok}/{r.samples}")
    ok = not failures
    record(8, ok, f"{runs} (p, lambda, q) runs x 100 samples, p in (3,5,7), lambda in {lambdas}, "
                  f"q in {fields}; failures: {_fmt(failures) or 'none'}")
    assert ok


# 9 ---------------------------------------------------------------------------


def test_c09_torsion_layer():
    primes = [11, 13, 17, 19, 23, 29, 31, 37, 41, 43]
    tested, killed, uncovered = 0, 0, []
    for lam in (2, 3, -1):
        E = LegendreCurve(QQ, lam)
        for m in range(2, 10):
            T = torsion_x_poly(E, m)
            n_here = 0
            for q in primes:
                F2 = GF(q, 2)
                E2 = E.over(F2)
                for r in roots_in_field(T.map_coeffs(F2)):
                    n_here += 1
                    killed += scalar_mul_x(E2, m, r) is None
            tested += n_here
            if not n_here:
                uncovered.append((lam, m))
    ok = tested > 0 and killed == tested and not uncovered
    record(9, ok, f"{tested} torsion x-roots over F_(q^2), q in {primes[0]}..{primes[-1]}, lambda in (2,3,-1), "
                  f"m = 2..9: {killed}/{tested} killed by [m]; uncovered (lambda, m): {_fmt(uncovered) or 'none'}")
    assert ok


# 10 --------------------------------------------------------------------------


def test_c10_cubic_cross_oracle():
    text, terms = derived_cayley_cubic()
    ok = text == CAYLEY_CUBIC_STR and terms == CAYLEY_CUBIC
    # the constant used by cubic_residual is the stored one
    T = non_classified_tuple()
    ok = ok and cubic_residual(trace_coordinates(T)) == evaluate_cubic(terms, *trace_coordinates(T).xyz) == 0
    record(10, ok, f"eliminated relation at tr(M0 M1 Ml) = -2: {text!r}; stored: {CAYLEY_CUBIC_STR!r}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-p", "no:cacheprovider"]))
