"""Acceptance suite: one test per criterion, one pass line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All comparisons are exact; nothing is tolerance-based.
"""

import itertools
from math import prod

import pytest

from pieri.algebra import (
    PieriContext,
    decompose_o,
    decompose_sp,
    eta_of,
    highest_weight_check,
    lm_predicted,
    multidegree_of_polynomial,
    multiplicity,
    subduct,
)
from pieri.cone import enumerate_fiber
from pieri.diagrams import (
    EMPTY,
    SkewShape,
    YoungDiagram,
    gl_dim,
    gl_iterated_pieri,
    kostka,
    partitions_of,
)
from pieri.hibi import increasing_sets
from pieri.poset import GammaPoset, eps_pairs
from pieri.verify import all_upward_closed_subsets, sample_members

GRIDS = [(1, 1), (2, 1), (1, 2), (2, 2)]


def report(name, detail):
    print(f"[PASS] {name}: {detail}")


def kostka_sum(k, ell, F, D, P):
    """Test-local middle route: explicit (E, A, B, C) bookkeeping."""
    total = 0
    pairs = eps_pairs(ell)
    maxp = max(P, default=0)
    for esize in range(min(F.size, D.size) + 1):
        for e_diag in partitions_of(esize, k):
            if not (F.contains(e_diag) and D.contains(e_diag)):
                continue
            for a in itertools.product(range(maxp + 1), repeat=ell):
                if sum(a) != F.size - esize:
                    continue
                kf = kostka(SkewShape(F, e_diag), a)
                if not kf:
                    continue
                for b in itertools.product(range(maxp + 1), repeat=ell):
                    if sum(b) != D.size - esize:
                        continue
                    kd = kostka(SkewShape(D, e_diag), b)
                    if not kd:
                        continue
                    q = tuple(p - x - y for p, x, y in zip(P, a, b))
                    if any(x < 0 for x in q):
                        continue
                    qmax = max(q, default=0)
                    ncs = 0
                    for c in itertools.product(range(qmax + 1), repeat=len(pairs)):
                        sums = [0] * ell
                        for (s, t), v in zip(pairs, c):
                            sums[s - 1] += v
                            sums[t - 1] += v
                        if tuple(sums) == q:
                            ncs += 1
                    total += kf * kd * ncs
    return total


@pytest.fixture(scope="module")
def oracle_grid():
    """(k, ell) -> list of (F, D, P, fiber, multiplicity) over the full grid."""
    data = {}
    for k, ell in GRIDS:
        poset = GammaPoset(k, ell)
        rows = []
        ds = [d for s in range(4) for d in partitions_of(s, k)]
        for d in ds:
            for p in itertools.product(range(4), repeat=ell):
                hi = d.size + sum(p)
                # odd-parity sizes are included: both routes must vanish there
                for fsize in range(hi + 1):
                    for f in partitions_of(fsize, k + ell):
                        fiber = enumerate_fiber(poset, f, d, p)
                        rows.append((f, d, p, fiber, multiplicity(k, ell, f, d, p)))
        data[(k, ell)] = rows
    return data


@pytest.fixture(scope="module")
def lm_sample():
    """(k, ell) -> (context, [(point, generator product)]) per criterion 5."""
    out = {}
    for k, ell in GRIDS:
        n = 2 * (k + ell) + 1
        ctx = PieriContext(n, k, ell)
        points = [a.chi() for a, _ in ctx.generators]
        points += sample_members(ctx, 200, seed=k * 10 + ell)
        out[(k, ell)] = (ctx, [(g, eta_of(ctx, g)) for g in points])
    return out


def test_criterion_01_poset_cardinality():
    for k in range(1, 7):
        for ell in range(1, 7):
            assert len(GammaPoset(k, ell)) == (2 * ell + 1) * k + ell * ell
    report("criterion 1", "poset sizes match (2l+1)k + l^2 for all 1 <= k,l <= 6")


def test_criterion_02_central_oracle_identity(oracle_grid):
    triples = 0
    for (k, ell), rows in oracle_grid.items():
        for f, d, p, fiber, mult in rows:
            assert len(fiber) == mult, (k, ell, f, d, p)
            assert mult == kostka_sum(k, ell, f, d, p), (k, ell, f, d, p)
            triples += 1
    assert triples > 2000
    report(
        "criterion 2",
        f"fiber count = Kostka convolution = multiplicity on {triples} triples",
    )


def test_criterion_03_increasing_set_completeness():
    checked = 0
    for k in range(1, 4):
        for ell in range(1, 4):
            poset = GammaPoset(k, ell)
            family = {s.members for s in increasing_sets(poset)}
            brute = set(all_upward_closed_subsets(poset))
            assert family == brute, (k, ell)
            checked += len(brute)
    for k in range(1, 5):
        assert len(increasing_sets(GammaPoset(k, 1))) == 4 * k + 2
    report(
        "criterion 3",
        f"increasing-set family matches exhaustive enumeration ({checked} sets), "
        "and the one-step count is 4k+2",
    )


def test_criterion_04_indicator_sum_identity():
    poset = GammaPoset(2, 2)
    sets = increasing_sets(poset)
    pairs = 0
    for a, b in itertools.combinations_with_replacement(sets, 2):
        lhs = tuple(x + y for x, y in zip(a.chi().values, b.chi().values))
        rhs = tuple(
            x + y for x, y in zip((a | b).chi().values, (a & b).chi().values)
        )
        assert lhs == rhs, (a, b)
        pairs += 1
    report("criterion 4", f"chi_A + chi_B = chi_union + chi_intersection on {pairs} pairs")


def test_criterion_05_leading_monomial_theorem(lm_sample):
    checked = 0
    for (k, ell), (ctx, pairs) in lm_sample.items():
        for g, eta in pairs:
            assert eta.leading_monomial() == lm_predicted(ctx, g), (k, ell, g.values)
            checked += 1
    report(
        "criterion 5",
        f"LM(generator product) = predicted monomial on {checked} points "
        "across four parameter grids",
    )


def test_criterion_06_injectivity_and_additivity(oracle_grid, lm_sample):
    contexts = {key: ctx for key, (ctx, _) in lm_sample.items()}
    fibers_checked = 0
    for (k, ell), rows in oracle_grid.items():
        ctx = contexts[(k, ell)]
        for f, d, p, fiber, _ in rows:
            if len(fiber) < 2:
                continue
            monos = [lm_predicted(ctx, pt) for pt in fiber]
            assert len(set(monos)) == len(monos), (k, ell, f, d, p)
            fibers_checked += 1
    added = 0
    for (k, ell), (ctx, pairs) in lm_sample.items():
        pts = [g for g, _ in pairs[:40]]
        for g1, g2 in zip(pts, pts[1:]):
            combined = lm_predicted(ctx, g1 + g2)
            assert combined == tuple(
                a + b for a, b in zip(lm_predicted(ctx, g1), lm_predicted(ctx, g2))
            )
            added += 1
    report(
        "criterion 6",
        f"predicted LMs pairwise distinct in {fibers_checked} fibers; "
        f"additivity on {added} sums",
    )


def test_criterion_07_subduction_closure():
    products = 0
    for k, ell in [(1, 1), (2, 1)]:
        ctx = PieriContext(2 * (k + ell) + 1, k, ell)
        key = ctx.ring.sort_key
        for (a, eta_a), (b, eta_b) in itertools.combinations_with_replacement(
            ctx.generators, 2
        ):
            product = eta_a * eta_b
            comb, rem = subduct(ctx, product)
            assert rem.is_zero(), (k, ell, a, b)
            lms = [key(lm_predicted(ctx, t.point)) for t in comb.terms]
            assert all(x > y for x, y in zip(lms, lms[1:])), "steps must decrease"
            assert lm_predicted(ctx, comb.terms[0].point) == lm_predicted(
                ctx, a.chi() + b.chi()
            )
            assert highest_weight_check(ctx, product), (k, ell, a, b)
            products += 1
    report(
        "criterion 7",
        f"subduction of {products} pairwise generator products reached "
        "remainder 0 with strictly decreasing leading monomials",
    )


def test_criterion_08_highest_weight_and_grading(lm_sample):
    ctx21, _ = lm_sample[(2, 1)]
    for a, eta in ctx21.generators:
        assert highest_weight_check(ctx21, eta), a
    graded = 0
    for (k, ell), (ctx, pairs) in lm_sample.items():
        for g, eta in pairs:
            assert multidegree_of_polynomial(ctx, eta) == g.degree(), (k, ell, g.values)
            graded += 1
    report(
        "criterion 8",
        f"all {len(ctx21.generators)} generators annihilated at (2,1,7); "
        f"grading matches cone degree on {graded} points",
    )


def test_criterion_09_classical_sanity():
    expected = {
        YoungDiagram((2,)): 1,
        YoungDiagram((1, 1)): 1,
        EMPTY: 1,
    }
    assert decompose_o(1, 1, (1,), (1,), n=5) == expected
    assert decompose_sp(1, 1, (1,), (1,), 2) == expected
    report("criterion 9", "vector x vector decomposition for O_5 and Sp_4")


def test_criterion_10_gl_dimension_bookkeeping():
    n = 3
    checked = 0
    small = [d for s in range(3) for d in partitions_of(s, n)]
    for d in small:
        for length in (1, 2, 3):
            for p in itertools.product(range(4), repeat=length):
                if sum(p) > 3:
                    continue
                table = gl_iterated_pieri(d, p, n)
                lhs = sum(m * gl_dim(f, n) for f, m in table.items())
                rhs = gl_dim(d, n) * prod(gl_dim(YoungDiagram((pi,)), n) for pi in p)
                assert lhs == rhs, (d, p)
                checked += 1
    report("criterion 10", f"dimension bookkeeping on {checked} (D, P) pairs at n=3")
