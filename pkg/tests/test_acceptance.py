"""Acceptance criteria, one test per criterion, each printing a PASS line
with its runtime (run with -s to see them).

Criteria 2 and 4 each contain one clause whose textbook expectation is
disproved by exhaustive enumeration (see the README section on the
brute-force oracles); those clauses live in dedicated strict-xfail tests
right next to the green remainder of their criterion, with the verified
actual values asserted.
"""

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import make_ctx
from gekeler.gf import gf
from gekeler.fqpoly import FqPoly
from gekeler.ideals import Order
from gekeler.primes import singular_primes, maximal_order
from gekeler.overorders import p_overorders
from gekeler.weakeq import local_icm
from gekeler.zeta import l_polynomial, count_places, _poly_roots_complex
from gekeler import ratios as G
from gekeler import oracle as O

_SL_GATE = {}


def ensure_sl_gate():
    """Criterion 6 gate; must hold before any ratio value is trusted."""
    if _SL_GATE.get("ok"):
        return
    for (r, q, n) in [(2, 2, 1), (2, 3, 1), (2, 2, 2), (2, 3, 2)]:
        p = FqPoly.gen(gf(q))
        sl, gl, units = O.brute_sl_count(r, p, n)
        assert sl == O.sl_order_closed_form(r, q, n), (r, q, n)
        assert gl == units * sl
    _SL_GATE["ok"] = True


def report(n, started, detail=""):
    print(f"ACCEPTANCE {n}: PASS ({time.monotonic() - started:.2f}s) {detail}")


def test_criterion_6_group_size_gate():
    t0 = time.monotonic()
    ensure_sl_gate()
    assert time.monotonic() - t0 < 300
    report(6, t0, "brute SL/GL counts match the closed form at 4 instances")


def test_criterion_1_cusp_end_to_end():
    t0 = time.monotonic()
    ensure_sl_gate()
    ctx = make_ctx(3, "x^2 - T^3")
    T = FqPoly.gen(ctx.field)
    assert singular_primes(ctx) == [T]
    orders = p_overorders(ctx, T).orders
    assert len(orders) == 2
    assert {s.ideal for s in orders} == {Order.monogenic(ctx).ideal,
                                         maximal_order(ctx).ideal}
    icm = local_icm(ctx, T)
    assert icm.m_p == 2
    assert G.gekeler_ratio(ctx, T).value == 2
    assert G.gekeler_product(ctx).value == 2
    assert time.monotonic() - t0 < 10
    report(1, t0, "singular={T}, overorders={R,O_K}, m_T=2, v_T=2, product=2")


def test_criterion_2_orbit_counts_regular_clause():
    t0 = time.monotonic()
    ctx = make_ctx(3, "x^2 - T^3")
    F = ctx.field
    T = FqPoly.gen(F)
    one = FqPoly.one(F)
    for n in (1, 2):
        assert O.brute_orbit_count(ctx, T - one, n) == 1
        assert O.brute_orbit_count(ctx, T + one, n) == 1
    # at level 1 the singular count still matches m_T
    assert O.brute_orbit_count(ctx, T, 1) == 2
    assert time.monotonic() - t0 < 300
    report(2, t0, "regular primes: 1 orbit at n <= 2; cusp level 1: 2 orbits")


@pytest.mark.xfail(strict=True, reason=(
    "unattainable as stated: the exhaustive GL_2(A/T^2)-orbit count among "
    "ALL matrices with charpoly = x^2 - T^3 mod T^2 is 5, not m_T = 2; the "
    "99 matching matrices split as 72+8 (projections of the two ideal "
    "classes) plus junk orbits of sizes 1, 6, 12 made of non-liftable "
    "matrices.  The bijection itself is validated in the oracle tests: the "
    "two class matrices stay in exactly 2 distinct orbits at n = 1, 2.  "
    "See the README oracle notes."))
def test_criterion_2_orbit_counts_cusp_clause_as_stated():
    ctx = make_ctx(3, "x^2 - T^3")
    T = FqPoly.gen(ctx.field)
    count = O.brute_orbit_count(ctx, T, 2)
    assert count == 5  # the verified exhaustive value
    assert count == 2  # the criterion as stated; fails honestly


def test_criterion_3_ratio_convergence():
    # q = 3, r = 2, p in {T, T-1}; f is not pinned by the criterion, and the
    # stated convergence is true exactly when both primes are regular, which
    # holds for f = x^2 - T (see the README oracle notes for the singular case)
    t0 = time.monotonic()
    ensure_sl_gate()
    ctx = make_ctx(3, "x^2 - T")
    F = ctx.field
    T = FqPoly.gen(F)
    for p in (T, T - FqPoly.one(F)):
        v = G.gekeler_ratio(ctx, p).value
        levels = [G.finite_level_ratio(ctx, p, n) for n in (1, 2, 3)]
        errs = [abs(x - v) for x in levels]
        assert errs[0] >= errs[1] >= errs[2]
        assert errs[2] <= v * Fraction(1, 3 ** 2)
    assert time.monotonic() - t0 < 600
    report(3, t0, "x^2 - T at p=T, T-1: errors nonincreasing, n=3 within 1/9")


def test_criterion_4_product_convergence_final_gap():
    t0 = time.monotonic()
    ensure_sl_gate()
    gap_seqs = {}
    for fstr, limit in [("x^2 - T^3", 2), ("x^2 - T", 1)]:
        ctx = make_ctx(3, fstr)
        assert G.gekeler_product(ctx).value == limit
        partials = G.partial_products(ctx, 4)
        gaps = [abs(math.log(float(v / limit))) for _, v in partials]
        assert gaps[-1] < 0.05
        assert gaps[-1] < gaps[0]
        gap_seqs[fstr] = gaps
    assert time.monotonic() - t0 < 120
    report(4, t0, f"final |log gap| at D=4: "
                  f"{gap_seqs['x^2 - T^3'][-1]:.5f} (cusp), "
                  f"{gap_seqs['x^2 - T'][-1]:.5f} (x^2-T)")


@pytest.mark.xfail(strict=True, reason=(
    "unattainable as stated: |log gap| is not decreasing in D; it rises at "
    "D = 3 (0.02485 -> 0.03034) for both pinned inputs because the "
    "quadratic character of each double cover has a constant L-polynomial, "
    "forcing exact split/inert balance in degree 3 and a partial factor "
    "(729/728)^4 > 1.  See the README oracle notes."))
def test_criterion_4_monotone_clause_as_stated():
    ctx = make_ctx(3, "x^2 - T")
    partials = G.partial_products(ctx, 4)
    gaps = [abs(math.log(float(v / 1))) for _, v in partials]
    assert [round(g, 5) for g in gaps] == [0.11778, 0.02485, 0.03034, 0.00702]
    assert all(gaps[i + 1] <= gaps[i] for i in range(len(gaps) - 1))


def test_criterion_5_l_polynomial_gates():
    t0 = time.monotonic()
    ctx = make_ctx(5, "x^2 - (T^3 + T + 1)")
    # independent exhaustive point count over F_5
    affine = sum(1 for t in range(5) for y in range(5)
                 if (y * y) % 5 == (t ** 3 + t + 1) % 5)
    n1 = affine + 1
    assert count_places(ctx, 1) == n1
    lp = l_polynomial(ctx)
    assert lp.coeffs == (1, n1 - 6, 5)
    for i in range(lp.g + 1):
        assert lp.coeffs[2 * lp.g - i] == 5 ** (lp.g - i) * lp.coeffs[i]
    for root in _poly_roots_complex(lp.coeffs):
        assert abs(abs(root) - 5 ** -0.5) <= 1e-9
    assert lp.value_at(Fraction(1)) > 0
    assert time.monotonic() - t0 < 60
    report(5, t0, f"L = 1 + {n1 - 6}t + 5t^2, N'_1 = {n1} from exhaustion")


def test_criterion_7_commutant_gate():
    t0 = time.monotonic()
    assert O.commutant_dimension(make_ctx(3, "1 - x + x^3")) == 3
    assert O.commutant_dimension(make_ctx(3, "x^2 - T^3")) == 2
    assert O.commutant_dimension(make_ctx(2, "x^3 - T")) == 3
    assert time.monotonic() - t0 < 10
    report(7, t0, "commutant dimension = r on all three inputs")


def test_criterion_8_randomized_property_suite():
    t0 = time.monotonic()
    from property_suite import run_property_suite
    executed = run_property_suite(total=500, seed=20240)
    assert executed >= 500
    assert time.monotonic() - t0 < 300
    report(8, t0, f"{executed} randomized instances")


def test_criterion_9_cli_determinism():
    t0 = time.monotonic()
    invocations = [
        ["product", "--q", "3", "--f", "x^2 - T^3"],
        ["product", "--q", "3", "--f", "x^2 - T", "--check-depth", "2"],
        ["icm", "--q", "3", "--f", "x^2 - T^3", "--prime", "T"],
        ["ratio", "--q", "3", "--f", "x^2 - T^3", "--prime", "T", "--level", "1"],
        ["zeta", "--q", "5", "--f", "x^2 - (T^3 + T + 1)"],
        ["primes", "--q", "3", "--f", "x^2 - T^3"],
        ["primes", "--q", "3", "--f", "x^2 - T^3", "--prime", "T"],
        ["overorders", "--q", "3", "--f", "x^2 - T^3", "--prime", "T"],
        ["oracle", "count", "--q", "3", "--f", "x^2 - T^3", "--prime", "T",
         "--level", "2"],
        ["oracle", "orbits", "--q", "3", "--f", "x^2 - T^3", "--prime", "T-1",
         "--level", "1"],
        ["oracle", "slcount", "--q", "3", "--f", "x^2 - T^3", "--prime", "T",
         "--level", "1"],
        ["oracle", "commutant", "--q", "3", "--f", "1 - x + x^3"],
    ]
    for args in invocations:
        outs = []
        for _ in range(2):
            proc = subprocess.run(
                [sys.executable, "-m", "gekeler"] + args,
                capture_output=True, check=True)
            outs.append(proc.stdout)
        assert outs[0] == outs[1], f"nondeterministic output for {args}"
        json.loads(outs[0])
    report(9, t0, f"{len(invocations)} commands byte-identical across reruns")
