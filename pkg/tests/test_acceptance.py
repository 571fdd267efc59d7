"""Acceptance suite: every release criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v`` (or the whole suite).
The budgets and tolerances are frozen here; nothing is calibrated at
run time.
"""

import time

import pytest

import conftest
from cadeque.backend import backend_name, cadeques as cq, counter as ctr
from cadeque.bench import BenchConfig, build_plan, records_by, run_bench
from cadeque.fuzz import FuzzConfig, cadeque_adapter, deque_adapter, gen_scenario, run_differential

COUNTER_STEPS = 100_000
COUNTER_BUDGET_S = 1.0
DEQUE_SCENARIOS = 1_000
DEQUE_STEPS = 1_000
DEQUE_BUDGET_S = 120.0
CADEQUE_SCENARIOS = 1_000
CADEQUE_STEPS = 100
CADEQUE_CONCAT_FRACTION = 0.1
CADEQUE_BUDGET_S = 300.0
LEN_CAP = 1 << 14
WORK_BIN_LOW, WORK_BIN_HIGH = 4, 20
TIMING_BIN_LOW, TIMING_BIN_HIGH = 5, 20  # [2^4, 2^5) and [2^19, 2^20)
TIMING_RATIO_LIMIT = 5.0
LIST_GROWTH_FLOOR = 100.0


def _report(name, ok, detail=""):
    line = "ACCEPTANCE %-28s %s  %s" % (name, "PASS" if ok else "FAIL", detail)
    print(line, flush=True)
    conftest.acceptance_lines.append(line)
    assert ok, line


def test_counter_hundred_thousand_successors():
    t0 = time.perf_counter()
    n = ctr.zero()
    for k in range(COUNTER_STEPS):
        assert ctr.value(n) == k
        assert ctr.validate(n) == []
        n = ctr.succ(n)
    elapsed = time.perf_counter() - t0
    chain_ok = True
    m = ctr.from_digits("011112")
    m = ctr.succ(m)
    chain_ok &= ctr.digits(m) == "1111101"
    m = ctr.succ(m)
    chain_ok &= ctr.digits(m) == "0211101"
    _report(
        "counter-succ-100k",
        chain_ok and elapsed < COUNTER_BUDGET_S,
        "%.2fs (budget %.0fs), displayed chain %s" % (elapsed, COUNTER_BUDGET_S, "ok" if chain_ok else "WRONG"),
    )


def test_deque_differential():
    cfg = FuzzConfig(
        steps=DEQUE_STEPS, with_concat=False, max_len=LEN_CAP, full_compare_cap=LEN_CAP
    )
    ad = deque_adapter()
    t0 = time.perf_counter()
    disc = vfail = 0
    for seed in range(DEQUE_SCENARIOS):
        rep = run_differential(gen_scenario(seed, cfg), adapter=ad)
        disc += len(rep.discrepancies)
        vfail += len(rep.validator_failures)
    elapsed = time.perf_counter() - t0
    _report(
        "deque-differential",
        disc == 0 and vfail == 0 and elapsed < DEQUE_BUDGET_S,
        "%d scenarios x %d steps: %d discrepancies, %d validator failures, %.1fs (budget %.0fs)"
        % (DEQUE_SCENARIOS, DEQUE_STEPS, disc, vfail, elapsed, DEQUE_BUDGET_S),
    )


def test_cadeque_differential():
    # the full-sequence compare against the oracle at every step checks the
    # five fringe equations inductively: each new version's sequence must
    # equal the oracle's combination of its operands' (already verified)
    # sequences
    cfg = FuzzConfig(
        steps=CADEQUE_STEPS,
        concat_fraction=CADEQUE_CONCAT_FRACTION,
        max_len=LEN_CAP,
        full_compare_cap=LEN_CAP,
    )
    ad = cadeque_adapter()
    t0 = time.perf_counter()
    disc = vfail = 0
    concats = 0
    for seed in range(CADEQUE_SCENARIOS):
        sc = gen_scenario(seed, cfg)
        concats += sum(1 for s in sc.steps if s.op == "concat")
        rep = run_differential(sc, adapter=ad)
        disc += len(rep.discrepancies)
        vfail += len(rep.validator_failures)
    elapsed = time.perf_counter() - t0
    frac = concats / (CADEQUE_SCENARIOS * CADEQUE_STEPS)
    _report(
        "cadeque-differential",
        disc == 0 and vfail == 0 and elapsed < CADEQUE_BUDGET_S and 0.05 < frac < 0.15,
        "%d scenarios x %d steps (%.1f%% concat): %d discrepancies, %d validator failures, %.1fs (budget %.0fs)"
        % (CADEQUE_SCENARIOS, CADEQUE_STEPS, 100 * frac, disc, vfail, elapsed, CADEQUE_BUDGET_S),
    )


def test_persistence_snapshots():
    # dedicated persistence pass: digests of every version re-checked after
    # each step (operands) and at scenario end (full pool sweep)
    cfg = FuzzConfig(steps=200, concat_fraction=0.15, max_len=LEN_CAP)
    bad = 0
    for seed in range(50):
        rep = run_differential(gen_scenario(seed, cfg), adapter=cadeque_adapter(),
                               check_persistence=True)
        bad += sum(1 for d in rep.discrepancies if "persistence" in d["kind"])
        bad += sum(1 for d in rep.discrepancies if "persistence" not in d["kind"])
    _report("persistence", bad == 0, "50 scenarios, every version digest stable")


@pytest.fixture(scope="module")
def work_bench():
    cfg = BenchConfig(
        max_log2=WORK_BIN_HIGH,
        per_bin=50,
        ops_per_point=25,
        seed=2,
        structures=("cadeque",),
        probe_window=8,
    )
    return run_bench(cfg)


def test_constant_structural_work(work_bench):
    records, plan, flags = work_bench
    assert plan.operation_count == (WORK_BIN_HIGH + 1) * 50
    details = []
    ok = not flags
    for op in ("push", "pop", "inject", "eject", "concat"):
        per_bin = {r.bin: r.work_counter for r in records_by(records, "cadeque", op)}
        lo, hi = per_bin[WORK_BIN_LOW], per_bin[WORK_BIN_HIGH]
        details.append("%s %d==%d" % (op, lo, hi))
        ok = ok and lo == hi
        # and the whole range in between is flat as well
        ok = ok and len({per_bin[b] for b in range(WORK_BIN_LOW, WORK_BIN_HIGH + 1)}) == 1
    _report(
        "constant-structural-work",
        ok,
        "bin %d vs bin %d: %s%s"
        % (WORK_BIN_LOW, WORK_BIN_HIGH, ", ".join(details),
           "" if not flags else "; BOUND FLAGS: %r" % flags),
    )


@pytest.fixture(scope="module")
def timing_bench():
    cfg = BenchConfig(
        max_log2=TIMING_BIN_HIGH,
        per_bin=10,
        ops_per_point=300,
        seed=4,
        structures=("cadeque", "list"),
        naive_max_log2=TIMING_BIN_HIGH,
        naive_per_bin=2,
        probe_window=4,
    )
    return run_bench(cfg)


def test_timing_trend(timing_bench):
    records, _, _ = timing_bench
    details = []
    ok = True
    for op in ("push", "pop", "inject", "eject", "concat"):
        per_bin = {r.bin: r.nanos_per_op for r in records_by(records, "cadeque", op)}
        ratio = per_bin[TIMING_BIN_HIGH] / per_bin[TIMING_BIN_LOW]
        details.append("%s %.2fx" % (op, ratio))
        ok = ok and ratio <= TIMING_RATIO_LIMIT
    lst = {r.bin: r.nanos_per_op for r in records_by(records, "list", "concat")}
    growth = lst[TIMING_BIN_HIGH] / lst[TIMING_BIN_LOW]
    details.append("list-concat %.0fx" % growth)
    ok = ok and growth >= LIST_GROWTH_FLOOR
    _report(
        "timing-trend",
        ok,
        "cadeque bin%d/bin%d <= %.1fx: %s (list concat floor %.0fx)"
        % (TIMING_BIN_HIGH, TIMING_BIN_LOW, TIMING_RATIO_LIMIT, ", ".join(details), LIST_GROWTH_FLOOR),
    )


def test_full_scale_plan_arithmetic():
    plan = build_plan(BenchConfig(max_log2=40, per_bin=50))
    _report(
        "full-scale-plan",
        plan.operation_count == 2050 and plan.unreachable == [],
        "(40, 50) plan reports %d operations" % plan.operation_count,
    )


def test_backend_note():
    # informational: which kernel ran this acceptance suite
    _report("kernel-backend", True, backend_name)
