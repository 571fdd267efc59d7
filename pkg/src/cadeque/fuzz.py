"""Seeded differential fuzzing of the deques against the reference oracle.

Scenarios are generated deterministically from a 64-bit seed (splitmix64,
recorded in every report).  A scenario operates on a growing pool of
versions, so persistence is exercised: any step may take any previously
produced value as an operand.  The runner replays each step on the
candidate structure and on the oracle, comparing extracted values and
full sequences, running the structural validator, checking that earlier
versions are untouched, and recording the maximum structural work per
operation kind.
"""

import json
from dataclasses import dataclass, field

from . import oracle
from .backend import cadeques, deques, work

RNG_ID = "splitmix64"

_MASK = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic 64-bit generator (splitmix64)."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n):
        return self.next_u64() % n

    def frac(self):
        return self.next_u64() / float(1 << 64)


class FuzzConfigError(ValueError):
    pass


@dataclass(frozen=True)
class FuzzConfig:
    steps: int = 100
    concat_fraction: float = 0.1
    value_range: int = 1 << 30
    max_len: int = 1 << 14
    with_concat: bool = True
    full_compare_cap: int = 1 << 14
    sample_k: int = 32
    validate_every: int = 1

    def check(self):
        if self.steps < 0:
            raise FuzzConfigError("steps must be >= 0")
        if not (0.0 <= self.concat_fraction <= 1.0):
            raise FuzzConfigError("concat_fraction must be within [0, 1]")
        if self.value_range < 1:
            raise FuzzConfigError("value_range must be positive")
        if self.max_len < 1:
            raise FuzzConfigError("max_len must be positive")


@dataclass(frozen=True)
class OpStep:
    op: str  # push | inject | pop | eject | concat
    i: int  # operand version index
    j: int = -1  # second operand (concat only)
    value: int = 0  # payload (push/inject only)


@dataclass(frozen=True)
class Scenario:
    seed: int
    config: FuzzConfig
    steps: tuple


@dataclass
class Report:
    seed: int = 0
    rng: str = RNG_ID
    steps_run: int = 0
    discrepancies: list = field(default_factory=list)
    validator_failures: list = field(default_factory=list)
    max_work_counters: dict = field(default_factory=dict)
    max_len: int = 0

    @property
    def ok(self):
        return not self.discrepancies and not self.validator_failures

    def to_dict(self):
        return {
            "seed": self.seed,
            "rng": self.rng,
            "steps_run": self.steps_run,
            "discrepancies": self.discrepancies,
            "validator_failures": self.validator_failures,
            "max_work_counters": self.max_work_counters,
            "max_len": self.max_len,
            "ok": self.ok,
        }


def gen_scenario(seed, config):
    """Deterministic scenario over a pool of versions; pool[0] is empty.

    Lengths are simulated during generation so that concatenation never
    produces a sequence longer than config.max_len.
    """
    config.check()
    rng = SplitMix64(seed)
    lengths = [0]
    steps = []
    basic_ops = ("push", "inject", "pop", "eject")
    for _ in range(config.steps):
        made = None
        if config.with_concat and rng.frac() < config.concat_fraction:
            i = rng.below(len(lengths))
            j = rng.below(len(lengths))
            if lengths[i] + lengths[j] <= config.max_len:
                made = OpStep("concat", i, j=j)
                lengths.append(lengths[i] + lengths[j])
        if made is None:
            op = basic_ops[rng.below(4)]
            i = rng.below(len(lengths))
            if op in ("push", "inject"):
                if lengths[i] + 1 > config.max_len:
                    op = "pop"
            if op in ("push", "inject"):
                made = OpStep(op, i, value=rng.below(config.value_range))
                lengths.append(lengths[i] + 1)
            else:
                made = OpStep(op, i)
                lengths.append(max(0, lengths[i] - 1))
        steps.append(made)
    return Scenario(seed, config, tuple(steps))


# Adapters give the runner one calling convention per structure.


class Adapter:
    __slots__ = ("name", "empty", "push", "inject", "pop", "eject", "concat",
                 "seq", "length", "validate", "work_bounds")

    def __init__(self, name, mod):
        self.name = name
        self.empty = mod.empty
        self.push = mod.push
        self.inject = mod.inject
        self.pop = mod.pop
        self.eject = mod.eject
        self.concat = getattr(mod, "concat", None)
        self.seq = mod.seq
        self.length = mod.length
        self.validate = mod.validate
        self.work_bounds = mod.WORK_BOUNDS


def cadeque_adapter():
    return Adapter("cadeque", cadeques)


def deque_adapter():
    return Adapter("deque", deques)


_P = 0x100000001B3


def digest(values):
    """Rolling hash plus length; cheap stand-in for full comparison."""
    h = 0xCBF29CE484222325
    n = 0
    for v in values:
        h = ((h ^ (v & _MASK)) * _P) & _MASK
        n += 1
    return h, n


def _spot(values, k):
    return values[:k], values[-k:], len(values)


def run_differential(scenario, adapter=None, check_persistence=True):
    """Replay a scenario against the oracle; all failures are data."""
    ad = adapter or cadeque_adapter()
    cfg = scenario.config
    report = Report(seed=scenario.seed)
    pool = [ad.empty()]
    model = [oracle.empty()]
    digests = [digest(())]
    max_work = {}
    max_len = 0

    def fail(step_idx, kind, expected, actual):
        report.discrepancies.append(
            {"step": step_idx, "kind": kind, "expected": repr(expected), "actual": repr(actual)}
        )

    for idx, st in enumerate(scenario.steps):
        op = st.op
        before = work.now()
        if op == "concat":
            d = ad.concat(pool[st.i], pool[st.j])
            m = oracle.concat(model[st.i], model[st.j])
        elif op == "push":
            d = ad.push(st.value, pool[st.i])
            m = oracle.push(st.value, model[st.i])
        elif op == "inject":
            d = ad.inject(pool[st.i], st.value)
            m = oracle.inject(model[st.i], st.value)
        elif op == "pop":
            got = ad.pop(pool[st.i])
            want = oracle.pop(model[st.i])
            if (got is None) != (want is None):
                fail(idx, "pop-emptiness", want, got)
                d, m = pool[st.i], model[st.i]
            elif got is None:
                d, m = pool[st.i], model[st.i]
            else:
                (x, d), (xo, m) = got, want
                if x != xo:
                    fail(idx, "pop-value", xo, x)
        else:
            got = ad.eject(pool[st.i])
            want = oracle.eject(model[st.i])
            if (got is None) != (want is None):
                fail(idx, "eject-emptiness", want, got)
                d, m = pool[st.i], model[st.i]
            elif got is None:
                d, m = pool[st.i], model[st.i]
            else:
                (d, x), (m, xo) = got, want
                if x != xo:
                    fail(idx, "eject-value", xo, x)
        delta = work.now() - before
        if delta > max_work.get(op, 0):
            max_work[op] = delta
        bound = ad.work_bounds.get(op)
        if bound is not None and delta > bound:
            report.validator_failures.append(
                {"step": idx, "violations": ["%s work %d exceeds bound %d" % (op, delta, bound)]}
            )

        got_seq = ad.seq(d)
        if len(m) <= cfg.full_compare_cap:
            if got_seq != list(m):
                fail(idx, "sequence", digest(m), digest(got_seq))
        else:
            if _spot(got_seq, cfg.sample_k) != _spot(list(m), cfg.sample_k) or digest(
                got_seq
            ) != digest(m):
                fail(idx, "sequence-digest", digest(m), digest(got_seq))
        if ad.length(d) != len(m):
            fail(idx, "length", len(m), ad.length(d))
        if cfg.validate_every and idx % cfg.validate_every == 0:
            errs = ad.validate(d)
            if errs:
                report.validator_failures.append({"step": idx, "violations": errs})
        if check_persistence:
            # the step's operands must be untouched
            for v in {st.i, st.j} if op == "concat" else {st.i}:
                if digest(ad.seq(pool[v])) != digests[v]:
                    fail(idx, "persistence", digests[v], digest(ad.seq(pool[v])))
        pool.append(d)
        model.append(m)
        digests.append(digest(m))
        if len(m) > max_len:
            max_len = len(m)

    if check_persistence:
        # final sweep: every version still denotes what it did at birth
        for v, d in enumerate(pool):
            if digest(ad.seq(d)) != digests[v]:
                fail(len(scenario.steps), "persistence-final", digests[v], digest(ad.seq(d)))

    report.steps_run = len(scenario.steps)
    report.max_work_counters = max_work
    report.max_len = max_len
    return report


def run_batch(seeds, config, adapter=None):
    """Run many seeds; returns (reports, combined_ok)."""
    reports = []
    ok = True
    for seed in seeds:
        rep = run_differential(gen_scenario(seed, config), adapter=adapter)
        reports.append(rep)
        ok = ok and rep.ok
    return reports, ok


def batch_summary(reports):
    total_steps = sum(r.steps_run for r in reports)
    disc = sum(len(r.discrepancies) for r in reports)
    vfail = sum(len(r.validator_failures) for r in reports)
    maxw = {}
    for r in reports:
        for k, v in r.max_work_counters.items():
            if v > maxw.get(k, 0):
                maxw[k] = v
    return {
        "rng": RNG_ID,
        "scenarios": len(reports),
        "steps_run": total_steps,
        "discrepancies": disc,
        "validator_failures": vfail,
        "max_work_counters": maxw,
        "max_len": max((r.max_len for r in reports), default=0),
        "ok": disc == 0 and vfail == 0,
    }


def write_report(path, reports):
    summary = batch_summary(reports)
    payload = {"summary": summary, "scenarios": [r.to_dict() for r in reports]}
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
    return summary
