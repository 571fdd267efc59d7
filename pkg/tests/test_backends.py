import random

import pytest

from cadeque import backend


requires_compiled = pytest.mark.skipif(
    "compiled" not in backend.available_backends(),
    reason="compiled kernel not built (run tools/build_kernel.py)",
)


def test_a_backend_is_selected():
    assert backend.backend_name in ("pure", "compiled")


@requires_compiled
def test_backends_agree_on_counter():
    pure, comp = backend.load("pure"), backend.load("compiled")
    a, b = pure.counter.zero(), comp.counter.zero()
    for _ in range(500):
        a, b = pure.counter.succ(a), comp.counter.succ(b)
        assert pure.counter.digits(a) == comp.counter.digits(b)


@requires_compiled
def test_backends_agree_on_cadeque_ops():
    pure, comp = backend.load("pure"), backend.load("compiled")
    rng = random.Random(17)
    pa, pb = [pure.cadeque.empty()], [comp.cadeque.empty()]
    for step in range(1500):
        op = rng.choice(("push", "inject", "pop", "eject", "concat"))
        i, j = rng.randrange(len(pa)), rng.randrange(len(pa))
        if op == "concat":
            if pa[i].length + pa[j].length > 1 << 12:
                continue
            na, nb = pure.cadeque.concat(pa[i], pa[j]), comp.cadeque.concat(pb[i], pb[j])
        elif op == "push":
            v = rng.randrange(1000)
            na, nb = pure.cadeque.push(v, pa[i]), comp.cadeque.push(v, pb[i])
        elif op == "inject":
            v = rng.randrange(1000)
            na, nb = pure.cadeque.inject(pa[i], v), comp.cadeque.inject(pb[i], v)
        elif op == "pop":
            ga, gb = pure.cadeque.pop(pa[i]), comp.cadeque.pop(pb[i])
            assert (ga is None) == (gb is None)
            if ga is None:
                continue
            assert ga[0] == gb[0]
            na, nb = ga[1], gb[1]
        else:
            ga, gb = pure.cadeque.eject(pa[i]), comp.cadeque.eject(pb[i])
            assert (ga is None) == (gb is None)
            if ga is None:
                continue
            assert ga[1] == gb[1]
            na, nb = ga[0], gb[0]
        if step % 10 == 0:
            assert pure.cadeque.seq(na) == comp.cadeque.seq(nb)
        pa.append(na)
        pb.append(nb)


@requires_compiled
def test_backends_agree_on_work_counters():
    # identical structural work: the compiled twin runs the same algorithm
    pure, comp = backend.load("pure"), backend.load("compiled")

    def trace(ns):
        d = ns.cadeque.empty()
        out = []
        for i in range(200):
            before = ns.work.now()
            d = ns.cadeque.push(i, d)
            out.append(ns.work.now() - before)
        before = ns.work.now()
        d = ns.cadeque.concat(d, d)
        out.append(ns.work.now() - before)
        while d.length:
            before = ns.work.now()
            _, d = ns.cadeque.pop(d)
            out.append(ns.work.now() - before)
        return out

    assert trace(pure) == trace(comp)
