import random

import pytest
from hypothesis import given, settings, strategies as st

from cadeque.backend import cadeques as cq, colors as C, sbuffer as sb, work


def from_list(xs):
    d = cq.empty()
    for x in xs:
        d = cq.inject(d, x)
    return d


def test_empty():
    d = cq.empty()
    assert cq.seq(d) == []
    assert cq.pop(d) is None
    assert cq.eject(d) is None
    assert cq.seq(cq.concat(d, d)) == []
    assert cq.validate(d) == []


def test_push_pop_singleton():
    d = cq.push('x', cq.empty())
    assert cq.seq(d) == ['x']
    x, rest = cq.pop(d)
    assert x == 'x' and cq.seq(rest) == [] and rest.length == 0


def test_mixed_push_inject_against_model():
    d = cq.empty()
    model = []
    rng = random.Random(9)
    for i in range(50):
        if rng.randrange(2):
            d = cq.push(i, d)
            model.insert(0, i)
        else:
            d = cq.inject(d, i)
            model.append(i)
        assert cq.seq(d) == model
        assert cq.validate(d) == []


def test_concat_identities_and_example():
    d = from_list([4, 5, 6])
    e = cq.empty()
    assert cq.seq(cq.concat(e, d)) == [4, 5, 6]
    assert cq.seq(cq.concat(d, e)) == [4, 5, 6]
    assert cq.seq(cq.concat(from_list([1, 2]), from_list([3]))) == [1, 2, 3]


def test_concat_of_fuzzed_operands():
    rng = random.Random(31)
    for _ in range(60):
        a = [rng.randrange(100) for _ in range(rng.randrange(0, 200))]
        b = [rng.randrange(100) for _ in range(rng.randrange(0, 200))]
        d = cq.concat(from_list(a), from_list(b))
        assert cq.seq(d) == a + b
        assert cq.validate(d) == []


def test_concat_work_independent_of_length():
    # identical reshaping cost for 63-element and 65551-element operands
    # (lengths pinned mod 16 so the operands' buffer fill phases match;
    # unpinned lengths differ by a few constructions but stay bounded)
    def cost(n):
        a, b = from_list(list(range(n))), from_list(list(range(n)))
        before = work.now()
        cq.concat(a, b)
        return work.now() - before

    assert cost(63) == cost(4111) == cost(65551)
    assert cost(1 << 6) <= cq.WORK_BOUNDS["concat"]
    assert cost(1 << 14) <= cq.WORK_BOUNDS["concat"]


def test_drain_ten_thousand_alternating():
    base = list(range(40))
    d = from_list(base)
    model = list(base)
    for _ in range(8):
        d = cq.concat(d, d)
        model = model + model
    assert d.length == 10240
    front, back = [], []
    i = 0
    while d.length:
        if i % 2:
            x, d = cq.pop(d)
            front.append(x)
        else:
            d, x = cq.eject(d)
            back.append(x)
        i += 1
    assert front == model[: len(front)]
    assert back == list(reversed(model[len(front):]))


def test_persistence():
    d = from_list(list(range(100)))
    snap = cq.seq(d)
    cq.push(-1, d)
    cq.inject(d, -1)
    cq.pop(d)
    cq.eject(d)
    cq.concat(d, d)
    assert cq.seq(d) == snap


def test_ground_stored_triple_seq():
    d = cq.push('a', cq.empty())
    st0 = d.chain.packet.tail.buffer
    items = sb.seq(st0)
    assert len(items) == 1 and isinstance(items[0], cq.Ground)
    out = []
    cq._emit_stored(items[0], out)
    assert out == ['a']


def test_validator_flags_red_over_red():
    # a red packet whose child packets are not green breaks the chain rule
    g = [cq.Ground(i) for i in range(20)]
    five = lambda k: sb.of_list(g[k : k + 5])
    red = cq.OnlyNode(cq.W_RN, five(5), five(10), 1, 0)
    # force a red child coloring on the inner chain to violate the witness
    inner_red = cq.SingleChain(
        C.REG4_G,
        cq.Packet(
            cq.BHOLE,
            cq.OnlyNode(cq.W_RN, sb.of_list([cq.Small(five(0), 1)] * 5),
                        sb.of_list([cq.Small(five(0), 1)] * 5), 1, 1),
        ),
        cq.SingleChain(
            C.REG4_G,
            cq.Packet(cq.BHOLE, cq.OnlyEndNode(sb.of_list([cq.Small(five(0), 2)]), 2)),
            cq.CEMPTY,
        ),
    )
    top = cq.SingleChain(C.REG4_R, cq.Packet(cq.BHOLE, red), inner_red)
    bad = cq.Cadeque(top, 99)
    errs = cq.validate(bad)
    assert any("witness" in e for e in errs)


def test_validator_flags_red_top():
    g = [cq.Ground(i) for i in range(10)]
    five = lambda k: sb.of_list(g[k : k + 5])
    inner = cq.SingleChain(
        C.REG4_G,
        cq.Packet(cq.BHOLE, cq.OnlyEndNode(sb.of_list([cq.Small(sb.of_list(g[0:3]), 1)]), 1)),
        cq.CEMPTY,
    )
    red = cq.OnlyNode(cq.W_RN, five(0), five(5), 1, 0)
    bad = cq.Cadeque(cq.SingleChain(C.REG4_R, cq.Packet(cq.BHOLE, red), inner), 13)
    assert any("top packet" in e for e in cq.validate(bad))


def test_validator_flags_small_stored_triple():
    g = [cq.Ground(i) for i in range(20)]
    tiny = cq.Small(sb.of_list(g[:2]), 1)  # needs >= 3
    child = cq.SingleChain(
        C.REG4_G, cq.Packet(cq.BHOLE, cq.OnlyEndNode(sb.of_list([tiny]), 1)), cq.CEMPTY
    )
    top = cq.OnlyNode(cq.W_GN, sb.of_list(g[:8]), sb.of_list(g[8:16]), 1, 0)
    d = cq.Cadeque(cq.SingleChain(C.REG4_G, cq.Packet(cq.BHOLE, top), child), 18)
    errs = cq.validate(d)
    assert errs == ["small stored triple of size 2"]


def test_work_bounds_hold_across_random_walk():
    rng = random.Random(1)
    pool = [cq.empty()]
    for _ in range(6000):
        op = rng.choice(("push", "inject", "pop", "eject", "concat"))
        before = work.now()
        if op == "concat":
            a, b = pool[rng.randrange(len(pool))], pool[rng.randrange(len(pool))]
            if a.length + b.length > 1 << 13:
                continue
            d = cq.concat(a, b)
        else:
            d = pool[rng.randrange(len(pool))]
            if op == "push":
                d = cq.push(0, d)
            elif op == "inject":
                d = cq.inject(d, 0)
            elif op == "pop":
                got = cq.pop(d)
                if got is None:
                    continue
                d = got[1]
            else:
                got = cq.eject(d)
                if got is None:
                    continue
                d = got[0]
        assert work.now() - before <= cq.WORK_BOUNDS[op]
        pool.append(d)
        if len(pool) > 250:
            pool = pool[-200:]


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(st.sampled_from(["push", "inject", "pop", "eject", "concat"]), st.integers(0, 7)),
        max_size=60,
    )
)
def test_random_pooled_programs_match_model(prog):
    pool = [(cq.empty(), ())]
    v = 0
    for op, pick in prog:
        d, m = pool[pick % len(pool)]
        if op == "concat":
            d2, m2 = pool[(pick * 7 + 3) % len(pool)]
            d, m = cq.concat(d, d2), m + m2
        elif op == "push":
            v += 1
            d, m = cq.push(v, d), (v,) + m
        elif op == "inject":
            v += 1
            d, m = cq.inject(d, v), m + (v,)
        elif op == "pop":
            got = cq.pop(d)
            if m:
                x, d = got
                assert x == m[0]
                m = m[1:]
            else:
                assert got is None
                continue
        else:
            got = cq.eject(d)
            if m:
                d, x = got
                assert x == m[-1]
                m = m[:-1]
            else:
                assert got is None
                continue
        assert cq.seq(d) == list(m)
        assert cq.validate(d) == []
        assert d.length == len(m)
        pool.append((d, m))
