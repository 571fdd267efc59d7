import pytest

from cadeque.backend import sbuffer as sb


def test_empty():
    b = sb.empty()
    assert sb.size(b) == 0
    assert sb.seq(b) == []
    with pytest.raises(sb.BufferBoundError):
        sb.pop(b)
    with pytest.raises(sb.BufferBoundError):
        sb.eject(b)


def test_push_increments_bound():
    b = sb.push('x', sb.empty())
    assert b.bound == 1
    b3 = sb.of_list([1, 2, 3])
    assert sb.push(0, b3).bound == 4
    assert sb.inject(b3, 9).bound == 4


def test_pop_and_eject():
    b = sb.of_list([1, 2, 3, 4, 5])
    x, rest = sb.pop(b)
    assert x == 1 and rest.bound == 4 and sb.seq(rest) == [2, 3, 4, 5]
    rest, x = sb.eject(b)
    assert x == 5 and rest.bound == 4 and sb.seq(rest) == [1, 2, 3, 4]


def test_singleton_pop():
    b = sb.push('v', sb.empty())
    x, rest = sb.pop(b)
    assert x == 'v' and rest.bound == 0


def test_inject_then_eject_roundtrip():
    b = sb.of_list([1, 2])
    b2, x = sb.eject(sb.inject(b, 9))
    assert x == 9 and sb.seq(b2) == [1, 2] and b2.bound == b.bound


def test_push_several_order():
    # pushes run left to right, so the last element ends up at the front
    b = sb.push_several(['a', 'b'], sb.empty())
    assert sb.seq(b) == ['b', 'a']
    assert b.bound == 2
    assert sb.push_several([], b) is b or sb.seq(sb.push_several([], b)) == ['b', 'a']


def test_bound_tracks_length_exactly():
    b = sb.empty()
    for i in range(100):
        b = sb.inject(b, i)
        assert b.bound == b.inner.length
        assert sb.validate(b) == []
    for _ in range(50):
        _, b = sb.pop(b)
    assert b.bound == 50 == b.inner.length


def test_validator_flags_overclaimed_bound():
    b = sb.of_list([1, 2])
    bad = sb.SBuffer(b.inner, 5)
    assert any("bound" in v for v in sb.validate(bad))


def test_pop_k_eject_k():
    b = sb.of_list(list(range(10)))
    got, rest = sb.pop_k(b, 3)
    assert got == [0, 1, 2] and sb.seq(rest) == list(range(3, 10))
    rest, got = sb.eject_k(b, 3)
    assert got == [7, 8, 9] and sb.seq(rest) == list(range(7))
