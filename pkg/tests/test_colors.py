import itertools

import pytest

from cadeque.backend import colors as C


PROPER4 = (C.RED4, C.ORANGE4, C.YELLOW4, C.GREEN4)


def test_order_examples():
    assert C.color_order(C.RED4, C.GREEN4) is C.Ordering.LESS
    assert C.color_order(C.YELLOW4, C.YELLOW4) is C.Ordering.EQUAL
    assert C.color_order(C.ORANGE4, C.YELLOW4) is C.Ordering.LESS


def test_order_is_total():
    for a, b in itertools.product(PROPER4, repeat=2):
        o = C.color_order(a, b)
        rev = C.color_order(b, a)
        if o is C.Ordering.EQUAL:
            assert a is b and rev is C.Ordering.EQUAL
        else:
            assert rev is not o
    # transitivity, exhaustively
    for a, b, c in itertools.product(PROPER4, repeat=3):
        if (
            C.color_order(a, b) is not C.Ordering.GREATER
            and C.color_order(b, c) is not C.Ordering.GREATER
        ):
            assert C.color_order(a, c) is not C.Ordering.GREATER


def test_order_rejects_uncolored():
    with pytest.raises(C.ColorError):
        C.color_order(C.UNCOLORED4, C.GREEN4)
    with pytest.raises(C.ColorError):
        C.color_order(C.GREEN4, C.UNCOLORED4)


def test_size_to_color():
    assert C.size_to_color(5) is C.RED4
    assert C.size_to_color(6) is C.ORANGE4
    assert C.size_to_color(7) is C.YELLOW4
    assert C.size_to_color(12) is C.GREEN4
    for n in range(8, 40):
        assert C.size_to_color(n) is C.GREEN4
    with pytest.raises(C.ColorError):
        C.size_to_color(4)


def test_size_to_color_monotone():
    for m in range(5, 40):
        for n in range(m, 40):
            o = C.color_order(C.size_to_color(m), C.size_to_color(n))
            assert o in (C.Ordering.LESS, C.Ordering.EQUAL)


def test_at_most_one_hue_bit():
    with pytest.raises(C.ColorError):
        C.Hue3Color(1, 1, 0, "bad")
    with pytest.raises(C.ColorError):
        C.Hue4Color(1, 0, 0, 1, "bad", 9)
    assert not C.UNCOLORED3.is_proper
    assert C.GREEN3.is_proper


def test_regularity_witnesses():
    assert C.REG3_G.allows_chain(C.GREEN3)
    assert C.REG3_G.allows_chain(C.RED3)
    assert not C.REG3_G.allows_chain(C.YELLOW3)
    assert C.REG3_Y.allows_chain(C.GREEN3)
    assert not C.REG3_Y.allows_chain(C.RED3)
    assert C.REG3_R.allows_chain(C.GREEN3)
    assert not C.REG3_R.allows_chain(C.RED3)
    assert C.REG4_G.allows_child(C.RED4, C.YELLOW4)
    assert C.REG4_R.allows_child(C.GREEN4, C.GREEN4)
    assert not C.REG4_R.allows_child(C.GREEN4, C.RED4)
    with pytest.raises(C.ColorError):
        C.regularity4_for(C.YELLOW4)
