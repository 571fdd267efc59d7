import pytest

from cadeque.backend import counter as ctr, colors as C, work


def positional_value(text):
    # independent oracle: plain positional sum, least significant first
    return sum(int(d) * (1 << i) for i, d in enumerate(text))


def test_zero():
    n = ctr.zero()
    assert ctr.value(n) == 0
    assert ctr.digits(n) == ""
    assert ctr.validate(n) == []


def test_succ_of_zero_is_one_digit_one():
    assert ctr.digits(ctr.succ(ctr.zero())) == "1"


def test_displayed_chain_of_successors():
    n = ctr.from_digits("011112")
    assert ctr.value(n) == positional_value("011112") == 94
    n = ctr.succ(n)
    assert ctr.digits(n) == "1111101"
    n = ctr.succ(n)
    assert ctr.digits(n) == "0211101"
    assert ctr.value(n) == 96


def test_succ_counts_and_stays_regular():
    n = ctr.zero()
    for k in range(3000):
        assert ctr.value(n) == k
        assert ctr.validate(n) == []
        n = ctr.succ(n)


def test_succ_work_is_bounded():
    n = ctr.zero()
    worst = 0
    for _ in range(4096):
        before = work.now()
        n = ctr.succ(n)
        worst = max(worst, work.now() - before)
    assert worst <= ctr.WORK_BOUND


def test_green_of_red_examples():
    for red, green in (("2", "01"), ("20", "01"), ("21", "02")):
        chain = ctr.chain_from_digits(red)
        out = ctr.green_of_red(chain)
        assert ctr.chain_digits(out) == green
        assert positional_value(red) == positional_value(green)
        assert ctr.chain_color(out) is C.GREEN3


def test_green_of_red_rejects_non_red():
    with pytest.raises(C.ColorError):
        ctr.green_of_red(ctr.chain_from_digits("01"))


def test_ensure_green():
    assert ctr.ensure_green(ctr.EMPTY_CHAIN) is ctr.EMPTY_CHAIN
    green = ctr.chain_from_digits("01")
    assert ctr.ensure_green(green) is green
    assert ctr.chain_digits(ctr.ensure_green(ctr.chain_from_digits("2"))) == "01"
    with pytest.raises(C.ColorError):
        ctr.ensure_green(ctr.chain_from_digits("1"))


def test_chain_value_examples():
    assert ctr.chain_value(ctr.chain_from_digits("021")) == 8
    assert ctr.chain_value(ctr.EMPTY_CHAIN) == 0
    assert ctr.chain_value(ctr.chain_from_digits("1111101")) == 95


def test_first_digit_never_two():
    n = ctr.zero()
    for _ in range(2048):
        n = ctr.succ(n)
        assert not ctr.digits(n).startswith("2")


def test_render_separates_packets():
    n = ctr.from_digits("011112")
    assert ctr.render(n) == "01111 2"


def test_constructor_rejects_red_chain():
    with pytest.raises(C.ColorError):
        ctr.RNumber(ctr.chain_from_digits("2"))


def test_validator_flags_red_top():
    bad = ctr.zero()
    bad.chain = ctr.chain_from_digits("2")  # bypass the constructor check
    assert any("red" in v for v in ctr.validate(bad))
