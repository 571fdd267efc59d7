"""Redundant binary counter with worst-case O(1) successor.

A natural number is stored in base 2 with digits 0, 1, 2 (least
significant first).  Digits are colored 0=green, 1=yellow, 2=red.  A
maximal run "head digit + following 1-digits" is a *packet*; a number is
a *chain* of packets.  Regularity (every 2 is preceded, toward the head,
by a 0 with only 1s in between) guarantees the first digit is never 2,
so the successor only rewrites a bounded prefix of the chain.

A packet is stored as its head digit plus the length of its run of
yellow digits, which makes every rewrite O(1).
"""

from .colors import (
    GREEN3,
    RED3,
    YELLOW3,
    REG3_G,
    REG3_R,
    REG3_Y,
    ColorError,
    regularity3_for,
)
from .work import tick

_DIGIT_COLOR = {0: GREEN3, 1: YELLOW3, 2: RED3}

# Frozen ceiling on structural constructions per successor call.
WORK_BOUND = 16


class RPacket:
    """A head digit (0, 1, or 2) followed by ``yellows`` 1-digits."""

    __slots__ = ("head", "yellows")

    def __init__(self, head, yellows):
        tick()
        self.head = head
        self.yellows = yellows

    @property
    def color(self):
        return _DIGIT_COLOR[self.head]

    def digits(self):
        return (self.head,) + (1,) * self.yellows

    def __repr__(self):
        return "".join(str(d) for d in self.digits())


class RChain:
    """A packet plus the chain of more significant packets (or EMPTY_CHAIN)."""

    __slots__ = ("reg", "packet", "rest")

    def __init__(self, reg, packet, rest):
        tick()
        self.reg = reg
        self.packet = packet
        self.rest = rest

    @property
    def color(self):
        return self.packet.color


EMPTY_CHAIN = None


def chain_color(chain):
    return GREEN3 if chain is EMPTY_CHAIN else chain.color


class RNumber:
    """A chain that is green or yellow (never red)."""

    __slots__ = ("chain",)

    def __init__(self, chain):
        tick()
        if chain_color(chain) is RED3:
            raise ColorError("a number must be a green or yellow chain")
        self.chain = chain


def zero():
    return RNumber(EMPTY_CHAIN)


def green_of_red(chain):
    """Turn a red chain into a green chain denoting the same number.

    The head 2 becomes 0 and a carry increments the next digit, which is
    absent, green, or yellow; no case propagates further.
    """
    if chain_color(chain) is not RED3:
        raise ColorError("green_of_red expects a red chain")
    pkt = chain.packet
    if pkt.yellows == 0:
        rest = chain.rest
        if rest is EMPTY_CHAIN:
            # lone 2 -> 01
            return RChain(REG3_G, RPacket(0, 1), EMPTY_CHAIN)
        # 2 followed by a green packet: merge into one green packet
        nxt = rest.packet
        return RChain(REG3_G, RPacket(0, 1 + nxt.yellows), rest.rest)
    # 2 followed by a 1: split, the 1 becomes a 2 heading its own packet
    return RChain(
        REG3_G,
        RPacket(0, 0),
        RChain(REG3_R, RPacket(2, pkt.yellows - 1), chain.rest),
    )


def ensure_green(chain):
    """Turn a green or red chain into a green chain (identity on green)."""
    color = chain_color(chain)
    if color is GREEN3:
        return chain
    if color is RED3:
        return green_of_red(chain)
    raise ColorError("ensure_green expects a green or red chain")


def succ(n):
    """Increment, then regularize.  Worst-case O(1): no loop, no recursion."""
    chain = n.chain
    if chain is EMPTY_CHAIN:
        return RNumber(RChain(REG3_Y, RPacket(1, 0), EMPTY_CHAIN))
    pkt = chain.packet
    if pkt.head == 0:
        return RNumber(RChain(REG3_Y, RPacket(1, pkt.yellows), ensure_green(chain.rest)))
    # head is 1 (a regular number never starts with 2)
    return RNumber(green_of_red(RChain(REG3_R, RPacket(2, pkt.yellows), chain.rest)))


def chain_value(chain):
    """Positional value: sum of digit * 2^position, least significant first."""
    total = 0
    pos = 0
    while chain is not EMPTY_CHAIN:
        pkt = chain.packet
        head = pkt.head
        ys = pkt.yellows
        if head:
            total += head << pos
        pos += 1
        if ys:
            # the run of 1s at weights w, 2w, ... contributes w * (2^k - 1)
            total += ((1 << ys) - 1) << pos
            pos += ys
        chain = chain.rest
    return total


def value(n):
    return chain_value(n.chain)


def digits(n):
    """Digit string, least significant digit leftmost, no separators."""
    return "".join(repr(c.packet) for c in _links(n.chain))


def render(n):
    """Digit string with packets separated by a space (debug view)."""
    return " ".join(repr(c.packet) for c in _links(n.chain))


def _links(chain):
    out = []
    while chain is not EMPTY_CHAIN:
        out.append(chain)
        chain = chain.rest
    return out


def chain_from_digits(text):
    """Parse a digit string (LSD first) into a chain of packets."""
    ds = [int(ch) for ch in text if not ch.isspace()]
    packets = []
    i = 0
    while i < len(ds):
        head = ds[i]
        j = i + 1
        if head == 1 and i > 0:
            raise ColorError("yellow head inside a chain: %r is not packetizable" % text)
        while j < len(ds) and ds[j] == 1:
            j += 1
        packets.append(RPacket(head, j - i - 1))
        i = j
    chain = EMPTY_CHAIN
    for pkt in reversed(packets):
        chain = RChain(regularity3_for(pkt.color), pkt, chain)
    return chain


def from_digits(text):
    """Parse a digit string (LSD first) into a number (must not be red)."""
    return RNumber(chain_from_digits(text))


def chain_digits(chain):
    return "".join(repr(c.packet) for c in _links(chain))


def validate(n):
    """Check regularity and stored witnesses; return a list of violations."""
    out = []
    chain = n.chain
    if chain_color(chain) is RED3:
        out.append("top chain is red")
    first = True
    while chain is not EMPTY_CHAIN:
        pkt = chain.packet
        head = pkt.head
        if head not in (0, 1, 2):
            out.append("digit out of range: %r" % (head,))
        if pkt.yellows < 0:
            out.append("negative yellow run")
        color = _DIGIT_COLOR[head]
        if color is YELLOW3 and not first:
            out.append("yellow packet not at the head of the chain")
        reg = chain.reg
        if reg.packet_color is not color:
            out.append("witness %r stored on a %r packet" % (reg, color))
        rest = chain.rest
        rest_color = GREEN3 if rest is EMPTY_CHAIN else _DIGIT_COLOR[rest.packet.head]
        if not reg.allows_chain(rest_color):
            out.append(
                "witness %r violated: %r packet followed by %r chain"
                % (reg, color, rest_color)
            )
        first = False
        chain = rest
    return out
