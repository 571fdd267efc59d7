"""Purely functional non-catenable deques with worst-case O(1) operations.

Structure
---------
A deque is a chain of levels.  Each level holds a prefix buffer and a
suffix buffer of 0..5 *elements*; an element at level l is a perfectly
balanced pair tree over 2^l base values (recursive slowdown).  The last
level holds a single buffer.  Reading order: prefix buffers top-down,
then suffix buffers bottom-up.

Buffer sizes map to colors: 2-3 green, 1/4 yellow, 0/5 red; a buffer may
be *assigned* any color its size allows (it may be viewed as worse than
it is), and the two buffers of a level share one assigned color, which
is the level's color.  Consecutive levels of the same packet are one
head level plus yellow levels; chains of packets obey: green may be
followed by green or red, yellow and red must be followed by green, and
the top is never red.  Under these rules an insertion or extraction
touches a bounded number of levels: one naive buffer edit, then one
bounded repair of the topmost red level.

All values are immutable; every operation returns a new deque sharing
structure with its input.
"""

from .colors import (
    GREEN3,
    RED3,
    UNCOLORED3,
    YELLOW3,
    REG3_G,
    REG3_Y,
    ColorError,
    regularity3_for,
)
from .work import tick


class DequeError(ValueError):
    """Misuse of the deque API (bad chain color, wrong regularization input)."""


# Frozen ceilings on structural constructions per operation.
WORK_BOUNDS = {"push": 48, "inject": 48, "pop": 48, "eject": 48}


# ---------------------------------------------------------------------------
# Elements: balanced pair trees tagged with their level.


class Leaf:
    __slots__ = ("value",)
    level = 0

    def __init__(self, value):
        tick()
        self.value = value


class PairElem:
    __slots__ = ("left", "right", "level")

    def __init__(self, left, right):
        tick()
        self.left = left
        self.right = right
        self.level = left.level + 1


def flatten_into(elem, out):
    if elem.level == 0:
        out.append(elem.value)
        return
    stack = [elem]
    while stack:
        e = stack.pop()
        if e.level == 0:
            out.append(e.value)
        else:
            stack.append(e.right)
            stack.append(e.left)


# ---------------------------------------------------------------------------
# Buffers: 0..5 elements plus an assigned color.

_BEST_COLOR = (RED3, YELLOW3, GREEN3, GREEN3, YELLOW3, RED3)


def best_color(size):
    return _BEST_COLOR[size]


def color_allowed(size, color):
    if size in (0, 5):
        return color is RED3
    if size in (1, 4):
        return color is YELLOW3 or color is RED3
    return color is not UNCOLORED3


def pair_color(np, ns):
    """Best color a level with buffer sizes (np, ns) can be assigned."""
    if 2 <= np <= 3 and 2 <= ns <= 3:
        return GREEN3
    if 1 <= np <= 4 and 1 <= ns <= 4:
        return YELLOW3
    return RED3


class Buffer:
    __slots__ = ("items", "color")

    def __init__(self, items, color):
        tick()
        self.items = items
        self.color = color

    def __len__(self):
        return len(self.items)


def buf(items, color=None):
    items = tuple(items)
    return Buffer(items, best_color(len(items)) if color is None else color)


# ---------------------------------------------------------------------------
# Packets and chains.


class Packet:
    """A level (two same-colored buffers) over a yellow child packet or hole."""

    __slots__ = ("prefix", "child", "suffix", "color")

    def __init__(self, prefix, child, suffix):
        tick()
        self.prefix = prefix
        self.child = child
        self.suffix = suffix
        self.color = prefix.color


HOLE = None


class Ending:
    """Last level: a single buffer of any size; always a green chain."""

    __slots__ = ("buffer",)
    color = GREEN3

    def __init__(self, buffer):
        tick()
        self.buffer = buffer


class Chain:
    __slots__ = ("reg", "packet", "rest", "color")

    def __init__(self, reg, packet, rest):
        tick()
        self.reg = reg
        self.packet = packet
        self.rest = rest
        self.color = packet.color


class Deque:
    """Green or yellow chain plus a maintained base-value count."""

    __slots__ = ("chain", "length")

    def __init__(self, chain, length):
        tick()
        if chain.color is RED3:
            raise DequeError("a deque's chain must not be red")
        self.chain = chain
        self.length = length


_EMPTY_ENDING = None


def empty():
    global _EMPTY_ENDING
    if _EMPTY_ENDING is None:
        _EMPTY_ENDING = Deque(Ending(buf(())), 0)
    return _EMPTY_ENDING


def length(d):
    return d.length


def is_empty(d):
    return d.length == 0


# ---------------------------------------------------------------------------
# Regularization.


def _rebuild_green(elems):
    """Build a green chain from at most ~24 level-l elements (bounded work).

    Takes 2-3 elements for a prefix and 2-3 for a suffix per level,
    pairing the remainder for the level below, until at most 5 remain
    for the final single-buffer level.
    """
    frames = []
    while len(elems) > 5:
        s = 3 if (len(elems) - 6) % 2 == 0 else 2
        frames.append((buf(elems[:3], GREEN3), buf(elems[-s:], GREEN3)))
        mid = elems[3 : len(elems) - s]
        elems = [PairElem(mid[i], mid[i + 1]) for i in range(0, len(mid), 2)]
    chain = Ending(buf(elems))
    for pfx, sfx in reversed(frames):
        chain = Chain(REG3_G, Packet(pfx, HOLE, sfx), chain)
    return chain


def _fix_front(p_items, q_items):
    """Make the upper prefix 2-3 long by moving one pair to/from the lower prefix."""
    n = len(p_items)
    if n >= 4:
        moved = PairElem(p_items[-2], p_items[-1])
        return p_items[:-2], (moved,) + q_items
    if n <= 1:
        first = q_items[0]
        return p_items + (first.left, first.right), q_items[1:]
    return p_items, q_items


def _fix_rear(s_items, t_items):
    """Mirror of _fix_front for suffixes (lower suffix precedes upper suffix)."""
    n = len(s_items)
    if n >= 4:
        moved = PairElem(s_items[0], s_items[1])
        return s_items[2:], t_items + (moved,)
    if n <= 1:
        last = t_items[-1]
        return (last.left, last.right) + s_items, t_items[:-1]
    return s_items, t_items


def green_of_red(chain):
    """Turn a red chain into a green chain denoting the same sequence.

    Fixed-depth case analysis on the level below the red one; at most one
    new red level may be created, and it is legally placed (followed by
    the green chain that followed the original red packet).
    """
    if chain.color is not RED3:
        raise DequeError("green_of_red expects a red chain")
    pkt = chain.packet
    p, child, s = pkt.prefix, pkt.child, pkt.suffix

    if child is HOLE and isinstance(chain.rest, Ending):
        # everything below is one bounded buffer: flatten one level and rebuild
        elems = list(p.items)
        for e in chain.rest.buffer.items:
            elems.append(e.left)
            elems.append(e.right)
        elems.extend(s.items)
        return _rebuild_green(elems)

    if child is HOLE:
        nxt = chain.rest  # green head packet, by regularity
        npkt = nxt.packet
        below_child, below_rest = npkt.child, nxt.rest
    else:
        npkt = child
        below_child, below_rest = child.child, chain.rest

    p1, p2 = _fix_front(p.items, npkt.prefix.items)
    s1, s2 = _fix_rear(s.items, npkt.suffix.items)
    top_p, top_s = buf(p1, GREEN3), buf(s1, GREEN3)
    below_color = pair_color(len(p2), len(s2))
    if below_color is YELLOW3:
        inner = Packet(buf(p2, YELLOW3), below_child, buf(s2, YELLOW3))
        return Chain(REG3_G, Packet(top_p, inner, top_s), below_rest)
    below = Packet(buf(p2, below_color), below_child, buf(s2, below_color))
    return Chain(
        REG3_G,
        Packet(top_p, HOLE, top_s),
        Chain(regularity3_for(below_color), below, below_rest),
    )


def ensure_green(chain):
    if chain.color is GREEN3:
        return chain
    if chain.color is RED3:
        return green_of_red(chain)
    raise DequeError("ensure_green expects a green or red chain")


def _reassemble(new_p_items, child, s, rest):
    """Rebuild the top level after a front edit, restoring regularity."""
    color = pair_color(len(new_p_items), len(s))
    if color is GREEN3:
        return Chain(REG3_G, Packet(buf(new_p_items, GREEN3), child, buf(s.items, GREEN3)), rest)
    if color is YELLOW3:
        sfx = s if s.color is YELLOW3 else buf(s.items, YELLOW3)
        return Chain(
            REG3_Y, Packet(buf(new_p_items, YELLOW3), child, sfx), ensure_green(rest)
        )
    sfx = s if s.color is RED3 else buf(s.items, RED3)
    red = Chain(
        regularity3_for(RED3), Packet(buf(new_p_items, RED3), child, sfx), rest
    )
    return green_of_red(red)


def _reassemble_rear(p, child, new_s_items, rest):
    color = pair_color(len(p), len(new_s_items))
    if color is GREEN3:
        return Chain(REG3_G, Packet(buf(p.items, GREEN3), child, buf(new_s_items, GREEN3)), rest)
    if color is YELLOW3:
        pfx = p if p.color is YELLOW3 else buf(p.items, YELLOW3)
        return Chain(
            REG3_Y, Packet(pfx, child, buf(new_s_items, YELLOW3)), ensure_green(rest)
        )
    pfx = p if p.color is RED3 else buf(p.items, RED3)
    red = Chain(
        regularity3_for(RED3), Packet(pfx, child, buf(new_s_items, RED3)), rest
    )
    return green_of_red(red)


# ---------------------------------------------------------------------------
# The four operations.


def _push_elem(x, d):
    chain = d.chain
    if isinstance(chain, Ending):
        b = chain.buffer
        if len(b) < 5:
            new = Ending(buf((x,) + b.items))
        else:
            new = _rebuild_green([x] + list(b.items))
    else:
        pkt = chain.packet
        new = _reassemble((x,) + pkt.prefix.items, pkt.child, pkt.suffix, chain.rest)
    return Deque(new, d.length + (1 << x.level))


def _inject_elem(d, x):
    chain = d.chain
    if isinstance(chain, Ending):
        b = chain.buffer
        if len(b) < 5:
            new = Ending(buf(b.items + (x,)))
        else:
            new = _rebuild_green(list(b.items) + [x])
    else:
        pkt = chain.packet
        new = _reassemble_rear(pkt.prefix, pkt.child, pkt.suffix.items + (x,), chain.rest)
    return Deque(new, d.length + (1 << x.level))


def push(x, d):
    """Insert x at the front: seq(result) = [x] + seq(d)."""
    return _push_elem(Leaf(x), d)


def inject(d, x):
    """Insert x at the rear: seq(result) = seq(d) + [x]."""
    return _inject_elem(d, Leaf(x))


def pop(d):
    """Extract the front value, or None if empty."""
    chain = d.chain
    if isinstance(chain, Ending):
        b = chain.buffer
        if not b.items:
            return None
        x = b.items[0]
        new = Ending(buf(b.items[1:]))
    else:
        pkt = chain.packet
        x = pkt.prefix.items[0]
        new = _reassemble(pkt.prefix.items[1:], pkt.child, pkt.suffix, chain.rest)
    return _unleaf(x), Deque(new, d.length - (1 << x.level))


def eject(d):
    """Extract the rear value, or None if empty."""
    chain = d.chain
    if isinstance(chain, Ending):
        b = chain.buffer
        if not b.items:
            return None
        x = b.items[-1]
        new = Ending(buf(b.items[:-1]))
    else:
        pkt = chain.packet
        x = pkt.suffix.items[-1]
        new = _reassemble_rear(pkt.prefix, pkt.child, pkt.suffix.items[:-1], chain.rest)
    return Deque(new, d.length - (1 << x.level)), _unleaf(x)


def _unleaf(elem):
    if elem.level != 0:
        raise DequeError("top-level element of nonzero level")
    return elem.value


# ---------------------------------------------------------------------------
# Model function and validator.


def seq(d):
    """The represented sequence of base values."""
    out = []
    suffixes = []
    node = d.chain
    while True:
        if isinstance(node, Ending):
            for e in node.buffer.items:
                flatten_into(e, out)
            break
        pkt = node.packet
        rest = node.rest
        while pkt is not HOLE:
            for e in pkt.prefix.items:
                flatten_into(e, out)
            suffixes.append(pkt.suffix)
            pkt = pkt.child
        node = rest
    for sfx in reversed(suffixes):
        for e in sfx.items:
            flatten_into(e, out)
    return out


def _check_elem(e, lvl, out):
    if e.level != lvl:
        out.append("element of level %d where level %d expected" % (e.level, lvl))
        return 0
    stack = [(e, lvl)]
    count = 0
    while stack:
        node, l = stack.pop()
        if l == 0:
            if node.level != 0:
                out.append("leaf expected at level 0")
            count += 1
        else:
            if node.level != l:
                out.append("pair level mismatch")
                return count
            stack.append((node.left, l - 1))
            stack.append((node.right, l - 1))
    if count != (1 << lvl):
        out.append("level-%d element flattens to %d values" % (lvl, count))
    return count


def _check_buffer(b, lvl, out):
    if not (0 <= len(b.items) <= 5):
        out.append("buffer of size %d" % len(b.items))
    if not color_allowed(len(b.items), b.color):
        out.append("size-%d buffer assigned %r" % (len(b.items), b.color))
    total = 0
    for e in b.items:
        total += _check_elem(e, lvl, out)
    return total


def validate(d):
    """Structural and coloring checks; returns a list of violations."""
    out = []
    if d.chain.color is RED3:
        out.append("top chain is red")
    total = 0
    lvl = 0
    node = d.chain
    while True:
        if isinstance(node, Ending):
            total += _check_buffer(node.buffer, lvl, out)
            break
        reg = node.reg
        if reg.packet_color is not node.packet.color:
            out.append("witness %r stored on a %r packet" % (reg, node.packet.color))
        pkt = node.packet
        first = True
        while pkt is not HOLE:
            if pkt.prefix.color is not pkt.suffix.color:
                out.append("level buffers with distinct assigned colors")
            if not first and pkt.color is not YELLOW3:
                out.append("non-yellow level inside a packet body")
            total += _check_buffer(pkt.prefix, lvl, out)
            total += _check_buffer(pkt.suffix, lvl, out)
            first = False
            lvl += 1
            pkt = pkt.child
        if not reg.allows_chain(node.rest.color):
            out.append(
                "witness %r violated: %r packet followed by %r chain"
                % (reg, node.packet.color, node.rest.color)
            )
        node = node.rest
    if total != d.length:
        out.append("cached length %d but %d values stored" % (d.length, total))
    return out


def green_push_buffer(x, b):
    """Push onto a green buffer, yielding a yellow buffer (sizes 2-3 -> 3-4)."""
    if b.color is not GREEN3 or not (2 <= len(b.items) <= 3):
        raise DequeError("green_push_buffer expects a green buffer")
    return buf((x,) + b.items, YELLOW3)
