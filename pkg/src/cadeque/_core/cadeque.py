"""Purely functional catenable deques: O(1) push/pop/inject/eject/concat.

Shape of the structure
----------------------
A catenable deque is a *chain* representing a forest of zero, one or two
trees of *nodes*.  Every node carries element buffers (sized buffers over
the non-catenable deque):

* an ``only`` node has a prefix and a suffix, both of size >= 5,
* an ``only-end`` node (childless) has a single buffer of size >= 1,
* a ``left`` node has a prefix >= 5 and a rear pair of exactly 2,
* a ``right`` node has a front pair of exactly 2 and a suffix >= 5.

Buffer sizes color a node: 5 red, 6 orange, 7 yellow, >= 8 green (a node
may be assigned a worse color than its sizes allow; childless nodes are
green).  A maximal run of orange/yellow nodes, each continuing into its
*preferred* child (orange prefers right, yellow prefers left), followed
by one green or red node, is a *packet*; the run is its body and the
green-or-red node its tail.  Chains of packets obey: a red packet's
child packets are green, an orange node's non-preferred (left) child
chain is green, and a stand-alone chain has green root packets.

Elements one level down are *stored triples* over the level above:
either one buffer of size >= 3, or prefix (>= 3) / child chain / suffix
(>= 3); level-0 elements wrap the user's values.  Operations edit the
root nodes; each edit degrades a node's color by at most one rank, and a
red root packet is repaired by a bounded transfer of one stored triple
between its tail and the tail's (green) child packets.  No operation
loops or recurses over the structure, so all five run in worst-case
constant structural work.
"""

from .colors import (
    GREEN4,
    ORANGE4,
    RED4,
    YELLOW4,
    REG4_G,
    REG4_R,
)
from . import sbuffer as sb
from .work import tick


class CadequeError(ValueError):
    pass


# Frozen per-operation ceilings on structural work (constructions per
# call, including inner buffer machinery).  The fuzz harness and the
# benchmark assert every observed delta stays below these, at every
# length; the constants encode the worst-case-O(1) claim.
WORK_BOUNDS = {"push": 64, "inject": 64, "pop": 512, "eject": 512, "concat": 512}


K_ONLY, K_LEFT, K_RIGHT = "only", "left", "right"


# ---------------------------------------------------------------------------
# Stored triples (the recursive-slowdown elements).


class Ground:
    """Level-0 element: one user value."""

    __slots__ = ("value",)
    level = 0

    def __init__(self, value):
        tick()
        self.value = value


class Small:
    """One buffer of at least 3 elements of the level below."""

    __slots__ = ("buffer", "level")

    def __init__(self, buffer, level):
        tick()
        self.buffer = buffer
        self.level = level


class Big:
    """Prefix (>=3), child chain, suffix (>=3); buffers hold the level below."""

    __slots__ = ("prefix", "child", "suffix", "level")

    def __init__(self, prefix, child, suffix, level):
        tick()
        self.prefix = prefix
        self.child = child
        self.suffix = suffix
        self.level = level


# ---------------------------------------------------------------------------
# Node colorings: witnesses relating buffer sizes, arity, and color.
# Delta is buffer size minus 5; min_delta applies to whichever buffers
# the node's kind makes relevant.


class NodeColoring:
    __slots__ = ("name", "color", "min_delta", "arity_zero")

    def __init__(self, name, color, min_delta, arity_zero):
        self.name = name
        self.color = color
        self.min_delta = min_delta
        self.arity_zero = arity_zero

    def __repr__(self):
        return self.name


W_EN = NodeColoring("EN", GREEN4, 0, True)
W_GN = NodeColoring("GN", GREEN4, 3, False)
W_YN = NodeColoring("YN", YELLOW4, 2, False)
W_ON = NodeColoring("ON", ORANGE4, 1, False)
W_RN = NodeColoring("RN", RED4, 0, False)

_DEGRADE = {W_GN: W_YN, W_YN: W_ON, W_ON: W_RN}


# ---------------------------------------------------------------------------
# Nodes.


class OnlyNode:
    __slots__ = ("w", "prefix", "suffix", "arity", "level")
    kind = K_ONLY

    def __init__(self, w, prefix, suffix, arity, level):
        tick()
        self.w = w
        self.prefix = prefix
        self.suffix = suffix
        self.arity = arity
        self.level = level

    @property
    def color(self):
        return self.w.color


class OnlyEndNode:
    __slots__ = ("buffer", "level")
    kind = K_ONLY
    arity = 0
    w = W_EN
    color = GREEN4

    def __init__(self, buffer, level):
        tick()
        self.buffer = buffer
        self.level = level


class LeftNode:
    __slots__ = ("w", "prefix", "rear", "arity", "level")
    kind = K_LEFT

    def __init__(self, w, prefix, rear, arity, level):
        tick()
        self.w = w
        self.prefix = prefix
        self.rear = rear
        self.arity = arity
        self.level = level

    @property
    def color(self):
        return self.w.color


class RightNode:
    __slots__ = ("w", "front", "suffix", "arity", "level")
    kind = K_RIGHT

    def __init__(self, w, front, suffix, arity, level):
        tick()
        self.w = w
        self.front = front
        self.suffix = suffix
        self.arity = arity
        self.level = level

    @property
    def color(self):
        return self.w.color


# ---------------------------------------------------------------------------
# Bodies, packets, chains.


BHOLE = None


class BodyOne:
    """Arity-1 yellow/orange node continuing into its only child."""

    __slots__ = ("node", "cont")

    def __init__(self, node, cont):
        tick()
        self.node = node
        self.cont = cont


class BodyOrange:
    """Arity-2 orange node: green left chain aside, continues right."""

    __slots__ = ("node", "left_chain", "cont")

    def __init__(self, node, left_chain, cont):
        tick()
        self.node = node
        self.left_chain = left_chain
        self.cont = cont


class BodyYellow:
    """Arity-2 yellow node: continues left, right chain aside (any color)."""

    __slots__ = ("node", "cont", "right_chain")

    def __init__(self, node, cont, right_chain):
        tick()
        self.node = node
        self.cont = cont
        self.right_chain = right_chain


class Packet:
    __slots__ = ("body", "tail")

    def __init__(self, body, tail):
        tick()
        self.body = body
        self.tail = tail

    @property
    def color(self):
        return self.tail.color


CEMPTY = None


class SingleChain:
    __slots__ = ("reg", "packet", "child", "color")
    arity = 1

    def __init__(self, reg, packet, child):
        tick()
        self.reg = reg
        self.packet = packet
        self.child = child
        self.color = packet.tail.color


class PairChain:
    __slots__ = ("left", "right")
    arity = 2

    def __init__(self, left, right):
        tick()
        self.left = left
        self.right = right


def chain_arity(chain):
    return 0 if chain is CEMPTY else chain.arity


def root_node(single):
    body = single.packet.body
    return single.packet.tail if body is BHOLE else body.node


def _single(packet, child):
    return SingleChain(
        REG4_R if packet.tail.color is RED4 else REG4_G, packet, child
    )


def _body_with_head(body, node):
    if isinstance(body, BodyOne):
        return BodyOne(node, body.cont)
    if isinstance(body, BodyOrange):
        return BodyOrange(node, body.left_chain, body.cont)
    return BodyYellow(node, body.cont, body.right_chain)


def _replace_root(single, node):
    pkt = single.packet
    if pkt.body is BHOLE:
        return _single(Packet(BHOLE, node), single.child)
    return _single(Packet(_body_with_head(pkt.body, node), pkt.tail), single.child)


def _strip_root(single):
    """Remove the root node; return (node, forest of its children)."""
    pkt = single.packet
    body = pkt.body
    if body is BHOLE:
        return pkt.tail, single.child
    rest = _single(Packet(body.cont, pkt.tail), single.child)
    if isinstance(body, BodyOne):
        return body.node, rest
    if isinstance(body, BodyOrange):
        return body.node, PairChain(body.left_chain, rest)
    return body.node, PairChain(rest, body.right_chain)


class Cadeque:
    __slots__ = ("chain", "length")

    def __init__(self, chain, length):
        tick()
        self.chain = chain
        self.length = length


def empty():
    return Cadeque(CEMPTY, 0)


def length(d):
    return d.length


def is_empty(d):
    return d.chain is CEMPTY


# ---------------------------------------------------------------------------
# Witness-preserving edits of the exposed root nodes.  Growing a buffer
# can only improve the colors its witness claims, so these never trigger
# regularization.


def push_item(chain, st):
    if chain is CEMPTY:
        return _single(Packet(BHOLE, OnlyEndNode(sb.of_list([st]), st.level)), CEMPTY)
    if isinstance(chain, PairChain):
        return PairChain(push_item(chain.left, st), chain.right)
    n = root_node(chain)
    if isinstance(n, OnlyEndNode):
        n2 = OnlyEndNode(sb.push(st, n.buffer), n.level)
    elif isinstance(n, OnlyNode):
        n2 = OnlyNode(n.w, sb.push(st, n.prefix), n.suffix, n.arity, n.level)
    elif isinstance(n, LeftNode):
        n2 = LeftNode(n.w, sb.push(st, n.prefix), n.rear, n.arity, n.level)
    else:
        raise CadequeError("cannot push onto a right-kind chain")
    return _replace_root(chain, n2)


def inject_item(chain, st):
    if chain is CEMPTY:
        return _single(Packet(BHOLE, OnlyEndNode(sb.of_list([st]), st.level)), CEMPTY)
    if isinstance(chain, PairChain):
        return PairChain(chain.left, inject_item(chain.right, st))
    n = root_node(chain)
    if isinstance(n, OnlyEndNode):
        n2 = OnlyEndNode(sb.inject(n.buffer, st), n.level)
    elif isinstance(n, OnlyNode):
        n2 = OnlyNode(n.w, n.prefix, sb.inject(n.suffix, st), n.arity, n.level)
    elif isinstance(n, RightNode):
        n2 = RightNode(n.w, n.front, sb.inject(n.suffix, st), n.arity, n.level)
    else:
        raise CadequeError("cannot inject into a left-kind chain")
    return _replace_root(chain, n2)


def _node_inject_rear(n, st):
    if isinstance(n, OnlyEndNode):
        return OnlyEndNode(sb.inject(n.buffer, st), n.level)
    if isinstance(n, OnlyNode):
        return OnlyNode(n.w, n.prefix, sb.inject(n.suffix, st), n.arity, n.level)
    if isinstance(n, RightNode):
        return RightNode(n.w, n.front, sb.inject(n.suffix, st), n.arity, n.level)
    raise CadequeError("no injectable rear buffer on a left node")


def _node_push_front(n, st):
    if isinstance(n, OnlyEndNode):
        return OnlyEndNode(sb.push(st, n.buffer), n.level)
    if isinstance(n, OnlyNode):
        return OnlyNode(n.w, sb.push(st, n.prefix), n.suffix, n.arity, n.level)
    if isinstance(n, LeftNode):
        return LeftNode(n.w, sb.push(st, n.prefix), n.rear, n.arity, n.level)
    raise CadequeError("no pushable front buffer on a right node")


def _inject_second(cont, tail, st):
    """Inject into the suffix of a packet's second node; (cont', tail')."""
    if cont is BHOLE:
        return BHOLE, _node_inject_rear(tail, st)
    return _body_with_head(cont, _node_inject_rear(cont.node, st)), tail


def _push_second(cont, tail, st):
    if cont is BHOLE:
        return BHOLE, _node_push_front(tail, st)
    return _body_with_head(cont, _node_push_front(cont.node, st)), tail


def inject_root_child(single, st):
    """Insert a stored triple at the rear of the root node's child forest."""
    pkt = single.packet
    body = pkt.body
    if body is BHOLE:
        tail = pkt.tail
        child = inject_item(single.child, st)
        if tail.arity != chain_arity(child):
            # a childless left node gained its first child
            w = tail.w
            if w is W_EN:
                assert sb.size(tail.prefix) >= 8
                w = W_GN
            tail = LeftNode(w, tail.prefix, tail.rear, chain_arity(child), tail.level)
        return _single(Packet(BHOLE, tail), child)
    if isinstance(body, BodyYellow):
        body2 = BodyYellow(body.node, body.cont, inject_item(body.right_chain, st))
        return _single(Packet(body2, pkt.tail), single.child)
    cont2, tail2 = _inject_second(body.cont, pkt.tail, st)
    if isinstance(body, BodyOne):
        return _single(Packet(BodyOne(body.node, cont2), tail2), single.child)
    return _single(
        Packet(BodyOrange(body.node, body.left_chain, cont2), tail2), single.child
    )


def push_root_child(single, st):
    """Insert a stored triple at the front of the root node's child forest."""
    pkt = single.packet
    body = pkt.body
    if body is BHOLE:
        tail = pkt.tail
        child = push_item(single.child, st)
        if tail.arity != chain_arity(child):
            w = tail.w
            if w is W_EN:
                assert sb.size(tail.suffix) >= 8
                w = W_GN
            tail = RightNode(w, tail.front, tail.suffix, chain_arity(child), tail.level)
        return _single(Packet(BHOLE, tail), child)
    if isinstance(body, BodyOrange):
        # the front of the forest is the left chain; growing keeps it green
        body2 = BodyOrange(body.node, push_item(body.left_chain, st), body.cont)
        return _single(Packet(body2, pkt.tail), single.child)
    cont2, tail2 = _push_second(body.cont, pkt.tail, st)
    if isinstance(body, BodyOne):
        return _single(Packet(BodyOne(body.node, cont2), tail2), single.child)
    return _single(
        Packet(BodyYellow(body.node, cont2, body.right_chain), tail2), single.child
    )


# ---------------------------------------------------------------------------
# Extraction.  A naive buffer edit may degrade the root node's color by
# one rank; the packet is then reshaped locally (the preferred path may
# reroute), and at worst its root packet comes out red, to be repaired
# by ensure_green.


def _restructure(single, n2):
    """Rebuild around a root node degraded to witness n2.w."""
    pkt = single.packet
    body = pkt.body
    reg = single.reg
    tail = pkt.tail
    child = single.child
    if body is BHOLE:
        # green tail became yellow: absorb the preferred child's packet
        assert n2.w is W_YN
        if n2.arity == 1:
            inner = single.child
            return SingleChain(
                inner.reg,
                Packet(BodyOne(n2, inner.packet.body), inner.packet.tail),
                inner.child,
            )
        lc, rc = single.child.left, single.child.right
        return SingleChain(
            lc.reg,
            Packet(BodyYellow(n2, lc.packet.body, rc), lc.packet.tail),
            lc.child,
        )
    if isinstance(body, BodyOne):
        if n2.w is not W_RN:
            return SingleChain(reg, Packet(BodyOne(n2, body.cont), tail), child)
        rest = SingleChain(reg, Packet(body.cont, tail), child)
        assert rest.color is GREEN4
        return SingleChain(REG4_R, Packet(BHOLE, n2), rest)
    if isinstance(body, BodyYellow):
        # yellow became orange: the preferred path reroutes to the right
        assert n2.w is W_ON
        left_chain = SingleChain(reg, Packet(body.cont, tail), child)
        assert left_chain.color is GREEN4
        rch = body.right_chain
        return SingleChain(
            rch.reg,
            Packet(BodyOrange(n2, left_chain, rch.packet.body), rch.packet.tail),
            rch.child,
        )
    # BodyOrange: orange became red, ending its packet at the top
    assert n2.w is W_RN
    rest = SingleChain(reg, Packet(body.cont, tail), child)
    assert rest.color is GREEN4
    return SingleChain(REG4_R, Packet(BHOLE, n2), PairChain(body.left_chain, rest))


def pop_item(chain):
    """Extract the front stored triple.  The result chain is structurally
    valid but its root packet may be red; callers re-green as needed."""
    if isinstance(chain, PairChain):
        lc = chain.left
        ln = root_node(lc)
        if ln.w is W_EN and sb.size(ln.prefix) == 5:
            # the left triple dies; fold its remainder into the right chain
            x, p2 = sb.pop(ln.prefix)
            elems = sb.to_list(p2) + [ln.rear[0], ln.rear[1]]
            rc = chain.right
            rn = root_node(rc)
            if isinstance(rn, RightNode):
                if rn.w.arity_zero and rn.arity == 0:
                    n2 = OnlyEndNode(
                        sb.push_several(reversed(elems + list(rn.front)), rn.suffix),
                        rn.level,
                    )
                else:
                    n2 = OnlyNode(
                        rn.w,
                        sb.of_list(elems + list(rn.front)),
                        rn.suffix,
                        rn.arity,
                        rn.level,
                    )
            else:
                raise CadequeError("right chain with a non-right root")
            return x, _replace_root(rc, n2)
        x, lc2 = pop_item(lc)
        return x, PairChain(lc2, chain.right)
    n = root_node(chain)
    if isinstance(n, OnlyEndNode):
        x, b2 = sb.pop(n.buffer)
        if sb.size(b2) == 0:
            return x, CEMPTY
        return x, _replace_root(chain, OnlyEndNode(b2, n.level))
    x, p2 = sb.pop(n.prefix)
    np = sb.size(p2)
    if isinstance(n, OnlyNode):
        mk = lambda w: OnlyNode(w, p2, n.suffix, n.arity, n.level)
    elif isinstance(n, LeftNode):
        if n.w is W_EN:
            assert np >= 5
            return x, _replace_root(chain, LeftNode(W_EN, p2, n.rear, 0, n.level))
        mk = lambda w: LeftNode(w, p2, n.rear, n.arity, n.level)
    else:
        raise CadequeError("cannot pop from a right-kind chain")
    if np - 5 >= n.w.min_delta:
        return x, _replace_root(chain, mk(n.w))
    w2 = _DEGRADE[n.w]
    return x, _restructure(chain, mk(w2))


def eject_item(chain):
    """Extract the rear stored triple; mirror of pop_item."""
    if isinstance(chain, PairChain):
        rc = chain.right
        rn = root_node(rc)
        if rn.w is W_EN and sb.size(rn.suffix) == 5:
            s2, x = sb.eject(rn.suffix)
            elems = [rn.front[0], rn.front[1]] + sb.to_list(s2)
            lc = chain.left
            ln = root_node(lc)
            if isinstance(ln, LeftNode):
                if ln.w.arity_zero and ln.arity == 0:
                    n2 = OnlyEndNode(
                        sb.inject_several(ln.prefix, list(ln.rear) + elems), ln.level
                    )
                else:
                    n2 = OnlyNode(
                        ln.w,
                        ln.prefix,
                        sb.of_list(list(ln.rear) + elems),
                        ln.arity,
                        ln.level,
                    )
            else:
                raise CadequeError("left chain with a non-left root")
            return _replace_root(lc, n2), x
        rc2, x = eject_item(rc)
        return PairChain(chain.left, rc2), x
    n = root_node(chain)
    if isinstance(n, OnlyEndNode):
        b2, x = sb.eject(n.buffer)
        if sb.size(b2) == 0:
            return CEMPTY, x
        return _replace_root(chain, OnlyEndNode(b2, n.level)), x
    s2, x = sb.eject(n.suffix)
    ns = sb.size(s2)
    if isinstance(n, OnlyNode):
        mk = lambda w: OnlyNode(w, n.prefix, s2, n.arity, n.level)
    elif isinstance(n, RightNode):
        if n.w is W_EN:
            assert ns >= 5
            return _replace_root(chain, RightNode(W_EN, n.front, s2, 0, n.level)), x
        mk = lambda w: RightNode(w, n.front, s2, n.arity, n.level)
    else:
        raise CadequeError("cannot eject from a left-kind chain")
    if ns - 5 >= n.w.min_delta:
        return _replace_root(chain, mk(n.w)), x
    w2 = _DEGRADE[n.w]
    return _restructure(chain, mk(w2)), x


# ---------------------------------------------------------------------------
# Concatenation: convert the operands into one left and one right chain,
# tucking displaced buffer contents into child forests as stored triples.


class TooSmall(Exception):
    """Operand root holds fewer elements than a left/right node needs."""

    def __init__(self, elems):
        self.elems = elems


def make_left(chain):
    """Reshape a kind-only chain into a single left-kind chain."""
    if isinstance(chain, PairChain):
        lc, rc = chain.left, chain.right
        ln = root_node(lc)
        if ln.w is W_EN and sb.size(ln.prefix) <= 7:
            return make_left(_collapse_left_into_right(lc, rc))
        rn = root_node(rc)
        s2, r = sb.eject_k(rn.suffix, 2)
        big = Big(
            sb.of_list(list(ln.rear) + list(rn.front)),
            _strip_root(rc)[1],
            s2,
            ln.level + 1,
        )
        lc2 = _replace_root(lc, LeftNode(ln.w, ln.prefix, (r[0], r[1]), ln.arity, ln.level))
        return inject_root_child(lc2, big)
    n = root_node(chain)
    if isinstance(n, OnlyEndNode):
        size = sb.size(n.buffer)
        if size <= 6:
            raise TooSmall(sb.to_list(n.buffer))
        b2, r = sb.eject_k(n.buffer, 2)
        return _single(
            Packet(BHOLE, LeftNode(W_EN, b2, (r[0], r[1]), 0, n.level)), CEMPTY
        )
    # only node, as tail or as body head
    s2, r = sb.eject_k(n.suffix, 2)
    small = Small(s2, n.level + 1)
    out = _replace_root(chain, LeftNode(n.w, n.prefix, (r[0], r[1]), n.arity, n.level))
    return inject_root_child(out, small)


def make_right(chain):
    """Reshape a kind-only chain into a single right-kind chain."""
    if isinstance(chain, PairChain):
        lc, rc = chain.left, chain.right
        rn = root_node(rc)
        if rn.w is W_EN and sb.size(rn.suffix) <= 7:
            return make_right(_collapse_right_into_left(lc, rc))
        ln = root_node(lc)
        f, p2 = sb.pop_k(ln.prefix, 2)
        big = Big(
            p2,
            _strip_root(lc)[1],
            sb.of_list(list(ln.rear) + list(rn.front)),
            rn.level + 1,
        )
        rc2 = _replace_root(rc, RightNode(rn.w, (f[0], f[1]), rn.suffix, rn.arity, rn.level))
        return push_root_child(rc2, big)
    n = root_node(chain)
    if isinstance(n, OnlyEndNode):
        size = sb.size(n.buffer)
        if size <= 6:
            raise TooSmall(sb.to_list(n.buffer))
        f, b2 = sb.pop_k(n.buffer, 2)
        return _single(
            Packet(BHOLE, RightNode(W_EN, (f[0], f[1]), b2, 0, n.level)), CEMPTY
        )
    f, p2 = sb.pop_k(n.prefix, 2)
    small = Small(p2, n.level + 1)
    out = _replace_root(chain, RightNode(n.w, (f[0], f[1]), n.suffix, n.arity, n.level))
    return push_root_child(out, small)


def _collapse_left_into_right(lc, rc):
    """Fold a bare (childless, <= 9 element) left triple into the right chain."""
    ln = root_node(lc)
    elems = sb.to_list(ln.prefix) + list(ln.rear)
    rn = root_node(rc)
    if rn.w.arity_zero and rn.arity == 0 and isinstance(rn, RightNode):
        n2 = OnlyEndNode(
            sb.push_several(reversed(elems + list(rn.front)), rn.suffix), rn.level
        )
    else:
        n2 = OnlyNode(
            rn.w, sb.of_list(elems + list(rn.front)), rn.suffix, rn.arity, rn.level
        )
    return _replace_root(rc, n2)


def _collapse_right_into_left(lc, rc):
    rn = root_node(rc)
    elems = list(rn.front) + sb.to_list(rn.suffix)
    ln = root_node(lc)
    if ln.w.arity_zero and ln.arity == 0 and isinstance(ln, LeftNode):
        n2 = OnlyEndNode(sb.inject_several(ln.prefix, list(ln.rear) + elems), ln.level)
    else:
        n2 = OnlyNode(
            ln.w, ln.prefix, sb.of_list(list(ln.rear) + elems), ln.arity, ln.level
        )
    return _replace_root(lc, n2)


def concat_chains(a, b):
    """Concatenate two kind-only chains of the same level; bounded work."""
    if a is CEMPTY:
        return b
    if b is CEMPTY:
        return a
    try:
        la = make_left(a)
    except TooSmall as t:
        c = b
        for x in reversed(t.elems):
            c = push_item(c, x)
        return c
    try:
        rb = make_right(b)
    except TooSmall as t:
        c = a
        for x in t.elems:
            c = inject_item(c, x)
        return c
    return PairChain(la, rb)


# ---------------------------------------------------------------------------
# Regularization: repairing a red root packet.


def _unfold_front(st, target, cc):
    """Move >= 3 front elements of stored triple st into buffer `target`
    (its rear); reinsert any unconsumed remainder at the front of cc."""
    if isinstance(st, Small):
        b = st.buffer
        if sb.size(b) >= 6:
            got, b2 = sb.pop_k(b, 3)
            target = sb.inject_several(target, got)
            cc = push_item(cc, Small(b2, st.level))
        else:
            target = sb.inject_several(target, sb.to_list(b))
    elif isinstance(st, Big):
        bp = st.prefix
        if sb.size(bp) >= 6:
            got, bp2 = sb.pop_k(bp, 3)
            target = sb.inject_several(target, got)
            cc = push_item(cc, Big(bp2, st.child, st.suffix, st.level))
        else:
            target = sb.inject_several(target, sb.to_list(bp))
            rem = inject_item(st.child, Small(st.suffix, st.level))
            cc = concat_chains(rem, cc)
    else:
        raise CadequeError("ground element below the top level")
    return target, cc


def _unfold_rear(st, target, cc):
    """Mirror of _unfold_front: rear elements of st go to target's front."""
    if isinstance(st, Small):
        b = st.buffer
        if sb.size(b) >= 6:
            b2, got = sb.eject_k(b, 3)
            target = sb.push_several(reversed(got), target)
            cc = inject_item(cc, Small(b2, st.level))
        else:
            target = sb.push_several(reversed(sb.to_list(b)), target)
    elif isinstance(st, Big):
        bs = st.suffix
        if sb.size(bs) >= 6:
            bs2, got = sb.eject_k(bs, 3)
            target = sb.push_several(reversed(got), target)
            cc = inject_item(cc, Big(st.prefix, st.child, bs2, st.level))
        else:
            target = sb.push_several(reversed(sb.to_list(bs)), target)
            rem = push_item(st.child, Small(st.prefix, st.level))
            cc = concat_chains(cc, rem)
    else:
        raise CadequeError("ground element below the top level")
    return target, cc


def _merge_only_end(p, s, level):
    """Join two buffers (at least one bounded) into an only-end node."""
    if sb.size(p) <= sb.size(s):
        return OnlyEndNode(sb.push_several(reversed(sb.to_list(p)), s), level)
    return OnlyEndNode(sb.inject_several(p, sb.to_list(s)), level)


def green_of_red(single):
    """Repair a red root packet: refill the tail's deficient buffers from
    its (green) child chain, leaving a green packet over any-color children."""
    if single.color is not RED4:
        raise CadequeError("green_of_red expects a red chain")
    pkt = single.packet
    tail = pkt.tail
    cc = single.child
    if isinstance(tail, OnlyNode):
        p, s = tail.prefix, tail.suffix
        if sb.size(p) >= 8 and sb.size(s) >= 8:
            n2 = OnlyNode(W_GN, p, s, tail.arity, tail.level)
            return _single(Packet(pkt.body, n2), cc)
        if sb.size(s) <= 7:
            cc, st = eject_item(cc)
            s, cc = _unfold_rear(st, s, cc)
        if sb.size(p) <= 7 and cc is not CEMPTY:
            st, cc = pop_item(cc)
            p, cc = _unfold_front(st, p, cc)
        if cc is CEMPTY:
            n2 = _merge_only_end(p, s, tail.level)
        else:
            n2 = OnlyNode(W_GN, p, s, chain_arity(cc), tail.level)
        return _single(Packet(pkt.body, n2), cc)
    if isinstance(tail, LeftNode):
        p = tail.prefix
        if sb.size(p) >= 8:
            n2 = LeftNode(W_GN, p, tail.rear, tail.arity, tail.level)
            return _single(Packet(pkt.body, n2), cc)
        st, cc = pop_item(cc)
        p, cc = _unfold_front(st, p, cc)
        if cc is CEMPTY:
            n2 = LeftNode(W_EN, p, tail.rear, 0, tail.level)
        else:
            n2 = LeftNode(W_GN, p, tail.rear, chain_arity(cc), tail.level)
        return _single(Packet(pkt.body, n2), cc)
    if isinstance(tail, RightNode):
        s = tail.suffix
        if sb.size(s) >= 8:
            n2 = RightNode(W_GN, tail.front, s, tail.arity, tail.level)
            return _single(Packet(pkt.body, n2), cc)
        cc, st = eject_item(cc)
        s, cc = _unfold_rear(st, s, cc)
        if cc is CEMPTY:
            n2 = RightNode(W_EN, tail.front, s, 0, tail.level)
        else:
            n2 = RightNode(W_GN, tail.front, s, chain_arity(cc), tail.level)
        return _single(Packet(pkt.body, n2), cc)
    raise CadequeError("red chain with an only-end tail")


def ensure_green(chain):
    if chain is CEMPTY:
        return CEMPTY
    if isinstance(chain, PairChain):
        lc, rc = chain.left, chain.right
        lc2 = green_of_red(lc) if lc.color is RED4 else lc
        rc2 = green_of_red(rc) if rc.color is RED4 else rc
        if lc2 is lc and rc2 is rc:
            return chain
        return PairChain(lc2, rc2)
    if chain.color is RED4:
        return green_of_red(chain)
    return chain


# ---------------------------------------------------------------------------
# The five operations.


def push(x, d):
    return Cadeque(push_item(d.chain, Ground(x)), d.length + 1)


def inject(d, x):
    return Cadeque(inject_item(d.chain, Ground(x)), d.length + 1)


def pop(d):
    if d.chain is CEMPTY:
        return None
    st, chain = pop_item(d.chain)
    assert isinstance(st, Ground)
    return st.value, Cadeque(ensure_green(chain), d.length - 1)


def eject(d):
    if d.chain is CEMPTY:
        return None
    chain, st = eject_item(d.chain)
    assert isinstance(st, Ground)
    return Cadeque(ensure_green(chain), d.length - 1), st.value


def concat(d1, d2):
    if d1.chain is CEMPTY:
        return Cadeque(d2.chain, d2.length)
    if d2.chain is CEMPTY:
        return Cadeque(d1.chain, d1.length)
    return Cadeque(concat_chains(d1.chain, d2.chain), d1.length + d2.length)


# ---------------------------------------------------------------------------
# Model function.


def seq(d):
    out = []
    _emit_chain(d.chain, out)
    return out


def _emit_chain(chain, out):
    if chain is CEMPTY:
        return
    if isinstance(chain, PairChain):
        _emit_chain(chain.left, out)
        _emit_chain(chain.right, out)
        return
    _emit_body(chain.packet.body, chain.packet.tail, chain.child, out)


def _emit_body(body, tail, child, out):
    if body is BHOLE:
        _emit_node_front(tail, out)
        _emit_chain(child, out)
        _emit_node_rear(tail, out)
        return
    n = body.node
    _emit_node_front(n, out)
    if isinstance(body, BodyOne):
        _emit_body(body.cont, tail, child, out)
    elif isinstance(body, BodyOrange):
        _emit_chain(body.left_chain, out)
        _emit_body(body.cont, tail, child, out)
    else:
        _emit_body(body.cont, tail, child, out)
        _emit_chain(body.right_chain, out)
    _emit_node_rear(n, out)


def _emit_node_front(n, out):
    if isinstance(n, OnlyEndNode):
        for st in sb.seq(n.buffer):
            _emit_stored(st, out)
    elif isinstance(n, RightNode):
        _emit_stored(n.front[0], out)
        _emit_stored(n.front[1], out)
    else:
        for st in sb.seq(n.prefix):
            _emit_stored(st, out)


def _emit_node_rear(n, out):
    if isinstance(n, OnlyEndNode):
        return
    if isinstance(n, LeftNode):
        _emit_stored(n.rear[0], out)
        _emit_stored(n.rear[1], out)
    else:
        for st in sb.seq(n.suffix):
            _emit_stored(st, out)


def _emit_stored(st, out):
    if isinstance(st, Ground):
        out.append(st.value)
    elif isinstance(st, Small):
        for e in sb.seq(st.buffer):
            _emit_stored(e, out)
    else:
        for e in sb.seq(st.prefix):
            _emit_stored(e, out)
        _emit_chain(st.child, out)
        for e in sb.seq(st.suffix):
            _emit_stored(e, out)


# ---------------------------------------------------------------------------
# Validator.


def validate(d):
    """Full structural check; returns a list of violation strings."""
    out = []
    chain = d.chain
    if chain is not CEMPTY:
        if isinstance(chain, PairChain):
            if chain.left.color is not GREEN4:
                out.append("top-left packet is %r" % chain.left.color)
            if chain.right.color is not GREEN4:
                out.append("top-right packet is %r" % chain.right.color)
        else:
            if chain.color is not GREEN4:
                out.append("top packet is %r" % chain.color)
            if root_node(chain).kind is not K_ONLY:
                out.append("top single chain of kind %s" % root_node(chain).kind)
    n = _check_chain(chain, 0, K_ONLY, out)
    if n != d.length:
        out.append("cached length %d but %d values stored" % (d.length, n))
    return out


def _check_chain(chain, level, kind, out):
    if chain is CEMPTY:
        return 0
    if isinstance(chain, PairChain):
        n = _check_chain(chain.left, level, K_LEFT, out)
        return n + _check_chain(chain.right, level, K_RIGHT, out)
    pkt = chain.packet
    if pkt.tail.color not in (GREEN4, RED4):
        out.append("packet tail colored %r" % pkt.tail.color)
    if chain.reg.packet_color is not pkt.tail.color:
        out.append("witness %r stored on a %r packet" % (chain.reg, pkt.tail.color))
    cl, cr = _chain_colors(chain.child)
    if not chain.reg.allows_child(cl, cr):
        out.append(
            "witness %r violated: child packets colored (%r, %r)"
            % (chain.reg, cl, cr)
        )
    if pkt.tail.arity != chain_arity(chain.child):
        out.append(
            "tail arity %d over a child chain of arity %d"
            % (pkt.tail.arity, chain_arity(chain.child))
        )
    return _check_body(pkt.body, pkt.tail, chain.child, level, kind, out)


def _chain_colors(chain):
    if chain is CEMPTY:
        return GREEN4, GREEN4
    if isinstance(chain, PairChain):
        return chain.left.color, chain.right.color
    return chain.color, chain.color


def _check_body(body, tail, child, level, kind, out):
    if body is BHOLE:
        n = _check_node(tail, level, kind, True, out)
        return n + _check_chain(child, level + 1, K_ONLY, out)
    node = body.node
    n = _check_node(node, level, kind, False, out)
    if isinstance(body, BodyOne):
        if node.arity != 1:
            out.append("single-continuation body node of arity %d" % node.arity)
        return n + _check_body(body.cont, tail, child, level + 1, K_ONLY, out)
    if isinstance(body, BodyOrange):
        if node.arity != 2 or node.w is not W_ON:
            out.append("orange pair body with witness %r" % node.w)
        if body.left_chain.color is not GREEN4:
            out.append("orange node's left chain is %r" % body.left_chain.color)
        n += _check_chain(body.left_chain, level + 1, K_LEFT, out)
        return n + _check_body(body.cont, tail, child, level + 1, K_RIGHT, out)
    if node.arity != 2 or node.w is not W_YN:
        out.append("yellow pair body with witness %r" % node.w)
    n += _check_body(body.cont, tail, child, level + 1, K_LEFT, out)
    return n + _check_chain(body.right_chain, level + 1, K_RIGHT, out)


def _node_witness_ok(node):
    w = node.w
    if w.arity_zero != (node.arity == 0):
        return False
    if isinstance(node, OnlyNode):
        deltas = (sb.size(node.prefix) - 5, sb.size(node.suffix) - 5)
    elif isinstance(node, LeftNode):
        deltas = (sb.size(node.prefix) - 5,)
    else:
        deltas = (sb.size(node.suffix) - 5,)
    return all(dl >= w.min_delta for dl in deltas) and min(deltas) >= 0


def _check_node(node, level, kind, is_tail, out):
    if node.kind != kind:
        out.append("%s node where a %s node was expected" % (node.kind, kind))
    if node.level != level:
        out.append("node at level %d tagged %d" % (level, node.level))
    if is_tail:
        if node.color not in (GREEN4, RED4):
            out.append("tail node colored %r" % node.color)
    else:
        if node.color not in (YELLOW4, ORANGE4):
            out.append("body node colored %r" % node.color)
    if isinstance(node, OnlyEndNode):
        if sb.size(node.buffer) < 1:
            out.append("empty only-end buffer")
        _check_sbuf(node.buffer, level, out)
        return _count_buffer(node.buffer, level, out)
    if node.arity == 0 and node.color is not GREEN4:
        out.append("childless node colored %r" % node.color)
    if not _node_witness_ok(node):
        out.append(
            "witness %r on a %s node with sizes out of range" % (node.w, node.kind)
        )
    n = 0
    if isinstance(node, OnlyNode):
        if node.arity == 0:
            out.append("only node of arity 0")
        _check_sbuf(node.prefix, level, out)
        _check_sbuf(node.suffix, level, out)
        n += _count_buffer(node.prefix, level, out)
        n += _count_buffer(node.suffix, level, out)
    elif isinstance(node, LeftNode):
        _check_sbuf(node.prefix, level, out)
        n += _count_buffer(node.prefix, level, out)
        n += _count_stored(node.rear[0], level, out)
        n += _count_stored(node.rear[1], level, out)
    else:
        _check_sbuf(node.suffix, level, out)
        n += _count_stored(node.front[0], level, out)
        n += _count_stored(node.front[1], level, out)
        n += _count_buffer(node.suffix, level, out)
    return n


def _check_sbuf(b, level, out):
    out.extend(sb.validate(b))


def _count_buffer(b, level, out):
    n = 0
    for st in sb.seq(b):
        n += _count_stored(st, level, out)
    return n


def _count_stored(st, level, out):
    if st.level != level:
        out.append("stored triple at level %d tagged %d" % (level, st.level))
    if isinstance(st, Ground):
        if level != 0:
            out.append("ground value above level 0")
        return 1
    if level == 0:
        out.append("composite stored triple at level 0")
        return 0
    if isinstance(st, Small):
        if sb.size(st.buffer) < 3:
            out.append("small stored triple of size %d" % sb.size(st.buffer))
        _check_sbuf(st.buffer, level - 1, out)
        return _count_buffer(st.buffer, level - 1, out)
    if sb.size(st.prefix) < 3 or sb.size(st.suffix) < 3:
        out.append(
            "big stored triple with buffers %d/%d"
            % (sb.size(st.prefix), sb.size(st.suffix))
        )
    _check_sbuf(st.prefix, level - 1, out)
    _check_sbuf(st.suffix, level - 1, out)
    n = _count_buffer(st.prefix, level - 1, out)
    n += _check_chain(st.child, level, K_ONLY, out)
    return n + _count_buffer(st.suffix, level - 1, out)
