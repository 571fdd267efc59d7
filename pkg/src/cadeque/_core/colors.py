"""Color vocabulary shared by the counter, the deques, and the catenable deques.

A color is a tuple of hue bits with at most one bit set; the all-zero
tuple is "uncolored".  Keeping the hue bits explicit (rather than a flat
enum) lets the validators express constraints like "not yellow" as bit
predicates, mirroring how the structures' invariants are phrased.

Two families exist: the three-hue colors (green/yellow/red) used by the
redundant counter and the non-catenable deques, and the four-hue colors
(green/yellow/orange/red) used by the catenable deques.
"""

from enum import Enum

from .work import tick  # noqa: F401  (kernel modules share one package)


class ColorError(ValueError):
    """An operand is not a proper color, or a size is out of range."""


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Hue3Color:
    """green/yellow/red color: at most one hue bit set."""

    __slots__ = ("green_bit", "yellow_bit", "red_bit", "name")

    def __init__(self, green_bit, yellow_bit, red_bit, name):
        if green_bit + yellow_bit + red_bit > 1:
            raise ColorError("at most one hue bit may be set")
        self.green_bit = bool(green_bit)
        self.yellow_bit = bool(yellow_bit)
        self.red_bit = bool(red_bit)
        self.name = name

    @property
    def is_proper(self):
        return self.green_bit or self.yellow_bit or self.red_bit

    def __repr__(self):
        return self.name


GREEN3 = Hue3Color(1, 0, 0, "green")
YELLOW3 = Hue3Color(0, 1, 0, "yellow")
RED3 = Hue3Color(0, 0, 1, "red")
UNCOLORED3 = Hue3Color(0, 0, 0, "uncolored")


class Hue4Color:
    """green/yellow/orange/red color: at most one hue bit set."""

    __slots__ = ("green_bit", "yellow_bit", "orange_bit", "red_bit", "name", "rank")

    def __init__(self, green_bit, yellow_bit, orange_bit, red_bit, name, rank):
        if green_bit + yellow_bit + orange_bit + red_bit > 1:
            raise ColorError("at most one hue bit may be set")
        self.green_bit = bool(green_bit)
        self.yellow_bit = bool(yellow_bit)
        self.orange_bit = bool(orange_bit)
        self.red_bit = bool(red_bit)
        self.name = name
        self.rank = rank  # red < orange < yellow < green

    @property
    def is_proper(self):
        return self.green_bit or self.yellow_bit or self.orange_bit or self.red_bit

    def __repr__(self):
        return self.name


GREEN4 = Hue4Color(1, 0, 0, 0, "green", 3)
YELLOW4 = Hue4Color(0, 1, 0, 0, "yellow", 2)
ORANGE4 = Hue4Color(0, 0, 1, 0, "orange", 1)
RED4 = Hue4Color(0, 0, 0, 1, "red", 0)
UNCOLORED4 = Hue4Color(0, 0, 0, 0, "uncolored", -1)


def color_order(a, b):
    """Total order on proper four-hue colors: red < orange < yellow < green."""
    if not isinstance(a, Hue4Color) or not isinstance(b, Hue4Color):
        raise ColorError("color_order expects four-hue colors")
    if not a.is_proper or not b.is_proper:
        raise ColorError("color_order is undefined on uncolored operands")
    if a.rank < b.rank:
        return Ordering.LESS
    if a.rank > b.rank:
        return Ordering.GREATER
    return Ordering.EQUAL


def size_to_color(n):
    """Buffer-size coloring for catenable deques: 5 red, 6 orange, 7 yellow, >=8 green."""
    if n < 5:
        raise ColorError("no color is assigned to sizes below 5")
    if n == 5:
        return RED4
    if n == 6:
        return ORANGE4
    if n == 7:
        return YELLOW4
    return GREEN4


class Regularity3:
    """Relation between a packet's color and the color of the chain below it.

    G: green packet, next chain green or red (not yellow).
    Y: yellow packet, next chain green.
    R: red packet, next chain green.
    """

    __slots__ = ("variant", "packet_color")

    def __init__(self, variant, packet_color):
        self.variant = variant
        self.packet_color = packet_color

    def allows_chain(self, chain_color):
        if self.variant == "G":
            return not chain_color.yellow_bit
        return chain_color is GREEN3

    def __repr__(self):
        return self.variant


REG3_G = Regularity3("G", GREEN3)
REG3_Y = Regularity3("Y", YELLOW3)
REG3_R = Regularity3("R", RED3)


def regularity3_for(packet_color):
    if packet_color is GREEN3:
        return REG3_G
    if packet_color is YELLOW3:
        return REG3_Y
    if packet_color is RED3:
        return REG3_R
    raise ColorError("no regularity witness for %r packets" % packet_color)


class Regularity4:
    """Relation between a packet's color and the packets below it.

    G: green packet, following packets unconstrained.
    R: red packet, following packets must be green.
    """

    __slots__ = ("variant", "packet_color")

    def __init__(self, variant, packet_color):
        self.variant = variant
        self.packet_color = packet_color

    def allows_child(self, left_color, right_color):
        if self.variant == "G":
            return True
        return left_color is GREEN4 and right_color is GREEN4

    def __repr__(self):
        return self.variant


REG4_G = Regularity4("G", GREEN4)
REG4_R = Regularity4("R", RED4)


def regularity4_for(packet_color):
    if packet_color is GREEN4:
        return REG4_G
    if packet_color is RED4:
        return REG4_R
    raise ColorError("packet colors are green or red, not %r" % packet_color)
