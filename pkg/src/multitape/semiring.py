"""Commutative semirings with a partial star.

Weights are immutable :class:`Weight` values that know their semiring, so the
usual operators work on them directly::

    >>> k = Q.weight("1/2")
    >>> (k + k) * k
    Weight(q, 1/2)
    >>> k.star()
    Weight(q, 2)
"""

from fractions import Fraction

from .errors import StarUndefined


class Semiring:
    """A commutative semiring over raw Python values.

    Subclasses implement the primitive operations on raw values; client code
    should manipulate :class:`Weight` objects instead.
    """

    name = None

    def __init__(self):
        self.zero = Weight(self, self._zero())
        self.one = Weight(self, self._one())

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (get_semiring, (self.name,))

    def weight(self, value):
        """Build a weight from a raw value or from its text form."""
        if isinstance(value, Weight):
            if value.ks is not self:
                raise ValueError("weight {!r} is not in {}".format(value, self))
            return value
        if isinstance(value, str):
            return Weight(self, self.parse(value))
        return Weight(self, self.coerce(value))

    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, value):
        return str(value)

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def star(self, a):
        raise NotImplementedError


class Boolean(Semiring):
    name = "b"

    def _zero(self):
        return False

    def _one(self):
        return True

    def coerce(self, value):
        if value in (0, 1):
            return bool(value)
        raise ValueError("not a Boolean weight: {!r}".format(value))

    def parse(self, text):
        text = text.strip()
        if text in ("0", "false"):
            return False
        if text in ("1", "true"):
            return True
        raise ValueError("not a Boolean weight: {!r}".format(text))

    def format(self, value):
        return "1" if value else "0"

    def add(self, a, b):
        return a or b

    def mul(self, a, b):
        return a and b

    def star(self, a):
        return True


class Integers(Semiring):
    name = "z"

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, bool) or int(value) != value:
            raise ValueError("not an integer weight: {!r}".format(value))
        return int(value)

    def parse(self, text):
        return int(text.strip())

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def star(self, a):
        # The series sum of a^n converges in Z only for a = 0.
        if a == 0:
            return 1
        raise StarUndefined("{}* is not defined in Z".format(a))


class Rationals(Semiring):
    name = "q"

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, (bool, float)):
            raise ValueError("not an exact rational weight: {!r}".format(value))
        return Fraction(value)

    def parse(self, text):
        return Fraction(text.strip())

    def format(self, value):
        if value.denominator == 1:
            return str(value.numerator)
        return "{}/{}".format(value.numerator, value.denominator)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def star(self, a):
        if a == 1:
            raise StarUndefined("1* is not defined in Q")
        return 1 / (1 - a)


class Weight:
    """An element of a semiring."""

    __slots__ = ("ks", "value")

    def __init__(self, ks, value):
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("weights are immutable")

    def __reduce__(self):
        return (Weight, (self.ks, self.value))

    def _check(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if other.ks is not self.ks:
            raise ValueError("mixing weights of {} and {}".format(self.ks, other.ks))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Weight(self.ks, self.ks.add(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Weight(self.ks, self.ks.mul(self.value, other.value))

    def star(self):
        """Return the star of this weight, or raise :class:`StarUndefined`."""
        return Weight(self.ks, self.ks.star(self.value))

    def is_zero(self):
        return self.value == self.ks.zero.value

    def is_one(self):
        return self.value == self.ks.one.value

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.ks is other.ks and self.value == other.value

    def __hash__(self):
        return hash((self.ks.name, self.value))

    def __lt__(self, other):
        if not isinstance(other, Weight) or other.ks is not self.ks:
            return NotImplemented
        return self.value < other.value

    def __str__(self):
        return self.ks.format(self.value)

    def __repr__(self):
        return "Weight({}, {})".format(self.ks.name, self)


B = Boolean()
Z = Integers()
Q = Rationals()

SEMIRINGS = {ks.name: ks for ks in (B, Z, Q)}


def get_semiring(name):
    """Look up a semiring by its context token (``b``, ``z`` or ``q``)."""
    try:
        return SEMIRINGS[name.lower()]
    except KeyError:
        raise ValueError("unknown semiring {!r}, expected one of {}".format(
            name, ", ".join(SEMIRINGS))) from None
