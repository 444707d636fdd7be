"""Labels of the product of free monoids.

A generator (``GenLabel``) is a tuple with one entry per tape, each entry a
single letter or ``""`` for the empty word; not every entry may be empty.
A monoid element is a tuple of words, one per tape.  Both are plain tuples of
strings, so they hash, compare and sort natively: the empty word sorts before
every letter, which gives the canonical label order.
"""

import itertools

from .errors import ArityMismatch, ExpressionSyntaxError, UnknownLetter
from .semiring import get_semiring

EPSILON = ""
EPSILON_TEXT = "\\e"


class Context:
    """Tape alphabets plus the weight semiring.

    The text form is ``tapes=<alpha1>;<alpha2>;...,weights=<b|z|q>``.
    """

    def __init__(self, tapes, ks):
        tapes = tuple("".join(sorted(set(t))) for t in tapes)
        if not tapes:
            raise ValueError("a context needs at least one tape")
        if any(not t for t in tapes):
            raise ValueError("tape alphabets must be non-empty")
        self.tapes = tapes
        self.ks = ks
        self.letters = frozenset("".join(tapes))

    @classmethod
    def parse(cls, text):
        fields = {}
        for item in text.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError("malformed context field {!r} in {!r}".format(item, text))
            fields[key.strip()] = value.strip()
        unknown = set(fields) - {"tapes", "weights"}
        if unknown or "tapes" not in fields:
            raise ValueError("malformed context {!r}".format(text))
        return cls(fields["tapes"].split(";"), get_semiring(fields.get("weights", "q")))

    @property
    def arity(self):
        return len(self.tapes)

    def __str__(self):
        return "tapes={},weights={}".format(";".join(self.tapes), self.ks.name)

    def __repr__(self):
        return "Context({!r})".format(str(self))

    def __eq__(self, other):
        if not isinstance(other, Context):
            return NotImplemented
        return self.tapes == other.tapes and self.ks is other.ks

    def __hash__(self):
        return hash((self.tapes, self.ks.name))

    def generators(self):
        """Every generator over the context, in label order."""
        choices = [(EPSILON,) + tuple(t) for t in self.tapes]
        return [g for g in itertools.product(*choices) if any(g)]

    def parse_label(self, text):
        return self.check(parse_label(text), generator=True)

    def parse_word(self, text):
        return self.check(parse_word(text), generator=False)

    def check(self, value, generator=True):
        if len(value) != self.arity:
            raise ArityMismatch("{!r} has {} tape(s), context has {}".format(
                format_word(value), len(value), self.arity))
        for word, alphabet in zip(value, self.tapes):
            for ch in word:
                if ch not in alphabet:
                    raise UnknownLetter("letter {!r} is not in tape alphabet {!r}".format(
                        ch, alphabet))
        if generator and not any(value):
            raise ValueError("a generator cannot be empty on every tape")
        return value


def gradation(m):
    """Total length over all tapes."""
    return sum(len(w) for w in m)


def neutral(arity):
    return (EPSILON,) * arity


def concat(m, n):
    if len(m) != len(n):
        raise ArityMismatch("cannot concatenate {}-tape and {}-tape elements".format(
            len(m), len(n)))
    return tuple(u + v for u, v in zip(m, n))


def lift(a):
    """Embed a generator into the monoid (the identity on our representation)."""
    return tuple(a)


def factorizations(m, a):
    """Return ``m_a`` such that ``m = a m_a``, or None when ``a`` is not a prefix."""
    if len(m) != len(a):
        raise ArityMismatch("arity mismatch between {!r} and {!r}".format(m, a))
    rest = []
    for word, letter in zip(m, a):
        if not word.startswith(letter):
            return None
        rest.append(word[len(letter):])
    return tuple(rest)


def split(label, left_arity):
    return label[:left_arity], label[left_arity:]


def is_neutral(m):
    return not any(m)


def format_component(w):
    return w if w else EPSILON_TEXT


def format_word(m):
    """``('ab', '')`` prints as ``ab|\\e``; a one-tape element prints bare."""
    return "|".join(format_component(w) for w in m)


format_label = format_word


def parse_word(text):
    parts = text.strip().split("|")
    words = []
    for part in parts:
        part = part.strip()
        if part == EPSILON_TEXT:
            part = ""
        elif EPSILON_TEXT in part or "\\" in part:
            raise ExpressionSyntaxError("bad word component {!r}".format(part))
        words.append(part)
    return tuple(words)


def parse_label(text):
    label = parse_word(text)
    if any(len(w) > 1 for w in label):
        raise ExpressionSyntaxError(
            "a generator has at most one letter per tape: {!r}".format(text))
    return label
