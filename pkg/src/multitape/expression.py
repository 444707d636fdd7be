"""Multitape weighted rational expressions.

Expressions are hash-consed: building the same normal form twice returns the
very same object, so structural identity is object identity and expressions
can key dictionaries cheaply.  Only the ``mk_*`` smart constructors create
nodes; they apply the trivial identities at the root so that every expression
in existence is in normal form.

``Zero`` and ``One`` carry their tape count explicitly.  Atoms are always
one-tape; multitape expressions come from tupling.
"""

import enum
import threading

from .errors import ArityMismatch, TapeMismatch, UnknownLetter


class Kind(enum.IntEnum):
    # The values give the total order on node kinds.
    ZERO = 0
    ONE = 1
    ATOM = 2
    SUM = 3
    LWEIGHT = 4
    RWEIGHT = 5
    PROD = 6
    STAR = 7
    TUPLE = 8


class Expr:
    __slots__ = ("kind", "arity", "left", "right", "letter", "weight", "key", "_hash")

    def __init__(self, kind, arity, left=None, right=None, letter=None, weight=None):
        self.kind = kind
        self.arity = arity
        self.left = left
        self.right = right
        self.letter = letter
        self.weight = weight
        self.key = _sort_key(self)
        self._hash = hash((kind, arity, letter, weight,
                           left and left._hash, right and right._hash))

    def __hash__(self):
        return self._hash

    # Interning makes identity and structural equality coincide.
    def __eq__(self, other):
        return self is other

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __repr__(self):
        from .syntax import to_string
        return "Expr({!r})".format(to_string(self))

    def __str__(self):
        from .syntax import to_string
        return to_string(self)

    def __reduce__(self):
        return (_rebuild, (self.kind, self.arity, self.left, self.right,
                           self.letter, self.weight))

    @property
    def children(self):
        return tuple(c for c in (self.left, self.right) if c is not None)

    def is_zero(self):
        return self.kind is Kind.ZERO

    def is_one(self):
        return self.kind is Kind.ONE


def _sort_key(e):
    if e.kind in (Kind.ZERO, Kind.ONE):
        return (int(e.kind), e.arity)
    if e.kind is Kind.ATOM:
        return (int(e.kind), e.letter)
    wkey = () if e.weight is None else (e.weight.value,)
    return (int(e.kind),) + tuple(c.key for c in e.children) + wkey


_table = {}
_lock = threading.Lock()


def _intern(kind, arity, left=None, right=None, letter=None, weight=None):
    wkey = None if weight is None else (weight.ks.name, weight.value)
    key = (kind, arity, id(left), id(right), letter, wkey)
    e = _table.get(key)
    if e is not None:
        return e
    with _lock:
        e = _table.get(key)
        if e is None:
            # The table holds the children, so their ids stay valid.
            e = Expr(kind, arity, left, right, letter, weight)
            _table[key] = e
    return e


def _rebuild(kind, arity, left, right, letter, weight):
    return _intern(kind, arity, left, right, letter, weight)


def compare(a, b):
    """Three-way comparison in the canonical expression order."""
    if a is b:
        return 0
    return -1 if a.key < b.key else 1


# Leaves.

def zero(arity=1):
    return _intern(Kind.ZERO, arity)


def one(arity=1):
    """``\\e`` on ``arity`` tapes: the tuple ``\\e|...|\\e`` when ``arity > 1``."""
    e = _intern(Kind.ONE, 1)
    for _ in range(arity - 1):
        e = _intern(Kind.TUPLE, e.arity + 1, e, _intern(Kind.ONE, 1))
    return e


def atom(letter):
    if not isinstance(letter, str) or len(letter) != 1:
        raise ValueError("an atom is a single character, got {!r}".format(letter))
    return _intern(Kind.ATOM, 1, letter=letter)


def _same_arity(op, l, r):
    if l.arity != r.arity:
        raise ArityMismatch("{}: operands have {} and {} tapes ({} and {})".format(
            op, l.arity, r.arity, l, r))


def is_label(e):
    """True for One, atoms and tuples of those: ``G ∪ {1}``."""
    if e.kind in (Kind.ONE, Kind.ATOM):
        return True
    if e.kind is Kind.TUPLE:
        return is_label(e.left) and is_label(e.right)
    return False


def _split_lweight(e):
    """View ``e`` as ``<k>?E``: return (k or None, E)."""
    if e.kind is Kind.LWEIGHT:
        return e.weight, e.left
    return None, e


# Smart constructors.

def mk_sum(l, r):
    _same_arity("sum", l, r)
    if r.is_zero():
        return l
    if l.is_zero():
        return r
    return _intern(Kind.SUM, l.arity, l, r)


def mk_lweight(k, e):
    if k.is_zero() or e.is_zero():
        return zero(e.arity)
    if k.is_one():
        return e
    if e.kind is Kind.LWEIGHT:
        return mk_lweight(k * e.weight, e.left)
    return _intern(Kind.LWEIGHT, e.arity, e, weight=k)


def mk_rweight(e, k):
    if k.is_zero() or e.is_zero():
        return zero(e.arity)
    if k.is_one():
        return e
    if e.kind is Kind.RWEIGHT:
        return mk_rweight(e.left, e.weight * k)
    if e.kind is Kind.LWEIGHT:
        return mk_lweight(e.weight, mk_rweight(e.left, k))
    if is_label(e):
        return mk_lweight(k, e)
    return _intern(Kind.RWEIGHT, e.arity, e, weight=k)


def mk_prod(l, r):
    _same_arity("product", l, r)
    if l.is_zero() or r.is_zero():
        return zero(l.arity)
    k, base = _split_lweight(l)
    if base.is_one():
        return r if k is None else mk_lweight(k, r)
    k, base = _split_lweight(r)
    if base.is_one():
        return l if k is None else mk_rweight(l, k)
    return _intern(Kind.PROD, l.arity, l, r)


def mk_star(e):
    if e.is_zero():
        return one(e.arity)
    return _intern(Kind.STAR, e.arity, e)


def mk_tuple(l, r):
    k, l0 = _split_lweight(l)
    h, r0 = _split_lweight(r)
    # Zero has a single node per arity, which prints as \z|...|\z.
    if l0.is_zero() and r0.is_zero():
        t = zero(l.arity + r.arity)
    else:
        t = _intern(Kind.TUPLE, l.arity + r.arity, l0, r0)
    if k is None and h is None:
        return t
    if k is None:
        return mk_lweight(h, t)
    if h is None:
        return mk_lweight(k, t)
    return mk_lweight(k * h, t)


def mk_label(label):
    """The expression of a generator: a left-nested tuple of atoms and ones."""
    parts = [atom(c) if c else one(1) for c in label]
    e = parts[0]
    for p in parts[1:]:
        e = mk_tuple(e, p)
    return e


def rebuild(e):
    """Reconstruct ``e`` bottom-up through the smart constructors."""
    kind = e.kind
    if kind in (Kind.ZERO, Kind.ONE, Kind.ATOM):
        return e
    if kind is Kind.STAR:
        return mk_star(rebuild(e.left))
    if kind is Kind.LWEIGHT:
        return mk_lweight(e.weight, rebuild(e.left))
    if kind is Kind.RWEIGHT:
        return mk_rweight(rebuild(e.left), e.weight)
    ctor = {Kind.SUM: mk_sum, Kind.PROD: mk_prod, Kind.TUPLE: mk_tuple}[kind]
    return ctor(rebuild(e.left), rebuild(e.right))


# Metrics.

def size(e):
    """Number of symbols (operators, atoms, constants, weights), ignoring parentheses."""
    return 1 + sum(size(c) for c in e.children)


def tape_widths(e):
    """Number of atom occurrences on each tape."""
    kind = e.kind
    if kind in (Kind.ZERO, Kind.ONE):
        return [0] * e.arity
    if kind is Kind.ATOM:
        return [1]
    if kind is Kind.TUPLE:
        return tape_widths(e.left) + tape_widths(e.right)
    if kind in (Kind.SUM, Kind.PROD):
        return [a + b for a, b in zip(tape_widths(e.left), tape_widths(e.right))]
    return tape_widths(e.left)


def width_on_tape(e, i):
    return tape_widths(e)[i]


def width(e):
    return sum(tape_widths(e))


def size_bound(e):
    """Product over tapes of ``width_i + 1``."""
    bound = 1
    for w in tape_widths(e):
        bound *= w + 1
    return bound


def subterms(e):
    """All distinct subexpressions, children before parents."""
    seen = {}
    stack = [(e, False)]
    while stack:
        node, done = stack.pop()
        if node in seen:
            continue
        if done:
            seen[node] = None
            continue
        stack.append((node, True))
        for c in reversed(node.children):
            stack.append((c, False))
    return list(seen)


def letters_by_tape(e, offset=0, acc=None):
    """Map each atom occurrence to its absolute tape: yields (tape, letter)."""
    if acc is None:
        acc = []
    if e.kind is Kind.ATOM:
        acc.append((offset, e.letter))
    elif e.kind is Kind.TUPLE:
        letters_by_tape(e.left, offset, acc)
        letters_by_tape(e.right, offset + e.left.arity, acc)
    else:
        for c in e.children:
            letters_by_tape(c, offset, acc)
    return acc


def validate(e, ctx):
    """Check ``e`` against ``ctx`` and return its tape count.

    Raises TapeMismatch when the tape count differs from the context,
    UnknownLetter when an atom is not in its tape's alphabet and
    NonStarrableConstantTerm when a starred subterm's constant term has no
    star in the semiring.
    """
    from .derivative import constant_term

    if e.arity != ctx.arity:
        raise TapeMismatch("expression {} has {} tape(s), context {} has {}".format(
            e, e.arity, ctx, ctx.arity))
    for tape, letter in letters_by_tape(e):
        if letter not in ctx.tapes[tape]:
            raise UnknownLetter("letter {!r} is not in the alphabet {!r} of tape {}".format(
                letter, ctx.tapes[tape], tape + 1))
    for sub in subterms(e):
        if sub.weight is not None and sub.weight.ks is not ctx.ks:
            raise ValueError("weight {!r} is not in {}".format(sub.weight, ctx.ks))
    # constant_term raises on the first non-starrable star it meets.
    constant_term(e, ctx.ks)
    return e.arity
