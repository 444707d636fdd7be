"""Reference semantics by truncated power series.

A :class:`TruncatedSeries` holds the exact coefficients of every monoid
element up to a gradation bound.  Expressions are interpreted by structural
recursion and automata by path enumeration, without going through
expansions or derivatives, so the results can be used as ground truth for
the derived-term construction.
"""

import itertools

from .errors import ArityMismatch, NonStarrableConstantTerm, StarUndefined
from .expression import Kind
from .labels import concat, format_word, gradation, neutral


class TruncatedSeries:
    """Coefficients of the elements of gradation at most ``bound``.

    Zero coefficients are not stored.
    """

    __slots__ = ("ks", "arity", "bound", "coeffs")

    def __init__(self, ks, arity, bound, coeffs=None):
        self.ks = ks
        self.arity = arity
        self.bound = bound
        self.coeffs = {}
        for m, w in (coeffs or {}).items():
            if len(m) != arity:
                raise ArityMismatch("element {!r} does not have {} tapes".format(m, arity))
            if gradation(m) <= bound and not w.is_zero():
                self.coeffs[m] = w

    def __getitem__(self, m):
        return self.coeffs.get(tuple(m), self.ks.zero)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ks is other.ks and self.arity == other.arity
                and self.bound == other.bound and self.coeffs == other.coeffs)

    def __repr__(self):
        items = ", ".join("{}: {}".format(format_word(m), k)
                          for m, k in sorted(self.coeffs.items(),
                                             key=lambda mk: element_order(mk[0])))
        return "TruncatedSeries({{{}}}, bound={})".format(items, self.bound)

    @property
    def constant(self):
        return self[neutral(self.arity)]

    def proper(self):
        eps = neutral(self.arity)
        return self._new({m: w for m, w in self.coeffs.items() if m != eps})

    def _new(self, coeffs, arity=None):
        return TruncatedSeries(self.ks, self.arity if arity is None else arity,
                               self.bound, coeffs)

    def _check(self, other):
        if self.ks is not other.ks or self.bound != other.bound:
            raise ValueError("series over different semirings or bounds")

    def __add__(self, other):
        self._check(other)
        if self.arity != other.arity:
            raise ArityMismatch("cannot add series with {} and {} tapes".format(
                self.arity, other.arity))
        coeffs = dict(self.coeffs)
        for m, w in other.coeffs.items():
            coeffs[m] = coeffs[m] + w if m in coeffs else w
        return self._new(coeffs)

    def lmul(self, k):
        return self._new({m: k * w for m, w in self.coeffs.items()})

    def rmul(self, k):
        return self._new({m: w * k for m, w in self.coeffs.items()})

    def __mul__(self, other):
        """Cauchy product, truncated."""
        self._check(other)
        if self.arity != other.arity:
            raise ArityMismatch("cannot multiply series with {} and {} tapes".format(
                self.arity, other.arity))
        coeffs = {}
        for u, s in self.coeffs.items():
            room = self.bound - gradation(u)
            for v, t in other.coeffs.items():
                if gradation(v) <= room:
                    m = concat(u, v)
                    w = s * t
                    coeffs[m] = coeffs[m] + w if m in coeffs else w
        return self._new(coeffs)

    def star(self):
        """``s* = c* + c* s_p s*``, iterated until every level is pinned."""
        cstar = self.constant.star()
        unit = self._new({neutral(self.arity): cstar})
        sp = self.proper().lmul(cstar)
        x = self._new({})
        # Each pass fixes one more gradation level.
        for _ in range(self.bound + 2):
            nxt = unit + sp * x
            if nxt == x:
                return x
            x = nxt
        raise AssertionError("star development did not stabilize")

    def tuple(self, other):
        self._check(other)
        coeffs = {}
        for m, s in self.coeffs.items():
            room = self.bound - gradation(m)
            for n, t in other.coeffs.items():
                if gradation(n) <= room:
                    coeffs[m + n] = s * t
        return self._new(coeffs, self.arity + other.arity)


def element_order(m):
    """Sort key: gradation first, then labels."""
    return (gradation(m), m)


def elements(tapes, bound):
    """Every monoid element over ``tapes`` with gradation at most ``bound``."""
    out = []
    for lengths in itertools.product(range(bound + 1), repeat=len(tapes)):
        if sum(lengths) > bound:
            continue
        words = [["".join(w) for w in itertools.product(alpha, repeat=n)]
                 for alpha, n in zip(tapes, lengths)]
        out.extend(itertools.product(*words))
    return sorted(out, key=element_order)


def series_of_expr(e, ks, bound):
    """The series denoted by ``e``, truncated at ``bound``."""
    memo = {}

    def sem(f):
        s = memo.get(f)
        if s is None:
            s = _sem(f, sem, ks, bound)
            memo[f] = s
        return s

    return sem(e)


def _sem(e, sem, ks, bound):
    kind = e.kind
    if kind is Kind.ZERO:
        return TruncatedSeries(ks, e.arity, bound)
    if kind is Kind.ONE:
        return TruncatedSeries(ks, e.arity, bound, {neutral(e.arity): ks.one})
    if kind is Kind.ATOM:
        return TruncatedSeries(ks, 1, bound, {(e.letter,): ks.one})
    if kind is Kind.SUM:
        return sem(e.left) + sem(e.right)
    if kind is Kind.LWEIGHT:
        return sem(e.left).lmul(e.weight)
    if kind is Kind.RWEIGHT:
        return sem(e.left).rmul(e.weight)
    if kind is Kind.PROD:
        return sem(e.left) * sem(e.right)
    if kind is Kind.STAR:
        s = sem(e.left)
        try:
            return s.star()
        except StarUndefined:
            raise NonStarrableConstantTerm(e, s.constant) from None
    return sem(e.left).tuple(sem(e.right))


def series_of_automaton(aut, bound):
    """Behavior of ``aut`` up to ``bound``, by enumerating computations.

    The automaton must be proper: then a computation of length n has a label
    of gradation at least n, and paths of at most ``bound`` transitions
    cover every element of gradation at most ``bound``.
    """
    ctx = aut.context
    ks = ctx.ks
    out = {}
    for (src, label, dst), w in aut.transitions.items():
        if not any(label):
            raise ValueError("automaton is not proper")
        out.setdefault(src, []).append((label, dst, w))
    eps = neutral(ctx.arity)
    frontier = {(q, eps): w for q, w in aut.initial.items() if not w.is_zero()}
    coeffs = {}
    while frontier:
        nxt = {}
        for (q, m), w in frontier.items():
            t = aut.final.get(q)
            if t is not None:
                v = w * t
                coeffs[m] = coeffs[m] + v if m in coeffs else v
            for label, dst, k in out.get(q, ()):
                m2 = concat(m, label)
                if gradation(m2) <= bound:
                    key = (dst, m2)
                    v = w * k
                    nxt[key] = nxt[key] + v if key in nxt else v
        frontier = nxt
    return TruncatedSeries(ks, ctx.arity, bound, coeffs)


def series_of(x, ks, bound):
    if hasattr(x, "transitions"):
        return series_of_automaton(x, bound)
    return series_of_expr(x, ks, bound)


def bounded_equiv(x, y, ks, bound):
    """Compare two expressions or automata up to ``bound``.

    Returns None when the truncated series agree, otherwise the first
    differing element in gradation-then-label order.
    """
    s, t = series_of(x, ks, bound), series_of(y, ks, bound)
    if s.arity != t.arity:
        raise ArityMismatch("cannot compare {}-tape and {}-tape series".format(
            s.arity, t.arity))
    diff = [m for m in set(s.coeffs) | set(t.coeffs) if s[m] != t[m]]
    if not diff:
        return None
    return min(diff, key=element_order)
