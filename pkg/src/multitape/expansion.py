"""Rational expansions and the expansion of an expression.

An expansion is a constant term plus a map from generators (the *firsts*) to
non-null polynomials.  :func:`expansion_of` computes ``d(E)`` by structural
recursion, one recursive call per subexpression.
"""

from .errors import ArityMismatch, NonStarrableConstantTerm, NotProper, StarUndefined
from .expression import Kind, mk_label, mk_lweight, mk_prod, mk_sum, one
from .labels import format_label, neutral
from .polynomial import (Polynomial, format_polynomial, monomial, poly_add,
                         poly_lmul_weight, poly_rmul_expr, poly_rmul_weight, poly_to_expr,
                         poly_tuple, poly_tuple_left_one, poly_tuple_right_one)


class Expansion:
    __slots__ = ("arity", "constant", "terms")

    def __init__(self, arity, constant, terms=None):
        self.arity = arity
        self.constant = constant
        entries = {}
        for label, p in (terms or {}).items():
            if len(label) != arity:
                raise ArityMismatch("label {} does not have {} tapes".format(
                    format_label(label), arity))
            if not any(label):
                raise ValueError("an expansion cannot map the empty label")
            if p:
                entries[label] = p
        self.terms = dict(sorted(entries.items()))

    @property
    def ks(self):
        return self.constant.ks

    def firsts(self):
        return list(self.terms)

    def __getitem__(self, label):
        return self.terms[label]

    def get(self, label):
        """The polynomial for ``label``, null when it is not a first."""
        p = self.terms.get(label)
        return Polynomial(self.arity) if p is None else p

    def proper(self):
        return Expansion(self.arity, self.ks.zero, self.terms)

    def is_proper(self):
        return self.constant.is_zero()

    def is_null(self):
        return self.constant.is_zero() and not self.terms

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        return (self.arity == other.arity and self.constant == other.constant
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, self.constant, tuple(self.terms.items())))

    def __repr__(self):
        return "Expansion({})".format(format_expansion(self, ascii=True))


def null_expansion(ks, arity):
    return Expansion(arity, ks.zero)


def _check(x, y):
    if x.arity != y.arity:
        raise ArityMismatch("expansions have {} and {} tapes".format(x.arity, y.arity))


def xpn_add(x, y):
    _check(x, y)
    terms = dict(x.terms)
    for label, p in y.terms.items():
        terms[label] = poly_add(terms[label], p) if label in terms else p
    return Expansion(x.arity, x.constant + y.constant, terms)


def xpn_lmul(k, x):
    if k.is_zero():
        return null_expansion(k.ks, x.arity)
    if k.is_one():
        return x
    return Expansion(x.arity, k * x.constant,
                     {a: poly_lmul_weight(k, p) for a, p in x.terms.items()})


def xpn_rmul(x, k):
    if k.is_zero():
        return null_expansion(k.ks, x.arity)
    if k.is_one():
        return x
    return Expansion(x.arity, x.constant * k,
                     {a: poly_rmul_weight(p, k) for a, p in x.terms.items()})


def xpn_rmul_expr(x, e):
    """``X·E`` for a proper ``X``."""
    if not x.is_proper():
        raise NotProper("cannot right-multiply an expansion with constant term {}".format(
            x.constant))
    if x.arity != e.arity:
        raise ArityMismatch("cannot multiply a {}-tape expansion by {}-tape {}".format(
            x.arity, e.arity, e))
    return Expansion(x.arity, x.constant,
                     {a: poly_rmul_expr(p, e) for a, p in x.terms.items()})


def xpn_tuple(x, y):
    nx, ny = neutral(x.arity), neutral(y.arity)
    terms = {}

    def put(label, p):
        terms[label] = poly_add(terms[label], p) if label in terms else p

    if not x.constant.is_zero():
        for b, q in y.terms.items():
            put(nx + b, poly_lmul_weight(x.constant, poly_tuple_left_one(x.arity, q)))
    if not y.constant.is_zero():
        for a, p in x.terms.items():
            put(a + ny, poly_lmul_weight(y.constant, poly_tuple_right_one(p, y.arity)))
    for a, p in x.terms.items():
        for b, q in y.terms.items():
            put(a + b, poly_tuple(p, q))
    return Expansion(x.arity + y.arity, x.constant * y.constant, terms)


class Expander:
    """Computes expansions over one semiring, memoized per expression."""

    def __init__(self, ks):
        self.ks = ks
        self.memo = {}

    def __call__(self, e):
        x = self.memo.get(e)
        if x is None:
            x = self._expand(e)
            self.memo[e] = x
        return x

    def _expand(self, e):
        ks = self.ks
        kind = e.kind
        if kind is Kind.ZERO:
            return Expansion(e.arity, ks.zero)
        if kind is Kind.ONE:
            return Expansion(e.arity, ks.one)
        if kind is Kind.ATOM:
            return Expansion(1, ks.zero, {(e.letter,): monomial(one(1), ks.one)})
        if kind is Kind.SUM:
            return xpn_add(self(e.left), self(e.right))
        if kind is Kind.LWEIGHT:
            return xpn_lmul(e.weight, self(e.left))
        if kind is Kind.RWEIGHT:
            return xpn_rmul(self(e.left), e.weight)
        if kind is Kind.PROD:
            x = self(e.left)
            res = xpn_rmul_expr(x.proper(), e.right)
            if not x.constant.is_zero():
                res = xpn_add(res, xpn_lmul(x.constant, self(e.right)))
            return res
        if kind is Kind.STAR:
            x = self(e.left)
            try:
                c = x.constant.star()
            except StarUndefined:
                raise NonStarrableConstantTerm(e, x.constant) from None
            # e itself is reused as the right factor.
            res = xpn_rmul_expr(x.proper(), e)
            if c.is_one():
                return Expansion(e.arity, c, res.terms)
            return xpn_add(Expansion(e.arity, c), xpn_lmul(c, res))
        return xpn_tuple(self(e.left), self(e.right))


def expansion_of(e, ks, expander=None):
    """``d(E)``; pass an :class:`Expander` to share its memo across calls."""
    if expander is None:
        expander = Expander(ks)
    return expander(e)


def xpn_to_expr(x):
    """Project to ``<Xε>1 + a1·[P1] + ...`` in label order."""
    e = mk_lweight(x.constant, one(x.arity))
    for label, p in x.terms.items():
        e = mk_sum(e, mk_prod(mk_label(label), poly_to_expr(p)))
    return e


def xpn_terms(x):
    return {f for p in x.terms.values() for f in p.terms()}


def format_expansion(x, ascii=False):
    oplus, odot = (" (+) ", "(.)") if ascii else (" ⊕ ", "⊙")
    parts = []
    if not x.constant.is_zero() or not x.terms:
        parts.append("<{}>".format(x.constant))
    for label, p in x.terms.items():
        parts.append("{}{}[{}]".format(format_label(label), odot, format_polynomial(p, ascii)))
    return oplus.join(parts)
