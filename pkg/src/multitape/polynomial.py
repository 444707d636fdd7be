"""Polynomials of expressions: finite left-linear combinations ``⊕ <k_i>⊙E_i``."""

from .errors import ArityMismatch
from .expression import Kind, mk_lweight, mk_prod, mk_rweight, mk_sum, mk_tuple, one, zero
from .syntax import to_string


class Polynomial:
    """Immutable map from expressions to non-zero weights.

    Monomials are kept sorted in the canonical expression order and never
    hold ``\\z`` or a zero weight.  A leading left weight of an expression
    is moved into its coefficient: ``<h>⊙(<k>F)`` is stored as ``<hk>⊙F``.
    """

    __slots__ = ("arity", "monomials", "_index")

    def __init__(self, arity, monomials=()):
        acc = {}
        for e, k in monomials:
            if e.arity != arity:
                raise ArityMismatch("monomial {} has {} tape(s), polynomial has {}".format(
                    e, e.arity, arity))
            if e.is_zero():
                continue
            if e.kind is Kind.LWEIGHT:
                e, k = e.left, k * e.weight
            acc[e] = acc[e] + k if e in acc else k
        self.arity = arity
        self.monomials = tuple(sorted(((e, k) for e, k in acc.items() if not k.is_zero()),
                                      key=lambda m: m[0].key))
        self._index = dict(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __len__(self):
        return len(self.monomials)

    def __bool__(self):
        return bool(self.monomials)

    def __getitem__(self, e):
        return self._index[e]

    def __contains__(self, e):
        return e in self._index

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self.monomials == other.monomials

    def __hash__(self):
        return hash((self.arity, self.monomials))

    def __repr__(self):
        return "Polynomial({})".format(format_polynomial(self, ascii=True))

    def terms(self):
        return [e for e, _ in self.monomials]


def null(arity):
    return Polynomial(arity)


def monomial(e, k):
    return Polynomial(e.arity, [(e, k)])


def _check(p, q):
    if p.arity != q.arity:
        raise ArityMismatch("polynomials have {} and {} tapes".format(p.arity, q.arity))


def poly_add(p, q):
    _check(p, q)
    if not p:
        return q
    if not q:
        return p
    return Polynomial(p.arity, p.monomials + q.monomials)


def poly_sum(arity, polys):
    return Polynomial(arity, [m for p in polys for m in p.monomials])


def poly_rmul_expr(p, f):
    """``P·F``: right-multiply every expression by ``F``."""
    if p.arity != f.arity:
        raise ArityMismatch("cannot multiply a {}-tape polynomial by {}-tape {}".format(
            p.arity, f.arity, f))
    return Polynomial(p.arity, [(mk_prod(e, f), k) for e, k in p])


def poly_lmul_weight(k, p):
    if k.is_zero():
        return null(p.arity)
    if k.is_one():
        return p
    return Polynomial(p.arity, [(e, k * h) for e, h in p])


def poly_rmul_weight(p, k):
    """``P<k>``: the weight goes inside each expression."""
    if k.is_zero():
        return null(p.arity)
    if k.is_one():
        return p
    return Polynomial(p.arity, [(mk_rweight(e, k), h) for e, h in p])


def poly_tuple(p, q):
    return Polynomial(p.arity + q.arity,
                      [(mk_tuple(e, f), k * h) for e, k in p for f, h in q])


def poly_tuple_right_one(p, arity):
    """``P ⊗ 1`` with a ``arity``-tape one on the right."""
    u = one(arity)
    return Polynomial(p.arity + arity, [(mk_tuple(e, u), k) for e, k in p])


def poly_tuple_left_one(arity, p):
    """``1 ⊗ P`` with a ``arity``-tape one on the left."""
    u = one(arity)
    return Polynomial(arity + p.arity, [(mk_tuple(u, e), k) for e, k in p])


def poly_to_expr(p):
    """Project to the expression ``<k1>E1 + ... + <kn>En`` (``\\z`` if null)."""
    e = zero(p.arity)
    for f, k in p:
        e = mk_sum(e, mk_lweight(k, f))
    return e


def poly_terms(p):
    return set(p.terms())


def format_monomial(e, k, ascii=False):
    if k.is_one():
        return to_string(e)
    return "<{}>{}{}".format(k, "(.)" if ascii else "⊙", to_string(e))


def format_polynomial(p, ascii=False):
    if not p:
        return "\\z"
    sep = " (+) " if ascii else " ⊕ "
    return sep.join(format_monomial(e, k, ascii) for e, k in p)
