"""Constant terms and derivatives of expressions.

This is a second, independent route to the content of an expansion: for
every expression ``E`` and generator ``a``, ``constant_term(E)`` is the
constant term of ``d(E)`` and ``derivative(E, a)`` is ``d(E)(a)``.  The code
deliberately does not call into :mod:`multitape.expansion`.

Derivatives with respect to tuples are not left quotients: see the tests for
a state that accepts ``ab|y`` yet has a null ``a|y`` derivative.
"""

from .errors import ArityMismatch, NonStarrableConstantTerm, StarUndefined
from .expression import Kind, one
from .labels import format_label, split
from .polynomial import (monomial, null, poly_add, poly_lmul_weight,
                         poly_rmul_expr, poly_rmul_weight, poly_tuple, poly_tuple_left_one,
                         poly_tuple_right_one)


def constant_term(e, ks):
    """The weight of the empty word in ``E``.

    Every starred subterm is visited, so this raises
    :class:`NonStarrableConstantTerm` for the first one whose constant term
    has no star.
    """
    kind = e.kind
    if kind is Kind.ZERO or kind is Kind.ATOM:
        return ks.zero
    if kind is Kind.ONE:
        return ks.one
    if kind is Kind.SUM:
        return constant_term(e.left, ks) + constant_term(e.right, ks)
    if kind is Kind.LWEIGHT:
        return e.weight * constant_term(e.left, ks)
    if kind is Kind.RWEIGHT:
        return constant_term(e.left, ks) * e.weight
    if kind is Kind.STAR:
        c = constant_term(e.left, ks)
        try:
            return c.star()
        except StarUndefined:
            raise NonStarrableConstantTerm(e, c) from None
    # Product and tuple.
    return constant_term(e.left, ks) * constant_term(e.right, ks)


def derivative(e, label, ks):
    """The polynomial ``∂_a E`` for a generator ``a`` with as many tapes as ``E``."""
    label = tuple(label)
    if len(label) != e.arity:
        raise ArityMismatch("label {} has {} tape(s), {} has {}".format(
            format_label(label), len(label), e, e.arity))
    if not any(label):
        raise ValueError("cannot derive with respect to the empty label")
    return _derive(e, label, ks)


def _derive(e, label, ks):
    kind = e.kind
    if kind is Kind.ZERO or kind is Kind.ONE:
        return null(e.arity)
    if kind is Kind.ATOM:
        if label == (e.letter,):
            return monomial(one(1), ks.one)
        return null(1)
    if kind is Kind.SUM:
        return poly_add(_derive(e.left, label, ks), _derive(e.right, label, ks))
    if kind is Kind.LWEIGHT:
        return poly_lmul_weight(e.weight, _derive(e.left, label, ks))
    if kind is Kind.RWEIGHT:
        return poly_rmul_weight(_derive(e.left, label, ks), e.weight)
    if kind is Kind.PROD:
        res = poly_rmul_expr(_derive(e.left, label, ks), e.right)
        c = constant_term(e.left, ks)
        if c.is_zero():
            return res
        return poly_add(res, poly_lmul_weight(c, _derive(e.right, label, ks)))
    if kind is Kind.STAR:
        c = constant_term(e, ks)
        return poly_lmul_weight(c, poly_rmul_expr(_derive(e.left, label, ks), e))
    # Tuple: split the label between the operands.
    a, b = split(label, e.left.arity)
    if any(a) and any(b):
        return poly_tuple(_derive(e.left, a, ks), _derive(e.right, b, ks))
    if any(a):
        c = constant_term(e.right, ks)
        return poly_lmul_weight(c, poly_tuple_right_one(_derive(e.left, a, ks), e.right.arity))
    c = constant_term(e.left, ks)
    return poly_lmul_weight(c, poly_tuple_left_one(e.left.arity, _derive(e.right, b, ks)))



