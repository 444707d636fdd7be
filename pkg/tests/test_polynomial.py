import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import WEIGHTS, context, random_expression
from multitape.errors import ArityMismatch
from multitape.expression import atom, mk_lweight, mk_prod, mk_rweight, mk_star, mk_tuple, one
from multitape.labels import Context
from multitape.oracle import series_of_expr
from multitape.polynomial import (Polynomial, format_polynomial, monomial, null, poly_add,
                                  poly_lmul_weight, poly_rmul_expr, poly_rmul_weight,
                                  poly_terms, poly_to_expr, poly_tuple, poly_tuple_left_one,
                                  poly_tuple_right_one)
from multitape.semiring import Q, Z
from multitape.syntax import parse, to_string

a, b, c, x, y = (atom(ch) for ch in "abcxy")


def w(v):
    return Q.weight(v)


def test_add_cancels():
    p = poly_add(monomial(b, Z.one), monomial(b, Z.weight(-1)))
    assert p == null(1) and not p
    q = monomial(a, w(2))
    assert poly_add(q, null(1)) == q
    with pytest.raises(ArityMismatch):
        poly_add(q, null(2))


def test_two_monomials():
    ctx = Context.parse("tapes=cde;xy")
    p = poly_add(monomial(parse("ce*|y", ctx), w(2)), monomial(parse("de*|\\e", ctx), w(4)))
    assert len(p) == 2
    assert to_string(poly_to_expr(p)) == "<2>(ce*|y)+<4>(de*|\\e)"


def test_rmul_expr():
    astar = mk_star(a)
    assert poly_rmul_expr(monomial(one(), w(1)), astar) == monomial(astar, w(1))
    assert poly_rmul_expr(null(1), c) == null(1)
    p = Polynomial(1, [(a, w(2)), (b, w(3))])
    assert poly_rmul_expr(p, c) == Polynomial(1, [(mk_prod(a, c), w(2)), (mk_prod(b, c), w(3))])


def test_weights():
    p = monomial(a, w(3))
    assert poly_lmul_weight(w(0), p) == null(1)
    assert poly_lmul_weight(w(2), p) == monomial(a, w(6))
    ab = mk_prod(a, b)
    assert poly_rmul_weight(monomial(ab, w(2)), w(3)) == monomial(mk_rweight(ab, w(3)), w(2))


def test_leading_weight_moves_to_coefficient():
    assert monomial(mk_lweight(w(3), a), w(2)) == monomial(a, w(6))
    # a<3> is normalized to <3>a
    assert poly_rmul_weight(monomial(a, w(2)), w(3)) == monomial(a, w(6))


def test_tuples():
    p, q = monomial(a, w(2)), monomial(x, w(3))
    assert poly_tuple(p, q) == monomial(mk_tuple(a, x), w(6))
    assert poly_tuple(null(1), q) == null(2)
    astar = mk_star(a)
    assert poly_tuple_right_one(monomial(astar, w(1)), 1) == monomial(mk_tuple(astar, one()), w(1))
    assert poly_tuple_left_one(2, q) == monomial(mk_tuple(one(2), x), w(3))


def test_projection():
    assert to_string(poly_to_expr(null(1))) == "\\z"
    assert poly_to_expr(monomial(a, w(1))) is a
    assert poly_terms(Polynomial(1, [(a, w(2)), (b, w(1))])) == {a, b}


def test_format():
    p = Polynomial(1, [(b, w(1)), (a, w("1/2"))])
    assert format_polynomial(p) == "<1/2>⊙a ⊕ b"
    assert format_polynomial(p, ascii=True) == "<1/2>(.)a (+) b"
    assert format_polynomial(null(1)) == "\\z"


def random_polynomial(rng, ctx):
    return Polynomial(ctx.arity, [(random_expression(rng, ctx, 3, 3), ctx.ks.weight(rng.choice(WEIGHTS)))
                                  for _ in range(rng.randint(0, 3))])


def sem(e, ctx, bound=4):
    return series_of_expr(e, ctx.ks, bound)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 2))
def test_lemma_polynomial_semantics(seed, ntapes):
    rng = random.Random(seed)
    ctx = context(ntapes)
    p, q = random_polynomial(rng, ctx), random_polynomial(rng, ctx)
    f = random_expression(rng, ctx, 3, 3)
    k = ctx.ks.weight(rng.choice(WEIGHTS))
    sp = sem(poly_to_expr(p), ctx)
    assert sem(poly_to_expr(poly_rmul_expr(p, f)), ctx) == sp * sem(f, ctx)
    assert sem(poly_to_expr(poly_lmul_weight(k, p)), ctx) == sp.lmul(k)
    assert sem(poly_to_expr(poly_rmul_weight(p, k)), ctx) == sp.rmul(k)
    assert sem(poly_to_expr(poly_add(p, q)), ctx) == sp + sem(poly_to_expr(q), ctx)
    assert poly_add(p, q) == poly_add(q, p)
    pq = poly_tuple(p, q)
    assert sem(poly_to_expr(pq), context(2 * ntapes, tapes=ctx.tapes * 2)) == \
        sp.tuple(sem(poly_to_expr(q), ctx))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_add_associative(seed):
    rng = random.Random(seed)
    ctx = context(1)
    p, q, r = (random_polynomial(rng, ctx) for _ in range(3))
    assert poly_add(poly_add(p, q), r) == poly_add(p, poly_add(q, r))
