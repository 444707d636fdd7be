"""Text syntax for expressions.

Grammar, loosest operator first::

    sum     := tuple ('+' tuple)*
    tuple   := prod ('|' prod)*
    prod    := unary unary*                  juxtaposition
    unary   := '<' weight '>' unary | postfix
    postfix := primary ('*' | '{+}' | '<' weight '>')*
    primary := '(' sum ')' | '\\z' | '\\e' | letter

All binary operators associate to the left.  ``E{+}`` stands for ``EE*``.

``\\z`` and ``\\e`` have no intrinsic tape count; it is inferred from the
surrounding operators and, failing that, from the context.  Inside a tuple
whose two operands are both made of constants only, the right operand gets
its minimal tape count and the left one the rest.
"""

from .errors import ExpressionSyntaxError, TapeMismatch, UnknownLetter
from .expression import (Kind, atom, mk_lweight, mk_prod, mk_rweight, mk_star,
                         mk_sum, mk_tuple, one, zero)

_SPECIAL = set("()+|*<>{}\\")


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def error(self, message, pos=None):
        return ExpressionSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        if self.pos >= len(self.text):
            return None
        if self.text.startswith("{+}", self.pos):
            return "{+}"
        if self.text[self.pos] == "\\":
            return self.text[self.pos:self.pos + 2]
        return self.text[self.pos]

    def eat(self, token):
        if self.peek() != token:
            raise self.error("expected {!r}".format(token))
        self.pos += len(token)

    def parse(self):
        tree = self.sum()
        if self.peek() is not None:
            raise self.error("unexpected {!r}".format(self.peek()))
        return tree

    def sum(self):
        tree = self.tuple()
        while self.peek() == "+":
            self.eat("+")
            tree = ("sum", tree, self.tuple())
        return tree

    def tuple(self):
        tree = self.prod()
        while self.peek() == "|":
            self.eat("|")
            tree = ("tuple", tree, self.prod())
        return tree

    def starts_unary(self, tok):
        if tok is None:
            return False
        return tok in ("(", "<", "\\z", "\\e") or tok[0] not in _SPECIAL

    def prod(self):
        if not self.starts_unary(self.peek()):
            raise self.error("expected an expression")
        tree = self.unary()
        while self.starts_unary(self.peek()):
            tree = ("prod", tree, self.unary())
        return tree

    def weight(self):
        start = self.pos
        self.eat("<")
        end = self.text.find(">", self.pos)
        if end < 0:
            raise self.error("unterminated weight", start)
        literal = self.text[self.pos:end]
        try:
            w = self.ctx.ks.weight(literal)
        except (ValueError, ZeroDivisionError):
            raise self.error("invalid weight {!r} for {}".format(literal, self.ctx.ks),
                             start) from None
        self.pos = end + 1
        return w

    def unary(self):
        if self.peek() == "<":
            w = self.weight()
            return ("lweight", w, self.unary())
        return self.postfix()

    def postfix(self):
        tree = self.primary()
        while True:
            tok = self.peek()
            if tok == "*":
                self.eat("*")
                tree = ("star", tree)
            elif tok == "{+}":
                self.eat("{+}")
                tree = ("plus", tree)
            elif tok == "<":
                tree = ("rweight", tree, self.weight())
            else:
                return tree

    def primary(self):
        tok = self.peek()
        if tok == "(":
            self.eat("(")
            tree = self.sum()
            self.eat(")")
            return tree
        if tok == "\\z":
            self.eat(tok)
            return ("zero",)
        if tok == "\\e":
            self.eat(tok)
            return ("one",)
        if tok is None or tok[0] in _SPECIAL:
            raise self.error("expected an expression")
        if tok not in self.ctx.letters:
            raise UnknownLetter("letter {!r} at position {} is in no alphabet of {}".format(
                tok, self.pos, self.ctx))
        self.eat(tok)
        return ("atom", tok)


def _fixed_arity(tree):
    """Tape count determined bottom-up, or None when only constants decide it."""
    tag = tree[0]
    if tag in ("zero", "one"):
        return None
    if tag == "atom":
        return 1
    if tag in ("sum", "prod"):
        l, r = _fixed_arity(tree[1]), _fixed_arity(tree[2])
        if l is not None and r is not None and l != r:
            raise TapeMismatch("operands of a {} have {} and {} tapes".format(tag, l, r))
        return l if l is not None else r
    if tag == "tuple":
        l, r = _fixed_arity(tree[1]), _fixed_arity(tree[2])
        return None if l is None or r is None else l + r
    if tag == "lweight":
        return _fixed_arity(tree[2])
    return _fixed_arity(tree[1])


def _min_arity(tree):
    tag = tree[0]
    if tag in ("zero", "one", "atom"):
        return 1
    if tag == "sum" or tag == "prod":
        return max(_min_arity(tree[1]), _min_arity(tree[2]))
    if tag == "tuple":
        return _min_arity(tree[1]) + _min_arity(tree[2])
    if tag == "lweight":
        return _min_arity(tree[2])
    return _min_arity(tree[1])


def _build(tree, n):
    tag = tree[0]
    fixed = _fixed_arity(tree)
    if fixed is not None and fixed != n:
        raise TapeMismatch("subexpression has {} tape(s) where {} are needed".format(fixed, n))
    if n < _min_arity(tree):
        raise TapeMismatch("subexpression needs at least {} tapes, got {}".format(
            _min_arity(tree), n))
    if tag == "zero":
        return zero(n)
    if tag == "one":
        return one(n)
    if tag == "atom":
        return atom(tree[1])
    if tag == "sum":
        return mk_sum(_build(tree[1], n), _build(tree[2], n))
    if tag == "prod":
        return mk_prod(_build(tree[1], n), _build(tree[2], n))
    if tag == "lweight":
        return mk_lweight(tree[1], _build(tree[2], n))
    if tag == "rweight":
        return mk_rweight(_build(tree[1], n), tree[2])
    if tag == "star":
        return mk_star(_build(tree[1], n))
    if tag == "plus":
        e = _build(tree[1], n)
        return mk_prod(e, mk_star(e))
    l, r = tree[1], tree[2]
    fl, fr = _fixed_arity(l), _fixed_arity(r)
    if fl is not None:
        nl = fl
    elif fr is not None:
        nl = n - fr
    else:
        nl = n - _min_arity(r)
    if nl < 1 or n - nl < 1:
        raise TapeMismatch("a tuple needs at least one tape on each side")
    return mk_tuple(_build(l, nl), _build(r, n - nl))


def parse(text, ctx):
    """Parse ``text`` into a normal-form expression over ``ctx``.

    The tape count is that of the expression when its atoms determine it,
    otherwise that of the context.  Use :func:`multitape.expression.validate`
    to check the result against the context.
    """
    tree = _Parser(text, ctx).parse()
    n = _fixed_arity(tree)
    return _build(tree, ctx.arity if n is None else n)


# Printing.

_SUM, _TUPLE, _PROD, _UNARY, _POSTFIX, _ATOMIC = range(6)

_LEVEL = {
    Kind.ZERO: _ATOMIC, Kind.ONE: _ATOMIC, Kind.ATOM: _ATOMIC,
    Kind.SUM: _SUM, Kind.TUPLE: _TUPLE, Kind.PROD: _PROD,
    Kind.LWEIGHT: _UNARY, Kind.RWEIGHT: _POSTFIX, Kind.STAR: _POSTFIX,
}


def _level(e):
    # A k-tape \z prints as a tuple.
    if e.kind is Kind.ZERO and e.arity > 1:
        return _TUPLE
    return _LEVEL[e.kind]


def _wrap(e, level):
    s = to_string(e)
    return "(" + s + ")" if _level(e) < level else s


def to_string(e):
    """Canonical text of ``e``, with minimal parentheses."""
    kind = e.kind
    if kind is Kind.ZERO:
        return "|".join(["\\z"] * e.arity)
    if kind is Kind.ONE:
        return "\\e"
    if kind is Kind.ATOM:
        return e.letter
    if kind is Kind.SUM:
        return _wrap(e.left, _SUM) + "+" + _wrap(e.right, _TUPLE)
    if kind is Kind.TUPLE:
        return _wrap(e.left, _TUPLE) + "|" + _wrap(e.right, _PROD)
    if kind is Kind.PROD:
        # A '<' right after an operand is read as its postfix weight.
        return _wrap(e.left, _PROD) + _wrap(e.right, _POSTFIX)
    if kind is Kind.LWEIGHT:
        return "<{}>".format(e.weight) + _wrap(e.left, _UNARY)
    if kind is Kind.RWEIGHT:
        return _wrap(e.left, _POSTFIX) + "<{}>".format(e.weight)
    return _wrap(e.left, _POSTFIX) + "*"
