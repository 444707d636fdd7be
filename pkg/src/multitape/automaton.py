"""Weighted multitape automata and the derived-term construction.

States of a derived-term automaton are expressions; thanks to hash-consing,
two derived terms that normalize to the same expression are the same state.
States are numbered in breadth-first discovery order, the initial state
being 0.
"""

import collections
import json

from .errors import ArityMismatch, ExpressionError, SchemaError
from .expansion import Expander
from .expression import Kind, mk_prod, mk_rweight, mk_tuple, one
from .labels import Context, factorizations, format_label
from .syntax import parse, to_string


class Automaton:
    """An automaton whose states are expressions.

    ``transitions`` maps ``(src, label, dst)`` index triples to non-zero
    weights; ``initial`` and ``final`` map state indices to non-zero weights.
    """

    def __init__(self, context, states=(), initial=None, final=None, transitions=None):
        self.context = context
        self.states = list(states)
        self.index = {s: i for i, s in enumerate(self.states)}
        self.initial = dict(initial or {})
        self.final = {q: w for q, w in (final or {}).items() if not w.is_zero()}
        self.transitions = {t: w for t, w in (transitions or {}).items() if not w.is_zero()}
        self._out = None

    def __len__(self):
        return len(self.states)

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return (self.context == other.context and self.states == other.states
                and self.initial == other.initial and self.final == other.final
                and self.transitions == other.transitions)

    def __repr__(self):
        return "<Automaton {} states, {} transitions>".format(
            len(self.states), len(self.transitions))

    def final_weight(self, q):
        return self.final.get(q, self.context.ks.zero)

    def out(self, q):
        """Outgoing ``(label, dst, weight)`` triples of state ``q``, sorted."""
        if self._out is None:
            self._out = collections.defaultdict(list)
            for (src, label, dst), w in sorted(self.transitions.items()):
                self._out[src].append((label, dst, w))
        return self._out.get(q, [])

    def is_proper(self):
        return all(any(label) for _, label, _ in self.transitions)

    def evaluate(self, word):
        """Sum of the weights of all computations labeled by ``word``."""
        return _evaluate(self, self.context, word, self.initial, self.final_weight, self.out)


def _evaluate(aut, ctx, word, initial, final_weight, out):
    word = tuple(word)
    if len(word) != ctx.arity:
        raise ArityMismatch("word has {} tape(s), automaton has {}".format(
            len(word), ctx.arity))
    ks = ctx.ks
    memo = {}

    # The automaton is proper, so every transition consumes at least one
    # letter and the recursion depth is bounded by the word's gradation.
    def value(q, rest):
        key = (q, rest)
        if key in memo:
            return memo[key]
        if not any(rest):
            res = final_weight(q)
        else:
            res = ks.zero
            for label, dst, w in out(q):
                tail = factorizations(rest, label)
                if tail is not None:
                    v = value(dst, tail)
                    if not v.is_zero():
                        res = res + w * v
        memo[key] = res
        return res

    total = ks.zero
    for q, w in sorted(initial.items()):
        total = total + w * value(q, word)
    return total


def derived_term_automaton(e, ctx, expander=None):
    """Build the accessible derived-term automaton of ``e`` with a FIFO worklist."""
    lazy = LazyAutomaton(e, ctx, expander)
    lazy.complete()
    return lazy.freeze()


class LazyAutomaton:
    """Derived-term automaton whose states are expanded on first demand."""

    def __init__(self, e, ctx, expander=None):
        if e.arity != ctx.arity:
            raise ArityMismatch("expression has {} tape(s), context has {}".format(
                e.arity, ctx.arity))
        self.context = ctx
        self.expander = expander or Expander(ctx.ks)
        self.states = [e]
        self.index = {e: 0}
        self.initial = {0: ctx.ks.one}
        self.final = {}
        self.succ = {}
        self._queue = collections.deque([0])

    @property
    def materialized(self):
        """Number of states whose expansion has been computed."""
        return len(self.succ)

    def _state(self, f):
        q = self.index.get(f)
        if q is None:
            q = len(self.states)
            self.states.append(f)
            self.index[f] = q
            self._queue.append(q)
        return q

    def expand(self, q):
        if q not in self.succ:
            x = self.expander(self.states[q])
            self.final[q] = x.constant
            out = []
            for label, p in x.terms.items():
                for f, k in p:
                    out.append((label, self._state(f), k))
            self.succ[q] = out
        return self.succ[q]

    def out(self, q):
        return sorted(self.expand(q))

    def final_weight(self, q):
        self.expand(q)
        return self.final[q]

    def evaluate(self, word):
        return _evaluate(self, self.context, word, self.initial, self.final_weight, self.out)

    def complete(self):
        while self._queue:
            self.expand(self._queue.popleft())
        return self

    def freeze(self):
        """Snapshot of the materialized part as an :class:`Automaton`.

        States are renumbered breadth-first from the initial state, so a
        fully explored lazy automaton equals the eager one whatever order
        its states were demanded in.
        """
        order = [0]
        renum = {0: 0}
        for q in order:
            for _, dst, _ in self.succ.get(q, ()):
                if dst not in renum:
                    renum[dst] = len(order)
                    order.append(dst)
        transitions = {}
        for q, out in self.succ.items():
            for label, dst, k in out:
                transitions[(renum[q], label, renum[dst])] = k
        final = {renum[q]: w for q, w in self.final.items()}
        return Automaton(self.context, [self.states[q] for q in order],
                         {0: self.context.ks.one}, final, transitions)


def _unweighted(e):
    return e.left if e.kind is Kind.LWEIGHT else e


def derived_terms(e):
    """The true derived terms ``TD(E)``, built with the smart constructors.

    Leading left weights are dropped, as they are when a polynomial stores
    a monomial; otherwise ``l<k> => <k>l`` would produce terms that are never
    states.
    """
    return {_unweighted(f) for f in _derived_terms(e)}


def _derived_terms(e):
    kind = e.kind
    if kind in (Kind.ZERO, Kind.ONE):
        return set()
    if kind is Kind.ATOM:
        return {one(1)}
    if kind is Kind.SUM:
        return derived_terms(e.left) | derived_terms(e.right)
    if kind is Kind.LWEIGHT:
        return derived_terms(e.left)
    if kind is Kind.RWEIGHT:
        return {mk_rweight(f, e.weight) for f in derived_terms(e.left)}
    if kind is Kind.PROD:
        return {mk_prod(f, e.right) for f in derived_terms(e.left)} | derived_terms(e.right)
    if kind is Kind.STAR:
        return {mk_prod(f, e) for f in derived_terms(e.left)}
    left, right = derived_terms(e.left), derived_terms(e.right)
    lone, rone = one(e.left.arity), one(e.right.arity)
    return ({mk_tuple(f, g) for f in left for g in right}
            | {mk_tuple(lone, g) for g in right}
            | {mk_tuple(f, rone) for f in left})


def all_derived_terms(e):
    """``D(E) = TD(E) ∪ {E}``."""
    return derived_terms(e) | {e}


# Exports.

def _dot_quote(s):
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', '\\"'))


def _edge_label(label, w):
    text = format_label(label)
    return text if w.is_one() else "<{}>{}".format(w, text)


def to_dot(aut):
    lines = ["digraph", "{", "  rankdir = LR", "  node [shape = circle, style = rounded]"]
    for q in sorted(aut.initial):
        lines.append("  I{} [shape = point, width = 0]".format(q))
    for q in sorted(aut.final):
        lines.append("  F{} [shape = point, width = 0]".format(q))
    for q, s in enumerate(aut.states):
        lines.append("  {} [label = {}, shape = box]".format(q, _dot_quote(to_string(s))))
    for q, w in sorted(aut.initial.items()):
        attr = "" if w.is_one() else " [label = {}]".format(_dot_quote("<{}>".format(w)))
        lines.append("  I{} -> {}{}".format(q, q, attr))
    for q, w in sorted(aut.final.items()):
        attr = "" if w.is_one() else " [label = {}]".format(_dot_quote("<{}>".format(w)))
        lines.append("  {} -> F{}{}".format(q, q, attr))
    edges = collections.defaultdict(list)
    for (src, label, dst), w in sorted(aut.transitions.items()):
        edges[(src, dst)].append(_edge_label(label, w))
    for (src, dst), labels in sorted(edges.items()):
        lines.append("  {} -> {} [label = {}]".format(src, dst, _dot_quote(", ".join(labels))))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(aut):
    data = {
        "context": str(aut.context),
        "states": [to_string(s) for s in aut.states],
        "initial": {str(q): str(w) for q, w in sorted(aut.initial.items())},
        "final": {str(q): str(w) for q, w in sorted(aut.final.items())},
        "transitions": [
            {"src": src, "label": list(label), "dst": dst, "weight": str(w)}
            for (src, label, dst), w in sorted(aut.transitions.items())
        ],
    }
    return json.dumps(data, indent=2, ensure_ascii=False)


def from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("invalid JSON: {}".format(exc)) from None
    try:
        ctx = Context.parse(data["context"])
        ks = ctx.ks
        states = [parse(s, ctx) for s in data["states"]]
        n = len(states)

        def state(q):
            q = int(q)
            if not 0 <= q < n:
                raise SchemaError("state index {} out of range".format(q))
            return q

        initial = {state(q): ks.weight(w) for q, w in data["initial"].items()}
        final = {state(q): ks.weight(w) for q, w in data["final"].items()}
        transitions = {}
        for t in data["transitions"]:
            label = ctx.check(tuple(t["label"]), generator=True)
            transitions[(state(t["src"]), label, state(t["dst"]))] = ks.weight(t["weight"])
    except ExpressionError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise SchemaError("malformed automaton: {}".format(exc)) from None
    if len(set(states)) != n:
        raise SchemaError("duplicate states")
    return Automaton(ctx, states, initial, final, transitions)
