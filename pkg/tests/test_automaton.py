import json

import pytest
from hypothesis import given, settings

from generators import context
from multitape.automaton import (Automaton, LazyAutomaton, all_derived_terms,
                                 derived_term_automaton, derived_terms, from_json, to_dot, to_json)
from multitape.errors import ArityMismatch, SchemaError, UnknownLetter
from multitape.expression import atom, mk_star, one, size_bound
from multitape.labels import Context
from multitape.oracle import elements, series_of_expr
from multitape.syntax import parse, to_string
from strategies import expressions

AB_XY = Context.parse("tapes=ab;xy,weights=q")
E2_TEXT = "(a{+}|x+b{+}|y)*"
E2 = parse(E2_TEXT, AB_XY)
FA = parse("(a*|\\e)" + E2_TEXT, AB_XY)
FB = parse("(b*|\\e)" + E2_TEXT, AB_XY)


def transitions(aut):
    return {(aut.states[s], label, aut.states[d]): str(w)
            for (s, label, d), w in aut.transitions.items()}


def test_e2_automaton():
    aut = derived_term_automaton(E2, AB_XY)
    assert aut.states == [E2, FA, FB]
    assert aut.initial == {0: AB_XY.ks.one}
    assert {q: str(w) for q, w in aut.final.items()} == {0: "1", 1: "1", 2: "1"}
    assert transitions(aut) == {
        (E2, ("a", "x"), FA): "1", (E2, ("b", "y"), FB): "1",
        (FA, ("a", ""), FA): "1", (FA, ("a", "x"), FA): "1", (FA, ("b", "y"), FB): "1",
        (FB, ("b", ""), FB): "1", (FB, ("b", "y"), FB): "1", (FB, ("a", "x"), FA): "1",
    }
    assert aut.is_proper()


def family(k):
    letters = "abcd"[:k]
    ctx = Context.parse("tapes={},weights=b".format(";".join(letters)))
    return ctx, parse("|".join(c + "*" for c in letters), ctx)


@pytest.mark.parametrize("k, n", [(1, 1), (2, 3), (3, 7), (4, 15)])
def test_star_tuple_family(k, n):
    ctx, e = family(k)
    aut = derived_term_automaton(e, ctx)
    assert len(aut) == n == 2 ** k - 1
    assert len(derived_terms(e)) <= size_bound(e) == 2 ** k


def test_three_tape_states():
    ctx, e = family(3)
    names = {to_string(s) for s in derived_term_automaton(e, ctx).states}
    assert names == {"a*|b*|c*", "a*|b*|\\e", "a*|\\e|c*", "a*|\\e|\\e",
                     "\\e|b*|c*", "\\e|b*|\\e", "\\e|\\e|c*"}


def test_e2_prime_automaton_is_larger():
    e2p = parse("((a|\\e){+}(\\e|x)+(b|\\e){+}(\\e|y))*", AB_XY)
    aut = derived_term_automaton(e2p, AB_XY)
    assert len(aut) == 4
    # Reading a|\\e leaves \\e|\\e in front, and no identity removes it.
    assert to_string(aut.states[1]).startswith("(\\e|\\e)(a|\\e)*")


def test_zero_automaton():
    ctx = Context.parse("tapes=a")
    aut = derived_term_automaton(parse("\\z", ctx), ctx)
    assert len(aut) == 1 and not aut.transitions and not aut.final
    assert aut.final_weight(0) == ctx.ks.zero


def test_evaluate():
    aut = derived_term_automaton(E2, AB_XY)
    assert str(aut.evaluate(("", ""))) == "1"
    assert str(aut.evaluate(("ab", "xy"))) == "1"
    assert str(aut.evaluate(("a", "y"))) == "0"
    assert str(aut.evaluate(("ac", "x"))) == "0"
    with pytest.raises(ArityMismatch):
        aut.evaluate(("a",))


def test_lazy_materialization():
    lazy = LazyAutomaton(E2, AB_XY)
    assert str(lazy.evaluate(("", ""))) == "1"
    assert lazy.materialized == 1
    lazy = LazyAutomaton(E2, AB_XY)
    assert str(lazy.evaluate(("ab", "xy"))) == "1"
    assert lazy.materialized <= 3
    assert lazy.complete().freeze() == derived_term_automaton(E2, AB_XY)


def test_derived_terms():
    a = atom("a")
    assert derived_terms(a) == {one()}
    assert derived_terms(mk_star(a)) == {mk_star(a)}
    ctx = Context.parse("tapes=ab;xy")
    assert derived_terms(E2) == {FA, FB, parse("(\\e|\\e)" + E2_TEXT, ctx)}
    assert E2 in all_derived_terms(E2)


def test_derived_terms_drop_leading_weights():
    ctx = Context.parse("tapes=ab")
    e = parse("(<2>ab)<1/2>", ctx)
    aut = derived_term_automaton(e, ctx)
    assert {to_string(s) for s in aut.states} == {"(<2>ab)<1/2>", "b", "\\e"}
    assert set(aut.states) <= all_derived_terms(e)


def test_dot():
    aut = derived_term_automaton(E2, AB_XY)
    text = to_dot(aut)
    assert text == to_dot(derived_term_automaton(E2, AB_XY))
    assert text.startswith("digraph\n{\n  rankdir = LR")
    assert '0 [label = "(aa*|x+bb*|y)*", shape = box]' in text
    assert '1 -> 1 [label = "a|\\\\e, a|x"]' in text
    assert "I0 -> 0\n" in text and "0 -> F0\n" in text
    one_dot = to_dot(derived_term_automaton(one(), Context.parse("tapes=a")))
    assert '0 [label = "\\\\e", shape = box]' in one_dot and "0 -> F0" in one_dot


def test_dot_weights():
    ctx = Context.parse("tapes=a")
    text = to_dot(derived_term_automaton(parse("<2>(a<3>)*<1/2>", ctx), ctx))
    assert '[label = "<1/2>"]' in text
    assert '<6>a' in text


def test_json_round_trip():
    aut = derived_term_automaton(E2, AB_XY)
    text = to_json(aut)
    data = json.loads(text)
    assert data["context"] == "tapes=ab;xy,weights=q"
    assert data["transitions"][0] == {"src": 0, "label": ["a", "x"], "dst": 1, "weight": "1"}
    assert from_json(text) == aut


@pytest.mark.parametrize("mutate, error", [
    (lambda d: d.pop("states"), SchemaError),
    (lambda d: d["transitions"].append({"src": 9, "label": ["a", "x"], "dst": 0, "weight": "1"}),
     SchemaError),
    (lambda d: d["transitions"].append({"src": 0, "label": ["c", "x"], "dst": 0, "weight": "1"}),
     UnknownLetter),
    (lambda d: d["initial"].update({"0": "x"}), SchemaError),
    (lambda d: d.update(context="tapes="), SchemaError),
])
def test_json_errors(mutate, error):
    data = json.loads(to_json(derived_term_automaton(E2, AB_XY)))
    mutate(data)
    with pytest.raises(error):
        from_json(json.dumps(data))
    with pytest.raises(SchemaError):
        from_json("{")


def test_automaton_drops_zero_weights():
    ks = AB_XY.ks
    aut = Automaton(AB_XY, [E2], {0: ks.one}, {0: ks.zero}, {(0, ("a", "x"), 0): ks.zero})
    assert not aut.final and not aut.transitions


@settings(max_examples=120, deadline=None)
@given(expressions())
def test_automaton_properties(sample):
    ctx, e = sample
    lazy = LazyAutomaton(e, ctx)
    aut = derived_term_automaton(e, ctx)
    assert aut.is_proper()
    assert len(aut) <= size_bound(e) + 1
    assert set(aut.states) <= all_derived_terms(e)
    assert len(derived_terms(e)) <= size_bound(e)
    s = series_of_expr(e, ctx.ks, 3)
    for m in elements(ctx.tapes, 3):
        assert lazy.evaluate(m) == s[m] == aut.evaluate(m)
    assert lazy.complete().freeze() == aut


def test_contexts_with_shared_letters():
    ctx = context(2, tapes=("ab", "ab"))
    e = parse("(a|b)*", ctx)
    assert str(derived_term_automaton(e, ctx).evaluate(("aa", "bb"))) == "1"
