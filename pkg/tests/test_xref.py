"""Cross-referencing and source colouring."""

import pytest

from prodoc.reader import read_source
from prodoc.xref import (
    clause_parts,
    colour_source,
    cross_reference,
    head_target,
    indicator_alternates,
    iter_goals,
    module_directive,
    resolves,
    undefined_calls,
)


def units_of(text):
    return read_source(text).units


def called(text):
    """Indicators the body of the single clause in text calls."""
    report = cross_reference(units_of(text))
    return set(report.called)


class TestClauseShapes:
    def test_fact(self):
        kind, head, body = clause_parts(units_of("f(1).")[0].term)
        assert kind == "fact" and body is None
        assert head_target(head) == ("f/1", head.name_span)

    def test_rule(self):
        kind, head, body = clause_parts(units_of("f :- g.")[0].term)
        assert kind == "clause"
        assert head_target(head)[0] == "f/0"

    def test_dcg_rule(self):
        kind, head, body = clause_parts(units_of("f(X) --> g.")[0].term)
        assert kind == "dcg"
        assert head_target(head, dcg=True)[0] == "f//1"

    def test_directive(self):
        kind, goal, body = clause_parts(units_of(":- use_module(x).")[0].term)
        assert kind == "directive" and body is None
        assert goal.name == "use_module"

    def test_module_qualified_head(self):
        term = units_of("m:f(1) :- g.")[0].term
        _, head, _ = clause_parts(term)
        assert head_target(head)[0] == "f/1"

    def test_module_directive(self):
        term = units_of(":- module(m, [a/1, b//2]).")[0].term
        assert module_directive(term) == ("m", ("a/1", "b//2"))


class TestGoalWalking:
    def test_control_traversed_not_reported(self):
        got = called("t :- (a ; b), (c -> d).")
        assert got == {"a/0", "b/0", "c/0", "d/0"}

    def test_negation(self):
        assert "p/1" in called("t(X) :- \\+ p(X).")

    def test_findall_goal_argument(self):
        got = called("t(L) :- findall(X, p(X), L).")
        assert "findall/3" in got and "p/1" in got

    def test_bagof_caret(self):
        got = called("t(L) :- bagof(X, Y^p(X, Y), L).")
        assert "p/2" in got

    def test_call_extra_args(self):
        got = called("t(G) :- call(G, 1, 2).")
        assert "call/3" in got

    def test_call_closure_target(self):
        got = called("t :- call(p(a), 1).")
        assert "p/2" in got

    def test_phrase_walks_dcg(self):
        got = called("t(L) :- phrase(digits(X), L).")
        assert "phrase/2" in got and "digits//1" in got

    def test_dcg_body_calls(self):
        got = called("t(X) --> one, [a], {p(X)}, two(X).")
        assert {"one//0", "two//1", "p/1"} <= got
        # terminal lists are not calls
        assert not any(i.startswith("a/") for i in got)

    def test_dynamic_declaration_collected(self):
        units = units_of(":- dynamic counter/1.\n")
        report = cross_reference(units)
        assert "counter/1" in report.dynamic

    def test_iter_goals_yields_pairs(self):
        term = units_of("t :- a, b.")[0].term
        body = term.args[1]
        pairs = list(iter_goals(body))
        assert [p[1] for p in pairs] == ["a/0", "b/0"]


class TestResolution:
    def test_alternates(self):
        assert indicator_alternates("f//1") == ("f//1", "f/3")
        assert indicator_alternates("f/3") == ("f/3", "f//1")
        assert indicator_alternates("f/1") == ("f/1",)

    def test_builtin_resolves(self):
        assert resolves("append/3", frozenset())
        assert resolves("atom_codes/2", frozenset())

    def test_defined_resolves(self):
        assert resolves("local/1", frozenset({"local/1"}))

    def test_dcg_alternate_resolves(self):
        assert resolves("g/2", frozenset({"g//0"}))

    def test_unknown_does_not(self):
        assert not resolves("no_such_thing/7", frozenset())

    def test_undefined_calls_sorted(self):
        src = "t :- zzz(1), aaa(2, 3).\n"
        report = cross_reference(units_of(src))
        assert undefined_calls(report) == ("aaa/2", "zzz/1")


class TestColouring:
    def spans_of(self, text, **kw):
        units = read_source(text).units
        return colour_source(text, units, cross_reference(units), **kw)

    def test_classes_present(self):
        text = (":- module(m, [pub/1]).\n"
                "pub(X) :- helper(X).\n"
                "helper(X) :- missing(X), atom(X).\n")
        classes = {s.cls for s in self.spans_of(text)}
        assert {"directive", "head_exported", "head_local", "call_defined",
                "call_undefined", "variable", "operator"} <= classes

    def test_exported_vs_local_heads(self):
        text = ":- module(m, [pub/0]).\npub.\npriv.\n"
        by_class = {}
        for s in self.spans_of(text):
            by_class.setdefault(s.cls, []).append(text[s.span.start:s.span.end])
        assert by_class["head_exported"] == ["pub"]
        assert by_class["head_local"] == ["priv"]

    def test_singleton_variable(self):
        text = "f(X, Y) :- g(X).\n"
        spans = self.spans_of(text)
        singles = [text[s.span.start:s.span.end]
                   for s in spans if s.cls == "singleton_variable"]
        assert singles == ["Y"]

    def test_underscore_not_singleton(self):
        text = "f(_Ignored, X) :- g(X).\n"
        assert all(s.cls != "singleton_variable" for s in self.spans_of(text))

    def test_quoted_atom_and_string_and_number(self):
        text = "f('q a', \"s\", 42).\n"
        classes = {s.cls for s in self.spans_of(text)}
        assert {"quoted_atom", "string", "number"} <= classes

    def test_comment_classes(self):
        text = "% plain\n%% doc(+X) is det.\nf.\n"
        classes = {s.cls for s in self.spans_of(text)}
        assert {"comment", "structured_comment"} <= classes

    @pytest.mark.parametrize("rel", ["base64.pl", "hexutil.pl"])
    def test_corpus_spans_sorted_nonoverlapping_in_range(
            self, corpus_index, rel):
        entry = corpus_index.file(rel)
        pos = 0
        for s in entry.colours:
            assert s.span.start >= pos
            assert s.span.end <= len(entry.text)
            pos = s.span.end

    def test_undefined_call_marked_in_corpus(self, corpus_index):
        entry = corpus_index.file("hexutil.pl")
        undef = [entry.text[s.span.start:s.span.end]
                 for s in entry.colours if s.cls == "call_undefined"]
        assert undef == ["missing_helper"]
