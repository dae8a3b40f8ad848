"""Tests for boolconv.modules.convergence."""

import pytest
from hypothesis import given

from boolconv.modules.convergence import (
    Bar,
    LambdaI,
    LambdaLI,
    LambdaLS,
    LambdaS,
    Meet,
    Star,
    Verdict,
    _star_mask,
    builtin_convergences,
    check_axioms,
    convergence_equal,
    convergence_le,
    evaluate_support,
    parse_convergence,
    tail_support_determinism,
)
from boolconv.modules.errors import PreconditionError, StructuralError
from boolconv.modules.sequences import EPSequence, parse_sequence, tail_support
from tests.strategies import sequences


class TestBuiltins:
    def test_lambda_s(self, a2):
        assert LambdaS()(EPSequence(a2, (0, 1), (2,))).words() == (2,)
        assert LambdaS()(parse_sequence(a2, "[]|[1,2]")).words() == ()

    def test_lambda_ls_and_li(self, a2):
        x = parse_sequence(a2, "[]|[1,2]")
        assert LambdaLS()(x).words() == (3,)
        assert LambdaLI()(x).words() == (0,)
        y = EPSequence.constant(a2, 1)
        assert LambdaLS()(y).words() == (1, 3)
        assert LambdaLI()(y).words() == (0, 1)

    def test_lambda_i_family(self, a2):
        x = parse_sequence(a2, "[]|[1,3]")
        assert LambdaI(0)(x).words() == ()
        for i in range(1, 5):
            assert LambdaI(i)(x).words() == (3,)

    def test_lambda_0_is_lambda_s(self, small_corpus):
        assert convergence_equal(LambdaI(0), LambdaS(), small_corpus)

    def test_lambda_i_index_range(self):
        with pytest.raises(StructuralError):
            LambdaI(5)

    def test_names(self):
        assert [c.name for c in builtin_convergences()] == ['s', 'ls', 'li', 'l0', 'l1', 'l2', 'l3', 'l4']
        assert Meet(Star(LambdaLS()), Bar(LambdaI(1))).name == 'meet:star:ls,bar:l1'

    def test_evaluate_support_rejects_empty(self, a2):
        with pytest.raises(PreconditionError):
            evaluate_support(LambdaS(), a2, 0)


class TestOrder:
    def test_s_below_ls_and_li(self, small_corpus):
        assert convergence_le(LambdaS(), LambdaLS(), small_corpus)
        assert convergence_le(LambdaS(), LambdaLI(), small_corpus)

    def test_ls_not_below_s(self, a2, small_corpus):
        verdict = convergence_le(LambdaLS(), LambdaS(), small_corpus)
        assert not verdict
        assert verdict.witness == EPSequence.constant(a2, 0)

    def test_meet_of_ls_and_li(self, small_corpus):
        assert convergence_equal(Meet(LambdaLS(), LambdaLI()), LambdaS(), small_corpus)

    @given(sequences())
    def test_tail_support_determinism(self, x):
        for c in builtin_convergences():
            assert c.limits_mask(x) == evaluate_support(c, x.algebra, tail_support(x).mask)

    def test_determinism_over_corpus(self, small_corpus):
        assert tail_support_determinism(LambdaLS(), small_corpus)


class TestAxioms:
    def test_lambda_s(self, a2, small_corpus):
        report = check_axioms(LambdaS(), small_corpus, a2)
        assert report.l1 and report.l2 and report.l3 and report.hausdorff

    def test_lambda_ls_is_not_hausdorff(self, a2, small_corpus):
        report = check_axioms(LambdaLS(), small_corpus, a2)
        assert report.l1 and report.l2 and report.l3
        assert not report.hausdorff
        assert report.hausdorff.witness.literal() == "[]|[0]"

    def test_lambda_li_is_not_hausdorff(self, a2, small_corpus):
        report = check_axioms(LambdaLI(), small_corpus, a2)
        assert report.l1 and report.l2 and report.l3
        assert report.hausdorff.witness.literal() == "[]|[1]"

    def test_lambda_2_fails_l2(self, a2, small_corpus):
        report = check_axioms(LambdaI(2), small_corpus, a2, include_l3=False)
        assert report.l1
        assert not report.l2

    def test_report_json(self, a2, small_corpus):
        payload = check_axioms(LambdaLS(), small_corpus, a2).to_json()
        assert payload["L1"] == {"ok": True}
        assert payload["hausdorff"]["ok"] is False
        assert payload["hausdorff"]["witness"]["cycle"] == [0]


class TestClosures:
    def test_star_of_topological_convergences(self, small_corpus):
        for c in (LambdaS(), LambdaLS(), LambdaLI()):
            assert convergence_equal(Star(c), c, small_corpus)

    def test_star_requires_l2(self, a2):
        with pytest.raises(PreconditionError):
            Star(LambdaI(2))(EPSequence.constant(a2, 1))

    def test_star_depends_on_tail_support_only(self, a2):
        star = Star(LambdaLS())
        x = parse_sequence(a2, "[3,0]|[1,2]")
        assert star(x) == star(EPSequence(a2, (), (1, 2)))
        hits = _star_mask.cache_info().hits
        star(x)
        assert _star_mask.cache_info().hits > hits

    def test_star_of_meet(self, small_corpus):
        assert convergence_equal(Star(Meet(LambdaLS(), LambdaLI())), LambdaS(), small_corpus)

    def test_bar_of_lambda_i_is_ls(self, small_corpus):
        for i in range(1, 5):
            assert convergence_equal(Bar(LambdaI(i)), LambdaLS(), small_corpus)

    def test_bar_is_above(self, small_corpus):
        for c in builtin_convergences():
            assert convergence_le(c, Bar(c), small_corpus)


class TestParser:
    @pytest.mark.parametrize("text,expected", [
        ("s", LambdaS()),
        (" ls ", LambdaLS()),
        ("l3", LambdaI(3)),
        ("star:li", Star(LambdaLI())),
        ("meet:star:ls,bar:l1", Meet(Star(LambdaLS()), Bar(LambdaI(1)))),
        ("meet:meet:s,ls,li", Meet(Meet(LambdaS(), LambdaLS()), LambdaLI())),
    ])
    def test_parses(self, text, expected):
        assert parse_convergence(text) == expected

    @pytest.mark.parametrize("text", ["", "l5", "lambda", "meet:ls", "s,ls", "lim:x", "lim:"])
    def test_rejects(self, text):
        with pytest.raises(StructuralError):
            parse_convergence(text)

    def test_lim_uses_loader(self, a1):
        from boolconv.modules.topology import FiniteTopology

        loaded = []

        def loader(path):
            loaded.append(path)
            return FiniteTopology.discrete(a1)

        c = parse_convergence("lim:disc.json", topology_loader=loader)
        assert loaded == ["disc.json"]
        assert c.name == "lim:disc.json"
        assert c(EPSequence.constant(a1, 1)).words() == (1,)


def test_verdict_json(a1):
    verdict = Verdict(False, EPSequence.constant(a1, 0), "boom")
    assert not verdict
    assert verdict.to_json() == {"ok": False, "witness": {"algebra": {"atoms": 1}, "prefix": [], "cycle": [0]},
                                 "detail": "boom"}
