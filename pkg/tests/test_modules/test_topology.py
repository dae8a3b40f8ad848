"""Tests for boolconv.modules.topology."""

import pytest

from boolconv.modules.algebra import Algebra, ElementSet
from boolconv.modules.convergence import Bar, LambdaI, LambdaLI, LambdaLS, LambdaS, Meet
from boolconv.modules.corpus import dominating_pairs
from boolconv.modules.errors import PreconditionError, ResourceCapError, StructuralError
from boolconv.modules.sequences import EPSequence, parse_sequence
from boolconv.modules.topology import (
    FiniteTopology,
    all_topologies,
    characteristic_family,
    check_closed_set_characterization,
    closure_fixpoint,
    closure_table,
    condition_stable_subsequences,
    down_sets,
    dual_homeomorphism_check,
    generate_sequential_topology,
    is_continuous,
    is_preorder_graph,
    is_topological_convergence,
    is_weakly_topological,
    lim_of_topology,
    maximality_brute_force,
    monotone_lim_check,
    open_set_form,
    sequential_closure_step,
    specialization_graph,
    stable_range_closure,
    topology_from_subbasis,
    up_sets,
    zero_witness_equivalence,
)


class TestFiniteTopology:
    def test_discrete_and_indiscrete(self, a1):
        discrete = FiniteTopology.discrete(a1)
        assert discrete.is_discrete
        assert len(FiniteTopology.indiscrete(a1).closed_sets) == 2
        assert FiniteTopology.indiscrete(a1).is_subtopology_of(discrete)

    def test_needs_empty_set_and_carrier(self, a1):
        with pytest.raises(StructuralError):
            FiniteTopology(a1, frozenset({0b01}))

    def test_needs_closure_under_union(self, a2):
        with pytest.raises(StructuralError):
            FiniteTopology(a2, frozenset({0, 0b0001, 0b0010, 0b1111}))

    def test_closure_and_neighborhoods(self, a2):
        t = FiniteTopology(a2, frozenset({0, 8, 12, 14, 15}))
        assert t.closure(a2.element_set([2])).words() == (2, 3)
        assert t.minimal_open_neighborhood(2).words() == (0, 1, 2)
        assert t.is_open(0b0111)

    def test_lim_uses_tail_support(self, a2):
        t = generate_sequential_topology(LambdaLS(), a2)
        assert t.lim(parse_sequence(a2, "[0]|[1,2]")).words() == (3,)

    def test_lim_of_topology(self, a2):
        t = generate_sequential_topology(LambdaLS(), a2)
        x = parse_sequence(a2, "[0]|[1,2]")
        assert lim_of_topology(t, x) == t.lim(x) == LambdaLS()(x)

    def test_json(self, a2):
        t = generate_sequential_topology(LambdaLI(), a2)
        assert FiniteTopology.from_json(t.to_json()) == t
        with pytest.raises(StructuralError):
            FiniteTopology.from_json({"closed_sets": []})

    def test_subbasis(self, a1):
        t = topology_from_subbasis(a1, [0b01])
        assert t.open_sets() == frozenset({0, 0b01, 0b11})


class TestSequentialTopology:
    def test_counts(self, a2):
        assert len(generate_sequential_topology(LambdaLS(), a2).closed_sets) == 6
        assert len(generate_sequential_topology(LambdaLI(), a2).closed_sets) == 6
        assert generate_sequential_topology(LambdaS(), a2).is_discrete

    def test_closed_sets_are_up_and_down_sets(self, a2):
        assert generate_sequential_topology(LambdaLS(), a2).closed_sets == up_sets(a2)
        assert generate_sequential_topology(LambdaLI(), a2).closed_sets == down_sets(a2)

    def test_closure_table_matches_steps(self, a2):
        table = closure_table(LambdaLS(), a2)
        for mask in range(1, 16):
            assert table[mask] == sequential_closure_step(LambdaLS(), ElementSet(a2, mask)).mask

    def test_closure_fixpoint_steps(self, a2):
        result = closure_fixpoint(LambdaLS(), a2.element_set([1]))
        assert result.closure.words() == (1, 3)
        assert result.steps == 2
        assert closure_fixpoint(LambdaLS(), a2.element_set([3])).steps == 1

    def test_open_set_form_agrees(self, a2):
        for c in (LambdaS(), LambdaLS(), LambdaLI()):
            t = generate_sequential_topology(c, a2)
            assert open_set_form(c, a2) == t.open_sets()

    def test_lambda_i_open_sets_are_o_ls(self, a2):
        expected = generate_sequential_topology(LambdaLS(), a2).open_sets()
        for i in range(1, 5):
            assert open_set_form(LambdaI(i), a2) == expected
        assert open_set_form(LambdaI(0), a2) == generate_sequential_topology(LambdaS(), a2).open_sets()

    def test_lambda_i_needs_l2(self, a2):
        with pytest.raises(PreconditionError):
            generate_sequential_topology(LambdaI(3), a2)
        assert generate_sequential_topology(Bar(LambdaI(3)), a2) == generate_sequential_topology(LambdaLS(), a2)

    def test_meet_generates_discrete(self, a2):
        assert generate_sequential_topology(Meet(LambdaLS(), LambdaLI()), a2).is_discrete

    def test_topological(self, a2, small_corpus):
        for c in (LambdaS(), LambdaLS(), LambdaLI()):
            assert is_topological_convergence(c, small_corpus, a2)
            assert is_weakly_topological(c, small_corpus, a2)

    def test_caps(self):
        with pytest.raises(ResourceCapError):
            generate_sequential_topology(LambdaLS(), Algebra(5))


class TestClosedSets:
    def test_characterization(self, a2):
        for flavor, c in (('ls', LambdaLS()), ('li', LambdaLI())):
            assert check_closed_set_characterization(generate_sequential_topology(c, a2), flavor)

    def test_characterization_finds_missing_set(self, a2):
        perturbed = FiniteTopology(a2, frozenset({0, 8, 12, 14, 15}))
        verdict = check_closed_set_characterization(perturbed, 'ls')
        assert not verdict
        assert verdict.witness == ElementSet(a2, 10)

    def test_unknown_flavor(self, a2):
        with pytest.raises(PreconditionError):
            characteristic_family(a2, 'up')

    def test_dual_homeomorphism(self, a2):
        assert dual_homeomorphism_check(a2)

    def test_stable_subsequences(self, a2):
        assert condition_stable_subsequences(a2)

    def test_stable_range_closure(self, a2):
        x = parse_sequence(a2, "[1]|[0,2]")
        for flavor in ('ls', 'li'):
            closure, formula = stable_range_closure(x, flavor)
            assert closure == formula


class TestComparisons:
    def test_zero_witness(self, a2, small_corpus):
        assert zero_witness_equivalence(small_corpus, a2)

    def test_meet_is_continuous(self, a2):
        o_ls = generate_sequential_topology(LambdaLS(), a2)
        for b in range(a2.size):
            assert is_continuous(o_ls, o_ls, lambda w: w & b)

    def test_complement_is_not_continuous_on_o_ls(self, a2):
        o_ls = generate_sequential_topology(LambdaLS(), a2)
        assert not is_continuous(o_ls, o_ls, lambda w: 3 ^ w)

    def test_monotone_lim_on_dominating_pairs(self, a2, small_corpus):
        o_ls = generate_sequential_topology(LambdaLS(), a2)
        pairs = dominating_pairs(small_corpus, seed=3, count=60)
        assert all(x.le_pointwise(y) for x, y in pairs)
        assert monotone_lim_check(o_ls, pairs)

    def test_monotone_lim_fails_on_o_li(self, a1):
        o_li = generate_sequential_topology(LambdaLI(), a1)
        zero, one = EPSequence.constant(a1, 0), EPSequence.constant(a1, 1)
        longer = EPSequence(a1, (0, 0), (0, 1))
        verdict = monotone_lim_check(o_li, [(longer, one), (zero, one)])
        assert not verdict
        assert verdict.witness == zero

    def test_monotone_lim_needs_dominating_pairs(self, a1):
        o_ls = generate_sequential_topology(LambdaLS(), a1)
        with pytest.raises(PreconditionError):
            monotone_lim_check(o_ls, [(EPSequence.constant(a1, 1), EPSequence.constant(a1, 0))])

    def test_specialization_graph(self, a1):
        graph = specialization_graph(generate_sequential_topology(LambdaLS(), a1))
        assert list(graph.edges) == [(1, 0)]
        assert is_preorder_graph(graph)


class TestBruteForce:
    def test_topology_counts(self, a1, a2):
        assert len(all_topologies(a1)) == 4
        assert len(all_topologies(a2)) == 355

    def test_cap(self, a3):
        with pytest.raises(ResourceCapError):
            all_topologies(a3)

    def test_maximality(self, a2, small_corpus):
        for c in (LambdaS(), LambdaLS(), LambdaLI()):
            report = maximality_brute_force(c, a2, small_corpus)
            assert report.verdict
            assert report.topology_count == 355
            assert report.dominating_count >= 1

    def test_every_topology_dominates_lambda_s(self, a1):
        corpus = [EPSequence.constant(a1, 0), EPSequence.constant(a1, 1), EPSequence(a1, (), (0, 1))]
        report = maximality_brute_force(LambdaS(), a1, corpus)
        assert report.dominating_count == 4
        assert report.to_json()["topologies"] == 4
