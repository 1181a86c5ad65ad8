"""
Tests for weight sources, conditions and experiment sweeps
"""

import json

import numpy as np
import pytest
from scipy.integrate import trapezoid

from experiments.sweeps import (
    Condition, SweepSpec, _p_average, continuum_experiment, empty_strategy_comparison,
    global_feature_eval, load_weights, parse_weights, sweep_motif_counts,
)
from generation.generator import generate_mbn
from motifs.census import census
from network.degrees import InDegreeSpec
from network.rng import RngStream
from optimization.presets import get_preset
from utils.errors import InvalidSpecError, ValidationError


class TestWeightSources:
    def test_parse(self):
        assert parse_weights('delta:8').tolist() == np.eye(16)[7].tolist()
        assert not parse_weights('zero').any()
        assert np.array_equal(parse_weights('preset:smallworld'), get_preset('smallworld'))
        assert parse_weights('delta:200', size=4)[199] == 1.0

    @pytest.mark.parametrize('text', ['delta:x', 'delta:17', 'uniform', 'preset:other'])
    def test_parse_rejects(self, text):
        with pytest.raises(ValidationError):
            parse_weights(text)

    def test_presets_are_three_node(self):
        with pytest.raises(InvalidSpecError):
            parse_weights('preset:smallworld', size=4)

    def test_load_json(self, tmp_path):
        path = tmp_path / 'weights.json'
        path.write_text(json.dumps({'best_weights': list(range(16))}))
        assert load_weights(path, 16)[15] == 15
        path.write_text(json.dumps([0.5] * 16))
        assert parse_weights(f'file:{path}')[0] == 0.5

    def test_load_text(self, tmp_path):
        path = tmp_path / 'weights.txt'
        path.write_text(' '.join(['1'] * 8) + '\n' + ','.join(['2'] * 8))
        assert load_weights(path, 16).sum() == 24

    def test_load_rejects_length(self, tmp_path):
        path = tmp_path / 'weights.txt'
        path.write_text('1 2 3')
        with pytest.raises(InvalidSpecError):
            load_weights(path, 16)


class TestCondition:
    def test_parse(self):
        assert Condition.parse('rn').kind == 'rn'
        ws = Condition.parse('ws:0.25')
        assert (ws.kind, ws.q) == ('ws', 0.25)
        noadapt = Condition.parse('delta:8@noadapt')
        assert noadapt.adapt is False
        assert noadapt.promoted_class == 8
        assert Condition.parse('preset:modularity').promoted_class is None

    def test_parse_rejects(self):
        with pytest.raises(InvalidSpecError):
            Condition.parse('ws:high')

    def test_ws_needs_delta_spec(self):
        with pytest.raises(InvalidSpecError):
            Condition.parse('ws:0.1').generate(10, InDegreeSpec.binomial(0.2), 3, RngStream(0))

    def test_generate(self):
        graph = Condition.parse('delta:8').generate(12, InDegreeSpec.delta(3), 3, RngStream(0))
        assert graph.in_degrees().tolist() == [3] * 12


class TestSweepSpec:
    @pytest.mark.parametrize('overrides', [
        dict(samples=0), dict(p_values=[]), dict(p_values=[0.0]), dict(n=2), dict(conditions=[]),
    ])
    def test_validate(self, overrides):
        with pytest.raises(InvalidSpecError):
            SweepSpec(**overrides).validate()


class TestMotifSweep:
    def test_p_average(self):
        counts = np.array([[[6, 4]], [[2, 8]]], dtype=float)
        averaged = _p_average(np.array([0.5, 1.0]), counts, empty_count=10)
        assert averaged[0].tolist() == [6.0, 4.0]

    def test_p_average_is_twice_the_integral_up_to_one_half(self):
        counts = np.array([[[6, 4]], [[2, 8]]], dtype=float)
        averaged = _p_average(np.array([0.25, 0.5]), counts, empty_count=10)
        grid = [0.0, 0.25, 0.5]
        expected = [2 * trapezoid([10, 6, 2], grid), 2 * trapezoid([0, 4, 8], grid)]
        assert averaged[0].tolist() == pytest.approx(expected)

    def test_p_average_of_constant_counts(self):
        counts = np.full((3, 1, 2), 5.0)
        averaged = _p_average(np.array([0.1, 0.2, 0.4]), counts, empty_count=10)
        # the p = 0 anchor is (10, 0)
        assert averaged[0].tolist() == pytest.approx([5.625, 4.375])

    def test_configured_adaptation_reaches_generator(self, catalog3):
        spec = SweepSpec(n=9, samples=2, p_values=[0.3], conditions=['delta:8'], seed=5, adapt=False)
        table = sweep_motif_counts(spec)
        counts = [census(generate_mbn(9, InDegreeSpec.binomial(0.3), catalog3.delta(8), adapt=False,
                                      rng=RngStream(5).derive('delta:8', 0, s)), catalog3).counts
                  for s in range(2)]
        expected = np.mean(counts, axis=0)
        for m in range(1, 17):
            assert table.lookup('delta:8', 0.3, f"motif_{m}")['mean'] == pytest.approx(expected[m - 1])

    def test_rows_and_comparisons(self):
        spec = SweepSpec(n=8, samples=3, p_values=[0.2, 0.4], conditions=['rn', 'delta:8'], seed=4)
        table = sweep_motif_counts(spec)
        assert len(table) == 2 * 3 * 16
        assert table.lookup('rn', 0.2, 'motif_1')['count'] == 3
        assert 'p_avg' in set(table.frame['parameter'])
        comparisons = table.comparisons
        assert len(comparisons) == 2
        assert set(comparisons['measure']) == {'motif_8'}

    def test_reproducible(self):
        spec = SweepSpec(n=7, samples=2, p_values=[0.3], conditions=['delta:10'], seed=9)
        assert sweep_motif_counts(spec).to_csv() == sweep_motif_counts(spec).to_csv()

    def test_counts_cover_all_triples(self):
        spec = SweepSpec(n=9, samples=2, p_values=[0.25], conditions=['rn'])
        frame = sweep_motif_counts(spec).frame
        cells = frame[(frame['parameter'] == 0.25)]
        assert cells['mean'].sum() == pytest.approx(84)


class TestEmptyComparison:
    def test_rows(self):
        table = empty_strategy_comparison(14, [3, 4], samples=2, seed=1)
        for k in (3, 4):
            assert (table.lookup('intra', k, 'motif_1')['mean']
                    == table.lookup('intra_closed_form', k, 'motif_1')['mean'])
            assert (table.lookup('inter', k, 'motif_1')['mean']
                    == table.lookup('inter_closed_form', k, 'motif_1')['mean'])
            assert table.lookup('delta:1', k, 'motif_1')['count'] == 2
        assert len(table.comparisons) == 2

    def test_rejects_samples(self):
        with pytest.raises(InvalidSpecError):
            empty_strategy_comparison(14, [3], samples=0)


class TestGlobalFeatures:
    def test_smallworld(self):
        table = global_feature_eval('smallworld', 20, [3], samples=2, seed=2,
                                    conditions=['rn', 'delta:4'], ws_q=[0.1], reference_samples=2)
        measures = set(table.frame['measure'])
        assert {'S', 'C', 'L'} <= measures
        assert 'ws:0.1' in set(table.frame['condition'])
        assert set(table.comparisons['baseline']) == {'rn'}

    def test_modularity(self):
        table = global_feature_eval('modularity', 20, [4], samples=2, seed=2,
                                    conditions=['rn', 'preset:modularity'])
        assert {'Q', 'Q_simplified', 'Q_bisection'} <= set(table.frame['measure'])
        assert table.lookup('preset:modularity', 4, 'Q')['count'] == 2

    def test_rejects_kind(self):
        with pytest.raises(InvalidSpecError):
            global_feature_eval('clustering', 20, [3], samples=1)


class TestContinuum:
    def test_arc_rows(self):
        table = continuum_experiment('smallworld', get_preset('smallworld'), 4, 3, steps=2, n=15,
                                     param=3, samples=1, seed=3, reference_samples=2)
        arc = table.frame[table.frame['condition'] == 'arc']
        assert len(set(arc['parameter'])) == 5
        assert table.lookup('arc', 0.0, 'motif_4')['count'] == 1
        assert table.lookup('rn', 'baseline', 'motif_3')['count'] == 1
        assert table.invocation['left_class'] == 4
