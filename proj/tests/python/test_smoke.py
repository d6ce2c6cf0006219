"""Smoke tests for the python bindings."""

import pytest

import stepup


def good_d3():
    phi = stepup.PairColoring(3)
    phi.set_color(0, 2, stepup.Color.Blue)
    return phi


def test_delta_basics():
    assert stepup.delta(5, 6) == 1
    assert stepup.delta(7, 8) == 3
    assert stepup.delta_profile([0, 4, 5, 13]) == [2, 0, 3]
    assert stepup.check_property_a(0, 4, 5)
    assert stepup.check_property_b([0, 4, 5, 13])
    assert stepup.check_property_c([0, 8, 9, 13])
    with pytest.raises(ValueError):
        stepup.delta(3, 3)


def test_profile_shape():
    tags = stepup.classify_extrema([2, 0, 3])
    assert tags == [stepup.ExtremumTag.LocalMin]
    assert stepup.is_monotone([0, 1, 2]) == stepup.Monotonicity.Increasing
    assert stepup.is_monotone([2, 0, 3]) == stepup.Monotonicity.No


def test_coloring_roundtrip_and_search():
    phi = stepup.random_phi_search(3, 3, 100, 1)
    assert phi is not None
    assert stepup.verify_phi(phi, 3) is None
    parsed = stepup.PairColoring.parse(phi.serialize())
    assert parsed == phi
    assert stepup.verify_phi(stepup.PairColoring(3), 3) == [0, 1, 2]


def test_good_triples():
    phi = good_d3()
    assert stepup.is_good_triple(phi, 0, 1, 2)
    assert stepup.find_good_triple(phi, [0, 1, 2]) == [0, 1, 2]
    assert stepup.find_good_triple(stepup.PairColoring(4), [0, 1, 2, 3]) is None


def test_steiner_and_bound():
    system = stepup.greedy_partial_steiner(7)
    assert system.triples[0] == [0, 1, 2]
    assert len(system.triples) == 7
    report = stepup.probabilistic_bound(3, 0.53)
    assert report.domain == 3
    assert report.feasible


def test_hypergraph():
    mono = stepup.HypergraphView(4, stepup.PairColoring(4))
    assert stepup.edge_predicate(mono, [0, 4, 5, 13]) == stepup.Rule.III
    assert stepup.edge_predicate(mono, [0, 1, 5, 7]) is None
    edges = stepup.materialize(mono)
    assert len(edges) == 240
    counts = stepup.edge_counts_by_rule(mono)
    assert (counts.rule_i, counts.rule_ii, counts.rule_iii) == (0, 0, 240)


def test_verification():
    mono = stepup.HypergraphView(3, stepup.PairColoring(3))
    assert stepup.find_k5(mono) is None
    result = stepup.independence_number(mono, 64)
    assert result.alpha == 7
    assert stepup.is_independent(mono, result.witness)
    lower = stepup.greedy_independent_lower_bound(mono, 5)
    assert stepup.is_independent(mono, lower)


def test_sweep():
    report = stepup.sweep_all_colorings(3)
    assert len(report.lines) == 8
    assert report.k5_violations == 0
    assert stepup.format_sweep_line(report.lines[0]).endswith(
        f"alpha={report.lines[0].alpha}"
    )


def test_layers_and_extraction():
    built = stepup.build_layers([0, 2, 3, 11, 15], stepup.PairColoring(4),
                                100, 4, 1)
    assert isinstance(built, stepup.LayerStack)
    assert built.layers[1] == [2]
    assert stepup.neighbor_indices(built, 1, 2) == (1, 3)
    assert stepup.check_observation(built, 1, 2)

    run = stepup.build_layers([0, 1, 3, 7], good_d3(), 3, 2, 5)
    assert isinstance(run, stepup.MonotoneRun)
    edge = stepup.monotone_witness([0, 1, 3, 7], run, good_d3())
    assert edge.quad == [0, 1, 3, 7]
    assert edge.rule == stepup.Rule.I

    trace = stepup.extract_edge([0, 1, 3, 7], good_d3(), 3, 6)
    assert trace.kind == stepup.ExtractionCase.MonotoneRunCase
    assert stepup.format_trace(trace).endswith("EDGE 0 1 3 7 rule=I\n")

    big = list(range(128))
    trace = stepup.extract_edge(big, stepup.PairColoring(7), 4, 2)
    assert stepup.edge_predicate(
        stepup.HypergraphView(7, stepup.PairColoring(7)), trace.edge.quad
    ) == trace.edge.rule

    assert stepup.layer_size_schedule(2048, 4, 5)[-1] == 2

    with pytest.raises(ValueError):
        stepup.extract_edge([0, 1, 3, 7], stepup.PairColoring(3), 3, 6)
