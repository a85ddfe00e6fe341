"""Operator-pipeline route, decimal rendering, and multi-route reports."""

import json
import random
from decimal import Decimal
from fractions import Fraction

import pytest

from mpoly_topo import (
    BiPoly,
    DisconnectedGraphWarning,
    DivergentIntegralError,
    EdgePartition,
    RadScalar,
    SimpleGraph,
    catalog_mpoly,
    closed_hso,
    compute_report,
    construct,
    fixed_decimal,
    format_fixed,
    hso_direct,
    hso_pair,
    hso_via_pipeline,
    m_polynomial,
    make_spec,
    random_connected_graph,
)

F = Fraction


# -- pipeline ---------------------------------------------------------------------


def test_pipeline_single_class():
    # 9*x^3*y^3: nine edges of degree pair (3,3)
    assert hso_via_pipeline(BiPoly.monomial(3, 3, 9)) == RadScalar([(2, 9)])


def test_pipeline_complete_bipartite_term():
    # mn*x^m*y^n with m=3, n=4 gives n*sqrt(m^2+n^2) = 20
    assert hso_via_pipeline(BiPoly.monomial(3, 4, 12)) == RadScalar.rational(20)


def test_pipeline_three_classes():
    poly = BiPoly([((1, 2), 1), ((2, 2), 1), ((2, 3), 3)])
    expected = RadScalar([(5, 1), (2, 1), (13, F(3, 2))])
    assert hso_via_pipeline(poly) == expected


def test_pipeline_propagates_divergence():
    with pytest.raises(DivergentIntegralError):
        hso_via_pipeline(BiPoly.monomial(0, 2, 1))


def test_pipeline_reduces_to_weighted_pair_sum():
    rng = random.Random(5)
    for _ in range(50):
        counts = {}
        for _ in range(rng.randint(1, 6)):
            i = rng.randint(1, 9)
            j = rng.randint(i, 9)
            counts[(i, j)] = counts.get((i, j), 0) + rng.randint(1, 40)
        part = EdgePartition(counts)
        by_kernel = RadScalar.zero()
        for (i, j), m in part.items():
            by_kernel = by_kernel + m * hso_pair(i, j)
        assert hso_via_pipeline(part.to_bipoly()) == by_kernel


def test_pipeline_merges_colliding_degree_pairs_correctly():
    # degree pairs (1,7) and (5,5) both map to exponent 50 after the diagonal
    # substitution; the merge must preserve the per-class 1/i weights.
    # K6 (fifteen (5,5) edges) plus a disjoint 7-leaf star (seven (1,7) edges):
    # 15*sqrt(50)/5 + 7*sqrt(50)/1 = 15*sqrt(2) + 35*sqrt(2) = 50*sqrt(2).
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6)]
    edges += [(6, 7 + k) for k in range(7)]
    g = SimpleGraph(14, edges)
    with pytest.warns(DisconnectedGraphWarning):
        poly = m_polynomial(g)
    assert poly == BiPoly([((5, 5), 15), ((1, 7), 7)])
    expected = RadScalar([(2, 50)])
    assert hso_via_pipeline(poly) == expected
    with pytest.warns(DisconnectedGraphWarning):
        assert hso_direct(g) == expected


def test_pipeline_matches_direct_on_random_graphs():
    rng = random.Random(99)
    for _ in range(100):
        g = random_connected_graph(rng.randint(3, 12), rng)
        assert hso_via_pipeline(m_polynomial(g)) == hso_direct(g)


def test_regular_graph_specialization():
    # any r-regular graph on n vertices gives n*r/sqrt(2)
    for n, r in [(6, 3), (8, 4), (10, 5), (7, 6)]:
        g = construct(make_spec("rregular", {"n": n, "r": r}))
        expected = RadScalar([(2, F(n * r, 2))])
        assert hso_direct(g) == hso_via_pipeline(m_polynomial(g)) == expected


# -- fixed-point rendering ----------------------------------------------------------


def test_fixed_decimal_rounds_half_even():
    assert fixed_decimal(RadScalar.rational(F(1, 20000))) == Decimal("0.0000")
    assert fixed_decimal(RadScalar.rational(F(3, 20000))) == Decimal("0.0002")
    assert fixed_decimal(RadScalar.rational(F(1, 8)), places=2) == Decimal("0.12")
    assert fixed_decimal(RadScalar.rational(F(3, 8)), places=2) == Decimal("0.38")


def test_format_fixed_examples():
    assert format_fixed(RadScalar([(5, 2)])) == "4.4721"
    assert format_fixed(RadScalar([(2, 9)])) == "12.7279"
    assert format_fixed(RadScalar.rational(20)) == "20.0000"


def test_fixed_decimal_keeps_fraction_digits_at_any_magnitude():
    # dendrimer values grow like 2^n, so rendering must widen its precision
    huge = RadScalar.rational(10 ** 40 + F(1, 3))
    assert fixed_decimal(huge) == Decimal("1" + "0" * 40 + ".3333")
    assert str(fixed_decimal(RadScalar.rational(F(2 ** 401, 3)))).endswith(".6667")
    spec = make_spec("petim", {"n": 120})
    assert hso_via_pipeline(catalog_mpoly(spec)) == closed_hso(spec)
    assert len(format_fixed(closed_hso(spec))) > 40  # ~2^120 scale, 4 decimals


# -- reports ------------------------------------------------------------------------


def test_report_for_cycle_has_three_agreeing_routes():
    report = compute_report(make_spec("cycle", {"n": 9}))
    assert set(report.routes) == {"direct", "pipeline", "closed"}
    assert report.agreement
    nine_root_two = RadScalar([(2, 9)])
    assert all(v == nine_root_two for v in report.routes.values())
    assert report.float_value == 12.7279
    assert report.exact == "9*sqrt(2)"
    assert report.structural is True


def test_report_for_petim_matches_reference():
    report = compute_report(make_spec("petim", {"n": 1}))
    assert report.routes["pipeline"] == report.routes["closed"]
    assert report.float_value == 35.0878
    assert report.table_match is True


def test_report_for_zinc_porphyrin_pins_reference_mismatch():
    report = compute_report(make_spec("dpzn", {"n": 1}))
    assert report.agreement            # internal routes agree...
    assert report.table_match is False  # ...the tabulated value does not
    assert report.float_value == 201.2403
    assert report.table_expected == 243.6667


def test_report_for_graph_matches_family_report():
    by_graph = compute_report(SimpleGraph(3, [(0, 1), (1, 2)]))
    by_family = compute_report(make_spec("path", {"n": 3}))
    assert by_graph.float_value == by_family.float_value == 4.4721
    assert by_graph.routes["pipeline"] == by_family.routes["pipeline"]
    assert set(by_graph.routes) == {"direct", "pipeline"}


def test_report_skips_direct_route_for_unit_tail_tadpole():
    report = compute_report(make_spec("tadpole", {"n": 5, "m": 1}))
    assert set(report.routes) == {"pipeline", "closed"}
    assert report.agreement
    assert any("direct route omitted" in note for note in report.notes)


def test_report_for_degenerate_parameters_is_formula_only():
    report = compute_report(make_spec("tadpole", {"n": 1, "m": 1}))
    assert report.structural is False
    assert report.partition is None
    assert report.agreement
    assert report.float_value == 4.8160


def test_report_json_schema():
    report = compute_report(make_spec("vphy", {"m": 2, "n": 2}))
    obj = json.loads(json.dumps(report.to_json_obj()))
    assert obj["routes"] == {"pipeline": 50.9117, "closed": 50.9117}
    assert obj["exact"] == "36*sqrt(2)"
    assert obj["agreement"] is True
    assert obj["structural"] is True
    assert obj["table_expected"] == 50.9117
    assert obj["table_match"] is True
    assert obj["m_polynomial"] == [{"i": 3, "j": 3, "coeff": [{"q": "36", "r": 1}]}]
    assert obj["partition"] == {"3,3": 36}


def test_report_json_for_graph_has_partition_but_no_table():
    report = compute_report(SimpleGraph(3, [(0, 1), (1, 2)]), label="graph:p3")
    obj = report.to_json_obj()
    assert obj["input"] == "graph:p3"
    assert obj["partition"] == {"1,2": 2}
    assert "table_expected" not in obj
    assert "structural" not in obj
