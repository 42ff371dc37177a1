import math

import pytest

from graphmorse.config_complex import Cell
from graphmorse.errors import NotAClosedCycle
from graphmorse.gauge import (
    ZERO,
    DirectedEdge,
    Phase,
    build_gauge,
    flux,
    head_edges_form_tree,
    square_cycle,
    walk,
)
from graphmorse.pipeline import run
from graphmorse.random_graphs import random_graphs

C = Cell.parse


@pytest.fixture
def lasso_gauge(lasso_run):
    return build_gauge(lasso_run.complex, lasso_run.field)


def test_lasso_parameters(lasso_gauge):
    assert [(n, str(c)) for n, c in lasso_gauge.params] == [("phi1", "1x(3,4)"), ("phi2", "3x(2,4)")]
    assert lasso_gauge[C("2x(3,4)")] == lasso_gauge[C("1x(3,4)")] == Phase.param("phi1")
    assert lasso_gauge.constraints == []


def test_lasso_square_flux(lasso_gauge):
    assert flux(lasso_gauge, square_cycle(C("(1,2)x(3,4)"))).is_zero()
    # the same square walked around its corners in the other direction
    cyc = walk([C("(1,3)"), C("(1,4)"), C("(2,4)"), C("(2,3)")])
    assert [str(e) for e in cyc] == ["1,3->4", "4,1->2", "2,4->3", "3,2->1"]
    assert flux(lasso_gauge, cyc).is_zero()


def test_lasso_heads_vanish(lasso_run, lasso_gauge):
    heads = lasso_run.field.heads_of_dim(1)
    assert len(heads) == len(lasso_run.complex.cells0) - 1
    assert all(lasso_gauge[h].is_zero() for h in heads)


def test_lasso_exchange_cycle(lasso_gauge):
    cyc = walk([C(s) for s in ["(1,2)", "(1,3)", "(2,3)", "(3,4)", "(2,4)", "(1,4)"]])
    assert flux(lasso_gauge, cyc) == Phase.param(lasso_gauge.param_of(C("3x(2,4)")))
    back = [e.reversed() for e in reversed(cyc)]
    assert flux(lasso_gauge, back) == -flux(lasso_gauge, cyc)


def test_open_walk_rejected(lasso_gauge):
    e = DirectedEdge(C("1x(2,3)"))
    with pytest.raises(NotAClosedCycle):
        flux(lasso_gauge, [e])
    with pytest.raises(NotAClosedCycle):
        walk([C("(1,2)"), C("(3,4)")])


def test_flux_additive(lasso_gauge):
    sq = square_cycle(C("(1,2)x(3,4)"))
    # both loops start at (1,3)
    ex = walk([C(s) for s in ["(1,3)", "(2,3)", "(3,4)", "(2,4)", "(1,4)", "(1,2)"]])
    sq13 = walk([C("(1,3)"), C("(1,4)"), C("(2,4)"), C("(2,3)")])
    assert flux(lasso_gauge, ex + sq13) == flux(lasso_gauge, ex) + flux(lasso_gauge, sq13)
    assert flux(lasso_gauge, sq).is_zero()


def test_bowtie_constraint(bowtie_run):
    g = build_gauge(bowtie_run.complex, bowtie_run.field)
    assert len(g.params) == 5
    ((sq, expr),) = g.constraints
    assert str(sq) == "(1,3)x(4,5)"
    col = bowtie_run.morse.column(2, sq)
    by_name = {g.param_of(c): k for c, k in col.items()}
    assert expr == Phase.of(by_name) or expr == -Phase.of(by_name)


def test_star(star_run):
    g = build_gauge(star_run.complex, star_run.field)
    assert len(g.params) == 1 and g.constraints == []


def test_custom_names(lasso_run):
    g = build_gauge(lasso_run.complex, lasso_run.field, names=["phi", "psi"])
    assert g[C("2x(3,4)")] == Phase.param("phi")
    assert g.to_json()["params"] == [{"name": "phi", "cell": "1x(3,4)"}, {"name": "psi", "cell": "3x(2,4)"}]


def test_phase_arithmetic():
    a, b = Phase.param("a"), Phase.param("b")
    assert (a + b - a) == b
    assert (a * 3 + -a).as_dict() == {"a": 2}
    assert (a - a).is_zero() and ZERO.is_zero()
    assert math.isclose(Phase.of({"a": 2}).evaluate({"a": math.pi}), 0.0, abs_tol=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_random_graphs(seed):
    (graph,) = random_graphs(seed=500 + seed, count=1, min_vertices=3, max_vertices=7)
    r = run(graph)
    g = build_gauge(r.complex, r.field)
    assert head_edges_form_tree(r.complex, r.field)
    assert len(g.params) == len(r.field.critical_of_dim(1))
    for sq in r.complex.cells2:
        if not r.field.is_critical(sq):
            assert flux(g, square_cycle(sq)).is_zero()
    assert len(g.constraints) == len(r.field.critical_of_dim(2))
