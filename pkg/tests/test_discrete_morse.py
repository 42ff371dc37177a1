import pytest

from graphmorse.complex import CellComplex
from graphmorse.config_complex import Cell, build_d2
from graphmorse.discrete_morse import (
    GradientField,
    build_gradient_field,
    check_acyclic,
    check_morse,
    critical_cells,
    enumerate_vpaths,
)
from graphmorse.errors import MissingValue, NotMorse
from graphmorse.pipeline import run
from graphmorse.random_graphs import random_graphs

C = Cell.parse


def names(cells):
    return sorted(str(c) for c in cells)


def test_repaired_lasso_is_morse(lasso_run):
    assert check_morse(lasso_run.complex, lasso_run.f2) == []


def test_trial_lasso_single_violation(lasso_run):
    (v,) = check_morse(lasso_run.complex, lasso_run.f2_trial)
    assert v.cell == C("(3,4)")
    assert names(v.low_cofaces) == ["3x(2,4)", "4x(2,3)"]
    assert v.high_faces == ()


def test_dimension_function_is_morse_with_all_cells_critical(bowtie):
    cx = build_d2(bowtie)
    f = {c: c.dim for c in cx.all_cells()}
    assert check_morse(cx, f) == []
    field = build_gradient_field(cx, f)
    assert field.pairs == []
    assert field.critical == set(cx.all_cells())


def test_missing_value(lasso):
    cx = build_d2(lasso)
    with pytest.raises(MissingValue):
        check_morse(cx, {})


def test_not_morse_raises(lasso_run):
    with pytest.raises(NotMorse) as exc:
        build_gradient_field(lasso_run.complex, lasso_run.f2_trial)
    assert len(exc.value.violations) == 1


def test_lasso_critical(lasso_run):
    assert names(lasso_run.field.critical) == ["(1,2)", "1x(3,4)", "3x(2,4)"]


def test_bowtie_critical(bowtie_run):
    assert names(bowtie_run.field.critical) == sorted(
        ["(1,2)", "1x(4,5)", "2x(1,3)", "3x(2,4)", "3x(2,5)", "4x(2,5)", "(1,3)x(4,5)"]
    )


def test_vpaths_from_5x13(bowtie_run):
    paths = enumerate_vpaths(bowtie_run.field, [C("5x(1,3)")])
    got = sorted([str(c) for c in p.cells] for p in paths)
    assert got == [
        ["5x(1,3)", "(1,3)x(2,5)", "2x(1,3)"],
        ["5x(1,3)", "(1,3)x(2,5)", "3x(2,5)"],
    ]


def test_vpath_from_critical_is_trivial(bowtie_run):
    (p,) = enumerate_vpaths(bowtie_run.field, [C("1x(4,5)")])
    assert p.cells == (C("1x(4,5)"),) and p.sign == 1


def test_vpath_from_3x45(bowtie_run):
    (p,) = enumerate_vpaths(bowtie_run.field, [C("3x(4,5)")])
    assert [str(c) for c in p.cells] == [
        "3x(4,5)", "(2,3)x(4,5)", "2x(4,5)", "(1,2)x(4,5)", "1x(4,5)",
    ]


def _two_gon():
    return CellComplex({0: ["a", "b"], 1: ["e1", "e2"]}, {"e1": {"b": 1, "a": -1}, "e2": {"a": 1, "b": -1}})


def test_cyclic_field_detected():
    cx = _two_gon()
    assert not check_acyclic(GradientField(cx, [("a", "e1"), ("b", "e2")]))
    assert check_acyclic(GradientField(cx, [("a", "e1")], {"b", "e2"}))


def test_empty_field_acyclic(lasso):
    assert check_acyclic(GradientField(build_d2(lasso)))


def test_field_rejects_double_pairing():
    with pytest.raises(ValueError):
        GradientField(_two_gon(), [("a", "e1"), ("a", "e2")])


@pytest.mark.parametrize("seed", range(25))
@pytest.mark.parametrize("policy", ["min", "max"])
def test_field_properties(seed, policy):
    (graph,) = random_graphs(seed=seed, count=1, min_vertices=3, max_vertices=7)
    r = run(graph, policy=policy)
    f, field, cx = r.f2, r.field, r.complex
    assert check_acyclic(field)
    roles = [field.is_tail(c) + field.is_head(c) + field.is_critical(c) for c in cx.all_cells()]
    assert roles == [1] * len(cx)
    assert sorted(field.critical) == critical_cells(cx, f)
    tails = [a for a, _ in field.pairs]
    for path in enumerate_vpaths(field, tails, end=lambda c: True):
        cells = path.cells
        for i in range(0, len(cells) - 2, 2):
            a, b, a_next = cells[i], cells[i + 1], cells[i + 2]
            assert f[b] <= f[a]
            assert f[a_next] < f[b]
    n = [len(field.critical_of_dim(d)) for d in range(3)]
    assert n[0] - n[1] + n[2] == cx.euler_characteristic()
    assert n[0] >= r.oracle.h0_rank and n[1] >= r.oracle.free_rank and n[2] >= r.oracle.h2_rank
