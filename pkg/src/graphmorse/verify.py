"""Invariant checks run by ``graphmorse verify`` and the property tests."""

from __future__ import annotations

from .discrete_morse import check_acyclic, check_morse
from .gauge import build_gauge, flux, head_edges_form_tree, square_cycle
from .graph_model import Graph
from .morse_homology import vpath_boundary
from .pipeline import PipelineResult, run
from .snf import IntegerMatrix
from .trial_fix import TieBreak


def invariant_failures(result: PipelineResult, vpaths: bool = False) -> list[str]:
    """Names of every violated invariant (empty when all hold)."""
    fails = []
    cx, field, mc = result.complex, result.field, result.morse
    if check_morse(cx, result.f2):
        fails.append("repaired function is not Morse")
    if not check_acyclic(field):
        fails.append("gradient field has a closed V-path")
    d1 = IntegerMatrix.from_rows(cx.boundary_matrix(1), len(cx.cells1))
    d2 = IntegerMatrix.from_rows(cx.boundary_matrix(2), len(cx.cells2))
    if d1.rows and d2.cols and not (d1 @ d2).is_zero():
        fails.append("cellular boundary does not square to zero")
    if not (mc.boundary1_tilde @ mc.boundary2_tilde).is_zero():
        fails.append("Morse boundary does not square to zero")
    if result.prediction.all() != frozenset(field.critical):
        fails.append("closed-form critical cells differ from realised ones")
    oracle = result.oracle
    if oracle is not None:
        if not result.homology.same_h1(oracle):
            fails.append(f"H1 mismatch: Morse {result.homology} vs oracle {oracle}")
        n0, n1, n2 = mc.counts()
        if n0 < oracle.h0_rank or n1 < oracle.free_rank or n2 < oracle.h2_rank:
            fails.append("Morse inequalities violated")
    n0, n1, n2 = mc.counts()
    if n0 - n1 + n2 != cx.euler_characteristic():
        fails.append("alternating critical count differs from Euler characteristic")
    gauge = build_gauge(cx, field)
    if len(gauge.params) != n1:
        fails.append("gauge parameter count differs from critical 1-cell count")
    for sq in cx.cells2:
        if not field.is_critical(sq) and not flux(gauge, square_cycle(sq)).is_zero():
            fails.append(f"nonzero flux through paired square {sq}")
            break
    if not head_edges_form_tree(cx, field):
        fails.append("head edges do not form a spanning tree")
    if vpaths:
        vp = vpath_boundary(cx, field)
        if vp.boundary1_tilde != mc.boundary1_tilde or vp.boundary2_tilde != mc.boundary2_tilde:
            fails.append("V-path enumeration disagrees with gradient flow")
    return fails


def check_graph(graph: Graph, policies=(TieBreak.MIN, TieBreak.MAX), vpaths: bool = False) -> list[str]:
    out = []
    for policy in policies:
        try:
            result = run(graph, policy=policy)
        except AssertionError as exc:
            out.append(f"[{TieBreak(policy).value}] repair self-check failed: {exc}")
            continue
        out.extend(f"[{TieBreak(policy).value}] {msg}" for msg in invariant_failures(result, vpaths))
    return out
