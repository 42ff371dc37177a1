"""End-to-end run: graph -> labelled tree -> D2 -> repaired Morse function ->
Morse complex -> H1, alongside the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .config_complex import Cell, TwoParticleComplex, build_d2
from .discrete_morse import GradientField, build_gradient_field
from .graph_model import Graph, OneParticleMorse, RootedSpanningTree, build_f1, prepare
from .morse_homology import (
    HomologyResult,
    MorseComplex,
    cellular_homology_oracle,
    homology_h1,
    morse_boundary,
)
from .trial_fix import CriticalPrediction, RepairLog, TieBreak, classify_critical, repair, trial_f2


@dataclass
class PipelineResult:
    graph: Graph  # relabelled
    tree: RootedSpanningTree
    labels: dict[int, int]  # input vertex -> preorder label
    policy: TieBreak
    f1: OneParticleMorse
    complex: TwoParticleComplex
    f2_trial: dict[Cell, int]
    f2: dict[Cell, int]
    log: RepairLog
    field: GradientField
    prediction: CriticalPrediction
    morse: MorseComplex
    homology: HomologyResult
    oracle: HomologyResult | None

    @property
    def agreement(self) -> bool | None:
        return None if self.oracle is None else self.homology.same_h1(self.oracle)


def run(
    graph: Graph,
    tree: Iterable[Sequence[int]] | None = None,
    root: int | None = None,
    policy: TieBreak | str = TieBreak.MIN,
    oracle: bool = True,
) -> PipelineResult:
    policy = TieBreak(policy)
    g, t, labels = prepare(graph, tree, root)
    f1 = build_f1(g, t)
    cx = build_d2(g)
    ft = trial_f2(cx, f1)
    f2, log = repair(cx, ft, t, policy)
    field = build_gradient_field(cx, f2)
    mc = morse_boundary(cx, field)
    return PipelineResult(
        graph=g,
        tree=t,
        labels=labels,
        policy=policy,
        f1=f1,
        complex=cx,
        f2_trial=ft,
        f2=f2,
        log=log,
        field=field,
        prediction=classify_critical(g, t, policy),
        morse=mc,
        homology=homology_h1(mc),
        oracle=cellular_homology_oracle(cx) if oracle else None,
    )
