"""Discrete Morse functions and first homology for two-particle graph
configuration spaces."""

from .config_complex import Cell, TwoParticleComplex, build_d2, check_abrams, euler_characteristic
from .discrete_morse import (
    GradientField,
    VPath,
    build_gradient_field,
    check_acyclic,
    check_morse,
    enumerate_vpaths,
)
from .gauge import GaugePotential, Phase, build_gauge, flux
from .graph_model import Graph, OneParticleMorse, RootedSpanningTree, build_f1, build_spanning_tree, relabel_by_tree
from .morse_homology import (
    HomologyResult,
    MorseComplex,
    cellular_homology_oracle,
    homology_h1,
    morse_boundary,
    vpath_boundary,
)
from .pipeline import PipelineResult, run
from .snf import IntegerMatrix, smith_normal_form
from .trial_fix import RepairLog, TieBreak, classify_critical, repair, trial_f2

__version__ = "0.1.0"
