import pytest

from graphmorse.graph_model import Graph
from graphmorse.pipeline import run

LASSO_EDGES = [(1, 2), (2, 3), (2, 4), (3, 4)]
LASSO_TREE = [(1, 2), (2, 3), (2, 4)]
BOWTIE_EDGES = [(1, 2), (2, 3), (1, 3), (2, 4), (2, 5), (4, 5)]
BOWTIE_TREE = [(1, 2), (2, 3), (2, 4), (2, 5)]
STAR_EDGES = [(1, 2), (2, 3), (2, 4)]


@pytest.fixture
def lasso():
    return Graph.from_edges(4, LASSO_EDGES)


@pytest.fixture
def bowtie():
    return Graph.from_edges(5, BOWTIE_EDGES)


@pytest.fixture
def star():
    return Graph.from_edges(4, STAR_EDGES)


@pytest.fixture
def lasso_run(lasso):
    return run(lasso, LASSO_TREE, 1)


@pytest.fixture
def bowtie_run(bowtie):
    return run(bowtie, BOWTIE_TREE, 1)


@pytest.fixture
def star_run(star):
    return run(star)
