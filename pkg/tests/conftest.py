"""Shared structures used across the test modules."""

import json
import pathlib

import pytest

from permpack.johnson import ExactSubgraph, expand_cc, make_subgraph

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> dict:
    with open(FIXTURES / name) as fh:
        return json.load(fh)


def two_factor_g35() -> ExactSubgraph:
    """The exact 2-factor of 3-subsets of {1..5}: two disjoint 5-cycles."""
    a = expand_cc((1, 2, 3, 4, 5), 3)
    b = expand_cc((1, 3, 5, 2, 4), 3)
    return make_subgraph(list(a.edges) + list(b.edges), kind="two_factor")


def nest_g35() -> ExactSubgraph:
    """5-cycle on the windows of (12345) plus five pendant edges; spans
    all ten 3-subsets of {1..5}."""
    core = expand_cc((1, 2, 3, 4, 5), 3)
    pendants = [((1, 3, 2), (1, 3, 5)), ((4, 2, 3), (4, 2, 1)),
                ((3, 5, 4), (3, 5, 2)), ((4, 1, 5), (4, 1, 3)),
                ((2, 5, 1), (2, 5, 4))]
    edges = list(core.edges) + [(frozenset(a), frozenset(b)) for a, b in pendants]
    return make_subgraph(edges, kind="nest")


def nest_g46() -> ExactSubgraph:
    """12-cycle alternating the 1113 and 1122 cyclic compositions of 6,
    plus three pendant edges into the 1212 family; spans all fifteen
    4-subsets of {1..6}."""
    cyc = [(1, 2, 3, 4), (1, 2, 3, 5), (2, 3, 4, 5), (2, 3, 4, 6),
           (3, 4, 5, 6), (3, 4, 5, 1), (4, 5, 6, 1), (4, 5, 6, 2),
           (5, 6, 1, 2), (5, 6, 1, 3), (6, 1, 2, 3), (6, 1, 2, 4)]
    edges = [(cyc[i], cyc[(i + 1) % 12]) for i in range(12)]
    edges += [((1, 2, 3, 5), (1, 2, 4, 5)), ((3, 4, 5, 1), (3, 4, 6, 1)),
              ((5, 6, 1, 3), (2, 3, 5, 6))]
    return make_subgraph([(frozenset(a), frozenset(b)) for a, b in edges], kind="nest")


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES
