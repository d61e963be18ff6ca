"""Shared corpus for the acceptance run and the heavier property tests."""

from functools import lru_cache

from conftest import FIXTURES, SEED
from zigzag.category import load_cat
from zigzag.corpus import (
    chain_semilattice,
    cyclic_group_with_zero,
    example_semigroup,
    fixture_categories,
    random_graphs,
    single_edge_graph,
    symmetric_inverse_monoid,
)
from zigzag.graphs import graph_inverse_semigroup
from zigzag.morita import im_construction
from zigzag.zm import zm

N_GRAPHS = 40


@lru_cache(maxsize=None)
def graphs():
    """The first N_GRAPHS pairwise distinct graphs from a seeded stream."""
    out, seen = [], set()
    for G in random_graphs(SEED, 10 * N_GRAPHS):
        key = (tuple(G.vertices), tuple(sorted(G.edges.values())))
        if key not in seen:
            seen.add(key)
            out.append(G)
        if len(out) == N_GRAPHS:
            break
    return out


@lru_cache(maxsize=None)
def categories():
    cats = dict(fixture_categories())
    cats["example_cat"] = load_cat(FIXTURES / "example.cat")
    return cats


@lru_cache(maxsize=None)
def im_inputs():
    return {
        "I1": symmetric_inverse_monoid(1),
        "I2": symmetric_inverse_monoid(2),
        "I3": symmetric_inverse_monoid(3),
        "chain3": chain_semilattice(3),
        "C2_0": cyclic_group_with_zero(2),
        "single_edge_gis": graph_inverse_semigroup(single_edge_graph()),
        "example": example_semigroup(),
    }


@lru_cache(maxsize=None)
def im_outputs():
    return {name: im_construction(S) for name, S in im_inputs().items()}


@lru_cache(maxsize=None)
def semigroups():
    """name -> inverse semigroup with zero; at least 50 entries."""
    out = {}
    for i, G in enumerate(graphs()):
        out[f"gis[{i}]"] = graph_inverse_semigroup(G)
    for name, IM in im_outputs().items():
        out[f"im[{name}]"] = IM
    for name, C in categories().items():
        out[f"zm[{name}]"] = zm(C)
    out["example"] = example_semigroup()
    return out
