"""Standard small instances used by the tests, the acceptance run and the CLI."""

from __future__ import annotations

import itertools
import random

from .category import FiniteCategory, cyclic_group_category, group_category
from .graphs import DirectedGraph, random_acyclic_graph
from .pbij import GroundSet, PartialBijection
from .semigroup import FiniteInverseSemigroup, generate


def example_generators() -> dict[str, PartialBijection]:
    G = GroundSet.range(11)
    P = lambda pairs: PartialBijection.from_pairs(G, pairs)  # noqa: E731
    return {
        "e": P({7: 7, 8: 8, 9: 9, 10: 10}),
        "a": P({1: 7, 2: 8, 3: 9}),
        "b": P({4: 7, 5: 8, 6: 10}),
        "c": P({11: 7}),
    }


def example_semigroup() -> FiniteInverseSemigroup:
    """The inverse subsemigroup of I_11 generated by e, a, b, c (35 elements)."""
    gens = example_generators()
    G = gens["a"].ground
    names = {g: n for n, g in gens.items()}
    names[PartialBijection.from_pairs(G, {11: 1})] = "x"
    names[PartialBijection.from_pairs(G, {11: 4})] = "y"
    return generate(list(gens.values()), names=names)


EXAMPLE_PBIJ = """\
# inverse subsemigroup of I_11 with a D-class lacking a maximal idempotent
ground 11
gen e = 7:7 8:8 9:9 10:10
gen a = 1:7 2:8 3:9
gen b = 4:7 5:8 6:10
gen c = 11:7
"""


def all_partial_bijections(n: int) -> list[PartialBijection]:
    G = GroundSet.range(n)
    out = []
    pts = list(G)
    for k in range(n + 1):
        for dom in itertools.combinations(pts, k):
            for img in itertools.permutations(pts, k):
                out.append(PartialBijection.from_pairs(G, zip(dom, img)))
    return out


def symmetric_inverse_monoid(n: int) -> FiniteInverseSemigroup:
    elements = all_partial_bijections(n)
    return FiniteInverseSemigroup.from_elements(
        elements, zero=PartialBijection.zero(elements[0].ground), generators=elements
    )


def chain_semilattice(k: int) -> FiniteInverseSemigroup:
    """e_1 > e_2 > ... > e_k > 0 as nested identities."""
    G = GroundSet.range(k)
    gens = [PartialBijection.identity(G, range(1, k - i + 1)) for i in range(k)]
    return generate(gens, zero=PartialBijection.zero(G))


def cyclic_group_with_zero(n: int) -> FiniteInverseSemigroup:
    G = GroundSet.range(n)
    rot = PartialBijection.from_pairs(G, {i: i % n + 1 for i in range(1, n + 1)})
    return generate([rot], zero=PartialBijection.zero(G))


def single_edge_graph() -> DirectedGraph:
    return DirectedGraph(["u", "v"], {"e": ("u", "v")})


def example_graph() -> DirectedGraph:
    """Four vertices; the example category is this path category with c = ax = by."""
    return DirectedGraph(
        ["E", "A", "B", "K"],
        {"a": ("A", "E"), "b": ("B", "E"), "c": ("K", "E"), "x": ("K", "A"), "y": ("K", "B")},
    )


def non_right_cancellative_category() -> FiniteCategory:
    """u --q--> v ==p,r==> w with p q = r q: left but not right cancellative."""
    return FiniteCategory.from_tables(
        ["u", "v", "w"],
        {"u": "1u", "v": "1v", "w": "1w"},
        {"q": ("u", "v"), "p": ("v", "w"), "r": ("v", "w"), "d": ("u", "w")},
        {("p", "q"): "d", ("r", "q"): "d"},
    )


def non_singly_aligned_category() -> FiniteCategory:
    """pC ∩ rC = {d1, d2}, which is not a principal cone."""
    return FiniteCategory.from_tables(
        ["u", "v", "w"],
        {"u": "1u", "v": "1v", "w": "1w"},
        {
            "q1": ("u", "v"), "q2": ("u", "v"),
            "p": ("v", "w"), "r": ("v", "w"),
            "d1": ("u", "w"), "d2": ("u", "w"),
        },
        {("p", "q1"): "d1", ("r", "q2"): "d1", ("p", "q2"): "d2", ("r", "q1"): "d2"},
    )


def non_left_cancellative_category() -> FiniteCategory:
    return FiniteCategory.from_tables(
        ["u", "v", "w"],
        {"u": "1u", "v": "1v", "w": "1w"},
        {"q1": ("u", "v"), "q2": ("u", "v"), "p": ("v", "w"), "d": ("u", "w")},
        {("p", "q1"): "d", ("p", "q2"): "d"},
    )


def symmetric_group_category(n: int = 3) -> FiniteCategory:
    perms = list(itertools.permutations(range(n)))
    return group_category(
        perms,
        lambda f, g: tuple(f[g[i]] for i in range(n)),
        tuple(range(n)),
    )


def klein_group_category() -> FiniteCategory:
    elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return group_category(elems, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2), (0, 0))


def groupoid_category() -> FiniteCategory:
    """Two objects joined by an invertible pair: every morphism is invertible."""
    return FiniteCategory.from_tables(
        ["u", "v"],
        {"u": "1u", "v": "1v"},
        {"f": ("u", "v"), "g": ("v", "u")},
        {("f", "g"): "1v", ("g", "f"): "1u"},
    )


def fixture_categories() -> dict[str, FiniteCategory]:
    """Left cancellative fixtures (all singly aligned except where named)."""
    return {
        "Z1": cyclic_group_category(1),
        "Z2": cyclic_group_category(2),
        "Z3": cyclic_group_category(3),
        "Z4": cyclic_group_category(4),
        "V4": klein_group_category(),
        "S3": symmetric_group_category(3),
        "groupoid": groupoid_category(),
        "non_right_cancellative": non_right_cancellative_category(),
        "non_singly_aligned": non_singly_aligned_category(),
    }


def random_graphs(seed: int, count: int, max_vertices: int = 5, max_edges: int = 6) -> list[DirectedGraph]:
    rng = random.Random(seed)
    return [random_acyclic_graph(rng, max_vertices, max_edges) for _ in range(count)]
