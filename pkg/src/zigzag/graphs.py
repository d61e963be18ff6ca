"""Directed graphs, their path categories and graph inverse semigroups.

A path is stored as a tuple of edge names written the way paths compose:
``a x`` traverses ``x`` first.  The empty path at a vertex has no edges and
carries the vertex as both endpoints.
"""

from __future__ import annotations

import random
from graphlib import CycleError, TopologicalSorter
from pathlib import Path as FsPath
from typing import NamedTuple

from .category import FiniteCategory
from .errors import InputError, ParseError
from .semigroup import FiniteInverseSemigroup


class Path(NamedTuple):
    edges: tuple[str, ...]
    src: str
    rng: str

    def __str__(self):
        return ".".join(self.edges) if self.edges else self.src


def concat(p: Path, q: Path) -> Path:
    """p q, defined when src(p) == rng(q)."""
    if p.src != q.rng:
        raise InputError(f"paths {p} and {q} do not compose")
    return Path(p.edges + q.edges, q.src, p.rng)


def strip_prefix(g: Path, b: Path) -> Path | None:
    """The g' with g = b g', if any."""
    if g.rng != b.rng or g.edges[: len(b.edges)] != b.edges:
        return None
    return Path(g.edges[len(b.edges):], g.src, b.src)


class DirectedGraph:
    def __init__(self, vertices, edges):
        """``edges`` maps edge name -> (source vertex, range vertex)."""
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex")
        self.edges = dict(edges)
        names = set(self.vertices)
        for e, (s, r) in self.edges.items():
            if e in names:
                raise InputError(f"edge name {e} clashes with a vertex or edge")
            names.add(e)
            if s not in self.vertices or r not in self.vertices:
                raise InputError(f"edge {e} has an unknown endpoint")

    def __repr__(self):
        return f"<DirectedGraph vertices={len(self.vertices)} edges={len(self.edges)}>"

    def check_acyclic(self):
        ts = TopologicalSorter({v: [] for v in self.vertices})
        for e, (s, r) in self.edges.items():
            ts.add(r, s)
        try:
            tuple(ts.static_order())
        except CycleError as exc:
            cycle = exc.args[1]
            raise InputError(f"graph has a cycle through {' -> '.join(map(str, cycle))}") from None

    def paths(self) -> list[Path]:
        """All finite paths, shortest first; empty paths are the vertices."""
        self.check_acyclic()
        out = [Path((), v, v) for v in self.vertices]
        frontier = [Path((e,), s, r) for e, (s, r) in self.edges.items()]
        while frontier:
            out.extend(frontier)
            nxt = []
            for p in frontier:
                for e, (s, r) in self.edges.items():
                    if p.src == r:
                        nxt.append(Path(p.edges + (e,), s, p.rng))
            frontier = nxt
        return out

    def to_graph(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"edge {e} : {s} -> {r}" for e, (s, r) in self.edges.items()]
        return "\n".join(lines) + "\n"


def path_category_of_graph(G: DirectedGraph) -> FiniteCategory:
    ps = G.paths()
    index = {p: i for i, p in enumerate(ps)}
    vi = {v: i for i, v in enumerate(G.vertices)}
    C = FiniteCategory.from_function(
        G.vertices,
        [str(p) for p in ps],
        [vi[p.src] for p in ps],
        [vi[p.rng] for p in ps],
        list(range(len(G.vertices))),
        lambda f, g: index[concat(ps[f], ps[g])],
    )
    C.paths = ps
    return C


def graph_pair_product(p, q):
    if p is None or q is None:
        return None
    a, b = p
    c, v = q
    rest = strip_prefix(c, b)
    if rest is not None:
        return (concat(a, rest), v)
    rest = strip_prefix(b, c)
    if rest is not None:
        return (a, concat(v, rest))
    return None


def graph_inverse_semigroup(G: DirectedGraph) -> FiniteInverseSemigroup:
    ps = G.paths()
    elements = [(a, b) for a in ps for b in ps if a.src == b.src]
    elements.append(None)
    gens = [(Path((), v, v), Path((), v, v)) for v in G.vertices]
    gens += [(Path((e,), s, r), Path((), s, s)) for e, (s, r) in G.edges.items()]
    names = {x: f"({x[0]},{x[1]})" for x in elements if x is not None}
    names[None] = "0"
    S = FiniteInverseSemigroup.from_elements(
        elements,
        product=graph_pair_product,
        inverse=lambda p: None if p is None else (p[1], p[0]),
        zero=None,
        generators=gens,
        names=names,
    )
    S.graph = G
    return S


def gis_to_zm_map(G: DirectedGraph, S: FiniteInverseSemigroup, C: FiniteCategory, T) -> dict[int, int]:
    """Generator images for S_G -> ZM(path category): (a, s_a) -> tau_a."""
    ps = C.paths
    index = {p: i for i, p in enumerate(ps)}
    out = {}
    for g in S.generators:
        a, _ = S.elements[g]
        out[g] = int(T.tau[index[a]])
    return out


# .graph text format


def parse_graph(text: str, path=None) -> DirectedGraph:
    vertices, edges = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.replace("->", " -> ").replace(":", " : ").split()
        if tok[0] == "vertex" and len(tok) == 2:
            if tok[1] in vertices:
                raise ParseError(f"duplicate vertex {tok[1]}", lineno, path)
            vertices.append(tok[1])
        elif tok[0] == "edge" and len(tok) == 6 and tok[2] == ":" and tok[4] == "->":
            if tok[1] in edges:
                raise ParseError(f"duplicate edge {tok[1]}", lineno, path)
            for v in (tok[3], tok[5]):
                if v not in vertices:
                    raise ParseError(f"unknown vertex {v}", lineno, path)
            edges[tok[1]] = (tok[3], tok[5])
        else:
            raise ParseError(f"cannot parse line: {line}", lineno, path)
    if not vertices:
        raise ParseError("no vertices declared", path=path)
    try:
        G = DirectedGraph(vertices, edges)
        G.check_acyclic()
    except InputError as exc:
        raise ParseError(str(exc), path=path) from None
    return G


def load_graph(path) -> DirectedGraph:
    path = FsPath(path)
    return parse_graph(path.read_text(encoding="utf-8"), path=str(path))


def random_acyclic_graph(rng: random.Random, max_vertices=5, max_edges=6) -> DirectedGraph:
    """Edges always point from a lower to a higher vertex, so no cycles.

    At least two vertices whenever ``max_vertices`` allows it; a lone vertex
    carries no edges and would only repeat the same trivial instance.
    """
    n = rng.randint(min(2, max_vertices), max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    edges = {}
    if n > 1:
        for k in range(rng.randint(0, max_edges)):
            i, j = sorted(rng.sample(range(n), 2))
            edges[f"e{k}"] = (vertices[i], vertices[j])
    return DirectedGraph(vertices, edges)
