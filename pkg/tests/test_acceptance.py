"""Acceptance criteria, one test per criterion.

Each test records a one-line PASS/FAIL summary in RESULTS; the conftest hook
prints them at the end of the pytest run, and running this file directly
prints them as it goes.
"""

import sys
import time
from contextlib import contextmanager

from corpus_build import categories, graphs, im_inputs, im_outputs, semigroups
from zigzag.category import check_left_cancellative, check_singly_aligned
from zigzag.corpus import example_semigroup, symmetric_inverse_monoid
from zigzag.graphs import gis_to_zm_map, graph_inverse_semigroup, path_category_of_graph
from zigzag.morita import im_construction
from zigzag.paths import (
    check_z2,
    check_z3,
    domain_paths,
    path_category,
    quotient_vs_zm,
    theta_check,
    z_congruence_quotient,
)
from zigzag.semigroup import (
    check_p1,
    check_p4,
    check_z1,
    eggbox,
    maximal_idempotents,
    verify_isomorphism,
)
from zigzag.zm import unitary_vs_right_cancellative, verify_singly_aligned_identities, zm

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(n, title):
    t = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        RESULTS[n] = f"criterion {n} FAIL  {title}: {msg}"
        print(RESULTS[n])
        raise
    RESULTS[n] = f"criterion {n} PASS  {title} ({time.perf_counter() - t:.2f}s)"
    print(RESULTS[n])


def _cell(text):
    top, bottom = text.rstrip("*").split("/")
    return frozenset(zip(map(int, top.split()), map(int, bottom.split())))


# The expected nonzero D-classes, one grid per class; a cell "dom/img" lists
# the domain points over their images, and "*" marks a maximal idempotent.
REFERENCE_EGGBOX = [
    [["7 8 9 10/7 8 9 10*"]],
    [["7 8 9/7 8 9", "1 2 3/7 8 9"],
     ["7 8 9/1 2 3", "1 2 3/1 2 3*"]],
    [["7 8 10/7 8 10", "4 5 6/7 8 10"],
     ["7 8 10/4 5 6", "4 5 6/4 5 6*"]],
    [["1 2/1 2", "4 5/1 2", "7 8/1 2"],
     ["1 2/4 5", "4 5/4 5", "7 8/4 5"],
     ["1 2/7 8", "4 5/7 8", "7 8/7 8"]],
    [["1/1", "11/1", "7/1", "4/1"],
     ["1/11", "11/11*", "7/11", "4/11"],
     ["1/7", "11/7", "7/7", "4/7"],
     ["1/4", "11/4", "7/4", "4/4"]],
]


def test_criterion_1_example_eggbox():
    with criterion(1, "Example closure: 34 nonzero, D-classes 1/4/4/9/16, eggbox grids, 4 maxima"):
        t = time.perf_counter()
        S = example_semigroup()
        boxes = eggbox(S)
        elapsed = time.perf_counter() - t
        assert len(S.nonzero) == 34, f"{len(S.nonzero)} nonzero elements"
        assert sorted(b.size for b in boxes) == [1, 4, 4, 9, 16]

        def key(s):
            return frozenset(S.elements[s].pairs())

        ours = {}
        for b in boxes:
            rows = frozenset(frozenset(key(s) for j in range(b.shape[1]) for s in b.cell(i, j)) for i in range(b.shape[0]))
            cols = frozenset(frozenset(key(s) for i in range(b.shape[0]) for s in b.cell(i, j)) for j in range(b.shape[1]))
            assert all(len(c) == 1 for c in b.cells.values()), "non-singleton H-class"
            members = frozenset().union(*rows)
            ours[members] = (rows, cols, frozenset(key(m) for m in b.maximal))

        for grid in REFERENCE_EGGBOX:
            rows = frozenset(frozenset(_cell(c) for c in row) for row in grid)
            cols = frozenset(frozenset(_cell(row[j]) for row in grid) for j in range(len(grid[0])))
            marked = frozenset(_cell(c) for row in grid for c in row if c.endswith("*"))
            members = frozenset().union(*rows)
            assert members in ours, f"no D-class with elements {sorted(map(sorted, members))}"
            got_rows, got_cols, got_max = ours[members]
            assert got_rows == rows, "R-classes differ"
            assert got_cols == cols, "L-classes differ"
            assert got_max == marked, "maximal idempotents differ"
        assert len(maximal_idempotents(S)) == 4
        assert elapsed < 1.0, f"took {elapsed:.2f}s"


def test_criterion_2_example_axioms():
    with criterion(2, "Example verdicts: Z1 pass, Z2 pass, Z3 fail with (b*a, yx*), P4 fail, P1 fail"):
        t = time.perf_counter()
        S = example_semigroup()
        g = {S.label(s): s for s in range(len(S))}
        x, y = g["x"], g["y"]
        ba = S.prod(S.star[g["b"]], g["a"])
        yx_ = S.prod(y, S.star[x])
        assert check_z1(S)
        assert check_z2(S)
        z3 = check_z3(S)
        assert not z3
        for s, t_ in z3.witness:
            assert s != t_
            assert domain_paths(S, s) == domain_paths(S, t_)
            assert all(S.mul[s, p] == S.mul[t_, p] for p in domain_paths(S, s))
        assert {ba, yx_} in [set(w) for w in z3.witness], "(b*a, yx*) not reported"
        assert not check_p4(S)
        assert not check_p1(S)
        assert time.perf_counter() - t < 1.0


def test_criterion_3_main_theorem_corpus():
    with criterion(3, "theta_check on every Z1+Z2+Z3 corpus instance (>= 50 instances)"):
        t = time.perf_counter()
        corpus = semigroups()
        assert len(corpus) >= 50, f"corpus has {len(corpus)} instances"
        applicable, failures = 0, []
        for name, S in corpus.items():
            if not (check_z1(S) and check_z2(S) and check_z3(S)):
                continue
            applicable += 1
            if not theta_check(S):
                failures.append(name)
        assert applicable >= 50, f"only {applicable} instances satisfy Z1-Z3"
        assert not failures, f"theta fails on {failures}"
        assert time.perf_counter() - t < 60


def test_criterion_4_singly_aligned_identities():
    with criterion(4, "singly aligned identities on every singly aligned fixture category"):
        t = time.perf_counter()
        checked = 0
        for name, C in categories().items():
            if not (check_left_cancellative(C) and check_singly_aligned(C)):
                continue
            checked += 1
            for check, v in verify_singly_aligned_identities(C).items():
                assert v, f"{name}: {check}: {v.detail}"
        assert checked >= 8
        assert time.perf_counter() - t < 60


def test_criterion_5_unitary_iff_right_cancellative():
    with criterion(5, "ZM(C) 0-E-unitary iff C right cancellative, both directions"):
        seen = set()
        cats = dict(categories())
        for i, G in enumerate(graphs()[:10]):
            cats[f"graph[{i}]"] = path_category_of_graph(G)
        for name, S in im_outputs().items():
            if len(S) <= 250:
                cats[f"C(im[{name}])"] = path_category(S)
        for name, C in cats.items():
            u, rc = unitary_vs_right_cancellative(C)
            assert u == rc, f"{name}: 0-E-unitary={u}, right cancellative={rc}"
            seen.add(u)
        assert not unitary_vs_right_cancellative(categories()["non_right_cancellative"])[0]
        assert seen == {True, False}


def test_criterion_6_quotient():
    with criterion(6, "Example quotient has order 34 and is isomorphic to ZM(C(S)); corpus quotients bijective"):
        S = example_semigroup()
        Q = z_congruence_quotient(S)
        assert quotient_vs_zm(S), "quotient not isomorphic to ZM(C(S))"
        for name, T in semigroups().items():
            if check_z1(T) and check_z2(T) and check_z3(T):
                Qt = z_congruence_quotient(T)
                assert len(Qt) == len(T), f"{name}: quotient map not bijective"
        assert len(Q) == 34, f"quotient has order {len(Q)}, expected 34"


def test_criterion_7_morita():
    with criterion(7, "IM(I2) has 19 elements; corpus IM outputs pass Z1-Z3 and are singly aligned"):
        t = time.perf_counter()
        assert len(im_construction(symmetric_inverse_monoid(2))) == 19
        for name, IM in im_outputs().items():
            assert check_z1(IM), name
            assert check_z2(IM), name
            assert check_z3(IM), name
            assert check_singly_aligned(path_category(IM)), name
        assert len(im_inputs()) >= 5
        assert time.perf_counter() - t < 30


def test_criterion_8_graph_oracle():
    with criterion(8, "graph inverse semigroup isomorphic to ZM of its path category, every corpus graph"):
        for i, G in enumerate(graphs()):
            S = graph_inverse_semigroup(G)
            C = path_category_of_graph(G)
            T = zm(C)
            v = verify_isomorphism(S, T, gis_to_zm_map(G, S, C, T))
            assert v, f"graph[{i}]: {v.detail}"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
