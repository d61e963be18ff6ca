import pytest

from corpus_build import categories, graphs, im_outputs
from zigzag.category import check_category_axioms, check_left_cancellative, check_singly_aligned, load_cat
from zigzag.errors import AxiomError, InputError
from zigzag.graphs import graph_inverse_semigroup
from zigzag.paths import (
    check_z2,
    check_z3,
    domain_counterexamples,
    domain_paths,
    intersect_counterexamples,
    path_category,
    paths,
    quotient_vs_zm,
    theta_by_generators,
    theta_check,
    theta_map,
    z_congruence_quotient,
    zigzag_normal_form,
    zigzag_words,
    zm_path_counterexamples,
)
from zigzag.pbij import GroundSet, PartialBijection
from zigzag.semigroup import check_z1, generate, maximal_idempotents, verify_isomorphism
from zigzag.zm import s_of_c, s_of_c_gen_map, zm


def names(S, idx):
    return sorted(S.label(i) for i in idx)


def test_example_paths(example):
    P = paths(example)
    # four maximal idempotents plus a, b, c, x, y
    assert len(P) == 9
    labelled = {example.label(s) for s in P if s not in maximal_idempotents(example)}
    assert labelled == {"a", "b", "c", "x", "y"}
    # oracle: s*s maximal, as restriction of identities on the ground set
    maxdoms = [example[m].domain() for m in maximal_idempotents(example)]
    brute = [s for s in example.nonzero.tolist() if example[s].domain() in maxdoms]
    assert sorted(P) == sorted(brute)


def test_example_domain_paths(example):
    g = {example.label(s): s for s in range(len(example))}
    S = example
    ba = S.prod(S.star[g["b"]], g["a"])
    yx_ = S.prod(g["y"], S.star[g["x"]])
    assert domain_paths(S, ba) == domain_paths(S, yx_)
    assert names(S, domain_paths(S, ba)) == ["x"]
    # oracle: x is a domain path of s iff image(x) lies inside domain(s)
    for s in S.nonzero.tolist():
        brute = {x for x in paths(S) if S[x].image() <= S[s].domain()}
        assert domain_paths(S, s) == brute


def test_example_z_axioms(example):
    assert check_z1(example)
    assert check_z2(example)
    v = check_z3(example)
    assert not v
    assert len(v.witness) == 9
    with pytest.raises(AxiomError, match="Z3"):
        theta_check(example)


def test_normal_forms_evaluate_back(example):
    words = zigzag_words(example)
    assert set(words) == set(example.nonzero.tolist())
    for s, w in words.items():
        assert w.evaluate(example) == s
        assert w.is_valid(example)
    with pytest.raises(InputError):
        zigzag_normal_form(example, example.zero)


def test_example_quotient_matches_pair_oracle(example):
    Q = z_congruence_quotient(example)
    C = path_category(example)
    oracle = s_of_c(C)
    assert len(Q) == len(oracle) == 26
    assert quotient_vs_zm(example)


def test_example_path_category(example, fixtures_dir):
    C = path_category(example)
    assert len(C.objects) == 4 and len(C) == 9
    assert check_category_axioms(C) and check_left_cancellative(C) and check_singly_aligned(C)
    # same shape as the hand-written category with c = a x = b y
    D = load_cat(fixtures_dir / "example.cat")
    S1, T1 = s_of_c(C), zm(D)
    assert len(S1) == len(T1)


def test_theta_map_not_injective_on_example(example):
    phi, C, T = theta_map(example)
    assert len(set(phi.tolist())) == len(T) == 26


def z_passing():
    out = {f"gis[{i}]": graph_inverse_semigroup(G) for i, G in enumerate(graphs()[:15])}
    out.update({f"zm[{n}]": zm(C) for n, C in categories().items()})
    out.update({f"im[{n}]": S for n, S in im_outputs().items() if len(S) < 100})
    return out


@pytest.mark.parametrize("name", sorted(z_passing()))
def test_theta_and_lemmas(name):
    S = z_passing()[name]
    assert check_z1(S) and check_z2(S) and check_z3(S)
    v = theta_check(S)
    assert v
    assert theta_by_generators(S)
    assert not intersect_counterexamples(S)
    assert not domain_counterexamples(S)
    assert len(z_congruence_quotient(S)) == len(S)


@pytest.mark.parametrize("name", sorted(categories()))
def test_zm_paths_are_taus(name):
    C = categories()[name]
    T = zm(C)
    assert not zm_path_counterexamples(C, T)


@pytest.mark.parametrize("name", [n for n in sorted(categories()) if n != "non_singly_aligned"])
def test_round_trip_category(name):
    # C -> ZM(C) -> C(ZM(C)) gives back C up to isomorphism of the pair model
    C = categories()[name]
    T = zm(C)
    C2 = path_category(T)
    assert len(C2) == len(C) and len(C2.objects) == len(C.objects)
    S2 = s_of_c(C2)
    T2 = zm(C2)
    assert len(T2) == len(T)
    assert verify_isomorphism(S2, T2, s_of_c_gen_map(C2, S2, T2))


def test_z1_fails_with_two_maxima_over_one_idempotent():
    G = GroundSet.range(3)
    e = PartialBijection.identity(G, [1, 2])
    f = PartialBijection.identity(G, [2, 3])
    S = generate([e, f], zero=PartialBijection.zero(G))
    v = check_z1(S)
    assert not v
    with pytest.raises(AxiomError):
        path_category(S)


def test_z1_needs_zero():
    G = GroundSet.range(2)
    swap = PartialBijection.from_pairs(G, {1: 2, 2: 1})
    S = generate([swap])
    assert S.zero is None
    with pytest.raises(InputError):
        check_z1(S)


def generated_congruence_size(S, s, t):
    """Classes of the smallest congruence identifying s and t (union-find)."""
    parent = list(range(len(S)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    todo = [(s, t)]
    while todo:
        u, v = todo.pop()
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[ru] = rv
        for w in range(len(S)):
            todo.append((int(S.mul[w, u]), int(S.mul[w, v])))
            todo.append((int(S.mul[u, w]), int(S.mul[v, w])))
    return len({find(x) for x in range(len(S))})


def test_single_merge_generates_the_quotient(example):
    S = example
    g = {S.label(s): s for s in range(len(S))}
    ba = S.prod(S.star[g["b"]], g["a"])
    yx_ = S.prod(g["y"], S.star[g["x"]])
    assert generated_congruence_size(S, ba, yx_) == len(z_congruence_quotient(S)) == 26
