import pytest

from zigzag.category import check_singly_aligned, load_cat
from zigzag.corpus import (
    fixture_categories,
    groupoid_category,
    non_left_cancellative_category,
    non_right_cancellative_category,
    non_singly_aligned_category,
    single_edge_graph,
)
from zigzag.errors import AxiomError, InputError
from zigzag.graphs import path_category_of_graph
from zigzag.semigroup import check_inverse_semigroup, verify_isomorphism
from zigzag.zm import (
    s_of_c,
    s_of_c_gen_map,
    tau,
    unitary_vs_right_cancellative,
    verify_singly_aligned_identities,
    zm,
)


def brute_pair_classes(C):
    """|{(a, b) : src a = src b}| modulo (a, b) ~ (a l, b l), l invertible."""
    inv = [lam for lam in range(len(C)) if any(
        C.composable(lam, m) and C.composable(m, lam)
        and C.is_identity(C.compose(lam, m)) and C.is_identity(C.compose(m, lam))
        for m in range(len(C))
    )]
    seen, count = set(), 0
    for a in range(len(C)):
        for b in range(len(C)):
            if C.src[a] != C.src[b] or (a, b) in seen:
                continue
            count += 1
            for lam in inv:
                if C.composable(a, lam):
                    seen.add((C.compose(a, lam), C.compose(b, lam)))
    return count


def test_tau_is_left_translation():
    for C in fixture_categories().values():
        for a in range(len(C)):
            t = dict(tau(C, a).pairs())
            expected = {C.morphisms[x]: C.morphisms[C.compose(a, x)] for x in range(len(C)) if C.composable(a, x)}
            assert t == expected


def test_single_edge_zm_order():
    assert len(zm(path_category_of_graph(single_edge_graph()))) == 6


@pytest.mark.parametrize("name, order", [("Z1", 1), ("Z2", 2), ("Z3", 3), ("Z4", 4), ("V4", 4), ("S3", 6)])
def test_group_zm_is_group_with_zero(name, order):
    T = zm(fixture_categories()[name])
    assert len(T) == order + 1
    assert len(T.idempotents) == 2


def test_groupoid_zm_is_brandt():
    T = zm(groupoid_category())
    # one D-class, 2x2 with trivial groups, plus 0
    assert len(T) == 5


@pytest.mark.parametrize("name", sorted(fixture_categories()))
def test_zm_order_counts_pair_classes(name):
    C = fixture_categories()[name]
    T = zm(C)
    assert check_inverse_semigroup(T)
    if check_singly_aligned(C):
        assert len(T) == brute_pair_classes(C) + 1


@pytest.mark.parametrize("name", [n for n in sorted(fixture_categories()) if n != "non_singly_aligned"])
def test_pair_model_isomorphic_to_zm(name):
    C = fixture_categories()[name]
    S, T = s_of_c(C), zm(C)
    assert verify_isomorphism(S, T, s_of_c_gen_map(C, S, T))


def test_example_category_orders(fixtures_dir):
    C = load_cat(fixtures_dir / "example.cat")
    S, T = s_of_c(C), zm(C)
    # pair classes: 1 at E, 4 at A, 4 at B, 16 at K
    assert brute_pair_classes(C) == 25
    assert len(S) == len(T) == 26
    assert verify_isomorphism(S, T, s_of_c_gen_map(C, S, T))


def test_pair_model_requires_singly_aligned():
    with pytest.raises(InputError):
        s_of_c(non_singly_aligned_category())


def test_zm_requires_left_cancellative():
    with pytest.raises(AxiomError):
        zm(non_left_cancellative_category())


def test_non_right_cancellative_both_sides_false():
    assert unitary_vs_right_cancellative(non_right_cancellative_category()) == (False, False)
    assert unitary_vs_right_cancellative(groupoid_category()) == (True, True)


def test_identities_on_example_category(fixtures_dir):
    C = load_cat(fixtures_dir / "example.cat")
    results = verify_singly_aligned_identities(C)
    assert set(results) >= {"spielberg", "normal_form", "product_rule", "equality", "structure"}
    for name, v in results.items():
        assert v, f"{name}: {v.detail}"
