import itertools

import pytest

from zigzag.category import check_singly_aligned
from zigzag.corpus import chain_semilattice, example_semigroup, symmetric_inverse_monoid
from zigzag.errors import InputError
from zigzag.morita import ImTriple, im_construction
from zigzag.paths import check_z2, check_z3, path_category, theta_check
from zigzag.pbij import GroundSet, PartialBijection
from zigzag.semigroup import check_inverse_semigroup, check_z1, generate


def brute_triples(S):
    """Triples (E, s, F) over partial bijections: E, F nonempty partial
    identities, s nonzero, image(s) inside E and domain(s) inside F."""
    idem = [x for x in S.elements if not x.is_zero() and x * x == x]
    count = 0
    for s in S.elements:
        if s.is_zero():
            continue
        for E, F in itertools.product(idem, idem):
            if s.image() <= E.domain() and s.domain() <= F.domain():
                count += 1
    return count


def test_im_of_i2_has_19_elements():
    IM = im_construction(symmetric_inverse_monoid(2))
    assert brute_triples(symmetric_inverse_monoid(2)) == 18
    assert len(IM) == 19


@pytest.mark.parametrize("build", [lambda: symmetric_inverse_monoid(1), lambda: symmetric_inverse_monoid(3), lambda: chain_semilattice(3), example_semigroup])
def test_triple_count_matches_brute_force(build):
    S = build()
    assert len(im_construction(S)) == brute_triples(S) + 1


def test_i1_im_is_two_elements():
    assert len(im_construction(symmetric_inverse_monoid(1))) == 2


def test_product_rule_and_inverse():
    S = symmetric_inverse_monoid(2)
    IM = im_construction(S)
    assert check_inverse_semigroup(IM)
    for i, x in enumerate(IM.elements):
        for j, y in enumerate(IM.elements):
            z = IM.elements[IM.mul[i, j]]
            if x is None or y is None or x.f != y.e or S.mul[x.s, y.s] == S.zero:
                assert z is None
            else:
                assert z == ImTriple(x.e, int(S.mul[x.s, y.s]), y.f)
        if x is not None:
            assert IM.elements[IM.star[i]] == ImTriple(x.f, int(S.star[x.s]), x.e)


@pytest.mark.parametrize("build", [lambda: symmetric_inverse_monoid(2), lambda: chain_semilattice(3), example_semigroup])
def test_im_satisfies_z_axioms(build):
    IM = im_construction(build())
    assert check_z1(IM) and check_z2(IM) and check_z3(IM)
    assert check_singly_aligned(path_category(IM))
    assert theta_check(IM)


def test_im_requires_zero():
    G = GroundSet.range(2)
    S = generate([PartialBijection.from_pairs(G, {1: 2, 2: 1})])
    with pytest.raises(InputError):
        im_construction(S)
