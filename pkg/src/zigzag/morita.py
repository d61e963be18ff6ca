"""The enlargement IM(S, E, p) with the diagonal function p(e, f) = e if e = f else 0.

Elements are triples (e, s, f) of indices into S with e, f nonzero
idempotents, s nonzero, ss* <= e and s*s <= f, plus a zero (``None``).
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InputError
from .semigroup import FiniteInverseSemigroup


class ImTriple(NamedTuple):
    e: int
    s: int
    f: int


def im_construction(S: FiniteInverseSemigroup) -> FiniteInverseSemigroup:
    if S.zero is None:
        raise InputError("IM(S, E, p) needs an inverse semigroup with zero")
    E = S.nonzero_idempotents.tolist()
    triples = []
    for s in S.nonzero.tolist():
        up_r = [e for e in E if S.leq(int(S.r[s]), e)]
        up_d = [f for f in E if S.leq(int(S.d[s]), f)]
        for e in up_r:
            for f in up_d:
                triples.append(ImTriple(e, s, f))
    triples.sort()

    def product(x, y):
        if x is None or y is None or x.f != y.e:
            return None
        st = int(S.mul[x.s, y.s])
        if st == S.zero:
            return None
        return ImTriple(x.e, st, y.f)

    def inverse(x):
        return None if x is None else ImTriple(x.f, int(S.star[x.s]), x.e)

    names = {t: f"({S.label(t.e)}, {S.label(t.s)}, {S.label(t.f)})" for t in triples}
    names[None] = "0"
    # paths (e, s, s*s) generate
    gens = [t for t in triples if t.f == int(S.d[t.s])]
    IM = FiniteInverseSemigroup.from_elements(
        triples + [None], product=product, inverse=inverse, zero=None, generators=gens, names=names
    )
    IM.base = S
    return IM

