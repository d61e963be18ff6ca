"""Zigzag inverse semigroups of left cancellative categories.

``zm(C)`` is realised inside I(C): it is the inverse semigroup generated by
the maps ``tau_a: x -> a x`` together with the empty map.  ``s_of_c(C)`` is
the pair-class model of a singly aligned category, used as an independent
cross-check of ``zm``.
"""

from __future__ import annotations

from itertools import product as cartesian

import numpy as np

from .category import (
    FiniteCategory,
    check_right_cancellative,
    check_singly_aligned,
    require_left_cancellative,
)
from .errors import InputError
from .pbij import UNDEF, GroundSet, PartialBijection
from .semigroup import (
    DEFAULT_CAP,
    FiniteInverseSemigroup,
    Verdict,
    check_0_e_unitary,
    generate,
    mu_congruence,
)


def ground_of(C: FiniteCategory) -> GroundSet:
    g = C.__dict__.get("_ground")
    if g is None:
        g = C.__dict__["_ground"] = GroundSet(C.morphisms)
    return g


def tau(C: FiniteCategory, a: int) -> PartialBijection:
    """x -> a x on the morphisms with range src(a)."""
    require_left_cancellative(C)
    img = [UNDEF] * len(C)
    for x in C.into[C.src[a]].tolist():
        img[x] = int(C.comp[a, x])
    return PartialBijection(ground_of(C), tuple(img))


def zm(C: FiniteCategory, cap: int = DEFAULT_CAP) -> FiniteInverseSemigroup:
    require_left_cancellative(C)
    gens = [tau(C, a) for a in range(len(C))]
    names = {t: f"tau[{C.morphisms[a]}]" for a, t in enumerate(gens)}
    T = generate(gens, zero=PartialBijection.zero(ground_of(C)), cap=cap, names=names)
    T.category = C
    T.tau = np.array([T.index[t] for t in gens], dtype=np.int64)
    return T


def pair_table(C: FiniteCategory, T: FiniteInverseSemigroup) -> dict[tuple[int, int], int]:
    """Index in ``T`` of tau_a tau_b^{-1} for every (a, b) with src(a) == src(b)."""
    out = {}
    for a, b in pairs(C):
        out[a, b] = int(T.mul[T.tau[a], T.star[T.tau[b]]])
    return out


def pairs(C: FiniteCategory):
    for a in range(len(C)):
        for b in np.flatnonzero(C.src == C.src[a]).tolist():
            yield a, b


# the pair-class semigroup S(C)


def _pair_rep(C: FiniteCategory, a, b) -> tuple[int, int]:
    best = (a, b)
    for lam in C.invertibles:
        if C.rng[lam] == C.src[a]:
            cand = (int(C.comp[a, lam]), int(C.comp[b, lam]))
            if cand < best:
                best = cand
    return best


def pair_product(C: FiniteCategory, p, q, meet=None):
    """[a, b][c, d] = [a x, d y] where bC ∩ cC = gC and g = b x = c y."""
    if p is None or q is None:
        return None
    a, b = p
    c, d = q
    if meet is None:
        g = C.meet(b, c)
    else:
        g = meet
    if g is None:
        return None
    x = C.divide(b, g)
    y = C.divide(c, g)
    return _pair_rep(C, int(C.comp[a, x]), int(C.comp[d, y]))


def s_of_c(C: FiniteCategory) -> FiniteInverseSemigroup:
    require_left_cancellative(C)
    v = check_singly_aligned(C)
    if not v:
        raise InputError(f"category is not singly aligned: {v.detail}")
    reps = []
    for a, b in pairs(C):
        r = _pair_rep(C, a, b)
        if r not in reps:
            reps.append(r)
    elements = reps + [None]
    gens = [_pair_rep(C, a, int(C.identity[C.src[a]])) for a in range(len(C))]
    names = {r: f"[{C.morphisms[r[0]]},{C.morphisms[r[1]]}]" for r in reps}
    names[None] = "0"
    S = FiniteInverseSemigroup.from_elements(
        elements,
        product=lambda p, q: pair_product(C, p, q),
        inverse=lambda p: None if p is None else _pair_rep(C, p[1], p[0]),
        zero=None,
        generators=dict.fromkeys(gens),
        names=names,
    )
    S.category = C
    return S


def s_of_c_gen_map(C: FiniteCategory, S: FiniteInverseSemigroup, T: FiniteInverseSemigroup) -> dict[int, int]:
    """[a, src a] -> tau_a, for verify_isomorphism(S(C), ZM(C), ...)."""
    out = {}
    for a in range(len(C)):
        r = _pair_rep(C, a, int(C.identity[C.src[a]]))
        out[S.index[r]] = int(T.tau[a])
    return out


# exhaustive checks of the singly aligned identities; each returns the list
# of counterexamples found (empty on success)


def spielberg_counterexamples(C: FiniteCategory, T: FiniteInverseSemigroup) -> list[dict]:
    """tau_b^-1 tau_a = tau_{g^b} tau_{g^a}^-1 for every generator g of aC ∩ bC."""
    pt = pair_table(C, T)
    bad = []
    for a in range(len(C)):
        for b in range(len(C)):
            lhs = int(T.mul[T.star[T.tau[b]], T.tau[a]])
            gens = C.intersection_generators(a, b)
            if gens is None:
                if lhs != T.zero:
                    bad.append({"a": a, "b": b, "reason": "disjoint cones but nonzero product"})
                continue
            if not gens:
                continue  # not a cone: outside the lemma's hypothesis
            for g in gens:
                rhs = pt[C.divide(b, g), C.divide(a, g)]
                if rhs != lhs:
                    bad.append({"a": a, "b": b, "g": g, "reason": "lemma identity fails"})
    return bad


def normal_form_counterexamples(C: FiniteCategory, T: FiniteInverseSemigroup) -> list[dict]:
    """ZM(C) = {tau_a tau_b^-1 : src a = src b} ∪ {0}, none of those being 0."""
    pt = pair_table(C, T)
    bad = []
    values = set(pt.values())
    if T.zero in values:
        bad.append({"reason": "some tau_a tau_b^-1 is zero"})
    missing = set(range(len(T))) - values - {T.zero}
    for s in sorted(missing):
        bad.append({"s": s, "reason": "element not of the form tau_a tau_b^-1"})
    return bad


def product_rule_counterexamples(C: FiniteCategory, T: FiniteInverseSemigroup) -> list[dict]:
    """tau_x tau_b^-1 tau_a tau_y^-1 = tau_{x g^b} tau_{y g^a}^-1 or 0."""
    pt = pair_table(C, T)
    ps = list(pt)
    bad = []
    for (x, b), (a, y) in cartesian(ps, ps):
        lhs = int(T.mul[pt[x, b], pt[a, y]])
        g = C.meet(a, b)
        if g is None:
            rhs = T.zero
        else:
            rhs = pt[int(C.comp[x, C.divide(b, g)]), int(C.comp[y, C.divide(a, g)])]
        if lhs != rhs:
            bad.append({"x": x, "b": b, "a": a, "y": y})
    return bad


def _exists_invertible(C, p, q) -> bool:
    # p = q l componentwise for an invertible l
    (a, b), (c, d) = p, q
    for lam in C.invertibles:
        if C.rng[lam] == C.src[c] and C.comp[c, lam] == a and C.comp[d, lam] == b:
            return True
    return False


def equality_counterexamples(C: FiniteCategory, T: FiniteInverseSemigroup) -> list[dict]:
    """tau_a tau_b^-1 = tau_c tau_d^-1 iff b = d l and a = c l for invertible l."""
    pt = pair_table(C, T)
    bad = []
    for p, q in cartesian(pt, pt):
        if (pt[p] == pt[q]) != _exists_invertible(C, p, q):
            bad.append({"p": p, "q": q})
    return bad


def _exists_factor(C, p, q) -> bool:
    (a, b), (c, d) = p, q
    for m in C.into[C.src[c]].tolist():
        if C.comp[c, m] == a and C.comp[d, m] == b:
            return True
    return False


def structure_counterexamples(C: FiniteCategory, T: FiniteInverseSemigroup) -> list[dict]:
    """Items (1), (2), (4)-(7) of the structure of ZM(C) against the generic engine.

    (1) idempotents are tau_a tau_a^-1 and 0;  (2) order;  (4) L;  (5) R;
    (6) H;  (7) mu.  Item (3) is :func:`unitary_vs_right_cancellative`.
    """
    pt = pair_table(C, T)
    bad = []
    diag = {pt[a, a] for a in range(len(C))}
    if diag | {T.zero} != set(T.idempotents.tolist()):
        bad.append({"item": 1})
    mu = mu_congruence(T)
    for p, q in cartesian(pt, pt):
        s, t = pt[p], pt[q]
        (a, b), (c, d) = p, q
        if T.leq(s, t) != _exists_factor(C, p, q):
            bad.append({"item": 2, "p": p, "q": q})
        L = C.cone_equivalent(b, d)
        R = C.cone_equivalent(a, c)
        if (T.d[s] == T.d[t]) != L:
            bad.append({"item": 4, "p": p, "q": q})
        if (T.r[s] == T.r[t]) != R:
            bad.append({"item": 5, "p": p, "q": q})
        if (T.d[s] == T.d[t] and T.r[s] == T.r[t]) != (L and R):
            bad.append({"item": 6, "p": p, "q": q})
        if (mu[s] == mu[t]) != _mu_formula(C, p, q):
            bad.append({"item": 7, "p": p, "q": q})
    return bad


def _mu_formula(C: FiniteCategory, p, q) -> bool:
    """b ~ d and a y^b ~ c y^d for every y in bC."""
    (a, b), (c, d) = p, q
    if not C.cone_equivalent(b, d):
        return False
    for y in C.cones[b]:
        yb, yd = C.divide(b, y), C.divide(d, y)
        if not C.cone_equivalent(int(C.comp[a, yb]), int(C.comp[c, yd])):
            return False
    return True


def unitary_vs_right_cancellative(C: FiniteCategory, T: FiniteInverseSemigroup | None = None) -> tuple[bool, bool]:
    """(ZM(C) is 0-E-unitary, C is right cancellative): these should agree."""
    if T is None:
        T = zm(C)
    return bool(check_0_e_unitary(T)), bool(check_right_cancellative(C))


def meet_choice_counterexamples(C: FiniteCategory) -> list[dict]:
    """The S(C) product does not depend on which cone generator is used."""
    bad = []
    reps = {_pair_rep(C, a, b) for a, b in pairs(C)}
    for p, q in cartesian(sorted(reps), sorted(reps)):
        gens = C.intersection_generators(p[1], q[0])
        if not gens:
            continue
        results = {pair_product(C, p, q, meet=g) for g in gens}
        if len(results) != 1:
            bad.append({"p": p, "q": q})
    return bad


def verify_singly_aligned_identities(C: FiniteCategory, T: FiniteInverseSemigroup | None = None) -> dict[str, Verdict]:
    if T is None:
        T = zm(C)
    out = {}
    checks = {
        "spielberg": spielberg_counterexamples,
        "normal_form": normal_form_counterexamples,
        "product_rule": product_rule_counterexamples,
        "equality": equality_counterexamples,
        "structure": structure_counterexamples,
    }
    for name, fn in checks.items():
        bad = fn(C, T)
        out[name] = Verdict(not bad, bad[:5] or None, f"{len(bad)} counterexamples")
    bad = meet_choice_counterexamples(C)
    out["meet_choice"] = Verdict(not bad, bad[:5] or None, f"{len(bad)} counterexamples")
    u, rc = unitary_vs_right_cancellative(C, T)
    out["unitary_iff_right_cancellative"] = Verdict(u == rc, (u, rc), f"0-E-unitary={u} right-cancellative={rc}")
    return out
