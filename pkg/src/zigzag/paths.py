"""Paths of an inverse semigroup with unique maximal idempotents.

Covers the path category C(S), the axioms (Z2) and (Z3), alternating
normal forms a1* b1 ... an* bn, the comparison map S -> ZM(C(S)), and the
quotient of S by "same domain paths, same action on them".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .category import FiniteCategory
from .errors import AxiomError, InputError
from .semigroup import (
    FiniteInverseSemigroup,
    Verdict,
    _max_map,
    check_homomorphism,
    check_z1,
    max_over,
    maximal_idempotents,
    quotient,
    verify_isomorphism,
)
from .zm import zm


def _require(S, axiom, verdict):
    if not verdict:
        raise AxiomError(axiom, f"{axiom} fails", verdict.witness)


def paths(S: FiniteInverseSemigroup) -> list[int]:
    """Elements s with s*s maximal."""
    _max_map(S)
    maxima = set(maximal_idempotents(S))
    return [s for s in S.nonzero.tolist() if int(S.d[s]) in maxima]


def domain_paths(S: FiniteInverseSemigroup, s) -> frozenset[int]:
    """Paths x with xx* <= s*s."""
    ds = int(S.d[s])
    return frozenset(x for x in paths(S) if S.leq(int(S.r[x]), ds))


def _domain_path_table(S) -> list[frozenset[int]]:
    cached = S.__dict__.get("_dp_table")
    if cached is None:
        P = paths(S)
        rP = S.r[P] if P else np.empty(0, dtype=np.int64)
        cached = []
        for s in range(len(S)):
            ds = S.d[s]
            ok = S.mul[ds, rP] == rP if P else np.empty(0, dtype=bool)
            if S.zero is not None and s == S.zero:
                cached.append(frozenset())
            else:
                cached.append(frozenset(np.asarray(P)[ok].tolist()) if P else frozenset())
        S.__dict__["_dp_table"] = cached
    return cached


def check_z2(S: FiniteInverseSemigroup) -> Verdict:
    P = paths(S)
    generated = S.closure_of(P) if P else set()
    if S.zero is not None:
        generated.add(S.zero)
    missing = sorted(set(range(len(S))) - generated)
    if missing:
        return Verdict(False, missing, f"{len(missing)} elements not generated by paths")
    return Verdict(True)


def reductive_labels(S: FiniteInverseSemigroup) -> np.ndarray:
    """Class labels of s ≈ t: P_s = P_t and s x = t x for all x in P_s."""
    dp = _domain_path_table(S)
    seen: dict = {}
    labels = np.empty(len(S), dtype=np.int64)
    for s in range(len(S)):
        xs = sorted(dp[s])
        key = (tuple(xs), tuple(int(S.mul[s, x]) for x in xs))
        labels[s] = seen.setdefault(key, len(seen))
    return labels


def check_z3(S: FiniteInverseSemigroup) -> Verdict:
    """Right reductive on domain paths.  On failure the witness is the list of
    all pairs (s, t), s < t, that the condition fails to separate."""
    _require(S, "Z1", check_z1(S))
    labels = reductive_labels(S)
    groups: dict[int, list[int]] = {}
    for s, l in enumerate(labels.tolist()):
        groups.setdefault(l, []).append(s)
    witnesses = []
    for members in groups.values():
        for i, s in enumerate(members):
            for t in members[i + 1:]:
                witnesses.append((s, t))
    if witnesses:
        return Verdict(False, witnesses, f"{len(witnesses)} unseparated pairs")
    return Verdict(True)


# path category


def path_category(S: FiniteInverseSemigroup) -> FiniteCategory:
    """Objects: maximal idempotents.  Morphisms: paths s, read as ((ss*)°, s)."""
    maxima = maximal_idempotents(S)
    P = paths(S)
    # identities first, in object order, so the .cat round trip is stable
    ordered = maxima + [s for s in P if s not in maxima]
    pos = {s: i for i, s in enumerate(ordered)}
    obj = {e: i for i, e in enumerate(maxima)}
    names = [_path_name(S, s) for s in ordered]
    objects = [_path_name(S, e) for e in maxima]
    src = [obj[int(S.d[s])] for s in ordered]
    rng = [obj[max_over(S, int(S.r[s]))] for s in ordered]

    def comp(f, g):
        st = int(S.mul[ordered[f], ordered[g]])
        if st not in pos:
            raise AxiomError("path category", "product of composable paths is not a path", (f, g))
        return pos[st]

    C = FiniteCategory.from_function(objects, names, src, rng, list(range(len(maxima))), comp)
    C.semigroup = S
    C.element = ordered
    C.morphism_of = pos
    return C


def _path_name(S, s) -> str:
    name = S.names.get(s)
    if name and " " not in name:
        return name
    return f"s{s}"


# alternating normal forms


@dataclass(frozen=True)
class ZigzagWord:
    """Alternating word a1* b1 ... an* bn over paths (element indices)."""

    blocks: tuple[tuple[int, int], ...]

    def evaluate(self, S: FiniteInverseSemigroup) -> int:
        acc = None
        for a, b in self.blocks:
            piece = int(S.mul[S.star[a], b])
            acc = piece if acc is None else int(S.mul[acc, piece])
        return acc

    def is_valid(self, S: FiniteInverseSemigroup) -> bool:
        for i, (a, b) in enumerate(self.blocks):
            if max_over(S, int(S.r[a])) != max_over(S, int(S.r[b])):
                return False
            if i + 1 < len(self.blocks):
                a2 = self.blocks[i + 1][0]
                if S.d[b] != S.d[a2]:
                    return False
        return True

    def __len__(self):
        return len(self.blocks)


def zigzag_words(S: FiniteInverseSemigroup) -> dict[int, ZigzagWord]:
    """A shortest alternating word for every nonzero element generated by paths.

    Breadth-first over the number of blocks; ties go to the lowest path
    indices.  Each nonzero value ends in a path b whose domain b*b is the
    maximal idempotent above the value's own domain, which is what the next
    block has to match.
    """
    cached = S.__dict__.get("_zz_words")
    if cached is not None:
        return cached
    P = paths(S)
    top = {x: max_over(S, int(S.r[x])) for x in P}
    blocks = [(a, b) for a in P for b in P if top[a] == top[b]]
    by_start: dict[int, list[tuple[int, int]]] = {}
    for a, b in blocks:
        by_start.setdefault(int(S.d[a]), []).append((a, b))
    words: dict[int, ZigzagWord] = {}
    queue = deque()
    for a, b in blocks:
        v = int(S.mul[S.star[a], b])
        if v != S.zero and v not in words:
            words[v] = ZigzagWord(((a, b),))
            queue.append(v)
    while queue:
        v = queue.popleft()
        last = words[v].blocks[-1][1]
        for a, b in by_start.get(int(S.d[last]), ()):
            u = int(S.mul[v, S.mul[S.star[a], b]])
            if u != S.zero and u not in words:
                words[u] = ZigzagWord(words[v].blocks + ((a, b),))
                queue.append(u)
    S.__dict__["_zz_words"] = words
    return words


def zigzag_normal_form(S: FiniteInverseSemigroup, s) -> ZigzagWord:
    _require(S, "Z1", check_z1(S))
    if S.zero is not None and s == S.zero:
        raise InputError("zero has no alternating normal form")
    words = zigzag_words(S)
    if s not in words:
        raise InputError(f"{S.label(s)} is not generated by paths")
    return words[s]


# the comparison map S -> ZM(C(S))


def theta_map(S: FiniteInverseSemigroup, C: FiniteCategory | None = None, T: FiniteInverseSemigroup | None = None):
    """Send a1* b1 ... an* bn to tau_a1^-1 tau_b1 ... tau_an^-1 tau_bn.

    Returns ``(phi, C, T)`` with ``phi`` an index array S -> T.  Needs (Z1)
    and (Z2) only; (Z3) is what makes it injective.
    """
    _require(S, "Z1", check_z1(S))
    _require(S, "Z2", check_z2(S))
    if C is None:
        C = path_category(S)
    if T is None:
        T = zm(C)
    tau_of = {s: int(T.tau[C.morphism_of[s]]) for s in C.element}
    phi = np.full(len(S), -1, dtype=np.int64)
    for s, w in zigzag_words(S).items():
        acc = None
        for a, b in w.blocks:
            piece = int(T.mul[T.star[tau_of[a]], tau_of[b]])
            acc = piece if acc is None else int(T.mul[acc, piece])
        phi[s] = acc
    if S.zero is not None:
        phi[S.zero] = T.zero
    return phi, C, T


def theta_check(S: FiniteInverseSemigroup) -> Verdict:
    """S ≅ ZM(C(S)) via the normal-form map; needs (Z1), (Z2), (Z3)."""
    _require(S, "Z1", check_z1(S))
    _require(S, "Z2", check_z2(S))
    _require(S, "Z3", check_z3(S))
    phi, C, T = theta_map(S)
    v = check_homomorphism(S, T, phi)
    if v:
        v.witness = phi
    return v


def theta_by_generators(S: FiniteInverseSemigroup) -> Verdict:
    """Same comparison through verify_isomorphism, with the paths as generators."""
    C = path_category(S)
    T = zm(C)
    P = list(C.element)
    Sp = FiniteInverseSemigroup(S.elements, S.mul, S.star, zero=S.zero, generators=P, names=S.names)
    gen_map = {s: int(T.tau[C.morphism_of[s]]) for s in P}
    return verify_isomorphism(Sp, T, gen_map)


def z_congruence_quotient(S: FiniteInverseSemigroup) -> FiniteInverseSemigroup:
    _require(S, "Z1", check_z1(S))
    _require(S, "Z2", check_z2(S))
    return quotient(S, reductive_labels(S))


def quotient_vs_zm(S: FiniteInverseSemigroup) -> Verdict:
    """The quotient S/≈ is isomorphic to ZM(C(S)) under the induced map."""
    Q = z_congruence_quotient(S)
    phi, C, T = theta_map(S)
    gen_map = {int(Q.class_of[g]): int(phi[g]) for g in S.generators}
    return verify_isomorphism(Q, T, gen_map)


# lemma checks on finite instances


def zm_path_counterexamples(C: FiniteCategory, T: FiniteInverseSemigroup) -> list[dict]:
    """paths(ZM(C)) = {tau_a} and domain paths of phi = {tau_a : a in dom phi}."""
    bad = []
    taus = set(T.tau.tolist())
    if set(paths(T)) != taus:
        bad.append({"reason": "paths are not the tau maps"})
    tau_of_mor = {int(T.tau[a]): a for a in range(len(C))}
    for s in range(len(T)):
        dom = T.elements[s].domain()
        expected = {int(T.tau[C.m(a)]) for a in dom}
        got = set(_domain_path_table(T)[s])
        if got != expected:
            bad.append({"s": s, "got": sorted(tau_of_mor[x] for x in got)})
    return bad


def intersect_counterexamples(S: FiniteInverseSemigroup, C: FiniteCategory | None = None) -> list[dict]:
    """t(a)C ∩ t(b)C = {t(z) : z a path, zz* <= aa* bb*} in C = C(S)."""
    if C is None:
        C = path_category(S)
    P = C.element
    bad = []
    for a in P:
        for b in P:
            fa, fb = C.morphism_of[a], C.morphism_of[b]
            lhs = C.cones[fa] & C.cones[fb]
            e = int(S.mul[S.r[a], S.r[b]])
            rhs = {C.morphism_of[z] for z in P if S.leq(int(S.r[z]), e) and e != S.zero}
            if lhs != rhs:
                bad.append({"a": a, "b": b})
    return bad


def domain_counterexamples(S: FiniteInverseSemigroup) -> list[dict]:
    """P_{a1* b1 ... an* bn} = {x : t(x) in dom(phi)} for every normal form word."""
    phi, C, T = theta_map(S)
    bad = []
    dp = _domain_path_table(S)
    for s, w in zigzag_words(S).items():
        dom = T.elements[phi[s]].domain()
        expected = {x for x in C.element if C.morphisms[C.morphism_of[x]] in dom}
        if set(dp[s]) != expected:
            bad.append({"s": s})
    return bad
