"""Finite inverse semigroups given by multiplication tables.

Elements are arbitrary hashable values; all the structure lives in integer
tables indexed by element position.  The same engine serves partial
bijections, graph pairs, Morita triples and quotient classes.
"""

from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import AxiomError, InputError, SizeCapError

DEFAULT_CAP = 100_000


@dataclass
class Verdict:
    """Outcome of a check; falsy on failure, with an optional witness."""

    ok: bool
    witness: Any = None
    detail: str = ""

    def __bool__(self):
        return self.ok


class FiniteInverseSemigroup:
    def __init__(
        self,
        elements: Sequence[Hashable],
        mul,
        star,
        zero: int | None = None,
        generators: Iterable[int] = (),
        names: Mapping[int, str] | None = None,
        detect_zero: bool = True,
    ):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise InputError("duplicate elements")
        n = len(self.elements)
        self.mul = np.asarray(mul, dtype=np.int64).reshape(n, n)
        self.star = np.asarray(star, dtype=np.int64).reshape(n)
        self.mul.setflags(write=False)
        self.star.setflags(write=False)
        if zero is None and detect_zero:
            zero = self._find_zero()
        self.zero = zero
        self.generators = tuple(int(g) for g in generators)
        self.names = dict(names or {})
        ar = np.arange(n)
        # d(s) = s*s and r(s) = ss*
        self.d = self.mul[self.star, ar]
        self.r = self.mul[ar, self.star]

    @classmethod
    def from_elements(
        cls,
        elements: Sequence[Hashable],
        product: Callable = operator.mul,
        inverse: Callable = operator.attrgetter("inv"),
        zero=None,
        generators: Iterable = (),
        names: Mapping | None = None,
    ) -> FiniteInverseSemigroup:
        """Tabulate ``product`` and ``inverse`` over an explicit, closed element list."""
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        mul = np.empty((n, n), dtype=np.int64)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                z = product(x, y)
                try:
                    mul[i, j] = index[z]
                except KeyError:
                    raise InputError(f"element list not closed: {x!r} * {y!r} = {z!r}") from None
        star = [index[inverse(x)] for x in elements]
        zi = None if zero is None else index[zero]
        gens = [index[g] for g in generators]
        nm = {index[k]: v for k, v in (names or {}).items()}
        return cls(elements, mul, star, zero=zi, generators=gens, names=nm)

    def _find_zero(self):
        n = len(self.elements)
        if n == 0:
            return None
        diag = self.mul[np.arange(n), np.arange(n)]
        for e in np.flatnonzero(diag == np.arange(n)):
            if (self.mul[e, :] == e).all() and (self.mul[:, e] == e).all():
                return int(e)
        return None

    # basic access

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def idx(self, x) -> int:
        return self.index[x]

    def label(self, i) -> str:
        if i in self.names:
            return self.names[i]
        return str(self.elements[i])

    def prod(self, *indices) -> int:
        """Product of a sequence of element indices, left to right."""
        it = iter(indices)
        acc = int(next(it))
        for j in it:
            acc = int(self.mul[acc, j])
        return acc

    @cached_property
    def nonzero(self) -> np.ndarray:
        ar = np.arange(len(self))
        return ar if self.zero is None else ar[ar != self.zero]

    @cached_property
    def idempotents(self) -> np.ndarray:
        ar = np.arange(len(self))
        return ar[self.mul[ar, ar] == ar]

    @cached_property
    def nonzero_idempotents(self) -> np.ndarray:
        e = self.idempotents
        return e if self.zero is None else e[e != self.zero]

    def is_idempotent(self, s) -> bool:
        return int(self.mul[s, s]) == s

    def leq(self, s, t) -> bool:
        """Natural partial order: s = t(s*s)."""
        return int(self.mul[t, self.d[s]]) == s

    def leq_by_search(self, s, t) -> bool:
        return bool((self.mul[t, self.idempotents] == s).any())

    @cached_property
    def idempotent_order(self) -> np.ndarray:
        """Boolean matrix over ``idempotents``: [i, j] iff E[i] <= E[j]."""
        E = self.idempotents
        return self.mul[np.ix_(E, E)].T == E[:, None]

    # Green's relations

    @cached_property
    def green(self) -> GreenData:
        nz = self.nonzero
        L = _partition(nz, self.d[nz])
        R = _partition(nz, self.r[nz])
        H = _partition(nz, self.d[nz] * len(self) + self.r[nz])
        # D is the equivalence generated by s ~ s*s and s ~ ss*
        parent = list(range(len(self)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in nz:
            for e in (self.d[s], self.r[s]):
                a, b = find(int(s)), find(int(e))
                if a != b:
                    parent[max(a, b)] = min(a, b)
        D = _partition(nz, np.array([find(int(s)) for s in nz], dtype=np.int64))
        return GreenData(L=L, R=R, H=H, D=D)

    def d_class_of(self, s) -> tuple[int, ...]:
        for cls in self.green.D:
            if s in cls:
                return cls
        raise InputError("zero has no D-class here")

    def words(self) -> tuple[np.ndarray, np.ndarray]:
        """Breadth-first spanning tree over generators and their inverses.

        Returns ``(parent, letter)``: element ``i`` equals
        ``parent[i] * letter[i]``, or just ``letter[i]`` when ``parent[i] == -1``.
        Unreachable elements have ``parent[i] == -2``.
        """
        return self._words

    @cached_property
    def _words(self):
        n = len(self)
        parent = np.full(n, -2, dtype=np.int64)
        letter = np.full(n, -1, dtype=np.int64)
        letters = []
        for g in self.generators:
            for a in (g, int(self.star[g])):
                if a not in letters:
                    letters.append(a)
        queue = deque()
        for a in letters:
            if parent[a] == -2:
                parent[a] = -1
                letter[a] = a
                queue.append(a)
        while queue:
            i = queue.popleft()
            for a in letters:
                j = int(self.mul[i, a])
                if parent[j] == -2:
                    parent[j] = i
                    letter[j] = a
                    queue.append(j)
        return parent, letter

    def word(self, s) -> list[int]:
        parent, letter = self.words()
        if parent[s] == -2:
            raise InputError(f"element {self.label(s)} is not generated")
        out = []
        while s != -1:
            out.append(int(letter[s]))
            s = int(parent[s])
        return out[::-1]

    def closure_of(self, seeds: Iterable[int]) -> set[int]:
        """Inverse subsemigroup generated by ``seeds``."""
        letters = set()
        for a in seeds:
            letters.add(int(a))
            letters.add(int(self.star[a]))
        letters = sorted(letters)
        seen = set(letters)
        queue = deque(letters)
        while queue:
            i = queue.popleft()
            for a in letters:
                j = int(self.mul[i, a])
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return seen

    def to_dict(self) -> dict:
        g = self.green
        return {
            "schema": 1,
            "order": len(self),
            "zero": self.zero,
            "elements": [self.label(i) for i in range(len(self))],
            "generators": list(self.generators),
            "product": self.mul.tolist(),
            "star": self.star.tolist(),
            "green": {
                "L": [list(c) for c in g.L],
                "R": [list(c) for c in g.R],
                "H": [list(c) for c in g.H],
                "D": [list(c) for c in g.D],
            },
        }

    def __repr__(self):
        return f"<FiniteInverseSemigroup order={len(self)} zero={self.zero}>"


@dataclass
class GreenData:
    L: list[tuple[int, ...]]
    R: list[tuple[int, ...]]
    H: list[tuple[int, ...]]
    D: list[tuple[int, ...]]


def _partition(items: np.ndarray, keys: np.ndarray) -> list[tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for i, k in zip(items.tolist(), keys.tolist()):
        groups.setdefault(k, []).append(i)
    return sorted((tuple(v) for v in groups.values()), key=lambda c: c[0])


def labels_to_classes(labels) -> list[tuple[int, ...]]:
    labels = np.asarray(labels)
    return _partition(np.arange(len(labels)), labels)


def generate(
    generators: Sequence[Hashable],
    product: Callable = operator.mul,
    inverse: Callable = operator.attrgetter("inv"),
    zero: Hashable | None = None,
    cap: int = DEFAULT_CAP,
    names: Mapping[Hashable, str] | None = None,
) -> FiniteInverseSemigroup:
    """Inverse subsemigroup generated by ``generators``.

    Elements are numbered in breadth-first discovery order: the generators
    and their inverses first, then right multiples by those letters.  Only
    ``n * (number of letters)`` products are evaluated; the full table is
    filled in from the right Cayley graph.  ``zero`` is adjoined at the end
    when it is not reached.
    """
    if not generators:
        raise InputError("need at least one generator")
    letters: list = []
    for g in generators:
        for a in (g, inverse(g)):
            if a not in letters:
                letters.append(a)
    elements: list = []
    index: dict = {}
    parent: list[int] = []
    letter: list[int] = []

    def add(x, p, a):
        index[x] = len(elements)
        elements.append(x)
        parent.append(p)
        letter.append(a)
        if len(elements) > cap:
            raise SizeCapError(cap, len(elements))

    for k, a in enumerate(letters):
        if a not in index:
            add(a, -1, k)
    right = []
    i = 0
    while i < len(elements):
        x = elements[i]
        row = []
        for k, a in enumerate(letters):
            y = product(x, a)
            j = index.get(y)
            if j is None:
                add(y, i, k)
                j = len(elements) - 1
            row.append(j)
        right.append(row)
        i += 1

    n = len(elements)
    adjoined = zero is not None and zero not in index
    if adjoined:
        elements.append(zero)
        index[zero] = n
        z = n
        right.append([z] * len(letters))
        n += 1
    right_arr = np.asarray(right, dtype=np.int64)

    mul = np.empty((n, n), dtype=np.int64)
    reached = n - 1 if adjoined else n
    for y in range(reached):
        p, k = parent[y], letter[y]
        if p == -1:
            mul[:, y] = right_arr[:, k]
        else:
            mul[:, y] = right_arr[mul[:, p], k]
    if adjoined:
        mul[:, n - 1] = n - 1
        mul[n - 1, :] = n - 1

    star = np.empty(n, dtype=np.int64)
    for i, x in enumerate(elements):
        star[i] = index[inverse(x)]

    gens = []
    for g in generators:
        if index[g] not in gens:
            gens.append(index[g])
    nm = {index[k]: v for k, v in (names or {}).items() if k in index}
    S = FiniteInverseSemigroup(
        elements, mul, star, zero=index[zero] if zero is not None else None, generators=gens, names=nm
    )
    return S


# structural checks


def check_inverse_semigroup(S: FiniteInverseSemigroup) -> Verdict:
    """s s* s = s, s* s s* = s*, s* unique, idempotents commute."""
    n = len(S)
    ar = np.arange(n)
    mul, star = S.mul, S.star
    if not (mul[mul[ar, star], ar] == ar).all():
        s = int(np.flatnonzero(mul[mul[ar, star], ar] != ar)[0])
        return Verdict(False, s, "s s* s != s")
    if not (mul[mul[star, ar], star] == star).all():
        s = int(np.flatnonzero(mul[mul[star, ar], star] != star)[0])
        return Verdict(False, s, "s* s s* != s*")
    for s in range(n):
        sts = mul[mul[s, :], s] == s
        tst = mul[mul[:, s], ar] == ar
        cands = np.flatnonzero(sts & tst)
        if len(cands) != 1:
            return Verdict(False, (s, cands.tolist()), "inverse not unique")
    E = S.idempotents
    sub = mul[np.ix_(E, E)]
    if not (sub == sub.T).all():
        i, j = map(int, np.argwhere(sub != sub.T)[0])
        return Verdict(False, (int(E[i]), int(E[j])), "idempotents do not commute")
    return Verdict(True)


def check_associative(S: FiniteInverseSemigroup) -> Verdict:
    mul = S.mul
    for a in range(len(S)):
        lhs = mul[mul[a, :], :]  # (ab)c indexed [b, c]
        rhs = mul[a, mul]  # a(bc) indexed [b, c]
        if not (lhs == rhs).all():
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            return Verdict(False, (a, b, c), "not associative")
    return Verdict(True)


def natural_leq(S: FiniteInverseSemigroup, s, t) -> bool:
    return S.leq(s, t)


def idempotents(S: FiniteInverseSemigroup) -> list[int]:
    return S.idempotents.tolist()


def _require_zero(S):
    if S.zero is None:
        raise InputError("the Z/P axioms concern inverse semigroups with zero")


def maximal_idempotents(S: FiniteInverseSemigroup) -> list[int]:
    E = S.idempotents
    le = S.idempotent_order
    keep = np.ones(len(E), dtype=bool)
    if S.zero is not None:
        keep &= E != S.zero
    out = []
    for i in np.flatnonzero(keep):
        above = le[i] & keep
        above[i] = False
        if not above.any():
            out.append(int(E[i]))
    return out


def maxima_above(S: FiniteInverseSemigroup, e) -> list[int]:
    return [m for m in maximal_idempotents(S) if S.leq(e, m)]


def check_z1(S: FiniteInverseSemigroup) -> Verdict:
    """Every nonzero idempotent lies under exactly one maximal idempotent."""
    _require_zero(S)
    maxima = maximal_idempotents(S)
    for e in S.nonzero_idempotents.tolist():
        above = [m for m in maxima if S.leq(e, m)]
        if len(above) != 1:
            return Verdict(False, (e, above), "idempotent lies under %d maximal idempotents" % len(above))
    return Verdict(True)


check_p3 = check_z1


def _max_map(S: FiniteInverseSemigroup) -> dict[int, int]:
    cached = S.__dict__.get("_max_map")
    if cached is not None:
        return cached
    v = check_z1(S)
    if not v:
        raise AxiomError("Z1", "S does not admit unique maximal idempotents", v.witness)
    maxima = maximal_idempotents(S)
    table = {}
    for e in S.nonzero_idempotents.tolist():
        table[e] = next(m for m in maxima if S.leq(e, m))
    S.__dict__["_max_map"] = table
    return table


def max_over(S: FiniteInverseSemigroup, e) -> int:
    """The unique maximal idempotent above the nonzero idempotent ``e``."""
    table = _max_map(S)
    if e not in table:
        raise InputError(f"{S.label(e)} is not a nonzero idempotent")
    return table[e]


def check_p1(S: FiniteInverseSemigroup) -> Verdict:
    """Unambiguous: nonzero idempotents with a nonzero product are comparable."""
    E = S.nonzero_idempotents.tolist()
    for i, e in enumerate(E):
        for f in E[i + 1 :]:
            if S.mul[e, f] != S.zero and not (S.leq(e, f) or S.leq(f, e)):
                return Verdict(False, (e, f), "incomparable idempotents meet nontrivially")
    return Verdict(True)


def idempotents_above(S: FiniteInverseSemigroup, e) -> int:
    return sum(1 for f in S.idempotents.tolist() if S.leq(e, f))


def check_p2(S: FiniteInverseSemigroup) -> Verdict:
    # finitely many idempotents above each one: automatic for finite S
    counts = {e: idempotents_above(S, e) for e in S.nonzero_idempotents.tolist()}
    return Verdict(True, detail=f"max idempotents above any e: {max(counts.values(), default=0)}")


def check_p4(S: FiniteInverseSemigroup) -> Verdict:
    maxima = set(maximal_idempotents(S))
    for cls in S.green.D:
        if not maxima.intersection(cls):
            return Verdict(False, cls, "D-class without a maximal idempotent")
    return Verdict(True)


def check_proper(S: FiniteInverseSemigroup) -> Verdict:
    """Perrot (P1)-(P4) with exactly one maximal idempotent per nonzero D-class."""
    for name, check in (("P1", check_p1), ("P3", check_p3), ("P4", check_p4)):
        v = check(S)
        if not v:
            return Verdict(False, v.witness, f"{name} fails: {v.detail}")
    maxima = set(maximal_idempotents(S))
    for cls in S.green.D:
        if len(maxima.intersection(cls)) > 1:
            return Verdict(False, cls, "D-class with several maximal idempotents")
    return Verdict(True)


def check_combinatorial(S: FiniteInverseSemigroup) -> Verdict:
    for h in S.green.H:
        if len(h) > 1:
            return Verdict(False, h, "nontrivial H-class")
    return Verdict(True)


def check_0_e_unitary(S: FiniteInverseSemigroup) -> Verdict:
    _require_zero(S)
    for e in S.nonzero_idempotents.tolist():
        for s in S.nonzero.tolist():
            if S.leq(e, s) and not S.is_idempotent(s):
                return Verdict(False, (e, s), "nonzero idempotent below a non-idempotent")
    return Verdict(True)


def mu_congruence(S: FiniteInverseSemigroup) -> np.ndarray:
    """Class labels of the maximum idempotent-separating congruence.

    s mu t iff s*s = t*t and s e s* = t e t* for every idempotent e.
    Labels are numbered by first occurrence.
    """
    E = S.idempotents
    conj = S.mul[S.mul[:, E], S.star[:, None]]
    sig = np.concatenate([S.d[:, None], conj], axis=1)
    return _first_occurrence_labels(sig)


def _first_occurrence_labels(sig: np.ndarray) -> np.ndarray:
    seen: dict = {}
    out = np.empty(len(sig), dtype=np.int64)
    for i, row in enumerate(map(tuple, sig.tolist())):
        out[i] = seen.setdefault(row, len(seen))
    return out


def is_congruence(S: FiniteInverseSemigroup, labels) -> Verdict:
    labels = np.asarray(labels)
    rep = {}
    reps = np.array([rep.setdefault(int(l), i) for i, l in enumerate(labels.tolist())])
    A = labels[S.mul]
    bad = A != A[reps, :]
    if bad.any():
        s, u = map(int, np.argwhere(bad)[0])
        return Verdict(False, (int(s), int(reps[s]), u), "not compatible with right multiplication")
    bad = A != A[:, reps]
    if bad.any():
        u, s = map(int, np.argwhere(bad)[0])
        return Verdict(False, (int(s), int(reps[s]), u), "not compatible with left multiplication")
    return Verdict(True)


def quotient(S: FiniteInverseSemigroup, labels) -> FiniteInverseSemigroup:
    """Quotient by a congruence given as class labels (checked first)."""
    v = is_congruence(S, labels)
    if not v:
        raise AxiomError("congruence", v.detail, v.witness)
    classes = labels_to_classes(labels)
    cls_of = np.empty(len(S), dtype=np.int64)
    for k, c in enumerate(classes):
        cls_of[list(c)] = k
    reps = np.array([c[0] for c in classes])
    mul = cls_of[S.mul[np.ix_(reps, reps)]]
    star = cls_of[S.star[reps]]
    elements = [frozenset(S.elements[i] for i in c) for c in classes]
    gens = []
    for g in S.generators:
        if int(cls_of[g]) not in gens:
            gens.append(int(cls_of[g]))
    names = {int(cls_of[i]): nm for i, nm in S.names.items()}
    Q = FiniteInverseSemigroup(
        elements, mul, star,
        zero=None if S.zero is None else int(cls_of[S.zero]),
        generators=gens, names=names,
    )
    Q.class_of = cls_of
    Q.classes = classes
    for k, c in enumerate(classes):
        if k not in Q.names:
            Q.names[k] = S.label(c[0]) if len(c) == 1 else "[" + ", ".join(S.label(i) for i in c) + "]"
    return Q


# morphisms


def check_homomorphism(S, T, phi, bijective=True) -> Verdict:
    phi = np.asarray(phi, dtype=np.int64)
    lhs = phi[S.mul]
    rhs = T.mul[phi[:, None], phi[None, :]]
    if not (lhs == rhs).all():
        s, t = map(int, np.argwhere(lhs != rhs)[0])
        return Verdict(False, {"kind": "not a homomorphism", "s": s, "t": t}, "phi(st) != phi(s)phi(t)")
    if bijective:
        first = {}
        for s, im in enumerate(phi.tolist()):
            if im in first:
                return Verdict(False, {"kind": "not injective", "s": first[im], "t": s}, "phi(s) = phi(t)")
            first[im] = s
        if len(S) != len(T):
            return Verdict(False, {"kind": "not surjective", "orders": (len(S), len(T))}, "orders differ")
    return Verdict(True)


def extend_generator_map(S: FiniteInverseSemigroup, T: FiniteInverseSemigroup, gen_map: Mapping[int, int]):
    """Extend ``gen_map`` multiplicatively along the spanning words of ``S``.

    Returns the image array; an unreachable zero goes to ``T.zero``.
    """
    parent, letter = S.words()
    img = {}
    for g in S.generators:
        if g not in gen_map:
            raise InputError(f"generator {S.label(g)} has no image")
        img[g] = int(gen_map[g])
    for g in S.generators:
        img.setdefault(int(S.star[g]), int(T.star[gen_map[g]]))
    n = len(S)
    phi = np.full(n, -1, dtype=np.int64)
    order = np.argsort(_depths(parent), kind="stable")
    for s in order.tolist():
        p = int(parent[s])
        if p == -2:
            continue
        if p == -1:
            phi[s] = img[int(letter[s])]
        else:
            phi[s] = T.mul[phi[p], img[int(letter[s])]]
    if S.zero is not None and phi[S.zero] == -1 and T.zero is not None:
        phi[S.zero] = T.zero
    return phi


def _depths(parent):
    n = len(parent)
    depth = np.full(n, -1, dtype=np.int64)
    for s in range(n):
        chain = []
        x = s
        while x >= 0 and depth[x] < 0:
            chain.append(x)
            x = int(parent[x])
        base = depth[x] if x >= 0 else 0
        for y in reversed(chain):
            base += 1
            depth[y] = base
    return depth


def verify_isomorphism(S, T, gen_map: Mapping[int, int]) -> Verdict:
    """Does ``gen_map`` (generator index of S -> index of T) extend to an isomorphism?"""
    phi = extend_generator_map(S, T, gen_map)
    if (phi < 0).any():
        s = int(np.flatnonzero(phi < 0)[0])
        return Verdict(False, {"kind": "not generated", "s": s}, "element not reachable from generators")
    for g, im in gen_map.items():
        if phi[g] != im:
            return Verdict(False, {"kind": "generator clash", "s": g}, "generator relations not preserved")
    v = check_homomorphism(S, T, phi)
    if v:
        v.witness = phi
    return v


@dataclass
class DClassBox:
    """One nonzero D-class as a grid: row e holds {s : ss* = e}, column f holds
    {s : s*s = f}; the cell (e, f) is an H-class."""

    rows: list[int]
    cols: list[int]
    cells: dict[tuple[int, int], tuple[int, ...]]
    maximal: frozenset[int]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cells.values())

    def cell(self, i, j) -> tuple[int, ...]:
        return self.cells[self.rows[i], self.cols[j]]


def eggbox(S: FiniteInverseSemigroup) -> list[DClassBox]:
    maxima = frozenset(maximal_idempotents(S)) if S.zero is not None else frozenset()
    out = []
    for cls in S.green.D:
        idem = sorted(s for s in cls if S.is_idempotent(s))
        cells: dict[tuple[int, int], list[int]] = {(e, f): [] for e in idem for f in idem}
        for s in cls:
            cells[int(S.r[s]), int(S.d[s])].append(s)
        out.append(
            DClassBox(
                rows=idem,
                cols=list(idem),
                cells={k: tuple(v) for k, v in cells.items()},
                maximal=maxima.intersection(idem),
            )
        )
    return out
