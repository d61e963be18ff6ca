"""Finite small categories with an explicit composition table.

Composition follows the path convention: ``comp[f, g]`` is the morphism
``fg`` and is defined exactly when ``src(f) == rng(g)``.
"""

from __future__ import annotations

from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import AxiomError, InputError, ParseError
from .semigroup import Verdict

NONE = -1


class FiniteCategory:
    def __init__(
        self,
        objects: Sequence[str],
        morphisms: Sequence[str],
        src: Sequence[int],
        rng: Sequence[int],
        identity: Sequence[int],
        comp,
    ):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        if len(set(self.objects)) != len(self.objects):
            raise InputError("duplicate object names")
        if len(set(self.morphisms)) != len(self.morphisms):
            raise InputError("duplicate morphism names")
        self.obj_index = {o: i for i, o in enumerate(self.objects)}
        self.mor_index = {m: i for i, m in enumerate(self.morphisms)}
        self.src = np.asarray(src, dtype=np.int64)
        self.rng = np.asarray(rng, dtype=np.int64)
        self.identity = np.asarray(identity, dtype=np.int64)
        m = len(self.morphisms)
        self.comp = np.asarray(comp, dtype=np.int64).reshape(m, m)
        for a in (self.src, self.rng, self.identity, self.comp):
            a.setflags(write=False)

    @classmethod
    def from_function(cls, objects, morphisms, src, rng, identity, compose: Callable[[int, int], int]):
        m = len(morphisms)
        comp = np.full((m, m), NONE, dtype=np.int64)
        for f in range(m):
            for g in range(m):
                if src[f] == rng[g]:
                    comp[f, g] = compose(f, g)
        return cls(objects, morphisms, src, rng, identity, comp)

    @classmethod
    def from_tables(
        cls,
        objects: Sequence[str],
        identities: Mapping[str, str],
        morphisms: Mapping[str, tuple[str, str]],
        comps: Mapping[tuple[str, str], str],
    ) -> FiniteCategory:
        """Build from names.  ``morphisms`` maps name -> (src, rng) for the
        non-identity morphisms; composites with identities are filled in."""
        objects = list(objects)
        oi = {o: i for i, o in enumerate(objects)}
        names, src, rng = [], [], []
        ident = []
        for o in objects:
            if o not in identities:
                raise InputError(f"object {o} has no identity")
            names.append(identities[o])
            src.append(oi[o])
            rng.append(oi[o])
            ident.append(len(names) - 1)
        for name, (s, r) in morphisms.items():
            if name in names:
                continue
            for o in (s, r):
                if o not in oi:
                    raise InputError(f"morphism {name}: unknown object {o}")
            names.append(name)
            src.append(oi[s])
            rng.append(oi[r])
        mi = {n: i for i, n in enumerate(names)}
        m = len(names)
        comp = np.full((m, m), NONE, dtype=np.int64)
        for f in range(m):
            comp[f, ident[src[f]]] = f
            comp[ident[rng[f]], f] = f
        for (f, g), h in comps.items():
            for x in (f, g, h):
                if x not in mi:
                    raise InputError(f"composition mentions unknown morphism {x}")
            if src[mi[f]] != rng[mi[g]]:
                raise InputError(f"{f} and {g} are not composable")
            prev = comp[mi[f], mi[g]]
            if prev != NONE and prev != mi[h]:
                raise InputError(f"conflicting composites for {f} {g}")
            comp[mi[f], mi[g]] = mi[h]
        return cls(objects, names, src, rng, ident, comp)

    def __len__(self):
        return len(self.morphisms)

    def __repr__(self):
        return f"<FiniteCategory objects={len(self.objects)} morphisms={len(self.morphisms)}>"

    def m(self, name) -> int:
        return self.mor_index[name]

    def composable(self, f, g) -> bool:
        return self.src[f] == self.rng[g]

    def compose(self, f, g) -> int:
        if not self.composable(f, g):
            raise InputError(f"{self.morphisms[f]} and {self.morphisms[g]} are not composable")
        return int(self.comp[f, g])

    def is_identity(self, f) -> bool:
        return self.identity[self.src[f]] == f

    @cached_property
    def into(self) -> list[np.ndarray]:
        """Morphisms with range ``u``, for each object ``u``."""
        return [np.flatnonzero(self.rng == u) for u in range(len(self.objects))]

    @cached_property
    def cones(self) -> list[frozenset[int]]:
        """Principal right ideal ``aC = {a x}`` of each morphism."""
        return [frozenset(self.comp[a, self.into[self.src[a]]].tolist()) for a in range(len(self))]

    def cone(self, a) -> frozenset[int]:
        return self.cones[a]

    @cached_property
    def _quotients(self) -> list[dict[int, int]]:
        # for each a: {a x: x}; unique when left cancellative
        out = []
        for a in range(len(self)):
            xs = self.into[self.src[a]]
            out.append({int(self.comp[a, x]): int(x) for x in xs})
        return out

    def divide(self, a, g) -> int | None:
        """The x with ``a x == g``, or None (left cancellative categories)."""
        return self._quotients[a].get(g)

    @cached_property
    def invertibles(self) -> frozenset[int]:
        out = set()
        for f in range(len(self)):
            for g in self.into[self.src[f]].tolist():
                if (self.src[g] == self.rng[f] and self.comp[f, g] == self.identity[self.rng[f]]
                        and self.comp[g, f] == self.identity[self.src[f]]):
                    out.add(f)
                    break
        return frozenset(out)

    def cone_equivalent(self, g1, g2) -> bool:
        """g1 = g2 l for some invertible l."""
        return any(
            self.src[g2] == self.rng[lam] and self.comp[g2, lam] == g1 for lam in self.invertibles
        )

    def cone_generators(self, cone: frozenset[int]) -> list[int]:
        return sorted(g for g in cone if self.cones[g] == cone)

    @cached_property
    def _intersections(self) -> dict[tuple[int, int], list[int]]:
        out = {}
        m = len(self)
        for a in range(m):
            for b in range(a, m):
                meet = self.cones[a] & self.cones[b]
                if meet:
                    out[a, b] = out[b, a] = self.cone_generators(meet)
        return out

    def intersection_generators(self, a, b) -> list[int] | None:
        """Generators g with gC = aC ∩ bC: None when the meet is empty."""
        return self._intersections.get((a, b))

    def meet(self, a, b) -> int | None:
        """Canonical generator of aC ∩ bC (lowest index)."""
        gens = self._intersections.get((a, b))
        if gens is None:
            return None
        if not gens:
            raise AxiomError("singly aligned", f"{self.morphisms[a]}C ∩ {self.morphisms[b]}C is not a cone", (a, b))
        return gens[0]

    def to_cat(self) -> str:
        for name in list(self.objects) + list(self.morphisms):
            if not name or any(ch.isspace() for ch in name):
                raise InputError(f"name {name!r} cannot be written to a .cat file")
        lines = []
        for o in self.objects:
            lines.append(f"object {o}")
        for u, o in enumerate(self.objects):
            lines.append(f"id {o} = {self.morphisms[self.identity[u]]}")
        for f, name in enumerate(self.morphisms):
            if not self.is_identity(f):
                lines.append(f"mor {name} src={self.objects[self.src[f]]} rng={self.objects[self.rng[f]]}")
        for f in range(len(self)):
            if self.is_identity(f):
                continue
            for g in range(len(self)):
                if self.is_identity(g) or not self.composable(f, g):
                    continue
                h = self.comp[f, g]
                if h != NONE:
                    lines.append(f"comp {self.morphisms[f]} {self.morphisms[g]} = {self.morphisms[h]}")
        return "\n".join(lines) + "\n"


def _composable_pairs(C: FiniteCategory):
    for f in range(len(C)):
        for g in C.into[C.src[f]].tolist():
            yield f, g


def check_category_axioms(C: FiniteCategory) -> Verdict:
    m = len(C)
    for u, i in enumerate(C.identity.tolist()):
        if C.src[i] != u or C.rng[i] != u:
            return Verdict(False, ("identity", i), f"identity of {C.objects[u]} has wrong endpoints")
    for f in range(m):
        for g in range(m):
            h = int(C.comp[f, g])
            if C.composable(f, g):
                if h == NONE:
                    return Verdict(False, ("missing", f, g), f"no composite for {C.morphisms[f]} {C.morphisms[g]}")
                if C.src[h] != C.src[g] or C.rng[h] != C.rng[f]:
                    return Verdict(False, ("endpoints", f, g), "composite has wrong endpoints")
            elif h != NONE:
                return Verdict(False, ("spurious", f, g), "composite defined on non-composable pair")
    for f in range(m):
        if C.comp[f, C.identity[C.src[f]]] != f or C.comp[C.identity[C.rng[f]], f] != f:
            return Verdict(False, ("unit", f), f"identity law fails at {C.morphisms[f]}")
    for f, g in _composable_pairs(C):
        fg = C.comp[f, g]
        for h in C.into[C.src[g]].tolist():
            if C.comp[fg, h] != C.comp[f, C.comp[g, h]]:
                return Verdict(False, ("assoc", f, g, h), "not associative")
    return Verdict(True)


def check_left_cancellative(C: FiniteCategory) -> Verdict:
    for a in range(len(C)):
        xs = C.into[C.src[a]]
        images = C.comp[a, xs]
        if len(set(images.tolist())) != len(xs):
            seen = {}
            for x, y in zip(xs.tolist(), images.tolist()):
                if y in seen:
                    return Verdict(False, (a, seen[y], x), "a b = a c with b != c")
                seen[y] = x
    return Verdict(True)


def check_right_cancellative(C: FiniteCategory) -> Verdict:
    for a in range(len(C)):
        xs = np.flatnonzero(C.src == C.rng[a])
        images = C.comp[xs, a]
        seen = {}
        for x, y in zip(xs.tolist(), images.tolist()):
            if y in seen:
                return Verdict(False, (a, seen[y], x), "b a = c a with b != c")
            seen[y] = x
    return Verdict(True)


def invertibles(C: FiniteCategory) -> frozenset[int]:
    return C.invertibles


def cone_equivalent(C: FiniteCategory, g1, g2) -> bool:
    return C.cone_equivalent(g1, g2)


def check_singly_aligned(C: FiniteCategory) -> Verdict:
    m = len(C)
    for a in range(m):
        for b in range(a, m):
            gens = C.intersection_generators(a, b)
            if gens is not None and not gens:
                return Verdict(False, (a, b), f"{C.morphisms[a]}C ∩ {C.morphisms[b]}C is not principal")
    return Verdict(True)


def require_left_cancellative(C: FiniteCategory):
    v = C.__dict__.get("_lc_verdict")
    if v is None:
        v = check_left_cancellative(C)
        C.__dict__["_lc_verdict"] = v
    if not v:
        raise AxiomError("left cancellative", "category is not left cancellative", v.witness)


# .cat text format


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_cat(text: str, path=None) -> FiniteCategory:
    objects: list[str] = []
    identities: dict[str, str] = {}
    morphisms: dict[str, tuple[str, str]] = {}
    comps: dict[tuple[str, str], str] = {}
    for lineno, tok in _tokens(text):
        kw = tok[0]
        if kw == "object" and len(tok) == 2:
            if tok[1] in objects:
                raise ParseError(f"duplicate object {tok[1]}", lineno, path)
            objects.append(tok[1])
        elif kw == "id" and len(tok) == 4 and tok[2] == "=":
            if tok[1] not in objects:
                raise ParseError(f"unknown object {tok[1]}", lineno, path)
            if tok[1] in identities:
                raise ParseError(f"second identity for {tok[1]}", lineno, path)
            identities[tok[1]] = tok[3]
        elif kw == "mor" and len(tok) == 4:
            fields = dict(t.split("=", 1) for t in tok[2:] if "=" in t)
            if set(fields) != {"src", "rng"}:
                raise ParseError("expected: mor NAME src=OBJ rng=OBJ", lineno, path)
            if tok[1] in morphisms:
                raise ParseError(f"duplicate morphism {tok[1]}", lineno, path)
            morphisms[tok[1]] = (fields["src"], fields["rng"])
        elif kw == "comp" and len(tok) == 5 and tok[3] == "=":
            key = (tok[1], tok[2])
            if key in comps and comps[key] != tok[4]:
                raise ParseError(f"conflicting composites for {tok[1]} {tok[2]}", lineno, path)
            comps[key] = tok[4]
        else:
            raise ParseError(f"cannot parse line: {' '.join(tok)}", lineno, path)
    if not objects:
        raise ParseError("no objects declared", path=path)
    id_names = set(identities.values())
    for name, (s, r) in morphisms.items():
        if name in id_names:
            obj = next(o for o, i in identities.items() if i == name)
            if s != obj or r != obj:
                raise ParseError(f"identity {name} must have src=rng={obj}", path=path)
    try:
        return FiniteCategory.from_tables(objects, identities, morphisms, comps)
    except InputError as exc:
        raise ParseError(str(exc), path=path) from None


def load_cat(path) -> FiniteCategory:
    path = Path(path)
    return parse_cat(path.read_text(encoding="utf-8"), path=str(path))


def group_category(elements: Sequence, product: Callable, identity, name: str = "*") -> FiniteCategory:
    """A finite group as a one-object category."""
    elements = list(elements)
    idx = {g: i for i, g in enumerate(elements)}
    m = len(elements)
    names = ["".join(str(g).split()) for g in elements]
    comp = np.array([[idx[product(f, g)] for g in elements] for f in elements], dtype=np.int64)
    return FiniteCategory([name], names, [0] * m, [0] * m, [idx[identity]], comp)


def cyclic_group_category(n: int) -> FiniteCategory:
    return group_category(range(n), lambda a, b: (a + b) % n, 0, name="*")


def morphism_names(C: FiniteCategory, xs: Iterable[int]) -> list[str]:
    return [C.morphisms[x] for x in xs]
