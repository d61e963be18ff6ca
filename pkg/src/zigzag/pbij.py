"""Partial bijections on a finite ground set.

Points are interned to dense integers, so a partial bijection is stored as a
tuple ``img`` with ``img[i]`` the image of point ``i`` or ``-1`` when ``i`` is
outside the domain.  The empty map is the zero of I(X).
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .errors import InputError

UNDEF = -1


class GroundSet:
    __slots__ = ("points", "index", "_hash")

    def __init__(self, points: Iterable[Hashable]):
        points = tuple(points)
        if not points:
            raise InputError("ground set must be nonempty")
        index = {}
        for i, p in enumerate(points):
            if p in index:
                raise InputError(f"duplicate ground point {p!r}")
            index[p] = i
        self.points = points
        self.index = index
        self._hash = hash(points)

    @classmethod
    def range(cls, n: int) -> GroundSet:
        """The ground set {1, ..., n}."""
        return cls(range(1, n + 1))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in self.index

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, GroundSet) and self.points == other.points

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GroundSet({list(self.points)!r})"


class PartialBijection:
    """An injective partial map on a :class:`GroundSet`. Immutable."""

    __slots__ = ("ground", "img", "_hash")

    def __init__(self, ground: GroundSet, img: tuple[int, ...]):
        # trusted constructor; use from_pairs for validation
        self.ground = ground
        self.img = img
        self._hash = hash(img)

    @classmethod
    def from_pairs(cls, ground: GroundSet, pairs) -> PartialBijection:
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        img = [UNDEF] * len(ground)
        seen_targets = {}
        for x, y in pairs:
            if x not in ground.index:
                raise InputError(f"point {x!r} is not in the ground set")
            if y not in ground.index:
                raise InputError(f"point {y!r} is not in the ground set")
            i, j = ground.index[x], ground.index[y]
            if img[i] != UNDEF:
                raise InputError(f"duplicate source point {x!r}: not a function")
            if j in seen_targets:
                raise InputError(
                    f"points {seen_targets[j]!r} and {x!r} both map to {y!r}: not injective"
                )
            seen_targets[j] = x
            img[i] = j
        return cls(ground, tuple(img))

    @classmethod
    def identity(cls, ground: GroundSet, points=None) -> PartialBijection:
        """Identity on ``points`` (all of the ground set when omitted)."""
        if points is None:
            return cls(ground, tuple(range(len(ground))))
        return cls.from_pairs(ground, [(p, p) for p in points])

    @classmethod
    def zero(cls, ground: GroundSet) -> PartialBijection:
        return cls(ground, (UNDEF,) * len(ground))

    def __call__(self, x):
        j = self.img[self.ground.index[x]]
        if j == UNDEF:
            raise KeyError(x)
        return self.ground.points[j]

    def pairs(self) -> list[tuple]:
        pts = self.ground.points
        return [(pts[i], pts[j]) for i, j in enumerate(self.img) if j != UNDEF]

    def domain(self) -> frozenset:
        pts = self.ground.points
        return frozenset(pts[i] for i, j in enumerate(self.img) if j != UNDEF)

    def image(self) -> frozenset:
        pts = self.ground.points
        return frozenset(pts[j] for j in self.img if j != UNDEF)

    def is_zero(self) -> bool:
        return all(j == UNDEF for j in self.img)

    def __bool__(self):
        return not self.is_zero()

    def __len__(self):
        return sum(1 for j in self.img if j != UNDEF)

    def __mul__(self, other):
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return compose(self, other)

    @property
    def inv(self) -> PartialBijection:
        return inverse(self)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return self.img == other.img and self.ground == other.ground

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # canonical order used for tie-breaking only
        return self.img < other.img

    def __repr__(self):
        return f"PartialBijection({dict(self.pairs())!r})"

    def __str__(self):
        return two_row(self)


def _check_ground(f: PartialBijection, g: PartialBijection):
    if f.ground != g.ground:
        raise InputError("partial bijections live on different ground sets")


def compose(f: PartialBijection, g: PartialBijection) -> PartialBijection:
    """``f∘g``: x ↦ f(g(x)) on the largest domain where this makes sense."""
    _check_ground(f, g)
    fi = f.img
    return PartialBijection(f.ground, tuple(UNDEF if j == UNDEF else fi[j] for j in g.img))


def inverse(f: PartialBijection) -> PartialBijection:
    img = [UNDEF] * len(f.img)
    for i, j in enumerate(f.img):
        if j != UNDEF:
            img[j] = i
    return PartialBijection(f.ground, tuple(img))


def is_idempotent(f: PartialBijection) -> bool:
    return all(j == UNDEF or j == i for i, j in enumerate(f.img))


def restricts(f: PartialBijection, g: PartialBijection) -> bool:
    """True when ``f`` is a restriction of ``g`` (the natural partial order)."""
    _check_ground(f, g)
    return all(j == UNDEF or g.img[i] == j for i, j in enumerate(f.img))


def two_row(f: PartialBijection) -> str:
    """Render as ``(1 2 3 / 7 8 9)``; domain in ground-set order, zero as ``0``."""
    pairs = f.pairs()
    if not pairs:
        return "0"
    top = " ".join(str(x) for x, _ in pairs)
    bottom = " ".join(str(y) for _, y in pairs)
    return f"({top} / {bottom})"
