"""Input files: ``.pbij`` generator lists, semigroup JSON, and a loader that
turns any supported file into a finite inverse semigroup."""

from __future__ import annotations

import json
from pathlib import Path

from .category import load_cat
from .errors import InputError, ParseError
from .graphs import graph_inverse_semigroup, load_graph
from .pbij import GroundSet, PartialBijection
from .semigroup import DEFAULT_CAP, FiniteInverseSemigroup, generate


def parse_pbij(text: str, path=None) -> tuple[GroundSet, dict[str, PartialBijection]]:
    """``ground N`` then ``gen NAME = a:b c:d ...`` lines; '#' starts a comment."""
    ground = None
    gens: dict[str, PartialBijection] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "ground":
            if ground is not None:
                raise ParseError("ground declared twice", lineno, path)
            if len(tok) != 2 or not tok[1].isdigit() or int(tok[1]) < 1:
                raise ParseError("expected: ground N (N >= 1)", lineno, path)
            ground = GroundSet.range(int(tok[1]))
        elif tok[0] == "gen":
            if ground is None:
                raise ParseError("gen before ground", lineno, path)
            if len(tok) < 3 or tok[2] != "=":
                raise ParseError("expected: gen NAME = a:b ...", lineno, path)
            name = tok[1]
            if name in gens:
                raise ParseError(f"duplicate generator name {name}", lineno, path)
            pairs = []
            for item in tok[3:]:
                a, sep, b = item.partition(":")
                if not sep or not a.isdigit() or not b.isdigit():
                    raise ParseError(f"bad pair {item!r} (expected a:b)", lineno, path)
                pairs.append((int(a), int(b)))
            try:
                gens[name] = PartialBijection.from_pairs(ground, pairs)
            except InputError as exc:
                raise ParseError(f"generator {name}: {exc}", lineno, path) from None
        else:
            raise ParseError(f"unknown directive {tok[0]!r}", lineno, path)
    if ground is None:
        raise ParseError("missing ground line", path=path)
    if not gens:
        raise ParseError("no generators", path=path)
    return ground, gens


def semigroup_from_pbij(text: str, path=None, cap: int = DEFAULT_CAP) -> FiniteInverseSemigroup:
    ground, gens = parse_pbij(text, path)
    names = {}
    for name, g in gens.items():
        names.setdefault(g, name)
    return generate(list(gens.values()), cap=cap, names=names)


def semigroup_from_dict(data: dict) -> FiniteInverseSemigroup:
    if data.get("schema") != 1:
        raise InputError("unsupported semigroup JSON schema")
    try:
        labels = list(data["elements"])
        if len(set(labels)) != len(labels):
            raise InputError("element labels in JSON are not unique")
        S = FiniteInverseSemigroup(
            labels,
            data["product"],
            data["star"],
            zero=data.get("zero"),
            generators=data.get("generators", ()),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed semigroup JSON: {exc}") from None
    n = len(S)
    if ((S.mul < 0) | (S.mul >= n)).any() or ((S.star < 0) | (S.star >= n)).any():
        raise InputError("table entries out of range")
    return S


def load_semigroup(path, cap: int = DEFAULT_CAP) -> FiniteInverseSemigroup:
    """Dispatch on suffix: .pbij, .graph (graph inverse semigroup),
    .cat (zigzag semigroup of the category), .json (table dump)."""
    path = Path(path)
    suffix = path.suffix
    if suffix == ".pbij":
        return semigroup_from_pbij(path.read_text(encoding="utf-8"), str(path), cap=cap)
    if suffix == ".graph":
        return graph_inverse_semigroup(load_graph(path))
    if suffix == ".cat":
        from .zm import zm

        return zm(load_cat(path), cap=cap)
    if suffix == ".json":
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}", path=str(path)) from None
        try:
            return semigroup_from_dict(data)
        except InputError as exc:
            raise ParseError(str(exc), path=str(path)) from None
    raise ParseError(f"unrecognised file type {suffix!r}", path=str(path))
