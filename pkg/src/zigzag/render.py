"""Text and Graphviz renderings of eggbox diagrams and categories."""

from __future__ import annotations

from .category import FiniteCategory
from .semigroup import DClassBox, FiniteInverseSemigroup, eggbox


def _cell_text(S, box: DClassBox, i, j) -> str:
    members = box.cell(i, j)
    text = ", ".join(S.label(s) for s in members) or "-"
    if any(s in box.maximal for s in members):
        text += " max"
    return text


def eggbox_text(S: FiniteInverseSemigroup, boxes: list[DClassBox] | None = None) -> str:
    if boxes is None:
        boxes = eggbox(S)
    chunks = []
    for k, box in enumerate(boxes, 1):
        rows, cols = box.shape
        grid = [[_cell_text(S, box, i, j) for j in range(cols)] for i in range(rows)]
        width = [max(len(grid[i][j]) for i in range(rows)) for j in range(cols)]
        rule = "+" + "+".join("-" * (w + 2) for w in width) + "+"
        lines = [f"D-class {k}: {rows}x{cols}, {box.size} elements", rule]
        for row in grid:
            lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, width)) + " |")
            lines.append(rule)
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"


def _q(s: str) -> str:
    return '"{}"'.format(str(s).replace("\\", "\\\\").replace('"', r"\""))


def _html(s: str) -> str:
    return str(s).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def eggbox_dot(S: FiniteInverseSemigroup, boxes: list[DClassBox] | None = None) -> str:
    """Each D-class becomes one node whose label is an HTML table."""
    if boxes is None:
        boxes = eggbox(S)
    out = ["digraph eggbox {", "  node [shape=plaintext];"]
    for k, box in enumerate(boxes, 1):
        rows, cols = box.shape
        html = ['<table border="0" cellborder="1" cellspacing="0">']
        for i in range(rows):
            html.append("<tr>")
            for j in range(cols):
                html.append(f"<td>{_html(_cell_text(S, box, i, j))}</td>")
            html.append("</tr>")
        html.append("</table>")
        out.append(f"  D{k} [label=<{''.join(html)}>];")
    out.append("}")
    return "\n".join(out) + "\n"


def category_dot(C: FiniteCategory, skip_identities: bool = True) -> str:
    out = ["digraph category {", "  rankdir=RL;"]
    for o in C.objects:
        out.append(f"  {_q(o)};")
    for f, name in enumerate(C.morphisms):
        if skip_identities and C.is_identity(f):
            continue
        out.append(f"  {_q(C.objects[C.src[f]])} -> {_q(C.objects[C.rng[f]])} [label={_q(name)}];")
    out.append("}")
    return "\n".join(out) + "\n"
