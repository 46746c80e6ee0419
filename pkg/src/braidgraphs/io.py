"""Text formats: Coxeter graph files, word strings, JSON and DOT exports."""
from __future__ import annotations

import json
import re
from pathlib import Path

from .classes import (
    BraidClass,
    MatsumotoGraph,
    class_shadows,
    enumerate_braid_class,
    rank,
    sorted_shadows,
)
from .coxeter import CoxeterGraph, build_graph, standard_family
from .errors import BraidError
from .words import Word, word_str

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
)
MOVE_COLORS = {"braid": "blue", "commutation": "orange"}


class FormatError(BraidError, ValueError):
    pass


# -- Coxeter graphs --------------------------------------------------------

def parse_graph_text(text: str) -> CoxeterGraph:
    """Read ``n=<int>`` plus ``bond i j`` lines, or a single ``family <F> <n>`` line.

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    bonds = []
    family = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace("=", " ").split()
        key = parts[0].lower()
        if key == "n" and len(parts) == 2:
            n = int(parts[1])
        elif key == "bond" and len(parts) == 3:
            bonds.append((int(parts[1]), int(parts[2])))
        elif key == "family" and len(parts) == 3:
            family = (parts[1], int(parts[2]))
        else:
            raise FormatError(f"cannot parse graph line {raw!r}")
    if family is not None:
        if n is not None or bonds:
            raise FormatError("a family line cannot be mixed with n= or bond lines")
        return standard_family(*family)
    if n is None:
        raise FormatError("graph text needs an n=<int> line")
    return build_graph(n, bonds)


def parse_graph_arg(arg: str) -> CoxeterGraph:
    """``family:<F>:<n>`` shorthand, or a path to a graph file."""
    if arg.startswith("family:"):
        parts = arg.split(":")
        if len(parts) != 3:
            raise FormatError(f"expected family:<F>:<n>, got {arg!r}")
        try:
            n = int(parts[2])
        except ValueError:
            raise FormatError(f"rank in {arg!r} is not an integer") from None
        return standard_family(parts[1], n)
    path = Path(arg)
    if not path.exists():
        raise FormatError(f"no graph file at {arg!r} (use family:<F>:<n> for the standard families)")
    return parse_graph_text(path.read_text())


def graph_to_text(g: CoxeterGraph) -> str:
    lines = [f"n={g.n}"] + [f"bond {s} {t}" for s, t in sorted(g.bonds)]
    return "\n".join(lines) + "\n"


# -- words -----------------------------------------------------------------

def parse_word(text: str, n: int | None = None) -> Word:
    """Whitespace- or comma-separated generator indices.

    A single run of digits with no separators, such as ``2321434``, is read
    one digit per letter unless the graph has ten or more generators.
    """
    text = text.strip()
    if not text:
        return ()
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    if not all(t.isdigit() for t in tokens):
        raise FormatError(f"word {text!r} must contain only generator indices")
    if len(tokens) == 1 and len(tokens[0]) > 1 and (n is None or n < 10):
        return tuple(int(ch) for ch in tokens[0])
    return tuple(int(t) for t in tokens)


# -- classes ---------------------------------------------------------------

def class_to_dict(c: BraidClass, seed_order: str = "lex") -> dict:
    members = list(c.members) if seed_order == "lex" else list(c.bfs_order)
    pos = {m: k for k, m in enumerate(members)}
    edges = sorted(
        (min(pos[c.members[i]], pos[c.members[j]]), max(pos[c.members[i]], pos[c.members[j]]), lo)
        for i, j, lo in c.edges
    )
    return {
        "base": list(c.base),
        "members": [list(m) for m in members],
        "edges": [list(e) for e in edges],
        "shadows": [iv.lo for iv in sorted_shadows(c)],
        "rank": rank(c),
    }


def class_to_json(c: BraidClass, seed_order: str = "lex") -> str:
    return json.dumps(class_to_dict(c, seed_order), sort_keys=True)


def class_from_dict(g: CoxeterGraph, data: dict) -> BraidClass:
    """Rebuild a class from its export, checking it against a fresh enumeration."""
    c = enumerate_braid_class(g, data["base"])
    members = [tuple(m) for m in data["members"]]
    if set(members) != set(c.members):
        raise FormatError("exported members do not form the braid class of the base")
    pos = {m: k for k, m in enumerate(members)}
    given = {(a, b, lo) for a, b, lo in data["edges"]}
    fresh = {
        (min(pos[c.members[i]], pos[c.members[j]]), max(pos[c.members[i]], pos[c.members[j]]), lo)
        for i, j, lo in c.edges
    }
    if given != fresh:
        raise FormatError("exported edges disagree with the braid graph")
    if sorted(data["shadows"]) != sorted(iv.lo for iv in class_shadows(c)) or data["rank"] != rank(c):
        raise FormatError("exported shadows or rank disagree with the class")
    return c


def class_from_json(g: CoxeterGraph, text: str) -> BraidClass:
    return class_from_dict(g, json.loads(text))


def class_to_text(c: BraidClass, seed_order: str = "lex") -> str:
    members = c.members if seed_order == "lex" else c.bfs_order
    out = [
        f"class of {word_str(c.base)}: {len(c)} members, rank {rank(c)}",
        "shadows: " + " ".join(str(iv) for iv in sorted_shadows(c)),
        "members:",
    ]
    out += [f"  {word_str(m)}" for m in members]
    out.append("edges:")
    out += [f"  {word_str(c.members[i])} -- {word_str(c.members[j])}  [[{lo},{lo + 2}]]" for i, j, lo in c.edges]
    return "\n".join(out) + "\n"


def _dot_id(w) -> str:
    return '"' + word_str(w) + '"'


def class_to_dot(c: BraidClass, labels: dict | None = None, seed_order: str = "lex") -> str:
    """DOT source; edges coloured by the start of their shadow, optional bit labels on nodes."""
    members = c.members if seed_order == "lex" else c.bfs_order
    out = ["graph braid {"]
    for m in members:
        attr = f' [label="{labels[m]}"]' if labels is not None else ""
        out.append(f"  {_dot_id(m)}{attr};")
    for i, j, lo in c.edges:
        color = PALETTE[(lo - 1) % len(PALETTE)]
        out.append(f'  {_dot_id(c.members[i])} -- {_dot_id(c.members[j])} [color="{color}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def matsumoto_to_dot(mg: MatsumotoGraph) -> str:
    out = ["graph matsumoto {"]
    out += [f"  {_dot_id(m)};" for m in mg.members]
    for i, j, kind, _ in mg.edges:
        out.append(f'  {_dot_id(mg.members[i])} -- {_dot_id(mg.members[j])} [color="{MOVE_COLORS[kind]}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def matsumoto_to_dict(mg: MatsumotoGraph) -> dict:
    return {
        "base": list(mg.base),
        "members": [list(m) for m in mg.members],
        "edges": [[i, j, kind, lo] for i, j, kind, lo in mg.edges],
        "braid_classes": [sorted(list(m) for m in cls) for cls in mg.braid_classes()],
        "commutation_classes": [sorted(list(m) for m in cls) for cls in mg.commutation_classes()],
    }


def embedding_to_dict(labels: dict, isometric: bool, theta: list) -> dict:
    return {
        "labels": {word_str(m): bits for m, bits in sorted(labels.items())},
        "isometric": isometric,
        "theta_classes": [[[word_str(u), word_str(v)] for u, v in cls] for cls in theta],
    }
