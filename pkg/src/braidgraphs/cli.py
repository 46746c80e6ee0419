"""Command-line front end.

Exit codes: 0 success, 1 any other library error, 2 non-reduced word,
3 enumeration cap exceeded, 4 embedding refused on a graph with a three-cycle.
argparse itself exits with 2 on malformed arguments.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .classes import (
    DEFAULT_CAP,
    braid_graph,
    enumerate_braid_class,
    enumerate_matsumoto,
    rank,
)
from .coxeter import is_triangle_free
from .cube import (
    embed_class,
    image_is_fibonacci,
    is_median_graph,
    isometric_dimension,
    theta_classes,
    verify_isometric,
)
from .errors import BraidError, CapExceeded, NotPartialCube, NotReduced, NotTriangleFree
from .io import (
    class_to_dict,
    class_to_dot,
    class_to_text,
    embedding_to_dict,
    matsumoto_to_dict,
    matsumoto_to_dot,
    parse_graph_arg,
    parse_word,
)
from .links import (
    StringSpec,
    fibonacci_form,
    fibonacci_members,
    is_fibonacci_class,
    is_link_class,
    link_factorization_of_class,
    star_criterion,
    type_a_string,
    verify_box_product,
)
from .words import word_str

EXIT_OK, EXIT_ERROR, EXIT_NOT_REDUCED, EXIT_CAP, EXIT_TRIANGLE = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph: object = None
    word: tuple | None = None
    cap: int = DEFAULT_CAP
    fmt: str = "text"
    unchecked: bool = False
    seed_order: str = "lex"
    spec: StringSpec | None = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        if args.cap < 1:
            raise ValueError("--cap must be >= 1")
        graph = parse_graph_arg(args.graph) if args.graph else None
        word = parse_word(args.word, graph.n if graph else None) if args.word is not None else None
        spec = None
        if args.command == "string":
            spec = StringSpec(args.l, args.k, args.m, args.eps)
        elif graph is None or word is None:
            raise ValueError(f"{args.command} needs both --graph and --word")
        return cls(args.command, graph, word, args.cap, args.format, args.unchecked, args.seed_order, spec)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _flag(x: bool) -> str:
    return "true" if x else "false"


def cmd_class(cfg: RunConfig) -> str:
    c = enumerate_braid_class(cfg.graph, cfg.word, cfg.cap)
    if cfg.fmt == "json":
        return _dump(class_to_dict(c, cfg.seed_order))
    if cfg.fmt == "dot":
        return class_to_dot(c, seed_order=cfg.seed_order)
    return class_to_text(c, cfg.seed_order)


def cmd_factorize(cfg: RunConfig) -> str:
    c = enumerate_braid_class(cfg.graph, cfg.word, cfg.cap)
    fact = link_factorization_of_class(c)
    if cfg.fmt == "text":
        return str(fact) + "\n"
    report = verify_box_product(cfg.graph, cfg.word, cfg.cap)
    if cfg.fmt == "json":
        return _dump({
            "factors": [{"span": [s.lo, s.hi], "word": list(w)} for s, w in fact.factors],
            "box_product": report.to_dict(),
        })
    raise ValueError("factorize supports text and json output")


def cmd_embed(cfg: RunConfig) -> str:
    if not cfg.unchecked and not is_triangle_free(cfg.graph):
        raise NotTriangleFree(f"{cfg.graph!r} has a three-cycle; rerun with --unchecked to probe")
    c = enumerate_braid_class(cfg.graph, cfg.word, cfg.cap)
    labels = embed_class(c, unchecked=cfg.unchecked, cap=cfg.cap)
    bg = braid_graph(c)
    report = verify_isometric(bg, labels)
    if cfg.fmt == "dot":
        return class_to_dot(c, labels=labels, seed_order=cfg.seed_order)
    theta = theta_classes(bg) if bg.edges else []
    if cfg.fmt == "json":
        return _dump(embedding_to_dict(labels, report.isometric, theta))
    members = c.members if cfg.seed_order == "lex" else c.bfs_order
    out = [f"{word_str(m)}  {labels[m] or '(empty)'}" for m in members]
    out.append(f"isometric: {_flag(report.isometric)}")
    for u, v, d, h in report.violations:
        out.append(f"  violation: {word_str(u)} {word_str(v)} distance {d} hamming {h}")
    out.append(f"theta classes: {len(theta)}")
    return "\n".join(out) + "\n"


def cmd_fibonacci(cfg: RunConfig) -> str:
    c = enumerate_braid_class(cfg.graph, cfg.word, cfg.cap)
    fib = is_fibonacci_class(c)
    info = {
        "word": word_str(c.base),
        "rank": rank(c),
        "class_size": len(c),
        "link": is_link_class(c),
        "fibonacci": fib,
    }
    if fib:
        s, ts = fibonacci_form(cfg.graph, c.base, cfg.cap)
        info["form"] = {"s": s, "ts": ts}
        info["fibonacci_cube"] = image_is_fibonacci(c)
    elif info["link"]:
        found = fibonacci_members(c)
        info["fibonacci_member"] = word_str(found[0]) if found else None
    if info["link"] and rank(c) >= 1 and is_triangle_free(cfg.graph):
        info["star_criterion"] = star_criterion(cfg.graph, c.base, cfg.cap)
    if cfg.fmt == "json":
        return _dump(info)
    out = []
    for key, val in info.items():
        if isinstance(val, bool):
            val = _flag(val)
        elif key == "form":
            val = f"s={val['s']} t=" + ",".join(map(str, val["ts"]))
        elif val is None:
            val = "none"
        out.append(f"{key}: {val}")
    return "\n".join(out) + "\n"


def cmd_matsumoto(cfg: RunConfig) -> str:
    mg = enumerate_matsumoto(cfg.graph, cfg.word, cfg.cap)
    if cfg.fmt == "json":
        return _dump(matsumoto_to_dict(mg))
    if cfg.fmt == "dot":
        return matsumoto_to_dot(mg)
    kinds = [k for _, _, k, _ in mg.edges]
    out = [
        f"reduced expressions: {len(mg)}",
        f"braid edges: {kinds.count('braid')}",
        f"commutation edges: {kinds.count('commutation')}",
        "braid classes:",
    ]
    out += ["  " + " ".join(word_str(m) for m in sorted(cls)) for cls in mg.braid_classes()]
    out.append("commutation classes:")
    out += ["  " + " ".join(word_str(m) for m in sorted(cls)) for cls in mg.commutation_classes()]
    return "\n".join(out) + "\n"


def cmd_string(cfg: RunConfig) -> str:
    w = type_a_string(cfg.spec, cfg.graph.n if cfg.graph is not None else None)
    if cfg.fmt == "json":
        return _dump({"l": cfg.spec.l, "k": cfg.spec.k, "m": cfg.spec.m, "eps": cfg.spec.eps, "word": list(w)})
    return word_str(w) + "\n"


def cmd_theta(cfg: RunConfig) -> str:
    c = enumerate_braid_class(cfg.graph, cfg.word, cfg.cap)
    bg = braid_graph(c)
    theta = theta_classes(bg) if bg.edges else []
    try:
        dim = isometric_dimension(bg)
    except NotPartialCube:
        dim = None
    if cfg.fmt == "json":
        return _dump({
            "theta_classes": [[[word_str(u), word_str(v)] for u, v in cls] for cls in theta],
            "isometric_dimension": dim,
            "rank": rank(c),
        })
    out = [f"theta classes: {len(theta)}"]
    for k, cls in enumerate(theta, 1):
        out.append(f"  {k}: " + ", ".join(f"{word_str(u)}-{word_str(v)}" for u, v in cls))
    out.append(f"isometric dimension: {'not a partial cube' if dim is None else dim}")
    out.append(f"rank: {rank(c)}")
    return "\n".join(out) + "\n"


def cmd_median(cfg: RunConfig) -> str:
    c = enumerate_braid_class(cfg.graph, cfg.word, cfg.cap)
    result = is_median_graph(braid_graph(c))
    if cfg.fmt == "json":
        return _dump({"median": result, "vertices": len(c)})
    return f"median: {_flag(result)}\n"


COMMANDS = {
    "class": cmd_class,
    "factorize": cmd_factorize,
    "embed": cmd_embed,
    "fibonacci": cmd_fibonacci,
    "matsumoto": cmd_matsumoto,
    "string": cmd_string,
    "theta": cmd_theta,
    "median": cmd_median,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="family:<F>:<n> (F in A, D, A~, D~) or a graph file")
    common.add_argument("--word", help='generator indices, e.g. "2 3 2 1 4 3 4"')
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum class size")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--unchecked", action="store_true", help="embed even if the graph has a three-cycle")
    common.add_argument("--seed-order", choices=("lex", "bfs"), default="lex", help="member listing order")

    parser = argparse.ArgumentParser(prog="braidgraphs", description="Braid classes of simply-laced Coxeter systems.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "class": "enumerate a braid class",
        "factorize": "link factorization",
        "embed": "hypercube labels and isometry check",
        "fibonacci": "Fibonacci link checks",
        "matsumoto": "all reduced expressions with move types",
        "string": "type-A string word",
        "theta": "Djokovic-Winkler classes of the braid graph",
        "median": "median-graph test of the braid graph",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        if name == "string":
            p.add_argument("--l", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--eps", choices=("+", "-", "0"), default="+")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        stdout.write(COMMANDS[cfg.command](cfg))
    except NotReduced as exc:
        stderr.write(f"NotReduced: {exc}\n")
        return EXIT_NOT_REDUCED
    except CapExceeded as exc:
        stderr.write(f"CapExceeded: {exc}\n")
        return EXIT_CAP
    except NotTriangleFree as exc:
        stderr.write(f"NotTriangleFree: {exc}\n")
        return EXIT_TRIANGLE
    except (BraidError, ValueError, KeyError) as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_ERROR
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))
