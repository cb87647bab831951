"""Batch command-line front end.

Exit codes: 0 success, 2 invalid input, 3 budget or size cap exceeded,
4 undetermined degree search.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .arrows import (
    DEFAULT_BUDGET,
    ArrowQuery,
    arrow_check,
    build_gadget_Y,
    empirical_degree,
    extension_type_coloring,
    monotone_patterns,
    random_proper_structure,
    reorder_report,
    simultaneous_arrow_result,
)
from .cache import ResultCache, cache_key
from .canonical import certificate
from .classes import KINDS, ClassSpec, chromatic_number, enumerate_members, is_member
from .codecs import FORMATS, codec_read, codec_write, ocg_to_dict, sniff_format
from .degrees import (
    as_graph,
    as_ordered,
    aut_degree,
    elementary_report,
    enumerate_extensions_monotone,
    enumerate_extensions_ordered,
    report_tsv,
    sigma,
    tau,
)
from .errors import BudgetExceeded, InvalidInput, SizeCapExceeded
from .structures import OrderedColoredGraph

EXIT_OK, EXIT_INVALID, EXIT_LIMIT, EXIT_UNDETERMINED = 0, 2, 3, 4

COMMANDS = (
    "sigma", "tau", "autdeg", "chrom", "member", "enum", "extensions",
    "arrow", "sim-arrow", "gadget", "alpha", "degree-search",
    "report-elementary", "check-reorder",
)


# input handling -------------------------------------------------------------


def _read_one(path: str, fmt: str | None, stdin=None):
    if path == "-":
        payload, name = (stdin or sys.stdin).read(), ""
    else:
        try:
            payload, name = Path(path).read_text(), path
        except OSError as exc:
            raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    return codec_read(fmt or sniff_format(payload, name), payload)


def _named_inputs(args) -> dict:
    """Parse ``name=PATH,name=PATH``; repeated names collect into lists."""
    if not args.input:
        raise InvalidInput("--input is required")
    out = {}
    for part in args.input.split(","):
        name, sep, path = part.partition("=")
        if not sep:
            raise InvalidInput(f"expected name=PATH in --input, got {part!r}")
        out.setdefault(name.strip(), []).append(_read_one(path.strip(), args.format))
    return out


def _single(args):
    if not args.input:
        raise InvalidInput("--input is required")
    return _read_one(args.input, args.format)


def _need(args, *names):
    for name in names:
        attr = "class_" if name == "class" else name.replace("-", "_")
        if getattr(args, attr) is None:
            raise InvalidInput(f"--{name} is required")


def _struct_key(x) -> str:
    return codec_write("ocg-json", x)


def _render_scalar(args, value) -> str:
    if args.output == "json":
        return json.dumps({"command": args.command, "value": value}, sort_keys=True) + "\n"
    if isinstance(value, bool):
        value = str(value).lower()
    return f"{value}\n"


def _fmt_structure(x) -> str:
    if isinstance(x, OrderedColoredGraph) and (x.coloring is not None or x.ordered):
        return codec_write("ocg-json", x)
    return codec_write("graph6", as_graph(x))


# commands -------------------------------------------------------------------


def cmd_sigma(args):
    _need(args, "n")
    x = as_ordered(_single(args))
    key = ("sigma", [certificate(x.graph)], {"n": args.n})
    return key, lambda: (_render_scalar(args, sigma(x, args.n)), EXIT_OK)


def cmd_tau(args):
    _need(args, "n")
    g = as_graph(_single(args))
    key = ("tau", [certificate(g)], {"n": args.n})
    return key, lambda: (_render_scalar(args, tau(g, args.n)), EXIT_OK)


def cmd_autdeg(args):
    g = as_graph(_single(args))
    return ("autdeg", [certificate(g)], {}), lambda: (_render_scalar(args, aut_degree(g)), EXIT_OK)


def cmd_chrom(args):
    g = as_graph(_single(args))
    return ("chrom", [certificate(g)], {}), lambda: (_render_scalar(args, chromatic_number(g)), EXIT_OK)


def _spec(args) -> ClassSpec:
    _need(args, "n", "class")
    return ClassSpec(args.class_, args.n)


def cmd_member(args):
    spec = _spec(args)
    x = _single(args)
    if spec.family == "unordered":
        ident = [certificate(as_graph(x))]
    else:
        ident = [_struct_key(x)]
    return ("member", ident, {"class": spec.kind, "n": spec.n}), lambda: (
        _render_scalar(args, is_member(x, spec)),
        EXIT_OK,
    )


def cmd_enum(args):
    spec = _spec(args)
    _need(args, "max-size")

    def run():
        items = list(enumerate_members(spec, args.max_size, jobs=args.jobs))
        if args.output == "json":
            recs = [ocg_to_dict(x) if spec.family != "unordered" else codec_write("graph6", x) for x in items]
            return json.dumps(recs) + "\n", EXIT_OK
        return "".join(_fmt_structure(x) + "\n" for x in items), EXIT_OK

    return ("enum", [], {"class": spec.kind, "n": spec.n, "max": args.max_size}), run


def _catalog(args, x):
    if args.mode == "monotone":
        return enumerate_extensions_monotone(as_graph(x), args.n)
    return enumerate_extensions_ordered(as_ordered(x), args.n)


def cmd_extensions(args):
    _need(args, "n")
    x = _single(args)

    def run():
        cat = _catalog(args, x)
        if args.output == "json":
            return json.dumps([ocg_to_dict(it) for it in cat]) + "\n", EXIT_OK
        lines = ["index\tcolors\tedges"]
        for i, it in enumerate(cat, 1):
            edges = " ".join(f"{a}-{b}" for a, b in it.graph.edges)
            lines.append(f"{i}\t{','.join(map(str, it.coloring))}\t{edges}")
        return "\n".join(lines) + "\n", EXIT_OK

    return ("extensions", [_struct_key(x)], {"n": args.n, "mode": args.mode}), run


def _arrow_output(args, res):
    if args.output == "json":
        rec = {
            "holds": res.holds,
            "colorings_examined": res.colorings_examined,
            "bad_coloring": None,
        }
        if res.bad_coloring is not None:
            rec["bad_coloring"] = [
                {"copy": i, "image": list(img), "color": c} for i, img, c in res.bad_coloring.as_table()
            ]
        return json.dumps(rec, sort_keys=True) + "\n"
    lines = ["holds" if res.holds else "fails"]
    if res.bad_coloring is not None:
        lines.append("copy\timage\tcolor")
        for i, img, c in res.bad_coloring.as_table():
            lines.append(f"{i}\t{' '.join(map(str, img))}\t{c}")
    return "\n".join(lines) + "\n"


def _one(inputs, name):
    if name not in inputs or len(inputs[name]) != 1:
        raise InvalidInput(f"--input needs exactly one {name}=PATH")
    return inputs[name][0]


def cmd_arrow(args):
    _need(args, "k")
    ins = _named_inputs(args)
    z, y, x = _one(ins, "z"), _one(ins, "y"), _one(ins, "x")
    q = ArrowQuery(z, y, x, args.k, args.t)
    key = ("arrow", [_struct_key(s) for s in (z, y, x)], {"k": args.k, "t": args.t, "budget": args.budget})
    return key, lambda: (_arrow_output(args, arrow_check(q, args.budget)), EXIT_OK)


def cmd_sim_arrow(args):
    _need(args, "k")
    ins = _named_inputs(args)
    z, y = _one(ins, "z"), _one(ins, "y")
    pats = ins.get("x", [])
    key = ("sim-arrow", [_struct_key(s) for s in [z, y, *pats]], {"k": args.k, "budget": args.budget})
    return key, lambda: (_arrow_output(args, simultaneous_arrow_result(z, y, pats, args.k, args.budget)), EXIT_OK)


def cmd_gadget(args):
    _need(args, "n")
    x = _single(args)
    src = as_graph(x) if args.mode == "monotone" else as_ordered(x)
    return ("gadget", [_struct_key(src)], {"n": args.n, "mode": args.mode}), lambda: (
        codec_write("ocg-json", build_gadget_Y(src, args.n, args.mode)) + "\n",
        EXIT_OK,
    )


def cmd_alpha(args):
    ins = _named_inputs(args)
    host, x = _one(ins, "t"), _one(ins, "x")
    if not isinstance(host, OrderedColoredGraph):
        raise InvalidInput("host t must be an ocg-json structure with colors")

    def run():
        alpha = extension_type_coloring(host, x, args.mode)
        if args.output == "json":
            rows = [{"copy": i, "image": list(img), "alpha": c} for i, img, c in alpha.as_table()]
            return json.dumps({"range": alpha.k, "coloring": rows}, sort_keys=True) + "\n", EXIT_OK
        lines = ["copy\timage\talpha"] + [f"{i}\t{' '.join(map(str, img))}\t{c}" for i, img, c in alpha.as_table()]
        return "\n".join(lines) + "\n", EXIT_OK

    return ("alpha", [_struct_key(host), _struct_key(x)], {"mode": args.mode}), run


def cmd_degree_search(args):
    spec = _spec(args)
    x = _single(args)
    if spec.family == "unordered":
        x = as_graph(x)
    elif spec.family == "ordered":
        x = as_ordered(x)
    host_cap = args.max_size if args.max_size is not None else (7 if spec.family == "unordered" else 5)

    def run():
        rep = empirical_degree(x, spec, args.k or 2, host_cap=host_cap, budget=args.budget)
        code = EXIT_OK if rep.status == "DETERMINED" else EXIT_UNDETERMINED
        rec = {
            "status": rep.status,
            "degree": rep.degree,
            "lower_bound": rep.lower_bound,
            "upper_within_caps": rep.upper_within_caps,
            "targets_without_host": [_fmt_structure(y) for y in rep.missing],
        }
        if args.output == "json":
            return json.dumps(rec, sort_keys=True) + "\n", code
        lines = [f"{k}\t{'n/a' if v is None else v}" for k, v in rec.items() if k != "targets_without_host"]
        lines += [f"missing\t{s}" for s in rec["targets_without_host"]]
        return "\n".join(lines) + "\n", code

    key = ("degree-search", [_struct_key(x)], {"class": spec.kind, "n": spec.n, "k": args.k, "host_cap": host_cap})
    return key, run


def cmd_report_elementary(args):
    _need(args, "n")
    max_m = args.max_m or args.n
    max_l = args.max_l or 2

    def run():
        rows = elementary_report(args.n, max_m, max_l)
        if args.output == "json":
            return json.dumps([r.as_dict() for r in rows], sort_keys=True) + "\n", EXIT_OK
        return report_tsv(rows), EXIT_OK

    return ("report-elementary", [], {"n": args.n, "m": max_m, "l": max_l}), run


def cmd_check_reorder(args):
    n = args.n or 3
    max_v = args.max_size or 8
    count = args.count

    def run():
        rng = np.random.default_rng(args.seed)
        pats = monotone_patterns(n)
        totals = {}
        for _ in range(count):
            z = random_proper_structure(rng, max_v, n)
            for k, v in reorder_report(z, pats).items():
                totals[k] = totals.get(k, 0) + int(v)
        if args.output == "json":
            return json.dumps({"checked": count, "passed": totals}, sort_keys=True) + "\n", EXIT_OK
        return "".join(f"{k}\t{v}/{count}\n" for k, v in totals.items()), EXIT_OK

    return ("check-reorder", [], {"n": n, "max": max_v, "count": count, "seed": args.seed}), run


HANDLERS = {
    "sigma": cmd_sigma,
    "tau": cmd_tau,
    "autdeg": cmd_autdeg,
    "chrom": cmd_chrom,
    "member": cmd_member,
    "enum": cmd_enum,
    "extensions": cmd_extensions,
    "arrow": cmd_arrow,
    "sim-arrow": cmd_sim_arrow,
    "gadget": cmd_gadget,
    "alpha": cmd_alpha,
    "degree-search": cmd_degree_search,
    "report-elementary": cmd_report_elementary,
    "check-reorder": cmd_check_reorder,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--input", help="PATH, '-' for stdin, or name=PATH,name=PATH")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--k", type=int)
    common.add_argument("--t", type=int, default=1)
    common.add_argument("--max-size", type=int)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--cache", metavar="DIR")
    common.add_argument("--output", choices=("tsv", "json"), default="tsv")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--class", dest="class_", choices=KINDS)
    common.add_argument("--mode", choices=("ordered_colored", "monotone"), default="ordered_colored")
    common.add_argument("--max-m", type=int)
    common.add_argument("--max-l", type=int)
    common.add_argument("--count", type=int, default=100)
    parser = argparse.ArgumentParser(prog="ramseydeg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        key, compute = HANDLERS[args.command](args)
        cache = ResultCache(args.cache) if args.cache else None
        ck = cache_key(*key) if cache else None
        hit = cache.get(ck) if cache else None
        if hit is not None:
            text, code = hit.value
        else:
            text, code = compute()
            if cache:
                cache.put(ck, [text, code])
    except (SizeCapExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_LIMIT
    except InvalidInput as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
