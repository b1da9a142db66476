"""Command line front end.

Subcommands map onto the library layers: analyze-perm and
analyze-table for single groups (with an optional table-versus-classes
cross-examination), an-rank for alternating-group rank tables, screen
for the classical family scans, charpoly for matrix-side class bounds.

Exit codes: 0 success, 2 bad input or failed cross-check, 3 a result
that could not be certified (incomplete screen, element not found),
4 a resource guard tripped.  Output is byte-deterministic for fixed
arguments and seed; progress notes go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .altcount import frobenius_rank, prop8_lower_bound
from .chartab import brauer_crosscheck, char_report, parse_table
from .classtheory import analyze, report_to_obj
from .errors import GalorbError, InputError, ResourceLimitError, UncertifiedError
from .matgroup import (
    class_lower_bound, coprime_power_charpoly_count, element_order,
    parse_matrix_group_file, random_element_search, singer_element,
)
from .permgroup import conjugacy_classes, parse_generators
from .screening import FAMILIES, exception_set


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- analyze-perm -------------------------------------------------------


def _cmd_analyze_perm(args) -> tuple[str, int]:
    spec = parse_generators(_read(args.file))
    _note(f"degree {spec.degree}, {len(spec.generators)} generators")
    kwargs = {"seed": args.seed}
    if args.max_order is not None:
        kwargs["max_order"] = args.max_order
    cs = conjugacy_classes(spec, **kwargs)
    rep = analyze(cs)
    if args.format == "json":
        return _json(report_to_obj(rep, labels=cs.labels)), 0
    lines = [
        f"group order      {rep.group_order}",
        f"classes          {rep.num_classes}",
        f"rational classes {rep.n_Q}",
        f"real classes     {rep.n_R}",
        f"central rank     {rep.rank}",
        f"longest family   {rep.f}",
        f"a-quantities     a1 = {rep.a1}, a2 = {rep.a2}",
        f"cut property     {'yes' if rep.is_cut else 'no'}",
    ]
    fams = []
    for fam in rep.families:
        fams.append("{" + ", ".join(cs.labels[c] for c in fam) + "}")
    lines.append("families         " + " ".join(fams))
    return "\n".join(lines) + "\n", 0


# -- analyze-table ------------------------------------------------------


def _cmd_analyze_table(args) -> tuple[str, int]:
    table = parse_table(_read(args.file))
    rep = char_report(table)
    code = 0
    cross = None
    if args.gens:
        spec = parse_generators(_read(args.gens))
        kwargs = {"seed": args.seed}
        if args.max_order is not None:
            kwargs["max_order"] = args.max_order
        _note("computing conjugacy classes for the cross-check")
        cs = conjugacy_classes(spec, **kwargs)
        cross = brauer_crosscheck(table, cs)
        if not cross.passed:
            code = 2
    if args.format == "json":
        obj = {
            "name": table.name,
            "order": table.group_order,
            "classes": table.num_classes,
            "real_rows": rep.h_R,
            "rank": rep.rank_eq1,
            "max_family": rep.f_table,
            "b1": rep.b1,
            "b2": rep.b2,
            "cut_by_fields": rep.cut_by_fields,
        }
        if cross is not None:
            obj["crosscheck"] = {
                "passed": cross.passed,
                "checks": [{"name": c.name, "passed": c.passed,
                            "detail": c.detail} for c in cross.checks],
            }
        return _json(obj), code
    lines = [
        f"table            {table.name}",
        f"group order      {table.group_order}",
        f"classes          {table.num_classes}",
        f"real rows        {rep.h_R}",
        f"central rank     {rep.rank_eq1}",
        f"longest family   {rep.f_table}",
        f"b-quantities     b1 = {rep.b1}, b2 = {rep.b2}",
        f"cut by fields    {'yes' if rep.cut_by_fields else 'no'}",
    ]
    if cross is not None:
        lines.append(f"cross-check      {'PASS' if cross.passed else 'FAIL'}")
        for c in cross.checks:
            lines.append(f"  {c.name:16s} {'ok' if c.passed else 'MISMATCH'}: {c.detail}")
    return "\n".join(lines) + "\n", code


# -- an-rank ------------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
    else:
        lo = hi = text
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise InputError(f"bad range {text!r}; use N or A..B") from None
    if a > b:
        raise InputError(f"empty range {text!r}")
    return a, b


def _cmd_an_rank(args) -> tuple[str, int]:
    lo, hi = _parse_range(args.range)
    if lo < 2:
        raise InputError("alternating rank needs n >= 2")
    rows = []
    for n in range(lo, hi + 1):
        rank = frobenius_rank(n)
        entry = {"n": n, "rank": rank}
        if n >= 26:
            b = prop8_lower_bound(n)
            entry["injection"] = {
                "p": b.p, "k": b.k, "m": b.m, "count": b.count,
                "feasible": b.feasible, "diagnostic": b.diagnostic,
            }
        rows.append(entry)
    if args.format == "json":
        return _json({"rows": rows}), 0
    lines = ["    n  rank  injection"]
    for e in rows:
        inj = ""
        if "injection" in e:
            b = e["injection"]
            if b["feasible"]:
                inj = f"count {b['count']} at (p,k,m) = ({b['p']},{b['k']},{b['m']})"
            else:
                inj = f"infeasible: {b['diagnostic']}"
        lines.append(f"{e['n']:5d} {e['rank']:5d}  {inj}")
    return "\n".join(lines) + "\n", 0


# -- screen -------------------------------------------------------------


def _screen_obj(res) -> dict:
    by_pair = {(r.n, r.q): r for r in res.rows}
    return {
        "family": res.tag,
        "n_max": res.n_max,
        "q_max": res.q_max,
        "exceptions": [
            {"n": n, "q": q, "order": by_pair[(n, q)].order,
             "phi": by_pair[(n, q)].phi,
             "threshold": by_pair[(n, q)].threshold}
            for n, q in sorted(res.exceptions)],
        "excluded": [{"n": n, "q": q, "reason": why}
                     for n, q, why in res.excluded],
        "certificate": {
            "q_boundary_ok": all(r.ok for r in res.certificate.q_rows),
            "n_near_ok": all(r.ok for r in res.certificate.n_rows),
            "n_tail_ok": res.certificate.n_tail_ok,
            "n_tail_range": list(res.certificate.n_tail_range),
            "asymptotic_ok": res.certificate.asymptotic_ok,
        },
        "certified": res.certified,
    }


def _cmd_screen(args) -> tuple[str, int]:
    if args.family == "all":
        tags = list(FAMILIES)
    elif args.family in FAMILIES:
        tags = [args.family]
    else:
        raise InputError(
            f"unknown family {args.family!r}; choose from "
            f"{', '.join(sorted(FAMILIES))} or 'all'")
    n_max, q_max = args.box
    results = []
    for tag in tags:
        _note(f"screening {tag} over n <= {n_max}, q <= {q_max}")
        results.append(exception_set(tag, n_max=n_max, q_max=q_max))
    all_certified = all(r.certified for r in results)
    code = 0 if all_certified else 3
    if args.format == "json":
        return _json({"results": [_screen_obj(r) for r in results],
                      "certified": all_certified}), code
    lines = []
    for res in results:
        lines.append(f"family {res.tag} (n <= {res.n_max}, q <= {res.q_max})")
        for item in _screen_obj(res)["exceptions"]:
            lines.append(
                f"  exception (n, q) = ({item['n']}, {item['q']}): torus order "
                f"{item['order']}, phi {item['phi']} <= {item['threshold']}")
        for n, q, why in res.excluded:
            lines.append(f"  excluded  (n, q) = ({n}, {q}): {why}")
        c = res.certificate
        lines.append(
            f"  certificate: q-boundary {'ok' if all(r.ok for r in c.q_rows) else 'FAIL'}, "
            f"n-near {'ok' if all(r.ok for r in c.n_rows) else 'FAIL'}, "
            f"n-tail to {c.n_tail_range[1]} {'ok' if c.n_tail_ok else 'FAIL'}, "
            f"beyond {'ok' if c.asymptotic_ok else 'FAIL'}")
        lines.append(f"  certified: {'yes' if res.certified else 'NO'}")
    if not all_certified:
        lines.append("result is NOT certified complete; enlarge the box")
    return "\n".join(lines) + "\n", code


# -- charpoly -----------------------------------------------------------


def _charpoly_report(g, args) -> tuple[str, int]:
    kwargs = {}
    if args.max_order is not None:
        kwargs["bound"] = args.max_order
    order = element_order(g, **kwargs)
    count_kwargs = {}
    if args.max_order is not None:
        count_kwargs["max_order"] = args.max_order
    count = coprime_power_charpoly_count(g, **count_kwargs)
    bound, verdict = class_lower_bound(count, args.center)
    obj = {
        "dimension": g.n,
        "field": g.field.q,
        "order": order,
        "distinct_charpolys": count,
        "center": args.center,
        "class_bound": bound,
        "at_least_five": verdict,
    }
    if args.format == "json":
        return _json(obj), 0
    lines = [
        f"dimension        {g.n}",
        f"field            GF({g.field.q})",
        f"element order    {order}",
        f"charpoly count   {count}",
        f"class bound      {bound} (center {args.center})",
        f"five or more     {'yes' if verdict else 'no'}",
    ]
    return "\n".join(lines) + "\n", 0


def _cmd_charpoly(args) -> tuple[str, int]:
    if args.action == "singer":
        g = singer_element(args.n, args.q)
        return _charpoly_report(g, args)
    if args.action == "file":
        if args.target is None:
            raise InputError("charpoly file needs --target ORDER")
        _, gens = parse_matrix_group_file(_read(args.file))
        search_kwargs = {"seed": args.seed}
        if args.max_order is not None:
            search_kwargs["bound"] = args.max_order
        g = random_element_search(gens, args.target, **search_kwargs)
        if g is None:
            raise UncertifiedError(
                f"no element of order {args.target} found "
                f"(seed {args.seed}); try another seed or more attempts")
        return _charpoly_report(g, args)
    # action == "bound"
    bound, verdict = class_lower_bound(args.count, args.center)
    obj = {"count": args.count, "center": args.center,
           "class_bound": bound, "at_least_five": verdict}
    if args.format == "json":
        return _json(obj), 0
    return (f"class bound      {bound} (count {args.count}, center {args.center})\n"
            f"five or more     {'yes' if verdict else 'no'}\n"), 0


# -- parser -------------------------------------------------------------


def _box(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected N,Q")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers N,Q") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galorb",
        description="Galois orbits on conjugacy classes and central unit ranks")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write output here")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-order", type=int, default=None,
                        help="resource guard override")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-perm", parents=[common],
                       help="class-side analysis of a permutation group")
    p.add_argument("file", help="generator file")
    p.set_defaults(fn=_cmd_analyze_perm)

    p = sub.add_parser("analyze-table", parents=[common],
                       help="row-side analysis of a character table")
    p.add_argument("file", help="table JSON file")
    p.add_argument("--gens", metavar="FILE",
                   help="generator file for a table-versus-classes cross-check")
    p.set_defaults(fn=_cmd_analyze_table)

    p = sub.add_parser("an-rank", parents=[common],
                       help="alternating group ranks by partition count")
    p.add_argument("range", help="N or A..B")
    p.set_defaults(fn=_cmd_an_rank)

    p = sub.add_parser("screen", parents=[common],
                       help="torus-totient screening of classical families")
    p.add_argument("family", help="family tag or 'all'")
    p.add_argument("--box", type=_box, default=(40, 64), metavar="N,Q",
                   help="scan box, default 40,64")
    p.set_defaults(fn=_cmd_screen)

    p = sub.add_parser("charpoly", parents=[common],
                       help="characteristic polynomial class bounds")
    psub = p.add_subparsers(dest="action", required=True)
    ps = psub.add_parser("singer", parents=[common],
                         help="Singer element of GL(n, q)")
    ps.add_argument("n", type=int)
    ps.add_argument("q", type=int)
    ps.add_argument("--center", type=int, default=1)
    ps.set_defaults(fn=_cmd_charpoly, action="singer")
    pf = psub.add_parser("file", parents=[common],
                         help="search a generated matrix group")
    pf.add_argument("file")
    pf.add_argument("--target", type=int, default=None)
    pf.add_argument("--center", type=int, default=1)
    pf.set_defaults(fn=_cmd_charpoly, action="file")
    pb = psub.add_parser("bound", parents=[common],
                         help="bare class bound from a count")
    pb.add_argument("count", type=int)
    pb.add_argument("center", type=int)
    pb.set_defaults(fn=_cmd_charpoly, action="bound")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UncertifiedError as exc:
        print(f"uncertified: {exc}", file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    except GalorbError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}",
                  file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
