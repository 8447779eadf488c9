"""Command line front end.

Subcommands: ``check``, ``trace``, ``tables``, ``laws``, ``count`` and
``parse``.  Output is plain text by default; ``--format json`` emits
machine-readable objects with stable keys, and ``--format dot`` renders a
reduction as a two-row directed graph.  Exit codes: 0 when everything
checked out valid, 1 when some syllogism is invalid, 2 on parse or usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import (
    UnsupportedN,
    count_valid_nterm,
    enumerate_all,
    opposition_laws,
)
from .chains import ChainError, is_bullet
from .inference import (
    Assumption,
    Figure,
    Syllogism,
    Trace,
    Validity,
    Verdict,
    decide,
    normalize,
    premiss_chain,
)
from .notation import NotationError, parse_any, parse_corpus, render_block


def _load_inputs(args) -> list[tuple[str, Syllogism]]:
    if args.corpus:
        text = Path(args.corpus).read_text()
        return [(str(s), s) for s, _span in parse_corpus(text)]
    if args.notation is None:
        raise NotationError("nothing to parse: give a syllogism or --corpus FILE")
    return [(args.notation, parse_any(args.notation))]


def _verdict_phrase(verdict: Verdict) -> str:
    if verdict.validity is Validity.VALID_WITH_ASSUMPTION:
        return f"valid under: {verdict.assumption.phrase}"
    return verdict.validity.value


def _display_trace(s: Syllogism, verdict: Verdict) -> Trace:
    # invalid verdicts carry no trace; show the bare reduction instead
    return verdict.trace if verdict.trace is not None else normalize(premiss_chain(s))


def _check_json(label: str, verdict: Verdict) -> dict:
    return {
        "input": label,
        "verdict": verdict.validity.value,
        "assumption": verdict.assumption.term,
        "trace": verdict.trace.as_dict() if verdict.trace is not None else None,
    }


def _dot_chain_lines(tag: str, title: str, chain) -> list[str]:
    lines = [f"  subgraph cluster_{tag} {{", f'    label="{title}";']
    for i, node in enumerate(chain.nodes):
        if is_bullet(node):
            lines.append(f"    {tag}{i} [shape=point];")
        else:
            lines.append(f'    {tag}{i} [label="{node}"];')
    for i, arrow in enumerate(chain.arrows):
        if arrow.value == "->":
            lines.append(f"    {tag}{i} -> {tag}{i + 1};")
        else:
            lines.append(f"    {tag}{i + 1} -> {tag}{i};")
    lines.append("  }")
    return lines


def trace_dot(trace: Trace, label: str) -> str:
    """The initial chain and its normal form as a two-row digraph."""
    lines = ["digraph reduction {", "  rankdir=LR;", f'  label="{label}";']
    lines += _dot_chain_lines("i", "premisses", trace.initial)
    lines += _dot_chain_lines("n", "normal form", trace.normal_form)
    lines.append("}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    items = _load_inputs(args)
    status = 0
    reports = []
    for label, s in items:
        verdict = decide(s)
        if not verdict.is_valid:
            status = 1
        reports.append((label, s, verdict))
    if args.format == "json":
        payload = [_check_json(label, v) for label, _s, v in reports]
        print(json.dumps(payload if args.corpus else payload[0], indent=2))
    elif args.format == "dot":
        for label, s, v in reports:
            print(trace_dot(_display_trace(s, v), f"{label}: {_verdict_phrase(v)}"))
    else:
        for label, _s, v in reports:
            print(f"{label}: {_verdict_phrase(v)}")
    return status


def cmd_trace(args) -> int:
    items = _load_inputs(args)
    status = 0
    payload = []
    for label, s in items:
        verdict = decide(s)
        if not verdict.is_valid:
            status = 1
        trace = _display_trace(s, verdict)
        if args.format == "json":
            entry = _check_json(label, verdict)
            entry["trace"] = trace.as_dict()
            payload.append(entry)
        elif args.format == "dot":
            print(trace_dot(trace, f"{label}: {_verdict_phrase(verdict)}"))
        else:
            print(f"{label}")
            if verdict.validity is Validity.VALID_WITH_ASSUMPTION:
                print(f"assumption: {verdict.assumption.phrase}")
            print(f"chain: {trace.initial}")
            for line in trace.step_lines():
                print(line)
            print(f"normal form: {trace.normal_form}")
            print(f"verdict: {_verdict_phrase(verdict)}")
    if args.format == "json":
        print(json.dumps(payload if args.corpus else payload[0], indent=2))
    return status


def _conditional_table(rows) -> list[tuple[dict[Figure, list[str]], str]]:
    """Conditionally valid moods grouped by assumption, per figure."""
    groups = []
    for assumption in (Assumption.SOME_S, Assumption.SOME_M, Assumption.SOME_P):
        per_figure: dict[Figure, list[str]] = {f: [] for f in Figure}
        for row in rows:
            s = row.syllogism
            if (
                s.assumption is assumption
                and row.calculus.validity is Validity.VALID_WITH_ASSUMPTION
            ):
                per_figure[s.figure].append(str(s.mood))
        if any(per_figure.values()):
            groups.append((per_figure, assumption.phrase))
    return groups


def cmd_tables(args) -> int:
    rows = enumerate_all()
    if args.format == "json":
        payload = [
            {
                "mood": str(r.syllogism.mood),
                "figure": r.syllogism.figure.value,
                "assumption": r.syllogism.assumption.term,
                "calculus": r.calculus.summary(),
                "oracle": r.oracle.summary(),
                "agree": r.agree,
            }
            for r in rows
        ]
        print(json.dumps(payload, indent=2))
        return 0

    bare = [r for r in rows if r.syllogism.assumption is Assumption.NONE]
    valid_by_figure: dict[Figure, list[str]] = {f: [] for f in Figure}
    for row in bare:
        if row.calculus.validity is Validity.VALID:
            valid_by_figure[row.syllogism.figure].append(str(row.syllogism.mood))

    def columns(per_figure: dict[Figure, list[str]], extra: str = "") -> list[str]:
        height = max(len(v) for v in per_figure.values())
        out = []
        for i in range(height):
            cells = [
                (per_figure[f][i] if i < len(per_figure[f]) else "").ljust(8)
                for f in Figure
            ]
            out.append(("".join(cells) + (extra if i == 0 else "")).rstrip())
        return out

    header = "".join(f"fig. {f.value}".ljust(8) for f in Figure)
    print("valid syllogisms")
    print(header.rstrip())
    for line in columns(valid_by_figure):
        print(line)
    print()
    print("valid under an assumption of existence")
    print(header + "assumption")
    for per_figure, phrase in _conditional_table(rows):
        for line in columns(per_figure, phrase):
            print(line)
    print()
    agreements = sum(1 for r in rows if r.agree)
    print(f"calculus/oracle agreement: {agreements}/{len(rows)} rows")
    return 0 if agreements == len(rows) else 1


def cmd_laws(args) -> int:
    results = opposition_laws()
    derivations = [r for r in results if r.expected is not None]
    stuck = [r for r in results if r.expected is None]
    if args.format == "json":
        payload = [
            {
                "name": r.name,
                "chain": str(r.chain),
                "expected": str(r.expected) if r.expected is not None else None,
                "normal_form": str(r.trace.normal_form),
                "ok": r.ok,
            }
            for r in results
        ]
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            mark = "ok  " if r.ok else "FAIL"
            goal = str(r.expected) if r.expected is not None else "does not reduce"
            print(f"{mark} {r.name}: {r.chain} |= {goal}")
        print(
            f"derived {sum(r.ok for r in derivations)}/{len(derivations)}; "
            f"non-reducing {sum(r.ok for r in stuck)}/{len(stuck)}"
        )
    return 0 if all(r.ok for r in results) else 1


def cmd_count(args) -> int:
    count = count_valid_nterm(args.n)
    formula = 3 * args.n * args.n - args.n
    verdict = "match" if count == formula else "MISMATCH"
    if args.format == "json":
        print(
            json.dumps(
                {"n": args.n, "count": count, "formula": formula, "match": count == formula},
                indent=2,
            )
        )
    else:
        print(f"n={args.n}: {count} valid syllogisms; 3n^2-n = {formula} ({verdict})")
    return 0


def cmd_parse(args) -> int:
    items = _load_inputs(args)
    if args.format == "json":
        payload = [
            {
                "input": label,
                "mood": str(s.mood),
                "figure": s.figure.value,
                "assumption": s.assumption.term,
                "block": render_block(s),
            }
            for label, s in items
        ]
        print(json.dumps(payload if args.corpus else payload[0], indent=2))
    else:
        for _label, s in items:
            print(f"{s} = {render_block(s)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syllogist",
        description="Decide categorical syllogisms by chain reduction, "
        "cross-checked against exhaustive region models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, notation: bool, formats: tuple[str, ...]):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument(
            "--format", choices=formats, default="text", help="output format"
        )
        if notation:
            p.add_argument(
                "notation",
                nargs="?",
                help="compact (EIO-2, AAI-3 +M) or block (All M is P; ...) notation",
            )
            p.add_argument("--corpus", metavar="FILE", help="check every block in FILE")
        return p

    add("check", cmd_check, "decide a syllogism", True, ("text", "json", "dot"))
    add("trace", cmd_trace, "show the reduction trace", True, ("text", "json", "dot"))
    add("tables", cmd_tables, "enumerate all moods and figures", False, ("text", "json"))
    add("laws", cmd_laws, "run the square-of-opposition laws", False, ("text", "json"))
    count_p = add("count", cmd_count, "count valid n-term syllogisms", False, ("text", "json"))
    count_p.add_argument("n", type=int, help="number of terms (3 or 4)")
    add("parse", cmd_parse, "echo the canonical forms", True, ("text", "json"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotationError as err:
        where = f" (chars {err.span.start}..{err.span.end})" if err.span else ""
        print(f"error: {err}{where}", file=sys.stderr)
        return 2
    except (UnsupportedN, ChainError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
