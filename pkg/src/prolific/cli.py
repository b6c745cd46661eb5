"""Command line interface: ``prolific <command> ...`` or ``python -m prolific``.

Exit codes: 0 success, 1 bad input, 2 cap exceeded or a failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import automaton as am
from .compositions import (
    Composition,
    CompositionError,
    SupportLimitError,
    count_occurrences,
    parse_composition,
    supports,
)
from .minimal import (
    RoundCapExceeded,
    DEFAULT_ROUND_CAP,
    m_pattern,
    minimal_prolific,
    minimal_prolific_oracle,
    prune_automaton,
)
from .prolificity import has_ones_at_ends, is_prolific, is_prolific_oracle, suffix_trace
from .selftest import SUITES, run_suites

OK, INPUT_ERROR, CAP_EXCEEDED = 0, 1, 2


class CommandFailed(Exception):
    def __init__(self, status, message, payload=None):
        super().__init__(message)
        self.status = status
        self.payload = payload


def _word(parts) -> str:
    return str(Composition(parts)) if parts else "ε"


def _composition(text, what):
    try:
        return parse_composition(text)
    except CompositionError as exc:
        raise CommandFailed(INPUT_ERROR, f"bad {what}: {exc}") from None


def _trace_table(u, trace) -> str:
    k = len(u)
    rows = [("i", "v_i", "u-prefix", "u-suffix")]
    for e in trace:
        rows.append((str(e.index), str(e.part), _word(u[: e.prefix_len]), _word(u[k - e.suffix_len:])))
    widths = [max(len(r[c]) for r in rows) for c in range(4)]
    lines = [" | ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_check(args):
    u = _composition(args.pattern, "pattern")
    v = _composition(args.text, "text")
    verdict = is_prolific(u, v)
    payload = {"pattern": list(u), "text": list(v), "prolific": verdict}
    lines = [f"prolific: {str(verdict).lower()}"]
    trace = None
    if args.trace:
        if has_ones_at_ends(u):
            trace = suffix_trace(u, v)
            payload["trace"] = [e.as_row() for e in trace]
            lines.append(_trace_table(u, trace))
        else:
            payload["trace"] = None
            lines.append(f"no trace: {u} does not start and end with 1, so nothing is prolific for it")
    if args.oracle:
        oracle = is_prolific_oracle(u, v)
        payload["oracle"] = oracle
        if oracle != verdict:
            raise CommandFailed(CAP_EXCEEDED, f"oracle disagrees: definition says {oracle}", payload)
        lines.append("oracle: agrees")
    return payload, "\n".join(lines)


def cmd_count(args):
    u = _composition(args.pattern, "pattern")
    v = _composition(args.text, "text")
    payload = {"pattern": list(u), "text": list(v), "occurrences": count_occurrences(u, v)}
    lines = [f"occurrences: {payload['occurrences']}"]
    if args.supports:
        try:
            n = len(supports(u, v, limit=args.support_limit))
        except SupportLimitError as exc:
            raise CommandFailed(INPUT_ERROR, str(exc)) from None
        payload["supports"] = n
        lines.append(f"supports: {n}")
    return payload, "\n".join(lines)


def _graph_text(g) -> str:
    if g.initial is None:
        return "empty search graph (no accepting path)"
    lines = [f"initial: {g.initial}"]
    for src, label, dst in sorted(g.edge_list()):
        mark = "  (accepting)" if dst in g.accepting else ""
        lines.append(f"{src} --{label}--> {dst}{mark}")
    return "\n".join(lines)


def _automaton_text(a) -> str:
    lines = [f"pattern: {a.pattern}", "alphabet: " + " ".join(map(str, a.alphabet))]
    if a.empty_language:
        lines.append("empty language: the pattern does not start and end with 1")
    lines.append(f"states: {len(a.states)}, initial {a.initial}, accepting {list(a.accepting)}")
    for s in sorted(a.states):
        cells = [f"{i}->{a.transitions[s, n]}" for n, i in enumerate(a.alphabet)]
        lines.append(f"  {s}: " + ", ".join(cells))
    return "\n".join(lines)


def cmd_automaton(args):
    u = _composition(args.pattern, "pattern")
    a = am.build_automaton(u)
    if args.pruned:
        g = prune_automaton(a)
        return g.to_dict(), _graph_text(g)
    text = _automaton_text(a)
    if args.dot:
        dot = am.to_dot(a)
        if args.dot == "-":
            text = dot.rstrip("\n")
        else:
            try:
                with open(args.dot, "w") as fh:
                    fh.write(dot)
            except OSError as exc:
                raise CommandFailed(INPUT_ERROR, f"cannot write {args.dot}: {exc.strerror}") from None
            text += f"\nDOT written to {args.dot}"
    return am.to_dict(a), text


def cmd_std(args):
    u = _composition(args.pattern, "pattern")
    w = _composition(args.word, "word")
    s = am.standardize(u, w)
    return {"pattern": list(u), "word": list(w), "standardized": list(s)}, ",".join(map(str, s))


def cmd_intervals(args):
    u = _composition(args.pattern, "pattern")
    intervals = am.critical_intervals(u)
    return {"pattern": list(u), "intervals": [i.as_pair() for i in intervals]}, " ".join(map(str, intervals))


def cmd_minimal(args):
    u = _composition(args.pattern, "pattern")
    try:
        result = minimal_prolific(u, round_cap=args.round_cap)
    except RoundCapExceeded as exc:
        raise CommandFailed(
            CAP_EXCEEDED, str(exc), {"pattern": list(u), "partial": [list(e) for e in exc.partial]}
        ) from None
    payload = result.as_dict()
    text = "{" + ", ".join(map(str, result.elements)) + "}"
    if args.verify is not None:
        brute = minimal_prolific_oracle(u, args.verify)
        expected = [e for e in result.elements if e.size <= args.verify]
        agree = brute == expected
        payload["verify"] = {"max_size": args.verify, "agrees": agree}
        if not agree:
            raise CommandFailed(
                CAP_EXCEEDED,
                f"brute force up to size {args.verify} found {{{', '.join(map(str, brute))}}}",
                payload,
            )
        text += f"\nverified against brute force up to size {args.verify}"
    return payload, text


def cmd_experiment_mk(args):
    if not 0 <= args.max_k <= 12:
        raise CommandFailed(INPUT_ERROR, "max_k must lie in 0..12")
    rows = []
    for k in range(args.max_k + 1):
        start = time.perf_counter()
        result = minimal_prolific(m_pattern(k))
        elapsed = time.perf_counter() - start
        flagged = k <= 8 and len(result) != k + 1
        rows.append(
            {
                "k": k,
                "pattern": list(m_pattern(k)),
                "count": len(result),
                "seconds": round(elapsed, 6),
                "flagged": flagged,
                "minimal": [list(e) for e in result.elements],
            }
        )
    lines = [f"{'k':>3} {'count':>6} {'seconds':>9}"]
    for r in rows:
        flag = "  <-- expected k+1" if r["flagged"] else ""
        lines.append(f"{r['k']:>3} {r['count']:>6} {r['seconds']:>9.4f}{flag}")
    return {"rows": rows}, "\n".join(lines)


def cmd_selftest(args):
    results = run_suites(args.pattern_max, args.text_max, args.suite)
    payload = {
        "pattern_max": args.pattern_max,
        "text_max": args.text_max,
        "suites": [r.as_dict() for r in results],
    }
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name} ({r.checked} cases)")
        else:
            u, v, detail = r.counterexample
            lines.append(f"FAIL {r.name}: u={u} v={v}: {detail}")
    text = "\n".join(lines)
    if not all(r.passed for r in results):
        raise CommandFailed(CAP_EXCEEDED, text, payload)
    return payload, text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no output, exit code only")

    parser = argparse.ArgumentParser(prog="prolific", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="is TEXT prolific for PATTERN")
    p.add_argument("pattern")
    p.add_argument("text")
    p.add_argument("--trace", action="store_true", help="print the prefix/suffix table")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", parents=[common], help="count occurrences of PATTERN in TEXT")
    p.add_argument("pattern")
    p.add_argument("text")
    p.add_argument("--supports", action="store_true", help="also count supports")
    p.add_argument("--support-limit", type=int, default=20, help="max text parts for --supports")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("automaton", parents=[common], help="the automaton for PATTERN")
    p.add_argument("pattern")
    p.add_argument("--dot", metavar="PATH", help="write Graphviz source to PATH ('-' for stdout)")
    p.add_argument("--pruned", action="store_true", help="show the pruned search graph instead")
    p.set_defaults(func=cmd_automaton)

    p = sub.add_parser("std", parents=[common], help="standardise WORD relative to PATTERN")
    p.add_argument("pattern")
    p.add_argument("word")
    p.set_defaults(func=cmd_std)

    p = sub.add_parser("intervals", parents=[common], help="critical intervals of PATTERN")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("minimal", parents=[common], help="minimal prolific compositions of PATTERN")
    p.add_argument("pattern")
    p.add_argument("--verify", type=int, metavar="N", help="compare with brute force up to size N")
    p.add_argument("--round-cap", type=int, default=DEFAULT_ROUND_CAP)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("experiment", parents=[common], help="experiments")
    exp = p.add_subparsers(dest="experiment", required=True)
    q = exp.add_parser("mk", parents=[common], help="minimal set sizes for 122 1^k 221")
    q.add_argument("max_k", type=int)
    q.set_defaults(func=cmd_experiment_mk)

    p = sub.add_parser("selftest", parents=[common], help="bounded exhaustive oracle checks")
    p.add_argument("--pattern-max", type=int, default=6)
    p.add_argument("--text-max", type=int, default=9)
    p.add_argument("--suite", action="append", choices=sorted(SUITES), help="run only this suite (repeatable)")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)
    try:
        payload, text = args.func(args)
        status, message = OK, None
    except CommandFailed as exc:
        status, message, payload, text = exc.status, str(exc), exc.payload, None
    except CompositionError as exc:
        status, message, payload, text = INPUT_ERROR, str(exc), None, None

    if quiet:
        return status
    if as_json:
        body = {"status": ["ok", "input-error", "cap-exceeded"][status]}
        if payload is not None:
            body["result"] = payload
        if message is not None:
            body["error"] = message
        print(json.dumps(body))
    elif status == OK:
        print(text)
    else:
        print(message, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
