"""Command-line front end.

Subcommands: check, realize, realize-bounded, regularity, compare,
harness, antichain. Sequences are given as comma- or whitespace-separated
integers with optional power notation (``2^12`` means twelve 2s, mixing
is fine: ``3,2^4,1``), or one sequence per line via ``--file`` (``-`` for
stdin).

Exit codes: 0 success / order holds, 1 negative verdict, 2 usage or
parse error. The oracle size cap can be overridden with the
``DEGSEQ_ORACLE_CAP`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

from .errors import (
    CapExceededError,
    GoodPairNotFound,
    NotGraphicError,
    PlanNotApplicableError,
)
from .graphs import components, degree_sequence, sorted_edges, to_json_dict
from .harness import (
    GoodPairReport,
    StreamConfig,
    find_good_pair,
    generate_stream,
    mine_antichain,
    report_to_json,
)
from .rao import (
    DEFAULT_ORACLE_CAP,
    rao_leq_oracle,
    rao_leq_sufficient,
    rao_leq_via_components,
    witness_to_json,
)
from .realization import realize, realize_bounded
from .sequences import (
    IntegerSequence,
    RegularitySequence,
    erdos_gallai_check,
    erdos_gallai_sides,
    from_regularity,
    parse_sequence,
    sufficient_by_length,
    to_regularity,
)

_POWER = re.compile(r"^(-?\d+)\^(\d+)$")


def _expand_tokens(text: str) -> list[int]:
    entries: list[int] = []
    for token in text.replace(",", " ").split():
        match = _POWER.match(token)
        if match:
            entries.extend([int(match.group(1))] * int(match.group(2)))
            continue
        try:
            entries.append(int(token))
        except ValueError:
            raise ValueError(f"cannot parse token {token!r}") from None
    return entries


def _parse_cli_sequence(text: str, strip_zeros: bool) -> IntegerSequence:
    entries = _expand_tokens(text)
    if strip_zeros:
        entries = [e for e in entries if e != 0]
    return parse_sequence(entries)


def _read_lines(path: str) -> list[str]:
    data = sys.stdin.read() if path == "-" else open(path).read()
    return [line.strip() for line in data.splitlines() if line.strip()]


def _sequence_texts(args, needed: int) -> list[str]:
    if getattr(args, "file", None):
        lines = _read_lines(args.file)
        if needed and len(lines) < needed:
            raise ValueError(f"expected {needed} sequence line(s), got {len(lines)}")
        return lines if not needed else lines[:needed]
    if not args.sequence:
        raise ValueError("no sequence given (pass entries or --file)")
    if needed == 2:
        if len(args.sequence) != 2:
            raise ValueError("expected exactly two sequence arguments")
        return list(args.sequence)
    return [" ".join(args.sequence)]


def _oracle_cap() -> int:
    value = os.environ.get("DEGSEQ_ORACLE_CAP")
    return int(value) if value else DEFAULT_ORACLE_CAP


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


# ---------------------------------------------------------------------------
# check


def _verdict_json(seq: IntegerSequence, prop4: bool) -> dict:
    verdict = erdos_gallai_check(seq)
    out: dict = {"entries": list(seq.entries), "graphic": verdict.graphic}
    if not verdict.graphic:
        out["failing_index"] = verdict.failing_index
        if verdict.failing_index is not None:
            lhs, rhs = erdos_gallai_sides(seq, verdict.failing_index)
            out["lhs"] = lhs
            out["rhs"] = rhs
        else:
            out["reason"] = "odd degree sum"
    if prop4:
        out["sufficient_by_length"] = sufficient_by_length(seq)
    return out


def _verdict_lines(seq: IntegerSequence, prop4: bool) -> list[str]:
    verdict = erdos_gallai_check(seq)
    if verdict.graphic:
        lines = ["graphic"]
    elif verdict.failing_index is None:
        lines = ["not graphic (odd degree sum)"]
    else:
        lhs, rhs = erdos_gallai_sides(seq, verdict.failing_index)
        lines = [f"not graphic (k={verdict.failing_index}: {lhs} > {rhs})"]
    if prop4:
        bound = seq.max_degree ** 2
        if sufficient_by_length(seq):
            lines.append(f"sufficient-by-length: yes (n={seq.n} >= d1^2={bound})")
        elif seq.n < bound:
            lines.append(f"sufficient-by-length: no (n={seq.n} < d1^2={bound})")
        else:
            lines.append("sufficient-by-length: no (odd degree sum)")
    return lines


def cmd_check(args) -> int:
    try:
        texts = _sequence_texts(args, needed=0 if args.file else 1)
        sequences = [_parse_cli_sequence(t, args.strip_zeros) for t in texts]
    except ValueError as exc:
        _fail(str(exc))
        return 2
    status = 0
    for seq in sequences:
        if args.json:
            print(json.dumps(_verdict_json(seq, args.prop4)))
        else:
            for line in _verdict_lines(seq, args.prop4):
                print(line)
        if not erdos_gallai_check(seq).graphic:
            status = 1
    return status


# ---------------------------------------------------------------------------
# realize


def cmd_realize(args) -> int:
    try:
        text = _sequence_texts(args, needed=1)[0]
        seq = _parse_cli_sequence(text, args.strip_zeros)
    except ValueError as exc:
        _fail(str(exc))
        return 2
    bounded = getattr(args, "bounded", False) or args.command == "realize-bounded"
    try:
        graph = realize_bounded(seq) if bounded else realize(seq)
    except NotGraphicError as exc:
        _fail(str(exc))
        return 1
    sizes = [part.vertex_count for part in components(graph)]
    bound = 3 * seq.max_degree ** 2
    if args.json:
        payload = to_json_dict(graph)
        if bounded:
            payload["component_sizes"] = sizes
            payload["bound"] = bound
        print(json.dumps(payload, indent=2))
    else:
        print(f"p {graph.vertex_count}")
        for u, v in sorted_edges(graph):
            print(f"{u} {v}")
        if bounded:
            print(f"c components: {' '.join(str(s) for s in sizes)}")
            print(f"c bound: {bound}")
    return 0


# ---------------------------------------------------------------------------
# regularity


def cmd_regularity(args) -> int:
    try:
        if args.decode:
            text = _sequence_texts(args, needed=1)[0]
            descending = _expand_tokens(text)
            if any(c < 0 for c in descending):
                raise ValueError("counts must be nonnegative")
            counts = RegularitySequence(tuple(descending[::-1]))
            seq = from_regularity(counts)
            if args.json:
                print(json.dumps({"entries": list(seq.entries)}))
            else:
                print(str(seq))
            return 0
        text = _sequence_texts(args, needed=1)[0]
        seq = _parse_cli_sequence(text, args.strip_zeros)
        bound = args.bound if args.bound is not None else seq.max_degree
        counts = to_regularity(seq, bound)
    except ValueError as exc:
        _fail(str(exc))
        return 2
    if args.json:
        print(json.dumps({"bound": counts.bound,
                          "counts_descending": list(counts.descending)}))
    else:
        print(",".join(str(c) for c in counts.descending))
    return 0


# ---------------------------------------------------------------------------
# compare


def cmd_compare(args) -> int:
    try:
        texts = _sequence_texts(args, needed=2)
        d_small = _parse_cli_sequence(texts[0], args.strip_zeros)
        d_large = _parse_cli_sequence(texts[1], args.strip_zeros)
        bound = args.bound if args.bound is not None else max(
            d_small.max_degree, d_large.max_degree)
    except ValueError as exc:
        _fail(str(exc))
        return 2
    cap = _oracle_cap()
    witness = None
    method = None
    refuted = False
    try:
        if args.method in ("sufficient", "auto"):
            witness = rao_leq_sufficient(d_small, d_large, bound)
            method = "sufficient"
        if witness is None and args.method in ("components", "auto"):
            try:
                witness = rao_leq_via_components(d_small, d_large)
                method = "components"
            except CapExceededError:
                if args.method == "components":
                    raise
        if witness is None and args.method in ("oracle", "auto"):
            if d_large.n > cap:
                if args.method == "oracle":
                    raise CapExceededError(
                        f"oracle guard: {d_large.n} vertices exceeds cap {cap}")
            else:
                witness = rao_leq_oracle(d_small, d_large, max_vertices=cap)
                method = "oracle"
                refuted = witness is None
    except NotGraphicError as exc:
        _fail(str(exc))
        return 1
    except (CapExceededError, ValueError) as exc:
        _fail(str(exc))
        return 2

    if witness is not None:
        result = "holds"
    elif refuted:
        result = "does_not_hold"
    else:
        result = "inconclusive"
    if args.json:
        payload = {
            "result": result,
            "method": method if witness is not None or refuted else None,
            "witness": (witness_to_json(d_small, d_large, witness)
                        if witness is not None else None),
        }
        print(json.dumps(payload, indent=2))
    else:
        if result == "holds":
            print(f"holds ({method})")
        elif result == "does_not_hold":
            print("does not hold (oracle)")
        else:
            print("inconclusive")
    return 0 if result == "holds" else 1


# ---------------------------------------------------------------------------
# harness / antichain


def _summary_line(report: GoodPairReport) -> str:
    return (f"good pair i={report.i} j={report.j}"
            f" (method={report.method}, prefix={report.prefix_length_scanned}):"
            f" {report.seq_i} <= {report.seq_j}")


def cmd_harness(args) -> int:
    try:
        cfg = StreamConfig(bound=args.bound, max_length=args.max_length,
                           seed=args.seed, count=args.count,
                           generator=args.generator)
        stream = generate_stream(cfg)
    except ValueError as exc:
        _fail(str(exc))
        return 2
    start = time.perf_counter()
    try:
        report = find_good_pair(stream, cfg.bound, oracle_cap=_oracle_cap())
    except GoodPairNotFound as exc:
        _fail(str(exc))
        return 1
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.json:
        payload = report_to_json(report)
        if args.timing:
            payload["elapsed_ms"] = round(elapsed_ms, 3)
        print(json.dumps(payload, indent=2))
    else:
        line = _summary_line(report)
        if args.timing:
            line += f" elapsed_ms={elapsed_ms:.3f}"
        print(line)
    return 0


def cmd_antichain(args) -> int:
    try:
        found = mine_antichain(args.bound, args.max_length, oracle_cap=_oracle_cap())
    except (CapExceededError, ValueError) as exc:
        _fail(str(exc))
        return 2
    if args.json:
        print(json.dumps({"antichain": [list(seq.entries) for seq in found]}))
    else:
        for seq in found:
            print(str(seq))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_sequence_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("sequence", nargs="*", help="sequence entries")
    sub.add_argument("--file", help="read sequences from a file, '-' for stdin")
    sub.add_argument("--strip-zeros", action="store_true",
                     help="drop zero entries before validation")
    sub.add_argument("--json", action="store_true", help="emit JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Degree-sequence toolkit: graphicality, realization,"
                    " and the induced-subgraph order.")
    subs = parser.add_subparsers(dest="command", required=True)

    check = subs.add_parser("check", help="Erdos-Gallai graphicality test")
    _add_sequence_options(check)
    check.add_argument("--prop4", action="store_true",
                       help="also report the length-based sufficiency bound")
    check.set_defaults(handler=cmd_check)

    rel = subs.add_parser("realize", help="construct a realization")
    _add_sequence_options(rel)
    rel.add_argument("--bounded", action="store_true",
                     help="bound every component by 3*d1^2 vertices")
    rel.set_defaults(handler=cmd_realize)

    relb = subs.add_parser("realize-bounded",
                           help="construct a bounded-component realization")
    _add_sequence_options(relb)
    relb.set_defaults(handler=cmd_realize)

    reg = subs.add_parser("regularity", help="encode/decode degree multiplicities")
    _add_sequence_options(reg)
    reg.add_argument("-N", "--bound", type=int,
                     help="degree bound (default: largest entry)")
    reg.add_argument("--decode", action="store_true",
                     help="input is a count vector, highest degree first")
    reg.set_defaults(handler=cmd_regularity)

    cmp_ = subs.add_parser("compare", help="decide the induced-subgraph order")
    _add_sequence_options(cmp_)
    cmp_.add_argument("-N", "--bound", type=int,
                      help="degree bound for the count-vector test")
    cmp_.add_argument("--method", choices=["auto", "sufficient", "components", "oracle"],
                      default="auto")
    cmp_.set_defaults(handler=cmd_compare)

    har = subs.add_parser("harness", help="find a good pair in a sequence stream")
    har.add_argument("-N", "--bound", type=int, required=True)
    har.add_argument("--count", type=int, default=100)
    har.add_argument("--seed", type=int, default=0)
    har.add_argument("--max-length", type=int, default=10)
    har.add_argument("--generator", choices=["random", "enumerate"], default="random")
    har.add_argument("--json", action="store_true", help="emit JSON")
    har.add_argument("--timing", action="store_true",
                     help="include elapsed time (breaks run-to-run byte equality)")
    har.set_defaults(handler=cmd_harness)

    anti = subs.add_parser("antichain", help="mine pairwise-incomparable sequences")
    anti.add_argument("-N", "--bound", type=int, required=True)
    anti.add_argument("--max-length", type=int, default=6)
    anti.add_argument("--json", action="store_true", help="emit JSON")
    anti.set_defaults(handler=cmd_antichain)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
