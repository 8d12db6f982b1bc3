"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 no path.
"""

from __future__ import annotations

import argparse
import json
import sys

from lexpath.bat import (
    CapExceededError,
    DisconnectedError,
    bat_enumerate,
    check_cap,
    find_xfc_correct,
    find_xfc_paper,
)
from lexpath.binweight import LexWeight
from lexpath.corpus import FIXTURES, random_corpus
from lexpath.graph import Network, NetworkError, connected_mask, read_network
from lexpath.oracle import NoPathError, region_census, reliability_exact
from lexpath.pathfind import PathResult, earliest_path, latest_path
from lexpath.verify import run_invariants

FORMAT_VERSION = "1"

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_NOPATH = 0, 1, 2, 3


class InputError(Exception):
    pass


def _weight(w: LexWeight, width: int) -> dict[str, str]:
    return {"decimal": w.decimal(), "binary": w.binary(width)}


def envelope(command: str, net: Network | None, result) -> str:
    doc = {
        "command": command,
        "network": None if net is None else net.summary(),
        "result": result,
        "version": FORMAT_VERSION,
    }
    return json.dumps(doc, indent=2)


def _load(path: str) -> Network:
    try:
        return read_network(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except NetworkError as exc:
        raise InputError(f"{path}: {exc}") from None


def _path_payload(path: PathResult, m: int) -> dict:
    return {
        "nodes": list(path.nodes),
        "arcs": sorted(path.arc_ids),
        "vector": str(path.vector),
        "weight": _weight(path.weight, m),
    }


def _cmd_path(args, finder, name: str) -> int:
    net = _load(args.file)
    path = finder(net)
    if path is None:
        if args.json:
            print(envelope(name, net, None))
        print("no source-sink path", file=sys.stderr)
        return EXIT_NOPATH
    if args.json:
        print(envelope(name, net, _path_payload(path, net.m)))
    else:
        print(path.describe())
        print(f"weight binary {path.weight.binary(net.m)}")
    return EXIT_OK


def cmd_earliest(args) -> int:
    return _cmd_path(args, earliest_path, "earliest")


def cmd_latest(args) -> int:
    return _cmd_path(args, latest_path, "latest")


def cmd_xfc(args) -> int:
    net = _load(args.file)
    try:
        correct = find_xfc_correct(net)
        chosen = find_xfc_paper(net) if args.method == "paper" else correct
    except DisconnectedError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NOPATH
    result = {"method": args.method, "vector": str(chosen), "value": str(chosen.mask)}
    if args.method == "paper":
        result["correct_vector"] = str(correct)
        result["correct_value"] = str(correct.mask)
        result["diverges"] = chosen != correct
    if args.json:
        print(envelope("xfc", net, result))
    else:
        print(f"{args.method} {chosen} (value {chosen.mask})")
        if args.method == "paper":
            print(f"correct {correct} (value {correct.mask})")
            print(f"diverges {'yes' if result['diverges'] else 'no'}")
    return EXIT_OK


def cmd_enum(args) -> int:
    if args.k < 1:
        raise InputError(f"-k must be positive, got {args.k}")
    try:
        check_cap(args.k, args.force)
    except CapExceededError as exc:
        raise InputError(str(exc)) from None
    net = None
    if args.annotate:
        net = _load(args.annotate)
        if net.m != args.k:
            raise InputError(f"-k {args.k} does not match the network's {net.m} arcs")
    out = sys.stdout
    for x in bat_enumerate(args.k, force=True):
        if net is None:
            out.write(f"{x}\n")
        else:
            flag = 1 if connected_mask(net, x.mask) else 0
            out.write(f"{x} {x.mask} {flag}\n")
    return EXIT_OK


def cmd_regions(args) -> int:
    net = _load(args.file)
    try:
        report = region_census(net, force=args.force)
    except CapExceededError as exc:
        raise InputError(str(exc)) from None
    except NoPathError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NOPATH
    if args.json:
        print(envelope("regions", net, report.to_dict()))
        return EXIT_OK
    d = report.to_dict()
    print(f"earliest {d['earliest_vector']} value {d['earliest_value']}")
    print(f"latest {d['latest_vector']} value {d['latest_value']}")
    print(f"last_disconnected {d['last_disconnected_vector']} value {d['last_disconnected_value']}")
    print(f"max_value_path {d['max_value_path_vector']} value {d['max_value_path_value']}")
    for region, c in d["counts"].items():
        print(
            f"region {region}: total {c['total']} connected {c['connected']} "
            f"disconnected {c['disconnected']} simple_path {c['simple_path']}"
        )
    for name, count in d["violations"].items():
        print(f"violations {name} {count}")
    return EXIT_OK


def cmd_reliability(args) -> int:
    net = _load(args.file)
    try:
        result = reliability_exact(net, prune=args.prune, force=args.force)
    except CapExceededError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(envelope("reliability", net, result.to_dict()))
    else:
        print(f"probability {result.probability:.12f}")
        print(f"vectors_evaluated {result.vectors_evaluated}")
        print(f"vectors_pruned {result.vectors_pruned}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.cases < 0:
        raise InputError(f"--cases must be non-negative, got {args.cases}")
    nets = [make() for make in FIXTURES.values()] if args.fixtures else []
    nets += random_corpus(args.seed, args.cases)
    report = run_invariants(nets, seed=args.seed)
    if args.json:
        print(envelope("verify", None, report.to_dict()))
    else:
        print(f"cases {report.cases}")
        for tally in report.tallies:
            print(tally.line())
        print("OK" if report.ok else "FAILED")
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the JSON envelope")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help="lift the 2**24 exhaustive-scan cap")

    parser = argparse.ArgumentParser(
        prog="lexpath",
        description="Earliest/latest paths and BAT-order audits for binary-state networks.",
    )
    parser.add_argument("--json", action="store_true", help="emit the JSON envelope")
    parser.add_argument("--force", action="store_true", help="lift the 2**24 exhaustive-scan cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("earliest", parents=[common], help="earliest path (weights 2**(i-1))")
    p.add_argument("file")
    p.set_defaults(func=cmd_earliest)

    p = sub.add_parser("latest", parents=[common], help="latest path (weights 2**(m-i))")
    p.add_argument("file")
    p.set_defaults(func=cmd_latest)

    p = sub.add_parser("xfc", parents=[common], help="first connected vector")
    p.add_argument("file")
    p.add_argument("--method", choices=("paper", "correct"), default="correct")
    p.set_defaults(func=cmd_xfc)

    p = sub.add_parser("enum", parents=[common], help="stream all k-bit vectors in BAT order")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--annotate", metavar="FILE",
                   help="append value and connectivity flag against this network")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("regions", parents=[common], help="three-region census")
    p.add_argument("file")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("reliability", parents=[common], help="exact two-terminal reliability")
    p.add_argument("file")
    p.add_argument("--prune", action="store_true",
                   help="skip vectors ahead of the earliest path vector")
    p.set_defaults(func=cmd_reliability)

    p = sub.add_parser("verify", parents=[common], help="invariant suite on a random corpus")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--fixtures", action="store_true",
                   help="prepend the benchmark, diamond and single-edge networks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
