"""Command-line front end with bit-exact, reproducible output.

Every command prints canonical JSON (or csv/text where asked) and exits 0 on
success, 1 on usage or input errors, 2 when a run's verdict misses its
expectation (for CI use).  The same flags and seed always produce the same
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from . import catalog, serialize
from .commitment import (
    HONEST,
    MODES,
    TRANSFORM_CHEAT,
    CheatParams,
    impossibility_sweep,
    run_buhrman,
    run_single_box,
)
from .dyadic import Dyadic
from .errors import BoxworldError
from .fiducial import DEFAULT_CONVENTION, FiducialConvention, state_to_table, tripartite_class_state
from .discrimination import discriminating_povm, verify_perfect_discrimination
from .purification import find_purifications, tripartite_uniqueness_counterexample
from .tables import BoxTable, chsh_value, is_no_signalling, uniform_table
from .tensors import GptTensor, Role, is_valid_effect, is_valid_state, pair
from .transforms import orbit as orbit_of, enumerate_group, subgroup_on_sites

DEFAULT_SEED = 20100201  # fixed so bare runs are reproducible

_CLASS_RULES = {44: "xyz", 45: "xy^xz", 46: "xy^xz^yz"}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; reserve 2 for assertion mismatches
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def _render(value: Dyadic, decimal: bool) -> str:
    return repr(float(value)) if decimal else str(value)


def _tensor_dict(t: GptTensor, decimal: bool) -> dict:
    d = serialize.tensor_to_dict(t)
    if decimal:
        d["entries"] = [repr(float(Dyadic.parse(v))) for v in d["entries"]]
    return d


def _print(doc, fmt: str, decimal: bool = False) -> None:
    if fmt == "json":
        sys.stdout.write(serialize.dumps(doc))
    else:
        sys.stdout.write(_as_text(doc) + "\n")


def _as_text(doc, indent: str = "") -> str:
    if isinstance(doc, dict):
        lines = []
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}{k}:")
                lines.append(_as_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(_as_text(v, indent + "  ") if isinstance(v, (dict, list))
                         else f"{indent}- {v}" for v in doc)
    return f"{indent}{doc}"


def _state_names():
    names = {}
    for i in range(4):
        names[f"omega{i}"] = lambda conv, i=i: catalog.pure_state(i)
    names["mu"] = lambda conv: catalog.maximally_mixed(1)
    names["mu2"] = lambda conv: catalog.maximally_mixed(2)
    names["mu3"] = lambda conv: catalog.maximally_mixed(3)
    for i in range(24):
        names[f"Omega{i}"] = lambda conv, i=i: catalog.bipartite_state(i)
    for cls in (44, 45, 46):
        names[f"class{cls}"] = lambda conv, cls=cls: tripartite_class_state(cls, conv)
    return names


def resolve_state(selector: str, conv: FiducialConvention) -> GptTensor:
    names = _state_names()
    if selector in names:
        return names[selector](conv)
    if selector.endswith(".json") or selector.startswith("@"):
        path = selector.lstrip("@")
        with open(path) as fh:
            return serialize.tensor_from_dict(json.load(fh))
    raise BoxworldError(f"unknown state selector {selector!r}")


def resolve_table(selector: str) -> BoxTable:
    if selector.endswith(".json") or selector.startswith("@"):
        path = selector.lstrip("@")
        with open(path) as fh:
            return serialize.table_from_dict(json.load(fh))
    if selector.startswith("p") and set(selector[1:]) <= {"0", "1"}:
        bits = [int(c) for c in selector[1:]]
        if len(bits) == 3:
            return catalog.box_table_nonlocal(*bits)
        if len(bits) == 4:
            return catalog.box_table_local(*bits)
        if len(bits) == 2:
            return catalog.box_table_single(*bits)
    if selector in ("class44", "class45", "class46"):
        return catalog.tripartite_class_table(int(selector[5:]))
    if selector.startswith("uniform"):
        return uniform_table(int(selector[7:] or "2"))
    raise BoxworldError(f"unknown table selector {selector!r}")


def cmd_catalog(args, conv) -> int:
    if args.name:
        name = args.name
        if name in ("e", "e1"):
            doc = _tensor_dict(catalog.deterministic_effect(1), args.decimal)
        elif name in ("e2", "e3"):
            doc = _tensor_dict(catalog.deterministic_effect(int(name[1])), args.decimal)
        elif name.startswith("b") and name[1:].isdigit():
            doc = _tensor_dict(catalog.extremal_effect(int(name[1:])), args.decimal)
        elif name.startswith("class"):
            cls = int(name[5:])
            doc = serialize.table_to_dict(catalog.tripartite_class_table(cls))
            doc["parity_rule"] = _CLASS_RULES[cls]
        else:
            doc = _tensor_dict(resolve_state(name, conv), args.decimal)
        _print(doc, args.format)
        return 0
    listing = {
        "single_site_states": [f"omega{i}" for i in range(4)] + ["mu"],
        "single_site_effects": [f"b{i}" for i in range(4)] + ["e"],
        "bipartite_states": [f"Omega{i}" for i in range(24)],
        "tripartite_classes": [f"class{c}" for c in (44, 45, 46)],
        "box_tables": ["p<ab> single", "p<abc> non-local", "p<abcd> local",
                       "uniform2", "uniform3", "class44", "class45", "class46"],
        "convention": conv.id,
    }
    _print(listing, args.format)
    return 0


def cmd_validate(args, conv) -> int:
    with open(args.path) as fh:
        doc = json.load(fh)
    if "role" in doc:
        t = serialize.tensor_from_dict(doc)
        result = is_valid_state(t) if t.role is Role.STATE else is_valid_effect(t)
        _print({"kind": t.role.value, "valid": bool(result),
                "violation": result.violation}, args.format)
    else:
        table = serialize.table_from_dict(doc)
        ns = is_no_signalling(table)
        _print({"kind": "table", "valid": ns,
                "violation": None if ns else "signalling"}, args.format)
    return 0


def cmd_table(args, conv) -> int:
    st = resolve_state(args.state, conv)
    _print(serialize.table_to_dict(state_to_table(st, conv)), args.format)
    return 0


def cmd_chsh(args, conv) -> int:
    if args.table:
        table = resolve_table(args.table)
    elif args.state:
        try:
            table = resolve_table(args.state)
        except BoxworldError:
            table = state_to_table(resolve_state(args.state, conv), conv)
    else:
        raise BoxworldError("chsh needs a table (--table FILE) or a selector")
    value = chsh_value(table)
    if args.format == "json":
        _print({"chsh": _render(value, args.decimal)}, "json")
    else:
        sys.stdout.write(_render(value, args.decimal) + "\n")
    return 0


def cmd_discriminate(args, conv) -> int:
    s1 = resolve_state(args.first, conv)
    s2 = resolve_state(args.second, conv)
    povm = discriminating_povm(s1, s2, conv)
    verified = verify_perfect_discrimination(povm, s1, s2)
    doc = serialize.povm_to_dict(povm)
    doc["verified"] = verified
    doc["pairings"] = [_render(pair(povm.a, s1), args.decimal),
                       _render(pair(povm.a, s2), args.decimal)]
    _print(doc, args.format)
    return 0 if verified else 2


def cmd_orbit(args, conv) -> int:
    st = resolve_state(args.state, conv)
    n = st.n_parties
    if args.sites in (None, "all"):
        elements = enumerate_group(n)
        sites_label = "all"
    else:
        sites = [int(s) for s in args.sites.split(",")]
        elements = subgroup_on_sites(n, sites, allow_permutations=not args.no_permutations)
        sites_label = ",".join(str(s) for s in sorted(sites))
    members = orbit_of(st, elements)
    labels = _label_states(members, conv)
    _print({"state": args.state, "sites": sites_label,
            "orbit_size": len(members), "orbit": labels}, args.format)
    return 0


def _label_states(states, conv) -> List[str]:
    known = {}
    for i in range(4):
        known[catalog.pure_state(i)] = f"omega{i}"
    for i in range(24):
        known[catalog.bipartite_state(i)] = f"Omega{i}"
    for cls in (44, 45, 46):
        known[tripartite_class_state(cls, conv)] = f"class{cls}"
    known[catalog.maximally_mixed(1)] = "mu"
    out = []
    for s in states:
        out.append(known.get(s, "[" + " ".join(str(v) for v in s.entries) + "]"))
    return sorted(out)


def cmd_purify(args, conv) -> int:
    if args.counterexample:
        report = tripartite_uniqueness_counterexample(conv)
    else:
        target = resolve_state(args.target, conv)
        report = find_purifications(target, args.catalog, conv)
    _print(serialize.purification_report_to_dict(report), args.format)
    return 0


def _run_trial(protocol: str, n: int, c: int, mode: str, seed: int, cheat):
    if protocol == "single":
        return run_single_box(c, mode, seed, cheat)
    return run_buhrman(n, c, mode, seed, cheat)


def cmd_bc(args, conv) -> int:
    if args.bc_action != "run":
        raise BoxworldError("usage: bc run ...")
    cheat = None
    if args.mode == TRANSFORM_CHEAT:
        cheat = CheatParams(args.alpha, 1, args.gamma)
    committed = args.commit
    seeds = [args.seed + i for i in range(args.trials)]

    def trial(s):
        return _run_trial(args.protocol, args.n, committed, args.mode, s, cheat)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            transcripts = list(pool.map(trial, seeds))
    else:
        transcripts = [trial(s) for s in seeds]

    accepted = sum(t.accepted for t in transcripts)
    flipped = sum(t.accepted and t.revealed == committed ^ 1 for t in transcripts)
    if args.mode == HONEST:
        expected = accepted == args.trials and all(
            t.revealed == committed for t in transcripts)
    elif args.mode == TRANSFORM_CHEAT:
        expected = accepted == args.trials and flipped == args.trials
    else:
        # statistical expectation: within 3 sigma of 1/2
        band = 3 / (2 * args.trials**0.5)
        expected = abs(accepted / args.trials - 0.5) <= band
    doc = {
        "protocol": args.protocol,
        "mode": args.mode,
        "n": args.n if args.protocol == "buhrman" else None,
        "committed": committed,
        "trials": args.trials,
        "seed": args.seed,
        "accepted": accepted,
        "accepted_with_flipped_bit": flipped,
        "expectation_met": expected,
    }
    if args.trials == 1:
        doc["transcript"] = serialize.transcript_to_dict(transcripts[0])
    _print(doc, args.format)
    return 0 if expected else 2


def cmd_sweep(args, conv) -> int:
    alice = tuple(int(s) for s in args.alice.split(","))
    summary = impossibility_sweep(alice, conv)
    if args.format == "csv":
        sys.stdout.write(serialize.sweep_to_csv(summary))
    elif args.format == "json":
        _print(serialize.sweep_to_dict(summary), "json")
    else:
        n_perfect = len(summary.perfect_pairs)
        sys.stdout.write(
            f"{n_perfect} / {summary.n_pairs} pairs admit perfect BC "
            f"(concealing: {len(summary.concealing_pairs)})\n"
        )
    return 0 if not summary.perfect_pairs else 2


def _add_common(parser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None

    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default=default("json"))
    parser.add_argument("--seed", type=int, default=default(DEFAULT_SEED))
    parser.add_argument("--trials", type=int, default=default(1))
    parser.add_argument("--jobs", type=int, default=default(1))
    parser.add_argument("--convention", default=default(DEFAULT_CONVENTION.id),
                        help="fiducial convention id, e.g. 02:31")
    parser.add_argument("--decimal", action="store_true", default=default(False),
                        help="render values as decimals (display only)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boxworld", description=__doc__)
    _add_common(parser, suppress=False)
    # the same flags are accepted after the subcommand; explicit uses override
    common = _Parser(add_help=False)
    _add_common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", parents=[common], help="list or show the named states/effects/boxes")
    p.add_argument("action", nargs="?", choices=("list", "show"), default="list")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("validate", parents=[common], help="check a tensor or table JSON file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("table", parents=[common], help="fiducial table of a state")
    p.add_argument("state")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("chsh", parents=[common], help="CHSH sum of a bipartite table")
    p.add_argument("state", nargs="?")
    p.add_argument("--table", help="table selector or JSON file")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser("discriminate", parents=[common], help="perfect-discrimination POVM for two states")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_discriminate)

    p = sub.add_parser("orbit", parents=[common], help="orbit of a state under a transform subgroup")
    p.add_argument("state")
    p.add_argument("--sites", help="comma-separated 1-based sites, or 'all'")
    p.add_argument("--no-permutations", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("purify", parents=[common], help="scan a catalog for purifications of a state")
    p.add_argument("target", nargs="?")
    p.add_argument("--catalog", default="bipartite24",
                   choices=("bipartite24", "bipartite24_plus_tripartite"))
    p.add_argument("--counterexample", action="store_true",
                   help="report the tripartite uniqueness counterexample")
    p.set_defaults(func=cmd_purify)

    p = sub.add_parser("bc", parents=[common], help="run a bit-commitment protocol")
    p.add_argument("bc_action", choices=("run",))
    p.add_argument("--protocol", choices=("single", "buhrman"), default="single")
    p.add_argument("--n", type=int, default=1, help="buhrman: 2n+1 boxes")
    p.add_argument("--mode", choices=MODES, default=HONEST)
    p.add_argument("--commit", type=int, choices=(0, 1), default=0)
    p.add_argument("--alpha", type=int, choices=(0, 1), default=0)
    p.add_argument("--gamma", type=int, choices=(0, 1), default=0)
    p.set_defaults(func=cmd_bc)

    p = sub.add_parser("sweep", parents=[common], help="audit all bipartite pure pairs")
    p.add_argument("--alice", default="1", help="comma-separated Alice sites")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        conv = FiducialConvention.from_id(args.convention)
        code = args.func(args, conv)
    except (BoxworldError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
