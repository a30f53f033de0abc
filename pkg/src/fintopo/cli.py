"""Command-line front end.  Every command prints one JSON report.

Exit codes: 0 success, 1 violation / counterexample / failed check,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from .bits import fmt, to_mask
from .relation import NotAsymmetric, Relation, is_asymmetric, order_properties, separability
from .topology import AxiomViolation, FiniteSpace, SizeLimit, has_pbp, new_space, topologies
from . import toporel
from .theoremlab import catalog, fixtures, harness, search, witnesses
from .theoremlab.atoms import UnknownAtom

SCHEMA_VERSION = "1"
JOBS_ENV = "FINTOPO_JOBS"


class InputError(ValueError):
    pass


# --- file formats -----------------------------------------------------------


def _read_json(path: str, digests: dict[str, str], key: str) -> Any:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    digests[key] = hashlib.sha256(raw).hexdigest()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None


def parse_space(doc: Any) -> tuple[FiniteSpace, list]:
    if not isinstance(doc, dict) or "points" not in doc or "opens" not in doc:
        raise InputError("space file needs 'points' and 'opens'")
    labels = list(doc["points"])
    if len(set(map(_key, labels))) != len(labels):
        raise InputError("duplicate point labels")
    index = {_key(p): i for i, p in enumerate(labels)}
    opens = []
    for o in doc["opens"]:
        try:
            opens.append(to_mask(index[_key(p)] for p in o))
        except KeyError as exc:
            raise InputError(f"unknown point {exc.args[0]} in opens") from None
    try:
        return new_space(len(labels), opens), labels
    except (AxiomViolation, SizeLimit, ValueError) as exc:
        raise InputError(f"not a topology: {exc}") from None


def parse_relation(doc: Any, labels: list) -> Relation:
    if not isinstance(doc, dict) or "pairs" not in doc:
        raise InputError("relation file needs 'pairs'")
    index = {_key(p): i for i, p in enumerate(labels)}
    pairs = []
    for pair in doc["pairs"]:
        if len(pair) != 2:
            raise InputError(f"bad pair {pair!r}")
        try:
            pairs.append((index[_key(pair[0])], index[_key(pair[1])]))
        except KeyError as exc:
            raise InputError(f"unknown point {exc.args[0]} in pairs") from None
    return Relation.from_pairs(len(labels), pairs)


def _key(label: Any) -> str:
    return json.dumps(label)


def space_doc(space: FiniteSpace, labels: list | None = None) -> dict:
    labels = labels if labels is not None else list(range(space.n))
    return {"points": labels, "opens": [fmt(o, labels) for o in sorted(space.opens)]}


def relation_doc(r: Relation, labels: list | None = None) -> dict:
    labels = labels if labels is not None else list(range(r.n))
    return {"pairs": [[labels[x], labels[y]] for x, y in r.pairs()]}


def _label_tuple(t, labels: list) -> list:
    return [labels[i] for i in t]


# --- commands -----------------------------------------------------------------


def cmd_check(args, digests) -> tuple[int, dict]:
    space, labels = parse_space(_read_json(args.space, digests, "space"))
    r = parse_relation(_read_json(args.relation, digests, "relation"), labels)
    ncomp = len(space.components)
    k = args.k if args.k is not None else 1
    if not 1 <= k <= ncomp:
        raise InputError(f"--k must lie in 1..{ncomp} for this space")
    order = order_properties(r)
    rep = toporel.topo_report(space, r, k)
    topo_witnesses: dict[str, Any] = {}
    for name, x in rep.continuity.witnesses.items():
        topo_witnesses[name] = [labels[x]]
    for name, pair in rep.robustness.witnesses.items():
        topo_witnesses[name] = _label_tuple(pair, labels)
    sep = None
    if is_asymmetric(r):
        s = separability(r)
        sep = {
            "separable": s.separable,
            "strongly_separable": s.strongly_separable,
            "witnesses": {k2: _label_tuple(v, labels) for k2, v in sorted(s.witnesses.items())},
        }
    dual = None
    if rep.dual is not None:
        dual = {
            "u": {_key(labels[x]): rep.dual.u(x) for x in range(space.n)},
            "v": {_key(labels[x]): rep.dual.v(x) for x in range(space.n)},
        }
    report = {
        "space": {
            "n": space.n,
            "components": [fmt(c, labels) for c in space.components.blocks],
            "connected": space.is_connected,
            "pbp": has_pbp(space),
            "quasi_ordered": toporel.is_quasi_ordered(space),
        },
        "order": {
            "verdicts": order.as_dict(),
            "witnesses": {n: _label_tuple(t, labels) for n, t in sorted(order.witnesses.items())},
        },
        "topology": {
            "k": k,
            "verdicts": rep.verdicts(),
            "witnesses": topo_witnesses,
            "dual_representation": dual,
        },
        "separability": sep,
    }
    return 0, report


def cmd_enumerate(args, digests) -> tuple[int, dict]:
    try:
        spaces = topologies(args.n)
    except SizeLimit as exc:
        raise InputError(str(exc)) from None
    chosen = [(i, s) for i, s in enumerate(spaces) if not args.connected_only or s.is_connected]
    report: dict[str, Any] = {"n": args.n, "connected_only": args.connected_only, "count": len(chosen)}
    if not args.count_only:
        report["spaces"] = [{"index": i, **space_doc(s)} for i, s in chosen]
    return 0, report


def _outcome_doc(o: harness.VerificationOutcome) -> dict:
    d = o.as_dict(timing=False)
    d["violations"] = [
        {
            "n": v.n,
            "space_index": v.space_index,
            "space": {"points": list(range(v.n)), "opens": [fmt(m) for m in v.opens]} if v.opens else None,
            "relation": {"pairs": [list(p) for p in v.pairs]} if v.relation_code >= 0 else None,
            "witness": v.witness,
        }
        for v in o.violations
    ]
    return d


def cmd_verify(args, digests) -> tuple[int, dict]:
    ids = catalog.claim_ids() if args.claim == ["all"] else args.claim
    claims = []
    for cid in ids:
        try:
            claims.append(catalog.get_claim(cid))
        except catalog.UnknownClaim:
            raise InputError(f"unknown claim {cid!r}") from None
    outcomes, timing, code = [], {}, 0
    for c in claims:
        try:
            o = harness.verify(c, args.max_n, shards=args.shards or args.jobs, jobs=args.jobs, budget=args.budget)
        except harness.BudgetExceeded as exc:
            o = exc.outcome
        except SizeLimit as exc:
            raise InputError(str(exc)) from None
        outcomes.append(_outcome_doc(o))
        timing[c.id] = round(o.wall_time, 3)
        if not o.passed:
            code = 1
    return code, {"outcomes": outcomes, "timing": timing}


def cmd_witness(args, digests) -> tuple[int, dict]:
    space, labels = parse_space(_read_json(args.space, digests, "space"))
    try:
        w = witnesses.witness(space, args.construction)
    except witnesses.PreconditionUnmet as exc:
        raise InputError(f"precondition unmet: {exc}") from None
    checks = witnesses.post_check(space, w)
    report = {
        "construction": w.construction,
        "relation": relation_doc(w.relation, labels),
        "post_check": checks,
    }
    if w.reference is not None:
        report["reference"] = relation_doc(w.reference, labels)
    return (0 if all(checks.values()) else 1), report


def cmd_search(args, digests) -> tuple[int, dict]:
    hyps = [h.strip() for h in args.hypotheses.split(",") if h.strip()]
    try:
        res = search.search_counterexample(
            hyps, args.conclusion, args.max_n, space_filter=args.space_filter,
            relation_filter=args.relation_filter, topology=False if args.no_topology else None,
        )
    except SizeLimit as exc:
        raise InputError(str(exc)) from None
    except UnknownAtom as exc:
        raise InputError(f"unknown atom {exc.args[0]!r}") from None
    report: dict[str, Any] = {"found": res.found, "enumerated": res.enumerated}
    if res.found:
        report["n"] = res.n
        report["space"] = space_doc(res.space) if res.space is not None else None
        report["relation"] = relation_doc(res.relation)
    return (1 if res.found else 0), report


def cmd_fixtures(args, digests) -> tuple[int, dict]:
    results = fixtures.run_fixtures(args.group)
    report = {
        "fixtures": [
            {"name": r.name, "group": r.group, "passed": r.passed, "computed": r.computed,
             "diffs": {k: list(v) for k, v in r.diffs.items()}}
            for r in results
        ]
    }
    return (0 if all(r.passed for r in results) else 1), report


def cmd_claims(args, digests) -> tuple[int, dict]:
    return 0, {"claims": catalog.manifest()}


# --- plumbing -----------------------------------------------------------------


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fintopo", description="finite topologies and binary relations")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="all verdicts for one space and relation")
    c.add_argument("--space", required=True)
    c.add_argument("--relation", required=True)
    c.add_argument("--k", type=int)

    e = sub.add_parser("enumerate", help="labeled topologies on n points")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--connected-only", action="store_true")
    e.add_argument("--count-only", action="store_true")

    v = sub.add_parser("verify", help="exhaustively verify catalogued claims")
    v.add_argument("--claim", action="append", required=True, help="claim id, repeatable, or 'all'")
    v.add_argument("--max-n", type=int)
    v.add_argument("--jobs", type=int, default=_default_jobs())
    v.add_argument("--shards", type=int)
    v.add_argument("--budget", type=float, help="seconds")

    w = sub.add_parser("witness", help="build a proof construction on a space")
    w.add_argument("--space", required=True)
    w.add_argument("--construction", required=True, choices=sorted(witnesses.CONSTRUCTIONS))

    s = sub.add_parser("search", help="first counterexample to hypotheses -> conclusion")
    s.add_argument("--hypotheses", required=True, help="comma separated formulas")
    s.add_argument("--conclusion", required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--space-filter")
    s.add_argument("--relation-filter")
    s.add_argument("--no-topology", action="store_true")

    f = sub.add_parser("fixtures", help="run the worked-example fixtures")
    f.add_argument("--group")

    sub.add_parser("claims", help="list the claim catalog")
    return p


COMMANDS = {
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "witness": cmd_witness,
    "search": cmd_search,
    "fixtures": cmd_fixtures,
    "claims": cmd_claims,
}


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items())}


def dispatch(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    digests: dict[str, str] = {}
    start = time.monotonic()
    try:
        code, body = COMMANDS[args.command](args, digests)
    except (InputError, NotAsymmetric, ValueError) as exc:
        report = {"schema_version": SCHEMA_VERSION, "command": _echo(args), "error": str(exc)}
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return 2
    timing = body.pop("timing", {})
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": _echo(args),
        "inputs": digests,
        **body,
        "timing": {"total_seconds": round(time.monotonic() - start, 3), **timing},
    }
    out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return code


def main() -> None:
    sys.exit(dispatch())
