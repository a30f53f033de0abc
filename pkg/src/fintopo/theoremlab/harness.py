"""Exhaustive claim verification with deterministic sharding."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Iterable

import numpy as np

from ..relation import Relation
from ..topology import MAX_EXHAUSTIVE_POINTS, SizeLimit, topologies
from . import atoms
from .atoms import Ctx
from .catalog import ClaimSpec, get_claim
from .expr import Atom, BinOp, Expr, Not, evaluate, parse
from .expr import atoms as expr_atoms
from .fixtures import run_fixtures
from .table import SpaceVectors, relation_table


class BudgetExceeded(RuntimeError):
    def __init__(self, outcome: "VerificationOutcome"):
        super().__init__(f"{outcome.claim_id}: time budget exceeded, partial outcome attached")
        self.outcome = outcome


@dataclass(frozen=True, order=True)
class Violation:
    n: int
    space_index: int
    relation_code: int
    opens: tuple[int, ...] = field(compare=False)
    pairs: tuple[tuple[int, int], ...] = field(compare=False)
    witness: dict = field(compare=False, default_factory=dict)


@dataclass(frozen=True)
class VerificationOutcome:
    claim_id: str
    max_n: int
    instances: int
    hits: int
    violations: tuple[Violation, ...]
    hits_by_n: dict[int, int]
    expected_vacuous: bool
    wall_time: float = 0.0
    complete: bool = True

    @property
    def passed(self) -> bool:
        return self.complete and not self.violations and (self.hits > 0 or self.expected_vacuous)

    def as_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        d["violations"] = [asdict(v) for v in self.violations]
        d["hits_by_n"] = {str(k): v for k, v in sorted(self.hits_by_n.items())}
        d["passed"] = self.passed
        if not timing:
            d.pop("wall_time")
        return d


def merge(parts: Iterable[VerificationOutcome]) -> VerificationOutcome:
    """Sum counts and concatenate violations; order-independent."""
    parts = list(parts)
    first = parts[0]
    hits_by_n: dict[int, int] = {}
    for p in parts:
        for k, v in p.hits_by_n.items():
            hits_by_n[k] = hits_by_n.get(k, 0) + v
    return replace(
        first,
        instances=sum(p.instances for p in parts),
        hits=sum(p.hits for p in parts),
        violations=tuple(sorted(v for p in parts for v in p.violations)),
        hits_by_n=dict(sorted(hits_by_n.items())),
        wall_time=max(p.wall_time for p in parts),
        complete=all(p.complete for p in parts),
    )


def _vector_eval(node: Expr, vec: SpaceVectors) -> np.ndarray:
    if isinstance(node, Atom):
        return vec[node.name]
    if isinstance(node, Not):
        return ~_vector_eval(node.arg, vec)
    a, b = _vector_eval(node.left, vec), _vector_eval(node.right, vec)
    if node.op == "&":
        return a & b
    if node.op == "|":
        return a | b
    if node.op == "->":
        return ~a | b
    return a == b


def _vectorizable(node: Expr, vec: SpaceVectors) -> bool:
    return all(a in vec for a in expr_atoms(node))


class _Run:
    """Mutable tallies for one shard."""

    def __init__(self, claim: ClaimSpec, max_n: int, budget: float | None):
        self.claim = claim
        self.max_n = max_n
        self.instances = 0
        self.hits = 0
        self.hits_by_n: dict[int, int] = {}
        self.violations: list[Violation] = []
        self.start = time.monotonic()
        self.budget = budget

    def hit(self, n: int) -> None:
        self.hits += 1
        self.hits_by_n[n] = self.hits_by_n.get(n, 0) + 1

    def outcome(self, complete: bool = True) -> VerificationOutcome:
        return VerificationOutcome(
            self.claim.id, self.max_n, self.instances, self.hits, tuple(sorted(self.violations)),
            dict(sorted(self.hits_by_n.items())), self.claim.expected_vacuous,
            time.monotonic() - self.start, complete,
        )

    def check_budget(self) -> None:
        if self.budget is not None and time.monotonic() - self.start > self.budget:
            raise BudgetExceeded(self.outcome(complete=False))


def _space_value(cache: dict, ctx: Ctx) -> Callable[[str], bool]:
    def val(name: str) -> bool:
        if name not in cache:
            cache[name] = atoms.value(name, ctx)
        return cache[name]
    return val


def _pair_values(space_cache: dict, vec: SpaceVectors | None, i: int, ctx: Ctx) -> Callable[[str], bool]:
    space_val = _space_value(space_cache, Ctx(ctx.space, None))

    def val(name: str) -> bool:
        if atoms.get(name).scope == "space":
            return space_val(name)
        if vec is not None and name in vec:
            return bool(vec[name][i])
        return atoms.value(name, ctx)
    return val


def _conclusion_witness(node: Expr, val: Callable[[str], bool]) -> dict:
    return {a: val(a) for a in expr_atoms(node)}


def _spaces(n: int, shard: int, nshards: int):
    spaces = topologies(n)
    for idx in range(shard, len(spaces), nshards):
        yield idx, spaces[idx]


def _run_forall(run: _Run, shard: int, nshards: int, vectorized: bool) -> None:
    claim = run.claim
    hyps = [parse(h) for h in claim.ordered_hypotheses()]
    concl = parse(claim.conclusion)
    sfilter = parse(claim.space_filter) if claim.space_filter else None
    for n in range(1, run.max_n + 1):
        table = relation_table(n, claim.relation_filter)
        for idx, space in _spaces(n, shard, nshards):
            run.check_budget()
            space_cache: dict = {}
            if sfilter is not None and not evaluate(sfilter, _space_value(space_cache, Ctx(space, None))):
                continue
            run.instances += len(table)
            vec = SpaceVectors(space, table) if vectorized else None
            scalar_hyps = hyps
            candidates: Iterable[int] = range(len(table))
            if vec is not None:
                mask = np.ones(len(table), dtype=bool)
                scalar_hyps = []
                for h in hyps:
                    if _vectorizable(h, vec):
                        mask &= _vector_eval(h, vec)
                    else:
                        scalar_hyps.append(h)
                candidates = np.flatnonzero(mask).tolist()
            for i in candidates:
                code = int(table.codes[i])
                ctx = Ctx(space, Relation.from_code(n, code))
                val = _pair_values(space_cache, vec, i, ctx)
                if not all(evaluate(h, val) for h in scalar_hyps):
                    continue
                run.hit(n)
                if not evaluate(concl, val):
                    run.violations.append(Violation(
                        n, idx, code, tuple(sorted(space.opens)), tuple(ctx.r.pairs()),
                        _conclusion_witness(concl, val),
                    ))


def _run_relation(run: _Run, shard: int, nshards: int, vectorized: bool) -> None:
    claim = run.claim
    n = run.max_n
    table = relation_table(n, claim.relation_filter)
    hyps = [parse(h) for h in claim.ordered_hypotheses()]
    concl = parse(claim.conclusion)
    for i in range(shard, len(table), nshards):
        code = int(table.codes[i])
        ctx = Ctx(None, Relation.from_code(n, code))
        flags = table.flags

        def val(name: str) -> bool:
            if vectorized and name in flags:
                return bool(flags[name][i])
            return atoms.value(name, ctx)

        run.instances += 1
        if not all(evaluate(h, val) for h in hyps):
            continue
        run.hit(n)
        if not evaluate(concl, val):
            run.violations.append(Violation(n, -1, code, (), tuple(ctx.r.pairs()), _conclusion_witness(concl, val)))


def _run_space(run: _Run, shard: int, nshards: int, vectorized: bool) -> None:
    claim = run.claim
    hyps = [parse(h) for h in claim.ordered_hypotheses()]
    concl = parse(claim.conclusion)
    sfilter = parse(claim.space_filter) if claim.space_filter else None
    for n in range(1, run.max_n + 1):
        for idx, space in _spaces(n, shard, nshards):
            val = _space_value({}, Ctx(space, None))
            if sfilter is not None and not evaluate(sfilter, val):
                continue
            run.instances += 1
            if not all(evaluate(h, val) for h in hyps):
                continue
            run.hit(n)
            if not evaluate(concl, val):
                run.violations.append(Violation(n, idx, -1, tuple(sorted(space.opens)), (),
                                                _conclusion_witness(concl, val)))


def _run_pairwise(run: _Run, shard: int, nshards: int, vectorized: bool) -> None:
    """Relations meeting the hypotheses must be pairwise equal or mutually inverse."""
    claim = run.claim
    hyps = [parse(h) for h in claim.ordered_hypotheses()]
    sfilter = parse(claim.space_filter) if claim.space_filter else None
    for n in range(1, run.max_n + 1):
        table = relation_table(n, claim.relation_filter)
        for idx, space in _spaces(n, shard, nshards):
            run.check_budget()
            space_cache: dict = {}
            if sfilter is not None and not evaluate(sfilter, _space_value(space_cache, Ctx(space, None))):
                continue
            run.instances += len(table)
            vec = SpaceVectors(space, table) if vectorized else None
            found: list[Relation] = []
            mask = np.ones(len(table), dtype=bool)
            if vec is not None:
                for h in hyps:
                    if _vectorizable(h, vec):
                        mask &= _vector_eval(h, vec)
            for i in np.flatnonzero(mask).tolist():
                ctx = Ctx(space, Relation.from_code(n, int(table.codes[i])))
                val = _pair_values(space_cache, vec, i, ctx)
                if all(evaluate(h, val) for h in hyps):
                    run.hit(n)
                    found.append(ctx.r)
            for a in found:
                for b in found:
                    if a.code < b.code and b != a.transpose:
                        run.violations.append(Violation(
                            n, idx, a.code, tuple(sorted(space.opens)), tuple(a.pairs()),
                            {"other": list(b.pairs())},
                        ))


def _run_fixture(run: _Run, shard: int, nshards: int, vectorized: bool) -> None:
    if shard != 0:
        return
    for res in run_fixtures(run.claim.group):
        run.instances += 1
        run.hit(0)
        if not res.passed:
            run.violations.append(Violation(0, -1, -1, (), (), {"fixture": res.name, **{
                k: list(v) for k, v in res.diffs.items()}}))


_RUNNERS = {
    "forall": _run_forall,
    "relation": _run_relation,
    "space": _run_space,
    "pairwise": _run_pairwise,
    "fixture": _run_fixture,
}


def verify_shard(claim: ClaimSpec | str, max_n: int | None = None, shard: int = 0, nshards: int = 1,
                 budget: float | None = None, vectorized: bool = True) -> VerificationOutcome:
    if isinstance(claim, str):
        claim = get_claim(claim)
    max_n = claim.max_n if max_n is None else max_n
    limit = MAX_EXHAUSTIVE_POINTS if claim.relation_filter else 4
    if claim.kind in ("forall", "pairwise", "relation") and max_n > limit:
        raise SizeLimit(f"{claim.id}: exhaustive enumeration supports max_n <= {limit}")
    if claim.kind == "space" and max_n > MAX_EXHAUSTIVE_POINTS:
        raise SizeLimit(f"{claim.id}: space enumeration supports max_n <= {MAX_EXHAUSTIVE_POINTS}")
    run = _Run(claim, max_n, budget)
    _RUNNERS[claim.kind](run, shard, nshards, vectorized)
    return run.outcome()


def _shard_job(args: tuple) -> VerificationOutcome:
    claim, max_n, shard, nshards, budget, vectorized = args
    try:
        return verify_shard(claim, max_n, shard, nshards, budget, vectorized)
    except BudgetExceeded as exc:
        return exc.outcome


def verify(claim: ClaimSpec | str, max_n: int | None = None, *, shards: int = 1, jobs: int = 1,
           budget: float | None = None, vectorized: bool = True) -> VerificationOutcome:
    """Run a claim over every shard and merge.

    The merged outcome does not depend on ``shards`` or ``jobs`` apart from
    wall time.  Raises ``BudgetExceeded`` carrying the partial merge when any
    shard ran out of time.
    """
    if isinstance(claim, str):
        claim = get_claim(claim)
    start = time.monotonic()
    args = [(claim, max_n, s, shards, budget, vectorized) for s in range(shards)]
    if jobs > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_shard_job, args))
    else:
        parts = [_shard_job(a) for a in args]
    out = replace(merge(parts), wall_time=time.monotonic() - start)
    if not out.complete:
        raise BudgetExceeded(out)
    return out
