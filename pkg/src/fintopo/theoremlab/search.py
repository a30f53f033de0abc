"""First counterexample to hypotheses => conclusion in enumeration order."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..relation import Relation
from ..topology import FiniteSpace, SizeLimit, topologies
from . import atoms
from .atoms import Ctx
from .expr import BinOp, Not, evaluate, parse
from .expr import atoms as expr_atoms
from .harness import _vector_eval, _vectorizable
from .table import SpaceVectors, relation_table

MAX_SEARCH_POINTS = 4


@dataclass(frozen=True)
class SearchResult:
    found: bool
    enumerated: int
    n: int | None = None
    space_index: int | None = None
    space: FiniteSpace | None = None
    relation: Relation | None = None


def _needs_topology(names: list[str]) -> bool:
    return any(atoms.get(a).scope != "relation" for a in names)


def search_counterexample(hypotheses: list[str], conclusion: str, max_n: int,
                          space_filter: str | None = None, relation_filter: str | None = None,
                          topology: bool | None = None) -> SearchResult:
    """Scan n = 1..max_n, spaces by index, relations by code.

    Without topology (the default when every atom is relation-level) only
    relations are scanned.  Returns the first instance satisfying every
    hypothesis and failing the conclusion, or an exhaustion certificate
    carrying the number of instances scanned.
    """
    if max_n > MAX_SEARCH_POINTS and relation_filter is None:
        raise SizeLimit(f"search supports max_n <= {MAX_SEARCH_POINTS} without a relation filter")
    hyp = [parse(h) for h in hypotheses]
    target = Not(parse(conclusion))
    formula = target
    for h in reversed(hyp):
        formula = BinOp("&", h, formula)
    names = expr_atoms(formula)
    if space_filter:
        names += expr_atoms(parse(space_filter))
    for a in names:
        atoms.get(a)
    if topology is None:
        topology = _needs_topology(names)
    sfilter = parse(space_filter) if space_filter else None
    enumerated = 0
    for n in range(1, max_n + 1):
        table = relation_table(n, relation_filter)
        if not topology:
            flags = table.flags
            for i, code in enumerate(table.codes.tolist()):
                enumerated += 1
                ctx = Ctx(None, Relation.from_code(n, code))
                if evaluate(formula, lambda a: bool(flags[a][i]) if a in flags else atoms.value(a, ctx)):
                    return SearchResult(True, enumerated, n, None, None, ctx.r)
            continue
        for idx, space in enumerate(topologies(n)):
            sctx = Ctx(space, None)
            if sfilter is not None and not evaluate(sfilter, lambda a: atoms.value(a, sctx)):
                continue
            vec = SpaceVectors(space, table)
            mask = np.ones(len(table), dtype=bool)
            rest = []
            for h in hyp + [target]:
                if _vectorizable(h, vec):
                    mask &= _vector_eval(h, vec)
                else:
                    rest.append(h)
            hits = np.flatnonzero(mask)
            for i in hits.tolist():
                ctx = Ctx(space, Relation.from_code(n, int(table.codes[i])))

                def val(a: str) -> bool:
                    if a in vec:
                        return bool(vec[a][i])
                    return atoms.value(a, ctx)

                if all(evaluate(h, val) for h in rest):
                    enumerated += i + 1
                    return SearchResult(True, enumerated, n, idx, space, ctx.r)
            enumerated += len(table)
    return SearchResult(False, enumerated)
