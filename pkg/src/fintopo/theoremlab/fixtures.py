"""Small worked examples with fully specified expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..bits import to_mask
from ..relation import Relation, enumerate_relations, order_properties
from ..topology import FiniteSpace, discrete_space, has_pbp, is_connected_subset, is_path_connected_subset, new_space
from .. import toporel
from .atoms import Ctx, value
from .table import SpaceVectors, relation_table


@dataclass(frozen=True)
class FixtureCase:
    name: str
    group: str
    space: FiniteSpace
    labels: tuple[str, ...]
    relations: tuple[Relation, ...]
    expected: dict[str, bool]
    compute: Callable[["FixtureCase"], dict[str, bool]] = field(compare=False, repr=False)


@dataclass(frozen=True)
class FixtureResult:
    name: str
    group: str
    passed: bool
    computed: dict[str, bool]
    diffs: dict[str, tuple[bool, bool]]


def _opens_from_basis(n: int, basis: list[int]) -> FiniteSpace:
    opens = {0}
    for b in basis:
        opens |= {o | b for o in opens}
    return new_space(n, opens)


def _atoms(names: tuple[str, ...]) -> Callable[[FixtureCase], dict[str, bool]]:
    def compute(case: FixtureCase) -> dict[str, bool]:
        ctx = Ctx(case.space, case.relations[0] if case.relations else None)
        return {a: value(a, ctx) for a in names}
    return compute


def _pairs(labels: str, pairs: list[str]) -> Relation:
    idx = {c: i for i, c in enumerate(labels)}
    return Relation.from_pairs(len(labels), [(idx[p[0]], idx[p[1]]) for p in pairs])


# --- independence witnesses for the Sen conditions --------------------------

_SEN = ("T", "NP", "PP", "PI", "IP", "II")
_XYZW = "xyzw"

# (relation pairs, conditions that fail); all others in _SEN hold
_PROP1_D = [
    (["xy", "yx", "xx", "yy", "yz", "zx"], {"T", "NP", "PP", "PI", "IP"}),
    (["xy", "yx"], {"T", "II"}),
    (["xy", "yz", "xw", "wx"], {"T", "NP", "PP", "IP", "II"}),
    (["xy", "yz", "zy", "yy", "zz"], {"T", "NP", "PI"}),
    (["xy", "yz", "zy", "yy", "zz", "zw"], {"T", "NP", "PI", "IP"}),
    (["xy", "yx", "yz", "xz", "zw"], {"T", "NP", "PP", "II"}),
    (["xw", "wx", "xx", "ww", "xy", "yz"], {"T", "NP", "PP", "IP"}),
    (["xy", "yz", "zy"], {"T", "NP", "PI", "II"}),
]
_PROP1_C = [
    (["xy"], {"NP"}),
    (["xy", "yx"], {"T", "II"}),
]


def _sen_case(name: str, group: str, pairs: list[str], failing: set[str]) -> FixtureCase:
    r = _pairs(_XYZW, pairs)
    return FixtureCase(
        name, group, discrete_space(4), tuple(_XYZW), (r,),
        {c: c not in failing for c in _SEN}, _atoms(_SEN),
    )


# --- the four-point space without the Phragmen-Brouwer property -------------

_ABCD = "abcd"


def _example7_compute(case: FixtureCase) -> dict[str, bool]:
    s = case.space
    bd = to_mask([1, 3])
    closed_ok = all(
        (is_connected_subset(s, c) and is_path_connected_subset(s, c)) != (c == bd) for c in s.closeds
    )
    t = relation_table(4)
    v = SpaceVectors(s, t)
    upper = v["continuous"] & v["R_path_upper"] & v["II"]
    lower = v["continuous"] & v["R_path_lower"] & v["II"]
    has_bd = (t.I_rows == bd).any(1)
    return {
        "pbp": has_pbp(s),
        "closed_family_matches": s.closeds == frozenset(
            to_mask([_ABCD.index(ch) for ch in word])
            for word in ("", "b", "d", "bd", "bcd", "abd", "abcd")
        ),
        "only_bd_disconnected_closed": closed_ok,
        "upper_population_nonempty": bool(upper.any()),
        "upper_gives_PI": bool(v["PI"][upper].all()),
        "upper_avoids_I_bd": not bool(has_bd[upper].any()),
        "lower_gives_IP": bool(v["IP"][lower].all()),
        "lower_avoids_I_bd": not bool(has_bd[lower].any()),
    }


def _example4_converse(case: FixtureCase) -> dict[str, bool]:
    """Every relation on the discrete pair meets the connected-space conclusions."""
    ok = True
    for r in enumerate_relations(2):
        o = order_properties(r)
        ok &= (o.semi == o.NP) and (not o.semi or o.PP) and (not o.T or o.NP)
        ok &= o.T == (o.PI and o.IP and o.II)
    return {"conclusions_hold_for_all": ok, "connected": case.space.is_connected}


def _two_point_sections(case: FixtureCase) -> dict[str, bool]:
    """Every relation on the discrete pair has closed R and open P sections.

    Only the sections statement is checked: transitivity fails for the swap
    {(0, 1), (1, 0)}, which lacks (0, 0).
    """
    rels = list(enumerate_relations(2))
    return {
        "all_continuous": all(toporel.is_continuous(case.space, r) for r in rels),
        "connected": case.space.is_connected,
    }


def _example3_compute(case: FixtureCase) -> dict[str, bool]:
    s = case.space
    return {
        "quasi_ordered": toporel.is_quasi_ordered(s),
        "three_components": len(s.components) == 3,
        "le2_components": len(s.components) <= 2,
        "any_complete_antisymmetric_continuous": any(
            toporel.is_continuous(s, r) for r in enumerate_relations(4, "complete_antisymmetric")
        ),
    }


def _one_nt(case: FixtureCase) -> dict[str, bool]:
    s, r = case.space, case.relations[0]
    return {
        "k1_nontrivial": toporel.is_k_nontrivial(s, r, 1),
        "k2_nontrivial": toporel.is_k_nontrivial(s, r, 2),
        "componentwise_nt": toporel.is_componentwise_nontrivial(s, r),
        "nontrivial": order_properties(r).nontrivial,
        "three_components": len(s.components) == 3,
    }


def all_fixtures() -> list[FixtureCase]:
    cases: list[FixtureCase] = []
    cases.append(FixtureCase(
        "example-3", "examples",
        _opens_from_basis(4, [0b0001, 0b0010, 0b1100]), tuple(_XYZW), (),
        {"quasi_ordered": False, "three_components": True, "le2_components": False,
         "any_complete_antisymmetric_continuous": False},
        _example3_compute,
    ))
    cases.append(FixtureCase(
        "example-4", "examples", discrete_space(2), ("a", "b"), (_pairs("ab", ["ab", "ba", "aa"]),),
        {"T": False, "II": False, "PP": True, "PI": True, "IP": True, "NP": True, "continuous": True,
         "connected": False},
        _atoms(("T", "II", "PP", "PI", "IP", "NP", "continuous", "connected")),
    ))
    cases.append(FixtureCase(
        "example-4-converse", "examples", discrete_space(2), ("a", "b"), (),
        {"conclusions_hold_for_all": True, "connected": False}, _example4_converse,
    ))
    cases.append(FixtureCase(
        "two-point-discrete-sections", "examples", discrete_space(2), ("0", "1"), (),
        {"all_continuous": True, "connected": False}, _two_point_sections,
    ))
    ex7 = new_space(4, [to_mask([_ABCD.index(ch) for ch in w])
                        for w in ("", "a", "c", "ac", "abc", "acd", "abcd")])
    cases.append(FixtureCase(
        "example-7", "examples", ex7, tuple(_ABCD), (),
        {"pbp": False, "closed_family_matches": True, "only_bd_disconnected_closed": True,
         "upper_population_nonempty": True, "upper_gives_PI": True, "upper_avoids_I_bd": True,
         "lower_gives_IP": True, "lower_avoids_I_bd": True},
        _example7_compute,
    ))
    cases.append(FixtureCase(
        "example-2-analog", "analogs", discrete_space(3), ("x", "y", "z"),
        (_pairs("xyz", ["xx", "yy", "zz", "xy", "yz", "zx"]),),
        {"complete": True, "antisymmetric": True, "continuous": True, "T": False, "three_components": True},
        lambda c: {**_atoms(("complete", "antisymmetric", "continuous", "T"))(c),
                   "three_components": len(c.space.components) == 3},
    ))
    blocks6 = new_space(6, [a | b | c for a in (0, 0b11) for b in (0, 0b1100) for c in (0, 0b110000)])
    cases.append(FixtureCase(
        "example-1a-analog", "analogs", blocks6, tuple("abcdef"), (Relation.from_pairs(6, [(2, 4)]),),
        {"k1_nontrivial": True, "k2_nontrivial": False, "componentwise_nt": False, "nontrivial": True,
         "three_components": True},
        _one_nt,
    ))
    cases.append(FixtureCase(
        "t4f-dual", "examples", discrete_space(2), ("y", "yc"), (Relation.from_pairs(2, [(0, 1)]),),
        {"asymmetric": True, "dual_rep": True, "strongly_separable": False, "connected": False},
        _atoms(("asymmetric", "dual_rep", "strongly_separable", "connected")),
    ))
    cases.append(FixtureCase(
        "sierpinski-flimsy", "examples", new_space(2, [0, 1, 3]), ("0", "1"),
        (Relation.from_pairs(2, [(0, 0), (1, 1)]),),
        {"flimsy": True, "fragile": False, "nontrivial": False},
        _atoms(("flimsy", "fragile", "nontrivial")),
    ))
    for i, (pairs, failing) in enumerate(_PROP1_C, 1):
        cases.append(_sen_case(f"prop1-c-{i}", "prop1-c", pairs, failing))
    for i, (pairs, failing) in enumerate(_PROP1_D, 1):
        cases.append(_sen_case(f"prop1-d-{i}", "prop1-d", pairs, failing))
    return cases


def evaluate_fixture(case: FixtureCase) -> FixtureResult:
    got = case.compute(case)
    if set(got) != set(case.expected):
        raise ValueError(f"{case.name}: computed keys differ from expected keys")
    diffs = {k: (case.expected[k], got[k]) for k in case.expected if case.expected[k] != got[k]}
    return FixtureResult(case.name, case.group, not diffs, got, diffs)


def run_fixtures(group: str | None = None) -> list[FixtureResult]:
    return [evaluate_fixture(c) for c in all_fixtures() if group is None or c.group == group]
