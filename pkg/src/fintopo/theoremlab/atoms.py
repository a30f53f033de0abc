"""Named predicates that claims are written in.

Each atom has a scope: ``space`` atoms read only the space, ``relation``
atoms only the relation, ``pair`` atoms both.  ``cost`` orders hypotheses
cheapest first.  This module is the scalar route; ``table`` carries the
vectorized route for a subset of atoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from ..relation import Relation, is_asymmetric, order_properties, separability
from ..topology import (
    FiniteSpace,
    has_pbp,
    is_hausdorff,
    quotient_space,
    subspace_components,
)
from .. import toporel


class UnknownAtom(KeyError):
    pass


class Ctx:
    """A (space, relation) instance with lazily computed verdict groups."""

    def __init__(self, space: FiniteSpace | None, r: Relation | None):
        self.space = space
        self.r = r

    @cached_property
    def order(self):
        return order_properties(self.r)

    @cached_property
    def asym(self) -> bool:
        return is_asymmetric(self.r)

    @cached_property
    def sep(self):
        return separability(self.r) if self.asym else None

    @cached_property
    def cont(self):
        return toporel.continuity(self.space, self.r)

    @cached_property
    def sections(self):
        return toporel.section_connectivity(self.space, self.r)

    @cached_property
    def robust(self):
        return toporel.robustness(self.space, self.r)

    @cached_property
    def ncomp(self) -> int:
        return len(self.space.components)

    @cached_property
    def classes(self):
        return toporel.indifference_classes(self.r)

    @cached_property
    def quotient(self):
        if self.classes is None:
            return None
        return quotient_space(self.space, self.classes), toporel.induced_quotient(self.r, self.classes)


@dataclass(frozen=True)
class AtomSpec:
    name: str
    scope: str
    cost: int
    fn: Callable[[Ctx], bool]
    doc: str


ATOMS: dict[str, AtomSpec] = {}


def _atom(name: str, scope: str, cost: int, doc: str):
    def deco(fn):
        ATOMS[name] = AtomSpec(name, scope, cost, fn, doc)
        return fn
    return deco


def _order_atom(name: str, doc: str, cost: int = 2) -> None:
    ATOMS[name] = AtomSpec(name, "relation", cost, lambda c: getattr(c.order, name), doc)


for _name, _doc in (
    ("reflexive", "x R x for every x"),
    ("complete", "x R y or y R x for every x, y"),
    ("symmetric", "R equals its transpose"),
    ("asymmetric", "no x R y with y R x"),
    ("antisymmetric", "x R y and y R x only when x = y"),
    ("nontrivial", "P is nonempty"),
    ("T", "R transitive"),
    ("NP", "complement of P transitive"),
    ("PP", "P transitive"),
    ("II", "I transitive"),
    ("PI", "y P x, x I z imply y P z"),
    ("IP", "y I x, x P z imply y P z"),
    ("semi", "PI and IP"),
):
    _order_atom(_name, _doc)


# --- space atoms -------------------------------------------------------------

@_atom("connected", "space", 0, "one component")
def _connected(c: Ctx) -> bool:
    return c.space.is_connected


@_atom("le2_components", "space", 0, "at most two components")
def _le2(c: Ctx) -> bool:
    return c.ncomp <= 2


@_atom("n_ge2", "space", 0, "at least two points")
def _n_ge2(c: Ctx) -> bool:
    return c.space.n >= 2


@_atom("n_gt2", "space", 0, "more than two points")
def _n_gt2(c: Ctx) -> bool:
    return c.space.n > 2


@_atom("discrete", "space", 0, "every subset open")
def _discrete(c: Ctx) -> bool:
    return len(c.space.opens) == 1 << c.space.n


@_atom("pbp", "space", 1, "Phragmen-Brouwer property")
def _pbp(c: Ctx) -> bool:
    return has_pbp(c.space)


@_atom("quasi_ordered", "space", 3, "admits a complete anti-symmetric continuous relation")
def _quasi(c: Ctx) -> bool:
    return toporel.is_quasi_ordered(c.space)


@_atom("clopens_are_unions", "space", 1, "every nonempty clopen is a union of components")
def _clopen_unions(c: Ctx) -> bool:
    # components recomputed by walking neighbourhoods, not from clopen atoms
    comps = subspace_components(c.space, c.space.full)
    for v in c.space.clopens:
        if v and any(comp & v and comp & ~v for comp in comps):
            return False
    return True


@_atom("clopen_partitions", "space", 1, "a k-block clopen partition exists for every k up to the component count")
def _clopen_parts(c: Ctx) -> bool:
    from ..topology import clopen_partition

    for k in range(1, c.ncomp + 1):
        blocks = clopen_partition(c.space, k)
        if len(blocks) != k or any(not b or not c.space.is_open(b) or not c.space.is_closed(b) for b in blocks):
            return False
        union = 0
        for b in blocks:
            if union & b:
                return False
            union |= b
        if union != c.space.full:
            return False
    return True


# --- relation atoms beyond the order vector ----------------------------------

@_atom("pseudo_dual", "relation", 3, "reflexive hull of asymmetric R is pseudo-transitive")
def _pseudo(c: Ctx) -> bool:
    return c.asym and c.order.pseudo_dual


@_atom("I_equivalence", "relation", 2, "I reflexive and transitive")
def _i_equiv(c: Ctx) -> bool:
    return c.order.reflexive and c.order.II


@_atom("strongly_nontrivial", "relation", 2, "some P(x) nonempty with R(x') & R(y') nonempty on it")
def _snt(c: Ctx) -> bool:
    return toporel.is_strongly_nontrivial(c.r)


@_atom("separable", "relation", 2, "asymmetric and separable")
def _separable(c: Ctx) -> bool:
    return c.asym and c.sep.separable


@_atom("strongly_separable", "relation", 2, "asymmetric and strongly separable")
def _strongly_separable(c: Ctx) -> bool:
    return c.asym and c.sep.strongly_separable


# --- pair atoms ----------------------------------------------------------------

for _name, _attr, _doc in (
    ("closed_upper_R", "closed_upper_R", "every R(x) closed"),
    ("closed_lower_R", "closed_lower_R", "every R^-1(x) closed"),
    ("closed_R", "closed_sections_R", "all sections of R closed"),
    ("open_upper_P", "open_upper_P", "every P(x) open"),
    ("open_lower_P", "open_lower_P", "every P^-1(x) open"),
    ("open_P", "open_sections_P", "all sections of P open"),
    ("continuous", "continuous", "closed R sections and open P sections"),
):
    ATOMS[_name] = AtomSpec(_name, "pair", 1, (lambda a: lambda c: getattr(c.cont, a))(_attr), _doc)

for _name, _attr, _doc in (
    ("I_conn", "I_sections_connected", "every I(x) connected"),
    ("R_conn", "R_sections_connected", "every section of R connected"),
    ("R_path_upper", "R_upper_path_connected", "every R(x) path-connected"),
    ("R_path_lower", "R_lower_path_connected", "every R^-1(x) path-connected"),
    ("R_path", "R_sections_path_connected", "every section of R path-connected"),
):
    ATOMS[_name] = AtomSpec(_name, "pair", 2, (lambda a: lambda c: getattr(c.sections, a))(_attr), _doc)


@_atom("componentwise_nt", "pair", 2, "P inside every component, comparability across every pair")
def _cw(c: Ctx) -> bool:
    return toporel.is_componentwise_nontrivial(c.space, c.r)


@_atom("knt", "pair", 3, "k-non-trivial with k the component count")
def _knt(c: Ctx) -> bool:
    return toporel.is_k_nontrivial(c.space, c.r, c.ncomp)


@_atom("knt1", "pair", 3, "1-non-trivial")
def _knt1(c: Ctx) -> bool:
    return toporel.is_k_nontrivial(c.space, c.r, 1)


@_atom("fragile", "pair", 3, "a strict pair whose minimal box holds an incomparable pair")
def _fragile(c: Ctx) -> bool:
    return c.robust.fragile


@_atom("flimsy", "pair", 3, "an incomparable pair whose minimal box holds a comparable pair")
def _flimsy(c: Ctx) -> bool:
    return c.robust.flimsy


@_atom("covering_closed", "pair", 3, "asymmetric with covering relations of closed sections")
def _cov(c: Ctx) -> bool:
    return c.asym and toporel.covering_closed_sections(c.space, c.r)


@_atom("dual_rep", "pair", 4, "asymmetric with a continuous dual representation")
def _dual(c: Ctx) -> bool:
    return c.asym and toporel.dual_representation(c.space, c.r) is not None


@_atom("lemma1_cover", "pair", 2, "C(x) | C(y) inside P(x) | P^-1(y) for every x P y")
def _lemma1(c: Ctx) -> bool:
    return toporel.lemma1_violation(c.space, c.r) is None


@_atom("quotient_antisym_continuous", "pair", 4, "induced relation on the quotient by I is anti-symmetric and continuous")
def _quot(c: Ctx) -> bool:
    if c.quotient is None:
        return False
    qs, qr = c.quotient
    return order_properties(qr).antisymmetric and toporel.is_continuous(qs, qr)


@_atom("quotient_hausdorff", "pair", 4, "I is an equivalence and the quotient by it is Hausdorff")
def _qh(c: Ctx) -> bool:
    return c.quotient is not None and is_hausdorff(c.quotient[0])


def get(name: str) -> AtomSpec:
    try:
        return ATOMS[name]
    except KeyError:
        raise UnknownAtom(name) from None


def value(name: str, ctx: Ctx) -> bool:
    return bool(get(name).fn(ctx))


ATOMS["true"] = AtomSpec("true", "relation", 0, lambda c: True, "constant true")
ATOMS["false"] = AtomSpec("false", "relation", 0, lambda c: False, "constant false")
