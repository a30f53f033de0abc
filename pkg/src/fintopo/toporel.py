"""Properties of a relation that depend on the topology of its carrier."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .bits import iter_bits, lowest
from .relation import NotAsymmetric, Relation, covering_relations, enumerate_relations, is_asymmetric
from .topology import (
    FiniteSpace,
    Partition,
    is_connected_subset,
    is_path_connected_subset,
    make_partition,
    quotient_space,
)


class SizeMismatch(ValueError):
    pass


class KOutOfRange(ValueError):
    pass


def _check_sizes(space: FiniteSpace, r: Relation) -> None:
    if space.n != r.n:
        raise SizeMismatch(f"space has {space.n} points, relation {r.n}")


def _first_bad(sections: Sequence[int], ok) -> int | None:
    for x, s in enumerate(sections):
        if not ok(s):
            return x
    return None


@dataclass(frozen=True)
class Continuity:
    closed_upper_R: bool
    closed_lower_R: bool
    open_upper_P: bool
    open_lower_P: bool
    witnesses: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def closed_sections_R(self) -> bool:
        return self.closed_upper_R and self.closed_lower_R

    @property
    def open_sections_P(self) -> bool:
        return self.open_upper_P and self.open_lower_P

    @property
    def continuous(self) -> bool:
        return self.closed_sections_R and self.open_sections_P


def continuity(space: FiniteSpace, r: Relation) -> Continuity:
    """Closedness of R's sections and openness of P's; witnesses are points."""
    _check_sizes(space, r)
    p = r.asym
    checks = {
        "closed_upper_R": (r.rows, space.is_closed),
        "closed_lower_R": (r.cols, space.is_closed),
        "open_upper_P": (p.rows, space.is_open),
        "open_lower_P": (p.cols, space.is_open),
    }
    w = {}
    for name, (sections, ok) in checks.items():
        bad = _first_bad(sections, ok)
        if bad is not None:
            w[name] = bad
    return Continuity(*(name not in w for name in checks), witnesses=w)


def is_continuous(space: FiniteSpace, r: Relation) -> bool:
    return continuity(space, r).continuous


@dataclass(frozen=True)
class SectionConnectivity:
    I_sections_connected: bool
    R_sections_connected: bool
    R_upper_path_connected: bool
    R_lower_path_connected: bool

    @property
    def R_sections_path_connected(self) -> bool:
        return self.R_upper_path_connected and self.R_lower_path_connected


def section_connectivity(space: FiniteSpace, r: Relation) -> SectionConnectivity:
    """Empty sections count as connected and as path-connected."""
    _check_sizes(space, r)
    i_rows = r.sym.rows
    return SectionConnectivity(
        all(is_connected_subset(space, s) for s in i_rows),
        all(is_connected_subset(space, s) for s in r.rows + r.cols),
        all(is_path_connected_subset(space, s) for s in r.rows),
        all(is_path_connected_subset(space, s) for s in r.cols),
    )


# --- non-triviality --------------------------------------------------------


def _meets(rel_rows: Sequence[int], a: int, b: int) -> bool:
    """Some x in a and y in b with (x, y) in the relation."""
    return any(rel_rows[x] & b for x in iter_bits(a))


def is_componentwise_nontrivial(space: FiniteSpace, r: Relation) -> bool:
    _check_sizes(space, r)
    blocks = space.components.blocks
    p = r.asym
    if not all(_meets(p.rows, c, c) for c in blocks):
        return False
    comparable = (r | r.transpose).rows
    return all(_meets(comparable, c, d) for c, d in combinations(blocks, 2))


def is_k_nontrivial(space: FiniteSpace, r: Relation, k: int) -> bool:
    """Strictly increasing index runs m, n of length k over the components.

    Indices run up to the number of components.  (a) every C_m[i] x C_n[i]
    holds a pair of P or its transpose; (b) for i < j some pair of R or its
    transpose lies in C_m[i] x C_n[j] or C_m[j] x C_n[i].
    """
    _check_sizes(space, r)
    blocks = space.components.blocks
    if not 1 <= k <= len(blocks):
        raise KOutOfRange(f"k={k} with {len(blocks)} components")
    strict = (r.asym | r.asym.transpose).rows
    weak = (r | r.transpose).rows
    idx = range(len(blocks))
    for ms in combinations(idx, k):
        for ns in combinations(idx, k):
            if not all(_meets(strict, blocks[m], blocks[n]) for m, n in zip(ms, ns)):
                continue
            if all(_meets(weak, blocks[ms[i]], blocks[ns[j]]) or _meets(weak, blocks[ms[j]], blocks[ns[i]])
                   for i, j in combinations(range(k), 2)):
                return True
    return False


def is_strongly_nontrivial(r: Relation) -> bool:
    """Some x with P(x) nonempty and R(x') & R(y') nonempty for all x', y' in P(x)."""
    rows = r.rows
    for prow in r.asym.rows:
        if prow and all(rows[a] & rows[b] for a in iter_bits(prow) for b in iter_bits(prow)):
            return True
    return False


@dataclass(frozen=True)
class Nontriviality:
    nontrivial: bool
    componentwise: bool
    k: int
    k_nontrivial: bool
    strongly_nontrivial: bool


def nontriviality(space: FiniteSpace, r: Relation, k: int = 1) -> Nontriviality:
    _check_sizes(space, r)
    return Nontriviality(
        any(r.asym.rows),
        is_componentwise_nontrivial(space, r),
        k,
        is_k_nontrivial(space, r, k),
        is_strongly_nontrivial(r),
    )


# --- fragility and flimsiness ----------------------------------------------


@dataclass(frozen=True)
class Robustness:
    fragile: bool
    flimsy: bool
    witnesses: dict[str, tuple[int, int]] = field(default_factory=dict, compare=False)


def robustness(space: FiniteSpace, r: Relation) -> Robustness:
    """Fragility and flimsiness via the minimal box U_x x U_y around each pair.

    Every open neighbourhood of (x, y) contains that box, so a box check
    settles the "every neighbourhood" quantifier exactly.
    """
    _check_sizes(space, r)
    mins = space.minimal_opens
    comparable = (r | r.transpose).rows
    full = space.full

    def box_has_incomparable(x: int, y: int) -> bool:
        return any(mins[y] & ~comparable[a] & full for a in iter_bits(mins[x]))

    def box_has_comparable(x: int, y: int) -> bool:
        return any(mins[y] & comparable[a] for a in iter_bits(mins[x]))

    w = {}
    for x, y in r.asym.pairs():
        if box_has_incomparable(x, y):
            w["fragile"] = (x, y)
            break
    for x in range(r.n):
        for y in iter_bits(full & ~comparable[x]):
            if box_has_comparable(x, y):
                w["flimsy"] = (x, y)
                break
        if "flimsy" in w:
            break
    return Robustness("fragile" in w, "flimsy" in w, w)


# --- quasi-ordered spaces ----------------------------------------------------


def quasi_order_witness(space: FiniteSpace) -> Relation | None:
    """First complete, anti-symmetric, continuous relation in enumeration order."""
    for r in enumerate_relations(space.n, "complete_antisymmetric"):
        if is_continuous(space, r):
            return r
    return None


def is_quasi_ordered(space: FiniteSpace) -> bool:
    return quasi_order_witness(space) is not None


# --- covering relations and dual representations -----------------------------


def covering_closed_sections(space: FiniteSpace, p: Relation) -> bool:
    """Both covering relations of P's hull have closed upper and lower sections."""
    _check_sizes(space, p)
    for rel in covering_relations(p):
        if not all(space.is_closed(s) for s in rel.rows + rel.cols):
            return False
    return True


@dataclass(frozen=True)
class DualRepresentation:
    """Component-constant integer functions u, v with x P y iff u(x) < v(y)."""

    components: Partition
    u_by_component: tuple[int, ...]
    v_by_component: tuple[int, ...]

    def u(self, x: int) -> int:
        return self.u_by_component[self.components.block_of(x)]

    def v(self, y: int) -> int:
        return self.v_by_component[self.components.block_of(y)]


@dataclass
class InequalitySystem:
    """Variables u_c (index c) and v_c (index m + c) over m components.

    ``strict`` holds (a, b) for a < b, ``weak`` holds (a, b) for a <= b.
    """

    m: int
    strict: set[tuple[int, int]] = field(default_factory=set)
    weak: set[tuple[int, int]] = field(default_factory=set)

    def solve(self) -> list[int] | None:
        """Integer levels satisfying every constraint, or None.

        Infeasible iff a strict edge sits inside a strongly connected group
        of the <=-graph.  Otherwise each group gets its longest-path level in
        the condensation, counting strict edges as 1 and weak ones as 0.
        """
        size = 2 * self.m
        succ: list[set[int]] = [set() for _ in range(size)]
        for a, b in self.strict | self.weak:
            succ[a].add(b)
        group = _strong_components(size, succ)
        if any(group[a] == group[b] for a, b in self.strict):
            return None
        count = max(group) + 1
        gsucc: dict[int, dict[int, int]] = {g: {} for g in range(count)}
        for edges, weight in ((self.weak, 0), (self.strict, 1)):
            for a, b in edges:
                ga, gb = group[a], group[b]
                if ga != gb:
                    gsucc[ga][gb] = max(gsucc[ga].get(gb, 0), weight)
        # Tarjan numbers groups in reverse topological order.
        level = [0] * count
        for g in range(count - 1, -1, -1):
            for h, wt in gsucc[g].items():
                level[h] = max(level[h], level[g] + wt)
        return [level[group[v]] for v in range(size)]


def _strong_components(size: int, succ: list[set[int]]) -> list[int]:
    """Tarjan's algorithm; groups are numbered in reverse topological order."""
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    stack: list[int] = []
    group = [-1] * size
    counter = 0
    ngroups = 0

    def visit(v: int) -> None:
        nonlocal counter, ngroups
        index[v] = low[v] = counter
        counter += 1
        stack.append(v)
        on_stack[v] = True
        for w in sorted(succ[v]):
            if index[w] < 0:
                visit(w)
                low[v] = min(low[v], low[w])
            elif on_stack[w]:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            while True:
                w = stack.pop()
                on_stack[w] = False
                group[w] = ngroups
                if w == v:
                    break
            ngroups += 1

    for v in range(size):
        if index[v] < 0:
            visit(v)
    return group


def dual_system(space: FiniteSpace, p: Relation) -> InequalitySystem:
    """Constraints forcing u(x) < v(y) exactly on the pairs of P.

    A continuous real map on a finite space is constant on components (the
    image of a component is a connected finite subset of the line, a point),
    and component-constant maps are continuous because components are
    clopen.  So u and v reduce to one value per component.
    """
    comp = space.component_of
    m = len(space.components)
    system = InequalitySystem(m)
    for x in range(p.n):
        for y in range(p.n):
            cu, cv = comp[x], m + comp[y]
            if p.rows[x] >> y & 1:
                system.strict.add((cu, cv))
            else:
                system.weak.add((cv, cu))
    return system


def dual_representation(space: FiniteSpace, p: Relation) -> DualRepresentation | None:
    _check_sizes(space, p)
    if not is_asymmetric(p):
        raise NotAsymmetric("dual representation is defined for asymmetric relations")
    system = dual_system(space, p)
    values = system.solve()
    if values is None:
        return None
    m = system.m
    rep = DualRepresentation(space.components, tuple(values[:m]), tuple(values[m:]))
    for x in range(p.n):
        for y in range(p.n):
            if (rep.u(x) < rep.v(y)) != bool(p.rows[x] >> y & 1):
                raise AssertionError(f"dual representation fails at {(x, y)}")
    return rep


# --- claims about sections ---------------------------------------------------


def lemma1_violation(space: FiniteSpace, r: Relation) -> tuple[int, int, int] | None:
    """First (x, y, z) with x P y and z in C(x) | C(y) outside P(x) | P^-1(y)."""
    _check_sizes(space, r)
    blocks = space.components.blocks
    comp = space.component_of
    p = r.asym
    for x, y in p.pairs():
        cover = p.rows[x] | p.cols[y]
        bad = (blocks[comp[x]] | blocks[comp[y]]) & ~cover
        if bad:
            return (x, y, lowest(bad))
    return None


def indifference_classes(r: Relation) -> Partition | None:
    """Classes of I when I is an equivalence relation, else None."""
    i_rel = r.sym
    if any(not row >> x & 1 for x, row in enumerate(i_rel.rows)):
        return None
    classes = set(i_rel.rows)
    try:
        return make_partition(r.n, classes)
    except ValueError:
        return None


def induced_quotient(r: Relation, classes: Partition) -> Relation:
    """([x], [y]) related iff every x' in [x], y' in [y] has x' R y'."""
    blocks = classes.blocks
    m = len(blocks)
    rows = []
    for a in blocks:
        row = 0
        for j, b in enumerate(blocks):
            if all(r.rows[x] & b == b for x in iter_bits(a)):
                row |= 1 << j
        rows.append(row)
    return Relation(m, tuple(rows))


def quotient_by_indifference(space: FiniteSpace, r: Relation) -> tuple[FiniteSpace, Relation] | None:
    _check_sizes(space, r)
    classes = indifference_classes(r)
    if classes is None:
        return None
    return quotient_space(space, classes), induced_quotient(r, classes)


# --- combined report -----------------------------------------------------------


@dataclass(frozen=True)
class TopoPropertyReport:
    continuity: Continuity
    sections: SectionConnectivity
    nontriviality: Nontriviality
    robustness: Robustness
    covering_closed: bool | None
    dual: DualRepresentation | None
    has_dual: bool | None

    @property
    def continuous(self) -> bool:
        return self.continuity.continuous

    def verdicts(self) -> dict[str, bool | None]:
        c, s, nt, rb = self.continuity, self.sections, self.nontriviality, self.robustness
        return {
            "closed_upper_R": c.closed_upper_R,
            "closed_lower_R": c.closed_lower_R,
            "closed_sections_R": c.closed_sections_R,
            "open_upper_P": c.open_upper_P,
            "open_lower_P": c.open_lower_P,
            "open_sections_P": c.open_sections_P,
            "continuous": c.continuous,
            "I_sections_connected": s.I_sections_connected,
            "R_sections_connected": s.R_sections_connected,
            "R_upper_path_connected": s.R_upper_path_connected,
            "R_lower_path_connected": s.R_lower_path_connected,
            "R_sections_path_connected": s.R_sections_path_connected,
            "nontrivial": nt.nontrivial,
            "componentwise_nontrivial": nt.componentwise,
            "k_nontrivial": nt.k_nontrivial,
            "strongly_nontrivial": nt.strongly_nontrivial,
            "fragile": rb.fragile,
            "flimsy": rb.flimsy,
            "covering_closed_sections": self.covering_closed,
            "dual_representation": self.has_dual,
        }


def topo_report(space: FiniteSpace, r: Relation, k: int = 1) -> TopoPropertyReport:
    """Every space-dependent verdict for ``r``.

    Covering relations and dual representations only make sense for
    asymmetric relations; for anything else those entries are None.
    """
    _check_sizes(space, r)
    asym = is_asymmetric(r)
    dual = dual_representation(space, r) if asym else None
    return TopoPropertyReport(
        continuity(space, r),
        section_connectivity(space, r),
        nontriviality(space, r, k),
        robustness(space, r),
        covering_closed_sections(space, r) if asym else None,
        dual,
        (dual is not None) if asym else None,
    )
