"""Finite topological spaces on points {0..n-1}.

Subsets are int bitmasks and a topology is the set of its open masks.  On a
finite carrier every point ``p`` has a smallest open neighbourhood ``U_p`` (the
intersection of all opens containing it), and most of the machinery below is
driven by those minimal neighbourhoods or by the closed family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .bits import iter_bits, iter_submasks, lowest

MAX_POINTS = 8
MAX_EXHAUSTIVE_POINTS = 5


class AxiomViolation(ValueError):
    """The proposed open-set family is not a topology."""

    def __init__(self, kind: str, witness: tuple[int, ...] = ()):
        self.kind = kind
        self.witness = witness
        super().__init__(f"{kind}: {witness}" if witness else kind)


class TooFewComponents(ValueError):
    pass


class EmptyInput(ValueError):
    pass


class PointInSeparator(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


class SizeLimit(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Pairwise disjoint, nonempty blocks covering the point set."""

    blocks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.blocks)

    def block_of(self, p: int) -> int:
        for i, b in enumerate(self.blocks):
            if b >> p & 1:
                return i
        raise KeyError(p)

    def labels(self, n: int) -> tuple[int, ...]:
        """Block index of every point."""
        out = [0] * n
        for i, b in enumerate(self.blocks):
            for p in iter_bits(b):
                out[p] = i
        return tuple(out)


def make_partition(n: int, blocks: Iterable[int]) -> Partition:
    """Validate ``blocks`` and return them ordered by smallest point."""
    full = (1 << n) - 1
    seen = 0
    out = []
    for b in blocks:
        if b == 0:
            raise InvalidPartition("empty block")
        if b & ~full:
            raise InvalidPartition(f"block {b:#x} has points outside 0..{n - 1}")
        if b & seen:
            raise InvalidPartition(f"block {b:#x} overlaps an earlier block")
        seen |= b
        out.append(b)
    if seen != full:
        raise InvalidPartition("blocks do not cover the point set")
    return Partition(tuple(sorted(out, key=lowest)))


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    """A topology on ``n`` points given by its open masks.

    The constructor does not check the axioms; use :func:`new_space` for
    untrusted input.
    """

    n: int
    opens: frozenset[int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.n == other.n and self.opens == other.opens

    def __hash__(self) -> int:
        return hash((self.n, self.opens))

    def __repr__(self) -> str:
        return f"FiniteSpace(n={self.n}, opens={sorted(self.opens)})"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def closeds(self) -> frozenset[int]:
        full = self.full
        return frozenset(full ^ u for u in self.opens)

    @cached_property
    def code(self) -> int:
        """Family encoding: bit S is set iff S is open."""
        return sum(1 << u for u in self.opens)

    @cached_property
    def minimal_opens(self) -> tuple[int, ...]:
        out = []
        for p in range(self.n):
            m = self.full
            for u in self.opens:
                if u >> p & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    @cached_property
    def clopens(self) -> frozenset[int]:
        return self.opens & self.closeds

    def is_open(self, s: int) -> bool:
        return s in self.opens

    def is_closed(self, s: int) -> bool:
        return s in self.closeds

    def closure(self, s: int) -> int:
        return closure(self, s)

    def interior(self, s: int) -> int:
        return interior(self, s)

    @cached_property
    def components(self) -> Partition:
        return components(self)

    @cached_property
    def component_of(self) -> tuple[int, ...]:
        """Component index for each point."""
        return self.components.labels(self.n)

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def is_k_connected(self, k: int) -> bool:
        return len(self.components) <= k


def new_space(n: int, opens: Iterable[int]) -> FiniteSpace:
    """Validate a family of open masks and build the space.

    The family is stored as given; nothing is added to complete it.
    """
    if not 1 <= n <= MAX_POINTS:
        raise SizeLimit(f"n={n} outside 1..{MAX_POINTS}")
    full = (1 << n) - 1
    family = frozenset(opens)
    for u in sorted(family):
        if u < 0 or u & ~full:
            raise AxiomViolation("subset outside point set", (u,))
    if 0 not in family:
        raise AxiomViolation("missing empty set")
    if full not in family:
        raise AxiomViolation("missing full set")
    ordered = sorted(family)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if u | v not in family:
                raise AxiomViolation("union gap", (u, v))
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if u & v not in family:
                raise AxiomViolation("intersection gap", (u, v))
    return FiniteSpace(n, family)


def discrete_space(n: int) -> FiniteSpace:
    return FiniteSpace(n, frozenset(range(1 << n)))


def indiscrete_space(n: int) -> FiniteSpace:
    return FiniteSpace(n, frozenset({0, (1 << n) - 1}))


def space_from_minimal_opens(n: int, mins: Sequence[int]) -> FiniteSpace:
    """Alexandrov topology whose opens are the sets containing U_p for each member p."""
    opens = []
    for s in range(1 << n):
        if all(mins[p] & ~s == 0 for p in iter_bits(s)):
            opens.append(s)
    return FiniteSpace(n, frozenset(opens))


def closure(space: FiniteSpace, s: int) -> int:
    """Smallest closed superset of ``s``."""
    out = space.full
    for f in space.closeds:
        if s & ~f == 0:
            out &= f
    return out


def interior(space: FiniteSpace, s: int) -> int:
    """Largest open subset of ``s``."""
    out = 0
    for u in space.opens:
        if u & ~s == 0:
            out |= u
    return out


def components(space: FiniteSpace) -> Partition:
    """Components as the atoms of the clopen algebra.

    A finite space has finitely many components, each closed, so each is also
    open; the component of p is therefore the intersection of the clopens
    containing p.
    """
    clopens = space.clopens
    blocks = []
    left = space.full
    while left:
        p = lowest(left)
        block = space.full
        for c in clopens:
            if c >> p & 1:
                block &= c
        blocks.append(block)
        left &= ~block
    return Partition(tuple(blocks))


def subspace_components(space: FiniteSpace, s: int) -> list[int]:
    """Components of the subspace ``s`` (traces of opens on ``s``).

    The minimal open neighbourhood of p in the subspace is ``U_p & s``; two
    points lie in one component iff they are linked by a chain of such
    neighbourhood memberships.
    """
    mins = space.minimal_opens
    out = []
    left = s
    while left:
        start = lowest(left)
        comp = 1 << start
        frontier = comp
        while frontier:
            p = lowest(frontier)
            frontier &= frontier - 1
            nbrs = mins[p] & s
            for q in iter_bits(left & ~comp):
                if mins[q] >> p & 1:
                    nbrs |= 1 << q
            new = nbrs & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        left &= ~comp
    return out


def is_connected_subset(space: FiniteSpace, s: int) -> bool:
    """Connectedness of ``s`` as a subspace; the empty set counts as connected."""
    return s == 0 or len(subspace_components(space, s)) == 1


def clopen_partition(space: FiniteSpace, k: int) -> list[int]:
    """``k`` disjoint clopen sets covering the space, grouped from components."""
    blocks = space.components.blocks
    if k < 1 or len(blocks) < k:
        raise TooFewComponents(f"{len(blocks)} components, need {k}")
    head = list(blocks[: k - 1])
    tail = 0
    for b in blocks[k - 1:]:
        tail |= b
    return head + [tail]


def separated(space: FiniteSpace, a: int, b: int) -> bool:
    if a == 0 or b == 0:
        raise EmptyInput("separated() needs nonempty sets")
    return closure(space, a) & b == 0 and a & closure(space, b) == 0


def separates(space: FiniteSpace, s: int, x: int, y: int) -> bool:
    """Whether removing ``s`` puts x and y in different components."""
    if (s >> x & 1) or (s >> y & 1):
        raise PointInSeparator(f"{x} or {y} lies in the separator")
    for comp in subspace_components(space, space.full & ~s):
        if comp >> x & 1:
            return not comp >> y & 1
    raise AssertionError("unreachable")


def pbp_violation(space: FiniteSpace) -> tuple[int, int, int, int] | None:
    """First (A, B, x, y) breaking the Phragmen-Brouwer property, else None.

    Quantifies over separated pairs of nonempty open sets; candidate
    separators are all subsets of the complement of A|B that are connected in
    the subspace topology, the empty set included.
    """
    full = space.full
    opens = sorted(u for u in space.opens if u)
    labels_cache: dict[int, tuple[int, ...]] = {}

    def comp_labels(s: int) -> tuple[int, ...]:
        lab = labels_cache.get(s)
        if lab is None:
            lab_list = [-1] * space.n
            for i, c in enumerate(subspace_components(space, full & ~s)):
                for p in iter_bits(c):
                    lab_list[p] = i
            lab = labels_cache[s] = tuple(lab_list)
        return lab

    for a in opens:
        for b in opens:
            if a & b or not separated(space, a, b):
                continue
            rest = full & ~(a | b)
            seps = [s for s in iter_submasks(rest) if is_connected_subset(space, s)]
            for x in iter_bits(a):
                for y in iter_bits(b):
                    if not any(comp_labels(s)[x] != comp_labels(s)[y] for s in seps):
                        return (a, b, x, y)
    return None


def has_pbp(space: FiniteSpace) -> bool:
    return pbp_violation(space) is None


def specialization(space: FiniteSpace) -> tuple[int, ...]:
    """Row x holds every y with x in the closure of {y}."""
    n = space.n
    cl = [closure(space, 1 << y) for y in range(n)]
    return tuple(sum(1 << y for y in range(n) if cl[y] >> x & 1) for x in range(n))


def path_components_of(space: FiniteSpace, s: int) -> list[int]:
    """Path components of the subspace ``s``.

    Computed as connected pieces of the comparability graph of the
    specialization preorder restricted to ``s`` (a closure-based route,
    independent of the neighbourhood walk used by subspace_components).
    """
    spec = specialization(space)
    out = []
    left = s
    while left:
        comp = 1 << lowest(left)
        grow = True
        while grow:
            grow = False
            for x in iter_bits(left & ~comp):
                above = spec[x] & comp
                below = any(spec[c] >> x & 1 for c in iter_bits(comp))
                if above or below:
                    comp |= 1 << x
                    grow = True
        out.append(comp)
        left &= ~comp
    return out


def path_components(space: FiniteSpace) -> Partition:
    return Partition(tuple(path_components_of(space, space.full)))


def is_path_connected_subset(space: FiniteSpace, s: int) -> bool:
    return s == 0 or len(path_components_of(space, s)) == 1


def quotient_space(space: FiniteSpace, partition: Partition | Sequence[int]) -> FiniteSpace:
    """Quotient topology: a set of blocks is open iff its preimage is open."""
    blocks = make_partition(space.n, partition).blocks
    m = len(blocks)
    opens = []
    for sel in range(1 << m):
        pre = 0
        for i in iter_bits(sel):
            pre |= blocks[i]
        if pre in space.opens:
            opens.append(sel)
    return FiniteSpace(m, frozenset(opens))


def is_hausdorff(space: FiniteSpace) -> bool:
    """On a finite carrier, Hausdorff means every singleton is open."""
    return all(1 << p in space.opens for p in range(space.n))


# --- enumeration -----------------------------------------------------------


def _extend_preorders(prev: list[tuple[int, ...]], m: int) -> list[tuple[int, ...]]:
    """Add point ``m`` to every preorder on {0..m-1}.

    A preorder is stored as minimal neighbourhoods ``U_p`` (p <= q iff q in
    U_p).  The new point picks an up-set ``up`` (its neighbourhood minus
    itself) and a down-set ``down`` (points whose neighbourhood gains it);
    transitivity through the new point needs every d in ``down`` below every
    u in ``up``.
    """
    out = []
    full = (1 << m) - 1
    for mins in prev:
        up_sets = [s for s in range(full + 1) if all(mins[p] & ~s == 0 for p in iter_bits(s))]
        down_sets = [s for s in range(full + 1)
                     if all(s >> q & 1 for p in iter_bits(s) for q in range(m) if mins[q] >> p & 1)]
        for down in down_sets:
            for up in up_sets:
                if any(up & ~mins[d] for d in iter_bits(down)):
                    continue
                new_mins = [mins[p] | ((up | (1 << m)) if down >> p & 1 else 0) for p in range(m)]
                new_mins.append(up | (1 << m))
                out.append(tuple(new_mins))
    return out


@lru_cache(maxsize=None)
def _topologies(n: int) -> tuple[FiniteSpace, ...]:
    level: list[tuple[int, ...]] = [()]
    for m in range(n):
        level = _extend_preorders(level, m)
    spaces = [space_from_minimal_opens(n, mins) for mins in level]
    spaces.sort(key=lambda s: s.code)
    return tuple(spaces)


def count_topologies(n: int) -> int:
    return len(topologies(n))


def topologies(n: int) -> tuple[FiniteSpace, ...]:
    if not 1 <= n <= MAX_EXHAUSTIVE_POINTS:
        raise SizeLimit(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_POINTS}")
    return _topologies(n)


def enumerate_topologies(n: int, start: int = 0, stop: int | None = None) -> Iterator[FiniteSpace]:
    """Every labeled topology on n points, ordered by family encoding.

    ``start``/``stop`` slice the stream so callers can shard it.
    """
    yield from topologies(n)[start:stop]
