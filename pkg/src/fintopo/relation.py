"""Binary relations on {0..n-1} and their order-theoretic axioms.

A relation is stored by rows: ``rows[x]`` is the upper section R(x) as a
bitmask.  Pair (x, y) is bit ``x * n + y`` of :attr:`Relation.code`, which
fixes the enumeration order.

Sen's conditions use the symmetric part I = R & R^-1 and the asymmetric part
P = R - R^-1:

* T, PP, II: transitivity of R, P, I
* NP: the complement of P is transitive
* PI: y P x and x I z give y P z
* IP: y I x and x P z give y P z
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from .bits import iter_bits, lowest
from .topology import SizeLimit

MAX_UNFILTERED_POINTS = 4
MAX_FILTERED_POINTS = 6


class NotAsymmetric(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair {(x, y)} outside 0..{n - 1}")
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    @classmethod
    def from_code(cls, n: int, code: int) -> "Relation":
        mask = (1 << n) - 1
        return cls(n, tuple((code >> (x * n)) & mask for x in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls(n, (0,) * n)

    @classmethod
    def full(cls, n: int) -> "Relation":
        return cls(n, ((1 << n) - 1,) * n)

    @classmethod
    def diagonal(cls, n: int) -> "Relation":
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def product(cls, n: int, a: int, b: int) -> "Relation":
        """The rectangle a x b."""
        return cls(n, tuple(b if a >> x & 1 else 0 for x in range(n)))

    @cached_property
    def code(self) -> int:
        return sum(r << (x * self.n) for x, r in enumerate(self.rows))

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """``cols[y]`` is the lower section R^-1(y)."""
        out = [0] * self.n
        for x, r in enumerate(self.rows):
            for y in iter_bits(r):
                out[y] |= 1 << x
        return tuple(out)

    def upper(self, x: int) -> int:
        return self.rows[x]

    def lower(self, y: int) -> int:
        return self.cols[y]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        x, y = pair
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x, r in enumerate(self.rows):
            for y in iter_bits(r):
                yield (x, y)

    def __len__(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __or__(self, other: "Relation") -> "Relation":
        return Relation(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __and__(self, other: "Relation") -> "Relation":
        return Relation(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "Relation") -> "Relation":
        return Relation(self.n, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def __le__(self, other: "Relation") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    @cached_property
    def transpose(self) -> "Relation":
        return Relation(self.n, self.cols)

    @cached_property
    def complement(self) -> "Relation":
        full = (1 << self.n) - 1
        return Relation(self.n, tuple(full & ~r for r in self.rows))

    @cached_property
    def sym(self) -> "Relation":
        """Symmetric part I."""
        return self & self.transpose

    @cached_property
    def asym(self) -> "Relation":
        """Asymmetric part P."""
        return self - self.transpose

    def __repr__(self) -> str:
        return f"Relation(n={self.n}, pairs={list(self.pairs())})"


# --- derived relations -----------------------------------------------------


def is_asymmetric(r: Relation) -> bool:
    return all(row & col == 0 for row, col in zip(r.rows, r.cols))


def reflexive_hull(p: Relation) -> Relation:
    """The dual R with (x, y) in R iff (y, x) not in P."""
    if not is_asymmetric(p):
        raise NotAsymmetric("reflexive hull needs an asymmetric relation")
    return p.complement.transpose


def covering_relations(p: Relation) -> tuple[Relation, Relation]:
    """Lower and upper covering relations of the reflexive hull of ``p``.

    Lower: (x, y) iff R^-1(x) is inside R^-1(y).  Upper: (x, y) iff R(y) is
    inside R(x).
    """
    hull = reflexive_hull(p)
    n = p.n
    cols, rows = hull.cols, hull.rows
    lower = Relation(n, tuple(sum(1 << y for y in range(n) if cols[x] & ~cols[y] == 0) for x in range(n)))
    upper = Relation(n, tuple(sum(1 << y for y in range(n) if rows[y] & ~rows[x] == 0) for x in range(n)))
    return lower, upper


@dataclass(frozen=True)
class Parts:
    sym: Relation
    asym: Relation
    transpose: Relation
    complement: Relation
    reflexive_hull: Relation | None
    covering_lower: Relation | None
    covering_upper: Relation | None


def derive_parts(r: Relation) -> Parts:
    """All derived relations; the hull and coverings only for asymmetric input."""
    hull = lower = upper = None
    if is_asymmetric(r):
        hull = reflexive_hull(r)
        lower, upper = covering_relations(r)
    return Parts(r.sym, r.asym, r.transpose, r.complement, hull, lower, upper)


# --- axioms ----------------------------------------------------------------


def _transitivity_witness(rows: tuple[int, ...]) -> tuple[int, int, int] | None:
    for x, rx in enumerate(rows):
        for y in iter_bits(rx):
            bad = rows[y] & ~rx
            if bad:
                return (x, y, lowest(bad))
    return None


def _chain_witness(first: Relation, second: Relation, target: Relation) -> tuple[int, int, int] | None:
    """First (a, b, c) with (a, b) in first, (b, c) in second, (a, c) not in target."""
    for a, ra in enumerate(first.rows):
        for b in iter_bits(ra):
            bad = second.rows[b] & ~target.rows[a]
            if bad:
                return (a, b, lowest(bad))
    return None


PROPERTY_NAMES = (
    "reflexive", "complete", "symmetric", "asymmetric", "antisymmetric",
    "nontrivial", "T", "NP", "PP", "II", "PI", "IP", "semi", "pseudo_dual",
)


@dataclass(frozen=True)
class OrderPropertyVector:
    """Verdicts for the relation-level axioms.

    ``witnesses`` maps each failed property to the lexicographically first
    violating tuple.  Chains for PI/IP and pseudo_dual are given in the order
    they are read (y, x, z) and (x, x', y', y).
    """

    reflexive: bool
    complete: bool
    symmetric: bool
    asymmetric: bool
    antisymmetric: bool
    nontrivial: bool
    T: bool
    NP: bool
    PP: bool
    II: bool
    PI: bool
    IP: bool
    semi: bool
    pseudo_dual: bool
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "witnesses"}


def order_properties(r: Relation) -> OrderPropertyVector:
    n = r.n
    rows, cols = r.rows, r.cols
    i_rel, p_rel = r.sym, r.asym
    w: dict[str, tuple[int, ...]] = {}

    for x in range(n):
        if not rows[x] >> x & 1:
            w["reflexive"] = (x,)
            break
    full = (1 << n) - 1
    for x in range(n):
        gap = full & ~(rows[x] | cols[x])
        if gap:
            w["complete"] = (x, lowest(gap))
            break
    for x in range(n):
        bad = rows[x] & ~cols[x]
        if bad:
            w["symmetric"] = (x, lowest(bad))
            break
    for x in range(n):
        bad = rows[x] & cols[x]
        if bad:
            w["asymmetric"] = (x, lowest(bad))
            break
    for x in range(n):
        bad = rows[x] & cols[x] & ~(1 << x)
        if bad:
            w["antisymmetric"] = (x, lowest(bad))
            break
    if not any(p_rel.rows):
        w["nontrivial"] = ()

    for name, rel in (("T", r), ("PP", p_rel), ("II", i_rel)):
        hit = _transitivity_witness(rel.rows)
        if hit:
            w[name] = hit
    hit = _transitivity_witness(p_rel.complement.rows)
    if hit:
        w["NP"] = hit
    hit = _chain_witness(p_rel, i_rel, p_rel)
    if hit:
        w["PI"] = hit
    hit = _chain_witness(i_rel, p_rel, p_rel)
    if hit:
        w["IP"] = hit
    if "PI" in w or "IP" in w:
        w["semi"] = w.get("PI", w.get("IP"))
    hit = _pseudo_transitivity_witness(p_rel)
    if hit:
        w["pseudo_dual"] = hit

    verdicts = {name: name not in w for name in PROPERTY_NAMES}
    return OrderPropertyVector(**verdicts, witnesses=w)


def _pseudo_transitivity_witness(p: Relation) -> tuple[int, int, int, int] | None:
    """First (x, x', y', y) with x P x', x' R y', y' P y, but not x P y.

    R is the reflexive hull of P: x' R y' iff not y' P x'.
    """
    rows, cols = p.rows, p.cols
    for x in range(p.n):
        for x1 in iter_bits(rows[x]):
            for y1 in range(p.n):
                if rows[y1] >> x1 & 1:
                    continue
                bad = rows[y1] & ~rows[x]
                if bad:
                    return (x, x1, y1, lowest(bad))
    return None


def is_pseudo_transitive(p: Relation) -> bool:
    """Pseudo-transitivity of the reflexive hull of asymmetric ``p``."""
    if not is_asymmetric(p):
        raise NotAsymmetric("pseudo-transitivity is defined for asymmetric relations")
    return _pseudo_transitivity_witness(p) is None


@dataclass(frozen=True)
class Separability:
    separable: bool
    strongly_separable: bool
    witnesses: dict[str, tuple[int, int]] = field(default_factory=dict, compare=False)


def separability(p: Relation) -> Separability:
    """Separability of an asymmetric relation on a finite carrier.

    Any witness drawn from a countable subset is also drawn from the whole
    (finite, hence countable) carrier, so the carrier itself is the best
    candidate set.
    """
    if not is_asymmetric(p):
        raise NotAsymmetric("separability is defined for asymmetric relations")
    rows, cols = p.rows, p.cols
    w: dict[str, tuple[int, int]] = {}
    for x, y in p.pairs():
        if "separable" not in w and not rows[x] & cols[y]:
            w["separable"] = (x, y)
        if "strongly_separable" not in w:
            # need x1 in P(x), y1 in P^-1(y) with not y1 P x1
            if not any(rows[x] & ~rows[y1] for y1 in iter_bits(cols[y])):
                w["strongly_separable"] = (x, y)
        if len(w) == 2:
            break
    return Separability("separable" not in w, "strongly_separable" not in w, w)


# --- enumeration -----------------------------------------------------------

FILTERS = ("complete_antisymmetric", "asymmetric", "complete")


def _pair_codes(n: int) -> list[tuple[int, int]]:
    return [(1 << (x * n + y), 1 << (y * n + x)) for x in range(n) for y in range(x + 1, n)]


def relation_codes(n: int, filter: str | None = None) -> list[int]:
    """Codes of all relations on n points (optionally pre-filtered), ascending."""
    if filter is None:
        if n > MAX_UNFILTERED_POINTS:
            raise SizeLimit(f"unfiltered enumeration supports n <= {MAX_UNFILTERED_POINTS}")
        return list(range(1 << (n * n)))
    if n > MAX_FILTERED_POINTS:
        raise SizeLimit(f"filtered enumeration supports n <= {MAX_FILTERED_POINTS}")
    diag = sum(1 << (x * n + x) for x in range(n))
    pairs = _pair_codes(n)
    if filter == "complete_antisymmetric":
        codes = [diag + sum(c) for c in product(*pairs)]
    elif filter == "asymmetric":
        codes = [sum(c) for c in product(*[(0, a, b) for a, b in pairs])]
    elif filter == "complete":
        codes = [diag + sum(c) for c in product(*[(a, b, a | b) for a, b in pairs])]
    else:
        raise ValueError(f"unknown filter {filter!r}; choose from {FILTERS}")
    return sorted(codes)


def enumerate_relations(n: int, filter: str | None = None) -> Iterator[Relation]:
    for code in relation_codes(n, filter):
        yield Relation.from_code(n, code)
