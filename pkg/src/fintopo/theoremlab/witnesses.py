"""The backward-direction relations built in the equivalence proofs.

Every construction returns a relation together with the list of
properties its proof claims for it; ``post_check`` evaluates them.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..relation import Relation, order_properties
from ..topology import FiniteSpace, clopen_partition
from .. import toporel


class PreconditionUnmet(ValueError):
    pass


class UnknownConstruction(KeyError):
    pass


@dataclass(frozen=True)
class Witness:
    construction: str
    relation: Relation
    claims: tuple[str, ...]
    k: int = 1
    reference: Relation | None = None


def _blocks(space: FiniteSpace, m: int, what: str) -> list[int]:
    if len(space.components) < m:
        raise PreconditionUnmet(f"{what} needs at least {m} components, space has {len(space.components)}")
    return clopen_partition(space, m)


def chain(space: FiniteSpace, k: int | None = None) -> Witness:
    """Union of Y_i x Y_j over i < j for a clopen partition into k + 1 blocks."""
    if k is None:
        k = len(space.components) - 1
    if k < 1:
        raise PreconditionUnmet("chain needs k >= 1")
    ys = _blocks(space, k + 1, "chain")
    r = Relation.empty(space.n)
    for i in range(len(ys)):
        for j in range(i + 1, len(ys)):
            r = r | Relation.product(space.n, ys[i], ys[j])
    return Witness("chain", r, ("antisymmetric", "T", "continuous", "k_nontrivial", "!complete"), k)


def product(space: FiniteSpace) -> Witness:
    """Y x Y^c for a proper nonempty clopen Y."""
    y, rest = _blocks(space, 2, "product")
    r = Relation.product(space.n, y, rest)
    return Witness("product", r, ("antisymmetric", "T", "continuous", "k_nontrivial", "!complete"), 1)


def _quasi_order(space: FiniteSpace) -> Relation:
    q = toporel.quasi_order_witness(space)
    if q is None:
        raise PreconditionUnmet("space is not quasi-ordered")
    return q


def _restrict(q: Relation, block: int) -> Relation:
    return q & Relation.product(q.n, block, block)


def cyclic(space: FiniteSpace, q: Relation | None = None) -> Witness:
    """Q inside three clopen blocks, then Y1 -> Y2 -> Y3 -> Y1 between them."""
    y1, y2, y3 = _blocks(space, 3, "cyclic")
    if q is None:
        q = _quasi_order(space)
    n = space.n
    r = _restrict(q, y1) | _restrict(q, y2) | _restrict(q, y3)
    r = r | Relation.product(n, y1, y2) | Relation.product(n, y2, y3) | Relation.product(n, y3, y1)
    return Witness("cyclic", r, ("complete", "antisymmetric", "closed_R", "continuous", "!T"), reference=q)


def cross(space: FiniteSpace) -> Witness:
    """X x Y^c: strongly non-trivial, transitive, yet incomplete."""
    y, rest = _blocks(space, 2, "cross")
    r = Relation.product(space.n, space.full, rest)
    return Witness(
        "cross", r,
        ("strongly_nontrivial", "T", "closed_upper_R", "NP", "open_upper_P", "!complete"),
    )


def flip(space: FiniteSpace, q: Relation | None = None) -> Witness:
    """Keep Q inside Y and Y^c, orient every cross pair from Y to Y^c.

    Y is swapped with its complement if needed so that Q has some pair
    running from Y^c into Y; the result then differs from Q and from its
    transpose whenever there are more than two points.
    """
    y, rest = _blocks(space, 2, "flip")
    if q is None:
        q = _quasi_order(space)
    if not any(q.rows[b] & y for b in range(space.n) if rest >> b & 1):
        y, rest = rest, y
    r = _restrict(q, y) | _restrict(q, rest) | Relation.product(space.n, y, rest)
    claims = ("complete", "antisymmetric", "continuous", "differs_from_reference")
    if space.n > 2:
        claims += ("not_inverse_of_reference",)
    return Witness("flip", r, claims, reference=q)


def dual(space: FiniteSpace) -> Witness:
    """P = Y x Y^c: dual representation by the indicator of Y^c, not strongly separable."""
    y, rest = _blocks(space, 2, "dual")
    p = Relation.product(space.n, y, rest)
    return Witness("dual", p, ("asymmetric", "dual_rep", "!strongly_separable"))


CONSTRUCTIONS = {
    "chain": chain,
    "product": product,
    "cyclic": cyclic,
    "cross": cross,
    "flip": flip,
    "dual": dual,
}


def witness(space: FiniteSpace, construction: str, **kw) -> Witness:
    try:
        fn = CONSTRUCTIONS[construction]
    except KeyError:
        raise UnknownConstruction(construction) from None
    return fn(space, **kw)


def verdict(space: FiniteSpace, w: Witness, prop: str) -> bool:
    r = w.relation
    if prop == "k_nontrivial":
        return toporel.is_k_nontrivial(space, r, w.k)
    if prop == "differs_from_reference":
        return r != w.reference
    if prop == "not_inverse_of_reference":
        return r != w.reference.transpose
    from .atoms import Ctx, value

    return value(prop, Ctx(space, r))


def post_check(space: FiniteSpace, w: Witness) -> dict[str, bool]:
    """Each claimed property mapped to whether it holds."""
    out = {}
    for claim in w.claims:
        negate = claim.startswith("!")
        got = verdict(space, w, claim.lstrip("!"))
        out[claim] = got != negate
    return out


@dataclass(frozen=True)
class SweepReport:
    checked: dict[str, int]
    failures: tuple[tuple[str, int, int, dict], ...]


def sweep(max_n: int = 4) -> SweepReport:
    """Post-check the constructions on every space where they apply.

    chain and product run on every disconnected space, cross and dual on
    every disconnected space too; cyclic and flip on every discrete space
    with at least three points.
    """
    from ..topology import topologies

    checked: dict[str, int] = {}
    failures = []
    for n in range(1, max_n + 1):
        for idx, space in enumerate(topologies(n)):
            names: list[str] = []
            if len(space.components) >= 2:
                names += ["chain", "product", "cross", "dual"]
            if n >= 3 and len(space.opens) == 1 << n:
                names += ["cyclic", "flip"]
            for name in names:
                w = witness(space, name)
                result = post_check(space, w)
                checked[name] = checked.get(name, 0) + 1
                if not all(result.values()):
                    failures.append((name, n, idx, result))
    return SweepReport(checked, tuple(failures))
