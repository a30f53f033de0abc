"""Brute-force reference implementations used to cross-check the library.

Everything here works on plain Python sets and tuples and deliberately avoids
the bitmask shortcuts (minimal neighbourhoods, specialization order, matrix
composition) the library relies on.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np


def subsets(points):
    pts = list(points)
    for r in range(len(pts) + 1):
        for c in combinations(pts, r):
            yield frozenset(c)


def is_topology(n: int, family: set[frozenset]) -> bool:
    full = frozenset(range(n))
    if frozenset() not in family or full not in family:
        return False
    return all(a | b in family and a & b in family for a in family for b in family)


def naive_topologies(n: int) -> list[frozenset]:
    """Filter every family of subsets by the axioms."""
    full = frozenset(range(n))
    middle = [s for s in subsets(range(n)) if s and s != full]
    out = []
    for bits in product((0, 1), repeat=len(middle)):
        fam = {frozenset(), full} | {s for s, b in zip(middle, bits) if b}
        if is_topology(n, fam):
            out.append(frozenset(fam))
    return out


def mask_set(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def opens_of(space) -> set[frozenset]:
    return {mask_set(o) for o in space.opens}


def closeds_of(space) -> set[frozenset]:
    full = frozenset(range(space.n))
    return {full - o for o in opens_of(space)}


def subset_connected(opens: set[frozenset], s: frozenset) -> bool:
    """No split of s into two nonempty relatively open pieces."""
    rel = {o & s for o in opens}
    for a in rel:
        if a and a != s and (s - a) in rel:
            return False
    return True


def components(n: int, opens: set[frozenset]) -> list[frozenset]:
    """Maximal connected subsets, by checking every subset."""
    conn = [s for s in subsets(range(n)) if s and subset_connected(opens, s)]
    return [s for s in conn if not any(s < t for t in conn)]


def pairs_of(r) -> set[tuple[int, int]]:
    return set(r.pairs())


def sym(rp):
    return {(x, y) for x, y in rp if (y, x) in rp}


def asym(rp):
    return {(x, y) for x, y in rp if (y, x) not in rp}


def transitive(rel) -> bool:
    return all((x, z) in rel for x, y in rel for y2, z in rel if y == y2)


def order_oracle(n: int, rp: set) -> dict[str, bool]:
    p, i = asym(rp), sym(rp)
    pts = range(n)
    comp = {(x, y) for x in pts for y in pts if (x, y) not in p}
    pi = all((y, z) in p for y, x in p for x2, z in i if x == x2)
    ip = all((y, z) in p for y, x in i for x2, z in p if x == x2)
    dual = {(y, x) for x in pts for y in pts if (x, y) not in p}
    pseudo = all(
        (x, y) in p
        for x, x1 in p for x1b, y1 in dual if x1 == x1b for y1b, y in p if y1 == y1b
    )
    return {
        "reflexive": all((x, x) in rp for x in pts),
        "complete": all((x, y) in rp or (y, x) in rp for x in pts for y in pts),
        "symmetric": rp == {(y, x) for x, y in rp},
        "asymmetric": not any((y, x) in rp for x, y in rp),
        "antisymmetric": all(x == y for x, y in i),
        "nontrivial": bool(p),
        "T": transitive(rp),
        "NP": transitive(comp),
        "PP": transitive(p),
        "II": transitive(i),
        "PI": pi,
        "IP": ip,
        "semi": pi and ip,
        "pseudo_dual": pseudo,
    }


def upper(rel, x):
    return frozenset(y for a, y in rel if a == x)


def lower(rel, y):
    return frozenset(x for x, b in rel if b == y)


def continuity_oracle(space, r) -> dict[str, bool]:
    return continuity_of_pairs(space, pairs_of(r))


def continuity_of_pairs(space, rp: set) -> dict[str, bool]:
    n = space.n
    p = asym(rp)
    op, cl = opens_of(space), closeds_of(space)
    return {
        "closed_upper_R": all(upper(rp, x) in cl for x in range(n)),
        "closed_lower_R": all(lower(rp, x) in cl for x in range(n)),
        "open_upper_P": all(upper(p, x) in op for x in range(n)),
        "open_lower_P": all(lower(p, x) in op for x in range(n)),
    }


def section_oracle(space, r) -> dict[str, bool]:
    """Finite spaces: a subspace is path-connected iff it is connected."""
    n = space.n
    rp = pairs_of(r)
    op = opens_of(space)
    ups = [upper(rp, x) for x in range(n)]
    lows = [lower(rp, x) for x in range(n)]
    i = sym(rp)
    return {
        "I_sections_connected": all(subset_connected(op, upper(i, x)) for x in range(n)),
        "R_sections_connected": all(subset_connected(op, s) for s in ups + lows),
        "R_upper_path_connected": all(subset_connected(op, s) for s in ups),
        "R_lower_path_connected": all(subset_connected(op, s) for s in lows),
    }


def robustness_oracle(space, r) -> dict[str, bool]:
    """Quantify over every open U containing x and every open V containing y."""
    n = space.n
    rp = pairs_of(r)
    p = asym(rp)
    op = opens_of(space)
    comparable = rp | {(y, x) for x, y in rp}

    def nbhds(x):
        return [u for u in op if x in u]

    def every_box(x, y, pred):
        return all(any(pred(a, b) for a in u for b in v) for u in nbhds(x) for v in nbhds(y))

    fragile = any(every_box(x, y, lambda a, b: (a, b) not in comparable) for x, y in p)
    flimsy = any(
        every_box(x, y, lambda a, b: (a, b) in comparable)
        for x in range(n) for y in range(n) if (x, y) not in comparable
    )
    return {"fragile": fragile, "flimsy": flimsy}


def separability_oracle(n: int, p: set) -> dict[str, bool]:
    sep = all(any((x, z) in p and (z, y) in p for z in range(n)) for x, y in p)
    strong = all(
        any((x, x1) in p and (y1, y) in p and (y1, x1) not in p for x1 in range(n) for y1 in range(n))
        for x, y in p
    )
    return {"separable": sep, "strongly_separable": strong}


def dual_exists_oracle(space, r) -> bool:
    """Grid search for component-constant u, v with x P y iff u(x) < v(y).

    A continuous real function on a finite space is constant on components,
    and 2m distinct levels are enough for 2m unknowns.
    """
    comps = components(space.n, opens_of(space))
    m = len(comps)
    block = {x: j for j, c in enumerate(comps) for x in c}
    rp = pairs_of(r)
    levels = np.arange(2 * m)
    grid = np.stack(np.meshgrid(*([levels] * (2 * m)), indexing="ij"), -1).reshape(-1, 2 * m)
    ok = np.ones(len(grid), dtype=bool)
    for x in range(space.n):
        for y in range(space.n):
            lt = grid[:, block[x]] < grid[:, m + block[y]]
            ok &= lt if (x, y) in rp else ~lt
    return bool(ok.any())


def quasi_ordered_oracle(space) -> bool:
    n = space.n
    pts = range(n)
    pairs = [(x, y) for x in pts for y in pts if x < y]
    for choice in product((0, 1), repeat=len(pairs)):
        rp = {(x, x) for x in pts}
        for (x, y), c in zip(pairs, choice):
            rp.add((x, y) if c else (y, x))
        if all(continuity_of_pairs(space, rp).values()):
            return True
    return False
