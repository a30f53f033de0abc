import pytest
from hypothesis import given
import hypothesis.strategies as st

import oracles
from conftest import relations
from fintopo.relation import (
    NotAsymmetric, Relation, covering_relations, derive_parts, enumerate_relations, is_asymmetric,
    is_pseudo_transitive, order_properties, reflexive_hull, relation_codes, separability,
)
from fintopo.topology import SizeLimit


@pytest.mark.parametrize("n", [1, 2, 3])
def test_order_properties_match_pairwise_loops(n):
    for r in enumerate_relations(n):
        assert order_properties(r).as_dict() == oracles.order_oracle(n, oracles.pairs_of(r))


@given(relations(4, 4))
def test_order_properties_match_pairwise_loops_n4(r):
    assert order_properties(r).as_dict() == oracles.order_oracle(4, oracles.pairs_of(r))


@given(relations())
def test_witnesses_are_genuine(r):
    v = order_properties(r)
    rp = oracles.pairs_of(r)
    p, i = oracles.asym(rp), oracles.sym(rp)
    for name, w in v.witnesses.items():
        assert not getattr(v, name)
        if name in ("T", "PP", "II"):
            rel = {"T": rp, "PP": p, "II": i}[name]
            x, y, z = w
            assert (x, y) in rel and (y, z) in rel and (x, z) not in rel
        elif name == "NP":
            x, y, z = w
            assert (x, y) not in p and (y, z) not in p and (x, z) in p
        elif name == "PI":
            y, x, z = w
            assert (y, x) in p and (x, z) in i and (y, z) not in p
        elif name == "IP":
            y, x, z = w
            assert (y, x) in i and (x, z) in p and (y, z) not in p
        elif name == "complete":
            x, y = w
            assert (x, y) not in rp and (y, x) not in rp


@given(relations())
def test_transitivity_splits_into_sen_conditions(r):
    v = order_properties(r)
    assert v.T == (v.PP and v.PI and v.IP and v.II)
    if v.NP:
        assert v.PP and v.PI and v.IP


@given(relations())
def test_parts_decompose(r):
    assert r.sym | r.asym == r
    assert r.sym & r.asym == Relation.empty(r.n)
    assert r.transpose.transpose == r
    assert r.complement | r == Relation.full(r.n)
    assert Relation.from_code(r.n, r.code) == r
    assert Relation.from_pairs(r.n, r.pairs()) == r
    parts = derive_parts(r)
    assert (parts.reflexive_hull is None) == (not is_asymmetric(r))


@given(relations())
def test_separability_matches_subset_search(r):
    p = r.asym
    got = separability(p)
    expect = oracles.separability_oracle(p.n, oracles.pairs_of(p))
    assert {"separable": got.separable, "strongly_separable": got.strongly_separable} == expect
    for x, y in got.witnesses.values():
        assert (x, y) in p


@given(relations())
def test_hull_and_coverings(r):
    p = r.asym
    hull = reflexive_hull(p)
    assert all(((x, y) in hull) == ((y, x) not in p) for x in range(p.n) for y in range(p.n))
    lower, upper = covering_relations(p)
    hp = oracles.pairs_of(hull)
    for x in range(p.n):
        for y in range(p.n):
            assert ((x, y) in lower) == (oracles.lower(hp, x) <= oracles.lower(hp, y))
            assert ((x, y) in upper) == (oracles.upper(hp, y) <= oracles.upper(hp, x))


def test_non_asymmetric_input_raises():
    r = Relation.full(2)
    with pytest.raises(NotAsymmetric):
        separability(r)
    with pytest.raises(NotAsymmetric):
        is_pseudo_transitive(r)


@pytest.mark.parametrize("n,filt,count", [
    (3, None, 512), (3, "complete_antisymmetric", 8), (3, "asymmetric", 27), (3, "complete", 27),
    (4, "complete_antisymmetric", 64), (4, "asymmetric", 729),
])
def test_relation_code_counts(n, filt, count):
    codes = relation_codes(n, filt)
    assert len(codes) == count and codes == sorted(set(codes))


@given(st.integers(2, 4), st.sampled_from(["complete_antisymmetric", "asymmetric", "complete"]))
def test_filters_select_exactly(n, filt):
    chosen = set(relation_codes(n, filt))
    pred = {
        "complete_antisymmetric": lambda v: v.complete and v.antisymmetric,
        "asymmetric": lambda v: v.asymmetric,
        "complete": lambda v: v.complete,
    }[filt]
    if n <= 3:
        assert chosen == {c for c in range(1 << n * n) if pred(order_properties(Relation.from_code(n, c)))}
    else:
        assert all(pred(order_properties(Relation.from_code(n, c))) for c in chosen)


def test_size_limits():
    with pytest.raises(SizeLimit):
        relation_codes(5)
    with pytest.raises(ValueError):
        relation_codes(3, "bogus")
    with pytest.raises(ValueError):
        Relation.from_pairs(2, [(0, 2)])
