import pytest
from hypothesis import given

import oracles
from conftest import space_relations
from fintopo import toporel
from fintopo.relation import NotAsymmetric, Relation, enumerate_relations, order_properties
from fintopo.topology import discrete_space, indiscrete_space, new_space, topologies


@given(space_relations())
def test_continuity_matches_set_oracle(sr):
    space, r = sr
    c = toporel.continuity(space, r)
    got = {k: getattr(c, k) for k in ("closed_upper_R", "closed_lower_R", "open_upper_P", "open_lower_P")}
    assert got == oracles.continuity_oracle(space, r)
    for name, x in c.witnesses.items():
        assert not got[name] and 0 <= x < space.n


@given(space_relations())
def test_section_connectivity_matches_set_oracle(sr):
    space, r = sr
    s = toporel.section_connectivity(space, r)
    got = {k: getattr(s, k) for k in ("I_sections_connected", "R_sections_connected",
                                       "R_upper_path_connected", "R_lower_path_connected")}
    assert got == oracles.section_oracle(space, r)


@given(space_relations())
def test_robustness_matches_every_neighbourhood(sr):
    space, r = sr
    rb = toporel.robustness(space, r)
    assert {"fragile": rb.fragile, "flimsy": rb.flimsy} == oracles.robustness_oracle(space, r)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_representation_matches_grid_search(n):
    for space in topologies(n):
        for p in enumerate_relations(n, "asymmetric"):
            rep = toporel.dual_representation(space, p)
            assert (rep is not None) == oracles.dual_exists_oracle(space, p)
            if rep is not None:
                assert all((rep.u(x) < rep.v(y)) == ((x, y) in p) for x in range(n) for y in range(n))


@given(space_relations())
def test_dual_values_constant_on_components(sr):
    space, r = sr
    rep = toporel.dual_representation(space, r.asym)
    if rep is not None:
        for block in space.components.blocks:
            pts = [x for x in range(space.n) if block >> x & 1]
            assert len({rep.u(x) for x in pts}) == 1 and len({rep.v(x) for x in pts}) == 1


def test_inequality_system_cycle_is_infeasible():
    sys_ = toporel.InequalitySystem(1, strict={(0, 1)}, weak={(1, 0)})
    assert sys_.solve() is None
    assert toporel.InequalitySystem(1, strict={(0, 1)}).solve() == [0, 1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quasi_ordered_matches_oracle(n):
    for space in topologies(n):
        assert toporel.is_quasi_ordered(space) == oracles.quasi_ordered_oracle(space)


def test_quasi_ordered_finite_spaces_are_discrete():
    for n in (1, 2, 3, 4):
        for space in topologies(n):
            assert toporel.is_quasi_ordered(space) == (len(space.opens) == 1 << n)


@given(space_relations())
def test_k_nontrivial_at_component_count_is_componentwise(sr):
    space, r = sr
    m = len(space.components)
    assert toporel.is_k_nontrivial(space, r, m) == toporel.is_componentwise_nontrivial(space, r)


@given(space_relations())
def test_one_nontrivial_is_nontrivial(sr):
    space, r = sr
    assert toporel.is_k_nontrivial(space, r, 1) == order_properties(r).nontrivial


@given(space_relations())
def test_strong_nontriviality_implies_nontriviality(sr):
    _, r = sr
    if toporel.is_strongly_nontrivial(r):
        assert order_properties(r).nontrivial


def test_k_out_of_range():
    d = discrete_space(2)
    with pytest.raises(toporel.KOutOfRange):
        toporel.is_k_nontrivial(d, Relation.empty(2), 3)
    with pytest.raises(toporel.KOutOfRange):
        toporel.is_k_nontrivial(d, Relation.empty(2), 0)
    with pytest.raises(toporel.SizeMismatch):
        toporel.continuity(d, Relation.empty(3))


def test_dual_rejects_non_asymmetric():
    with pytest.raises(NotAsymmetric):
        toporel.dual_representation(discrete_space(2), Relation.full(2))


@given(space_relations())
def test_report_matches_components(sr):
    space, r = sr
    rep = toporel.topo_report(space, r)
    v = rep.verdicts()
    assert v["continuous"] == toporel.is_continuous(space, r)
    assert v["continuous"] == all(oracles.continuity_oracle(space, r).values())
    assert v["R_sections_path_connected"] == (v["R_upper_path_connected"] and v["R_lower_path_connected"])
    asym = order_properties(r).asymmetric
    assert (v["dual_representation"] is None) == (not asym)
    assert (v["covering_closed_sections"] is None) == (not asym)


@given(space_relations())
def test_lemma1_violation_is_genuine(sr):
    space, r = sr
    hit = toporel.lemma1_violation(space, r)
    if hit is not None:
        x, y, z = hit
        assert (x, y) in r.asym
        assert (x, z) not in r.asym and (z, y) not in r.asym


@given(space_relations())
def test_quotient_by_indifference(sr):
    space, r = sr
    out = toporel.quotient_by_indifference(space, r)
    eq = order_properties(r.sym).as_dict()
    is_equiv = eq["reflexive"] and eq["T"]
    assert (out is not None) == is_equiv
    if out is not None:
        q, qr = out
        assert q.n == qr.n == len(toporel.indifference_classes(r))


def test_indiscrete_space_continuity():
    i = indiscrete_space(3)
    assert toporel.is_continuous(i, Relation.full(3))
    assert toporel.is_continuous(i, Relation.empty(3))
    assert not toporel.is_continuous(i, Relation.diagonal(3))


def test_sierpinski_is_flimsy_not_fragile():
    s = new_space(2, [0, 1, 3])
    rb = toporel.robustness(s, Relation.diagonal(2))
    assert rb.flimsy and not rb.fragile
