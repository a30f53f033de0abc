import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import space_relations
from fintopo.relation import Relation
from fintopo.theoremlab import atoms, catalog, expr, fixtures, harness, search, witnesses
from fintopo.theoremlab.table import VECTOR_PAIR_ATOMS, SpaceVectors, relation_table
from fintopo.topology import SizeLimit, discrete_space, topologies


# --- formulas ----------------------------------------------------------------


def test_parse_precedence():
    node = expr.parse("a & b | c -> d <-> e")
    assert expr.to_text(node) == expr.to_text(expr.parse("(((a & b) | c) -> d) <-> e"))
    assert expr.atoms(expr.parse("b -> a & b")) == ["b", "a"]
    imp = expr.parse("a -> b -> c")
    assert isinstance(imp, expr.BinOp) and isinstance(imp.right, expr.BinOp)


@pytest.mark.parametrize("bad", ["", "a &", "(a", "a b", "a $ b", "->"])
def test_parse_errors(bad):
    with pytest.raises(expr.ExprError):
        expr.parse(bad)


@given(st.lists(st.booleans(), min_size=3, max_size=3))
def test_evaluate_truth_table(vals):
    env = dict(zip("abc", vals))
    a, b, c = vals
    cases = {
        "!a": not a,
        "a & b | c": (a and b) or c,
        "a -> b": (not a) or b,
        "a <-> !b": a == (not b),
        "a -> b -> c": (not a) or ((not b) or c),
        "true & !false": True,
    }
    for text, want in cases.items():
        got = expr.evaluate(expr.parse(text), lambda n: {"true": True, "false": False}.get(n, env.get(n)))
        assert got == want


def test_to_text_round_trips():
    for c in catalog.CLAIMS:
        node = expr.parse(c.conclusion)
        assert expr.parse(expr.to_text(node)) == node


# --- catalog -------------------------------------------------------------------


def test_catalog_is_valid():
    catalog.validate_catalog()
    ids = catalog.claim_ids()
    assert len(ids) == len(set(ids))
    assert catalog.get_claim("T1.a→b").id == "T1.a->b"
    with pytest.raises(catalog.UnknownClaim):
        catalog.get_claim("nope")


def test_manifest_is_plain_data():
    import json
    doc = json.dumps(catalog.manifest(), sort_keys=True)
    assert "P3.vac" in doc


def test_unknown_atom():
    with pytest.raises(atoms.UnknownAtom):
        atoms.get("bogus")


# --- vectorized route against the scalar route ------------------------------------


@given(space_relations(max_n=3))
def test_vector_pair_atoms_agree_with_scalar(sr):
    space, r = sr
    table = relation_table(space.n)
    vec = SpaceVectors(space, table)
    idx = r.code
    assert table.codes[idx] == r.code
    ctx = atoms.Ctx(space, r)
    for name in VECTOR_PAIR_ATOMS:
        assert bool(vec[name][idx]) == atoms.value(name, ctx), name


@given(space_relations(max_n=3))
def test_table_flags_agree_with_scalar(sr):
    space, r = sr
    table = relation_table(space.n)
    ctx = atoms.Ctx(space, r)
    for name, flags in table.flags.items():
        assert bool(flags[r.code]) == atoms.value(name, ctx), name


@pytest.mark.parametrize("claim_id", catalog.claim_ids())
def test_vectorized_and_scalar_verification_agree(claim_id):
    a = harness.verify(claim_id, 3, vectorized=False)
    b = harness.verify(claim_id, 3)
    assert a.as_dict() == b.as_dict()


@pytest.mark.parametrize("claim_id", catalog.claim_ids())
def test_shard_count_invariance(claim_id):
    base = harness.verify(claim_id, 3).as_dict()
    for shards in (2, 8):
        assert harness.verify(claim_id, 3, shards=shards).as_dict() == base


def test_parallel_jobs_match_serial():
    a = harness.verify("T5.a.iv", 3, shards=4, jobs=2).as_dict()
    b = harness.verify("T5.a.iv", 3).as_dict()
    assert a == b


def test_budget_exceeded_carries_partial_outcome():
    with pytest.raises(harness.BudgetExceeded) as exc:
        harness.verify("L1", 4, budget=0.0)
    assert not exc.value.outcome.complete and not exc.value.outcome.passed


def test_size_limit():
    with pytest.raises(SizeLimit):
        harness.verify("L1", 5)


def test_false_claim_is_caught():
    bogus = catalog.ClaimSpec("bogus", "continuous relations are complete",
                              hypotheses=("continuous",), conclusion="complete")
    out = harness.verify(bogus, 2)
    assert out.violations and not out.passed
    v = out.violations[0]
    space = next(s for s in topologies(v.n) if tuple(sorted(s.opens)) == tuple(sorted(v.opens)))
    ctx = atoms.Ctx(space, Relation.from_code(v.n, v.relation_code))
    assert atoms.value("continuous", ctx) and not atoms.value("complete", ctx)


def test_merge_is_order_free():
    parts = [harness.verify_shard("T5.b.ii", 3, s, 3) for s in range(3)]
    assert harness.merge(parts).as_dict() == harness.merge(parts[::-1]).as_dict()


# --- search, fixtures, witnesses -----------------------------------------------


def test_search_finds_independence_witness():
    res = search.search_counterexample(["PP", "II"], "PI", 3)
    assert res.found and res.n == 3
    ctx = atoms.Ctx(None, res.relation)
    assert atoms.value("PP", ctx) and atoms.value("II", ctx) and not atoms.value("PI", ctx)


def test_search_exhausts_true_implication():
    res = search.search_counterexample(["complete", "PP", "PI"], "T", 3)
    assert not res.found and res.enumerated > 0


def test_search_with_topology():
    res = search.search_counterexample(["T", "continuous", "nontrivial"], "complete", 3, space_filter="!connected")
    assert res.found and res.space is not None and not res.space.is_connected


def test_all_fixtures_pass():
    results = fixtures.run_fixtures()
    assert results and all(r.passed for r in results), [r.diffs for r in results if not r.passed]


def test_witness_sweep_n3():
    rep = witnesses.sweep(3)
    assert not rep.failures
    assert rep.checked["chain"] > 0 and rep.checked["cyclic"] == 1


def test_witness_preconditions():
    connected = topologies(2)[0]
    assert connected.is_connected
    with pytest.raises(witnesses.PreconditionUnmet):
        witnesses.witness(connected, "chain")
    with pytest.raises(witnesses.UnknownConstruction):
        witnesses.witness(discrete_space(3), "nope")


@pytest.mark.parametrize("name", sorted(witnesses.CONSTRUCTIONS))
def test_witness_post_checks_on_discrete_three(name):
    d = discrete_space(3)
    w = witnesses.witness(d, name)
    assert all(witnesses.post_check(d, w).values())
