"""Exhaustive verification of the catalogued claims on small finite spaces."""

from .catalog import CLAIMS, ClaimSpec, UnknownClaim, claim_ids, get_claim, manifest
from .fixtures import FixtureCase, FixtureResult, all_fixtures, run_fixtures
from .harness import BudgetExceeded, VerificationOutcome, Violation, merge, verify, verify_shard
from .search import SearchResult, search_counterexample
from .witnesses import CONSTRUCTIONS, PreconditionUnmet, post_check, sweep, witness

__all__ = [
    "CLAIMS", "ClaimSpec", "UnknownClaim", "claim_ids", "get_claim", "manifest",
    "FixtureCase", "FixtureResult", "all_fixtures", "run_fixtures",
    "BudgetExceeded", "VerificationOutcome", "Violation", "merge", "verify", "verify_shard",
    "SearchResult", "search_counterexample",
    "CONSTRUCTIONS", "PreconditionUnmet", "post_check", "sweep", "witness",
]
