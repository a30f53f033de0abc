"""The claim catalog: each theorem direction as hypotheses plus a conclusion.

Hypotheses and conclusions are formulas over the atom names of
``atoms.ATOMS``.  ``space_filter`` restricts which spaces are enumerated,
``relation_filter`` which relations.  ``kind`` selects the enumeration:

forall    every (space, relation) pair for n = 1..max_n
relation  every relation on exactly max_n points, no topology
space     every space for n = 1..max_n
pairwise  pairs of relations on the same space
fixture   a named fixture group
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import atoms
from .expr import atoms as expr_atoms
from .expr import parse

VACUITY_ANCHOR = (
    "on a finite space a complete, semi-transitive, continuous relation has a discrete "
    "quotient by I, so every component sits inside one indifference class"
)

QUASI_ORDER_ANCHOR = (
    "a finite quasi-ordered space is discrete, because a complete anti-symmetric continuous "
    "relation has a Hausdorff quotient by I; the statement is run without that restriction "
    "and its hypotheses still have no finite connected instance"
)


class UnknownClaim(KeyError):
    pass


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    statement: str
    hypotheses: tuple[str, ...] = ()
    conclusion: str = "true"
    space_filter: str | None = None
    relation_filter: str | None = None
    max_n: int = 4
    expected_vacuous: bool = False
    anchor: str = ""
    kind: str = "forall"
    group: str | None = None

    def ordered_hypotheses(self) -> list[str]:
        """Hypotheses sorted cheapest first (stable on ties)."""
        def cost(h: str) -> int:
            return max((atoms.get(a).cost for a in expr_atoms(parse(h))), default=0)
        return sorted(self.hypotheses, key=cost)

    def manifest(self) -> dict:
        d = asdict(self)
        d["hypotheses"] = list(self.hypotheses)
        return d


def _c(*args, **kw) -> ClaimSpec:
    return ClaimSpec(*args, **kw)


_SEMI_CONT = ("semi", "continuous")

CLAIMS: tuple[ClaimSpec, ...] = (
    _c("P1.a", "T is equivalent to PP, PI, IP and II together",
       conclusion="T <-> PP & PI & IP & II", kind="relation", max_n=3),
    _c("P1.b", "NP implies PP, PI and IP",
       conclusion="NP -> PP & PI & IP", kind="relation", max_n=3),
    _c("P1.c", "T is independent of NP (two explicit relations)", kind="fixture", group="prop1-c"),
    _c("P1.d", "PP, PI, IP, II are independent (eight explicit relations)", kind="fixture", group="prop1-d"),
    _c("L1", "for semi-transitive continuous R and x P y, C(x) | C(y) lies in P(x) | P^-1(y)",
       hypotheses=_SEMI_CONT, conclusion="lemma1_cover"),
    _c("L2", "every nonempty clopen set is a union of components",
       conclusion="clopens_are_unions", kind="space"),
    _c("L3", "a space with at least k components has a k-block clopen partition",
       conclusion="clopen_partitions", kind="space"),
    _c("L4", "semi-transitive continuous R with I an equivalence induces an anti-symmetric continuous quotient relation",
       hypotheses=_SEMI_CONT + ("I_equivalence",), conclusion="quotient_antisym_continuous"),
    _c("P2", "componentwise non-trivial, semi-transitive, continuous R with transitive I is complete, and transitive with at most two components",
       hypotheses=("componentwise_nt",) + _SEMI_CONT + ("II",),
       conclusion="complete & (le2_components -> T)", expected_vacuous=True, anchor=VACUITY_ANCHOR),
    _c("P3", "complete, semi-transitive, continuous R has a Hausdorff quotient by I",
       hypotheses=("complete",) + _SEMI_CONT, conclusion="quotient_hausdorff"),
    _c("P3.vac", "no non-trivial, complete, semi-transitive, continuous relation on a connected space with two or more points",
       hypotheses=("nontrivial", "complete") + _SEMI_CONT, conclusion="false",
       space_filter="connected & n_ge2", expected_vacuous=True, anchor=VACUITY_ANCHOR),
)

_T1 = {
    "b": (("T",), "transitive"),
    "c": (("antisymmetric",), "anti-symmetric"),
    "d": (("II", "I_conn"), "transitive I with connected sections"),
    "e": (("semi", "II"), "semi-transitive with transitive I"),
}

for _key, (_extra, _what) in _T1.items():
    CLAIMS += (
        _c(f"T1.a->{_key}", f"k-non-trivial continuous {_what} R on a space with k components is complete",
           hypotheses=("knt", "continuous") + _extra, conclusion="complete",
           expected_vacuous=True, anchor=VACUITY_ANCHOR),
    )
for _key, (_extra, _what) in _T1.items():
    CLAIMS += (
        _c(f"T2.a->{_key}",
           f"k-non-trivial continuous {_what} R on a space with k <= 2 components is complete"
           + ("" if _key == "b" else " and transitive"),
           hypotheses=("knt", "continuous") + _extra,
           conclusion="complete" if _key == "b" else "complete & T",
           space_filter="le2_components", expected_vacuous=True, anchor=VACUITY_ANCHOR),
    )

CLAIMS += (
    _c("T3.a->b", "on a quasi-ordered space with at most two components, complete continuous anti-symmetric R is transitive",
       hypotheses=("complete", "continuous", "antisymmetric"), conclusion="T",
       space_filter="le2_components & quasi_ordered"),
    _c("T3.a->c", "on a quasi-ordered space with at most two components, complete continuous R with transitive connected-section I is transitive",
       hypotheses=("complete", "continuous", "II", "I_conn"), conclusion="T",
       space_filter="le2_components & quasi_ordered"),
    _c("T3.a->d", "on a quasi-ordered space with at most two components, complete continuous semi-transitive R is transitive",
       hypotheses=("complete", "continuous", "semi"), conclusion="T",
       space_filter="le2_components & quasi_ordered"),
    _c("T4.a->b", "on a connected space, strongly non-trivial transitive R with closed upper sections and negatively transitive P with open upper sections is complete and continuous",
       hypotheses=("strongly_nontrivial", "T", "closed_upper_R", "NP", "open_upper_P"),
       conclusion="complete & continuous", space_filter="connected & n_gt2",
       expected_vacuous=True, anchor=QUASI_ORDER_ANCHOR),
    _c("T4.a->c", "on a connected space, two anti-symmetric non-trivial continuous relations are identical or inverse",
       hypotheses=("antisymmetric", "nontrivial", "continuous"), space_filter="connected & n_gt2",
       kind="pairwise", expected_vacuous=True, anchor=QUASI_ORDER_ANCHOR),
    _c("T4.a->d", "on a connected space, incomplete non-trivial transitive R with closed sections is fragile",
       hypotheses=("!complete", "nontrivial", "T", "closed_R"), conclusion="fragile",
       space_filter="connected & n_gt2"),
    _c("T4.a->e", "on a connected space, incomplete non-trivial transitive R whose P has open sections is flimsy",
       hypotheses=("!complete", "nontrivial", "T", "open_P"), conclusion="flimsy",
       space_filter="connected & n_gt2"),
    _c("T4.a->f", "on a connected space, an asymmetric relation with a continuous dual representation is strongly separable",
       hypotheses=("dual_rep",), conclusion="strongly_separable",
       space_filter="connected", relation_filter="asymmetric"),
    _c("T4.a->g", "on a connected space, an asymmetric relation has a continuous dual representation iff it is strongly separable, its dual is pseudo-transitive and its covering relations have closed sections",
       conclusion="dual_rep <-> strongly_separable & pseudo_dual & covering_closed",
       space_filter="connected", relation_filter="asymmetric"),
    _c("T5.a.i", "on a connected space, continuous R is semi-transitive iff P is negatively transitive",
       hypotheses=("continuous",), conclusion="semi <-> NP", space_filter="connected"),
    _c("T5.a.ii", "on a connected space, semi-transitive continuous R has transitive P",
       hypotheses=("continuous", "semi"), conclusion="PP", space_filter="connected"),
    _c("T5.a.iii", "on a connected space, transitive continuous R has negatively transitive P",
       hypotheses=("continuous", "T"), conclusion="NP", space_filter="connected"),
    _c("T5.a.iv", "on a connected space, continuous R is transitive iff semi-transitive with transitive I",
       hypotheses=("continuous",), conclusion="T <-> PI & IP & II", space_filter="connected"),
    _c("T5.b.i", "continuous R with connected I sections: transitive I gives semi-transitivity",
       hypotheses=("continuous", "I_conn", "II"), conclusion="semi"),
    _c("T5.b.ii", "continuous R with connected I sections is transitive iff P and I are",
       hypotheses=("continuous", "I_conn"), conclusion="T <-> PP & II"),
    _c("T6.i", "on a space with the Phragmen-Brouwer property, continuous R with path-connected upper sections and transitive I has PI",
       hypotheses=("continuous", "R_path_upper", "II"), conclusion="PI", space_filter="pbp"),
    _c("T6.ii", "on a space with the Phragmen-Brouwer property, continuous R with path-connected lower sections and transitive I has IP",
       hypotheses=("continuous", "R_path_lower", "II"), conclusion="IP", space_filter="pbp"),
    _c("T6.iii", "on a space with the Phragmen-Brouwer property, continuous R with path-connected sections is transitive iff P and I are",
       hypotheses=("continuous", "R_path"), conclusion="T <-> PP & II", space_filter="pbp"),
)

_BY_ID = {c.id: c for c in CLAIMS}


def normalize_id(claim_id: str) -> str:
    return claim_id.replace("→", "->").strip()


def get_claim(claim_id: str) -> ClaimSpec:
    try:
        return _BY_ID[normalize_id(claim_id)]
    except KeyError:
        raise UnknownClaim(claim_id) from None


def claim_ids() -> list[str]:
    return [c.id for c in CLAIMS]


def manifest() -> list[dict]:
    return [c.manifest() for c in CLAIMS]


def validate_catalog() -> None:
    """Every formula parses and names only known atoms; vacuity flags carry anchors."""
    for c in CLAIMS:
        for text in c.hypotheses + (c.conclusion,) + ((c.space_filter,) if c.space_filter else ()):
            for a in expr_atoms(parse(text)):
                atoms.get(a)
        if c.space_filter:
            for a in expr_atoms(parse(c.space_filter)):
                if atoms.get(a).scope != "space":
                    raise ValueError(f"{c.id}: space filter uses non-space atom {a}")
        if c.expected_vacuous and not c.anchor:
            raise ValueError(f"{c.id}: vacuity flag without anchor")
