"""Vectorized atom evaluation over every relation of a given size.

A ``RelationTable`` holds the incidence cubes of all relations (optionally
pre-filtered) as numpy arrays, plus flags for the relation-only atoms.
``space_vectors`` evaluates the cheap pair atoms for one space across the
whole table through lookup arrays indexed by section bitmasks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from ..relation import relation_codes
from ..topology import FiniteSpace, is_connected_subset, is_path_connected_subset


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.matmul(a.astype(np.uint8), b.astype(np.uint8)) > 0


def _within(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Per relation: a is a subset of b."""
    return ~(a & ~b).any(axis=(1, 2))


class RelationTable:
    def __init__(self, n: int, filter: str | None = None):
        self.n = n
        self.filter = filter
        self.codes = np.asarray(relation_codes(n, filter), dtype=np.int64)
        bits = (self.codes[:, None] >> np.arange(n * n)) & 1
        R = bits.reshape(-1, n, n).astype(bool)
        Rt = R.transpose(0, 2, 1)
        P = R & ~Rt
        I = R & Rt
        self.R, self.P, self.I = R, P, I
        weights = (1 << np.arange(n)).astype(np.int64)
        self.R_rows = (R * weights).sum(-1)
        self.R_cols = (Rt * weights).sum(-1)
        self.P_rows = (P * weights).sum(-1)
        self.P_cols = (P.transpose(0, 2, 1) * weights).sum(-1)
        self.I_rows = (I * weights).sum(-1)
        self.flags = self._relation_flags()

    def __len__(self) -> int:
        return len(self.codes)

    def _relation_flags(self) -> dict[str, np.ndarray]:
        n = self.n
        R, P, I = self.R, self.P, self.I
        Rt = R.transpose(0, 2, 1)
        eye = np.eye(n, dtype=bool)
        off = ~eye
        npc = ~P
        f = {
            "reflexive": R[:, eye].all(1),
            "complete": (R | Rt).all(axis=(1, 2)),
            "symmetric": (R == Rt).all(axis=(1, 2)),
            "asymmetric": ~(R & Rt).any(axis=(1, 2)),
            "antisymmetric": ~(R & Rt & off).any(axis=(1, 2)),
            "nontrivial": P.any(axis=(1, 2)),
            "T": _within(_compose(R, R), R),
            "NP": _within(_compose(npc, npc), npc),
            "PP": _within(_compose(P, P), P),
            "II": _within(_compose(I, I), I),
            "PI": _within(_compose(P, I), P),
            "IP": _within(_compose(I, P), P),
        }
        f["semi"] = f["PI"] & f["IP"]
        f["I_equivalence"] = f["reflexive"] & f["II"]
        # strongly non-trivial: some x with P(x) nonempty and R(a) & R(b)
        # nonempty for every a, b in P(x)
        meet = _compose(R, Rt)  # meet[a, b]: R(a) and R(b) intersect
        bad = np.einsum("kxa,kxb,kab->kx", P.astype(np.uint8), P.astype(np.uint8), (~meet).astype(np.uint8)) > 0
        f["strongly_nontrivial"] = (P.any(2) & ~bad).any(1)
        return f


@lru_cache(maxsize=8)
def relation_table(n: int, filter: str | None = None) -> RelationTable:
    return RelationTable(n, filter)


VECTOR_PAIR_ATOMS = (
    "closed_upper_R", "closed_lower_R", "closed_R", "open_upper_P", "open_lower_P", "open_P",
    "continuous", "I_conn", "R_conn", "R_path_upper", "R_path_lower", "R_path",
    "componentwise_nt", "knt", "lemma1_cover",
)


@lru_cache(maxsize=1024)
def _luts(space: FiniteSpace) -> dict[str, np.ndarray]:
    size = 1 << space.n
    return {
        "open": np.array([space.is_open(s) for s in range(size)]),
        "closed": np.array([space.is_closed(s) for s in range(size)]),
        "conn": np.array([is_connected_subset(space, s) for s in range(size)]),
        "path": np.array([is_path_connected_subset(space, s) for s in range(size)]),
    }


class SpaceVectors:
    """Lazily computed pair-atom arrays for one space over a table."""

    def __init__(self, space: FiniteSpace, table: RelationTable):
        if space.n != table.n:
            raise ValueError("space and table sizes differ")
        self.space = space
        self.t = table
        self.lut = _luts(space)
        self._cache: dict[str, np.ndarray] = {}

    def __contains__(self, name: str) -> bool:
        return name in self.t.flags or name in VECTOR_PAIR_ATOMS

    def __getitem__(self, name: str) -> np.ndarray:
        if name in self.t.flags:
            return self.t.flags[name]
        if name not in self._cache:
            self._cache[name] = getattr(self, "_" + name)()
        return self._cache[name]

    def _closed_upper_R(self):
        return self.lut["closed"][self.t.R_rows].all(1)

    def _closed_lower_R(self):
        return self.lut["closed"][self.t.R_cols].all(1)

    def _closed_R(self):
        return self["closed_upper_R"] & self["closed_lower_R"]

    def _open_upper_P(self):
        return self.lut["open"][self.t.P_rows].all(1)

    def _open_lower_P(self):
        return self.lut["open"][self.t.P_cols].all(1)

    def _open_P(self):
        return self["open_upper_P"] & self["open_lower_P"]

    def _continuous(self):
        return self["closed_R"] & self["open_P"]

    def _I_conn(self):
        return self.lut["conn"][self.t.I_rows].all(1)

    def _R_conn(self):
        conn = self.lut["conn"]
        return conn[self.t.R_rows].all(1) & conn[self.t.R_cols].all(1)

    def _R_path_upper(self):
        return self.lut["path"][self.t.R_rows].all(1)

    def _R_path_lower(self):
        return self.lut["path"][self.t.R_cols].all(1)

    def _R_path(self):
        return self["R_path_upper"] & self["R_path_lower"]

    def _meets(self, rows: np.ndarray, a: int, b: int) -> np.ndarray:
        pts = [x for x in range(self.t.n) if a >> x & 1]
        return ((rows[:, pts] & b) != 0).any(1)

    def _componentwise_nt(self):
        blocks = self.space.components.blocks
        comparable = self.t.R_rows | self.t.R_cols
        out = np.ones(len(self.t), dtype=bool)
        for c in blocks:
            out &= self._meets(self.t.P_rows, c, c)
        for c, d in combinations(blocks, 2):
            out &= self._meets(comparable, c, d)
        return out

    def _knt(self):
        # with k equal to the component count both index runs are 1..k, and
        # the definition reduces to componentwise non-triviality
        return self["componentwise_nt"]

    def _lemma1_cover(self):
        blocks = self.space.components.blocks
        comp = self.space.component_of
        t = self.t
        out = np.ones(len(t), dtype=bool)
        for x in range(t.n):
            for y in range(t.n):
                need = blocks[comp[x]] | blocks[comp[y]]
                cover = t.P_rows[:, x] | t.P_cols[:, y]
                out &= ~t.P[:, x, y] | ((need & ~cover) == 0)
        return out
