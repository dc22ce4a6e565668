"""The sixteen Frobenius constituents, their contributing subsets and rank-one quotients.

A constituent is labelled (i, j, k): i in 0..3 picks alpha, beta, gamma,
delta and j, k in {0, 1} pick the unit root a or the other root b of each
GL2 factor. Under ordinarity its valuation is n_i + m_j + l_k with
n = (0, k2-2, k1-1, k1+k2-3), m = (0, c1-1), l = (0, c2-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import NotAdjacent, NotRankOne, RangeViolation, WrongRegion
from .weights import LABELS, MIRROR, Region, Weights, adjacency, as_region, classify, representative

GSP4_NAMES = ("alpha", "beta", "gamma", "delta")
GL2_NAMES = ("a", "b")


@dataclass(frozen=True, order=True)
class ConstituentLabel:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i not in range(4) or self.j not in (0, 1) or self.k not in (0, 1):
            raise ValueError(f"bad constituent label {(self.i, self.j, self.k)}")

    @property
    def partner(self) -> ConstituentLabel:
        return ConstituentLabel(3 - self.i, 1 - self.j, 1 - self.k)

    @property
    def graded_triple(self) -> tuple[int, int, int]:
        """Filtration degrees: alpha..delta sit in Gr^3..Gr^0, a in Gr^1 and b in Gr^0."""
        return (3 - self.i, 1 - self.j, 1 - self.k)

    def mirror(self) -> ConstituentLabel:
        return ConstituentLabel(self.i, self.k, self.j)

    def __str__(self) -> str:
        return f"{GSP4_NAMES[self.i]}*{GL2_NAMES[self.j]}1*{GL2_NAMES[self.k]}2"


ALL_LABELS: tuple[ConstituentLabel, ...] = tuple(
    ConstituentLabel(i, j, k) for i, j, k in product(range(4), (0, 1), (0, 1))
)
# alpha and beta block, in the column order of the reference table
AB_BLOCK: tuple[ConstituentLabel, ...] = ALL_LABELS[:8]


def gsp4_valuations(k1: int, k2: int) -> tuple[int, int, int, int]:
    return (0, k2 - 2, k1 - 1, k1 + k2 - 3)


def constituent_valuation(label: ConstituentLabel, weights: Weights) -> int:
    n = gsp4_valuations(weights.k1, weights.k2)
    m = (0, weights.c1 - 1)
    l = (0, weights.c2 - 1)
    return n[label.i] + m[label.j] + l[label.k]


_PAIRS = tuple((lab, lab.partner) for lab in ALL_LABELS[:8])


@lru_cache(maxsize=8192)
def contributing_set(weights: Weights) -> frozenset[ConstituentLabel]:
    w = weights.w
    chosen = []
    for lab, partner in _PAIRS:
        here = constituent_valuation(lab, weights) <= w
        there = constituent_valuation(partner, weights) <= w
        assert here != there, "exactly one label of each complement pair contributes"
        chosen.append(lab if here else partner)
    return frozenset(chosen)


def gsp4_hodge_numbers(k1: int, k2: int) -> tuple[int, int, int, int]:
    return gsp4_valuations(k1, k2)


@dataclass(frozen=True)
class HodgeProfile:
    """Hodge numbers of the three factors and the twist 1 + w; needs k2 >= 3."""

    weights: Weights

    def __post_init__(self):
        if self.weights.k2 < 3:
            raise RangeViolation("Hodge numbers of the GSp4 factor collide when k2 = 2")

    @property
    def gsp4_numbers(self) -> tuple[int, int, int, int]:
        return gsp4_hodge_numbers(self.weights.k1, self.weights.k2)

    @property
    def gl2_numbers(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((0, self.weights.c1 - 1), (0, self.weights.c2 - 1))

    @property
    def twist(self) -> int:
        return 1 + self.weights.w

    def hodge_number(self, label: ConstituentLabel) -> int:
        g1, g2 = self.gl2_numbers
        return self.gsp4_numbers[label.i] + g1[label.j] + g2[label.k] - self.twist

    def in_plus_part(self, label: ConstituentLabel) -> bool:
        return self.hodge_number(label) <= -1


# reference table, rows (a)-(f) over the alpha/beta block

TABLE1: dict[str, tuple[str, tuple[str, str, str]]] = {
    "a": ("YNYNYNYN", ("0", "0", "B")),
    "b": ("YYYNYNYN", ("Sieg", "B", "B")),
    "c": ("YYYNYYYN", ("Kl", "B", "B")),
    "d": ("YYYYYNYN", ("Sieg", "0", "B")),
    "e": ("YYYYYYYN", ("B", "B", "B")),
    "f": ("YYYYYYYY", ("Kl", "0", "0")),
}

PARABOLIC_SYMBOLS = {"0": "∅", "B": "B", "Sieg": "Sieg", "Kl": "Kl"}


def _mirror_pattern(pattern: str) -> str:
    by_label = dict(zip(AB_BLOCK, pattern))
    return "".join(by_label[lab.mirror()] for lab in AB_BLOCK)


def table1_reference() -> dict[str, tuple[str, tuple[str, str, str]]]:
    """The reference rows together with the mirrored rows a', b', d'."""
    rows = dict(TABLE1)
    for lab in ("a", "b", "d"):
        pattern, (g, x, y) = TABLE1[lab]
        rows[MIRROR[lab]] = (_mirror_pattern(pattern), (g, y, x))
    return {lab: rows[lab] for lab in LABELS}


def pattern_of(weights: Weights) -> str:
    chosen = contributing_set(weights)
    return "".join("Y" if lab in chosen else "N" for lab in AB_BLOCK)


def parabolic_of_region(region: Region | str) -> tuple[str, str, str]:
    return as_region(region).parabolic


REFERENCE_WEIGHTS = (8, 4)


def regenerate_table1(k1: int = REFERENCE_WEIGHTS[0], k2: int = REFERENCE_WEIGHTS[1]):
    """Rows recomputed from region representatives; empty regions are skipped."""
    rows = {}
    for lab in LABELS:
        try:
            wt = representative(lab, k1, k2)
        except RangeViolation:
            continue
        rows[lab] = (pattern_of(wt), parabolic_of_region(lab))
    return rows


def table1_diff(k1: int = REFERENCE_WEIGHTS[0], k2: int = REFERENCE_WEIGHTS[1]) -> list[str]:
    ref = table1_reference()
    out = []
    for lab, row in regenerate_table1(k1, k2).items():
        if row != ref[lab]:
            out.append(f"({lab}): computed {row} but table has {ref[lab]}")
    return out


def format_table1(rows: dict) -> str:
    head = ["region"] + [str(lab) for lab in AB_BLOCK] + ["parabolic"]
    lines = [" | ".join(head)]
    for lab, (pattern, para) in rows.items():
        marks = ["x" if ch == "Y" else "-" for ch in pattern]
        lines.append(" | ".join([f"({lab})"] + marks + ["(" + ", ".join(PARABOLIC_SYMBOLS[s] for s in para) + ")"]))
    return "\n".join(lines)


# ---- rank-one quotients ---------------------------------------------------------


def quotient_label(
    hearts: Region | str, spades: Region | str, weights_hearts: Weights, weights_spades: Weights
) -> ConstituentLabel:
    hearts, spades = as_region(hearts), as_region(spades)
    if not adjacency(hearts, spades):
        raise NotAdjacent(f"regions {hearts} and {spades} are not adjacent")
    if (weights_hearts.k1, weights_hearts.k2) != (weights_spades.k1, weights_spades.k2):
        raise WrongRegion("both weights must share (k1, k2)")
    for reg, wt in ((hearts, weights_hearts), (spades, weights_spades)):
        got = classify(wt)
        if got != reg:
            raise WrongRegion(f"{wt.as_tuple()} lies in region {got}, not {reg}")
    diff = contributing_set(weights_hearts) - contributing_set(weights_spades)
    if len(diff) != 1:
        raise NotRankOne(f"difference between {hearts} and {spades} has {len(diff)} constituents")
    (lab,) = diff
    return lab


def panchishkin_quotient(
    hearts: Region | str, spades: Region | str, weights_hearts: Weights, weights_spades: Weights
) -> tuple[int, int, int]:
    """Graded triple (s0, s1, s2) of the rank-one piece between two adjacent regions."""
    return quotient_label(hearts, spades, weights_hearts, weights_spades).graded_triple


def quotient_for_regions(hearts: Region | str, spades: Region | str, k1: int, k2: int) -> tuple[int, int, int]:
    return panchishkin_quotient(
        hearts, spades, representative(hearts, k1, k2), representative(spades, k1, k2)
    )


def swap_symmetry(triple: tuple[int, int, int]) -> tuple[int, int, int]:
    s0, s1, s2 = triple
    return (3 - s0, 1 - s1, 1 - s2)
