"""Weight quadruples and the nine interpolation regions.

A point (k1, k2, c1, c2) is sorted into a region by six non-strict
inequalities. Each region is identified by its Boolean signature
(A1, A2, A3, B1, B2, B3); points exactly on a boundary line are placed by
the ``<=`` reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParityViolation, RangeViolation

LABELS: tuple[str, ...] = ("a", "a'", "b", "b'", "c", "d", "d'", "e", "f")

MIRROR = {"a": "a'", "a'": "a", "b": "b'", "b'": "b", "c": "c", "d": "d'", "d'": "d", "e": "e", "f": "f"}

_SIGNATURES: dict[tuple[bool, ...], str] = {
    (False, True, False, False, True, False): "a",
    (True, False, False, True, False, False): "a'",
    (True, True, False, False, True, False): "b",
    (True, True, False, True, False, False): "b'",
    (True, True, False, True, True, False): "c",
    (True, True, True, False, True, False): "d",
    (True, True, True, True, False, False): "d'",
    (True, True, True, True, True, False): "e",
    (True, True, True, True, True, True): "f",
}
SIGNATURE_OF = {v: k for k, v in _SIGNATURES.items()}

NEGATIVE = frozenset({"b", "b'", "e"})

# Edge-sharing pairs; each differs in exactly one inequality.
_EDGES = (
    ("a", "b"), ("b", "c"), ("b", "d"), ("c", "e"), ("d", "e"), ("e", "f"),
    ("a'", "b'"), ("b'", "c"), ("b'", "d'"), ("d'", "e"),
)
ADJACENT_PAIRS = frozenset(frozenset(e) for e in _EDGES)

# Parabolic type (GSp4, GL2 first factor, GL2 second factor); "0" is the empty choice.
_PARABOLIC = {
    "a": ("0", "0", "B"),
    "b": ("Sieg", "B", "B"),
    "c": ("Kl", "B", "B"),
    "d": ("Sieg", "0", "B"),
    "e": ("B", "B", "B"),
    "f": ("Kl", "0", "0"),
}
for _lab in ("a", "b", "d"):
    _g, _x, _y = _PARABOLIC[_lab]
    _PARABOLIC[MIRROR[_lab]] = (_g, _y, _x)
del _lab, _g, _x, _y


@dataclass(frozen=True)
class Weights:
    k1: int
    k2: int
    c1: int
    c2: int

    def __post_init__(self):
        if not (self.k1 >= self.k2 >= 2):
            raise RangeViolation(f"need k1 >= k2 >= 2, got ({self.k1}, {self.k2})")
        if self.c1 < 1 or self.c2 < 1:
            raise RangeViolation(f"need c1, c2 >= 1, got ({self.c1}, {self.c2})")
        if (self.c1 + self.c2 - self.k1 - self.k2) % 2:
            raise ParityViolation("c1 + c2 and k1 + k2 must have the same parity")

    @property
    def w(self) -> int:
        return (self.k1 + self.k2 + self.c1 + self.c2 - 6) // 2

    @property
    def t(self) -> int:
        return (self.k1 - self.k2 - self.c1 - self.c2 + 2) // 2

    @property
    def r(self) -> int:
        return (self.k1 - self.k2 + 2) // 2

    def mirror(self) -> Weights:
        return Weights(self.k1, self.k2, self.c2, self.c1)

    def signature(self) -> tuple[bool, bool, bool, bool, bool, bool]:
        k1, k2, c1, c2 = self.k1, self.k2, self.c1, self.c2
        return (
            c2 - c1 <= k1 + k2 - 4,
            c1 - c2 <= k1 + k2 - 4,
            c1 + c2 <= k1 + k2 - 2,
            c2 - c1 <= k1 - k2,
            c1 - c2 <= k1 - k2,
            c1 + c2 <= k1 - k2 + 2,
        )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.k1, self.k2, self.c1, self.c2)


@dataclass(frozen=True)
class Region:
    label: str

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown region label {self.label!r}")

    @property
    def sign_infinity(self) -> int:
        return -1 if self.label in NEGATIVE else 1

    @property
    def parabolic(self) -> tuple[str, str, str]:
        return _PARABOLIC[self.label]

    @property
    def signature(self) -> tuple[bool, ...]:
        return SIGNATURE_OF[self.label]

    @property
    def mirror(self) -> Region:
        return Region(MIRROR[self.label])

    @property
    def index(self) -> int:
        return LABELS.index(self.label)

    def __str__(self) -> str:
        return self.label


def as_region(r: Region | str) -> Region:
    return r if isinstance(r, Region) else Region(r)


def classify(weights: Weights) -> Region:
    sig = weights.signature()
    try:
        return Region(_SIGNATURES[sig])
    except KeyError:  # pragma: no cover - excluded by the implication lattice
        raise AssertionError(f"signature {sig} matches no region") from None


def sign_infinity(region: Region | str) -> int:
    return as_region(region).sign_infinity


def hodge_t(weights: Weights) -> int:
    t = weights.t
    assert (t >= 0) == (classify(weights).label == "f")
    return t


def adjacency(r1: Region | str, r2: Region | str) -> bool:
    return frozenset((as_region(r1).label, as_region(r2).label)) in ADJACENT_PAIRS


def neighbours(region: Region | str) -> list[Region]:
    lab = as_region(region).label
    return [Region(x) for x in LABELS if adjacency(lab, x)]


def region_is_empty(label: Region | str, k1: int, k2: int) -> bool:
    """Whether no (c1, c2) of valid parity lands in the region.

    All nine regions are inhabited once k2 >= 3. When k2 = 2 the strips
    separating the A- and B-lines have no lattice points of the right parity,
    and b, b', d, d', e disappear.
    """
    if not k1 >= k2 >= 2:
        raise RangeViolation(f"need k1 >= k2 >= 2, got ({k1}, {k2})")
    return k2 == 2 and as_region(label).label in {"b", "b'", "d", "d'", "e"}


@lru_cache(maxsize=None)
def representative(label: Region | str, k1: int, k2: int) -> Weights:
    """A deterministic member of the region: the smallest c1 + c2, then smallest c1."""
    lab = as_region(label).label
    if region_is_empty(lab, k1, k2):
        raise RangeViolation(f"region {lab} is empty for (k1, k2) = ({k1}, {k2})")
    bound = 2 * (k1 + k2) + 4
    for s in range(2, 2 * bound):
        if (s - k1 - k2) % 2:
            continue
        for c1 in range(1, s):
            wt = Weights(k1, k2, c1, s - c1)
            if classify(wt).label == lab:
                return wt
    raise AssertionError("unreachable: nonempty region without representative")


def scan_region_members(label: Region | str, k1: int, k2: int, cmax: int) -> list[Weights]:
    lab = as_region(label).label
    out = []
    for c1 in range(1, cmax + 1):
        for c2 in range(1, cmax + 1):
            if (c1 + c2 - k1 - k2) % 2 == 0:
                wt = Weights(k1, k2, c1, c2)
                if classify(wt).label == lab:
                    out.append(wt)
    return out
