"""Family descriptors, sign bookkeeping and the rendered atlas."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .arith import is_prime
from .characters import DirichletCharacter
from .errors import CentralCharacterViolation, RangeViolation, ValidationError
from .figure import region_polygons, render_ascii, render_svg
from .hecke import GSp4HeckeParams
from .panchishkin import PARABOLIC_SYMBOLS, format_table1, panchishkin_quotient, regenerate_table1, swap_symmetry, table1_diff
from .weights import LABELS, Region, adjacency, as_region, region_is_empty, representative

try:  # Python 3.11+
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - exercised on 3.10
    import tomli as tomllib

SPECIES = ("unramified", "principal-series", "special", "supercuspidal")

L_FUNCTION = "p-adic L-function"
CYCLE_CLASS = "cycle-class family"


@dataclass(frozen=True)
class LocalComponentDescriptor:
    prime: int
    pi: str
    sigma1: str
    sigma2: str
    epsilon: int = 1
    test_vector: str = ""

    def __post_init__(self):
        if not is_prime(self.prime):
            raise RangeViolation(f"{self.prime} is not prime")
        for s in (self.pi, self.sigma1, self.sigma2):
            if s not in SPECIES:
                raise ValidationError(f"unknown species {s!r}; choose from {SPECIES}")
        if self.epsilon not in (1, -1):
            raise ValidationError("epsilon must be +1 or -1")

    def forced_plus(self, n1: int, n2: int) -> str | None:
        """Reason epsilon must be +1 at this prime, or None if it is free."""
        if self.pi == "unramified":
            return "Pi is unramified"
        if math.gcd(n1, n2) % self.prime:
            return "the prime does not divide gcd(N1, N2)"
        if "principal-series" in (self.sigma1, self.sigma2):
            return "one of the GL2 factors is principal series"
        return None

    def to_record(self) -> dict:
        return {
            "prime": self.prime,
            "species": {"pi": self.pi, "sigma1": self.sigma1, "sigma2": self.sigma2},
            "epsilon": self.epsilon,
            "test_vector": self.test_vector,
        }

    @classmethod
    def from_record(cls, rec: dict) -> LocalComponentDescriptor:
        sp = rec.get("species", {})
        return cls(
            int(rec["prime"]),
            sp.get("pi", rec.get("pi", "unramified")),
            sp.get("sigma1", rec.get("sigma1", "unramified")),
            sp.get("sigma2", rec.get("sigma2", "unramified")),
            int(rec.get("epsilon", 1)),
            str(rec.get("test_vector", "")),
        )


@dataclass(frozen=True)
class FamilyDescriptor:
    p: int
    k1: int
    k2: int
    N: int = 1
    N1: int = 1
    N2: int = 1
    chi_pi: DirichletCharacter = field(default_factory=DirichletCharacter.trivial)
    chi_g1: DirichletCharacter = field(default_factory=DirichletCharacter.trivial)
    chi_g2: DirichletCharacter = field(default_factory=DirichletCharacter.trivial)
    cbar: int = 0
    local: tuple[LocalComponentDescriptor, ...] = ()
    gsp4: GSp4HeckeParams | None = None
    name: str = ""

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise RangeViolation("p must be an odd prime")
        if not self.k1 >= self.k2 >= 2:
            raise RangeViolation("need k1 >= k2 >= 2")
        if (self.N * self.N1 * self.N2) % self.p == 0:
            raise RangeViolation(f"p = {self.p} divides a tame level")
        central = self.chi_pi * self.chi_g1 * self.chi_g2
        if not central.primitive().is_trivial():
            raise CentralCharacterViolation(f"chi_Pi chi_G1 chi_G2 is {central}, not trivial")
        seen = set()
        for lc in self.local:
            if lc.prime in seen:
                raise ValidationError(f"prime {lc.prime} listed twice")
            seen.add(lc.prime)
            if lc.prime == self.p:
                raise ValidationError("local data at p is not a tame component")
            reason = lc.forced_plus(self.N1, self.N2)
            if reason and lc.epsilon != 1:
                raise ValidationError(f"epsilon at {lc.prime} must be +1: {reason}")
        if self.gsp4 is not None and (self.gsp4.p, self.gsp4.k1, self.gsp4.k2) != (self.p, self.k1, self.k2):
            raise ValidationError("Hecke parameters disagree with (p, k1, k2)")

    @property
    def minus_primes(self) -> list[int]:
        return sorted(lc.prime for lc in self.local if lc.epsilon == -1)

    @classmethod
    def from_record(cls, rec: dict) -> FamilyDescriptor:
        def char(key):
            return DirichletCharacter.from_record(rec[key]) if key in rec else DirichletCharacter.trivial()

        gsp4 = None
        if "gsp4" in rec:
            g = dict(rec["gsp4"])
            g.setdefault("p", rec["p"])
            g.setdefault("k1", rec["k1"])
            g.setdefault("k2", rec["k2"])
            gsp4 = GSp4HeckeParams.from_record(g)
        return cls(
            int(rec["p"]),
            int(rec["k1"]),
            int(rec["k2"]),
            int(rec.get("N", 1)),
            int(rec.get("N1", 1)),
            int(rec.get("N2", 1)),
            char("chi_pi"),
            char("chi_g1"),
            char("chi_g2"),
            int(rec.get("cbar", 0)),
            tuple(LocalComponentDescriptor.from_record(x) for x in rec.get("local", [])),
            gsp4,
            str(rec.get("name", "")),
        )

    def to_record(self) -> dict:
        rec = {
            "name": self.name,
            "p": self.p,
            "k1": self.k1,
            "k2": self.k2,
            "N": self.N,
            "N1": self.N1,
            "N2": self.N2,
            "chi_pi": self.chi_pi.to_record(),
            "chi_g1": self.chi_g1.to_record(),
            "chi_g2": self.chi_g2.to_record(),
            "cbar": self.cbar,
            "local": [lc.to_record() for lc in self.local],
        }
        if self.gsp4 is not None:
            rec["gsp4"] = self.gsp4.to_record()
        return rec


def load_descriptor(path: str | Path) -> FamilyDescriptor:
    path = Path(path)
    if path.suffix.lower() == ".toml":
        with path.open("rb") as fh:
            rec = tomllib.load(fh)
    else:
        rec = json.loads(path.read_text())
    return FamilyDescriptor.from_record(rec)


def definiteness(fd: FamilyDescriptor) -> str:
    bad = len(fd.minus_primes)
    if bad == 0:
        return "split"
    return "indefinite" if bad % 2 == 0 else "definite"


def finite_sign(fd: FamilyDescriptor) -> int:
    return -1 if len(fd.minus_primes) % 2 else 1


def global_sign(fd: FamilyDescriptor, region: Region | str) -> int:
    return as_region(region).sign_infinity * finite_sign(fd)


_INDEFINITE_STATUS = {
    "f": "constructed",
    "c": "forthcoming",
    "d": "open",
    "d'": "open",
    "a": "open",
    "a'": "open",
    "e": "constructed",
    "b": "open",
    "b'": "open",
}
_DEFINITE_STATUS = {"e": "feasible"}


def expected_objects(fd: FamilyDescriptor) -> dict[str, dict]:
    out = {}
    definite = definiteness(fd) == "definite"
    for lab in LABELS:
        sign = global_sign(fd, lab)
        obj = L_FUNCTION if sign == 1 else CYCLE_CLASS
        status = _DEFINITE_STATUS.get(lab, "open") if definite else _INDEFINITE_STATUS[lab]
        out[lab] = {"object": obj, "status": status}
    return out


@dataclass(frozen=True)
class ReciprocityEdge:
    minus: str
    plus: str
    triple: tuple[int, int, int]

    def to_record(self) -> dict:
        return {"minus": self.minus, "plus": self.plus, "triple": list(self.triple)}


def reciprocity_edges(fd: FamilyDescriptor) -> list[ReciprocityEdge]:
    """Adjacent nonempty regions with opposite global signs, minus region first."""
    k1, k2 = fd.k1, fd.k2
    edges = []
    for i, r1 in enumerate(LABELS):
        for r2 in LABELS[i + 1:]:
            if not adjacency(r1, r2):
                continue
            if region_is_empty(r1, k1, k2) or region_is_empty(r2, k1, k2):
                continue
            s1, s2 = global_sign(fd, r1), global_sign(fd, r2)
            if s1 == s2:
                continue
            minus, plus = (r1, r2) if s1 == -1 else (r2, r1)
            triple = panchishkin_quotient(
                minus, plus, representative(minus, k1, k2), representative(plus, k1, k2)
            )
            back = panchishkin_quotient(
                plus, minus, representative(plus, k1, k2), representative(minus, k1, k2)
            )
            assert swap_symmetry(triple) == back
            edges.append(ReciprocityEdge(minus, plus, triple))
    return edges


def atlas_record(fd: FamilyDescriptor) -> dict:
    k1, k2 = fd.k1, fd.k2
    objects = expected_objects(fd)
    regions = []
    for lab in LABELS:
        empty = region_is_empty(lab, k1, k2)
        entry = {
            "label": lab,
            "sign_infinity": Region(lab).sign_infinity,
            "global_sign": global_sign(fd, lab),
            "parabolic": list(Region(lab).parabolic),
            "empty": empty,
            "representative": None if empty else list(representative(lab, k1, k2).as_tuple()),
        }
        entry.update(objects[lab])
        regions.append(entry)
    table = regenerate_table1(k1, k2)
    return {
        "family": fd.to_record(),
        "definiteness": definiteness(fd),
        "finite_sign": finite_sign(fd),
        "minus_primes": fd.minus_primes,
        "regions": regions,
        "reciprocity_edges": [e.to_record() for e in reciprocity_edges(fd)],
        "table1": {
            "weights": [k1, k2],
            "rows": {lab: {"pattern": pat, "parabolic": list(par)} for lab, (pat, par) in table.items()},
            "diff": table1_diff(k1, k2),
        },
        "figure": {
            "polygons": sorted(region_polygons(k1, k2)),
            "ascii": render_ascii(k1, k2).split("\n"),
        },
    }


def _text(fd: FamilyDescriptor) -> str:
    rec = atlas_record(fd)
    lines = [
        f"family {fd.name or '(unnamed)'}: p = {fd.p}, (k1, k2) = ({fd.k1}, {fd.k2})",
        f"definiteness: {rec['definiteness']} (primes with epsilon = -1: {rec['minus_primes'] or 'none'})",
        "",
        "region  sign_inf  sign  object               status       parabolic",
    ]
    for r in rec["regions"]:
        tag = " (empty)" if r["empty"] else ""
        lines.append(
            f"({r['label']}){' ' * (5 - len(r['label']))}{r['sign_infinity']:>+6}  {r['global_sign']:>+4}  "
            f"{r['object']:<20} {r['status']:<12} ({', '.join(PARABOLIC_SYMBOLS[x] for x in r['parabolic'])}){tag}"
        )
    lines.append("")
    lines.append("reciprocity edges (minus -> plus: graded triple)")
    for e in rec["reciprocity_edges"]:
        lines.append(f"  ({e['minus']}) -> ({e['plus']}): {tuple(e['triple'])}")
    lines.append("")
    lines.append(f"table of contributing eigenvalues at (k1, k2) = ({fd.k1}, {fd.k2})")
    lines.append(format_table1(regenerate_table1(fd.k1, fd.k2)))
    diff = rec["table1"]["diff"]
    lines.append("diff against the reference table: " + ("none" if not diff else "; ".join(diff)))
    lines.append("")
    lines.append(render_ascii(fd.k1, fd.k2))
    return "\n".join(lines) + "\n"


def render_atlas(fd: FamilyDescriptor, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(atlas_record(fd), indent=2, sort_keys=False, ensure_ascii=False) + "\n"
    if fmt == "text":
        return _text(fd)
    if fmt == "svg":
        caption = [f"{definiteness(fd)} family, p = {fd.p}, (k1, k2) = ({fd.k1}, {fd.k2})"]
        for lab in LABELS:
            if not region_is_empty(lab, fd.k1, fd.k2):
                obj = expected_objects(fd)[lab]
                caption.append(f"({lab}) sign {global_sign(fd, lab):+d}: {obj['object']}, {obj['status']}")
        return render_svg(fd.k1, fd.k2, caption=caption)
    raise ValueError(f"unknown format {fmt!r}")
