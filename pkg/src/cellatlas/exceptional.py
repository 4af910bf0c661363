"""
Lookup tables for special orbits of exceptional type with nontrivial Lusztig quotient Ā.

The records live in ``data/exceptional.tsv`` (format documented in its header and the
README). The file's SHA-256 is pinned below so any edit to the transcription is deliberate.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import InconsistencyError, UnknownOrbitError, ValidationError

DATA_SHA256 = "1d845abf4a4b14fa6d0ab796f85dc93c82202e70720de16fb06dcf9e24ed050e"

GROUP_TYPES = ("G2", "F4", "E6", "E7", "E8")
ABAR_GROUPS = ("1", "Z/2", "S3", "S4", "S5")

GROUP_ORDER = {
    "1": 1, "Z/2": 2, "S2": 2, "S3": 6, "S4": 24, "S5": 120,
    "Dyh8": 8, "S2×S2": 4, "S3×S2": 12,
}

# subgroups allowed as Lusztig subgroups for each Ā
ALLOWED_SUBGROUPS = {
    "Z/2": {"1", "Z/2"},
    "S3": {"1", "S2", "S3"},
    "S4": {"S4", "S3", "Dyh8", "S2", "S2×S2"},
    "S5": {"S5", "S4", "S3×S2", "Dyh8", "S3", "S2×S2", "S2"},
}

EXCEPTIONAL_CELLS = {("E7", "A4+A1"), ("E8", "A4+A1"), ("E8", "E6(a1)+A1")}

_ALIASES = {"A~1": "Ã1", "~A1": "Ã1", "A1~": "Ã1"}


@dataclass(frozen=True)
class ExceptionalRecord:
    group_type: str
    orbit_label: str
    abar: str
    is_exceptional_cell: bool
    cell_types: tuple[tuple[str, int | None], ...]  # None: multiplicity not determined
    y_prime_text: str

    @property
    def abar_order(self) -> int:
        return GROUP_ORDER[self.abar]

    @property
    def y_total(self) -> int | None:
        """|Y'| when every multiplicity is known."""
        if any(n is None for _, n in self.cell_types):
            return None
        return sum(n * (self.abar_order // GROUP_ORDER[h]) for h, n in self.cell_types)


def _parse_cells(text: str) -> tuple[tuple[str, int | None], ...]:
    out = []
    for item in text.split(";"):
        name, _, mult = item.partition("=")
        out.append((name, None if mult == "unknown" else int(mult)))
    return tuple(out)


def _load_text() -> str:
    raw = resources.files("cellatlas").joinpath("data/exceptional.tsv").read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != DATA_SHA256:
        raise InconsistencyError(f"exceptional table checksum mismatch: {digest}")
    return raw.decode("utf-8")


@lru_cache(maxsize=None)
def records() -> tuple[ExceptionalRecord, ...]:
    out = []
    for line in _load_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        group, label, abar, exc, cells, y = line.split("\t")
        rec = ExceptionalRecord(group, label, abar, exc == "yes", _parse_cells(cells), y)
        _check(rec)
        out.append(rec)
    found = {(r.group_type, r.orbit_label) for r in out if r.is_exceptional_cell}
    if found != EXCEPTIONAL_CELLS:
        raise InconsistencyError(f"exceptional cells in table: {sorted(found)}")
    return tuple(out)


def _check(rec: ExceptionalRecord) -> None:
    if rec.group_type not in GROUP_TYPES or rec.abar not in ABAR_GROUPS:
        raise InconsistencyError(f"bad record {rec}")
    allowed = ALLOWED_SUBGROUPS.get(rec.abar, {"1"})
    for name, _ in rec.cell_types:
        if name not in allowed:
            raise InconsistencyError(f"subgroup {name} not allowed in {rec.abar} ({rec.orbit_label})")


def _normalize(label: str) -> str:
    label = label.strip().replace(" ", "")
    return _ALIASES.get(label, label)


def lookup(group_type: str, orbit_label: str) -> ExceptionalRecord:
    if group_type not in GROUP_TYPES:
        raise ValidationError(f"unknown exceptional type {group_type!r}; expected {', '.join(GROUP_TYPES)}")
    label = _normalize(orbit_label)
    for rec in records():
        if rec.group_type == group_type and rec.orbit_label == label:
            return rec
    valid = ", ".join(list_orbits(group_type)) or "none"
    raise UnknownOrbitError(f"no record for {group_type} orbit {orbit_label!r}; valid labels: {valid}")


def list_orbits(group_type: str, abar: str | None = None) -> list[str]:
    if group_type not in GROUP_TYPES:
        raise ValidationError(f"unknown exceptional type {group_type!r}")
    return [r.orbit_label for r in records()
            if r.group_type == group_type and (abar is None or r.abar == abar)]
