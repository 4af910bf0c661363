"""
Assembly of the classification data for one special orbit (or one family).

For every TL pattern T of the family we record the cell module [T], its Lusztig subgroup
H_T inside Ā and the number n_T of left cells with that module. The counts come from the
decomposition [dcell] = sum_E dim(E) E = sum_T n_T [T], solved exactly. The classification set
is Y' = disjoint union over T of (Ā/H_T)^{n_T}; its size must equal the dimension of the
Springer block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateFamilyError, InconsistencyError, ShapeMismatchError, ValidationError
from .f2lin import F2Subspace, F2Vector, intersect
from .symbols import (
    Family,
    Partition,
    Symbol,
    embed,
    enumerate_family,
    family_of,
    irrep_dim,
    lusztig_pair,
    require_special,
    special_symbol,
    validate_partition,
)
from .tl import TLPattern, cell_module, enumerate_patterns, gram_entry, h_subgroup, lagrangian


# ---------- exact rational linear algebra


def solve_exact(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """
    Unique solution of a x = b over Q. Every row, including redundant ones, must be satisfied;
    raises InconsistencyError if the system is inconsistent or underdetermined.
    """
    rows = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < ncols:
        raise InconsistencyError(f"system has rank {len(pivots)} < {ncols} unknowns")
    if any(row[-1] != 0 for row in rows[r:]):
        raise InconsistencyError("overdetermined system is inconsistent")
    return [rows[i][-1] for i in range(ncols)]


def det_exact(mat: Sequence[Sequence[int]]) -> Fraction:
    rows = [[Fraction(v) for v in row] for row in mat]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


# ---------- data types


@dataclass(frozen=True)
class CellType:
    pattern: TLPattern
    module_symbols: tuple[Symbol, ...]
    module_dims: tuple[int, ...]
    h: F2Subspace
    count: int
    abar_dim: int

    def __post_init__(self):
        if self.count < 0:
            raise InconsistencyError(f"negative cell count for {self.pattern}")

    @property
    def orbit_size(self) -> int:
        return 1 << (self.abar_dim - self.h.dim)

    @property
    def module_dim(self) -> int:
        return sum(self.module_dims)


@dataclass(frozen=True)
class SpringerEntry:
    character: F2Vector
    symbol: Symbol
    dim: int


@dataclass(frozen=True)
class SpringerBlock:
    entries: tuple[SpringerEntry, ...]

    @property
    def total(self) -> int:
        return sum(e.dim for e in self.entries)


@dataclass(frozen=True)
class AtlasReport:
    weyl_type: str
    rank: int | None
    partition: Partition | None
    family: Family
    special_symbol: Symbol
    abar: F2Subspace
    cell_types: tuple[CellType, ...]
    springer: SpringerBlock
    family_dims: dict[Symbol, int] = field(compare=False)

    @property
    def abar_dim(self) -> int:
        return self.abar.dim

    @property
    def y_total(self) -> int:
        return sum(c.count * c.orbit_size for c in self.cell_types)

    @property
    def y_fixed(self) -> int:
        return sum(c.count for c in self.cell_types if c.h.dim == self.abar.dim)

    def y_prime(self) -> str:
        return y_prime_text(self.cell_types, self.abar_dim)


def coset_label(h: F2Subspace, abar_dim: int, group: str = "Ā") -> str:
    if h.dim == 0:
        return group
    if h.dim == abar_dim:
        return f"{group}/{group}"
    return f"{group}/{h.label()}"


def y_prime_text(cell_types: Sequence[CellType], abar_dim: int) -> str:
    terms = []
    for c in cell_types:
        if c.count == 0:
            continue
        base = coset_label(c.h, abar_dim)
        if c.count == 1:
            terms.append(base)
        else:
            terms.append(f"({base})^{c.count}" if "/" in base else f"{base}^{c.count}")
    return " ⊔ ".join(terms) if terms else "∅"


# ---------- operations


def _require_family(f: Family) -> None:
    if f.is_degenerate:
        raise DegenerateFamilyError(
            "degenerate (very even) family: each of the two special representations forms a "
            "family by itself with trivial Ā; multiplicities are not computed")


def incidence(f: Family, symbols: Sequence[Symbol], patterns: Sequence[TLPattern]) -> list[list[int]]:
    lags = [lagrangian(t, f) for t in patterns]
    vecs = [embed(s, f) for s in symbols]
    return [[1 if v in lag else 0 for lag in lags] for v in vecs]


def cell_counts(f: Family) -> dict[TLPattern, int]:
    _require_family(f)
    symbols = enumerate_family(f)
    patterns = enumerate_patterns(f.m, f.shape)
    a = incidence(f, symbols, patterns)
    x = solve_exact(a, [irrep_dim(s) for s in symbols])
    out = {}
    for t, v in zip(patterns, x):
        if v.denominator != 1 or v < 0:
            raise InconsistencyError(f"cell count for {t} is {v}, not a nonnegative integer")
        out[t] = int(v)
    return out


def springer_block(f: Family) -> SpringerBlock:
    _require_family(f)
    entries = []
    for s in enumerate_family(f):
        x, chi = lusztig_pair(s, f)
        if x.is_zero():
            entries.append(SpringerEntry(chi, s, irrep_dim(s)))
    entries.sort(key=lambda e: (len(e.character.indices()), e.character.indices()))
    block = SpringerBlock(tuple(entries))
    chars = [e.character for e in block.entries]
    if len(set(chars)) != len(chars):
        raise InconsistencyError("Springer block is not multiplicity free")
    if not chars or not chars[0].is_zero() or block.entries[0].symbol != special_symbol(f):
        raise InconsistencyError("zero character does not carry the special symbol")
    return block


def coh_count(h1: F2Subspace, h2: F2Subspace, abar: F2Subspace) -> int:
    """Simple Ā-equivariant sheaves on Ā/h1 x Ā/h2: orbit count times |h1 & h2|."""
    if not (abar.contains_subspace(h1) and abar.contains_subspace(h2)):
        raise ValidationError("subgroups must lie in Ā")
    meet = intersect(h1, h2).order
    num = abar.order * meet * meet
    den = h1.order * h2.order
    if num % den:
        raise InconsistencyError("non-integral equivariant sheaf count")
    return num // den


def hom_dim(t1: TLPattern, t2: TLPattern, f: Family) -> int:
    shared = len(set(cell_module(t1, f)) & set(cell_module(t2, f)))
    meet = intersect(lagrangian(t1, f), lagrangian(t2, f)).order
    gram = gram_entry(t1, t2)
    if not shared == meet == gram:
        raise InconsistencyError(
            f"Hom dimensions disagree for {t1} / {t2}: shared={shared}, |L∩L'|={meet}, gram={gram}")
    return shared


def multiplicity(abar_order: int, stab_order: int, dim_v: int, dim_nx: int, dim_ny: int) -> int:
    if min(abar_order, stab_order, dim_v, dim_nx, dim_ny) < 1:
        raise ValidationError("all inputs must be positive")
    if abar_order % stab_order:
        raise ValidationError(f"stabilizer order {stab_order} does not divide {abar_order}")
    return abar_order // stab_order * dim_v * dim_nx * dim_ny


def subgroup(t: TLPattern, f: Family) -> F2Subspace:
    """H_T inside Ā for the family's Weyl type."""
    if t.shape != f.shape or t.m != f.m:
        raise ShapeMismatchError(f"pattern {t} does not fit {f.label()}")
    return h_subgroup(t, f.weyl_type, f.space)


def analyze_family(f: Family, weyl_type_rank: int | None = None,
                   partition: Partition | None = None) -> AtlasReport:
    _require_family(f)
    symbols = enumerate_family(f)
    dims = {s: irrep_dim(s) for s in symbols}
    counts = cell_counts(f)
    cells = []
    for t, n_t in counts.items():
        mod = tuple(sorted(cell_module(t, f), key=lambda s: (s.top, s.bot)))
        h = subgroup(t, f)
        if not f.abar.contains_subspace(h) or not lagrangian(t, f).contains_subspace(h):
            raise InconsistencyError(f"H_T for {t} is not inside Ā and L_T")
        cells.append(CellType(t, mod, tuple(dims[s] for s in mod), h, n_t, f.abar_dim))
    cells.sort(key=lambda c: (-c.h.dim, c.pattern.serialize()))
    report = AtlasReport(
        weyl_type=f.weyl_type,
        rank=weyl_type_rank,
        partition=partition,
        family=f,
        special_symbol=special_symbol(f),
        abar=f.abar,
        cell_types=tuple(cells),
        springer=springer_block(f),
        family_dims=dims,
    )
    check_report(report)
    return report


def check_report(r: AtlasReport) -> None:
    if r.y_total != r.springer.total:
        raise InconsistencyError(f"|Y'|={r.y_total} but the Springer block has dim {r.springer.total}")
    lhs = sum(c.count * c.module_dim for c in r.cell_types)
    rhs = sum(d * d for d in r.family_dims.values())
    if lhs != rhs:
        raise InconsistencyError(f"sum n_T dim[T] = {lhs} but sum dim(E)^2 = {rhs}")
    for c in r.cell_types:
        if c.orbit_size * c.h.order != r.abar.order:
            raise InconsistencyError("orbit size times |H| differs from |Ā|")


def build_report(weyl_type: str, rank: int, p: Partition) -> AtlasReport:
    validate_partition(weyl_type, p, rank)
    s = require_special(weyl_type, p)
    f = family_of(s)
    if f.is_degenerate:
        raise DegenerateFamilyError(
            f"orbit {p} is very even: its symbol {s} is degenerate; each of the two special "
            "representations forms a family by itself with trivial Ā")
    if s.rank != rank:
        raise InconsistencyError(f"symbol {s} has rank {s.rank}, expected {rank}")
    return analyze_family(f, rank, p)
