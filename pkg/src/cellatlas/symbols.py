"""
Partitions, symbols and families for the classical Weyl groups of types B, C and D.

A symbol is written ``(top|bot)``. For types B and C it has defect 1 (``top`` is one entry
longer) and labels an irreducible representation of W(B_n); for D it has defect 0 and is an
unordered pair of rows, stored with the lexicographically smaller row first.

A family is the set of reduced symbols with a fixed intersection ``Z2 = top & bot`` and a
fixed symmetric difference ``Z1``. Writing Z1 as z_0 < ... < z_{2m} (B, C) or z_1 < ... <
z_{2m} (D), a member of the family is determined by the subset ``M = bot - Z2`` of Z1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import DegenerateFamilyError, MembershipError, NotSpecialError, ValidationError
from .f2lin import AMBIENT, QUOTIENT, F2Space, F2Subspace, F2Vector, decompose, span

WEYL_TYPES = ("B", "C", "D")


def _check_type(weyl_type: str) -> str:
    if weyl_type not in WEYL_TYPES:
        raise ValidationError(f"unsupported Weyl type {weyl_type!r}; expected one of B, C, D")
    return weyl_type


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValidationError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, parts: Sequence[int]) -> Partition:
        """Build from parts in any order; zeros are dropped."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise ValidationError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, parts weakly decreasing, in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def _row(values) -> tuple[int, ...]:
    row = tuple(sorted(values))
    if len(set(row)) != len(row):
        raise ValidationError(f"symbol rows must have distinct entries: {row}")
    if row and row[0] < 0:
        raise ValidationError(f"symbol entries must be nonnegative: {row}")
    return row


@dataclass(frozen=True)
class Symbol:
    top: tuple[int, ...]
    bot: tuple[int, ...]
    weyl_type: str = "B"

    def __post_init__(self):
        _check_type(self.weyl_type)
        top, bot = _row(self.top), _row(self.bot)
        if self.weyl_type == "D":
            if len(top) != len(bot):
                raise ValidationError("type-D symbols have defect 0")
            top, bot = min(top, bot), max(top, bot)
        elif len(top) != len(bot) + 1:
            raise ValidationError("type-B/C symbols have defect 1 (top row one longer)")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bot", bot)
        if self.rank < 0:
            raise ValidationError(f"symbol {self} has negative rank")

    @classmethod
    def parse(cls, text: str, weyl_type: str = "B") -> Symbol:
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        if t.count("|") != 1:
            raise ValidationError(f"cannot parse symbol {text!r}; expected '(a,b,...|c,...)'")
        left, right = t.split("|")
        try:
            row = lambda s: tuple(int(x) for x in s.split(",")) if s.strip() else ()
            return cls(row(left), row(right), weyl_type)
        except ValueError:
            raise ValidationError(f"cannot parse symbol {text!r}") from None

    @property
    def defect(self) -> int:
        return len(self.top) - len(self.bot)

    @property
    def rank(self) -> int:
        k = len(self.bot)
        total = sum(self.top) + sum(self.bot)
        return total - k * k if self.defect == 1 else total - k * k + k

    @property
    def is_degenerate(self) -> bool:
        return self.weyl_type == "D" and self.top == self.bot

    def shift(self) -> Symbol:
        """The equivalent symbol ({0} + (top+1), {0} + (bot+1))."""
        up = lambda row: (0,) + tuple(x + 1 for x in row)
        return Symbol(up(self.top), up(self.bot), self.weyl_type)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.top))}|{','.join(map(str, self.bot))})"


def reduce(s: Symbol) -> Symbol:
    top, bot = s.top, s.bot
    while top and bot and top[0] == 0 and bot[0] == 0:
        top = tuple(x - 1 for x in top[1:])
        bot = tuple(x - 1 for x in bot[1:])
    return Symbol(top, bot, s.weyl_type)


def rank(s: Symbol) -> int:
    return s.rank


def defect(s: Symbol) -> int:
    return s.defect


@dataclass(frozen=True)
class Family:
    z1: tuple[int, ...]
    z2: tuple[int, ...]
    weyl_type: str

    def __post_init__(self):
        _check_type(self.weyl_type)
        z1, z2 = _row(self.z1), _row(self.z2)
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)
        if set(z1) & set(z2):
            raise ValidationError("Z1 and Z2 must be disjoint")
        if 0 in z2:
            raise ValidationError("0 must not lie in Z2")
        if self.weyl_type == "D":
            if len(z1) % 2:
                raise ValidationError("type D needs |Z1| even")
        elif len(z1) % 2 == 0:
            raise ValidationError("types B/C need |Z1| odd")

    @property
    def m(self) -> int:
        return (len(self.z1) - 1) // 2 if self.weyl_type != "D" else len(self.z1) // 2

    @property
    def shape(self) -> str:
        return "D" if self.weyl_type == "D" else "BC"

    @property
    def is_degenerate(self) -> bool:
        return self.weyl_type == "D" and not self.z1

    def _require_nondegenerate(self) -> None:
        if self.is_degenerate:
            raise DegenerateFamilyError(
                "degenerate (very even) type-D family: the representation splits into two "
                "special representations, each a family by itself with trivial Ā")

    @cached_property
    def space(self) -> F2Space:
        self._require_nondegenerate()
        if self.weyl_type == "D":
            return F2Space(self.z1, QUOTIENT, bar=True)
        return F2Space(self.z1, AMBIENT)

    @property
    def abar_indices(self) -> list[int]:
        """e-indices spanning Ā: odd for B, even for C, even up to 2m-2 for D."""
        n = len(self.z1)
        if self.weyl_type == "B":
            return list(range(1, n, 2))
        if self.weyl_type == "C":
            return list(range(2, n, 2))
        return list(range(2, n - 1, 2))

    @property
    def dual_indices(self) -> list[int]:
        n = len(self.z1)
        if self.weyl_type == "B":
            return list(range(2, n, 2))
        if self.weyl_type == "C":
            return list(range(1, n, 2))
        # ē_{2m-1} is the sum of the other odd ē's in the quotient
        return list(range(1, n - 2, 2))

    @cached_property
    def abar(self) -> F2Subspace:
        return span([self.space.e(k) for k in self.abar_indices], self.space)

    @cached_property
    def abar_dual(self) -> F2Subspace:
        return span([self.space.e(k) for k in self.dual_indices], self.space)

    @property
    def abar_dim(self) -> int:
        return self.m - 1 if self.weyl_type == "D" else self.m

    @property
    def m0_positions(self) -> tuple[int, ...]:
        # every other point starting at the second (BC) or the first (D)
        start = 0 if self.weyl_type == "D" else 1
        return tuple(range(start, len(self.z1) - 1, 2)) if self.z1 else ()

    def symbol_for(self, m_values) -> Symbol:
        m_set = set(m_values)
        rest = set(self.z1) - m_set
        return Symbol(tuple(set(self.z2) | rest), tuple(set(self.z2) | m_set), self.weyl_type)

    def label(self) -> str:
        return (f"Fam(Z1={{{','.join(map(str, self.z1))}}}, "
                f"Z2={{{','.join(map(str, self.z2))}}}, type {self.weyl_type})")


def family_of(s: Symbol) -> Family:
    """Family of s. Non-reduced input is reduced first."""
    r = reduce(s)
    top, bot = set(r.top), set(r.bot)
    return Family(tuple(top ^ bot), tuple(top & bot), r.weyl_type)


def enumerate_family(f: Family) -> list[Symbol]:
    f._require_nondegenerate()
    out = []
    z1 = f.z1
    for m_set in combinations(z1, f.m):
        if f.weyl_type == "D" and z1[0] not in m_set:
            continue  # M and Z1 - M give the same symbol; keep the one containing z_1
        out.append(f.symbol_for(m_set))
    return out


def special_symbol(f: Family) -> Symbol:
    return f.symbol_for(f.z1[p] for p in f.m0_positions)


def _m_of(s: Symbol, f: Family) -> set[int]:
    if family_of(s) != f or reduce(s) != s:
        raise MembershipError(f"symbol {s} does not belong to {f.label()}")
    return set(s.bot) - set(f.z2)


def embed(s: Symbol, f: Family) -> F2Vector:
    m_set = _m_of(s, f)
    m0 = {f.z1[p] for p in f.m0_positions}
    return f.space.vector(m_set ^ m0)


def lusztig_pair(s: Symbol, f: Family) -> tuple[F2Vector, F2Vector]:
    """(x, chi) with x in Ā, chi in Ā* and x + chi = embed(s)."""
    return decompose(embed(s, f), f.abar, f.abar_dual)


@dataclass(frozen=True)
class Bipartition:
    alpha: Partition
    beta: Partition

    @property
    def size(self) -> int:
        return self.alpha.total + self.beta.total

    def __str__(self) -> str:
        return f"({self.alpha}; {self.beta})"


def _row_to_partition(row: Sequence[int]) -> Partition:
    return Partition.of([x - i for i, x in enumerate(row)])


def to_bipartition(s: Symbol) -> Bipartition:
    return Bipartition(_row_to_partition(s.top), _row_to_partition(s.bot))


def hook_lengths(shape: Sequence[int]) -> list[int]:
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    return [shape[i] - j - 1 + conj[j] - i for i in range(len(shape)) for j in range(shape[i])]


def standard_tableaux_count(shape: Partition | Sequence[int]) -> int:
    parts = shape.parts if isinstance(shape, Partition) else tuple(shape)
    n = sum(parts)
    return factorial(n) // prod(hook_lengths(parts))


def irrep_dim(s: Symbol) -> int:
    if s.is_degenerate:
        raise DegenerateFamilyError(f"degenerate symbol {s}: representation is reducible")
    bp = to_bipartition(s)
    return comb(bp.size, bp.alpha.total) * standard_tableaux_count(bp.alpha) \
        * standard_tableaux_count(bp.beta)


# ---------- nilpotent orbits


def expected_total(weyl_type: str, n: int) -> int:
    return 2 * n + 1 if weyl_type == "B" else 2 * n


def validate_partition(weyl_type: str, p: Partition, n: int | None = None) -> None:
    _check_type(weyl_type)
    if n is not None and p.total != expected_total(weyl_type, n):
        raise ValidationError(
            f"partition {p} has total {p.total}; type {weyl_type}{n} needs "
            f"{expected_total(weyl_type, n)}")
    if weyl_type == "B" and p.total % 2 == 0:
        raise ValidationError(f"type B needs an odd total, got {p.total}")
    if weyl_type in "CD" and p.total % 2:
        raise ValidationError(f"type {weyl_type} needs an even total, got {p.total}")
    bad_parity = 0 if weyl_type in "BD" else 1
    counts = Counter(p.parts)
    for part, mult in sorted(counts.items(), reverse=True):
        if part % 2 == bad_parity and mult % 2:
            kind = "even" if bad_parity == 0 else "odd"
            raise ValidationError(
                f"type {weyl_type}: {kind} part {part} occurs with odd multiplicity {mult}")


def orbit_to_symbol(weyl_type: str, p: Partition) -> Symbol:
    """Springer symbol of the orbit with Jordan type p (it is special iff the orbit is)."""
    validate_partition(weyl_type, p)
    q = sorted(p.parts)
    want_odd = weyl_type != "D"
    if (len(q) % 2 == 1) != want_odd:
        q = [0] + q
    r = [x + i for i, x in enumerate(q)]
    evens = [x // 2 for x in r if x % 2 == 0]
    odds = [(x - 1) // 2 for x in r if x % 2]
    if weyl_type == "D":
        return reduce(Symbol(tuple(evens), tuple(odds), "D"))
    longer, shorter = (odds, evens) if weyl_type == "B" else (evens, odds)
    if len(longer) != len(shorter) + 1:
        raise ValidationError(f"partition {p} does not yield a defect-1 symbol")
    return reduce(Symbol(tuple(longer), tuple(shorter), weyl_type))


def interleaving_failure(s: Symbol) -> str | None:
    """None if the rows interleave (special symbol), else a description of the first failure."""

    def check(a: Sequence[int], b: Sequence[int], na: str, nb: str) -> str | None:
        seq = []
        for i in range(len(a)):
            seq.append((f"{na}{i + 1}", a[i]))
            if i < len(b):
                seq.append((f"{nb}{i + 1}", b[i]))
        for (l1, v1), (l2, v2) in zip(seq, seq[1:]):
            if v1 > v2:
                return f"{l1}={v1} > {l2}={v2}"
        return None

    if s.defect == 1:
        return check(s.top, s.bot, "a", "b")
    first = check(s.top, s.bot, "a", "b")
    if first is None or check(s.bot, s.top, "b", "a") is None:
        return None
    return first


def is_special(weyl_type: str, p: Partition) -> bool:
    return interleaving_failure(orbit_to_symbol(weyl_type, p)) is None


def require_special(weyl_type: str, p: Partition) -> Symbol:
    s = orbit_to_symbol(weyl_type, p)
    why = interleaving_failure(s)
    if why is not None:
        raise NotSpecialError(
            f"orbit {p} of type {weyl_type} is not special: symbol {s} rows do not "
            f"interleave ({why})")
    return s


def component_group_rank(weyl_type: str, p: Partition) -> int:
    _check_type(weyl_type)
    distinct = set(p.parts)
    if weyl_type == "C":
        return sum(1 for x in distinct if x % 2 == 0)
    return max(0, sum(1 for x in distinct if x % 2) - 1)


def special_partitions(weyl_type: str, n: int) -> Iterator[Partition]:
    for p in iter_partitions(expected_total(weyl_type, n)):
        try:
            validate_partition(weyl_type, p)
        except ValidationError:
            continue
        if is_special(weyl_type, p):
            yield p
