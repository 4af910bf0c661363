"""
Linear algebra over F2 on even subsets of an ordered point set.

The points z_0 < z_1 < ... < z_{N-1} of a set Z are addressed by position. A vector is an
even-cardinality subset of Z, stored as a bitmask over positions; addition is symmetric
difference and the symplectic form is (u, v) = |u & v| mod 2.

Coordinates are taken with respect to the chain basis e_k = {z_{k-1}, z_k}, k = 1..N-1. The
coefficient of e_k in a vector S is the parity of |S & {z_0, ..., z_{k-1}}|. Subspaces are
kept in reduced row echelon form over these coordinates with the lowest e-index as pivot,
so two subspaces are equal exactly when their bases are.

Two kinds of space occur:

* ``ambient``: |Z| = 2m+1 odd. The form is nondegenerate, dimension 2m.
* ``quotient``: |Z| = 2m even, modulo the radical line spanned by Z itself. Dimension 2m-2.
  Representatives never contain the last point z_{2m-1}; a vector containing it is replaced
  by its complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatchError, ValidationError

AMBIENT = "ambient"
QUOTIENT = "quotient"


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class F2Space:
    points: tuple[int, ...]
    kind: str = AMBIENT
    bar: bool = False  # label basis vectors as ē instead of e

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise ValidationError(f"points must be strictly increasing: {pts}")
        if self.kind == AMBIENT:
            if len(pts) % 2 != 1:
                raise ValidationError("ambient space needs an odd number of points")
        elif self.kind == QUOTIENT:
            if len(pts) % 2 != 0 or not pts:
                raise ValidationError("quotient space needs a positive even number of points")
        else:
            raise ValidationError(f"unknown space kind {self.kind!r}")

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def dim(self) -> int:
        return self.size - 1 if self.kind == AMBIENT else self.size - 2

    @property
    def radical_generator(self) -> F2Vector | None:
        """The all-points vector Z (quotient kind only); it is zero in the space."""
        if self.kind != QUOTIENT:
            return None
        return self.from_mask(self.full_mask)

    def normalize(self, mask: int) -> int:
        if mask & ~self.full_mask:
            raise ValidationError("mask has bits outside the point set")
        if self.kind == QUOTIENT and mask >> (self.size - 1) & 1:
            mask ^= self.full_mask
        return mask

    def from_mask(self, mask: int) -> F2Vector:
        if _popcount(mask) % 2:
            raise ValidationError("F2 vectors are even subsets")
        return F2Vector(self, self.normalize(mask))

    def from_positions(self, positions: Iterable[int]) -> F2Vector:
        mask = 0
        for p in positions:
            if not 0 <= p < self.size:
                raise ValidationError(f"position {p} outside 0..{self.size - 1}")
            mask ^= 1 << p
        return self.from_mask(mask)

    def vector(self, values: Iterable[int]) -> F2Vector:
        """Vector with the given support, given as point values of Z."""
        index = {z: i for i, z in enumerate(self.points)}
        vals = set(values)
        missing = vals - index.keys()
        if missing:
            raise ValidationError(f"points {sorted(missing)} not in {self.points}")
        return self.from_positions(index[z] for z in vals)

    def e(self, k: int) -> F2Vector:
        if not 1 <= k <= self.size - 1:
            raise ValidationError(f"e_{k} undefined for {self.size} points")
        return self.from_positions((k - 1, k))

    def zero(self) -> F2Vector:
        return F2Vector(self, 0)

    def from_coords(self, coords: int) -> F2Vector:
        c = coords << 1
        return self.from_mask((c ^ (c >> 1)) & self.full_mask)

    def whole(self) -> F2Subspace:
        return span([self.e(k) for k in range(1, self.dim + 1)], self)


@dataclass(frozen=True)
class F2Vector:
    space: F2Space
    mask: int

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(z for i, z in enumerate(self.space.points) if self.mask >> i & 1)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.space.size) if self.mask >> i & 1)

    @property
    def coords(self) -> int:
        """Bit k-1 set iff e_k occurs in the chain-basis expansion."""
        out, parity = 0, 0
        for k in range(1, self.space.size):
            parity ^= self.mask >> (k - 1) & 1
            if parity:
                out |= 1 << (k - 1)
        return out

    def indices(self) -> list[int]:
        c = self.coords
        return [k for k in range(1, self.space.size) if c >> (k - 1) & 1]

    def is_zero(self) -> bool:
        return self.mask == 0

    def __add__(self, other: F2Vector) -> F2Vector:
        _same_space(self.space, other.space)
        return F2Vector(self.space, self.space.normalize(self.mask ^ other.mask))

    def label(self) -> str:
        if self.is_zero():
            return "0"
        e = "ē" if self.space.bar else "e"
        return "+".join(f"{e}{k}" for k in self.indices())

    def __str__(self) -> str:
        return self.label()


def _same_space(a: F2Space, b: F2Space) -> None:
    if a != b:
        raise AmbientMismatchError(f"ambient mismatch: {a.points}/{a.kind} vs {b.points}/{b.kind}")


def eval_form(u: F2Vector, v: F2Vector) -> int:
    _same_space(u.space, v.space)
    return _popcount(u.mask & v.mask) % 2


def _rref(rows: Iterable[int]) -> list[int]:
    """Reduced echelon form of coordinate bitmasks, pivot = lowest set bit, sorted by pivot."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r & (b & -b):
                r ^= b
        if r:
            piv = r & -r
            basis = [b ^ r if b & piv else b for b in basis]
            basis.append(r)
    return sorted(basis, key=lambda b: b & -b)


@dataclass(frozen=True)
class F2Subspace:
    space: F2Space
    basis: tuple[F2Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return 1 << len(self.basis)

    def _coord_rows(self) -> list[int]:
        return [v.coords for v in self.basis]

    def __contains__(self, v: F2Vector) -> bool:
        _same_space(self.space, v.space)
        r = v.coords
        for b in self._coord_rows():
            if r & (b & -b):
                r ^= b
        return r == 0

    def elements(self) -> Iterator[F2Vector]:
        for bits in product((0, 1), repeat=self.dim):
            v = self.space.zero()
            for bit, b in zip(bits, self.basis):
                if bit:
                    v = v + b
            yield v

    def contains_subspace(self, other: F2Subspace) -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: F2Subspace) -> F2Subspace:
        _same_space(self.space, other.space)
        return span(self.basis + other.basis, self.space)

    def label(self) -> str:
        return "⟨" + ", ".join(v.label() for v in self.basis) + "⟩"

    def labels(self) -> list[str]:
        return [v.label() for v in self.basis]

    def __str__(self) -> str:
        return self.label()


def span(vectors: Sequence[F2Vector], ambient: F2Space) -> F2Subspace:
    for v in vectors:
        _same_space(v.space, ambient)
    rows = _rref(v.coords for v in vectors)
    return F2Subspace(ambient, tuple(ambient.from_coords(r) for r in rows))


def zero_subspace(ambient: F2Space) -> F2Subspace:
    return F2Subspace(ambient, ())


def intersect(a: F2Subspace, b: F2Subspace) -> F2Subspace:
    """Zassenhaus: reduce rows (x|x) for x in a and (y|0) for y in b; rows (0|z) span a & b."""
    _same_space(a.space, b.space)
    n = a.space.size  # coordinates fit in n-1 bits
    rows = [(x << n) | x for x in a._coord_rows()] + [y << n for y in b._coord_rows()]
    # pivot on the high (left) half first
    basis: list[int] = []
    for r in rows:
        for bb in basis:
            if r & _top_bit(bb):
                r ^= bb
        if r:
            basis.append(r)
    low = (1 << n) - 1
    inter = [r & low for r in basis if r >> n == 0]
    return span([a.space.from_coords(c) for c in inter], a.space)


def _top_bit(x: int) -> int:
    return 1 << (x.bit_length() - 1)


def is_isotropic(s: F2Subspace) -> bool:
    return all(eval_form(u, v) == 0 for u in s.basis for v in s.basis)


def is_lagrangian(s: F2Subspace) -> bool:
    return is_isotropic(s) and 2 * s.dim == s.space.dim


def decompose(v: F2Vector, a: F2Subspace, b: F2Subspace) -> tuple[F2Vector, F2Vector]:
    """Split v = x + y with x in a, y in b. Requires a and b to be complementary."""
    _same_space(a.space, b.space)
    _same_space(a.space, v.space)
    if a.dim + b.dim != a.space.dim or intersect(a, b).dim:
        raise ValidationError("subspaces are not complementary")
    # track which a-generators are used: rows carry a tag in bits above the coordinates
    n = a.space.size
    rows = [(1 << (n + i)) | c for i, c in enumerate(a._coord_rows())]
    rows += [c for c in b._coord_rows()]
    low = (1 << n) - 1
    basis: list[int] = []
    for r in rows:
        for bb in basis:
            if r & ((bb & low) & -(bb & low)):
                r ^= bb
        basis.append(r)
    r = v.coords
    for bb in basis:
        piv = (bb & low) & -(bb & low)
        if r & piv:
            r ^= bb
    if r & low:
        raise ValidationError("vector outside a + b")
    x = a.space.zero()
    for i, av in enumerate(a.basis):
        if r >> (n + i) & 1:
            x = x + av
    return x, x + v


def gram_rank(vectors: Sequence[F2Vector]) -> int:
    """Rank over F2 of the Gram matrix of the form on the given vectors."""
    rows = []
    for u in vectors:
        r = 0
        for j, w in enumerate(vectors):
            if eval_form(u, w):
                r |= 1 << j
        rows.append(r)
    return len(_rref(rows))
