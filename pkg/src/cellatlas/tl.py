"""
Temperley-Lieb patterns on the ordered points of Z1.

A pattern is a noncrossing matching on positions 0..N-1. Shape ``BC`` has N = 2m+1 points,
m arcs and one marked point (the star) whose strand runs to the top boundary, so no arc may
cover it. Shape ``D`` has N = 2m points and m arcs.

Patterns are stored by position, so one pattern serves every family with the same m. The
chain basis convention of :mod:`cellatlas.f2lin` makes e_k = {p_{k-1}, p_k} for both shapes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ShapeMismatchError, ValidationError
from .f2lin import F2Space, F2Subspace, span
from .symbols import Family, Symbol, embed

BC = "BC"
D = "D"


@dataclass(frozen=True, order=True)
class TLPattern:
    m: int
    shape: str
    arcs: tuple[tuple[int, int], ...]
    star: int | None = None

    def __post_init__(self):
        if self.shape not in (BC, D):
            raise ValidationError(f"unknown pattern shape {self.shape!r}")
        arcs = tuple(sorted(tuple(sorted(a)) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        n = self.size
        if len(arcs) != self.m:
            raise ValidationError(f"pattern needs {self.m} arcs, got {len(arcs)}")
        used = [p for a in arcs for p in a]
        if self.shape == BC:
            if self.star is None:
                raise ValidationError("BC patterns need a star")
            used.append(self.star)
        elif self.star is not None:
            raise ValidationError("D patterns have no star")
        if sorted(used) != list(range(n)):
            raise ValidationError(f"arcs and star must cover positions 0..{n - 1} exactly once")
        for a, b in arcs:
            if (b - a) % 2 == 0:
                raise ValidationError(f"arc {(a, b)} joins positions of equal parity")
            if self.star is not None and a < self.star < b:
                raise ValidationError(f"arc {(a, b)} covers the star at {self.star}")
        for a, b in arcs:
            for c, d in arcs:
                if a < c < b < d:
                    raise ValidationError(f"arcs {(a, b)} and {(c, d)} cross")

    @property
    def size(self) -> int:
        return 2 * self.m + 1 if self.shape == BC else 2 * self.m

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.arcs:
            out[a], out[b] = b, a
        return out

    def serialize(self) -> str:
        s = "arcs=" + json.dumps([list(a) for a in self.arcs], separators=(",", ":"))
        return s + (f";star={self.star}" if self.star is not None else "")

    def render(self) -> str:
        chars = ["*"] * self.size
        for a, b in self.arcs:
            chars[a], chars[b] = "(", ")"
        return "".join(chars)

    def __str__(self) -> str:
        return self.serialize()


def parse_pattern(text: str) -> TLPattern:
    fields = dict(part.split("=", 1) for part in text.strip().split(";") if part)
    try:
        arcs = tuple(tuple(a) for a in json.loads(fields["arcs"]))
        star = int(fields["star"]) if "star" in fields else None
    except (KeyError, ValueError, TypeError):
        raise ValidationError(f"cannot parse pattern {text!r}") from None
    return TLPattern(len(arcs), BC if star is not None else D, arcs, star)


def _matchings(lo: int, hi: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Noncrossing perfect matchings of lo..hi-1, by partner of the leftmost point ascending."""
    if lo >= hi:
        yield ()
        return
    for q in range(lo + 1, hi, 2):
        for inner in _matchings(lo + 1, q):
            for outer in _matchings(q + 1, hi):
                yield ((lo, q),) + inner + outer


def _starred(lo: int, hi: int) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
    """Matchings of lo..hi-1 (odd count) with one uncovered star; the star option comes first."""
    for rest in _matchings(lo + 1, hi):
        yield rest, lo
    for q in range(lo + 1, hi, 2):
        for inner in _matchings(lo + 1, q):
            for outer, star in _starred(q + 1, hi):
                yield ((lo, q),) + inner + outer, star


@lru_cache(maxsize=None)
def _enumerate(m: int, shape: str) -> tuple[TLPattern, ...]:
    if shape == BC:
        return tuple(TLPattern(m, BC, arcs, star) for arcs, star in _starred(0, 2 * m + 1))
    if shape == D:
        return tuple(TLPattern(m, D, arcs) for arcs in _matchings(0, 2 * m))
    raise ValidationError(f"unknown pattern shape {shape!r}")


def enumerate_patterns(m: int, shape: str) -> list[TLPattern]:
    if m < 0:
        raise ValidationError("m must be nonnegative")
    return list(_enumerate(m, shape))


def _check_family(t: TLPattern, f: Family) -> None:
    if t.shape != f.shape or t.m != f.m:
        raise ShapeMismatchError(
            f"pattern {t} (shape {t.shape}, m={t.m}) does not fit {f.label()}")


def cell_module(t: TLPattern, f: Family) -> list[Symbol]:
    """Symbols of [t]: M takes one endpoint of each arc, never the star."""
    _check_family(t, f)
    seen: dict[Symbol, None] = {}
    for choice in range(1 << t.m):
        m_set = {f.z1[arc[choice >> i & 1]] for i, arc in enumerate(t.arcs)}
        seen.setdefault(f.symbol_for(m_set))
    return list(seen)


def lagrangian(t: TLPattern, f: Family) -> F2Subspace:
    _check_family(t, f)
    return arc_span(t, f.space)


def arc_span(t: TLPattern, space: F2Space) -> F2Subspace:
    return span([space.from_positions(a) for a in t.arcs], space)


def _components(n: int, edges: Iterable[tuple[int, int, object]]) -> list[tuple[bool, list]]:
    """Connected components of a multigraph of max degree 2: (is_cycle, edge tags)."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    edges = list(edges)
    for idx, (a, b, _) in enumerate(edges):
        adj[a].append(idx)
        adj[b].append(idx)
    seen_e: set[int] = set()
    seen_v: set[int] = set()
    out = []
    for v in range(n):
        if v in seen_v:
            continue
        stack, comp_v, comp_e = [v], [], set()
        seen_v.add(v)
        while stack:
            u = stack.pop()
            comp_v.append(u)
            for idx in adj[u]:
                if idx in comp_e:
                    continue
                comp_e.add(idx)
                a, b, _ = edges[idx]
                w = b if a == u else a
                if w not in seen_v:
                    seen_v.add(w)
                    stack.append(w)
        seen_e |= comp_e
        is_cycle = all(len(adj[u]) == 2 for u in comp_v)
        out.append((is_cycle, [edges[i][2] for i in sorted(comp_e)]))
    return out


def h_indices(shape: str, m: int, kind: str) -> list[int]:
    """e-indices of the auxiliary matching for a subgroup kind (these span Ā of that kind)."""
    n = 2 * m + 1 if shape == BC else 2 * m
    if kind == "B" and shape == BC:
        return list(range(1, n, 2))
    if kind == "C" and shape == BC:
        return list(range(2, n, 2))
    if kind == "D" and shape == D:
        return list(range(2, n - 1, 2))
    raise ShapeMismatchError(f"subgroup kind {kind} needs shape {'D' if kind == 'D' else 'BC'}")


def h_subgroup(t: TLPattern, kind: str, space: F2Space | None = None) -> F2Subspace:
    """
    Overlay the arcs of t with the auxiliary arcs {p_{k-1}, p_k} for k in h_indices; each
    closed circle contributes the sum of the e_k of its auxiliary arcs.
    """
    aux = h_indices(t.shape, t.m, kind)
    if space is None:
        space = default_space(t.shape, t.m)
    if space.size != t.size:
        raise ShapeMismatchError("space and pattern have different point counts")
    edges = [(a, b, None) for a, b in t.arcs] + [(k - 1, k, k) for k in aux]
    gens = []
    for is_cycle, tags in _components(t.size, edges):
        if is_cycle:
            ks = [k for k in tags if k is not None]
            v = space.zero()
            for k in ks:
                v = v + space.e(k)
            gens.append(v)
    return span(gens, space)


def default_space(shape: str, m: int) -> F2Space:
    """Space on the points 0..N-1, for computations that depend on positions only."""
    if shape == BC:
        return F2Space(tuple(range(2 * m + 1)))
    return F2Space(tuple(range(2 * m)), "quotient", bar=True)


def circle_count(t1: TLPattern, t2: TLPattern) -> int:
    """Closed circles after stacking t1 on the mirror image of t2."""
    if t1.shape != t2.shape or t1.m != t2.m:
        raise ShapeMismatchError("patterns of different shape or size")
    edges = [(a, b, 1) for a, b in t1.arcs] + [(a, b, 2) for a, b in t2.arcs]
    return sum(1 for is_cycle, _ in _components(t1.size, edges) if is_cycle)


def gram_entry(t1: TLPattern, t2: TLPattern) -> int:
    """
    Pairing of the cell modules [t1], [t2]: 2^d for d circles in shape BC. In shape D the
    circle through position 0 is an open strand in the quotient (it is the star strand of
    the associated BC pattern), so the pairing is 2^(d-1).
    """
    d = circle_count(t1, t2)
    return 1 << (d if t1.shape == BC else d - 1)


def gram_matrix(patterns: list[TLPattern]) -> list[list[int]]:
    return [[gram_entry(a, b) for b in patterns] for a in patterns]


FULL, TRIVIAL, CODIM1 = "full", "trivial", "codim1"


def canonical(kind: str, m: int, weyl_type: str, j: int | None = None) -> TLPattern:
    """
    Patterns whose subgroup for ``weyl_type`` is all of Ā (``full``), zero (``trivial``) or
    spanned by every Ā basis vector except the j-th (``codim1``). m counts arcs; Ā has
    dimension m (B, C) or m-1 (D).
    """
    if weyl_type == "D":
        return _canonical_d(kind, m, j)
    if weyl_type not in ("B", "C"):
        raise ValidationError(f"unsupported Weyl type {weyl_type!r}")
    b_pairs = [(2 * i, 2 * i + 1) for i in range(m)]
    c_pairs = [(2 * i - 1, 2 * i) for i in range(1, m + 1)]
    if kind in (FULL, TRIVIAL):
        use_b = (kind == FULL) == (weyl_type == "B")
        return TLPattern(m, BC, b_pairs, 2 * m) if use_b else TLPattern(m, BC, c_pairs, 0)
    if kind != CODIM1:
        raise ValidationError(f"unknown canonical kind {kind!r}")
    if j is None or not 1 <= j <= m:
        raise ValidationError(f"codim1 index j={j} outside 1..{m}")
    if weyl_type == "B":
        arcs = [p for i, p in enumerate(b_pairs, 1) if i != j] + [(2 * j - 1, 2 * m)]
        return TLPattern(m, BC, arcs, 2 * j - 2)
    arcs = [p for i, p in enumerate(c_pairs, 1) if i != j] + [(0, 2 * j - 1)]
    return TLPattern(m, BC, arcs, 2 * j)


def _canonical_d(kind: str, m: int, j: int | None) -> TLPattern:
    if m < 1:
        raise ValidationError("type-D patterns need m >= 1")
    inner = [(2 * i - 1, 2 * i) for i in range(1, m)]
    if kind == FULL:
        return TLPattern(m, D, inner + [(0, 2 * m - 1)])
    if kind == TRIVIAL:
        return TLPattern(m, D, [(2 * i, 2 * i + 1) for i in range(m)])
    if kind != CODIM1:
        raise ValidationError(f"unknown canonical kind {kind!r}")
    if j is None or not 1 <= j <= m - 1:
        raise ValidationError(f"codim1 index j={j} outside 1..{m - 1}")
    arcs = [p for i, p in enumerate(inner, 1) if i != j] + [(0, 2 * j - 1), (2 * j, 2 * m - 1)]
    return TLPattern(m, D, arcs)


def d_to_b(t: TLPattern) -> TLPattern:
    """Drop position 0; its partner becomes the star; positions shift down by one."""
    if t.shape != D:
        raise ShapeMismatchError("d_to_b needs a D pattern")
    if t.m == 0:
        raise ValidationError("d_to_b needs m >= 1")
    star = t.partner()[0] - 1
    arcs = [(a - 1, b - 1) for a, b in t.arcs if a != 0]
    return TLPattern(t.m - 1, BC, arcs, star)


def iota(s: F2Subspace, target: F2Space) -> F2Subspace:
    """Shift a BC-space subspace one position right into the D quotient: e_k -> ē_{k+1}."""
    if target.size != s.space.size + 1:
        raise ShapeMismatchError("target must have one more point")
    return span([target.from_mask(v.mask << 1) for v in s.basis], target)
