"""Label sets for the Hecke and Brauer quotients at a root of unity."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

from .partitions import (
    Partition,
    add_columns,
    add_rows,
    canonical,
    partitions_of,
    strip_full_columns,
)
from .qarith import LabelError, RootOfUnityContext


def is_hecke_label(ctx: RootOfUnityContext, lam: Partition) -> bool:
    n = abs(ctx.N)
    shape = lam if ctx.N > 0 else lam.conjugate()
    if len(shape) > n:
        return False
    return shape.row(1) - shape.row(n) <= ctx.ell - n


def brauer_constraints(ctx: RootOfUnityContext, lam: Partition) -> list[tuple[int, int]]:
    """The two (value, bound) inequalities defining membership for this case."""
    N, ell = ctx.N, ctx.ell
    n = abs(N)
    if N > 0:
        first = (lam.col(1) + lam.col(2), N)
        if (ell - N) % 2 == 0:
            second = (lam.row(1), (ell - N) // 2)
        else:
            second = (lam.row(1) + lam.row(2), ell - N)
    else:
        if n % 2 == 0:
            first = (lam.row(1), n // 2)
        else:
            first = (lam.row(1) + lam.row(2), n)
        second = (lam.col(1) + lam.col(2), ell - n)
    return [first, second]


def brauer_case(ctx: RootOfUnityContext) -> str:
    if ctx.N > 0:
        return "a" if (ctx.ell - ctx.N) % 2 == 0 else "b"
    return "c" if ctx.N % 2 == 0 else "d"


def is_brauer_label(ctx: RootOfUnityContext, lam: Partition) -> bool:
    return all(v <= b for v, b in brauer_constraints(ctx, lam))


def is_boundary(ctx: RootOfUnityContext, lam: Partition) -> bool:
    """Exactly one inequality fails, and it fails by exactly one."""
    excess = [v - b for v, b in brauer_constraints(ctx, lam)]
    return sorted(excess)[-1] == 1 and sorted(excess)[0] <= 0


def is_classical_brauer_label(N: int, lam: Partition) -> bool:
    """Labels of O(N) (N > 0) or of the transposed Sp(|N|) labels (N < 0 even)."""
    if N > 0:
        return lam.col(1) + lam.col(2) <= N
    if N % 2 == 0:
        return lam.row(1) <= -N // 2
    return lam.row(1) + lam.row(2) <= -N


def _box(ctx: RootOfUnityContext) -> tuple[int, int]:
    """Row and column bounds containing every member and boundary diagram."""
    n = abs(ctx.N)
    if ctx.N > 0:
        return n + 1, ctx.ell - n + 1
    return ctx.ell - n + 1, n + 1


@dataclass
class LabelSet:
    context: RootOfUnityContext
    kind: Literal["hecke", "brauer"]
    box_count: int
    members: list[Partition]
    boundary: list[Partition] = field(default_factory=list)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, lam):
        return Partition(lam) in set(self.members)

    def as_dicts(self):
        out = [{"label": list(m), "size": m.size, "boundary": False} for m in self.members]
        out += [{"label": list(b), "size": b.size, "boundary": True} for b in self.boundary]
        return out


@lru_cache(maxsize=None)
def _hecke_slice(ctx: RootOfUnityContext, n: int) -> tuple[Partition, ...]:
    N = abs(ctx.N)
    if ctx.N > 0:
        found = (p for p in partitions_of(n, max_rows=N) if is_hecke_label(ctx, p))
    else:
        found = (p for p in partitions_of(n, max_part=N) if is_hecke_label(ctx, p))
    return tuple(canonical(found))


def hecke_labels(ctx: RootOfUnityContext, n: int) -> LabelSet:
    return LabelSet(ctx, "hecke", n, list(_hecke_slice(ctx, n)))


@lru_cache(maxsize=None)
def _brauer_by_size(ctx: RootOfUnityContext, m: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...]]:
    rows, cols = _box(ctx)
    members, boundary = [], []
    for p in partitions_of(m, max_rows=rows, max_part=cols):
        if is_brauer_label(ctx, p):
            members.append(p)
        elif is_boundary(ctx, p):
            boundary.append(p)
    return tuple(canonical(members)), tuple(canonical(boundary))


def brauer_labels(ctx: RootOfUnityContext, n: int) -> LabelSet:
    """Members with n, n-2, ... boxes, plus the boundary diagrams of those sizes."""
    members, boundary = [], []
    for m in range(n % 2, n + 1, 2):
        mem, bd = _brauer_by_size(ctx, m)
        members += mem
        boundary += bd
    return LabelSet(ctx, "brauer", n, canonical(members), canonical(boundary))


def max_brauer_size(ctx: RootOfUnityContext) -> int:
    rows, cols = _box(ctx)
    return rows * cols


def brauer_label_set(ctx: RootOfUnityContext) -> list[Partition]:
    """The whole (finite) set Lambda(N, ell), all parities."""
    top = max_brauer_size(ctx)
    return canonical(m for s in range(top + 1) for m in _brauer_by_size(ctx, s)[0])


def brauer_boundary_set(ctx: RootOfUnityContext, max_size: int | None = None) -> list[Partition]:
    top = max_brauer_size(ctx) if max_size is None else min(max_size, max_brauer_size(ctx))
    return canonical(b for s in range(top + 1) for b in _brauer_by_size(ctx, s)[1])


def brauer_even_labels(ctx: RootOfUnityContext) -> list[Partition]:
    return [m for m in brauer_label_set(ctx) if m.size % 2 == 0]


def associated_diagram(lam: Partition, N: int) -> Partition:
    """lam-dagger: first column replaced by N - lam'_1, other columns kept."""
    lam = Partition(lam)
    if N <= 0:
        raise ValueError("associated diagrams are defined for N > 0")
    if lam.col(1) > N:
        raise ValueError(f"{list(lam)} has more than N={N} rows")
    cols = list(lam.conjugate())
    first = N - (cols[0] if cols else 0)
    rest = cols[1:]
    if rest and first < rest[0]:
        raise ValueError(f"{list(lam)} has no associated diagram for N={N}")
    new_cols = [first] + rest
    return Partition(new_cols).conjugate() if first > 0 else Partition(rest).conjugate()


def periodicity_map(kind: str, ctx: RootOfUnityContext, lam: Partition, count: int = 1) -> Partition:
    """Hecke: add ``count`` full columns of |N| boxes (rows when N < 0).  Brauer: identity."""
    lam = Partition(lam)
    if kind == "brauer":
        if not is_brauer_label(ctx, lam):
            raise LabelError(f"{list(lam)} is not a brauer label for {ctx}")
        return lam
    n = abs(ctx.N)
    out = add_columns(lam, n, count) if ctx.N > 0 else add_rows(lam, n, count)
    if not is_hecke_label(ctx, out):
        raise LabelError(f"{list(out)} left the hecke label set for {ctx}")
    return out


def strip_period(ctx: RootOfUnityContext, lam: Partition) -> tuple[Partition, int]:
    """Inverse of the Hecke periodicity map, applied as often as possible."""
    n = abs(ctx.N)
    if ctx.N > 0:
        return strip_full_columns(lam, n)
    core, c = strip_full_columns(lam.conjugate(), n)
    return core.conjugate(), c
