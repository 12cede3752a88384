"""Restriction multiplicities from U(|N|) to the orthogonal or symplectic group at level ell.

Two routes are provided.  The direct route solves the character identity
chi^U_lam(g) = sum_mu b_mu chi_mu(g) over finitely many group elements g on
which every boundary character vanishes.  The folded route starts from the
classical table and reduces each classical label to the alcove with the
signs of the affine reflection group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Literal

import numpy as np

from .labels import (
    LabelError,
    associated_diagram,
    brauer_labels,
    brauer_case,
    is_brauer_label,
    is_classical_brauer_label,
    is_hecke_label,
)
from .lattice import orthogonal_character, schur, weyl_character
from .partitions import Partition, lr_coefficient, partitions_of, sort_key
from .qarith import RootOfUnityContext

Method = Literal["direct", "folded", "littlewood", "classical"]

RESIDUAL_TOL = 1e-7
INTEGRALITY_TOL = 1e-6
BOUNDARY_TOL = 1e-8


class SolveError(ArithmeticError):
    """The character system was singular, inconsistent or non-integral."""


class ConfigurationError(ArithmeticError):
    """A boundary character does not vanish at an evaluation point."""


@dataclass
class BranchingTable:
    context: RootOfUnityContext | str
    source: Partition
    entries: dict[Partition, int] = field(default_factory=dict)
    method: Method = "direct"

    def __post_init__(self):
        self.entries = {Partition(m): int(v) for m, v in self.entries.items() if v != 0}
        for mu, v in self.entries.items():
            if v < 0:
                raise ValueError(f"negative multiplicity at {list(mu)}")
            if (self.source.size - mu.size) % 2 or mu.size > self.source.size:
                raise ValueError(f"{list(mu)} has the wrong size for {list(self.source)}")

    def __eq__(self, other):
        return isinstance(other, BranchingTable) and self.entries == other.entries

    def __getitem__(self, mu):
        return self.entries.get(Partition(mu), 0)

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: sort_key(kv[0]))

    def as_dict(self):
        ctx = self.context if isinstance(self.context, str) else {"N": self.context.N, "ell": self.context.ell}
        return {
            "context": ctx,
            "lambda": list(self.source),
            "method": self.method,
            "entries": [{"mu": list(m), "b": v} for m, v in self.items()],
        }


# --- evaluation points ----------------------------------------------------------


@dataclass(frozen=True)
class EvalPoint:
    """A group element given by angles x (eigenvalues exp(+-2 pi i x_j)) and a determinant."""

    x: tuple[float, ...]
    det: int
    eigenvalues: tuple[complex, ...]

    def describe(self):
        return {"x": list(self.x), "det": self.det}


def _pairs(x):
    out = []
    for t in x:
        z = complex(math.cos(2 * math.pi * t), math.sin(2 * math.pi * t))
        out += [z, z.conjugate()]
    return out


def _raw_points(ctx: RootOfUnityContext) -> list[EvalPoint]:
    N, ell, k = ctx.N, ctx.ell, ctx.k
    case = brauer_case(ctx)
    if case not in ("a", "c"):
        raise NotImplementedError(f"evaluation points are only set up for the unitary cases, not {ctx}")
    pts = []
    if N > 0 and N % 2:
        for js in combinations(range((ell - 1) // 2, 0, -1), k):
            x = tuple(j / ell for j in js)
            pts.append(EvalPoint(x, 1, tuple([1.0 + 0j] + _pairs(x))))
    elif N > 0:
        for js in combinations(range(ell // 2 - 1, -1, -1), k):
            x = tuple((j + 0.5) / ell for j in js)
            pts.append(EvalPoint(x, 1, tuple(_pairs(x))))
        for js in combinations(range((ell - 1) // 2, 0, -1), k - 1):
            y = tuple(j / ell for j in js)
            pts.append(EvalPoint(y, -1, tuple([1.0 + 0j, -1.0 + 0j] + _pairs(y))))
    else:
        halves = [j / 2 for j in range(ell - 1, 0, -1)]
        for parity in (0, 1):
            grid = [a for a in halves if (2 * a) % 2 == parity]
            for a in combinations(grid, k):
                x = tuple(t / ell for t in a)
                pts.append(EvalPoint(x, 1, tuple(_pairs(x))))
    return pts


def rho_point(ctx: RootOfUnityContext) -> EvalPoint:
    x = tuple(r / ctx.ell for r in ctx.rho_check)
    eig = _pairs(x)
    if ctx.N > 0 and ctx.N % 2:
        eig = [1.0 + 0j] + eig
    return EvalPoint(x, 1, tuple(eig))


def brauer_character(ctx: RootOfUnityContext, mu: Partition, pt: EvalPoint) -> float:
    """Character of the classical label mu; for N < 0 the symplectic label is mu transposed."""
    if ctx.N > 0:
        return orthogonal_character(ctx.N, mu, pt.x, pt.det)
    if ctx.N % 2:
        raise NotImplementedError("odd negative N has no symplectic group")
    return weyl_character("Sp", mu.conjugate(), pt.x)


def hecke_character(ctx: RootOfUnityContext, lam: Partition, pt: EvalPoint) -> float:
    shape = lam if ctx.N > 0 else lam.conjugate()
    value = schur(shape, pt.eigenvalues)
    if abs(value.imag) > 1e-8 * max(1.0, abs(value)):
        raise ArithmeticError("U(N) character is not real at a real point")
    return value.real


def _evaluable(ctx: RootOfUnityContext, mu: Partition) -> bool:
    return is_classical_brauer_label(ctx.N, mu)


def evaluation_points(
    ctx: RootOfUnityContext,
    max_points: int | None = None,
    boundary_max_size: int | None = None,
) -> list[EvalPoint]:
    """Points on which boundary characters vanish; rho-check / ell is always first.

    When more than ``max_points`` are available a deterministic stride picks
    a subset.  Boundary diagrams that are not classical labels (their
    characters are zero by the modification rules) are skipped in the check.
    """
    from .labels import brauer_boundary_set

    pts = _raw_points(ctx)
    rho = rho_point(ctx)
    key = tuple(round(t * ctx.ell * 2) for t in rho.x)
    pts = [p for p in pts if not (p.det == 1 and tuple(round(t * ctx.ell * 2) for t in p.x) == key)]
    if max_points is not None and len(pts) + 1 > max_points:
        stride = len(pts) / (max_points - 1)
        pts = [pts[int(i * stride)] for i in range(max_points - 1)]
    pts = [rho] + pts
    for mu in brauer_boundary_set(ctx, boundary_max_size):
        if not _evaluable(ctx, mu):
            continue
        for p in pts:
            v = brauer_character(ctx, mu, p)
            if abs(v) > BOUNDARY_TOL:
                raise ConfigurationError(f"boundary character {list(mu)} is {v:.3g} at x={p.x}, det={p.det}")
    return pts


# --- direct solve -----------------------------------------------------------------


@dataclass
class _System:
    unknowns: list[Partition]
    points: list[EvalPoint]
    matrix: np.ndarray
    pinv: np.ndarray


@lru_cache(maxsize=None)
def _system(ctx: RootOfUnityContext, n: int) -> _System:
    unknowns = [m for m in brauer_labels(ctx, n).members if _evaluable(ctx, m)]
    cap = max(64, 6 * len(unknowns))
    pts = evaluation_points(ctx, max_points=cap, boundary_max_size=n)
    a = np.array([[brauer_character(ctx, mu, p) for mu in unknowns] for p in pts])
    if np.linalg.matrix_rank(a, tol=1e-8) < len(unknowns):
        raise SolveError(f"character matrix for {ctx} at n={n} is rank deficient")
    return _System(unknowns, pts, a, np.linalg.pinv(a))


def fusion_branch_direct(ctx: RootOfUnityContext, lam) -> BranchingTable:
    lam = Partition(lam)
    if not is_hecke_label(ctx, lam):
        raise LabelError(f"{list(lam)} is not a hecke label for {ctx}")
    sys_ = _system(ctx, lam.size)
    rhs = np.array([hecke_character(ctx, lam, p) for p in sys_.points])
    sol = sys_.pinv @ rhs
    # relative to the largest character value; quantum dimensions grow fast with N
    residual = float(np.max(np.abs(sys_.matrix @ sol - rhs))) / max(1.0, float(np.max(np.abs(rhs))))
    if residual > RESIDUAL_TOL:
        raise SolveError(f"residual {residual:.3g} for {list(lam)} at {ctx}")
    rounded = np.rint(sol)
    drift = float(np.max(np.abs(sol - rounded))) if sol.size else 0.0
    if drift > INTEGRALITY_TOL:
        raise SolveError(f"non-integral multiplicities (off by {drift:.3g}) for {list(lam)} at {ctx}")
    entries = {mu: int(v) for mu, v in zip(sys_.unknowns, rounded)}
    return BranchingTable(ctx, lam, entries, "direct")


# --- classical tables ---------------------------------------------------------------


def auxiliary_level(N: int, lam: Partition) -> int:
    """Smallest ell' >= 2(|lam| + |N| + 1) in the unitary parity class."""
    ell = 2 * (Partition(lam).size + abs(N) + 1)
    if N > 0 and (ell - N) % 2:
        ell += 1
    return ell


def in_stable_range(N: int, lam: Partition) -> bool:
    lam = Partition(lam)
    if N > 0:
        return 2 * len(lam) <= N
    return 2 * lam.row(1) <= -N


def littlewood_stable(lam, family: Literal["O", "Sp"]) -> BranchingTable:
    """sum over beta with even rows (O) or even columns (Sp) of c^lam_{mu beta}."""
    lam = Partition(lam)
    entries: dict[Partition, int] = {}
    for b in range(0, lam.size + 1, 2):
        for beta in partitions_of(b, max_rows=len(lam), max_part=lam.row(1)):
            shape = beta if family == "O" else beta.conjugate()
            if any(r % 2 for r in shape):
                continue
            for mu in partitions_of(lam.size - b, max_rows=len(lam), max_part=lam.row(1)):
                c = lr_coefficient(lam, mu, beta)
                if c:
                    entries[mu] = entries.get(mu, 0) + c
    return BranchingTable(f"littlewood-{family}", lam, entries, "littlewood")


@lru_cache(maxsize=None)
def classical_branch(N: int, lam) -> BranchingTable:
    """The finite-N classical table, read off at a level where folding is trivial."""
    lam = Partition(lam)
    aux = RootOfUnityContext(N, auxiliary_level(N, lam))
    table = fusion_branch_direct(aux, lam)
    table = BranchingTable(f"classical N={N}", lam, dict(table.entries), "classical")
    if in_stable_range(N, lam):
        # N < 0 stores transposed symplectic labels, which turns the rule into the O one
        ref = littlewood_stable(lam, "O")
        if ref.entries != table.entries:
            raise ArithmeticError(f"classical table for {list(lam)}, N={N} disagrees with the stable rule")
    return table


# --- folding --------------------------------------------------------------------------


def _sort_desc(coords: list) -> tuple[list, int] | None:
    """Sort descending; returns None on a repeated value, else the permutation sign."""
    if len(set(coords)) < len(coords):
        return None
    order = sorted(range(len(coords)), key=lambda i: -coords[i])
    sign, seen = 1, [False] * len(order)
    for s in range(len(order)):
        if seen[s]:
            continue
        j, length = s, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        sign *= -1 if length % 2 == 0 else 1
    return [coords[i] for i in order], sign


def _fold_odd(ctx: RootOfUnityContext, nu: Partition, target_parity: int):
    """N = 2k+1: translations ell Z^k, sign epsilon.  Works in doubled coordinates."""
    N, ell, k = ctx.N, ctx.ell, ctx.k
    base = nu if nu.col(1) <= k else associated_diagram(nu, N)
    twice = [2 * base.row(i) + 2 * k + 1 - 2 * i for i in range(1, k + 1)]
    sign, reduced = 1, []
    for c in twice:
        r = c % (2 * ell)
        if r in (0, ell):
            return []
        if r > ell:
            r, sign = 2 * ell - r, -sign
        reduced.append(r)
    sorted_ = _sort_desc(reduced)
    if sorted_ is None:
        return []
    delta, psign = sorted_
    mu = Partition((d - (2 * k + 1 - 2 * i)) // 2 for i, d in enumerate(delta, start=1))
    if mu.size % 2 != target_parity:
        mu = associated_diagram(mu, N)
    return [(mu, sign * psign)]


def _fold_even(ctx: RootOfUnityContext, nu: Partition):
    """N = 2k: translations ell Z^k, twisted sign.

    On det = +1 elements a sign change costs nothing and each translation
    by ell costs -1; on det = -1 elements (an Sp(2k-2) character in the
    first k-1 coordinates) it is the other way round.
    """
    N, ell, k = ctx.N, ctx.ell, ctx.k
    sdet = 1
    base = nu
    if nu.col(1) > k:
        base, sdet = associated_diagram(nu, N), -1
    coords = [base.row(i) + k - i for i in range(1, k + 1)]
    s_plus = s_minus = 1
    reduced = []
    for i, c in enumerate(coords):
        q, r = divmod(c, ell)
        if 2 * r == ell:
            return []
        flip = 2 * r > ell
        if flip:
            r, q = ell - r, q + 1
        s_plus *= (-1) ** q
        if i < k - 1 and flip:
            s_minus = -s_minus
        reduced.append(r)
    sorted_ = _sort_desc(reduced)
    if sorted_ is None:
        return []
    delta, psign = sorted_
    s_plus *= psign
    s_minus *= psign
    mu = Partition(d - (k - i) for i, d in enumerate(delta, start=1))
    if len(base) == k:
        if delta[-1] == 0:
            return [(mu, s_plus), (associated_diagram(mu, N), s_plus)]
        return [(mu, s_plus)]
    if sdet * s_minus == s_plus:
        return [(mu, s_plus)]
    return [(associated_diagram(mu, N), s_plus)]


def _fold_even_untwisted(ctx: RootOfUnityContext, nu: Partition):
    """N = 2k with the plain sign epsilon: every reflection costs -1 (negative control)."""
    N, ell, k = ctx.N, ctx.ell, ctx.k
    base, sdet = (nu, 1) if nu.col(1) <= k else (associated_diagram(nu, N), -1)
    sign, reduced = 1, []
    for c in (base.row(i) + k - i for i in range(1, k + 1)):
        r = c % ell
        if r == 0 or 2 * r == ell:
            return []
        if 2 * r > ell:
            r, sign = ell - r, -sign
        reduced.append(r)
    sorted_ = _sort_desc(reduced)
    if sorted_ is None:
        return []
    delta, psign = sorted_
    mu = Partition(d - (k - i) for i, d in enumerate(delta, start=1))
    return [(mu if sdet == 1 else associated_diagram(mu, N), sign * psign)]


def _fold_symplectic(ctx: RootOfUnityContext, nu: Partition):
    """N = -2k on transposed labels: translations ell Q, sign epsilon."""
    ell, k = ctx.ell, ctx.k
    base = nu.conjugate()
    coords = [base.row(i) + k + 1 - i for i in range(1, k + 1)]
    sign, parity, reduced = 1, 0, []
    for c in coords:
        q, r = divmod(c, ell)
        if r == 0:
            return []
        if 2 * r > ell:
            r, q, sign = ell - r, q + 1, -sign
        parity += q
        reduced.append(r)
    sorted_ = _sort_desc(reduced)
    if sorted_ is None:
        return []
    delta, psign = sorted_
    sign *= psign
    if parity % 2:
        delta[0], sign = ell - delta[0], -sign
    mu_t = Partition(d - (k + 1 - i) for i, d in enumerate(delta, start=1))
    return [(mu_t.conjugate(), sign)]


def fold_label(ctx: RootOfUnityContext, nu, target_parity: int, sign_name: str | None = None):
    """Signed alcove labels carrying the classical character nu at level ell."""
    nu = Partition(nu)
    if ctx.N < 0:
        return _fold_symplectic(ctx, nu)
    if ctx.N % 2:
        return _fold_odd(ctx, nu, target_parity)
    if sign_name == "epsilon":
        return _fold_even_untwisted(ctx, nu)
    return _fold_even(ctx, nu)


def fusion_branch_folded(ctx: RootOfUnityContext, lam, sign_name: str | None = None) -> BranchingTable:
    """Fold the classical table; ``sign_name='epsilon'`` gives the untwisted variant for N even."""
    lam = Partition(lam)
    if not is_hecke_label(ctx, lam):
        raise LabelError(f"{list(lam)} is not a hecke label for {ctx}")
    if brauer_case(ctx) not in ("a", "c"):
        raise NotImplementedError(f"folding is only set up for the unitary cases, not {ctx}")
    classical = classical_branch(ctx.N, lam)
    acc: dict[Partition, int] = {}
    for nu, b in classical.entries.items():
        for mu, s in fold_label(ctx, nu, lam.size % 2, sign_name):
            if not is_brauer_label(ctx, mu):
                raise AssertionError(f"folding produced {list(mu)} outside the alcove at {ctx}")
            acc[mu] = acc.get(mu, 0) + s * b
    if any(v < 0 for v in acc.values()):
        bad = {tuple(m): v for m, v in acc.items() if v < 0}
        raise SolveError(f"folding gave negative multiplicities {bad} for {list(lam)} at {ctx}")
    return BranchingTable(ctx, lam, acc, "folded")


# --- weights as character values ---------------------------------------------------------


def brauer_weight_from_character(ctx: RootOfUnityContext, lam) -> float:
    lam = Partition(lam)
    value = brauer_character(ctx, lam, rho_point(ctx))
    return value if ctx.N > 0 else (-1) ** lam.size * value


def hecke_weight_from_character(ctx: RootOfUnityContext, lam) -> float:
    lam = Partition(lam)
    n = abs(ctx.N)
    eig = [complex(math.cos(2 * math.pi * r / ctx.ell), math.sin(2 * math.pi * r / ctx.ell)) for r in ((n + 1) / 2 - i for i in range(1, n + 1))]
    shape = lam if ctx.N > 0 else lam.conjugate()
    value = schur(shape, eig).real
    return value if ctx.N > 0 else (-1) ** lam.size * value

