"""Quantum integers at q = exp(i*pi/ell) and the two trace-weight products."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from .partitions import Partition, brauer_content, hook_length, strip_full_columns

DEFAULT_TOL = 1e-9

Kind = Literal["hecke", "brauer"]


class LabelError(ValueError):
    """A diagram is not in the label set required by an operation."""


@dataclass(frozen=True)
class RootOfUnityContext:
    """The pair (N, ell); q = exp(i*pi/ell) is implied."""

    N: int
    ell: int

    def __post_init__(self):
        if not 1 < abs(self.N) < self.ell:
            raise ValueError(f"need 1 < |N| < ell, got N={self.N}, ell={self.ell}")

    @property
    def k(self) -> int:
        return abs(self.N) // 2

    @property
    def q(self) -> complex:
        return complex(math.cos(math.pi / self.ell), math.sin(math.pi / self.ell))

    def qint(self, m: int) -> float:
        return qint(m, self.ell)

    @property
    def rho_check(self) -> tuple[float, ...]:
        """((|N|+1)/2 - i) for i = 1..k."""
        return tuple((abs(self.N) + 1) / 2 - i for i in range(1, self.k + 1))

    def __str__(self):
        return f"(N={self.N}, ell={self.ell})"


def qint(m: int, ell: int) -> float:
    """[m] = sin(m*pi/ell) / sin(pi/ell)."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    r = m % (2 * ell)
    return math.sin(math.pi * r / ell) / math.sin(math.pi / ell)


def _require(ctx: RootOfUnityContext, lam: Partition, kind: Kind) -> None:
    from .labels import is_brauer_label, is_hecke_label

    ok = is_hecke_label(ctx, lam) if kind == "hecke" else is_brauer_label(ctx, lam)
    if not ok:
        raise LabelError(f"{list(lam)} is not a {kind} label for {ctx}")


def _product(ctx: RootOfUnityContext, lam: Partition, shift) -> float:
    value = 1.0
    for i, j in lam.boxes():
        den = ctx.qint(hook_length(lam, i, j))
        assert abs(den) > 1e-12, f"vanishing hook q-number in {list(lam)}"
        value *= ctx.qint(ctx.N + shift(lam, i, j)) / den
    return value


def hecke_weight(ctx: RootOfUnityContext, lam, check: bool = True) -> float:
    """d~_lam = prod over boxes of [N + j - i] / [h(i, j)].

    Full columns of N boxes (full rows of |N| boxes when N < 0) have
    quantum dimension +-1 and are stripped first; on the remainder the
    product has no vanishing factors.
    """
    lam = Partition(lam)
    if check:
        _require(ctx, lam, "hecke")
    n = abs(ctx.N)
    if ctx.N > 0:
        core, c = strip_full_columns(lam, n)
        sign = 1
    else:
        core_t, c = strip_full_columns(lam.conjugate(), n)
        core = core_t.conjugate()
        sign = (-1) ** (n * c)
    return sign * _product(ctx, core, lambda p, i, j: j - i)


def brauer_weight(ctx: RootOfUnityContext, lam, check: bool = True) -> float:
    """d_lam = prod over boxes of [N + d(i, j)] / [h(i, j)]."""
    lam = Partition(lam)
    if check:
        _require(ctx, lam, "brauer")
    return _product(ctx, lam, brauer_content)


def markov_weight(ctx: RootOfUnityContext, lam, n: int | None = None) -> float:
    """omega_{lam,n} = d_lam / [N]^n (n defaults to |lam|)."""
    lam = Partition(lam)
    n = lam.size if n is None else n
    return brauer_weight(ctx, lam) / ctx.qint(ctx.N) ** n


@dataclass
class WeightTable:
    context: RootOfUnityContext
    kind: Kind
    entries: dict[Partition, float] = field(default_factory=dict)

    @classmethod
    def build(cls, ctx: RootOfUnityContext, kind: Kind, labels) -> "WeightTable":
        f = hecke_weight if kind == "hecke" else brauer_weight
        return cls(ctx, kind, {Partition(l): f(ctx, l) for l in labels})

    def rows(self):
        for lam, v in self.entries.items():
            yield lam, self.kind, v


@dataclass
class PositivityReport:
    context: RootOfUnityContext
    all_positive: bool
    first_negative: tuple[Partition, float] | None
    checked: int

    def as_dict(self):
        neg = None
        if self.first_negative is not None:
            neg = {"label": list(self.first_negative[0]), "omega": self.first_negative[1]}
        return {
            "N": self.context.N,
            "ell": self.context.ell,
            "all_positive": self.all_positive,
            "first_negative": neg,
            "checked": self.checked,
        }


def positivity_report(ctx: RootOfUnityContext, tol: float = DEFAULT_TOL) -> PositivityReport:
    """Enumerate the Brauer labels and test omega_{lam,|lam|} > tol.

    The sign of omega_{lam,n} only depends on the parity of n, so testing
    n = |lam| covers every level.  For N > 0 this is the same as d_lam > 0.
    The tolerance is applied to the sign-corrected d_lam rather than to
    omega, whose magnitude shrinks geometrically with |lam|.
    """
    from .labels import brauer_label_set

    members = brauer_label_set(ctx)
    sign_qn = math.copysign(1.0, ctx.qint(ctx.N))
    for lam in members:
        if not brauer_weight(ctx, lam) * sign_qn ** lam.size > tol:
            return PositivityReport(ctx, False, (lam, markov_weight(ctx, lam)), len(members))
    return PositivityReport(ctx, True, None, len(members))


def sufficient_for_positivity(N: int, ell: int) -> bool:
    """Cases where positivity holds for structural reasons: N > 0 with ell - N even, or N < 0 odd."""
    return (N > 0 and (ell - N) % 2 == 0) or (N < 0 and N % 2 == 1)
