"""Tensor-space matrices for the q-Brauer generators and a relation checker."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .qarith import RootOfUnityContext

MAX_DIM = 4096


class ResourceError(ValueError):
    """The requested tensor power is larger than the dense-matrix cap."""


def q_number(q: complex, m: int) -> complex:
    if abs(q - q**-1) < 1e-14:
        return complex(m)
    return (q**m - q**-m) / (q - q**-1)


def _unit(N: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((N, N), dtype=complex)
    m[i, j] = 1
    return m


def build_R(q: complex, N: int) -> np.ndarray:
    """The check-R matrix.

    With numpy's kron ordering of the two tensor factors, the (q - 1/q)
    term has to sit on E_jj (x) E_ii, j > i, for Q as written to satisfy
    e g_2 e = q^{N+1} e.  Putting it on E_ii (x) E_jj instead amounts to
    inverting q in Q.
    """
    R = np.zeros((N * N, N * N), dtype=complex)
    for i in range(N):
        R += q * np.kron(_unit(N, i, i), _unit(N, i, i))
        for j in range(N):
            if i != j:
                R += np.kron(_unit(N, i, j), _unit(N, j, i))
            if i < j:
                R += (q - 1 / q) * np.kron(_unit(N, j, j), _unit(N, i, i))
    return R


def build_Q(q: complex, N: int) -> np.ndarray:
    Q = np.zeros((N * N, N * N), dtype=complex)
    for i in range(N):
        # 0-based i here is i+1 in the formula
        w = q ** (N - 1 - 2 * i)
        for j in range(N):
            Q += w * np.kron(_unit(N, i, j), _unit(N, i, j))
    return Q


def embed(A: np.ndarray, N: int, n: int, i: int) -> np.ndarray:
    """1_{i-1} (x) A (x) 1_{n-1-i} for A acting on two adjacent factors (1-based i)."""
    return np.kron(np.kron(np.eye(N ** (i - 1)), A), np.eye(N ** (n - 1 - i)))


@dataclass
class MolevRepresentation:
    q: complex
    N: int
    n: int
    g: dict[int, np.ndarray]
    e: np.ndarray

    @property
    def dim(self) -> int:
        return self.N**self.n

    def generators(self) -> list[np.ndarray]:
        return [self.g[i] for i in sorted(self.g)] + [self.e]


def representation(ctx: RootOfUnityContext | int, n: int, q: complex | None = None) -> MolevRepresentation:
    """g_i -> q R_{n-i}, e -> Q_{n-1} on (C^N)^{(x) n}.

    ``ctx`` may be a context (q defaults to exp(i pi / ell)) or a bare N
    together with an explicit q, e.g. q = 1.
    """
    N = ctx.N if isinstance(ctx, RootOfUnityContext) else int(ctx)
    if q is None:
        if not isinstance(ctx, RootOfUnityContext):
            raise ValueError("q is required when no context is given")
        q = ctx.q
    if N < 2:
        raise ValueError("the tensor representation needs N >= 2")
    if n < 2:
        raise ValueError("need n >= 2")
    if N**n > MAX_DIM:
        raise ResourceError(f"{N}^{n} exceeds the dense cap {MAX_DIM}")
    R, Q = build_R(q, N), build_Q(q, N)
    g = {i: q * embed(R, N, n, n - i) for i in range(1, n)}
    return MolevRepresentation(q, N, n, g, embed(Q, N, n, n - 1))


@dataclass
class RelationReport:
    residuals: dict[str, float] = field(default_factory=dict)
    tol: float = 1e-10

    @property
    def failing(self) -> list[str]:
        return [k for k, v in self.residuals.items() if not v < self.tol]

    @property
    def passed(self) -> bool:
        return not self.failing

    @property
    def worst(self) -> float:
        return max(self.residuals.values(), default=0.0)

    def as_dict(self):
        return {"residuals": self.residuals, "tol": self.tol, "passed": self.passed, "failing": self.failing}


def _res(a: np.ndarray, b) -> float:
    return float(np.max(np.abs(a - b)))


def verify_relations(rep: MolevRepresentation, tol: float = 1e-10) -> RelationReport:
    q, N, n, g, e = rep.q, rep.N, rep.n, rep.g, rep.e
    one = np.eye(rep.dim)
    inv = {i: np.linalg.inv(m) for i, m in g.items()}
    r: dict[str, float] = {}

    def put(name, value):
        r[name] = max(r.get(name, 0.0), value)

    for i in range(1, n):
        put("H quadratic", _res(g[i] @ g[i], (q**2 - 1) * g[i] + q**2 * one))
        if i + 1 < n:
            put("H braid", _res(g[i] @ g[i + 1] @ g[i], g[i + 1] @ g[i] @ g[i + 1]))
        for j in range(i + 2, n):
            put("H commute", _res(g[i] @ g[j], g[j] @ g[i]))
    put("E1", _res(e @ e, q_number(q, N) * e))
    for i in range(3, n):
        put("E2 commute", _res(e @ g[i], g[i] @ e))
    put("E2 eg1", _res(e @ g[1], q**2 * e))
    if n >= 3:
        put("E2 eg2e", _res(e @ g[2] @ e, q ** (N + 1) * e))
        put("E2 eg2inv e", _res(e @ inv[2] @ e, q ** (-1 - N) * e))
    if n >= 4:
        w = g[2] @ g[3] @ inv[1] @ inv[2]
        e2 = e @ w @ e
        put("E3 left", _res(w @ e2, e2))
        put("E3 right", _res(e2 @ w, e2))
    return RelationReport(r, tol)


def verify_context(ctx: RootOfUnityContext, n: int, tol: float = 1e-10) -> RelationReport:
    return verify_relations(representation(ctx, n), tol)


def word_span_dimension(rep: MolevRepresentation, max_length: int | None = None, cutoff: float = 1e-8) -> int:
    """Dimension of the span of all words of length <= max_length (default 2n) in the generators."""
    max_length = 2 * rep.n if max_length is None else max_length
    gens = rep.generators()
    basis: list[np.ndarray] = []

    def independent(m: np.ndarray) -> bool:
        stack = np.array([b for b in basis] + [m.ravel()])
        s = np.linalg.svd(stack, compute_uv=False)
        return s[-1] > cutoff * s[0]

    frontier = [np.eye(rep.dim, dtype=complex)]
    basis.append(frontier[0].ravel())
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for gen in gens:
                m = w @ gen
                if independent(m):
                    basis.append(m.ravel())
                    nxt.append(m)
        if not nxt:
            break
        frontier = nxt
    return len(basis)
