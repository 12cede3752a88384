"""Bratteli diagrams, inclusion graphs, stabilization and the two index formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
import numpy as np

from .branching import fusion_branch_direct
from .labels import (
    brauer_labels,
    hecke_labels,
    is_brauer_label,
    is_classical_brauer_label,
    is_hecke_label,
    periodicity_map,
)
from .partitions import Partition, add_box, canonical, remove_box
from .qarith import RootOfUnityContext, brauer_weight, hecke_weight


class StabilizationError(RuntimeError):
    pass


# --- Bratteli diagrams ------------------------------------------------------------


@dataclass
class BratteliDiagram:
    kind: str
    levels: list[list[Partition]]
    edges: list[list[tuple[Partition, Partition]]]
    paths: list[dict[Partition, int]]

    def algebra_dimension(self, n: int) -> int:
        return sum(c * c for c in self.paths[n].values())


def _allowed(ctx, kind: str):
    if isinstance(ctx, RootOfUnityContext):
        return (lambda p: is_hecke_label(ctx, p)) if kind == "hecke" else (lambda p: is_brauer_label(ctx, p))
    N = int(ctx)
    if kind == "hecke":
        return (lambda p: len(p) <= N) if N > 0 else (lambda p: p.row(1) <= -N)
    return lambda p: is_classical_brauer_label(N, p)


def build_bratteli(ctx: RootOfUnityContext | int, kind: str, n_max: int) -> BratteliDiagram:
    """Levels 0..n_max.  Pass a bare N instead of a context for the untruncated diagram."""
    ok = _allowed(ctx, kind)
    levels = [[Partition()]]
    paths = [{Partition(): 1}]
    edges: list[list[tuple[Partition, Partition]]] = [[]]
    for n in range(1, n_max + 1):
        count: dict[Partition, int] = {}
        level_edges = []
        for mu in levels[-1]:
            nbrs = add_box(mu) if kind == "hecke" else (add_box(mu) | remove_box(mu))
            for lam in nbrs:
                if ok(lam):
                    count[lam] = count.get(lam, 0) + paths[-1][mu]
                    level_edges.append((mu, lam))
        levels.append(canonical(count))
        paths.append(count)
        edges.append(level_edges)
    return BratteliDiagram(kind, levels, edges, paths)


# --- inclusion graphs --------------------------------------------------------------------


@dataclass
class InclusionGraph:
    context: RootOfUnityContext
    n: int
    even: list[Partition]
    odd: list[Partition]
    edges: dict[tuple[Partition, Partition], int]
    a: dict[Partition, float]
    b: dict[Partition, float]
    n_stable: int | None = None

    @property
    def index(self) -> float:
        return sum(v * v for v in self.a.values()) / sum(v * v for v in self.b.values())

    def matrix(self) -> np.ndarray:
        m = np.zeros((len(self.even), len(self.odd)), dtype=int)
        col = {mu: j for j, mu in enumerate(self.odd)}
        row = {lam: i for i, lam in enumerate(self.even)}
        for (lam, mu), v in self.edges.items():
            m[row[lam], col[mu]] = v
        return m

    def neighbours(self, v: Partition) -> set[Partition]:
        v = Partition(v)
        return {lam for (lam, mu) in self.edges if mu == v} | {mu for (lam, mu) in self.edges if lam == v}

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for lam in self.even:
            g.add_node(("even", lam), side="even")
        for mu in self.odd:
            g.add_node(("odd", mu), side="odd")
        for (lam, mu), v in self.edges.items():
            g.add_edge(("even", lam), ("odd", mu), mult=v)
        return g

    def as_json(self):
        index = self.index
        oi = {mu: j for j, mu in enumerate(self.odd)}
        ei = {lam: i for i, lam in enumerate(self.even)}
        return {
            "even": [{"label": list(l), "dtilde": self.a[l]} for l in self.even],
            "odd": [{"label": list(m), "d": self.b[m], "local_index": self.b[m] ** 2 * index} for m in self.odd],
            "edges": [[ei[l], oi[m], v] for (l, m), v in sorted(self.edges.items(), key=lambda kv: (ei[kv[0][0]], oi[kv[0][1]]))],
            "index": index,
            "n_stable": self.n_stable,
        }

    def to_dot(self) -> str:
        out = [f'graph "N={self.context.N},ell={self.context.ell}" {{']
        for i, l in enumerate(self.even):
            out.append(f'  e{i} [shape=box, label="{_name(l)}"];')
        for j, m in enumerate(self.odd):
            out.append(f'  o{j} [shape=circle, label="{_name(m)}"];')
        data = self.as_json()
        for i, j, v in data["edges"]:
            extra = f' [label="{v}"]' if v > 1 else ""
            out.append(f"  e{i} -- o{j}{extra};")
        out.append("}")
        return "\n".join(out) + "\n"


def _name(p: Partition) -> str:
    return "[" + ",".join(map(str, p)) + "]" if p else "∅"


@lru_cache(maxsize=None)
def inclusion_graph(ctx: RootOfUnityContext, n: int) -> InclusionGraph:
    if n < 2 or n % 2:
        raise ValueError("inclusion graphs are taken at even levels n >= 2")
    even = hecke_labels(ctx, n).members
    edges: dict[tuple[Partition, Partition], int] = {}
    for lam in even:
        for mu, v in fusion_branch_direct(ctx, lam).entries.items():
            edges[(lam, mu)] = v
    used = {mu for (_, mu) in edges}
    odd = [mu for mu in brauer_labels(ctx, n).members if mu in used]
    return InclusionGraph(
        ctx,
        n,
        list(even),
        odd,
        edges,
        {l: hecke_weight(ctx, l) for l in even},
        {m: brauer_weight(ctx, m) for m in odd},
    )


def _shifted_edges(ctx, graph: InclusionGraph, periods: int):
    out = {}
    for (lam, mu), v in graph.edges.items():
        out[(periodicity_map("hecke", ctx, lam, 2 * periods), periodicity_map("brauer", ctx, mu))] = v
    return out


def _same_after_shift(ctx, g0: InclusionGraph, g1: InclusionGraph, periods: int) -> bool:
    try:
        mapped = _shifted_edges(ctx, g0, periods)
        even = {periodicity_map("hecke", ctx, l, 2 * periods) for l in g0.even}
    except ValueError:
        return False
    return mapped == g1.edges and even == set(g1.even) and set(g0.odd) == set(g1.odd)


@lru_cache(maxsize=None)
def stabilize(ctx: RootOfUnityContext, n_start: int = 2, n_cap: int = 40) -> tuple[int, InclusionGraph]:
    """Smallest even n whose graph agrees with the graphs one and two periods (2|N|) later."""
    step = 2 * abs(ctx.N)
    n = max(2, n_start + n_start % 2)
    while n <= n_cap:
        g0 = inclusion_graph(ctx, n)
        if _same_after_shift(ctx, g0, inclusion_graph(ctx, n + step), 1) and _same_after_shift(
            ctx, g0, inclusion_graph(ctx, n + 2 * step), 2
        ):
            g0.n_stable = n
            return n, g0
        n += 2
    raise StabilizationError(f"no stabilization for {ctx} up to n={n_cap}")


def principal_level(ctx: RootOfUnityContext, n_stable: int) -> int:
    """First stable level containing the trivial Hecke class (a multiple of lcm(2, |N|))."""
    m = math.lcm(2, abs(ctx.N))
    return -(-n_stable // m) * m


def principal_graph(ctx: RootOfUnityContext, n_cap: int = 40) -> InclusionGraph:
    n_stable, _ = stabilize(ctx, 2, n_cap)
    g = inclusion_graph(ctx, principal_level(ctx, n_stable))
    g.n_stable = n_stable
    return g


# --- index -------------------------------------------------------------------------------------


def index_ratio(ctx: RootOfUnityContext, n_cap: int = 40) -> float:
    return principal_graph(ctx, n_cap).index


def p_weights(N: int) -> tuple[list[tuple[int, ...]], int, int]:
    """Positive weights of the complement p, its zero-weight multiplicity, and b(N)."""
    k = abs(N) // 2

    def e(i):
        return tuple(int(t == i) for t in range(k))

    pm = []
    for i in range(k):
        for j in range(i + 1, k):
            pm.append(tuple(a - b for a, b in zip(e(i), e(j))))
            pm.append(tuple(a + b for a, b in zip(e(i), e(j))))
    doubled = [tuple(2 * t for t in e(i)) for i in range(k)]
    if N > 0 and N % 2:
        return doubled + [e(i) for i in range(k)] + pm, k, 1
    if N > 0:
        return doubled + pm, k - 1, 2
    if N % 2:
        raise NotImplementedError("odd negative N is not covered by the weight lists")
    return pm, k - 1, 1


def _rho_check(N: int) -> np.ndarray:
    return np.array([(abs(N) + 1) / 2 - i for i in range(1, abs(N) // 2 + 1)])


def index_closed_form(ctx: RootOfUnityContext) -> float:
    weights, zero, b = p_weights(ctx.N)
    rho = _rho_check(ctx.N)
    value = b * ctx.ell**zero
    for w in weights:
        value /= 4 * math.sin(float(np.dot(w, rho)) * math.pi / ctx.ell) ** 2
    return value


def dim_p(N: int) -> int:
    weights, zero, _ = p_weights(N)
    return 2 * len(weights) + zero


def pf_consistency(graph: InclusionGraph, index: float | None = None) -> float:
    index = graph.index if index is None else index
    worst = 0.0
    for mu in graph.odd:
        total = sum(v * graph.a[lam] for (lam, m), v in graph.edges.items() if m == mu)
        target = index * graph.b[mu]
        worst = max(worst, abs(total - target) / abs(target))
    return worst


def local_indices(graph: InclusionGraph) -> dict[Partition, float]:
    index = graph.index
    return {mu: graph.b[mu] ** 2 * index for mu in graph.odd}


@dataclass
class AsymptoticsRow:
    ell: int
    index: float
    ratio: float


@dataclass
class AsymptoticsTable:
    N: int
    dim_p: int
    limit: float
    rows: list[AsymptoticsRow] = field(default_factory=list)

    def monotone(self) -> bool:
        r = [row.ratio for row in self.rows]
        diffs = np.diff(r)
        return bool(np.all(diffs < 0) or np.all(diffs > 0))

    def settling(self) -> bool:
        """Successive changes shrink, and the ratios approach the positive limit."""
        r = [row.ratio for row in self.rows]
        steps = np.abs(np.diff(r))
        gaps = [abs(x - self.limit) for x in r]
        return bool(np.all(np.diff(steps) < 0) and np.all(np.diff(gaps) < 0) and self.limit > 0)


def asymptotics_probe(N: int, ells) -> AsymptoticsTable:
    """index(ell) / ell^{dim p}; the limit uses sin x ~ x in the closed form."""
    weights, zero, b = p_weights(N)
    rho = _rho_check(N)
    d = dim_p(N)
    limit = b * math.prod(1 / (2 * math.pi * float(np.dot(w, rho))) ** 2 for w in weights)
    table = AsymptoticsTable(N, d, limit)
    for ell in ells:
        idx = index_closed_form(RootOfUnityContext(N, ell))
        table.rows.append(AsymptoticsRow(ell, idx, idx / ell**d))
    return table


# --- reference graphs ---------------------------------------------------------------------------


def dynkin_graph(kind: str, n: int) -> nx.Graph:
    """Simply laced Dynkin graphs A_n and D_n as plain graphs with unit multiplicities."""
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    if kind == "A":
        g.add_edges_from((i, i + 1) for i in range(1, n))
    elif kind == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")  # D3 is A3
        g.add_edges_from((i, i + 1) for i in range(1, n - 2))
        g.add_edges_from([(n - 2, n - 1), (n - 2, n)])
    else:
        raise ValueError(f"unknown Dynkin type {kind!r}")
    nx.set_edge_attributes(g, 1, "mult")
    return g


def _mult(a, b):
    return a.get("mult", 1) == b.get("mult", 1)


def is_isomorphic_to_dynkin(graph: InclusionGraph, kind: str, n: int) -> bool:
    return nx.is_isomorphic(graph.to_networkx(), dynkin_graph(kind, n), edge_match=_mult)


def graphs_isomorphic(g1: InclusionGraph, g2: InclusionGraph) -> bool:
    return nx.is_isomorphic(
        g1.to_networkx(),
        g2.to_networkx(),
        node_match=lambda a, b: a["side"] == b["side"],
        edge_match=_mult,
    )


def identify_dynkin(graph: InclusionGraph) -> str | None:
    """Name of the A/D Dynkin graph isomorphic to ``graph``, if any."""
    size = len(graph.even) + len(graph.odd)
    for kind in ("A", "D"):
        if (kind == "A" or size >= 4) and is_isomorphic_to_dynkin(graph, kind, size):
            return f"{kind}{size}"
    return None


def brauer_label_graph(ctx: RootOfUnityContext) -> nx.Graph:
    """All of Lambda(N, ell), joined when two diagrams differ by one box."""
    from .labels import brauer_label_set

    members = brauer_label_set(ctx)
    g = nx.Graph()
    g.add_nodes_from(members)
    for mu in members:
        for lam in add_box(mu):
            if lam in g:
                g.add_edge(mu, lam, mult=1)
    return g


def classical_dimension(N: int, n: int) -> int:
    """sum of (paths)^2 at level n of the untruncated Brauer diagram."""
    return build_bratteli(N, "brauer", n).algebra_dimension(n)

