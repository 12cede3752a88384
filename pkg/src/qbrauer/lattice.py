"""Lattices, the hyperoctahedral group, S-matrices and character evaluators."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Literal, Sequence

import numpy as np

from .partitions import Partition, strip_full_columns

Family = Literal["SO_odd", "O_even", "Sp", "U"]
SignName = Literal["epsilon", "epsilon_tilde"]


class DegeneratePointError(ValueError):
    """The Weyl denominator vanishes at the requested point."""


# --- hyperoctahedral group ---------------------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    """(w v)_i = signs[i] * v[perm[i]]."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def act(self, v):
        return tuple(s * v[p] for s, p in zip(self.signs, self.perm))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for s, p in zip(self.signs, self.perm))
        return SignedPermutation(perm, signs)

    @property
    def perm_sign(self) -> int:
        return _perm_sign(self.perm)

    def epsilon(self) -> int:
        """The determinant: sign of the permutation times all sign flips."""
        return self.perm_sign * math.prod(self.signs)

    def epsilon_tilde(self) -> int:
        """Agrees with epsilon on W(D_k) and is its negative elsewhere."""
        return self.perm_sign

    def sign(self, name: SignName) -> int:
        return self.epsilon() if name == "epsilon" else self.epsilon_tilde()


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class WeylGroupBk:
    """All 2^k k! signed permutations of k coordinates."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("rank must be positive")
        self.k = k
        self.elements = [
            SignedPermutation(p, s)
            for p in itertools.permutations(range(k))
            for s in itertools.product((1, -1), repeat=k)
        ]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> SignedPermutation:
        return SignedPermutation(tuple(range(self.k)), (1,) * self.k)

    def is_type_d(self, w: SignedPermutation) -> bool:
        return math.prod(w.signs) == 1


# --- lattices ------------------------------------------------------------------


def _basis(name: str, k: int) -> list[list[Fraction]]:
    """Rows are basis vectors."""
    eye = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    if name == "Z":
        return eye
    if name == "Q":
        if k == 1:
            return [[Fraction(2)]]
        rows = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k - 1):
            rows[i][i], rows[i][i + 1] = Fraction(1), Fraction(-1)
        rows[k - 1][k - 2], rows[k - 1][k - 1] = Fraction(1), Fraction(1)
        return rows
    if name == "P":
        return eye[: k - 1] + [[Fraction(1, 2)] * k]
    raise ValueError(f"unknown lattice {name!r}")


_DUAL = {"Z": "Z", "Q": "P", "P": "Q"}


def _solve(basis: list[list[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates c with sum_i c_i basis[i] = v (exact Gauss-Jordan)."""
    k = len(basis)
    # columns of A are basis vectors
    a = [[basis[j][i] for j in range(k)] + [Fraction(v[i])] for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(k):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][k] for i in range(k)]


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


@dataclass(frozen=True)
class ScaledLattice:
    name: str
    scale: Fraction
    k: int

    def basis(self) -> list[list[Fraction]]:
        return [[self.scale * x for x in row] for row in _basis(self.name, self.k)]

    def dual(self) -> "ScaledLattice":
        return ScaledLattice(_DUAL[self.name], 1 / self.scale, self.k)

    def covolume(self) -> Fraction:
        return abs(_det(self.basis()))

    def contains(self, v) -> bool:
        return all(c.denominator == 1 for c in _solve(self.basis(), [Fraction(x) for x in v]))

    def __str__(self):
        return f"{self.scale}*{self.name}^{self.k}" if self.scale != 1 else f"{self.name}^{self.k}"


def lattice(name: str, k: int, scale=1) -> ScaledLattice:
    return ScaledLattice(name, Fraction(scale), k)


@dataclass(frozen=True)
class LatticePair:
    """M inside L; the finite group L/M and its dual M*/L*."""

    L: ScaledLattice
    M: ScaledLattice

    def __post_init__(self):
        if self.L.k != self.M.k:
            raise ValueError("rank mismatch")
        if not all(self.L.contains(b) for b in self.M.basis()):
            raise ValueError(f"{self.M} is not contained in {self.L}")

    @property
    def k(self) -> int:
        return self.L.k

    @property
    def index(self) -> int:
        idx = self.M.covolume() / self.L.covolume()
        if idx.denominator != 1:
            raise ValueError("index is not finite")
        return int(idx)

    def dual(self) -> "LatticePair":
        return LatticePair(self.M.dual(), self.L.dual())

    def reduce(self, v) -> tuple[Fraction, ...]:
        """Representative of v + M in the centered domain: M-coordinates in [-1/2, 1/2)."""
        basis = self.M.basis()
        coords = _solve(basis, [Fraction(x) for x in v])
        coords = [c - math.floor(c + Fraction(1, 2)) for c in coords]
        return tuple(sum(c * basis[i][j] for i, c in enumerate(coords)) for j in range(self.k))


@lru_cache(maxsize=None)
def coset_representatives(pair: LatticePair) -> tuple[tuple[Fraction, ...], ...]:
    """One centered representative per coset of L/M, by closure under the generators of L."""
    gens = pair.L.basis()
    start = pair.reduce([0] * pair.k)
    seen, frontier = {start}, [start]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                for s in (1, -1):
                    w = pair.reduce([a + s * b for a, b in zip(v, g)])
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        frontier = nxt
    if len(seen) != pair.index:
        raise AssertionError("coset enumeration does not match the index")
    return tuple(sorted(seen))


# --- S-matrices ----------------------------------------------------------------


@dataclass
class SMatrix:
    rows: list[tuple[Fraction, ...]]
    cols: list[tuple[Fraction, ...]]
    row_stabilizers: list[int]
    col_stabilizers: list[int]
    matrix: np.ndarray

    def unitarity_defect(self) -> float:
        m = self.matrix
        return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[1])))) if m.size else 0.0


def _orbits(pair: LatticePair, group: WeylGroupBk, sign: SignName):
    """Orbit representatives with trivial sign on the stabilizer, and stabilizer sizes."""
    reps = coset_representatives(pair)
    done, out = set(), []
    for v in reps:
        if v in done:
            continue
        images = [(w, pair.reduce(w.act(v))) for w in group]
        done.update(img for _, img in images)
        stab = [w for w, img in images if img == v]
        if all(w.sign(sign) == 1 for w in stab):
            out.append((v, len(stab)))
    # representative: lexicographically largest point of each orbit
    return out


def s_matrix(pair: LatticePair, sign: SignName = "epsilon", tol: float = 1e-9) -> SMatrix:
    """Antisymmetrized character matrix of L/M, rows on M*/L*, columns on L/M."""
    group = WeylGroupBk(pair.k)
    cols = _orbits(pair, group, sign)
    rows = _orbits(pair.dual(), group, sign)
    if len(rows) != len(cols):
        raise AssertionError("row and column alcoves have different sizes")
    norm = pair.index ** -0.5
    m = np.zeros((len(rows), len(cols)), dtype=complex)
    signs = [(w, w.sign(sign)) for w in group]
    for a, (g, sg) in enumerate(rows):
        gf = [float(x) for x in g]
        for b, (x, sx) in enumerate(cols):
            xf = np.array([float(t) for t in x])
            total = sum(s * np.exp(2j * math.pi * np.dot(w.act(gf), xf)) for w, s in signs)
            m[a, b] = norm * total / math.sqrt(sg * sx)
    out = SMatrix([r for r, _ in rows], [c for c, _ in cols], [s for _, s in rows], [s for _, s in cols], m)
    if out.unitarity_defect() > tol:
        raise ArithmeticError(f"S-matrix for {pair.L} / {pair.M} is not unitary")
    return out


# --- root systems and denominators ------------------------------------------------


def positive_roots(system: str, k: int) -> list[tuple[int, ...]]:
    """Positive roots of B_k, C_k or D_k in the orthonormal phi-coordinates."""
    def e(i):
        return tuple(int(t == i) for t in range(k))

    pm = []
    for i, j in itertools.combinations(range(k), 2):
        pm.append(tuple(a - b for a, b in zip(e(i), e(j))))
        pm.append(tuple(a + b for a, b in zip(e(i), e(j))))
    if system == "B":
        return [e(i) for i in range(k)] + pm
    if system == "C":
        return [tuple(2 * t for t in e(i)) for i in range(k)] + pm
    if system == "D":
        return pm
    raise ValueError(f"unknown root system {system!r}")


def weyl_denominator(system: str, k: int, x) -> float:
    """prod over positive roots of 2 sin(pi (alpha, x)).

    The full alternant a_W(e^rho)(x) differs from this by the unimodular
    factor (-i)^{#roots}; only the real product is returned.
    """
    x = np.asarray(x, dtype=float)
    return float(np.prod([2 * math.sin(math.pi * np.dot(a, x)) for a in positive_roots(system, k)]))


def root_system_for(N: int) -> tuple[str, int]:
    k = abs(N) // 2
    if N < 0:
        return "C", k
    return ("B", k) if N % 2 else ("D", k)


# --- characters --------------------------------------------------------------------


def _padded(lam: Partition, k: int) -> list[int]:
    if len(lam) > k:
        raise ValueError(f"{list(lam)} has more than {k} rows")
    return list(lam) + [0] * (k - len(lam))


def _ratio(num: float, den: float) -> float:
    if abs(den) < 1e-12:
        raise DegeneratePointError("vanishing Weyl denominator")
    return num / den


def _sine_character(lam: Partition, x, shift: float) -> float:
    x = np.asarray(x, dtype=float)
    k = len(x)
    if k == 0:
        if lam:
            raise ValueError("rank zero only carries the trivial character")
        return 1.0
    rho = np.array([k + shift - j for j in range(1, k + 1)])
    ls = np.array(_padded(lam, k)) + rho
    num = np.linalg.det(np.sin(2 * math.pi * np.outer(x, ls)))
    den = np.linalg.det(np.sin(2 * math.pi * np.outer(x, rho)))
    return _ratio(num, den)


def _cosine_character(lam: Partition, x) -> float:
    x = np.asarray(x, dtype=float)
    k = len(x)
    rho = np.arange(k - 1, -1, -1, dtype=float)
    ls = np.array(_padded(lam, k)) + rho
    num = np.linalg.det(np.cos(2 * math.pi * np.outer(x, ls)))
    den = np.linalg.det(np.cos(2 * math.pi * np.outer(x, rho)))
    m = 2 if len(lam) == k else 1
    return m * _ratio(num, den)


def complete_symmetric(eigenvalues, top: int) -> np.ndarray:
    """h_0 .. h_top of the given variables, by multiplying geometric series."""
    h = np.zeros(top + 1, dtype=complex)
    h[0] = 1
    for z in eigenvalues:
        for m in range(1, top + 1):
            h[m] += z * h[m - 1]
    return h


def schur(lam: Partition, eigenvalues) -> complex:
    """Schur function by Jacobi-Trudi; full columns come out as powers of the determinant."""
    lam = Partition(lam)
    z = np.asarray(eigenvalues, dtype=complex)
    n = len(z)
    if len(lam) > n:
        return 0j
    core, c = strip_full_columns(lam, n)
    factor = np.prod(z) ** c
    if not core:
        return complex(factor)
    r = len(core)
    h = complete_symmetric(z, core[0] + r)
    mat = np.zeros((r, r), dtype=complex)
    for i in range(r):
        for j in range(r):
            idx = core[i] - i + j
            mat[i, j] = h[idx] if idx >= 0 else 0
    return complex(factor * np.linalg.det(mat))


def schur_bialternant(lam: Partition, eigenvalues) -> complex:
    """Reference implementation for distinct eigenvalues."""
    z = np.asarray(eigenvalues, dtype=complex)
    n = len(z)
    lam = _padded(Partition(lam), n)
    num = np.linalg.det(np.array([[zi ** (lam[j] + n - 1 - j) for j in range(n)] for zi in z]))
    den = np.linalg.det(np.array([[zi ** (n - 1 - j) for j in range(n)] for zi in z]))
    if abs(den) < 1e-12:
        raise DegeneratePointError("repeated eigenvalues")
    return num / den


def weyl_character(family: Family, lam, x, det: int = 1) -> float | complex:
    """Character value of the irreducible labelled by lam.

    SO_odd, Sp and O_even take a point x in R^k (eigenvalue angles 2 pi x_i);
    U takes the eigenvalue list itself.  For O_even with det = -1 the point
    has k - 1 coordinates and the element has extra eigenvalues +1 and -1.
    """
    lam = Partition(lam)
    if family == "U":
        return schur(lam, x)
    if family == "SO_odd":
        return _sine_character(lam, x, 0.5)
    if family == "Sp":
        return _sine_character(lam, x, 1.0)
    if family == "O_even":
        if det == 1:
            return _cosine_character(lam, x)
        k = len(x) + 1
        if len(lam) == k:
            return 0.0
        return _sine_character(lam, x, 1.0)
    raise ValueError(f"unknown family {family!r}")


def orthogonal_character(N: int, lam, x, det: int = 1) -> float:
    """O(N) character for any O(N) label, using the associated diagram when needed."""
    from .labels import associated_diagram

    lam = Partition(lam)
    k = N // 2
    flip = 1
    if lam.col(1) > k:
        lam = associated_diagram(lam, N)
        flip = det
    family = "SO_odd" if N % 2 else "O_even"
    if N % 2 and det != 1:
        raise ValueError("odd orthogonal points are taken in SO(N)")
    return flip * weyl_character(family, lam, x, det)


# --- square sums -------------------------------------------------------------------------


@dataclass
class SquareSumReport:
    N: int
    ell: int
    even_sum: float
    odd_sum: float
    closed_form: float
    rel_error: float
    parity_rel_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.rel_error < self.tol and self.parity_rel_error < self.tol

    def as_dict(self):
        return {
            "N": self.N,
            "ell": self.ell,
            "even_sum": self.even_sum,
            "odd_sum": self.odd_sum,
            "closed_form": self.closed_form,
            "rel_error": self.rel_error,
            "parity_rel_error": self.parity_rel_error,
            "passed": self.passed,
        }


def square_sum_closed_form(N: int, ell: int) -> float:
    """ell^k / (b(N) prod_{alpha>0} 4 sin^2((alpha, rho-check) pi / ell))."""
    system, k = root_system_for(N)
    rho = [(abs(N) + 1) / 2 - i for i in range(1, k + 1)]
    b = 2 if (N > 0 and N % 2 == 0) else 1
    return ell**k / (b * weyl_denominator(system, k, np.array(rho) / ell) ** 2)


def verify_square_sums(ctx, tol: float = 1e-9) -> SquareSumReport:
    from .labels import brauer_label_set
    from .qarith import brauer_weight

    even = odd = 0.0
    for lam in brauer_label_set(ctx):
        d2 = brauer_weight(ctx, lam) ** 2
        if lam.size % 2 == 0:
            even += d2
        else:
            odd += d2
    closed = square_sum_closed_form(ctx.N, ctx.ell)
    return SquareSumReport(
        ctx.N,
        ctx.ell,
        even,
        odd,
        closed,
        abs(even - closed) / closed,
        abs(even - odd) / even,
        tol,
    )


def alcove_square_sum_defect(k: int, ell: int) -> float:
    """SO(2k+1) at odd level: sum of chi_lam(x)^2 over the alcove vs ell^k / Delta(x)^2.

    The alcove is lam_1 <= (ell - 2k - 1)/2 with at most k rows, and x runs
    over ell^{-1} Z^k with ell/2 > x_1 ell > ... > x_k ell > 0.  Returns the
    largest relative defect.
    """
    if ell % 2 == 0:
        raise ValueError("odd level expected")
    top = (ell - 2 * k - 1) // 2
    alcove = [Partition(p) for p in itertools.product(range(top, -1, -1), repeat=k) if list(p) == sorted(p, reverse=True)]
    index = LatticePair(lattice("Z", k, Fraction(1, ell)), lattice("Z", k)).index
    worst = 0.0
    for js in itertools.combinations(range((ell - 1) // 2, 0, -1), k):
        x = np.array(js, dtype=float) / ell
        total = sum(weyl_character("SO_odd", lam, x) ** 2 for lam in alcove)
        expected = index / weyl_denominator("B", k, x) ** 2
        worst = max(worst, abs(total - expected) / expected)
    return worst
