"""Exact root systems A_n, D_n, E_6/E_7/E_8 and lattice operations.

Vectors carry doubled coordinates (coords2 = 2x the real coordinates) so the
half-integer vectors of E_8 stay in plain integers; inner products divide the
doubled dot product by 4 and assert integrality.  Ambient dimensions: n+1 for
A_n, n for D_n, 8 for E_6/E_7/E_8 (the E lattices are slices of E_8).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

__all__ = [
    "RootVector",
    "LatticeSpec",
    "PairClass",
    "GramError",
    "roots",
    "inner",
    "reflect",
    "n_r",
    "pair_classes",
    "gram_to_graph",
    "generates",
    "orth_complement_in_E8",
    "hnf",
    "lattice_hnf",
    "in_lattice",
    "gram_determinant",
    "classify_root_lattice",
    "class_index_table",
    "standard_switching_root",
]


@dataclass(frozen=True)
class RootVector:
    """Lattice vector stored as doubled integer coordinates."""

    coords2: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.coords2)

    @staticmethod
    def from_ints(coords) -> "RootVector":
        return RootVector(tuple(2 * int(c) for c in coords))

    @staticmethod
    def unit(i: int, dim: int) -> "RootVector":
        return RootVector(tuple(2 * int(k == i) for k in range(dim)))

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords2))

    def scaled(self, c: int) -> "RootVector":
        return RootVector(tuple(c * a for a in self.coords2))

    def norm(self) -> int:
        return inner(self, self)


def inner(u: RootVector, v: RootVector) -> int:
    """Exact inner product; rejects pairs whose product is not integral."""
    if u.dim != v.dim:
        raise ValueError("dimension mismatch")
    d = sum(a * b for a, b in zip(u.coords2, v.coords2))
    if d % 4:
        raise ValueError(f"non-integral inner product {Fraction(d, 4)}")
    return d // 4


def reflect(r: RootVector, x: RootVector) -> RootVector:
    """Reflection s_r(x) = x - (x, r) r for a root r (norm 2)."""
    if inner(r, r) != 2:
        raise ValueError("reflection axis must be a root")
    return x - r.scaled(inner(x, r))


@dataclass(frozen=True)
class LatticeSpec:
    """One of the root lattices A_n (n>=1), D_n (n>=4), E_6/E_7/E_8."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family == "A":
            if self.rank < 1:
                raise ValueError("A_n requires n >= 1")
        elif self.family == "D":
            if self.rank < 4:
                raise ValueError("D_n requires n >= 4")
        elif self.family == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError("E_n requires n in {6, 7, 8}")
        else:
            raise ValueError("family must be one of 'A', 'D', 'E'")

    @property
    def ambient_dim(self) -> int:
        return {"A": self.rank + 1, "D": self.rank, "E": 8}[self.family]

    @property
    def discriminant(self) -> int:
        if self.family == "A":
            return self.rank + 1
        if self.family == "D":
            return 4
        return {6: 3, 7: 2, 8: 1}[self.rank]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def in_lattice(v: RootVector, spec: LatticeSpec) -> bool:
    c = v.coords2
    if len(c) != spec.ambient_dim:
        return False
    if spec.family == "A":
        return all(x % 2 == 0 for x in c) and sum(c) == 0
    if spec.family == "D":
        return all(x % 2 == 0 for x in c) and (sum(c) // 2) % 2 == 0
    # E_8 = D_8 together with j/2 + D_8
    if all(x % 2 == 0 for x in c):
        ok = (sum(c) // 2) % 2 == 0
    elif all(x % 2 == 1 for x in c):
        ok = ((sum(c) - 8) // 2) % 2 == 0
    else:
        return False
    if not ok:
        return False
    if spec.rank <= 7 and inner(v, _E7_WALL) != 0:
        return False
    if spec.rank == 6 and inner(v, _E6_WALL) != 0:
        return False
    return True


_E7_WALL = RootVector((2, -2, 0, 0, 0, 0, 0, 0))  # e_1 - e_2
_E6_WALL = RootVector((0, 2, -2, 0, 0, 0, 0, 0))  # e_2 - e_3


@lru_cache(maxsize=None)
def roots(spec: LatticeSpec) -> tuple[RootVector, ...]:
    """All norm-2 vectors of the lattice, ordered lexicographically on coords2."""
    out: list[tuple[int, ...]] = []
    if spec.family == "A":
        d = spec.rank + 1
        for i in range(d):
            for j in range(d):
                if i != j:
                    v = [0] * d
                    v[i], v[j] = 2, -2
                    out.append(tuple(v))
    elif spec.family == "D":
        d = spec.rank
        for i in range(d):
            for j in range(i + 1, d):
                for si, sj in product((2, -2), repeat=2):
                    v = [0] * d
                    v[i], v[j] = si, sj
                    out.append(tuple(v))
    else:
        for i in range(8):
            for j in range(i + 1, 8):
                for si, sj in product((2, -2), repeat=2):
                    v = [0] * 8
                    v[i], v[j] = si, sj
                    out.append(tuple(v))
        for signs in product((1, -1), repeat=8):
            if signs.count(1) % 2 == 0:
                out.append(signs)
        if spec.rank <= 7:
            out = [v for v in out if v[0] == v[1]]
        if spec.rank == 6:
            out = [v for v in out if v[1] == v[2]]
    return tuple(RootVector(v) for v in sorted(out))


def standard_switching_root(spec: LatticeSpec) -> RootVector:
    """The fixed switching root: e_m - e_{m+1} for A_m, e_{m-1} + e_m for D_m,
    e_7 + e_8 for E_8 (immaterial up to the Weyl action, fixed for stability)."""
    d = spec.ambient_dim
    if spec.family == "A":
        return RootVector.unit(d - 2, d) - RootVector.unit(d - 1, d)
    if spec.family == "D":
        return RootVector.unit(d - 2, d) + RootVector.unit(d - 1, d)
    if spec.rank != 8:
        raise ValueError("standard switching root is fixed only for E_8 in the E family")
    return RootVector.unit(6, 8) + RootVector.unit(7, 8)


def n_r(spec: LatticeSpec, r: RootVector) -> tuple[RootVector, ...]:
    """Roots u of the lattice with (u, r) = 1, in the deterministic root order."""
    all_roots = roots(spec)
    if r not in all_roots:
        raise ValueError("r is not a root of the lattice")
    return tuple(u for u in all_roots if inner(u, r) == 1)


@dataclass(frozen=True)
class PairClass:
    """The unordered pair {u, r - u} for u in N_r(L), keyed by its lex-least member."""

    u: RootVector
    r: RootVector

    def __post_init__(self) -> None:
        if inner(self.u, self.r) != 1:
            raise ValueError("class member must satisfy (u, r) = 1")

    @property
    def partner(self) -> RootVector:
        return self.r - self.u

    def members(self) -> tuple[RootVector, RootVector]:
        return (self.u, self.partner)


def pair_classes(spec: LatticeSpec, r: RootVector) -> tuple[PairClass, ...]:
    """The pair-classes [u]_r = {u, r-u}, one per unordered pair, ordered by
    their lexicographically least representative."""
    reps = []
    for u in n_r(spec, r):
        v = r - u
        rep = u if u.coords2 <= v.coords2 else v
        reps.append(rep.coords2)
    reps = sorted(set(reps))
    return tuple(PairClass(RootVector(c), r) for c in reps)


class GramError(ValueError):
    """Gram matrix outside the {0,1} off-diagonal / 2 diagonal pattern."""

    def __init__(self, i: int, j: int, value: int):
        self.i, self.j, self.value = i, j, value
        what = "norm" if i == j else "inner product"
        super().__init__(f"{what} {value} at pair ({i}, {j}) not admissible")


def gram_to_graph(vectors):
    """Graph with i ~ j iff inner(v_i, v_j) = 1; Gram must be A(G) + 2I."""
    from .seidel_core import Graph

    vecs = list(vectors)
    n = len(vecs)
    edges = []
    for i in range(n):
        if inner(vecs[i], vecs[i]) != 2:
            raise GramError(i, i, inner(vecs[i], vecs[i]))
        for j in range(i + 1, n):
            g = inner(vecs[i], vecs[j])
            if g == 1:
                edges.append((i, j))
            elif g != 0:
                raise GramError(i, j, g)
    return Graph.from_edges(n, edges)


def hnf(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form of the integer row lattice.

    Returns the canonical echelon basis (nonzero rows only): positive pivots,
    entries above each pivot reduced to 0 <= x < pivot.  Two generating sets
    span the same lattice iff their HNFs are equal.
    """
    A = [list(map(int, row)) for row in rows if any(row)]
    if not A:
        return ()
    cols = len(A[0])
    r = 0
    for c in range(cols):
        # gcd-eliminate column c below row r
        while True:
            nonzero = [i for i in range(r, len(A)) if A[i][c] != 0]
            if not nonzero:
                break
            piv = min(nonzero, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            done = True
            for i in range(r + 1, len(A)):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                if A[i][c]:
                    done = False
            if done:
                break
        if r < len(A) and A[r][c] != 0:
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
            r += 1
            if r == len(A):
                break
    return tuple(tuple(row) for row in A[:r] if any(row))


@lru_cache(maxsize=None)
def lattice_hnf(spec: LatticeSpec) -> tuple[tuple[int, ...], ...]:
    """HNF of the full lattice in doubled coordinates (roots generate it)."""
    return hnf([list(v.coords2) for v in roots(spec)])


def generates(vectors, spec: LatticeSpec) -> bool:
    """True iff the integer span of the vectors is the whole lattice."""
    vecs = list(vectors)
    for v in vecs:
        if not in_lattice(v, spec):
            raise ValueError(f"vector {v.coords2} is not in {spec.name}")
    return hnf([list(v.coords2) for v in vecs]) == lattice_hnf(spec)


def gram_determinant(vectors) -> int:
    """Determinant of the Gram matrix of a linearly independent family."""
    vecs = list(vectors)
    G = [[inner(u, v) for v in vecs] for u in vecs]
    # Bareiss determinant
    n = len(G)
    if n == 0:
        return 1
    prev = 1
    sign = 1
    for k in range(n - 1):
        if G[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if G[i][k] != 0), None)
            if piv is None:
                return 0
            G[k], G[piv] = G[piv], G[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                G[i][j] = (G[k][k] * G[i][j] - G[i][k] * G[k][j]) // prev
            G[i][k] = 0
        prev = G[k][k]
    return sign * G[-1][-1]


def classify_root_lattice(rank: int, disc: int) -> str:
    """Name of the irreducible root lattice with the given rank and discriminant.

    (rank, disc) separates the ADE lattices except rank 3, where D_3 = A_3.
    """
    if disc == rank + 1:
        return f"A{rank}"
    if disc == 4 and rank >= 4:
        return f"D{rank}"
    if (rank, disc) in ((6, 3), (7, 2), (8, 1)):
        return f"E{rank}"
    raise ValueError(f"no irreducible root lattice has rank {rank}, discriminant {disc}")


def _e8_basis() -> list[RootVector]:
    """A Z-basis of E_8: the HNF basis of the span of all roots."""
    return [RootVector(row) for row in lattice_hnf(LatticeSpec("E", 8))]


def orth_complement_in_E8(generators):
    """Basis and minimal norm of {v in E_8 : (v, g) = 0 for all generators}.

    Returns (basis, min_norm); min_norm is None when the complement is {0}.
    """
    e8 = LatticeSpec("E", 8)
    gens = list(generators)
    for g in gens:
        if not in_lattice(g, e8):
            raise ValueError(f"vector {g.coords2} is not in E8")
    B = _e8_basis()
    # constraint matrix: row i gives the pairings of basis vector i with gens
    M = [[inner(b, g) for g in gens] for b in B]
    k = len(gens)
    # Integer kernel via HNF of (M | I): rows with zero prefix give the kernel
    stacked = [M[i] + [int(i == j) for j in range(8)] for i in range(8)]
    H = hnf(stacked)
    kernel_coeffs = [row[k:] for row in H if all(x == 0 for x in row[:k])]
    basis = []
    for coeffs in kernel_coeffs:
        v = RootVector((0,) * 8)
        for c, b in zip(coeffs, B):
            v = v + b.scaled(c)
        basis.append(v)
    if not basis:
        return [], None
    return basis, _min_norm(basis)


def _min_norm(basis: list[RootVector]) -> int:
    """Minimal norm of a nonzero vector in the integer span of the basis.

    Bounded enumeration (Fincke-Pohst) on the rational LDL^T factorization of
    the Gram matrix, with a doubling search radius; terminates because the
    Gram matrix is positive definite.
    """
    n = len(basis)
    G = [[Fraction(inner(u, v)) for v in basis] for u in basis]
    # LDL^T: norm(x) = sum_i D[i] * (x_i + sum_{j>i} L[i][j] x_j)^2
    D = [Fraction(0)] * n
    L = [[Fraction(0)] * n for _ in range(n)]
    A = [row[:] for row in G]
    for i in range(n):
        D[i] = A[i][i]
        assert D[i] > 0, "Gram matrix must be positive definite"
        for j in range(i + 1, n):
            L[i][j] = A[i][j] / D[i]
        for p in range(i + 1, n):
            for q in range(i + 1, n):
                A[p][q] -= D[i] * L[i][p] * L[i][q]
    bound = 2
    while True:
        found: list[int] = []

        def descend(i: int, coeffs: list[int], remaining: Fraction) -> None:
            if i < 0:
                if any(coeffs):
                    norm = sum(
                        ci * cj * G[a][b]
                        for a, ci in enumerate(coeffs)
                        for b, cj in enumerate(coeffs)
                        if ci and cj
                    )
                    if norm > 0:
                        found.append(int(norm))
                return
            center = -sum(L[i][j] * coeffs[j] for j in range(i + 1, n) if coeffs[j])
            radius2 = remaining / D[i]
            x = math.floor(center)
            while (x - center) ** 2 <= radius2:
                coeffs[i] = x
                descend(i - 1, coeffs, remaining - D[i] * (x - center) ** 2)
                x -= 1
            x = math.floor(center) + 1
            while (x - center) ** 2 <= radius2:
                coeffs[i] = x
                descend(i - 1, coeffs, remaining - D[i] * (x - center) ** 2)
                x += 1
            coeffs[i] = 0

        descend(n - 1, [0] * n, Fraction(bound))
        if found:
            return min(found)
        bound *= 2


def class_index_table(classes) -> list[dict]:
    """JSON-ready class index: representative and partner doubled coordinates."""
    return [
        {
            "index": i,
            "u_coords2": list(c.u.coords2),
            "v_coords2": list(c.partner.coords2),
        }
        for i, c in enumerate(classes)
    ]
