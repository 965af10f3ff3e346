"""Weyl groups as permutation groups on their root sets, and orbit counting.

PermGroup carries a deterministic base/strong-generating-set chain
(Schreier-Sims): levels hold a base point, the strong generators whose first
moved base point is that level, and the orbit transversal of the base point
under the generators stored at this level and deeper.  Composition acts left:
(p * q)(x) = p(q(x)).

Subset-orbit counting uses the Cauchy-Frobenius (Burnside) lemma with one
generating-function term per group element, enumerated by depth-first
traversal of the transversal chain; subset transversals use a lexicographic
scan whose first hit in each orbit is provably the orbit's least member.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .root_lattices import LatticeSpec, reflect, roots

__all__ = [
    "Permutation",
    "PermGroup",
    "SubsetCountTable",
    "weyl_group_on_roots",
    "stabilizer_of_root",
    "induced_action_on_classes",
    "burnside_subset_counts",
    "subset_orbit_transversal",
    "transversal_jsonl_lines",
]

_SCAN_CAP = 3_300_000  # largest binomial(m, n) the transversal scan will walk


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p * q)(x) = p(q(x))."""
    return tuple(map(p.__getitem__, q))


def _inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _cycle_type(p: tuple[int, ...]) -> tuple[int, ...]:
    seen = 0
    out = []
    for i in range(len(p)):
        if seen >> i & 1:
            continue
        length = 0
        j = i
        while not seen >> j & 1:
            seen |= 1 << j
            j = p[j]
            length += 1
        out.append(length)
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0..degree-1}; images[x] is the image of x."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images must be a bijection on 0..degree-1")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        return Permutation(_compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inverse(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycle_type(self) -> tuple[int, ...]:
        return _cycle_type(self.images)


class _Level:
    __slots__ = ("point", "gens", "transversal", "inverses")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {}
        self.inverses: dict[int, tuple[int, ...]] = {}


class PermGroup:
    """Permutation group with a deterministic Schreier-Sims chain.

    labels, when present, name the points (e.g. the root vectors a Weyl
    group permutes).
    """

    def __init__(self, degree: int, generators, base_prefix=(), labels=None):
        self.degree = degree
        self.labels = tuple(labels) if labels is not None else None
        gens = []
        seen = set()
        identity = tuple(range(degree))
        for g in generators:
            t = tuple(g.images if isinstance(g, Permutation) else g)
            if len(t) != degree or sorted(t) != list(range(degree)):
                raise ValueError("generator is not a permutation of the degree")
            if t != identity and t not in seen:
                seen.add(t)
                gens.append(t)
        self._raw_gens = gens
        self._levels: list[_Level] = [_Level(p) for p in base_prefix]
        self._build()

    # -- construction ---------------------------------------------------

    def _strong_gens_at(self, i: int) -> list[tuple[int, ...]]:
        return [g for lvl in self._levels[i:] for g in lvl.gens]

    def _recompute_transversal(self, i: int) -> None:
        lvl = self._levels[i]
        gens = self._strong_gens_at(i)
        identity = tuple(range(self.degree))
        lvl.transversal = {lvl.point: identity}
        lvl.inverses = {lvl.point: identity}
        queue = [lvl.point]
        while queue:
            x = queue.pop()
            ux = lvl.transversal[x]
            for s in gens:
                y = s[x]
                if y not in lvl.transversal:
                    u = _compose(s, ux)
                    lvl.transversal[y] = u
                    lvl.inverses[y] = _inverse(u)
                    queue.append(y)

    def _sift(self, g: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
        """Strip g through levels >= start; returns (residue, stop_level)."""
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            x = g[lvl.point]
            if x == lvl.point:
                continue
            u_inv = lvl.inverses.get(x)
            if u_inv is None:
                return g, i
            g = _compose(u_inv, g)
        return g, len(self._levels)

    def _store(self, g: tuple[int, ...]) -> int:
        """Store a non-identity residue at its level, extending the base."""
        j = 0
        while j < len(self._levels) and g[self._levels[j].point] == self._levels[j].point:
            j += 1
        if j == len(self._levels):
            moved = next(x for x in range(self.degree) if g[x] != x)
            self._levels.append(_Level(moved))
        self._levels[j].gens.append(g)
        for i in range(j + 1):
            self._recompute_transversal(i)
        return j

    def _build(self) -> None:
        identity = tuple(range(self.degree))
        for i in range(len(self._levels)):
            self._recompute_transversal(i)
        for g in self._raw_gens:
            residue, _ = self._sift(g, 0)
            if residue != identity:
                self._store(residue)
        i = len(self._levels) - 1
        while i >= 0:
            stored_at = self._verify_level(i)
            i = stored_at if stored_at is not None else i - 1

    def _verify_level(self, i: int) -> int | None:
        """Check all Schreier generators of level i strip to identity.

        On failure the residue is stored (at a strictly deeper level) and
        that level index is returned so verification resumes there.
        """
        self._recompute_transversal(i)
        lvl = self._levels[i]
        identity = tuple(range(self.degree))
        gens = self._strong_gens_at(i)
        for x, ux in list(lvl.transversal.items()):
            for s in gens:
                g = _compose(s, ux)
                schreier = _compose(lvl.inverses[g[lvl.point]], g)
                if schreier == identity:
                    continue
                residue, _ = self._sift(schreier, i + 1)
                if residue != identity:
                    return self._store(residue)
        return None

    # -- queries --------------------------------------------------------

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(g) for g in self._raw_gens)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._levels)

    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.transversal)
        return n

    def contains(self, p) -> bool:
        t = tuple(p.images if isinstance(p, Permutation) else p)
        if len(t) != self.degree:
            return False
        residue, _ = self._sift(t, 0)
        return residue == tuple(range(self.degree))

    def orbit(self, point: int) -> tuple[int, ...]:
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop()
            for g in self._raw_gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def random_element(self, rng) -> Permutation:
        """Uniformly random element (product of random coset representatives)."""
        p = tuple(range(self.degree))
        for lvl in self._levels:
            pts = sorted(lvl.transversal)
            p = _compose(p, lvl.transversal[pts[rng.randrange(len(pts))]])
        return Permutation(p)

    def cycle_type_counts(self) -> Counter:
        """Multiset of cycle types over all group elements (DFS over cosets)."""
        counts: Counter = Counter()
        levels = [
            [lvl.transversal[x] for x in sorted(lvl.transversal)] for lvl in self._levels
        ]

        def walk(i: int, p: tuple[int, ...]) -> None:
            if i == len(levels):
                counts[_cycle_type(p)] += 1
                return
            for u in levels[i]:
                walk(i + 1, _compose(p, u))

        identity = tuple(range(self.degree))
        if not levels:
            counts[_cycle_type(identity)] += 1
            return counts
        walk(0, identity)
        return counts

    def stabilizer_chain_orders(self) -> tuple[int, ...]:
        orders = []
        n = self.order()
        for lvl in self._levels:
            orders.append(n)
            n //= len(lvl.transversal)
        orders.append(1)
        return tuple(orders)

    @classmethod
    def _from_chain(cls, degree, levels, labels) -> "PermGroup":
        g = cls.__new__(cls)
        g.degree = degree
        g.labels = labels
        g._levels = levels
        g._raw_gens = [gen for lvl in levels for gen in lvl.gens]
        return g


@dataclass(frozen=True)
class SubsetCountTable:
    """counts[n] = number of orbits of n-subsets of the permuted points."""

    counts: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def to_json(self) -> list[int]:
        return list(self.counts)


@lru_cache(maxsize=None)
def weyl_group_on_roots(spec: LatticeSpec, base_prefix: tuple[int, ...] = ()) -> PermGroup:
    """W(L) as permutations of the ordered root list, generated by all
    reflections s_v over the roots v."""
    rts = roots(spec)
    index = {v.coords2: i for i, v in enumerate(rts)}
    gens = []
    seen = set()
    for v in rts:
        img = tuple(index[reflect(v, x).coords2] for x in rts)
        if img not in seen:
            seen.add(img)
            gens.append(img)
    return PermGroup(len(rts), gens, base_prefix=base_prefix, labels=rts)


def stabilizer_of_root(W: PermGroup, r_index: int) -> PermGroup:
    """Point stabilizer W_r, by base change when the base does not lead with r."""
    if not 0 <= r_index < W.degree:
        raise ValueError("r_index out of range")
    if not (W.base and W.base[0] == r_index):
        W = PermGroup(
            W.degree,
            [g.images for g in W.generators],
            base_prefix=(r_index,),
            labels=W.labels,
        )
    return PermGroup._from_chain(W.degree, W._levels[1:], W.labels)


def induced_action_on_classes(Wr: PermGroup, classes) -> PermGroup:
    """The degree-|classes| action of the stabilizer on the pair-classes.

    A generator g sends class index i (with member u) to the index of the
    class containing g(u); the stabilizer preserves N_r so this is total.
    """
    if Wr.labels is None:
        raise ValueError("stabilizer must carry root labels")
    point_of = {v.coords2: i for i, v in enumerate(Wr.labels)}
    class_of_point: dict[int, int] = {}
    for ci, cl in enumerate(classes):
        for member in cl.members():
            class_of_point[point_of[member.coords2]] = ci
    member_points = [point_of[cl.u.coords2] for cl in classes]
    gens = []
    seen = set()
    for g in Wr.generators:
        img = []
        for pt in member_points:
            target = g.images[pt]
            if target not in class_of_point:
                raise RuntimeError(
                    "stabilizer generator does not preserve the pair-class set"
                )
            img.append(class_of_point[target])
        t = tuple(img)
        if t not in seen:
            seen.add(t)
            gens.append(t)
    return PermGroup(len(classes), gens)


def burnside_subset_counts(G: PermGroup, max_order: int = 10_000_000) -> SubsetCountTable:
    """Orbit counts of n-subsets for every n, by the Cauchy-Frobenius lemma.

    c(n) = (1/|G|) sum_g [x^n] prod_{cycles of g with length l} (1 + x^l);
    elements are enumerated once, aggregated by cycle type.
    """
    order = G.order()
    if order > max_order:
        raise ValueError(
            f"group order {order} exceeds the element-enumeration cap {max_order}"
        )
    m = G.degree
    totals = [0] * (m + 1)
    for ctype, mult in G.cycle_type_counts().items():
        poly = [1]
        for length in ctype:
            new = poly + [0] * length
            for k, c in enumerate(poly):
                new[k + length] += c
            poly = new
        for k, c in enumerate(poly):
            totals[k] += mult * c
    counts = []
    for k in range(m + 1):
        q, rem = divmod(totals[k], order)
        assert rem == 0, "Burnside sum must be divisible by the group order"
        counts.append(q)
    return SubsetCountTable(tuple(counts))


def _reduced_generators(G: PermGroup) -> list[tuple[int, ...]]:
    """A small generating subset of G's generators (greedy order growth)."""
    full = G.order()
    selected: list[tuple[int, ...]] = []
    current = 1
    for g in G.generators:
        if current == full:
            break
        trial = PermGroup(G.degree, selected + [g.images])
        if trial.order() > current:
            selected.append(g.images)
            current = trial.order()
    return selected


def _chunk_tables(gen: tuple[int, ...], m: int) -> tuple[int, list[int], list[int]]:
    split = m // 2
    low_bits = [1 << gen[k] for k in range(split)]
    high_bits = [1 << gen[k + split] for k in range(m - split)]
    low = [0] * (1 << split)
    for val in range(1, 1 << split):
        lsb = val & (-val)
        low[val] = low[val ^ lsb] | low_bits[lsb.bit_length() - 1]
    high = [0] * (1 << (m - split))
    for val in range(1, 1 << (m - split)):
        lsb = val & (-val)
        high[val] = high[val ^ lsb] | high_bits[lsb.bit_length() - 1]
    return split, low, high


def subset_orbit_transversal(G: PermGroup, n: int) -> list[tuple[int, ...]]:
    """Lexicographically least representative of every orbit of n-subsets.

    Scans all n-subsets in lexicographic order, closing each new orbit by
    breadth-first search over bitmasks; the first subset met in an orbit is
    its least member, so the output is exactly the set of orbit minima.
    Feasible only while binomial(degree, n) stays below the scan cap; for
    large n on 28 points use the complementary size.
    """
    m = G.degree
    if not 0 <= n <= m:
        raise ValueError("subset size out of range")
    if comb(m, n) > _SCAN_CAP:
        raise ValueError(
            f"binomial({m}, {n}) = {comb(m, n)} exceeds the scan cap; "
            f"enumerate size {m - n} instead (orbits correspond under complement)"
        )
    if n == 0:
        return [()]
    tables = [_chunk_tables(g, m) for g in _reduced_generators(G)]
    visited = bytearray((1 << m) + 7 >> 3)
    out: list[tuple[int, ...]] = []
    for combo in combinations(range(m), n):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if visited[mask >> 3] >> (mask & 7) & 1:
            continue
        out.append(combo)
        visited[mask >> 3] |= 1 << (mask & 7)
        stack = [mask]
        while stack:
            cur = stack.pop()
            for split, low, high in tables:
                nxt = low[cur & (1 << split) - 1] | high[cur >> split]
                if not visited[nxt >> 3] >> (nxt & 7) & 1:
                    visited[nxt >> 3] |= 1 << (nxt & 7)
                    stack.append(nxt)
    return out


def transversal_jsonl_lines(n: int, subsets) -> list[str]:
    """JSON lines {n, subset} for an orbit transversal."""
    return [
        json.dumps({"n": n, "subset": list(subset)}, separators=(", ", ": "))
        for subset in subsets
    ]
