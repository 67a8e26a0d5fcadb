"""Pure complexes, pre-shellings, and the rewriting order on Dyck paths.

A partial order on the facets of a pure complex is a pre-shelling when any
of four equivalent conditions holds: (i) mutual containment of restrictions
forces equality, (ii) the intervals [r(F), F] partition the complex,
(iii) r(F) fitting inside G forces F below G, (iv) every pair F not above G
admits a shelling step into G.  Every linear extension of a pre-shelling is
a shelling with the same restriction function.

The concrete pre-shelling here lives on the order complex of J(2 x n),
whose facets are the maximal interior chains, identified with Dyck paths.
The order is generated by the rewrites vvh -> vhv and hhv -> hvh; its
restriction sets sit at the centers of vvh and hhv factors, and bucketing
facets by restriction ranks recovers the flag h-vector.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

from .dyck import DyckPath, da, enumerate_paths, maj
from .dyck import rank as path_rank
from .posets import GradedBoundedPoset, IdealLattice, chain_product_2xn, ideal_lattice

FACE_GUARD = 1 << 20
OMEGA_GUARD = 8


class PureComplex:
    """A pure simplicial complex given by its facets.

    Vertices carry arbitrary hashable labels; facets are stored as bitmasks
    over the vertex indexing.  Faces are implicit (the downward closure) and
    enumerating them is guarded by an m * 2^d size bound.
    """

    def __init__(self, vertices: Iterable, facets: Iterable[Iterable]):
        self._vertices = tuple(vertices)
        self._vindex = {v: i for i, v in enumerate(self._vertices)}
        if len(self._vindex) != len(self._vertices):
            raise ValueError("duplicate vertex")
        facet_sets = [frozenset(f) for f in facets]
        if not facet_sets:
            raise ValueError("at least one facet required")
        masks = []
        for f in facet_sets:
            mask = 0
            for v in f:
                if v not in self._vindex:
                    raise ValueError(f"facet vertex not a vertex: {v!r}")
                mask |= 1 << self._vindex[v]
            masks.append(mask)
        d = len(facet_sets[0])
        if any(len(f) != d for f in facet_sets):
            raise ValueError("not pure: all facets must have the same cardinality")
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a & b == a:
                    raise ValueError(
                        f"facet contained in another (or duplicated): index {i}"
                    )
        self._facets = tuple(facet_sets)
        self._masks = tuple(masks)
        self._face_cache: "set[int] | None" = None

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def facets(self) -> tuple[frozenset, ...]:
        return self._facets

    @property
    def m(self) -> int:
        return len(self._facets)

    @property
    def d(self) -> int:
        return len(self._facets[0])

    def mask(self, f: int) -> int:
        return self._masks[f]

    def face_members(self, mask: int) -> frozenset:
        return frozenset(
            self._vertices[i] for i in range(len(self._vertices)) if (mask >> i) & 1
        )

    def face_masks(self) -> set[int]:
        """Bitmasks of every face, the empty face included."""
        if self._face_cache is None:
            if self.m << self.d > FACE_GUARD:
                raise ValueError(
                    f"complex too large: {self.m} * 2^{self.d} "
                    f"candidate faces exceed the guard 2^20"
                )
            seen = set(self._masks)
            stack = list(self._masks)
            while stack:
                mask = stack.pop()
                rest = mask
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    sub = mask ^ bit
                    if sub not in seen:
                        seen.add(sub)
                        stack.append(sub)
            self._face_cache = seen
        return self._face_cache

    def faces(self) -> list[frozenset]:
        return [self.face_members(mask) for mask in sorted(self.face_masks())]


class FacetOrder:
    """A strict partial order on the facet indices of a pure complex,
    generated by relations (a, b) meaning facet a lies below facet b."""

    def __init__(
        self,
        complex: PureComplex,
        relations: Iterable[tuple[int, int]],
        labels: "tuple[str, ...] | None" = None,
    ):
        self._complex = complex
        m = complex.m
        rels = sorted({(int(a), int(b)) for a, b in relations})
        up: list[list[int]] = [[] for _ in range(m)]
        indegree = [0] * m
        for a, b in rels:
            if not (0 <= a < m and 0 <= b < m):
                raise ValueError(f"facet index out of range: ({a}, {b})")
            if a == b:
                raise ValueError("order contains a cycle")
            up[a].append(b)
            indegree[b] += 1
        order: list[int] = []
        ready = [i for i in range(m) if indegree[i] == 0]
        while ready:
            i = ready.pop()
            order.append(i)
            for j in up[i]:
                indegree[j] -= 1
                if indegree[j] == 0:
                    ready.append(j)
        if len(order) != m:
            raise ValueError("order contains a cycle")
        below = [0] * m
        for i in order:
            for j in up[i]:
                below[j] |= (1 << i) | below[i]
        self._below = below
        self._relations = tuple(rels)
        self._up = up
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != m:
                raise ValueError("labels length mismatch")
        self._labels = labels

    @property
    def complex(self) -> PureComplex:
        return self._complex

    @property
    def m(self) -> int:
        return self._complex.m

    @property
    def relations(self) -> tuple[tuple[int, int], ...]:
        return self._relations

    @property
    def labels(self) -> "tuple[str, ...] | None":
        return self._labels

    def less(self, i: int, j: int) -> bool:
        return bool((self._below[j] >> i) & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j)

    def below_mask(self, j: int) -> int:
        return self._below[j]

    def minimal_indices(self) -> list[int]:
        return [i for i in range(self.m) if not self._below[i]]

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (i, j) of the closure: i < j with nothing between."""
        above = [0] * self.m
        for j in range(self.m):
            rest = self._below[j]
            while rest:
                bit = rest & -rest
                rest ^= bit
                above[bit.bit_length() - 1] |= 1 << j
        out = []
        for j in range(self.m):
            rest = self._below[j]
            while rest:
                bit = rest & -rest
                rest ^= bit
                i = bit.bit_length() - 1
                if not (above[i] & self._below[j]):
                    out.append((i, j))
        return out

    def is_linear_extension(self, order: Sequence[int]) -> bool:
        if sorted(order) != list(range(self.m)):
            return False
        position = {f: pos for pos, f in enumerate(order)}
        return all(position[a] < position[b] for a, b in self._relations)

    def random_linear_extension(
        self, seed: "int | random.Random | None" = None
    ) -> list[int]:
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        indegree = [0] * self.m
        for a, b in self._relations:
            indegree[b] += 1
        ready = [i for i in range(self.m) if indegree[i] == 0]
        out: list[int] = []
        while ready:
            i = ready.pop(rng.randrange(len(ready)))
            out.append(i)
            for j in self._up[i]:
                indegree[j] -= 1
                if indegree[j] == 0:
                    ready.append(j)
        return out

    def extend(self, extra: Iterable[tuple[int, int]]) -> "FacetOrder":
        return FacetOrder(
            self._complex, self._relations + tuple(extra), self._labels
        )


@dataclass(frozen=True)
class Partitioning:
    """A restriction map facet index -> r(F) with r(F) inside F."""

    complex: PureComplex
    restrictions: tuple[frozenset, ...]

    def __post_init__(self):
        if len(self.restrictions) != self.complex.m:
            raise ValueError("one restriction per facet required")
        for f, r in enumerate(self.restrictions):
            if not r <= self.complex.facets[f]:
                raise ValueError(f"restriction not inside its facet: index {f}")


def order_complex(L: GradedBoundedPoset) -> PureComplex:
    """The chains of the proper part of L; facets are the maximal ones,
    which in a graded bounded poset are the saturated rank-1 to top-1
    chains."""
    top = L.top_rank
    vertices = [e for r in range(1, top) for e in L.elements_of_rank(r)]
    if top < 2:
        return PureComplex([], [frozenset()])
    facets: list[frozenset] = []
    chain: list = []

    def climb(e) -> None:
        chain.append(e)
        if L.rank(e) == top - 1:
            facets.append(frozenset(chain))
        else:
            for f in L.upper_covers(e):
                if L.rank(f) < top:
                    climb(f)
        chain.pop()

    for e in L.elements_of_rank(1):
        climb(e)
    return PureComplex(vertices, facets)


def _ideal_of(a: int, b: int) -> frozenset:
    return frozenset(
        [(1, i) for i in range(1, a + 1)] + [(2, j) for j in range(1, b + 1)]
    )


def path_to_facet(w: DyckPath) -> frozenset[frozenset]:
    """The maximal interior chain of J(2 x n) traced by the proper
    prefixes of the path: a prefix with a letters v and b letters h
    becomes the ideal with a elements in the first row and b in the
    second."""
    a = b = 0
    chain = []
    for letter in w.word[: 2 * w.n - 1]:
        if letter == "v":
            a += 1
        else:
            b += 1
        chain.append(_ideal_of(a, b))
    return frozenset(chain)


def facet_to_path(chain: Iterable[frozenset]) -> DyckPath:
    """Inverse of path_to_facet; rejects anything that is not a maximal
    interior chain of some J(2 x n)."""
    ideals = list(chain)
    n, remainder = divmod(len(ideals) + 1, 2)
    if remainder or n < 1:
        raise ValueError("not a maximal chain: wrong number of ideals")
    try:
        ideals.sort(key=len)
        a = b = 0
        word = []
        for k, ideal in enumerate(ideals, start=1):
            if len(ideal) != k:
                raise ValueError
            if ideal == _ideal_of(a + 1, b):
                a += 1
                word.append("v")
            elif ideal == _ideal_of(a, b + 1):
                b += 1
                word.append("h")
            else:
                raise ValueError
        if max(a, b) > n:
            raise ValueError
        word.append("v" if a < n else "h")
        return DyckPath("".join(word))
    except (ValueError, TypeError):
        raise ValueError("not a maximal chain") from None


@cache
def _j2xn(n: int) -> IdealLattice:
    return ideal_lattice(chain_product_2xn(n))


@cache
def dyck_complex(n: int) -> PureComplex:
    """The order complex of J(2 x n) with facet i holding the chain of the
    i-th path in lexicographic order."""
    if n < 1:
        raise ValueError(f"dyck_complex needs n >= 1, got {n}")
    L = _j2xn(n)
    vertices = [e for r in range(1, L.top_rank) for e in L.elements_of_rank(r)]
    return PureComplex(vertices, [path_to_facet(w) for w in enumerate_paths(n)])


def s_map(w: DyckPath, i: int) -> DyckPath:
    """Rewrite the factor at positions i, i+1, i+2: vvh -> vhv and
    hhv -> hvh; anything else is left alone."""
    if not 1 <= i <= 2 * w.n - 2:
        raise ValueError(f"position out of range: {i} not in [1, {2 * w.n - 2}]")
    word = w.word
    factor = word[i - 1 : i + 2]
    if factor == "vvh":
        return DyckPath(word[: i - 1] + "vhv" + word[i + 2 :])
    if factor == "hhv":
        return DyckPath(word[: i - 1] + "hvh" + word[i + 2 :])
    return w


def sigma_stat(w: DyckPath) -> tuple[int, int]:
    """The potential (da, maj); strictly lexicographically smaller after
    every nontrivial rewrite, which makes the rewriting relation acyclic."""
    return (da(w), maj(w))


@cache
def omega_n(n: int) -> FacetOrder:
    """The transitive closure of single rewrites on the facets of
    dyck_complex(n), labeled by path words."""
    if n < 1:
        raise ValueError(f"omega_n needs n >= 1, got {n}")
    if n > OMEGA_GUARD:
        raise ValueError(f"too large: n = {n} exceeds guard {OMEGA_GUARD}")
    cx = dyck_complex(n)
    words = list(enumerate_paths(n))
    relations = []
    for j, w in enumerate(words):
        for i in range(1, 2 * n - 1):
            u = s_map(w, i)
            if u != w:
                relations.append((path_rank(u), j))
    return FacetOrder(cx, relations, labels=tuple(w.word for w in words))


def restriction(ord: FacetOrder, f: int) -> frozenset:
    """r(F): the vertices x of F such that some facet below F meets F in
    exactly F minus x."""
    return ord.complex.face_members(_restriction_mask(ord, f))


def _restriction_mask(ord: FacetOrder, f: int) -> int:
    cx = ord.complex
    fm = cx.mask(f)
    out = 0
    rest = ord.below_mask(f)
    while rest:
        bit = rest & -rest
        rest ^= bit
        missing = fm & ~cx.mask(bit.bit_length() - 1)
        if missing.bit_count() == 1:
            out |= missing
    return out


def check_preshelling(ord: FacetOrder) -> dict:
    """Evaluate the four equivalent pre-shelling conditions literally and
    independently, with a witness for each failure.

    The verdicts must agree by the equivalence theorem; a disagreement is
    asserted against, since it could only come from an implementation bug.
    """
    cx = ord.complex
    faces = cx.face_masks()
    m = cx.m
    r = [_restriction_mask(ord, f) for f in range(m)]
    conditions: dict[str, bool] = {}
    witnesses: dict[str, dict] = {}

    conditions["i"] = True
    for f in range(m):
        for g in range(f + 1, m):
            if not r[f] & ~cx.mask(g) and not r[g] & ~cx.mask(f):
                conditions["i"] = False
                witnesses["i"] = {"f": f, "g": g}
                break
        if not conditions["i"]:
            break

    conditions["ii"] = True
    for face in sorted(faces):
        owners = [
            f
            for f in range(m)
            if not r[f] & ~face and not face & ~cx.mask(f)
        ]
        if len(owners) != 1:
            conditions["ii"] = False
            witnesses["ii"] = {
                "face": sorted(
                    i for i in range(len(cx.vertices)) if (face >> i) & 1
                ),
                "covered_by": owners,
            }
            break

    conditions["iii"] = True
    for f in range(m):
        for g in range(m):
            if f != g and not r[f] & ~cx.mask(g) and not ord.less(f, g):
                conditions["iii"] = False
                witnesses["iii"] = {"f": f, "g": g}
                break
        if not conditions["iii"]:
            break

    conditions["iv"] = True
    for f in range(m):
        for g in range(m):
            if f == g or ord.leq(g, f):
                continue
            if not r[g] & ~cx.mask(f):
                conditions["iv"] = False
                witnesses["iv"] = {"f": f, "g": g}
                break
        if not conditions["iv"]:
            break

    verdicts = set(conditions.values())
    assert len(verdicts) == 1, f"equivalence broken: {conditions}"
    return {
        "is_preshelling": conditions["i"],
        "conditions": conditions,
        "witnesses": witnesses,
    }


def is_shelling(cx: PureComplex, order: Sequence[int]) -> dict:
    """Check the classical shelling condition along a total order of the
    facets, reporting the first violating pair and the restriction of
    every facet with respect to its predecessors."""
    if sorted(order) != list(range(cx.m)):
        raise ValueError("not a total order on the facets")
    violation = None
    restrictions: dict[int, frozenset] = {}
    earlier: list[tuple[int, int]] = []
    for g in order:
        gm = cx.mask(g)
        rg = 0
        for _, em in earlier:
            missing = gm & ~em
            if missing.bit_count() == 1:
                rg |= missing
        restrictions[g] = cx.face_members(rg)
        if violation is None:
            for f, fm in earlier:
                if not rg & ~fm:
                    violation = {"earlier": f, "facet": g}
                    break
        earlier.append((g, gm))
    return {
        "is_shelling": violation is None,
        "violation": violation,
        "restrictions": restrictions,
    }


def partition_intervals(ord: FacetOrder) -> Partitioning:
    """The candidate partitioning of the complex into [r(F), F]."""
    return Partitioning(
        ord.complex,
        tuple(restriction(ord, f) for f in range(ord.m)),
    )


def verify_partitioning(p: Partitioning) -> dict:
    """Confirm every face lies in exactly one interval, or exhibit a face
    that is uncovered or covered twice."""
    cx = p.complex
    r_masks = []
    for rset in p.restrictions:
        mask = 0
        for v in rset:
            mask |= 1 << cx.vertices.index(v)
        r_masks.append(mask)
    for face in sorted(cx.face_masks()):
        owners = [
            f
            for f in range(cx.m)
            if not r_masks[f] & ~face and not face & ~cx.mask(f)
        ]
        if len(owners) != 1:
            return {
                "valid": False,
                "witness": {
                    "face": sorted(
                        i for i in range(len(cx.vertices)) if (face >> i) & 1
                    ),
                    "covered_by": owners,
                },
            }
    return {"valid": True, "witness": None}


def flag_h_from_partition(
    L: GradedBoundedPoset, p: Partitioning
) -> dict[frozenset[int], int]:
    """Bucket the facets of the partitioned order complex by the rank sets
    of their restrictions; for a partitioning this is the flag h-vector.
    Only nonzero entries appear."""
    out: dict[frozenset[int], int] = {}
    for rset in p.restrictions:
        ranks = frozenset(L.rank(x) for x in rset)
        out[ranks] = out.get(ranks, 0) + 1
    return out
