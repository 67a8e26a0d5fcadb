"""Finite posets, ideal lattices, linear extensions and flag vectors.

The central objects are the chain product 2 x n, its lattice of order
ideals J(2 x n), and the two flag vectors of a graded bounded poset:
alpha(S) counts chains through the interior ranks S, beta(S) is its
inclusion-exclusion transform.  Linear extensions of 2 x n biject with
Dyck paths by reading the first coordinate, and that bijection carries
descent sets of Jordan-Holder permutations to path statistics.
"""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .dyck import DyckPath, descent_set_wrt, enumerate_paths

Element = Hashable

LINEAR_EXTENSION_GUARD = 16
THEOREM_GUARD = 6


class FinitePoset:
    """A finite poset given by its elements and covering pairs.

    The covers must be irredundant: the constructor rejects cycles and any
    cover pair already implied by two or more others, so the stored data is
    always the Hasse diagram of the order it generates.
    """

    def __init__(
        self,
        elements: Iterable[Element],
        covers: Iterable[tuple[Element, Element]],
    ):
        self._elements = tuple(elements)
        self._index: dict[Element, int] = {}
        for i, e in enumerate(self._elements):
            if e in self._index:
                raise ValueError(f"duplicate element: {e!r}")
            self._index[e] = i
        self._covers = tuple((a, b) for a, b in covers)
        p = len(self._elements)
        up: list[list[int]] = [[] for _ in range(p)]
        down: list[list[int]] = [[] for _ in range(p)]
        for a, b in self._covers:
            if a not in self._index or b not in self._index:
                raise ValueError(f"cover endpoint not an element: ({a!r}, {b!r})")
            ia, ib = self._index[a], self._index[b]
            if ia == ib:
                raise ValueError(f"covers contain a cycle: {a!r} covers itself")
            up[ia].append(ib)
            down[ib].append(ia)
        self._up = up
        self._down = down
        self._topo = self._toposort()
        self._ge = self._reachability()
        self._check_reduction()

    def _toposort(self) -> list[int]:
        remaining = [len(self._down[i]) for i in range(len(self._elements))]
        ready = [i for i, d in enumerate(remaining) if d == 0]
        order: list[int] = []
        while ready:
            i = ready.pop()
            order.append(i)
            for j in self._up[i]:
                remaining[j] -= 1
                if remaining[j] == 0:
                    ready.append(j)
        if len(order) != len(self._elements):
            raise ValueError("covers contain a cycle")
        return order

    def _reachability(self) -> list[int]:
        # ge[i] holds a bit for every j with e_j >= e_i
        ge = [0] * len(self._elements)
        for i in reversed(self._topo):
            mask = 1 << i
            for j in self._up[i]:
                mask |= ge[j]
            ge[i] = mask
        return ge

    def _check_reduction(self) -> None:
        for i, ups in enumerate(self._up):
            for j in ups:
                for k in ups:
                    if k != j and (self._ge[k] >> j) & 1:
                        raise ValueError(
                            f"cover pair implied by others: "
                            f"({self._elements[i]!r}, {self._elements[j]!r})"
                        )

    @property
    def elements(self) -> tuple[Element, ...]:
        return self._elements

    @property
    def covers(self) -> tuple[tuple[Element, Element], ...]:
        return self._covers

    @property
    def p(self) -> int:
        return len(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, e: Element) -> bool:
        return e in self._index

    def index(self, e: Element) -> int:
        return self._index[e]

    def leq(self, a: Element, b: Element) -> bool:
        return bool((self._ge[self._index[a]] >> self._index[b]) & 1)

    def less(self, a: Element, b: Element) -> bool:
        return a != b and self.leq(a, b)

    def upper_covers(self, e: Element) -> list[Element]:
        return [self._elements[j] for j in self._up[self._index[e]]]

    def lower_covers(self, e: Element) -> list[Element]:
        return [self._elements[j] for j in self._down[self._index[e]]]

    @cached_property
    def minimal_elements(self) -> tuple[Element, ...]:
        return tuple(e for i, e in enumerate(self._elements) if not self._down[i])

    @cached_property
    def maximal_elements(self) -> tuple[Element, ...]:
        return tuple(e for i, e in enumerate(self._elements) if not self._up[i])


class GradedBoundedPoset(FinitePoset):
    """A finite poset with unique bottom and top in which every cover
    raises rank by exactly one."""

    def __init__(self, elements, covers):
        super().__init__(elements, covers)
        if len(self.minimal_elements) != 1:
            raise ValueError("no unique minimum")
        if len(self.maximal_elements) != 1:
            raise ValueError("no unique maximum")
        rank = [-1] * self.p
        rank[self.index(self.minimal_elements[0])] = 0
        for i in self._topo:
            for j in self._up[i]:
                if rank[j] == -1:
                    rank[j] = rank[i] + 1
                elif rank[j] != rank[i] + 1:
                    raise ValueError(
                        f"not graded: unequal chain lengths at {self._elements[j]!r}"
                    )
        self._rank = rank

    @property
    def zero_hat(self) -> Element:
        return self.minimal_elements[0]

    @property
    def one_hat(self) -> Element:
        return self.maximal_elements[0]

    def rank(self, e: Element) -> int:
        return self._rank[self.index(e)]

    @property
    def top_rank(self) -> int:
        return self._rank[self.index(self.one_hat)]

    @cached_property
    def _by_rank(self) -> list[list[int]]:
        layers: list[list[int]] = [[] for _ in range(self.top_rank + 1)]
        for i, r in enumerate(self._rank):
            layers[r].append(i)
        return layers

    def elements_of_rank(self, r: int) -> list[Element]:
        if not 0 <= r <= self.top_rank:
            return []
        return [self._elements[i] for i in self._by_rank[r]]


class IdealLattice(GradedBoundedPoset):
    """The lattice of order ideals of a base poset, ordered by inclusion.

    Elements are frozensets of base elements; rank is cardinality and
    covers add exactly one element.  Built via ideal_lattice().
    """

    def __init__(self, base: FinitePoset, ideals, covers):
        super().__init__(ideals, covers)
        self.base = base


def chain_product_2xn(n: int) -> FinitePoset:
    """The product of a 2-chain and an n-chain, with elements (i, k) for
    i in {1, 2} and k in [n], ordered coordinatewise."""
    if n < 1:
        raise ValueError(f"chain_product_2xn needs n >= 1, got {n}")
    elements = [(1, k) for k in range(1, n + 1)] + [(2, k) for k in range(1, n + 1)]
    covers: list[tuple[Element, Element]] = []
    for i in (1, 2):
        for k in range(1, n):
            covers.append(((i, k), (i, k + 1)))
    for k in range(1, n + 1):
        covers.append(((1, k), (2, k)))
    return FinitePoset(elements, covers)


def ideal_lattice(base: FinitePoset) -> IdealLattice:
    """All order ideals of the base poset, ordered by inclusion."""
    order = [base.elements[i] for i in base._topo]
    ideals: list[frozenset] = []

    def grow(chosen: set, start: int) -> None:
        ideals.append(frozenset(chosen))
        for i in range(start, len(order)):
            e = order[i]
            if all(c in chosen for c in base.lower_covers(e)):
                chosen.add(e)
                grow(chosen, i + 1)
                chosen.remove(e)

    # enumerate by position in a fixed topological order: each ideal is the
    # set of chosen positions, so each arises exactly once
    grow(set(), 0)
    position = {e: i for i, e in enumerate(order)}
    ideals.sort(key=lambda s: (len(s), sorted(position[e] for e in s)))
    covers = []
    ideal_set = set(ideals)
    for ideal in ideals:
        for e in base.elements:
            if e not in ideal:
                bigger = frozenset(ideal | {e})
                if bigger in ideal_set and all(
                    c in ideal for c in base.lower_covers(e)
                ):
                    covers.append((ideal, bigger))
    return IdealLattice(base, ideals, covers)


def linear_extensions(P: FinitePoset) -> list[tuple[Element, ...]]:
    """All order-preserving listings of P, as tuples placing each element
    at its rank.  Exhaustive, so guarded by size."""
    if P.p > LINEAR_EXTENSION_GUARD:
        raise ValueError(
            f"too large: |P| = {P.p} exceeds guard {LINEAR_EXTENSION_GUARD}"
        )
    down_left = [len(P._down[i]) for i in range(P.p)]
    out: list[tuple[Element, ...]] = []
    sequence: list[int] = []

    def place() -> None:
        if len(sequence) == P.p:
            out.append(tuple(P.elements[i] for i in sequence))
            return
        for i in range(P.p):
            if down_left[i] == 0:
                down_left[i] = -1
                for j in P._up[i]:
                    down_left[j] -= 1
                sequence.append(i)
                place()
                sequence.pop()
                for j in P._up[i]:
                    down_left[j] += 1
                down_left[i] = 0

    place()
    return out


def is_linear_extension(P: FinitePoset, order: Sequence[Element]) -> bool:
    if len(order) != P.p or set(order) != set(P.elements):
        return False
    position = {e: i for i, e in enumerate(order)}
    return all(position[a] < position[b] for a, b in P.covers)


def jordan_holder(
    P: FinitePoset, omega: Sequence[Element]
) -> list[tuple[int, ...]]:
    """The Jordan-Holder set of (P, omega): the permutation omega compose
    sigma-inverse for every linear extension sigma, in one-line notation."""
    if not is_linear_extension(P, omega):
        raise ValueError("not a linear extension")
    value = {e: i + 1 for i, e in enumerate(omega)}
    return [
        tuple(value[e] for e in sigma) for sigma in linear_extensions(P)
    ]


def permutation_descents(pi: Sequence[int]) -> frozenset[int]:
    """Positions i with pi(i) > pi(i+1), 1-based."""
    return frozenset(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def _check_rank_subset(L: GradedBoundedPoset, S: Iterable[int]) -> frozenset[int]:
    s = frozenset(S)
    for r in s:
        if not isinstance(r, int) or not 1 <= r <= L.top_rank - 1:
            raise ValueError(
                f"rank out of range: {r!r} not in [1, {L.top_rank - 1}]"
            )
    return s


def flag_f(L: GradedBoundedPoset, S: Iterable[int]) -> int:
    """Number of chains in the proper part of L whose rank set is exactly S."""
    s = sorted(_check_rank_subset(L, S))
    if not s:
        return 1
    layer = L._by_rank[s[0]]
    counts = [1] * len(layer)
    for r in s[1:]:
        nxt = L._by_rank[r]
        counts = [
            sum(c for i, c in zip(layer, counts) if (L._ge[i] >> j) & 1)
            for j in nxt
        ]
        layer = nxt
    return sum(counts)


def flag_h(L: GradedBoundedPoset, S: Iterable[int]) -> int:
    """Inclusion-exclusion transform of flag_f over subsets of S."""
    s = sorted(_check_rank_subset(L, S))
    total = 0
    for size in range(len(s) + 1):
        sign = (-1) ** (len(s) - size)
        for T in combinations(s, size):
            total += sign * flag_f(L, T)
    return total


def alpha_table(L: GradedBoundedPoset) -> dict[frozenset[int], int]:
    """flag_f for every subset of the interior ranks at once, by extending
    chain-count vectors depth-first one rank at a time."""
    top = L.top_rank
    table: dict[frozenset[int], int] = {frozenset(): 1}

    def extend(chosen: tuple[int, ...], layer: list[int], counts: list[int]) -> None:
        table[frozenset(chosen)] = sum(counts)
        start = chosen[-1] + 1 if chosen else 1
        for r in range(start, top):
            nxt = L._by_rank[r]
            nxt_counts = [
                sum(c for i, c in zip(layer, counts) if (L._ge[i] >> j) & 1)
                for j in nxt
            ]
            extend(chosen + (r,), nxt, nxt_counts)

    for r in range(1, top):
        extend((r,), L._by_rank[r], [1] * len(L._by_rank[r]))
    return table


def flag_h_table(L: GradedBoundedPoset) -> dict[frozenset[int], int]:
    """flag_h for every subset of the interior ranks, via the subset
    Moebius transform of the alpha table."""
    top = L.top_rank
    width = max(top - 1, 0)
    data = [0] * (1 << width)
    for s, count in alpha_table(L).items():
        mask = 0
        for r in s:
            mask |= 1 << (r - 1)
        data[mask] = count
    for b in range(width):
        bit = 1 << b
        for mask in range(1 << width):
            if mask & bit:
                data[mask] -= data[mask ^ bit]
    return {
        frozenset(b + 1 for b in range(width) if (mask >> b) & 1): data[mask]
        for mask in range(1 << width)
    }


def extension_to_path(sigma: Sequence[tuple[int, int]]) -> DyckPath:
    """Read a linear extension of 2 x n as a word: first-row elements
    become v, second-row elements become h."""
    n, remainder = divmod(len(sigma), 2)
    if remainder or n < 1 or not is_linear_extension(chain_product_2xn(n), sigma):
        raise ValueError("not a linear extension")
    return DyckPath("v" if e[0] == 1 else "h" for e in sigma)


def path_to_extension(w: DyckPath) -> tuple[tuple[int, int], ...]:
    """Inverse of extension_to_path: the i-th v becomes (1, i), the j-th
    h becomes (2, j)."""
    out = []
    seen_v = seen_h = 0
    for letter in w.word:
        if letter == "v":
            seen_v += 1
            out.append((1, seen_v))
        else:
            seen_h += 1
            out.append((2, seen_h))
    return tuple(out)


def verify_theorem_main(n: int, W: DyckPath) -> dict:
    """Check beta(S) of J(2 x n) against the number of paths whose descent
    set read against W equals S, for every S in [2n-1].

    Returns a report dict with one entry per subset and an overall verdict.
    """
    if n > THEOREM_GUARD:
        raise ValueError(f"too large: n = {n} exceeds guard {THEOREM_GUARD}")
    if n < 1:
        raise ValueError(f"verify_theorem_main needs n >= 1, got {n}")
    if W.n != n:
        raise ValueError(f"length mismatch: |W| = {2 * W.n}, expected {2 * n}")
    lattice = ideal_lattice(chain_product_2xn(n))
    beta = flag_h_table(lattice)
    buckets = Counter(descent_set_wrt(w, W) for w in enumerate_paths(n))
    entries = []
    passed = True
    for mask in range(1 << (2 * n - 1)):
        s = frozenset(b + 1 for b in range(2 * n - 1) if (mask >> b) & 1)
        lhs = beta[s]
        rhs = buckets.get(s, 0)
        if lhs != rhs:
            passed = False
        entries.append(
            {
                "s": sorted(s),
                "flag_h": lhs,
                "paths": rhs,
                "match": lhs == rhs,
            }
        )
    return {"n": n, "w": W.word, "passed": passed, "entries": entries}
