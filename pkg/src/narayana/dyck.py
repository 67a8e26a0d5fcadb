"""Dyck paths and their combinatorial statistics.

A path of semilength n is a word of n ``v`` and n ``h`` steps in which every
prefix holds at least as many v as h.  Positions are 1-based.  Words are
bit-packed most-significant-bit first with h = 1, so the integer order on the
packed word is exactly the lexicographic order with v < h.

Statistics provided: des / maj (valleys, reported at the h), hp (peaks with
prefix v-excess at least 2), ea (v in even position), lnfs / maj_l (vvh and
hhv factors, reported at the center), da (vv factors), and the reference-word
family des_w / maj_w built from the labeling v_i, h_j.
"""

from __future__ import annotations

import random
from functools import cache
from typing import Iterable, Iterator

from .qpoly import QPoly, catalan

Label = tuple[str, int]


class DyckPath:
    """An immutable Dyck path of semilength n."""

    __slots__ = ("_n", "_bits")

    def __init__(self, steps: "Iterable[str] | str"):
        word = "".join(steps).lower()
        bits = 0
        excess = 0
        for position, letter in enumerate(word, start=1):
            if letter == "v":
                bits <<= 1
                excess += 1
            elif letter == "h":
                bits = (bits << 1) | 1
                excess -= 1
            else:
                raise ValueError(f"invalid character {letter!r} in path word")
            if excess < 0:
                raise ValueError(f"prefix condition violated at position {position}")
        if excess != 0 or len(word) % 2:
            raise ValueError("unbalanced word: needs equal numbers of v and h")
        self._n = len(word) // 2
        self._bits = bits

    @classmethod
    def from_string(cls, word: str) -> "DyckPath":
        return cls(word)

    @classmethod
    def _from_bits(cls, n: int, bits: int) -> "DyckPath":
        path = object.__new__(cls)
        path._n = n
        path._bits = bits
        return path

    @property
    def n(self) -> int:
        """Semilength; the word has 2n letters."""
        return self._n

    @property
    def word(self) -> str:
        length = 2 * self._n
        return "".join(
            "h" if (self._bits >> (length - i)) & 1 else "v"
            for i in range(1, length + 1)
        )

    def letter(self, i: int) -> str:
        """The letter at 1-based position i."""
        if not 1 <= i <= 2 * self._n:
            raise IndexError(f"position {i} outside 1..{2 * self._n}")
        return "h" if (self._bits >> (2 * self._n - i)) & 1 else "v"

    def __len__(self) -> int:
        return 2 * self._n

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DyckPath):
            return self._n == other._n and self._bits == other._bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __lt__(self, other: "DyckPath") -> bool:
        return (self._n, self._bits) < (other._n, other._bits)

    def __le__(self, other: "DyckPath") -> bool:
        return (self._n, self._bits) <= (other._n, other._bits)

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"DyckPath({self.word!r})"


def enumerate_paths(n: int) -> Iterator[DyckPath]:
    """Yield every path of semilength n once, lexicographically with v < h."""
    if n < 0:
        raise ValueError(f"negative semilength: {n}")

    def walk(bits: int, v_left: int, h_left: int, excess: int) -> Iterator[DyckPath]:
        if not v_left and not h_left:
            yield DyckPath._from_bits(n, bits)
            return
        if v_left:
            yield from walk(bits << 1, v_left - 1, h_left, excess + 1)
        if h_left and excess:
            yield from walk((bits << 1) | 1, v_left, h_left - 1, excess - 1)

    return walk(0, n, n, 0)


@cache
def _completions(steps: int, excess: int) -> int:
    # lattice walks of the given length from height `excess` down to 0,
    # never dipping below 0
    if excess < 0 or excess > steps or (steps - excess) % 2:
        return 0
    if steps == 0:
        return 1
    total = _completions(steps - 1, excess + 1)
    if excess:
        total += _completions(steps - 1, excess - 1)
    return total


def unrank(n: int, index: int) -> DyckPath:
    """The path at the given 0-based position in lexicographic order."""
    if n < 0:
        raise ValueError(f"negative semilength: {n}")
    if not 0 <= index < catalan(n):
        raise ValueError(f"index out of range: {index} not in [0, {catalan(n)})")
    bits = 0
    excess = 0
    for remaining in range(2 * n, 0, -1):
        with_v = _completions(remaining - 1, excess + 1)
        if index < with_v:
            bits <<= 1
            excess += 1
        else:
            index -= with_v
            bits = (bits << 1) | 1
            excess -= 1
    return DyckPath._from_bits(n, bits)


def rank(w: DyckPath) -> int:
    """Position of w in lexicographic order; inverse of unrank."""
    index = 0
    excess = 0
    length = 2 * w.n
    for i in range(1, length + 1):
        if w.letter(i) == "h":
            index += _completions(length - i, excess + 1)
            excess -= 1
        else:
            excess += 1
    return index


def random_path(n: int, seed: "int | random.Random | None" = None) -> DyckPath:
    """A uniformly random path, reproducible for a fixed integer seed."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return unrank(n, rng.randrange(catalan(n)))


def descent_set(w: DyckPath) -> frozenset[int]:
    """Positions i with w_i = h and w_{i+1} = v (the valley's h)."""
    word = w.word
    return frozenset(
        i for i in range(1, 2 * w.n) if word[i - 1] == "h" and word[i] == "v"
    )


def des(w: DyckPath) -> int:
    return len(descent_set(w))


def maj(w: DyckPath) -> int:
    return sum(descent_set(w))


def high_peak_set(w: DyckPath) -> frozenset[int]:
    """Positions i of peaks vh whose prefix v-excess through the v is >= 2."""
    word = w.word
    high = []
    excess = 0
    for i, letter in enumerate(word, start=1):
        if letter == "v":
            excess += 1
            if excess >= 2 and i < len(word) and word[i] == "h":
                high.append(i)
        else:
            excess -= 1
    return frozenset(high)


def hp(w: DyckPath) -> int:
    return len(high_peak_set(w))


def ea(w: DyckPath) -> int:
    """Number of v in even positions."""
    word = w.word
    return sum(1 for i in range(2, 2 * w.n + 1, 2) if word[i - 1] == "v")


def ls_set(w: DyckPath) -> frozenset[int]:
    """Centers i in [2, 2n-1] of factors w_{i-1} w_i w_{i+1} = vvh or hhv."""
    word = w.word
    return frozenset(
        i
        for i in range(2, 2 * w.n)
        if word[i - 2 : i + 1] in ("vvh", "hhv")
    )


def lnfs(w: DyckPath) -> int:
    return len(ls_set(w))


def maj_l(w: DyckPath) -> int:
    return sum(ls_set(w))


def da(w: DyckPath) -> int:
    """Number of double ascents, i.e. factors vv."""
    word = w.word
    return sum(1 for i in range(2 * w.n - 1) if word[i] == "v" and word[i + 1] == "v")


def label(w: DyckPath) -> tuple[Label, ...]:
    """Occurrence labels: the i-th v becomes ("v", i), the j-th h ("h", j)."""
    labels = []
    seen_v = seen_h = 0
    for letter in w.word:
        if letter == "v":
            seen_v += 1
            labels.append(("v", seen_v))
        else:
            seen_h += 1
            labels.append(("h", seen_h))
    return tuple(labels)


def label_string(w: DyckPath) -> str:
    """The labeling rendered like ``v1v2h1v3h2h3``."""
    return "".join(f"{letter}{index}" for letter, index in label(w))


def descent_set_wrt(w: DyckPath, w0: DyckPath) -> frozenset[int]:
    """Positions i where the labeled letter w_{i+1} occurs before w_i in w0."""
    if len(w) != len(w0):
        raise ValueError(f"length mismatch: |w| = {len(w)}, |W| = {len(w0)}")
    order = {lab: pos for pos, lab in enumerate(label(w0))}
    labeled = label(w)
    return frozenset(
        i
        for i in range(1, len(w))
        if order[labeled[i]] < order[labeled[i - 1]]
    )


def des_wrt(w: DyckPath, w0: DyckPath) -> int:
    return len(descent_set_wrt(w, w0))


def maj_wrt(w: DyckPath, w0: DyckPath) -> int:
    return sum(descent_set_wrt(w, w0))


STATISTICS = {"des": des, "hp": hp, "ea": ea, "lnfs": lnfs, "da": da}
COSTATISTICS = {"maj": maj, "maj_l": maj_l}


def _resolve(name: str, wrt: DyckPath | None):
    if name in STATISTICS:
        return STATISTICS[name]
    if name in COSTATISTICS:
        return COSTATISTICS[name]
    if name in ("des_w", "maj_w"):
        if wrt is None:
            raise ValueError(f"statistic {name} needs a reference path")
        fn = des_wrt if name == "des_w" else maj_wrt
        return lambda w: fn(w, wrt)
    raise ValueError(f"unknown statistic: {name}")


def distribution(
    n: int, statistic: str, *, wrt: DyckPath | None = None
) -> dict[int, int]:
    """Exact counts of a statistic over all paths of semilength n."""
    stat = _resolve(statistic, wrt)
    counts: dict[int, int] = {}
    for w in enumerate_paths(n):
        value = stat(w)
        counts[value] = counts.get(value, 0) + 1
    return dict(sorted(counts.items()))


def joint_q(
    n: int, statistic: str, costatistic: str, *, wrt: DyckPath | None = None
) -> dict[int, QPoly]:
    """For each value k of the statistic, the generating polynomial
    sum of q**costatistic over the paths with statistic k."""
    stat = _resolve(statistic, wrt)
    costat = _resolve(costatistic, wrt)
    raw: dict[int, dict[int, int]] = {}
    for w in enumerate_paths(n):
        k = stat(w)
        m = costat(w)
        bucket = raw.setdefault(k, {})
        bucket[m] = bucket.get(m, 0) + 1
    table: dict[int, QPoly] = {}
    for k in sorted(raw):
        bucket = raw[k]
        table[k] = QPoly([bucket.get(d, 0) for d in range(max(bucket) + 1)])
    return table
