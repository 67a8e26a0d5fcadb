"""Semistandard Young tableaux and the Schur route to q-Narayana numbers.

Two-column SSYT with parts below n encode Dyck paths block by block; row
sums become descent sets.  Principal specializations of Schur polynomials
are computed twice, once as the plain sum over SSYT and once by the
hook-content formula, and the q-Narayana numbers fall out by evaluating
the two-column shapes in n - 1 variables.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .dyck import DyckPath, descent_set
from .qpoly import QPoly, exact_div, q_int


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(parts)
        for i, part in enumerate(ps):
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
            if i and ps[i - 1] < part:
                raise ValueError(f"parts must weakly decrease, got {ps}")
        self._parts = ps

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def length(self) -> int:
        return len(self._parts)

    @property
    def size(self) -> int:
        return sum(self._parts)

    def cells(self) -> list[tuple[int, int]]:
        """All (row, column) pairs of the diagram, 1-based, row-major."""
        return [
            (i, j)
            for i, part in enumerate(self._parts, start=1)
            for j in range(1, part + 1)
        ]

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"


def two_column(k: int) -> Partition:
    """The shape with k rows of length 2; empty for k = 0."""
    if k < 0:
        raise ValueError(f"negative row count: {k}")
    return Partition((2,) * k)


def _as_partition(shape: "Partition | Iterable[int]") -> Partition:
    return shape if isinstance(shape, Partition) else Partition(shape)


class SSYT:
    """A semistandard filling: rows weakly increase, columns strictly."""

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Sequence[int]]):
        rs = tuple(tuple(row) for row in rows)
        self._shape = Partition(len(row) for row in rs)
        for i, row in enumerate(rs):
            for j, entry in enumerate(row):
                if not isinstance(entry, int) or entry < 1:
                    raise ValueError(
                        f"entries must be positive integers, got {entry!r}"
                    )
                if j and row[j - 1] > entry:
                    raise ValueError(f"rows must weakly increase: row {i + 1}")
                if i and j < len(rs[i - 1]) and rs[i - 1][j] >= entry:
                    raise ValueError(
                        f"columns must strictly increase: column {j + 1}"
                    )
        self._rows = rs

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Partition:
        return self._shape

    def entry(self, i: int, j: int) -> int:
        """T_ij with 1-based row i and column j."""
        return self._rows[i - 1][j - 1]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self._rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SSYT):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SSYT({[list(row) for row in self._rows]!r})"


def enumerate_ssyt(
    shape: "Partition | Iterable[int]", max_part: int
) -> list[SSYT]:
    """All SSYT of the shape with entries in [1, max_part], in lexicographic
    order of the row-major reading word."""
    shape = _as_partition(shape)
    if max_part < 0:
        raise ValueError(f"negative max_part: {max_part}")
    if shape.length == 0:
        return [SSYT(())]
    if max_part < shape.length:
        return []
    rows: list[list[int]] = [[0] * part for part in shape.parts]
    out: list[SSYT] = []
    cells = shape.cells()

    def fill(pos: int) -> None:
        if pos == len(cells):
            out.append(SSYT([tuple(row) for row in rows]))
            return
        i, j = cells[pos]
        lo = 1
        if j > 1:
            lo = rows[i - 1][j - 2]
        if i > 1 and len(rows[i - 2]) >= j:
            lo = max(lo, rows[i - 2][j - 1] + 1)
        for value in range(lo, max_part + 1):
            rows[i - 1][j - 1] = value
            fill(pos + 1)
        rows[i - 1][j - 1] = 0

    fill(0)
    return out


def row_sums(T: SSYT) -> tuple[int, ...]:
    """The sequence of row sums, top row first."""
    return tuple(sum(row) for row in T.rows)


def ssyt_to_dyck(T: SSYT, n: int) -> DyckPath:
    """Encode a two-column SSYT with entries below n as a Dyck path.

    The word is built in k + 1 blocks of v runs followed by h runs: the
    first block has T_12 v and T_11 h, block i the successive differences
    down the columns, and the last block tops both columns up to n.  The
    descent set of the result is exactly the set of row sums.
    """
    k = T.shape.length
    if any(part != 2 for part in T.shape.parts):
        raise ValueError(f"not a two-column shape: {T.shape.parts}")
    if n < 1:
        raise ValueError(f"ssyt_to_dyck needs n >= 1, got {n}")
    for row in T.rows:
        for entry in row:
            if entry >= n:
                raise ValueError(f"entry out of range: {entry} >= {n}")
    word = []
    prev_col1 = prev_col2 = 0
    for i in range(1, k + 1):
        word.append("v" * (T.entry(i, 2) - prev_col2))
        word.append("h" * (T.entry(i, 1) - prev_col1))
        prev_col1, prev_col2 = T.entry(i, 1), T.entry(i, 2)
    word.append("v" * (n - prev_col2))
    word.append("h" * (n - prev_col1))
    return DyckPath("".join(word))


def dyck_to_ssyt(w: DyckPath) -> SSYT:
    """Inverse of ssyt_to_dyck: row i collects the h and v counts of the
    prefix ending at the i-th descent."""
    word = w.word
    rows = []
    for s in sorted(descent_set(w)):
        prefix = word[:s]
        rows.append((prefix.count("h"), prefix.count("v")))
    return SSYT(rows)


def _cell_in(shape: Partition, cell: tuple[int, int]) -> None:
    i, j = cell
    if not (1 <= i <= shape.length and 1 <= j <= shape.parts[i - 1]):
        raise ValueError(f"cell not in diagram: {cell}")


def hook_length(shape: "Partition | Iterable[int]", cell: tuple[int, int]) -> int:
    """Arm plus leg plus one for a 1-based (row, column) cell."""
    shape = _as_partition(shape)
    _cell_in(shape, cell)
    i, j = cell
    arm = shape.parts[i - 1] - j
    leg = sum(1 for part in shape.parts[i:] if part >= j)
    return arm + leg + 1


def content(shape: "Partition | Iterable[int]", cell: tuple[int, int]) -> int:
    """Column minus row."""
    shape = _as_partition(shape)
    _cell_in(shape, cell)
    i, j = cell
    return j - i


def schur_principal_ssyt(shape: "Partition | Iterable[int]", n: int) -> QPoly:
    """The Schur polynomial at (q, q^2, ..., q^n) as a sum over SSYT."""
    shape = _as_partition(shape)
    total: dict[int, int] = {}
    for T in enumerate_ssyt(shape, n):
        d = T.total
        total[d] = total.get(d, 0) + 1
    if not total:
        return QPoly.zero()
    return QPoly([total.get(d, 0) for d in range(max(total) + 1)])


def schur_principal_hook(shape: "Partition | Iterable[int]", n: int) -> QPoly:
    """The same specialization by the hook-content formula:
    q**(sum of i * lambda_i) times the product of [n + c(u)] / [h(u)].

    Divisions run one hook at a time, smallest first, through exact_div;
    a nonzero remainder would abort loudly and means a bug.
    """
    shape = _as_partition(shape)
    if n < 0:
        raise ValueError(f"negative variable count: {n}")
    if n < shape.length:
        return QPoly.zero()
    prefactor = sum(i * part for i, part in enumerate(shape.parts, start=1))
    result = QPoly.q_power(prefactor)
    hooks = []
    for cell in shape.cells():
        result = result * q_int(n + content(shape, cell))
        hooks.append(hook_length(shape, cell))
    for h in sorted(hooks):
        result = exact_div(result, q_int(h))
    return result


def q_narayana_schur(n: int, k: int, method: str = "ssyt") -> QPoly:
    """q-Narayana via the two-column Schur specialization in n - 1 variables."""
    if n < 1:
        raise ValueError(f"q_narayana_schur needs n >= 1, got {n}")
    if k < 0:
        raise ValueError(f"q_narayana_schur needs k >= 0, got {k}")
    if method == "ssyt":
        return schur_principal_ssyt(two_column(k), n - 1)
    if method == "hook":
        return schur_principal_hook(two_column(k), n - 1)
    raise ValueError(f"unknown method: {method}")
