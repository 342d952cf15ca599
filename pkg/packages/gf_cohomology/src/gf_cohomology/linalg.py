"""
Exact rational linear algebra for every cohomology computation.

Scalars are :class:`fractions.Fraction`; rank and kernel computations go
through sympy's sparse domain matrices over ``QQ`` (reduced row echelon
form), so no floating point ever enters a Betti number.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from gf_cohomology.errors import ComplexError
from gf_cohomology.logger import log

__all__ = [
    "Rational",
    "Vector",
    "as_rational",
    "format_rational",
    "SparseMatrix",
    "Subspace",
    "BettiTable",
    "ChainComplexSlice",
    "rank",
    "kernel_basis",
    "express",
    "extend_basis",
    "cohomology_dims",
]

Rational = Fraction
Vector = tuple[Fraction, ...]


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce ints, ``"p/q"`` strings and fractions to a reduced :class:`Fraction`."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, float):
        raise TypeError("floating point is not allowed in exact computations")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``"3"``, ``"-1/2"``."""
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


# ----------------------------------------------------------------------- #
#  Sparse matrices                                                         #
# ----------------------------------------------------------------------- #
@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse matrix; entries sorted by (row, col), no stored zeros."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ComplexError(f"negative shape {self.rows}x{self.cols}")
        seen: set[tuple[int, int]] = set()
        cleaned = []
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ComplexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if (r, c) in seen:
                raise ComplexError(f"duplicate entry at ({r}, {c})")
            seen.add((r, c))
            v = as_rational(v)
            if v:
                cleaned.append((r, c, v))
        cleaned.sort(key=lambda e: (e[0], e[1]))
        object.__setattr__(self, "entries", tuple(cleaned))

    # ----- constructors ----- #
    @classmethod
    def from_dict(cls, rows: int, cols: int, data: Mapping[tuple[int, int], Fraction | int]) -> "SparseMatrix":
        return cls(rows, cols, tuple((r, c, as_rational(v)) for (r, c), v in data.items()))

    @classmethod
    def from_rows(cls, dense: Sequence[Sequence[Fraction | int | str]], cols: int | None = None) -> "SparseMatrix":
        n_rows = len(dense)
        n_cols = cols if cols is not None else (len(dense[0]) if dense else 0)
        return cls(
            n_rows,
            n_cols,
            tuple((r, c, as_rational(v)) for r, row in enumerate(dense) for c, v in enumerate(row) if v),
        )

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, Fraction]]) -> "SparseMatrix":
        """Build from a list of sparse column vectors ``{row: value}``."""
        return cls(
            rows,
            len(columns),
            tuple((r, c, v) for c, col in enumerate(columns) for r, v in col.items() if v),
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, ())

    @classmethod
    def vstack(cls, blocks: Sequence["SparseMatrix"], cols: int) -> "SparseMatrix":
        entries = []
        offset = 0
        for block in blocks:
            if block.cols != cols:
                raise ComplexError(f"cannot stack {block.cols}-column block onto {cols} columns")
            entries.extend((r + offset, c, v) for r, c, v in block.entries)
            offset += block.rows
        return cls(offset, cols, tuple(entries))

    # ----- views ----- #
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not self.entries

    def to_dense(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense

    def to_sdm(self) -> SDM:
        elems: dict[int, dict[int, object]] = {}
        for r, c, v in self.entries:
            elems.setdefault(r, {})[c] = _to_qq(v)
        return SDM(elems, (self.rows, self.cols), QQ)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple((c, r, v) for r, c, v in self.entries))

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ComplexError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for r, c, v in other.entries:
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], Fraction] = {}
        for r, k, v in self.entries:
            for c, w in by_row.get(k, ()):
                acc[(r, c)] = acc.get((r, c), Fraction(0)) + v * w
        return SparseMatrix.from_dict(self.rows, other.cols, acc)

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        if len(vector) != self.cols:
            raise ComplexError(f"vector of length {len(vector)} for {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for r, c, v in self.entries:
            if vector[c]:
                out[r] += v * vector[c]
        return tuple(out)


def rank(m: SparseMatrix) -> int:
    """Rank over ℚ via exact sparse RREF."""
    if m.is_zero():
        return 0
    _, pivots = m.to_sdm().rref()
    return len(pivots)


def kernel_basis(m: SparseMatrix) -> list[Vector]:
    """Basis of the null space; ``len == m.cols - rank(m)`` and ``m·v == 0`` for each ``v``."""
    if m.is_zero():
        return [tuple(Fraction(int(i == j)) for i in range(m.cols)) for j in range(m.cols)]
    basis, _ = m.to_sdm().nullspace()
    out = []
    for i in range(basis.shape[0]):
        row = basis.get(i, {})
        out.append(tuple(_from_qq(row[j]) if j in row else Fraction(0) for j in range(m.cols)))
    return out


# ----------------------------------------------------------------------- #
#  Subspaces in coordinates                                                #
# ----------------------------------------------------------------------- #
class Subspace:
    """
    Span of a set of vectors, kept in reduced row echelon form.

    A vector ``v`` of the span has coordinates ``(v[p] for p in pivots)``
    with respect to :attr:`basis`.
    """

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[Fraction]] = ()) -> None:
        self.ambient_dim = ambient_dim
        rows = [tuple(v) for v in vectors]
        if rows:
            m = SparseMatrix.from_rows(rows, cols=ambient_dim)
        else:
            m = SparseMatrix.zeros(0, ambient_dim)
        if m.is_zero():
            self.basis: list[Vector] = []
            self.pivots: list[int] = []
            return
        reduced, pivots = m.to_sdm().rref()
        self.pivots = list(pivots)
        self.basis = []
        for i in range(len(pivots)):
            row = reduced.get(i, {})
            self.basis.append(tuple(_from_qq(row[j]) if j in row else Fraction(0) for j in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, vector: Sequence[Fraction]) -> Vector:
        return tuple(vector[p] for p in self.pivots)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        coords = self.coordinates(vector)
        recon = [Fraction(0)] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        recon[j] += c * x
        return tuple(recon) == tuple(vector)


def express(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vector | None:
    """Coefficients ``c`` with ``Σ c_i vectors[i] == target`` (vectors independent), else ``None``."""
    n = len(target)
    k = len(vectors)
    columns = [dict((r, v) for r, v in enumerate(vec) if v) for vec in vectors]
    columns.append(dict((r, v) for r, v in enumerate(target) if v))
    aug = SparseMatrix.from_columns(n, columns)
    if aug.is_zero():
        return tuple(Fraction(0) for _ in range(k))
    reduced, pivots = aug.to_sdm().rref()
    pivots = list(pivots)
    if k in pivots:
        return None
    if pivots != list(range(k)):
        raise ComplexError("spanning vectors are linearly dependent")
    coords = []
    for i in range(k):
        row = reduced.get(i, {})
        coords.append(_from_qq(row[k]) if k in row else Fraction(0))
    return tuple(coords)


def extend_basis(base: list[Vector], candidates: Sequence[Vector], ambient_dim: int) -> list[Vector]:
    """Greedily pick candidates independent modulo ``span(base)``."""
    chosen: list[Vector] = []
    current = list(base)
    current_rank = Subspace(ambient_dim, current).dim
    for vec in candidates:
        trial = Subspace(ambient_dim, current + [vec]).dim
        if trial > current_rank:
            chosen.append(vec)
            current.append(vec)
            current_rank = trial
    return chosen


# ----------------------------------------------------------------------- #
#  Betti tables and chain complexes                                        #
# ----------------------------------------------------------------------- #
@dataclass(frozen=True)
class BettiTable:
    """
    Cohomology dimensions per degree. ``None`` marks a degree outside the
    computed window ("unknown"), which must never be read as zero.
    """

    ranks: tuple[int | None, ...]
    representatives: tuple[tuple[Vector, ...], ...] | None = field(default=None, compare=False)

    def __getitem__(self, degree: int) -> int | None:
        return self.ranks[degree] if 0 <= degree < len(self.ranks) else None

    def __len__(self) -> int:
        return len(self.ranks)

    @property
    def known(self) -> tuple[int, ...]:
        """Leading run of computed degrees."""
        out = []
        for r in self.ranks:
            if r is None:
                break
            out.append(r)
        return tuple(out)

    def upto(self, degree: int) -> tuple[int | None, ...]:
        return tuple(self[q] for q in range(degree + 1))

    @property
    def total(self) -> int:
        return sum(self.known)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** q * b for q, b in enumerate(self.known))

    def as_strings(self) -> list[str]:
        return ["unknown" if r is None else str(r) for r in self.ranks]


@dataclass(frozen=True)
class ChainComplexSlice:
    """
    Degrees ``0..D`` of a cochain complex with ``d_q : C^q → C^{q+1}`` stored as
    ``dims[q+1] × dims[q]`` matrices. ``complete`` states that nothing lives
    above degree ``D``; otherwise the top degree is reported as unknown.
    """

    dims: tuple[int, ...]
    differentials: tuple[SparseMatrix, ...]
    complete: bool = False

    def __post_init__(self) -> None:
        dims = tuple(self.dims)
        diffs = tuple(self.differentials)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "differentials", diffs)
        if not dims:
            raise ComplexError("a complex needs at least degree 0")
        if len(diffs) != len(dims) - 1:
            raise ComplexError(f"{len(dims)} degrees need {len(dims) - 1} differentials, got {len(diffs)}")
        for q, d in enumerate(diffs):
            if d.shape != (dims[q + 1], dims[q]):
                raise ComplexError(f"d_{q} has shape {d.shape}, expected {(dims[q + 1], dims[q])}")
        for q in range(len(diffs) - 1):
            if not diffs[q + 1].matmul(diffs[q]).is_zero():
                raise ComplexError(f"d_{q + 1} ∘ d_{q} ≠ 0")

    @property
    def top(self) -> int:
        return len(self.dims) - 1


def cohomology_dims(c: ChainComplexSlice, representatives: bool = False, jobs: int = 1) -> BettiTable:
    """
    ``betti[q] = dim ker d_q − rank d_{q−1}`` for ``q < D``; the top degree is
    computed only when the slice is complete. Ranks of the differentials are
    independent and go to a process pool when ``jobs > 1``.
    """
    if jobs > 1 and len(c.differentials) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            ranks = list(pool.map(rank, c.differentials))
    else:
        ranks = [rank(d) for d in c.differentials]
    betti: list[int | None] = []
    for q in range(c.top + 1):
        incoming = ranks[q - 1] if q > 0 else 0
        if q < c.top:
            betti.append(c.dims[q] - ranks[q] - incoming)
        elif c.complete:
            betti.append(c.dims[q] - incoming)
        else:
            betti.append(None)
    log.debug("cohomology dims=%s ranks=%s betti=%s", c.dims, ranks, betti)

    reps = None
    if representatives:
        reps_list = []
        for q in range(c.top + 1):
            if betti[q] is None:
                reps_list.append(())
                continue
            if q < c.top:
                cycles = kernel_basis(c.differentials[q])
            else:
                cycles = [tuple(Fraction(int(i == j)) for i in range(c.dims[q])) for j in range(c.dims[q])]
            boundaries = (
                list(Subspace(c.dims[q], _columns(c.differentials[q - 1])).basis) if q > 0 else []
            )
            reps_list.append(tuple(extend_basis(boundaries, cycles, c.dims[q])))
        reps = tuple(reps_list)
    return BettiTable(tuple(betti), reps)


def _columns(m: SparseMatrix) -> list[Vector]:
    cols = [[Fraction(0)] * m.rows for _ in range(m.cols)]
    for r, c, v in m.entries:
        cols[c][r] = v
    return [tuple(col) for col in cols]
