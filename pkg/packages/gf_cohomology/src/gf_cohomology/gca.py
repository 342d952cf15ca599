"""
Free graded-commutative algebras with a monomial truncation and a
differential given on generators.

Monomials are exponent tuples in generator declaration order; odd
generators carry exponent 0/1. Products follow the Koszul sign rule and are
reduced modulo the span of monomials whose filtration weight exceeds the
truncation bound (a quotient, not a subcomplex).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

from gf_cohomology.errors import AlgebraError, ComplexError
from gf_cohomology.linalg import (
    BettiTable,
    ChainComplexSlice,
    SparseMatrix,
    Vector,
    as_rational,
    cohomology_dims,
    format_rational,
)
from gf_cohomology.logger import log

__all__ = [
    "GeneratorSpec",
    "Monomial",
    "Element",
    "FreeGCA",
    "monomial_basis",
    "multiply",
    "apply_differential",
    "cdga_cohomology",
]

Monomial = tuple[int, ...]
# A polynomial written with generator names: a word is a product in the given
# order, a bare name is a single generator.
Word = Union[str, tuple[str, ...]]


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int
    filtration_weight: int = 0

    def __post_init__(self) -> None:
        if not self.name:
            raise AlgebraError("generator needs a name")
        if self.degree <= 0:
            raise AlgebraError(f"generator {self.name!r} must have positive degree, got {self.degree}")
        if self.filtration_weight < 0:
            raise AlgebraError(f"generator {self.name!r} has negative filtration weight")

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1


class Element:
    """Sparse linear combination of monomials with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None) -> None:
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                self.terms[m] = c

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Element":
        out = cls.__new__(cls)
        out.terms = {m: c for m, c in terms.items() if c}
        return out

    def __add__(self, other: "Element") -> "Element":
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return Element._raw(acc)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element._raw({m: -c for m, c in self.terms.items()})

    def scale(self, factor: Fraction | int) -> "Element":
        factor = as_rational(factor)
        return Element._raw({m: c * factor for m, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:  # pragma: no cover - elements are mutable-free but rarely hashed
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Element({self.terms!r})"

    def items(self):
        return self.terms.items()

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)


class FreeGCA:
    """
    Free graded-commutative algebra with a degree +1 differential.

    Parameters
    ----------
    generators:
        Generator specs in canonical order.
    differential:
        ``name -> {word: coefficient}``; generators missing from the map are closed.
    truncation_bound:
        Monomials of filtration weight above this are zero. ``None`` = unbounded.
    """

    def __init__(
        self,
        generators: Sequence[GeneratorSpec],
        differential: Mapping[str, Mapping[Word, Fraction | int | str]] | None = None,
        truncation_bound: int | None = None,
    ) -> None:
        self.generators: tuple[GeneratorSpec, ...] = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise AlgebraError("generator names must be distinct")
        if truncation_bound is not None and truncation_bound < 0:
            raise AlgebraError("truncation bound must be non-negative")
        self.truncation_bound = truncation_bound
        self.index = {name: i for i, name in enumerate(names)}
        self._odd = tuple(g.odd for g in self.generators)
        self._odd_positions = tuple(i for i, g in enumerate(self.generators) if g.odd)

        unknown = set(differential or {}) - set(names)
        if unknown:
            raise AlgebraError(f"differential given for unknown generators {sorted(unknown)}")
        self._d: tuple[Element, ...] = tuple(
            self.polynomial((differential or {}).get(g.name, {})) for g in self.generators
        )
        self._validate_differential()

    # ------------------------------------------------------------------ #
    #  Monomial bookkeeping                                              #
    # ------------------------------------------------------------------ #
    @property
    def size(self) -> int:
        return len(self.generators)

    def degree(self, m: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(m, self.generators))

    def filtration(self, m: Monomial) -> int:
        return sum(e * g.filtration_weight for e, g in zip(m, self.generators))

    def survives(self, m: Monomial) -> bool:
        return self.truncation_bound is None or self.filtration(m) <= self.truncation_bound

    def one(self) -> Element:
        return Element({(0,) * self.size: 1})

    def generator(self, name: str) -> Element:
        m = [0] * self.size
        m[self.index[name]] = 1
        mono = tuple(m)
        return Element({mono: 1}) if self.survives(mono) else Element()

    def monomial_element(self, m: Monomial) -> Element:
        return Element({m: 1}) if self.survives(m) else Element()

    def word(self, word: Word) -> Element:
        """Ordered product of the named generators."""
        names = (word,) if isinstance(word, str) else tuple(word)
        out = self.one()
        for name in names:
            if name not in self.index:
                raise AlgebraError(f"unknown generator {name!r}")
            out = self.multiply(out, self.generator(name))
        return out

    def polynomial(self, poly: Mapping[Word, Fraction | int | str]) -> Element:
        out = Element()
        for word, coeff in poly.items():
            out = out + self.word(word).scale(as_rational(coeff))
        return out

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for e, g in zip(m, self.generators):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) or "1"

    def element_str(self, x: Element) -> str:
        if not x:
            return "0"
        return " + ".join(f"{format_rational(c)}·{self.monomial_str(m)}" for m, c in sorted(x.items()))

    # ------------------------------------------------------------------ #
    #  Basis                                                             #
    # ------------------------------------------------------------------ #
    def monomial_basis(self, degree: int) -> list[Monomial]:
        if degree < 0:
            raise AlgebraError("degree must be non-negative")
        return list(self._enumerate(0, degree, 0))

    def _enumerate(self, i: int, remaining: int, weight: int) -> Iterator[Monomial]:
        if i == self.size:
            if remaining == 0:
                yield ()
            return
        g = self.generators[i]
        top = 1 if g.odd else remaining // g.degree
        for e in range(min(top, remaining // g.degree), -1, -1):
            w = weight + e * g.filtration_weight
            if self.truncation_bound is not None and w > self.truncation_bound:
                continue
            for rest in self._enumerate(i + 1, remaining - e * g.degree, w):
                yield (e,) + rest

    @cached_property
    def top_degree(self) -> int | None:
        """Highest degree with a surviving monomial, or ``None`` if the algebra is infinite."""
        if self.truncation_bound is None:
            return None if any(not g.odd for g in self.generators) else sum(g.degree for g in self.generators)
        evens = [g for g in self.generators if not g.odd]
        if any(g.filtration_weight == 0 for g in evens):
            return None
        if any(g.filtration_weight for g in self.generators if g.odd):
            return None
        # knapsack: maximize degree subject to filtration weight ≤ bound
        best = [0] * (self.truncation_bound + 1)
        for w in range(1, self.truncation_bound + 1):
            best[w] = best[w - 1]
            for g in evens:
                if g.filtration_weight <= w:
                    best[w] = max(best[w], best[w - g.filtration_weight] + g.degree)
        return sum(g.degree for g in self.generators if g.odd) + best[self.truncation_bound]

    # ------------------------------------------------------------------ #
    #  Products and derivations                                          #
    # ------------------------------------------------------------------ #
    def _mul_monomials(self, u: Monomial, v: Monomial) -> tuple[int, Monomial | None]:
        sign = 1
        later_odd = 0  # odd generators of u seen so far from the right
        for i in reversed(self._odd_positions):
            if u[i] and v[i]:
                return 0, None
            if v[i] and later_odd % 2:
                sign = -sign
            if u[i]:
                later_odd += 1
        m = tuple(a + b for a, b in zip(u, v))
        if not self.survives(m):
            return 0, None
        return sign, m

    def multiply(self, x: Element, y: Element) -> Element:
        acc: dict[Monomial, Fraction] = {}
        for u, a in x.items():
            for v, b in y.items():
                sign, m = self._mul_monomials(u, v)
                if sign:
                    acc[m] = acc.get(m, Fraction(0)) + sign * a * b
        return Element._raw(acc)

    def apply_derivation(self, x: Element, images: Sequence[Element], degree: int) -> Element:
        """Extend ``generator -> images[i]`` as a graded derivation of the given degree."""
        acc = Element()
        for m, c in x.items():
            acc = acc + self._derive_monomial(m, images, degree).scale(c)
        return acc

    def _derive_monomial(self, m: Monomial, images: Sequence[Element], degree: int) -> Element:
        out = Element()
        prefix_degree = 0
        for i, e in enumerate(m):
            if e == 0:
                continue
            image = images[i]
            if image:
                prefix = tuple(m[:i]) + (0,) * (self.size - i)
                head = list(prefix)
                head[i] = e - 1
                suffix = (0,) * (i + 1) + tuple(m[i + 1:])
                term = self.multiply(self.monomial_element(tuple(head)), image)
                term = self.multiply(term, self.monomial_element(suffix))
                sign = -1 if (degree * prefix_degree) % 2 else 1
                out = out + term.scale(sign * e)
            prefix_degree += e * self.generators[i].degree
        return out

    def apply_differential(self, x: Element) -> Element:
        return self.apply_derivation(x, self._d, 1)

    def differential_of(self, name: str) -> Element:
        return self._d[self.index[name]]

    def _validate_differential(self) -> None:
        for g, dg in zip(self.generators, self._d):
            for m in dg.terms:
                if self.degree(m) != g.degree + 1:
                    raise AlgebraError(f"d({g.name}) has a term of degree {self.degree(m)}, expected {g.degree + 1}")
                if self.filtration(m) < g.filtration_weight:
                    raise AlgebraError(f"d({g.name}) lowers the filtration weight")
        for g in self.generators:
            dd = self.apply_differential(self.differential_of(g.name))
            if dd:
                raise ComplexError(f"d∘d({g.name}) = {self.element_str(dd)} ≠ 0")

    # ------------------------------------------------------------------ #
    #  Complexes                                                         #
    # ------------------------------------------------------------------ #
    def to_vector(self, x: Element, basis: Sequence[Monomial]) -> Vector:
        position = {m: i for i, m in enumerate(basis)}
        vec = [Fraction(0)] * len(basis)
        for m, c in x.items():
            if m not in position:
                raise AlgebraError(f"monomial {self.monomial_str(m)} not in the given basis")
            vec[position[m]] = c
        return tuple(vec)

    def from_vector(self, vector: Sequence[Fraction], basis: Sequence[Monomial]) -> Element:
        return Element({m: c for m, c in zip(basis, vector) if c})

    def map_matrix(self, images: Iterable[Element], target: Sequence[Monomial]) -> SparseMatrix:
        position = {m: i for i, m in enumerate(target)}
        columns = []
        for image in images:
            col: dict[int, Fraction] = {}
            for m, c in image.items():
                col[position[m]] = c
            columns.append(col)
        return SparseMatrix.from_columns(len(target), columns)

    def complex_slice(self, max_degree: int) -> tuple[ChainComplexSlice, list[list[Monomial]]]:
        bases = [self.monomial_basis(q) for q in range(max_degree + 2)]
        diffs = []
        for q in range(max_degree + 1):
            images = (self.apply_differential(self.monomial_element(m)) for m in bases[q])
            diffs.append(self.map_matrix(images, bases[q + 1]))
        log.debug("gca basis sizes %s", [len(b) for b in bases])
        complete = self.top_degree is not None and self.top_degree <= max_degree + 1
        return ChainComplexSlice(tuple(len(b) for b in bases), tuple(diffs), complete=complete), bases


# ----------------------------------------------------------------------- #
#  Module-level operations                                                 #
# ----------------------------------------------------------------------- #
def monomial_basis(a: FreeGCA, degree: int) -> list[Monomial]:
    return a.monomial_basis(degree)


def multiply(a: FreeGCA, x: Element, y: Element) -> Element:
    return a.multiply(x, y)


def apply_differential(a: FreeGCA, x: Element) -> Element:
    return a.apply_differential(x)


def cdga_cohomology(a: FreeGCA, max_degree: int, representatives: bool = False, jobs: int = 1) -> BettiTable:
    """Betti numbers of ``(a, d)`` in degrees ``0..max_degree`` (+ the next one when known)."""
    if max_degree < 0:
        raise AlgebraError("max_degree must be non-negative")
    slice_, _ = a.complex_slice(max_degree)
    return cohomology_dims(slice_, representatives=representatives, jobs=jobs)


def representative_cocycles(a: FreeGCA, max_degree: int) -> dict[int, list[Element]]:
    """Elements of ``a`` whose classes form a basis of each ``H^q`` with ``q ≤ max_degree``."""
    slice_, bases = a.complex_slice(max_degree)
    table = cohomology_dims(slice_, representatives=True)
    out: dict[int, list[Element]] = {}
    for q in range(max_degree + 1):
        vecs = table.representatives[q] if table.representatives else ()
        out[q] = [a.from_vector(v, bases[q]) for v in vecs]
    return out
