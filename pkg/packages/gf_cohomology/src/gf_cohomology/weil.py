"""
Truncated and relative Weil algebras of products of gl-type Lie algebras.

For a basis ``e_k`` of g with dual basis ``θ^k`` the Weil algebra is free on
odd ``y_k`` (degree 1, filtration 0) and even ``c_k`` (degree 2, filtration 2):

    d y_k = c_k − Σ_{i<j} f^k_{ij} y_i y_j
    d c_k = − Σ_{i,l} f^k_{il} y_i c_l

``W(g)_{2n}`` is the quotient by monomials of filtration weight > 2n. The
relative algebra is the k-basic subcomplex: the joint kernel of the
contractions ``ι_X`` and Lie derivatives ``L_X`` for ``X ∈ k``, optionally
intersected with the fixed points of a reflection per orthogonal factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Literal, Mapping, Sequence

from gf_cohomology.ce import ce_cohomology
from gf_cohomology.constants import MAX_SYM_DEGREE, MAX_WEIL_GENERATORS
from gf_cohomology.errors import AlgebraError, InfeasibleError, LieAlgebraError, ModeError
from gf_cohomology.gca import Element, FreeGCA, GeneratorSpec, Monomial
from gf_cohomology.lie import (
    FiniteLieAlgebra,
    SparseVector,
    bgl,
    direct_sum,
    gl,
    orthogonal_vectors,
    restrict,
    unitary_vectors,
)
from gf_cohomology.linalg import (
    BettiTable,
    ChainComplexSlice,
    SparseMatrix,
    Subspace,
    cohomology_dims,
    kernel_basis,
)
from gf_cohomology.logger import log

__all__ = [
    "LieFactor",
    "LieProduct",
    "SubalgebraSpec",
    "WeilAlgebra",
    "BasicSubcomplex",
    "E2Page",
    "InvariantPolynomials",
    "weil_algebra",
    "relative_weil",
    "invariant_polynomials",
    "e2_page",
    "d_w_formula",
    "lie_derivative",
    "contraction",
    "euler_characteristic",
]

FactorKind = Literal["gl_real", "gl_complex", "bgl", "o_real", "u"]
_KINDS = ("gl_real", "gl_complex", "bgl", "o_real", "u")


# ----------------------------------------------------------------------- #
#  Lie data                                                                #
# ----------------------------------------------------------------------- #
@dataclass(frozen=True)
class LieFactor:
    kind: FactorKind
    n: int
    label: str = ""

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise LieAlgebraError(f"unknown factor kind {self.kind!r}")
        if self.n < 1:
            raise LieAlgebraError("factor size must be ≥ 1")

    @cached_property
    def algebra(self) -> FiniteLieAlgebra:
        if self.kind in ("gl_real", "gl_complex"):
            return gl(self.n)
        if self.kind == "bgl":
            return bgl(self.n)
        if self.kind == "o_real":
            vecs = orthogonal_vectors(self.n)
            return restrict(gl(self.n), vecs, [f"A{i + 1}{j + 1}" for i in range(self.n) for j in range(i + 1, self.n)])
        vecs = unitary_vectors(self.n)
        labels = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                labels += [f"A{i + 1}{j + 1}", f"S{i + 1}{j + 1}"]
            labels.append(f"iE{i + 1}{i + 1}")
        return restrict(bgl(self.n), vecs, labels)

    def describe(self) -> str:
        return f"{self.kind}({self.n})"


@dataclass(frozen=True)
class LieProduct:
    """Ordered product of factors; the bracket is block diagonal."""

    factors: tuple[LieFactor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def prefixes(self) -> list[str]:
        return [f.label or f"g{i}" for i, f in enumerate(self.factors)]

    @cached_property
    def algebra(self) -> FiniteLieAlgebra:
        return direct_sum([f.algebra for f in self.factors], self.prefixes)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def offsets(self) -> list[int]:
        out, pos = [], 0
        for f in self.factors:
            out.append(pos)
            pos += f.algebra.dim
        return out

    def describe(self) -> str:
        return " ⊕ ".join(f.describe() for f in self.factors) or "0"


@dataclass(frozen=True)
class SubalgebraSpec:
    """
    Per factor: ``"o"`` (o(n) ⊂ gl_real(n)), ``"u"`` (u(m) ⊂ bgl(m)), ``"all"``
    or ``None``. ``component_group`` adds invariance under conjugation by a
    reflection in every factor carrying ``"o"``. ``vectors`` overrides the
    parts with an explicit spanning set in product coordinates.
    """

    parts: tuple[str | None, ...]
    component_group: bool = False
    vectors: tuple[SparseVector, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        for p in self.parts:
            if p not in (None, "o", "u", "all"):
                raise LieAlgebraError(f"unknown subalgebra part {p!r}")

    @classmethod
    def zero(cls, g: LieProduct) -> "SubalgebraSpec":
        return cls(tuple(None for _ in g.factors))

    @classmethod
    def everything(cls, g: LieProduct) -> "SubalgebraSpec":
        return cls(tuple("all" for _ in g.factors))

    def spanning_vectors(self, g: LieProduct) -> list[SparseVector]:
        if self.vectors is not None:
            return [dict(v) for v in self.vectors]
        if len(self.parts) != len(g.factors):
            raise LieAlgebraError(f"{len(self.parts)} subalgebra parts for {len(g.factors)} factors")
        out: list[SparseVector] = []
        for part, factor, offset in zip(self.parts, g.factors, g.offsets):
            if part is None:
                continue
            if part == "all":
                local = [{i: Fraction(1)} for i in range(factor.algebra.dim)]
            elif part == "o":
                if factor.kind != "gl_real":
                    raise ModeError(f"o(n) is only taken inside gl_real factors, not {factor.describe()}")
                local = orthogonal_vectors(factor.n)
            else:
                if factor.kind != "bgl":
                    raise ModeError(f"u(m) is only taken inside bgl factors, not {factor.describe()}")
                local = unitary_vectors(factor.n)
            out.extend({k + offset: v for k, v in vec.items()} for vec in local)
        return out

    def reflection_signs(self, g: LieProduct) -> list[list[int]]:
        """Per reflected factor, the sign of each product basis element under the conjugation."""
        if not self.component_group:
            return []
        out = []
        for part, factor, offset in zip(self.parts, g.factors, g.offsets):
            if part != "o" or factor.n < 2:
                continue
            signs = [1] * g.dim
            for a in range(factor.n * factor.n):
                i, j = divmod(a, factor.n)
                if (i == 0) != (j == 0):
                    signs[offset + a] = -1
            out.append(signs)
        return out


# ----------------------------------------------------------------------- #
#  Absolute Weil algebra                                                   #
# ----------------------------------------------------------------------- #
class WeilAlgebra(FreeGCA):
    """``W(g)`` (or its truncation) as a free graded-commutative algebra, remembering ``g``."""

    def __init__(self, g: LieProduct, truncation_bound: int | None) -> None:
        self.lie = g
        L = g.algebra
        self.y_names = [f"y[{s}]" for s in L.basis]
        self.c_names = [f"c[{s}]" for s in L.basis]
        gens = [GeneratorSpec(n, 1, 0) for n in self.y_names] + [GeneratorSpec(n, 2, 2) for n in self.c_names]
        diff: dict[str, dict] = {}
        for k in range(L.dim):
            dy: dict = {self.c_names[k]: 1}
            dc: dict = {}
            for (i, j), vec in L.nonzero_brackets():
                f = vec.get(k)
                if not f:
                    continue
                dy[(self.y_names[i], self.y_names[j])] = -f
                dc[(self.y_names[i], self.c_names[j])] = dc.get((self.y_names[i], self.c_names[j]), 0) - f
                dc[(self.y_names[j], self.c_names[i])] = dc.get((self.y_names[j], self.c_names[i]), 0) + f
            diff[self.y_names[k]] = dy
            diff[self.c_names[k]] = dc
        super().__init__(gens, diff, truncation_bound)

    @property
    def lie_algebra(self) -> FiniteLieAlgebra:
        return self.lie.algebra

    def split(self, m: Monomial) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(exterior index tuple, polynomial exponents)`` of a monomial."""
        n = self.lie.dim
        return tuple(i for i in range(n) if m[i]), tuple(m[n:])

    def join(self, idx: Sequence[int], poly: Sequence[int]) -> Monomial:
        ext = [0] * self.lie.dim
        for i in idx:
            ext[i] = 1
        return tuple(ext) + tuple(poly)


def weil_algebra(g: LieProduct, truncation_bound: int | None) -> WeilAlgebra:
    """``W(g)_{bound}``; ``None`` keeps the full Weil algebra."""
    if truncation_bound is not None and (truncation_bound < 0 or truncation_bound % 2):
        raise AlgebraError(f"truncation bound must be even and non-negative, got {truncation_bound}")
    if 2 * g.dim > MAX_WEIL_GENERATORS:
        raise InfeasibleError(f"{2 * g.dim} Weil generators exceed the bound {MAX_WEIL_GENERATORS}")
    w = WeilAlgebra(g, truncation_bound)
    log.debug("Weil algebra of %s: %d generators, bound %s", g.describe(), w.size, truncation_bound)
    return w


# ----------------------------------------------------------------------- #
#  Derivations of the Weil algebra                                         #
# ----------------------------------------------------------------------- #
def _coadjoint_images(W: WeilAlgebra, x: Mapping[int, Fraction]) -> list[Element]:
    """``L_X`` on generators: ``θ^k ↦ −Σ f^k_{Xl} θ^l`` and ``c^k ↦ −Σ f^k_{Xl} c^l``."""
    L = W.lie_algebra
    y_img: list[dict] = [{} for _ in range(L.dim)]
    c_img: list[dict] = [{} for _ in range(L.dim)]
    for i, a in x.items():
        for l in range(L.dim):
            for k, f in L.bracket(i, l).items():
                y_img[k][W.y_names[l]] = y_img[k].get(W.y_names[l], 0) - a * f
                c_img[k][W.c_names[l]] = c_img[k].get(W.c_names[l], 0) - a * f
    return [W.polynomial(p) for p in y_img] + [W.polynomial(p) for p in c_img]


def lie_derivative(W: WeilAlgebra, x: Mapping[int, Fraction] | int, element: Element) -> Element:
    """``L_X`` as a degree-0 derivation."""
    vec = {x: Fraction(1)} if isinstance(x, int) else dict(x)
    return W.apply_derivation(element, _coadjoint_images(W, vec), 0)


def _contraction_images(W: WeilAlgebra, x: Mapping[int, Fraction]) -> list[Element]:
    n = W.lie.dim
    images = [W.one().scale(x.get(k, Fraction(0))) for k in range(n)]
    return images + [Element() for _ in range(n)]


def contraction(W: WeilAlgebra, x: Mapping[int, Fraction] | int, element: Element) -> Element:
    """``ι_X`` as a degree −1 derivation: ``ι_X θ^k = θ^k(X)``, ``ι_X c^k = 0``."""
    vec = {x: Fraction(1)} if isinstance(x, int) else dict(x)
    return W.apply_derivation(element, _contraction_images(W, vec), -1)


def _coadjoint_on_poly(W: WeilAlgebra, j: int, poly: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
    """``e_j · c^α`` with ``e_j · c^k = −Σ_l f^k_{jl} c^l``."""
    L = W.lie_algebra
    out: dict[tuple[int, ...], Fraction] = {}
    for k, e in enumerate(poly):
        if not e:
            continue
        for l in range(L.dim):
            f = L.structure_constant(j, l, k)
            if not f:
                continue
            new = list(poly)
            new[k] -= 1
            new[l] += 1
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) - e * f
    return out


def d_w_formula(W: WeilAlgebra, x: Element) -> Element:
    """
    ``d_W`` computed from its three defining sums on basis tuples: the Koszul
    term ``θ^k ↦ c^k``, the coadjoint action on the polynomial part and the
    bracket term of the CE differential. Independent of the generator-level
    differential, which it is compared against.
    """
    L = W.lie_algebra
    n = L.dim
    acc: dict[Monomial, Fraction] = {}

    def add(idx: tuple[int, ...], poly: tuple[int, ...], c: Fraction) -> None:
        m = W.join(idx, poly)
        if not c or not W.survives(m):
            return
        s = acc.get(m, Fraction(0)) + c
        if s:
            acc[m] = s
        else:
            acc.pop(m)

    for m, coeff in x.items():
        idx, poly = W.split(m)
        q = len(idx)
        # Koszul term
        for a, k in enumerate(idx):
            new_poly = list(poly)
            new_poly[k] += 1
            add(idx[:a] + idx[a + 1 :], tuple(new_poly), coeff * (-1 if a % 2 else 1))
        # CE terms, evaluated on every (q+1)-tuple J
        for J in combinations(range(n), q + 1):
            for a in range(q + 1):
                if J[:a] + J[a + 1 :] == idx:
                    sign = -1 if a % 2 else 1
                    for new_poly, c in _coadjoint_on_poly(W, J[a], poly).items():
                        add(J, new_poly, coeff * sign * c)
            for a, b in combinations(range(q + 1), 2):
                rest = J[:a] + J[a + 1 : b] + J[b + 1 :]
                outer = -1 if (a + b) % 2 else 1
                for k, f in L.bracket(J[a], J[b]).items():
                    if k in rest or tuple(sorted(rest + (k,))) != idx:
                        continue
                    below = sum(1 for r in rest if r < k)
                    add(J, poly, coeff * outer * (-1 if below % 2 else 1) * f)
    return Element(acc)


# ----------------------------------------------------------------------- #
#  Relative (basic) subcomplex                                             #
# ----------------------------------------------------------------------- #
@dataclass
class BasicSubcomplex:
    """The k-basic elements of a Weil algebra, degree by degree."""

    weil: WeilAlgebra
    sub: SubalgebraSpec
    k_vectors: list[SparseVector]
    _cache: dict[int, tuple[list[Monomial], Subspace]] = field(default_factory=dict, repr=False)

    def _allowed(self, basis: list[Monomial]) -> list[Monomial]:
        signs = self.sub.reflection_signs(self.weil.lie)
        if not signs:
            return basis
        n = self.weil.lie.dim
        keep = []
        for m in basis:
            ok = True
            for s in signs:
                prod = 1
                for i in range(n):
                    if s[i] < 0 and (m[i] + m[n + i]) % 2:
                        prod = -prod
                if prod < 0:
                    ok = False
                    break
            if ok:
                keep.append(m)
        return keep

    def space(self, q: int) -> tuple[list[Monomial], Subspace]:
        """Monomial basis of ``W^q`` and the basic subspace in its coordinates."""
        if q in self._cache:
            return self._cache[q]
        W = self.weil
        full = W.monomial_basis(q)
        cols = self._allowed(full)
        blocks = []
        lower = W.monomial_basis(q - 1) if q > 0 else []
        for x in self.k_vectors:
            elems = [W.monomial_element(m) for m in cols]
            if lower:
                blocks.append(W.map_matrix((contraction(W, x, e) for e in elems), lower))
            blocks.append(W.map_matrix((lie_derivative(W, x, e) for e in elems), full))
        if blocks and cols:
            stacked = SparseMatrix.vstack(blocks, len(cols))
            local = kernel_basis(stacked)
        else:
            local = [tuple(Fraction(int(i == j)) for i in range(len(cols))) for j in range(len(cols))]
        pos = {m: i for i, m in enumerate(full)}
        vectors = []
        for v in local:
            vec = [Fraction(0)] * len(full)
            for m, c in zip(cols, v):
                vec[pos[m]] = c
            vectors.append(tuple(vec))
        sub = Subspace(len(full), vectors)
        self._cache[q] = (full, sub)
        log.debug("basic subspace in degree %d: %d of %d", q, sub.dim, len(full))
        return full, sub

    def basis(self, q: int) -> list[Element]:
        full, sub = self.space(q)
        return [self.weil.from_vector(v, full) for v in sub.basis]

    def complex_slice(self, max_degree: int) -> ChainComplexSlice:
        W = self.weil
        spaces = [self.space(q) for q in range(max_degree + 2)]
        diffs = []
        for q in range(max_degree + 1):
            target_full, target_sub = spaces[q + 1]
            columns = []
            for elem in self.basis(q):
                image = W.to_vector(W.apply_differential(elem), target_full)
                if not target_sub.contains(image):
                    raise AlgebraError(f"d leaves the basic subcomplex in degree {q}")
                coords = target_sub.coordinates(image)
                columns.append({i: c for i, c in enumerate(coords) if c})
            diffs.append(SparseMatrix.from_columns(target_sub.dim, columns))
        complete = W.top_degree is not None and W.top_degree <= max_degree + 1
        return ChainComplexSlice(tuple(s.dim for _, s in spaces), tuple(diffs), complete=complete)

    def cohomology(self, max_degree: int, jobs: int = 1) -> BettiTable:
        return cohomology_dims(self.complex_slice(max_degree), jobs=jobs)

    def representatives(self, max_degree: int) -> dict[int, list[Element]]:
        table = cohomology_dims(self.complex_slice(max_degree), representatives=True)
        out: dict[int, list[Element]] = {}
        for q in range(max_degree + 1):
            full, sub = self.space(q)
            vecs = table.representatives[q] if table.representatives else ()
            elems = []
            for coords in vecs:
                vec = [Fraction(0)] * len(full)
                for c, b in zip(coords, sub.basis):
                    if c:
                        for j, x in enumerate(b):
                            if x:
                                vec[j] += c * x
                elems.append(self.weil.from_vector(vec, full))
            out[q] = elems
        return out


def relative_weil(g: LieProduct, k: SubalgebraSpec, truncation_bound: int | None) -> BasicSubcomplex:
    """The k-basic subcomplex of ``W(g)_{bound}``; rejects ``k`` not closed under the bracket."""
    W = weil_algebra(g, truncation_bound)
    vectors = k.spanning_vectors(g)
    if vectors:
        restrict(g.algebra, vectors, [f"k{i}" for i in range(len(vectors))])
    return BasicSubcomplex(W, k, vectors)


# ----------------------------------------------------------------------- #
#  Invariant polynomials and the E2 page                                   #
# ----------------------------------------------------------------------- #
@dataclass(frozen=True)
class InvariantPolynomials:
    algebra: FreeGCA
    bases: tuple[tuple[Element, ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)


def _symmetric_algebra(g: LieProduct) -> FreeGCA:
    return FreeGCA([GeneratorSpec(f"c[{s}]", 2, 2) for s in g.algebra.basis])


def invariant_polynomials(g: LieProduct, max_sym_degree: int) -> InvariantPolynomials:
    """``(S^s g*)^g`` for ``s ≤ max_sym_degree``, by solving the coadjoint action."""
    if max_sym_degree > MAX_SYM_DEGREE:
        raise InfeasibleError(f"symmetric degree {max_sym_degree} exceeds the bound {MAX_SYM_DEGREE}")
    S = _symmetric_algebra(g)
    L = g.algebra
    images_per_x = []
    for x in range(L.dim):
        imgs: list[dict] = [{} for _ in range(L.dim)]
        for l in range(L.dim):
            for k, f in L.bracket(x, l).items():
                imgs[k][S.generators[l].name] = imgs[k].get(S.generators[l].name, 0) - f
        images_per_x.append([S.polynomial(p) for p in imgs])
    bases = []
    for s in range(max_sym_degree + 1):
        mons = S.monomial_basis(2 * s)
        elems = [S.monomial_element(m) for m in mons]
        blocks = [S.map_matrix((S.apply_derivation(e, imgs, 0) for e in elems), mons) for imgs in images_per_x]
        if blocks and mons:
            kernel = kernel_basis(SparseMatrix.vstack(blocks, len(mons)))
        else:
            kernel = [tuple(Fraction(int(i == j)) for i in range(len(mons))) for j in range(len(mons))]
        reduced = Subspace(len(mons), kernel).basis
        bases.append(tuple(S.from_vector(v, mons) for v in reduced))
        log.debug("invariant polynomials of degree %d: %d", s, len(reduced))
    return InvariantPolynomials(S, tuple(bases))


@dataclass(frozen=True)
class E2Page:
    entries: dict[tuple[int, int], int]
    truncation_bound: int | None
    max_degree: int

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.entries.get(pq, 0)

    def totals(self) -> tuple[int, ...]:
        out = [0] * (self.max_degree + 1)
        for (p, q), v in self.entries.items():
            if p + q <= self.max_degree:
                out[p + q] += v
        return tuple(out)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** (p + q) * v for (p, q), v in self.entries.items())


def e2_page(g: LieProduct, truncation_bound: int | None, max_degree: int) -> E2Page:
    """``E₂^{p,q} = H^q(g) ⊗ (S^{p/2} g*)^g`` for even ``p ≤ bound``; every other entry is 0."""
    fiber = ce_cohomology(g.algebra)
    top_p = max_degree if truncation_bound is None else truncation_bound
    inv = invariant_polynomials(g, top_p // 2)
    entries: dict[tuple[int, int], int] = {}
    for s, dim in enumerate(inv.dims):
        for q, h in enumerate(fiber.known):
            if dim * h:
                entries[(2 * s, q)] = dim * h
    return E2Page(entries, truncation_bound, max_degree)


def euler_characteristic(table: BettiTable) -> int:
    return table.euler_characteristic
