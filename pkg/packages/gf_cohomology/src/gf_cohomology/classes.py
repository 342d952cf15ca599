"""
Characteristic-class rings per inertia component.

For a linearized ``γ`` with decomposition ``d`` the source ring is the
cohomology of the (relative) Weil algebra of

* complex field: ``gl(V₀) ⊕ ⊕_α gl(m_α)``,
* real field: ``gl(V₀) ⊕ gl(m₋₁) ⊕ ⊕_α bgl(m_α)``,

truncated at ``2·dim V₀``. Classes are split by the filtration degree of
their best representative: filtration ``p = q`` means a polynomial in the
curvature generators (primary), ``p < q`` needs odd fiber generators
(secondary) and sits at ``E∞^{p, q−p}``.
"""

from __future__ import annotations

import concurrent.futures
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from tqdm import tqdm

from gf_cohomology.constants import ABSOLUTE, COMPLEX, MODES, REAL, RELATIVE_GL, RELATIVE_O, RELATIVE_SO
from gf_cohomology.decompose import Decomposition, GroupAction, InertiaComponent, ensure_supported, inertia_components
from gf_cohomology.errors import ModeError
from gf_cohomology.gca import Element
from gf_cohomology.linalg import BettiTable, SparseMatrix, Subspace, Vector, extend_basis, kernel_basis
from gf_cohomology.logger import log
from gf_cohomology.weil import (
    BasicSubcomplex,
    LieFactor,
    LieProduct,
    SubalgebraSpec,
    WeilAlgebra,
    relative_weil,
    weil_algebra,
)

__all__ = [
    "ClassLabel",
    "RingReport",
    "VanishingReport",
    "lie_data",
    "base_generators",
    "trace_polynomials",
    "char_class_ring",
    "vanishing_report",
    "filtered_classes",
    "secondary_survivors",
    "inertia_report",
]

PER_CLASS_NOTE = "reported per conjugacy class; the refinement by components of M^γ needs manifold data"


@dataclass(frozen=True)
class ClassLabel:
    name: str
    degree: int
    kind: str
    block: str = ""
    filtration: int | None = None
    corner: bool = False
    representative: str | None = None

    @property
    def e_infinity(self) -> tuple[int, int] | None:
        return None if self.filtration is None else (self.filtration, self.degree - self.filtration)


@dataclass(frozen=True)
class VanishingReport:
    """
    ``monomials`` are the minimal base-class monomials of degree above ``bound``;
    ``all_vanish`` says each of them is zero in the truncated Weil algebra.

    ``nonzero_before_truncation`` is a bookkeeping listing: the same monomials
    evaluated in the untruncated Weil algebra, where the Chern-Weil images live
    in a free polynomial algebra on the curvature generators and so never vanish.
    It equals ``monomials`` unless the trace polynomials themselves are broken.
    """

    bound: int
    monomials: tuple[str, ...]
    all_vanish: bool
    nonzero_before_truncation: tuple[str, ...] = ()


@dataclass(frozen=True)
class RingReport:
    label: str
    decomposition: Decomposition
    mode: str
    truncation_bound: int
    generators: tuple[ClassLabel, ...]
    betti: BettiTable
    classes: tuple[ClassLabel, ...] = ()
    vanishing: VanishingReport | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def secondary(self) -> tuple[ClassLabel, ...]:
        return tuple(c for c in self.classes if c.kind == "secondary")


# ----------------------------------------------------------------------- #
#  Lie data per decomposition                                              #
# ----------------------------------------------------------------------- #
def _product(d: Decomposition) -> LieProduct:
    factors: list[LieFactor] = []
    if d.field == COMPLEX:
        if d.dim_v0:
            factors.append(LieFactor("gl_complex", d.dim_v0, "V0"))
        factors.extend(LieFactor("gl_complex", f.multiplicity, f"W{f.label}") for f in d.factors)
    else:
        if d.dim_v0:
            factors.append(LieFactor("gl_real", d.dim_v0, "V0"))
        if d.m_minus1:
            factors.append(LieFactor("gl_real", d.m_minus1, "W-1"))
        factors.extend(LieFactor("bgl", f.multiplicity, f"W{f.label}") for f in d.factors)
    return LieProduct(tuple(factors))


def lie_data(d: Decomposition, mode: str) -> tuple[LieProduct, SubalgebraSpec | None]:
    """The Lie product dictated by ``d`` and the subalgebra for ``mode`` (``None`` when absolute)."""
    if mode not in MODES:
        raise ModeError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    g = _product(d)
    if mode == ABSOLUTE:
        return g, None
    if mode == RELATIVE_GL:
        return g, SubalgebraSpec.everything(g)
    if d.field == COMPLEX:
        raise ModeError(f"mode {mode} needs the real field; complex decompositions allow absolute and relative-gl")
    parts = tuple("o" if f.kind == "gl_real" else "u" for f in g.factors)
    return g, SubalgebraSpec(parts, component_group=mode == RELATIVE_O)


def base_generators(d: Decomposition) -> list[ClassLabel]:
    """Polynomial generators of ``H•(B)``: trace classes per gl block, ``x_s, y_s`` per complex block."""
    out: list[ClassLabel] = []
    g = _product(d)
    for f in g.factors:
        if f.kind == "bgl":
            for s in range(1, f.n + 1):
                out.append(ClassLabel(f"{f.label}:x{s}", 2 * s, "chern-pair", f.label))
                out.append(ClassLabel(f"{f.label}:y{s}", 2 * s, "chern-pair", f.label))
        else:
            kind = "chern" if d.field == COMPLEX else "pontryagin"
            name = "xi" if f.label == "V0" or d.field == REAL else "eta"
            out.extend(ClassLabel(f"{f.label}:{name}{i}", 2 * i, kind, f.label) for i in range(1, f.n + 1))
    return out


# ----------------------------------------------------------------------- #
#  Trace polynomials                                                       #
# ----------------------------------------------------------------------- #
def _matrix_power_trace(W: WeilAlgebra, entries: list[list[Element]], power: int) -> Element:
    n = len(entries)
    cur = entries
    for _ in range(power - 1):
        cur = [
            [sum((W.multiply(cur[i][k], entries[k][j]) for k in range(n)), Element()) for j in range(n)]
            for i in range(n)
        ]
    return sum((cur[i][i] for i in range(n)), Element())


def _complex_power_trace(W: WeilAlgebra, re: list[list[Element]], im: list[list[Element]], power: int):
    n = len(re)
    cr, ci = re, im
    for _ in range(power - 1):
        nr, ni = [], []
        for i in range(n):
            row_r, row_i = [], []
            for j in range(n):
                acc_r, acc_i = Element(), Element()
                for k in range(n):
                    acc_r = acc_r + W.multiply(cr[i][k], re[k][j]) - W.multiply(ci[i][k], im[k][j])
                    acc_i = acc_i + W.multiply(cr[i][k], im[k][j]) + W.multiply(ci[i][k], re[k][j])
                row_r.append(acc_r)
                row_i.append(acc_i)
            nr.append(row_r)
            ni.append(row_i)
        cr, ci = nr, ni
    return sum((cr[i][i] for i in range(n)), Element()), sum((ci[i][i] for i in range(n)), Element())


def trace_polynomials(W: WeilAlgebra) -> dict[str, Element]:
    """
    Each base generator as a polynomial in the curvature generators of ``W``:
    ``tr(C^i)`` per gl block, real and imaginary parts of ``tr((A + iB)^s)`` per bgl block.
    """
    out: dict[str, Element] = {}
    for f in W.lie.factors:
        n = f.n

        def c(sym: str) -> Element:
            return W.generator(f"c[{f.label}:{sym}]")

        if f.kind == "bgl":
            re = [[c(f"E{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
            im = [[c(f"iE{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
            for s in range(1, n + 1):
                x, y = _complex_power_trace(W, re, im, s)
                out[f"{f.label}:x{s}"] = x
                out[f"{f.label}:y{s}"] = y
        else:
            entries = [[c(f"E{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
            name = "xi" if f.label == "V0" or f.kind == "gl_real" else "eta"
            for i in range(1, n + 1):
                out[f"{f.label}:{name}{i}"] = _matrix_power_trace(W, entries, i)
    return out


# ----------------------------------------------------------------------- #
#  Vanishing                                                               #
# ----------------------------------------------------------------------- #
def _minimal_above(gens: Sequence[ClassLabel], bound: int) -> list[tuple[int, ...]]:
    """Monomials (as generator index multisets) of degree > bound whose every proper divisor has degree ≤ bound."""
    if not gens:
        return []
    degs = [g.degree for g in gens]
    top = bound + max(degs)
    out = []
    for size in range(1, top // min(degs) + 1):
        for combo in combinations_with_replacement(range(len(gens)), size):
            total = sum(degs[i] for i in combo)
            if total > bound and total - min(degs[i] for i in combo) <= bound:
                out.append(combo)
    return out


def vanishing_report(d: Decomposition) -> VanishingReport:
    """
    The equivariant Bott bound ``2·dim V₀`` and a check that every minimal
    base-class monomial above it is zero in the truncated Weil algebra.
    """
    bound = 2 * d.dim_v0
    g, _ = lie_data(d, ABSOLUTE)
    gens = base_generators(d)
    truncated = weil_algebra(g, bound)
    full = weil_algebra(g, None)
    cut = trace_polynomials(truncated)
    whole = trace_polynomials(full)
    names, alive = [], []
    vanish = True
    for combo in _minimal_above(gens, bound):
        label = "·".join(gens[i].name for i in combo)
        names.append(label)
        low, high = truncated.one(), full.one()
        for i in combo:
            low = truncated.multiply(low, cut[gens[i].name])
            high = full.multiply(high, whole[gens[i].name])
        if low:
            vanish = False
            log.warning("base monomial %s survives the truncation at %d", label, bound)
        if high:
            alive.append(label)
    return VanishingReport(bound, tuple(names), vanish, tuple(alive))


# ----------------------------------------------------------------------- #
#  Filtration of cohomology classes                                        #
# ----------------------------------------------------------------------- #
def _combine(coords: Sequence[Fraction], basis: Sequence[Vector], size: int) -> Vector:
    vec = [Fraction(0)] * size
    for c, b in zip(coords, basis):
        if c:
            for j, x in enumerate(b):
                if x:
                    vec[j] += c * x
    return tuple(vec)


def filtered_classes(sub: BasicSubcomplex, q: int) -> list[tuple[int, Element]]:
    """
    A basis of ``H^q`` adapted to the filtration by curvature weight: pairs
    ``(p, representative)`` with ``p`` the largest weight any representative of
    the class can have.
    """
    W = sub.weil
    full, space = sub.space(q)
    next_full, _ = sub.space(q + 1)
    size = len(full)
    k = space.dim
    if k == 0:
        return []
    images = [W.to_vector(W.apply_differential(W.from_vector(b, full)), next_full) for b in space.basis]
    boundaries: list[Vector] = []
    if q > 0:
        for e in sub.basis(q - 1):
            boundaries.append(W.to_vector(W.apply_differential(e), full))
    B = Subspace(size, boundaries)
    weights = [W.filtration(m) for m in full]
    levels = sorted(set(weights))

    def cycles_at(p: int) -> list[Vector]:
        data: dict[tuple[int, int], Fraction] = {}
        for i, img in enumerate(images):
            for j, x in enumerate(img):
                if x:
                    data[(j, i)] = x
        row = len(next_full)
        for j, w in enumerate(weights):
            if w < p:
                for i, b in enumerate(space.basis):
                    if b[j]:
                        data[(row, i)] = b[j]
                row += 1
        coords = kernel_basis(SparseMatrix.from_dict(row, k, data))
        return [_combine(x, space.basis, size) for x in coords]

    out: list[tuple[int, Element]] = []
    higher: list[Vector] = list(B.basis)
    for p in reversed(levels):
        zp = cycles_at(p)
        chosen = extend_basis(higher, zp, size)
        out.extend((p, W.from_vector(v, full)) for v in chosen)
        higher = higher + chosen
    return sorted(out, key=lambda t: -t[0])


def _classes(sub: BasicSubcomplex, bound: int, max_degree: int) -> list[ClassLabel]:
    out: list[ClassLabel] = []
    for q in range(max_degree + 1):
        for idx, (p, rep) in enumerate(filtered_classes(sub, q)):
            kind = "primary" if p == q else "secondary"
            out.append(
                ClassLabel(
                    name=f"h{q}.{idx + 1}",
                    degree=q,
                    kind=kind,
                    filtration=p,
                    corner=kind == "secondary" and p == bound,
                    representative=sub.weil.element_str(rep),
                )
            )
    return out


def _subcomplex(d: Decomposition, mode: str) -> tuple[BasicSubcomplex, int]:
    g, k = lie_data(d, mode)
    bound = 2 * d.dim_v0
    return relative_weil(g, k or SubalgebraSpec.zero(g), bound), bound


def secondary_survivors(d: Decomposition, mode: str, max_degree: int) -> list[ClassLabel]:
    """Classes whose every representative involves an odd fiber generator."""
    if mode not in (RELATIVE_SO, RELATIVE_O):
        raise ModeError(f"secondary survivors are read off the relative-so or relative-o ring, not {mode!r}")
    ensure_supported(d)
    sub, bound = _subcomplex(d, mode)
    return [c for c in _classes(sub, bound, max_degree) if c.kind == "secondary"]


def char_class_ring(d: Decomposition, mode: str, max_degree: int, label: str = "e") -> RingReport:
    ensure_supported(d)
    sub, bound = _subcomplex(d, mode)
    betti = sub.cohomology(max_degree)
    classes = _classes(sub, bound, max_degree)
    secondary = [
        ClassLabel(c.name, c.degree, "secondary", filtration=c.filtration, corner=c.corner, representative=c.representative)
        for c in classes
        if c.kind == "secondary"
    ]
    notes = []
    if mode == RELATIVE_SO:
        notes.append("relative to the identity component of the orthogonal groups")
    if mode == RELATIVE_O:
        notes.append("relative to the full orthogonal groups (reflection-invariant part)")
    log.info("ring for %s (%s, bound %d): betti %s", label, mode, bound, betti.as_strings())
    return RingReport(
        label=label,
        decomposition=d,
        mode=mode,
        truncation_bound=bound,
        generators=tuple(base_generators(d)) + tuple(secondary),
        betti=betti,
        classes=tuple(classes),
        vanishing=vanishing_report(d),
        notes=tuple(notes),
    )


def _component_ring(args: tuple[InertiaComponent, str, int]) -> RingReport:
    comp, mode, max_degree = args
    report = char_class_ring(comp.decomposition, mode, max_degree, label=comp.label)
    return replace(report, notes=report.notes + (PER_CLASS_NOTE,))


def inertia_report(
    action: GroupAction, mode: str, max_degree: int, jobs: int = 1
) -> list[tuple[InertiaComponent, RingReport]]:
    """One ring per conjugacy class, in the canonical class order."""
    components = inertia_components(action)
    work = [(c, mode, max_degree) for c in components]
    progress = dict(desc="inertia classes", total=len(work), disable=not sys.stderr.isatty(), leave=False)
    if jobs > 1 and len(work) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(tqdm(pool.map(_component_ring, work), **progress))
    else:
        reports = [_component_ring(w) for w in tqdm(work, **progress)]
    return list(zip(components, reports))
