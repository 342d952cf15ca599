"""
Chevalley–Eilenberg complexes.

Cochains are alternating forms; a basis cochain is ``θ^I`` for a strictly
increasing index tuple ``I``. The differential is

    (dφ)(x₀, …, x_q) = Σ_{a<b} (−1)^{a+b} φ([x_a, x_b], x₀, …, x̂_a, …, x̂_b, …, x_q)

evaluated on basis tuples. For the weighted algebra ``W_X`` only the
weight-zero cochains are materialized: the bracket preserves the total weight
of a tuple, so they form a finite subcomplex in every degree.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from gf_cohomology.constants import COMPLEX, MAX_CE_DIM, MAX_COCHAINS
from gf_cohomology.decompose import Decomposition
from gf_cohomology.errors import InfeasibleError, LieAlgebraError, WeightWindowError
from gf_cohomology.lie import FiniteLieAlgebra, SparseVector, WeightedLieAlgebra, bgl, direct_sum, gl
from gf_cohomology.linalg import BettiTable, ChainComplexSlice, SparseMatrix, cohomology_dims
from gf_cohomology.logger import log

__all__ = [
    "WeightedLieAlgebra",
    "FiniteLieAlgebra",
    "ce_complex",
    "ce_cohomology",
    "matrix_algebra",
    "build_wx",
    "required_window",
    "weight_zero_tuples",
    "weight_zero_complex",
    "weight_zero_cohomology",
]

Cochain = tuple[int, ...]


# ----------------------------------------------------------------------- #
#  CE differential on basis tuples                                         #
# ----------------------------------------------------------------------- #
def _ce_matrix(L: WeightedLieAlgebra, source: Sequence[Cochain], target: Sequence[Cochain]) -> SparseMatrix:
    """Matrix of ``d : span(source) → span(target)``; rows are indexed by ``target``."""
    col_of = {I: c for c, I in enumerate(source)}
    data: dict[tuple[int, int], Fraction] = {}
    for row, J in enumerate(target):
        for a, b in combinations(range(len(J)), 2):
            br = L.bracket(J[a], J[b])
            if not br:
                continue
            rest = J[:a] + J[a + 1 : b] + J[b + 1 :]
            outer = -1 if (a + b) % 2 else 1
            for k, c in br.items():
                if k in rest:
                    continue
                below = sum(1 for r in rest if r < k)
                I = tuple(sorted(rest + (k,)))
                col = col_of.get(I)
                if col is None:
                    raise WeightWindowError(
                        f"cochain {[L.basis[i] for i in I]} is missing from the complex; the weight window is too small"
                    )
                sign = outer * (-1 if below % 2 else 1)
                data[(row, col)] = data.get((row, col), Fraction(0)) + sign * c
    return SparseMatrix.from_dict(len(target), len(source), data)


def _slice_from_bases(L: WeightedLieAlgebra, bases: Sequence[Sequence[Cochain]], complete: bool) -> ChainComplexSlice:
    for q, basis in enumerate(bases):
        if len(basis) > MAX_COCHAINS:
            raise InfeasibleError(f"{len(basis)} cochains in degree {q} exceed the bound {MAX_COCHAINS}")
    diffs = tuple(_ce_matrix(L, bases[q], bases[q + 1]) for q in range(len(bases) - 1))
    log.debug("CE basis sizes %s (complete=%s)", [len(b) for b in bases], complete)
    return ChainComplexSlice(tuple(len(b) for b in bases), diffs, complete=complete)


def ce_complex(g: WeightedLieAlgebra, max_degree: int | None = None) -> ChainComplexSlice:
    """``∧•g*`` in degrees ``0..min(max_degree + 1, dim g)``."""
    if g.max_weight is not None:
        raise LieAlgebraError("a truncated slice has no full CE complex; use weight_zero_cohomology")
    if g.dim > MAX_CE_DIM:
        raise InfeasibleError(f"dim g = {g.dim} exceeds the CE bound {MAX_CE_DIM}")
    top = g.dim if max_degree is None else min(g.dim, max_degree + 1)
    bases = [list(combinations(range(g.dim), q)) for q in range(top + 1)]
    return _slice_from_bases(g, bases, complete=top == g.dim)


def ce_cohomology(g: WeightedLieAlgebra, max_degree: int | None = None, jobs: int = 1) -> BettiTable:
    """Betti numbers of ``H•(g)`` with trivial coefficients."""
    return cohomology_dims(ce_complex(g, max_degree), jobs=jobs)


# ----------------------------------------------------------------------- #
#  The weight-graded slice of W_X                                          #
# ----------------------------------------------------------------------- #
def matrix_algebra(d: Decomposition) -> FiniteLieAlgebra:
    """``⊕ gl(m_α)`` (complex) or ``gl(m₋₁) ⊕ ⊕ bgl(m_α)`` (real); zero-size blocks are skipped."""
    parts: list[FiniteLieAlgebra] = []
    prefixes: list[str] = []
    if d.field == COMPLEX:
        for f in d.factors:
            parts.append(gl(f.multiplicity))
            prefixes.append(f"W{f.label}")
    else:
        if d.m_minus1:
            parts.append(gl(d.m_minus1))
            prefixes.append("W-1")
        for f in d.factors:
            parts.append(bgl(f.multiplicity))
            prefixes.append(f"W{f.label}")
    return direct_sum(parts, prefixes)


def _multi_indices(n: int, max_total: int) -> list[tuple[int, ...]]:
    out = [a for a in product(range(max_total + 1), repeat=n) if sum(a) <= max_total]
    return sorted(out, key=lambda a: (sum(a), tuple(-x for x in a)))


def _monomial_symbol(a: tuple[int, ...]) -> str:
    parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e]
    return "*".join(parts)


def build_wx(d: Decomposition, max_weight: int) -> WeightedLieAlgebra:
    """
    The weight window ``≤ max_weight`` of
    ``W_{V₀} ⋉ (Poly(V₀) ⊗ M)`` with ``M`` from :func:`matrix_algebra`.

    Vector fields ``x^a ∂_i`` have weight ``|a| − 1`` and matrix-valued
    functions ``x^a ⊗ E`` weight ``|a|``. Brackets landing above the window are dropped.
    """
    if max_weight < -1:
        raise LieAlgebraError("max_weight must be ≥ -1")
    n = d.dim_v0
    mat = matrix_algebra(d)

    basis: list[str] = []
    weights: list[int] = []
    fields: dict[tuple[tuple[int, ...], int], int] = {}
    funcs: dict[tuple[tuple[int, ...], int], int] = {}
    for a in _multi_indices(n, max_weight + 1) if n else []:
        for i in range(n):
            fields[(a, i)] = len(basis)
            mono = _monomial_symbol(a)
            basis.append(f"{mono}*d{i + 1}" if mono else f"d{i + 1}")
            weights.append(sum(a) - 1)
    for a in _multi_indices(n, max_weight) if max_weight >= 0 else []:
        for e in range(mat.dim):
            funcs[(a, e)] = len(basis)
            mono = _monomial_symbol(a)
            basis.append(f"{mono}*{mat.basis[e]}" if mono else mat.basis[e])
            weights.append(sum(a))

    def shift(a: tuple[int, ...], b: tuple[int, ...], minus: int | None) -> tuple[int, ...]:
        return tuple(x + y - (1 if k == minus else 0) for k, (x, y) in enumerate(zip(a, b)))

    brackets: dict[tuple[int, int], SparseVector] = {}

    def put(i: int, j: int, k: int | None, c: int | Fraction) -> None:
        if k is None or not c:
            return
        vec = brackets.setdefault((i, j), {})
        s = vec.get(k, Fraction(0)) + c
        if s:
            vec[k] = s
        else:
            vec.pop(k, None)

    field_items = list(fields.items())
    for (a, i), p in field_items:
        for (b, j), q in field_items:
            if p >= q:
                continue
            if b[i]:
                put(p, q, fields.get((shift(a, b, i), j)), b[i])
            if a[j]:
                put(p, q, fields.get((shift(a, b, j), i)), -a[j])
        for (b, e), q in funcs.items():
            if b[i]:
                put(p, q, funcs.get((shift(a, b, i), e)), b[i])
    func_items = list(funcs.items())
    for (a, e), p in func_items:
        for (b, f), q in func_items:
            if p >= q:
                continue
            for g_idx, c in mat.bracket(e, f).items():
                put(p, q, funcs.get((shift(a, b, None), g_idx)), c)

    L = WeightedLieAlgebra(basis, weights, {k: v for k, v in brackets.items() if v}, max_weight=max_weight)
    log.info("built W_X window: dim V0=%d, %d basis elements up to weight %d", n, L.dim, max_weight)
    return L


def required_window(L: WeightedLieAlgebra, max_degree: int) -> int:
    """
    Largest weight an element of a weight-zero cochain of degree ``≤ max_degree + 1`` can carry.

    A tuple with ``t`` elements of weight −1 has its non-negative weights
    summing to ``t``; ``t`` is bounded by the tuple size and by the number of
    weight −1 basis elements.
    """
    return max(0, min(max_degree, len(L.indices_of_weight(-1))))


def _subsets_with_sum(items: Sequence[tuple[int, int]], size: int, total: int, start: int = 0) -> Iterator[tuple[int, ...]]:
    if size == 0:
        if total == 0:
            yield ()
        return
    for pos in range(start, len(items)):
        idx, w = items[pos]
        if w > total:
            break
        for tail in _subsets_with_sum(items, size - 1, total - w, pos + 1):
            yield (idx,) + tail


def weight_zero_tuples(L: WeightedLieAlgebra, size: int) -> list[Cochain]:
    """Increasing index tuples of ``size`` basis elements whose weights sum to 0."""
    neg = L.indices_of_weight(-1)
    nonneg = sorted(((i, w) for i, w in enumerate(L.weights) if w >= 0), key=lambda t: (t[1], t[0]))
    out: list[Cochain] = []
    for t in range(min(len(neg), size) + 1):
        tails = list(_subsets_with_sum(nonneg, size - t, t))
        if not tails:
            continue
        for heads in combinations(neg, t):
            out.extend(tuple(sorted(heads + tail)) for tail in tails)
    return sorted(out)


def _max_weight_zero_size(L: WeightedLieAlgebra) -> int:
    """Largest size of a weight-zero tuple (knapsack over the positive weights)."""
    k = len(L.indices_of_weight(-1))
    zeros = len(L.indices_of_weight(0))
    # most[s] = max count of distinct positive-weight elements summing to s
    most = [0] + [-1] * k
    for w in (w for w in L.weights if w > 0):
        for s in range(k, w - 1, -1):
            if most[s - w] >= 0:
                most[s] = max(most[s], most[s - w] + 1)
    return max(s + zeros + most[s] for s in range(k + 1) if most[s] >= 0)


def weight_zero_complex(L: WeightedLieAlgebra, max_degree: int) -> ChainComplexSlice:
    if max_degree < 0:
        raise LieAlgebraError("max_degree must be non-negative")
    need = required_window(L, max_degree)
    if L.max_weight is not None and L.max_weight < need:
        raise WeightWindowError(
            f"degree {max_degree} needs every basis element of weight ≤ {need}; the slice stops at {L.max_weight}"
        )
    bases = [weight_zero_tuples(L, q) for q in range(max_degree + 2)]
    exhaustive = L.max_weight is None or L.max_weight >= len(L.indices_of_weight(-1))
    complete = exhaustive and _max_weight_zero_size(L) <= max_degree + 1
    return _slice_from_bases(L, bases, complete=complete)


def weight_zero_cohomology(L: WeightedLieAlgebra, max_degree: int, jobs: int = 1) -> BettiTable:
    """
    Cohomology of the weight-zero subcomplex of ``∧•L*`` in degrees
    ``0..max_degree`` (degree ``max_degree + 1`` is reported when nothing lives above it).
    """
    return cohomology_dims(weight_zero_complex(L, max_degree), jobs=jobs)
