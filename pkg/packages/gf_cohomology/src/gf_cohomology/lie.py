"""
Lie algebras given by sparse rational structure constants.

``[e_i, e_j] = Σ_k c_{ij}^k e_k``. Weighted algebras carry an integer weight
per basis element (bracket adds weights) and may be a finite window of an
infinite algebra, in which case brackets landing above ``max_weight`` are
dropped and Jacobi is only checked on triples that stay inside the window.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from gf_cohomology.errors import LieAlgebraError
from gf_cohomology.linalg import as_rational, express

__all__ = [
    "SparseVector",
    "WeightedLieAlgebra",
    "FiniteLieAlgebra",
    "abelian",
    "gl",
    "bgl",
    "direct_sum",
    "restrict",
    "orthogonal_vectors",
    "unitary_vectors",
]

SparseVector = dict[int, Fraction]


def _add_into(acc: SparseVector, vec: Mapping[int, Fraction], scale: Fraction = Fraction(1)) -> None:
    for k, v in vec.items():
        s = acc.get(k, Fraction(0)) + scale * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


class WeightedLieAlgebra:
    """
    Lie algebra with weights on its basis.

    Parameters
    ----------
    basis:
        Basis symbols.
    weights:
        Integer weight (≥ −1) per basis element.
    brackets:
        ``(i, j) -> {k: c}``; either ordering may be given, consistent
        antisymmetry is enforced.
    max_weight:
        Weight window of a truncated slice; ``None`` means the table is exact.
    """

    def __init__(
        self,
        basis: Sequence[str],
        weights: Sequence[int],
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction | int]],
        max_weight: int | None = None,
        check: bool = True,
    ) -> None:
        self.basis: tuple[str, ...] = tuple(basis)
        self.weights: tuple[int, ...] = tuple(weights)
        self.max_weight = max_weight
        if len(self.basis) != len(self.weights):
            raise LieAlgebraError("basis and weights differ in length")
        if len(set(self.basis)) != len(self.basis):
            raise LieAlgebraError("basis symbols must be distinct")
        if any(w < -1 for w in self.weights):
            raise LieAlgebraError("weights must be ≥ -1")

        table: dict[tuple[int, int], SparseVector] = {}
        for (i, j), vec in brackets.items():
            clean = {k: as_rational(v) for k, v in vec.items() if as_rational(v)}
            if i == j:
                if clean:
                    raise LieAlgebraError(f"[{self.basis[i]}, {self.basis[i]}] must vanish")
                continue
            key, sign = ((i, j), 1) if i < j else ((j, i), -1)
            oriented = {k: sign * v for k, v in clean.items()}
            if key in table and table[key] != oriented:
                raise LieAlgebraError(f"bracket of {self.basis[key[0]]}, {self.basis[key[1]]} is not antisymmetric")
            if oriented:
                table[key] = oriented
        self._table = table
        if check:
            self._check_weights()
            self._check_jacobi()

    # ----- basic API ----- #
    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, i: int, j: int) -> SparseVector:
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return {k: -v for k, v in self._table.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket(i, j).get(k, Fraction(0))

    def bracket_vectors(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> SparseVector:
        out: SparseVector = {}
        for i, a in x.items():
            for j, b in y.items():
                if a and b:
                    _add_into(out, self.bracket(i, j), a * b)
        return out

    def nonzero_brackets(self):
        return self._table.items()

    def indices_of_weight(self, w: int) -> list[int]:
        return [i for i, x in enumerate(self.weights) if x == w]

    # ----- validation ----- #
    def _check_weights(self) -> None:
        for (i, j), vec in self._table.items():
            for k in vec:
                if self.weights[k] != self.weights[i] + self.weights[j]:
                    raise LieAlgebraError(
                        f"[{self.basis[i]}, {self.basis[j]}] has a component {self.basis[k]} of the wrong weight"
                    )

    def _inside_window(self, i: int, j: int, k: int) -> bool:
        if self.max_weight is None:
            return True
        w = self.weights
        return max(w[i] + w[j], w[j] + w[k], w[i] + w[k], w[i] + w[j] + w[k]) <= self.max_weight

    def _check_jacobi(self) -> None:
        for i, j, k in combinations(range(self.dim), 3):
            if not self._inside_window(i, j, k):
                continue
            total: SparseVector = {}
            _add_into(total, self.bracket_vectors(self.bracket(i, j), {k: Fraction(1)}))
            _add_into(total, self.bracket_vectors(self.bracket(j, k), {i: Fraction(1)}))
            _add_into(total, self.bracket_vectors(self.bracket(k, i), {j: Fraction(1)}))
            if total:
                raise LieAlgebraError(
                    f"Jacobi fails on ({self.basis[i]}, {self.basis[j]}, {self.basis[k]})"
                )

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim}, max_weight={self.max_weight})"


class FiniteLieAlgebra(WeightedLieAlgebra):
    """Finite-dimensional Lie algebra; every basis element has weight 0."""

    def __init__(
        self,
        basis: Sequence[str],
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction | int]],
        check: bool = True,
    ) -> None:
        super().__init__(basis, [0] * len(basis), brackets, max_weight=None, check=check)

    def derived_dim(self) -> int:
        """dim [g, g]."""
        from gf_cohomology.linalg import Subspace

        vecs = []
        for _, vec in self.nonzero_brackets():
            vecs.append(tuple(vec.get(k, Fraction(0)) for k in range(self.dim)))
        return Subspace(self.dim, vecs).dim


# ----------------------------------------------------------------------- #
#  Builders                                                                #
# ----------------------------------------------------------------------- #
def abelian(k: int, prefix: str = "a") -> FiniteLieAlgebra:
    return FiniteLieAlgebra([f"{prefix}{i + 1}" for i in range(k)], {})


def _gl_labels(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n)]


def gl(n: int) -> FiniteLieAlgebra:
    """gl_n with basis ``E_ij`` and ``[E_ij, E_kl] = δ_jk E_il − δ_li E_kj``."""
    labels = _gl_labels(n)
    pos = {ij: a for a, ij in enumerate(labels)}
    brackets: dict[tuple[int, int], SparseVector] = {}
    for a, (i, j) in enumerate(labels):
        for b, (k, l) in enumerate(labels):
            if a >= b:
                continue
            vec: SparseVector = {}
            if j == k:
                _add_into(vec, {pos[(i, l)]: Fraction(1)})
            if l == i:
                _add_into(vec, {pos[(k, j)]: Fraction(-1)})
            if vec:
                brackets[(a, b)] = vec
    return FiniteLieAlgebra([f"E{i + 1}{j + 1}" for i, j in labels], brackets)


def bgl(m: int) -> FiniteLieAlgebra:
    """
    gl_m(ℂ) as a real Lie algebra: basis ``E_ij`` then ``iE_ij`` (real dim 2m²),
    ``[aE_ij, bE_kl] = ab[E_ij, E_kl]`` with ``a, b ∈ {1, i}``.
    """
    labels = _gl_labels(m)
    n = len(labels)
    pos = {ij: a for a, ij in enumerate(labels)}
    basis = [f"E{i + 1}{j + 1}" for i, j in labels] + [f"iE{i + 1}{j + 1}" for i, j in labels]
    brackets: dict[tuple[int, int], SparseVector] = {}
    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            (i, j), ia = labels[a % n], a >= n
            (k, l), ib = labels[b % n], b >= n
            core: SparseVector = {}
            if j == k:
                _add_into(core, {pos[(i, l)]: Fraction(1)})
            if l == i:
                _add_into(core, {pos[(k, j)]: Fraction(-1)})
            if not core:
                continue
            if ia and ib:
                vec = {c: -v for c, v in core.items()}
            elif ia or ib:
                vec = {c + n: v for c, v in core.items()}
            else:
                vec = core
            brackets[(a, b)] = vec
    return FiniteLieAlgebra(basis, brackets)


def direct_sum(algebras: Sequence[WeightedLieAlgebra], prefixes: Sequence[str]) -> FiniteLieAlgebra:
    """Block-diagonal sum; basis symbols are ``prefix:symbol``."""
    basis: list[str] = []
    brackets: dict[tuple[int, int], SparseVector] = {}
    offset = 0
    for alg, prefix in zip(algebras, prefixes):
        basis.extend(f"{prefix}:{s}" for s in alg.basis)
        for (i, j), vec in alg.nonzero_brackets():
            brackets[(i + offset, j + offset)] = {k + offset: v for k, v in vec.items()}
        offset += alg.dim
    return FiniteLieAlgebra(basis, brackets, check=False)


def orthogonal_vectors(n: int) -> list[SparseVector]:
    """o(n) ⊂ gl_n: ``E_ij − E_ji`` for ``i < j`` (in gl_n coordinates)."""
    labels = _gl_labels(n)
    pos = {ij: a for a, ij in enumerate(labels)}
    return [
        {pos[(i, j)]: Fraction(1), pos[(j, i)]: Fraction(-1)}
        for i in range(n)
        for j in range(i + 1, n)
    ]


def unitary_vectors(m: int) -> list[SparseVector]:
    """u(m) ⊂ bgl(m): ``E_ij − E_ji``, ``i(E_ij + E_ji)`` for ``i < j`` and ``iE_ii``."""
    labels = _gl_labels(m)
    n = len(labels)
    pos = {ij: a for a, ij in enumerate(labels)}
    out: list[SparseVector] = []
    for i in range(m):
        for j in range(i + 1, m):
            out.append({pos[(i, j)]: Fraction(1), pos[(j, i)]: Fraction(-1)})
            out.append({pos[(i, j)] + n: Fraction(1), pos[(j, i)] + n: Fraction(1)})
        out.append({pos[(i, i)] + n: Fraction(1)})
    return out


def restrict(g: WeightedLieAlgebra, vectors: Sequence[Mapping[int, Fraction]], labels: Sequence[str]) -> FiniteLieAlgebra:
    """
    The subalgebra spanned by ``vectors`` as a Lie algebra in its own basis.

    Raises :class:`LieAlgebraError` when the span is not closed under the bracket.
    """
    dense = [tuple(v.get(k, Fraction(0)) for k in range(g.dim)) for v in vectors]
    brackets: dict[tuple[int, int], SparseVector] = {}
    for a, b in combinations(range(len(vectors)), 2):
        br = g.bracket_vectors(vectors[a], vectors[b])
        target = tuple(br.get(k, Fraction(0)) for k in range(g.dim))
        coords = express(dense, target)
        if coords is None:
            raise LieAlgebraError(f"span is not closed: [{labels[a]}, {labels[b]}] leaves it")
        vec = {c: x for c, x in enumerate(coords) if x}
        if vec:
            brackets[(a, b)] = vec
    return FiniteLieAlgebra(labels, brackets)
