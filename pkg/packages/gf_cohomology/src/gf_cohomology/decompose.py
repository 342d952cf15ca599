"""
Isotypic data of finite linear group actions.

A :class:`Decomposition` is the universal input of every pipeline: the
trivial part ``V0``, the sign part ``m₋₁·W₋₁`` (real field only) and the
non-trivial irreducible factors with multiplicities. Cyclic actions are
decomposed exactly, either from weight/rotation data or from a rational
generator matrix (fixed-space dimensions of its powers); explicit finite
matrix groups are split into conjugacy classes for the inertia bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Literal, Sequence

from sympy import QQ, Poly, Symbol, divisors, totient
from sympy import Matrix as SymMatrix
from sympy import Rational as SymRational

from gf_cohomology.constants import COMPLEX, MAX_GROUP_ORDER, REAL
from gf_cohomology.errors import DecompositionError, InfeasibleError, QuaternionicFactorError
from gf_cohomology.linalg import SparseMatrix, as_rational, rank
from gf_cohomology.logger import log

__all__ = [
    "Factor",
    "Decomposition",
    "GroupAction",
    "InertiaComponent",
    "RationalBlock",
    "Matrix",
    "decompose_complex",
    "decompose_real_cyclic",
    "real_decomposition_from_eigen",
    "complexify",
    "inertia_components",
    "rational_blocks",
    "ensure_no_quaternionic",
    "decompose_action",
    "hypothesis_note",
    "ensure_supported",
]

Field = Literal["real", "complex"]
Matrix = tuple[tuple[Fraction, ...], ...]

COMPLEX_TYPE = "complex"
QUATERNIONIC_TYPE = "quaternionic"


@dataclass(frozen=True)
class Factor:
    """
    One non-trivial isotypic block ``m·W``.

    ``dimension`` is the dimension of ``W`` over the decomposition's field
    (rotation factors of a real cyclic action have dimension 2, characters
    of a complex abelian action dimension 1). ``kind`` is the type of the
    endomorphism algebra of ``W`` (complex; quaternionic is rejected downstream).
    """

    label: str
    multiplicity: int
    dimension: int
    kind: str = COMPLEX_TYPE

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise DecompositionError(f"factor {self.label!r}: multiplicity must be ≥ 1")
        if self.dimension < 1:
            raise DecompositionError(f"factor {self.label!r}: dimension must be ≥ 1")
        if self.kind not in (COMPLEX_TYPE, QUATERNIONIC_TYPE):
            raise DecompositionError(f"factor {self.label!r}: unknown endomorphism type {self.kind!r}")


@dataclass(frozen=True)
class Decomposition:
    field: Field
    dim_v0: int
    m_minus1: int = 0
    factors: tuple[Factor, ...] = ()
    order: int | None = None
    source: str = "cyclic"

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.field not in (REAL, COMPLEX):
            raise DecompositionError(f"unknown field {self.field!r}")
        if self.dim_v0 < 0 or self.m_minus1 < 0:
            raise DecompositionError("dimensions must be non-negative")
        if self.field == COMPLEX and self.m_minus1:
            raise DecompositionError("the sign block W₋₁ only exists over the reals")
        labels = [f.label for f in self.factors]
        if len(set(labels)) != len(labels):
            raise DecompositionError(f"factor labels must be distinct, got {labels}")
        if self.field == REAL:
            for f in self.factors:
                if f.kind == COMPLEX_TYPE and f.dimension % 2:
                    raise DecompositionError(f"real factor {f.label!r} of complex type needs even dimension")

    @property
    def ambient_dim(self) -> int:
        return self.dim_v0 + self.m_minus1 + sum(f.multiplicity * f.dimension for f in self.factors)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(f.multiplicity for f in self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.m_minus1 and not self.factors

    def canonical_key(self) -> tuple:
        return (
            self.field,
            self.dim_v0,
            self.m_minus1,
            tuple((f.label, f.multiplicity, f.dimension, f.kind) for f in self.factors),
        )


@dataclass(frozen=True)
class GroupAction:
    """
    A finite group acting linearly, in one of four forms:

    * complex cyclic: ``order`` + ``weights`` (generator acts by ``ζ^k``),
    * real cyclic, block data: ``order`` + ``plus1``/``minus1``/``rotations``,
    * real cyclic, rational ``generator`` matrix (+ ``order``),
    * explicit list of rational ``matrices`` closed under product.
    """

    field: Field = REAL
    order: int | None = None
    weights: tuple[int, ...] | None = None
    plus1: int = 0
    minus1: int = 0
    rotations: tuple[int, ...] | None = None
    generator: Matrix | None = None
    matrices: tuple[Matrix, ...] | None = None

    def __post_init__(self) -> None:
        forms = [
            self.weights is not None,
            self.rotations is not None or (self.generator is None and self.matrices is None and self.weights is None),
            self.generator is not None,
            self.matrices is not None,
        ]
        if sum(forms) != 1:
            raise DecompositionError("give exactly one of weights, eigen/rotation data, generator, matrices")
        if self.weights is not None and self.field != COMPLEX:
            raise DecompositionError("weight exponents describe a complex action")
        if self.weights is None and self.field == COMPLEX:
            raise DecompositionError("complex actions are given by weight exponents")
        if self.matrices is None and (self.order is None or self.order < 1):
            raise DecompositionError("cyclic actions need an order N ≥ 1")

    @property
    def kind(self) -> str:
        if self.weights is not None:
            return "weights"
        if self.generator is not None:
            return "generator"
        if self.matrices is not None:
            return "matrices"
        return "blocks"

    @property
    def dim(self) -> int:
        if self.weights is not None:
            return len(self.weights)
        if self.generator is not None:
            return len(self.generator)
        if self.matrices is not None:
            return len(self.matrices[0]) if self.matrices else 0
        return self.plus1 + self.minus1 + 2 * len(self.rotations or ())


@dataclass(frozen=True)
class InertiaComponent:
    label: str
    order: int
    class_size: int
    centralizer_order: int
    fixed_dim: int
    decomposition: Decomposition
    representative: Matrix | None = None
    power: int | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


# ----------------------------------------------------------------------- #
#  Exact matrix helpers                                                    #
# ----------------------------------------------------------------------- #
def as_matrix(rows: Sequence[Sequence[int | str | Fraction]]) -> Matrix:
    m = tuple(tuple(as_rational(x) for x in row) for row in rows)
    if any(len(row) != len(m) for row in m):
        raise DecompositionError("matrices must be square")
    return m


def _identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n) if a[i][k]), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def _power(a: Matrix, e: int) -> Matrix:
    out = _identity(len(a))
    base = a
    while e:
        if e & 1:
            out = _matmul(out, base)
        base = _matmul(base, base)
        e >>= 1
    return out


def matrix_order(a: Matrix, bound: int = MAX_GROUP_ORDER) -> int:
    ident = _identity(len(a))
    cur = a
    for k in range(1, bound + 1):
        if cur == ident:
            return k
        cur = _matmul(cur, a)
    raise DecompositionError(f"matrix has no finite order ≤ {bound}")


def _fixed_dim(a: Matrix) -> int:
    n = len(a)
    diff = [[a[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return n - rank(SparseMatrix.from_rows(diff, cols=n))


# ----------------------------------------------------------------------- #
#  Cyclic decompositions                                                   #
# ----------------------------------------------------------------------- #
def decompose_complex(order: int, weights: Sequence[int]) -> Decomposition:
    """Diagonal ``ℤ/N`` action on ``ℂⁿ`` by ``ζ^{k_i}``: one factor per non-zero residue."""
    if order < 1:
        raise DecompositionError("order must be ≥ 1")
    if any(not isinstance(k, int) or isinstance(k, bool) for k in weights):
        raise DecompositionError("weight exponents must be integers")
    residues = [k % order for k in weights]
    counts: dict[int, int] = {}
    for k in residues:
        if k:
            counts[k] = counts.get(k, 0) + 1
    d = Decomposition(
        field=COMPLEX,
        dim_v0=residues.count(0),
        factors=tuple(Factor(str(k), counts[k], 1) for k in sorted(counts)),
        order=order,
    )
    _check_bookkeeping(d, len(weights))
    return d


def _rotation_label(k: int, order: int) -> int:
    k %= order
    return min(k, order - k)


def real_decomposition_from_eigen(
    order: int, plus1: int = 0, minus1: int = 0, rotations: Sequence[int] = ()
) -> Decomposition:
    """Block data: ``plus1`` trivial lines, ``minus1`` sign lines, planes rotated by ``2πk/N``."""
    if order < 1:
        raise DecompositionError("order must be ≥ 1")
    if minus1 and order % 2:
        raise DecompositionError(f"a sign block needs even order, got N={order}")
    dim_v0, m_minus1 = plus1, minus1
    counts: dict[int, int] = {}
    block_orders = [1] * bool(plus1) + [2] * bool(minus1)
    for k in rotations:
        k %= order
        if k == 0:
            dim_v0 += 2
        elif 2 * k == order:
            m_minus1 += 2
        else:
            label = _rotation_label(k, order)
            counts[label] = counts.get(label, 0) + 1
        block_orders.append(order // _gcd(k, order) if k else 1)
    gen_order = _lcm_all(block_orders)
    if gen_order != order and (plus1 + minus1 + len(rotations)) > 0:
        raise DecompositionError(f"generator has order {gen_order}, expected N={order}")
    d = Decomposition(
        field=REAL,
        dim_v0=dim_v0,
        m_minus1=m_minus1,
        factors=tuple(Factor(str(k), counts[k], 2) for k in sorted(counts)),
        order=order,
    )
    _check_bookkeeping(d, plus1 + minus1 + 2 * len(rotations))
    return d


def decompose_real_cyclic(
    order: int,
    generator: Sequence[Sequence[int | str | Fraction]] | None = None,
    *,
    plus1: int = 0,
    minus1: int = 0,
    rotations: Sequence[int] = (),
) -> Decomposition:
    """
    Real isotypic data of ``ℤ/N`` acting through ``generator`` (or block data).

    For a rational matrix, the multiplicity ``m_d`` shared by the primitive
    ``d``-th roots of unity solves ``dim ker(g^d − 1) = Σ_{e | d} φ(e)·m_e``.
    """
    if generator is None:
        return real_decomposition_from_eigen(order, plus1, minus1, rotations)

    g = as_matrix(generator)
    actual = matrix_order(g, bound=max(order, 1))
    if actual != order:
        raise DecompositionError(f"generator has order {actual}, expected N={order}")
    mult: dict[int, int] = {}
    for d in divisors(order):
        fixed = _fixed_dim(_power(g, d))
        rest = fixed - sum(int(totient(e)) * mult[e] for e in divisors(d) if e < d)
        phi = int(totient(d))
        if rest % phi or rest < 0:
            raise DecompositionError(f"inconsistent eigenvalue count for order-{d} roots")
        mult[d] = rest // phi
    counts: dict[int, int] = {}
    for d, m in mult.items():
        if d <= 2 or not m:
            continue
        for j in range(1, (d + 1) // 2):
            if _gcd(j, d) == 1:
                counts[order // d * j] = m
    dec = Decomposition(
        field=REAL,
        dim_v0=mult.get(1, 0),
        m_minus1=mult.get(2, 0) if order % 2 == 0 else 0,
        factors=tuple(Factor(str(k), counts[k], 2) for k in sorted(counts)),
        order=order,
    )
    _check_bookkeeping(dec, len(g))
    log.debug("decomposed order-%d generator: %s", order, dec)
    return dec


def complexify(d: Decomposition) -> Decomposition:
    """
    Complex decomposition of the complexified real cyclic action: ``V₀ ↦ V₀``,
    ``m₋₁W₋₁ ↦ (N/2, m₋₁)``, a plane factor ``(k, m) ↦ (k, m) ⊕ (N−k, m)``.
    """
    if d.field != REAL or d.order is None:
        raise DecompositionError("complexify needs a real cyclic decomposition with known order")
    n = d.order
    counts: dict[int, int] = {}
    if d.m_minus1:
        counts[n // 2] = d.m_minus1
    for f in d.factors:
        k = int(f.label)
        for r in (k, n - k):
            counts[r] = counts.get(r, 0) + f.multiplicity * (f.dimension // 2)
    return Decomposition(
        field=COMPLEX,
        dim_v0=d.dim_v0,
        factors=tuple(Factor(str(k), counts[k], 1) for k in sorted(counts)),
        order=n,
    )


def _check_bookkeeping(d: Decomposition, ambient: int) -> None:
    if d.ambient_dim != ambient:
        raise DecompositionError(f"dimension bookkeeping failed: {d.ambient_dim} ≠ {ambient}")


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _lcm_all(values: Sequence[int]) -> int:
    from math import lcm

    return lcm(*values) if values else 1


# ----------------------------------------------------------------------- #
#  Whole actions                                                           #
# ----------------------------------------------------------------------- #
def _power_decomposition(action: GroupAction, j: int) -> Decomposition:
    n = action.order or 1
    if action.weights is not None:
        return decompose_complex(n, [j * k for k in action.weights])
    if action.generator is not None:
        g = _power(action.generator, j)
        return decompose_real_cyclic(matrix_order(g), g)
    sub_order = n // _gcd(j, n) if j % n else 1
    plus1 = action.plus1 + (action.minus1 if j % 2 == 0 else 0)
    minus1 = action.minus1 if j % 2 else 0
    d = real_decomposition_from_eigen(
        sub_order, plus1=plus1, minus1=minus1, rotations=[(k * j) % n * sub_order // n for k in action.rotations or ()]
    )
    return d


def decompose_action(action: GroupAction) -> Decomposition:
    """Decomposition of the generator of a cyclic action."""
    if action.matrices is not None:
        ensure_no_quaternionic(action)
        raise DecompositionError("an explicit matrix group has no single generator; use inertia components")
    if action.weights is not None:
        return decompose_complex(action.order, action.weights)
    if action.generator is not None:
        return decompose_real_cyclic(action.order, action.generator)
    return real_decomposition_from_eigen(action.order, action.plus1, action.minus1, action.rotations or ())


@dataclass(frozen=True)
class _MatrixGroup:
    elements: tuple[Matrix, ...]
    identity: Matrix
    inverse: dict[Matrix, Matrix]
    classes: tuple[frozenset[Matrix], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _matrix_group(action: GroupAction) -> _MatrixGroup:
    """Validate an explicit matrix list as a finite group and split it into conjugacy classes."""
    group = list(dict.fromkeys(as_matrix(m) for m in action.matrices or ()))
    size = len(group)
    if size > MAX_GROUP_ORDER:
        raise InfeasibleError(f"group of order {size} exceeds the enumeration bound {MAX_GROUP_ORDER}")
    if not group:
        raise DecompositionError("empty matrix list")
    members = set(group)
    ident = _identity(len(group[0]))
    if ident not in members:
        raise DecompositionError("matrix list does not contain the identity")
    for a in group:
        for b in group:
            if _matmul(a, b) not in members:
                raise DecompositionError("matrix list is not closed under product")

    inverse = {g: next(h for h in group if _matmul(g, h) == ident) for g in group}
    rest = set(group)
    classes: list[frozenset[Matrix]] = []
    while rest:
        g = min(rest)
        conj = frozenset(_matmul(_matmul(h, g), inverse[h]) for h in group)
        classes.append(conj)
        rest -= conj
    return _MatrixGroup(tuple(group), ident, inverse, tuple(classes))


# ----------------------------------------------------------------------- #
#  Endomorphism types of matrix groups                                     #
# ----------------------------------------------------------------------- #
_X = Symbol("x")


@dataclass(frozen=True)
class RationalBlock:
    """
    One ℚ-isotypic block of a rational matrix group action.

    The real irreducibles inside a block are Galois conjugates of each other,
    so they share one Frobenius–Schur ``indicator`` sign: positive for real
    type, zero for complex type, negative for quaternionic type.
    ``commutant_dim`` is the dimension over ℚ of the matrices commuting with
    the group on the block.
    """

    dim: int
    commutant_dim: int
    indicator: Fraction

    @property
    def kind(self) -> str:
        if self.indicator > 0:
            return "real"
        return COMPLEX_TYPE if self.indicator == 0 else QUATERNIONIC_TYPE


def _sym(m: Matrix) -> SymMatrix:
    return SymMatrix([[SymRational(x.numerator, x.denominator) for x in row] for row in m])


def _fraction(value) -> Fraction:
    return Fraction(str(value))


def _poly_at(p: Poly, z: SymMatrix) -> SymMatrix:
    n = z.shape[0]
    out = SymMatrix.zeros(n, n)
    for c in p.all_coeffs():
        out = out * z + c * SymMatrix.eye(n)
    return out


def _separating_element(sums: Sequence[SymMatrix]) -> tuple[SymMatrix, list[Poly]]:
    """An element of the span of the class sums generating it as an algebra, with its minimal polynomial factors."""
    dim_center = SymMatrix([list(s) for s in sums]).rank()
    for t in range(2, 12):
        z = sum((t**k * s for k, s in enumerate(sums)), SymMatrix.zeros(*sums[0].shape))
        _, factors = Poly(z.charpoly(_X).as_expr(), _X, domain=QQ).factor_list()
        irreducible = [p.monic() for p, _ in factors]
        if sum(p.degree() for p in irreducible) == dim_center:
            return z, irreducible
    raise DecompositionError("could not separate the rational isotypic blocks of the matrix group")


def _generating_set(group: _MatrixGroup) -> list[Matrix]:
    gens: list[Matrix] = []
    reached = {group.identity}
    for g in group.elements:
        if g in reached:
            continue
        gens.append(g)
        frontier = list(reached)
        while frontier:
            nxt = []
            for a in frontier:
                for b in gens:
                    c = _matmul(a, b)
                    if c not in reached:
                        reached.add(c)
                        nxt.append(c)
            frontier = nxt
    return gens


def _commutant_dim(basis: SymMatrix, gens: Sequence[SymMatrix]) -> int:
    k = basis.shape[1]
    left = (basis.T * basis).inv() * basis.T
    blocks = []
    for g in gens:
        r = left * g * basis
        eqs: dict[tuple[int, int], Fraction] = {}
        for i in range(k):
            for j in range(k):
                row = i * k + j
                for l in range(k):
                    if r[i, l]:
                        eqs[(row, l * k + j)] = eqs.get((row, l * k + j), Fraction(0)) + _fraction(r[i, l])
                    if r[l, j]:
                        eqs[(row, i * k + l)] = eqs.get((row, i * k + l), Fraction(0)) - _fraction(r[l, j])
        blocks.append(SparseMatrix.from_dict(k * k, k * k, eqs))
    if not blocks:
        return k * k
    return k * k - rank(SparseMatrix.vstack(blocks, k * k))


def rational_blocks(action: GroupAction) -> list[RationalBlock]:
    """
    ℚ-isotypic blocks of an explicit matrix group, with commutant dimension and indicator.

    The blocks are the eigenspaces of a generic element of the span of the
    class sums. The indicator of a block ``e·V`` is ``(1/|Γ|) Σ_g tr(e·g²)``.
    """
    if action.matrices is None:
        raise DecompositionError("rational blocks are computed for explicit matrix groups")
    group = _matrix_group(action)
    if not len(group.identity):
        return []
    sums = [sum((_sym(g) for g in cls), SymMatrix.zeros(len(group.identity))) for cls in group.classes]
    z, irreducible = _separating_element(sums)
    minimal = Poly(1, _X, domain=QQ)
    for p in irreducible:
        minimal *= p
    squares = [_sym(_matmul(g, g)) for g in group.elements]
    gens = [_sym(g) for g in _generating_set(group)]
    out = []
    for p in irreducible:
        h = minimal.exquo(p)
        e = _poly_at((h.invert(p) * h).rem(minimal), z)
        basis = SymMatrix.hstack(*e.columnspace())
        indicator = sum((_fraction((e * s).trace()) for s in squares), Fraction(0)) / group.order
        out.append(RationalBlock(basis.shape[1], _commutant_dim(basis, gens), indicator))
    out.sort(key=lambda b: (b.dim, b.indicator))
    log.debug("rational blocks of a group of order %d: %s", group.order, out)
    return out


def ensure_no_quaternionic(action: GroupAction) -> None:
    """Raise :class:`QuaternionicFactorError` when a real irreducible of the group is of quaternionic type."""
    bad = [b for b in rational_blocks(action) if b.kind == QUATERNIONIC_TYPE]
    if bad:
        raise QuaternionicFactorError(
            f"{len(bad)} isotypic block(s) of quaternionic type "
            f"(dimension {', '.join(str(b.dim) for b in bad)}, commutant dimension "
            f"{', '.join(str(b.commutant_dim) for b in bad)}); the invariant vector field model "
            "assumes Γ cyclic (or all real irreducibles of complex type), which rules out the quaternions"
        )


def inertia_components(action: GroupAction) -> list[InertiaComponent]:
    """One entry per conjugacy class: class size, centralizer order and the γ-decomposition."""
    if action.matrices is None:
        return _cyclic_components(action)

    ensure_no_quaternionic(action)
    mg = _matrix_group(action)
    group, classes, size = list(mg.elements), mg.classes, mg.order
    ident = mg.identity

    out = []
    for cls in classes:
        rep = ident if ident in cls else min(cls)
        centralizer = sum(1 for h in group if _matmul(h, rep) == _matmul(rep, h))
        if centralizer * len(cls) != size:
            raise DecompositionError("class size × centralizer order ≠ |Γ|")
        order = matrix_order(rep)
        dec = decompose_real_cyclic(order, rep)
        out.append(
            InertiaComponent(
                label="",
                order=order,
                class_size=len(cls),
                centralizer_order=centralizer,
                fixed_dim=dec.dim_v0,
                decomposition=dec,
                representative=rep,
            )
        )
    if sum(c.class_size for c in out) != size:
        raise DecompositionError("class equation fails")
    out.sort(key=lambda c: (c.order, c.class_size, c.representative))
    return [replace(c, label="e" if c.order == 1 else f"c{i}") for i, c in enumerate(out)]


def _cyclic_components(action: GroupAction) -> list[InertiaComponent]:
    n = action.order or 1
    if n > MAX_GROUP_ORDER:
        raise InfeasibleError(f"group of order {n} exceeds the enumeration bound {MAX_GROUP_ORDER}")
    out = []
    for j in range(n):
        dec = _power_decomposition(action, j)
        rep = _power(action.generator, j) if action.generator is not None else None
        out.append(
            InertiaComponent(
                label="e" if j == 0 else ("g" if j == 1 else f"g^{j}"),
                order=n // _gcd(j, n) if j else 1,
                class_size=1,
                centralizer_order=n,
                fixed_dim=dec.dim_v0,
                decomposition=dec,
                representative=rep,
                power=j,
            )
        )
    return out


# ----------------------------------------------------------------------- #
#  Hypothesis checks                                                       #
# ----------------------------------------------------------------------- #
def hypothesis_note(d: Decomposition) -> str | None:
    """Non-empty when the data lies outside the cyclic hypothesis (still computable)."""
    expected = 2 if d.field == REAL else 1
    odd_dims = [f.label for f in d.factors if f.dimension != expected]
    if d.source != "cyclic" or odd_dims:
        note = "outside the cyclic hypothesis: non-cyclic group with complex-type factors"
        if odd_dims:
            note += f" (factors {', '.join(odd_dims)} have dimension ≠ {expected})"
        return note
    return None


def ensure_supported(d: Decomposition) -> Decomposition:
    """Reject quaternionic factors; log a warning for non-cyclic data."""
    bad = [f.label for f in d.factors if f.kind == QUATERNIONIC_TYPE]
    if bad:
        raise QuaternionicFactorError(
            f"factors {', '.join(bad)} are of quaternionic type; the invariant vector field model "
            "assumes Γ cyclic (or all real irreducibles of complex type), which rules out the quaternions"
        )
    note = hypothesis_note(d)
    if note:
        log.warning(note)
    return d
