"""
Invariant multilinear forms of gl(V₀) ⊕ gl(W).

A form of bidegree ``(r, s)`` takes

* ``r + s`` vectors ``v ∈ V₀``,
* ``r`` pairs ``(φ, v')`` with ``φ ∈ Sym²V₀*`` and ``v' ∈ V₀``,
* ``s`` triples ``(w, w*, v*) ∈ W × W* × V₀*``,

and is alternating inside each of the three groups. It is stored by its
values on sorted basis tuples of each group: ``e_i`` for vectors,
``(a ≤ b, c)`` for ``(e_a* e_b*) ⊗ e_c`` and ``(p, q, c)`` for
``w_p ⊗ w_q* ⊗ e_c*``. Symmetric products are normalized so that
``(e_a* e_b*)(u, v) = ½(e_a*(u) e_b*(v) + e_b*(u) e_a*(v))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import factorial
from typing import Callable, Mapping, Sequence

from sympy.combinatorics import Permutation
from sympy.utilities.iterables import partitions

from gf_cohomology.constants import MAX_FORM_ORDER, MAX_INVARIANT_TENSOR_DIM
from gf_cohomology.errors import AlgebraError, InfeasibleError
from gf_cohomology.linalg import SparseMatrix, rank
from gf_cohomology.logger import log

__all__ = [
    "Permutation",
    "MultilinearForm",
    "SymmetricForm",
    "cycle_type_classes",
    "are_conjugate",
    "centralizer_order",
    "concatenate",
    "phi",
    "psi_gamma",
    "psi_tilde",
    "trace_invariant",
    "tilde",
    "ev",
    "psi_pair",
    "psi_pair_direct",
    "multiply",
    "chi_images",
    "stab_evaluation",
    "inv_dim_bruteforce",
    "inv_dim_predicted",
]

Perm = tuple[int, ...]
Quad = tuple[int, int, int]
Mat = tuple[int, int, int]
Key = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

_HALF = Fraction(1, 2)


# ----------------------------------------------------------------------- #
#  Permutations                                                            #
# ----------------------------------------------------------------------- #
def _array(p: Permutation | Sequence[int]) -> Perm:
    return tuple(p.array_form) if isinstance(p, Permutation) else tuple(p)


@lru_cache(maxsize=None)
def _signed_perms(n: int) -> tuple[tuple[Perm, int], ...]:
    return tuple((p, Permutation(list(p)).signature() if n else 1) for p in permutations(range(n)))


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _conjugate(beta: Perm, sigma: Perm) -> Perm:
    """``β σ β⁻¹``."""
    inv = _inverse(beta)
    return tuple(beta[sigma[inv[i]]] for i in range(len(sigma)))


def _cycle_type(p: Perm) -> tuple[tuple[int, int], ...]:
    if not p:
        return ()
    return tuple(sorted(Permutation(list(p)).cycle_structure.items()))


def are_conjugate(a: Permutation | Sequence[int], b: Permutation | Sequence[int]) -> bool:
    pa, pb = _array(a), _array(b)
    return len(pa) == len(pb) and _cycle_type(pa) == _cycle_type(pb)


def centralizer_order(p: Permutation | Sequence[int]) -> int:
    """``|Stab(σ)|`` for the conjugation action: ``Π k^{m_k} m_k!``."""
    out = 1
    for k, m in _cycle_type(_array(p)):
        out *= k**m * factorial(m)
    return out


def concatenate(a: Permutation | Sequence[int], b: Permutation | Sequence[int]) -> Perm:
    """``σ₁ ⊔ σ₂`` acting on ``r₁ + r₂`` points."""
    pa, pb = _array(a), _array(b)
    return pa + tuple(x + len(pa) for x in pb)


def _cycle(length: int) -> Perm:
    return tuple((i + 1) % length for i in range(length))


def cycle_type_classes(r: int) -> list[Permutation]:
    """One permutation per conjugacy class of ``Σ_r``, longest cycles first."""
    if r < 0:
        raise AlgebraError("r must be non-negative")
    if r == 0:
        return [Permutation([])]
    out = []
    for part in partitions(r):
        lengths = sorted((k for k, m in part.items() for _ in range(m)), reverse=True)
        arr: list[int] = []
        for k in lengths:
            start = len(arr)
            arr.extend(start + (i + 1) % k for i in range(k))
        out.append(Permutation(arr))
    return sorted(out, key=lambda p: sorted(p.cycle_structure.items(), reverse=True), reverse=True)


# ----------------------------------------------------------------------- #
#  Basis bookkeeping                                                       #
# ----------------------------------------------------------------------- #
@lru_cache(maxsize=None)
def _quad_elems(n: int) -> tuple[Quad, ...]:
    return tuple((a, b, c) for a in range(n) for b in range(a, n) for c in range(n))


@lru_cache(maxsize=None)
def _mat_elems(n: int, m: int) -> tuple[Mat, ...]:
    return tuple((p, q, c) for p in range(m) for q in range(m) for c in range(n))


@lru_cache(maxsize=None)
def _index(elems: tuple) -> dict:
    return {e: i for i, e in enumerate(elems)}


def _sort_signed(items: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    if len(set(items)) != len(items):
        return 0, ()
    inversions = sum(1 for i, j in combinations(range(len(items)), 2) if items[i] > items[j])
    return (-1 if inversions % 2 else 1), tuple(sorted(items))


def _keys(n: int, m: int, r: int, s: int) -> list[Key]:
    vs = list(combinations(range(n), r + s))
    qs = list(combinations(range(len(_quad_elems(n))), r))
    ms = list(combinations(range(len(_mat_elems(n, m))), s))
    return list(product(vs, qs, ms))


@dataclass(frozen=True)
class MultilinearForm:
    dim_v0: int
    dim_w: int
    r: int
    s: int
    values: Mapping[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", {k: v for k, v in self.values.items() if v})

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.r, self.s

    @property
    def weil_degree(self) -> int:
        return 2 * (self.r + self.s)

    def is_zero(self) -> bool:
        return not self.values

    def evaluate(self, vs: Sequence[int], quads: Sequence[Sequence[int]], mats: Sequence[Mat]) -> Fraction:
        """Value on basis arguments in any order; quads are ``(a, b, c)`` with ``a, b`` unordered."""
        qi, mi = _index(_quad_elems(self.dim_v0)), _index(_mat_elems(self.dim_v0, self.dim_w))
        s1, vk = _sort_signed(list(vs))
        s2, qk = _sort_signed([qi[(min(a, b), max(a, b), c)] for a, b, c in quads])
        s3, mk = _sort_signed([mi[tuple(t)] for t in mats])
        sign = s1 * s2 * s3
        if not sign:
            return Fraction(0)
        return sign * self.values.get((vk, qk, mk), Fraction(0))

    def scale(self, c: Fraction | int) -> "MultilinearForm":
        return MultilinearForm(self.dim_v0, self.dim_w, self.r, self.s, {k: c * v for k, v in self.values.items()})

    def __add__(self, other: "MultilinearForm") -> "MultilinearForm":
        if (self.dim_v0, self.dim_w, self.r, self.s) != (other.dim_v0, other.dim_w, other.r, other.s):
            raise AlgebraError("forms of different shapes cannot be added")
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, Fraction(0)) + v
        return MultilinearForm(self.dim_v0, self.dim_w, self.r, self.s, vals)


def _tabulate(
    n: int, m: int, r: int, s: int, fn: Callable[[tuple[int, ...], list[Quad], list[Mat]], Fraction]
) -> MultilinearForm:
    if r + s > MAX_FORM_ORDER:
        raise InfeasibleError(f"forms of order r + s = {r + s} exceed the bound {MAX_FORM_ORDER}")
    quads, mats = _quad_elems(n), _mat_elems(n, m)
    values: dict[Key, Fraction] = {}
    for key in _keys(n, m, r, s):
        vk, qk, mk = key
        val = fn(vk, [quads[i] for i in qk], [mats[i] for i in mk])
        if val:
            values[key] = val
    return MultilinearForm(n, m, r, s, values)


# ----------------------------------------------------------------------- #
#  Pairings                                                                #
# ----------------------------------------------------------------------- #
def _sym(quad: Quad, x: int, y: int) -> Fraction:
    """``(e_a* e_b*)(e_x, e_y)``."""
    a, b, _ = quad
    return _HALF * ((a == x and b == y) + (b == x and a == y))


def _phi_value(sigma: Perm, vs: Sequence[int], quads: Sequence[Quad]) -> Fraction:
    r = len(sigma)
    total = Fraction(0)
    conjugates = [_conjugate(beta, sigma) for beta, _ in _signed_perms(r)]
    for nu, sgn in _signed_perms(r):
        for pi in conjugates:
            term = Fraction(sgn)
            for i in range(r):
                term *= _sym(quads[i], quads[pi[i]][2], vs[nu[i]])
                if not term:
                    break
            total += term
    return total


def _trace_value(gamma: Perm, pairs: Sequence[tuple[int, int]]) -> int:
    """``Σ_ω Π_j w*_{q_j}(w_{p_{ωγω⁻¹(j)}})`` on ``pairs = ((p_j, q_j))``."""
    total = 0
    for omega, _ in _signed_perms(len(gamma)):
        pi = _conjugate(omega, gamma)
        if all(pairs[j][1] == pairs[pi[j]][0] for j in range(len(gamma))):
            total += 1
    return total


def _omega_value(vs: Sequence[int], covs: Sequence[int]) -> int:
    """``det[v*_i(v_k)]`` on basis vectors."""
    total = 0
    for eta, sgn in _signed_perms(len(covs)):
        if all(covs[j] == vs[eta[j]] for j in range(len(covs))):
            total += sgn
    return total


def phi(sigma: Permutation | Sequence[int], dim_v0: int) -> MultilinearForm:
    """``Φ_σ(v, (φ_i, v'_i)) = Σ_{ν,β} sgn ν Π_i φ_i(v'_{βσβ⁻¹(i)}, v_{ν(i)})``."""
    sig = _array(sigma)
    return _tabulate(dim_v0, 0, len(sig), 0, lambda vs, qs, ms: _phi_value(sig, vs, qs))


def psi_gamma(gamma: Permutation | Sequence[int], dim_v0: int, dim_w: int) -> MultilinearForm:
    """``Ψ_γ = Σ_{η,ω} sgn η Π_j w*_j(w_{ωγω⁻¹(j)}) v*_j(v_{η(j)})``, summed directly."""
    gam = _array(gamma)
    s = len(gam)

    def value(vs: tuple[int, ...], qs: list[Quad], ms: list[Mat]) -> Fraction:
        total = 0
        for eta, sgn in _signed_perms(s):
            for omega, _ in _signed_perms(s):
                pi = _conjugate(omega, gam)
                if all(ms[j][1] == ms[pi[j]][0] and ms[j][2] == vs[eta[j]] for j in range(s)):
                    total += sgn
        return Fraction(total)

    return _tabulate(dim_v0, dim_w, 0, s, value)


@dataclass(frozen=True)
class SymmetricForm:
    """A symmetric form on ``W ⊗ W*`` of degree ``s``, by its values on sorted multisets of ``(p, q)``."""

    dim_w: int
    degree: int
    values: Mapping[tuple[tuple[int, int], ...], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", {k: v for k, v in self.values.items() if v})

    def evaluate(self, pairs: Sequence[tuple[int, int]]) -> Fraction:
        return self.values.get(tuple(sorted(tuple(p) for p in pairs)), Fraction(0))

    def is_zero(self) -> bool:
        return not self.values

    def multiply(self, other: "SymmetricForm") -> "SymmetricForm":
        """``(F·G)(x) = Σ_{|S| = deg F} F(x_S) G(x_{S^c})``."""
        if self.dim_w != other.dim_w:
            raise AlgebraError("symmetric forms on different spaces")
        deg = self.degree + other.degree
        values = {}
        for key in _multisets(self.dim_w, deg):
            total = Fraction(0)
            for pos in combinations(range(deg), self.degree):
                rest = [key[i] for i in range(deg) if i not in pos]
                total += self.evaluate([key[i] for i in pos]) * other.evaluate(rest)
            if total:
                values[key] = total
        return SymmetricForm(self.dim_w, deg, values)


def _multisets(m: int, s: int) -> list[tuple[tuple[int, int], ...]]:
    return list(combinations_with_replacement([(p, q) for p in range(m) for q in range(m)], s))


def trace_invariant(gamma: Permutation | Sequence[int], dim_w: int) -> SymmetricForm:
    gam = _array(gamma)
    values = {key: Fraction(_trace_value(gam, key)) for key in _multisets(dim_w, len(gam))}
    return SymmetricForm(dim_w, len(gam), values)


def tilde(f: SymmetricForm, dim_v0: int) -> MultilinearForm:
    """``F̃((v_i), (w_i, w_i*, v_i*)) = det[v_i*(v_k)] · F((w_i ⊗ w_i*))``."""
    return _tabulate(
        dim_v0,
        f.dim_w,
        0,
        f.degree,
        lambda vs, qs, ms: _omega_value(vs, [c for _, _, c in ms]) * f.evaluate([(p, q) for p, q, _ in ms]),
    )


def psi_tilde(gamma: Permutation | Sequence[int], dim_v0: int, dim_w: int) -> MultilinearForm:
    """``Ω_s · Ψ``; zero as soon as ``s > dim V₀``."""
    return tilde(trace_invariant(gamma, dim_w), dim_v0)


def ev(f: MultilinearForm, partial_basis: Sequence[int] | None = None) -> SymmetricForm:
    """
    ``f((e_i)_1^s, (−, −, e_i*))`` for a partial basis ``e_{π(1)}, …, e_{π(s)}``
    (the first ``s`` basis vectors by default).
    """
    if f.r:
        raise AlgebraError(f"ev needs a form of bidegree (0, s), got {f.bidegree}")
    s = f.s
    basis = tuple(partial_basis) if partial_basis is not None else tuple(range(s))
    if len(basis) != s or len(set(basis)) != s or any(not 0 <= b < f.dim_v0 for b in basis):
        raise AlgebraError(f"a partial basis of {s} distinct vectors in V₀ (dim {f.dim_v0}) is required")
    values = {}
    for key in _multisets(f.dim_w, s):
        val = f.evaluate(basis, [], [(p, q, basis[j]) for j, (p, q) in enumerate(key)])
        if val:
            values[key] = val
    return SymmetricForm(f.dim_w, s, values)


def _psi_pair_value(sigma: Perm, gamma: Perm, vs, quads, mats) -> Fraction:
    r, s = len(sigma), len(gamma)
    sig_conj = [_conjugate(beta, sigma) for beta, _ in _signed_perms(r)]
    gam_conj = [_conjugate(delta, gamma) for delta, _ in _signed_perms(s)]
    traces = sum(1 for pi in gam_conj if all(mats[j][1] == mats[pi[j]][0] for j in range(s)))
    if not traces:
        return Fraction(0)
    total = Fraction(0)
    for alpha, sgn in _signed_perms(r + s):
        if not all(mats[j][2] == vs[alpha[r + j]] for j in range(s)):
            continue
        for pi in sig_conj:
            term = Fraction(sgn)
            for i in range(r):
                term *= _sym(quads[i], quads[pi[i]][2], vs[alpha[i]])
                if not term:
                    break
            total += term * traces
    return total


def psi_pair_direct(
    sigma: Permutation | Sequence[int], gamma: Permutation | Sequence[int], dim_v0: int, dim_w: int
) -> MultilinearForm:
    """``ψ_{σ,γ}`` from its defining sum over ``α ∈ Σ_{r+s}``, ``β ∈ Σ_r``, ``δ ∈ Σ_s``."""
    sig, gam = _array(sigma), _array(gamma)
    return _tabulate(
        dim_v0, dim_w, len(sig), len(gam), lambda vs, qs, ms: _psi_pair_value(sig, gam, vs, qs, ms)
    )


# ----------------------------------------------------------------------- #
#  Products                                                                #
# ----------------------------------------------------------------------- #
def _shuffles(size: int, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    out = []
    for left in combinations(range(size), k):
        right = tuple(i for i in range(size) if i not in left)
        sign, _ = _sort_signed(left + right)
        out.append((left, right, sign))
    return out


def multiply(f: MultilinearForm, g: MultilinearForm) -> MultilinearForm:
    """Shuffle product, taken in each argument group separately."""
    if (f.dim_v0, f.dim_w) != (g.dim_v0, g.dim_w):
        raise AlgebraError("forms over different spaces")
    n, m = f.dim_v0, f.dim_w
    r, s = f.r + g.r, f.s + g.s
    v_sh = _shuffles(r + s, f.r + f.s)
    q_sh = _shuffles(r, f.r)
    m_sh = _shuffles(s, f.s)
    values: dict[Key, Fraction] = {}
    if not f.values or not g.values:
        return MultilinearForm(n, m, r, s, {})
    for key in _keys(n, m, r, s):
        vk, qk, mk = key
        total = Fraction(0)
        for vl, vr, s1 in v_sh:
            fv = tuple(vk[i] for i in vl)
            gv = tuple(vk[i] for i in vr)
            for ql, qr, s2 in q_sh:
                fq = tuple(qk[i] for i in ql)
                gq = tuple(qk[i] for i in qr)
                for ml, mr, s3 in m_sh:
                    a = f.values.get((fv, fq, tuple(mk[i] for i in ml)))
                    if not a:
                        continue
                    b = g.values.get((gv, gq, tuple(mk[i] for i in mr)))
                    if b:
                        total += s1 * s2 * s3 * a * b
        if total:
            values[key] = total
    return MultilinearForm(n, m, r, s, values)


def psi_pair(
    sigma: Permutation | Sequence[int], gamma: Permutation | Sequence[int], dim_v0: int, dim_w: int
) -> MultilinearForm:
    """``Φ_σ · Ψ_γ``."""
    return multiply(_lift(phi(sigma, dim_v0), dim_w), psi_gamma(gamma, dim_v0, dim_w))


def _lift(f: MultilinearForm, dim_w: int) -> MultilinearForm:
    """View a bidegree ``(r, 0)`` form over a nonzero ``W``; its keys do not mention ``W``."""
    if f.s:
        raise AlgebraError("only forms without W-arguments can be lifted")
    return MultilinearForm(f.dim_v0, dim_w, f.r, 0, f.values)


def chi_images(dim_v0: int, dim_w: int) -> dict[str, MultilinearForm]:
    """``ξ_i ↦ Φ_{(i-cycle)}`` for ``i ≤ dim V₀`` and ``η_j ↦ Ψ̃_{(j-cycle)}`` for ``j ≤ dim W``."""
    out: dict[str, MultilinearForm] = {}
    for i in range(1, dim_v0 + 1):
        out[f"xi{i}"] = _lift(phi(_cycle(i), dim_v0), dim_w)
    for j in range(1, dim_w + 1):
        out[f"eta{j}"] = psi_tilde(_cycle(j), dim_v0, dim_w)
    vanishing = [name for name, f in out.items() if f.is_zero()]
    if vanishing:
        log.info("generators with zero image: %s", ", ".join(vanishing))
    return out


def stab_evaluation(sigma: Permutation | Sequence[int], tau: Permutation | Sequence[int], dim_v0: int) -> Fraction:
    """``Φ_σ`` at ``(e_i, (e_i*)², e_{τ⁻¹(i)})``: ``|Stab(σ)|`` when ``σ ∼ τ`` and 0 otherwise."""
    sig, ta = _array(sigma), _array(tau)
    r = len(sig)
    if len(ta) != r or r > dim_v0:
        raise AlgebraError(f"need two permutations of the same size r ≤ dim V₀ = {dim_v0}")
    inv = _inverse(ta)
    return phi(sig, dim_v0).evaluate(tuple(range(r)), [(i, i, inv[i]) for i in range(r)], [])


# ----------------------------------------------------------------------- #
#  Invariant counting                                                      #
# ----------------------------------------------------------------------- #
def _restricted_partitions(n: int, max_part: int) -> int:
    if n == 0:
        return 1
    if max_part < 1:
        return 0
    return sum(1 for _ in partitions(n, k=max_part))


def inv_dim_predicted(r: int, s: int, dim_v0: int, dim_w: int) -> int:
    """``p_{≤dim V₀}(r) · p_{≤dim W}(s)`` when ``r + s ≤ dim V₀``, else 0."""
    if r + s > dim_v0:
        return 0
    return _restricted_partitions(r, dim_v0) * _restricted_partitions(s, dim_w)


def _wedge_action(combo: tuple[int, ...], act: Callable[[int], Mapping[int, int]]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for t, elem in enumerate(combo):
        for target, c in act(elem).items():
            items = list(combo)
            items[t] = target
            sign, key = _sort_signed(items)
            if sign:
                out[key] = out.get(key, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def _generators(n: int, m: int) -> list[tuple[str, int, int]]:
    return [("V", u, v) for u in range(n) for v in range(n)] + [("W", u, v) for u in range(m) for v in range(m)]


def _actions(n: int, m: int, gen: tuple[str, int, int]):
    """Action of ``E_uv`` on the three element bases."""
    kind, u, v = gen
    quads, mats = _quad_elems(n), _mat_elems(n, m)
    qi, mi = _index(quads), _index(mats)

    def on_v(c: int) -> dict[int, int]:
        return {u: 1} if kind == "V" and c == v else {}

    def on_q(i: int) -> dict[int, int]:
        if kind != "V":
            return {}
        a, b, c = quads[i]
        out: dict[int, int] = {}
        for x, other in ((a, b), (b, a)):
            if x == u:
                key = qi[(min(v, other), max(v, other), c)]
                out[key] = out.get(key, 0) - 1
        if c == v:
            key = qi[(a, b, u)]
            out[key] = out.get(key, 0) + 1
        return {k: x for k, x in out.items() if x}

    def on_m(i: int) -> dict[int, int]:
        p, q, c = mats[i]
        out: dict[int, int] = {}
        if kind == "V":
            if c == u:
                out[mi[(p, q, v)]] = -1
        else:
            if p == v:
                k = mi[(u, q, c)]
                out[k] = out.get(k, 0) + 1
            if q == u:
                k = mi[(p, v, c)]
                out[k] = out.get(k, 0) - 1
        return {k: x for k, x in out.items() if x}

    return on_v, on_q, on_m


def inv_dim_bruteforce(r: int, s: int, dim_v0: int, dim_w: int) -> int:
    """
    Dimension of the gl(V₀) ⊕ gl(W)-invariant forms of bidegree ``(r, s)``,
    from the linear system ``f(X · b) = 0`` over all basis tuples ``b`` and
    all elementary matrices ``X``.
    """
    keys = _keys(dim_v0, dim_w, r, s)
    size = len(keys)
    if size > MAX_INVARIANT_TENSOR_DIM:
        raise InfeasibleError(f"tensor space of dimension {size} exceeds the bound {MAX_INVARIANT_TENSOR_DIM}")
    if size == 0:
        return 0
    pos = {k: i for i, k in enumerate(keys)}
    data: dict[tuple[int, int], Fraction] = {}
    gens = _generators(dim_v0, dim_w)
    for g_idx, gen in enumerate(gens):
        on_v, on_q, on_m = _actions(dim_v0, dim_w, gen)
        for col, (vk, qk, mk) in enumerate(keys):
            row = g_idx * size + col
            images: dict[Key, int] = {}
            for new, c in _wedge_action(vk, on_v).items():
                images[(new, qk, mk)] = images.get((new, qk, mk), 0) + c
            for new, c in _wedge_action(qk, on_q).items():
                images[(vk, new, mk)] = images.get((vk, new, mk), 0) + c
            for new, c in _wedge_action(mk, on_m).items():
                images[(vk, qk, new)] = images.get((vk, qk, new), 0) + c
            for key, c in images.items():
                if c:
                    data[(row, pos[key])] = Fraction(c)
    system = SparseMatrix.from_dict(len(gens) * size, size, data)
    nullity = size - rank(system)
    log.debug("invariant solve (r=%d, s=%d, n=%d, m=%d): %d unknowns, nullity %d", r, s, dim_v0, dim_w, size, nullity)
    return nullity
