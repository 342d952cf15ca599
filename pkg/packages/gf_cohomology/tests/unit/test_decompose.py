import pytest

from gf_cohomology.decompose import (
    Decomposition,
    Factor,
    GroupAction,
    complexify,
    decompose_action,
    decompose_complex,
    decompose_real_cyclic,
    ensure_no_quaternionic,
    ensure_supported,
    hypothesis_note,
    inertia_components,
    rational_blocks,
    real_decomposition_from_eigen,
)
from gf_cohomology.errors import DecompositionError, QuaternionicFactorError

ROT90 = [[0, -1], [1, 0]]
CYCLE3 = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]


def test_complex_weights_group_by_residue():
    d = decompose_complex(5, (1, 1, 2))
    assert d.dim_v0 == 0
    assert d.factors == (Factor("1", 2, 1), Factor("2", 1, 1))
    assert d.ambient_dim == 3


def test_complex_weights_fold_modulo_order():
    d = decompose_complex(3, (0, 3, 4))
    assert d.dim_v0 == 2
    assert d.multiplicities == (1,)


def test_rotation_generator():
    d = decompose_real_cyclic(4, ROT90)
    assert (d.dim_v0, d.m_minus1) == (0, 0)
    assert d.factors == (Factor("1", 1, 2),)


def test_permutation_generator():
    d = decompose_real_cyclic(3, CYCLE3)
    assert d.dim_v0 == 1
    assert d.factors == (Factor("1", 1, 2),)


def test_reflection_generator():
    d = decompose_real_cyclic(2, [[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    assert (d.dim_v0, d.m_minus1, d.factors) == (1, 2, ())


def test_generator_order_must_match():
    with pytest.raises(DecompositionError):
        decompose_real_cyclic(4, [[1, 0], [0, -1]])


def test_eigen_data():
    d = real_decomposition_from_eigen(2, plus1=0, minus1=1)
    assert (d.dim_v0, d.m_minus1) == (0, 1)
    d = real_decomposition_from_eigen(6, plus1=1, rotations=[1, 5, 3])
    assert d.dim_v0 == 1
    assert d.m_minus1 == 2
    assert d.factors == (Factor("1", 2, 2),)


def test_sign_block_needs_even_order():
    with pytest.raises(DecompositionError):
        real_decomposition_from_eigen(3, minus1=1)


def test_complexify_rotation():
    c = complexify(decompose_real_cyclic(4, ROT90))
    assert c.field == "complex"
    assert c.factors == (Factor("1", 1, 1), Factor("3", 1, 1))


def test_action_forms_are_exclusive():
    with pytest.raises(DecompositionError):
        GroupAction(field="real", order=2, weights=(1,))
    with pytest.raises(DecompositionError):
        GroupAction(field="complex", order=2, plus1=1)


def test_decompose_action_dispatch():
    assert decompose_action(GroupAction(field="complex", order=3, weights=(0, 1))).dim_v0 == 1
    assert decompose_action(GroupAction(field="real", order=2, minus1=1, rotations=())).m_minus1 == 1


def test_matrix_group_inertia():
    group = (((1, 0), (0, 1)), ((-1, 0), (0, -1)))
    comps = inertia_components(GroupAction(field="real", matrices=tuple(group)))
    assert [c.label for c in comps] == ["e", "c1"]
    ident, minus = comps
    assert (ident.class_size, ident.centralizer_order, ident.fixed_dim) == (1, 2, 2)
    assert minus.order == 2
    assert (minus.decomposition.dim_v0, minus.decomposition.m_minus1) == (0, 2)


def test_matrix_group_must_be_closed():
    with pytest.raises(DecompositionError):
        inertia_components(GroupAction(field="real", matrices=(((1, 0), (0, 1)), tuple(map(tuple, ROT90)))))


def test_cyclic_inertia_labels():
    comps = inertia_components(GroupAction(field="complex", order=3, weights=(0, 1)))
    assert [c.label for c in comps] == ["e", "g", "g^2"]
    assert [c.fixed_dim for c in comps] == [2, 1, 1]


def test_quaternionic_factor_rejected():
    d = Decomposition("real", 1, factors=(Factor("q", 1, 4, "quaternionic"),), source="supplied")
    with pytest.raises(QuaternionicFactorError):
        ensure_supported(d)


def test_hypothesis_note():
    assert hypothesis_note(decompose_complex(3, (0, 1))) is None
    note = hypothesis_note(Decomposition("real", 1, factors=(Factor("a", 1, 4),), source="supplied"))
    assert note and "dimension" in note


def test_invalid_decompositions():
    with pytest.raises(DecompositionError):
        Decomposition("complex", 1, m_minus1=1)
    with pytest.raises(DecompositionError):
        Decomposition("real", 1, factors=(Factor("a", 1, 3),))
    with pytest.raises(DecompositionError):
        Factor("a", 0, 2)


def _signed(*mats):
    return tuple(tuple(map(tuple, m)) for m in mats) + tuple(
        tuple(tuple(-x for x in row) for row in m) for m in mats
    )


# unit quaternions ±1, ±i, ±j, ±k acting on ℍ = ℝ⁴ by left multiplication
Q8 = _signed(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
)


def test_quaternion_group_is_quaternionic():
    action = GroupAction(field="real", matrices=Q8)
    (block,) = rational_blocks(action)
    assert (block.dim, block.commutant_dim, block.indicator, block.kind) == (4, 4, -2, "quaternionic")
    with pytest.raises(QuaternionicFactorError):
        ensure_no_quaternionic(action)
    with pytest.raises(QuaternionicFactorError):
        inertia_components(action)
    with pytest.raises(QuaternionicFactorError):
        decompose_action(action)


def test_rotation_plus_trivial_line_blocks():
    r = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
    powers = [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], r, [[-1, 0, 0], [0, -1, 0], [0, 0, 1]], [[0, 1, 0], [-1, 0, 0], [0, 0, 1]]]
    action = GroupAction(field="real", matrices=tuple(tuple(map(tuple, m)) for m in powers))
    blocks = rational_blocks(action)
    assert [(b.dim, b.commutant_dim, b.kind) for b in blocks] == [(1, 1, "real"), (2, 2, "complex")]
    ensure_no_quaternionic(action)
    assert len(inertia_components(action)) == 4


def test_sign_group_blocks():
    group = (((1, 0), (0, 1)), ((-1, 0), (0, -1)))
    (block,) = rational_blocks(GroupAction(field="real", matrices=group))
    assert (block.dim, block.commutant_dim, block.indicator) == (2, 4, 2)


def test_explicit_group_still_has_no_single_generator():
    group = (((1, 0), (0, 1)), ((-1, 0), (0, -1)))
    with pytest.raises(DecompositionError):
        decompose_action(GroupAction(field="real", matrices=group))
