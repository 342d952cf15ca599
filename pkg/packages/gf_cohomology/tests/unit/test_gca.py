import pytest

from gf_cohomology.errors import AlgebraError, ComplexError
from gf_cohomology.gca import FreeGCA, GeneratorSpec, cdga_cohomology, representative_cocycles


@pytest.fixture
def heisenberg() -> FreeGCA:
    """Λ(x, y, z) with dz = xy."""
    gens = [GeneratorSpec("x", 1), GeneratorSpec("y", 1), GeneratorSpec("z", 1)]
    return FreeGCA(gens, {"z": {("x", "y"): 1}})


def test_graded_commutativity(heisenberg):
    a = heisenberg
    xy = a.multiply(a.generator("x"), a.generator("y"))
    yx = a.multiply(a.generator("y"), a.generator("x"))
    assert xy == -yx
    assert a.multiply(a.generator("x"), a.generator("x")) == 0


def test_even_generators_are_polynomial():
    a = FreeGCA([GeneratorSpec("c", 2, 2)])
    c2 = a.word(("c", "c"))
    assert a.monomial_str(c2.monomials()[0]) == "c^2"
    assert len(a.monomial_basis(6)) == 1


def test_truncation_kills_heavy_monomials():
    a = FreeGCA([GeneratorSpec("y", 1), GeneratorSpec("c", 2, 2)], {"y": {"c": 1}}, truncation_bound=2)
    assert a.word(("c", "c")) == 0
    assert a.top_degree == 3
    assert cdga_cohomology(a, 3).ranks == (1, 0, 0, 1, 0)


def test_heisenberg_cohomology(heisenberg):
    assert cdga_cohomology(heisenberg, 2).ranks == (1, 2, 2, 1)


def test_leibniz_rule(heisenberg):
    a = heisenberg
    yz = a.word(("y", "z"))
    # d(yz) = -y·xy = 0
    assert a.apply_differential(yz) == 0
    assert a.apply_differential(a.generator("z")) == a.word(("x", "y"))


def test_representatives_are_cocycles(heisenberg):
    reps = representative_cocycles(heisenberg, 2)
    assert [len(reps[q]) for q in range(3)] == [1, 2, 2]
    for q in range(3):
        for r in reps[q]:
            assert heisenberg.apply_differential(r) == 0


def test_d_squared_checked_on_generators():
    gens = [GeneratorSpec("x", 1), GeneratorSpec("y", 2), GeneratorSpec("z", 3)]
    with pytest.raises(ComplexError):
        FreeGCA(gens, {"x": {"y": 1}, "y": {"z": 1}})


def test_differential_must_raise_degree_by_one():
    with pytest.raises(AlgebraError):
        FreeGCA([GeneratorSpec("x", 1)], {"x": {"x": 1}})


def test_bad_generators_rejected():
    with pytest.raises(AlgebraError):
        GeneratorSpec("x", 0)
    with pytest.raises(AlgebraError):
        FreeGCA([GeneratorSpec("x", 1), GeneratorSpec("x", 1)])
