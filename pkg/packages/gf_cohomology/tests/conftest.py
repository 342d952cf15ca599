"""
Shared fixtures: an isolated working directory per test and a few small
decompositions reused across the unit tests.
"""
import json
import pathlib

import pytest

from gf_cohomology.decompose import Decomposition, Factor


@pytest.fixture(autouse=True)
def tmp_cwd(tmp_path, monkeypatch):
    """Run each test in an isolated tmp dir."""
    monkeypatch.chdir(tmp_path)
    yield


@pytest.fixture
def trivial_line() -> Decomposition:
    """ℝ¹ with the trivial action: the Godbillon–Vey case."""
    return Decomposition("real", 1, order=1)


@pytest.fixture
def sign_line() -> Decomposition:
    """ℤ/2 acting on ℝ by −1."""
    return Decomposition("real", 0, m_minus1=1, order=2)


@pytest.fixture
def complex_line_plus_character() -> Decomposition:
    """ℂ² = V₀ ⊕ one non-trivial character."""
    return Decomposition("complex", 1, factors=(Factor("1", 1, 1),), order=3)


def write_json(path: pathlib.Path, data: dict) -> pathlib.Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data))
    return path
