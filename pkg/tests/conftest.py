import pathlib
import numpy as np
import pytest

from zx_axiom_verifier import ZXVerifier
from zx_axiom_verifier.arithmetic import RationalAngle
from zx_axiom_verifier.semantics import Interpreter

FIXTURES = pathlib.Path(__file__).parent / 'fixtures'

# cos(x) = sqrt(2)/2 - 1 makes (1 + e^{ix})(1 + e^{-ix}) = sqrt(2)
SINGLE_POINT_X = float(np.arccos(np.sqrt(2) / 2 - 1))


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture
def verifier() -> ZXVerifier:
    return ZXVerifier(seed=0)


@pytest.fixture
def exact() -> Interpreter:
    return Interpreter('exact')


@pytest.fixture
def numeric() -> Interpreter:
    return Interpreter('float')


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def random_rational(rng: np.random.Generator, max_denominator: int = 12) -> RationalAngle:
    denominator = int(rng.integers(1, max_denominator + 1))
    return RationalAngle(int(rng.integers(0, 2 * denominator)), denominator)
