import os

os.environ["BOTT_LOG_TO_FILE"] = "false"

import random  # noqa: E402
import pytest  # noqa: E402
from click.testing import CliRunner  # noqa: E402
from app.core.matrices import enumerate_all, format_matrix, is_normal_form  # noqa: E402
from app.models.bott_matrix import BottMatrix  # noqa: E402
from app.models.ring_element import GeneratorMap  # noqa: E402


@pytest.fixture
def klein() -> BottMatrix:
    return BottMatrix.from_lists([[0, 1], [0, 0]])


@pytest.fixture
def chain3() -> BottMatrix:
    """Rows (0,1,0), (0,0,1), 0"""
    return BottMatrix.from_lists([[0, 1, 0], [0, 0, 1], [0, 0, 0]])


@pytest.fixture
def full3() -> BottMatrix:
    """Rows (0,1,1), (0,0,1), 0"""
    return BottMatrix.from_lists([[0, 1, 1], [0, 0, 1], [0, 0, 0]])


@pytest.fixture
def shear3() -> GeneratorMap:
    """Identity plus the unit in row 1, column 2"""
    return GeneratorMap.from_lists([[1, 1, 0], [0, 1, 0], [0, 0, 1]])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260418)


@pytest.fixture(scope="session")
def normal_forms():
    return {n: [m for m in enumerate_all(n) if is_normal_form(m)] for n in range(1, 5)}


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def matrix_file(tmp_path):
    def write(matrix: BottMatrix, name: str = "matrix.txt") -> str:
        path = tmp_path / name
        path.write_text(format_matrix(matrix), encoding="utf-8")
        return str(path)

    return write
