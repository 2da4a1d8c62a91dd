import regex as re
from app import logger
from itertools import permutations, product
from typing import Iterator, List, Set, Tuple
from app.settings import settings
from app.core.errors import DimensionError, MatrixFormatError
from app.models.bott_matrix import (
    BottMatrix,
    Permutation,
    TypeSignature,
    is_strictly_upper,
)


_DIMENSION_LINE = re.compile(r"^[1-9][0-9]*$")
_ROW_LINE = re.compile(r"^[01]*$")


def parse_matrix(text: str) -> BottMatrix:
    """Parses the matrix file format: ``n`` on the first line, then ``n`` rows of bits"""
    body = text[:-1] if text.endswith("\n") else text
    lines = body.split("\n")
    if not lines or not _DIMENSION_LINE.match(lines[0]):
        raise MatrixFormatError(f"malformed dimension line {lines[0]!r}", row=1)
    n = int(lines[0])
    if not 1 <= n <= settings.MAX_DIM:
        raise MatrixFormatError(f"dimension {n} outside 1..{settings.MAX_DIM}", row=1)
    if len(lines) != n + 1:
        raise MatrixFormatError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:]):
        if not _ROW_LINE.match(line):
            column = next(k for k, ch in enumerate(line) if ch not in "01")
            raise MatrixFormatError(
                f"invalid character {line[column]!r}", row=i + 1, column=column + 1
            )
        if len(line) != n:
            raise MatrixFormatError(
                f"row has {len(line)} entries instead of {n}", row=i + 1
            )
        mask = 0
        for j, ch in enumerate(line):
            if ch == "1":
                if j <= i:
                    raise MatrixFormatError(
                        "nonzero entry on or below the diagonal", row=i + 1, column=j + 1
                    )
                mask |= 1 << j
        rows.append(mask)
    return BottMatrix(n, tuple(rows))


def format_matrix(matrix: BottMatrix) -> str:
    """Serializes a matrix in the format read by ``parse_matrix``"""
    return f"{matrix.n}\n{matrix}\n"


def orientation_class(matrix: BottMatrix) -> int:
    """Coefficients of the first Stiefel-Whitney class: bit ``i`` is the parity of row ``i``"""
    return sum((bin(row).count("1") & 1) << i for i, row in enumerate(matrix.rows))


def is_orientable(matrix: BottMatrix) -> bool:
    return orientation_class(matrix) == 0


def stages(matrix: BottMatrix) -> List[List[int]]:
    """Generators removed at each stage of the type computation

    At every stage the surviving generators whose column, restricted to the
    surviving indices, is zero span the square-zero degree-one elements of the
    current quotient ring.
    """
    columns = matrix.columns
    alive = (1 << matrix.n) - 1
    result = []
    while alive:
        stage = [j for j in range(matrix.n) if (alive >> j) & 1 and not columns[j] & alive]
        result.append(stage)
        for j in stage:
            alive &= ~(1 << j)
    return result


def type_signature(matrix: BottMatrix) -> TypeSignature:
    return TypeSignature(tuple(len(stage) for stage in stages(matrix)))


def stable_permutation(matrix: BottMatrix) -> Permutation:
    """Places the stage-k generators after those of stage k-1, keeping their order"""
    return Permutation.from_order([j for stage in stages(matrix) for j in stage])


def normal_form(matrix: BottMatrix) -> Tuple[BottMatrix, Permutation]:
    """Returns ``(sigma A sigma^-1, sigma)`` in block form for the type of ``A``"""
    sigma = stable_permutation(matrix)
    if sigma.is_identity():
        return matrix, sigma
    return BottMatrix(matrix.n, matrix.conjugate(sigma)), sigma


def is_normal_form(matrix: BottMatrix) -> bool:
    return stable_permutation(matrix).is_identity()


def block_permutations(signature: TypeSignature) -> Iterator[Permutation]:
    """Permutations preserving every block of the type, identity first"""
    for choice in product(*(permutations(block) for block in signature.blocks())):
        yield Permutation(tuple(i for block in choice for i in block))


def permutation_orbit(matrix: BottMatrix, within: str = "normal") -> Set[BottMatrix]:
    """Permutation conjugates of ``A``

    ``within="normal"`` returns the orbit of the normal form of ``A``: its
    conjugates under block-preserving permutations, all in block normal form.
    A non-normal ``A`` is therefore not a member of its own result.
    ``within="triangular"`` keeps every conjugate of ``A`` itself that stays
    strictly upper triangular.
    """
    if within == "normal":
        base, _ = normal_form(matrix)
        return {
            BottMatrix(base.n, base.conjugate(sigma))
            for sigma in block_permutations(type_signature(base))
        }
    if within == "triangular":
        orbit = set()
        for image in permutations(range(matrix.n)):
            rows = matrix.conjugate(Permutation(image))
            if is_strictly_upper(rows):
                orbit.add(BottMatrix(matrix.n, rows))
        return orbit
    raise ValueError(f"unknown orbit restriction {within!r}")


def enumerate_all(n: int) -> Iterator[BottMatrix]:
    """Every Bott matrix of size ``n`` once, in ascending key order"""
    if not 1 <= n <= settings.MAX_DIM:
        raise DimensionError(f"dimension {n} outside 1..{settings.MAX_DIM}")
    total = 1 << (n * (n - 1) // 2)
    logger.debug("Enumerating %s matrices of size %s", total, n)
    for key in range(total):
        yield BottMatrix.from_key(n, key)


def read_matrix(path: str) -> BottMatrix:
    with open(path, "r", encoding="utf-8") as r:
        text = r.read()
    logger.debug("Read matrix file %s", path)
    return parse_matrix(text)
