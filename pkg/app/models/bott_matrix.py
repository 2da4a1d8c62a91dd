from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple
from app.settings import settings
from app.core.errors import DimensionError, MatrixFormatError


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{0, ..., n-1}``; ``image[i]`` is the image of ``i``"""

    image: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Permutation":
        """The permutation sending ``order[k]`` to position ``k``"""
        image = [0] * len(order)
        for position, index in enumerate(order):
            image[index] = position
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def inverse(self) -> "Permutation":
        return Permutation.from_order(self.image)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def __json__(self) -> List[int]:
        return list(self.image)


@dataclass(frozen=True)
class TypeSignature:
    """The type ``(n_1, ..., n_q)`` of a Bott matrix"""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"invalid type signature: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def blocks(self) -> List[range]:
        """Index ranges of the diagonal blocks"""
        result, start = [], 0
        for part in self.parts:
            result.append(range(start, start + part))
            start += part
        return result

    def block_of(self) -> Tuple[int, ...]:
        """Block number of every index"""
        return tuple(k for k, part in enumerate(self.parts) for _ in range(part))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __json__(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class BottMatrix:
    """A strictly upper triangular (0,1)-matrix

    ``rows[i]`` is a bitmask whose bit ``j`` is the entry ``A^i_j``.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= settings.MAX_DIM:
            raise DimensionError(f"dimension {self.n} outside 1..{settings.MAX_DIM}")
        if len(self.rows) != self.n:
            raise DimensionError(f"expected {self.n} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise MatrixFormatError("row does not fit the dimension", row=i + 1)
            if row & ((1 << (i + 1)) - 1):
                low = (row & -row).bit_length()
                raise MatrixFormatError(
                    "nonzero entry on or below the diagonal", row=i + 1, column=low
                )

    @classmethod
    def zero(cls, n: int) -> "BottMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BottMatrix":
        n = len(entries)
        rows = []
        for i, row in enumerate(entries):
            if len(row) != n:
                raise MatrixFormatError("row has the wrong length", row=i + 1)
            rows.append(sum((1 << j) for j, bit in enumerate(row) if bit))
        return cls(n, tuple(rows))

    @classmethod
    def from_key(cls, n: int, key: int) -> "BottMatrix":
        """Inverse of ``key``: the first above-diagonal bit is the most significant"""
        width = n * (n - 1) // 2
        if not 0 <= key < (1 << width):
            raise DimensionError(f"key {key} out of range for n = {n}")
        rows = [0] * n
        position = width - 1
        for i in range(n):
            for j in range(i + 1, n):
                if (key >> position) & 1:
                    rows[i] |= 1 << j
                position -= 1
        return cls(n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> List[List[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    @property
    def columns(self) -> Tuple[int, ...]:
        """``columns[j]`` is a bitmask whose bit ``i`` is ``A^i_j``"""
        return tuple(
            sum(((self.rows[i] >> j) & 1) << i for i in range(self.n))
            for j in range(self.n)
        )

    def above_diagonal(self) -> Iterator[Tuple[int, int]]:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j

    @property
    def key(self) -> int:
        value = 0
        for i, j in self.above_diagonal():
            value = (value << 1) | self.entry(i, j)
        return value

    @property
    def key_string(self) -> str:
        return "".join(str(self.entry(i, j)) for i, j in self.above_diagonal())

    def conjugate(self, sigma: Permutation) -> Tuple[int, ...]:
        """Rows of ``sigma A sigma^-1``, i.e. entry ``(sigma(i), sigma(j)) = A^i_j``

        Returned as raw rows since the conjugate may leave the upper triangle.
        """
        rows = [0] * self.n
        for i in range(self.n):
            row = self.rows[i]
            j = 0
            while row:
                if row & 1:
                    rows[sigma(i)] |= 1 << sigma(j)
                row >>= 1
                j += 1
        return tuple(rows)

    def __str__(self) -> str:
        return "\n".join(
            "".join(str(self.entry(i, j)) for j in range(self.n)) for i in range(self.n)
        )

    def __json__(self) -> dict:
        return {"n": self.n, "key": self.key_string, "rows": self.to_lists()}


def is_strictly_upper(rows: Sequence[int]) -> bool:
    return all(not (row & ((1 << (i + 1)) - 1)) for i, row in enumerate(rows))
