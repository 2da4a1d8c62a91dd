from dataclasses import dataclass
from typing import List, Tuple
import numpy as np
from app.core.errors import DimensionError


@dataclass(frozen=True)
class SignCharacter:
    """``phi(alpha) = (-1)^(popcount(mask & alpha))`` on (Z_2)^n"""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise DimensionError(f"character mask {self.mask} outside {self.n} generators")

    def __call__(self, alpha: int) -> int:
        return -1 if bin(self.mask & alpha).count("1") & 1 else 1

    @property
    def is_trivial(self) -> bool:
        return self.mask == 0

    @classmethod
    def all(cls, n: int) -> List["SignCharacter"]:
        return [cls(n, mask) for mask in range(1 << n)]

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b")[::-1]

    def __json__(self) -> dict:
        return {"n": self.n, "mask": self.mask}


@dataclass
class CochainComplex:
    """Inhomogeneous bar cochains of (Z_2)^n with coefficients twisted by ``character``

    ``coboundaries[k]`` is the matrix of ``C^k -> C^(k+1)``.
    """

    n: int
    character: SignCharacter
    coboundaries: Tuple[np.ndarray, ...]

    def is_complex(self) -> bool:
        return all(
            not (later @ earlier).any()
            for earlier, later in zip(self.coboundaries, self.coboundaries[1:])
        )


@dataclass
class SmithForm:
    """``left @ matrix @ right == diagonal`` with ``left`` and ``right`` unimodular"""

    matrix: np.ndarray
    diagonal: np.ndarray
    left: np.ndarray
    right: np.ndarray
    divisors: List[int]

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def verify(self) -> bool:
        product = self.left.astype(object) @ self.matrix.astype(object) @ self.right.astype(object)
        if not (product == self.diagonal).all():
            return False
        return all(b % a == 0 for a, b in zip(self.divisors, self.divisors[1:]))

    def __json__(self) -> dict:
        return {"shape": list(self.matrix.shape), "divisors": [int(d) for d in self.divisors]}
