from dataclasses import dataclass
from typing import Sequence, Tuple
from app.core.errors import DimensionError


@dataclass(frozen=True)
class AffineMotion:
    """A motion ``x -> D x + t/2`` of R^n with diagonal ``D``

    Translations are stored doubled so every element of the group has an
    integer representation.
    """

    n: int
    signs: Tuple[int, ...]
    translation2: Tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.n or len(self.translation2) != self.n:
            raise DimensionError(f"motion components do not have length {self.n}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"linear part is not a sign vector: {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "AffineMotion":
        return cls(n, (1,) * n, (0,) * n)

    @classmethod
    def translation(cls, vector: Sequence[int]) -> "AffineMotion":
        """Translation by the lattice vector ``vector``"""
        return cls(len(vector), (1,) * len(vector), tuple(2 * v for v in vector))

    def compose(self, other: "AffineMotion") -> "AffineMotion":
        """``self o other``"""
        if self.n != other.n:
            raise DimensionError(f"cannot compose motions of R^{self.n} and R^{other.n}")
        return AffineMotion(
            self.n,
            tuple(a * b for a, b in zip(self.signs, other.signs)),
            tuple(s * t + u for s, t, u in zip(self.signs, other.translation2, self.translation2)),
        )

    def inverse(self) -> "AffineMotion":
        return AffineMotion(
            self.n, self.signs, tuple(-s * t for s, t in zip(self.signs, self.translation2))
        )

    def is_identity(self) -> bool:
        return all(s == 1 for s in self.signs) and not any(self.translation2)

    def is_lattice_translation(self) -> bool:
        return all(s == 1 for s in self.signs) and all(t % 2 == 0 for t in self.translation2)

    def lattice_vector(self) -> Tuple[int, ...]:
        if not self.is_lattice_translation():
            raise ValueError("motion is not a lattice translation")
        return tuple(t // 2 for t in self.translation2)

    def has_fixed_point(self) -> bool:
        """``D x + v = x`` is solvable iff ``v_j = 0`` wherever ``D_jj = +1``"""
        return all(t == 0 for s, t in zip(self.signs, self.translation2) if s == 1)

    def __json__(self) -> dict:
        return {"signs": list(self.signs), "translation2": list(self.translation2)}


@dataclass(frozen=True)
class GroupWord:
    """The normal-form word ``s_1^a_1 s_2^a_2 ... s_n^a_n``"""

    n: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.n:
            raise DimensionError(f"word does not have {self.n} exponents")

    @classmethod
    def identity(cls, n: int) -> "GroupWord":
        return cls(n, (0,) * n)

    @classmethod
    def generator(cls, n: int, i: int, power: int = 1) -> "GroupWord":
        if not 0 <= i < n:
            raise DimensionError(f"generator {i} outside 0..{n - 1}")
        return cls(n, tuple(power if k == i else 0 for k in range(n)))

    @classmethod
    def from_mask(cls, n: int, alpha: int) -> "GroupWord":
        """The lift of ``alpha`` in (Z_2)^n: exponents in {0, 1}"""
        return cls(n, tuple((alpha >> k) & 1 for k in range(n)))

    @property
    def parity(self) -> int:
        """Image in (Z_2)^n as a bitmask"""
        return sum((a & 1) << k for k, a in enumerate(self.exponents))

    def __str__(self) -> str:
        factors = [
            f"s{k + 1}" if a == 1 else f"s{k + 1}^{a}"
            for k, a in enumerate(self.exponents)
            if a
        ]
        return " ".join(factors) or "1"

    def __json__(self) -> list:
        return list(self.exponents)
