from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple
from app.core.errors import DimensionError
from app.utils.gf2 import gf2_inverse, gf2_matmul, gf2_rank, gf2_transpose


@dataclass(frozen=True)
class RingElement:
    """An element of H*(M(A); Z/2) in the square-free monomial basis

    Each monomial is the bitmask of its index set; the empty monomial is 1.
    """

    n: int
    monomials: FrozenSet[int] = frozenset()

    def __post_init__(self):
        limit = 1 << self.n
        for mono in self.monomials:
            if not 0 <= mono < limit:
                raise DimensionError(f"monomial {mono:b} outside {self.n} generators")

    @classmethod
    def zero(cls, n: int) -> "RingElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "RingElement":
        return cls(n, frozenset({0}))

    @classmethod
    def generator(cls, n: int, i: int) -> "RingElement":
        if not 0 <= i < n:
            raise DimensionError(f"generator {i} outside 0..{n - 1}")
        return cls(n, frozenset({1 << i}))

    @classmethod
    def linear(cls, n: int, coefficients: int) -> "RingElement":
        """Degree-one element ``sum of x_i`` over the bits of ``coefficients``"""
        return cls(n, frozenset(1 << i for i in range(n) if (coefficients >> i) & 1))

    @classmethod
    def from_subsets(cls, n: int, subsets: Iterable[Iterable[int]]) -> "RingElement":
        """Sums the monomials ``x_S``; repeated subsets cancel"""
        monos: set = set()
        for subset in subsets:
            mono = 0
            for i in subset:
                mono |= 1 << i
            monos ^= {mono}
        return cls(n, frozenset(monos))

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.n != other.n:
            raise DimensionError(f"cannot add elements of rank {self.n} and {other.n}")
        return RingElement(self.n, self.monomials ^ other.monomials)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def degrees(self) -> List[int]:
        return sorted({bin(mono).count("1") for mono in self.monomials})

    def subsets(self) -> List[Tuple[int, ...]]:
        return sorted(
            tuple(i for i in range(self.n) if (mono >> i) & 1) for mono in self.monomials
        )

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = []
        for subset in self.subsets():
            terms.append("".join(f"x{i + 1}" for i in subset) or "1")
        return " + ".join(terms)

    def __json__(self) -> List[List[int]]:
        return [list(subset) for subset in self.subsets()]


@dataclass(frozen=True)
class GeneratorMap:
    """Matrix ``P`` over Z/2 defining ``phi(x_k) = sum_i P^i_k y_i``

    ``rows[i]`` is a bitmask whose bit ``k`` is ``P^i_k``.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(r < 0 or r >> self.n for r in self.rows):
            raise DimensionError(f"generator map does not have shape {self.n}x{self.n}")

    @classmethod
    def identity(cls, n: int) -> "GeneratorMap":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "GeneratorMap":
        n = len(entries)
        return cls(
            n, tuple(sum(1 << k for k, bit in enumerate(row) if bit) for row in entries)
        )

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[int]) -> "GeneratorMap":
        return cls(n, tuple(gf2_transpose(columns, n)))

    def entry(self, i: int, k: int) -> int:
        return (self.rows[i] >> k) & 1

    def image(self, k: int) -> int:
        """Coefficient bitmask of ``phi(x_k)`` in the target generators"""
        return sum(((self.rows[i] >> k) & 1) << i for i in range(self.n))

    @property
    def columns(self) -> Tuple[int, ...]:
        return tuple(self.image(k) for k in range(self.n))

    def is_invertible(self) -> bool:
        return gf2_rank(self.rows, self.n) == self.n

    def has_unit_diagonal(self) -> bool:
        return all(self.entry(i, i) for i in range(self.n))

    def then(self, other: "GeneratorMap") -> "GeneratorMap":
        """Matrix of ``other o self`` (apply ``self`` first), i.e. ``other @ self``"""
        if self.n != other.n:
            raise DimensionError("generator maps of different sizes")
        return GeneratorMap(self.n, tuple(gf2_matmul(other.rows, self.rows)))

    def inverse(self) -> "GeneratorMap":
        rows = gf2_inverse(self.rows)
        if rows is None:
            raise ValueError("generator map is not invertible")
        return GeneratorMap(self.n, tuple(rows))

    def to_lists(self) -> List[List[int]]:
        return [[self.entry(i, k) for k in range(self.n)] for i in range(self.n)]

    @property
    def bits(self) -> str:
        """Row-major bit string"""
        return "".join(str(self.entry(i, k)) for i in range(self.n) for k in range(self.n))

    def __json__(self) -> List[List[int]]:
        return self.to_lists()
