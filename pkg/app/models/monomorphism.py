from dataclasses import dataclass, field
from typing import Dict, List, Tuple
from app.models.bott_matrix import BottMatrix
from app.models.motion import GroupWord
from app.models.ring_element import GeneratorMap


Vector = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class CocycleTable:
    """Extension data of ``0 -> Z^n -> Gamma(A) -> (Z_2)^n -> 1``

    ``values[alpha][beta]`` is ``f(alpha, beta)`` and ``characters[alpha]`` the
    diagonal of ``phi(alpha)``; both are indexed by bitmasks.
    """

    n: int
    values: Tuple[Tuple[Vector, ...], ...]
    characters: Tuple[Vector, ...]

    def value(self, alpha: int, beta: int) -> Vector:
        return self.values[alpha][beta]

    def character(self, alpha: int) -> Vector:
        return self.characters[alpha]

    def act(self, alpha: int, vector: Vector) -> Vector:
        return tuple(s * v for s, v in zip(self.characters[alpha], vector))

    def __json__(self) -> dict:
        size = 1 << self.n
        return {
            "n": self.n,
            "characters": [list(c) for c in self.characters],
            "values": [
                [list(self.values[a][b]) for b in range(size)] for a in range(size)
            ],
        }


@dataclass(frozen=True)
class MonomorphismData:
    """The monomorphism ``rho: Gamma(B) -> Gamma(A)`` induced by a ring isomorphism

    ``q`` holds in column ``i`` the lattice vector of ``rho(t_i^2)``,
    ``q_tilde`` is the adjugate of ``q`` and ``lambdas[alpha]`` the lattice part
    of ``rho`` applied to the lift of ``alpha``.
    """

    a: BottMatrix
    b: BottMatrix
    p: GeneratorMap
    images: Tuple[GroupWord, ...]
    q: IntMatrix
    det_q: int
    q_tilde: IntMatrix
    lambdas: Tuple[Vector, ...]
    rho_bar: GeneratorMap

    @property
    def n(self) -> int:
        return self.a.n

    @property
    def is_onto(self) -> bool:
        return abs(self.det_q) == 1

    def rho_bar_of(self, alpha: int) -> int:
        """``rho_bar`` on a bitmask: XOR of the rows of ``P`` picked by ``alpha``"""
        image = 0
        for r in range(self.n):
            if (alpha >> r) & 1:
                image ^= self.rho_bar.rows[r]
        return image

    def __json__(self) -> dict:
        return {
            "a": self.a.key_string,
            "b": self.b.key_string,
            "p": self.p.bits,
            "images": [w.__json__() for w in self.images],
            "q": [list(row) for row in self.q],
            "det_q": self.det_q,
            "q_tilde": [list(row) for row in self.q_tilde],
            "lambda": [list(v) for v in self.lambdas],
            "onto": self.is_onto,
        }


@dataclass
class ExtensionVerdict:
    """Outcome of every identity checked for a monomorphism"""

    checks: Dict[str, bool] = field(default_factory=dict)
    failures: Dict[str, List[str]] = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok and detail:
            self.failures.setdefault(name, []).append(detail)

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    def __json__(self) -> dict:
        return {"holds": self.holds, "checks": dict(self.checks)}
