from typing import List, Optional
from app.models.bott_matrix import TypeSignature


class ClassEntry:
    """One diffeomorphism class of a classification"""

    __slots__: List[str] = [
        "rep",
        "type",
        "orientable",
        "member_count",
        "orbit_sizes",
        "members",
    ]

    def __json__(self) -> dict:
        return {
            "rep": self.rep,
            "type": self.type.__json__(),
            "orientable": self.orientable,
            "member_count": self.member_count,
            "orbit_sizes": self.orbit_sizes,
        }

    def __init__(
        self,
        rep: str,
        type: TypeSignature,
        orientable: bool,
        member_count: int,
        orbit_sizes: List[int],
        members: Optional[List[str]] = None,
    ):
        self.rep: str = rep
        self.type: TypeSignature = type
        self.orientable: bool = orientable
        self.member_count: int = member_count
        self.orbit_sizes: List[int] = orbit_sizes
        self.members: List[str] = members or []

    @classmethod
    def from_json(cls, data: dict) -> "ClassEntry":
        return cls(
            data["rep"],
            TypeSignature(tuple(data["type"])),
            data["orientable"],
            data["member_count"],
            list(data["orbit_sizes"]),
        )

    @property
    def sort_key(self):
        return (self.type.parts, self.rep)


class ClassReport:
    """Result of classifying every Bott matrix of one size"""

    __slots__: List[str] = [
        "dim",
        "total_matrices",
        "classes",
        "tool_version",
        "elapsed_ms",
        "cached",
    ]

    def __json__(self) -> dict:
        return {
            "dim": self.dim,
            "total_matrices": self.total_matrices,
            "classes": [entry.__json__() for entry in self.classes],
            "tool_version": self.tool_version,
            "elapsed_ms": self.elapsed_ms,
        }

    def __init__(
        self,
        dim: int,
        total_matrices: int,
        classes: List[ClassEntry],
        tool_version: str,
        elapsed_ms: int = 0,
        cached: bool = False,
    ):
        self.dim: int = dim
        self.total_matrices: int = total_matrices
        self.classes: List[ClassEntry] = sorted(classes, key=lambda c: c.sort_key)
        self.tool_version: str = tool_version
        self.elapsed_ms: int = elapsed_ms
        self.cached: bool = cached

    @classmethod
    def from_json(cls, data: dict) -> "ClassReport":
        return cls(
            data["dim"],
            data["total_matrices"],
            [ClassEntry.from_json(entry) for entry in data["classes"]],
            data["tool_version"],
            data.get("elapsed_ms", 0),
            cached=True,
        )
