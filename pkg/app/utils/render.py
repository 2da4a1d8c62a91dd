import ujson
from typing import List
from app.models.report import ClassReport
from app.utils.time_formatter import time_formatter


def render_json(data) -> str:
    return ujson.dumps(data, ensure_ascii=False)


def render_divisors(divisors: List[int]) -> str:
    """``[2, 2, 0]`` -> ``Z/2 + Z/2 + Z``; the trivial group is ``0``"""
    if not divisors:
        return "0"
    return " + ".join("Z" if d == 0 else f"Z/{d}" for d in divisors)


def render_report(report: ClassReport, format: str = "table") -> str:
    """Renders a classification; orientable classes are starred in tables"""
    if format == "json":
        return render_json(report.__json__())
    width = max(len(entry.rep) for entry in report.classes)
    lines = [
        f"dim {report.dim}: {len(report.classes)} classes of {report.total_matrices} matrices"
        f" ({time_formatter(report.elapsed_ms)}{', cached' if report.cached else ''})",
        f"{'item':<6}{'type':<12}{'rep':<{width + 2}}{'members':<9}orbit sizes",
    ]
    for i, entry in enumerate(report.classes, start=1):
        item = f"{i}{'*' if entry.orientable else ''}"
        orbits = ", ".join(str(size) for size in entry.orbit_sizes)
        lines.append(
            f"{item:<6}{str(entry.type):<12}{entry.rep:<{width + 2}}{entry.member_count:<9}{orbits}"
        )
    return "\n".join(lines)
