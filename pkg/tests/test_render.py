import pytest
from app.models.bott_matrix import TypeSignature
from app.models.report import ClassEntry, ClassReport
from app.utils.render import render_divisors, render_report
from app.utils.time_formatter import time_formatter


@pytest.mark.parametrize(
    "ms, text", [(0, "0ms"), (250, "250ms"), (61000, "1m, 1s"), (3723004, "1h, 2m, 3s, 4ms")]
)
def test_time_formatter(ms, text):
    assert time_formatter(ms) == text


def test_render_divisors():
    assert render_divisors([]) == "0"
    assert render_divisors([2, 2]) == "Z/2 + Z/2"
    assert render_divisors([2, 0]) == "Z/2 + Z"


def test_report_round_trip():
    entries = [
        ClassEntry("1", TypeSignature((1, 1)), False, 1, [1], ["1"]),
        ClassEntry("0", TypeSignature((2,)), True, 1, [1], ["0"]),
    ]
    report = ClassReport(2, 2, entries, "1.0.0", 12)
    assert [e.rep for e in report.classes] == ["1", "0"]
    again = ClassReport.from_json(report.__json__())
    assert again.cached
    assert again.__json__() == report.__json__()
    table = render_report(again).splitlines()
    assert table[0] == "dim 2: 2 classes of 2 matrices (12ms, cached)"
    assert table[3].startswith("2*")
