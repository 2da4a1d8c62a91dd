from functools import partial
import pytest
from app.core.classifier import _merge_bucket, classify_dimension
from app.core.errors import DimensionError, SizeLimitError
from app.core.matrices import (
    enumerate_all,
    is_normal_form,
    is_orientable,
    permutation_orbit,
    type_signature,
)
from app.core.ring import (
    _monomial_product,
    _times_generator,
    bruteforce_isomorphism,
    find_isomorphism,
)
from app.settings import settings
from tests.known_classes import CLASS_COUNTS, TABLES, key_matrix


@pytest.fixture(scope="module")
def reports():
    return {n: classify_dimension(n, threads=1) for n in range(1, 5)}


def member_sets(report):
    return sorted(sorted(entry.members) for entry in report.classes)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_class_counts(reports, n):
    report = reports[n]
    assert len(report.classes) == CLASS_COUNTS[n]
    assert report.total_matrices == 2 ** (n * (n - 1) // 2)
    assert sum(entry.member_count for entry in report.classes) == report.total_matrices
    assert not report.cached


@pytest.mark.parametrize("n", [2, 3, 4])
def test_published_tables(reports, n):
    report = reports[n]
    for item in TABLES[n]:
        listed = list(item["matrices"])
        entry = next(e for e in report.classes if listed[0] in e.members)
        assert entry.type.parts == item["type"]
        assert entry.orientable == item["orientable"]
        assert set(listed) <= set(entry.members)

        expected = set()
        for key in listed:
            orbit = permutation_orbit(key_matrix(n, key))
            if item["matrices"][key] is not None:
                assert len(orbit) == item["matrices"][key], key
            expected |= {m.key_string for m in orbit}
        normal = {k for k in entry.members if is_normal_form(key_matrix(n, k))}
        assert normal == expected
        sizes = [size for size in item["matrices"].values() if size is not None]
        if len(sizes) == len(listed):
            assert sorted(entry.orbit_sizes) == sorted(sizes)


def test_classes_are_sorted(reports):
    for report in reports.values():
        keys = [(entry.type.parts, entry.rep) for entry in report.classes]
        assert keys == sorted(keys)


def test_representative_is_smallest_member(reports):
    for report in reports.values():
        for entry in report.classes:
            assert entry.rep == min(entry.members, key=lambda k: int(k or "0", 2))
            assert entry.member_count == len(entry.members)


def test_orientability_is_a_class_invariant(reports):
    for n, report in reports.items():
        for entry in report.classes:
            assert {is_orientable(key_matrix(n, k)) for k in entry.members} == {entry.orientable}


def test_worker_pool_gives_same_partition(reports):
    assert member_sets(classify_dimension(4, threads=2)) == member_sets(reports[4])


def test_bruteforce_oracle_gives_same_partition(reports):
    report = classify_dimension(4, threads=1, oracle=bruteforce_isomorphism)
    assert member_sets(report) == member_sets(reports[4])


def test_merge_bucket_compares_with_class_reps():
    merges = _merge_bucket(3, [int("001", 2), int("010", 2), int("011", 2)])
    assert len(merges) == 2
    assert {left for left, _ in merges} == {int("001", 2)}


def test_ring_caches_are_bounded_and_cleared():
    classify_dimension(3, threads=1)
    for cached in (_times_generator, _monomial_product):
        assert cached.cache_info().maxsize == settings.RING_CACHE_SIZE
        assert cached.cache_info().currsize == 0


@pytest.mark.parametrize("n, error", [(0, DimensionError), (6, SizeLimitError)])
def test_dimension_limits(n, error):
    with pytest.raises(error):
        classify_dimension(n)


def test_five_by_five_count():
    report = classify_dimension(5, threads=1)
    assert len(report.classes) == CLASS_COUNTS[5]
    assert sum(entry.member_count for entry in report.classes) == 1024


@pytest.mark.slow
def test_five_by_five(rng):
    report = classify_dimension(5)
    assert len(report.classes) == CLASS_COUNTS[5]
    class_of = {key: i for i, entry in enumerate(report.classes) for key in entry.members}
    normal = [m for m in enumerate_all(5) if is_normal_form(m)]
    oracle = partial(bruteforce_isomorphism, limit=5)
    checked = 0
    while checked < 200:
        a, b = rng.choice(normal), rng.choice(normal)
        if type_signature(a) != type_signature(b) or is_orientable(a) != is_orientable(b):
            continue
        same = class_of[a.key_string] == class_of[b.key_string]
        assert (find_isomorphism(a, b) is not None) == same
        assert (oracle(a, b) is not None) == same
        checked += 1
