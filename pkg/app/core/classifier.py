import time
from app import logger, __version__
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from os import cpu_count
from typing import Dict, List, Optional, Tuple
from app.settings import settings
from app.core.errors import DimensionError, SizeLimitError
from app.core.matrices import (
    enumerate_all,
    is_normal_form,
    is_orientable,
    normal_form,
    permutation_orbit,
    type_signature,
)
from app.core.ring import Oracle, clear_ring_caches, find_isomorphism
from app.models.bott_matrix import BottMatrix
from app.models.report import ClassEntry, ClassReport
from app.utils.union_find import UnionFind


def _merge_bucket(n: int, keys: List[int], oracle: Oracle = find_isomorphism) -> List[Tuple[int, int]]:
    """Greedy merge of one (type, orientability) bucket of orbit representatives

    Each candidate is compared with one representative per class found so far.
    """
    merges: List[Tuple[int, int]] = []
    class_reps: List[BottMatrix] = []
    for key in keys:
        candidate = BottMatrix.from_key(n, key)
        for rep in class_reps:
            if oracle(rep, candidate) is not None:
                merges.append((rep.key, key))
                break
        else:
            class_reps.append(candidate)
    return merges


def _workers(threads: Optional[int]) -> int:
    threads = settings.THREADS if threads is None else threads
    if threads == 0:
        threads = cpu_count() or 1
    return max(1, threads)


def classify_dimension(
    n: int, threads: Optional[int] = None, oracle: Oracle = find_isomorphism
) -> ClassReport:
    """Partitions all Bott matrices of size ``n`` into diffeomorphism classes"""
    if n < 1:
        raise DimensionError(f"dimension {n} must be at least 1")
    if n > settings.CLASSIFY_MAX_DIM:
        raise SizeLimitError(
            f"classification is limited to n <= {settings.CLASSIFY_MAX_DIM}, got {n}"
        )
    start = time.perf_counter()
    matrices = list(enumerate_all(n))
    logger.info("Classifying %s Bott matrices of size %s", len(matrices), n)

    uf = UnionFind(m.key for m in matrices)
    orbit_of: Dict[int, int] = {}
    for matrix in matrices:
        normal, _ = normal_form(matrix)
        uf.union(matrix.key, normal.key)
        if normal.key in orbit_of:
            continue
        orbit = sorted(m.key for m in permutation_orbit(normal))
        for key in orbit:
            orbit_of[key] = orbit[0]
            uf.union(orbit[0], key)

    buckets: Dict[tuple, List[int]] = defaultdict(list)
    for key in sorted(set(orbit_of.values())):
        matrix = BottMatrix.from_key(n, key)
        buckets[(type_signature(matrix).parts, is_orientable(matrix))].append(key)
    logger.debug("%s orbit representatives in %s buckets", len(orbit_of), len(buckets))

    workers = _workers(threads)
    jobs = [keys for keys in buckets.values() if len(keys) > 1]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_merge_bucket, [n] * len(jobs), jobs, [oracle] * len(jobs)))
    else:
        results = [_merge_bucket(n, keys, oracle) for keys in jobs]
    for merges in results:
        for left, right in merges:
            uf.union(left, right)

    entries = []
    for members in uf.classes().values():
        members.sort()
        first = BottMatrix.from_key(n, members[0])
        orbits: Dict[int, int] = defaultdict(int)
        for key in members:
            if is_normal_form(BottMatrix.from_key(n, key)):
                orbits[orbit_of[key]] += 1
        entries.append(
            ClassEntry(
                rep=first.key_string,
                type=type_signature(first),
                orientable=is_orientable(first),
                member_count=len(members),
                orbit_sizes=[orbits[k] for k in sorted(orbits)],
                members=[BottMatrix.from_key(n, key).key_string for key in members],
            )
        )
    clear_ring_caches()
    elapsed = int((time.perf_counter() - start) * 1000)
    report = ClassReport(n, len(matrices), entries, __version__, elapsed)
    logger.info("Found %s classes of size %s in %sms", len(report.classes), n, elapsed)
    return report
