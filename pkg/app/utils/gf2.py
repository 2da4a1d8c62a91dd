"""GF(2) linear algebra on int bitsets.

A matrix is a list of row bitmasks; bit ``j`` of ``rows[i]`` is the entry in
row ``i``, column ``j``.
"""

from typing import List, Optional, Sequence


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over GF(2) via Gaussian elimination"""
    work = list(rows)
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def gf2_reduce(vec: int, basis: Sequence[int]) -> int:
    """Reduces ``vec`` against an echelon basis (see ``gf2_echelon``)"""
    for row in basis:
        if vec & (row & -row):
            vec ^= row
    return vec


def gf2_echelon(rows: Sequence[int]) -> List[int]:
    """Returns a reduced basis of the row span, one row per distinct lowest bit"""
    basis: List[int] = []
    for row in rows:
        row = gf2_reduce(row, basis)
        if not row:
            continue
        low = row & -row
        basis = [b ^ row if b & low else b for b in basis]
        basis.append(row)
    return basis


def gf2_matmul(left: Sequence[int], right: Sequence[int]) -> List[int]:
    """Row-bitmask product ``left @ right``"""
    result = []
    for row in left:
        acc = 0
        k = 0
        while row:
            if row & 1:
                acc ^= right[k]
            row >>= 1
            k += 1
        result.append(acc)
    return result


def gf2_transpose(rows: Sequence[int], n_cols: int) -> List[int]:
    return [
        sum(((rows[i] >> j) & 1) << i for i in range(len(rows)))
        for j in range(n_cols)
    ]


def gf2_vecmat(vec: int, rows: Sequence[int]) -> int:
    """Row vector times matrix: XOR of the rows selected by ``vec``"""
    acc = 0
    k = 0
    while vec:
        if vec & 1:
            acc ^= rows[k]
        vec >>= 1
        k += 1
    return acc


def gf2_inverse(rows: Sequence[int]) -> Optional[List[int]]:
    """Inverse of a square matrix, or None when it is singular"""
    n = len(rows)
    work = [(rows[i], 1 << i) for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if (work[r][0] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        left, right = work[col]
        for r in range(n):
            if r != col and (work[r][0] >> col) & 1:
                work[r] = (work[r][0] ^ left, work[r][1] ^ right)
    return [right for _, right in work]


__all__ = [
    "gf2_rank",
    "gf2_reduce",
    "gf2_echelon",
    "gf2_matmul",
    "gf2_transpose",
    "gf2_vecmat",
    "gf2_inverse",
]
