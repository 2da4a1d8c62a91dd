"""Cohomology of (Z_2)^n with coefficients in Z twisted by a sign character.

Cochains are computed in the inhomogeneous bar complex.  A ``k``-cochain is a
vector indexed by ``(g_1, ..., g_k)`` read as a big-endian number in base
``2^n``; group elements are bitmasks multiplied by XOR.
"""

from app import logger
from itertools import product
from typing import List, Optional, Tuple, Union
import numpy as np
from app.settings import settings
from app.core.errors import DimensionError, SizeLimitError, SmithOverflowError
from app.models.bott_matrix import BottMatrix
from app.models.cohomology import CochainComplex, SignCharacter, SmithForm
from app.models.monomorphism import CocycleTable


MODULUS = 2147483647
_LIMIT = 1 << 63


def _rank_limit(extended: bool) -> int:
    return settings.COHOMOLOGY_EXTENDED_RANK if extended else settings.COHOMOLOGY_MAX_RANK


def _check_size(n: int, extended: bool):
    if n < 1:
        raise DimensionError(f"rank {n} must be at least 1")
    limit = _rank_limit(extended)
    if n > limit:
        raise SizeLimitError(f"bar complex limited to rank <= {limit}, got {n}")


def bar_coboundary(n: int, phi: SignCharacter, k: int, extended: bool = False) -> np.ndarray:
    """Matrix of ``C^k -> C^(k+1)``

    ``(d c)(g_1..g_(k+1)) = phi(g_1) c(g_2..) + sum_i (-1)^i c(.., g_i g_(i+1), ..)
    + (-1)^(k+1) c(g_1..g_k)``
    """
    _check_size(n, extended)
    if phi.n != n:
        raise DimensionError(f"character of rank {phi.n} used with rank {n}")
    if k not in (0, 1, 2):
        raise DimensionError(f"coboundary degree {k} outside 0..2")
    order = 1 << n
    matrix = np.zeros((order ** (k + 1), order**k), dtype=np.int64)

    def index(elements) -> int:
        value = 0
        for g in elements:
            value = value * order + g
        return value

    for row, args in enumerate(product(range(order), repeat=k + 1)):
        matrix[row, index(args[1:])] += phi(args[0])
        for i in range(1, k + 1):
            merged = args[: i - 1] + (args[i - 1] ^ args[i],) + args[i + 1 :]
            matrix[row, index(merged)] += -1 if i & 1 else 1
        matrix[row, index(args[:k])] += -1 if (k + 1) & 1 else 1
    return matrix


def cochain_complex(n: int, phi: SignCharacter, extended: bool = False) -> CochainComplex:
    return CochainComplex(
        n, phi, tuple(bar_coboundary(n, phi, k, extended) for k in range(3))
    )


def _check_overflow(work: np.ndarray):
    if work.size and max(abs(int(v)) for v in work.flat) >= _LIMIT:
        raise SmithOverflowError("Smith normal form entry left the signed 64-bit range")


def smith_normal_form(matrix: np.ndarray) -> SmithForm:
    """Smith normal form with unimodular certificates ``U M V = D``

    Pivots are taken at the entry of least absolute value; remainders of the
    row and column reductions become the next pivot until the pivot divides
    every remaining entry.
    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2:
        raise DimensionError("Smith normal form needs a two-dimensional matrix")
    rows, cols = matrix.shape
    work = matrix.astype(object).copy()
    _check_overflow(work)
    left = np.eye(rows, dtype=object)
    right = np.eye(cols, dtype=object)

    def swap_rows(i, j):
        if i != j:
            work[[i, j]] = work[[j, i]]
            left[[i, j]] = left[[j, i]]

    def swap_cols(i, j):
        if i != j:
            work[:, [i, j]] = work[:, [j, i]]
            right[:, [i, j]] = right[:, [j, i]]

    def smallest(t) -> Optional[Tuple[int, int]]:
        best = None
        for i, j in zip(*np.nonzero(work[t:, t:])):
            value = abs(work[t + i, t + j])
            if best is None or value < best[0]:
                best = (value, t + i, t + j)
                if value == 1:
                    break
        return None if best is None else (best[1], best[2])

    t = 0
    while t < min(rows, cols):
        pivot = smallest(t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            if work[t, t] < 0:
                work[t] = -work[t]
                left[t] = -left[t]
            p = work[t, t]
            for r in range(t + 1, rows):
                q = work[r, t] // p
                if q:
                    work[r] -= q * work[t]
                    left[r] -= q * left[t]
            for c in range(t + 1, cols):
                q = work[t, c] // p
                if q:
                    work[:, c] -= q * work[:, t]
                    right[:, c] -= q * right[:, t]
            _check_overflow(work[t:, t:])
            column = [r for r in range(t + 1, rows) if work[r, t]]
            row = [c for c in range(t + 1, cols) if work[t, c]]
            if column or row:
                # a remainder is smaller than the pivot
                candidates = [(abs(work[r, t]), r, t) for r in column]
                candidates += [(abs(work[t, c]), t, c) for c in row]
                _, r, c = min(candidates)
                swap_rows(t, r)
                swap_cols(t, c)
                continue
            stray = next(
                (
                    r
                    for r in range(t + 1, rows)
                    if any(work[r, c] % p for c in range(t + 1, cols))
                ),
                None,
            )
            if stray is None:
                break
            work[t] += work[stray]
            left[t] += left[stray]
        t += 1

    divisors = [int(work[i, i]) for i in range(min(rows, cols)) if work[i, i]]
    form = SmithForm(matrix, work, left, right, divisors)
    logger.debug("Smith form of a %sx%s matrix: %s", rows, cols, divisors)
    return form


def rank_mod_p(matrix: np.ndarray, p: int = MODULUS) -> int:
    """Rank over GF(p); a lower bound for the rank over Q"""
    work = np.mod(np.asarray(matrix, dtype=np.int64), p)
    rows, cols = work.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nonzero = np.nonzero(work[rank:, c])[0]
        if not len(nonzero):
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        inverse = pow(int(work[rank, c]), p - 2, p)
        work[rank] = (work[rank] * inverse) % p
        factors = work[rank + 1 :, c].copy()
        work[rank + 1 :] = (work[rank + 1 :] - np.outer(factors, work[rank]) % p) % p
        rank += 1
    return rank


def h2_of_character(n: int, phi: SignCharacter, extended: bool = False) -> List[int]:
    """Invariant factors of ``H^2`` (a free summand is reported as ``0``)

    Torsion comes from the Smith form of ``d^1``.  The free rank is
    ``|G|^2 - rank d^2 - rank d^1``; a modular rank of ``d^2`` reaching
    ``|G|^2 - rank d^1`` certifies it is zero without an exact elimination.
    """
    d1 = bar_coboundary(n, phi, 1, extended)
    d2 = bar_coboundary(n, phi, 2, extended)
    form = smith_normal_form(d1)
    torsion = [d for d in form.divisors if d > 1]
    bound = d2.shape[1] - form.rank
    rank_d2 = rank_mod_p(d2)
    if rank_d2 != bound:
        logger.debug("Modular rank %s short of %s, computing the exact rank", rank_d2, bound)
        rank_d2 = smith_normal_form(d2).rank
    return sorted(torsion) + [0] * (bound - rank_d2)


def verify_appendix(n: int, extended: bool = False) -> bool:
    """Trivial characters give (Z/2)^n and the others (Z/2)^(n-1)"""
    ok = True
    for phi in SignCharacter.all(n):
        divisors = h2_of_character(n, phi, extended)
        expected = [2] * (n if phi.is_trivial else n - 1)
        if divisors != expected:
            logger.warning("H^2 for character %s is %s, expected %s", phi, divisors, expected)
            ok = False
    return ok


Cochain = Union[np.ndarray, dict]


def _as_vector(n: int, f: Cochain) -> np.ndarray:
    order = 1 << n
    if isinstance(f, dict):
        vector = np.zeros(order * order, dtype=object)
        for (g, h), value in f.items():
            vector[g * order + h] = value
        return vector
    vector = np.asarray(f).astype(object).reshape(-1)
    if vector.shape[0] != order * order:
        raise DimensionError(f"2-cochain needs {order * order} values, got {vector.shape[0]}")
    return vector


def is_coboundary(n: int, phi: SignCharacter, f: Cochain, extended: bool = False) -> Optional[np.ndarray]:
    """A 1-cochain ``l`` with ``d^1 l = f``, or None

    With ``U d V = D`` the system becomes ``D z = U f`` and ``l = V z``.
    """
    d1 = bar_coboundary(n, phi, 1, extended)
    form = smith_normal_form(d1)
    target = form.left @ _as_vector(n, f)
    z = np.zeros(d1.shape[1], dtype=object)
    for i, y in enumerate(target):
        d = form.diagonal[i, i] if i < min(form.diagonal.shape) else 0
        if d:
            if y % d:
                return None
            z[i] = y // d
        elif y:
            return None
    return (form.right @ z).astype(np.int64)


def cocycle_components(matrix: BottMatrix, table: CocycleTable) -> List[Tuple[SignCharacter, np.ndarray]]:
    """Splits ``f_A`` into one Z-valued 2-cocycle per coordinate

    Coordinate ``j`` is acted on by the character whose mask is column ``j`` of ``A``.
    """
    n = matrix.n
    order = 1 << n
    components = []
    for j, column in enumerate(matrix.columns):
        values = np.array(
            [[table.value(a, b)[j] for b in range(order)] for a in range(order)],
            dtype=np.int64,
        )
        components.append((SignCharacter(n, column), values))
    return components
