"""Arithmetic in H*(M(A); Z/2) and the ring-isomorphism search.

The ring of a Bott matrix ``A`` is generated by degree-one classes ``x_j``
subject to ``x_j^2 = x_j * sum_i A^i_j x_i``; every element has a unique
expansion in square-free monomials.
"""

from app import logger
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, FrozenSet, Iterator, List, Optional, Tuple
from app.settings import settings
from app.core.errors import (
    DimensionError,
    NotNormalFormError,
    RelationViolationError,
    SizeLimitError,
)
from app.core.matrices import (
    block_permutations,
    is_normal_form,
    normal_form,
    type_signature,
)
from app.models.bott_matrix import BottMatrix, Permutation, TypeSignature
from app.models.ring_element import GeneratorMap, RingElement
from app.utils.gf2 import gf2_echelon, gf2_matmul, gf2_reduce


Oracle = Callable[[BottMatrix, BottMatrix], Optional[GeneratorMap]]


def _bits(mask: int) -> Iterator[int]:
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


@lru_cache(maxsize=settings.RING_CACHE_SIZE)
def _columns(matrix: BottMatrix) -> Tuple[int, ...]:
    return matrix.columns


@lru_cache(maxsize=settings.RING_CACHE_SIZE)
def _times_generator(matrix: BottMatrix, mono: int, j: int) -> FrozenSet[int]:
    """``x_mono * x_j`` in the square-free basis"""
    bit = 1 << j
    if not mono & bit:
        return frozenset({mono | bit})
    # x_mono x_j = x_mono * sum_i A^i_j x_i, every i < j
    result: set = set()
    for i in _bits(_columns(matrix)[j]):
        result ^= _times_generator(matrix, mono, i)
    return frozenset(result)


@lru_cache(maxsize=settings.RING_CACHE_SIZE)
def rewrite_depth(matrix: BottMatrix, mono: int, j: int) -> int:
    """Number of nested square rewrites needed to reduce ``x_mono * x_j``"""
    if not (mono >> j) & 1:
        return 0
    return 1 + max(
        (rewrite_depth(matrix, mono, i) for i in _bits(_columns(matrix)[j])), default=0
    )


@lru_cache(maxsize=settings.RING_CACHE_SIZE)
def _monomial_product(matrix: BottMatrix, left: int, right: int) -> FrozenSet[int]:
    terms = {left}
    for j in _bits(right):
        step: set = set()
        for mono in terms:
            step ^= _times_generator(matrix, mono, j)
        terms = step
    return frozenset(terms)


def clear_ring_caches():
    """Drops the memoized products of every matrix seen so far"""
    for cached in (_columns, _times_generator, rewrite_depth, _monomial_product):
        cached.cache_clear()


def _check_rank(matrix: BottMatrix, *elements: RingElement):
    for element in elements:
        if element.n != matrix.n:
            raise DimensionError(
                f"element of rank {element.n} used in the ring of a size {matrix.n} matrix"
            )


def multiply(matrix: BottMatrix, u: RingElement, v: RingElement) -> RingElement:
    """Product of ``u`` and ``v`` in the ring of ``matrix``"""
    _check_rank(matrix, u, v)
    result: set = set()
    for left in u.monomials:
        for right in v.monomials:
            result ^= _monomial_product(matrix, left, right)
    return RingElement(matrix.n, frozenset(result))


def square(matrix: BottMatrix, u: RingElement) -> RingElement:
    return multiply(matrix, u, u)


def basis(matrix: BottMatrix, degree: int) -> List[RingElement]:
    """Square-free monomials of the given degree"""
    return [
        RingElement.from_subsets(matrix.n, [subset])
        for subset in combinations(range(matrix.n), degree)
    ]


def graded_dimension(matrix: BottMatrix) -> List[int]:
    return [len(basis(matrix, degree)) for degree in range(matrix.n + 1)]


def _check_shapes(a: BottMatrix, b: BottMatrix, p: GeneratorMap):
    if not a.n == b.n == p.n:
        raise DimensionError(f"dimensions differ: A={a.n}, B={b.n}, P={p.n}")


def _relation(a: BottMatrix, b: BottMatrix, images: List[int], j: int) -> RingElement:
    """Image of ``x_j^2 + x_j * sum_i A^i_j x_i`` given the images of ``x_0..x_j``"""
    n = a.n
    target = RingElement.linear(n, images[j])
    column = 0
    for i in _bits(_columns(a)[j]):
        column ^= images[i]
    return square(b, target) + multiply(b, target, RingElement.linear(n, column))


def relation_image(a: BottMatrix, b: BottMatrix, p: GeneratorMap, j: int) -> RingElement:
    """The ``j``-th defining relation of the ring of ``a`` pushed into the ring of ``b``"""
    _check_shapes(a, b, p)
    if not 0 <= j < a.n:
        raise DimensionError(f"generator {j} outside 0..{a.n - 1}")
    return _relation(a, b, list(p.columns), j)


def is_isomorphism(a: BottMatrix, b: BottMatrix, p: GeneratorMap) -> bool:
    _check_shapes(a, b, p)
    if not p.is_invertible():
        return False
    images = list(p.columns)
    return not any(_relation(a, b, images, j) for j in range(a.n))


def lemma41_conditions(a: BottMatrix, b: BottMatrix, p: GeneratorMap) -> bool:
    """Necessary conditions on a unit-diagonal block-triangular isomorphism

    ``B = PA`` over Z/2, and for all ``i < l`` and every ``j``::

        P^l_j B^i_l = P^i_j B^l_j + P^l_j B^i_j + P^l_j B^l_j B^i_l   (mod 2)
    """
    _check_shapes(a, b, p)
    if tuple(gf2_matmul(p.rows, a.rows)) != b.rows:
        return False
    n = a.n
    for i in range(n):
        for l in range(i + 1, n):
            b_il = b.entry(i, l)
            for j in range(n):
                p_lj = p.entry(l, j)
                left = p_lj & b_il
                right = (
                    (p.entry(i, j) & b.entry(l, j))
                    ^ (p_lj & b.entry(i, j))
                    ^ (p_lj & b.entry(l, j) & b_il)
                )
                if left != right:
                    return False
    return True


def _relabel(b: BottMatrix, p: GeneratorMap, pi: Permutation) -> Tuple[BottMatrix, GeneratorMap]:
    """Renames ``y_i`` as ``y'_pi(i)``: returns ``pi B pi^-1`` and the matching map"""
    rows = [0] * p.n
    for i in range(p.n):
        rows[pi(i)] = p.rows[i]
    return BottMatrix(b.n, b.conjugate(pi)), GeneratorMap(p.n, tuple(rows))


def unit_diagonal_form(
    a: BottMatrix, b: BottMatrix, p: GeneratorMap
) -> Tuple[BottMatrix, GeneratorMap, Permutation]:
    """Relabels the generators of ``b`` inside each block so that ``P`` gets a unit diagonal

    Returns ``(B', P', pi)`` with ``B' = pi B pi^-1``.
    """
    _check_shapes(a, b, p)
    if not is_normal_form(b):
        raise NotNormalFormError(f"matrix {b.key_string} is not in normal form")
    for pi in block_permutations(type_signature(b)):
        inverse = pi.inverse()
        if all(p.entry(inverse(k), k) for k in range(p.n)):
            b_prime, p_prime = _relabel(b, p, pi)
            return b_prime, p_prime, pi
    raise RelationViolationError(
        f"generator map {p.bits} has a singular diagonal block for type {type_signature(b)}"
    )


def _row_candidates(a: BottMatrix, target: int, i: int, block_of: Tuple[int, ...]) -> List[int]:
    """Unit-diagonal rows ``r`` of ``P`` with block support and ``r A = target``"""
    free = [k for k in range(a.n) if k != i and block_of[k] >= block_of[i]]
    candidates = []
    for subset in range(1 << len(free)):
        row = 1 << i
        acc = a.rows[i]
        for position, k in enumerate(free):
            if (subset >> position) & 1:
                row |= 1 << k
                acc ^= a.rows[k]
        if acc == target:
            candidates.append(row)
    return candidates


def find_isomorphism(a: BottMatrix, b: BottMatrix) -> Optional[GeneratorMap]:
    """Searches a ring isomorphism between two matrices in normal form

    Candidates are block-upper-triangular with unit diagonal after a
    within-block relabelling of the generators of ``b``; every row of ``P``
    must satisfy ``B = PA``, which leaves few rows to combine.
    """
    if a.n != b.n:
        raise DimensionError(f"dimensions differ: A={a.n}, B={b.n}")
    for matrix in (a, b):
        if not is_normal_form(matrix):
            raise NotNormalFormError(f"matrix {matrix.key_string} is not in normal form")
    signature = type_signature(a)
    if signature != type_signature(b):
        return None
    block_of = signature.block_of()
    for pi in block_permutations(signature):
        b_prime = BottMatrix(b.n, b.conjugate(pi))
        rows = [_row_candidates(a, b_prime.rows[i], i, block_of) for i in range(a.n)]
        if not all(rows):
            continue
        for choice in product(*rows):
            p_prime = GeneratorMap(a.n, tuple(choice))
            if not p_prime.is_invertible() or not lemma41_conditions(a, b_prime, p_prime):
                continue
            if not is_isomorphism(a, b_prime, p_prime):
                continue
            p = GeneratorMap(a.n, tuple(choice[pi(i)] for i in range(a.n)))
            if not is_isomorphism(a, b, p):
                raise RelationViolationError(
                    f"relabelled witness {p.bits} fails for {a.key_string} -> {b.key_string}"
                )
            logger.debug(
                "Isomorphism %s -> %s found with P=%s", a.key_string, b.key_string, p.bits
            )
            return p
    return None


def bruteforce_isomorphism(
    a: BottMatrix, b: BottMatrix, limit: Optional[int] = None
) -> Optional[GeneratorMap]:
    """Exhaustive search over GL(n; Z/2), column by column

    Relation ``j`` only involves the images of ``x_0..x_j``, so each partial
    assignment is checked as soon as its last column is chosen.
    """
    if a.n != b.n:
        raise DimensionError(f"dimensions differ: A={a.n}, B={b.n}")
    limit = settings.BRUTE_FORCE_MAX_DIM if limit is None else limit
    if a.n > limit:
        raise SizeLimitError(f"exhaustive search limited to n <= {limit}, got {a.n}")
    n = a.n
    images: List[int] = []

    def extend(echelon: List[int]) -> bool:
        j = len(images)
        if j == n:
            return True
        for column in range(1, 1 << n):
            if not gf2_reduce(column, echelon):
                continue
            images.append(column)
            if not _relation(a, b, images, j) and extend(gf2_echelon(echelon + [column])):
                return True
            images.pop()
        return False

    if not extend([]):
        return None
    return GeneratorMap.from_columns(n, images)


def compose_maps(first: GeneratorMap, second: GeneratorMap) -> GeneratorMap:
    """Witness of ``A -> C`` from witnesses of ``A -> B`` and ``B -> C``"""
    return first.then(second)


def invert_map(p: GeneratorMap) -> GeneratorMap:
    """Witness of ``B -> A`` from a witness of ``A -> B``"""
    return p.inverse()


def _degree_two_index(n: int) -> dict:
    return {(1 << i) | (1 << j): k for k, (i, j) in enumerate(combinations(range(n), 2))}


def ring_type_signature(matrix: BottMatrix) -> TypeSignature:
    """The type computed inside the ring by brute force over degree-one elements

    Stage ``k`` collects the degree-one ``u`` whose square lies in the ideal
    generated by the elements found at earlier stages.
    """
    n = matrix.n
    index = _degree_two_index(n)

    def coordinates(element: RingElement) -> int:
        return sum(1 << index[mono] for mono in element.monomials)

    generators = [RingElement.generator(n, m) for m in range(n)]
    squares = {u: coordinates(square(matrix, RingElement.linear(n, u))) for u in range(1, 1 << n)}
    found: List[int] = []
    parts: List[int] = []
    while len(found) < n:
        ideal = gf2_echelon(
            [
                coordinates(multiply(matrix, RingElement.linear(n, w), x))
                for w in found
                for x in generators
            ]
        )
        stage = [u for u, sq in squares.items() if not gf2_reduce(sq, ideal)]
        span = gf2_echelon(found + stage)
        grown = len(span) - len(found)
        if grown == 0:
            raise RelationViolationError(f"type computation stalled for {matrix.key_string}")
        parts.append(grown)
        found = span
    return TypeSignature(tuple(parts))



def permutation_map(sigma: Permutation) -> GeneratorMap:
    """Ring isomorphism ``A -> sigma A sigma^-1`` sending ``x_i`` to ``x_sigma(i)``"""
    rows = [0] * sigma.n
    for i in range(sigma.n):
        rows[sigma(i)] |= 1 << i
    return GeneratorMap(sigma.n, tuple(rows))


def isomorphism_between(
    a: BottMatrix, b: BottMatrix, brute_force: bool = False, limit: Optional[int] = None
) -> Optional[GeneratorMap]:
    """Witness for two arbitrary matrices

    The structured search runs on the normal forms and the witness is carried
    back through the normalizing permutations.
    """
    if brute_force:
        return bruteforce_isomorphism(a, b, limit)
    normal_a, sigma_a = normal_form(a)
    normal_b, sigma_b = normal_form(b)
    p = find_isomorphism(normal_a, normal_b)
    if p is None:
        return None
    return permutation_map(sigma_a).then(p).then(permutation_map(sigma_b).inverse())
