"""The fundamental group Gamma(A) of a real Bott manifold.

``Gamma(A)`` is generated by the motions ``s_i(x) = D_i x + e_i / 2`` where
``D_i`` is diagonal with entries ``(-1)^(A^i_k)``.  Every element is a unique
word ``s_1^a_1 ... s_n^a_n``.
"""

from app import logger
from itertools import product
from typing import List, Optional, Sequence, Tuple
import numpy as np
import sympy
from app.core.errors import (
    DimensionError,
    ExtensionIdentityError,
    LatticeIndexError,
    NotInGroupError,
    RelationViolationError,
)
from app.core.ring import is_isomorphism, unit_diagonal_form
from app.models.bott_matrix import BottMatrix
from app.models.monomorphism import CocycleTable, ExtensionVerdict, MonomorphismData
from app.models.motion import AffineMotion, GroupWord
from app.models.ring_element import GeneratorMap
from app.utils.gf2 import gf2_inverse, gf2_vecmat


def _check_word(matrix: BottMatrix, *words: GroupWord):
    for word in words:
        if word.n != matrix.n:
            raise DimensionError(f"word of length {word.n} used in Gamma of size {matrix.n}")


def generator_motion(matrix: BottMatrix, i: int, power: int = 1) -> AffineMotion:
    """``s_i^power``; the linear part of ``s_i`` fixes ``e_i``"""
    if not 0 <= i < matrix.n:
        raise DimensionError(f"generator {i} outside 0..{matrix.n - 1}")
    flip = power & 1
    signs = tuple(-1 if flip and matrix.entry(i, k) else 1 for k in range(matrix.n))
    translation = tuple(power if k == i else 0 for k in range(matrix.n))
    return AffineMotion(matrix.n, signs, translation)


def compose_motions(first: AffineMotion, second: AffineMotion) -> AffineMotion:
    return first.compose(second)


def evaluate_word(matrix: BottMatrix, word: GroupWord) -> AffineMotion:
    _check_word(matrix, word)
    motion = AffineMotion.identity(matrix.n)
    for i, a in enumerate(word.exponents):
        if a:
            motion = motion.compose(generator_motion(matrix, i, a))
    return motion


def _twist(matrix: BottMatrix, exponents: Sequence[int], j: int) -> int:
    """``(-1)^(sum_{k<j} q_k A^k_j)``"""
    parity = 0
    for k in range(j):
        parity ^= (exponents[k] & 1) & matrix.entry(k, j)
    return -1 if parity else 1


def word_multiply(matrix: BottMatrix, first: GroupWord, second: GroupWord) -> GroupWord:
    """Normal form of ``first * second``

    Moving ``s_k^q_k`` to the left past ``s_j^p_j`` flips ``p_j`` when ``A^k_j = 1``.
    """
    _check_word(matrix, first, second)
    p, q = first.exponents, second.exponents
    return GroupWord(
        matrix.n, tuple(_twist(matrix, q, j) * p[j] + q[j] for j in range(matrix.n))
    )


def word_inverse(matrix: BottMatrix, word: GroupWord) -> GroupWord:
    _check_word(matrix, word)
    q = word.exponents
    return GroupWord(matrix.n, tuple(-_twist(matrix, q, j) * q[j] for j in range(matrix.n)))


def word_power(matrix: BottMatrix, word: GroupWord, k: int) -> GroupWord:
    base = word if k >= 0 else word_inverse(matrix, word)
    result = GroupWord.identity(matrix.n)
    for _ in range(abs(k)):
        result = word_multiply(matrix, result, base)
    return result


def word_of_motion(matrix: BottMatrix, motion: AffineMotion) -> GroupWord:
    """Inverse of ``evaluate_word``

    The translation of ``s_1^a_1 ... s_n^a_n`` has coordinate ``k`` equal to
    ``eps_k a_k / 2`` where ``eps_k`` only depends on ``a_1 .. a_(k-1)``, so the
    exponents are solved from the first coordinate upwards.
    """
    if motion.n != matrix.n:
        raise DimensionError(f"motion of R^{motion.n} tested against Gamma of size {matrix.n}")
    exponents: List[int] = []
    for k, t in enumerate(motion.translation2):
        exponents.append(_twist(matrix, exponents + [0], k) * t)
    word = GroupWord(matrix.n, tuple(exponents))
    if evaluate_word(matrix, word) != motion:
        raise NotInGroupError(
            f"motion with signs {motion.signs} and translation {motion.translation2} is not in Gamma"
        )
    return word


def freeness_check(matrix: BottMatrix, bound: int) -> bool:
    """No non-identity word with exponents in ``[-bound, bound]`` has a fixed point"""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    for exponents in product(range(-bound, bound + 1), repeat=matrix.n):
        if not any(exponents):
            continue
        motion = evaluate_word(matrix, GroupWord(matrix.n, exponents))
        if motion.has_fixed_point():
            logger.debug("Word %s fixes a point of R^%s", exponents, matrix.n)
            return False
    return True


def commutation_relations_hold(matrix: BottMatrix) -> bool:
    """``s_l s_i = s_i s_l^((-1)^(A^i_l))`` for all ``i < l`` and ``s_j^2 = e_j``"""
    n = matrix.n
    for j in range(n):
        square = generator_motion(matrix, j).compose(generator_motion(matrix, j))
        if square != AffineMotion.translation(tuple(int(k == j) for k in range(n))):
            return False
    for i in range(n):
        s_i = generator_motion(matrix, i)
        for l in range(i + 1, n):
            left = generator_motion(matrix, l).compose(s_i)
            right = s_i.compose(generator_motion(matrix, l, -1 if matrix.entry(i, l) else 1))
            if left != right:
                return False
    return True


def reflection_motion(n: int, j: int) -> AffineMotion:
    """The involution ``r_j`` negating coordinate ``j``"""
    if not 0 <= j < n:
        raise DimensionError(f"coordinate {j} outside 0..{n - 1}")
    return AffineMotion(n, tuple(-1 if k == j else 1 for k in range(n)), (0,) * n)


def reflection_relations_hold(matrix: BottMatrix) -> bool:
    """``r_j`` commutes with ``s_i`` for ``i != j`` and conjugates ``s_j`` to its inverse"""
    n = matrix.n
    for j in range(n):
        r = reflection_motion(n, j)
        for i in range(n):
            s = generator_motion(matrix, i)
            right = (s if i != j else s.inverse()).compose(r)
            if r.compose(s) != right:
                return False
    return True


def lift(matrix: BottMatrix, alpha: int) -> AffineMotion:
    return evaluate_word(matrix, GroupWord.from_mask(matrix.n, alpha))


def split_element(matrix: BottMatrix, motion: AffineMotion) -> Tuple[Tuple[int, ...], int]:
    """Coordinates ``(l, alpha)`` of ``motion = t(l) o lift(alpha)``"""
    alpha = word_of_motion(matrix, motion).parity
    rest = motion.compose(lift(matrix, alpha).inverse())
    return rest.lattice_vector(), alpha


def _vec_add(*vectors: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(sum(parts)) for parts in zip(*vectors))


def _lattice_points(n: int, full: bool) -> List[Tuple[int, ...]]:
    if full:
        return list(product((0, 1), repeat=n))
    return [(0,) * n] + [tuple(int(k == j) for k in range(n)) for j in range(n)]


def extension_cocycle(matrix: BottMatrix, full_cube: bool = False) -> CocycleTable:
    """The 2-cocycle of ``Gamma(A)`` for the section ``alpha -> s_1^a_1 ... s_n^a_n``

    The reconstructed law ``(l, a)(m, b) = (l + phi(a) m + f(a, b), ab)`` is
    compared with composition of motions on the lattice points ``0, e_1 .. e_n``
    (every point of ``{0, 1}^n`` when ``full_cube`` is set).  Both sides are
    affine in the lattice arguments, so the affine basis is enough.
    """
    n = matrix.n
    size = 1 << n
    lifts = [lift(matrix, alpha) for alpha in range(size)]
    characters = tuple(m.signs for m in lifts)
    values = []
    for alpha in range(size):
        row = []
        for beta in range(size):
            motion = lifts[alpha].compose(lifts[beta]).compose(lifts[alpha ^ beta].inverse())
            row.append(motion.lattice_vector())
        values.append(tuple(row))
    table = CocycleTable(n, tuple(values), characters)

    zero = (0,) * n
    for alpha in range(size):
        if table.value(0, alpha) != zero or table.value(alpha, 0) != zero:
            raise ExtensionIdentityError(f"cocycle is not normalized at {alpha}")
    for alpha, beta, gamma in product(range(size), repeat=3):
        total = _vec_add(
            table.act(alpha, table.value(beta, gamma)),
            tuple(-v for v in table.value(alpha ^ beta, gamma)),
            table.value(alpha, beta ^ gamma),
            tuple(-v for v in table.value(alpha, beta)),
        )
        if any(total):
            raise ExtensionIdentityError(
                f"cocycle condition fails at ({alpha}, {beta}, {gamma})"
            )
    points = _lattice_points(n, full_cube)
    for alpha, beta in product(range(size), repeat=2):
        for ell, m in product(points, repeat=2):
            actual = AffineMotion.translation(ell).compose(lifts[alpha]).compose(
                AffineMotion.translation(m).compose(lifts[beta])
            )
            law = _vec_add(ell, table.act(alpha, m), table.value(alpha, beta))
            expected = AffineMotion.translation(law).compose(lifts[alpha ^ beta])
            if actual != expected:
                raise ExtensionIdentityError(
                    f"group law differs from composition at alpha={alpha}, beta={beta}"
                )
    logger.debug("Extension cocycle of %s verified", matrix.key_string)
    return table


def build_rho(a: BottMatrix, b: BottMatrix, p: GeneratorMap) -> MonomorphismData:
    """The monomorphism ``Gamma(B) -> Gamma(A)`` with ``rho(t_r) = s_1^P^r_1 ... s_n^P^r_n``"""
    if not is_isomorphism(a, b, p):
        raise RelationViolationError(f"P={p.bits} is not a ring isomorphism")
    if not p.has_unit_diagonal():
        b, p, pi = unit_diagonal_form(a, b, p)
        logger.debug("Relabelled target generators by %s for a unit diagonal", pi.image)
    n = a.n
    images = tuple(GroupWord(n, tuple(p.entry(r, j) for j in range(n))) for r in range(n))

    for i in range(n):
        for l in range(i + 1, n):
            left = word_multiply(a, images[l], images[i])
            twisted = word_inverse(a, images[l]) if b.entry(i, l) else images[l]
            right = word_multiply(a, images[i], twisted)
            if left != right:
                raise RelationViolationError(
                    f"rho breaks t_{l + 1} t_{i + 1} = t_{i + 1} t_{l + 1}^+-1 for P={p.bits}"
                )

    columns = []
    for i in range(n):
        squared = evaluate_word(a, word_power(a, images[i], 2))
        columns.append(squared.lattice_vector())
    q = sympy.Matrix(n, n, lambda r, c: columns[c][r])
    det_q = int(q.det())
    if det_q % 2 == 0:
        raise LatticeIndexError(f"det Q = {det_q} is even for P={p.bits}")
    det_p = int(sympy.Matrix(p.to_lists()).det())
    if det_q != det_p:
        raise LatticeIndexError(f"det Q = {det_q} differs from det P = {det_p}")
    for i in range(n):
        for j in range(n):
            if not b.entry(i, j) and q[j, i] != p.entry(i, j):
                raise LatticeIndexError(f"Q and P differ at ({i + 1}, {j + 1})")
    q_tilde = q.adjugate()

    lambdas = []
    for alpha in range(1 << n):
        word = GroupWord.identity(n)
        for r in range(n):
            if (alpha >> r) & 1:
                word = word_multiply(a, word, images[r])
        ell, image = split_element(a, evaluate_word(a, word))
        if image != gf2_vecmat(alpha, p.rows):
            raise RelationViolationError(f"rho_bar differs from P mod 2 at alpha={alpha}")
        lambdas.append(ell)

    data = MonomorphismData(
        a=a,
        b=b,
        p=p,
        images=images,
        q=tuple(tuple(int(v) for v in q.row(r)) for r in range(n)),
        det_q=det_q,
        q_tilde=tuple(tuple(int(v) for v in q_tilde.row(r)) for r in range(n)),
        lambdas=tuple(lambdas),
        rho_bar=p,
    )
    logger.debug("Built rho for %s -> %s with det Q = %s", a.key_string, b.key_string, det_q)
    return data


def check_extension_identities(
    rho: MonomorphismData,
    cocycle_a: Optional[CocycleTable] = None,
    cocycle_b: Optional[CocycleTable] = None,
    full_cube: bool = False,
) -> ExtensionVerdict:
    """Evaluates every identity comparing the extensions of ``Gamma(A)`` and ``Gamma(B)``"""
    n = rho.n
    size = 1 << n
    f_a = cocycle_a or extension_cocycle(rho.a)
    f_b = cocycle_b or extension_cocycle(rho.b)
    q = np.array(rho.q, dtype=np.int64)
    q_tilde = np.array(rho.q_tilde, dtype=np.int64)
    lambdas = [np.array(v, dtype=np.int64) for v in rho.lambdas]
    bar = [rho.rho_bar_of(alpha) for alpha in range(size)]
    verdict = ExtensionVerdict()

    def phi(table: CocycleTable, alpha: int) -> np.ndarray:
        return np.diag(np.array(table.character(alpha), dtype=np.int64))

    def value(table: CocycleTable, alpha: int, beta: int) -> np.ndarray:
        return np.array(table.value(alpha, beta), dtype=np.int64)

    verdict.record(
        "integrality",
        bool((q_tilde @ q == rho.det_q * np.eye(n, dtype=np.int64)).all()),
        "adjugate times Q is not det Q times the identity",
    )
    for alpha in range(size):
        ok = (phi(f_b, alpha) @ q_tilde == q_tilde @ phi(f_a, bar[alpha])).all()
        verdict.record("commutation", bool(ok), f"alpha={alpha}")
    mu = [q_tilde @ v for v in lambdas]
    for alpha, beta in product(range(size), repeat=2):
        left = q @ value(f_b, alpha, beta)
        right = (
            lambdas[alpha]
            + phi(f_a, bar[alpha]) @ lambdas[beta]
            - lambdas[alpha ^ beta]
            + value(f_a, bar[alpha], bar[beta])
        )
        verdict.record("coin", bool((left == right).all()), f"alpha={alpha}, beta={beta}")
        coboundary = mu[alpha] + phi(f_b, alpha) @ mu[beta] - mu[alpha ^ beta]
        ok = (
            rho.det_q * value(f_b, alpha, beta)
            == coboundary + q_tilde @ value(f_a, bar[alpha], bar[beta])
        ).all()
        verdict.record("coboundary", bool(ok), f"alpha={alpha}, beta={beta}")

    inverse_rows = gf2_inverse(rho.rho_bar.rows)
    bijective = inverse_rows is not None and rho.det_q != 0
    verdict.record("t_isomorphism", bijective, "T is not bijective")
    if bijective:
        unbar = [gf2_vecmat(alpha, inverse_rows) for alpha in range(size)]
        points = [np.array(v, dtype=np.int64) for v in _lattice_points(n, full_cube)]

        def law_a(x, y):
            (ell, alpha), (m, beta) = x, y
            return ell + phi(f_a, alpha) @ m + value(f_a, alpha, beta), alpha ^ beta

        def law_b(x, y):
            (ell, alpha), (m, beta) = x, y
            twisted = q_tilde @ value(f_a, bar[alpha], bar[beta])
            return ell + phi(f_b, alpha) @ m + twisted, alpha ^ beta

        def transform(x):
            ell, alpha = x
            return q_tilde @ ell, unbar[alpha]

        for alpha, beta in product(range(size), repeat=2):
            for ell, m in product(points, repeat=2):
                x, y = (ell, alpha), (m, beta)
                left = transform(law_a(x, y))
                right = law_b(transform(x), transform(y))
                ok = left[1] == right[1] and (left[0] == right[0]).all()
                verdict.record("t_isomorphism", bool(ok), f"alpha={alpha}, beta={beta}")
    return verdict


def verify_extension_identities(
    a: BottMatrix,
    b: BottMatrix,
    rho: MonomorphismData,
    strict: bool = False,
    full_cube: bool = False,
) -> bool:
    if rho.a != a or rho.b.n != b.n:
        raise DimensionError("monomorphism data does not belong to these matrices")
    verdict = check_extension_identities(rho, full_cube=full_cube)
    if not verdict.holds:
        logger.warning("Extension identities failed: %s", verdict.failures)
        if strict:
            failed = ", ".join(name for name, ok in verdict.checks.items() if not ok)
            raise ExtensionIdentityError(f"identities failed: {failed}")
    return verdict.holds
