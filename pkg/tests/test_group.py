from itertools import product
import pytest
from app.core.errors import DimensionError, NotInGroupError, RelationViolationError
from app.core.group import (
    build_rho,
    check_extension_identities,
    commutation_relations_hold,
    compose_motions,
    evaluate_word,
    extension_cocycle,
    freeness_check,
    generator_motion,
    reflection_motion,
    reflection_relations_hold,
    split_element,
    verify_extension_identities,
    word_inverse,
    word_multiply,
    word_of_motion,
    word_power,
)
from app.core.matrices import enumerate_all
from app.core.ring import find_isomorphism
from app.models.bott_matrix import BottMatrix
from app.models.motion import AffineMotion, GroupWord
from app.models.ring_element import GeneratorMap


def random_word(rng, n, spread=3):
    return GroupWord(n, tuple(rng.randint(-spread, spread) for _ in range(n)))


def isomorphic_pairs(normal_forms, n):
    for a, b in product(normal_forms[n], repeat=2):
        p = find_isomorphism(a, b)
        if p is not None:
            yield a, b, p


def test_generators_of_klein(klein):
    s1 = generator_motion(klein, 0)
    s2 = generator_motion(klein, 1)
    assert s1 == AffineMotion(2, (1, -1), (1, 0))
    assert s2 == AffineMotion(2, (1, 1), (0, 1))
    assert compose_motions(s1, s1) == AffineMotion.translation((1, 0))
    assert compose_motions(s2, s1) == compose_motions(s1, generator_motion(klein, 1, -1))


def test_generator_index(klein):
    with pytest.raises(DimensionError):
        generator_motion(klein, 2)


def test_word_products_of_klein(klein):
    s1 = GroupWord.generator(2, 0)
    s2 = GroupWord.generator(2, 1)
    assert word_multiply(klein, s1, s1).exponents == (2, 0)
    assert word_multiply(klein, s2, s1).exponents == (1, -1)
    assert str(word_multiply(klein, s2, s1)) == "s1 s2^-1"


def test_word_of_motion_examples(klein):
    motion = compose_motions(generator_motion(klein, 1), generator_motion(klein, 0))
    assert word_of_motion(klein, motion).exponents == (1, -1)
    assert word_of_motion(klein, AffineMotion.identity(2)) == GroupWord.identity(2)


@pytest.mark.parametrize(
    "motion",
    [AffineMotion(2, (-1, 1), (0, 0)), AffineMotion(2, (1, 1), (1, 0)), AffineMotion(2, (1, -1), (0, 1))],
)
def test_motions_outside_the_group(klein, motion):
    with pytest.raises(NotInGroupError):
        word_of_motion(klein, motion)


def test_words_agree_with_motions(rng):
    for n in range(1, 5):
        matrices = list(enumerate_all(n))
        for _ in range(60):
            a = rng.choice(matrices)
            u, v = random_word(rng, n), random_word(rng, n)
            product_ = word_multiply(a, u, v)
            assert evaluate_word(a, product_) == evaluate_word(a, u).compose(evaluate_word(a, v))
            assert word_of_motion(a, evaluate_word(a, u)) == u
            assert word_multiply(a, u, word_inverse(a, u)) == GroupWord.identity(n)
            assert evaluate_word(a, word_inverse(a, u)) == evaluate_word(a, u).inverse()


@pytest.mark.slow
def test_words_agree_with_motions_on_many_pairs(rng):
    matrices = [a for n in range(1, 5) for a in enumerate_all(n)]
    for _ in range(10000):
        a = rng.choice(matrices)
        u, v = random_word(rng, a.n, 5), random_word(rng, a.n, 5)
        expected = evaluate_word(a, u).compose(evaluate_word(a, v))
        assert evaluate_word(a, word_multiply(a, u, v)) == expected


def test_word_power(klein):
    s2 = GroupWord.generator(2, 1)
    assert word_power(klein, s2, 3).exponents == (0, 3)
    assert word_power(klein, s2, -2).exponents == (0, -2)
    w = GroupWord(2, (1, 1))
    assert evaluate_word(klein, word_power(klein, w, 2)).is_lattice_translation()


def test_freeness(klein):
    assert freeness_check(klein, 3)
    for n in range(1, 4):
        for a in enumerate_all(n):
            assert freeness_check(a, 3)
    for a in enumerate_all(4):
        assert freeness_check(a, 2)
    with pytest.raises(ValueError):
        freeness_check(klein, 0)


def test_reflection_is_not_free():
    r = reflection_motion(2, 0)
    assert r.has_fixed_point()
    assert r.compose(r).is_identity()


def test_relations_hold_everywhere():
    for n in range(1, 5):
        for a in enumerate_all(n):
            assert commutation_relations_hold(a)
            assert reflection_relations_hold(a)


def test_split_element(klein, rng):
    for _ in range(30):
        word = random_word(rng, 2)
        motion = evaluate_word(klein, word)
        ell, alpha = split_element(klein, motion)
        assert alpha == word.parity
        lifted = evaluate_word(klein, GroupWord.from_mask(2, alpha))
        assert AffineMotion.translation(ell).compose(lifted) == motion


def test_cocycle_of_the_torus():
    table = extension_cocycle(BottMatrix.zero(2))
    assert table.value(1, 1) == (1, 0)
    assert table.value(2, 2) == (0, 1)
    assert table.value(1, 2) == (0, 0)
    assert table.character(3) == (1, 1)


def test_cocycle_of_klein(klein):
    table = extension_cocycle(klein)
    assert table.value(2, 1) == (0, 1)
    assert table.value(1, 2) == (0, 0)
    assert table.character(1) == (1, -1)
    assert table.character(2) == (1, 1)


def test_cocycles_hold_on_the_full_cube():
    for a in enumerate_all(3):
        extension_cocycle(a, full_cube=True)


def test_rho_of_the_identity(klein):
    rho = build_rho(klein, klein, GeneratorMap.identity(2))
    assert [w.exponents for w in rho.images] == [(1, 0), (0, 1)]
    assert rho.q == ((1, 0), (0, 1))
    assert rho.det_q == 1
    assert rho.is_onto


def test_rho_of_a_shear(chain3, full3, shear3):
    rho = build_rho(chain3, full3, shear3)
    assert [str(w) for w in rho.images] == ["s1 s2", "s2", "s3"]
    assert rho.q == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert rho.det_q == 1
    assert rho.lambdas[0] == (0, 0, 0)
    assert verify_extension_identities(chain3, full3, rho, strict=True)


def test_rho_rejects_a_false_map(chain3, full3):
    with pytest.raises(RelationViolationError):
        build_rho(chain3, full3, GeneratorMap.identity(3))


def test_rho_invariants_on_all_pairs(normal_forms):
    for n in (2, 3, 4):
        for a, b, p in isomorphic_pairs(normal_forms, n):
            rho = build_rho(a, b, p)
            assert rho.det_q % 2 == 1
            for i, j in product(range(n), repeat=2):
                if not rho.b.entry(i, j):
                    assert rho.q[j][i] == rho.p.entry(i, j)


def test_extension_identities_on_all_pairs_of_size_three(normal_forms):
    for a, b, p in isomorphic_pairs(normal_forms, 3):
        verdict = check_extension_identities(build_rho(a, b, p))
        assert verdict.holds, verdict.failures
        assert set(verdict.checks) == {
            "integrality",
            "commutation",
            "coin",
            "coboundary",
            "t_isomorphism",
        }


def test_extension_identities_on_sampled_pairs(normal_forms, rng):
    pairs = list(isomorphic_pairs(normal_forms, 4))
    for a, b, p in rng.sample(pairs, min(8, len(pairs))):
        assert verify_extension_identities(a, b, build_rho(a, b, p), strict=True)


@pytest.mark.slow
def test_extension_identities_on_the_full_cube(normal_forms):
    for a, b, p in isomorphic_pairs(normal_forms, 4):
        rho = build_rho(a, b, p)
        assert verify_extension_identities(a, b, rho, strict=True, full_cube=True)
