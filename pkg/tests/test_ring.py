from itertools import product
from math import comb
import pytest
from app.core.errors import DimensionError, NotNormalFormError, SizeLimitError
from app.core.matrices import enumerate_all, normal_form, type_signature
from app.core.ring import (
    basis,
    bruteforce_isomorphism,
    compose_maps,
    find_isomorphism,
    graded_dimension,
    invert_map,
    is_isomorphism,
    isomorphism_between,
    lemma41_conditions,
    multiply,
    permutation_map,
    relation_image,
    rewrite_depth,
    ring_type_signature,
    unit_diagonal_form,
)
from app.models.bott_matrix import BottMatrix
from app.models.ring_element import GeneratorMap, RingElement
from tests.known_classes import key_matrix


def x(n, *indices):
    """Monomial in 0-based generators"""
    return RingElement.from_subsets(n, [indices])


def random_element(rng, n):
    return RingElement(n, frozenset(m for m in range(1 << n) if rng.random() < 0.4))


def all_invertible(n):
    for rows in product(range(1 << n), repeat=n):
        p = GeneratorMap(n, rows)
        if p.is_invertible():
            yield p


def test_klein_products(klein):
    x1, x2 = RingElement.generator(2, 0), RingElement.generator(2, 1)
    assert multiply(klein, x1, x1) == RingElement.zero(2)
    assert multiply(klein, x2, x2) == x(2, 0, 1)
    assert multiply(klein, x1 + x2, x1 + x2) == x(2, 0, 1)
    assert str(multiply(klein, x2, x2)) == "x1x2"


def test_dimension_mismatch(klein):
    with pytest.raises(DimensionError):
        multiply(klein, RingElement.generator(3, 0), RingElement.generator(2, 0))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ring_axioms(rng, n):
    matrices = list(enumerate_all(n))
    for _ in range(40):
        a = rng.choice(matrices)
        u, v, w = (random_element(rng, n) for _ in range(3))
        assert multiply(a, u, v) == multiply(a, v, u)
        assert multiply(a, multiply(a, u, v), w) == multiply(a, u, multiply(a, v, w))
        assert multiply(a, u, v + w) == multiply(a, u, v) + multiply(a, u, w)
        assert multiply(a, u, RingElement.one(n)) == u


def test_disjoint_monomials_multiply_to_union():
    for a in enumerate_all(4):
        for s, t in product(range(16), repeat=2):
            if s & t:
                continue
            left = RingElement(4, frozenset({s}))
            right = RingElement(4, frozenset({t}))
            assert multiply(a, left, right) == RingElement(4, frozenset({s | t}))


def test_products_stay_homogeneous():
    for a in enumerate_all(4):
        for s, t in product(range(16), repeat=2):
            product_ = multiply(a, RingElement(4, frozenset({s})), RingElement(4, frozenset({t})))
            degree = bin(s).count("1") + bin(t).count("1")
            assert product_.degrees() in ([], [degree])


def test_rewrites_terminate_within_bound():
    for n in range(1, 5):
        for a in enumerate_all(n):
            for mono in range(1 << n):
                for j in range(n):
                    assert rewrite_depth(a, mono, j) <= n


def test_graded_dimension():
    for a in enumerate_all(4):
        assert graded_dimension(a) == [comb(4, k) for k in range(5)]
    assert [str(e) for e in basis(BottMatrix.zero(3), 2)] == ["x1x2", "x1x3", "x2x3"]


def test_relation_image_examples(chain3, full3, shear3):
    assert not relation_image(chain3, full3, shear3, 1)
    identity = GeneratorMap.identity(3)
    assert relation_image(chain3, full3, identity, 2) == x(3, 0, 2)
    for j in range(3):
        assert not relation_image(chain3, chain3, identity, j)


def test_relation_image_rejects_index(chain3):
    with pytest.raises(DimensionError):
        relation_image(chain3, chain3, GeneratorMap.identity(3), 3)


def test_is_isomorphism_examples(klein, chain3, full3, shear3):
    assert is_isomorphism(klein, klein, GeneratorMap.identity(2))
    assert is_isomorphism(chain3, full3, shear3)
    zero = BottMatrix.zero(2)
    assert not any(is_isomorphism(zero, klein, p) for p in all_invertible(2))
    singular = GeneratorMap.from_lists([[1, 1], [0, 0]])
    assert not is_isomorphism(klein, klein, singular)


def test_find_isomorphism_examples(klein, chain3, full3, shear3):
    assert find_isomorphism(klein, klein) == GeneratorMap.identity(2)
    assert find_isomorphism(chain3, full3) == shear3
    assert find_isomorphism(key_matrix(3, "001"), key_matrix(3, "110")) is None


def test_find_isomorphism_requires_normal_form():
    with pytest.raises(NotNormalFormError):
        find_isomorphism(key_matrix(3, "100"), key_matrix(3, "010"))


def test_bruteforce_examples(klein, chain3, full3):
    assert bruteforce_isomorphism(klein, klein) == GeneratorMap.identity(2)
    assert bruteforce_isomorphism(BottMatrix.zero(2), klein) is None
    witness = bruteforce_isomorphism(chain3, full3)
    assert witness is not None and is_isomorphism(chain3, full3, witness)


def test_bruteforce_size_limit():
    with pytest.raises(SizeLimitError):
        bruteforce_isomorphism(BottMatrix.zero(5), BottMatrix.zero(5))


def test_lemma41_examples(chain3, full3, shear3):
    identity = GeneratorMap.identity(3)
    assert lemma41_conditions(chain3, chain3, identity)
    assert lemma41_conditions(chain3, full3, shear3)
    assert not lemma41_conditions(chain3, full3, identity)


def test_search_agrees_with_bruteforce_on_all_pairs(normal_forms):
    for n in (2, 3):
        for a, b in product(normal_forms[n], repeat=2):
            found = find_isomorphism(a, b)
            assert (found is None) == (bruteforce_isomorphism(a, b) is None), (a.key, b.key)
            if found is not None:
                assert is_isomorphism(a, b, found)


def _random_pairs(rng, population, count):
    return [(rng.choice(population), rng.choice(population)) for _ in range(count)]


def test_search_agrees_with_bruteforce_on_random_pairs(normal_forms, rng):
    for a, b in _random_pairs(rng, normal_forms[4], 150):
        assert (find_isomorphism(a, b) is None) == (bruteforce_isomorphism(a, b) is None)


@pytest.mark.slow
def test_search_agrees_with_bruteforce_on_many_pairs(normal_forms, rng):
    for a, b in _random_pairs(rng, normal_forms[4], 1000):
        assert (find_isomorphism(a, b) is None) == (bruteforce_isomorphism(a, b) is None)


def test_witnesses_satisfy_lemma41(normal_forms):
    for n in range(2, 5):
        for a, b in product(normal_forms[n], repeat=2):
            p = find_isomorphism(a, b)
            if p is None:
                continue
            b_prime, p_prime, _ = unit_diagonal_form(a, b, p)
            assert p_prime.has_unit_diagonal()
            assert is_isomorphism(a, b_prime, p_prime)
            assert lemma41_conditions(a, b_prime, p_prime)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruteforce_witnesses_satisfy_lemma41(normal_forms, n):
    for a, b in product(normal_forms[n], repeat=2):
        p = bruteforce_isomorphism(a, b)
        if p is None:
            continue
        b_prime, p_prime, _ = unit_diagonal_form(a, b, p)
        assert p_prime.has_unit_diagonal()
        assert lemma41_conditions(a, b_prime, p_prime)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_isomorphism_is_an_equivalence(normal_forms, n):
    population = normal_forms[n]
    witnesses = {}
    for a, b in product(population, repeat=2):
        p = find_isomorphism(a, b)
        if p is not None:
            witnesses[a, b] = p
    for a in population:
        assert (a, a) in witnesses
    for (a, b), p in witnesses.items():
        assert (b, a) in witnesses
        assert is_isomorphism(b, a, invert_map(p))
        for c in population:
            r = witnesses.get((b, c))
            if r is not None:
                assert (a, c) in witnesses
                assert is_isomorphism(a, c, compose_maps(p, r))


def test_isomorphism_between_arbitrary_matrices():
    for a, b in product(list(enumerate_all(3)), repeat=2):
        p = isomorphism_between(a, b)
        if p is not None:
            assert is_isomorphism(a, b, p)
        assert (p is None) == (isomorphism_between(a, b, brute_force=True) is None)


def test_permutation_map_relates_conjugates():
    for a in enumerate_all(4):
        normal, sigma = normal_form(a)
        assert is_isomorphism(a, normal, permutation_map(sigma))


def test_ring_level_type_matches_matrix_rule():
    for n in range(1, 5):
        for a in enumerate_all(n):
            assert ring_type_signature(a) == type_signature(a)


@pytest.mark.slow
def test_ring_level_type_matches_matrix_rule_five():
    for a in enumerate_all(5):
        assert ring_type_signature(a) == type_signature(a)
