import random

import pytest

from hecketrace import coxeter as cx
from hecketrace.braid import parse_braid, random_word
from hecketrace.hecke import (HeckeElem, LevelError, PrimedFactor, ScrambleMask, apply_letters,
                              from_primed_coords, g_tail, mul, mul_gen, pi_letters, pi_map,
                              primed_basis_table, primed_element, primed_letters,
                              primed_product, scrambled_t, split_table, t_prime,
                              to_primed_coords)
from hecketrace.suites import random_hecke
from hecketrace.symbolic import ONE, Q, SCQ, SQ, RatFun, q, substitute


def _at_one(h):
    return h.map_coeffs(lambda c: substitute(c, {SQ: 1, SCQ: 1}))


def test_quadratic_relations():
    one = HeckeElem.one(3)
    t = pi_letters([(0, 1)], 3)
    g1 = pi_letters([(1, 1)], 3)
    assert t * t == t.scale(Q - 1) + one.scale(Q)
    assert g1 * g1 == g1.scale(q - 1) + one.scale(q)
    assert t * pi_letters([(0, -1)], 3) == one
    assert g1 * pi_letters([(1, -1)], 3) == one


def test_braid_relations():
    assert pi_letters([(0, 1), (1, 1), (0, 1), (1, 1)], 2) == \
        pi_letters([(1, 1), (0, 1), (1, 1), (0, 1)], 2)
    assert pi_letters([(1, 1), (2, 1), (1, 1)], 3) == pi_letters([(2, 1), (1, 1), (2, 1)], 3)
    assert pi_letters([(0, 1), (2, 1)], 3) == pi_letters([(2, 1), (0, 1)], 3)


def test_basis_product_along_reduced_words():
    for w in cx.enumerate_group(3):
        assert pi_letters([(g, 1) for g in cx.reduced_word(w)], 3) == HeckeElem.basis(w)


def test_group_algebra_limit():
    group = cx.enumerate_group(3)
    rng = random.Random(3)
    for _ in range(40):
        u, v = rng.choice(group), rng.choice(group)
        prod = _at_one(HeckeElem.basis(u) * HeckeElem.basis(v))
        assert prod == HeckeElem.basis(cx.mul(u, v))


def test_associativity_and_sides(rng):
    for _ in range(15):
        n = rng.randint(1, 3)
        a, b, c = (random_hecke(rng, n) for _ in range(3))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        gen = rng.randrange(n)
        assert mul_gen(mul_gen(a, gen, 1, "left"), 0, -1, "right") == \
            mul_gen(mul_gen(a, 0, -1, "right"), gen, 1, "left")
        left = mul_gen(a, gen, 1, "left")
        assert left == mul(pi_letters([(gen, 1)], n), a)


def test_pi_of_word_times_inverse(rng):
    for _ in range(50):
        w = random_word(rng, 4, 10)
        assert pi_map(w + w.inverse()) == HeckeElem.one(w.strands)


def test_pi_map_level():
    w = parse_braid("t s1")
    assert pi_map(w, 4).level == 4
    with pytest.raises(LevelError):
        pi_map(w, 1)


def test_level_mismatch():
    with pytest.raises(LevelError):
        HeckeElem.one(2) + HeckeElem.one(3)
    with pytest.raises(LevelError):
        mul_gen(HeckeElem.one(2), 2)


def test_t_prime_is_conjugate_of_t():
    tp = t_prime(2, 3)
    assert tp * tp == tp.scale(Q - 1) + HeckeElem.one(3).scale(Q)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_primed_basis_triangular(n):
    table = primed_basis_table(n)
    assert len(table) == 2 ** n * {1: 1, 2: 2, 3: 6, 4: 24}[n]
    for w, h in table.items():
        lw = cx.length(w)
        assert not h.coefficient(w).is_zero()
        assert all(cx.length(v) < lw for v in h.terms if v != w)


def test_primed_product_matches_element():
    for w in cx.enumerate_group(3):
        factors = [PrimedFactor(i, r) for i, r in enumerate(cx.coset_factors(w), 1)]
        assert primed_product(factors) == primed_element(w)


def test_primed_factor_validation():
    with pytest.raises(LevelError):
        PrimedFactor(1, cx.CosetRep("g", 1))


def test_primed_coordinates_round_trip(rng):
    for _ in range(20):
        n = rng.randint(1, 3)
        h = random_hecke(rng, n, terms=4)
        assert from_primed_coords(to_primed_coords(h), n) == h


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_split_table_reassembles(n):
    for rep, perm in cx.coset_reps(n):
        total = HeckeElem.zero(n)
        for rp, a in split_table(n, rep).items():
            total = total + mul(a.embed(n), pi_letters(primed_letters(rp, n), n))
        assert total == HeckeElem.basis(perm)


def test_g_tail():
    rep = cx.CosetRep("gt", 1)
    lead = pi_letters([(2, 1)], 3)
    assert mul(lead, g_tail(3, rep).embed(3)) == pi_letters(primed_letters(rep, 3), 3)
    with pytest.raises(ValueError):
        g_tail(3, cx.CosetRep("t"))


def test_scramble_masks():
    assert scrambled_t(ScrambleMask(2), 3) == t_prime(2, 3)
    full = ScrambleMask(2, {1, 2})
    assert [s for _, s in full.letters()] == [-1, -1, 1, 1, 1]
    with pytest.raises(ValueError):
        ScrambleMask(1, {2})
    with pytest.raises(LevelError):
        scrambled_t(ScrambleMask(3), 3)


def test_apply_letters_left_is_reversed_product():
    letters = [(0, 1), (1, -1), (2, 1)]
    h = HeckeElem.basis(cx.from_word((1, 2), 3))
    left = apply_letters(h, letters, "left")
    assert left == mul(pi_letters(letters, 3), h)


def test_scale_by_zero_and_coefficients():
    h = HeckeElem.one(2).scale(RatFun(0))
    assert h.is_zero()
    assert HeckeElem.one(2).coefficient(cx.identity(2)) == ONE
