import random
from fractions import Fraction

import pytest

from demcrystal.characters import (
    F_fermionic,
    ch_path_bruteforce,
    ch_via_f,
    demazure_ch,
    demazure_ch_bruteforce,
    demazure_ch_oracle,
    f_bosonic,
    f_fermionic,
    f_rank_reduction,
    f_recursive,
    is_weakly_admissible,
    principal_character_check,
    real_character_check,
    resolve_mu_nu,
    sanderson_identity_check,
)
from demcrystal.qlaurent import ONE, ZERO, gaussian, qpow, zpow
from demcrystal.weights import Weight

WEIGHTS = [
    Weight(s, t, 0)
    for s in range(0, 4)
    for t in range(0, 4 - s)
    if s + t >= 1
]


def admissible_pairs(k, L, c_bound_extra=1):
    for b in range(-L * k, L * k + 1):
        for c in range(b - k, b + k + 1, 2):
            if abs(c) <= (L + c_bound_extra) * k:
                yield b, c


def test_f_anchors():
    assert f_recursive(1, 1, 1, 0) == ONE
    assert f_recursive(1, 1, 1, 2) == qpow(Fraction(1, 2))
    assert f_recursive(1, 0, 0, 1) == ONE
    assert f_recursive(1, 0, 0, 5) == ZERO  # inadmissible pair
    assert f_recursive(2, 2, 0, 0) == ONE + 2 * qpow(1)


def test_f_support_and_parity():
    for k in (1, 2, 3):
        for L in (0, 1, 2, 3):
            for b in range(-L * k - k, L * k + k + 1):
                for c in range(b - k, b + k + 1, 2):
                    f = f_recursive(k, L, b, c)
                    if abs(b) > L * k or (b - L * k) % 2 != 0:
                        assert f == ZERO
    assert f_recursive(2, 2, 5, 5) == ZERO  # inadmissible pair


def test_f_reflection_symmetry():
    for k in (1, 2, 3):
        for L in (1, 2, 3, 4):
            for b, c in admissible_pairs(k, L):
                assert f_recursive(k, L, b, c) == f_recursive(k, L, -b, -c)


@pytest.mark.parametrize("k,L", [(1, 3), (1, 5), (2, 3), (2, 4), (3, 3)])
def test_three_routes_agree(k, L):
    for b, c in admissible_pairs(k, L):
        fr = f_recursive(k, L, b, c)
        assert f_bosonic(k, L, b, c) == fr
        assert f_fermionic(k, L, b, c) == fr


def test_mu_nu_ambiguity_choices_agree():
    # at b = 0 or c = 0 both admissible (mu, nu) give the same value
    for k in (1, 2, 3):
        for L in (1, 2, 3):
            for b, c in admissible_pairs(k, L):
                choices = resolve_mu_nu(k, L, b, c)
                assert choices
                vals = {f_bosonic(k, L, b, c, mn) for mn in choices}
                assert len(vals) == 1


@pytest.mark.parametrize("k", [2, 3])
def test_rank_reduction(k):
    for L in range(0, 4):
        for b in range(0, L * k + 1):
            for c in range(b - k, b + k + 1, 2):
                if c == b + k:
                    continue
                assert f_rank_reduction(k, L, b, c) == f_recursive(k, L, b, c)


def intermediate_single_sum(k, L, b, c):
    """Proof-waypoint single-sum form of the configuration sum, used only
    here as a fourth independent route."""
    # brackets are read with the classical convention: zero once the top
    # argument drops below zero
    first = ZERO
    for j in range(0, L + 1):
        top = L - j - 1 - (j - Fraction(L, 2)) * k + Fraction(b, 2)
        if top.denominator != 1:
            return None
        if top < 0:
            continue
        e = Fraction(j * (j - 1), 2) + Fraction(L - 1, 2) * j * k + Fraction(c, 2) * j
        first = first + (-1) ** j * (gaussian(L, j) * gaussian(int(top), L - 1)).q_shift(e)
    second = ZERO
    for j in range(0, L):
        top = L - j - 2 - (j - Fraction(L - 1, 2)) * k + Fraction(c, 2)
        if top.denominator != 1:
            return None
        if top < 0:
            continue
        e = Fraction(j * (j + 1), 2) + Fraction(L, 2) * j * k + Fraction(b, 2) * j
        factor = ONE - qpow(top + 1)
        second = second + (-1) ** j * (
            gaussian(L - 1, j) * gaussian(int(top), L - 1) * factor
        ).q_shift(e)
    pre = Fraction(L * (L - 1) * k + (L - 1) * b + L * c, 4)
    return (first - second).q_shift(-pre)


@pytest.mark.parametrize("k,L", [(1, 3), (2, 3), (3, 2)])
def test_intermediate_single_sum(k, L):
    for b, c in admissible_pairs(k, L):
        if b < -L * k:
            continue
        got = intermediate_single_sum(k, L, b, c)
        if got is None:
            continue
        assert got == f_recursive(k, L, b, c)


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_path_character_routes(L):
    for lam in WEIGHTS:
        bf = ch_path_bruteforce(lam, L)
        assert ch_via_f(lam, L, f_recursive) == bf
        assert ch_via_f(lam, L, f_bosonic) == bf
        assert ch_via_f(lam, L, f_fermionic) == bf


@pytest.mark.parametrize("L", [1, 2, 3])
def test_fermionic_F_sum(L):
    for lam in WEIGHTS:
        k = lam.level
        bf = ch_path_bruteforce(lam, L)
        total = ZERO
        for j in range(-L * k - 1, L * k + 2):
            total = total + F_fermionic(lam, L, j).z_shift(-j)
        assert total == bf


def test_fermionic_F_vanishes_outside_support():
    lam = Weight(2, 1, 0)
    assert F_fermionic(lam, 2, 50) == ZERO
    assert F_fermionic(lam, 2, -50) == ZERO


def test_demazure_anchor():
    lam = Weight(2, 0, 0)
    want = ONE + zpow(-1) * qpow(1) + zpow(-2) * qpow(2)
    assert demazure_ch(lam, "+", 1) == want
    # L = 2 gives a 9-term character of total dimension 9
    chi = demazure_ch(lam, "+", 2)
    assert len(chi.terms) == 9
    assert chi.value_at_one() == 9


@pytest.mark.parametrize("L", [1, 2, 3])
def test_demazure_character_triangle(L):
    for lam in WEIGHTS:
        for sign in ("+", "-"):
            a = demazure_ch(lam, sign, L)
            assert a == demazure_ch_bruteforce(lam, sign, L)
            assert a == demazure_ch_oracle(lam, sign, L)


def test_demazure_union_sum():
    # ch+ + ch- counts the (L-1)-crystal twice on the overlap
    for lam in WEIGHTS[:4]:
        for L in (1, 2, 3):
            total = demazure_ch(lam, "+", L) + demazure_ch(lam, "-", L)
            overlap = ch_path_bruteforce(lam, L - 1) if L > 1 else None
            full = ch_path_bruteforce(lam, L)
            if L > 1:
                assert total - full == overlap
            else:
                # B_0 is the vacuum alone
                assert (total - full).value_at_one() == 1


def test_real_specialization():
    for lam in WEIGHTS:
        for L in (1, 2, 3, 4):
            assert real_character_check(lam, L)


def test_principal_specialization():
    for k in (1, 2, 3):
        for L in (1, 2, 3, 4):
            assert principal_character_check(k, L)


def test_sanderson_identity():
    for k in (1, 2):
        for L in range(0, 6):
            assert sanderson_identity_check(k, L)


def test_weak_admissibility():
    assert is_weakly_admissible(2, 0, 2)
    assert not is_weakly_admissible(2, 0, 1)
    assert not is_weakly_admissible(2, 0, 4)


def test_random_consistency():
    rng = random.Random(41)
    for _ in range(60):
        k = rng.randint(1, 3)
        L = rng.randint(1, 4)
        b = rng.randint(-L * k, L * k)
        c = rng.choice(range(b - k, b + k + 1, 2))
        fr = f_recursive(k, L, b, c)
        assert f_fermionic(k, L, b, c) == fr
        assert f_bosonic(k, L, b, c) == fr
