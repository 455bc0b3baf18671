"""Configuration sums, path characters and Demazure characters.

The one-dimensional configuration sum f^(k)_L(b,c) is computed by three
independent routes (memoized difference equation, alternating bosonic
double sum, positive fermionic multinomial sum) plus a rank-reduction
route, and the characters built on top of it are cross-checked against
brute-force path sums and the Demazure-operator oracle.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .demazure import demazure_crystal_direct
from .paths import (
    energy,
    enumerate_paths,
    epsilon_L,
    pi,
    z_exponent,
)
from .qlaurent import (
    ONE,
    ZERO,
    BivariatePolynomial,
    gaussian,
    q_multinomial,
    qpoch,
    qpow,
)
from .weights import (
    Weight,
    demazure_character_oracle,
    specialize,
    weyl_word_minus,
    weyl_word_plus,
)


def is_weakly_admissible(k: int, b: int, c: int) -> bool:
    return abs(b - c) <= k and (b - c + k) % 2 == 0


# -- route 1: difference equation ------------------------------------------------

@lru_cache(maxsize=None)
def f_recursive(k: int, L: int, b: int, c: int) -> BivariatePolynomial:
    """f^(k)_L(b,c) by the defining recursion, memoized."""
    if k < 1 or L < 0:
        raise ValueError("requires k >= 1 and L >= 0")
    if not is_weakly_admissible(k, b, c):
        return ZERO
    if L == 0:
        return ONE if b == 0 else ZERO
    if abs(b) > L * k:  # unreachable from the L = 0 seed
        return ZERO
    out = ZERO
    for d in range(b - k, b + k + 1, 2):
        inner = f_recursive(k, L - 1, d, b)
        if inner:
            out = out + inner.q_shift(Fraction(L * abs(d - c), 4))
    return out


# -- route 2: bosonic double sum ----------------------------------------------------

def resolve_mu_nu(k: int, L: int, b: int, c: int) -> list[tuple[int, int]]:
    """All (mu, nu) with b in R_mu, c in R_nu, nu = mu +- 1 and the parity
    conditions mu = L+1, nu = L+2 mod 2; sorted so the canonical choice
    (smallest mu, then smallest nu) comes first."""

    def in_range(mu: int, x: int) -> bool:
        lo, hi = (mu - 1) * k, (mu + 1) * k
        lo_ok = x > lo or (x == lo and mu - 1 <= 0)
        hi_ok = x < hi or (x == hi and mu + 1 >= 0)
        return lo_ok and hi_ok

    mus = [m for m in range(-abs(b) // k - 2, abs(b) // k + 3)
           if (m - L - 1) % 2 == 0 and in_range(m, b)]
    nus = [n for n in range(-abs(c) // k - 2, abs(c) // k + 3)
           if (n - L) % 2 == 0 and in_range(n, c)]
    return sorted((m, n) for m in mus for n in nus if abs(m - n) == 1)


def f_bosonic(k: int, L: int, b: int, c: int,
              mu_nu: tuple[int, int] | None = None) -> BivariatePolynomial:
    """f^(k)_L(b,c) by the alternating double sum over Gaussian products.

    The sum is divided exactly by (q;q)_{L-1}; a remainder raises, which
    flags an implementation or parameter error.
    """
    if k < 1 or L < 1:
        raise ValueError("bosonic form requires k, L >= 1")
    if not is_weakly_admissible(k, b, c):
        return ZERO
    if (b - L * k) % 2:  # outside the parity support, where f vanishes
        return ZERO
    if mu_nu is None:
        choices = resolve_mu_nu(k, L, b, c)
        if not choices:
            raise ValueError(f"no admissible (mu, nu) for k={k}, L={L}, (b,c)=({b},{c})")
        mu_nu = choices[0]
    mu, nu = mu_nu
    num = ZERO
    for i in range(L):  # gaussian(L-1, i) vanishes outside 0..L-1
        for j in range(L + 1):  # gaussian(L, j) vanishes outside 0..L
            plus = 2 * i >= L + nu and 2 * j <= L + mu - 1
            minus = 2 * i <= L + nu - 2 and 2 * j >= L + mu + 1
            if not (plus or minus):
                continue
            Q = (
                Fraction((i - j) * (i - j + 1), 2)
                - (Fraction(2 * i - L + 1, 2)) * (Fraction(2 * j - L, 2)) * k
                + Fraction(b, 2) * Fraction(2 * i - L + 1, 2)
                + Fraction(c, 2) * Fraction(2 * j - L, 2)
            )
            term = gaussian(L - 1, i) * gaussian(L, j)
            term = term.q_shift(Q)
            sign = (-1) ** (i + j) * (1 if plus else -1)
            num = num + sign * term
    return num.exact_div(qpoch(L - 1))


# -- route 3: fermionic multinomial sum ------------------------------------------------

def occupation_vectors(k: int, L: int, b: int):
    """Configurations for f^(k)_L(b, .): sum x = L, sum a*x_a = (Lk - b)/2."""
    if (L * k - b) % 2 != 0:
        return []
    target = (L * k - b) // 2
    if target < 0 or target > L * k:
        return []
    out = []

    def rec(a: int, rem: int, wrem: int, acc: list):
        if a == k:
            # remaining letters all carry weight k
            if wrem == rem * k:
                out.append(tuple(acc) + (rem,))
            return
        max_x = rem
        for x in range(max_x + 1):
            w = wrem - a * x
            if w < 0 or w > (rem - x) * k:
                continue
            acc.append(x)
            rec(a + 1, rem - x, w, acc)
            acc.pop()

    rec(0, L, target, [])
    return out


def f_fermionic(k: int, L: int, b: int, c: int) -> BivariatePolynomial:
    """f^(k)_L(b,c) as a positive sum of q-powers times q-multinomials."""
    if k < 1 or L < 0:
        raise ValueError("requires k >= 1 and L >= 0")
    if not is_weakly_admissible(k, b, c):
        return ZERO
    base = Fraction(L * L * k - L * (b - c + k) + b, 4)
    thr = (c - b + k) // 2
    out = ZERO
    for xs in occupation_vectors(k, L, b):
        Q = base
        for a in range(k + 1):
            if not xs[a]:
                continue
            for a2 in range(a + 1, k + 1):
                Q -= (a2 - a) * xs[a] * xs[a2]
            if a >= thr:
                Q += (a - thr) * xs[a]
        out = out + q_multinomial(L, xs).q_shift(Q)
    return out


# -- route 4: rank reduction -----------------------------------------------------------

def f_rank_reduction(k: int, L: int, b: int, c: int) -> BivariatePolynomial:
    """f^(k)_L(b,c) through the level-lowering sum onto f^(k-1)."""
    if k < 2:
        raise ValueError("rank reduction requires k >= 2")
    if b < 0 or c == b + k:
        raise ValueError("rank reduction requires b >= 0 and c != b + k")
    if not is_weakly_admissible(k, b, c):
        raise ValueError("(b, c) is not weakly admissible")
    if L == 0:
        return ONE if b == 0 else ZERO
    out = ZERO
    for i in range(L + 1):
        inner = f_recursive(k - 1, L - i, b + (k + 1) * i - L, c + (k + 1) * i - L + 1)
        if not inner:
            continue
        e = Fraction(L * (L - 1), 4) - Fraction((k - 1) * i * i + (2 * L + b + c - 1) * i, 4)
        out = out + (gaussian(L, i) * inner).q_shift(e)
    return out


# -- path characters ----------------------------------------------------------------

def ch_path_bruteforce(lam: Weight, L: int) -> BivariatePolynomial:
    """Sum of z^{-j} q^{E(p)} over all of P_L(Lambda)."""
    out = ZERO
    for p in enumerate_paths(lam, L):
        out = out + BivariatePolynomial.term(1, ze=-z_exponent(p, lam), qe=energy(p, lam))
    return out


def ch_via_f(lam: Weight, L: int, f_impl=f_recursive) -> BivariatePolynomial:
    """Path character through the configuration sum; exponents must close
    to integers, anything else raises."""
    s, t = lam.a0, lam.a1
    k = s + t
    eL, eL1 = epsilon_L(L), epsilon_L(L + 1)
    out = ZERO
    base = eL * (s - t)
    j_lo = -((L * k - base) // 2)
    j_hi = (L * k + base) // 2
    for j in range(j_lo, j_hi + 1):
        f = f_impl(k, L, base - 2 * j, eL1 * (s - t) - 2 * j)
        if f:
            out = out + f.q_shift(Fraction(j, 2)).z_shift(-j)
    if not out.has_integer_exponents():
        raise ValueError("path character came out with non-integer exponents")
    return out


def F_fermionic(lam: Weight, L: int, j: int) -> BivariatePolynomial:
    """The z^{-j} coefficient of the path character, in fermionic form."""
    s, t = lam.a0, lam.a1
    k = s + t
    if k == 1:
        # rank one has no Cartan-matrix part; use the configuration sum
        eL, eL1 = epsilon_L(L), epsilon_L(L + 1)
        return f_recursive(1, L, eL * (s - t) - 2 * j, eL1 * (s - t) - 2 * j).q_shift(
            Fraction(j, 2)
        )
    cinv = cartan_inverse(k)
    out = ZERO
    even = L % 2 == 0
    # x_1 .. x_{k-1} with total at most L
    for xs in _bounded_vectors(k - 1, L):
        wsum = sum(i * x for i, x in enumerate(xs, start=1))
        csum = sum((k - i) * x for i, x in enumerate(xs, start=1))
        if even:
            if (wsum - j) % k:
                continue
            x0 = Fraction(L, 2) - Fraction(csum + j, k)
            xk = Fraction(L, 2) - Fraction(wsum - j, k)
            unit = s
        else:
            if (wsum - j - t) % k:
                continue
            x0 = Fraction(L + 1, 2) - Fraction(csum + j + t, k)
            xk = Fraction(L - 1, 2) - Fraction(wsum - j - t, k)
            unit = t
        if x0.denominator != 1 or xk.denominator != 1 or x0 < 0 or xk < 0:
            continue
        vec = [Fraction(x) for x in xs]
        e = _quadratic_form(cinv, vec, vec) + Fraction(j * (j + t), k)
        if 1 <= unit <= k - 1:
            e -= sum(cinv[i][unit - 1] * vec[i] for i in range(k - 1))
        full = (int(x0),) + tuple(xs) + (int(xk),)
        out = out + q_multinomial(L, full).q_shift(e)
    return out


def _bounded_vectors(n: int, total: int):
    """Nonnegative integer n-vectors with sum <= total."""
    if n == 0:
        yield ()
        return
    for xs in product(range(total + 1), repeat=n):
        if sum(xs) <= total:
            yield xs


def cartan_inverse(k: int):
    """Inverse Cartan matrix of sl(k): entries min(i,j)(k - max(i,j))/k."""
    return [
        [Fraction(min(i, j) * (k - max(i, j)), k) for j in range(1, k)]
        for i in range(1, k)
    ]


def _quadratic_form(cinv, u, v) -> Fraction:
    n = len(cinv)
    return sum(cinv[i][j] * u[i] * v[j] for i in range(n) for j in range(n))


# -- Demazure characters -----------------------------------------------------------------

def level_weight(i: int, k: int) -> Weight:
    """i Lambda_0 + (k - i) Lambda_1."""
    return Weight(i, k - i, 0)


def demazure_ch(lam: Weight, sign: str, L: int, f_impl=f_recursive) -> BivariatePolynomial:
    """ch^{+/-}_L(Lambda) through the layer expansion over ch_{L-1}."""
    if L <= 0:
        raise ValueError("Demazure characters are computed for L > 0")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    s, t = lam.a0, lam.a1
    k = s + t
    e = epsilon_L(L)
    out = ZERO
    if sign == "+":
        for i in range(s + 1):
            part = ch_via_f(level_weight(i, k), L - 1, f_impl)
            out = out + part.q_shift(Fraction((L + e) * (s - i), 2)).z_shift(-e * (s - i))
    else:
        for i in range(t + 1):
            part = ch_via_f(level_weight(k - i, k), L - 1, f_impl)
            out = out + part.q_shift(Fraction((L - e) * (t - i), 2)).z_shift(e * (t - i))
    if not out.has_integer_exponents():
        raise ValueError("Demazure character came out with non-integer exponents")
    return out


def demazure_ch_bruteforce(lam: Weight, sign: str, L: int) -> BivariatePolynomial:
    """Sum of z^{-j} q^{E} over the Demazure crystal via the path realization."""
    out = ZERO
    for T in demazure_crystal_direct(lam, sign, L):
        p = pi(T, L)
        out = out + BivariatePolynomial.term(1, ze=-z_exponent(p, lam), qe=energy(p, lam))
    return out


def demazure_ch_oracle(lam: Weight, sign: str, L: int) -> BivariatePolynomial:
    """Specialized Demazure-operator character for the word w^{+/-}_L."""
    word = weyl_word_plus(L) if sign == "+" else weyl_word_minus(L)
    return specialize(demazure_character_oracle(lam, word), lam)


# -- specializations -----------------------------------------------------------------------

def q_bracket(a: int) -> BivariatePolynomial:
    """[a] = 1 + q + ... + q^{a-1}."""
    out = ZERO
    for j in range(a):
        out = out + qpow(j)
    return out


def real_character_check(lam: Weight, L: int) -> bool:
    """ch^+_L at q = 1, z = q^{-1} against the closed product form."""
    if L < 1:
        raise ValueError("requires L >= 1")
    s = lam.a0
    k = lam.level
    lhs = demazure_ch(lam, "+", L).subs_q_one_z_to_qinv()
    e = epsilon_L(L)
    rhs = (q_bracket(s + 1) * q_bracket(k + 1) ** (L - 1)).q_shift(
        -Fraction((L - e) * k, 2)
    )
    return lhs == rhs


def principal_rhs(k: int, L: int) -> BivariatePolynomial:
    """Sum over occupations of q^{2 x C^{-1} x + (k/2) S (S+1)} times the
    q^2-argument multinomial."""
    cinv = cartan_inverse(k) if k >= 2 else []
    out = ZERO
    for xs in _compositions(k + 1, L):
        S = Fraction(sum((k - 2 * i) * x for i, x in enumerate(xs)), k)
        e = Fraction(k, 2) * S * (S + 1)
        if k >= 2:
            vec = [Fraction(x) for x in xs[1:k]]
            e += 2 * _quadratic_form(cinv, vec, vec)
        out = out + q_multinomial(L, xs).scale_q_exponents(2).q_shift(e)
    return out


def _compositions(n: int, total: int):
    """Nonnegative integer n-vectors with sum exactly total."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(n - 1, total - first):
            yield (first,) + rest


def principal_character_check(k: int, L: int) -> bool:
    """ch^+_L(k Lambda_0) at z = q, q = q^2 against the fermionic form."""
    lam = Weight(k, 0, 0)
    lhs = demazure_ch(lam, "+", L).subs_z_to_q_q_to_q2()
    return lhs == principal_rhs(k, L)


def sanderson_rhs(k: int, L: int) -> BivariatePolynomial:
    """Sum over chains 0 <= i_1 <= ... <= i_k <= L with triangular q-powers."""
    out = ZERO
    for chain in _chains(k, L):
        e = sum(Fraction(i * (i + 1), 2) for i in chain)
        parts = [L - chain[-1]]
        for a in range(k - 1, 0, -1):
            parts.append(chain[a] - chain[a - 1])
        parts.append(chain[0])
        out = out + q_multinomial(L, parts).q_shift(e)
    return out


def _chains(k: int, L: int):
    """Nondecreasing k-tuples with entries in 0..L."""
    def rec(a, lo, acc):
        if a == k:
            yield tuple(acc)
            return
        for v in range(lo, L + 1):
            acc.append(v)
            yield from rec(a + 1, v, acc)
            acc.pop()

    yield from rec(0, 0, [])


def sanderson_identity_check(k: int, L: int) -> bool:
    """The q^2-multinomial and q-multinomial principal forms agree."""
    return principal_rhs(k, L) == sanderson_rhs(k, L)
