"""Exact Laurent polynomials in z and q over the integers.

q-exponents are rationals with denominator 1, 2 or 4; z-exponents are
integers.  Coefficients are Python ints, so all arithmetic is exact at
any size.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

_ALLOWED_DENOMS = (1, 2, 4)


def _qexp(value) -> Fraction:
    f = Fraction(value)
    if f.denominator not in _ALLOWED_DENOMS:
        raise ValueError(f"q-exponent {f} does not have denominator 1, 2 or 4")
    return f


class BivariatePolynomial:
    """Finite integer combination of z^a * q^r, a integer, r quarter-integer.

    Instances are immutable; zero coefficients are never stored, so
    equality is plain term-by-term comparison.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[tuple[int, Fraction], int] = {}
        if terms:
            for (ze, qe), c in terms.items():
                if c == 0:
                    continue
                key = (int(ze), _qexp(qe))
                c = clean.get(key, 0) + c
                if c:
                    clean[key] = c
                else:
                    del clean[key]
        self._terms = clean
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls({(0, Fraction(0)): 1})

    @classmethod
    def term(cls, coeff: int, ze: int = 0, qe=0) -> "BivariatePolynomial":
        return cls({(ze, Fraction(qe)): coeff})

    # -- basic protocol --------------------------------------------------------

    @property
    def terms(self):
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.term(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.to_text()})"

    # -- ring operations --------------------------------------------------------

    def __add__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.term(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            c = out.get(key, 0) + c
            if c:
                out[key] = c
            else:
                del out[key]
        res = BivariatePolynomial.__new__(BivariatePolynomial)
        res._terms = out
        res._hash = None
        return res

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        res = BivariatePolynomial.__new__(BivariatePolynomial)
        res._terms = {k: -c for k, c in self._terms.items()}
        res._hash = None
        return res

    def __sub__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.term(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.term(other)
        out: dict[tuple[int, Fraction], int] = {}
        for (z1, q1), c1 in self._terms.items():
            for (z2, q2), c2 in other._terms.items():
                key = (z1 + z2, q1 + q2)
                c = out.get(key, 0) + c1 * c2
                if c:
                    out[key] = c
                else:
                    del out[key]
        res = BivariatePolynomial.__new__(BivariatePolynomial)
        res._terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariatePolynomial":
        if n < 0:
            raise ValueError("negative powers are not defined in this ring")
        out = BivariatePolynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- queries and transforms ---------------------------------------------------

    def coefficient(self, ze: int = 0, qe=0) -> int:
        return self._terms.get((ze, _qexp(qe)), 0)

    def is_z_free(self) -> bool:
        return all(ze == 0 for ze, _ in self._terms)

    def has_integer_exponents(self) -> bool:
        return all(qe.denominator == 1 for _, qe in self._terms)

    def value_at_one(self) -> int:
        """Value at z = q = 1 (sum of coefficients)."""
        return sum(self._terms.values())

    def q_shift(self, qe) -> "BivariatePolynomial":
        """Multiply by q^qe."""
        e = _qexp(qe)
        return BivariatePolynomial({(z, q + e): c for (z, q), c in self._terms.items()})

    def z_shift(self, ze: int) -> "BivariatePolynomial":
        """Multiply by z^ze."""
        return BivariatePolynomial({(z + ze, q): c for (z, q), c in self._terms.items()})

    def scale_q_exponents(self, factor) -> "BivariatePolynomial":
        f = Fraction(factor)
        return BivariatePolynomial({(z, q * f): c for (z, q), c in self._terms.items()})

    def subs_q_one_z_to_qinv(self) -> "BivariatePolynomial":
        """Substitute q = 1 first and then z = q^{-1} (fresh variable q)."""
        out: dict[tuple[int, Fraction], int] = {}
        for (z, _), c in self._terms.items():
            key = (0, Fraction(-z))
            c2 = out.get(key, 0) + c
            if c2:
                out[key] = c2
            else:
                del out[key]
        return BivariatePolynomial(out)

    def subs_z_to_q_q_to_q2(self) -> "BivariatePolynomial":
        """Substitute z = q, q = q^2 simultaneously."""
        out: dict[tuple[int, Fraction], int] = {}
        for (z, q), c in self._terms.items():
            key = (0, z + 2 * q)
            c2 = out.get(key, 0) + c
            if c2:
                out[key] = c2
            else:
                del out[key]
        return BivariatePolynomial(out)

    # -- exact division ----------------------------------------------------------

    def exact_div(self, divisor: "BivariatePolynomial") -> "BivariatePolynomial":
        """Exact quotient self / divisor for z-free operands.

        Raises ValueError when either operand involves z or the division
        leaves a remainder.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not (self.is_z_free() and divisor.is_z_free()):
            raise ValueError("exact_div is only defined for z-free polynomials")
        if not self:
            return BivariatePolynomial.zero()

        div = {q: c for (_, q), c in divisor._terms.items()}
        d_lo = min(div)
        d_hi = max(div)
        c_lo = div[d_lo]
        rem = {q: c for (_, q), c in self._terms.items()}
        hi_bound = max(rem) - d_hi
        quot: dict[tuple[int, Fraction], int] = {}
        while rem:
            e = min(rem)
            c, r = divmod(rem[e], c_lo)
            if r != 0 or e - d_lo > hi_bound:
                raise ValueError("inexact polynomial division")
            shift = e - d_lo
            quot[(0, shift)] = c
            for q, dc in div.items():
                key = q + shift
                nc = rem.get(key, 0) - c * dc
                if nc:
                    rem[key] = nc
                else:
                    rem.pop(key, None)
        return BivariatePolynomial(quot)

    # -- serialization -------------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical output order: ascending q-exponent, then z-exponent."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (ze, qe), c in self.sorted_terms():
            factors = []
            if ze:
                factors.append("z" if ze == 1 else f"z^{ze}")
            if qe:
                if qe.denominator == 1:
                    factors.append("q" if qe == 1 else f"q^{qe}")
                else:
                    factors.append(f"q^({qe.numerator}/{qe.denominator})")
            mag = abs(c)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_obj(self) -> list:
        return [
            {"ze": ze, "qe": f"{qe.numerator}/{qe.denominator}", "c": str(c)}
            for (ze, qe), c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "BivariatePolynomial":
        return cls({(int(t["ze"]), Fraction(t["qe"])): int(t["c"]) for t in obj})


ZERO = BivariatePolynomial.zero()
ONE = BivariatePolynomial.one()


def zpow(a: int) -> BivariatePolynomial:
    return BivariatePolynomial.term(1, ze=a)


def qpow(r) -> BivariatePolynomial:
    return BivariatePolynomial.term(1, qe=r)


def _rising_factor(start: int, count: int) -> BivariatePolynomial:
    """Product of (1 - q^{start+j}) for j = 0 .. count-1."""
    out = ONE
    for j in range(count):
        out = out * (ONE - qpow(start + j))
    return out


@lru_cache(maxsize=None)
def qpoch(m: int) -> BivariatePolynomial:
    """(q; q)_m for m >= 0."""
    if m < 0:
        raise ValueError("qpoch requires m >= 0")
    return _rising_factor(1, m)


def pochhammer(m: int) -> BivariatePolynomial:
    """(z; q)_m as a polynomial in z and q; m must be nonnegative."""
    if m < 0:
        raise ValueError("pochhammer is polynomial-valued only for m >= 0")
    out = ONE
    for j in range(m):
        out = out * (ONE - zpow(1).q_shift(j))
    return out


@lru_cache(maxsize=None)
def gaussian(M: int, i: int) -> BivariatePolynomial:
    """Gaussian polynomial [M, i] extended to all integer M.

    Equals (q^{M-i+1}; q)_i / (q; q)_i for i >= 0 and 0 for i < 0.  For
    M < 0 the result is a genuine Laurent polynomial in q.
    """
    if i < 0:
        return ZERO
    if i == 0:
        return ONE
    return _rising_factor(M - i + 1, i).exact_div(qpoch(i))


def q_multinomial(M: int, parts) -> BivariatePolynomial:
    """q-multinomial coefficient [M; m_1 ... m_n].

    Zero unless all parts are nonnegative and sum to M.
    """
    parts = list(parts)
    if any(m < 0 for m in parts) or sum(parts) != M or M < 0:
        return ZERO
    out = ONE
    rest = M
    for m in parts:
        out = out * gaussian(rest, m)
        rest -= m
    return out


def verify_gaussian_lemma(M: int, N: int, n: int) -> bool:
    """Check the two Gaussian-polynomial identities exactly.

    The (z; q)_M expansion is checked when M >= 0; the convolution for
    [M+N, n] is checked whenever at least one of M, N is nonnegative
    (otherwise the sum is not finite).
    """
    ok = True
    if M >= 0:
        lhs = pochhammer(M)
        rhs = ZERO
        for i in range(M + 1):
            rhs = rhs + BivariatePolynomial.term(
                (-1) ** i, ze=i, qe=Fraction(i * (i - 1), 2)
            ) * gaussian(M, i)
        ok = lhs == rhs
    if M < 0 and N < 0:
        raise ValueError("convolution sum is infinite when both M and N are negative")
    lo = max(0, n - N) if N >= 0 else 0
    hi = min(n, M) if M >= 0 else n
    rhs2 = ZERO
    for i in range(lo, hi + 1):
        rhs2 = rhs2 + qpow((n - i) * (M - i)) * gaussian(M, i) * gaussian(N, n - i)
    return ok and gaussian(M + N, n) == rhs2
