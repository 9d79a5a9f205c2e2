"""Integer-coefficient polynomial engine for spread polynomials.

The spread polynomials satisfy S0 = 0, S1 = s and
S_n = 2(1 - 2s) S_{n-1} - S_{n-2} + 2s; they compose multiplicatively
(S_n o S_m = S_nm), relate to the Chebyshev polynomials of the first kind
by S_n(s) = (1 - T_n(1 - 2s)) / 2, and factor into integer polynomials
phi_k of degree totient(k) with S_n = prod over k | n of phi_k.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FactorizationFailure, NonIntegralResult
from .field import exact_div


class IntPolynomial:
    """Dense integer-coefficient polynomial; index = degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
X = IntPolynomial([0, 1])


def poly_eval(poly: IntPolynomial, s):
    """Exact Horner evaluation of an integer polynomial at a field element."""
    acc = 0 * s
    for c in reversed(poly.coeffs):
        acc = acc * s + c
    return acc


def poly_compose(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact composition p(q(s))."""
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * q + IntPolynomial([c])
    return acc


_spread_cache: list[IntPolynomial] = [ZERO, X]
_cheb_cache: list[IntPolynomial] = [ONE, X]
_phi_cache: dict[int, IntPolynomial] = {}
_cache_lock = threading.Lock()


def spread_poly(n: int) -> IntPolynomial:
    """The n-th spread polynomial (degree n, leading coefficient (-4)^(n-1))."""
    if n < 0:
        raise ValueError("spread polynomial index must be nonnegative")
    with _cache_lock:
        step = IntPolynomial([2, -4])  # 2(1 - 2s)
        two_s = IntPolynomial([0, 2])
        while len(_spread_cache) <= n:
            k = len(_spread_cache)
            _spread_cache.append(step * _spread_cache[k - 1] - _spread_cache[k - 2] + two_s)
        return _spread_cache[n]


def chebyshev_T(n: int) -> IntPolynomial:
    """The n-th Chebyshev polynomial of the first kind."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    with _cache_lock:
        two_x = IntPolynomial([0, 2])
        while len(_cheb_cache) <= n:
            k = len(_cheb_cache)
            _cheb_cache.append(two_x * _cheb_cache[k - 1] - _cheb_cache[k - 2])
        return _cheb_cache[n]


def spread_via_chebyshev(n: int) -> IntPolynomial:
    """(1 - T_n(1 - 2s)) / 2, halved exactly; equals spread_poly(n)."""
    if n < 1:
        raise ValueError("index must be positive")
    shifted = poly_compose(chebyshev_T(n), IntPolynomial([1, -2]))
    numer = ONE - shifted
    half = []
    for c in numer.coeffs:
        if c % 2 != 0:
            raise NonIntegralResult(f"odd coefficient {c} while halving")
        half.append(c // 2)
    return IntPolynomial(half)


def _exact_poly_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """num / den with zero remainder and integer quotient, else FactorizationFailure."""
    if den.is_zero():
        raise FactorizationFailure("division by the zero polynomial")
    rem = [Fraction(c) for c in num.coeffs]
    dcs = [Fraction(c) for c in den.coeffs]
    dd = len(dcs) - 1
    lead = dcs[-1]
    quot = [Fraction(0)] * max(len(rem) - dd, 0)
    while len(rem) - 1 >= dd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        shift = len(rem) - 1 - dd
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(dcs):
            rem[shift + i] -= factor * c
    if any(rem):
        raise FactorizationFailure("nonzero remainder in exact polynomial division")
    if any(c.denominator != 1 for c in quot):
        raise FactorizationFailure("non-integer quotient in exact polynomial division")
    return IntPolynomial([int(c) for c in quot])


def _totient(n: int) -> int:
    result, m, q = n, n, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    small, large = [], []
    q = 1
    while q * q <= n:
        if n % q == 0:
            small.append(q)
            if q != n // q:
                large.append(n // q)
        q += 1
    return small + large[::-1]


def spread_cyclotomic(k: int) -> IntPolynomial:
    """The k-th spread-cyclotomic factor: S_n = prod over k | n of phi_k.

    Computed by exact division of S_k by all earlier factors; the result
    must have integer coefficients and degree totient(k).
    """
    if k < 1:
        raise ValueError("index must be positive")
    with _cache_lock:
        cached = _phi_cache.get(k)
    if cached is not None:
        return cached
    if k == 1:
        phi = spread_poly(1)
    else:
        quotient = spread_poly(k)
        for d in divisors(k):
            if d < k:
                quotient = _exact_poly_div(quotient, spread_cyclotomic(d))
        phi = quotient
    if phi.degree != _totient(k):
        raise FactorizationFailure(
            f"factor {k} has degree {phi.degree}, expected {_totient(k)}"
        )
    with _cache_lock:
        _phi_cache[k] = phi
    return phi


@dataclass(frozen=True)
class GreenRatioValue:
    """Both evaluations of a spread polynomial at a green-ratio argument."""

    s: object
    sn_of_s: object
    closed_form: object


def spread_at_green_ratio(x, y, n: int) -> GreenRatioValue:
    """Evaluate S_n at s = -(y-x)^2/(4xy) both ways.

    ``sn_of_s`` is the polynomial evaluation and ``closed_form`` is
    -(y^n - x^n)^2 / (4 x^n y^n); the two always agree.
    """
    if n < 1:
        raise ValueError("index must be positive")
    if x == 0 or y == 0:
        raise DivisionByZero("green ratio needs nonzero x and y")
    s = exact_div(-((y - x) ** 2), 4 * x * y)
    sn = poly_eval(spread_poly(n), s)
    closed = exact_div(-((y ** n - x ** n) ** 2), 4 * x ** n * y ** n)
    return GreenRatioValue(s, sn, closed)
