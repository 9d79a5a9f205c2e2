"""Exact field arithmetic over the rationals and odd prime fields.

Two element realizations sit behind one interface: ``fractions.Fraction``
(always in lowest terms, positive denominator) and :class:`Fp` residues
mod an odd prime.  Plain ``int`` operands are accepted everywhere and lift
into whichever field their neighbours live in, so formulas may be written
with integer literals.  Characteristic 2 is rejected at construction.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    CharacteristicTwo,
    DivisionByZero,
    InfiniteField,
    MixedContexts,
    NotPrime,
    ParseError,
)

_MAX_MODULUS_BITS = 64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Fp:
    """A residue in F_p for an odd prime p, reduced to 0 <= r < p.

    Arithmetic mixes freely with ``int``; any other operand (including a
    residue mod a different prime) raises :class:`MixedContexts`.
    """

    __slots__ = ("r", "p")

    def __init__(self, r: int, p: int):
        self.r = r % p
        self.p = p

    def _residue(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise MixedContexts(
                    f"cannot combine elements of F_{self.p} and F_{other.p}"
                )
            return other.r
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            raise MixedContexts(f"cannot combine a rational with an element of F_{self.p}")
        return None

    def __add__(self, other):
        r = self._residue(other)
        if r is None:
            return NotImplemented
        return Fp(self.r + r, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._residue(other)
        if r is None:
            return NotImplemented
        return Fp(self.r - r, self.p)

    def __rsub__(self, other):
        r = self._residue(other)
        if r is None:
            return NotImplemented
        return Fp(r - self.r, self.p)

    def __mul__(self, other):
        r = self._residue(other)
        if r is None:
            return NotImplemented
        return Fp(self.r * r, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._residue(other)
        if r is None:
            return NotImplemented
        if r == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return Fp(self.r * pow(r, -1, self.p), self.p)

    def __rtruediv__(self, other):
        r = self._residue(other)
        if r is None:
            return NotImplemented
        if self.r == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return Fp(r * pow(self.r, -1, self.p), self.p)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.r == 0:
            raise DivisionByZero(f"inverse of zero in F_{self.p}")
        return Fp(pow(self.r, n, self.p), self.p)

    def __neg__(self):
        return Fp(-self.r, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.r == other.r
        if isinstance(other, int):
            return self.r == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.r))

    def __bool__(self):
        return self.r != 0

    def __str__(self):
        return str(self.r)

    def __repr__(self):
        return f"Fp({self.r}, {self.p})"


def rational_sqrt(t: Fraction):
    """Canonical square root of a rational, or None.

    A root exists exactly when numerator and denominator are both perfect
    squares; the nonnegative root is returned.
    """
    if t < 0:
        return None
    n, d = t.numerator, t.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def modular_sqrt(a: int, p: int):
    """Smaller square root of a mod an odd prime p, or None (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t = t * c % p
            r = r * b % p
    return min(r, p - r)


class FieldContext:
    """Shared interface of the rational and prime-field contexts."""

    kind: str
    descriptor: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def sqrt(self, t):
        raise NotImplementedError

    def enumerate_elements(self):
        raise NotImplementedError

    def __repr__(self):
        return f"<FieldContext {self.descriptor}>"


class RationalContext(FieldContext):
    """Arbitrary-precision rational numbers."""

    kind = "rationals"
    descriptor = "rationals"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational literal: {text!r}") from exc

    def format(self, x) -> str:
        f = Fraction(x) if isinstance(x, int) else x
        if not isinstance(f, Fraction):
            raise MixedContexts(f"{x!r} is not a rational value")
        return str(f)

    def sqrt(self, t):
        return rational_sqrt(Fraction(t) if isinstance(t, int) else t)

    def enumerate_elements(self):
        raise InfiniteField("the rational field cannot be enumerated")

    def __eq__(self, other):
        return isinstance(other, RationalContext)

    def __hash__(self):
        return hash("rationals")


class PrimeContext(FieldContext):
    """The field F_p for an odd prime p (at most 64 bits)."""

    kind = "fp"

    def __init__(self, p: int):
        if p == 2:
            raise CharacteristicTwo("characteristic 2 is not supported")
        if p.bit_length() > _MAX_MODULUS_BITS:
            raise NotPrime(f"modulus {p} exceeds the 64-bit limit")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.descriptor = f"fp:{p}"

    def zero(self):
        return Fp(0, self.p)

    def one(self):
        return Fp(1, self.p)

    def from_int(self, n: int):
        return Fp(n, self.p)

    def parse(self, text: str):
        try:
            n = int(text.strip())
        except ValueError as exc:
            raise ParseError(f"not an F_{self.p} literal: {text!r}") from exc
        return Fp(n, self.p)

    def format(self, x) -> str:
        if isinstance(x, int):
            return str(x % self.p)
        if isinstance(x, Fp) and x.p == self.p:
            return str(x.r)
        raise MixedContexts(f"{x!r} is not an element of F_{self.p}")

    def sqrt(self, t):
        if isinstance(t, int):
            t = Fp(t, self.p)
        if not isinstance(t, Fp) or t.p != self.p:
            raise MixedContexts(f"{t!r} is not an element of F_{self.p}")
        r = modular_sqrt(t.r, self.p)
        return None if r is None else Fp(r, self.p)

    def enumerate_elements(self):
        return (Fp(i, self.p) for i in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeContext) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


_context_cache: dict[str, FieldContext] = {}


def make_context(descriptor: str) -> FieldContext:
    """Build a field context from a descriptor: "rationals" or "fp:<p>"."""
    descriptor = descriptor.strip()
    if descriptor in _context_cache:
        return _context_cache[descriptor]
    if descriptor == "rationals":
        ctx: FieldContext = RationalContext()
    elif descriptor.startswith("fp:"):
        try:
            p = int(descriptor[3:])
        except ValueError as exc:
            raise ParseError(f"bad field descriptor: {descriptor!r}") from exc
        ctx = PrimeContext(p)
    else:
        raise ParseError(f"bad field descriptor: {descriptor!r} (expected 'rationals' or 'fp:<p>')")
    _context_cache[descriptor] = ctx
    return ctx


def context_of(x) -> FieldContext:
    """The context an element belongs to (ints count as rational)."""
    if isinstance(x, Fp):
        return make_context(f"fp:{x.p}")
    if isinstance(x, (int, Fraction)):
        return make_context("rationals")
    raise MixedContexts(f"{x!r} is not a field element")


def exact_div(a, b):
    """Exact a / b; int-by-int division yields a Fraction, never a float."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a, b)
    return a / b


def inv(x):
    """Multiplicative inverse of a field element."""
    if x == 0:
        raise DivisionByZero("inverse of zero")
    return exact_div(1, x)


def sqrt_in_field(ctx: FieldContext, t):
    """Canonical square root of t in ctx, or None if t is not a square."""
    return ctx.sqrt(t)


def field_sqrt(x):
    """Canonical square root dispatched on the element's own field."""
    if isinstance(x, Fp):
        r = modular_sqrt(x.r, x.p)
        return None if r is None else Fp(r, x.p)
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return rational_sqrt(x)
    raise MixedContexts(f"{x!r} is not a field element")
