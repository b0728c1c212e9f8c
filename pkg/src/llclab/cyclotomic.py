"""Exact arithmetic in cyclotomic fields.

Values of all characters in this package are roots of unity, and the
character sums we care about (Gauss sums, Whittaker averages) live in
Q(zeta_N) for a modest N.  Elements are stored as integer combinations of
powers of a fixed primitive N-th root of unity; the canonical form is the
remainder modulo the N-th cyclotomic polynomial, so equality is decidable
and exact.  No floating point is used anywhere except in the optional
numerical cross-check helpers.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = int | Fraction


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n // 2 + 1) if n % d == 0]
    out.append(n)
    return out


def _poly_divmod_int(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials, ascending coefficients."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1, "divisor must be monic"
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, p in enumerate(den):
            num[i - dd + j] -= c * p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree, computed by exact division
    of x^n - 1 by the cyclotomic polynomials of the proper divisors."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num, rem = _poly_divmod_int(num, cyclotomic_polynomial(d))
        assert not rem, f"x^{n}-1 not divisible by Phi_{d}"
    return tuple(num)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class RootOfUnity:
    """exp(2*pi*i * num / order) in lowest terms.  Hashable and canonical."""

    __slots__ = ("num", "order")

    def __init__(self, num: int, order: int):
        if order <= 0:
            raise ValueError("order must be positive")
        num %= order
        g = gcd(num, order)
        self.num = num // g
        self.order = order // g

    @classmethod
    def one(cls) -> RootOfUnity:
        return cls(0, 1)

    @classmethod
    def minus_one(cls) -> RootOfUnity:
        return cls(1, 2)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        n = _lcm(self.order, other.order)
        return RootOfUnity(self.num * (n // self.order) + other.num * (n // other.order), n)

    def __pow__(self, k: int) -> RootOfUnity:
        return RootOfUnity(self.num * k, self.order)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(-self.num, self.order)

    def conj(self) -> RootOfUnity:
        return self.inverse()

    def is_one(self) -> bool:
        return self.num == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.num == other.num and self.order == other.order

    def __hash__(self) -> int:
        return hash((self.num, self.order))

    def __repr__(self) -> str:
        return f"RootOfUnity({self.num}/{self.order})"

    def as_cyclo(self, order: int | None = None) -> CycloNumber:
        n = self.order if order is None else order
        if n % self.order:
            raise ValueError(f"order {n} does not contain a {self.order}-th root")
        return CycloNumber(n, {self.num * (n // self.order): 1})

    def complex_value(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.num / self.order)

    @classmethod
    def parse(cls, text: str) -> RootOfUnity:
        """Parse 'a/N' as exp(2*pi*i*a/N)."""
        a, n = text.split("/")
        return cls(int(a), int(n))

    def as_fraction_of_turn(self) -> str:
        return f"{self.num}/{self.order}"


@lru_cache(maxsize=None)
def _reduce_mod_phi(order: int, items: tuple) -> tuple:
    """Shared reduction modulo Phi_order for a sparse exponent sum.

    Scaling by the common denominator keeps the elimination loop in plain
    integers; the cache pays off because grid computations keep producing
    the same handful of values over and over.
    """
    deg = euler_phi(order)
    phi = cyclotomic_polynomial(order)
    den = 1
    for _, c in items:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    arr = [0] * order
    for e, c in items:
        arr[e] += int(c * den)
    for i in range(order - 1, deg - 1, -1):
        c = arr[i]
        if c == 0:
            continue
        arr[i] = 0
        base = i - deg
        for j in range(deg):
            pc = phi[j]
            if pc:
                arr[base + j] -= c * pc
    if den == 1:
        return tuple((e, c) for e, c in enumerate(arr[:deg]) if c != 0)
    return tuple(
        (e, _norm_rat(Fraction(c, den))) for e, c in enumerate(arr[:deg]) if c != 0
    )


class CycloNumber:
    """Element of Q(zeta_N) stored as a sparse sum of powers of zeta_N.

    The exponent dictionary is only reduced modulo x^N - 1 on construction;
    full reduction modulo Phi_N happens lazily (and is cached) the first
    time a canonical form is needed.  This keeps large character sums cheap:
    accumulation is pure dictionary arithmetic.
    """

    __slots__ = ("order", "terms", "_canon")

    def __init__(self, order: int, terms: dict[int, Rational] | None = None):
        self.order = order
        clean: dict[int, Rational] = {}
        if terms:
            for e, c in terms.items():
                if c == 0:
                    continue
                e %= order
                acc = clean.get(e, 0) + c
                if acc == 0:
                    clean.pop(e, None)
                else:
                    clean[e] = acc
        self.terms = clean
        self._canon: tuple | None = None

    @classmethod
    def from_rational(cls, c: Rational, order: int = 1) -> CycloNumber:
        return cls(order, {0: c})

    @classmethod
    def zero(cls, order: int = 1) -> CycloNumber:
        return cls(order, {})

    @classmethod
    def one(cls, order: int = 1) -> CycloNumber:
        return cls(order, {0: 1})

    def lift(self, order: int) -> CycloNumber:
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift from order {self.order} to {order}")
        k = order // self.order
        return CycloNumber(order, {e * k: c for e, c in self.terms.items()})

    def _pair(self, other) -> tuple[CycloNumber, CycloNumber]:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(other)
        elif isinstance(other, RootOfUnity):
            other = other.as_cyclo()
        if not isinstance(other, CycloNumber):
            raise TypeError(type(other))
        n = _lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __add__(self, other) -> CycloNumber:
        a, b = self._pair(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            acc = out.get(e, 0) + c
            if acc == 0:
                out.pop(e, None)
            else:
                out[e] = acc
        return CycloNumber(a.order, out)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber(self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> CycloNumber:
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other) -> CycloNumber:
        a, b = self._pair(other)
        return b + (-a)

    def __mul__(self, other) -> CycloNumber:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CycloNumber.zero(self.order)
            return CycloNumber(self.order, {e: c * other for e, c in self.terms.items()})
        a, b = self._pair(other)
        out: dict[int, Rational] = {}
        n = a.order
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = (e1 + e2) % n
                acc = out.get(e, 0) + c1 * c2
                if acc == 0:
                    out.pop(e, None)
                else:
                    out[e] = acc
        return CycloNumber(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycloNumber:
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloNumber.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> CycloNumber:
        return CycloNumber(self.order, {-e: c for e, c in self.terms.items()})

    def galois_image(self, k: int) -> CycloNumber:
        """Image under zeta_N -> zeta_N^k; k must be prime to N."""
        if gcd(k, self.order) != 1:
            raise ValueError("not an automorphism")
        return CycloNumber(self.order, {e * k: c for e, c in self.terms.items()})

    def canonical(self) -> tuple:
        """Tuple of (exponent, coefficient) pairs in the power basis
        1, x, ..., x^(phi(N)-1) after reduction modulo Phi_N."""
        if self._canon is not None:
            return self._canon
        n = self.order
        deg = euler_phi(n)
        if all(e < deg for e in self.terms):
            canon = tuple(sorted((e, _norm_rat(c)) for e, c in self.terms.items()))
        else:
            canon = _reduce_mod_phi(n, tuple(sorted(self.terms.items())))
        self._canon = canon
        return canon

    def is_zero(self) -> bool:
        return not self.canonical()

    def compact(self) -> CycloNumber:
        """Rewrite through the canonical form.  Character sums carry one
        sparse term per summand; collapsing them keeps later products
        from convolving hundreds of dead exponents."""
        out = CycloNumber(self.order, dict(self.canonical()))
        out._canon = self._canon
        return out

    def is_rational(self) -> bool:
        canon = self.canonical()
        return not canon or (len(canon) == 1 and canon[0][0] == 0)

    def rational_value(self) -> Fraction:
        canon = self.canonical()
        if not canon:
            return Fraction(0)
        if len(canon) == 1 and canon[0][0] == 0:
            return Fraction(canon[0][1])
        raise ValueError("not a rational number")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, RootOfUnity, CycloNumber)):
            a, b = self._pair(other)
            return (a - b).is_zero()
        return NotImplemented

    __hash__ = None  # mixed-order representatives make hashing a trap

    def inverse(self) -> CycloNumber:
        """Inverse via the product of all nontrivial Galois conjugates over
        the rational norm.  Adequate for the occasional exact division."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        n = self.order
        prod = CycloNumber.one(n)
        for k in range(2, n + 1):
            if gcd(k, n) == 1:
                prod = prod * self.galois_image(k)
        norm = (self * prod).rational_value()
        return prod * (Fraction(1) / norm)

    def __truediv__(self, other) -> CycloNumber:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        a, b = self._pair(other)
        return a * b.inverse()

    def complex_value(self) -> complex:
        z = 2j * cmath.pi / self.order
        return sum((float(c) * cmath.exp(z * e) for e, c in self.terms.items()), 0j)

    def as_root_of_unity(self) -> RootOfUnity | None:
        """Recognize the value as a root of unity, else None.  Only checks
        against the roots living in the stored order, which is all the
        package ever needs."""
        for k in range(self.order):
            cand = RootOfUnity(k, self.order)
            if self == cand:
                return cand
        return None

    def __repr__(self) -> str:
        if not self.terms:
            return "Cyclo(0)"
        body = " + ".join(f"{c}*z{self.order}^{e}" for e, c in sorted(self.terms.items()))
        return f"Cyclo({body})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": {str(e): str(Fraction(c)) for e, c in self.canonical()},
        }

    @classmethod
    def from_json(cls, data: dict) -> CycloNumber:
        return cls(data["order"], {int(e): Fraction(c) for e, c in data["coeffs"].items()})


def _norm_rat(c: Rational) -> Rational:
    """Collapse integral Fractions to int so canonical tuples compare well."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c
