"""Exact arithmetic in the cyclotomic field Q(zeta_m).

An element is stored in the power basis {zeta^k : 0 <= k < phi(m)} of
Q[x]/Phi_m(x) as a vector of integer numerators over one positive common
denominator, reduced mod Phi_m after every operation and normalised to
lowest terms.  Two values of the same order are equal exactly when their
stored data agree, so elements can be hashed and deduplicated.

>>> z = CycloNum.zeta(4)
>>> z * z == -1
True
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


class OrderMismatch(ValueError):
    """Arithmetic between elements of different cyclotomic orders."""


class DivisionByZero(ZeroDivisionError):
    """Inversion of the zero element."""


def euler_phi(m: int) -> int:
    phi, k, rest = 1, 2, m
    while k * k <= rest:
        if rest % k == 0:
            phi *= k - 1
            rest //= k
            while rest % k == 0:
                phi *= k
                rest //= k
        k += 1
    if rest > 1:
        phi *= rest - 1
    return phi


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, constant term first, monic.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(1)
    (-1, 1)
    """
    if m < 1:
        raise ValueError("order must be positive")
    # x^m - 1 divided by Phi_d for every proper divisor d of m.
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, both with nonzero leading term.
    out = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[k] = q
        if q:
            for i, d in enumerate(den):
                rem[k + i] -= q * d
    if any(rem):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _tables(m: int):
    """Per-order data: phi, rows for x^k mod Phi_m (k < 2*phi-1 and k < m)."""
    phi_m = euler_phi(m)
    poly = cyclotomic_polynomial(m)
    assert len(poly) == phi_m + 1 and poly[-1] == 1
    # x^phi == -(lower part of Phi); iterate the shift to get higher powers.
    top = max(2 * phi_m - 1, m)
    rows: list[tuple[int, ...]] = []
    for k in range(phi_m):
        rows.append(tuple(1 if i == k else 0 for i in range(phi_m)))
    for k in range(phi_m, top):
        prev = rows[k - 1]
        shifted = [0] + list(prev[: phi_m - 1])
        lead = prev[phi_m - 1]
        if lead:
            for i in range(phi_m):
                shifted[i] -= lead * poly[i]
        rows.append(tuple(shifted))
    return phi_m, tuple(rows)


@lru_cache(maxsize=None)
def _embed_powers(m: int) -> tuple[complex, ...]:
    root = cmath.exp(2j * cmath.pi / m)
    return tuple(root ** k for k in range(euler_phi(m)))


class CycloNum:
    """An element of Q(zeta_m), immutable."""

    __slots__ = ("order", "nums", "den")

    def __init__(self, order: int, nums, den: int = 1):
        phi_m, _ = _tables(order)
        nums = list(nums)
        if len(nums) != phi_m:
            raise ValueError(f"need {phi_m} coordinates for order {order}")
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        g = den
        for v in nums:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = [v // g for v in nums]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("CycloNum is immutable")

    # ----- constructors -------------------------------------------------
    @staticmethod
    def zero(order: int) -> CycloNum:
        return CycloNum(order, [0] * euler_phi(order))

    @staticmethod
    def one(order: int) -> CycloNum:
        return CycloNum.of(1, order)

    @staticmethod
    def of(value, order: int) -> CycloNum:
        """Embed an int or Fraction as a rational element of Q(zeta_m)."""
        q = Fraction(value)
        nums = [0] * euler_phi(order)
        nums[0] = q.numerator
        return CycloNum(order, nums, q.denominator)

    @staticmethod
    def zeta(order: int, power: int = 1) -> CycloNum:
        """The root of unity zeta_m^power.

        >>> CycloNum.zeta(6, 3) == -1
        True
        """
        phi_m, rows = _tables(order)
        return CycloNum(order, rows[power % order])

    # ----- basic structure ----------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def __hash__(self):
        return hash((self.order, self.nums, self.den))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.nums == other.nums and self.den == other.den

    def _coerce(self, other) -> CycloNum | None:
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise OrderMismatch(
                    f"orders {self.order} and {other.order}; lift explicitly first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.of(other, self.order)
        return None

    # ----- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        nums = [x * db + y * da for x, y in zip(self.nums, other.nums)]
        return CycloNum(self.order, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, [-v for v in self.nums], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        nums = [x * db - y * da for x, y in zip(self.nums, other.nums)]
        return CycloNum(self.order, nums, da * db)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        phi_m, rows = _tables(self.order)
        a, b = self.nums, other.nums
        prod = [0] * (2 * phi_m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi_m]
        for k in range(phi_m, 2 * phi_m - 1):
            c = prod[k]
            if c:
                row = rows[k]
                for t in range(phi_m):
                    r = row[t]
                    if r:
                        out[t] += c * r
        return CycloNum(self.order, out, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> CycloNum:
        """Multiplicative inverse, by the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        phi_m, _ = _tables(self.order)
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = modulus, [Fraction(v, self.den) for v in self.nums]
        t0, t1 = [], [Fraction(1)]
        while any(r1):
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _frac_sub(t0, _frac_mul(q, t1))
        # r0 is a nonzero constant: Phi_m is irreducible over Q.
        assert len(_frac_trim(r0)) == 1
        c = r0[0]
        inv_coeffs = [t / c for t in t0] + [Fraction(0)] * (phi_m - len(t0))
        den = 1
        for f in inv_coeffs:
            den = den * f.denominator // gcd(den, f.denominator)
        return CycloNum(self.order, [int(f * den) for f in inv_coeffs[:phi_m]], den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int) -> CycloNum:
        if n < 0:
            return self.inv() ** (-n)
        out = CycloNum.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # ----- field structure beyond the ring -------------------------------
    def conj(self) -> CycloNum:
        """The image under zeta -> zeta^(-1); complex conjugation in any embedding."""
        phi_m, rows = _tables(self.order)
        m = self.order
        out = [0] * phi_m
        for k, v in enumerate(self.nums):
            if v:
                row = rows[(m - k) % m]
                for t in range(phi_m):
                    r = row[t]
                    if r:
                        out[t] += v * r
        return CycloNum(self.order, out, self.den)

    def embed(self) -> complex:
        """Numerical value at zeta_m = exp(2*pi*i/m)."""
        powers = _embed_powers(self.order)
        acc = 0j
        for v, p in zip(self.nums, powers):
            if v:
                acc += v * p
        return acc / self.den

    def lift(self, new_order: int) -> CycloNum:
        """The same value viewed in Q(zeta_M) for m | M."""
        if new_order == self.order:
            return self
        if new_order % self.order != 0:
            raise OrderMismatch(f"{self.order} does not divide {new_order}")
        phi_m, rows = _tables(new_order)
        step = new_order // self.order
        out = [0] * phi_m
        for k, v in enumerate(self.nums):
            if v:
                row = rows[(k * step) % new_order]
                for t in range(phi_m):
                    r = row[t]
                    if r:
                        out[t] += v * r
        return CycloNum(new_order, out, self.den)

    # ----- presentation ---------------------------------------------------
    def text(self) -> str:
        """Wire form "c0 + c1*z + ..." with rational ci and z = zeta_m."""
        parts = []
        for k, f in enumerate(self.coeffs):
            if f == 0:
                continue
            c = str(f)
            if k == 0:
                parts.append(c)
            elif k == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{k}")
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"CycloNum({self.order}, {self.text()!r})"


def _frac_trim(p: list[Fraction]) -> list[Fraction]:
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def _frac_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return _frac_trim(out)


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _frac_trim(out)


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    b = _frac_trim(list(b))
    r = _frac_trim(list(a))
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for i, v in enumerate(b):
            r[k + i] -= c * v
        r = _frac_trim(r)
    return _frac_trim(q), r
