"""Exact arithmetic in cyclotomic fields.

An element of the field with conductor n is a rational vector over the power
basis 1, z, ..., z**(phi(n)-1) of the n-th root of unity z, fully reduced
modulo the n-th cyclotomic polynomial.  Internally the vector is stored as
integer numerators over a single positive denominator with the common gcd
divided out, so equality is plain tuple comparison and the hot
multiply-reduce path runs on integers only.

Cross-conductor identities are decided by embedding all operands into the
field whose conductor is the lcm of the individual ones (z_d = z_L**(L/d)).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd, lcm

from ._kernels import poly_conv, poly_reduce
from .arith import totient


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of two integer polynomials known to divide exactly."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c % lead != 0:
            raise ArithmeticError("division is not exact")
        qi = c // lead
        q[i - dn] = qi
        if qi:
            for j in range(dn + 1):
                num[i - dn + j] -= qi * den[j]
    if any(num):
        raise ArithmeticError("division left a remainder")
    return q


@cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Dense integer coefficients (constant first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    quotient = num
    for d in range(1, n):
        if n % d == 0:
            quotient = _poly_divmod_exact(quotient, list(cyclotomic_polynomial(d)))
    return tuple(quotient)


class CycloField:
    """The cyclotomic field with conductor n; construct via cyclo_field(n)."""

    def __init__(self, n: int):
        self.n = n
        self.poly = cyclotomic_polynomial(n)
        self.degree = len(self.poly) - 1
        assert self.degree == totient(n)
        self._rows = self._reduction_rows()
        self._zeta_powers = self._power_table()

    def _reduction_rows(self) -> tuple[tuple[int, ...], ...]:
        # rows[i] = coefficients of z**(degree+i) in the power basis, for
        # i up to degree-2 (the largest power a product of two reduced
        # elements can reach).
        deg = self.degree
        rows = []
        current = [-c for c in self.poly[:deg]]  # z**deg
        rows.append(tuple(current))
        for _ in range(deg - 2):
            shifted = [0] + current
            top = shifted.pop()
            if top:
                for j in range(deg):
                    shifted[j] += top * rows[0][j]
            current = shifted
            rows.append(tuple(current))
        return tuple(rows)

    def _power_table(self) -> tuple[tuple[int, ...], ...]:
        # Power basis coordinates of z**j for j = 0 .. n-1.
        deg = self.degree
        powers = []
        current = [1] + [0] * (deg - 1)
        for j in range(self.n):
            powers.append(tuple(current))
            shifted = [0] + current
            top = shifted.pop()
            if top:
                for i in range(deg):
                    shifted[i] += top * self._rows[0][i]
            current = shifted
        return tuple(powers)

    def element(self, nums, den: int = 1) -> "CycloElement":
        return CycloElement(self, tuple(nums), den)

    def from_rational(self, value) -> "CycloElement":
        f = Fraction(value)
        nums = (f.numerator,) + (0,) * (self.degree - 1)
        return CycloElement(self, nums, f.denominator)

    @property
    def one(self) -> "CycloElement":
        return self.from_rational(1)

    @property
    def zero(self) -> "CycloElement":
        return self.from_rational(0)

    def zeta(self, j: int = 1) -> "CycloElement":
        """The root of unity z**j, reduced to the power basis."""
        return CycloElement(self, self._zeta_powers[j % self.n], 1)

    def __repr__(self) -> str:
        return f"CycloField({self.n})"


@cache
def cyclo_field(n: int) -> CycloField:
    return CycloField(n)


class CycloElement:
    __slots__ = ("field", "nums", "den")

    def __init__(self, field: CycloField, nums, den: int = 1):
        if len(nums) != field.degree:
            raise ValueError(
                f"expected {field.degree} coefficients, got {len(nums)}"
            )
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            nums = tuple(-c for c in nums)
            den = -den
        g = den
        for c in nums:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            nums = tuple(c // g for c in nums)
            den //= g
        self.field = field
        self.nums = tuple(nums)
        self.den = den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_one(self) -> bool:
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_integral(self) -> bool:
        return self.den == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycloElement)
            and self.field is other.field
            and self.nums == other.nums
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.field.n, self.nums, self.den))

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        d1, d2 = self.den, other.den
        nums = tuple(a * d2 + b * d1 for a, b in zip(self.nums, other.nums))
        return CycloElement(self.field, nums, d1 * d2)

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        return self + (-other)

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.field, tuple(-c for c in self.nums), self.den)

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        conv = poly_conv(list(self.nums), list(other.nums))
        reduced = poly_reduce(conv, self.field._rows, self.field.degree)
        return CycloElement(self.field, tuple(reduced), self.den * other.den)

    def inverse(self) -> "CycloElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        modulus = [Fraction(c) for c in self.field.poly]
        a = [Fraction(c, self.den) for c in self.nums]
        # Maintain s*a == r (mod the field polynomial).
        r0, r1 = modulus, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            r1 = _frac_trim(r1)
            if len(r1) == 1:
                break
            q, rem = _frac_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        unit = r1[0]
        inv = [c / unit for c in s1]
        inv = poly_reduce(inv, self.field._rows, self.field.degree) if len(inv) > self.field.degree else inv
        inv.extend([Fraction(0)] * (self.field.degree - len(inv)))
        den = 1
        for c in inv:
            den = lcm(den, c.denominator)
        nums = tuple(int(c * den) for c in inv)
        return CycloElement(self.field, nums, den)

    def __pow__(self, e: int) -> "CycloElement":
        if e == 0:
            if self.is_zero():
                raise ZeroDivisionError("0**0 in a field")
            return self.field.one
        base = self.inverse() if e < 0 else self
        e = abs(e)
        result = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _check(self, other: "CycloElement") -> None:
        if self.field is not other.field:
            raise ValueError("elements of different cyclotomic fields")

    def __repr__(self) -> str:
        return f"CycloElement(n={self.field.n}, {[str(c) for c in self.coeffs]})"


def _frac_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _frac_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    b = _frac_trim(list(b))
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        qi = a[i] / b[-1]
        q[i - db] = qi
        for j in range(db + 1):
            a[i - db + j] -= qi * b[j]
    return q, _frac_trim(a)


def root_of_unity(field: CycloField, j: int) -> CycloElement:
    """z**j in canonical reduced form."""
    return field.zeta(j)


def eta(field: CycloField, k: int, j: int = 1) -> CycloElement:
    """The cyclotomic unit 1 + w + ... + w**(k-1) at w = z**j (1 when w = 1).

    k must be coprime to the order of w.  The sum only depends on k modulo
    that order (full blocks of roots of unity sum to zero), which keeps the
    construction cheap for lifted k values.
    """
    if k < 1:
        raise ValueError(f"expected a positive k, got {k}")
    n = field.n
    j %= n
    order = n // gcd(n, j) if j else 1
    if gcd(k, order) != 1:
        raise ValueError(f"{k} is not coprime to the order {order} of the root")
    if order == 1:
        return field.one
    k %= order
    deg = field.degree
    acc = [0] * deg
    for i in range(k):
        row = field._zeta_powers[(j * i) % n]
        for t in range(deg):
            acc[t] += row[t]
    return CycloElement(field, tuple(acc), 1)


def embed(x: CycloElement, m: int) -> CycloElement:
    """Embed x into the field of conductor m (a multiple of the current one)."""
    n = x.field.n
    if m % n != 0:
        raise ValueError(f"{m} is not a multiple of the conductor {n}")
    target = cyclo_field(m)
    step = m // n
    deg = target.degree
    acc = [0] * deg
    for i, c in enumerate(x.nums):
        if c:
            row = target._zeta_powers[(i * step) % m]
            for t in range(deg):
                acc[t] += c * row[t]
    return CycloElement(target, tuple(acc), x.den)


def equal_across_fields(x: CycloElement, y: CycloElement) -> bool:
    """Exact equality after embedding both into the lcm-conductor field."""
    m = lcm(x.field.n, y.field.n)
    return embed(x, m) == embed(y, m)


def serialize_element(x: CycloElement) -> dict:
    return {
        "conductor": str(x.field.n),
        "coeffs": [f"{c.numerator}/{c.denominator}" for c in x.coeffs],
    }


def deserialize_element(data: dict) -> CycloElement:
    field = cyclo_field(int(data["conductor"]))
    coeffs = [Fraction(s) for s in data["coeffs"]]
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    nums = tuple(int(c * den) for c in coeffs)
    return CycloElement(field, nums, den)
