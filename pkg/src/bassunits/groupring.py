"""Exact arithmetic in the rational group algebra of a finite abelian group.

Elements are sparse coefficient maps keyed by exponent vectors.  Coefficients
are Python ints whenever possible and Fractions otherwise; both are exact and
mix freely.  Multiplication is the convolution product.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ._kernels import ring_conv
from .abelian import AbelianGroup, GroupElement, generated_by


class GroupRingElement:
    __slots__ = ("group", "_coeffs")

    def __init__(self, group: AbelianGroup, coeffs: dict):
        """coeffs maps coordinate tuples to exact scalars; zeros are dropped."""
        self.group = group
        self._coeffs = {c: v for c, v in coeffs.items() if v != 0}

    @classmethod
    def from_element(cls, g: GroupElement, scalar=1) -> "GroupRingElement":
        return cls(g.group, {g.coords: scalar})

    @classmethod
    def one(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls(group, {group.identity.coords: 1})

    @classmethod
    def zero(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls(group, {})

    @property
    def coeffs(self) -> dict[GroupElement, Fraction]:
        return {
            self.group.element(c): Fraction(v) for c, v in sorted(self._coeffs.items())
        }

    def coefficient(self, g: GroupElement):
        return self._coeffs.get(g.coords, 0)

    def augmentation(self):
        return sum(self._coeffs.values())

    def is_integral(self) -> bool:
        return all(
            isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)
            for v in self._coeffs.values()
        )

    def support_size(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElement)
            and self.group == other.group
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.group, frozenset(self._coeffs.items())))

    def _check(self, other: "GroupRingElement") -> None:
        if self.group != other.group:
            raise ValueError("elements of different group rings")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        out = dict(self._coeffs)
        for c, v in other._coeffs.items():
            out[c] = out.get(c, 0) + v
        return GroupRingElement(self.group, out)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, {c: -v for c, v in self._coeffs.items()})

    def scalar_mul(self, scalar) -> "GroupRingElement":
        return GroupRingElement(
            self.group, {c: scalar * v for c, v in self._coeffs.items()}
        )

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        out = ring_conv(
            list(self._coeffs.items()),
            list(other._coeffs.items()),
            self.group.invariants,
        )
        return GroupRingElement(self.group, out)

    def __pow__(self, e: int) -> "GroupRingElement":
        if e < 0:
            raise ValueError("negative powers are not defined in the group ring")
        result = GroupRingElement.one(self.group)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self) -> str:
        terms = ", ".join(f"{v}*[{','.join(map(str, c))}]" for c, v in sorted(self._coeffs.items()))
        return f"GroupRingElement({terms or '0'})"


def group_sum(g: GroupElement) -> GroupRingElement:
    """1 + g + g**2 + ... over the full cyclic subgroup generated by g."""
    cyclic = generated_by(g.group, (g,))
    return GroupRingElement(g.group, {h.coords: 1 for h in cyclic.elements})


def _check_bass_args(g: GroupElement, k: int, m: int) -> int:
    n = g.order
    if k < 1 or m < 1:
        raise ValueError(f"k and m must be positive, got k={k}, m={m}")
    if pow(k, m, n) != 1 % n:
        raise ValueError(f"k**m must be 1 mod |g|: k={k}, m={m}, |g|={n}")
    return n


def bass_unit(g: GroupElement, k: int, m: int) -> GroupRingElement:
    """The Bass unit (1+g+...+g**(k-1))**m + (1-k**m)/|g| * (1+g+...+g**(|g|-1)).

    Defined when k**m == 1 mod |g|, which makes the second coefficient an
    integer; the result is integral with augmentation 1.
    """
    n = _check_bass_args(g, k, m)
    # The k-term geometric sum, with exponents wrapping modulo |g|.
    full, extra = divmod(k, n)
    partial: dict[tuple, int] = {}
    x = g.group.identity
    for i in range(n):
        partial[x.coords] = full + (1 if i < extra else 0)
        x = x * g
    head = GroupRingElement(g.group, partial) ** m
    tail_coeff = (1 - k**m) // n
    result = head + group_sum(g).scalar_mul(tail_coeff)
    assert result.is_integral() and result.augmentation() == 1
    return result


def bass_inverse(g: GroupElement, k: int, m: int) -> GroupRingElement:
    """The inverse Bass unit, realized as a Bass unit on g**k.

    With k1 the inverse of k mod |g|, the product of the units for (g, k)
    and (g**k, k1) telescopes to the unit with k=1, which is 1.
    """
    n = _check_bass_args(g, k, m)
    if n == 1:
        return GroupRingElement.one(g.group)
    k1 = pow(k, -1, n)
    return bass_unit(g**k, k1, m)


def trivial_unit(sign: int, g: GroupElement, exponent: int = 1) -> GroupRingElement:
    """The trivial unit (sign*g)**exponent as a group-ring element."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return GroupRingElement.from_element(g**exponent, sign**(exponent % 2))


def serialize_ring_element(x: GroupRingElement) -> list:
    return [
        {"g": [str(a) for a in c], "coeff": f"{Fraction(v).numerator}/{Fraction(v).denominator}"}
        for c, v in sorted(x._coeffs.items())
    ]
