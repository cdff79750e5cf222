"""Linear characters and exact projection of group-ring elements into
cyclotomic fields.

A character is determined by its kernel H (a subgroup with cyclic quotient)
and a chosen element a_H generating the quotient: the character maps a_H to
the primitive root of unity of order [G:H].  Jointly over all such kernels
the characters realize the isomorphism of the rational group algebra with a
product of cyclotomic fields, so two elements are equal iff all their
projections agree.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .abelian import (
    AbelianGroup,
    GroupElement,
    HcEntry,
    Subgroup,
    full_subgroup,
    hc_subgroups,
    index,
    intersect,
)
from .cyclo import CycloElement, CycloField, cyclo_field, eta
from .groupring import GroupRingElement


class LinearCharacter:
    """The character of G with kernel H normalized by a_H -> primitive root."""

    __slots__ = ("group", "kernel", "a_H", "d", "field", "_a_inv", "_logs")

    def __init__(self, group: AbelianGroup, kernel: Subgroup, a_H: GroupElement, d: int):
        self.group = group
        self.kernel = kernel
        self.a_H = a_H
        self.d = d
        self.field: CycloField = cyclo_field(d)
        self._a_inv = a_H.inverse()
        self._logs: dict[tuple, int] = {}

    def log(self, g: GroupElement) -> int:
        """Discrete log: the e in [0, d) with g in a_H**e * kernel."""
        cached = self._logs.get(g.coords)
        if cached is not None:
            return cached
        x = g
        for e in range(self.d):
            if x in self.kernel:
                self._logs[g.coords] = e
                return e
            x = x * self._a_inv
        raise ValueError("element outside the group generated by a_H and the kernel")

    def eval(self, g: GroupElement) -> CycloElement:
        return self.field.zeta(self.log(g))

    def __repr__(self) -> str:
        return f"LinearCharacter(kernel order {self.kernel.order}, d={self.d})"


def character_for(group: AbelianGroup, entry: HcEntry) -> LinearCharacter:
    chr_ = LinearCharacter(group, entry.H, entry.a_H, entry.index_d)
    # a_H together with the kernel must generate the whole group.
    x = entry.a_H
    for _ in range(entry.index_d - 1):
        if x in entry.H:
            raise ValueError("a_H does not generate the quotient")
        x = x * entry.a_H
    if x not in entry.H:
        raise ValueError("a_H does not generate the quotient")
    return chr_


def project(chr_: LinearCharacter, x: GroupRingElement) -> CycloElement:
    """Linear extension of the character: sum of coeff * root-power."""
    if x.group != chr_.group:
        raise ValueError("element of a different group")
    totals: dict[int, Fraction] = {}
    for coords, v in x._coeffs.items():
        e = chr_.log(chr_.group.element(coords))
        totals[e] = totals.get(e, 0) + v
    field = chr_.field
    deg = field.degree
    acc = [Fraction(0)] * deg
    for e, val in totals.items():
        row = field._zeta_powers[e % field.n]
        if val:
            for t in range(deg):
                if row[t]:
                    acc[t] += val * row[t]
    den = 1
    for c in acc:
        den = lcm(den, Fraction(c).denominator)
    nums = tuple(int(c * den) for c in acc)
    return CycloElement(field, nums, den)


def project_bass_fast(chr_: LinearCharacter, g: GroupElement, k: int, m: int) -> CycloElement:
    """Projection of the Bass unit for (g, k, m) without expanding it.

    The character sends the unit to the k-th cyclotomic unit at the image of
    g, raised to the m-th power.
    """
    n = g.order
    if pow(k, m, n) != 1 % n:
        raise ValueError(f"k**m must be 1 mod |g|: k={k}, m={m}, |g|={n}")
    e = chr_.log(g)
    return eta(chr_.field, k, e) ** m


def project_bass_orbit(
    chr_: LinearCharacter, g: GroupElement, K: Subgroup, k: int, m: int
) -> CycloElement:
    """Projection of the product of Bass units over the coset orbit g*K.

    Equals the cyclotomic unit at the t-th power of the image of g, raised to
    m*h, where h is the order of the intersection of the kernel with K and t
    its index in K.
    """
    inter = intersect(chr_.kernel, K)
    h = inter.order
    t = K.order // h
    if gcd(k, t) != 1:
        raise ValueError(f"{k} is not coprime to t={t}")
    for u in K.elements:
        n = (g * u).order
        if pow(k, m, n) != 1 % n:
            raise ValueError("k**m must be 1 mod the order of every g*u")
    e = chr_.log(g)
    return eta(chr_.field, k, e * t) ** (m * h)


def perlis_walker(group: AbelianGroup) -> list[LinearCharacter]:
    """One character per cyclic-quotient subgroup; jointly injective on Q[G]."""
    return [character_for(group, entry) for entry in hc_subgroups(group)]
