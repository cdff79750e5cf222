"""Finite abelian groups in invariant-factor form.

A group is a divisor chain d1 | d2 | ... | dr (each >= 2); an element is its
exponent vector, component i reduced mod di.  Subgroups carry their full
element set: group orders here are desk scale, so canonical equality,
membership and intersection are plain set operations.

``hc_subgroups`` enumerates the family of subgroups H with cyclic quotient
G/H.  These are exactly the kernels of the |G| linear characters of G, which
is how they are computed; each comes with a deterministically chosen element
a_H such that <a_H, H> = G.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from math import gcd, prod

from .arith import lcm_all, prime_factors


def _invariant_factors(moduli) -> tuple[int, ...]:
    """Merge arbitrary positive moduli into a canonical divisor chain."""
    exponents: dict[int, list[int]] = {}
    for m in moduli:
        if m < 1:
            raise ValueError(f"invariants must be positive, got {m}")
        if m == 1:
            continue
        for p in set(prime_factors(m)):
            e = 0
            mm = m
            while mm % p == 0:
                mm //= p
                e += 1
            exponents.setdefault(p, []).append(e)
    length = max((len(v) for v in exponents.values()), default=0)
    chain = [1] * length
    for p, exps in exponents.items():
        exps.sort(reverse=True)
        # Largest prime power goes into the last invariant.
        for i, e in enumerate(exps):
            chain[length - 1 - i] *= p**e
    return tuple(chain)


@dataclass(frozen=True)
class AbelianGroup:
    invariants: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariants)

    @property
    def exponent(self) -> int:
        return self.invariants[-1] if self.invariants else 1

    def element(self, coords) -> "GroupElement":
        coords = tuple(coords)
        if len(coords) != len(self.invariants):
            raise ValueError(
                f"expected {len(self.invariants)} coordinates, got {len(coords)}"
            )
        return GroupElement(self, tuple(c % d for c, d in zip(coords, self.invariants)))

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.invariants))

    def elements(self) -> tuple["GroupElement", ...]:
        return _elements_of(self)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.invariants) if self.invariants else "1"


@cache
def _elements_of(group: AbelianGroup) -> tuple["GroupElement", ...]:
    return tuple(
        GroupElement(group, coords)
        for coords in itertools.product(*(range(d) for d in group.invariants))
    )


def group_new(invariants) -> AbelianGroup:
    """Group with the given invariants, normalized to a divisor chain."""
    return AbelianGroup(_invariant_factors(invariants))


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    coords: tuple[int, ...]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return GroupElement(
            self.group,
            tuple(
                (a + b) % d
                for a, b, d in zip(self.coords, other.coords, self.group.invariants)
            ),
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple((-a) % d for a, d in zip(self.coords, self.group.invariants)),
        )

    def __pow__(self, e: int) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple((a * e) % d for a, d in zip(self.coords, self.group.invariants)),
        )

    @property
    def order(self) -> int:
        return lcm_all(
            d // gcd(a, d) for a, d in zip(self.coords, self.group.invariants)
        )

    def is_identity(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.coords)


def element_order(group: AbelianGroup, g: GroupElement) -> int:
    return g.order


class Subgroup:
    """Subgroup as an explicit, canonically sorted element set."""

    def __init__(self, group: AbelianGroup, generators, elements):
        self.group = group
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements, key=lambda g: g.coords))
        self._coord_set = frozenset(g.coords for g in self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g.coords in self._coord_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group == other.group
            and self._coord_set == other._coord_set
        )

    def __hash__(self) -> int:
        return hash((self.group, self._coord_set))

    def __le__(self, other: "Subgroup") -> bool:
        return self._coord_set <= other._coord_set

    def __repr__(self) -> str:
        gens = ";".join(str(g) for g in self.generators)
        return f"Subgroup(<{gens}>, order={self.order})"


def generated_by(group: AbelianGroup, elements) -> Subgroup:
    """Subgroup generated by the given elements (closure by saturation)."""
    gens = tuple(elements)
    seen = {group.identity.coords: group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = g * h
                if gh.coords not in seen:
                    seen[gh.coords] = gh
                    nxt.append(gh)
        frontier = nxt
    return Subgroup(group, gens, seen.values())


def trivial_subgroup(group: AbelianGroup) -> Subgroup:
    return generated_by(group, ())


@cache
def full_subgroup(group: AbelianGroup) -> Subgroup:
    gens = tuple(
        group.element(tuple(1 if j == i else 0 for j in range(len(group.invariants))))
        for i in range(len(group.invariants))
    )
    return Subgroup(group, gens, group.elements())


def intersect(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.group != b.group:
        raise ValueError("subgroups of different groups")
    common = [g for g in a.elements if g in b]
    return Subgroup(a.group, common, common)


def index(ambient, sub: Subgroup) -> int:
    total = ambient.order
    if total % sub.order != 0:
        raise ValueError("not a subgroup of the ambient group")
    return total // sub.order


def contains(sub: Subgroup, g: GroupElement) -> bool:
    return g in sub


def coset_reps(ambient: Subgroup, sub: Subgroup) -> list[GroupElement]:
    """One representative per coset of sub in ambient, lex-first."""
    reps = []
    covered = set()
    for g in ambient.elements:
        if g.coords not in covered:
            reps.append(g)
            covered.update((g * h).coords for h in sub.elements)
    return reps


@dataclass(frozen=True)
class HcEntry:
    """A subgroup H with cyclic quotient, its chosen generator data.

    a_H satisfies <a_H, H> = ambient and index_d = [ambient : H].
    """

    H: Subgroup
    a_H: GroupElement
    index_d: int


def _quotient_order(g: GroupElement, sub: Subgroup) -> int:
    """Order of the image of g in ambient/sub."""
    e = 1
    x = g
    while x not in sub:
        x = x * g
        e += 1
    return e


def _quotient_generator(ambient: Subgroup, sub: Subgroup) -> GroupElement:
    """Lex-smallest element of ambient whose image generates ambient/sub."""
    d = ambient.order // sub.order
    for g in ambient.elements:
        if _quotient_order(g, sub) == d:
            return g
    raise ValueError("quotient is not cyclic")


def cyclic_subgroups(group: AbelianGroup) -> list[tuple[Subgroup, GroupElement]]:
    """All cyclic subgroups with a deterministic generator (lex-first)."""
    found: dict[frozenset, tuple[Subgroup, GroupElement]] = {}
    for g in group.elements():
        sub = generated_by(group, (g,))
        if sub._coord_set not in found:
            found[sub._coord_set] = (sub, g)
    return sorted(found.values(), key=lambda cs: (cs[0].order, cs[0].elements[0].coords, cs[1].coords))


def _character_kernel(group: AbelianGroup, chi: tuple[int, ...]) -> Subgroup:
    """Kernel of the linear character indexed by the tuple chi."""
    e = group.exponent
    members = [
        g
        for g in group.elements()
        if sum(c * a * (e // d) for c, a, d in zip(chi, g.coords, group.invariants)) % e == 0
    ]
    return Subgroup(group, members, members)


def hc_subgroups(group: AbelianGroup) -> list[HcEntry]:
    """All subgroups H of G with G/H cyclic, via character kernels."""
    ambient = full_subgroup(group)
    kernels: dict[frozenset, Subgroup] = {}
    for chi in itertools.product(*(range(d) for d in group.invariants)):
        ker = _character_kernel(group, chi)
        kernels.setdefault(ker._coord_set, ker)
    entries = []
    for ker in kernels.values():
        a = _quotient_generator(ambient, ker)
        entries.append(HcEntry(ker, a, group.order // ker.order))
    entries.sort(key=lambda en: (en.index_d, en.H.elements[0].coords, tuple(g.coords for g in en.H.elements)))
    return entries


def hc_entries_of(group: AbelianGroup, ambient: Subgroup) -> list[HcEntry]:
    """Subgroups of ``ambient`` with cyclic quotient, computed directly.

    Characters of the full group restrict onto ambient surjectively, so the
    family is obtained by intersecting every full-group kernel with ambient.
    """
    if ambient == full_subgroup(group):
        return hc_subgroups(group)
    found: dict[frozenset, Subgroup] = {}
    for entry in hc_subgroups(group):
        y = intersect(entry.H, ambient)
        found.setdefault(y._coord_set, y)
    entries = []
    for y in found.values():
        a = _quotient_generator(ambient, y)
        entries.append(HcEntry(y, a, ambient.order // y.order))
    entries.sort(key=lambda en: (en.index_d, en.H.elements[0].coords, tuple(g.coords for g in en.H.elements)))
    return entries


def hc_restrict(
    group: AbelianGroup,
    hc_of_ambient: list[HcEntry],
    sub: Subgroup,
    p: int | None = None,
    ambient: Subgroup | None = None,
) -> list[HcEntry]:
    """Transfer a cyclic-quotient family from ambient down to sub.

    sub must have prime index p in ambient (or equal ambient, in which case
    the input is returned unchanged).  Entries K contained in sub are reused
    with generator a_K**p; for K not contained in sub the intersection is
    taken, skipping duplicates, with the generator chosen lex-first from the
    part of the coset a_K K lying inside sub.  ambient defaults to the full
    group.
    """
    if ambient is None:
        ambient = full_subgroup(group)
    if sub == ambient:
        return list(hc_of_ambient)
    idx = ambient.order // sub.order
    if p is None:
        p = idx
    if p != idx or len(prime_factors(p)) != 1:
        raise ValueError(f"index of the subgroup must be the prime {p}")
    out: list[HcEntry] = []
    seen: set[frozenset] = set()
    for entry in hc_of_ambient:
        if entry.H <= sub:
            out.append(HcEntry(entry.H, entry.a_H**p, sub.order // entry.H.order))
            seen.add(entry.H._coord_set)
    for entry in hc_of_ambient:
        if entry.H <= sub:
            continue
        y = intersect(entry.H, sub)
        if y._coord_set in seen:
            continue
        seen.add(y._coord_set)
        candidates = sorted(
            (entry.a_H * u for u in entry.H.elements if (entry.a_H * u) in sub),
            key=lambda g: g.coords,
        )
        out.append(HcEntry(y, candidates[0], sub.order // y.order))
    return out


def parse_group(text: str) -> AbelianGroup:
    """Parse an invariant list like "2,4"; "1" denotes the trivial group."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        invariants = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad group description {text!r}") from exc
    return group_new(invariants)


def parse_element(group: AbelianGroup, text: str) -> GroupElement:
    """Parse a coordinate vector like "1,0"."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        coords = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad element coordinates {text!r}") from exc
    return group.element(coords)
