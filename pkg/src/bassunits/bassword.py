"""Formal products of Bass units with signed integer exponents.

A word is an optional trivial-unit prefix (sign, element, exponent) followed
by factors (g, k, m, q): the Bass unit for (g, k, m) raised to the signed
power q.  The unit group is abelian, so factor order is irrelevant;
normalization sorts factors canonically, merges repeats and folds the prefix
so serialization is reproducible.

Words are evaluated through characters, never expanded, except for the
small-scale expansion oracle used in tests.
"""

from __future__ import annotations

from math import gcd

from .abelian import AbelianGroup, GroupElement
from .cyclo import CycloElement, eta
from .groupring import GroupRingElement, bass_inverse, bass_unit
from .projections import LinearCharacter


class BassWord:
    __slots__ = ("group", "sign", "shift", "factors")

    def __init__(self, group: AbelianGroup, factors=(), prefix=None):
        """factors: iterable of (g, k, m, q); prefix: (sign, element, exponent).

        The prefix is folded to a canonical (sign, element) pair with implicit
        exponent 1; the empty prefix is (+1, identity).
        """
        self.group = group
        if prefix is None:
            sign, shift = 1, group.identity
        else:
            psign, pelem, pexp = prefix
            if psign not in (1, -1):
                raise ValueError(f"prefix sign must be +1 or -1, got {psign}")
            sign = psign ** (pexp % 2)
            shift = pelem**pexp
        merged: dict[tuple, int] = {}
        for g, k, m, q in factors:
            n = g.order
            if gcd(k, n) != 1 or pow(k, m, n) != 1 % n:
                raise ValueError(
                    f"invalid Bass factor: k={k}, m={m}, |g|={n}"
                )
            key = (g.coords, k, m)
            merged[key] = merged.get(key, 0) + q
        self.sign = sign
        self.shift = shift
        self.factors = tuple(
            (group.element(c), k, m, q)
            for (c, k, m), q in sorted(merged.items())
            if q != 0
        )

    @classmethod
    def empty(cls, group: AbelianGroup) -> "BassWord":
        return cls(group, ())

    def is_empty(self) -> bool:
        return not self.factors and self.sign == 1 and self.shift.is_identity()

    @property
    def trivial_prefix(self):
        """(sign, element, exponent) or None when the prefix is trivial."""
        if self.sign == 1 and self.shift.is_identity():
            return None
        return (self.sign, self.shift, 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BassWord)
            and self.group == other.group
            and self.sign == other.sign
            and self.shift == other.shift
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.group, self.sign, self.shift, self.factors))

    def __repr__(self) -> str:
        parts = []
        if self.trivial_prefix is not None:
            parts.append(f"{'-' if self.sign < 0 else ''}[{self.shift}]")
        parts.extend(f"u_{k}({m},[{g}])^{q}" for g, k, m, q in self.factors)
        return "BassWord(" + " * ".join(parts or ["1"]) + ")"


def word_mul(w1: BassWord, w2: BassWord) -> BassWord:
    if w1.group != w2.group:
        raise ValueError("words over different groups")
    return BassWord(
        w1.group,
        w1.factors + w2.factors,
        (w1.sign * w2.sign, w1.shift * w2.shift, 1),
    )


def word_pow(w: BassWord, e: int) -> BassWord:
    return BassWord(
        w.group,
        [(g, k, m, q * e) for g, k, m, q in w.factors],
        (w.sign, w.shift, e),
    )


def word_inverse(w: BassWord) -> BassWord:
    return word_pow(w, -1)


def project_word(chr_: LinearCharacter, w: BassWord) -> CycloElement:
    """Exact projection: prefix contribution times the cyclotomic-unit powers."""
    field = chr_.field
    result = field.zeta(chr_.log(w.shift))
    if w.sign < 0:
        result = -result
    for g, k, m, q in w.factors:
        base = eta(field, k, chr_.log(g))
        result = result * base ** (m * q)
    return result


def expand_to_ring(w: BassWord) -> GroupRingElement:
    """Literal product in the group ring; negative exponents via inverse units.

    Exponents out of the recursion cascades make this infeasible at scale;
    it exists as a small-scale oracle for the projection path.
    """
    result = GroupRingElement.from_element(w.shift, w.sign)
    for g, k, m, q in w.factors:
        base = bass_unit(g, k, m) if q > 0 else bass_inverse(g, k, m)
        result = result * base ** abs(q)
    return result


def serialize_word(w: BassWord) -> dict:
    prefix = None
    if w.trivial_prefix is not None:
        sign, elem, exp = w.trivial_prefix
        prefix = {
            "sign": str(sign),
            "element": [str(a) for a in elem.coords],
            "exponent": str(exp),
        }
    return {
        "prefix": prefix,
        "factors": [
            {
                "g": [str(a) for a in g.coords],
                "k": str(k),
                "m": str(m),
                "q": str(q),
            }
            for g, k, m, q in w.factors
        ],
    }


def deserialize_word(group: AbelianGroup, data: dict) -> BassWord:
    prefix = None
    if data.get("prefix") is not None:
        p = data["prefix"]
        prefix = (
            int(p["sign"]),
            group.element([int(a) for a in p["element"]]),
            int(p["exponent"]),
        )
    factors = [
        (
            group.element([int(a) for a in f["g"]]),
            int(f["k"]),
            int(f["m"]),
            int(f["q"]),
        )
        for f in data["factors"]
    ]
    return BassWord(group, factors, prefix)
