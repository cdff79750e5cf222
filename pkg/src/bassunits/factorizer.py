"""Expressing powers of cyclotomic units as products of Bass units.

Given a subgroup H with cyclic quotient of index d, an exponent j and a
multiplier k coprime to d, the recursion below produces a word b of Bass
units (all sharing one lifted multiplier k') and a positive integer m such
that the character with kernel H sends b to the m-th power of the cyclotomic
unit at z_d**j while every other cyclic-quotient character sends b to 1.

The recursion splits on whether j is coprime to d.  If not, it descends into
the index-p subgroup containing H (pulling the cyclic-quotient family down
with it) and then cancels the one contaminated component back in the ambient
group.  If coprime, it seeds with the orbit of Bass units over the coset
a_H**j * H and recursively cancels the residue every other character sees.

The resulting certificate is self-contained and independently verifiable by
exact projection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .abelian import (
    AbelianGroup,
    GroupElement,
    HcEntry,
    Subgroup,
    full_subgroup,
    generated_by,
    group_new,
    hc_restrict,
    hc_subgroups,
    intersect,
)
from .arith import crt_lift, lcm_all, multiplicative_order, prime_factors
from .bassword import BassWord, deserialize_word, serialize_word, word_mul, word_pow
from .cyclo import CycloElement, cyclo_field, eta
from .projections import LinearCharacter
from .bassword import project_word


class CertificateFormatError(ValueError):
    """Structurally malformed certificate (distinct from a failed verification)."""


@dataclass(frozen=True)
class FactorizationTask:
    group: AbelianGroup
    entry: HcEntry
    k: int
    j: int

    def __post_init__(self):
        if gcd(self.k, self.entry.index_d) != 1:
            raise ValueError(
                f"k={self.k} must be coprime to the index {self.entry.index_d}"
            )


@dataclass(frozen=True)
class Certificate:
    task: FactorizationTask
    m: int
    k_prime: int
    word: BassWord


def _find_entry(hc: list[HcEntry], sub: Subgroup) -> HcEntry:
    for entry in hc:
        if entry.H == sub:
            return entry
    raise ValueError("subgroup not present in the cyclic-quotient family")


def _coset_log(target: GroupElement, base: GroupElement, sub: Subgroup, bound: int) -> int:
    """Smallest e in [0, bound) with target in base**e * sub."""
    x = target
    base_inv = base.inverse()
    for e in range(bound):
        if x in sub:
            return e
        x = x * base_inv
    raise ValueError("target not in the group generated by base and sub")


def _expected_projection(entry_H: HcEntry, k: int, j: int, m: int) -> CycloElement:
    """The claimed value at the target component: the cyclotomic unit power."""
    d = entry_H.index_d
    field = cyclo_field(d)
    return eta(field, k, j) ** m if d > 1 else field.one


def _torsion_exponent(k: int, d: int, j: int):
    """Order of the cyclotomic unit at z_d**j for multiplier k, if finite.

    Returns the least m >= 1 with the unit's m-th power equal to 1, or None
    when the unit has infinite order.  Torsion in Q(z_n) divides lcm(2, n),
    so a single power computation decides finiteness.
    """
    order = d // gcd(d, j) if j else 1
    if order == 1:
        return 1
    field = cyclo_field(order)
    unit = eta(field, k, 1)
    bound = order if order % 2 == 0 else 2 * order
    if unit**bound != field.one:
        return None
    for m in range(1, bound + 1):
        if bound % m == 0 and unit**m == field.one:
            return m
    raise AssertionError("unreachable")


class _Recursion:
    """One run of the factorization recursion; k' is fixed throughout."""

    def __init__(self, group: AbelianGroup, k_prime: int, paranoid: bool):
        self.group = group
        self.k_prime = k_prime
        self.paranoid = paranoid
        self._active: set = set()

    def run(self, ambient: Subgroup, hc: list[HcEntry], entry_H: HcEntry, j: int):
        m, word = self._solve(ambient, hc, entry_H, j)
        if self.paranoid:
            self._check_contract(hc, entry_H, j, m, word)
        return m, word

    def _solve(self, ambient: Subgroup, hc: list[HcEntry], entry_H: HcEntry, j: int):
        d = entry_H.index_d
        j %= d
        # Base case: the target unit is a root of unity, so a known power of
        # it is exactly 1 and the empty word certifies that power.  This
        # covers d=1, j=0, k' = +-1 mod the order of the root, and every
        # target of order at most 6 (imaginary quadratic fields have no
        # units of infinite order).  Descending residues frequently hit this
        # case, and recursing on them generically need not bottom out: two
        # residue chains can feed each other indefinitely.
        m_torsion = _torsion_exponent(self.k_prime, d, j)
        if m_torsion is not None:
            return m_torsion, BassWord.empty(self.group)
        key = (ambient._coord_set, entry_H.H._coord_set, entry_H.a_H.coords, j)
        if key in self._active:
            raise RuntimeError("factorization recursion revisited an active task")
        self._active.add(key)
        try:
            if gcd(j, d) != 1:
                return self._descend(ambient, hc, entry_H, j)
            return self._orbit(ambient, hc, entry_H, j)
        finally:
            self._active.discard(key)

    def _descend(self, ambient: Subgroup, hc: list[HcEntry], entry_H: HcEntry, j: int):
        # j shares a prime p with d: solve inside the index-p subgroup S
        # containing H, then cancel the single component of the ambient
        # family that the lifted word contaminates.
        d = entry_H.index_d
        H, a_H = entry_H.H, entry_H.a_H
        p = prime_factors(gcd(j, d))[0]
        S = generated_by(self.group, (a_H**p,) + H.generators)
        hc_S = hc_restrict(self.group, hc, S, p, ambient)
        entry_H_S = _find_entry(hc_S, H)
        m, word = self.run(S, hc_S, entry_H_S, j // p)

        H1 = generated_by(self.group, (a_H ** (d // p),) + H.generators)
        entry_H1 = _find_entry(hc, H1)
        d1 = entry_H1.index_d
        pieces = []
        for s_i, _k, m_i, q_i in word.factors:
            j_i = _coset_log(s_i, entry_H1.a_H, H1, d1)
            n_i, w_i = self.run(ambient, hc, entry_H1, j_i)
            pieces.append((n_i, w_i, m_i, q_i))
        m_prime = lcm_all(n_i for n_i, _, _, _ in pieces)
        combined = word_pow(word, m_prime)
        for n_i, w_i, m_i, q_i in pieces:
            combined = word_mul(combined, word_pow(w_i, -(q_i * m_i * (m_prime // n_i))))
        return m * m_prime, combined

    def _orbit(self, ambient: Subgroup, hc: list[HcEntry], entry_H: HcEntry, j: int):
        # j coprime to d: seed with the Bass units over the coset a_H**j * H,
        # whose projection at H is the target unit to the power m*|H|, then
        # cancel the residues seen by every other character recursively.
        H, a_H = entry_H.H, entry_H.a_H
        aj = a_H**j
        m = lcm_all(
            multiplicative_order(self.k_prime, (aj * h).order) for h in H.elements
        )
        corrections = []
        for entry_K in hc:
            if entry_K.H == H:
                continue
            d_K = entry_K.index_d
            h_K = intersect(H, entry_K.H).order
            t_K = H.order // h_K
            v_K = _coset_log(aj, entry_K.a_H, entry_K.H, d_K)
            m_K, w_K = self.run(ambient, hc, entry_K, t_K * v_K)
            corrections.append((h_K, m_K, w_K))
        n = lcm_all(m_K for _, m_K, _ in corrections)
        word = BassWord(
            self.group, [(aj * h, self.k_prime, m, n) for h in H.elements]
        )
        for h_K, m_K, w_K in corrections:
            word = word_mul(word, word_pow(w_K, -(m * h_K * (n // m_K))))
        return m * n * H.order, word

    def _check_contract(self, hc, entry_H, j, m, word):
        for entry in hc:
            chr_ = LinearCharacter(self.group, entry.H, entry.a_H, entry.index_d)
            value = project_word(chr_, word)
            if entry.H == entry_H.H:
                expected = _expected_projection(entry_H, self.k_prime, j, m)
            else:
                expected = chr_.field.one
            if value != expected:
                raise AssertionError(
                    f"recursive contract violated at index-{entry.index_d} component"
                )


def cyclotomic_as_product_of_bass(
    task: FactorizationTask, paranoid: bool = False
) -> Certificate:
    """Run the factorization recursion and package the result."""
    group = task.group
    d = task.entry.index_d
    k_prime = crt_lift(task.k, d, group.order)
    ambient = full_subgroup(group)
    hc = hc_subgroups(group)
    # Honor the generator choice carried by the task.
    hc = [task.entry if e.H == task.entry.H else e for e in hc]
    rec = _Recursion(group, k_prime, paranoid)
    m, word = rec.run(ambient, hc, task.entry, task.j)
    return Certificate(task, m, k_prime, word)


@dataclass(frozen=True)
class ComponentReport:
    index_d: int
    kernel_generators: tuple
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    components: tuple[ComponentReport, ...]

    def failing(self):
        return [c for c in self.components if not c.passed]


def verify_certificate(cert: Certificate) -> VerificationReport:
    """Exact, independent check of the certificate's projection contract."""
    _validate_structure(cert)
    group = cert.task.group
    target_H = cert.task.entry.H
    hc = hc_subgroups(group)
    hc = [cert.task.entry if e.H == target_H else e for e in hc]
    j = cert.task.j % cert.task.entry.index_d
    components = []
    for entry in hc:
        chr_ = LinearCharacter(group, entry.H, entry.a_H, entry.index_d)
        value = project_word(chr_, cert.word)
        if entry.H == target_H:
            expected = _expected_projection(cert.task.entry, cert.k_prime, j, cert.m)
        else:
            expected = chr_.field.one
        components.append(
            ComponentReport(
                entry.index_d,
                tuple(str(g) for g in entry.H.generators),
                value == expected,
            )
        )
    return VerificationReport(all(c.passed for c in components), tuple(components))


def _validate_structure(cert: Certificate) -> None:
    group = cert.task.group
    d = cert.task.entry.index_d
    if cert.m < 1:
        raise CertificateFormatError(f"m must be positive, got {cert.m}")
    if gcd(cert.k_prime, group.order) != 1:
        raise CertificateFormatError("k' must be coprime to the group order")
    if (cert.k_prime - cert.task.k) % d != 0:
        raise CertificateFormatError("k' must be congruent to k modulo the index")
    if cert.word.group != group:
        raise CertificateFormatError("word defined over a different group")
    if cert.word.trivial_prefix is not None:
        raise CertificateFormatError("certificate words carry no trivial prefix")
    closure = generated_by(group, (cert.task.entry.a_H,) + cert.task.entry.H.generators)
    if closure.order != group.order:
        raise CertificateFormatError("a_H and H do not generate the group")
    for g, k, m, q in cert.word.factors:
        if k != cert.k_prime:
            raise CertificateFormatError("all word factors must use k'")


def certificate_to_json(cert: Certificate) -> str:
    """Canonical JSON encoding; byte-stable for identical certificates."""
    doc = {
        "group": {"invariants": [str(d) for d in cert.task.group.invariants]},
        "task": {
            "H_generators": [[str(a) for a in g.coords] for g in cert.task.entry.H.generators],
            "a_H": [str(a) for a in cert.task.entry.a_H.coords],
            "k": str(cert.task.k),
            "j": str(cert.task.j),
        },
        "result": {
            "m": str(cert.m),
            "k_prime": str(cert.k_prime),
            **serialize_word(cert.word),
        },
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def certificate_from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from exc
    try:
        group = group_new([int(d) for d in doc["group"]["invariants"]])
        gens = [
            group.element([int(a) for a in coords])
            for coords in doc["task"]["H_generators"]
        ]
        H = generated_by(group, gens)
        a_H = group.element([int(a) for a in doc["task"]["a_H"]])
        entry = HcEntry(H, a_H, group.order // H.order)
        task = FactorizationTask(
            group, entry, int(doc["task"]["k"]), int(doc["task"]["j"])
        )
        result = doc["result"]
        word = deserialize_word(
            group, {"prefix": result.get("prefix"), "factors": result["factors"]}
        )
        return Certificate(task, int(result["m"]), int(result["k_prime"]), word)
    except CertificateFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from exc
