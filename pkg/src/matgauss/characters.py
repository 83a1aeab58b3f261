"""Additive and multiplicative characters of F_q and their character sums.

All values for one field live in a single ring Z[zeta_m] with m = p*(q-1):
since gcd(p, q-1) = 1, zeta_p = zeta_m^(q-1) and zeta_(q-1) = zeta_m^p, so
additive and multiplicative character values mix without order lifting.

Each character value is a single power of zeta_m; characters therefore expose
``exponent(x)`` alongside the ring-valued evaluation, and whole sums are
tallied as counts of powers and reduced to canonical form once at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .budget import check_budget
from .cyclotomic import CyclotomicInteger, CyclotomicRing, get_ring
from .finite_field import Field, FieldElement, MultGroupTable


def value_ring(field: Field) -> CyclotomicRing:
    """The ring Z[zeta_m], m = p*(q-1), holding every character sum."""
    return get_ring(field.p * (field.q - 1))


@dataclass(frozen=True)
class AdditiveCharacter:
    """x -> zeta_p^(tr(a*x)); nontrivial exactly when the twist a is nonzero."""

    a: FieldElement

    @property
    def field(self) -> Field:
        return self.a.field

    @property
    def is_trivial(self) -> bool:
        return self.a.enc == 0

    def exponent(self, x: FieldElement) -> int:
        """k with value zeta_m^k, m = p*(q-1)."""
        f = self.field
        t = f.trace_enc(f.mul_enc(self.a.enc, x.enc))
        return t * (f.q - 1)

    def __call__(self, x: FieldElement) -> CyclotomicInteger:
        if x.field != self.field:
            raise ValueError("argument from a different field")
        return value_ring(self.field).root_power(self.exponent(x))


@dataclass(frozen=True)
class MultiplicativeCharacter:
    """x -> zeta_(q-1)^(index * dlog(x)) on F_q^*; index 0 is the trivial one."""

    table: MultGroupTable
    index: int

    def __post_init__(self):
        q = self.table.field.q
        if not 0 <= self.index < max(q - 1, 1):
            raise ValueError(f"character index {self.index} out of range [0, {q - 1})")

    @property
    def field(self) -> Field:
        return self.table.field

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    def conjugate(self) -> "MultiplicativeCharacter":
        q = self.field.q
        return MultiplicativeCharacter(self.table, (q - 1 - self.index) % (q - 1))

    def exponent(self, x: FieldElement) -> int:
        if x.enc == 0:
            raise ZeroDivisionError("multiplicative character is undefined at zero")
        f = self.field
        return f.p * (self.index * self.table.dlog[x.enc] % (f.q - 1))

    def __call__(self, x: FieldElement) -> CyclotomicInteger:
        if x.field != self.field:
            raise ValueError("argument from a different field")
        return value_ring(self.field).root_power(self.exponent(x))


def classical_gauss_sum(chi: MultiplicativeCharacter, lam: AdditiveCharacter) -> CyclotomicInteger:
    """sum over nonzero x of chi(x) * lam(x), exactly."""
    field = chi.field
    if field != lam.field:
        raise ValueError("characters live on different fields")
    ring = value_ring(field)
    counts = [0] * ring.m
    for enc in range(1, field.q):
        x = FieldElement(field, enc)
        counts[(chi.exponent(x) + lam.exponent(x)) % ring.m] += 1
    return ring.from_power_counts(counts)


@lru_cache(maxsize=64)
def _kloosterman_levels(lam: AdditiveCharacter, n: int):
    """Power-count vectors of K_t(lam, y) for t = n, indexed by encoding of y.

    K_1(y) = lam(y); K_t(y) = sum over nonzero x of lam(x) * K_(t-1)(y/x).
    Multiplying by lam(x) is a cyclic shift of the count vector, so each
    level costs O(q^2 * m) integer additions.
    """
    field = lam.field
    m = value_ring(field).m
    q = field.q
    if n == 1:
        out: list = [None] * q
        for y in range(1, q):
            vec = [0] * m
            vec[lam.exponent(FieldElement(field, y)) % m] = 1
            out[y] = tuple(vec)
        return tuple(out)
    prev = _kloosterman_levels(lam, n - 1)
    shifts = [(x, lam.exponent(FieldElement(field, x)) % m) for x in range(1, q)]
    mul, inv = field.mul_enc, field.inv_enc
    out = [None] * q
    for y in range(1, q):
        acc = [0] * m
        for x, k in shifts:
            pv = prev[mul(y, inv(x))]
            for i, c in enumerate(pv):
                if c:
                    acc[(i + k) % m] += c
        out[y] = tuple(acc)
    return tuple(out)


def kloosterman(lam: AdditiveCharacter, n: int, y: FieldElement) -> CyclotomicInteger:
    """Hyper-Kloosterman sum over n-tuples of product y, via the DP recursion."""
    if n < 1:
        raise ValueError(f"tuple length must be >= 1, got {n}")
    if y.enc == 0:
        raise ValueError("Kloosterman sums need a nonzero product target")
    field = lam.field
    if y.field != field:
        raise ValueError("argument from a different field")
    levels = _kloosterman_levels(lam, n)
    return value_ring(field).from_power_counts(list(levels[y.enc]))


def kloosterman_bruteforce(
    lam: AdditiveCharacter, n: int, y: FieldElement, budget: int | None = None
) -> CyclotomicInteger:
    """Oracle for the DP: enumerate all (q-1)^(n-1) tuples directly."""
    if n < 1:
        raise ValueError(f"tuple length must be >= 1, got {n}")
    if y.enc == 0:
        raise ValueError("Kloosterman sums need a nonzero product target")
    field = lam.field
    if y.field != field:
        raise ValueError("argument from a different field")
    q = field.q
    check_budget((q - 1) ** (n - 1), budget, "hyper-Kloosterman enumeration")
    ring = value_ring(field)
    m = ring.m
    exps = [0] + [lam.exponent(FieldElement(field, x)) % m for x in range(1, q)]
    mul, inv = field.mul_enc, field.inv_enc
    counts = [0] * m
    for tup in itertools.product(range(1, q), repeat=n - 1):
        prod = 1
        s = 0
        for x in tup:
            prod = mul(prod, x)
            s += exps[x]
        last = mul(y.enc, inv(prod))
        counts[(s + exps[last]) % m] += 1
    return ring.from_power_counts(counts)


def clear_character_caches() -> None:
    _kloosterman_levels.cache_clear()
