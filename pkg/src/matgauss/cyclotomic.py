"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

A value is an integer vector in the power basis 1, zeta, ..., zeta^(phi(m)-1),
always reduced modulo the m-th cyclotomic polynomial, so ring equality is
plain coefficient comparison.  Coefficients are Python ints and never
overflow, which matters because brute-force character sums can run over
groups with ~10^7 elements.

Character sums are most naturally accumulated as integer multiples of powers
zeta^k with 0 <= k < m; ``CyclotomicRing.from_power_counts`` turns such a
tally into a canonical value with a single reduction.  Reduction rows
(the power-basis coordinates of zeta^k for k >= phi(m)) are built lazily and
cached per ring.

A double-precision complex embedding is provided for magnitude checks only;
it is never used to decide equality.
"""

from __future__ import annotations

import cmath
import threading
from functools import lru_cache

MAX_ORDER = 10**6


def _factor_squarefree_part(m: int) -> list[int]:
    primes = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            primes.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        primes.append(m)
    return primes


def _mul_by_x_pow_minus_one(poly: list[int], d: int) -> list[int]:
    out = [0] * (len(poly) + d)
    for i, c in enumerate(poly):
        if c:
            out[i] -= c
            out[i + d] += c
    return out


def _div_by_x_pow_minus_one(poly: list[int], d: int) -> list[int]:
    deg = len(poly) - 1
    qdeg = deg - d
    quot = [0] * (qdeg + 1)
    for j in range(qdeg, -1, -1):
        quot[j] = poly[j + d] + (quot[j + d] if j + d <= qdeg else 0)
    if _mul_by_x_pow_minus_one(quot, d) != poly:
        raise ArithmeticError("inexact polynomial division")  # unreachable
    return quot


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, little-endian.

    Computed from the Moebius product over the squarefree divisors t of m:
    multiply (x^(m/t) - 1) when t has an even number of prime factors,
    divide by it when odd.  All divisions are exact.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"order must be a positive integer, got {m}")
    if m > MAX_ORDER:
        raise ValueError(f"order {m} exceeds the supported bound {MAX_ORDER}")
    primes = _factor_squarefree_part(m)
    mul_degrees: list[int] = []
    div_degrees: list[int] = []
    for mask in range(1 << len(primes)):
        t = 1
        bits = 0
        for i, pr in enumerate(primes):
            if mask >> i & 1:
                t *= pr
                bits += 1
        (mul_degrees if bits % 2 == 0 else div_degrees).append(m // t)
    poly = [1]
    for d in sorted(mul_degrees):
        poly = _mul_by_x_pow_minus_one(poly, d)
    for d in sorted(div_degrees):
        poly = _div_by_x_pow_minus_one(poly, d)
    return tuple(poly)


class CyclotomicRing:
    """Z[zeta_m], holding the reduction data shared by its elements."""

    def __init__(self, m: int):
        self.m = m
        self.polynomial = cyclotomic_polynomial(m)
        self.degree = len(self.polynomial) - 1
        # row k - degree holds the power-basis coordinates of zeta^k;
        # grown lazily under the lock so concurrent workers cannot interleave
        self._rows: list[tuple[int, ...]] = []
        self._rows_lock = threading.Lock()

    def __repr__(self):
        return f"CyclotomicRing({self.m})"

    def _ensure_rows(self, k: int) -> None:
        d = self.degree
        rows = self._rows
        if len(rows) >= k - d + 1:
            return
        with self._rows_lock:
            if not rows:
                rows.append(tuple(-c for c in self.polynomial[:d]))
            top = rows[0]
            while len(rows) < k - d + 1:
                prev = rows[-1]
                lead = prev[d - 1]
                nxt = [0]
                nxt.extend(prev[: d - 1])
                if lead:
                    for i in range(d):
                        nxt[i] += lead * top[i]
                rows.append(tuple(nxt))

    def root_power(self, k: int) -> "CyclotomicInteger":
        """zeta_m^k, reduced into the power basis."""
        k %= self.m
        d = self.degree
        if k < d:
            coeffs = [0] * d
            coeffs[k] = 1
            return CyclotomicInteger(self.m, tuple(coeffs))
        self._ensure_rows(k)
        return CyclotomicInteger(self.m, self._rows[k - d])

    def from_int(self, value: int) -> "CyclotomicInteger":
        coeffs = [0] * self.degree
        coeffs[0] = value
        return CyclotomicInteger(self.m, tuple(coeffs))

    def zero(self) -> "CyclotomicInteger":
        return self.from_int(0)

    def one(self) -> "CyclotomicInteger":
        return self.from_int(1)

    def element(self, coeffs) -> "CyclotomicInteger":
        cs = tuple(coeffs)
        if len(cs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(cs)}")
        return CyclotomicInteger(self.m, cs)

    def from_power_counts(self, counts) -> "CyclotomicInteger":
        """Exact value of sum(counts[k] * zeta^k); indices beyond m wrap."""
        m, d = self.m, self.degree
        if len(counts) > m:
            folded = [0] * m
            for k, c in enumerate(counts):
                if c:
                    folded[k % m] += c
            counts = folded
        coeffs = list(counts[:d])
        coeffs.extend([0] * (d - len(coeffs)))
        top = [k for k in range(d, len(counts)) if counts[k]]
        if top:
            self._ensure_rows(top[-1])
            rows = self._rows
            for k in top:
                c = counts[k]
                row = rows[k - d]
                for i, r in enumerate(row):
                    if r:
                        coeffs[i] += c * r
        return CyclotomicInteger(m, tuple(coeffs))


@lru_cache(maxsize=32)
def get_ring(m: int) -> CyclotomicRing:
    return CyclotomicRing(m)


class CyclotomicInteger:
    """An element of Z[zeta_m] in canonical power-basis coordinates."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: tuple[int, ...]):
        self.m = m
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, m: int, value: int) -> "CyclotomicInteger":
        return get_ring(m).from_int(value)

    def _coerce(self, other):
        if isinstance(other, CyclotomicInteger):
            if other.m != self.m:
                raise ValueError(
                    f"mixed root orders: zeta_{self.m} vs zeta_{other.m}"
                )
            return other
        if isinstance(other, int):
            return get_ring(self.m).from_int(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CyclotomicInteger(
            self.m, tuple(a + b for a, b in zip(self.coeffs, rhs.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CyclotomicInteger(
            self.m, tuple(a - b for a, b in zip(self.coeffs, rhs.coeffs))
        )

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __neg__(self):
        return CyclotomicInteger(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.m, tuple(a * other for a in self.coeffs))
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return get_ring(self.m).from_power_counts(conv)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[zeta_m]")
        result = get_ring(self.m).one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = get_ring(self.m).from_int(other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"CyclotomicInteger(m={self.m}, coeffs={list(self.coeffs)})"

    def abs_embed(self) -> float:
        """|value| under zeta_m -> exp(2 pi i / m), in double precision."""
        m = self.m
        total = 0j
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * cmath.exp(2j * cmath.pi * i / m)
        return abs(total)

    def to_json_dict(self) -> dict:
        return {"m": self.m, "coeffs": list(self.coeffs), "abs": self.abs_embed()}


def zeta_pow(m: int, k: int) -> CyclotomicInteger:
    """zeta_m^k in the power basis (k may be any integer)."""
    return get_ring(m).root_power(k)


def abs_embed(value: CyclotomicInteger) -> float:
    return value.abs_embed()
