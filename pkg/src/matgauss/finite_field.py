"""Finite fields F_q with q = p^e, built deterministically.

Elements are polynomials over F_p modulo a fixed monic irreducible polynomial
of degree e.  An element with little-endian coefficients (c_0, ..., c_{e-1})
has the canonical integer encoding sum(c_i * p**i); every piece of I/O in this
package speaks that encoding.  The modulus is the first irreducible monic
polynomial of degree e in encoding order, so two constructions of F_{p^e}
always agree, and the multiplicative generator is the first element (again in
encoding order) of full order, which makes character indexing reproducible.

For e = 1 all arithmetic short-circuits to plain integers mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

DEFAULT_MAX_Q = 2**20

# largest q for which encoding-level add/mul/inv lookup tables are built
_LUT_MAX_Q = 256


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for the p <= 2**31 we allow."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def distinct_prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (empty for n <= 1)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomials over F_p as little-endian coefficient lists.


def _poly_trim(a: list[int]) -> list[int]:
    k = len(a)
    while k > 0 and a[k - 1] == 0:
        k -= 1
    return a[:k]


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    """a*b mod (modulus, p); modulus is monic, result has len(modulus)-1 slots."""
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1 or 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            off = k - e
            for j in range(e):
                mj = modulus[j]
                if mj:
                    prod[off + j] = (prod[off + j] - c * mj) % p
    out = prod[:e]
    out.extend([0] * (e - len(out)))
    return out


def _poly_powmod(a: list[int], k: int, modulus: list[int], p: int) -> list[int]:
    e = len(modulus) - 1
    result = [1] + [0] * (e - 1)
    base = list(a)
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, modulus, p)
        k >>= 1
        if k:
            base = _poly_mulmod(base, base, modulus, p)
    return result


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over F_p; b must be nonzero."""
    a = [c % p for c in a]
    b = _poly_trim([c % p for c in b])
    db = len(b) - 1
    inv_lead = pow(b[db], -1, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            f = c * inv_lead % p
            off = k - db
            for j in range(db + 1):
                a[off + j] = (a[off + j] - f * b[j]) % p
    return _poly_trim(a)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Uses the classic criterion: x^(p^e) == x mod poly, and for every prime
    r | e the polynomial gcd(x^(p^(e/r)) - x, poly) is constant.
    """
    e = len(poly) - 1
    if e == 1:
        return True
    x = [0, 1] + [0] * (e - 2)

    def frobenius_power(steps: int) -> list[int]:
        t = list(x)
        for _ in range(steps):
            t = _poly_powmod(t, p, poly, p)
        return t

    if _poly_trim(frobenius_power(e)) != [0, 1]:
        return False
    for r in distinct_prime_factors(e):
        t = frobenius_power(e // r)
        diff = [(ti - xi) % p for ti, xi in zip(t, x)]
        if len(_poly_trim(_poly_gcd(diff, poly, p))) - 1 != 0:
            return False
    return True


def _first_irreducible(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible degree-e polynomial in encoding order."""
    for k in range(p**e):
        coeffs = []
        v = k
        for _ in range(e):
            coeffs.append(v % p)
            v //= p
        cand = coeffs + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class Field:
    """The finite field with q = p**e elements; immutable and shareable."""

    __slots__ = ("p", "e", "q", "modulus", "_hash", "_mult_table",
                 "_trace_basis", "_add_lut", "_mul_lut", "_inv_lut")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        self._hash = hash((p, self.modulus))
        self._mult_table = None
        self._trace_basis = None
        self._add_lut = None
        self._mul_lut = None
        self._inv_lut = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e})"

    # -- element constructors ------------------------------------------------

    def element(self, encoding: int) -> "FieldElement":
        return FieldElement(self, encoding)

    def from_coeffs(self, coeffs) -> "FieldElement":
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.e:
            raise ValueError(f"expected at most {self.e} coefficients")
        cs.extend([0] * (self.e - len(cs)))
        return FieldElement(self, self.coeffs_to_enc(cs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements, zero first, in encoding order."""
        for k in range(self.q):
            yield FieldElement(self, k)

    # -- encoding codecs -----------------------------------------------------

    def enc_to_coeffs(self, enc: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(enc % p)
            enc //= p
        return tuple(out)

    def coeffs_to_enc(self, coeffs) -> int:
        enc = 0
        for c in reversed(coeffs):
            enc = enc * self.p + c
        return enc

    # -- encoding-level arithmetic --------------------------------------------
    # Integers in [0, q); these are the hot-loop primitives.

    def add_enc(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        lut = self._add_lut
        if lut is not None:
            return lut[a * self.q + b]
        p = self.p
        return self.coeffs_to_enc(
            [(x + y) % p for x, y in zip(self.enc_to_coeffs(a), self.enc_to_coeffs(b))]
        )

    def neg_enc(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return self.coeffs_to_enc([(-x) % p for x in self.enc_to_coeffs(a)])

    def sub_enc(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add_enc(a, self.neg_enc(b))

    def mul_enc(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        lut = self._mul_lut
        if lut is not None:
            return lut[a * self.q + b]
        if a == 0 or b == 0:
            return 0
        prod = _poly_mulmod(
            list(self.enc_to_coeffs(a)), list(self.enc_to_coeffs(b)),
            list(self.modulus), self.p,
        )
        return self.coeffs_to_enc(prod)

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.e == 1:
            return pow(a, -1, self.p)
        lut = self._inv_lut
        if lut is not None:
            return lut[a]
        return self.pow_enc(a, self.q - 2)

    def pow_enc(self, a: int, k: int) -> int:
        if k < 0:
            a = self.inv_enc(a)
            k = -k
        if a == 0:
            return 0 if k else 1
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul_enc(result, base)
            k >>= 1
            if k:
                base = self.mul_enc(base, base)
        return result

    def trace_enc(self, a: int) -> int:
        """Trace down to F_p, as an integer in [0, p)."""
        if self.e == 1:
            return a
        basis = self._trace_basis
        if basis is None:
            basis = self._compute_trace_basis()
        coeffs = self.enc_to_coeffs(a)
        return sum(c * t for c, t in zip(coeffs, basis)) % self.p

    def _compute_trace_basis(self) -> tuple[int, ...]:
        basis = []
        for i in range(self.e):
            enc = self.p**i
            acc = enc
            t = enc
            for _ in range(self.e - 1):
                t = self.pow_enc(t, self.p)
                acc = self.add_enc(acc, t)
            if acc >= self.p:
                raise AssertionError("trace left the prime subfield")
            basis.append(acc)
        self._trace_basis = tuple(basis)
        return self._trace_basis

    def ensure_tables(self) -> None:
        """Precompute encoding lookup tables; only worthwhile for small q."""
        if self.e == 1 or self.q > _LUT_MAX_Q or self._mul_lut is not None:
            return
        q = self.q
        add = [0] * (q * q)
        mul = [0] * (q * q)
        coeffs = [self.enc_to_coeffs(a) for a in range(q)]
        p = self.p
        modulus = list(self.modulus)
        for a in range(q):
            ca = list(coeffs[a])
            base = a * q
            for b in range(q):
                cb = coeffs[b]
                add[base + b] = self.coeffs_to_enc([(x + y) % p for x, y in zip(ca, cb)])
                if a and b:
                    mul[base + b] = self.coeffs_to_enc(_poly_mulmod(ca, list(cb), modulus, p))
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow_enc(a, q - 2)
        self._add_lut = add
        self._mul_lut = mul
        self._inv_lut = inv


class FieldElement:
    """An element of a Field, identified by its canonical integer encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field: Field, enc: int):
        if not 0 <= enc < field.q:
            raise ValueError(f"encoding {enc} out of range for F_{field.q}")
        self.field = field
        self.enc = enc

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.enc_to_coeffs(self.enc)

    def is_zero(self) -> bool:
        return self.enc == 0

    def __bool__(self):
        return self.enc != 0

    def _same_field(self, other: "FieldElement") -> Field:
        f = self.field
        if f is not other.field and f != other.field:
            raise ValueError("elements of different fields")
        return f

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        f = self._same_field(other)
        return FieldElement(f, f.add_enc(self.enc, other.enc))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        f = self._same_field(other)
        return FieldElement(f, f.sub_enc(self.enc, other.enc))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_enc(self.enc))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        f = self._same_field(other)
        return FieldElement(f, f.mul_enc(self.enc, other.enc))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        f = self._same_field(other)
        return FieldElement(f, f.mul_enc(self.enc, f.inv_enc(other.enc)))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_enc(self.enc))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow_enc(self.enc, k))

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.enc == other.enc and self.field == other.field

    def __hash__(self):
        return hash((self.enc, self.field._hash))

    def __repr__(self):
        return f"F{self.field.q}({self.enc})"


@dataclass(frozen=True, eq=False)
class MultGroupTable:
    """A generator of F_q^* together with the full discrete-log table.

    ``dlog`` is indexed by canonical encoding; the entry for zero is -1.
    generator ** dlog[x] == x for every nonzero x.
    """

    field: Field
    generator: FieldElement
    dlog: tuple[int, ...]

    def dlog_of(self, x: FieldElement) -> int:
        if x.enc == 0:
            raise ZeroDivisionError("zero has no discrete logarithm")
        return self.dlog[x.enc]


def build_mult_table(field: Field) -> MultGroupTable:
    """Find the canonical generator of F_q^* and tabulate discrete logs.

    The generator is the first element in encoding order of full order,
    i.e. with g^((q-1)/r) != 1 for every prime r dividing q-1.
    """
    if field._mult_table is not None:
        return field._mult_table
    q = field.q
    factors = distinct_prime_factors(q - 1)
    gen_enc = None
    for g in range(1, q):
        if all(field.pow_enc(g, (q - 1) // r) != 1 for r in factors):
            gen_enc = g
            break
    if gen_enc is None:
        raise RuntimeError("no generator found")  # unreachable: F_q^* is cyclic
    dlog = [-1] * q
    acc = 1
    for k in range(q - 1):
        dlog[acc] = k
        acc = field.mul_enc(acc, gen_enc)
    if acc != 1:
        raise AssertionError("generator order is not q - 1")
    table = MultGroupTable(field, field.element(gen_enc), tuple(dlog))
    field._mult_table = table
    return table


def trace_to_prime(x: FieldElement) -> int:
    """tr(x) = x + x^p + ... + x^(p^(e-1)), as an integer in [0, p)."""
    return x.field.trace_enc(x.enc)


def enumerate_elements(field: Field) -> Iterator[FieldElement]:
    """All q elements in canonical order (zero first)."""
    return field.elements()


@lru_cache(maxsize=None)
def _make_field_cached(p: int, e: int) -> Field:
    return Field(p, e, _first_irreducible(p, e))


def make_field(p: int, e: int = 1, max_q: int = DEFAULT_MAX_Q) -> Field:
    """Construct F_{p^e} with the deterministic modulus choice.

    Raises ValueError for non-prime p, e < 1, or p**e beyond max_q.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if p**e > max_q:
        raise ValueError(f"field size {p}^{e} exceeds the budget of {max_q}")
    return _make_field_cached(p, e)
