"""Square matrices over F_q.

Provides determinant, trace, partial trace, rank, the entrywise (Frobenius)
product, rank normal form with explicit transformation matrices (plus the
determinant-one refinement available below full rank), and exhaustive
enumeration of GL_n and SL_n.

Enumeration generates all q^(n*n) candidate matrices in lexicographic order
of the flattened entry encodings and filters by determinant.  The compact
member stream from ``gl_members``/``sl_members`` is the single source of
truth for every brute-force oracle in this package.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator

from .budget import EnumerationBudgetError, check_budget, resolve_budget
from .finite_field import Field, FieldElement

__all__ = [
    "MatrixFq",
    "frobenius_product",
    "rank_normal_form",
    "sl_rank_normal_form",
    "enumerate_gl",
    "enumerate_sl",
    "gl_members",
    "sl_members",
    "canonical_rank_matrix",
    "random_matrix",
    "random_invertible",
    "random_rank_matrix",
    "EnumerationBudgetError",
    "resolve_budget",
]

MAX_DIMENSION = 8

# cap (in stored ints) on the cached compact enumeration of one group
_MEMBER_CACHE_MAX_INTS = 4_000_000

_GL_CACHE: dict[tuple[Field, int], tuple] = {}


class MatrixFq:
    """An n x n matrix over a finite field, stored as encoded entries."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        norm: list[tuple[int, ...]] = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.field != field:
                        raise ValueError("matrix entries from a different field")
                    out.append(x.enc)
                else:
                    enc = int(x)
                    if not 0 <= enc < field.q:
                        raise ValueError(f"entry encoding {enc} out of range for F_{field.q}")
                    out.append(enc)
            norm.append(tuple(out))
        n = len(norm)
        if not 1 <= n <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {n}")
        if any(len(r) != n for r in norm):
            raise ValueError("matrix must be square")
        self.field = field
        self.n = n
        self.rows = tuple(norm)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, field: Field, n: int) -> "MatrixFq":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: Field, n: int) -> "MatrixFq":
        return cls(field, [[0] * n for _ in range(n)])

    @classmethod
    def from_flat(cls, field: Field, flat, n: int) -> "MatrixFq":
        return cls(field, [flat[i * n:(i + 1) * n] for i in range(n)])

    # -- basic accessors --------------------------------------------------------

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    @property
    def entries(self) -> tuple[tuple[FieldElement, ...], ...]:
        f = self.field
        return tuple(tuple(FieldElement(f, x) for x in row) for row in self.rows)

    def flat(self) -> tuple[int, ...]:
        out = []
        for row in self.rows:
            out.extend(row)
        return tuple(out)

    def to_int_rows(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"MatrixFq(F{self.field.q}, {self.to_int_rows()})"

    # -- arithmetic -------------------------------------------------------------

    def __matmul__(self, other: "MatrixFq") -> "MatrixFq":
        if self.field != other.field or self.n != other.n:
            raise ValueError("matrix product needs matching fields and dimensions")
        f = self.field
        mul, add = f.mul_enc, f.add_enc
        n = self.n
        a, b = self.rows, other.rows
        out = []
        for i in range(n):
            ai = a[i]
            row = []
            for j in range(n):
                s = 0
                for k in range(n):
                    x = ai[k]
                    y = b[k][j]
                    if x and y:
                        s = add(s, mul(x, y))
                row.append(s)
            out.append(row)
        return MatrixFq(f, out)

    def transpose(self) -> "MatrixFq":
        n = self.n
        return MatrixFq(self.field, [[self.rows[j][i] for j in range(n)] for i in range(n)])

    def scale(self, c: FieldElement) -> "MatrixFq":
        if c.field != self.field:
            raise ValueError("scalar from a different field")
        mul = self.field.mul_enc
        return MatrixFq(self.field, [[mul(c.enc, x) for x in row] for row in self.rows])

    def trace(self) -> FieldElement:
        return self.partial_trace(self.n)

    def partial_trace(self, u: int) -> FieldElement:
        """Sum of the first u diagonal entries."""
        if not 0 <= u <= self.n:
            raise ValueError(f"partial trace length {u} out of range [0, {self.n}]")
        f = self.field
        s = 0
        for i in range(u):
            s = f.add_enc(s, self.rows[i][i])
        return FieldElement(f, s)

    def det(self) -> FieldElement:
        work = [list(r) for r in self.rows]
        return FieldElement(self.field, _det_rows(self.field, work))

    def rank(self) -> int:
        f = self.field
        work = [list(r) for r in self.rows]
        n = self.n
        mul, sub, inv = f.mul_enc, f.sub_enc, f.inv_enc
        r = 0
        for col in range(n):
            piv = None
            for i in range(r, n):
                if work[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            pinv = inv(work[r][col])
            prow = work[r]
            for i in range(r + 1, n):
                fac = work[i][col]
                if fac:
                    fac = mul(fac, pinv)
                    wi = work[i]
                    for j in range(col, n):
                        wi[j] = sub(wi[j], mul(fac, prow[j]))
            r += 1
            if r == n:
                break
        return r


def _det_rows(field: Field, work: list[list[int]]) -> int:
    """Determinant of a scratch row list (consumed) via Gaussian elimination."""
    n = len(work)
    if field.e == 1:
        p = field.p
        det = 1
        for col in range(n):
            piv = None
            for i in range(col, n):
                if work[i][col]:
                    piv = i
                    break
            if piv is None:
                return 0
            if piv != col:
                work[col], work[piv] = work[piv], work[col]
                det = -det % p
            pv = work[col][col]
            det = det * pv % p
            pinv = pow(pv, -1, p)
            prow = work[col]
            for i in range(col + 1, n):
                fac = work[i][col]
                if fac:
                    fac = fac * pinv % p
                    wi = work[i]
                    for j in range(col + 1, n):
                        wi[j] = (wi[j] - fac * prow[j]) % p
        return det
    mul, sub, inv, neg = field.mul_enc, field.sub_enc, field.inv_enc, field.neg_enc
    det = 1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = neg(det)
        pv = work[col][col]
        det = mul(det, pv)
        pinv = inv(pv)
        prow = work[col]
        for i in range(col + 1, n):
            fac = work[i][col]
            if fac:
                fac = mul(fac, pinv)
                wi = work[i]
                for j in range(col + 1, n):
                    wi[j] = sub(wi[j], mul(fac, prow[j]))
    return det


def frobenius_product(u: MatrixFq, v: MatrixFq) -> FieldElement:
    """Entrywise product summed over all positions; equals tr(u^t v)."""
    if u.field != v.field or u.n != v.n:
        raise ValueError("frobenius product needs matching fields and dimensions")
    f = u.field
    if f.e == 1:
        s = 0
        for ru, rv in zip(u.rows, v.rows):
            for x, y in zip(ru, rv):
                s += x * y
        return FieldElement(f, s % f.p)
    mul, add = f.mul_enc, f.add_enc
    s = 0
    for ru, rv in zip(u.rows, v.rows):
        for x, y in zip(ru, rv):
            if x and y:
                s = add(s, mul(x, y))
    return FieldElement(f, s)


def canonical_rank_matrix(field: Field, n: int, u: int) -> MatrixFq:
    """diag(I_u, 0): the canonical matrix of rank u."""
    if not 0 <= u <= n:
        raise ValueError(f"rank {u} out of range [0, {n}]")
    return MatrixFq(field, [[1 if i == j and i < u else 0 for j in range(n)] for i in range(n)])


def rank_normal_form(U: MatrixFq) -> tuple[MatrixFq, MatrixFq, int]:
    """Invertible P, Q with P @ U @ Q == diag(I_u, 0), u = rank(U).

    Pivots are chosen as the first nonzero entry of the remaining block,
    scanning rows top to bottom and, within a row, left to right.  Row
    operations accumulate into P and column operations into Q.
    """
    f = U.field
    n = U.n
    mul, sub, inv = f.mul_enc, f.sub_enc, f.inv_enc
    a = [list(r) for r in U.rows]
    pm = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    qm = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    u = 0
    for step in range(n):
        pivot = None
        for i in range(step, n):
            for j in range(step, n):
                if a[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != step:
            a[step], a[pi] = a[pi], a[step]
            pm[step], pm[pi] = pm[pi], pm[step]
        if pj != step:
            for row in a:
                row[step], row[pj] = row[pj], row[step]
            for row in qm:
                row[step], row[pj] = row[pj], row[step]
        pinv = inv(a[step][step])
        if pinv != 1:
            a[step] = [mul(pinv, x) for x in a[step]]
            pm[step] = [mul(pinv, x) for x in pm[step]]
        prow = a[step]
        for i in range(step + 1, n):
            fac = a[i][step]
            if fac:
                a[i] = [sub(x, mul(fac, y)) for x, y in zip(a[i], prow)]
                pm[i] = [sub(x, mul(fac, y)) for x, y in zip(pm[i], pm[step])]
        for j in range(step + 1, n):
            fac = a[step][j]
            if fac:
                for row in a:
                    row[j] = sub(row[j], mul(fac, row[step]))
                for row in qm:
                    row[j] = sub(row[j], mul(fac, row[step]))
        u += 1
    return MatrixFq(f, pm), MatrixFq(f, qm), u


def sl_rank_normal_form(U: MatrixFq) -> tuple[MatrixFq, MatrixFq, int]:
    """Rank normal form with det(P) = det(Q) = 1; requires rank(U) < n.

    Rescaling the last row of P (and last column of Q) is harmless because
    with u < n it only touches the zero block of P @ U @ Q.
    """
    P, Q, u = rank_normal_form(U)
    n = U.n
    if u == n:
        raise ValueError("determinant-one normal form needs rank(U) < n")
    f = U.field
    mul, inv = f.mul_enc, f.inv_enc
    dp = P.det().enc
    if dp != 1:
        fac = inv(dp)
        rows = [list(r) for r in P.rows]
        rows[n - 1] = [mul(fac, x) for x in rows[n - 1]]
        P = MatrixFq(f, rows)
    dq = Q.det().enc
    if dq != 1:
        fac = inv(dq)
        rows = [list(r) for r in Q.rows]
        for row in rows:
            row[n - 1] = mul(fac, row[n - 1])
        Q = MatrixFq(f, rows)
    return P, Q, u


# ---------------------------------------------------------------------------
# Exhaustive enumeration.


def _iter_gl_flat(field: Field, n: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
    q = field.q
    nn = n * n
    diag_idx = [i * n + i for i in range(n)]
    if field.e == 1:
        p = field.p
        for flat in itertools.product(range(q), repeat=nn):
            work = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
            det = _det_rows(field, work)
            if det:
                tr = sum(flat[i] for i in diag_idx) % p
                yield flat, det, tr
    else:
        field.ensure_tables()
        add = field.add_enc
        for flat in itertools.product(range(q), repeat=nn):
            work = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
            det = _det_rows(field, work)
            if det:
                tr = 0
                for i in diag_idx:
                    tr = add(tr, flat[i])
                yield flat, det, tr


def gl_members(field: Field, n: int, budget: int | None = None):
    """Compact GL_n(F_q) stream: (flat entries, det encoding, trace encoding).

    Yields each invertible matrix exactly once, in lexicographic order of the
    flattened entry encodings.  Small groups are cached; callers must treat
    the result as read-only.
    """
    q = field.q
    check_budget(q ** (n * n), budget, f"enumerating GL_{n}(F_{q})")
    key = (field, n)
    hit = _GL_CACHE.get(key)
    if hit is not None:
        return hit
    expected = 1
    qn = q**n
    for i in range(n):
        expected *= qn - q**i
    if expected * (n * n + 2) <= _MEMBER_CACHE_MAX_INTS:
        data = tuple(_iter_gl_flat(field, n))
        _GL_CACHE[key] = data
        return data
    return _iter_gl_flat(field, n)


def sl_members(field: Field, n: int, budget: int | None = None):
    """Like gl_members, restricted to determinant one."""
    return (item for item in gl_members(field, n, budget) if item[1] == 1)


def enumerate_gl(field: Field, n: int, budget: int | None = None) -> Iterator[MatrixFq]:
    """All of GL_n(F_q), each exactly once, in the canonical order."""
    for flat, _det, _tr in gl_members(field, n, budget):
        yield MatrixFq.from_flat(field, flat, n)


def enumerate_sl(field: Field, n: int, budget: int | None = None) -> Iterator[MatrixFq]:
    """All of SL_n(F_q), each exactly once, in the canonical order."""
    for flat, _det, _tr in sl_members(field, n, budget):
        yield MatrixFq.from_flat(field, flat, n)


def clear_member_cache() -> None:
    _GL_CACHE.clear()


# ---------------------------------------------------------------------------
# Seeded random sampling.


def random_matrix(field: Field, n: int, rng: random.Random) -> MatrixFq:
    q = field.q
    return MatrixFq(field, [[rng.randrange(q) for _ in range(n)] for _ in range(n)])


def random_invertible(field: Field, n: int, rng: random.Random) -> MatrixFq:
    """Uniform over GL_n by rejection sampling from all matrices."""
    while True:
        cand = random_matrix(field, n, rng)
        if cand.det().enc:
            return cand


def random_rank_matrix(field: Field, n: int, u: int, rng: random.Random) -> MatrixFq:
    """A random matrix of exact rank u: P @ diag(I_u, 0) @ Q."""
    core = canonical_rank_matrix(field, n, u)
    return random_invertible(field, n, rng) @ core @ random_invertible(field, n, rng)
