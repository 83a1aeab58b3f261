"""Gauss sums over GL_n and SL_n of a finite field: closed forms, exhaustive
oracles, and invertible-matrix trace counts.

With lambda a nontrivial additive character, u = rank(U) and C = n(n-1)/2,
the closed forms are

  GL, full rank:     conj(chi)(det U) * q^C * G(chi, lambda)^n
  GL, trivial chi:   (-1)^u * q^C * prod_(i=1..n-u) (q^i - 1)
  GL, otherwise:     0                      (u < n, chi nontrivial)
  SL, full rank:     q^C * K_n(lambda, det U)
  SL, rank deficit:  (-1)^u * q^C * prod_(i=2..n-u) (q^i - 1)

where G is the classical Gauss sum and K_n the hyper-Kloosterman sum.  Each
closed form is paired with a literal sum over the enumerated group, and
``verify_grid`` runs both plus the scaling-invariance and GL/SL ratio
identities over a whole parameter grid.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .budget import check_budget
from .characters import (
    AdditiveCharacter,
    MultiplicativeCharacter,
    classical_gauss_sum,
    kloosterman,
    value_ring,
)
from .cyclotomic import CyclotomicInteger
from .finite_field import Field, FieldElement, build_mult_table, is_prime, make_field
from .matrix_fq import (
    MatrixFq,
    canonical_rank_matrix,
    gl_members,
    random_invertible,
    random_matrix,
    random_rank_matrix,
    sl_members,
)

CASE_FULL_RANK = "full-rank"
CASE_TRIVIAL_CHI = "trivial-chi"
CASE_VANISHING = "vanishing"
CASE_SL_FULL_RANK = "sl-full-rank"
CASE_SL_DEFICIENT = "sl-deficient"

CHECK_ORACLE = "closed-vs-oracle"
CHECK_INVARIANCE = "scaling-invariance"
CHECK_RATIO = "gl-sl-ratio"


@dataclass
class SumReport:
    """One verified (or verifiable) sum evaluation.

    For ``closed-vs-oracle`` checks, ``closed_form`` holds the closed-form
    value and ``oracle`` the enumeration value.  For identity checks both
    slots hold the two sides being compared (the transformed side first).
    """

    check: str
    case_label: str
    u: int
    n: int
    p: int
    e: int
    q: int
    chi_index: int | None
    lambda_twist: int
    matrix: tuple[tuple[int, ...], ...]
    closed_form: CyclotomicInteger
    oracle: CyclotomicInteger | None
    note: str = ""

    @property
    def verified(self) -> bool | None:
        if self.oracle is None:
            return None
        return self.closed_form == self.oracle

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "case_label": self.case_label,
            "u": self.u,
            "n": self.n,
            "p": self.p,
            "e": self.e,
            "q": self.q,
            "chi_index": self.chi_index,
            "lambda_twist": self.lambda_twist,
            "matrix": [list(row) for row in self.matrix],
            "closed_form": self.closed_form.to_json_dict(),
            "oracle": self.oracle.to_json_dict() if self.oracle is not None else None,
            "verified": self.verified,
            "note": self.note,
        }


def gl_case_label(u: int, n: int, chi: MultiplicativeCharacter) -> str:
    if u == n:
        return CASE_FULL_RANK
    if chi.is_trivial:
        return CASE_TRIVIAL_CHI
    return CASE_VANISHING


def _require_shared_field(U: MatrixFq, lam: AdditiveCharacter,
                          chi: MultiplicativeCharacter | None) -> Field:
    f = U.field
    if lam.field != f:
        raise ValueError("additive character from a different field")
    if chi is not None and chi.field != f:
        raise ValueError("multiplicative character from a different field")
    return f


def gl_order(field: Field, n: int) -> int:
    """|GL_n(F_q)| = prod_(i=0..n-1) (q^n - q^i)."""
    q = field.q
    qn = q**n
    out = 1
    for i in range(n):
        out *= qn - q**i
    return out


def sl_order(field: Field, n: int) -> int:
    return gl_order(field, n) // (field.q - 1)


# ---------------------------------------------------------------------------
# Closed forms.


def gl_gauss_closed(U: MatrixFq, chi: MultiplicativeCharacter,
                    lam: AdditiveCharacter) -> CyclotomicInteger:
    """Closed form of sum over GL_n of chi(det X) * lambda(U . X)."""
    f = _require_shared_field(U, lam, chi)
    if lam.is_trivial:
        raise ValueError("the closed form requires a nontrivial additive character")
    n = U.n
    q = f.q
    u = U.rank()
    c2 = math.comb(n, 2)
    ring = value_ring(f)
    if u == n:
        val = classical_gauss_sum(chi, lam) ** n
        if not chi.is_trivial:
            val = val * ring.root_power(chi.conjugate().exponent(U.det()))
        return q**c2 * val
    if chi.is_trivial:
        prod = 1
        for i in range(1, n - u + 1):
            prod *= q**i - 1
        return ring.from_int((-1) ** u * q**c2 * prod)
    return ring.zero()


def sl_gauss_closed(U: MatrixFq, lam: AdditiveCharacter) -> CyclotomicInteger:
    """Closed form of sum over SL_n of lambda(U . X)."""
    f = _require_shared_field(U, lam, None)
    if lam.is_trivial:
        raise ValueError("the closed form requires a nontrivial additive character")
    n = U.n
    q = f.q
    u = U.rank()
    c2 = math.comb(n, 2)
    ring = value_ring(f)
    if u == n:
        return q**c2 * kloosterman(lam, n, U.det())
    prod = 1
    for i in range(2, n - u + 1):
        prod *= q**i - 1
    return ring.from_int((-1) ** u * q**c2 * prod)


# ---------------------------------------------------------------------------
# Brute-force oracles.


def _character_sum(members, U: MatrixFq, chi: MultiplicativeCharacter | None,
                   lam: AdditiveCharacter) -> CyclotomicInteger:
    """Literal sum of chi(det X) * lambda(U . X) over the member stream."""
    f = U.field
    ring = value_ring(f)
    m = ring.m
    q = f.q
    counts = [0] * m
    # lambda_a(U . X) = zeta_p^tr(a * (U . X)) = zeta_p^tr((aU) . X)
    a_enc = lam.a.enc
    mul = f.mul_enc
    uflat = [mul(a_enc, x) for row in U.rows for x in row]
    add_exp = q - 1
    j = chi.index if chi is not None else 0
    if j:
        dlog = chi.table.dlog
        det_step = f.p * j
    if f.e == 1:
        p = f.p
        if j:
            for flat, det_enc, _tr in members:
                s = 0
                for uu, xx in zip(uflat, flat):
                    s += uu * xx
                counts[(s % p * add_exp + det_step * dlog[det_enc]) % m] += 1
        else:
            for flat, _det, _tr in members:
                s = 0
                for uu, xx in zip(uflat, flat):
                    s += uu * xx
                counts[s % p * add_exp] += 1
    else:
        addf = f.add_enc
        tracef = f.trace_enc
        for flat, det_enc, _tr in members:
            s = 0
            for uu, xx in zip(uflat, flat):
                if uu and xx:
                    s = addf(s, mul(uu, xx))
            k = tracef(s) * add_exp
            if j:
                k += det_step * dlog[det_enc]
            counts[k % m] += 1
    return ring.from_power_counts(counts)


def gl_gauss_bruteforce(U: MatrixFq, chi: MultiplicativeCharacter,
                        lam: AdditiveCharacter, budget: int | None = None) -> CyclotomicInteger:
    """Literal sum over all of GL_n; the oracle for gl_gauss_closed.

    Unlike the closed form, this accepts a trivial lambda (it is just a sum).
    """
    f = _require_shared_field(U, lam, chi)
    return _character_sum(gl_members(f, U.n, budget), U, chi, lam)


def sl_gauss_bruteforce(U: MatrixFq, lam: AdditiveCharacter,
                        budget: int | None = None) -> CyclotomicInteger:
    """Literal sum over all of SL_n; the oracle for sl_gauss_closed."""
    f = _require_shared_field(U, lam, None)
    return _character_sum(sl_members(f, U.n, budget), U, None, lam)


# ---------------------------------------------------------------------------
# Counting invertible matrices by trace.


def count_trace_closed(field: Field, n: int, beta: FieldElement) -> int:
    """Number of X in GL_n(F_q) with tr X = beta, by the closed formulas.

    The count depends only on whether beta is zero.  Both divisions are
    exact in the integers; this is asserted rather than assumed.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if beta.field != field:
        raise ValueError("trace value from a different field")
    q = field.q
    c2 = math.comb(n, 2)
    prod = 1
    for i in range(2, n + 1):
        prod *= q**i - 1
    if beta.enc == 0:
        num = q**c2 * (q - 1) * ((-1) ** n + prod)
    else:
        num = q**c2 * ((-1) ** (n - 1) + (q - 1) * prod)
    count, rem = divmod(num, q)
    if rem:
        raise ArithmeticError("trace-count formula did not divide exactly")
    if count < 0:
        raise ArithmeticError("trace-count formula went negative")
    return count


def count_trace_bruteforce(field: Field, n: int, beta: FieldElement,
                           budget: int | None = None) -> int:
    """Direct count over the GL_n enumeration; the oracle for the formulas."""
    if beta.field != field:
        raise ValueError("trace value from a different field")
    target = beta.enc
    return sum(1 for _flat, _det, tr in gl_members(field, n, budget) if tr == target)


# ---------------------------------------------------------------------------
# Grid verification.


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split a prime power q into (p, e); rejects anything else."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"field size must be an integer >= 2, got {q}")
    p = q
    for f in range(2, q + 1):
        if f * f > q:
            break
        if q % f == 0:
            p = f
            break
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return p, e


def verify_grid(max_n: int, field_sizes, *, samples: int = 5, seed: int = 0,
                lambda_twist: int = 1, budget: int | None = None) -> list[SumReport]:
    """Closed form vs oracle (GL and SL) across a grid, plus identities.

    For each field size q and dimension n <= max_n, every rank u gets the
    canonical diag(I_u, 0) plus ``samples`` seeded random rank-u matrices;
    chi ranges over the trivial character and, when it exists, index 1.
    Scaling invariance (with random invertible P, Q) and the (q-1) ratio
    between the SL and trivial-chi GL sums are checked as extra reports.

    Every report must come back verified; a failing one is a bug in the
    closed forms, the oracles, or the arithmetic underneath.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    reports: list[SumReport] = []
    for q in sorted(set(int(v) for v in field_sizes)):
        p, e = factor_prime_power(q)
        fld = make_field(p, e)
        if not 0 < lambda_twist < q:
            raise ValueError(f"lambda twist {lambda_twist} out of range [1, {q})")
        lam = AdditiveCharacter(fld.element(lambda_twist))
        table = build_mult_table(fld)
        chis = [MultiplicativeCharacter(table, 0)]
        if q > 2:
            chis.append(MultiplicativeCharacter(table, 1))
        for n in range(1, max_n + 1):
            check_budget(q ** (n * n), budget, f"verifying GL_{n}(F_{q})")
            rng = random.Random(f"{seed}:verify:{q}:{n}")
            for u in range(n + 1):
                mats = [canonical_rank_matrix(fld, n, u)]
                mats.extend(random_rank_matrix(fld, n, u, rng) for _ in range(samples))
                for U in mats:
                    for chi in chis:
                        reports.append(_oracle_report(U, chi, lam, u, budget))
                    reports.append(_sl_oracle_report(U, lam, u, budget))
                    if u < n:
                        reports.append(_ratio_report(U, chis[0], lam, u))
            for chi in chis:
                for _ in range(samples):
                    reports.append(_invariance_report(fld, n, chi, lam, rng, budget))
    return reports


def _report_stub(U: MatrixFq, chi: MultiplicativeCharacter | None,
                 lam: AdditiveCharacter, u: int) -> dict:
    f = U.field
    return {
        "u": u,
        "n": U.n,
        "p": f.p,
        "e": f.e,
        "q": f.q,
        "chi_index": chi.index if chi is not None else None,
        "lambda_twist": lam.a.enc,
        "matrix": U.rows,
    }


def _oracle_report(U, chi, lam, u, budget) -> SumReport:
    return SumReport(
        check=CHECK_ORACLE,
        case_label=gl_case_label(u, U.n, chi),
        closed_form=gl_gauss_closed(U, chi, lam),
        oracle=gl_gauss_bruteforce(U, chi, lam, budget),
        **_report_stub(U, chi, lam, u),
    )


def _sl_oracle_report(U, lam, u, budget) -> SumReport:
    return SumReport(
        check=CHECK_ORACLE,
        case_label=CASE_SL_FULL_RANK if u == U.n else CASE_SL_DEFICIENT,
        closed_form=sl_gauss_closed(U, lam),
        oracle=sl_gauss_bruteforce(U, lam, budget),
        **_report_stub(U, None, lam, u),
    )


def _ratio_report(U, trivial_chi, lam, u) -> SumReport:
    return SumReport(
        check=CHECK_RATIO,
        case_label=CASE_SL_DEFICIENT,
        closed_form=(U.field.q - 1) * sl_gauss_closed(U, lam),
        oracle=gl_gauss_closed(U, trivial_chi, lam),
        note="(q-1) * SL sum vs trivial-chi GL sum, rank-deficient case",
        **_report_stub(U, trivial_chi, lam, u),
    )


def _invariance_report(fld, n, chi, lam, rng, budget) -> SumReport:
    U = random_matrix(fld, n, rng)
    P = random_invertible(fld, n, rng)
    Q = random_invertible(fld, n, rng)
    u = U.rank()
    direct = gl_gauss_bruteforce(U, chi, lam, budget)
    moved = gl_gauss_bruteforce(P @ U @ Q, chi, lam, budget)
    if not chi.is_trivial:
        det_pq = (P @ Q).det()
        moved = moved * value_ring(fld).root_power(chi.exponent(det_pq))
    return SumReport(
        check=CHECK_INVARIANCE,
        case_label=gl_case_label(u, n, chi),
        closed_form=moved,
        oracle=direct,
        note="chi(det PQ) * sum(PUQ) vs sum(U), random invertible P, Q",
        **_report_stub(U, chi, lam, u),
    )
