"""Closed-form counts and series for fully commutative involutions.

Length polynomials come from coefficient extraction in functional-equation
solutions; major index polynomials are explicit q-binomial sums; the affine
families get an eventually periodic closed part that a reconciliation step
matches against enumerated counts.
"""

from __future__ import annotations

from math import comb, lcm

from .coxeter import GroupType, InvalidGroupError
from .qpoly import PeriodReport, Series, TPoly, detect_period, periodicize, qbinomial
from .walks import WalkFamilySpec, family_poly

SERIES_IDS = ("M", "Q", "Qo", "Mstar")


def _t() -> TPoly:
    return TPoly.term(1)


def solve_series(series_id: str, xmax: int, tmax: int) -> Series:
    """Solve the walk functional equations by fixed-point iteration.

    M(x)     = 1 + t x^2 M(x) M(tx)
    Q(x)     = M(x) (1 + x t Q(tx))
    Qo(x)    = x t M(x) M(tx) (1 + x t^2 Qo(x t^2))
    Mstar(x) = M(x) / (1 - x M(x))

    The substitutions x -> tx and x -> x t^2 raise t degrees with x order,
    so iteration converges; the returned series satisfies its equation on
    the truncated window (asserted).
    """
    if series_id not in SERIES_IDS:
        raise ValueError(f"unknown series id {series_id!r}; expected one of {SERIES_IDS}")
    one = Series.one(xmax, tmax)
    t = _t()

    def m_rhs(s: Series) -> Series:
        return one + (s * s.subst_x_times_t(1)).shift_x(2).scale_poly(t)

    m = one
    for _ in range(xmax + 2):
        m = m_rhs(m)
    assert m == m_rhs(m), "M iteration did not converge"
    if series_id == "M":
        return m
    if series_id == "Mstar":
        return m * m.shift_x(1).geom()
    if series_id == "Q":
        def q_rhs(s: Series) -> Series:
            return m * (one + s.subst_x_times_t(1).shift_x(1).scale_poly(t))
        q = one
        for _ in range(xmax + 2):
            q = q_rhs(q)
        assert q == q_rhs(q), "Q iteration did not converge"
        return q
    base = (m * m.subst_x_times_t(1)).shift_x(1).scale_poly(t)

    def qo_rhs(s: Series) -> Series:
        return base * (one + s.subst_x_times_t(2).shift_x(1).scale_poly(t * t))
    qo = Series.zero(xmax, tmax)
    for _ in range(xmax + 2):
        qo = qo_rhs(qo)
    assert qo == qo_rhs(qo), "Qo iteration did not converge"
    return qo


def _even_shift_tail(xmax: int, tmax: int, x_offset: int) -> Series:
    """Geometric tail of the peak corrections.

    x_offset 1 gives x t^2 / (1 - x t^2)   (terms x^k t^{2k}, k >= 1);
    x_offset 2 gives x^2 t^3 / (1 - x t^2) (terms x^{k+1} t^{2k+1})."""
    s = Series.zero(xmax, tmax)
    for k in range(1, xmax + 1):
        xp = k + x_offset - 1
        tp = 2 * k + x_offset - 1
        if xp <= xmax and tp <= tmax:
            s.coeffs[xp] = TPoly.term(tp, cap=tmax)
    return s


def length_bound(family: str, n: int) -> int:
    """Safe cap on the length of any fully commutative involution."""
    if family == "A":
        return n * n // 4 + 2
    if family == "B":
        return n * (n + 1) // 2 + 4
    if family == "D":
        return (n + 1) * (n + 2) // 2 + 6
    raise InvalidGroupError(f"no finite length bound for family {family}")


def length_genfunc(family: str, n: int, tmax: int | None = None) -> TPoly:
    """Length polynomial of the involutions, capped at a safe degree."""
    GroupType(family, n)
    if tmax is None:
        tmax = length_bound(family, n)
    xmax = n
    m = solve_series("M", xmax, tmax)
    g = m.shift_x(1).geom()
    if family == "A":
        return (m * g)[n]
    if family == "B":
        q = solve_series("Q", xmax, tmax)
        peak = _even_shift_tail(xmax, tmax, 2) * m * m.subst_x_times_t(1) * g
        return (q * g + peak)[n]
    if family == "D":
        qo = solve_series("Qo", xmax, tmax)
        peak = _even_shift_tail(xmax, tmax, 1) * m * m.subst_x_times_t(1) * g
        total = (qo * g).scale_poly(TPoly([2])) + m * g + peak
        return total[n]
    raise InvalidGroupError(f"length polynomial is for the finite families, not {family}")


def card_involutions(family: str, n: int) -> int:
    """Number of fully commutative involutions."""
    GroupType(family, n)
    if family == "A":
        return comb(n, n // 2)
    if family == "B":
        return 2 ** n + comb(n, n // 2) - 1
    if family == "D":
        if n % 2 == 0:
            return 2 ** n + comb(n + 1, n // 2) - 1
        extra = 3 * comb(n + 1, (n + 1) // 2)
        assert extra % 2 == 0
        return 2 ** n + extra // 2 - 1
    raise InvalidGroupError(f"cardinality formula is for the finite families, not {family}")


def _b_layer_sum(h: int) -> TPoly:
    """Sum over i of the q-binomials [h-1; i] for i = 0..h-1."""
    total = TPoly.zero()
    for i in range(h):
        total = total + qbinomial(h - 1, i)
    return total


def maj_genfunc(family: str, n: int) -> TPoly:
    """Major index polynomial of the involutions (finite families)."""
    GroupType(family, n)
    if family == "A":
        return qbinomial(n, n // 2)
    if family == "B":
        total = qbinomial(n, n // 2)
        for h in range(1, n + 1):
            total = total + _b_layer_sum(h).shift(h)
        return total.assert_nonnegative()
    if family == "D":
        p = TPoly.zero()
        for h in range(1, n):
            p = p + _b_layer_sum(h).shift(h)
        bridge = TPoly([0] * n + [1, 1])    # q^n (1 + q)
        if n % 2 == 0:
            p = p + (bridge * _b_layer_sum(n)).halve()
        else:
            k = (n - 1) // 2
            for h in range(1, k + 1):
                p = p + qbinomial(n - h - 1, k).shift(n - h)
            # the central column pairs with itself, keeping the half integral
            p = p + (bridge * (_b_layer_sum(n) + qbinomial(n - 1, k))).halve()
        mid = qbinomial(n - 1, (n - 1) // 2)
        total = p + TPoly.term(2 * n + 1) * mid - TPoly.term(n) * mid \
            + qbinomial(n + 1, (n + 1) // 2)
        return total.assert_nonnegative()
    raise InvalidGroupError(f"major index is for the finite families, not {family}")


def maj_genfunc_by_descents(n: int, k: int) -> TPoly:
    """Major index polynomial of the alternating class with k descents.

    Covers the second finite family (rank parameter n); k = 0 gives the
    identity's contribution.  The sum is empty when n < 2k - 1.
    """
    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    if k == 0:
        return TPoly.one()
    total = TPoly.zero()
    corner = (k - 1) * (k - 1)
    for h in range(2 * k - 1, n + 1):
        inner = TPoly.zero()
        for i in range(k - 1, h - k + 1):
            inner = inner + qbinomial(i, k - 1) * qbinomial(h - 1 - i, k - 1)
        total = total + inner.shift(corner + h)
    return total


def ohat_poly(n: int, tmax: int) -> TPoly:
    """Closed axis-touching walks, weight excluding the start point."""
    spec = WalkFamilySpec(n=n, allow_horiz=False, start="any", end="eq-start",
                          require_touch=True, weight="exclude-start")
    return family_poly(spec, tmax)


def fhat_poly(n: int, tmax: int, start="any", end="any") -> TPoly:
    """Axis-touching walks with endpoint parity constraints, all points weighted."""
    spec = WalkFamilySpec(n=n, allow_horiz=False, start=start, end=end,
                          require_touch=True, weight="all")
    return family_poly(spec, tmax)


def _affa_poly_term(n: int, tmax: int) -> TPoly:
    """Aperiodic part of the cyclic family: [x^n] M (1 + t x^2 W(tx)) / (1 - xM),
    with W the termwise x-derivative of xM."""
    xmax = n + 2
    m = solve_series("M", xmax, tmax)
    w = m.shift_x(1).x_derivative()
    inner = Series.one(xmax, tmax) + w.subst_x_times_t(1).shift_x(2).scale_poly(_t())
    total = m * inner * m.shift_x(1).geom()
    return total[n]


def affine_periodic_part(family: str, n: int, lmax: int) -> tuple[TPoly, int]:
    """Closed eventually periodic polynomial (capped at lmax) and the declared
    period for an affine family's involution counts."""
    t = GroupType(family, n)
    if not t.is_affine:
        raise InvalidGroupError(f"{family} is not an affine family")
    if family == "affA":
        part = periodicize(ohat_poly(n, lmax), n, n, lmax) + _affa_poly_term(n, lmax)
        return part, (n if n % 2 == 0 else 1)
    if family == "affC":
        part = periodicize(fhat_poly(n, lmax), n + 1, n + 1, lmax) \
            + periodicize(TPoly([2]), 2 * n + 3, 2, lmax)
        return part, lcm(n + 1, 2)
    if family == "affB":
        fo = fhat_poly(n, lmax, end="odd").scale(2)
        fe = fhat_poly(n, lmax, end="even").scale(2)
        part = periodicize(fo, 2 * n + 2, 2 * n + 2, lmax) \
            + periodicize(fe, n + 1, 2 * n + 2, lmax) \
            + periodicize(TPoly.one(), 2 * n + 4, 1, lmax) \
            + periodicize(TPoly.one(), 4 * n + 2, 2 * n + 1, lmax)
        return part, (2 * n + 1) * (2 * n + 2)
    if family == "affD":
        foo = fhat_poly(n, lmax, start="odd", end="odd").scale(4)
        fee = fhat_poly(n, lmax, start="even", end="even").scale(4)
        part = periodicize(foo, 2 * n + 2, 2 * n + 2, lmax) \
            + periodicize(fee, n + 1, 2 * n + 2, lmax) \
            + periodicize(TPoly([2]), 2 * n + 6, 2, lmax) \
            + periodicize(TPoly([2]), 4 * n + 4, 2 * n + 2, lmax)
        return part, 2 * n + 2
    raise InvalidGroupError(family)


class ReconcileError(ValueError):
    """Enumerated counts and the closed periodic part do not match up."""


def reconcile(oracle: TPoly, periodic: TPoly, declared_period: int) -> tuple[TPoly, PeriodReport]:
    """Subtract the periodic part from enumerated counts.

    The remainder must be nonnegative with support ending at least two
    declared periods before the cap; the report comes from period detection
    on the oracle coefficients themselves.
    """
    if oracle.cap is None or oracle.cap != periodic.cap:
        raise ReconcileError(f"caps differ: {oracle.cap} vs {periodic.cap}")
    lmax = oracle.cap
    remainder = oracle - periodic
    for i, c in enumerate(remainder.coeffs):
        if c < 0:
            raise ReconcileError(f"remainder coefficient {c} at degree {i} is negative")
    if remainder.degree() > lmax - 2 * declared_period:
        raise ReconcileError(
            f"remainder support reaches degree {remainder.degree()}, "
            f"leaving less than two periods ({declared_period}) of zero tail below {lmax}")
    report = detect_period(oracle.padded(lmax + 1))
    return remainder, report
