"""The generating function of covering cycles and its determinant product.

With ``h(z) = sum_N omega(N) z^N / N`` the coefficients ``d_plus`` and
``d_minus`` are defined by

    exp(-h) = 1 - sum_i d_plus(i) z^i,     exp(+h) = 1 + sum_i d_minus(i) z^i.

They are computed three independent ways: the series exponential of ``h``, a
sum over integer partitions, and the alternating product of
``det(I - z T)`` over all edge-deleted subgraphs (which needs no omega values
at all).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Literal, Mapping, Sequence

from .algebra import (
    Polynomial,
    PowerSeries,
    det_one_minus_z,
    poly_exact_div,
    poly_gcd,
    series_div,
    series_exp,
)
from .census import CensusTable, census_table
from .errors import PreconditionError
from .graph import (
    DEFAULT_SUBSET_LIMIT,
    MultiGraph,
    delete_edges,
    directed_edge_matrix,
    edge_adjacency_matrix,
    prune_leaves,
    symmetrize,
)

Sign = Literal["+", "-"]
SIGNS: tuple[Sign, Sign] = ("+", "-")

# Above this total degree the untruncated product is not expanded for display.
FULL_PRODUCT_DEGREE_CAP = 4096


def default_order(edge_count: int) -> int:
    return 2 * edge_count + 4


def _check_sign(sign: str) -> None:
    if sign not in SIGNS:
        raise PreconditionError(f"sign must be '+' or '-', got {sign!r}")


def h_series(table: CensusTable | Mapping[int, int], M: int) -> PowerSeries:
    omegas = table.omega if isinstance(table, CensusTable) else table
    missing = [N for N in range(1, M + 1) if N not in omegas]
    if missing:
        raise PreconditionError(f"omega missing for lengths {missing[:5]}")
    return PowerSeries([0] + [Fraction(omegas[N], N) for N in range(1, M + 1)])


def d_from_exp(h: PowerSeries, sign: Sign) -> list[Fraction]:
    """``[d(1), ..., d(M)]`` read off ``exp(-h)`` (sign ``+``) or ``exp(h)`` (sign ``-``)."""
    _check_sign(sign)
    if h[0] != 0:
        raise PreconditionError("h must have zero constant term")
    if sign == "+":
        return [-c for c in series_exp(-h).coeffs[1:]]
    return list(series_exp(h).coeffs[1:])


def partitions(n: int, largest: int | None = None) -> Iterator[dict[int, int]]:
    """Multiplicity vectors ``{k: a_k}`` with ``sum k a_k = n``, largest part first."""
    if largest is None:
        largest = n
    if n == 0:
        yield {}
        return
    for k in range(min(n, largest), 0, -1):
        for a in range(n // k, 0, -1):
            for rest in partitions(n - a * k, k - 1):
                yield {k: a, **rest}


def d_from_partitions(omegas: Mapping[int, int] | CensusTable, i: int, sign: Sign) -> Fraction:
    """Sum over multiplicity vectors ``a`` of ``lambda(m) prod_k omega(k)^a_k / (a_k! k^a_k)``.

    ``m = sum_k a_k``; ``lambda(m) = (-1)^(m+1)`` for sign ``+`` and 1 for ``-``.
    """
    _check_sign(sign)
    w = omegas.omega if isinstance(omegas, CensusTable) else omegas
    total = Fraction(0)
    for mult in partitions(i):
        term = Fraction(1)
        for k, a in mult.items():
            if w[k] == 0:
                term = Fraction(0)
                break
            term *= Fraction(w[k] ** a, factorial(a) * k**a)
        if term:
            m = sum(mult.values())
            total += term if sign == "-" or m % 2 else -term
    return total


@dataclass
class DeterminantProduct:
    """``prod_S det(I - z T_S)^((-1)^|S|)`` over all deleted-edge sets ``S``.

    Identical factors are merged, so ``factors`` maps each distinct
    determinant polynomial to its net exponent (zero exponents dropped).
    """

    factors: dict[Polynomial, int]
    order: int
    numerator_series: PowerSeries
    denominator_series: PowerSeries
    numerator: Polynomial | None = None
    denominator: Polynomial | None = None

    def series(self, sign: Sign) -> PowerSeries:
        """The product raised to +1 (sign ``+``) or -1 (sign ``-``), truncated."""
        if sign == "+":
            return series_div(self.numerator_series, self.denominator_series)
        return series_div(self.denominator_series, self.numerator_series)

    def reduced(self) -> tuple[Polynomial, Polynomial] | None:
        """Numerator and denominator with common factors cancelled, if the full product was built."""
        if self.numerator is None or self.denominator is None:
            return None
        g = poly_gcd(self.numerator, self.denominator)
        return poly_exact_div(self.numerator, g), poly_exact_div(self.denominator, g)

    def cycle_form(self) -> int | None:
        """``n`` if the product collapses to ``(1 - z^n)^2``, else None."""
        red = self.reduced()
        if red is None or red[1] != Polynomial.one():
            return None
        num = red[0]
        if num.degree < 2 or num.degree % 2:
            return None
        n = num.degree // 2
        return n if num == Polynomial([1] + [0] * (n - 1) + [-1]) ** 2 else None

    def describe(self) -> str:
        red = self.reduced()
        if red is None:
            return "(not expanded)"
        n = self.cycle_form()
        if n is not None:
            return f"(1 - z^{n})^2"
        num, den = red
        return str(num) if den == Polynomial.one() else f"({num}) / ({den})"


def determinant_product(
    g: MultiGraph, M: int, *, prune: bool = True, subset_limit: int = DEFAULT_SUBSET_LIMIT
) -> DeterminantProduct:
    if g.edge_count > subset_limit:
        raise PreconditionError(f"{g.edge_count} edges exceed the subset limit {subset_limit}")
    exponents: Counter[Polynomial] = Counter()
    one = Polynomial.one()
    for mask in range(1 << g.edge_count):
        sub = delete_edges(g, mask)
        if g.directed:
            m = directed_edge_matrix(sub)
        else:
            m = edge_adjacency_matrix(symmetrize(prune_leaves(sub) if prune else sub))
        p = det_one_minus_z(m)
        if p != one:
            exponents[p] += -1 if bin(mask).count("1") % 2 else 1
    factors = {p: e for p, e in exponents.items() if e}

    num_s = PowerSeries.constant(1, M)
    den_s = PowerSeries.constant(1, M)
    for p, e in factors.items():
        s = PowerSeries.from_polynomial(p, M)
        for _ in range(abs(e)):
            if e > 0:
                num_s = num_s * s
            else:
                den_s = den_s * s
    prod = DeterminantProduct(factors, M, num_s, den_s)
    if sum(p.degree * abs(e) for p, e in factors.items()) <= FULL_PRODUCT_DEGREE_CAP:
        num, den = one, one
        for p, e in factors.items():
            if e > 0:
                num = num * p ** e
            else:
                den = den * p ** (-e)
        prod.numerator, prod.denominator = num, den
    return prod


def d_from_determinants(
    g: MultiGraph, M: int, sign: Sign, *, product: DeterminantProduct | None = None, **kw
) -> list[Fraction]:
    _check_sign(sign)
    if product is None:
        product = determinant_product(g, M, **kw)
    s = product.series(sign).truncate(M)
    if sign == "+":
        return [-c for c in s.coeffs[1:]]
    return list(s.coeffs[1:])


def theta_product(thetas: Mapping[int, int], M: int, exponent_sign: int = 1) -> PowerSeries:
    """``prod_{N<=M} (1 - z^N)^(exponent_sign * theta(N))`` truncated at order M."""
    out = PowerSeries.constant(1, M)
    for N in range(1, M + 1):
        t = exponent_sign * thetas[N]
        if t == 0:
            continue
        # generalized binomial series of (1 - w)^t with w = z^N
        coeffs = [Fraction(0)] * (M + 1)
        for j in range(M // N + 1):
            coeffs[N * j] = Fraction((-1) ** j * _gen_binom(t, j))
        out = out * PowerSeries(coeffs)
    return out


def _gen_binom(t: int, j: int) -> int:
    if t >= 0:
        return comb(t, j)
    # C(t, j) = (-1)^j C(j - t - 1, j) for negative t
    return (-1) ** j * comb(j - t - 1, j)


# Names of the exact relations checked between omega, d_plus and d_minus.
IDENTITY_ITEMS = (
    "recurrence",
    "plus_minus_link",
    "vanishing",
    "first_band",
    "second_band_upper",
    "minus_lower_bound",
    "dominance",
)


@dataclass
class ItemResult:
    passed: bool
    checked: list[int] = field(default_factory=list)
    failures: list[int] = field(default_factory=list)


def check_identities(
    omegas: Mapping[int, int],
    d_plus: Sequence[Fraction],
    d_minus: Sequence[Fraction],
    n0: int,
    *,
    all_lengths: bool = False,
) -> dict[str, ItemResult]:
    """Check the seven exact relations for ``n = 1..M`` where ``M = len(d_plus)``.

    ``recurrence``: ``n d(n) = omega(n) -/+ sum_k omega(n-k) d(k)`` for both signs.
    ``plus_minus_link``: ``d_minus(n) = d_plus(n) + sum_i d_plus(i) d_minus(n-i)``.
    Both are stated for ``n >= n0``; ``all_lengths`` extends them to every n.
    ``vanishing``: ``d(n) = 0`` for ``n < n0``.
    ``first_band``: ``d(n) = omega(n)/n`` on ``[n0, 2 n0)``.
    ``second_band_upper``: ``d_plus(n) <= omega(n)/n`` on ``[2 n0, 3 n0)``.
    ``minus_lower_bound``: ``d_minus(n) >= omega(n)/n`` for ``n >= 2 n0``.
    ``dominance``: ``|d_plus(n)| <= d_minus(n)``.
    """
    M = len(d_plus)
    if len(d_minus) != M:
        raise PreconditionError("d_plus and d_minus must have equal length")
    dp = [Fraction(0)] + list(d_plus)
    dm = [Fraction(0)] + list(d_minus)
    w = lambda n: Fraction(omegas[n])  # noqa: E731
    results = {name: ItemResult(True) for name in IDENTITY_ITEMS}

    def record(name: str, n: int, ok: bool) -> None:
        r = results[name]
        r.checked.append(n)
        if not ok:
            r.passed = False
            r.failures.append(n)

    for n in range(1, M + 1):
        if all_lengths or n >= n0:
            conv_p = sum(w(n - k) * dp[k] for k in range(1, n))
            conv_m = sum(w(n - k) * dm[k] for k in range(1, n))
            record("recurrence", n, n * dp[n] == w(n) - conv_p and n * dm[n] == w(n) + conv_m)
            link = dp[n] + sum(dp[i] * dm[n - i] for i in range(1, n))
            record("plus_minus_link", n, dm[n] == link)
        if n < n0:
            record("vanishing", n, dp[n] == 0 and dm[n] == 0)
        if n0 <= n < 2 * n0:
            record("first_band", n, dp[n] == w(n) / n == dm[n])
        if 2 * n0 <= n < 3 * n0:
            record("second_band_upper", n, dp[n] <= w(n) / n)
        if n >= 2 * n0:
            record("minus_lower_bound", n, dm[n] >= w(n) / n)
        record("dominance", n, abs(dp[n]) <= dm[n])
    return results


@dataclass
class IdentityReport:
    order: int
    edge_count: int
    omega: dict[int, int]
    theta: dict[int, int]
    d_plus: dict[str, list[Fraction]]
    d_minus: dict[str, list[Fraction]]
    items: dict[str, ItemResult]
    routes_agree: bool
    integral: bool
    product_matches_theta: bool
    euler_from_d: Fraction | None
    product: DeterminantProduct

    @property
    def passed(self) -> bool:
        return (
            self.routes_agree
            and self.integral
            and self.product_matches_theta
            and all(r.passed for r in self.items.values())
        )

    def to_json(self) -> dict:
        def seq(values: list[Fraction]) -> dict[str, str]:
            return {str(i): str(v) for i, v in enumerate(values, 1)}

        return {
            "order": self.order,
            "edges": self.edge_count,
            "omega": {str(k): str(v) for k, v in sorted(self.omega.items())},
            "theta": {str(k): str(v) for k, v in sorted(self.theta.items())},
            "d_plus": seq(self.d_plus["exp"]),
            "d_minus": seq(self.d_minus["exp"]),
            "routes_agree": self.routes_agree,
            "integral": self.integral,
            "theta_product_matches": self.product_matches_theta,
            "items": {
                name: {"passed": r.passed, "checked": r.checked, "failures": r.failures}
                for name, r in self.items.items()
            },
            "euler_from_d": None if self.euler_from_d is None else str(self.euler_from_d),
            "determinant_product": self.product.describe(),
            "passed": self.passed,
        }


def verify(
    g: MultiGraph,
    M: int | None = None,
    *,
    prune: bool = True,
    subset_limit: int = DEFAULT_SUBSET_LIMIT,
) -> IdentityReport:
    """Compute d_plus and d_minus by all three routes and check every relation."""
    E = g.edge_count
    if E == 0:
        raise PreconditionError("graph has no edges")
    if M is None:
        M = default_order(E)
    if M < E:
        raise PreconditionError(f"order {M} must be at least |E| = {E}")
    table = census_table(g, M, prune=prune, subset_limit=subset_limit)
    h = h_series(table, M)
    product = determinant_product(g, M, prune=prune, subset_limit=subset_limit)
    d: dict[Sign, dict[str, list[Fraction]]] = {}
    for sign in SIGNS:
        d[sign] = {
            "exp": d_from_exp(h, sign),
            "partition": [d_from_partitions(table.omega, i, sign) for i in range(1, M + 1)],
            "determinant": d_from_determinants(g, M, sign, product=product),
        }
    agree = all(r["exp"] == r["partition"] == r["determinant"] for r in d.values())
    integral = all(x.denominator == 1 for r in d.values() for x in r["exp"])
    theta_ok = theta_product(table.theta, M) == series_exp(-h)
    items = check_identities(table.omega, d["+"]["exp"], d["-"]["exp"], E)
    euler = None if g.directed else d["+"]["exp"][E - 1] / 2
    return IdentityReport(
        order=M,
        edge_count=E,
        omega=table.omega,
        theta=table.theta,
        d_plus=d["+"],
        d_minus=d["-"],
        items=items,
        routes_agree=agree,
        integral=integral,
        product_matches_theta=theta_ok,
        euler_from_d=euler,
        product=product,
    )
