from fractions import Fraction

import pytest

from conftest import random_graphs
from covering_cycles import catalog
from covering_cycles.algebra import Polynomial, PowerSeries, series_exp
from covering_cycles.census import census_table, euler_count
from covering_cycles.errors import PreconditionError
from covering_cycles.series import (
    IDENTITY_ITEMS,
    check_identities,
    d_from_determinants,
    d_from_exp,
    d_from_partitions,
    determinant_product,
    h_series,
    partitions,
    theta_product,
    verify,
)


def partition_count(n):
    # Euler's pentagonal recurrence, independent of the generator under test
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, s = 1, 0
        while True:
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > m:
                    break
                s += (-1) ** (k + 1) * p[m - g]
            if k * (3 * k - 1) // 2 > m:
                break
            k += 1
        p[m] = s
    return p[n]


@pytest.mark.parametrize("n", range(0, 16))
def test_partitions_enumeration(n):
    seen = list(partitions(n))
    assert len(seen) == partition_count(n)
    assert all(sum(k * a for k, a in m.items()) == n for m in seen)
    assert len({tuple(sorted(m.items())) for m in seen}) == len(seen)


def test_h_series_rose2():
    table = census_table(catalog.rose(2), 8)
    h = h_series(table, 8)
    assert h[2] == 4
    assert h.coeffs[1:] == tuple(Fraction((-1) ** N - 2 + 3**N, N) for N in range(1, 9))


def test_h_series_low_coefficients_vanish():
    for g in catalog.small_undirected().values():
        h = h_series(census_table(g, g.edge_count + 2), g.edge_count + 2)
        assert all(h[n] == 0 for n in range(1, g.edge_count))


def test_h_series_theta_odd_vanish():
    h = h_series(census_table(catalog.theta(), 11), 11)
    assert all(h[n] == 0 for n in range(1, 12, 2))


def test_h_series_missing_values():
    with pytest.raises(PreconditionError):
        h_series({1: 0, 2: 8}, 3)


def test_d_plus_rose2_from_exp():
    h = h_series(census_table(catalog.rose(2), 10), 10)
    assert d_from_exp(h, "+") == [4 * (n - 1) for n in range(1, 11)]


def test_d_plus_theta_from_exp():
    h = h_series(census_table(catalog.theta(), 12), 12)
    d = d_from_exp(h, "+")
    for N in range(1, 7):
        assert d[2 * N - 1] == Fraction((N + 2) * (N + 1) * (N - 1), 2)
        assert d[2 * N - 2] == 0


def test_d_from_exp_rejects_constant_term():
    with pytest.raises(PreconditionError):
        d_from_exp(PowerSeries([1, 1]), "+")
    with pytest.raises(PreconditionError):
        d_from_exp(PowerSeries([0, 1]), "x")


def test_d_from_partitions_rose2():
    table = census_table(catalog.rose(2), 4)
    assert d_from_partitions(table, 2, "+") == 4
    assert d_from_partitions(table, 3, "+") == 8


def test_d_from_partitions_all_zero():
    assert d_from_partitions({k: 0 for k in range(1, 8)}, 7, "+") == 0
    assert d_from_partitions({k: 0 for k in range(1, 8)}, 7, "-") == 0


def test_partition_sign_convention_on_small_case():
    # omega = (1, 2): exp(-h) with h = z + z^2, coefficient of z^2 is -1 + 1/2
    w = {1: 1, 2: 2}
    assert d_from_partitions(w, 2, "+") == Fraction(1) - Fraction(1, 2)
    assert d_from_partitions(w, 2, "-") == Fraction(1) + Fraction(1, 2)


def test_determinant_product_rose2():
    prod = determinant_product(catalog.rose(2), 10)
    num, den = prod.reduced()
    assert num == Polynomial([1, -2, -3])
    assert den == Polynomial([1, -1]) ** 2


def test_determinant_product_theta():
    prod = determinant_product(catalog.theta(), 12)
    num, den = prod.reduced()
    # (1 - 4z^2) / (z^2 - 1)^4
    assert num * Polynomial([-1, 0, 1]) ** 4 == den * Polynomial([1, 0, -4])


@pytest.mark.parametrize("n", range(3, 9))
def test_determinant_product_cycle(n):
    prod = determinant_product(catalog.cycle(n), 2 * n + 4)
    assert prod.cycle_form() == n
    assert prod.describe() == f"(1 - z^{n})^2"
    d = d_from_determinants(catalog.cycle(n), 2 * n + 4, "+", product=prod)
    assert d[n - 1] == 2 and d[2 * n - 1] == -1


def test_determinant_route_unpruned_matches():
    g = catalog.small_undirected()["handcuff"]
    a = d_from_determinants(g, 10, "+", prune=True)
    b = d_from_determinants(g, 10, "+", prune=False)
    assert a == b


def test_theta_product_matches_exp():
    for g in (catalog.rose(2), catalog.theta(), catalog.cycle(4)):
        M = 2 * g.edge_count + 4
        table = census_table(g, M)
        h = h_series(table, M)
        assert theta_product(table.theta, M) == series_exp(-h)
        assert theta_product(table.theta, M, exponent_sign=-1) == series_exp(h)


def test_check_identities_flags_violations():
    w = {n: 0 for n in range(1, 7)}
    w[2] = 8
    good_p = [Fraction(0), Fraction(4), Fraction(0), Fraction(0), Fraction(0), Fraction(0)]
    good_m = [Fraction(0), Fraction(4), Fraction(0), Fraction(8), Fraction(0), Fraction(Fraction(32, 3))]
    # ground truth via exp, to build a consistent baseline
    h = h_series(w, 6)
    dp, dm = d_from_exp(h, "+"), d_from_exp(h, "-")
    assert all(r.passed for r in check_identities(w, dp, dm, 2).values())
    broken = list(dp)
    broken[0] = Fraction(1)
    res = check_identities(w, broken, dm, 2)
    assert not res["vanishing"].passed and res["vanishing"].failures == [1]
    assert not res["dominance"].passed
    assert good_p[1] == dp[1] and good_m[1] == dm[1]


def test_identities_hold_below_edge_count_too():
    for g in list(catalog.small_undirected().values())[:12]:
        if not g.edges:
            continue
        M = 2 * g.edge_count + 4
        table = census_table(g, M)
        h = h_series(table, M)
        res = check_identities(
            table.omega, d_from_exp(h, "+"), d_from_exp(h, "-"), g.edge_count, all_lengths=True
        )
        assert res["recurrence"].passed and res["plus_minus_link"].passed
        assert res["recurrence"].checked == list(range(1, M + 1))


def test_verify_report_shape():
    rep = verify(catalog.rose(2))
    assert rep.order == 8 and rep.passed
    data = rep.to_json()
    assert set(data["items"]) == set(IDENTITY_ITEMS)
    assert data["determinant_product"] == "(1 - 2*z - 3*z^2) / (1 - 2*z + z^2)"
    assert data["euler_from_d"] == "2"


def test_verify_rejects_small_order():
    with pytest.raises(PreconditionError):
        verify(catalog.cycle(5), 3)


def test_three_routes_on_random_graphs():
    for g in random_graphs(8, 5, seed=11):
        rep = verify(g)
        assert rep.routes_agree and rep.integral and rep.passed
        assert euler_count(g) == rep.euler_from_d


def test_directed_verify_routes_agree():
    for g in catalog.small_directed().values():
        rep = verify(g)
        assert rep.routes_agree and rep.integral
