"""Exit criteria.  Every check is exact; the only tolerances are wall-clock bounds.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL summary lines.
"""

import time
from fractions import Fraction
from math import comb

import pytest

from conftest import random_graphs
from covering_cycles import catalog, oracle
from covering_cycles.algebra import Polynomial, det_one_minus_z, trace_powers
from covering_cycles.census import (
    census_table,
    euler_count,
    hamiltonian_count,
    omega_sequence,
    theta,
    theta_directed,
)
from covering_cycles.graph import edge_adjacency_matrix, is_bipartite, symmetrize
from covering_cycles.series import default_order, verify


def T(g):
    return edge_adjacency_matrix(symmetrize(g))


def rose_closed_form(R, N):
    return sum(
        (-1) ** k * comb(R, k) * (1 + (R - k - 1) * (1 + (-1) ** N) + (2 * R - 2 * k - 1) ** N)
        for k in range(R)
    )


# Random graphs used by criteria 5 and 7: connected, min degree 2, |E| <= 6.
RANDOM_SIX = random_graphs(24, 6, seed=2024, min_edges=3, max_vertices=5)
# Random additions to the oracle catalog: |E| <= 5, degree capped for enumeration cost.
RANDOM_FIVE = random_graphs(16, 5, seed=99, min_edges=3, max_vertices=5, min_degree=1, max_degree=6)


@pytest.mark.criterion(1, "rose R=2: omega closed form N=1..10, theta(2)=4, Euler=2, < 1 s")
def test_criterion_1_rose2():
    g = catalog.rose(2)
    start = time.perf_counter()
    seq = omega_sequence(g, 10)
    th2 = theta(g, 2)
    euler = euler_count(g)
    elapsed = time.perf_counter() - start
    assert seq == [(-1) ** N - 2 + 3**N for N in range(1, 11)]
    assert th2 == 4
    assert euler == 2
    assert elapsed < 1.0


@pytest.mark.criterion(2, "rose R=2,3,4: omega matches binomial closed form for N<=10")
@pytest.mark.parametrize("R", [2, 3, 4])
def test_criterion_2_rose_family(R):
    assert omega_sequence(catalog.rose(R), 10) == [rose_closed_form(R, N) for N in range(1, 11)]


@pytest.mark.criterion(3, "theta graph: traces, omega, Euler=0, d_plus(2N) through order 12")
def test_criterion_3_theta():
    g = catalog.theta()
    traces = trace_powers(T(g), 12)
    assert traces == [4 + 2 * 2**N if N % 2 == 0 else 0 for N in range(1, 13)]
    assert omega_sequence(g, 12) == [2 * 2**N - 8 if N % 2 == 0 else 0 for N in range(1, 13)]
    assert euler_count(g) == 0
    rep = verify(g, 12)
    d = rep.d_plus["exp"]
    for N in range(1, 7):
        assert d[2 * N - 1] == Fraction((N + 2) * (N + 1) * (N - 1), 2)
        assert d[2 * N - 2] == 0


@pytest.mark.criterion(4, "cycle graphs C3..C8: det=(1-z^n)^2, Euler=1 (oracle), d_plus(2n)=-1")
@pytest.mark.parametrize("n", range(3, 9))
def test_criterion_4_cycle_graphs(n):
    g = catalog.cycle(n)
    assert det_one_minus_z(T(g)) == Polynomial([1] + [0] * (n - 1) + [-1]) ** 2
    assert euler_count(g) == 1
    assert oracle.count_euler_classes(g) == 1
    rep = verify(g)
    assert rep.d_plus["exp"][2 * n - 1] == -1
    assert rep.product.cycle_form() == n


@pytest.mark.criterion(5, "three routes for d+/d- agree through 2|E|+4 on named + >=20 random graphs, < 2 min")
def test_criterion_5_three_routes():
    named = [catalog.rose(2), catalog.rose(3), catalog.theta(), catalog.cycle(5)]
    graphs = named + RANDOM_SIX
    assert len(RANDOM_SIX) >= 20 and all(g.edge_count <= 6 for g in RANDOM_SIX)
    start = time.perf_counter()
    for g in graphs:
        rep = verify(g)
        assert rep.order == default_order(g.edge_count)
        for d in (rep.d_plus, rep.d_minus):
            assert d["exp"] == d["partition"] == d["determinant"]
            assert len(d["exp"]) == rep.order
        assert rep.integral
    assert time.perf_counter() - start < 120


def _oracle_catalog():
    graphs = dict(catalog.small_undirected())
    graphs.update({f"random{i}": g for i, g in enumerate(RANDOM_FIVE)})
    return graphs


@pytest.mark.criterion(6, "oracle equivalence on |E|<=5 catalog, N<=8: traces, omega, theta, < 5 min")
def test_criterion_6_oracle_equivalence():
    graphs = _oracle_catalog()
    assert all(g.edge_count <= 5 for g in graphs.values())
    start = time.perf_counter()
    for name, g in graphs.items():
        traces = trace_powers(T(g), 8)
        table = census_table(g, 8)
        for N in range(1, 9):
            assert oracle.count_closed_walks(g, N) == traces[N - 1], (name, N)
            classes = oracle.covering_classes(g, N)
            assert sum(classes.values()) == table.omega[N], (name, N)
            nonperiodic = sum(1 for rep in classes if oracle.primitive_period(rep) == N)
            assert nonperiodic == table.theta[N], (name, N)
    assert time.perf_counter() - start < 300


def _criterion_seven_graphs():
    graphs = [catalog.rose(R) for R in (2, 3, 4)] + [catalog.theta()]
    graphs += [catalog.cycle(n) for n in range(3, 9)]
    return graphs + RANDOM_SIX


@pytest.mark.criterion(7, "identity suite exact through order 3|E|; Euler = d_plus(|E|)/2")
def test_criterion_7_identity_suite():
    for g in _criterion_seven_graphs():
        rep = verify(g, 3 * g.edge_count)
        failed = [name for name, r in rep.items.items() if not r.passed]
        assert not failed, (g, failed)
        assert rep.euler_from_d == euler_count(g)


@pytest.mark.criterion(8, "structural invariants: vanishing below |E|, bipartite odd, power sums, theta(|E|) even")
def test_criterion_8_structural_invariants():
    graphs = list(_oracle_catalog().values()) + RANDOM_SIX
    for g in graphs:
        E = g.edge_count
        table = census_table(g, 2 * E + 4)
        assert all(table.omega[N] == 0 for N in range(1, E))
        if is_bipartite(g):
            assert all(table.omega[N] == 0 for N in table.omega if N % 2)
        assert all(table.power_sum_holds(N) for N in table.omega)
        assert table.theta[E] % 2 == 0


@pytest.mark.criterion(9, "directed 3-cycle: theta(3)=1, one Hamiltonian class, halved value flagged")
def test_criterion_9_directed():
    g = catalog.directed_cycle(3)
    assert theta_directed(g, 3) == 1
    assert oracle.count_nonperiodic_classes(g, 3) == 1
    rep = hamiltonian_count(g)
    assert rep.classes == 1 == oracle.count_hamiltonian_classes(g)
    assert rep.halved == Fraction(1, 2)
    assert rep.discrepancy
