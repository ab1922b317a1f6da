"""End-to-end checks of the python bindings against scipy/numpy references."""

import math

import numpy as np
import pytest
import scipy.optimize
import scipy.stats

import spectral_sketch as ss


def normalized_laplacian(graph):
    n = graph.vertex_count
    lap = np.zeros((n, n))
    deg = np.array([graph.degree(v) for v in range(n)], dtype=float)
    for v in range(n):
        if deg[v] == 0:
            continue
        lap[v, v] = 1.0
        for u in graph.neighbors(v):
            lap[v, u] = -1.0 / math.sqrt(deg[v] * deg[u])
    return lap


def test_exact_spectrum_matches_numpy():
    for graph in [
        ss.generate_cycle(9),
        ss.generate_complete(6),
        ss.generate_grid2d(4, 5),
        ss.generate_star(7),
        ss.Graph.from_edges(5, [(0, 1), (2, 3)]),
    ]:
        mine = np.array(ss.exact_spectrum(graph))
        ref = np.linalg.eigvalsh(normalized_laplacian(graph))
        assert np.max(np.abs(mine - np.sort(ref))) < 1e-8


def test_emd_matches_scipy():
    rng = np.random.default_rng(5)
    for _ in range(50):
        xs = np.sort(rng.uniform(0.0, 2.0, rng.integers(1, 12)))
        ys = np.sort(rng.uniform(0.0, 2.0, rng.integers(1, 12)))
        xw = rng.dirichlet(np.ones(len(xs)))
        yw = rng.dirichlet(np.ones(len(ys)))
        p = ss.SpectralDistribution(list(xs), list(xw))
        q = ss.SpectralDistribution(list(ys), list(yw))
        ref = scipy.stats.wasserstein_distance(xs, ys, xw, yw)
        assert abs(ss.emd_w1(p, q) - ref) < 1e-10


def test_moment_inverse_matches_linprog():
    # Same LP solved by HiGHS: minimize the L1 moment residual on the grid.
    values = [0.0, 0.5, 0.0, 0.3]
    grid = ss.GridSpec(-1.0, 1.0, 0.1)
    result = ss.moment_inverse(ss.MomentVector(values), grid)

    xs = np.array(grid.points())
    order = len(values)
    vander = np.vstack([xs ** (ell + 1) for ell in range(order)])
    n_pts = len(xs)
    # Variables: masses p, then residual magnitudes u.
    c = np.concatenate([np.zeros(n_pts), np.ones(order)])
    a_eq = np.concatenate([np.ones(n_pts), np.zeros(order)])[None, :]
    b_eq = [1.0]
    a_ub = np.block(
        [[vander, -np.eye(order)], [-vander, -np.eye(order)]]
    )
    b_ub = np.concatenate([values, -np.asarray(values)])
    ref = scipy.optimize.linprog(
        c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq, method="highs"
    )
    assert ref.status == 0
    assert abs(result.objective - ref.fun) < 1e-8


def test_walk_counts_and_moments():
    assert ss.required_walks(0.1, 0.05) == 185
    k2 = ss.generate_complete(2)
    moments = ss.estimate_moments(k2, max_order=4, walks=64, seed=1)
    assert moments.values == [0.0, 1.0, 0.0, 1.0]
    with pytest.raises(ValueError):
        ss.required_walks(2.0, 0.5)


def test_estimate_spectrum_pipeline():
    graph = ss.generate_complete(2)
    run = ss.estimate_spectrum(graph, walks=500, length=10, repeats=2, seed=3)
    assert run.neighbor_queries == 500 * 10 * 2
    truth = ss.point_mass_distribution(ss.exact_spectrum(graph))
    assert ss.emd_w1(run.distribution, truth) <= 0.05
    again = ss.estimate_spectrum(graph, walks=500, length=10, repeats=2, seed=3)
    assert again.distribution.support == run.distribution.support
    assert again.distribution.masses == run.distribution.masses


def test_partition_certificate():
    graph = ss.generate_grid2d(10, 10)
    est = ss.partition_spectrum_estimate(graph, max_size=25, samples=2000, seed=5)
    assert est.partition.max_component_size <= 25
    assert est.certified_error == 2.0 * est.partition.cut_edges / 100.0
    cut = ss.remove_cut_edges(graph, est.partition)
    assert cut.edge_count == graph.edge_count - est.partition.cut_edges


def test_discretize_and_union():
    d = ss.SpectralDistribution([0.0, 1.0], [0.5, 0.5])
    assert ss.discretize_spectrum(2, d) == [0.0, 1.0]
    assert ss.union_spectrum([0.0], [2.0]) == [0.0, 2.0]
    with pytest.raises(ValueError):
        ss.SpectralDistribution([0.0], [0.5])
