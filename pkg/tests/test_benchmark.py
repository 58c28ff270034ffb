import pytest

from commdetect.benchmark import (
    BLOCK_SIZE,
    N_BLOCKS,
    N_NODES,
    benchmark_spec,
    generate,
    planted_partition,
    reference_partition_text,
)


class TestSpecDerivation:
    def test_probabilities_at_low_mixing(self):
        spec = benchmark_spec(1.6)
        assert spec.mu == pytest.approx(0.1)
        assert spec.p_in == pytest.approx(14.4 / 31)
        assert spec.p_out == pytest.approx(1.6 / 96)

    def test_probabilities_at_balanced_mixing(self):
        spec = benchmark_spec(8.0)
        assert spec.mu == pytest.approx(0.5)
        assert spec.p_in == pytest.approx(8.0 / 31)
        assert spec.p_out == pytest.approx(8.0 / 96)

    def test_z_out_bounds(self):
        with pytest.raises(ValueError):
            benchmark_spec(0.0)
        with pytest.raises(ValueError):
            benchmark_spec(16.0)
        with pytest.raises(ValueError):
            benchmark_spec(-1.0)

    def test_constants(self):
        assert N_NODES == 128
        assert N_BLOCKS == 4
        assert BLOCK_SIZE == 32


class TestPlantedPartition:
    def test_four_equal_blocks(self):
        p = planted_partition(benchmark_spec(3.2))
        assert p.k == 4
        assert p.sizes() == [32, 32, 32, 32]
        assert frozenset(range(32)) in p.communities
        assert frozenset(range(96, 128)) in p.communities


class TestGenerate:
    def test_deterministic_for_fixed_seed(self):
        spec = benchmark_spec(3.2, seed=42)
        g1, _ = generate(spec)
        g2, _ = generate(spec)
        assert g1.edges() == g2.edges()

    def test_different_seeds_differ(self):
        g1, _ = generate(benchmark_spec(3.2, seed=1))
        g2, _ = generate(benchmark_spec(3.2, seed=2))
        assert g1.edges() != g2.edges()

    def test_node_count_and_no_self_loops(self):
        g, p = generate(benchmark_spec(4.8, seed=5))
        assert g.n == 128
        assert all(u != v for u, v in g.edges())
        assert p.k == 4

    def test_mean_degree_near_sixteen(self):
        total = 0.0
        runs = 10
        for seed in range(runs):
            g, _ = generate(benchmark_spec(4.8, seed=seed))
            total += 2 * g.m / g.n
        assert total / runs == pytest.approx(16.0, abs=0.5)

    def test_cross_edge_fraction_tracks_mixing_parameter(self):
        spec = benchmark_spec(4.8, seed=3)
        g, p = generate(spec)
        assign = p.assignment()
        cross = sum(1 for u, v in g.edges() if assign[u] != assign[v])
        assert cross / g.m == pytest.approx(spec.mu, abs=0.05)


class TestReferenceText:
    def test_one_line_per_node(self):
        g, p = generate(benchmark_spec(3.2, seed=0))
        text = reference_partition_text(g, p)
        lines = text.strip().splitlines()
        assert len(lines) == 128
        label, comm = lines[0].split()
        assert label == g.labels[0]
        assert comm.isdigit()
