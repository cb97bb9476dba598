"""Smoke tests for the python module and the CLI binary."""

import json
import os
import subprocess
import sys

import pytest

import kdisp


def test_version():
    assert kdisp.__version__


def test_exact_solver_roundtrip():
    points = kdisp.PointMultiset(1, [[0.5]])
    result = kdisp.exact_k_dispersion(points, 0)
    assert result.value == 0.5
    assert result.witness.lo == [0.0]
    assert result.witness.hi == [0.5]
    assert result.complete


def test_mesh_exact_values():
    points = kdisp.PointMultiset.from_numerators(2, 1, [[1, 1]], [7])
    result = kdisp.grid_exhaustive(points, 0)
    assert (result.exact_value.num, result.exact_value.den) == (1, 2)
    assert kdisp.count_inside(points, result.witness) == 0


def test_generators_and_io(tmp_path):
    mesh = kdisp.mesh_random_multiset(kdisp.MeshSpec(m=2, d=2, n=30), 11)
    assert mesh.total_size == 30
    path = str(tmp_path / "mesh.json")
    kdisp.save_pointset(mesh, path)
    back = kdisp.load_pointset(path)
    assert kdisp.pointset_to_json(back) == kdisp.pointset_to_json(mesh)

    lattice = kdisp.fibonacci_lattice(7)
    assert lattice.total_size == 13
    assert lattice.point(1) == [1 / 13, 8 / 13]


def test_partition_and_certify():
    report = kdisp.verify_lemma_probability(2, 2)
    assert report.holds
    assert report.cells == 27

    points = kdisp.PointMultiset(2, [[0.1, 0.6], [0.7, 0.2]])
    cert = kdisp.find_column_pair(kdisp.sign_matrix(points), 0)
    assert cert.flipped
    box = kdisp.certificate_box(points, cert)
    assert kdisp.volume(box) == 0.25
    assert kdisp.count_inside(points, box) == 0


def test_bounds():
    assert kdisp.thm_a_upper(16, 2, 1) == 1.0
    assert kdisp.thm_b_lower(8, 2, 0) == 1 / 64
    assert kdisp.sufficient_n(2, 2, 1) == 4259
    assert kdisp.pigeonhole_threshold(6, 1) == 16


def test_stochastic_is_sound():
    points = kdisp.uniform_random(8, 2, 3)
    config = kdisp.SearchConfig()
    config.trials = 50
    config.seed = 4
    low = kdisp.stochastic_lower_bound(points, 1, config)
    exact = kdisp.exact_k_dispersion(points, 1)
    assert low.value <= exact.value + 1e-12


CLI = os.environ.get("KDISP_CLI")


@pytest.mark.skipif(not CLI, reason="KDISP_CLI not set")
class TestCli:
    def run(self, *args, threads=None):
        env = dict(os.environ)
        if threads is not None:
            env["KDISP_THREADS"] = str(threads)
        else:
            env.pop("KDISP_THREADS", None)
        proc = subprocess.run([CLI, *args], capture_output=True, env=env)
        assert proc.returncode == 0, proc.stderr.decode()
        return proc.stdout

    def test_gen_disp_pipeline(self, tmp_path):
        path = str(tmp_path / "set.json")
        self.run("gen", "--kind", "mesh", "--m", "2", "--d", "2", "--n", "20",
                 "--seed", "5", "--out", path)
        doc = json.loads(open(path).read())
        assert doc["d"] == 2 and doc["mesh_level"] == 2
        out = self.run("disp", "--in", path, "--k", "1").decode()
        assert "value_exact:" in out and "complete: true" in out
        grid = self.run("disp", "--in", path, "--k", "1", "--grid").decode()
        assert out.splitlines()[0] == grid.splitlines()[0]  # same value line

    def test_python_written_set_is_cli_readable(self, tmp_path):
        points = kdisp.uniform_random(6, 2, 9)
        path = str(tmp_path / "uniform.json")
        kdisp.save_pointset(points, path)
        out = self.run("search", "--in", path, "--k", "0", "--trials", "20",
                       "--seed", "1").decode()
        assert "value:" in out

    def test_certify_and_bounds(self, tmp_path):
        path = str(tmp_path / "two.json")
        kdisp.save_pointset(kdisp.PointMultiset(2, [[0.1, 0.6], [0.7, 0.2]]), path)
        out = self.run("certify", "--in", path, "--k", "0").decode()
        assert "certificate: disagree" in out
        out = self.run("bounds", "--n", "16", "--d", "2", "--k", "1").decode()
        assert "thm_b_lower: 0.015625" in out

    def test_partition_verify(self):
        out = self.run("partition-verify", "--m", "2", "--d", "2").decode()
        assert "lemma_holds: true" in out
        assert "cells: 27" in out

    def test_exit_codes(self, tmp_path):
        def code(*args):
            return subprocess.run([CLI, *args], capture_output=True).returncode

        # 2: precondition violation
        assert code("gen", "--kind", "mesh", "--m", "0", "--d", "2", "--n", "5") == 2
        # 3: budget exceeded
        path = str(tmp_path / "big.json")
        kdisp.save_pointset(
            kdisp.mesh_random_multiset(kdisp.MeshSpec(m=4, d=3, n=10), 1), path)
        assert code("disp", "--in", path, "--k", "0", "--grid", "--budget", "100") == 3
        # 4: i/o error
        assert code("disp", "--in", str(tmp_path / "missing.json"), "--k", "0") == 4

    def test_thread_count_determinism(self, tmp_path):
        path = str(tmp_path / "det.json")
        self.run("gen", "--kind", "uniform", "--d", "3", "--n", "12", "--seed", "8",
                 "--out", path)
        for args in (["disp", "--in", path, "--k", "1"],
                     ["search", "--in", path, "--k", "1", "--trials", "32", "--seed", "2"],
                     ["experiment", "sweep", "--kind", "fibonacci", "--nus", "5,6,7",
                      "--k", "0"]):
            one = self.run(*args, threads=1)
            eight = self.run(*args, threads=8)
            assert one == eight
