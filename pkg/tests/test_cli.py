"""End-to-end command line tests through a real subprocess."""

import json
import os
import subprocess
import sys

import pytest

from specmat.serialize import dumps


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("SPECMAT_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "specmat.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


class TestBuild:
    def test_translation_matrix_oracle(self):
        out = run_cli("build", "--op", "delta-hat", "--nodes", "0,1", "--a", "1")
        assert out.returncode == 0
        data = json.loads(out.stdout)
        assert data["entries"] == ["0", "1", "-1", "2"]
        assert data["backend"] == "exact-rational"

    def test_difference_matrix_oracle(self):
        out = run_cli("build", "--op", "nabla-hat", "--nodes", "0,1", "--a", "1")
        assert json.loads(out.stdout)["entries"] == ["-1", "1", "-1", "1"]

    def test_q_weighted_matrix_oracle(self):
        out = run_cli("build", "--op", "K-check", "--nodes", "1,2", "--q", "2")
        assert json.loads(out.stdout)["entries"] == ["-1", "1", "-2", "2"]

    def test_seeded_build_without_nodes(self):
        a = run_cli("build", "--op", "D", "--n", "4", "--seed", "5")
        b = run_cli("build", "--op", "D", "--n", "4", "--seed", "5")
        assert a.returncode == 0
        assert a.stdout == b.stdout

    def test_duplicate_nodes_are_usage_error(self):
        out = run_cli("build", "--op", "delta-hat", "--nodes", "1,1")
        assert out.returncode == 64

    def test_unknown_op(self):
        out = run_cli("build", "--op", "L-hat")
        assert out.returncode == 64


class TestVerify:
    def test_all_suites_pass(self):
        out = run_cli(
            "verify", "--suite", "all", "--n", "3", "--seed", "1",
            "--backend", "exact",
        )
        assert out.returncode == 0
        report = json.loads(out.stdout)
        assert report["pass"] is True

    def test_failing_tolerance_gives_exit_one(self):
        out = run_cli(
            "verify", "--suite", "identities", "--n", "6", "--seed", "0",
            "--backend", "f64", "--tol", "1e-30",
        )
        assert out.returncode == 1
        assert json.loads(out.stdout)["pass"] is False

    def test_byte_identical_reruns(self):
        args = (
            "verify", "--suite", "all", "--n", "4", "--seed", "3",
            "--backend", "f64",
        )
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_environment_seed_fallback(self):
        flagged = run_cli(
            "verify", "--suite", "identities", "--n", "4", "--seed", "8"
        )
        env_seeded = run_cli(
            "verify", "--suite", "identities", "--n", "4",
            env_extra={"SPECMAT_SEED": "8"},
        )
        assert flagged.stdout == env_seeded.stdout

    def test_malformed_environment_seed(self):
        out = run_cli(
            "verify", "--suite", "identities", "--n", "2",
            env_extra={"SPECMAT_SEED": "abc"},
        )
        assert out.returncode == 64

    def test_unknown_suite(self):
        assert run_cli("verify", "--suite", "nope").returncode == 64


class TestZeros:
    def test_degree_one_closed_form(self):
        out = run_cli(
            "zeros", "--family", "wilson", "--alpha", "1", "--beta", "1",
            "--gamma", "1", "--delta", "1", "--n", "1",
        )
        assert out.returncode == 0
        data = json.loads(out.stdout)
        assert data["zeta_zeros"] == [[1.0, 0.0]]
        assert data["z_lift"] == [[0.0, 1.0]]

    def test_degenerate_grid_is_numerical_failure(self):
        out = run_cli(
            "zeros", "--family", "racah", "--alpha", "1", "--beta", "2",
            "--gamma", "3", "--delta", "4", "--n", "5",
        )
        assert out.returncode == 2

    def test_zero_degree_rejected(self):
        out = run_cli("zeros", "--family", "wilson", "--n", "0")
        assert out.returncode == 64

    def test_family_defaults_to_wilson(self):
        out = run_cli("zeros", "--n", "2")
        assert out.returncode == 0
        assert json.loads(out.stdout)["family"] == "wilson"


class TestSpectrum:
    def test_exact_claim_report(self):
        out = run_cli("spectrum", "--prop", "3.7", "--n", "3", "--seed", "0")
        assert out.returncode == 0
        data = json.loads(out.stdout)
        assert data["proposition"] == "3.7"
        assert data["char_poly_match"] is True
        assert data["pass"] is True

    def test_prop_prefix_accepted(self):
        bare = run_cli("spectrum", "--prop", "3.1", "--n", "3", "--seed", "2")
        prefixed = run_cli(
            "spectrum", "--prop", "prop-3.1", "--n", "3", "--seed", "2"
        )
        assert bare.stdout == prefixed.stdout

    def test_zero_grid_spectrum(self):
        out = run_cli("spectrum", "--prop", "3.9", "--n", "4")
        assert out.returncode == 0
        assert json.loads(out.stdout)["pass"] is True

    def test_unknown_proposition(self):
        assert run_cli("spectrum", "--prop", "9.9").returncode == 64


class TestOutputHandling:
    def test_out_file(self, tmp_path):
        target = tmp_path / "report.json"
        out = run_cli(
            "build", "--op", "delta-hat", "--nodes", "0,1",
            "--out", str(target),
        )
        assert out.returncode == 0
        assert out.stdout == ""
        assert json.loads(target.read_text())["entries"] == ["0", "1", "-1", "2"]

    def test_pretty_parses_to_same_payload(self):
        compact = run_cli("build", "--op", "V", "--nodes", "0,1")
        pretty = run_cli("build", "--op", "V", "--nodes", "0,1", "--pretty")
        assert "\n" in pretty.stdout.strip()
        assert json.loads(compact.stdout) == json.loads(pretty.stdout)

    def test_emitted_json_is_dump_stable(self):
        out = run_cli(
            "verify", "--suite", "appendix-b", "--n", "3", "--seed", "4",
            "--backend", "f64",
        )
        text = out.stdout.strip()
        assert dumps(json.loads(text)) == text


def test_unknown_subcommand():
    assert run_cli("bogus").returncode == 64


def test_no_arguments_is_usage_error():
    assert run_cli().returncode == 64
