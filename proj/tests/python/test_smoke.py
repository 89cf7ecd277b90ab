# Copyright 2026 The wernerlp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

import wernerlp


def test_perr_is_exact():
    assert wernerlp.perr(2, 1, Fraction(1, 2)) == Fraction(1, 6)
    assert wernerlp.perr(2, 1, "3/4") == Fraction(1, 4)
    assert wernerlp.perr(3, 10, Fraction(1, 2)) == Fraction(1, 2048)
    assert wernerlp.active_branch(2, 1, "3/4") == "tie"


def test_q_matrix():
    assert wernerlp.q_matrix(2, 2) == [[1, 2, 1], [3, 2, -1], [9, -6, 1]]
    assert all(sum(row) == 8 for row in wernerlp.q_matrix(5, 3))
    assert wernerlp.q_matrix_csv(2, 1) == "1,1\n3,-1\n"


def test_lp_solve_matches_closed_form():
    for d in range(2, 5):
        for n in range(1, 6):
            for p in (Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)):
                sol = wernerlp.lp_solve(d, n, p)
                r = Fraction(d - 1, d + 1)
                assert sol["error_probability"] == min(p * r**n, 1 - p)


def test_certificate():
    cert = wernerlp.dual_certificate(2, 2, "1/2")
    assert cert["u"] == [0, Fraction(1, 6), Fraction(1, 18)]
    ok = wernerlp.certify(6, 25, "2/3")
    assert ok["status"] == "ok"
    assert ok["results"]["gap"] == "0/1"
    bad = wernerlp.certify(2, 4, "1/2", corrupt_certificate=True)
    assert bad["status"] == "check-failed"
    assert bad["results"]["violations"]


def test_certificate_sums():
    s = wernerlp.certificate_sums(3, 4, 4)
    assert s["agree"]
    assert s["s2_termwise"] == Fraction(1, 2) ** 4


def test_chernoff():
    w = wernerlp.chernoff_werner(2)["results"]
    assert w["exact_ratio"] == "3/1"
    assert abs(w["bits"] - math.log2(3)) < 1e-12
    c = wernerlp.classical_chernoff(["1/3", "2/3"], [1, 0])
    assert abs(c["value_bits"] - math.log2(3)) < 1e-10
    assert wernerlp.classical_chernoff([1, 0], [0, 1])["value_bits"] == "inf"


def test_simulation_is_deterministic():
    a = wernerlp.simulate(2, 3, "1/2", 200000, seed=42)
    b = wernerlp.simulate(2, 3, "1/2", 200000, seed=42, threads=2)
    assert a == b
    assert abs(a["results"]["z_score"]) <= 4
    assert a["results"]["errors_antisymmetric"] == 0


def test_bias_bound_and_oracle():
    r = wernerlp.bias_bound_random(9, 20, 7)
    assert r["status"] == "ok"
    assert r["results"]["passed"] == 20
    o = wernerlp.oracle_verify(2, 2)
    assert o["status"] == "ok"
    assert o["results"]["failed"] == 0


def test_errors_raise():
    with pytest.raises(wernerlp.WernerError):
        wernerlp.perr(1, 1, "1/2")
    with pytest.raises(ValueError):
        wernerlp.q_matrix(2, 0)


def test_run_matches_cli_contract():
    code, out, err = wernerlp.run("perr", "--d", 2, "--n", 1, "--p", "1/2")
    assert code == 0
    assert out["results"]["perr"] == "1/6"
    code, out, err = wernerlp.run("qmatrix", "--d", 2, "--n", 0)
    assert code == 2
    assert out["status"] == "error"


@pytest.mark.skipif("WERNERLP_CLI" not in os.environ, reason="command-line tool not built")
def test_executable():
    exe = os.environ["WERNERLP_CLI"]
    proc = subprocess.run([exe, "chernoff", "--d", "2"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["results"]["exact_ratio"] == "3/1"
    proc = subprocess.run(
        [exe, "simulate", "--d", "2", "--n", "3", "--p", "1/2", "--trials", "100000", "--seed", "1"],
        capture_output=True,
        text=True,
        env={**os.environ, "THREADS": "2"},
    )
    assert proc.returncode == 0
    proc = subprocess.run([exe, "certify", "--d", "2", "--n", "2", "--p", "1/2", "--corrupt-certificate"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
