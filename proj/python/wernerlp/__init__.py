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

"""Exact PPT linear programs and dense checks for Werner state discrimination.

Rationals cross the boundary as "num/den" strings; the helpers here accept
``fractions.Fraction`` (or ints and strings) and return ``Fraction`` where the
underlying value is exact.
"""

from fractions import Fraction
import json

from . import _core
from ._core import WernerError

__all__ = [
    "WernerError",
    "active_branch",
    "certificate_sums",
    "bias_bound_random",
    "certify",
    "chernoff_werner",
    "classical_chernoff",
    "dual_certificate",
    "lp_solve",
    "oracle_verify",
    "perr",
    "q_matrix",
    "q_matrix_csv",
    "run",
    "simulate",
    "to_fraction",
]


def _rational_arg(p):
    if isinstance(p, str):
        return p
    f = Fraction(p)
    return f"{f.numerator}/{f.denominator}"


def to_fraction(text):
    """Parses a "num/den" string."""
    return Fraction(text)


def q_matrix(d, n):
    """Q as a list of integer rows."""
    q = _core.q_matrix(d, n)
    return [[int(v) for v in row] for row in q["entries"]]


def q_matrix_csv(d, n):
    return _core.q_matrix_csv(d, n)


def perr(d, n, p):
    """Exact optimal PPT error probability."""
    return Fraction(_core.perr(d, n, _rational_arg(p)))


def active_branch(d, n, p):
    return _core.active_branch(d, n, _rational_arg(p))


def lp_solve(d, n, p):
    """Exact simplex solution; x, objective and error as Fractions."""
    sol = _core.lp_solve(d, n, _rational_arg(p))
    sol["x"] = [Fraction(v) for v in sol["x"]]
    sol["objective"] = Fraction(sol["objective"])
    sol["error_probability"] = Fraction(sol["error_probability"])
    return sol


def dual_certificate(d, n, p):
    cert = _core.dual_certificate(d, n, _rational_arg(p))
    return {k: [Fraction(v) for v in vs] for k, vs in cert.items()}


def certify(d, n, p, corrupt_certificate=False):
    return _core.certify(d, n, _rational_arg(p), corrupt_certificate)


def certificate_sums(d, n, k):
    sums = _core.certificate_sums(d, n, k)
    return {k2: (v if isinstance(v, bool) else Fraction(v)) for k2, v in sums.items()}


def classical_chernoff(p, q):
    return _core.classical_chernoff([float(Fraction(x)) for x in p], [float(Fraction(x)) for x in q])


def chernoff_werner(d, rates=0, p="1/2"):
    return _core.chernoff_werner(d, rates, _rational_arg(p))


def simulate(d, n, p, trials, seed=0, chunk_size=65536, threads=1):
    return _core.simulate(d, n, _rational_arg(p), trials, seed, chunk_size, threads)


def bias_bound_random(dim, samples, seed, p="1/2"):
    return _core.bias_bound_random(dim, samples, seed, _rational_arg(p))


def oracle_verify(d, n):
    return _core.oracle_verify(d, n)


def run(*args):
    """Runs a command line; returns (exit_code, parsed JSON or raw stdout, stderr)."""
    code, out, err = _core.run([str(a) for a in args])
    try:
        parsed = json.loads(out)
    except ValueError:
        parsed = out
    return code, parsed, err
