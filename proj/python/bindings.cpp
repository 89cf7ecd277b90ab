// Copyright 2026 The wernerlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "wernerlp/chernoff.hpp"
#include "wernerlp/errors.hpp"
#include "wernerlp/ppt_lp.hpp"
#include "wernerlp/serialize.hpp"
#include "wernerlp/symmetric_algebra.hpp"
#include "wernerlp/werner_core.hpp"

namespace py = pybind11;
using wernerlp::Json;

namespace {

py::object to_python(const Json &j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto &e : j) {
                out.append(to_python(e));
            }
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto &[k, v] : j.items()) {
                out[py::str(k)] = to_python(v);
            }
            return out;
        }
        default:
            throw wernerlp::InternalConsistencyError("unsupported JSON value");
    }
}

py::object outcome(const wernerlp::cli::CommandOutcome &o) { return to_python(wernerlp::cli::to_json(o)); }

wernerlp::Instance instance(int d, int n, const std::string &p) {
    return wernerlp::Instance::make(d, n, wernerlp::Rational::parse(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact LP, dense oracle and simulation kernels for Werner state discrimination.";

    py::register_exception<wernerlp::Error>(m, "WernerError", PyExc_ValueError);

    m.def(
        "q_matrix", [](int d, int n) { return to_python(wernerlp::to_json(wernerlp::q_matrix(d, n))); }, py::arg("d"),
        py::arg("n"), "Integer Q matrix as {d, n, entries, rowSumOk}; entries are decimal strings.");
    m.def(
        "q_matrix_csv", [](int d, int n) { return wernerlp::to_csv(wernerlp::q_matrix(d, n)); }, py::arg("d"),
        py::arg("n"));
    m.def(
        "perr", [](int d, int n, const std::string &p) { return wernerlp::perr_closed_form(instance(d, n, p)).str(); },
        py::arg("d"), py::arg("n"), py::arg("p"), "Optimal PPT error probability as \"num/den\".");
    m.def(
        "active_branch",
        [](int d, int n, const std::string &p) { return std::string(branch_name(active_branch(instance(d, n, p)))); },
        py::arg("d"), py::arg("n"), py::arg("p"));
    m.def(
        "lp_solve",
        [](int d, int n, const std::string &p) {
            return to_python(wernerlp::to_json(wernerlp::simplex_solve(wernerlp::build_primal(instance(d, n, p)))));
        },
        py::arg("d"), py::arg("n"), py::arg("p"));
    m.def(
        "dual_certificate",
        [](int d, int n, const std::string &p) {
            return to_python(wernerlp::to_json(wernerlp::dual_certificate(instance(d, n, p))));
        },
        py::arg("d"), py::arg("n"), py::arg("p"));
    m.def(
        "certify",
        [](int d, int n, const std::string &p, bool corrupt) {
            return outcome(wernerlp::cli::cmd_certify(d, n, p, corrupt));
        },
        py::arg("d"), py::arg("n"), py::arg("p"), py::arg("corrupt_certificate") = false);
    m.def(
        "certificate_sums", [](int d, int n, int k) { return to_python(wernerlp::to_json(wernerlp::certificate_sum_check(d, n, k))); },
        py::arg("d"), py::arg("n"), py::arg("k"));
    m.def(
        "classical_chernoff",
        [](const std::vector<double> &p, const std::vector<double> &q) {
            return to_python(wernerlp::to_json(wernerlp::classical_chernoff(p, q)));
        },
        py::arg("p"), py::arg("q"));
    m.def(
        "chernoff_werner",
        [](int d, int rates, const std::string &p) { return outcome(wernerlp::cli::cmd_chernoff_werner(d, rates, p)); },
        py::arg("d"), py::arg("rates") = 0, py::arg("p") = "1/2");
    m.def(
        "simulate",
        [](int d, int n, const std::string &p, std::uint64_t trials, std::uint64_t seed, std::uint64_t chunk_size,
           unsigned threads) {
            wernerlp::cli::CommandOutcome o;
            {
                py::gil_scoped_release release;
                o = wernerlp::cli::cmd_simulate(d, n, p, trials, seed, chunk_size, threads);
            }
            return outcome(o);
        },
        py::arg("d"), py::arg("n"), py::arg("p"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("chunk_size") = 65536, py::arg("threads") = 1);
    m.def(
        "bias_bound_random",
        [](std::size_t dim, std::size_t samples, std::uint64_t seed, const std::string &p) {
            return outcome(wernerlp::cli::cmd_bias_bound_random(dim, samples, seed, p));
        },
        py::arg("dim"), py::arg("samples"), py::arg("seed"), py::arg("p") = "1/2");
    m.def(
        "oracle_verify",
        [](int d, int n) { return outcome(wernerlp::cli::cmd_oracle_verify(d, n, wernerlp::kDefaultDimensionCap)); },
        py::arg("d"), py::arg("n"));
    m.def(
        "run",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = wernerlp::cli::run(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a command-line invocation; returns (exit_code, stdout, stderr).");
}
