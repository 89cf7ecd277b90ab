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

#include "wernerlp/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wernerlp/errors.hpp"

namespace wernerlp {

namespace {

Json number_or_inf(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

const Json &require_field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

}  // namespace

Json to_json(const Rational &value) { return value.str(); }

Json to_json(const std::vector<Rational> &values) {
    Json out = Json::array();
    for (const auto &v : values) {
        out.push_back(v.str());
    }
    return out;
}

Rational rational_from_json(const Json &j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw ParseError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of rationals");
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto &e : j) {
        out.push_back(rational_from_json(e));
    }
    return out;
}

Json to_json(const QMatrix &q) {
    Json rows = Json::array();
    for (const auto &row : q.rows()) {
        Json r = Json::array();
        for (const auto &e : row) {
            r.push_back(e.get_str());
        }
        rows.push_back(std::move(r));
    }
    return {{"d", q.d()}, {"n", q.n()}, {"entries", std::move(rows)}, {"rowSumOk", q.row_sums_ok()}};
}

QMatrix qmatrix_from_json(const Json &j) {
    int d = require_field(j, "d").get<int>();
    int n = require_field(j, "n").get<int>();
    std::vector<std::vector<BigInt>> entries;
    for (const auto &row : require_field(j, "entries")) {
        std::vector<BigInt> r;
        for (const auto &e : row) {
            if (!e.is_string()) {
                throw ParseError("Q entries must be integer strings");
            }
            try {
                r.emplace_back(e.get<std::string>(), 10);
            } catch (const std::invalid_argument &) {
                throw ParseError("not an integer: '" + e.get<std::string>() + "'");
            }
        }
        entries.push_back(std::move(r));
    }
    return QMatrix(d, n, std::move(entries));
}

std::string to_csv(const QMatrix &q) {
    std::ostringstream out;
    for (std::size_t l = 0; l < q.size(); ++l) {
        for (std::size_t k = 0; k < q.size(); ++k) {
            out << (k ? "," : "") << q.rows()[l][k].get_str();
        }
        out << "\n";
    }
    return out.str();
}

Json to_json(const SymmetricPovmVector &x) { return to_json(x.x); }

Json to_json(const PptReport &report) {
    Json violations = Json::array();
    for (const auto &v : report.violations) {
        violations.push_back({{"family", v.family == PptFamily::element ? "element" : "complement"},
                              {"row", v.row},
                              {"value", v.value.str()}});
    }
    return {{"feasible", report.feasible},
            {"element_rows", to_json(report.element_rows)},
            {"complement_rows", to_json(report.complement_rows)},
            {"violations", std::move(violations)}};
}

Json to_json(const DualCertificate &cert) { return {{"u", to_json(cert.u)}, {"v", to_json(cert.v)}, {"w", to_json(cert.w)}}; }

DualCertificate certificate_from_json(const Json &j) {
    return {rationals_from_json(require_field(j, "u")), rationals_from_json(require_field(j, "v")),
            rationals_from_json(require_field(j, "w"))};
}

Json to_json(const std::vector<ConstraintCheck> &checks) {
    Json out = Json::array();
    for (const auto &c : checks) {
        out.push_back({{"index", c.index},
                       {"lhs", c.lhs.str()},
                       {"rhs", c.rhs.str()},
                       {"slack", c.slack.str()},
                       {"satisfied", c.satisfied}});
    }
    return out;
}

Json to_json(const PrimalFeasibilityReport &report) {
    return {{"feasible", report.feasible}, {"rows", to_json(report.rows)}, {"nonnegativity", to_json(report.nonnegativity)}};
}

Json to_json(const DualFeasibilityReport &report) {
    return {{"feasible", report.feasible},
            {"nonnegativity", to_json(report.nonnegativity)},
            {"constraints", to_json(report.constraints)},
            {"qt_u", to_json(report.qt_u)},
            {"qt_u_expected", to_json(report.qt_u_expected)},
            {"qt_u_matches", report.qt_u_matches}};
}

Json to_json(const LpSolution &solution) {
    return {{"x", to_json(solution.x)},
            {"objective", solution.objective.str()},
            {"error_probability", solution.error_probability.str()},
            {"basis", solution.basis},
            {"iterations", solution.iterations}};
}

Json to_json(const CertificateSums &sums) {
    return {{"s1_termwise", sums.s1_termwise.str()},
            {"s1_closed", sums.s1_closed.str()},
            {"s2_termwise", sums.s2_termwise.str()},
            {"s2_closed", sums.s2_closed.str()},
            {"agree", sums.agree()}};
}

Json to_json(const ChernoffResult &result) {
    return {{"value_bits", number_or_inf(result.value_bits)},
            {"value_nats", number_or_inf(result.value_nats)},
            {"s_star", result.s_star ? Json(*result.s_star) : Json(nullptr)},
            {"evaluations", result.evaluations}};
}

Json to_json(const WernerChernoff &result) {
    return {{"exact_ratio", result.ratio.str()},
            {"bits", result.bits},
            {"nats", result.nats},
            {"single_copy_bits", result.single_copy_bits},
            {"agrees", result.agrees}};
}

Json to_json(const std::vector<RatePoint> &rates) {
    Json out = Json::array();
    for (const auto &r : rates) {
        out.push_back({{"n", r.n}, {"rate_bits", r.rate_bits}, {"branch", branch_name(r.branch)}});
    }
    return out;
}

Json to_json(const SimulationResult &r) {
    return {{"trials", r.trials},
            {"errors", r.errors},
            {"errors_symmetric", r.errors_symmetric},
            {"errors_antisymmetric", r.errors_antisymmetric},
            {"empirical_error", r.empirical_error},
            {"closed_form", r.closed_form},
            {"closed_form_exact", r.closed_form_exact.str()},
            {"sigma", r.sigma},
            {"z_score", number_or_inf(r.z_score)},
            {"ci95_half_width", r.ci95_half_width},
            {"seed", r.seed},
            {"chunk_size", r.chunk_size},
            {"branch", branch_name(r.branch)}};
}

DensityMatrixFile density_matrix_from_json(const Json &j) {
    auto dim = require_field(j, "dim").get<std::size_t>();
    SubsystemShape shape;
    if (j.contains("shape")) {
        shape.dims = j.at("shape").get<std::vector<std::size_t>>();
    } else {
        shape.dims = {dim};
    }
    if (shape.total() != dim) {
        throw ParseError("shape does not multiply out to dim");
    }
    const Json &entries = require_field(j, "entries");
    if (!entries.is_array() || entries.size() != dim * dim) {
        throw ParseError("entries must be a row-major array of dim*dim reals");
    }
    std::vector<double> values;
    values.reserve(entries.size());
    for (const auto &e : entries) {
        if (!e.is_number()) {
            throw ParseError("entries must be numbers");
        }
        values.push_back(e.get<double>());
    }
    DensityMatrixFile out{DenseSymmetric(dim, std::move(values)), std::move(shape)};
    validate_state(out.rho);
    return out;
}

Json to_json(const DenseSymmetric &rho, const SubsystemShape &shape) {
    return {{"dim", rho.dim()},
            {"shape", shape.dims},
            {"entries", std::vector<double>(rho.entries().begin(), rho.entries().end())}};
}

std::vector<double> distribution_from_json(const Json &j) {
    const Json &arr = j.is_object() ? require_field(j, "probabilities") : j;
    if (!arr.is_array()) {
        throw ParseError("distribution must be an array");
    }
    std::vector<double> out;
    for (const auto &e : arr) {
        if (e.is_number()) {
            out.push_back(e.get<double>());
        } else if (e.is_string()) {
            out.push_back(Rational::parse(e.get<std::string>()).to_double());
        } else {
            throw ParseError("probabilities must be numbers or \"num/den\" strings");
        }
    }
    return out;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

}  // namespace wernerlp
