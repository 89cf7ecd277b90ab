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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wernerlp/chernoff.hpp"
#include "wernerlp/dense_oracle.hpp"
#include "wernerlp/exact.hpp"
#include "wernerlp/ppt_lp.hpp"
#include "wernerlp/protocol_sim.hpp"
#include "wernerlp/symmetric_algebra.hpp"

// JSON wire formats. Exact values are always "num/den" strings; decimals are
// presentation only.
namespace wernerlp {

using Json = nlohmann::json;

Json to_json(const Rational &value);
Json to_json(const std::vector<Rational> &values);
/// Accepts "num/den", "num", or a JSON integer.
Rational rational_from_json(const Json &j);
std::vector<Rational> rationals_from_json(const Json &j);

Json to_json(const QMatrix &q);
QMatrix qmatrix_from_json(const Json &j);
/// One row per line, comma separated, no header.
std::string to_csv(const QMatrix &q);

Json to_json(const SymmetricPovmVector &x);
Json to_json(const PptReport &report);
Json to_json(const DualCertificate &cert);
DualCertificate certificate_from_json(const Json &j);
/// [{index, lhs, rhs, slack, satisfied}, ...]
Json to_json(const std::vector<ConstraintCheck> &checks);
Json to_json(const PrimalFeasibilityReport &report);
Json to_json(const DualFeasibilityReport &report);
Json to_json(const LpSolution &solution);
Json to_json(const CertificateSums &sums);

/// {value_bits, value_nats, s_star, evaluations}; infinite values are "inf",
/// a missing minimizer is null.
Json to_json(const ChernoffResult &result);
Json to_json(const WernerChernoff &result);
Json to_json(const std::vector<RatePoint> &rates);

Json to_json(const SimulationResult &result);

struct DensityMatrixFile {
    DenseSymmetric rho;
    SubsystemShape shape;
};

/// {dim, shape: [d1, d2, ...], entries: row-major reals}. Rejected unless
/// symmetric, PSD and of unit trace within tolerance.
DensityMatrixFile density_matrix_from_json(const Json &j);
Json to_json(const DenseSymmetric &rho, const SubsystemShape &shape);

/// A JSON array of probabilities (numbers or "num/den" strings), or an
/// object with such an array under "probabilities".
std::vector<double> distribution_from_json(const Json &j);

Json read_json_file(const std::string &path);

}  // namespace wernerlp
