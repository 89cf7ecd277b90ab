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

#include <cstddef>
#include <vector>

#include "wernerlp/exact.hpp"

namespace wernerlp {

using ExactMatrix = std::vector<std::vector<Rational>>;

/// min c^T x  subject to  A x >= b, x >= 0.
struct LinearProgram {
    ExactMatrix a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class SimplexStatus { optimal, infeasible, unbounded };

const char *simplex_status_name(SimplexStatus s);

struct SimplexResult {
    SimplexStatus status = SimplexStatus::infeasible;
    std::vector<Rational> x;
    Rational objective;
    /// Basic variable per tableau row at termination. Indices 0..nx-1 are the
    /// structural variables, nx..nx+m-1 the surplus of each constraint row.
    std::vector<int> basis;
    int iterations = 0;
};

/// Two-phase primal simplex in exact arithmetic with Bland's anticycling rule.
/// Phase one is skipped when the all-slack basis is already feasible (b <= 0).
SimplexResult solve_exact_simplex(const LinearProgram &lp);

}  // namespace wernerlp
