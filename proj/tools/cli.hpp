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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wernerlp/serialize.hpp"

namespace wernerlp::cli {

enum class Status { ok, check_failed, error };

const char *status_name(Status s);
/// ok -> 0, check-failed -> 1, error -> 2.
int exit_code(Status s);

struct CommandOutcome {
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    Status status = Status::ok;
    std::string summary;
};

Json to_json(const CommandOutcome &outcome);

CommandOutcome cmd_qmatrix(int d, int n);
CommandOutcome cmd_perr(int d, int n, const std::string &p);
CommandOutcome cmd_certify(int d, int n, const std::string &p, bool corrupt_certificate = false);
CommandOutcome cmd_lp_solve(int d, int n, const std::string &p);
CommandOutcome cmd_chernoff_werner(int d, int rates_n_max = 0, const std::string &rates_p = "1/2");
CommandOutcome cmd_chernoff_distributions(const std::string &first, const std::string &second);
CommandOutcome cmd_chernoff_states(const std::string &first, const std::string &second);
CommandOutcome cmd_simulate(int d, int n, const std::string &p, std::uint64_t trials, std::uint64_t seed,
                            std::uint64_t chunk_size, unsigned threads);
CommandOutcome cmd_bias_bound_files(const std::string &first, const std::string &second, const std::string &p);
CommandOutcome cmd_bias_bound_random(std::size_t dim, std::size_t samples, std::uint64_t seed, const std::string &p);
CommandOutcome cmd_oracle_verify(int d, int n, std::size_t cap);

/// Parses argv-style arguments (without the program name), runs the command,
/// writes the outcome to `out` and diagnostics to `err`; returns the exit code.
/// `env_threads` overrides the simulate thread count when set.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        std::optional<unsigned> env_threads = std::nullopt);

}  // namespace wernerlp::cli
