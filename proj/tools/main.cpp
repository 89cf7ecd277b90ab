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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char **argv) {
    std::optional<unsigned> threads;
    if (const char *env = std::getenv("THREADS"); env != nullptr && *env != '\0') {
        try {
            threads = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception &) {
            std::cerr << "ignoring invalid THREADS=" << env << "\n";
        }
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return wernerlp::cli::run(args, std::cout, std::cerr, threads);
}
