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

#include <stdexcept>
#include <string>

namespace wernerlp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its domain (d < 2, n < 1, p not in (0, 1), index out of range, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// Operand shapes disagree (vector length vs. copy count, matrix vs. subsystem shape).
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// A dense construction would exceed the configured dimension cap.
class SizeLimitExceeded : public Error {
   public:
    using Error::Error;
};

/// Input is not a density matrix (or not a POVM element) within tolerance.
class NotAState : public Error {
   public:
    using Error::Error;
};

/// Inputs to a duality computation are not feasible.
class InfeasibleInput : public Error {
   public:
    using Error::Error;
};

/// The simplex method reported an infeasible or unbounded program, or some
/// other invariant that must hold for well-formed instances was violated.
class InternalConsistencyError : public Error {
   public:
    using Error::Error;
};

/// Malformed file or command-line input.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace wernerlp
