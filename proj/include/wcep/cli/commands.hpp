/*
 * Copyright 2026 The wcep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "wcep/matrix.hpp"
#include "wcep/verify.hpp"

namespace wcep::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,  // parse, shape or backend mismatch
  kInvalidWeight = 3,
  kNoExist = 4,
  kVerificationFailed = 5,
};

struct RunConfig {
  std::optional<Backend> backend;  // unset: exact unless an input file is float
  std::optional<double> residual_tol;
  std::optional<double> rank_tol;
  InverseKind kind = InverseKind::core_ep_E;
  std::string matrix;
  std::string weight_e;  // empty: identity
  std::string weight_f;  // empty: identity
  std::string candidate;
  std::string out;  // empty: matrix to stdout, no certificate
  bool json = false;
};

/// Writes the inverse (and OUT.cert.json when out is set).
int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Evaluates the kind's axiom bundle on the candidate.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Prints ind(A).
int cmd_index(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Recomputes the built-in worked examples and compares them with their golden values.
int cmd_examples(Backend backend, bool corrupt_golden, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. WCEP_TOL, when set, is the default float residual tolerance.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wcep::cli
