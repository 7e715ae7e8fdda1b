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

#include "wcep/matrix.hpp"

namespace wcep {

/**
 * Rank and residual cutoffs. Both are zero on the exact backend (decisions are
 * exact) and strictly positive on the floating backend.
 *
 *  - rank_rel: a singular value counts when sigma > rank_rel * sigma_max * max(rows, cols).
 *  - residual_rel: an identity L = R holds when
 *    ||L - R||_F / (1 + ||L||_F + ||R||_F) <= residual_rel.
 */
struct Tolerance {
  double rank_rel = 0.0;
  double residual_rel = 0.0;

  static constexpr double kDefaultRankRel = 1e-12;
  static constexpr double kDefaultResidualRel = 1e-9;

  static constexpr Tolerance exact() { return {0.0, 0.0}; }
  static constexpr Tolerance floating(double rank_rel = kDefaultRankRel,
                                      double residual_rel = kDefaultResidualRel) {
    return {rank_rel, residual_rel};
  }

  template <Scalar T>
  static constexpr Tolerance for_backend() {
    return is_exact_v<T> ? exact() : floating();
  }

  /// Throws std::invalid_argument if the tolerance does not suit the backend.
  void validate(Backend backend) const;
};

template <Scalar T>
void check_tolerance(const Tolerance& tol) {
  tol.validate(ScalarTraits<T>::backend);
}

}  // namespace wcep
