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

#include "wcep/tolerance.hpp"

#include <cmath>
#include <stdexcept>

namespace wcep {

void Tolerance::validate(Backend backend) const {
  if (backend == Backend::exact) {
    if (rank_rel != 0.0 || residual_rel != 0.0) {
      throw std::invalid_argument("exact backend requires zero tolerances");
    }
    return;
  }
  if (!(rank_rel > 0.0) || !(residual_rel > 0.0) || !std::isfinite(rank_rel) || !std::isfinite(residual_rel)) {
    throw std::invalid_argument("float backend requires strictly positive finite tolerances");
  }
}

}  // namespace wcep
