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

namespace wcep::cli {

/// Worked example with an index-2 matrix and positive definite weights.
struct ReferenceExampleOne {
  ExactMatrix a, e, f;
  ExactMatrix core_ep;       // E-weighted core-EP inverse of a
  ExactMatrix dual_core_ep;  // F-weighted dual core-EP inverse of a
};

/// Worked example with an index-2 matrix; x is a {1,3^E}-inverse of a^2.
struct ReferenceExampleTwo {
  ExactMatrix a, e, x;
  ExactMatrix drazin;
  ExactMatrix core_ep;
  ExactMatrix core_ep_of_core_ep;
};

const ReferenceExampleOne& reference_example_one();
const ReferenceExampleTwo& reference_example_two();

}  // namespace wcep::cli
