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
#include <vector>

#include "wcep/linalg.hpp"

namespace wcep::detail {

std::vector<double> float_singular_values(const FloatMatrix& a);
std::size_t float_rank(const FloatMatrix& a, const Tolerance& tol);
FloatMatrix float_pseudoinverse(const FloatMatrix& a, const Tolerance& tol);
FullRankFactors<Complex> float_full_rank(const FloatMatrix& a, const Tolerance& tol);
std::optional<FloatMatrix> float_inverse(const FloatMatrix& a, const Tolerance& tol);
std::optional<FloatMatrix> float_cholesky_upper(const FloatMatrix& e);

}  // namespace wcep::detail
