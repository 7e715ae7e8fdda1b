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

#include "wcep/cli/reference_examples.hpp"

#include "wcep/gaussian_rational.hpp"

namespace wcep::cli {

const ReferenceExampleOne& reference_example_one() {
  static const ReferenceExampleOne ex{
      .a = {{4, 3, 0}, {0, 0, 0}, {-1, 4, 0}},
      .e = {{3, 1, 2}, {1, 1, 1}, {2, 1, 2}},
      .f = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}},
      .core_ep = {{ratio(5, 17), ratio(3, 34), ratio(3, 17)},
                  {0, 0, 0},
                  {ratio(-5, 68), ratio(-3, 136), ratio(-3, 68)}},
      .dual_core_ep = {{ratio(1, 6), ratio(1, 8), 0}, {ratio(1, 9), ratio(1, 12), 0}, {ratio(-1, 18), ratio(-1, 24), 0}},
  };
  return ex;
}

const ReferenceExampleTwo& reference_example_two() {
  static const ReferenceExampleTwo ex{
      .a = {{-1, 4, -5}, {1, -4, 5}, {1, -2, 3}},
      .e = {{ratio(34, 25), 0, ratio(3, 5)}, {0, 1, 0}, {ratio(3, 5), 0, 2}},
      .x = {{0, 0, 0}, {ratio(-5, 236), ratio(5, 236), ratio(3, 236)}, {ratio(5, 236), ratio(-5, 236), ratio(-3, 236)}},
      .drazin = {{0, ratio(5, 4), ratio(-5, 4)}, {0, ratio(-5, 4), ratio(5, 4)}, {0, ratio(-3, 4), ratio(3, 4)}},
      .core_ep = {{ratio(-25, 118), ratio(25, 118), ratio(15, 118)},
                  {ratio(25, 118), ratio(-25, 118), ratio(-15, 118)},
                  {ratio(15, 118), ratio(-15, 118), ratio(-9, 118)}},
      .core_ep_of_core_ep = {{ratio(-50, 59), ratio(50, 59), ratio(30, 59)},
                             {ratio(50, 59), ratio(-50, 59), ratio(-30, 59)},
                             {ratio(30, 59), ratio(-30, 59), ratio(-18, 59)}},
  };
  return ex;
}

}  // namespace wcep::cli
