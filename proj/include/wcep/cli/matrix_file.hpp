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

#include <filesystem>
#include <string>
#include <string_view>

#include "wcep/matrix.hpp"

namespace wcep::cli {

enum class ScalarKind { rational, floating };

/**
 * JSON matrix file:
 *
 *   {"rows": m, "cols": n, "scalar": "rational" | "float", "data": [[...], ...]}
 *
 * Rational entries are strings ("p", "p/q", "p/q i", "p/q+r/s i"); float
 * entries are a number or a [re, im] pair. rows and cols must be positive.
 */
struct MatrixFile {
  ScalarKind scalar = ScalarKind::rational;
  ExactMatrix exact;      // set for rational files only
  FloatMatrix floating;   // always set; rational files are converted

  std::size_t rows() const { return floating.rows(); }
  std::size_t cols() const { return floating.cols(); }
};

/// Throws ParseError on malformed JSON, bad entries or a shape mismatch.
MatrixFile parse_matrix_file(std::string_view text);
/// Throws ParseError, including when the file cannot be read.
MatrixFile read_matrix_file(const std::filesystem::path& path);

/// Canonical text: one row per line, trailing newline. Parsing it back and
/// writing again is byte-identical.
std::string write_matrix_file(const ExactMatrix& m);
std::string write_matrix_file(const FloatMatrix& m);

/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace wcep::cli
