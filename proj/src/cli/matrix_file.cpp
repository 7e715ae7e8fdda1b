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

#include "wcep/cli/matrix_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wcep/errors.hpp"
#include "wcep/gaussian_rational.hpp"

namespace wcep::cli {

namespace {

using nlohmann::json;

std::size_t positive_dim(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("matrix file: missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw ParseError(std::string("matrix file: \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

Complex parse_float_entry(const json& v, std::size_t i, std::size_t j) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParseError("matrix file: entry (" + std::to_string(i) + "," + std::to_string(j) +
                   ") must be a number or a [re, im] pair");
}

std::string format_double(double d) {
  if (!std::isfinite(d)) throw std::runtime_error("matrix file: cannot write a non-finite entry");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, d);
  std::string s(buf, res.ptr);
  // Keep integer-valued doubles recognizably floating in the JSON text.
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

template <class Entry>
std::string write_rows(std::size_t rows, std::size_t cols, const char* scalar, Entry entry) {
  std::ostringstream os;
  os << "{\n  \"rows\": " << rows << ",\n  \"cols\": " << cols << ",\n  \"scalar\": \"" << scalar
     << "\",\n  \"data\": [\n";
  for (std::size_t i = 0; i < rows; ++i) {
    os << "    [";
    for (std::size_t j = 0; j < cols; ++j) os << (j ? ", " : "") << entry(i, j);
    os << "]" << (i + 1 < rows ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix file: top level must be an object");
  const std::size_t rows = positive_dim(doc, "rows");
  const std::size_t cols = positive_dim(doc, "cols");
  if (!doc.contains("scalar") || !doc.at("scalar").is_string()) {
    throw ParseError("matrix file: \"scalar\" must be \"rational\" or \"float\"");
  }
  const std::string scalar = doc.at("scalar").get<std::string>();
  MatrixFile out;
  if (scalar == "rational") {
    out.scalar = ScalarKind::rational;
  } else if (scalar == "float") {
    out.scalar = ScalarKind::floating;
  } else {
    throw ParseError("matrix file: unknown scalar \"" + scalar + "\"");
  }

  const json& data = doc.contains("data") ? doc.at("data") : json();
  if (!data.is_array() || data.size() != rows) {
    throw ParseError("matrix file: \"data\" must hold " + std::to_string(rows) + " rows");
  }
  out.floating = FloatMatrix(rows, cols);
  if (out.scalar == ScalarKind::rational) out.exact = ExactMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = data[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix file: row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (out.scalar == ScalarKind::rational) {
        if (!row[j].is_string()) {
          throw ParseError("matrix file: rational entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") must be a string");
        }
        out.exact(i, j) = GaussianRational::parse(row[j].get<std::string>());
        out.floating(i, j) = out.exact(i, j).to_complex();
      } else {
        out.floating(i, j) = parse_float_entry(row[j], i, j);
      }
    }
  }
  return out;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read matrix file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string write_matrix_file(const ExactMatrix& m) {
  return write_rows(m.rows(), m.cols(), "rational",
                    [&](std::size_t i, std::size_t j) { return "\"" + m(i, j).to_string() + "\""; });
}

std::string write_matrix_file(const FloatMatrix& m) {
  return write_rows(m.rows(), m.cols(), "float", [&](std::size_t i, std::size_t j) {
    const Complex z = m(i, j);
    if (z.imag() == 0.0) return format_double(z.real());
    return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
  });
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace wcep::cli
