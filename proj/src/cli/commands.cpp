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

#include "wcep/cli/commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wcep/classical.hpp"
#include "wcep/cli/matrix_file.hpp"
#include "wcep/cli/reference_examples.hpp"
#include "wcep/core_ep.hpp"
#include "wcep/errors.hpp"
#include "wcep/star.hpp"

namespace wcep::cli {

namespace {

using nlohmann::json;

constexpr double kGoldenFloatTol = 1e-10;

/// Picks the backend for a set of input files. Float files cannot be run
/// exactly; rational files are promoted to float with a warning.
Backend choose_backend(const RunConfig& cfg, const std::vector<const MatrixFile*>& files, std::ostream& err) {
  bool any_float = false;
  for (const MatrixFile* f : files) any_float = any_float || f->scalar == ScalarKind::floating;
  if (any_float) {
    if (cfg.backend == Backend::exact) throw BackendMismatch("a float matrix file cannot be used with --backend exact");
    return Backend::floating;
  }
  const Backend b = cfg.backend.value_or(Backend::exact);
  if (b == Backend::floating) err << "warning: rational input promoted to float\n";
  return b;
}

double parse_env_tol(const char* text) {
  char* end = nullptr;
  const double v = std::strtod(text, &end);
  if (end == text || *end != '\0' || !(v > 0.0)) {
    throw std::invalid_argument(std::string("WCEP_TOL must be a positive number, got \"") + text + "\"");
  }
  return v;
}

Tolerance make_tolerance(Backend backend, const RunConfig& cfg, std::ostream& err) {
  if (backend == Backend::exact) {
    if (cfg.residual_tol || cfg.rank_tol) err << "warning: tolerances are ignored on the exact backend\n";
    return Tolerance::exact();
  }
  Tolerance tol = Tolerance::floating();
  if (cfg.residual_tol) {
    tol.residual_rel = *cfg.residual_tol;
  } else if (const char* env = std::getenv("WCEP_TOL"); env && *env) {
    tol.residual_rel = parse_env_tol(env);
  }
  if (cfg.rank_tol) tol.rank_rel = *cfg.rank_tol;
  tol.validate(backend);
  return tol;
}

template <Scalar T>
const Matrix<T>& matrix_of(const MatrixFile& f) {
  if constexpr (is_exact_v<T>) {
    return f.exact;
  } else {
    return f.floating;
  }
}

template <Scalar T>
Weight<T> load_weight(const std::optional<MatrixFile>& file, std::size_t n, const Tolerance& tol, const char* name) {
  if (!file) return Weight<T>::identity(n);
  const Matrix<T>& m = matrix_of<T>(*file);
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError(std::string("weight ") + name + " is " + m.shape() + ", expected " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  return Weight<T>::make(m, tol);
}

/// All files of one invocation, read once.
struct LoadedInputs {
  MatrixFile a;
  std::optional<MatrixFile> e, f, candidate;

  std::vector<const MatrixFile*> all() const {
    std::vector<const MatrixFile*> v{&a};
    for (const auto* o : {&e, &f, &candidate}) {
      if (*o) v.push_back(&**o);
    }
    return v;
  }
};

LoadedInputs load_inputs(const RunConfig& cfg, bool with_candidate) {
  LoadedInputs in{read_matrix_file(cfg.matrix), std::nullopt, std::nullopt, std::nullopt};
  if (!cfg.weight_e.empty()) in.e = read_matrix_file(cfg.weight_e);
  if (!cfg.weight_f.empty()) in.f = read_matrix_file(cfg.weight_f);
  if (with_candidate) in.candidate = read_matrix_file(cfg.candidate);
  return in;
}

template <Scalar T>
std::string to_file_text(const Matrix<T>& m) {
  return write_matrix_file(m);
}

json report_json(const AxiomReport& report) {
  json axioms = json::array();
  for (const auto& o : report.outcomes) {
    axioms.push_back({{"axiom", o.axiom.label()},
                      {"equation", o.axiom.equation()},
                      {"residual", o.residual},
                      {"passed", o.passed},
                      {"tolerance", o.tolerance_used}});
  }
  return axioms;
}

void print_report_table(const AxiomReport& report, std::ostream& out) {
  out << std::left << std::setw(12) << "axiom" << std::setw(30) << "equation" << std::setw(14) << "residual"
      << "result\n";
  for (const auto& o : report.outcomes) {
    out << std::left << std::setw(12) << o.axiom.label() << std::setw(30) << o.axiom.equation() << std::setw(14)
        << std::setprecision(6) << o.residual << (o.passed ? "pass" : "FAIL") << "\n";
  }
}

struct Computed {
  std::string path;
  std::optional<std::size_t> power;
};

template <Scalar T>
std::optional<Matrix<T>> compute_kind(InverseKind kind, const Matrix<T>& a, const Weight<T>& e, const Weight<T>& f,
                                      const Tolerance& tol, Computed& info) {
  auto from_result = [&](std::optional<InverseResult<T>> r) -> std::optional<Matrix<T>> {
    if (!r) return std::nullopt;
    info.path = r->path;
    info.power = r->power;
    return std::move(r->value);
  };
  switch (kind) {
    case InverseKind::moore_penrose: return moore_penrose(a, tol);
    case InverseKind::drazin: return drazin(a, tol);
    case InverseKind::group: return group_inverse(a, tol);
    case InverseKind::one_three_E: return one_three_E(a, e, tol);
    case InverseKind::one_four_F: return one_four_F(a, f, tol);
    case InverseKind::weighted_mp: return weighted_mp(a, e, f, tol);
    case InverseKind::weighted_core: return weighted_core(a, e, tol);
    case InverseKind::weighted_dual_core: return weighted_dual_core(a, f, tol);
    case InverseKind::core_ep_E: return from_result(core_ep(a, e, tol));
    case InverseKind::dual_core_ep_F: return from_result(dual_core_ep(a, f, tol));
    case InverseKind::star_core_ep: return star_core_ep(a, e, tol);
    case InverseKind::dual_core_ep_star: return dual_core_ep_star(a, f, tol);
  }
  return std::nullopt;
}

/// Evaluates the bundle of the kind; Moore-Penrose always uses identity weights.
template <Scalar T>
AxiomReport bundle_report(InverseKind kind, const Matrix<T>& a, const Matrix<T>& x, const Weight<T>& e,
                          const Weight<T>& f, const Tolerance& tol, std::optional<std::size_t>& k) {
  if (!a.is_square() && !kind_allows_rectangular(kind)) {
    throw DimensionError(std::string(to_string(kind)) + " needs a square matrix, got " + a.shape());
  }
  k = a.is_square() ? std::optional(index(a, tol)) : std::nullopt;
  const std::vector<Axiom> bundle = axiom_bundle(kind, k.value_or(0));
  if (kind == InverseKind::moore_penrose) {
    const auto ie = Weight<T>::identity(a.rows());
    const auto jf = Weight<T>::identity(a.cols());
    return check_axioms(a, x, bundle, &ie, &jf, tol);
  }
  return check_axioms(a, x, bundle, &e, &f, tol);
}

template <Scalar T>
int compute_on(const RunConfig& cfg, const LoadedInputs& in, Backend backend, const Tolerance& tol,
               std::ostream& out, std::ostream& err) {
  const Matrix<T>& a = matrix_of<T>(in.a);
  const Weight<T> e = load_weight<T>(in.e, a.rows(), tol, "E");
  const Weight<T> f = load_weight<T>(in.f, a.cols(), tol, "F");
  if (!a.is_square() && !kind_allows_rectangular(cfg.kind)) {
    throw DimensionError(std::string(to_string(cfg.kind)) + " needs a square matrix, got " + a.shape());
  }

  Computed info;
  const std::optional<Matrix<T>> x = compute_kind(cfg.kind, a, e, f, tol, info);
  if (!x) {
    err << "no " << to_string(cfg.kind) << " inverse exists for this input\n";
    return kNoExist;
  }
  std::optional<std::size_t> k;
  const AxiomReport report = bundle_report(cfg.kind, a, *x, e, f, tol, k);

  const std::string text = to_file_text(*x);
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out, text);
    json cert = {{"kind", std::string(to_string(cfg.kind))},
                 {"backend", std::string(to_string(backend))},
                 {"index", k ? json(*k) : json(nullptr)},
                 {"power", info.power ? json(*info.power) : json(nullptr)},
                 {"path", info.path.empty() ? json(nullptr) : json(info.path)},
                 {"tolerance", {{"rank_rel", tol.rank_rel}, {"residual_rel", tol.residual_rel}}},
                 {"axioms", report_json(report)},
                 {"all_passed", report.all_passed()}};
    write_text_file(cfg.out + ".cert.json", cert.dump(2) + "\n");
  }
  if (!report.all_passed()) {
    err << "certificate failed:\n";
    print_report_table(report, err);
    return kVerificationFailed;
  }
  return kOk;
}

template <Scalar T>
int verify_on(const RunConfig& cfg, const LoadedInputs& in, const Tolerance& tol, std::ostream& out) {
  const Matrix<T>& a = matrix_of<T>(in.a);
  const Matrix<T>& x = matrix_of<T>(*in.candidate);
  const Weight<T> e = load_weight<T>(in.e, a.rows(), tol, "E");
  const Weight<T> f = load_weight<T>(in.f, a.cols(), tol, "F");
  std::optional<std::size_t> k;
  const AxiomReport report = bundle_report(cfg.kind, a, x, e, f, tol, k);
  if (cfg.json) {
    out << json{{"kind", std::string(to_string(cfg.kind))},
                {"index", k ? json(*k) : json(nullptr)},
                {"axioms", report_json(report)},
                {"all_passed", report.all_passed()}}
               .dump(2)
        << "\n";
  } else {
    print_report_table(report, out);
  }
  return report.all_passed() ? kOk : kVerificationFailed;
}

/// Maps library exceptions onto exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidWeight& e) {
    err << "error: invalid weight: " << e.what() << "\n";
    return kInvalidWeight;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {  // DimensionError, BackendMismatch, PreconditionError
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

struct GoldenRow {
  std::string name;
  bool passed;
  double error;
};

template <Scalar T>
Matrix<T> lift(const ExactMatrix& m) {
  if constexpr (is_exact_v<T>) {
    return m;
  } else {
    return to_float(m);
  }
}

template <Scalar T>
double golden_error(const Matrix<T>& got, const Matrix<T>& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return std::numeric_limits<double>::infinity();
  if constexpr (is_exact_v<T>) {
    return got == want ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    const double scale = want.frobenius_norm();
    return (got - want).frobenius_norm() / (scale > 0.0 ? scale : 1.0);
  }
}

template <Scalar T>
std::vector<GoldenRow> golden_rows(bool corrupt) {
  const Tolerance tol = Tolerance::for_backend<T>();
  const double limit = is_exact_v<T> ? 0.0 : kGoldenFloatTol;
  const auto& one = reference_example_one();
  const auto& two = reference_example_two();
  const Matrix<T> a1 = lift<T>(one.a);
  const Matrix<T> a2 = lift<T>(two.a);
  const Weight<T> e1 = Weight<T>::make(lift<T>(one.e), tol);
  const Weight<T> f1 = Weight<T>::make(lift<T>(one.f), tol);
  const Weight<T> e2 = Weight<T>::make(lift<T>(two.e), tol);

  std::vector<GoldenRow> rows;
  auto compare = [&](std::string name, const std::optional<Matrix<T>>& got, ExactMatrix want) {
    if (corrupt && rows.empty()) want(0, 0) = want(0, 0) + GaussianRational(1);
    const double err = got ? golden_error(*got, lift<T>(want)) : std::numeric_limits<double>::infinity();
    rows.push_back({std::move(name), err <= limit, err});
  };
  auto value = [](std::optional<InverseResult<T>> r) -> std::optional<Matrix<T>> {
    if (!r) return std::nullopt;
    return std::move(r->value);
  };

  compare("example 1: E-weighted core-EP inverse", value(core_ep(a1, e1, tol)), one.core_ep);
  compare("example 1: F-weighted dual core-EP inverse", value(dual_core_ep(a1, f1, tol)), one.dual_core_ep);
  compare("example 2: Drazin inverse", drazin(a2, tol), two.drazin);
  compare("example 2: E-weighted core-EP inverse", value(core_ep(a2, e2, tol)), two.core_ep);

  const Axiom membership[] = {AxiomTag::P1, AxiomTag::P3E};
  const AxiomReport rep = check_axioms(Matrix<T>(a2 * a2), lift<T>(two.x), membership, &e2, nullptr, tol);
  double worst = 0.0;
  for (const auto& o : rep.outcomes) worst = std::max(worst, o.residual);
  rows.push_back({"example 2: X in A^2{1,3^E}", worst <= limit, worst});

  const std::optional<Matrix<T>> twice = core_ep_of_core_ep(a2, e2, tol);
  compare("example 2: core-EP of core-EP", twice, two.core_ep_of_core_ep);
  if (twice && equal_within(*twice, a2, tol)) rows.back().passed = false;  // must differ from A
  return rows;
}

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadedInputs in = load_inputs(cfg, false);
    const Backend backend = choose_backend(cfg, in.all(), err);
    const Tolerance tol = make_tolerance(backend, cfg, err);
    return backend == Backend::exact ? compute_on<GaussianRational>(cfg, in, backend, tol, out, err)
                                     : compute_on<Complex>(cfg, in, backend, tol, out, err);
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadedInputs in = load_inputs(cfg, true);
    const Backend backend = choose_backend(cfg, in.all(), err);
    const Tolerance tol = make_tolerance(backend, cfg, err);
    return backend == Backend::exact ? verify_on<GaussianRational>(cfg, in, tol, out)
                                     : verify_on<Complex>(cfg, in, tol, out);
  });
}

int cmd_index(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadedInputs in = load_inputs(cfg, false);
    const Backend backend = choose_backend(cfg, in.all(), err);
    const Tolerance tol = make_tolerance(backend, cfg, err);
    if (in.a.rows() != in.a.cols()) throw DimensionError("index needs a square matrix");
    out << (backend == Backend::exact ? index(in.a.exact, tol) : index(in.a.floating, tol)) << "\n";
    return kOk;
  });
}

int cmd_examples(Backend backend, bool corrupt_golden, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<GoldenRow> rows =
        backend == Backend::exact ? golden_rows<GaussianRational>(corrupt_golden) : golden_rows<Complex>(corrupt_golden);
    bool all = true;
    out << "backend: " << to_string(backend) << "\n";
    for (const auto& r : rows) {
      all = all && r.passed;
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(46) << r.name << " error " << r.error << "\n";
    }
    out << (all ? "all golden comparisons match\n" : "golden comparison failed\n");
    return all ? kOk : kVerificationFailed;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted core-EP inverses over exact Gaussian rationals or complex doubles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string kind_name;
  std::string backend_name;
  bool corrupt = false;

  const std::vector<std::string> kind_names = [] {
    std::vector<std::string> v;
    for (InverseKind k : kAllInverseKinds) v.emplace_back(to_string(k));
    return v;
  }();
  auto add_backend = [&](CLI::App* cmd) {
    cmd->add_option("--backend", backend_name, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  };
  auto add_tols = [&](CLI::App* cmd) {
    cmd->add_option("--tol", cfg.residual_tol, "float residual tolerance (overrides WCEP_TOL)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rank-tol", cfg.rank_tol, "float relative rank cutoff")->check(CLI::PositiveNumber);
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--kind", kind_name, "inverse kind")->required()->check(CLI::IsMember(kind_names));
    cmd->add_option("--matrix", cfg.matrix, "matrix file A")->required();
    cmd->add_option("--weight-e", cfg.weight_e, "weight E (default identity)");
    cmd->add_option("--weight-f", cfg.weight_f, "weight F (default identity)");
    add_backend(cmd);
    add_tols(cmd);
  };

  CLI::App* compute = app.add_subcommand("compute", "compute an inverse and its certificate");
  add_common(compute);
  compute->add_option("--out", cfg.out, "output matrix file; the certificate goes to OUT.cert.json");

  CLI::App* verify = app.add_subcommand("verify", "check a candidate against the axioms of a kind");
  add_common(verify);
  verify->add_option("--candidate", cfg.candidate, "candidate matrix file X")->required();
  verify->add_flag("--json", cfg.json, "print the report as JSON");

  CLI::App* idx = app.add_subcommand("index", "print ind(A)");
  idx->add_option("--matrix", cfg.matrix, "matrix file A")->required();
  add_backend(idx);
  add_tols(idx);

  CLI::App* examples = app.add_subcommand("paper-examples", "recompute the built-in worked examples");
  add_backend(examples);
  examples->add_flag("--corrupt-golden", corrupt, "perturb one golden value (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (!backend_name.empty()) cfg.backend = backend_name == "exact" ? Backend::exact : Backend::floating;
  if (!kind_name.empty()) cfg.kind = *parse_inverse_kind(kind_name);

  if (compute->parsed()) return cmd_compute(cfg, out, err);
  if (verify->parsed()) return cmd_verify(cfg, out, err);
  if (idx->parsed()) return cmd_index(cfg, out, err);
  return cmd_examples(cfg.backend.value_or(Backend::exact), corrupt, out, err);
}

}  // namespace wcep::cli
