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

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "generator.hpp"
#include "oracle.hpp"
#include "wcep/classical.hpp"
#include "wcep/core_ep.hpp"
#include "wcep/errors.hpp"
#include "wcep/star.hpp"
#include "wcep/verify.hpp"

// Randomized exact-backend suites shared by the property tests and the
// acceptance binary. Every expected value comes from the instance structure
// or from naive products, never from the function under test.

namespace wcep::testing::suites {

inline constexpr std::size_t kMinInstances = 200;

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t existing = 0;  // instances where the inverse under test exists
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> first_failures;

  bool ok() const { return failed == 0 && instances >= kMinInstances; }

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    ++failed;
    if (first_failures.size() < 8) first_failures.push_back(what);
  }

  std::string summary() const {
    std::ostringstream os;
    os << name << ": " << instances << " instances, " << existing << " existing, " << checks << " checks, " << failed
       << " failed";
    for (const auto& f : first_failures) os << "\n    " << f;
    return os.str();
  }
};

using EW = Weight<GaussianRational>;

struct Sample {
  Instance in;
  ExactMatrix e;
  ExactMatrix f;
  bool e_pd = false;
  bool f_pd = false;
  std::string tag;
};

/// Invertible Hermitian G whose leading r x r block is singular for every r < n.
inline ExactMatrix degenerate_block(Generator& gen, std::size_t n) {
  ExactMatrix g = ExactMatrix::zeros(n, n);
  g(0, n - 1) = GaussianRational(1);
  g(n - 1, 0) = GaussianRational(1);
  for (std::size_t i = 1; i + 1 < n; ++i) g(i, i) = GaussianRational(gen.coin() ? 1 : -1);
  g(n - 1, n - 1) = GaussianRational(gen.uniform(-1, 1));
  return g;
}

/// Weight under which the core-EP inverse (dual: the dual inverse) cannot exist once 0 < r < n:
/// E = S^{-*} G S^{-1} makes B^*EB the singular leading block of G; F = S G S^* does the same for R F^{-1} R^*.
inline ExactMatrix degenerate_weight(Generator& gen, const Instance& in, bool dual) {
  const std::size_t n = in.a.rows();
  const ExactMatrix g = degenerate_block(gen, n);
  if (dual) return naive_mul(naive_mul(in.s, *naive_inverse(g)), naive_adjoint(in.s));
  return naive_mul(naive_mul(naive_adjoint(in.s_inv), g), in.s_inv);
}

/// n in 2..5, index in 0..min(3, n); weights drawn positive definite 70% of the time, otherwise Hermitian.
inline Sample draw(Generator& gen, std::size_t trial, std::optional<std::size_t> index = std::nullopt) {
  const std::size_t n = static_cast<std::size_t>(gen.uniform(2, 5));
  const bool gaussian = gen.coin(0.25);
  Sample s;
  s.in = index ? gen.instance(n, *index, gaussian) : gen.instance(n, gaussian);
  s.e = gen.coin(0.7) ? gen.positive_definite(n, gen.coin(0.25)) : gen.hermitian(n, gen.coin(0.25));
  s.f = gen.coin(0.7) ? gen.positive_definite(n, gen.coin(0.25)) : gen.hermitian(n, gen.coin(0.25));
  if (gen.coin(0.15)) s.e = degenerate_weight(gen, s.in, false);
  if (gen.coin(0.15)) s.f = degenerate_weight(gen, s.in, true);
  // The Hermitian sampler can land on a definite matrix, so classify independently.
  s.e_pd = naive_positive_definite(s.e);
  s.f_pd = naive_positive_definite(s.f);
  std::ostringstream os;
  os << "trial " << trial << " (n=" << n << ", k=" << s.in.index << ", r=" << s.in.core_rank
     << (s.e_pd ? ", E pd" : ", E indefinite") << (s.f_pd ? ", F pd" : ", F indefinite") << ")";
  s.tag = os.str();
  return s;
}

template <class Fn>
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count, Fn&& body) {
  SuiteResult res;
  res.name = name;
  Generator gen(seed);
  for (std::size_t t = 0; t < count; ++t) {
    ++res.instances;
    try {
      body(gen, t, res);
    } catch (const std::exception& ex) {
      res.expect(false, "trial " + std::to_string(t) + ": unexpected exception: " + ex.what());
    }
  }
  return res;
}

inline ExactMatrix pw(const ExactMatrix& a, std::size_t p) { return naive_power(a, p); }
inline ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) { return naive_mul(a, b); }
inline ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
  return naive_mul(naive_mul(a, b), c);
}
inline ExactMatrix adj(const ExactMatrix& a) { return naive_adjoint(a); }

inline std::optional<ExactMatrix> value(const std::optional<InverseResult<GaussianRational>>& r) {
  if (!r) return std::nullopt;
  return r->value;
}

inline ExactMatrix bumped(ExactMatrix m) {
  m(0, 0) += GaussianRational(1);
  return m;
}

/// XA^{k+1} = A^k, AX^2 = X, (EAX)^* = EAX, by naive products.
inline bool core_ep_equations(const ExactMatrix& a, const ExactMatrix& e, const ExactMatrix& x, std::size_t k) {
  const ExactMatrix eax = mul(e, a, x);
  return mul(x, pw(a, k + 1)) == pw(a, k) && mul(a, mul(x, x)) == x && adj(eax) == eax;
}

/// A^{k+1}X = A^k, X^2A = X, (FXA)^* = FXA.
inline bool dual_core_ep_equations(const ExactMatrix& a, const ExactMatrix& f, const ExactMatrix& x, std::size_t k) {
  const ExactMatrix fxa = mul(f, x, a);
  return mul(pw(a, k + 1), x) == pw(a, k) && mul(mul(x, x), a) == x && adj(fxa) == fxa;
}

// (a) Axiom bundle, agreement with the structural oracle, and the consequences of X in A{6^k,7}.
inline SuiteResult core_ep_axioms(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("core-EP axiom bundle", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const ExactMatrix& a = s.in.a;
    const std::size_t k = s.in.index;
    const EW e = EW::make(s.e);
    const EW f = EW::make(s.f);

    const auto x = core_ep(a, e);
    const auto ox = oracle_core_ep(s.in, s.e);
    res.expect(x.has_value() == ox.has_value(), s.tag + ": existence differs from oracle");
    res.expect(x.has_value() == one_three_E(pw(a, k), e).has_value(), s.tag + ": existence differs from A^k{1,3^E}");
    if (s.e_pd) res.expect(x.has_value(), s.tag + ": missing for positive definite E");
    if (x && ox) {
      ++res.existing;
      res.expect(x->value == *ox, s.tag + ": value differs from oracle");
      res.expect(x->index_used == k, s.tag + ": wrong index");
      res.expect(core_ep_equations(a, s.e, x->value, k), s.tag + ": defining equations fail");
      const Axiom bundle[] = {Axiom(AxiomTag::P6k, k), AxiomTag::P7, AxiomTag::P3E};
      res.expect(check_axioms(a, x->value, bundle, &e, nullptr).all_passed(), s.tag + ": bundle fails");
      res.expect(x->report.all_passed(), s.tag + ": certificate fails");
      // X in A{7} gives AX = A^m X^m; X in A{6^k,7} gives XAX = X and R(X) = R(A^k).
      for (std::size_t m = 1; m <= 3; ++m) {
        res.expect(mul(a, x->value) == mul(pw(a, m), pw(x->value, m)), s.tag + ": AX != A^m X^m");
      }
      res.expect(mul(x->value, a, x->value) == x->value, s.tag + ": XAX != X");
      res.expect(range_equal(x->value, pw(a, k)), s.tag + ": R(X) != R(A^k)");
    }

    const auto y = dual_core_ep(a, f);
    const auto oy = oracle_dual_core_ep(s.in, s.f);
    res.expect(y.has_value() == oy.has_value(), s.tag + ": dual existence differs from oracle");
    if (y && oy) {
      res.expect(y->value == *oy, s.tag + ": dual value differs from oracle");
      res.expect(dual_core_ep_equations(a, s.f, y->value, k), s.tag + ": dual equations fail");
      res.expect(y->report.all_passed(), s.tag + ": dual certificate fails");
    }
  });
}

// (b) Every construction path and every power m in {k, k+1, k+2} gives the same matrix.
inline SuiteResult path_agreement(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("construction-path agreement", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const ExactMatrix& a = s.in.a;
    const std::size_t k = s.in.index;
    const EW e = EW::make(s.e);
    const EW f = EW::make(s.f);
    const auto ox = oracle_core_ep(s.in, s.e);
    const auto oy = oracle_dual_core_ep(s.in, s.f);
    if (ox) ++res.existing;
    for (std::size_t m = k; m <= k + 2; ++m) {
      const std::string at = s.tag + " m=" + std::to_string(m);
      for (ConstructionPath p : {ConstructionPath::thm_onethree_power, ConstructionPath::cor_weighted_mp}) {
        const CoreEpOptions opts{m, p};
        const auto x = value(core_ep(a, e, Tolerance::exact(), opts));
        res.expect(x == ox, at + " " + std::string(to_string(p)) + ": differs from oracle");
        const auto y = value(dual_core_ep(a, f, Tolerance::exact(), opts));
        res.expect(y == oy, at + " " + std::string(to_string(p)) + ": dual differs from oracle");
      }
      const CoreEpOptions prop{m, ConstructionPath::prop_mp_of_power};
      if (s.e_pd) {
        res.expect(value(core_ep(a, e, Tolerance::exact(), prop)) == ox, at + " prop_mp_of_power: differs");
      } else {
        bool threw = false;
        try {
          (void)core_ep(a, e, Tolerance::exact(), prop);
        } catch (const PreconditionError&) {
          threw = true;
        }
        res.expect(threw, at + " prop_mp_of_power: indefinite E accepted");
      }
      if (s.f_pd) {
        res.expect(value(dual_core_ep(a, f, Tolerance::exact(), prop)) == oy, at + " dual prop_mp_of_power: differs");
      }
    }
  });
}

// (c) A^D = X^{m+1} A^m and, dually, A^m Y^{m+1}.
inline SuiteResult drazin_recovery(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("Drazin recovery", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const ExactMatrix& a = s.in.a;
    const std::size_t k = s.in.index;
    res.expect(drazin(a) == s.in.drazin, s.tag + ": drazin differs from oracle");
    const auto x = value(core_ep(a, EW::make(s.e)));
    const auto y = value(dual_core_ep(a, EW::make(s.f)));
    if (x) ++res.existing;
    for (std::size_t m = k; m <= k + 2; ++m) {
      const std::string at = s.tag + " m=" + std::to_string(m);
      if (x) {
        res.expect(mul(pw(*x, m + 1), pw(a, m)) == s.in.drazin, at + ": X^{m+1}A^m != A^D");
        res.expect(drazin_from_core_ep(a, *x, m) == s.in.drazin, at + ": drazin_from_core_ep");
      }
      if (y) {
        res.expect(mul(pw(a, m), pw(*y, m + 1)) == s.in.drazin, at + ": A^mY^{m+1} != A^D");
        res.expect(drazin_from_dual_core_ep(a, *y, m) == s.in.drazin, at + ": drazin_from_dual_core_ep");
      }
    }
  });
}

// (d) (A^l)^{core-EP} = (A^{core-EP})^l for l = 1, 2, 3, plus the power-of-k bridge.
inline SuiteResult power_law(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("power law", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const ExactMatrix& a = s.in.a;
    const std::size_t k = s.in.index;
    const EW e = EW::make(s.e);
    const EW f = EW::make(s.f);
    const auto x = oracle_core_ep(s.in, s.e);
    const auto y = oracle_dual_core_ep(s.in, s.f);
    if (x) ++res.existing;
    for (std::size_t l = 1; l <= 3; ++l) {
      const std::string at = s.tag + " l=" + std::to_string(l);
      const auto xl = core_ep_power(a, e, l);
      res.expect(xl.has_value() == x.has_value(), at + ": existence");
      if (xl && x) {
        res.expect(*xl == pw(*x, l), at + ": (A^l)^core-EP != X^l");
        res.expect(value(core_ep(pw(a, l), e)) == pw(*x, l), at + ": direct core_ep(A^l)");
      }
      const auto yl = dual_core_ep_power(a, f, l);
      res.expect(yl.has_value() == y.has_value(), at + ": dual existence");
      if (yl && y) res.expect(*yl == pw(*y, l), at + ": dual power law");
    }
    // Power-of-k bridge: (A^k)^{core,E} exists iff X does; it is X^k and A^{k-1} times it is X.
    if (k >= 1) {
      const auto wk = weighted_core(pw(a, k), e);
      res.expect(wk.has_value() == x.has_value(), s.tag + ": bridge existence");
      if (wk && x) {
        res.expect(*wk == pw(*x, k), s.tag + ": (A^k)^core != X^k");
        res.expect(mul(pw(a, k - 1), *wk) == *x, s.tag + ": A^{k-1}(A^k)^core != X");
      }
      const auto vk = weighted_dual_core(pw(a, k), f);
      res.expect(vk.has_value() == y.has_value(), s.tag + ": dual bridge existence");
      if (vk && y) res.expect(mul(*vk, pw(a, k - 1)) == *y, s.tag + ": dual bridge");
    }
  });
}

// (e) (A^{core-EP})^{core-EP} = A^2 A^{core-EP}; applying core-EP three times returns X.
inline SuiteResult composition(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("core-EP of core-EP", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const ExactMatrix& a = s.in.a;
    const EW e = EW::make(s.e);
    const EW f = EW::make(s.f);
    const auto x = oracle_core_ep(s.in, s.e);
    const auto z = core_ep_of_core_ep(a, e);
    res.expect(z.has_value() == x.has_value(), s.tag + ": existence");
    if (x && z) {
      ++res.existing;
      res.expect(*z == mul(pw(a, 2), *x), s.tag + ": != A^2 X");
      const auto c2 = value(core_ep(*x, e));
      res.expect(c2 == mul(pw(a, 2), *x), s.tag + ": core_ep(X) != A^2 X");
      if (c2) res.expect(value(core_ep(*c2, e)) == *x, s.tag + ": triple application != X");
    }
    const auto y = oracle_dual_core_ep(s.in, s.f);
    const auto w = dual_core_ep_of_dual_core_ep(a, f);
    res.expect(w.has_value() == y.has_value(), s.tag + ": dual existence");
    if (y && w) {
      res.expect(*w == mul(*y, pw(a, 2)), s.tag + ": dual != Y A^2");
      const auto d2 = value(dual_core_ep(*y, f));
      if (d2) res.expect(value(dual_core_ep(*d2, f)) == *y, s.tag + ": dual triple application != Y");
      else res.expect(false, s.tag + ": dual of Y missing");
    }
  });
}

// (f) X = A^{core-EP,E} iff XAX = X, R(X) = R(A^k) and R(X^*) = R(EA^k), on positive and negative candidates.
inline SuiteResult range_characterization(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("range characterization", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const ExactMatrix& a = s.in.a;
    const std::size_t n = a.rows();
    const ExactMatrix ak = pw(a, s.in.index);
    const ExactMatrix eak = mul(s.e, ak);
    const auto x = value(core_ep(a, EW::make(s.e)));
    if (x) ++res.existing;
    std::vector<ExactMatrix> candidates{s.in.drazin, ExactMatrix::zeros(n, n), adj(a), gen.dense(n, n, 2, false),
                                        mul(s.in.drazin, a, s.in.drazin)};
    if (x) {
      candidates.push_back(*x);
      candidates.push_back(bumped(*x));
      candidates.push_back(*x + *x);
      candidates.push_back(mul(a, *x, *x));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const ExactMatrix& c = candidates[i];
      const bool holds = mul(c, a, c) == c && range_equal(c, ak) && range_equal(adj(c), eak);
      const bool is_x = x && c == *x;
      res.expect(holds == is_x, s.tag + " candidate " + std::to_string(i) + ": characterization " +
                                    (holds ? "holds" : "fails") + " but membership is " + (is_x ? "true" : "false"));
    }
  });
}

// (g) Index-1 identities for the weighted core inverse.
inline SuiteResult index_one(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("index-1 weighted core", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t, static_cast<std::size_t>(gen.uniform(0, 1)));
    const ExactMatrix& a = s.in.a;
    const EW e = EW::make(s.e);
    const EW f = EW::make(s.f);
    const ExactMatrix& g = s.in.drazin;  // A^# at index <= 1
    const auto ow = oracle_core_ep(s.in, s.e);
    const auto w = weighted_core(a, e);
    res.expect(w == ow, s.tag + ": weighted core differs from oracle");
    res.expect(group_inverse(a) == std::optional(g), s.tag + ": group inverse");
    if (w && ow) {
      ++res.existing;
      res.expect(value(core_ep(a, e)) == *w, s.tag + ": core_ep != weighted core");
      res.expect(*w == mul(g, a, *one_three_E(a, e)), s.tag + ": != A^# A A^(1,3^E)");
      if (auto mp = weighted_mp(a, e, EW::identity(a.rows()))) {
        res.expect(*w == mul(g, a, *mp), s.tag + ": != A^# A A^+_{E,I}");
      }
      const ExactMatrix a2w = mul(pw(a, 2), *w);
      res.expect(group_inverse(*w) == std::optional(a2w), s.tag + ": (A^core)^# != A^2 A^core");
      res.expect(weighted_core(*w, e) == std::optional(a2w), s.tag + ": (A^core)^core != A^2 A^core");
      res.expect(weighted_core(g, e) == std::optional(a2w), s.tag + ": (A^#)^core != A^2 A^core");
      res.expect(g == mul(pw(*w, 2), a), s.tag + ": A^# != (A^core)^2 A");
      for (std::size_t j = 1; j <= 3; ++j) {
        res.expect(weighted_core(pw(a, j), e) == std::optional(pw(*w, j)), s.tag + ": (A^j)^core != (A^core)^j");
      }
      const auto w2 = weighted_core(*w, e);
      if (w2) res.expect(weighted_core(*w2, e) == w, s.tag + ": triple application");
    }
    const auto ov = oracle_dual_core_ep(s.in, s.f);
    const auto v = weighted_dual_core(a, f);
    res.expect(v == ov, s.tag + ": weighted dual core differs from oracle");
    if (v && ov) {
      res.expect(value(dual_core_ep(a, f)) == *v, s.tag + ": dual_core_ep != weighted dual core");
      res.expect(g == mul(a, pw(*v, 2)), s.tag + ": A^# != A (A^{F,core})^2");
    }
    if (s.in.index > 1) res.expect(false, s.tag + ": generator produced index > 1");
  });
}

// (h) AS = AT for independently sampled S, T in A^m{1,3^E}; X^m is such a member for m >= k.
inline SuiteResult product_invariance(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("{1,3^E} product invariance", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const std::size_t n = s.in.a.rows();
    const std::size_t k = s.in.index;
    const EW e = EW::make(s.e);
    const std::size_t m = k + static_cast<std::size_t>(gen.uniform(0, 1));
    const ExactMatrix am = pw(s.in.a, m);
    const Axiom bundle[] = {AxiomTag::P1, AxiomTag::P3E};
    // Members T = Z^*E with Z = A B^- + W(I - B B^-), B = A^*EA, for independent random W.
    const ExactMatrix b = mul(adj(am), s.e, am);
    const ExactMatrix bm = inner_inverse(b);
    auto sample = [&] {
      const ExactMatrix w = gen.dense(n, n, 2, gen.coin(0.25));
      const ExactMatrix z = mul(am, bm) + mul(w, ExactMatrix::identity(n) - mul(b, bm));
      return mul(adj(z), s.e);
    };
    const ExactMatrix s1 = sample();
    const ExactMatrix s2 = sample();
    const auto lib = one_three_E(am, e);
    const bool m1 = check_axioms(am, s1, bundle, &e, nullptr).all_passed();
    const bool m2 = check_axioms(am, s2, bundle, &e, nullptr).all_passed();
    res.expect(lib.has_value() == m1 && m1 == m2, s.tag + ": sampled membership disagrees with existence");
    if (!lib) return;
    ++res.existing;
    res.expect(mul(am, s1) == mul(am, s2), s.tag + ": AS != AT");
    res.expect(mul(am, s1) == mul(am, *lib), s.tag + ": AS != A one_three_E(A)");
    const auto x = value(core_ep(s.in.a, e));
    res.expect(x.has_value(), s.tag + ": core-EP missing although A^m{1,3^E} is nonempty");
    if (x) {
      const ExactMatrix xm = pw(*x, m);
      res.expect(check_axioms(am, xm, bundle, &e, nullptr).all_passed(), s.tag + ": X^m not in A^m{1,3^E}");
      res.expect(mul(am, xm) == mul(am, s1), s.tag + ": A^m X^m != A^m S");
    }
  });
}

// (i) Additive laws on block-diagonal A = diag(A1, 0), B = diag(0, B1).
inline SuiteResult additive_laws(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("additive laws", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(2, 5));
    const std::size_t n1 = static_cast<std::size_t>(gen.uniform(1, static_cast<int>(n) - 1));
    const std::size_t n2 = n - n1;
    const Instance p = gen.instance(n1, gen.coin(0.25));
    const Instance q = gen.instance(n2, gen.coin(0.25));
    const bool pd = gen.coin(0.7);
    auto weight = [&](std::size_t d) { return pd ? gen.positive_definite(d, false) : gen.hermitian(d, false); };
    const ExactMatrix e1 = weight(n1), e2 = weight(n2), f1 = weight(n1), f2 = weight(n2);
    const ExactMatrix a = block_diag(p.a, ExactMatrix::zeros(n2, n2));
    const ExactMatrix b = block_diag(ExactMatrix::zeros(n1, n1), q.a);
    const std::string tag = "trial " + std::to_string(t) + " (n1=" + std::to_string(n1) +
                            ", n2=" + std::to_string(n2) + ", k1=" + std::to_string(p.index) +
                            ", k2=" + std::to_string(q.index) + ")";
    const EW e = EW::make(block_diag(e1, e2));
    const EW f = EW::make(block_diag(f1, f2));

    const auto x1 = oracle_core_ep(p, e1);
    const auto x2 = oracle_core_ep(q, e2);
    const auto law = additive_core_ep(a, b, e);
    if (x1 && x2) {
      ++res.existing;
      const auto* ok = std::get_if<AdditiveLaw<GaussianRational>>(&law);
      res.expect(ok != nullptr, tag + ": additive core-EP law not applied");
      if (ok) {
        res.expect(ok->sum == block_diag(*x1, *x2), tag + ": sum");
        res.expect(ok->difference == block_diag(*x1, -*x2), tag + ": difference");
      }
    } else {
      // A has no core-EP inverse unless its first block does; B likewise.
      res.expect(std::holds_alternative<NoExist>(law), tag + ": expected NoExist");
    }

    const auto y1 = oracle_dual_core_ep(p, f1);
    const auto y2 = oracle_dual_core_ep(q, f2);
    const auto dual = additive_dual_core_ep(a, b, f);
    if (y1 && y2) {
      const auto* ok = std::get_if<AdditiveLaw<GaussianRational>>(&dual);
      res.expect(ok != nullptr, tag + ": additive dual law not applied");
      if (ok) {
        res.expect(ok->sum == block_diag(*y1, *y2), tag + ": dual sum");
        res.expect(ok->difference == block_diag(*y1, -*y2), tag + ": dual difference");
      }
    } else {
      res.expect(std::holds_alternative<NoExist>(dual), tag + ": expected dual NoExist");
    }

    const auto dz = additive_drazin(a, b);
    const auto* dok = std::get_if<AdditiveLaw<GaussianRational>>(&dz);
    res.expect(dok != nullptr, tag + ": additive Drazin law not applied");
    if (dok) {
      res.expect(dok->sum == block_diag(p.drazin, q.drazin), tag + ": Drazin sum");
      res.expect(dok->difference == block_diag(p.drazin, -q.drazin), tag + ": Drazin difference");
    }

    // A coupled weight breaks A^*EB = O exactly when the naive product is nonzero.
    ExactMatrix coupled = block_diag(e1, e2);
    coupled(0, n - 1) += GaussianRational(1);
    coupled(n - 1, 0) += GaussianRational(1);
    if (naive_inverse(coupled)) {
      const bool orth = mul(adj(a), coupled, b).is_zero();
      const auto c = additive_core_ep(a, b, EW::make(coupled));
      if (const auto* h = std::get_if<HypothesisFailed>(&c)) {
        res.expect(!orth, tag + ": hypothesis reported failing but A^*EB = O");
        res.expect(h->failed == std::vector<std::string>{"A*EB = O"}, tag + ": wrong hypothesis list");
      } else {
        res.expect(orth, tag + ": A^*EB != O but no hypothesis failure");
      }
    }
  });
}

// Star E-weighted core-EP matrix and its dual: systems, equivalences, projectors, outer inverse.
inline SuiteResult star_suite(std::uint64_t seed, std::size_t count = kMinInstances) {
  return run_suite("star core-EP", seed, count, [](Generator& gen, std::size_t t, SuiteResult& res) {
    const Sample s = draw(gen, t);
    const ExactMatrix& a = s.in.a;
    const std::size_t n = a.rows();
    const EW e = EW::make(s.e);
    const EW f = EW::make(s.f);

    auto zero_residuals = [](const StarSystemReport& r) {
      for (const auto& [eq, v] : r.residuals) {
        if (v != 0.0) return false;
      }
      return !r.residuals.empty();
    };

    const auto c = oracle_core_ep(s.in, s.e);
    const auto x = star_core_ep(a, e);
    res.expect(x.has_value() == c.has_value(), s.tag + ": star existence");
    if (x && c) {
      ++res.existing;
      res.expect(*x == mul(adj(a), a, *c), s.tag + ": star != A^*A C");
      const StarSystemReport sys = verify_star_system(a, e, *x);
      res.expect(sys.unique_solution && zero_residuals(sys), s.tag + ": star system residuals");
      const std::vector<ExactMatrix> candidates{*x, ExactMatrix::zeros(n, n), adj(a), bumped(*x), *c, *x + *x,
                                                gen.dense(n, n, 2, false)};
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const bool member = candidates[i] == *x;
        const auto probes = star_equivalences(a, e, candidates[i]);
        res.expect(probes.has_value(), s.tag + ": probes missing");
        if (!probes) continue;
        for (std::size_t j = 0; j < probes->size(); ++j) {
          res.expect((*probes)[j] == member, s.tag + " candidate " + std::to_string(i) + ": probe " +
                                                 std::to_string(j + 1) + " disagrees with membership");
        }
        if (!member) res.expect(!verify_star_system(a, e, candidates[i]).unique_solution,
                                s.tag + " candidate " + std::to_string(i) + ": system accepts non-member");
      }
      const auto pr = star_projectors(a, e);
      res.expect(pr && pr->first.passed() && pr->second.passed(), s.tag + ": projector reports");
      res.expect(outer_inverse_identity(a, e) == std::optional(true), s.tag + ": outer inverse identity");
    }

    const auto d = oracle_dual_core_ep(s.in, s.f);
    const auto y = dual_core_ep_star(a, f);
    res.expect(y.has_value() == d.has_value(), s.tag + ": dual star existence");
    if (y && d) {
      res.expect(*y == mul(*d, a, adj(a)), s.tag + ": dual star != D A A^*");
      const StarSystemReport sys = verify_dual_star_system(a, f, *y);
      res.expect(sys.unique_solution && zero_residuals(sys), s.tag + ": dual system residuals");
      const std::vector<ExactMatrix> candidates{*y, ExactMatrix::zeros(n, n), adj(a), bumped(*y), *d, *y + *y,
                                                gen.dense(n, n, 2, false)};
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const bool member = candidates[i] == *y;
        const auto probes = dual_star_equivalences(a, f, candidates[i]);
        res.expect(probes.has_value(), s.tag + ": dual probes missing");
        if (!probes) continue;
        for (std::size_t j = 0; j < probes->size(); ++j) {
          res.expect((*probes)[j] == member, s.tag + " dual candidate " + std::to_string(i) + ": probe " +
                                                 std::to_string(j + 1) + " disagrees with membership");
        }
      }
      const auto pr = dual_star_projectors(a, f);
      res.expect(pr && pr->first.passed() && pr->second.passed(), s.tag + ": dual projector reports");
      res.expect(dual_outer_inverse_identity(a, f) == std::optional(true), s.tag + ": dual outer inverse identity");
    }
  });
}

}  // namespace wcep::testing::suites
