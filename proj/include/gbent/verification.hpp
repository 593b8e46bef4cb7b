// Copyright 2026 The gbent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scripted end-to-end checks of the preset instances. Each item lists the
// claims it verifies together with what was observed.

#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gbent/analysis.hpp"
#include "gbent/constructions.hpp"
#include "gbent/decomposition.hpp"
#include "gbent/presets.hpp"

namespace gbent {

struct Claim {
  std::string what;
  bool ok = false;
  std::string observed;
};

struct Verification {
  std::string item;
  std::vector<Claim> claims;

  bool passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.ok; });
  }
  void add(std::string what, bool ok, std::string observed = "") {
    claims.push_back({std::move(what), ok, std::move(observed)});
  }
  Json to_json() const {
    Json j;
    j["item"] = item;
    j["passed"] = passed();
    Json cs = Json::array();
    for (const auto& c : claims) cs.push_back({{"claim", c.what}, {"ok", c.ok}, {"observed", c.observed}});
    j["claims"] = cs;
    return j;
  }
};

inline const std::vector<std::string>& verification_items() {
  static const std::vector<std::string> items = {"1", "2", "3", "4", "5", "6", "g3", "thm4"};
  return items;
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void verify_twist_dual_not_bent(Verification& v, const TransformOptions& opt) {
  const auto P = presets::twist_dual_not_bent();
  const auto F = build_quadratic_twist(P);
  const auto c = analyze(F, opt);
  v.add("F is generalized bent", c.is_gbent);
  if (!c.is_gbent) return;
  v.add("F is non-weakly regular", c.regularity->kind == RegularityKind::NonWeaklyRegular, c.regularity->to_string());
  const auto fs = dual(c);
  v.add("closed-form dual equals the extracted dual", fs == quadratic_twist_dual(P));
  const auto cs = analyze(fs, opt);
  v.add("dual fails the generalized bent test", !cs.is_gbent,
        std::to_string(cs.failures.size()) + " of " + std::to_string(fs.size()) + " points fail");
  v.add("sum condition fails, matching the dual verdict", !quadratic_twist_condition(P).holds);
}

inline void verify_twist_dual_bent(Verification& v, const TransformOptions& opt) {
  const auto P = presets::twist_dual_bent();
  const auto F = build_quadratic_twist(P);
  const auto c = analyze(F, opt);
  v.add("F is generalized bent", c.is_gbent);
  if (!c.is_gbent) return;
  v.add("F is non-weakly regular", c.regularity->kind == RegularityKind::NonWeaklyRegular, c.regularity->to_string());
  const auto fs = dual(c);
  v.add("closed-form dual equals the extracted dual", fs == quadratic_twist_dual(P));
  v.add("dual is generalized bent", analyze(fs, opt).is_gbent);
  const auto e = eta_pattern(P);
  const std::vector<std::vector<int>> expect = {{1, 1, 1}, {-1, -1, -1}, {-1, -1, -1}};
  std::string seen;
  for (const auto& row : e.signs) {
    for (int s : row) seen += s > 0 ? '+' : '-';
    seen += ' ';
  }
  v.add("eta(1 + j beta) = 1 and eta(1 + alpha + j beta) = eta(1 + 2 alpha + j beta) = -1", e.signs == expect, seen);
  const auto dd = check_double_dual(F, opt);
  v.add("f**(x) = f(-x) at every point", dd.holds(), dd.detail);
  v.add("sum condition holds, matching the dual verdict", quadratic_twist_condition(P).holds);
}

inline void verify_selfdual_quartic(Verification& v, const TransformOptions& opt) {
  const auto S = build_self_dual(3, presets::selfdual_quartic_p5(), opt);
  const auto sd = is_self_dual(S.F, opt);
  v.add("F is self-dual generalized bent", sd.self_dual, sd.reason);
  v.add("closed-form dual equals F", S.closed_form_dual == S.F);
  bool formula = true;
  for (Index x = 0; x < 5; ++x)
    for (Index y1 = 0; y1 < 5; ++y1)
      for (Index y2 = 0; y2 < 5; ++y2) {
        const auto s = ipow((2 * y1 + y2) % 5, 4) % 5;
        formula = formula && S.F[x * 25 + y1 * 5 + y2] == ((s == 1 ? 20 : 5) * x * x + 5 * (y1 * y1 + y2 * y2) + 2 * s * s) % 25;
      }
  v.add("table equals f_{(2y1+y2)^4}(x) + 5(y1^2+y2^2) + 2((2y1+y2)^4 mod 5)^2", formula);
}

inline void verify_selfdual_square(Verification& v, const TransformOptions& opt, std::uint64_t seed) {
  const auto S = build_self_dual(2, presets::selfdual_square_p7(), opt);
  const auto w = walsh_full_fast(S.F, opt);
  const auto c = certify(w, opt);
  const auto sd = is_self_dual(S.F, c);
  v.add("F is self-dual bent", sd.self_dual, sd.reason);
  v.add("closed-form dual equals F", S.closed_form_dual == S.F);
  const auto nq = find_non_quadratic_witness(S.F);
  v.add("F is not quadratic", nq.has_value(),
        nq ? "second derivative along (" + std::to_string(nq->u) + ", " + std::to_string(nq->v) + ") differs at " +
                 std::to_string(nq->x1) + " and " + std::to_string(nq->x2)
           : "");
  std::mt19937_64 rng(seed);
  std::vector<Index> pts(100);
  for (auto& a : pts) a = rng() % S.F.size();
  const auto naive = walsh_naive(S.F, pts);
  bool agree = true;
  for (std::size_t i = 0; i < pts.size(); ++i) agree = agree && naive[i] == w[pts[i]];
  v.add("fast transform agrees with the direct sum at 100 random points", agree);
}

inline void verify_twist_swapped(Verification& v, const TransformOptions& opt) {
  const auto f = build_quadratic_twist(presets::twist_swapped());
  const auto c = analyze(f, opt);
  v.add("f is generalized bent", c.is_gbent);
  if (!c.is_gbent) return;
  v.add("f* is not generalized bent", !analyze(dual(c), opt).is_gbent);
  const auto f0 = component_function(f, std::vector<std::uint64_t>{0, 0, 0});
  v.add("f_0* is bent", analyze(dual(f0, opt), opt).is_gbent);
  const auto comps = check_component_bentness(f, 27, opt);
  v.add("every component g_{f,F} is bent (27 selectors)", comps.rhs && comps.selectors_checked == 27);
  const auto duals = check_component_duals(f, 27, opt);
  std::string first;
  if (!duals.dual_bentness.witnesses.empty())
    for (auto s : duals.dual_bentness.witnesses[0].selector) first += std::to_string(s);
  v.add("some selector gives a non-bent dual component", !duals.dual_bentness.witnesses.empty(),
        std::to_string(duals.dual_bentness.witnesses.size()) + " witnesses, first F = " + first);
  v.add("dual components follow f_0* + F(lambda)", duals.dual_formula_mismatches == 0);
}

inline void verify_quadratic_plus_linear(Verification& v, const TransformOptions& opt) {
  const auto f = presets::quadratic_plus_linear();
  const auto c = analyze(f, opt);
  v.add("f is generalized bent", c.is_gbent);
  if (!c.is_gbent) return;
  v.add("f* = 5(x1^2 + x2^2) + (x1 + 3x2) at all 25 points", dual(c) == presets::quadratic_plus_linear_dual());
  v.add("f is not self-dual", !is_self_dual(f, c).self_dual);
  v.add("f_0 is self-dual bent", is_self_dual(component_function(f, std::vector<std::uint64_t>(5, 0)), opt).self_dual);
  const auto lam = extract_lambda(f, opt);
  bool ok = true;
  for (Index x = 0; x < 25; ++x) ok = ok && lam.lambda[x] == (x / 5 + 3 * (x % 5)) % 5;
  v.add("lambda(x1, x2) = x1 + 3x2", ok);
}

inline void verify_cubic(Verification& v, const TransformOptions& opt) {
  const auto f = presets::cubic_field_nonweakly_regular();
  const auto c = analyze(f, opt);
  v.add("Tr(x^22 + x^8) is bent", c.is_gbent);
  if (!c.is_gbent) return;
  v.add("it is non-weakly regular", c.regularity->kind == RegularityKind::NonWeaklyRegular, c.regularity->to_string());
  const auto sd = is_self_dual(f, c);
  v.add("it is not self-dual", !sd.self_dual, sd.reason);
}

inline void verify_no_selfdual(Verification& v) {
  for (unsigned k : {1u, 2u}) {
    const auto r = search_self_dual(DomainSpec::dot(3, 1), k, 1000);
    v.add("no self-dual generalized bent function F_3 -> Z_" + std::to_string(ipow(3, k)),
          r.witnesses.empty() && r.examined == ipow(3, k * 3),
          std::to_string(r.examined) + " functions, " + std::to_string(r.bent) + " bent, " +
              std::to_string(r.witnesses.size()) + " self-dual");
  }
}

}  // namespace detail

inline Verification verify_item(std::string_view item, const TransformOptions& opt = {}, std::uint64_t seed = 1) {
  Verification v{std::string(item), {}};
  if (item == "1") detail::verify_twist_dual_not_bent(v, opt);
  else if (item == "2") detail::verify_twist_dual_bent(v, opt);
  else if (item == "3") detail::verify_selfdual_quartic(v, opt);
  else if (item == "4") detail::verify_selfdual_square(v, opt, seed);
  else if (item == "5") detail::verify_twist_swapped(v, opt);
  else if (item == "6") detail::verify_quadratic_plus_linear(v, opt);
  else if (item == "g3") detail::verify_cubic(v, opt);
  else if (item == "thm4") detail::verify_no_selfdual(v);
  else throw UsageError("unknown item '" + std::string(item) + "' (expected 1-6, g3 or thm4)");
  return v;
}

}  // namespace gbent
