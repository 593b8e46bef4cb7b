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

// Component functions of a Z_{p^k}-valued function: f = f_0 p^{k-1} + tail,
// g_{f,F} = f_0 + F(tail) for a selector table F over Z_{p^{k-1}} (read as
// F_p^{k-1} with f_1 the leading digit). f is generalized bent exactly when
// every component is bent, and the dual splits as f* = f_0* p^{k-1} + lambda.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbent/analysis.hpp"
#include "gbent/function.hpp"
#include "gbent/util.hpp"

namespace gbent {

inline GFunction component_function(const GFunction& f, std::span<const std::uint64_t> selector) {
  if (f.k() < 2) throw UsageError("component functions need k >= 2");
  const auto p = f.p();
  if (selector.size() != ipow(p, f.k() - 1))
    throw UsageError("selector table must have p^(k-1) = " + std::to_string(ipow(p, f.k() - 1)) + " entries");
  const auto& dec = f.decomposition();
  std::vector<std::uint64_t> g(f.size());
  for (Index x = 0; x < f.size(); ++x) {
    if (selector[dec.tail[x]] >= p) throw UsageError("selector values must lie in [0, p)");
    g[x] = (dec.digits[0][x] + selector[dec.tail[x]]) % p;
  }
  return GFunction(f.spec(), 1, std::move(g));
}

// Selector number s in lexicographic order, entry 0 most significant.
inline std::vector<std::uint64_t> selector_table(std::uint64_t p, std::uint64_t entries, std::uint64_t s) {
  std::vector<std::uint64_t> t(entries);
  for (std::size_t i = entries; i-- > 0;) {
    t[i] = s % p;
    s /= p;
  }
  return t;
}

inline std::uint64_t selector_count(const GFunction& f) {
  return table_count(f.p(), ipow(f.p(), f.k() - 1));
}

struct DualDecomposition {
  std::vector<std::uint64_t> lambda;                     // values in Z_{p^{k-1}}
  std::vector<std::vector<std::uint64_t>> lambda_digits;  // lambda_1 ... lambda_{k-1}
  std::vector<std::uint64_t> f0_dual;

  Json to_json() const {
    Json j;
    j["lambda"] = lambda;
    j["lambda_digits"] = lambda_digits;
    j["f0_dual"] = f0_dual;
    return j;
  }
};

// For every a, sums zeta_p^{f_0(x) - <a,x>} separately over each level set
// {x : tail(x) = v}. Exactly one level carries a nonzero sum for bent f; that
// level is lambda(a) and its sum is W_{f_0}(a). The result is cross-checked
// against the dual read off the spectrum of f.
inline DualDecomposition extract_lambda(const GFunction& f, const TransformOptions& opt = {}) {
  if (f.k() < 2) throw UsageError("lambda is defined for k >= 2");
  const auto cert = analyze(f, opt);
  if (!cert.is_gbent) throw UsageError("extract_lambda needs a generalized bent function");
  const auto& d = f.spec();
  const auto p = f.p();
  const auto n = f.dimension();
  const auto levels = ipow(p, f.k() - 1);
  const auto& dec = f.decomposition();
  std::vector<std::uint8_t> digits(f.size() * n);
  for (Index x = 0; x < f.size(); ++x)
    for (unsigned t = 0; t < n; ++t) digits[x * n + t] = static_cast<std::uint8_t>(d.digit(x, t));

  DualDecomposition out;
  out.lambda.assign(f.size(), 0);
  out.f0_dual.assign(f.size(), 0);
  parallel_for(0, f.size(), opt.threads, [&](std::uint64_t a) {
    const Index da = d.dual_index(a);
    std::vector<std::uint64_t> adig(n);
    for (unsigned t = 0; t < n; ++t) adig[t] = d.digit(da, t);
    std::vector<std::int64_t> acc(levels * p, 0);
    for (Index x = 0; x < f.size(); ++x) {
      std::uint64_t ip = 0;
      for (unsigned t = 0; t < n; ++t) ip += adig[t] * digits[x * n + t];
      acc[dec.tail[x] * p + (dec.digits[0][x] + p - ip % p) % p] += 1;
    }
    std::optional<std::uint64_t> found;
    for (std::uint64_t v = 0; v < levels; ++v) {
      const auto sum = CycInt::from_extended<std::int64_t>(p, 1, std::span<const std::int64_t>(&acc[v * p], p));
      if (sum.is_zero()) continue;
      if (found) throw InvariantError("two levels carry nonzero partial sums at index " + std::to_string(a));
      auto r = recognize_bent_value(sum, n);
      if (!r) throw InvariantError("partial sum is not of bent shape at index " + std::to_string(a));
      found = v;
      out.f0_dual[a] = r->dual;
    }
    if (!found) throw InvariantError("no level carries the partial sum at index " + std::to_string(a));
    out.lambda[a] = *found;
  }, 16);
  const auto q = ipow(p, f.k() - 1);
  for (Index a = 0; a < f.size(); ++a)
    if (out.f0_dual[a] * q + out.lambda[a] != cert.dual[a])
      throw InvariantError("f0* p^(k-1) + lambda differs from the dual at index " + std::to_string(a));
  out.lambda_digits.assign(f.k() - 1, std::vector<std::uint64_t>(f.size()));
  for (Index a = 0; a < f.size(); ++a) {
    auto v = out.lambda[a];
    for (unsigned i = f.k() - 1; i-- > 0;) {
      out.lambda_digits[i][a] = v % p;
      v /= p;
    }
  }
  return out;
}

struct SelectorWitness {
  std::vector<std::uint64_t> selector;
  std::string reason;
};

// An equivalence "lhs iff rhs" checked by enumerating every selector.
struct ComponentReport {
  std::string property;
  CheckStatus status = CheckStatus::Inapplicable;
  std::string detail;
  std::uint64_t selectors_checked = 0;
  bool lhs = false;
  bool rhs = false;
  std::vector<SelectorWitness> witnesses;

  bool holds() const { return status == CheckStatus::Holds; }

  Json to_json() const {
    Json j;
    j["property"] = property;
    j["status"] = gbent::to_string(status);
    j["detail"] = detail;
    j["selectors_checked"] = selectors_checked;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    Json w = Json::array();
    for (const auto& s : witnesses) w.push_back({{"selector", s.selector}, {"reason", s.reason}});
    j["witnesses"] = w;
    return j;
  }
};

namespace detail {

inline void check_selector_budget(const GFunction& f, std::uint64_t budget) {
  const auto count = selector_count(f);
  if (count > budget)
    throw BudgetError("enumeration of all " + std::to_string(ipow(f.p(), f.k() - 1)) +
                          "-entry selectors exceeds budget " + std::to_string(budget),
                      count);
}

// Runs test(selector) for every selector; collects the failing ones in order.
template <class Test>
std::vector<SelectorWitness> sweep_selectors(const GFunction& f, unsigned threads, Test&& test) {
  const auto entries = ipow(f.p(), f.k() - 1);
  const auto count = selector_count(f);
  std::vector<std::optional<std::string>> fails(count);
  parallel_for(0, count, threads, [&](std::uint64_t s) { fails[s] = test(selector_table(f.p(), entries, s)); }, 8);
  std::vector<SelectorWitness> out;
  for (std::uint64_t s = 0; s < count; ++s)
    if (fails[s]) out.push_back({selector_table(f.p(), entries, s), *fails[s]});
  return out;
}

inline ComponentReport finish_equivalence(ComponentReport r, const std::string& lhs, const std::string& rhs) {
  r.status = r.lhs == r.rhs ? CheckStatus::Holds : CheckStatus::Violated;
  r.detail = lhs + (r.lhs ? ": yes" : ": no") + "; " + rhs + (r.rhs ? ": yes" : ": no");
  return r;
}

}  // namespace detail

// f generalized bent iff g_{f,F} bent for every selector F.
inline ComponentReport check_component_bentness(const GFunction& f, std::uint64_t budget,
                                                const TransformOptions& opt = {}) {
  ComponentReport r;
  r.property = "generalized bent iff every component is bent";
  if (f.k() < 2) {
    r.detail = "k = 1: no components";
    return r;
  }
  detail::check_selector_budget(f, budget);
  r.lhs = analyze(f, opt).is_gbent;
  const TransformOptions serial{1};
  r.witnesses = detail::sweep_selectors(f, opt.threads, [&](const std::vector<std::uint64_t>& F) -> std::optional<std::string> {
    const auto c = analyze(component_function(f, F), serial);
    if (c.is_gbent) return std::nullopt;
    return "component not bent at index " + std::to_string(c.failures.front());
  });
  r.selectors_checked = selector_count(f);
  r.rhs = r.witnesses.empty();
  return detail::finish_equivalence(r, "f generalized bent", "all components bent");
}

struct ComponentDualReport {
  ComponentReport dual_bentness;  // f* generalized bent iff every f_0* + F(lambda) bent
  ComponentReport self_duality;   // f self-dual iff every component self-dual
  std::uint64_t dual_formula_mismatches = 0;  // components whose dual is not f_0* + F(lambda)

  bool holds() const { return dual_bentness.holds() && self_duality.holds() && dual_formula_mismatches == 0; }

  Json to_json() const {
    return Json{{"part1", dual_bentness.to_json()},
                {"part2", self_duality.to_json()},
                {"dual_formula_mismatches", dual_formula_mismatches}};
  }
};

inline ComponentDualReport check_component_duals(const GFunction& f, std::uint64_t budget,
                                                 const TransformOptions& opt = {}) {
  ComponentDualReport out;
  out.dual_bentness.property = "dual generalized bent iff every dual component is bent";
  out.self_duality.property = "self-dual iff every component is self-dual";
  if (f.k() < 2) {
    out.dual_bentness.detail = out.self_duality.detail = "k = 1: no components";
    return out;
  }
  const auto cert = analyze(f, opt);
  if (!cert.is_gbent) {
    out.dual_bentness.detail = out.self_duality.detail = "f is not generalized bent";
    return out;
  }
  detail::check_selector_budget(f, budget);
  const auto lam = extract_lambda(f, opt);
  const auto fs = dual(cert);
  const TransformOptions serial{1};
  const auto p = f.p();
  std::vector<std::uint8_t> mismatch(selector_count(f), 0);

  auto& part1 = out.dual_bentness;
  part1.lhs = analyze(fs, opt).is_gbent;
  part1.witnesses = detail::sweep_selectors(f, opt.threads, [&](const std::vector<std::uint64_t>& F) -> std::optional<std::string> {
    std::vector<std::uint64_t> gs(f.size());
    for (Index a = 0; a < f.size(); ++a) gs[a] = (lam.f0_dual[a] + F[lam.lambda[a]]) % p;
    const auto comp = analyze(component_function(f, F), serial);
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < F.size(); ++i) s = s * p + F[i];
    if (!comp.is_gbent || comp.dual != gs) mismatch[s] = 1;
    const auto c = analyze(GFunction(f.spec(), 1, std::move(gs)), serial);
    if (c.is_gbent) return std::nullopt;
    return "dual component not bent at index " + std::to_string(c.failures.front());
  });
  part1.selectors_checked = selector_count(f);
  part1.rhs = part1.witnesses.empty();
  part1 = detail::finish_equivalence(part1, "dual generalized bent", "all dual components bent");
  for (auto m : mismatch) out.dual_formula_mismatches += m;

  auto& part2 = out.self_duality;
  part2.lhs = static_cast<bool>(is_self_dual(f, cert));
  part2.witnesses = detail::sweep_selectors(f, opt.threads, [&](const std::vector<std::uint64_t>& F) -> std::optional<std::string> {
    auto v = is_self_dual(component_function(f, F), serial);
    if (v) return std::nullopt;
    return v.reason;
  });
  part2.selectors_checked = selector_count(f);
  part2.rhs = part2.witnesses.empty();
  part2 = detail::finish_equivalence(part2, "f self-dual", "all components self-dual");
  return out;
}

}  // namespace gbent
