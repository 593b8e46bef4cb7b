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

// Bentness certificates: per-point sign and dual read off the exact Walsh
// spectrum, regularity classification, and runtime checks of the structural
// identities satisfied by generalized bent functions and their duals.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/domain.hpp"
#include "gbent/errors.hpp"
#include "gbent/function.hpp"
#include "gbent/util.hpp"
#include "gbent/walsh.hpp"
#include "json.hpp"

namespace gbent {

using Json = nlohmann::ordered_json;

enum class RegularityKind { Regular, WeaklyRegular, NonWeaklyRegular };

struct Regularity {
  RegularityKind kind = RegularityKind::NonWeaklyRegular;
  std::optional<QuarticUnit> mu;  // set unless non-weakly regular

  std::string to_string() const {
    switch (kind) {
      case RegularityKind::Regular: return "regular";
      case RegularityKind::WeaklyRegular: return "weakly regular (mu=" + mu->to_string() + ")";
      default: return "non-weakly regular";
    }
  }
  bool weakly_regular() const { return kind != RegularityKind::NonWeaklyRegular; }
};

// Outcome of analyze(). For a bent f every W_f(a) equals
// epsilon(a) * xi * p^{n/2} * zeta_{p^k}^{dual(a)}. Points that do not have
// this shape are listed in `failures` and carry epsilon 0.
struct BentCertificate {
  DomainSpec spec;
  unsigned k = 1;
  bool is_gbent = false;
  QuarticUnit xi;
  std::vector<int> epsilon;
  std::vector<std::uint64_t> dual;
  std::optional<Regularity> regularity;
  std::vector<Index> failures;

  std::uint64_t p() const { return spec.p(); }
  unsigned n() const { return spec.dimension(); }
  std::string xi_case() const { return xi.e == 0 ? "xi=1" : "xi=i"; }

  // mu(a) = xi * epsilon(a)
  QuarticUnit mu(Index a) const { return xi * QuarticUnit::from_sign(epsilon[a]); }

  Json to_json(bool tables = true) const {
    Json j;
    j["p"] = p();
    j["k"] = k;
    j["n"] = n();
    j["spec"] = spec.to_string();
    j["is_gbent"] = is_gbent;
    j["xi_case"] = xi_case();
    if (regularity) {
      j["regularity"] = regularity->kind == RegularityKind::Regular         ? "Regular"
                        : regularity->kind == RegularityKind::WeaklyRegular ? "WeaklyRegular"
                                                                             : "NonWeaklyRegular";
      if (regularity->mu) j["mu"] = regularity->mu->to_string();
    } else {
      j["regularity"] = nullptr;
    }
    if (tables) {
      j["dual_table"] = is_gbent ? Json(dual) : Json(nullptr);
      j["epsilon_table"] = epsilon;
    }
    j["failures"] = failures;
    return j;
  }
};

inline BentCertificate certify(const WalshSpectrum& w, const TransformOptions& opt = {}) {
  BentCertificate c;
  c.spec = w.spec;
  c.k = w.k;
  const auto n = w.spec.dimension();
  c.xi = xi_for(w.p(), n);
  c.epsilon.assign(w.size(), 0);
  c.dual.assign(w.size(), 0);
  parallel_for(0, w.size(), opt.threads, [&](std::uint64_t a) {
    if (auto r = recognize_bent_value(w.values[a], n)) {
      c.epsilon[a] = r->epsilon;
      c.dual[a] = r->dual;
    }
  }, 64);
  for (Index a = 0; a < w.size(); ++a)
    if (c.epsilon[a] == 0) c.failures.push_back(a);
  c.is_gbent = c.failures.empty();
  if (c.is_gbent) {
    Regularity r;
    const bool constant = std::all_of(c.epsilon.begin(), c.epsilon.end(), [&](int e) { return e == c.epsilon[0]; });
    if (constant) {
      r.mu = c.mu(0);
      r.kind = r.mu->e == 0 ? RegularityKind::Regular : RegularityKind::WeaklyRegular;
    }
    c.regularity = r;
  }
  return c;
}

inline BentCertificate analyze(const GFunction& f, const TransformOptions& opt = {}) {
  return certify(walsh_full_fast(f, opt), opt);
}

// The dual as a function on the same domain.
inline GFunction dual(const BentCertificate& c) {
  if (!c.is_gbent)
    throw UsageError("function is not generalized bent (" + std::to_string(c.failures.size()) +
                     " failing points, first at index " + std::to_string(c.failures.front()) + ")");
  return GFunction(c.spec, c.k, c.dual);
}

inline GFunction dual(const GFunction& f, const TransformOptions& opt = {}) { return dual(analyze(f, opt)); }

struct SelfDualVerdict {
  bool self_dual = false;
  std::string reason;
  explicit operator bool() const { return self_dual; }
};

inline SelfDualVerdict is_self_dual(const GFunction& f, const BentCertificate& c) {
  if (!c.is_gbent) return {false, "not generalized bent"};
  for (Index x = 0; x < f.size(); ++x)
    if (c.dual[x] != f[x])
      return {false, "dual differs at index " + std::to_string(x) + ": f=" + std::to_string(f[x]) +
                         ", f*=" + std::to_string(c.dual[x])};
  return {true, "dual equals f"};
}

inline SelfDualVerdict is_self_dual(const GFunction& f, const TransformOptions& opt = {}) {
  return is_self_dual(f, analyze(f, opt));
}

enum class CheckStatus { Holds, Violated, Inapplicable };

inline std::string to_string(CheckStatus s) {
  return s == CheckStatus::Holds ? "holds" : s == CheckStatus::Violated ? "violated" : "inapplicable";
}

struct PropertyReport {
  std::string property;
  CheckStatus status = CheckStatus::Inapplicable;
  std::string detail;
  std::vector<Index> violations;

  bool holds() const { return status == CheckStatus::Holds; }

  Json to_json() const {
    Json j;
    j["property"] = property;
    j["status"] = gbent::to_string(status);
    j["detail"] = detail;
    j["violations"] = violations;
    return j;
  }
};

inline bool is_even_function(const GFunction& f) {
  const auto& d = f.spec();
  for (Index x = 0; x < f.size(); ++x)
    if (f[d.negate(x)] != f[x]) return false;
  return true;
}

namespace detail {

inline PropertyReport finish(PropertyReport r, const std::string& what) {
  if (r.violations.empty()) {
    r.status = CheckStatus::Holds;
    r.detail = what;
  } else {
    r.status = CheckStatus::Violated;
    r.detail = std::to_string(r.violations.size()) + " violating points";
  }
  return r;
}

}  // namespace detail

// f**(x) = f(-x) for bent f whose dual is bent.
inline PropertyReport check_double_dual(const GFunction& f, const TransformOptions& opt = {}) {
  PropertyReport r{"double dual equals reflection", CheckStatus::Inapplicable, "", {}};
  const auto c = analyze(f, opt);
  if (!c.is_gbent) return r.detail = "f is not generalized bent", r;
  const auto fs = dual(c);
  const auto cs = analyze(fs, opt);
  if (!cs.is_gbent) return r.detail = "dual is not generalized bent", r;
  const auto& d = f.spec();
  for (Index x = 0; x < f.size(); ++x)
    if (cs.dual[d.negate(x)] != f[x]) r.violations.push_back(x);
  return detail::finish(r, "f**(-x) = f(x) at all " + std::to_string(f.size()) + " points");
}

// For even bent f: epsilon(a) = epsilon(-a) and f*(a) = f*(-a).
inline PropertyReport check_even_symmetry(const GFunction& f, const TransformOptions& opt = {}) {
  PropertyReport r{"even function has even sign and dual", CheckStatus::Inapplicable, "", {}};
  const auto c = analyze(f, opt);
  if (!c.is_gbent) return r.detail = "f is not generalized bent", r;
  if (!is_even_function(f)) return r.detail = "f(x) != f(-x) for some x", r;
  const auto& d = f.spec();
  for (Index a = 0; a < f.size(); ++a)
    if (c.epsilon[d.negate(a)] != c.epsilon[a] || c.dual[d.negate(a)] != c.dual[a]) r.violations.push_back(a);
  return detail::finish(r, "epsilon and dual even at all points");
}

// For even bent f with bent dual: the sign at zero is preserved by dualization
// when xi = 1 and flipped when xi = i.
inline PropertyReport check_sign_at_zero(const GFunction& f, const TransformOptions& opt = {}) {
  PropertyReport r{"sign at zero under dualization", CheckStatus::Inapplicable, "", {}};
  const auto c = analyze(f, opt);
  if (!c.is_gbent) return r.detail = "f is not generalized bent", r;
  if (!is_even_function(f)) return r.detail = "f(x) != f(-x) for some x", r;
  const auto cs = analyze(dual(c), opt);
  if (!cs.is_gbent) return r.detail = "dual is not generalized bent", r;
  const bool flips = c.xi.e != 0;
  const int expected = flips ? -c.epsilon[0] : c.epsilon[0];
  if (cs.epsilon[0] != expected) r.violations.push_back(0);
  r = detail::finish(r, "");
  r.detail = std::string(flips ? "flipped" : "preserved") + ": eps_f(0)=" + std::to_string(c.epsilon[0]) +
             ", eps_f*(0)=" + std::to_string(cs.epsilon[0]);
  return r;
}

// sum_a epsilon(a) zeta_{p^k}^{f*(a)} zeta_p^{<a,x>} reproduces
// p^{n/2} xi^{-1} zeta_{p^k}^{f(x)}; for odd n both sides are multiplied by
// the quadratic Gauss sum to stay inside the ring.
inline PropertyReport check_inversion_identity(const GFunction& f, const TransformOptions& opt = {}) {
  PropertyReport r{"inverse transform of the bent shape", CheckStatus::Inapplicable, "", {}};
  const auto c = analyze(f, opt);
  if (!c.is_gbent) return r.detail = "f is not generalized bent", r;
  const auto p = f.p();
  const auto n = f.dimension();
  std::vector<CycInt> terms(f.size());
  for (Index a = 0; a < f.size(); ++a)
    terms[a] = CycInt::root(p, f.k(), static_cast<std::int64_t>(c.dual[a]), c.epsilon[a]);
  auto sums = character_transform(f.spec(), f.k(), terms, +1, opt);
  const auto G = gauss_sum(p, f.k());
  const BigInt scale = boost::multiprecision::pow(BigInt(p), (n + 1) / 2);
  for (Index x = 0; x < f.size(); ++x) {
    const CycInt lhs = n % 2 == 1 ? G * sums[x] : sums[x];
    if (lhs != CycInt::root(p, f.k(), static_cast<std::int64_t>(f[x]), scale)) r.violations.push_back(x);
  }
  return detail::finish(r, "identity exact at all " + std::to_string(f.size()) + " points");
}

struct SearchResult {
  std::uint64_t examined = 0;
  std::uint64_t bent = 0;
  std::vector<GFunction> witnesses;
};

inline std::uint64_t table_count(std::uint64_t modulus, Index size) {
  std::uint64_t total = 1;
  for (Index i = 0; i < size; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / modulus) return std::numeric_limits<std::uint64_t>::max();
    total *= modulus;
  }
  return total;
}

// Enumerates every value table on `spec` in lexicographic order and keeps the
// self-dual generalized bent ones.
inline SearchResult search_self_dual(const DomainSpec& spec, unsigned k, std::uint64_t budget) {
  const auto modulus = ipow(spec.p(), k);
  const auto required = table_count(modulus, spec.size());
  if (required > budget)
    throw BudgetError("enumeration of all value tables exceeds budget " + std::to_string(budget), required);
  SearchResult out;
  std::vector<std::uint64_t> table(spec.size(), 0);
  const TransformOptions serial{1};
  for (std::uint64_t it = 0; it < required; ++it) {
    GFunction f(spec, k, table);
    const auto c = analyze(f, serial);
    ++out.examined;
    if (c.is_gbent) {
      ++out.bent;
      if (is_self_dual(f, c)) out.witnesses.push_back(f);
    }
    // last position is the fastest-moving digit
    for (std::size_t i = table.size(); i-- > 0;) {
      if (++table[i] < modulus) break;
      table[i] = 0;
    }
  }
  return out;
}

}  // namespace gbent
