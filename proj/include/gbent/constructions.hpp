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

// Builders for generalized bent functions together with the duals predicted
// for them in closed form, and validators for each builder's hypotheses.
//
//   quadratic twist   F(x,y1,y2) = p^{k-1}(Tr(x^2) + (y1 + Tr(a x^2))(y2 + Tr(b x^2)))
//                                  + g(y2 + Tr(b x^2))            on F_{p^m} x F_p x F_p
//   indirect sum      F(x,y) = f_{s(y)}(x) + p^{k-1} g_0(y) + g(s(y)),
//                     s(y) = (g_0 - g_1, ..., g_0 - g_t)(y)
//   self-dual sum     F(x,y1,y2) = f_{s(y)}(x) + p^{k-1} Tr(b/2 (y1^2 + y2^2)) + g(s(y)),
//                     s(y) = h(c a y1 + c y2), h in {Tr(x), Tr(x^2), Tr(x^4)}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbent/analysis.hpp"
#include "gbent/cyclotomic.hpp"
#include "gbent/domain.hpp"
#include "gbent/errors.hpp"
#include "gbent/field.hpp"
#include "gbent/function.hpp"
#include "gbent/util.hpp"
#include "gbent/walsh.hpp"

namespace gbent {

// Small value tables: "v0,v1,...,v_{size-1}" or "pow:e[,scale:c]" meaning
// x -> c x^e over the integers 0 .. size-1, reduced mod `modulus`.
inline std::vector<std::uint64_t> parse_table(std::string_view text, std::uint64_t size, std::uint64_t modulus) {
  const auto t = trim(text);
  std::vector<std::uint64_t> out;
  if (t.starts_with("pow:")) {
    std::int64_t e = -1, c = 1;
    for (auto part : split(t, ',')) {
      part = trim(part);
      if (part.starts_with("pow:"))
        e = parse_int(part.substr(4));
      else if (part.starts_with("scale:"))
        c = parse_int(part.substr(6));
      else
        throw ParseError("expected pow:e or scale:c, got '" + std::string(part) + "'");
    }
    if (e < 0) throw ParseError("exponent must be non-negative");
    for (std::uint64_t x = 0; x < size; ++x) {
      std::uint64_t v = 1;
      for (std::int64_t i = 0; i < e; ++i) v = mulmod(v, x % modulus, modulus);
      out.push_back(mulmod(v, mod(c, modulus), modulus));
    }
    return out;
  }
  for (auto part : split(t, ',')) out.push_back(mod(parse_int(trim(part)), modulus));
  if (out.size() != size)
    throw ParseError("table needs " + std::to_string(size) + " entries, got " + std::to_string(out.size()));
  return out;
}

namespace detail {

inline void check_table(const std::vector<std::uint64_t>& t, std::uint64_t size, std::uint64_t modulus,
                        const char* name) {
  if (t.size() != size)
    throw UsageError(std::string(name) + " needs " + std::to_string(size) + " entries");
  for (auto v : t)
    if (v >= modulus) throw UsageError(std::string(name) + " has a value outside [0, " + std::to_string(modulus) + ")");
}

inline DomainSpec field_domain(const ExtField& F) { return DomainSpec(F.p(), {FieldBlock{F}}); }

// rank over F_p of a set of vectors
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const auto inv = inv_mod(rows[rank][c], p);
    for (auto& v : rows[rank]) v = mulmod(v, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const auto f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = (rows[r][j] + p - mulmod(f, rows[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Quadratic twist on F_{p^m} x F_p x F_p

struct QuadraticTwistParams {
  ExtField field;
  unsigned k = 1;
  FieldElem alpha;
  FieldElem beta;
  std::vector<std::uint64_t> g;  // F_p -> Z_{p^k}
};

// 1 + i alpha + j beta
inline FieldElem twist_gamma(const QuadraticTwistParams& P, std::uint64_t i, std::uint64_t j) {
  return P.field.one() + P.alpha.scaled(static_cast<std::int64_t>(i)) + P.beta.scaled(static_cast<std::int64_t>(j));
}

inline void validate(const QuadraticTwistParams& P) {
  if (P.field.degree() < 2) throw ConstructionError("quadratic twist needs a field of degree m >= 2");
  if (P.k < 1) throw ConstructionError("k must be at least 1");
  if (!(P.alpha.field() == P.field) || !(P.beta.field() == P.field))
    throw ConstructionError("alpha and beta must lie in the construction field");
  if (P.alpha.is_zero() || P.beta.is_zero()) throw ConstructionError("alpha and beta must be nonzero");
  const auto p = P.field.p();
  detail::check_table(P.g, p, ipow(p, P.k), "g");
  for (std::uint64_t i = 0; i < p; ++i)
    for (std::uint64_t j = 0; j < p; ++j)
      if (twist_gamma(P, i, j).is_zero())
        throw ConstructionError("1 + i*alpha + j*beta = 0 at (i, j) = (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
}

inline DomainSpec quadratic_twist_domain(const ExtField& F) {
  return DomainSpec(F.p(), {FieldBlock{F}, DotBlock{1}, DotBlock{1}});
}

inline GFunction build_quadratic_twist(const QuadraticTwistParams& P) {
  validate(P);
  const auto p = P.field.p();
  const auto q = ipow(p, P.k - 1);
  const auto spec = quadratic_twist_domain(P.field);
  std::vector<std::uint64_t> vals(spec.size());
  for (Index xi = 0; xi < P.field.order(); ++xi) {
    const auto x = P.field.element(xi);
    const auto x2 = x * x;
    const auto t0 = x2.trace(), ta = (P.alpha * x2).trace(), tb = (P.beta * x2).trace();
    for (std::uint64_t y1 = 0; y1 < p; ++y1)
      for (std::uint64_t y2 = 0; y2 < p; ++y2) {
        const auto u = (y1 + ta) % p, v = (y2 + tb) % p;
        const auto inner = (t0 + u * v) % p;
        vals[(xi * p + y1) * p + y2] = (q * inner + P.g[v]) % (q * p);
      }
  }
  return GFunction(spec, P.k, std::move(vals));
}

// F*(x,y1,y2) = p^{k-1}(Tr(-x^2 / (4 (1 + y1 alpha + y2 beta))) - y1 y2) + g(y1)
inline GFunction quadratic_twist_dual(const QuadraticTwistParams& P) {
  validate(P);
  const auto p = P.field.p();
  const auto q = ipow(p, P.k - 1);
  const auto spec = quadratic_twist_domain(P.field);
  const auto four = P.field.from_int(4);
  std::vector<std::uint64_t> vals(spec.size());
  for (std::uint64_t y1 = 0; y1 < p; ++y1)
    for (std::uint64_t y2 = 0; y2 < p; ++y2) {
      const auto gamma = twist_gamma(P, y1, y2);
      if (gamma.is_zero()) throw InvariantError("zero divisor in closed-form dual");
      const auto coef = -(four * gamma).inv();
      for (Index xi = 0; xi < P.field.order(); ++xi) {
        const auto x = P.field.element(xi);
        const auto t = (coef * x * x).trace();
        const auto inner = (t + p - y1 * y2 % p) % p;
        vals[(xi * p + y1) * p + y2] = (q * inner + P.g[y1]) % (q * p);
      }
    }
  return GFunction(spec, P.k, std::move(vals));
}

struct EtaPattern {
  std::vector<std::vector<int>> signs;  // signs[i][j] = eta(1 + i alpha + j beta)
  bool all_ones = false;
  bool rows_constant_with_variation = false;

  Json to_json() const {
    return Json{{"signs", signs}, {"all_ones", all_ones}, {"rows_constant_with_variation", rows_constant_with_variation}};
  }
};

inline EtaPattern eta_pattern(const QuadraticTwistParams& P) {
  validate(P);
  const auto p = P.field.p();
  EtaPattern e;
  e.signs.assign(p, std::vector<int>(p, 0));
  bool rows_constant = true, variation = false;
  for (std::uint64_t i = 0; i < p; ++i)
    for (std::uint64_t j = 0; j < p; ++j) {
      e.signs[i][j] = twist_gamma(P, i, j).quad_character();
      rows_constant = rows_constant && e.signs[i][j] == e.signs[i][0];
      variation = variation || e.signs[i][j] != e.signs[0][0];
    }
  e.all_ones = !variation && e.signs[0][0] == 1;
  e.rows_constant_with_variation = rows_constant && variation;
  return e;
}

struct TwistConditionReport {
  bool holds = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> failing;  // (b1, b2) with |S| != p

  Json to_json() const {
    Json f = Json::array();
    for (auto [a, b] : failing) f.push_back({a, b});
    return Json{{"holds", holds}, {"failing", f}, {"failing_count", failing.size()}};
  }
};

// |sum_{y1,y2} eta(1 + y1 alpha + y2 beta) zeta_{p^k}^{g(y1)} zeta_p^{-y1 y2 + b1 y1 + b2 y2}| = p
// for every (b1, b2); equivalent to the dual of the twist being generalized bent.
inline TwistConditionReport quadratic_twist_condition(const QuadraticTwistParams& P) {
  validate(P);
  const auto p = P.field.p();
  const auto q = ipow(p, P.k - 1);
  const auto pat = eta_pattern(P);
  const auto target = CycInt::integer(p, P.k, BigInt(p * p));
  TwistConditionReport r;
  for (std::uint64_t b1 = 0; b1 < p; ++b1)
    for (std::uint64_t b2 = 0; b2 < p; ++b2) {
      CycInt s(p, P.k);
      for (std::uint64_t y1 = 0; y1 < p; ++y1)
        for (std::uint64_t y2 = 0; y2 < p; ++y2) {
          const auto lin = (p * p - y1 * y2 % p + b1 * y1 + b2 * y2) % p;
          s.add_root((P.g[y1] + q * lin) % (q * p), pat.signs[y1][y2]);
        }
      if (mag_sq(s) != target) r.failing.emplace_back(b1, b2);
    }
  r.holds = r.failing.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Tr(alpha x^2) on F_{p^m}

struct QuadraticBent {
  GFunction f;
  GFunction dual;  // Tr(-a^2 / (4 alpha))
  QuarticUnit mu;  // (-1)^{m-1} e^m eta(alpha), e = 1 or i as p = 1 or 3 mod 4
};

inline QuadraticBent quadratic_bent(const FieldElem& alpha) {
  if (alpha.is_zero()) throw UsageError("alpha must be nonzero");
  const auto& F = alpha.field();
  const auto spec = detail::field_domain(F);
  const auto coef = -(F.from_int(4) * alpha).inv();
  auto f = GFunction::tabulate(spec, 1, [&](Index x) {
    const auto e = F.element(x);
    return (alpha * e * e).trace();
  });
  auto d = GFunction::tabulate(spec, 1, [&](Index x) {
    const auto e = F.element(x);
    return (coef * e * e).trace();
  });
  const unsigned m = F.degree();
  unsigned e = 2 * (m - 1) + (F.p() % 4 == 3 ? m : 0) + (alpha.quad_character() == -1 ? 2 : 0);
  return {std::move(f), std::move(d), QuarticUnit{e % 4}};
}

// The closed-form spectrum mu p^{m/2} zeta_p^{dual(a)} as ring elements.
inline std::vector<CycInt> quadratic_walsh_closed_form(const QuadraticBent& qb) {
  const auto p = qb.f.p();
  const auto m = qb.f.dimension();
  const auto eps = qb.mu * xi_for(p, m).inverse();
  if (!eps.is_real()) throw InvariantError("mu is not xi times a sign");
  const int sign = eps.e == 0 ? 1 : -1;
  std::vector<CycInt> out;
  for (Index a = 0; a < qb.f.size(); ++a) out.push_back(bent_value(p, 1, m, {sign, qb.dual[a]}));
  return out;
}

// ---------------------------------------------------------------------------
// Maiorana-McFarland p^{k-1} z1 z2 + g(z2) on F_p x F_p

inline GFunction mm_gbent(std::uint64_t p, unsigned k, const std::vector<std::uint64_t>& g) {
  const auto modulus = ipow(p, k);
  detail::check_table(g, p, modulus, "g");
  const auto q = modulus / p;
  const auto spec = DomainSpec::dot(p, 2);
  return GFunction::tabulate(spec, k, [&](Index x) {
    const auto z1 = x / p, z2 = x % p;
    return (q * (z1 * z2 % p) + g[z2]) % modulus;
  });
}

// W(b1, b2) = p zeta_{p^k}^{-p^{k-1} b1 b2 + g(b1)}
inline std::vector<CycInt> mm_walsh_closed_form(std::uint64_t p, unsigned k, const std::vector<std::uint64_t>& g) {
  const auto q = ipow(p, k - 1);
  std::vector<CycInt> out;
  for (Index b = 0; b < p * p; ++b) {
    const auto b1 = b / p, b2 = b % p;
    out.push_back(CycInt::root(p, k, static_cast<std::int64_t>(g[b1]) - static_cast<std::int64_t>(q * (b1 * b2 % p)), p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Indirect sums

struct BentFamily {
  QuarticUnit u;                  // common mu of every affine combination
  int u_sign = 1;                 // u = xi * u_sign
  std::vector<GFunction> duals;   // g_0*, ..., g_t*
};

inline std::uint64_t family_size(std::uint64_t p, std::size_t t) { return ipow(p, static_cast<unsigned>(t)); }

// Checks that every G_j = (1 - sum j_s) g_0 + sum j_s g_s, j in F_p^t, is bent
// and weakly regular with one common mu, and that G_j* is the same affine
// combination of the g_s*.
inline BentFamily validate_family(const std::vector<GFunction>& g, const TransformOptions& opt = {}) {
  if (g.size() < 2) throw ConstructionError("family needs g_0 and at least one g_s");
  const auto& spec = g[0].spec();
  const auto p = spec.p();
  for (const auto& h : g)
    if (!(h.spec() == spec) || h.k() != 1) throw ConstructionError("family members must be p-ary functions on one domain");
  const std::size_t t = g.size() - 1;
  BentFamily fam;
  for (std::size_t s = 0; s <= t; ++s) {
    const auto c = analyze(g[s], opt);
    if (!c.is_gbent) throw ConstructionError("g_" + std::to_string(s) + " is not bent");
    fam.duals.push_back(dual(c));
  }
  std::optional<QuarticUnit> u;
  for (std::uint64_t jn = 0; jn < family_size(p, t); ++jn) {
    std::vector<std::uint64_t> j(t);
    std::uint64_t rest = jn, total = 0;
    for (std::size_t s = t; s-- > 0;) {
      j[s] = rest % p;
      rest /= p;
      total += j[s];
    }
    const auto w0 = (1 + p * t - total % p) % p;  // 1 - sum j_s
    auto combine = [&](auto&& get) {
      std::vector<std::uint64_t> v(spec.size());
      for (Index y = 0; y < spec.size(); ++y) {
        std::uint64_t acc = w0 * get(0, y);
        for (std::size_t s = 0; s < t; ++s) acc += j[s] * get(s + 1, y);
        v[y] = acc % p;
      }
      return v;
    };
    std::string name = "j = (";
    for (std::size_t s = 0; s < t; ++s) name += (s ? "," : "") + std::to_string(j[s]);
    name += ")";
    const GFunction G(spec, 1, combine([&](std::size_t s, Index y) { return g[s][y]; }));
    const auto c = analyze(G, opt);
    if (!c.is_gbent) throw ConstructionError("combination at " + name + " is not bent");
    if (!c.regularity->weakly_regular()) throw ConstructionError("combination at " + name + " is not weakly regular");
    if (u && !(c.regularity->mu->e == u->e))
      throw ConstructionError("mu at " + name + " differs from the family's common value");
    u = c.regularity->mu;
    if (c.dual != combine([&](std::size_t s, Index y) { return fam.duals[s][y]; }))
      throw ConstructionError("dual at " + name + " is not the affine combination of the duals");
  }
  fam.u = *u;
  const auto e = fam.u * xi_for(p, spec.dimension()).inverse();
  fam.u_sign = e.e == 0 ? 1 : -1;
  return fam;
}

// g_s(y) = Tr(alpha_s G(y1 y2^{p^m - 2})) on F_{p^m} x F_{p^m}.
inline std::vector<GFunction> psap_blocks(const ExtField& F, const std::vector<FieldElem>& alphas,
                                          const std::vector<std::uint64_t>& perm) {
  const auto p = F.p();
  const std::size_t t = alphas.size() - 1;
  if (alphas.size() < 2) throw ConstructionError("need alpha_0 and at least one more alpha");
  if (F.degree() < t + 1) throw ConstructionError("field degree m must be at least t + 1");
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& a : alphas) {
    if (!(a.field() == F)) throw ConstructionError("alpha outside the field");
    rows.emplace_back(a.coords().begin(), a.coords().end());
  }
  if (detail::rank_mod_p(rows, p) != alphas.size()) throw ConstructionError("alphas are linearly dependent over F_p");
  if (perm.size() != F.order()) throw ConstructionError("permutation table must cover the field");
  std::vector<bool> seen(F.order(), false);
  for (auto v : perm) {
    if (v >= F.order() || seen[v]) throw ConstructionError("permutation table is not a bijection");
    seen[v] = true;
  }
  if (perm[0] != 0) throw ConstructionError("permutation must fix 0");
  const DomainSpec spec(p, {FieldBlock{F}, FieldBlock{F}});
  const auto inv_exp = F.order() - 2;
  std::vector<std::vector<std::uint64_t>> tables(alphas.size(), std::vector<std::uint64_t>(spec.size()));
  for (Index y1 = 0; y1 < F.order(); ++y1) {
    const auto e1 = F.element(y1);
    for (Index y2 = 0; y2 < F.order(); ++y2) {
      const auto w = F.element(perm[(e1 * F.element(y2).pow(inv_exp)).index()]);
      for (std::size_t s = 0; s < alphas.size(); ++s) tables[s][y1 * F.order() + y2] = (alphas[s] * w).trace();
    }
  }
  std::vector<bool> image(family_size(p, t), false);
  for (Index y = 0; y < spec.size(); ++y) {
    std::uint64_t idx = 0;
    for (std::size_t s = 1; s <= t; ++s) idx = idx * p + (tables[0][y] + p - tables[s][y]) % p;
    image[idx] = true;
  }
  if (std::find(image.begin(), image.end(), false) != image.end())
    throw ConstructionError("differences g_0 - g_s do not cover F_p^t");
  std::vector<GFunction> out;
  for (auto& tab : tables) out.emplace_back(spec, 1, std::move(tab));
  return out;
}

struct IndirectSumFamily {
  std::vector<GFunction> f;          // f_i, i in F_p^t in lexicographic order
  std::vector<GFunction> g;          // g_0 ... g_t on a common V_m
  std::vector<std::uint64_t> gsel;   // F_p^t -> Z_{p^k}
};

struct IndirectSum {
  GFunction F;
  GFunction closed_form_dual;
  BentFamily family;
  std::vector<std::uint64_t> selector;       // s(y)
  std::vector<std::uint64_t> dual_selector;  // s*(y) from the g_s*
  std::vector<bool> dual_selector_image;
};

inline IndirectSum build_indirect_sum(const IndirectSumFamily& fam, const TransformOptions& opt = {}) {
  const std::size_t t = fam.g.size() - 1;
  if (fam.g.size() < 2) throw ConstructionError("family needs g_0 and at least one g_s");
  const auto p = fam.g[0].p();
  const auto count = family_size(p, t);
  if (fam.f.size() != count) throw ConstructionError("need one f_i for each i in F_p^t");
  const auto& fspec = fam.f[0].spec();
  const unsigned k = fam.f[0].k();
  const auto q = ipow(p, k - 1);
  for (const auto& fi : fam.f)
    if (!(fi.spec() == fspec) || fi.k() != k) throw ConstructionError("f_i must share one domain and k");
  detail::check_table(fam.gsel, count, q * p, "g");
  IndirectSum out;
  out.family = validate_family(fam.g, opt);
  std::vector<GFunction> fduals;
  for (std::size_t i = 0; i < count; ++i) {
    const auto c = analyze(fam.f[i], opt);
    if (!c.is_gbent) throw ConstructionError("f_" + std::to_string(i) + " is not generalized bent");
    fduals.push_back(dual(c));
  }
  const auto& yspec = fam.g[0].spec();
  auto sel = [&](const std::vector<GFunction>& g, Index y) {
    std::uint64_t idx = 0;
    for (std::size_t s = 1; s <= t; ++s) idx = idx * p + (g[0][y] + p - g[s][y]) % p;
    return idx;
  };
  out.dual_selector_image.assign(count, false);
  for (Index y = 0; y < yspec.size(); ++y) {
    out.selector.push_back(sel(fam.g, y));
    out.dual_selector.push_back(sel(out.family.duals, y));
    out.dual_selector_image[out.dual_selector.back()] = true;
  }
  const auto spec = fspec.product(yspec);
  std::vector<std::uint64_t> vals(spec.size()), dvals(spec.size());
  for (Index x = 0; x < fspec.size(); ++x)
    for (Index y = 0; y < yspec.size(); ++y) {
      const auto s = out.selector[y], sd = out.dual_selector[y];
      const auto idx = DomainSpec::product_index(x, y, yspec.size());
      vals[idx] = (fam.f[s][x] + q * fam.g[0][y] + fam.gsel[s]) % (q * p);
      dvals[idx] = (fduals[sd][x] + q * out.family.duals[0][y] + fam.gsel[sd]) % (q * p);
    }
  out.F = GFunction(spec, k, std::move(vals));
  out.closed_form_dual = GFunction(spec, k, std::move(dvals));
  return out;
}

// Compares the spectrum of an indirect sum with
//   W_F(a,b) = u p^{m/2} zeta_p^{g_0*(b)} zeta_{p^k}^{g(s*(b))} W_{f_{s*(b)}}(a)
// at every point.
inline PropertyReport check_indirect_sum_spectrum(const IndirectSumFamily& fam, const IndirectSum& sum,
                                                  const TransformOptions& opt = {}) {
  PropertyReport r{"indirect sum spectrum closed form", CheckStatus::Inapplicable, "", {}};
  const auto p = sum.F.p();
  const unsigned k = sum.F.k();
  const auto q = ipow(p, k - 1);
  const auto& yspec = fam.g[0].spec();
  const auto& fspec = fam.f[0].spec();
  const auto W = walsh_full_fast(sum.F, opt);
  std::vector<WalshSpectrum> wf;
  for (const auto& fi : fam.f) wf.push_back(walsh_full_fast(fi, opt));
  const auto unit = bent_value(p, k, yspec.dimension(), {sum.family.u_sign, 0});
  for (Index b = 0; b < yspec.size(); ++b) {
    const auto sd = sum.dual_selector[b];
    const auto head = unit.mul_root(static_cast<std::int64_t>(q * sum.family.duals[0][b] + fam.gsel[sd]));
    for (Index a = 0; a < fspec.size(); ++a) {
      const auto idx = DomainSpec::product_index(a, b, yspec.size());
      if (W[idx] != head * wf[sd][a]) r.violations.push_back(idx);
    }
  }
  return detail::finish(r, "closed form matches at all " + std::to_string(W.size()) + " points");
}

// F* bent iff the dual of every f_i selected by s* is bent.
inline PropertyReport check_indirect_sum_dual(const IndirectSumFamily& fam, const IndirectSum& sum,
                                              const TransformOptions& opt = {}) {
  PropertyReport r{"indirect sum dual bentness", CheckStatus::Inapplicable, "", {}};
  const auto Fc = analyze(sum.F, opt);
  if (!Fc.is_gbent) return r.detail = "F is not generalized bent", r;
  const bool lhs = analyze(dual(Fc), opt).is_gbent;
  bool rhs = true;
  for (std::size_t i = 0; i < fam.f.size(); ++i)
    if (sum.dual_selector_image[i]) rhs = rhs && analyze(dual(fam.f[i], opt), opt).is_gbent;
  r.status = lhs == rhs ? CheckStatus::Holds : CheckStatus::Violated;
  r.detail = std::string("F* bent: ") + (lhs ? "yes" : "no") + "; selected f_i* all bent: " + (rhs ? "yes" : "no");
  return r;
}

// ---------------------------------------------------------------------------
// Self-dual sums over F_{p^m} x F_{p^m}

struct SelfDualParams {
  ExtField field;
  FieldElem a;
  FieldElem alpha;
  FieldElem beta;
  std::vector<GFunction> f;      // f_i, i in F_p, on a common V_r
  std::vector<std::uint64_t> g;  // F_p -> Z_{p^k}
};

inline std::uint64_t selfdual_h(int which, const FieldElem& x) {
  switch (which) {
    case 1: return x.trace();
    case 2: return (x * x).trace();
    default: return (x * x * x * x).trace();
  }
}

namespace detail {

inline void validate_selfdual(int which, const SelfDualParams& P, const TransformOptions& opt) {
  if (which < 1 || which > 3) throw UsageError("case must be 1, 2 or 3");
  const auto& F = P.field;
  const auto p = F.p();
  const auto m = F.degree();
  for (const auto* e : {&P.a, &P.alpha, &P.beta})
    if (!(e->field() == F)) throw ConstructionError("a, alpha and beta must lie in the construction field");
  if (P.a.is_zero()) throw ConstructionError("a must be nonzero");
  if ((F.order() - 1) % 4 != 0) throw ConstructionError("4 must divide p^m - 1");
  const auto quarter = F.z_pow((F.order() - 1) / 4);
  for (const auto* e : {&P.alpha, &P.beta})
    if (!(*e == quarter) && !(*e == -quarter)) throw ConstructionError("alpha and beta must be +-z^((p^m-1)/4)");
  if (!(P.alpha * P.alpha == -F.one()) || !(P.beta * P.beta == -F.one()))
    throw ConstructionError("alpha^2 = beta^2 = -1 fails (z is not primitive)");
  if (P.f.size() != p) throw ConstructionError("need f_i for every i in F_p");
  const unsigned k = P.f[0].k();
  for (const auto& fi : P.f)
    if (!(fi.spec() == P.f[0].spec()) || fi.k() != k) throw ConstructionError("f_i must share one domain and k");
  check_table(P.g, p, ipow(p, k), "g");
  for (std::uint64_t i = 0; i < p; ++i)
    if (!is_self_dual(P.f[i], opt))
      throw ConstructionError("f_" + std::to_string(i) + " is not self-dual generalized bent");
  if (which == 1) {
    if (p % 4 != 1) throw ConstructionError("case 1 needs p = 1 mod 4");
    const auto b = P.beta.prime_value();
    if (!b) throw ConstructionError("case 1 needs beta in the prime field");
    // orbits of multiplication by beta on F_p
    for (std::uint64_t j = 0; j < p; ++j) {
      std::uint64_t i = j;
      do {
        if (!(P.f[i] == P.f[j]))
          throw ConstructionError("case 1 needs f_i = f_j when i = j beta^e (fails at i=" + std::to_string(i) +
                                  ", j=" + std::to_string(j) + ")");
        if (P.g[i] != P.g[j]) throw ConstructionError("case 1 needs g constant on beta-orbits");
        i = mulmod(i, *b, p);
      } while (i != j);
    }
  } else {
    if (p % 4 != 1 && m % 2 != 0) throw ConstructionError("cases 2 and 3 need p = 1 mod 4 or m even");
    if (which == 2)
      for (std::uint64_t i = 0; i < p; ++i) {
        if (!(P.f[i] == P.f[(p - i) % p]))
          throw ConstructionError("case 2 needs f_i = f_{-i} (fails at i=" + std::to_string(i) + ")");
        if (P.g[i] != P.g[(p - i) % p]) throw ConstructionError("case 2 needs g even");
      }
  }
}

}  // namespace detail

struct SelfDualSum {
  GFunction F;
  GFunction closed_form_dual;
};

// The selector y -> h(c) with c = a alpha y1 + a y2 (for F) or
// c = -beta (a alpha y1 + a y2) (for the closed-form dual).
inline SelfDualSum build_self_dual(int which, const SelfDualParams& P, const TransformOptions& opt = {}) {
  detail::validate_selfdual(which, P, opt);
  const auto& Fld = P.field;
  const auto p = Fld.p();
  const unsigned k = P.f[0].k();
  const auto q = ipow(p, k - 1);
  const DomainSpec yspec(p, {FieldBlock{Fld}, FieldBlock{Fld}});
  const auto& xspec = P.f[0].spec();
  std::vector<GFunction> fd;
  for (const auto& fi : P.f) fd.push_back(dual(fi, opt));
  const auto half_beta = P.beta * Fld.from_int(2).inv();
  const auto aa = P.a * P.alpha;
  const auto spec = xspec.product(yspec);
  std::vector<std::uint64_t> vals(spec.size()), dvals(spec.size());
  for (Index y1 = 0; y1 < Fld.order(); ++y1) {
    const auto e1 = Fld.element(y1);
    for (Index y2 = 0; y2 < Fld.order(); ++y2) {
      const auto e2 = Fld.element(y2);
      const auto c = aa * e1 + P.a * e2;
      const auto s = selfdual_h(which, c);
      const auto sd = selfdual_h(which, -P.beta * c);
      const auto g0 = (half_beta * (e1 * e1 + e2 * e2)).trace();
      const Index y = y1 * Fld.order() + y2;
      for (Index x = 0; x < xspec.size(); ++x) {
        const auto idx = DomainSpec::product_index(x, y, yspec.size());
        vals[idx] = (P.f[s][x] + q * g0 + P.g[s]) % (q * p);
        dvals[idx] = (fd[sd][x] + q * g0 + P.g[sd]) % (q * p);
      }
    }
  }
  return {GFunction(spec, k, std::move(vals)), GFunction(spec, k, std::move(dvals))};
}

// Directions u, v and points x1, x2 where the second derivative
// F(x+u+v) - F(x+u) - F(x+v) + F(x) takes different values.
struct NonQuadraticWitness {
  Index u = 0, v = 0, x1 = 0, x2 = 0;
};

// Searches unit directions only: if every second derivative along unit
// vectors is constant, every first derivative is affine and F is quadratic.

inline std::optional<NonQuadraticWitness> find_non_quadratic_witness(const GFunction& f) {
  const auto& d = f.spec();
  const auto M = static_cast<std::int64_t>(f.modulus());
  auto second = [&](Index x, Index u, Index v) {
    const std::int64_t s = static_cast<std::int64_t>(f[d.add(d.add(x, u), v)]) - static_cast<std::int64_t>(f[d.add(x, u)]) -
                           static_cast<std::int64_t>(f[d.add(x, v)]) + static_cast<std::int64_t>(f[x]);
    return mod(s, static_cast<std::uint64_t>(M));
  };
  std::vector<Index> units;
  for (unsigned t = 0; t < d.dimension(); ++t) units.push_back(ipow(d.p(), t));
  for (auto u : units)
    for (auto v : units) {
      const auto base = second(0, u, v);
      for (Index x = 1; x < f.size(); ++x)
        if (second(x, u, v) != base) return NonQuadraticWitness{u, v, 0, x};
    }
  return std::nullopt;
}

}  // namespace gbent
