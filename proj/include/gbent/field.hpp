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

// Arithmetic in F_p and F_{p^m} (p odd) over an explicit minimal polynomial.
//
// Elements are stored in power-basis coordinates {1, z, ..., z^{m-1}} where z
// is a root of the minimal polynomial. The element index used for enumeration
// is sum_u c_u p^u, i.e. the coordinate of 1 is the least significant digit.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbent/errors.hpp"
#include "gbent/util.hpp"

namespace gbent {

inline constexpr unsigned kMaxFieldDegree = 12;

namespace detail {

using Poly = std::vector<std::uint64_t>;  // low degree first, entries in [0, p)

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  // f monic
  poly_trim(a);
  const std::size_t m = f.size() - 1;
  while (a.size() > m) {
    const auto lead = a.back();
    const std::size_t shift = a.size() - 1 - m;
    for (std::size_t u = 0; u <= m; ++u)
      a[shift + u] = (a[shift + u] + (p - lead) * f[u]) % p;
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic, then reduce a by b
    const auto inv = inv_mod(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's irreducibility test for a monic polynomial of degree m >= 1.
inline bool poly_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  auto frob_power = [&](std::uint64_t times) {
    Poly x{0, 1};
    for (std::uint64_t i = 0; i < times; ++i) x = poly_powmod(x, p, f, p);
    return x;
  };
  Poly xpm = frob_power(m);
  Poly x = poly_mod(Poly{0, 1}, f, p);
  if (xpm != x) return false;
  for (auto r : prime_factors(m)) {
    Poly t = frob_power(m / r);
    t.resize(std::max<std::size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;
    Poly g = poly_gcd(f, t, p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct FieldData {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t order = 0;           // p^m
  std::vector<std::uint64_t> poly;   // c_0 .. c_m, c_m = 1
  std::array<std::uint64_t, kMaxFieldDegree> basis_trace{};  // Tr(z^u)
  bool primitive = false;
  std::vector<std::int8_t> eta_table;  // by element index, 0 at index 0
};

}  // namespace detail

class FieldElem;

// Immutable handle to F_{p^m}; cheap to copy and safe to share across threads.
class ExtField {
 public:
  ExtField() = default;

  // min_poly holds m+1 coefficients, constant term first, and must be monic
  // and irreducible. When require_primitive is set, z must generate F_{p^m}^*.
  ExtField(std::uint64_t p, std::vector<std::uint64_t> min_poly, bool require_primitive = false);

  // Comma-separated coefficient list, constant term first: "2,4,1".
  static ExtField parse(std::uint64_t p, std::string_view poly_text,
                        bool require_primitive = false) {
    std::vector<std::uint64_t> coeffs;
    for (auto tok : split(poly_text, ',')) {
      auto v = parse_int(tok);
      coeffs.push_back(mod(v, p == 0 ? 1 : p));
    }
    return ExtField(p, std::move(coeffs), require_primitive);
  }

  // F_p itself, presented as a degree-one extension generated by the
  // smallest primitive root g (minimal polynomial x - g).
  static ExtField prime_field(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime");
    const auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
      bool ok = true;
      for (auto r : factors) {
        std::uint64_t acc = 1, b = g, e = (p - 1) / r;
        while (e) {
          if (e & 1) acc = acc * b % p;
          b = b * b % p;
          e >>= 1;
        }
        if (acc == 1) ok = false;
      }
      if (ok) return ExtField(p, {p - g, 1}, true);
    }
    throw InvariantError("no primitive root found");
  }

  std::uint64_t p() const { return data_->p; }
  unsigned degree() const { return data_->m; }
  std::uint64_t order() const { return data_->order; }
  bool is_primitive() const { return data_->primitive; }
  std::span<const std::uint64_t> min_poly() const { return data_->poly; }

  std::string poly_string() const {
    std::string s;
    for (std::size_t u = 0; u < data_->poly.size(); ++u) {
      if (u) s += ',';
      s += std::to_string(data_->poly[u]);
    }
    return s;
  }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem z() const;
  FieldElem z_pow(std::uint64_t e) const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coords(std::span<const std::uint64_t> coords) const;
  FieldElem element(Index idx) const;

  bool operator==(const ExtField& other) const {
    return data_ == other.data_ ||
           (data_ && other.data_ && data_->p == other.data_->p &&
            data_->poly == other.data_->poly);
  }

  const detail::FieldData& data() const { return *data_; }
  bool valid() const { return data_ != nullptr; }

 private:
  std::shared_ptr<const detail::FieldData> data_;
  friend class FieldElem;
};

// Element of an ExtField. Value type; keeps its field alive.
class FieldElem {
 public:
  FieldElem() = default;

  const ExtField& field() const { return field_; }
  std::uint64_t coord(unsigned u) const { return coords_[u]; }
  std::span<const std::uint64_t> coords() const {
    return {coords_.data(), field_.degree()};
  }

  bool is_zero() const {
    for (unsigned u = 0; u < field_.degree(); ++u)
      if (coords_[u]) return false;
    return true;
  }

  Index index() const {
    Index idx = 0;
    for (unsigned u = field_.degree(); u-- > 0;) idx = idx * field_.p() + coords_[u];
    return idx;
  }

  // The F_p value of a prime-subfield element.
  std::optional<std::uint64_t> prime_value() const {
    for (unsigned u = 1; u < field_.degree(); ++u)
      if (coords_[u]) return std::nullopt;
    return coords_[0];
  }

  FieldElem operator+(const FieldElem& o) const {
    check_same(o);
    FieldElem r = *this;
    const auto p = field_.p();
    for (unsigned u = 0; u < field_.degree(); ++u) r.coords_[u] = (coords_[u] + o.coords_[u]) % p;
    return r;
  }

  FieldElem operator-() const {
    FieldElem r = *this;
    const auto p = field_.p();
    for (unsigned u = 0; u < field_.degree(); ++u) r.coords_[u] = (p - coords_[u]) % p;
    return r;
  }

  FieldElem operator-(const FieldElem& o) const { return *this + (-o); }

  FieldElem operator*(const FieldElem& o) const {
    check_same(o);
    const auto& d = field_.data();
    const unsigned m = d.m;
    const auto p = d.p;
    std::array<std::uint64_t, 2 * kMaxFieldDegree> prod{};
    for (unsigned i = 0; i < m; ++i) {
      if (!coords_[i]) continue;
      for (unsigned j = 0; j < m; ++j)
        prod[i + j] = (prod[i + j] + coords_[i] * o.coords_[j]) % p;
    }
    // z^m = -(c_0 + ... + c_{m-1} z^{m-1})
    for (unsigned deg = 2 * m - 2; deg >= m && deg < 2 * m; --deg) {
      const auto lead = prod[deg];
      if (!lead) continue;
      prod[deg] = 0;
      const unsigned shift = deg - m;
      for (unsigned u = 0; u < m; ++u)
        prod[shift + u] = (prod[shift + u] + (p - lead) * d.poly[u]) % p;
    }
    FieldElem r = *this;
    for (unsigned u = 0; u < m; ++u) r.coords_[u] = prod[u];
    return r;
  }

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  // Multiplication by an F_p scalar.
  FieldElem scaled(std::int64_t c) const {
    FieldElem r = *this;
    const auto p = field_.p();
    const auto s = mod(c, p);
    for (unsigned u = 0; u < field_.degree(); ++u) r.coords_[u] = coords_[u] * s % p;
    return r;
  }

  FieldElem pow(std::uint64_t e) const {
    FieldElem r = field_.one();
    FieldElem b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  FieldElem inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return pow(field_.order() - 2);
  }

  FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }

  // Absolute trace x + x^p + ... + x^{p^{m-1}}, evaluated through the
  // precomputed traces of the power basis.
  std::uint64_t trace() const {
    const auto& d = field_.data();
    std::uint64_t t = 0;
    for (unsigned u = 0; u < d.m; ++u) t = (t + coords_[u] * d.basis_trace[u]) % d.p;
    return t;
  }

  // +1 on nonzero squares, -1 on non-squares.
  int quad_character() const {
    if (is_zero()) throw DomainError("quadratic character of zero is undefined");
    const auto& d = field_.data();
    if (!d.eta_table.empty()) return d.eta_table[index()];
    return eta_by_power();
  }

  int eta_by_power() const {
    const auto r = pow((field_.order() - 1) / 2);
    if (r == field_.one()) return 1;
    if (r == -field_.one()) return -1;
    throw InvariantError("Euler criterion produced neither 1 nor -1");
  }

  bool operator==(const FieldElem& o) const {
    if (!(field_ == o.field_)) return false;
    for (unsigned u = 0; u < field_.degree(); ++u)
      if (coords_[u] != o.coords_[u]) return false;
    return true;
  }

 private:
  friend class ExtField;

  void check_same(const FieldElem& o) const {
    if (field_.data_ != o.field_.data_ && !(field_ == o.field_))
      throw UsageError("field elements belong to different fields");
  }

  ExtField field_;
  std::array<std::uint64_t, kMaxFieldDegree> coords_{};
};

inline std::uint64_t trace(const FieldElem& x) { return x.trace(); }
inline int quad_character(const FieldElem& x) { return x.quad_character(); }

inline FieldElem ExtField::zero() const {
  FieldElem e;
  e.field_ = *this;
  return e;
}

inline FieldElem ExtField::one() const { return from_int(1); }

inline FieldElem ExtField::from_int(std::int64_t v) const {
  FieldElem e = zero();
  e.coords_[0] = mod(v, p());
  return e;
}

inline FieldElem ExtField::z() const {
  if (degree() == 1) return from_int(static_cast<std::int64_t>(p() - data_->poly[0]));
  FieldElem e = zero();
  e.coords_[1] = 1;
  return e;
}

inline FieldElem ExtField::z_pow(std::uint64_t e) const { return z().pow(e); }

inline FieldElem ExtField::from_coords(std::span<const std::uint64_t> coords) const {
  if (coords.size() != degree())
    throw UsageError("expected " + std::to_string(degree()) + " coordinates");
  FieldElem e = zero();
  for (unsigned u = 0; u < degree(); ++u) e.coords_[u] = coords[u] % p();
  return e;
}

inline FieldElem ExtField::element(Index idx) const {
  if (idx >= order()) throw UsageError("element index out of range");
  FieldElem e = zero();
  for (unsigned u = 0; u < degree(); ++u) {
    e.coords_[u] = idx % p();
    idx /= p();
  }
  return e;
}

inline ExtField::ExtField(std::uint64_t p, std::vector<std::uint64_t> min_poly,
                          bool require_primitive) {
  if (p < 3 || !is_prime(p) || p > (1ull << 31)) throw UsageError("p must be an odd prime below 2^31");
  if (min_poly.size() < 2) throw UsageError("minimal polynomial must have degree >= 1");
  const auto m = static_cast<unsigned>(min_poly.size() - 1);
  if (m > kMaxFieldDegree)
    throw UsageError("extension degree " + std::to_string(m) + " exceeds " +
                     std::to_string(kMaxFieldDegree));
  for (auto& c : min_poly) c %= p;
  if (min_poly.back() != 1) throw UsageError("minimal polynomial must be monic");
  if (!detail::poly_irreducible(min_poly, p))
    throw UsageError("minimal polynomial is reducible over F_" + std::to_string(p));

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->order = ipow(p, m);
  if (d->order > (1ull << 40)) throw UsageError("field too large");
  d->poly = std::move(min_poly);
  data_ = d;

  // Traces of the basis by the defining sum of Frobenius images.
  for (unsigned u = 0; u < m; ++u) {
    FieldElem x = z_pow(u);
    FieldElem acc = zero();
    for (unsigned s = 0; s < m; ++s) {
      acc += x;
      x = x.pow(p);
    }
    auto v = acc.prime_value();
    if (!v) throw InvariantError("trace left the prime field");
    d->basis_trace[u] = *v;
  }

  const auto group = d->order - 1;
  const FieldElem gen = z();
  bool prim = !gen.is_zero() && gen.pow(group) == one();
  if (prim)
    for (auto r : prime_factors(group))
      if (gen.pow(group / r) == one()) prim = false;
  d->primitive = prim;
  if (require_primitive && !prim) throw UsageError("z is not a primitive element");

  if (d->order <= (1u << 14)) {
    std::vector<std::int8_t> table(d->order, 0);
    for (Index i = 1; i < d->order; ++i)
      table[i] = static_cast<std::int8_t>(element(i).eta_by_power());
    d->eta_table = std::move(table);
  }
}

}  // namespace gbent
