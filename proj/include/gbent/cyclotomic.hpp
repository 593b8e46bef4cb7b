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

// Exact arithmetic in Z[zeta_{p^k}] over the integral basis
//   { zeta_p^i * zeta_{p^k}^j : 0 <= i <= p-2, 0 <= j <= p^{k-1}-1 }.
//
// Reduction uses zeta_{p^k}^{p^{k-1}} = zeta_p and 1 + zeta_p + ... + zeta_p^{p-1} = 0:
// writing an exponent e of zeta_{p^k} as e = i*p^{k-1} + j, the monomial is a
// basis element when i <= p-2, and minus the sum of the p-1 basis elements
// sharing j when i = p-1.
//
// Internally many routines accumulate in the "extended" layout: one slot per
// exponent e in Z_{p^k}. Multiplying by a root of unity is a rotation there,
// and the canonical coefficient at (i, j) is ext[i*q + j] - ext[(p-1)*q + j].

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbent/errors.hpp"
#include "gbent/util.hpp"

namespace gbent {

using BigInt = boost::multiprecision::cpp_int;

// i^e, the fourth roots of unity. Used for xi and mu.
struct QuarticUnit {
  unsigned e = 0;

  static QuarticUnit from_sign(int s) { return {s < 0 ? 2u : 0u}; }
  QuarticUnit operator*(QuarticUnit o) const { return {(e + o.e) % 4}; }
  QuarticUnit inverse() const { return {(4 - e) % 4}; }
  bool operator==(const QuarticUnit&) const = default;
  bool is_real() const { return e % 2 == 0; }

  std::string to_string() const {
    static const char* names[] = {"1", "i", "-1", "-i"};
    return names[e % 4];
  }
};

// xi of the bent Walsh shape: i when p = 3 (mod 4) and n is odd, 1 otherwise.
inline QuarticUnit xi_for(std::uint64_t p, unsigned n) {
  return {(p % 4 == 3 && n % 2 == 1) ? 1u : 0u};
}

// sign * zeta_{p^k}^exponent
struct SignedRoot {
  int sign = 1;
  std::uint64_t exponent = 0;
  bool operator==(const SignedRoot&) const = default;
};

class CycInt {
 public:
  CycInt() = default;

  CycInt(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime");
    if (k < 1) throw UsageError("k must be at least 1");
    q_ = ipow(p, k - 1);
    modulus_ = q_ * p;
    coeffs_.assign((p - 1) * q_, BigInt(0));
  }

  static CycInt integer(std::uint64_t p, unsigned k, const BigInt& v) {
    CycInt r(p, k);
    // 1 = zeta_p^0 zeta_{p^k}^0 is basis element (0, 0)
    r.coeffs_[0] = v;
    return r;
  }

  // coeff * zeta_{p^k}^e
  static CycInt root(std::uint64_t p, unsigned k, std::int64_t e, const BigInt& coeff = 1) {
    CycInt r(p, k);
    r.add_root(mod(e, r.modulus_), coeff);
    return r;
  }

  // zeta_p^e embedded in Z[zeta_{p^k}].
  static CycInt zeta_p_power(std::uint64_t p, unsigned k, std::int64_t e) {
    CycInt r(p, k);
    r.add_root(mod(e, p) * r.q_, 1);
    return r;
  }

  template <class T>
  static CycInt from_extended(std::uint64_t p, unsigned k, std::span<const T> ext) {
    CycInt r(p, k);
    if (ext.size() != r.modulus_) throw UsageError("extended table has wrong length");
    const auto q = r.q_;
    for (std::uint64_t i = 0; i + 1 < p; ++i)
      for (std::uint64_t j = 0; j < q; ++j)
        r.coeffs_[i * q + j] = BigInt(ext[i * q + j]) - BigInt(ext[(p - 1) * q + j]);
    return r;
  }

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t rank() const { return coeffs_.size(); }
  const BigInt& coeff(std::uint64_t i, std::uint64_t j) const { return coeffs_[i * q_ + j]; }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  bool same_ring(const CycInt& o) const { return p_ == o.p_ && k_ == o.k_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  // The rational integer this element equals, if it is one.
  std::optional<BigInt> as_integer() const {
    for (std::size_t t = 1; t < coeffs_.size(); ++t)
      if (coeffs_[t] != 0) return std::nullopt;
    return coeffs_.empty() ? BigInt(0) : coeffs_[0];
  }

  // Adds coeff * zeta_{p^k}^e for e in [0, p^k).
  void add_root(std::uint64_t e, const BigInt& coeff) {
    const auto i = e / q_, j = e % q_;
    if (i + 1 < p_) {
      coeffs_[i * q_ + j] += coeff;
    } else {
      for (std::uint64_t t = 0; t + 1 < p_; ++t) coeffs_[t * q_ + j] -= coeff;
    }
  }

  CycInt operator+(const CycInt& o) const {
    check(o);
    CycInt r = *this;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) r.coeffs_[t] += o.coeffs_[t];
    return r;
  }

  CycInt operator-() const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  CycInt operator-(const CycInt& o) const { return *this + (-o); }

  CycInt operator*(const CycInt& o) const {
    check(o);
    std::vector<BigInt> ext(modulus_, BigInt(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
      if (coeffs_[a] == 0) continue;
      const auto ea = exponent_of(a);
      for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
        if (o.coeffs_[b] == 0) continue;
        ext[(ea + o.exponent_of(b)) % modulus_] += coeffs_[a] * o.coeffs_[b];
      }
    }
    return from_extended<BigInt>(p_, k_, ext);
  }

  CycInt operator*(const BigInt& s) const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }

  // Multiplication by zeta_{p^k}^e: a rotation of the extended layout.
  CycInt mul_root(std::int64_t e) const {
    const auto shift = mod(e, modulus_);
    CycInt r(p_, k_);
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
      if (coeffs_[a] != 0) r.add_root((exponent_of(a) + shift) % modulus_, coeffs_[a]);
    return r;
  }

  // Exact division by a nonzero rational integer.
  std::optional<CycInt> divide_exact(const BigInt& d) const {
    if (d == 0) throw DomainError("division by zero");
    CycInt r = *this;
    for (auto& c : r.coeffs_) {
      if (c % d != 0) return std::nullopt;
      c /= d;
    }
    return r;
  }

  // If the element is +-zeta_{p^k}^e, returns the sign and e.
  std::optional<SignedRoot> as_signed_root() const {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      if (coeffs_[t] != 0) {
        ++nonzero;
        where = t;
      }
    if (nonzero == 1) {
      const auto& c = coeffs_[where];
      if (c == 1 || c == -1) return SignedRoot{c == 1 ? 1 : -1, exponent_of(where)};
      return std::nullopt;
    }
    // zeta_p^{p-1} zeta_{p^k}^j = -(sum over i <= p-2 of the (i, j) basis elements)
    if (nonzero != p_ - 1) return std::nullopt;
    const auto j = where % q_;
    const BigInt& c = coeffs_[j];
    if (c != 1 && c != -1) return std::nullopt;
    for (std::uint64_t i = 0; i + 1 < p_; ++i)
      if (coeffs_[i * q_ + j] != c) return std::nullopt;
    return SignedRoot{c == 1 ? -1 : 1, (p_ - 1) * q_ + j};
  }

  bool operator==(const CycInt& o) const {
    return p_ == o.p_ && k_ == o.k_ && coeffs_ == o.coeffs_;
  }

  // Formal sum "c·ζp^i·ζq^j" of the nonzero terms, sorted by (i, j).
  std::string to_string() const {
    std::string s;
    const auto zp = "ζ" + std::to_string(p_);
    const auto zq = "ζ" + std::to_string(modulus_);
    for (std::uint64_t t = 0; t < coeffs_.size(); ++t) {
      if (coeffs_[t] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[t].str() + "·" + zp + "^" + std::to_string(t / q_) + "·" + zq + "^" +
           std::to_string(t % q_);
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::uint64_t exponent_of(std::size_t flat) const { return flat; }

  void check(const CycInt& o) const {
    if (!same_ring(o))
      throw UsageError("cyclotomic integers from different rings (p, k)");
  }

  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;        // p^{k-1}
  std::uint64_t modulus_ = 0;  // p^k
  std::vector<BigInt> coeffs_;
};

// Complex conjugation zeta -> zeta^{-1}.
inline CycInt conj(const CycInt& a) {
  CycInt r(a.p(), a.k());
  const auto q = a.modulus() / a.p();
  for (std::uint64_t t = 0; t < a.rank(); ++t) {
    const auto& c = a.coeffs()[t];
    if (c != 0) r.add_root((a.modulus() - (t / q) * q - t % q) % a.modulus(), c);
  }
  return r;
}

// a * conj(a), i.e. |a|^2.
inline CycInt mag_sq(const CycInt& a) { return a * conj(a); }

// Legendre symbol of i modulo the odd prime p, i != 0 (mod p).
inline int legendre(std::uint64_t i, std::uint64_t p) {
  std::uint64_t r = 1, b = i % p, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// Quadratic Gauss sum sum_{i=1}^{p-1} eta(i) zeta_p^i = xi * sqrt(p), embedded
// in Z[zeta_{p^k}].
inline CycInt gauss_sum(std::uint64_t p, unsigned k = 1) {
  CycInt g(p, k);
  const auto q = g.modulus() / p;
  for (std::uint64_t i = 1; i < p; ++i) g.add_root(i * q, legendre(i, p));
  return g;
}

// epsilon and dual value of a bent-shaped Walsh coefficient.
struct BentValue {
  int epsilon = 1;
  std::uint64_t dual = 0;
  bool operator==(const BentValue&) const = default;
};

// The exact value epsilon * xi * p^{n/2} * zeta_{p^k}^c.
inline CycInt bent_value(std::uint64_t p, unsigned k, unsigned n, BentValue v) {
  const BigInt scale = boost::multiprecision::pow(BigInt(p), n / 2);
  CycInt base = CycInt::root(p, k, static_cast<std::int64_t>(v.dual), scale * v.epsilon);
  // xi * sqrt(p) is the Gauss sum
  return n % 2 == 1 ? base * gauss_sum(p, k) : base;
}

// Recognizes W = epsilon * xi * p^{n/2} * zeta_{p^k}^c. For odd n the test is
// run on W * gauss_sum(p) = epsilon * xi^2 * p^{(n+1)/2} * zeta^c, which lives in
// the ring.
inline std::optional<BentValue> recognize_bent_value(const CycInt& w, unsigned n) {
  const auto p = w.p();
  if (n % 2 == 0) {
    auto scaled = w.divide_exact(boost::multiprecision::pow(BigInt(p), n / 2));
    if (!scaled) return std::nullopt;
    auto root = scaled->as_signed_root();
    if (!root) return std::nullopt;
    return BentValue{root->sign, root->exponent};
  }
  const CycInt rationalized = w * gauss_sum(p, w.k());
  auto scaled = rationalized.divide_exact(boost::multiprecision::pow(BigInt(p), (n + 1) / 2));
  if (!scaled) return std::nullopt;
  auto root = scaled->as_signed_root();
  if (!root) return std::nullopt;
  // xi^2 = -1 exactly when p = 3 (mod 4)
  const int eps = p % 4 == 3 ? -root->sign : root->sign;
  return BentValue{eps, root->exponent};
}

}  // namespace gbent
