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

// Exact Walsh transform
//   W_f(a) = sum_x zeta_{p^k}^{f(x)} zeta_p^{-<a, x>}
// and its inverse
//   zeta_{p^k}^{f(x)} = p^{-n} sum_a W_f(a) zeta_p^{<a, x>}.
//
// The fast path works on the base-p digits of the index (the dot coordinates)
// and reads results at DomainSpec::dual_index, which turns every trace-form
// block into a dot product. Each of the n stages applies p^{n-1} radix-p
// butterflies y_t = sum_s x_s zeta_p^{-st}; the twiddles are roots of unity,
// so a butterfly only rotates extended coefficient vectors.

#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/domain.hpp"
#include "gbent/errors.hpp"
#include "gbent/function.hpp"
#include "gbent/util.hpp"

namespace gbent {

struct WalshSpectrum {
  DomainSpec spec;
  unsigned k = 1;
  std::vector<CycInt> values;

  std::uint64_t p() const { return spec.p(); }
  Index size() const { return values.size(); }
  const CycInt& operator[](Index a) const { return values[a]; }
};

struct TransformOptions {
  unsigned threads = default_threads();
};

namespace detail {

// In-place transform over the n base-p digits of a buffer holding one
// extended vector (length L = p^k, stride q = p^{k-1} between zeta_p powers)
// per index: out[w] = sum_v in[v] zeta_p^{direction * w.v}.
template <class T>
void radix_p_transform(std::vector<T>& buf, std::uint64_t p, unsigned n, std::uint64_t L,
                       int direction, unsigned threads) {
  const std::uint64_t q = L / p;
  const std::uint64_t groups = buf.size() / L / p;
  const std::uint64_t grain = std::max<std::uint64_t>(1, (1u << 16) / (p * p * L));
  std::uint64_t stride = 1;
  for (unsigned stage = 0; stage < n; ++stage, stride *= p) {
    parallel_ranges(groups, threads, grain, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<T> out(p * L);
      for (std::uint64_t g = lo; g < hi; ++g) {
        const std::uint64_t base = (g / stride) * stride * p + g % stride;
        std::fill(out.begin(), out.end(), T(0));
        for (std::uint64_t t = 0; t < p; ++t) {
          T* y = &out[t * L];
          for (std::uint64_t s = 0; s < p; ++s) {
            const T* x = &buf[(base + s * stride) * L];
            const auto twiddle = mod(direction * static_cast<std::int64_t>(s * t % p), p);
            const std::uint64_t r = twiddle * q;  // multiply by zeta_{p^k}^r
            for (std::uint64_t e = 0; e + r < L; ++e) y[e + r] += x[e];
            for (std::uint64_t e = L - r; e < L && r != 0; ++e) y[e + r - L] += x[e];
          }
        }
        for (std::uint64_t t = 0; t < p; ++t)
          std::copy(out.begin() + t * L, out.begin() + (t + 1) * L,
                    buf.begin() + (base + t * stride) * L);
      }
    });
  }
}

template <class T>
std::vector<CycInt> extended_to_values(const DomainSpec& spec, unsigned k, const std::vector<T>& buf,
                                       std::uint64_t L, unsigned threads) {
  std::vector<CycInt> out(spec.size());
  parallel_for(0, spec.size(), threads, [&](std::uint64_t a) {
    const auto w = spec.dual_index(a);
    out[a] = CycInt::from_extended<T>(spec.p(), k, std::span<const T>(&buf[w * L], L));
  });
  return out;
}

template <class T>
std::vector<CycInt> character_transform_impl(const DomainSpec& spec, unsigned k,
                                             std::span<const CycInt> in, int direction,
                                             unsigned threads) {
  const auto L = ipow(spec.p(), k);
  std::vector<T> buf(spec.size() * L, T(0));
  for (Index v = 0; v < spec.size(); ++v) {
    const auto c = in[v].coeffs();
    for (std::uint64_t t = 0; t < c.size(); ++t) buf[v * L + t] = static_cast<T>(c[t]);
  }
  radix_p_transform(buf, spec.p(), spec.dimension(), L, direction, threads);
  return extended_to_values(spec, k, buf, L, threads);
}

}  // namespace detail

// out(x) = sum_a in(a) zeta_p^{direction * <a, x>} for a table of ring elements.
// Uses 64-bit accumulators when the worst-case coefficient growth provably
// fits, arbitrary precision otherwise.
inline std::vector<CycInt> character_transform(const DomainSpec& spec, unsigned k,
                                               std::span<const CycInt> in, int direction,
                                               const TransformOptions& opt = {}) {
  if (in.size() != spec.size()) throw UsageError("table size does not match domain");
  BigInt bound = 0;
  for (const auto& c : in) {
    if (c.p() != spec.p() || c.k() != k) throw UsageError("table entry from the wrong ring");
    for (const auto& v : c.coeffs()) bound = std::max(bound, BigInt(abs(v)));
  }
  // every output coefficient is a sum of p^n inputs, each entering with |coefficient| <= bound
  if (bound * spec.size() < BigInt(std::numeric_limits<std::int64_t>::max() / 2))
    return detail::character_transform_impl<std::int64_t>(spec, k, in, direction, opt.threads);
  return detail::character_transform_impl<BigInt>(spec, k, in, direction, opt.threads);
}

// Reference sum over all x, with the inner product evaluated directly on
// points. One value per requested a.
inline std::vector<CycInt> walsh_naive(const GFunction& f, std::span<const Index> points) {
  const auto& spec = f.spec();
  const auto L = f.modulus();
  const auto q = L / f.p();
  std::vector<Point> xs;
  xs.reserve(f.size());
  for (Index x = 0; x < f.size(); ++x) xs.push_back(spec.point(x));
  std::vector<CycInt> out;
  out.reserve(points.size());
  std::vector<std::int64_t> ext(L);
  for (auto a : points) {
    const Point pa = spec.point(a);
    std::fill(ext.begin(), ext.end(), 0);
    for (Index x = 0; x < f.size(); ++x) {
      const auto ip = spec.inner_product(pa, xs[x]);
      ext[(f[x] + (f.p() - ip) % f.p() * q) % L] += 1;
    }
    out.push_back(CycInt::from_extended<std::int64_t>(f.p(), f.k(), ext));
  }
  return out;
}

inline CycInt walsh_naive(const GFunction& f, Index a) {
  const Index pts[] = {a};
  return walsh_naive(f, pts)[0];
}

inline WalshSpectrum walsh_full_fast(const GFunction& f, const TransformOptions& opt = {}) {
  const auto& spec = f.spec();
  const auto L = f.modulus();
  // |coefficients| never exceed p^n: every entry is a sum of p^n roots of unity
  std::vector<std::int64_t> buf(spec.size() * L, 0);
  for (Index x = 0; x < f.size(); ++x) buf[x * L + f[x]] = 1;
  detail::radix_p_transform(buf, f.p(), spec.dimension(), L, -1, opt.threads);
  return WalshSpectrum{spec, f.k(), detail::extended_to_values(spec, f.k(), buf, L, opt.threads)};
}

// sum_a |W(a)|^2 as a rational integer.
inline BigInt parseval_sum(const WalshSpectrum& w) {
  CycInt acc(w.p(), w.k);
  for (const auto& v : w.values) acc += mag_sq(v);
  auto s = acc.as_integer();
  if (!s) throw InvariantError("sum of squared magnitudes is not rational");
  return *s;
}

inline bool parseval_holds(const WalshSpectrum& w) {
  return parseval_sum(w) == boost::multiprecision::pow(BigInt(w.p()), 2 * w.spec.dimension());
}

// Recovers f from its spectrum; throws SpectrumError when some
// p^{-n} sum_a W(a) zeta_p^{<a,x>} is not a root of unity.
inline GFunction inverse_walsh(const WalshSpectrum& w, const TransformOptions& opt = {}) {
  if (w.values.size() != w.spec.size()) throw UsageError("spectrum size does not match domain");
  const auto sums = character_transform(w.spec, w.k, w.values, +1, opt);
  const BigInt scale = boost::multiprecision::pow(BigInt(w.p()), w.spec.dimension());
  std::vector<std::uint64_t> vals(w.spec.size());
  for (Index x = 0; x < w.spec.size(); ++x) {
    auto r = sums[x].divide_exact(scale);
    auto root = r ? r->as_signed_root() : std::nullopt;
    if (!root || root->sign != 1)
      throw SpectrumError("not a valid spectrum: inverse transform at index " + std::to_string(x) +
                          " is not p^n times a root of unity");
    vals[x] = root->exponent;
  }
  return GFunction(w.spec, w.k, std::move(vals));
}

// One line per point: the index, then the rank coefficients in (i, j) order.
inline void write_spectrum(std::ostream& out, const WalshSpectrum& w) {
  for (Index a = 0; a < w.size(); ++a) {
    out << a;
    for (const auto& c : w.values[a].coeffs()) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace gbent
