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

// Value tables f: V_n -> Z_{p^k}, the base-p digit decomposition
//   f = sum_{i=0}^{k-1} f_i p^{k-1-i}    (f_0 is the most significant digit)
// and the function-table text format:
//   line 1: "p k"
//   line 2: the domain string (see DomainSpec::parse)
//   then p^n whitespace-separated values in canonical enumeration order.

#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <mutex>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "gbent/domain.hpp"
#include "gbent/errors.hpp"
#include "gbent/util.hpp"

namespace gbent {

// Digits of a function: digits[i] is f_i, tail is sum_{i>=1} f_i p^{k-1-i}.
struct Decomposition {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<std::vector<std::uint64_t>> digits;
  std::vector<std::uint64_t> tail;
};

class GFunction {
 public:
  GFunction() = default;

  GFunction(DomainSpec spec, unsigned k, std::vector<std::uint64_t> values)
      : spec_(std::move(spec)), k_(k), values_(std::move(values)) {
    if (k < 1) throw UsageError("k must be at least 1");
    modulus_ = ipow(spec_.p(), k);
    if (values_.size() != spec_.size())
      throw UsageError("value table has " + std::to_string(values_.size()) + " entries, domain has " +
                       std::to_string(spec_.size()));
    for (auto v : values_)
      if (v >= modulus_) throw UsageError("value " + std::to_string(v) + " not reduced mod p^k");
  }

  // Tabulates fn(index), reducing each result mod p^k.
  template <class Fn>
  static GFunction tabulate(const DomainSpec& spec, unsigned k, Fn&& fn) {
    const auto m = ipow(spec.p(), k);
    std::vector<std::uint64_t> vals(spec.size());
    for (Index i = 0; i < spec.size(); ++i) vals[i] = mod(static_cast<std::int64_t>(fn(i)), m);
    return GFunction(spec, k, std::move(vals));
  }

  std::uint64_t p() const { return spec_.p(); }
  unsigned k() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }
  unsigned dimension() const { return spec_.dimension(); }
  const DomainSpec& spec() const { return spec_; }
  Index size() const { return values_.size(); }
  std::span<const std::uint64_t> values() const { return values_; }
  std::uint64_t operator[](Index x) const { return values_[x]; }

  bool operator==(const GFunction& o) const {
    return k_ == o.k_ && spec_ == o.spec_ && values_ == o.values_;
  }

  // Digit decomposition, computed once and shared between copies.
  const Decomposition& decomposition() const {
    std::call_once(cache_->once, [this] { cache_->value = compute_decomposition(); });
    return cache_->value;
  }

 private:
  struct Cache {
    std::once_flag once;
    Decomposition value;
  };

  Decomposition compute_decomposition() const {
    Decomposition d;
    d.p = p();
    d.k = k_;
    d.digits.assign(k_, std::vector<std::uint64_t>(size()));
    d.tail.assign(size(), 0);
    const auto tail_mod = modulus_ / p();
    for (Index x = 0; x < size(); ++x) {
      auto v = values_[x];
      d.tail[x] = v % tail_mod;
      for (unsigned i = k_; i-- > 0;) {
        d.digits[i][x] = v % p();
        v /= p();
      }
    }
    return d;
  }

  DomainSpec spec_;
  unsigned k_ = 0;
  std::uint64_t modulus_ = 0;
  std::vector<std::uint64_t> values_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline const Decomposition& decompose(const GFunction& f) { return f.decomposition(); }

// Inverse of decompose: k digit tables, most significant first.
inline GFunction compose(const DomainSpec& spec, std::span<const std::vector<std::uint64_t>> digits) {
  if (digits.empty()) throw UsageError("compose needs at least one digit table");
  const auto p = spec.p();
  std::vector<std::uint64_t> vals(spec.size(), 0);
  for (const auto& table : digits) {
    if (table.size() != spec.size()) throw UsageError("digit table size does not match domain");
    for (Index x = 0; x < spec.size(); ++x) {
      if (table[x] >= p) throw UsageError("digit value " + std::to_string(table[x]) + " is not in F_p");
      vals[x] = vals[x] * p + table[x];
    }
  }
  return GFunction(spec, static_cast<unsigned>(digits.size()), std::move(vals));
}

// p^{k_target - 1} * f0 for a p-ary f0.
inline GFunction embed_bent(const GFunction& f0, unsigned k_target) {
  if (f0.k() != 1) throw UsageError("embed_bent expects a p-ary function (k = 1)");
  if (k_target < 1) throw UsageError("k_target must be at least 1");
  const auto scale = ipow(f0.p(), k_target - 1);
  return GFunction::tabulate(f0.spec(), k_target,
                             [&](Index x) { return static_cast<std::int64_t>(f0[x] * scale); });
}

inline void write_function(std::ostream& out, const GFunction& f) {
  out << f.p() << ' ' << f.k() << '\n' << f.spec().to_string() << '\n';
  const auto per_line = f.p();
  for (Index x = 0; x < f.size(); ++x) {
    out << f[x];
    out << ((x + 1) % per_line == 0 || x + 1 == f.size() ? '\n' : ' ');
  }
}

inline std::string to_text(const GFunction& f) {
  std::ostringstream s;
  write_function(s, f);
  return s.str();
}

inline GFunction read_function(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(std::string("missing ") + what, lineno + 1);
    ++lineno;
  };
  next_line("header 'p k'");
  std::istringstream header(line);
  std::int64_t p = 0, k = 0;
  std::string extra;
  if (!(header >> p >> k) || (header >> extra)) throw ParseError("header must read 'p k'", lineno);
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw ParseError("p must be an odd prime", lineno);
  if (k < 1 || k > 30) throw ParseError("k out of range", lineno);
  next_line("domain line");
  DomainSpec spec;
  try {
    spec = DomainSpec::parse(static_cast<std::uint64_t>(p), line);
  } catch (const Error& e) {
    throw ParseError(e.what(), lineno);
  }
  const auto modulus = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
  std::vector<std::uint64_t> vals;
  vals.reserve(spec.size());
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      const auto v = parse_int(tok, lineno);
      if (v < 0 || static_cast<std::uint64_t>(v) >= modulus)
        throw ParseError("value " + tok + " outside [0, p^k)", lineno);
      if (vals.size() == spec.size()) throw ParseError("more than p^n values", lineno);
      vals.push_back(static_cast<std::uint64_t>(v));
    }
  }
  if (vals.size() != spec.size())
    throw ParseError("expected " + std::to_string(spec.size()) + " values, found " +
                         std::to_string(vals.size()),
                     lineno);
  return GFunction(std::move(spec), static_cast<unsigned>(k), std::move(vals));
}

inline GFunction from_text(const std::string& text) {
  std::istringstream s(text);
  return read_function(s);
}

inline GFunction load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_function(in);
}

inline void save_function(const std::string& path, const GFunction& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_function(out, f);
}

}  // namespace gbent
