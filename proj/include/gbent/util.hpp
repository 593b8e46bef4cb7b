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

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gbent/errors.hpp"

namespace gbent {

using Index = std::uint64_t;

inline std::uint64_t mod(std::int64_t a, std::uint64_t m) {
  auto r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

// Integer power with overflow detection.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw UsageError("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int(std::string_view s, std::size_t line = 0) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return v;
}

// Threads to use when the caller asks for "all of them".
inline unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into contiguous ranges of at least `grain` items, at
// most one per thread, and runs body(lo, hi) on each concurrently. The first
// exception raised by any worker is rethrown after all workers join.
inline void parallel_ranges(std::uint64_t count, unsigned threads, std::uint64_t grain,
                            const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (count == 0) return;
  const std::uint64_t by_grain = std::max<std::uint64_t>(1, count / std::max<std::uint64_t>(1, grain));
  const std::uint64_t workers = std::min<std::uint64_t>({std::max(1u, threads), count, by_grain});
  if (workers == 1) {
    body(0, count);
    return;
  }
  std::mutex guard;
  std::exception_ptr failure;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const auto lo = w * chunk;
      const auto hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([lo, hi, &body, &guard, &failure] {
        try {
          body(lo, hi);
        } catch (...) {
          std::lock_guard lock(guard);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Runs body(i) for i in [begin, end); body must be safe to call concurrently
// for distinct i. Small ranges run on the calling thread.
inline void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                         const std::function<void(std::uint64_t)>& body, std::uint64_t grain = 256) {
  if (end <= begin) return;
  parallel_ranges(end - begin, threads, grain, [&](std::uint64_t lo, std::uint64_t hi) {
    for (auto i = lo; i < hi; ++i) body(begin + i);
  });
}

}  // namespace gbent
