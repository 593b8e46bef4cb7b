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

// Acceptance run: one line per criterion, each with a fixed wall-clock limit.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gbent/analysis.hpp"
#include "gbent/constructions.hpp"
#include "gbent/presets.hpp"
#include "gbent/verification.hpp"
#include "gbent/walsh.hpp"

namespace {

using namespace gbent;

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no time limit, exactness only
  std::function<Outcome()> check;
};

Outcome from_item(const std::string& item) {
  const auto v = verify_item(item, {default_threads()}, kSeed);
  std::string detail;
  for (const auto& c : v.claims)
    if (!c.ok) detail += (detail.empty() ? "failed: " : "; ") + c.what;
  if (detail.empty()) detail = std::to_string(v.claims.size()) + " claims hold";
  return {v.passed(), detail};
}

// Seeded random tables on plain and field-block domains.
std::vector<GFunction> random_functions() {
  struct Shape {
    std::uint64_t p;
    const char* domain;
    unsigned k;
  };
  const std::vector<Shape> shapes = {
      {3, "dot:1", 1}, {3, "dot:1", 2}, {3, "dot:2", 1}, {3, "dot:2", 2}, {3, "dot:3", 1},
      {3, "dot:3", 2}, {3, "dot:4", 1}, {3, "dot:4", 2}, {3, "field:2:poly=2,2,1", 2}, {3, "field:3:poly=1,2,0,1", 1},
      {3, "field:2:poly=2,2,1,dot:2", 2}, {3, "field:4:poly=2,0,0,1,1", 2}, {5, "dot:1", 1}, {5, "dot:1", 2},
      {5, "dot:2", 1}, {5, "dot:2", 2}, {5, "dot:3", 1}, {5, "dot:3", 2}, {5, "field:2:poly=2,4,1", 2},
      {5, "field:2:poly=2,4,1,dot:1", 2}};
  std::mt19937_64 rng(kSeed);
  std::vector<GFunction> out;
  for (const auto& s : shapes) {
    const auto d = DomainSpec::parse(s.p, s.domain);
    const auto modulus = ipow(s.p, s.k);
    out.push_back(GFunction::tabulate(d, s.k, [&](Index) { return rng() % modulus; }));
  }
  return out;
}

std::vector<GFunction> bent_instances() {
  std::vector<GFunction> out = {presets::quadratic_plus_linear(),
                                build_quadratic_twist(presets::twist_dual_not_bent()),
                                build_quadratic_twist(presets::twist_dual_bent()),
                                build_quadratic_twist(presets::twist_swapped()),
                                build_self_dual(3, presets::selfdual_quartic_p5()).F,
                                presets::cubic_field_nonweakly_regular(),
                                mm_gbent(5, 2, parse_table("pow:3", 5, 25))};
  const auto F = ExtField::parse(3, "2,2,1", true);
  out.push_back(quadratic_bent(F.z_pow(3)).f);
  return out;
}

Outcome oracle_equivalence() {
  std::size_t points = 0;
  for (const auto& f : random_functions()) {
    const auto fast = walsh_full_fast(f, {default_threads()});
    std::vector<Index> all(f.size());
    for (Index a = 0; a < f.size(); ++a) all[a] = a;
    const auto naive = walsh_naive(f, all);
    for (Index a = 0; a < f.size(); ++a)
      if (!(fast[a] == naive[a]))
        return {false, "mismatch on " + f.spec().to_string() + " k=" + std::to_string(f.k()) + " at " + std::to_string(a)};
    points += f.size();
  }
  return {true, "20 functions, " + std::to_string(points) + " points agree exactly"};
}

Outcome property_suite() {
  const TransformOptions opt{default_threads()};
  std::size_t checked = 0;
  auto all = random_functions();
  const auto bent = bent_instances();
  all.insert(all.end(), bent.begin(), bent.end());
  for (const auto& f : all) {
    const auto w = walsh_full_fast(f, opt);
    if (!parseval_holds(w)) return {false, "Parseval fails on " + f.spec().to_string()};
    if (!(inverse_walsh(w, opt) == f)) return {false, "inverse round trip fails on " + f.spec().to_string()};
    ++checked;
  }
  for (const auto& f : bent) {
    const auto r = check_inversion_identity(f, opt);
    if (!r.holds()) return {false, "inversion identity: " + r.detail + " on " + f.spec().to_string()};
  }
  std::mt19937_64 rng(kSeed);
  const std::vector<std::pair<std::uint64_t, const char*>> fields = {
      {3, "2,2,1"}, {3, "1,2,0,1"}, {5, "2,4,1"}, {7, "3,6,1"}, {3, "2,0,0,1,1"}};
  for (const auto& [p, poly] : fields) {
    const auto F = ExtField::parse(p, poly);
    for (int i = 0; i < 10; ++i) {
      const auto alpha = F.element(1 + rng() % (F.order() - 1));
      const auto qb = quadratic_bent(alpha);
      const auto closed = quadratic_walsh_closed_form(qb);
      std::vector<Index> pts(qb.f.size());
      for (Index a = 0; a < qb.f.size(); ++a) pts[a] = a;
      if (closed != walsh_naive(qb.f, pts))
        return {false, "quadratic closed form differs over F_" + std::to_string(F.order())};
    }
  }
  return {true, std::to_string(checked) + " functions (Parseval, round trip), " + std::to_string(bent.size()) +
                    " bent instances (inversion identity), 50 quadratic forms"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dual of 5(x1^2+x2^2) + (2x1+x2 mod 5) over F_5^2", 1, [] { return from_item("6"); }},
      {2, "twist p=5 k=3: bent, non-weakly regular, dual not bent", 5, [] { return from_item("1"); }},
      {3, "twist p=3 k=2: dual bent, eta signs, f**(x)=f(-x)", 30, [] { return from_item("2"); }},
      {4, "quartic-selector self-dual sum over F_5^3", 5, [] { return from_item("3"); }},
      {5, "square-selector self-dual sum over F_49^3, not quadratic", 120, [] { return from_item("4"); }},
      {6, "swapped twist: components and dual components", 60, [] { return from_item("5"); }},
      {7, "Tr(x^22+x^8) over F_27 bent, non-weakly regular, not self-dual", 1, [] { return from_item("g3"); }},
      {8, "no self-dual function F_3 -> Z_3 or Z_9", 10, [] { return from_item("thm4"); }},
      {9, "fast transform equals direct sums on 20 seeded functions", 0, oracle_equivalence},
      {10, "Parseval, inverse round trip, inversion identity, quadratic closed form", 0, property_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::ostringstream limit;
    limit << std::fixed << std::setprecision(3) << secs << "s";
    if (c.limit_seconds > 0) limit << " / " << c.limit_seconds << "s";
    std::cout << "criterion " << std::setw(2) << c.number << ": " << (pass ? "PASS" : "FAIL") << "  [" << limit.str()
              << "]  " << c.title << " -- " << (in_time ? o.detail : o.detail + "; over the time limit") << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << std::endl;
  return failed ? 1 : 0;
}
