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

#include "gbent/walsh.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <random>

namespace gbent {
namespace {

GFunction random_function(const DomainSpec& d, unsigned k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto modulus = ipow(d.p(), k);
  return GFunction::tabulate(d, k, [&](Index) { return rng() % modulus; });
}

struct Case {
  std::uint64_t p;
  unsigned k;
  std::string domain;
};

std::string CaseName(const ::testing::TestParamInfo<Case>& info) {
  std::string s = "p" + std::to_string(info.param.p) + "k" + std::to_string(info.param.k) + "_" + info.param.domain;
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  return s;
}

class WalshCases : public ::testing::TestWithParam<Case> {};

TEST_P(WalshCases, FastMatchesNaiveEverywhere) {
  const auto& c = GetParam();
  const auto d = DomainSpec::parse(c.p, c.domain);
  const auto f = random_function(d, c.k, 42);
  const auto fast = walsh_full_fast(f, {1});
  std::vector<Index> all(d.size());
  for (Index a = 0; a < d.size(); ++a) all[a] = a;
  const auto naive = walsh_naive(f, all);
  for (Index a = 0; a < d.size(); ++a) EXPECT_EQ(fast[a], naive[a]) << "a=" << a;
  EXPECT_TRUE(parseval_holds(fast));
  EXPECT_EQ(inverse_walsh(fast), f);
  // threaded run gives the same spectrum
  const auto threaded = walsh_full_fast(f, {4});
  EXPECT_EQ(threaded.values, fast.values);
}

INSTANTIATE_TEST_SUITE_P(Domains, WalshCases,
                         ::testing::Values(Case{3, 1, "dot:2"}, Case{3, 2, "dot:3"}, Case{5, 2, "dot:2"},
                                           Case{5, 2, "field:2:poly=2,4,1,dot:1"},
                                           Case{3, 3, "field:3:poly=1,2,0,1"},
                                           Case{7, 1, "field:2:poly=3,6,1"},
                                           Case{5, 2, "dot:1,field:1:poly=3,1,field:1:poly=3,1"}), CaseName);

TEST(Walsh, ConstantFunctionConcentratesAtZero) {
  const auto d = DomainSpec::dot(3, 3);
  const auto f = GFunction(d, 2, std::vector<std::uint64_t>(27, 4));
  const auto w = walsh_full_fast(f);
  EXPECT_EQ(w[0], CycInt::root(3, 2, 4, 27));
  for (Index a = 1; a < 27; ++a) EXPECT_TRUE(w[a].is_zero());
}

TEST(Walsh, LinearFunctionIsShiftedDelta) {
  // f(x) = p^{k-1} <b, x> has W(a) = p^n [a = b]
  const auto d = DomainSpec::parse(5, "field:2:poly=2,4,1");
  const Index b = 17;
  const auto f = GFunction::tabulate(d, 2, [&](Index x) { return 5 * d.inner_product(b, x); });
  const auto w = walsh_full_fast(f);
  for (Index a = 0; a < d.size(); ++a)
    EXPECT_EQ(w[a], a == b ? CycInt::integer(5, 2, 25) : CycInt(5, 2)) << a;
}

TEST(Walsh, InvalidSpectrumIsRejected) {
  const auto d = DomainSpec::dot(3, 2);
  const auto f = random_function(d, 1, 3);
  auto w = walsh_full_fast(f);
  w.values[4] = w.values[4] + CycInt::integer(3, 1, 1);
  EXPECT_THROW(inverse_walsh(w), SpectrumError);
  w.values.pop_back();
  EXPECT_THROW(inverse_walsh(w), UsageError);
}

TEST(Walsh, CharacterTransformLargeCoefficients) {
  // forces the arbitrary-precision accumulator
  const auto d = DomainSpec::parse(3, "field:2:poly=2,2,1");
  std::vector<CycInt> in;
  const BigInt huge = BigInt(1) << 80;
  std::mt19937_64 rng(1);
  for (Index x = 0; x < d.size(); ++x) in.push_back(CycInt::root(3, 2, rng() % 9, huge + x));
  const auto out = character_transform(d, 2, in, +1);
  for (Index y = 0; y < d.size(); ++y) {
    CycInt expect(3, 2);
    for (Index x = 0; x < d.size(); ++x) expect += in[x] * CycInt::zeta_p_power(3, 2, d.inner_product(x, y));
    EXPECT_EQ(out[y], expect);
  }
}

TEST(Walsh, AddingALinearTermTranslatesTheSpectrum) {
  for (const char* text : {"dot:2", "field:2:poly=2,2,1", "dot:1,field:1:poly=1,1"}) {
    const auto d = DomainSpec::parse(3, text);
    const auto f = random_function(d, 2, 11);
    const auto wf = walsh_full_fast(f);
    for (Index b : {Index{1}, d.size() - 1}) {
      const auto g = GFunction::tabulate(d, 2, [&](Index x) { return (f[x] + 3 * d.inner_product(b, x)) % 9; });
      const auto wg = walsh_full_fast(g);
      for (Index a = 0; a < d.size(); ++a) EXPECT_EQ(wg[a], wf[d.add(a, d.negate(b))]) << text;
    }
  }
}

TEST(Walsh, SpectrumDump) {
  const auto d = DomainSpec::dot(3, 1);
  const auto w = walsh_full_fast(GFunction(d, 1, {0, 0, 0}));
  std::ostringstream s;
  write_spectrum(s, w);
  EXPECT_EQ(s.str(), "0 3 0\n1 0 0\n2 0 0\n");
}

}  // namespace
}  // namespace gbent
