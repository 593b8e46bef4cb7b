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

#include "gbent/field.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <random>

namespace gbent {
namespace {

TEST(Field, QuadraticExtensionArithmetic) {
  const auto F = ExtField::parse(5, "2,4,1");
  EXPECT_EQ(F.order(), 25u);
  const auto z = F.z();
  const auto z2 = z * z;
  EXPECT_EQ(z2, z + F.from_int(3));
  EXPECT_EQ(z.trace(), 1u);
  EXPECT_EQ(z2.trace(), 2u);
  EXPECT_TRUE(F.is_primitive());
  EXPECT_EQ(z.quad_character(), -1);
}

TEST(Field, RejectsReduciblePolynomial) {
  EXPECT_THROW(ExtField::parse(5, "1,0,1"), UsageError);  // x^2 + 1 = (x - 2)(x + 2)
  EXPECT_THROW(ExtField::parse(5, "1,0,2"), UsageError);  // not monic
  EXPECT_THROW(ExtField::parse(4, "1,1"), UsageError);
}

TEST(Field, RequirePrimitive) {
  // x^2 + 1 over F_3 is irreducible, but z = i has order 4 in a group of order 8
  EXPECT_NO_THROW(ExtField::parse(3, "1,0,1"));
  EXPECT_FALSE(ExtField::parse(3, "1,0,1").is_primitive());
  EXPECT_THROW(ExtField::parse(3, "1,0,1", true), UsageError);
}

TEST(Field, PrimeFieldGenerator) {
  const auto F = ExtField::prime_field(7);
  EXPECT_EQ(F.z().prime_value(), 3u);
  EXPECT_TRUE(F.is_primitive());
  EXPECT_EQ(F.z().trace(), 3u);
}

TEST(Field, IndexRoundTrip) {
  const auto F = ExtField::parse(3, "1,2,0,1");
  for (Index i = 0; i < F.order(); ++i) EXPECT_EQ(F.element(i).index(), i);
}

std::string FieldName(const ::testing::TestParamInfo<std::pair<std::uint64_t, std::string>>& info) {
  std::string s = "p" + std::to_string(info.param.first) + "_" + info.param.second;
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  return s;
}

class FieldLaws : public ::testing::TestWithParam<std::pair<std::uint64_t, std::string>> {};

TEST_P(FieldLaws, AxiomsTraceAndCharacter) {
  const auto F = ExtField::parse(GetParam().first, GetParam().second);
  const auto p = F.p();
  std::mt19937_64 rng(17);
  auto rnd = [&] { return F.element(rng() % F.order()); };
  for (int it = 0; it < 200; ++it) {
    const auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * (b * c), (a * b) * c);
    EXPECT_EQ(a + (-a), F.zero());
    // trace as the Frobenius orbit sum
    auto frob = a;
    auto sum = F.zero();
    for (unsigned i = 0; i < F.degree(); ++i) {
      sum += frob;
      frob = frob.pow(p);
    }
    ASSERT_TRUE(sum.prime_value().has_value());
    EXPECT_EQ(*sum.prime_value(), a.trace());
    EXPECT_EQ((a + b).trace(), (a.trace() + b.trace()) % p);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), F.one());
      const auto e = a.pow((F.order() - 1) / 2);
      EXPECT_EQ(a.quad_character(), e == F.one() ? 1 : -1);
      if (!b.is_zero()) EXPECT_EQ((a * b).quad_character(), a.quad_character() * b.quad_character());
    }
  }
  EXPECT_THROW(F.zero().inv(), DomainError);
  EXPECT_THROW(F.zero().quad_character(), DomainError);
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldLaws,
                         ::testing::Values(std::pair<std::uint64_t, std::string>{5, "2,4,1"},
                                           std::pair<std::uint64_t, std::string>{3, "1,2,0,1"},
                                           std::pair<std::uint64_t, std::string>{7, "3,6,1"},
                                           std::pair<std::uint64_t, std::string>{3, "1,2,0,0,0,1"},
                                           std::pair<std::uint64_t, std::string>{11, "9,1"}), FieldName);

TEST(Field, LargeFieldUsesPowerCharacter) {
  // F_{3^10}: too big for the eager table
  const auto F = ExtField::parse(3, "1,0,2,0,0,0,0,0,0,0,1");
  const auto a = F.z_pow(1234);
  EXPECT_EQ(a.quad_character(), 1);
  EXPECT_EQ(F.z_pow(1235).quad_character(), F.z().quad_character());
  const auto b = F.z_pow(77) + F.one();
  EXPECT_EQ(b.quad_character(), b.pow((F.order() - 1) / 2) == F.one() ? 1 : -1);
}

}  // namespace
}  // namespace gbent
