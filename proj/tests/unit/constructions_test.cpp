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

#include "gbent/constructions.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gbent/presets.hpp"

namespace gbent {
namespace {

TEST(Tables, ParseListsAndMonomials) {
  EXPECT_EQ(parse_table("0,1,8,27,64", 5, 125), (std::vector<std::uint64_t>{0, 1, 8, 27, 64}));
  EXPECT_EQ(parse_table("pow:3", 5, 125), (std::vector<std::uint64_t>{0, 1, 8, 27, 64}));
  EXPECT_EQ(parse_table("pow:2,scale:2", 5, 25), (std::vector<std::uint64_t>{0, 2, 8, 18, 7}));
  EXPECT_EQ(parse_table("-1,0,1", 3, 9), (std::vector<std::uint64_t>{8, 0, 1}));
  EXPECT_THROW(parse_table("1,2", 3, 9), ParseError);
  EXPECT_THROW(parse_table("pow:2,shift:1", 3, 9), ParseError);
}

TEST(QuadraticTwist, HypothesisViolationNamesThePair) {
  auto P = presets::twist_dual_bent();
  P.alpha = -P.field.one();
  try {
    build_quadratic_twist(P);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("(1, 0)"), std::string::npos) << e.what();
  }
  auto Q = presets::twist_dual_bent();
  Q.beta = Q.field.zero();
  EXPECT_THROW(build_quadratic_twist(Q), ConstructionError);
  auto R = presets::twist_dual_bent();
  R.g = {0, 1};
  EXPECT_THROW(build_quadratic_twist(R), UsageError);
  QuadraticTwistParams S{ExtField::prime_field(5), 1, ExtField::prime_field(5).one(), ExtField::prime_field(5).one(), {0, 0, 0, 0, 0}};
  EXPECT_THROW(build_quadratic_twist(S), ConstructionError);
}

TEST(QuadraticTwist, DualNotBentInstance) {
  const auto P = presets::twist_dual_not_bent();
  const auto F = build_quadratic_twist(P);
  const auto c = analyze(F);
  ASSERT_TRUE(c.is_gbent);
  EXPECT_EQ(c.regularity->kind, RegularityKind::NonWeaklyRegular);
  EXPECT_EQ(dual(c), quadratic_twist_dual(P));
  EXPECT_EQ(analyze(dual(c)).failures.size(), 625u);
  EXPECT_FALSE(quadratic_twist_condition(P).holds);
  const auto e = eta_pattern(P);
  const std::vector<std::vector<int>> expect = {
      {1, 1, 1, -1, -1}, {1, 1, -1, -1, 1}, {1, -1, -1, 1, 1}, {-1, -1, 1, 1, 1}, {-1, 1, 1, 1, -1}};
  EXPECT_EQ(e.signs, expect);
  EXPECT_FALSE(e.all_ones);
  EXPECT_FALSE(e.rows_constant_with_variation);
}

TEST(QuadraticTwist, DualBentInstance) {
  const auto P = presets::twist_dual_bent();
  const auto F = build_quadratic_twist(P);
  const auto c = analyze(F);
  ASSERT_TRUE(c.is_gbent);
  EXPECT_EQ(c.regularity->kind, RegularityKind::NonWeaklyRegular);
  EXPECT_EQ(dual(c), quadratic_twist_dual(P));
  const auto cs = analyze(dual(c));
  EXPECT_TRUE(cs.is_gbent);
  EXPECT_EQ(cs.regularity->kind, RegularityKind::NonWeaklyRegular);
  EXPECT_TRUE(quadratic_twist_condition(P).holds);
  const auto e = eta_pattern(P);
  EXPECT_EQ(e.signs, (std::vector<std::vector<int>>{{1, 1, 1}, {-1, -1, -1}, {-1, -1, -1}}));
  EXPECT_TRUE(e.rows_constant_with_variation);
}

TEST(QuadraticTwist, SwappedInstanceDigits) {
  // 3 f_0 + f_1 with f_0 = Tr(x^2) + (y1 + Tr(z^47 x^2))(y2 + Tr(z^10 x^2)), f_1 = y2 + Tr(z^10 x^2)
  const auto P = presets::twist_swapped();
  const auto F = build_quadratic_twist(P);
  const auto& K = P.field;
  const auto z47 = K.z_pow(47), z10 = K.z_pow(10);
  const auto direct = GFunction::tabulate(F.spec(), 2, [&](Index i) {
    const auto x2 = K.element(i / 9) * K.element(i / 9);
    const std::uint64_t y1 = i / 3 % 3, y2 = i % 3;
    const auto f0 = (x2.trace() + (y1 + (z47 * x2).trace()) * (y2 + (z10 * x2).trace())) % 3;
    return 3 * f0 + (y2 + (z10 * x2).trace()) % 3;
  });
  EXPECT_EQ(F, direct);
}

TEST(QuadraticTwist, ClosedFormsAndConditionAcrossParameters) {
  // every valid (alpha, beta) over F_9 and a sample over F_27: the closed-form
  // dual matches, the sum condition matches dual bentness, and the all-ones
  // sign pattern matches weak regularity
  std::mt19937_64 rng(23);
  int weakly = 0;
  for (auto [p, poly, stride] : std::vector<std::tuple<std::uint64_t, std::string, Index>>{{3, "2,2,1", 1}, {3, "1,2,0,1", 7}}) {
    const auto Fld = ExtField::parse(p, poly, true);
    for (Index a = 1; a < Fld.order(); a += stride)
      for (Index b = 1; b < Fld.order(); b += stride) {
        QuadraticTwistParams P{Fld, 2, Fld.element(a), Fld.element(b), {rng() % 9, rng() % 9, rng() % 9}};
        bool valid = true;
        try {
          validate(P);
        } catch (const ConstructionError&) {
          valid = false;
        }
        if (!valid) continue;
        const auto c = analyze(build_quadratic_twist(P));
        ASSERT_TRUE(c.is_gbent);
        EXPECT_EQ(dual(c), quadratic_twist_dual(P));
        EXPECT_EQ(quadratic_twist_condition(P).holds, analyze(dual(c)).is_gbent);
        const auto e = eta_pattern(P);
        EXPECT_EQ(e.all_ones, c.regularity->weakly_regular());
        weakly += e.all_ones;
        for (std::uint64_t i = 0; i < p; ++i)
          for (std::uint64_t j = 0; j < p; ++j) EXPECT_EQ(e.signs[i][j], twist_gamma(P, i, j).quad_character());
      }
  }
  EXPECT_GT(weakly, 0);
}

TEST(QuadraticTwist, AllOnesPatternGivesWeaklyRegular) {
  const auto Fld = ExtField::parse(3, "1,2,0,1", true);
  std::optional<QuadraticTwistParams> found;
  for (Index a = 1; a < Fld.order() && !found; ++a)
    for (Index b = 1; b < Fld.order() && !found; ++b) {
      QuadraticTwistParams P{Fld, 1, Fld.element(a), Fld.element(b), {0, 1, 2}};
      try {
        if (eta_pattern(P).all_ones) found = P;
      } catch (const ConstructionError&) {
      }
    }
  ASSERT_TRUE(found);
  const auto c = analyze(build_quadratic_twist(*found));
  ASSERT_TRUE(c.is_gbent);
  EXPECT_TRUE(c.regularity->weakly_regular());
}

TEST(Quadratic, SquareOverF5IsSelfDual) {
  const auto qb = quadratic_bent(ExtField::prime_field(5).one());
  EXPECT_EQ(qb.dual, qb.f);
  EXPECT_EQ(dual(qb.f), qb.f);
  EXPECT_THROW(quadratic_bent(ExtField::prime_field(5).zero()), UsageError);
}

class QuadraticFields : public ::testing::TestWithParam<std::pair<std::uint64_t, std::string>> {};

TEST_P(QuadraticFields, ClosedFormsMatchTenRandomAlphas) {
  const auto F = ExtField::parse(GetParam().first, GetParam().second);
  std::mt19937_64 rng(31);
  for (int it = 0; it < 10; ++it) {
    const auto alpha = F.element(1 + rng() % (F.order() - 1));
    const auto qb = quadratic_bent(alpha);
    const auto c = analyze(qb.f);
    ASSERT_TRUE(c.is_gbent);
    EXPECT_EQ(dual(c), qb.dual);
    ASSERT_TRUE(c.regularity->weakly_regular());
    EXPECT_EQ(c.regularity->mu->e, qb.mu.e);
    std::vector<Index> all(qb.f.size());
    for (Index a = 0; a < qb.f.size(); ++a) all[a] = a;
    EXPECT_EQ(walsh_naive(qb.f, all), quadratic_walsh_closed_form(qb));
  }
}

std::string FieldName(const ::testing::TestParamInfo<std::pair<std::uint64_t, std::string>>& info) {
  std::string s = "p" + std::to_string(info.param.first) + "_" + info.param.second;
  for (auto& ch : s)
    if (ch == ',') ch = '_';
  return s;
}

INSTANTIATE_TEST_SUITE_P(Fields, QuadraticFields,
                         ::testing::Values(std::pair<std::uint64_t, std::string>{3, "1,2,0,1"},
                                           std::pair<std::uint64_t, std::string>{5, "2,4,1"},
                                           std::pair<std::uint64_t, std::string>{7, "3,6,1"},
                                           std::pair<std::uint64_t, std::string>{3, "2,2,1"},
                                           std::pair<std::uint64_t, std::string>{11, "9,1"}),
                         FieldName);

TEST(Quadratic, SelfDualSumBlocksAreSelfDual) {
  for (const auto& f : presets::selfdual_square_p7().f) EXPECT_TRUE(is_self_dual(f).self_dual);
}

TEST(MaioranaMcFarland, SpectrumMatchesClosedForm) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {3, 2}, {5, 2}, {7, 1}}) {
    std::vector<std::uint64_t> g(p);
    for (std::uint64_t i = 0; i < p; ++i) g[i] = (i * i * i + 2) % ipow(p, k);
    const auto f = mm_gbent(p, k, g);
    EXPECT_EQ(walsh_full_fast(f).values, mm_walsh_closed_form(p, k, g));
    EXPECT_TRUE(analyze(f).is_gbent);
  }
  const auto zero = analyze(mm_gbent(3, 2, {0, 0, 0}));
  EXPECT_EQ(zero.regularity->kind, RegularityKind::Regular);
  EXPECT_TRUE(analyze(mm_gbent(3, 2, {0, 1, 2})).is_gbent);
  EXPECT_THROW(mm_gbent(3, 2, {0, 1}), UsageError);
}

std::vector<GFunction> product_pair(std::uint64_t p) {
  const auto d = DomainSpec::dot(p, 2);
  return {GFunction::tabulate(d, 1, [&](Index y) { return (y / p) * (y % p); }),
          GFunction::tabulate(d, 1, [&](Index y) { return (y / p) * (y % p) + p - y % p; })};
}

TEST(IndirectSum, ProductPairIsAValidFamily) {
  for (std::uint64_t p : {3, 5}) {
    const auto fam = validate_family(product_pair(p));
    EXPECT_EQ(fam.duals.size(), 2u);
  }
  const auto d = DomainSpec::dot(3, 2);
  const GFunction zero(d, 1, std::vector<std::uint64_t>(9, 0));
  EXPECT_THROW(validate_family({zero, zero}), ConstructionError);
  EXPECT_THROW(validate_family({zero}), ConstructionError);
}

TEST(IndirectSum, PsapBlocks) {
  const auto F = ExtField::parse(3, "2,2,1", true);
  std::vector<std::uint64_t> id(9);
  for (Index i = 0; i < 9; ++i) id[i] = i;
  const auto g = psap_blocks(F, {F.one(), F.z()}, id);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_NO_THROW(validate_family(g));
  EXPECT_THROW(psap_blocks(F, {F.one(), F.from_int(2)}, id), ConstructionError);
  auto shifted = id;
  std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
  EXPECT_THROW(psap_blocks(F, {F.one(), F.z()}, shifted), ConstructionError);
  auto collide = id;
  collide[2] = 1;
  EXPECT_THROW(psap_blocks(F, {F.one(), F.z()}, collide), ConstructionError);
  EXPECT_THROW(psap_blocks(F, {F.one(), F.z(), F.z() + F.one()}, id), ConstructionError);
}

// twist over F_9 with alpha = beta = z: bent, dual not bent
GFunction twist_dual_not_bent_small() {
  const auto F = ExtField::parse(3, "2,2,1", true);
  return build_quadratic_twist({F, 2, F.z(), F.z(), {0, 1, 2}});
}

// 3 (Tr(x^2) + y1 y2) on the same domain: bent with bent dual
GFunction product_quadratic_small() {
  const auto F = ExtField::parse(3, "2,2,1", true);
  const auto d = quadratic_twist_domain(F);
  return GFunction::tabulate(d, 2, [&](Index i) {
    const auto x = F.element(i / 9);
    return 3 * (((x * x).trace() + (i / 3 % 3) * (i % 3)) % 3);
  });
}

IndirectSumFamily small_family(GFunction f0, GFunction f1) {
  const auto F = ExtField::parse(3, "2,2,1", true);
  std::vector<std::uint64_t> id(9);
  for (Index i = 0; i < 9; ++i) id[i] = i;
  auto f2 = f0;
  return {{std::move(f0), std::move(f1), std::move(f2)}, psap_blocks(F, {F.one(), F.z()}, id), {0, 4, 0}};
}

TEST(IndirectSum, SelectedDualNotBentMakesDualNotBent) {
  ASSERT_FALSE(analyze(dual(twist_dual_not_bent_small())).is_gbent);
  const auto fam = small_family(twist_dual_not_bent_small(), product_quadratic_small());
  const auto sum = build_indirect_sum(fam);
  const auto c = analyze(sum.F);
  ASSERT_TRUE(c.is_gbent);
  EXPECT_EQ(dual(c), sum.closed_form_dual);
  EXPECT_FALSE(analyze(dual(c)).is_gbent);
  EXPECT_TRUE(sum.dual_selector_image[0] && sum.dual_selector_image[1]);
  EXPECT_TRUE(check_indirect_sum_spectrum(fam, sum).holds());
  EXPECT_TRUE(check_indirect_sum_dual(fam, sum).holds());
}

TEST(IndirectSum, BentDualsGiveBentDual) {
  const auto base = product_quadratic_small();
  const auto shifted = GFunction::tabulate(base.spec(), 2, [&](Index i) { return base[i] + 3 * (i / 3 % 3) + 1; });
  const auto fam = small_family(base, shifted);
  const auto sum = build_indirect_sum(fam);
  const auto c = analyze(sum.F);
  ASSERT_TRUE(c.is_gbent);
  EXPECT_EQ(dual(c), sum.closed_form_dual);
  EXPECT_TRUE(check_indirect_sum_spectrum(fam, sum).holds());
  EXPECT_TRUE(check_indirect_sum_dual(fam, sum).holds());
  const bool dual_bent = analyze(dual(c)).is_gbent;
  bool all_selected = true;
  for (std::size_t i = 0; i < 3; ++i) all_selected = all_selected && analyze(dual(fam.f[i])).is_gbent;
  EXPECT_EQ(dual_bent, all_selected);
  if (dual_bent) EXPECT_TRUE(check_double_dual(sum.F).holds());
}

TEST(IndirectSum, EqualMembersGiveDirectSumShape) {
  const auto f = GFunction::tabulate(DomainSpec::dot(3, 1), 2, [](Index x) { return 3 * x * x; });
  const IndirectSumFamily fam{{f, f, f}, product_pair(3), {0, 0, 0}};
  const auto sum = build_indirect_sum(fam);
  const auto c = analyze(sum.F);
  ASSERT_TRUE(c.is_gbent);
  EXPECT_EQ(dual(c), sum.closed_form_dual);
  EXPECT_TRUE(check_indirect_sum_spectrum(fam, sum).holds());
  EXPECT_TRUE(check_double_dual(sum.F).holds());
}

TEST(SelfDualSum, QuarticCaseOverF5) {
  const auto S = build_self_dual(3, presets::selfdual_quartic_p5());
  EXPECT_EQ(S.F.spec().to_string(), "dot:1,field:1:poly=3,1,field:1:poly=3,1");
  EXPECT_TRUE(is_self_dual(S.F).self_dual);
  EXPECT_EQ(S.closed_form_dual, dual(S.F));
  // F(x, y1, y2) = f_{(2y1+y2)^4}(x) + 5(y1^2 + y2^2) + 2 ((2y1+y2)^4 mod 5)^2
  for (Index x = 0; x < 5; ++x)
    for (Index y1 = 0; y1 < 5; ++y1)
      for (Index y2 = 0; y2 < 5; ++y2) {
        const auto s = ipow((2 * y1 + y2) % 5, 4) % 5;
        const auto expect = ((s == 1 ? 20 : 5) * x * x + 5 * (y1 * y1 + y2 * y2) + 2 * s * s) % 25;
        ASSERT_EQ(S.F[x * 25 + y1 * 5 + y2], expect);
      }
}

TEST(SelfDualSum, SquareCaseOverF49) {
  const auto S = build_self_dual(2, presets::selfdual_square_p7());
  EXPECT_EQ(S.F.size(), 117649u);
  const auto c = analyze(S.F);
  EXPECT_TRUE(is_self_dual(S.F, c).self_dual);
  EXPECT_EQ(S.closed_form_dual, S.F);
  EXPECT_TRUE(find_non_quadratic_witness(S.F).has_value());
}

TEST(SelfDualSum, SquareCaseClosedFormula) {
  // F(x, y1, y2) = f_{Tr((z^13 y1 + z y2)^2)}(x) + Tr(4 z^12 (y1^2 + y2^2))
  const auto P = presets::selfdual_square_p7();
  const auto S = build_self_dual(2, P);
  const auto& K = P.field;
  const auto z13 = K.z_pow(13), c = K.from_int(4) * K.z_pow(12);
  const auto n = K.order();
  for (Index i = 0; i < S.F.size(); i += 97) {
    const Index x = i / (n * n);
    const auto y1 = K.element(i / n % n), y2 = K.element(i % n);
    const auto u = z13 * y1 + K.z() * y2;
    const auto s = (u * u).trace();
    ASSERT_EQ(S.F[i], (P.f[s][x] + (c * (y1 * y1 + y2 * y2)).trace()) % 7) << i;
  }
}

TEST(SelfDualSum, TraceCaseWithBetaOrbits) {
  // p = 5, m = 1: beta = 2 and multiplication by 2 cycles 1 -> 2 -> 4 -> 3
  auto P = presets::selfdual_quartic_p5();
  const auto xs = DomainSpec::dot(5, 1);
  P.f.assign(5, GFunction::tabulate(xs, 2, [](Index x) { return 20 * x * x; }));
  P.f[0] = GFunction::tabulate(xs, 2, [](Index x) { return 5 * x * x; });
  P.g = {3, 7, 7, 7, 7};
  const auto S = build_self_dual(1, P);
  EXPECT_TRUE(is_self_dual(S.F).self_dual);
  EXPECT_EQ(S.closed_form_dual, S.F);
  P.g = {3, 7, 8, 7, 7};
  EXPECT_THROW(build_self_dual(1, P), ConstructionError);
}

TEST(SelfDualSum, CaseConditionsAreEnforced) {
  auto P = presets::selfdual_quartic_p5();
  EXPECT_THROW(build_self_dual(2, P), ConstructionError);  // f_1 != f_4
  EXPECT_THROW(build_self_dual(1, P), ConstructionError);
  EXPECT_THROW(build_self_dual(4, P), UsageError);
  auto Q = presets::selfdual_quartic_p5();
  Q.alpha = Q.field.one();
  EXPECT_THROW(build_self_dual(3, Q), ConstructionError);
  auto R = presets::selfdual_quartic_p5();
  R.f[1] = GFunction::tabulate(DomainSpec::dot(5, 1), 2, [](Index x) { return 5 * (x * x + x) % 25; });
  EXPECT_THROW(build_self_dual(3, R), ConstructionError);  // not self-dual
  auto T = presets::selfdual_quartic_p5();
  T.a = T.field.zero();
  EXPECT_THROW(build_self_dual(3, T), ConstructionError);
}

TEST(NonQuadratic, QuadraticFunctionsHaveNoWitness) {
  const auto quad = GFunction::tabulate(DomainSpec::dot(5, 2), 2, [](Index x) {
    const auto x1 = x / 5, x2 = x % 5;
    return 5 * ((x1 * x1 + x2 * x2 + x1 + 3 * x2) % 5);
  });
  EXPECT_FALSE(find_non_quadratic_witness(quad).has_value());
  EXPECT_TRUE(find_non_quadratic_witness(build_quadratic_twist(presets::twist_dual_not_bent())).has_value());
  const auto cubic = presets::cubic_field_nonweakly_regular();
  const auto w = find_non_quadratic_witness(cubic);
  ASSERT_TRUE(w.has_value());
  const auto& d = cubic.spec();
  auto second = [&](Index x) {
    return mod(static_cast<std::int64_t>(cubic[d.add(d.add(x, w->u), w->v)]) - static_cast<std::int64_t>(cubic[d.add(x, w->u)]) -
                   static_cast<std::int64_t>(cubic[d.add(x, w->v)]) + static_cast<std::int64_t>(cubic[x]),
               3);
  };
  EXPECT_NE(second(w->x1), second(w->x2));
}

}  // namespace
}  // namespace gbent
