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

// Fixed instances used by the command-line presets, the test suite and the
// acceptance run.

#pragma once

#include <vector>

#include "gbent/constructions.hpp"

namespace gbent::presets {

// 5 f_0 + f_1 on F_5^2 with digits f_0 = x1^2 + x2^2 and f_1 = 2 x1 + x2 in F_5.
inline GFunction quadratic_plus_linear() {
  return GFunction::tabulate(DomainSpec::dot(5, 2), 2, [](Index x) {
    const auto x1 = x / 5, x2 = x % 5;
    return 5 * (x1 * x1 + x2 * x2) + (2 * x1 + x2) % 5;
  });
}

// Its dual: digits x1^2 + x2^2 and x1 + 3 x2.
inline GFunction quadratic_plus_linear_dual() {
  return GFunction::tabulate(DomainSpec::dot(5, 2), 2, [](Index x) {
    const auto x1 = x / 5, x2 = x % 5;
    return 5 * (x1 * x1 + x2 * x2) + (x1 + 3 * x2) % 5;
  });
}

// p = 5, m = 2, k = 3, z^2 + 4z + 2 = 0, alpha = beta = z, g(x) = x^3.
inline QuadraticTwistParams twist_dual_not_bent() {
  const auto F = ExtField::parse(5, "2,4,1", true);
  return {F, 3, F.z(), F.z(), parse_table("pow:3", 5, 125)};
}

// p = 3, m = 5, k = 2, z^5 + 2z + 1 = 0, alpha = z^10, beta = z^47, g(x) = x.
inline QuadraticTwistParams twist_dual_bent() {
  const auto F = ExtField::parse(3, "1,2,0,0,0,1", true);
  return {F, 2, F.z_pow(10), F.z_pow(47), {0, 1, 2}};
}

// Same field and g with alpha and beta exchanged.
inline QuadraticTwistParams twist_swapped() {
  const auto F = ExtField::parse(3, "1,2,0,0,0,1", true);
  return {F, 2, F.z_pow(47), F.z_pow(10), {0, 1, 2}};
}

// Tr(x^22 + x^8) on F_27 with z^3 + 2z + 1 = 0.
inline GFunction cubic_field_nonweakly_regular() {
  const auto F = ExtField::parse(3, "1,2,0,1", true);
  return GFunction::tabulate(DomainSpec(3, {FieldBlock{F}}), 1, [&](Index x) {
    const auto e = F.element(x);
    return (e.pow(22) + e.pow(8)).trace();
  });
}

// p = 5, k = 2 on F_5 x F_5 x F_5: f_i = 5x^2 (i != 1), f_1 = 20x^2,
// alpha = beta = 2, a = 1, g(y) = 2y^2; built with h = Tr(x^4).
inline SelfDualParams selfdual_quartic_p5() {
  const auto F = ExtField::parse(5, "3,1");  // z = 2
  const auto xs = DomainSpec::dot(5, 1);
  std::vector<GFunction> f;
  for (std::uint64_t i = 0; i < 5; ++i)
    f.push_back(GFunction::tabulate(xs, 2, [&](Index x) { return (i == 1 ? 20 : 5) * x * x; }));
  return {F, F.one(), F.from_int(2), F.from_int(2), std::move(f), parse_table("pow:2,scale:2", 5, 25)};
}

// p = 7, k = 1 on F_49^3 with z^2 + 6z + 3 = 0: alpha = beta = z^12, a = z,
// f_0 = Tr(4 z^12 x^2), f_i = f_{-i} = Tr(3 z^12 x^2) + i (i = 1, 2, 3), g = 0;
// built with h = Tr(x^2).
inline SelfDualParams selfdual_square_p7() {
  const auto F = ExtField::parse(7, "3,6,1", true);
  const DomainSpec xs(7, {FieldBlock{F}});
  const auto c0 = F.from_int(4) * F.z_pow(12);
  const auto c1 = F.from_int(3) * F.z_pow(12);
  std::vector<GFunction> f;
  for (std::uint64_t i = 0; i < 7; ++i) {
    const auto shift = std::min(i, 7 - i);
    f.push_back(GFunction::tabulate(xs, 1, [&](Index x) {
      const auto e = F.element(x);
      return i == 0 ? (c0 * e * e).trace() : ((c1 * e * e).trace() + shift) % 7;
    }));
  }
  return {F, F.z(), F.z_pow(12), F.z_pow(12), std::move(f), std::vector<std::uint64_t>(7, 0)};
}

}  // namespace gbent::presets
