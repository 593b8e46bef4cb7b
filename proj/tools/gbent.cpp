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

// gbent: command-line front end for building, transforming and analyzing
// generalized bent functions V_n -> Z_{p^k}.
//
// Exit codes:
//   0  success (function is generalized bent, property holds, check passed)
//   1  negative verdict (not generalized bent, property violated, check failed)
//   2  unreadable or malformed input (the message names the line)
//   3  a construction hypothesis does not hold
//   4  usage error or exhausted enumeration budget
//   5  analysis disagrees with the --expect sidecar
//   6  internal invariant failure

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gbent/analysis.hpp"
#include "gbent/constructions.hpp"
#include "gbent/decomposition.hpp"
#include "gbent/presets.hpp"
#include "gbent/verification.hpp"
#include "gbent/walsh.hpp"

namespace {

using namespace gbent;

enum Exit : int { kOk = 0, kNegative = 1, kInput = 2, kHypothesis = 3, kUsage = 4, kMismatch = 5, kInternal = 6 };

struct RunConfig {
  bool json = false;
  std::uint64_t budget = 1'000'000;
  unsigned threads = default_threads();
  std::uint64_t seed = 1;
  std::string out;

  TransformOptions transform() const { return {threads}; }
};

// Cannot read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

GFunction load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return read_function(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ", " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

void emit_function(const RunConfig& rc, const GFunction& f) {
  if (rc.out.empty())
    write_function(std::cout, f);
  else
    write_text(rc.out, to_text(f));
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string list_points(const std::vector<Index>& pts, std::size_t limit = 8) {
  std::string s;
  for (std::size_t i = 0; i < pts.size() && i < limit; ++i) s += (i ? " " : "") + std::to_string(pts[i]);
  if (pts.size() > limit) s += " ...";
  return s;
}

// "z^E", "coords:c0,c1,..." (constant term first) or an integer of the prime field.
FieldElem parse_element(const ExtField& F, const std::string& text) {
  const auto t = std::string(trim(text));
  if (t.starts_with("z^")) return F.z_pow(static_cast<std::uint64_t>(parse_int(t.substr(2))));
  if (t == "z") return F.z();
  if (t.starts_with("coords:")) {
    std::vector<std::uint64_t> c;
    for (auto part : split(t.substr(7), ',')) c.push_back(mod(parse_int(part), F.p()));
    if (c.size() != F.degree()) throw ParseError("element needs " + std::to_string(F.degree()) + " coordinates");
    return F.from_coords(c);
  }
  return F.from_int(parse_int(t));
}

// ---------------------------------------------------------------- analyze

struct Prediction {
  std::string kind;
  std::optional<bool> is_gbent;
  std::optional<bool> weakly_regular;
  std::optional<std::string> regularity;
  std::optional<bool> dual_gbent;
  std::optional<bool> self_dual;

  Json to_json(const GFunction& f) const {
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"kind", kind},
                {"p", f.p()},
                {"k", f.k()},
                {"n", f.dimension()},
                {"spec", f.spec().to_string()},
                {"predicted",
                 {{"is_gbent", opt(is_gbent)},
                  {"weakly_regular", opt(weakly_regular)},
                  {"regularity", opt(regularity)},
                  {"dual_gbent", opt(dual_gbent)},
                  {"self_dual", opt(self_dual)}}}};
  }
};

struct Observation {
  BentCertificate cert;
  std::optional<bool> dual_gbent;
  std::optional<SelfDualVerdict> self_dual;
};

std::string regularity_name(const BentCertificate& c) {
  const auto j = c.to_json(false);
  return j["regularity"].is_null() ? "" : j["regularity"].get<std::string>();
}

std::vector<std::string> compare_expectation(const Json& side, const GFunction& f, const Observation& o) {
  std::vector<std::string> bad;
  auto check = [&](const char* key, const Json& observed) {
    const auto& want = side["predicted"][key];
    if (!want.is_null() && want != observed) bad.push_back(std::string(key) + ": predicted " + want.dump() + ", observed " + observed.dump());
  };
  if (side.value("spec", f.spec().to_string()) != f.spec().to_string() || side.value("k", f.k()) != f.k())
    bad.push_back("domain or k differs from the sidecar");
  check("is_gbent", o.cert.is_gbent);
  if (o.cert.is_gbent) {
    check("weakly_regular", o.cert.regularity->weakly_regular());
    check("regularity", regularity_name(o.cert));
    check("dual_gbent", *o.dual_gbent);
    check("self_dual", o.self_dual->self_dual);
  }
  return bad;
}

int cmd_analyze(const RunConfig& rc, const std::string& path, const std::string& expect, bool properties) {
  const auto f = load(path);
  Observation o{analyze(f, rc.transform()), std::nullopt, std::nullopt};
  std::optional<GFunction> fs;
  if (o.cert.is_gbent) {
    fs = dual(o.cert);
    o.dual_gbent = analyze(*fs, rc.transform()).is_gbent;
    o.self_dual = is_self_dual(f, o.cert);
  }
  std::vector<PropertyReport> props;
  if (properties && o.cert.is_gbent) {
    props.push_back(check_double_dual(f, rc.transform()));
    props.push_back(check_even_symmetry(f, rc.transform()));
    props.push_back(check_sign_at_zero(f, rc.transform()));
    props.push_back(check_inversion_identity(f, rc.transform()));
  }
  std::optional<std::vector<std::string>> mismatches;
  if (!expect.empty()) {
    std::ifstream in(expect);
    if (!in) throw IoError("cannot open " + expect);
    Json side;
    try {
      side = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(expect + ": " + e.what());
    }
    mismatches = compare_expectation(side, f, o);
  }

  if (rc.json) {
    auto j = o.cert.to_json();
    if (o.cert.is_gbent) {
      j["dual_gbent"] = *o.dual_gbent;
      j["self_dual"] = o.self_dual->self_dual;
    }
    if (!props.empty()) {
      j["properties"] = Json::array();
      for (const auto& r : props) j["properties"].push_back(r.to_json());
    }
    if (mismatches) j["expectation_mismatches"] = *mismatches;
    print_json(j);
  } else {
    const auto& c = o.cert;
    std::cout << "domain: " << f.spec().to_string() << " (p=" << c.p() << ", n=" << c.n() << ", k=" << c.k << ")\n";
    std::cout << "generalized bent: " << (c.is_gbent ? "yes" : "no") << '\n';
    if (c.is_gbent) {
      std::cout << "xi: " << c.xi_case() << '\n';
      std::cout << "regularity: " << c.regularity->to_string() << '\n';
      std::cout << "dual generalized bent: " << (*o.dual_gbent ? "yes" : "no") << '\n';
      std::cout << "self-dual: " << (o.self_dual->self_dual ? "yes" : "no") << " (" << o.self_dual->reason << ")\n";
    } else {
      std::cout << "failing points: " << c.failures.size() << " [" << list_points(c.failures) << "]\n";
    }
    for (const auto& r : props)
      std::cout << r.property << ": " << to_string(r.status) << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
    if (mismatches) {
      if (mismatches->empty()) std::cout << "expectation: matches " << expect << '\n';
      for (const auto& m : *mismatches) std::cout << "expectation mismatch: " << m << '\n';
    }
  }
  if (mismatches && !mismatches->empty()) return kMismatch;
  return o.cert.is_gbent ? kOk : kNegative;
}

// ---------------------------------------------------------------- dual

int cmd_dual(const RunConfig& rc, const std::string& path) {
  const auto f = load(path);
  const auto c = analyze(f, rc.transform());
  if (!c.is_gbent) {
    if (rc.json)
      print_json({{"is_gbent", false}, {"failures", c.failures}});
    else
      std::cerr << "not generalized bent: " << c.failures.size() << " failing points [" << list_points(c.failures) << "]\n";
    return kNegative;
  }
  emit_function(rc, dual(c));
  return kOk;
}

// ---------------------------------------------------------------- transform

int cmd_transform(const RunConfig& rc, const std::string& path) {
  const auto f = load(path);
  const auto w = walsh_full_fast(f, rc.transform());
  const bool parseval = parseval_holds(w);
  if (rc.json) {
    Json vals = Json::array();
    for (const auto& v : w.values) {
      Json cs = Json::array();
      for (const auto& c : v.coeffs()) cs.push_back(c.str());
      vals.push_back(cs);
    }
    const Json j{{"p", f.p()}, {"k", f.k()}, {"n", f.dimension()}, {"spec", f.spec().to_string()},
                 {"basis_rank", w.values.empty() ? 0 : w.values[0].rank()}, {"parseval", parseval}, {"values", vals}};
    if (rc.out.empty())
      print_json(j);
    else
      write_text(rc.out, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    write_spectrum(s, w);
    if (rc.out.empty())
      std::cout << s.str();
    else
      write_text(rc.out, s.str());
    std::cerr << "parseval: " << (parseval ? "holds" : "FAILS") << '\n';
  }
  return parseval ? kOk : kInternal;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  int example = 0;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::string poly, alpha, beta, a, g, gsel, perm, alphas, dual_out;
  int which = 0;
  std::vector<std::string> f_files, g_files;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

ExtField field_from(const ConstructArgs& A, bool primitive) {
  require(A.p != 0 && !A.poly.empty(), "--p and --poly are required");
  return ExtField::parse(A.p, A.poly, primitive);
}

int finish_construct(const RunConfig& rc, const GFunction& F, const Prediction& pred,
                     const std::optional<GFunction>& closed_dual, const ConstructArgs& A, Json extra = Json::object()) {
  require(!rc.out.empty(), "construct needs -o PATH for the table (the sidecar goes to PATH.expect.json)");
  save_function(rc.out, F);
  const auto side = pred.to_json(F);
  write_text(rc.out + ".expect.json", side.dump(2) + "\n");
  if (closed_dual && !A.dual_out.empty()) save_function(A.dual_out, *closed_dual);
  if (rc.json) {
    auto j = side;
    j["table"] = rc.out;
    j["sidecar"] = rc.out + ".expect.json";
    for (auto& [key, v] : extra.items()) j[key] = v;
    print_json(j);
  } else {
    std::cout << "wrote " << rc.out << " (" << F.size() << " values, " << F.spec().to_string() << ", k=" << F.k() << ")\n";
    std::cout << "wrote " << rc.out << ".expect.json\n";
    for (auto& [key, v] : extra.items()) std::cout << key << ": " << v.dump() << '\n';
  }
  return kOk;
}

int construct_thm1(const RunConfig& rc, const ConstructArgs& A) {
  QuadraticTwistParams P;
  if (A.example) {
    require(A.example == 1 || A.example == 2 || A.example == 5, "thm1 presets are --example 1, 2 or 5");
    P = A.example == 1 ? presets::twist_dual_not_bent() : A.example == 2 ? presets::twist_dual_bent() : presets::twist_swapped();
  } else {
    const auto F = field_from(A, true);
    require(!A.alpha.empty() && !A.beta.empty() && !A.g.empty(), "--alpha, --beta and --g are required");
    P = {F, A.k, parse_element(F, A.alpha), parse_element(F, A.beta), parse_table(A.g, F.p(), ipow(F.p(), A.k))};
  }
  const auto F = build_quadratic_twist(P);
  const auto eta = eta_pattern(P);
  const auto cond = quadratic_twist_condition(P);
  Prediction pred{"thm1", true, eta.all_ones, std::nullopt, cond.holds, std::nullopt};
  Json extra{{"eta_all_ones", eta.all_ones}, {"sum_condition", cond.holds}};
  return finish_construct(rc, F, pred, quadratic_twist_dual(P), A, extra);
}

int construct_selfdual(const RunConfig& rc, const ConstructArgs& A) {
  SelfDualParams P;
  int which = A.which;
  if (A.example) {
    require(A.example == 3 || A.example == 4, "selfdual presets are --example 3 or 4");
    P = A.example == 3 ? presets::selfdual_quartic_p5() : presets::selfdual_square_p7();
    if (which == 0) which = A.example == 3 ? 3 : 2;
  } else {
    const auto F = field_from(A, true);
    require(!A.a.empty() && !A.alpha.empty() && !A.beta.empty(), "--a, --alpha and --beta are required");
    require(A.f_files.size() == F.p(), "--f must be given once for each i in F_p");
    P.field = F;
    P.a = parse_element(F, A.a);
    P.alpha = parse_element(F, A.alpha);
    P.beta = parse_element(F, A.beta);
    for (const auto& path : A.f_files) P.f.push_back(load(path));
    const auto k = P.f[0].k();
    P.g = A.g.empty() ? std::vector<std::uint64_t>(F.p(), 0) : parse_table(A.g, F.p(), ipow(F.p(), k));
  }
  require(which >= 1 && which <= 3, "--case must be 1, 2 or 3");
  const auto S = build_self_dual(which, P, rc.transform());
  Prediction pred{"selfdual", true, std::nullopt, std::nullopt, true, true};
  return finish_construct(rc, S.F, pred, S.closed_form_dual, A, {{"case", which}});
}

int construct_indirect(const RunConfig& rc, const ConstructArgs& A) {
  IndirectSumFamily fam;
  require(!A.f_files.empty(), "--f is required (one file per i in F_p^t)");
  for (const auto& path : A.f_files) fam.f.push_back(load(path));
  if (!A.alphas.empty()) {
    require(A.g_files.empty(), "give either --alphas (PS_ap blocks) or --g files, not both");
    const auto F = field_from(A, false);
    std::vector<FieldElem> alphas;
    for (auto part : split(A.alphas, ';')) alphas.push_back(parse_element(F, std::string(part)));
    std::vector<std::uint64_t> perm(F.order());
    for (Index i = 0; i < F.order(); ++i) perm[i] = i;
    if (!A.perm.empty()) perm = parse_table(A.perm, F.order(), F.order());
    fam.g = psap_blocks(F, alphas, perm);
  } else {
    require(A.g_files.size() >= 2, "--g must list g_0 .. g_t (at least two files) or use --alphas");
    for (const auto& path : A.g_files) fam.g.push_back(load(path));
  }
  const auto p = fam.g[0].p();
  const auto count = family_size(p, fam.g.size() - 1);
  const auto modulus = ipow(p, fam.f[0].k());
  fam.gsel = A.gsel.empty() ? std::vector<std::uint64_t>(count, 0) : parse_table(A.gsel, count, modulus);
  const auto sum = build_indirect_sum(fam, rc.transform());
  bool all = true;
  for (std::size_t i = 0; i < fam.f.size(); ++i)
    if (sum.dual_selector_image[i]) all = all && analyze(dual(fam.f[i], rc.transform()), rc.transform()).is_gbent;
  Prediction pred{"indirect", true, std::nullopt, std::nullopt, all, std::nullopt};
  return finish_construct(rc, sum.F, pred, sum.closed_form_dual, A);
}

int construct_quadratic(const RunConfig& rc, const ConstructArgs& A) {
  const auto F = field_from(A, false);
  require(!A.alpha.empty(), "--alpha is required");
  const auto alpha = parse_element(F, A.alpha);
  if (alpha.is_zero()) throw ConstructionError("alpha must be nonzero");
  const auto qb = quadratic_bent(alpha);
  Prediction pred{"quadratic", true, true, qb.mu.e == 0 ? "Regular" : "WeaklyRegular", true, qb.f == qb.dual};
  return finish_construct(rc, qb.f, pred, qb.dual, A, {{"mu", qb.mu.to_string()}});
}

int construct_mm(const RunConfig& rc, const ConstructArgs& A) {
  require(A.p != 0 && !A.g.empty(), "--p and --g are required");
  const auto g = parse_table(A.g, A.p, ipow(A.p, A.k));
  const auto f = mm_gbent(A.p, A.k, g);
  Prediction pred{"mm", true, true, "Regular", true, std::nullopt};
  return finish_construct(rc, f, pred, std::nullopt, A);
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const RunConfig& rc, const std::string& which, const std::string& path) {
  const auto f = load(path);
  if (which == "lambda") {
    const auto c = analyze(f, rc.transform());
    if (!c.is_gbent) {
      std::cerr << "not generalized bent: lambda is undefined\n";
      return kNegative;
    }
    const auto lam = extract_lambda(f, rc.transform());
    if (rc.json) {
      print_json(lam.to_json());
    } else {
      std::cout << "f* = p^(k-1) f_0* + lambda\n";
      for (Index a = 0; a < f.size(); ++a) std::cout << a << ' ' << lam.f0_dual[a] << ' ' << lam.lambda[a] << '\n';
    }
    return kOk;
  }
  if (which == "lemma1") {
    const auto r = check_component_bentness(f, rc.budget, rc.transform());
    if (rc.json)
      print_json(r.to_json());
    else {
      std::cout << r.property << ": " << to_string(r.status) << " (" << r.detail << ")\n";
      std::cout << "selectors checked: " << r.selectors_checked << ", non-bent components: " << r.witnesses.size() << '\n';
    }
    return r.status == CheckStatus::Violated ? kInternal : (r.lhs ? kOk : kNegative);
  }
  const auto r = check_component_duals(f, rc.budget, rc.transform());
  if (rc.json) {
    print_json(r.to_json());
  } else {
    for (const auto* part : {&r.dual_bentness, &r.self_duality}) {
      std::cout << part->property << ": " << to_string(part->status) << " (" << part->detail << ")\n";
      for (std::size_t i = 0; i < part->witnesses.size() && i < 5; ++i) {
        std::cout << "  selector";
        for (auto v : part->witnesses[i].selector) std::cout << ' ' << v;
        std::cout << ": " << part->witnesses[i].reason << '\n';
      }
      if (part->witnesses.size() > 5) std::cout << "  ... " << part->witnesses.size() - 5 << " more\n";
    }
    std::cout << "dual components off the f_0* + F(lambda) formula: " << r.dual_formula_mismatches << '\n';
  }
  if (r.dual_bentness.status == CheckStatus::Inapplicable) return kNegative;
  return r.holds() ? kOk : kInternal;
}

// ---------------------------------------------------------------- search-selfdual

int cmd_search(const RunConfig& rc, std::uint64_t p, unsigned n, unsigned k, const std::string& domain) {
  const auto spec = domain.empty() ? DomainSpec::dot(p, n) : DomainSpec::parse(p, domain);
  const auto r = search_self_dual(spec, k, rc.budget);
  if (rc.json) {
    Json w = Json::array();
    for (const auto& f : r.witnesses) w.push_back(Json(std::vector<std::uint64_t>(f.values().begin(), f.values().end())));
    print_json({{"spec", spec.to_string()}, {"k", k}, {"examined", r.examined}, {"bent", r.bent}, {"self_dual", w}});
  } else {
    std::cout << "examined " << r.examined << " functions on " << spec.to_string() << " into Z_" << ipow(p, k) << '\n';
    std::cout << "generalized bent: " << r.bent << '\n';
    std::cout << "self-dual: " << r.witnesses.size() << '\n';
    for (const auto& f : r.witnesses) {
      for (Index x = 0; x < f.size(); ++x) std::cout << (x ? " " : "  ") << f[x];
      std::cout << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- verify-paper

int cmd_verify(const RunConfig& rc, const std::string& item) {
  const auto v = verify_item(item, rc.transform(), rc.seed);
  if (rc.json) {
    print_json(v.to_json());
  } else {
    for (const auto& c : v.claims)
      std::cout << (c.ok ? "pass  " : "FAIL  ") << c.what << (c.observed.empty() ? "" : " [" + c.observed + "]") << '\n';
    std::cout << "item " << item << ": " << (v.passed() ? "pass" : "FAIL") << '\n';
  }
  return v.passed() ? kOk : kNegative;
}

int run(int argc, char** argv) {
  CLI::App app{"Generalized bent functions V_n -> Z_{p^k}: constructions, Walsh spectra, duals and decompositions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_flag("--json", rc.json, "machine-readable output");
  app.add_option("--budget", rc.budget, "upper bound on exhaustive enumerations")->capture_default_str();
  app.add_option("--threads", rc.threads, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
  app.add_option("--seed", rc.seed, "seed for randomized spot checks")->capture_default_str();
  app.add_option("-o,--output", rc.out, "output path");

  int code = kOk;
  std::string path, expect, which, domain;
  bool properties = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "certify a function table");
  analyze_cmd->add_option("file", path, "function table")->required();
  analyze_cmd->add_option("--expect", expect, "sidecar written by construct");
  analyze_cmd->add_flag("--properties", properties, "also check f**(x) = f(-x), even symmetry, sign at zero, inversion identity");
  analyze_cmd->callback([&] { code = cmd_analyze(rc, path, expect, properties); });

  auto* dual_cmd = app.add_subcommand("dual", "write the dual of a generalized bent function");
  dual_cmd->add_option("file", path, "function table")->required();
  dual_cmd->callback([&] { code = cmd_dual(rc, path); });

  auto* transform_cmd = app.add_subcommand("transform", "dump the Walsh spectrum");
  transform_cmd->add_option("file", path, "function table")->required();
  transform_cmd->callback([&] { code = cmd_transform(rc, path); });

  ConstructArgs A;
  auto* construct_cmd = app.add_subcommand("construct", "build a function and its expected-verdict sidecar");
  construct_cmd->require_subcommand(1);
  construct_cmd->fallthrough();
  auto field_opts = [&](CLI::App* c) {
    c->fallthrough();
    c->add_option("--p", A.p, "characteristic");
    c->add_option("--poly", A.poly, "minimal polynomial coefficients, constant term first");
  };
  auto* thm1 = construct_cmd->add_subcommand("thm1", "p^(k-1)(Tr(x^2/(1+y1 alpha+y2 beta)) + y1 y2) + g(y1) over F_{p^m} x F_p^2");
  field_opts(thm1);
  thm1->add_option("--example", A.example, "preset 1, 2 or 5");
  thm1->add_option("--k", A.k, "output ring Z_{p^k}");
  thm1->add_option("--alpha", A.alpha, "z^E, coords:c0,c1,... or an integer");
  thm1->add_option("--beta", A.beta, "z^E, coords:c0,c1,... or an integer");
  thm1->add_option("--g", A.g, "table F_p -> Z_{p^k}: v0,v1,... or pow:e[,scale:c]");
  thm1->add_option("--dual-out", A.dual_out, "also write the closed-form dual");
  thm1->callback([&] { code = construct_thm1(rc, A); });

  auto* selfdual = construct_cmd->add_subcommand("selfdual", "self-dual sum f_{h(c)}(x) + p^(k-1) Tr(beta/2 (y1^2+y2^2)) + g(h(c))");
  field_opts(selfdual);
  selfdual->add_option("--example", A.example, "preset 3 or 4");
  selfdual->add_option("--case", A.which, "selector: 1 Tr(c), 2 Tr(c^2), 3 Tr(c^4)");
  selfdual->add_option("--a", A.a, "nonzero field element");
  selfdual->add_option("--alpha", A.alpha, "z^((p^m-1)/4) or its negative");
  selfdual->add_option("--beta", A.beta, "z^((p^m-1)/4) or its negative");
  selfdual->add_option("--f", A.f_files, "self-dual f_i files, i = 0 .. p-1");
  selfdual->add_option("--g", A.g, "table F_p -> Z_{p^k}");
  selfdual->add_option("--dual-out", A.dual_out, "also write the closed-form dual");
  selfdual->callback([&] { code = construct_selfdual(rc, A); });

  auto* indirect = construct_cmd->add_subcommand("indirect", "indirect sum f_{s(y)}(x) + p^(k-1) g_0(y) + g(s(y))");
  field_opts(indirect);
  indirect->add_option("--f", A.f_files, "f_i files, i in F_p^t in lexicographic order");
  indirect->add_option("--g", A.g_files, "bent g_0 .. g_t files");
  indirect->add_option("--alphas", A.alphas, "PS_ap blocks Tr(alpha_s G(y1/y2)): alpha_0;alpha_1;...");
  indirect->add_option("--perm", A.perm, "permutation G of the field as an index table (default identity)");
  indirect->add_option("--gsel", A.gsel, "table F_p^t -> Z_{p^k}");
  indirect->add_option("--dual-out", A.dual_out, "also write the closed-form dual");
  indirect->callback([&] { code = construct_indirect(rc, A); });

  auto* quadratic = construct_cmd->add_subcommand("quadratic", "Tr(alpha x^2) on F_{p^m}");
  field_opts(quadratic);
  quadratic->add_option("--alpha", A.alpha, "nonzero field element");
  quadratic->add_option("--dual-out", A.dual_out, "also write the dual");
  quadratic->callback([&] { code = construct_quadratic(rc, A); });

  auto* mm = construct_cmd->add_subcommand("mm", "p^(k-1) z1 z2 + g(z2) on F_p^2");
  mm->fallthrough();
  mm->add_option("--p", A.p, "characteristic");
  mm->add_option("--k", A.k, "output ring Z_{p^k}");
  mm->add_option("--g", A.g, "table F_p -> Z_{p^k}");
  mm->callback([&] { code = construct_mm(rc, A); });

  auto* decompose_cmd = app.add_subcommand("decompose", "component functions f_0 + F(f_1, ..., f_{k-1})");
  decompose_cmd->add_option("check", which, "lemma1 | theorem6 | lambda")
      ->required()
      ->check(CLI::IsMember({"lemma1", "theorem6", "lambda"}));
  decompose_cmd->add_option("file", path, "function table")->required();
  decompose_cmd->callback([&] { code = cmd_decompose(rc, which, path); });

  std::uint64_t sp = 3;
  unsigned sn = 1, sk = 1;
  auto* search_cmd = app.add_subcommand("search-selfdual", "enumerate all functions on a small domain");
  search_cmd->add_option("--p", sp, "characteristic")->capture_default_str();
  search_cmd->add_option("--n", sn, "dimension of F_p^n")->capture_default_str();
  search_cmd->add_option("--k", sk, "output ring Z_{p^k}")->capture_default_str();
  search_cmd->add_option("--domain", domain, "domain description instead of F_p^n");
  search_cmd->callback([&] { code = cmd_search(rc, sp, sn, sk, domain); });

  auto* verify_cmd = app.add_subcommand("verify-paper", "scripted check of a preset instance");
  verify_cmd->add_option("item", which, "1 .. 6, g3 or thm4")->required()->check(CLI::IsMember(verification_items()));
  verify_cmd->callback([&] { code = cmd_verify(rc, which); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gbent::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const gbent::ConstructionError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const gbent::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const gbent::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const gbent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
