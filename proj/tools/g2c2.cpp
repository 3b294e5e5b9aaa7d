// Copyright 2026 The g2c2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// g2c2: verify, dump and classify genus-2 invariants in characteristic 2.
//
// Exit codes: 0 success, 1 failed check or runtime error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "g2c2/cache.hpp"
#include "g2c2/verify.hpp"

namespace {

using namespace g2c2;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string cache_dir;
  bool no_cache = false;
};

Tables load_tables(const GlobalOptions& g) {
  if (g.no_cache) return build_tables();
  TableCache cache(g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir));
  CacheStatus status;
  Tables t = cache.load_or_build(&status);
  std::cerr << "cache: " << cache_status_name(status) << " (" << cache.path().string() << ")\n";
  return t;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, const std::string& json_path) {
  VerifyReport all;
  all.suite = suite;
  auto run = [&](const VerifyReport& r) {
    std::cout << r.to_text();
    for (auto c : r.checks) {
      if (suite == "all") c.id = r.suite + "/" + c.id;
      all.checks.push_back(std::move(c));
    }
  };
  std::optional<Tables> tables;
  if (suite == "invariants" || suite == "curves" || suite == "all") tables = load_tables(g);
  if (suite == "invariants" || suite == "all") run(verify_invariants(tables->igusa, tables->k));
  if (suite == "hilbert" || suite == "all") run(verify_hilbert());
  if (suite == "curves" || suite == "all") run(verify_curves(tables->k));
  if (suite == "all") std::cout << "all: " << (all.ok() ? "all checks passed" : "FAILED") << "\n";
  if (!json_path.empty()) write_json(json_path, all.to_json());
  return all.ok() ? 0 : kExitFail;
}

int cmd_kpoly(const GlobalOptions& g, const std::string& name, const std::string& format) {
  const Tables t = load_tables(g);
  const InvariantRecord* rec = nullptr;
  for (const auto* r : t.k.all())
    if (r->name == name) rec = r;
  if (!rec) throw UsageError("unknown invariant '" + name + "'; expected one of K1 K2 K3 K4 K8 K10 K12 K15");
  if (format == "json") {
    nlohmann::ordered_json j = to_json(rec->body);
    j["name"] = rec->name;
    j["weight"] = rec->weight;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_text(rec->body) << "\n";
  }
  return 0;
}

int cmd_dump(const GlobalOptions& g, const std::string& name, const std::string& format) {
  const Tables t = load_tables(g);
  const ScaledInvariant* inv = nullptr;
  for (const auto* j : t.igusa.all())
    if (j->name == name) inv = j;
  if (!inv) throw UsageError("unknown invariant '" + name + "'; expected one of J2 J4 J6 J8 J10 I4");
  if (format == "json") {
    nlohmann::ordered_json j = to_json(inv->value.body);
    j["name"] = inv->name;
    j["scale"] = format_scale(inv->value.scale);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "scale " << format_scale(inv->value.scale) << "\n" << to_text(inv->value.body) << "\n";
  }
  return 0;
}

std::string field_name(unsigned n) { return "F" + std::to_string(1u << n); }

int cmd_curve(const GlobalOptions& g, const std::string& a, const std::string& b, unsigned n, bool info,
              bool json) {
  if (n < 1 || n > 8) throw UsageError("--field-deg must be between 1 and 8");
  const BinaryField& f = BinaryField::get(n);
  const Genus2Curve c = parse_curve(a, b, f);
  if (!info && !json) {
    std::cout << "y^2 + (" << c.a().to_string() << ")*y = " << c.b().to_string() << " over " << field_name(n) << "\n";
    return 0;
  }
  const Tables t = load_tables(g);
  const CurveInvariants inv(t.k);
  if (json) {
    std::cout << curve_record(c, inv).dump() << "\n";
    return 0;
  }
  const bool smooth = is_smooth(c);
  std::cout << "field=" << field_name(n) << "\n"
            << "a=" << c.a().to_string() << "\n"
            << "b=" << c.b().to_string() << "\n"
            << "smooth=" << (smooth ? "true" : "false") << "\n"
            << "two_rank=" << two_rank(c) << "\n";
  if (smooth) {
    std::cout << "points(" << field_name(n) << ")=" << count_points(c, 1) << "\n";
    if (2 * n <= BinaryField::kMaxDegree) std::cout << "points(" << field_name(2 * n) << ")=" << count_points(c, 2) << "\n";
    std::cout << "L=" << l_polynomial_to_string(l_polynomial(c)) << "\n";
  }
  for (const auto& [name, v] : inv.evaluate(c)) std::cout << name << "=" << f.to_string(v) << "\n";
  return 0;
}

int cmd_enumerate(const GlobalOptions& g, unsigned n, const std::string& out) {
  if (n < 1 || n > 2) throw UsageError("--field-deg must be 1 or 2 for exhaustive enumeration");
  const Tables t = load_tables(g);
  const CurveInvariants inv(t.k);
  const BinaryField& f = BinaryField::get(n);
  unsigned last = 0;
  const EnumerationReport rep = enumerate_curves(f, inv, [&](std::uint32_t done, std::uint32_t total) {
    const unsigned pct = static_cast<unsigned>(100ull * done / total);
    if (n > 1 && pct >= last + 10) {
      std::cerr << "enumerate: " << pct << "%\n";
      last = pct;
    }
  });
  std::cout << "field " << field_name(n) << ": " << rep.smooth << " smooth curves of " << rep.pairs << " pairs\n";
  for (const auto& [key, count] : rep.buckets)
    std::cout << "two_rank=" << std::get<0>(key) << " K1=" << f.to_string(std::get<1>(key))
              << " K10_nonzero=" << (std::get<2>(key) ? "true" : "false") << " count=" << count << "\n";
  std::cout << "violations: K1/2-rank " << rep.k1_rank_violations << ", L/2-rank " << rep.l_rank_violations
            << ", K10 = 0 on smooth " << rep.k10_zero_on_smooth << "\n";
  if (!out.empty()) write_json(out, rep.to_json());
  return rep.ok() ? 0 : kExitFail;
}

int cmd_hilbert(long max_k, bool table) {
  if (max_k < 0) throw UsageError("--max-k must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(max_k);
  const TruncatedSeries g = expand_G(n);
  if (table) std::cout << "k\tr(k)\t|N_k|\tc(k)\n";
  for (std::size_t k = 0; k <= n; ++k) {
    if (table)
      std::cout << k << "\t" << g[k] << "\t" << monomial_basis_N(static_cast<unsigned>(k)).size() << "\t"
                << c_of(static_cast<long>(k)) << "\n";
    else
      std::cout << "r(" << k << ")=" << g[k] << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 invariants in characteristic 2"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--cache-dir", global.cache_dir, "Cache directory (default $G2C2_CACHE or .g2c2-cache)");
  app.add_flag("--no-cache", global.no_cache, "Build the tables without reading or writing the cache");

  std::string suite = "all", json_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember({"invariants", "hilbert", "curves", "all"}));
  verify->add_option("--json", json_path, "Write the report as JSON to this file");

  std::string name, format = "text";
  auto* kpoly = app.add_subcommand("kpoly", "Print a characteristic-2 invariant");
  kpoly->add_option("--name", name, "K1, K2, K3, K4, K8, K10, K12 or K15")->required();
  kpoly->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* dump = app.add_subcommand("dump", "Print an Igusa invariant with its scale");
  dump->add_option("--name", name, "J2, J4, J6, J8, J10 or I4")->required();
  dump->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string a_text, b_text;
  unsigned field_deg = 1;
  bool info = false, curve_json = false;
  auto* curve = app.add_subcommand("curve", "Inspect the curve y^2 + a(x) y = b(x)");
  curve->add_option("--a", a_text, "a(x), degree <= 3, constants in g")->required();
  curve->add_option("--b", b_text, "b(x), degree <= 6, constants in g")->required();
  curve->add_option("--field-deg", field_deg, "Work over F_{2^n}");
  curve->add_flag("--info", info, "Smoothness, 2-rank, point counts, L-polynomial and invariants");
  curve->add_flag("--json", curve_json, "Print the JSON curve record");

  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "Classify every curve over F2 or F4");
  enumerate->add_option("--field-deg", field_deg, "1 or 2");
  enumerate->add_option("--out", out_path, "Write the JSON report to this file");

  long max_k = 0;
  bool table = false;
  auto* hilbert = app.add_subcommand("hilbert", "Print dimensions r(k) of the graded ring");
  hilbert->add_option("--max-k", max_k, "Largest weight")->required();
  hilbert->add_flag("--table", table, "TSV with columns k, r(k), |N_k|, c(k)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(global, suite, json_path);
    if (*kpoly) return cmd_kpoly(global, name, format);
    if (*dump) return cmd_dump(global, name, format);
    if (*curve) return cmd_curve(global, a_text, b_text, field_deg, info, curve_json);
    if (*enumerate) return cmd_enumerate(global, field_deg, out_path);
    if (*hilbert) return cmd_hilbert(max_k, table);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
