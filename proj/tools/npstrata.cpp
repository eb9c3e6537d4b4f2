/*
 * Copyright 2026 The npstrata Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// npstrata: command line front end.
//
// Exit codes: 0 success, 1 a verification found mismatches, 2 usage error,
// 3 invalid mathematical input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "npstrata/classify.hpp"
#include "npstrata/degeneration.hpp"
#include "npstrata/kottwitz.hpp"
#include "npstrata/mass.hpp"
#include "npstrata/qr_family.hpp"
#include "npstrata/registry.hpp"
#include "npstrata/report.hpp"
#include "npstrata/tables.hpp"

namespace {

using nlohmann::json;
using namespace npstrata;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::string emit;
  std::string golden;
};

struct DatumArgs {
  std::optional<int> m;
  std::string a;
  std::string datum;
  std::string family;
  std::optional<long long> p;
  std::optional<long long> p_class;
};

void add_datum_options(CLI::App* cmd, DatumArgs& args, bool with_family) {
  cmd->add_option("--m", args.m, "cover degree m");
  cmd->add_option("--a", args.a, "inertia type, comma separated");
  cmd->add_option("--datum", args.datum, "datum as \"m=7 N=4 a=2,4,4,4\"");
  if (with_family) cmd->add_option("--family", args.family, "special family id, e.g. M17");
}

void add_residue_options(CLI::App* cmd, DatumArgs& args) {
  auto* p = cmd->add_option("--p", args.p, "a prime not dividing m");
  auto* c = cmd->add_option("--p-class", args.p_class, "a residue class of p modulo m");
  p->excludes(c);
}

std::vector<long long> parse_list(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream is(s);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

const Registry& registry(const Globals& g) {
  static std::optional<Registry> loaded;
  std::string path = g.golden;
  if (path.empty())
    if (const char* env = std::getenv("NPSTRATA_GOLDEN")) path = env;
  if (path.empty()) return Registry::builtin();
  if (!loaded) loaded = Registry::from_file(path);
  return *loaded;
}

MonodromyDatum resolve_datum(const DatumArgs& args, const Globals& g) {
  const int sources = (args.m ? 1 : 0) + (!args.datum.empty() ? 1 : 0) + (!args.family.empty() ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --m/--a, --datum or --family");
  if (!args.family.empty()) return registry(g).lookup(args.family).datum;
  if (!args.datum.empty()) return parse_datum(args.datum);
  if (args.a.empty()) throw UsageError("--m needs --a");
  return MonodromyDatum::make(*args.m, parse_list(args.a));
}

Residue resolve_residue(const DatumArgs& args, int m) {
  if (args.p) {
    if (!is_prime(*args.p)) throw DomainError(std::to_string(*args.p) + " is not prime");
    return Residue::make(m, *args.p);
  }
  if (args.p_class) return Residue::make(m, *args.p_class);
  throw UsageError("give --p or --p-class");
}

void output(const Globals& g, const json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  if (!g.emit.empty()) {
    std::ofstream out(g.emit);
    if (!out) throw DomainError("cannot write " + g.emit);
    out << j.dump(2) << "\n";
  }
}

int cmd_analyze(const DatumArgs& args, const Globals& g) {
  const auto d = resolve_datum(args, g);
  const auto report = build_report(d, resolve_residue(args, d.m()));
  output(g, report_to_json(report), render_text(report));
  return 0;
}

int cmd_tables(const std::string& family, const Globals& g) {
  const auto result =
      verify_tables(registry(g), family.empty() ? std::nullopt : std::optional(family));
  json j = tables_to_json(result);
  j["cells_checked"] = result.cells_checked;
  j["mismatches"] = json::array();
  std::ostringstream os;
  for (const auto& mm : result.mismatches) {
    j["mismatches"].push_back({{"family", mm.family},
                               {"cell", mm.cell},
                               {"field", mm.field},
                               {"expected", mm.expected},
                               {"actual", mm.actual},
                               {"source", mm.source}});
    os << "MISMATCH " << mm.family << " " << mm.cell << " " << mm.field << "\n"
       << "  expected " << mm.expected << "\n  computed " << mm.actual << "\n";
    if (!mm.source.empty()) os << "  source   " << mm.source << "\n";
  }
  os << result.cells_checked << " cells checked, " << result.mismatches.size()
     << " mismatches\n";
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << os.str();
  }
  if (!g.emit.empty()) {
    std::ofstream out(g.emit);
    if (!out) throw DomainError("cannot write " + g.emit);
    out << tables_to_json(result).dump(2) << "\n";
  }
  return result.ok() ? 0 : kExitMismatch;
}

int cmd_classify(const DatumArgs& args, const Globals& g) {
  const auto d = resolve_datum(args, g);
  const auto p = resolve_residue(args, d.m());
  const auto statuses = classify(d, p, registry(g));
  json j = json::array();
  std::ostringstream os;
  for (const auto& s : statuses) {
    j.push_back({{"polygon", polygon_to_json(s.polygon)},
                 {"text", s.polygon.text()},
                 {"verdict", verdict_name(s.verdict)},
                 {"justification", s.justification}});
    os << s.polygon.text() << " : " << verdict_name(s.verdict) << "\n";
  }
  output(g,
         json{{"schema", kReportSchema},
              {"datum", datum_to_json(d)},
              {"class", class_text(d.m(), class_of(p))},
              {"classification", j}},
         os.str());
  return 0;
}

int cmd_degenerations(const DatumArgs& args, const Globals& g) {
  const auto d = resolve_datum(args, g);
  json list = json::array();
  std::ostringstream os;
  const auto degs = degenerations(d);
  for (const auto& deg : degs) {
    list.push_back({{"text", deg.text()},
                    {"alpha1", datum_to_json(deg.alpha1)},
                    {"alpha2", datum_to_json(deg.alpha2)},
                    {"r", deg.r}});
    os << deg.text() << "\n";
  }
  if (degs.empty()) os << "none\n";
  json j{{"schema", kReportSchema}, {"datum", datum_to_json(d)}, {"degenerations", list}};
  if (args.p || args.p_class) {
    const auto p = resolve_residue(args, d.m());
    const auto dec = pel_decomposable_set(d, p);
    j["class"] = class_text(d.m(), class_of(p));
    j["decomposable"] = json::array();
    for (const auto& nu : dec) j["decomposable"].push_back(nu.text());
    os << "PEL-decomposable (" << class_text(d.m(), class_of(p)) << "): " << set_text(dec) << "\n";
  }
  output(g, j, os.str());
  return 0;
}

int cmd_mass(const std::string& kind, int n, const std::vector<long long>& qs, const Globals& g) {
  if (qs.empty()) throw UsageError("give --q");
  const auto k = parse_mass_case(kind);
  json j{{"case", kind}, {"n", n}, {"table", json::array()}};
  std::string text;
  if (qs.size() == 1) {
    const auto lambda = local_factor({k, n, qs.front()});
    j["table"].push_back({{"q", qs.front()}, {"lambda", lambda.str()}});
    text = lambda.str() + "\n";
  } else {
    for (const auto& [q, lambda] : growth_table(k, n, qs))
      j["table"].push_back({{"q", q}, {"lambda", lambda.str()}});
    text = growth_table_tsv(k, n, qs);
  }
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  if (!g.emit.empty()) {
    std::ofstream out(g.emit);
    if (!out) throw DomainError("cannot write " + g.emit);
    out << (qs.size() == 1 ? "q\tlambda\n" + std::to_string(qs.front()) + "\t" + text : text);
  }
  return 0;
}

int cmd_qr(int m, bool check, const Globals& g) {
  const auto data = qr_datum(m);
  const auto closed = qr_mu_ordinary_closed_form(m);
  json j{{"schema", kReportSchema},
         {"datum", datum_to_json(data.datum)},
         {"c1", data.c1},
         {"c2", data.c2},
         {"E1", data.E1},
         {"E2", data.E2},
         {"genus", data.genus},
         {"p_bound", data.p_bound},
         {"mu_ordinary", polygon_to_json(closed.polygon)},
         {"mu_ordinary_text", closed.polygon.text()},
         {"module", closed.module_text},
         {"half_slope_multiplicity", closed.half_multiplicity}};
  std::ostringstream os;
  os << "datum        " << data.datum.text() << "\n"
     << "c1, c2       " << data.c1 << ", " << data.c2 << "\n"
     << "genus        " << data.genus << "\n"
     << "mu-ordinary  " << closed.polygon.text() << "\n"
     << "module       " << closed.module_text << "\n"
     << "slope 1/2    multiplicity " << closed.half_multiplicity << "\n"
     << "occurrence   for primes p >= " << data.p_bound << " that are non-residues mod " << m
     << "\n";
  int status = 0;
  if (check) {
    bool all = true;
    j["check"] = json::array();
    for (const auto& c : qr_cross_check(m)) {
      const bool ok = c.polygon_ok && c.module_ok;
      all = all && ok;
      j["check"].push_back({{"residue", c.residue},
                            {"polygon", c.general.text()},
                            {"module", c.general_module},
                            {"ok", ok}});
      if (!ok)
        os << "MISMATCH at p = " << c.residue << " mod " << m << ": " << c.general.text() << ", "
           << c.general_module << "\n";
    }
    os << "oracle " << (all ? "OK" : "FAILED") << "\n";
    if (!all) status = kExitMismatch;
  }
  output(g, j, os.str());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polygon strata of cyclic-cover families"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "print JSON instead of text");
  app.add_option("--emit", g.emit, "also write the JSON output to this file");
  app.add_option("--golden", g.golden, "golden tables file (default: built-in copy)");

  DatumArgs analyze_args, classify_args, degen_args;
  auto* analyze = app.add_subcommand("analyze", "full report for a datum and residue class");
  add_datum_options(analyze, analyze_args, true);
  add_residue_options(analyze, analyze_args);

  std::string tables_family;
  auto* tables = app.add_subcommand("tables", "recompute the golden tables and compare");
  tables->add_option("--family", tables_family, "only this family, e.g. M17");

  auto* classify_cmd = app.add_subcommand("classify", "smooth-occurrence verdicts");
  add_datum_options(classify_cmd, classify_args, true);
  add_residue_options(classify_cmd, classify_args);

  auto* degen = app.add_subcommand("degenerations", "degenerations of compact type");
  add_datum_options(degen, degen_args, true);
  add_residue_options(degen, degen_args);

  std::string mass_case;
  int mass_n = 1;
  std::vector<long long> mass_q;
  auto* mass = app.add_subcommand("mass", "local factors of the mass formula");
  mass->add_option("--case", mass_case, "split or inert")->required();
  mass->add_option("--n", mass_n, "hermitian dimension")->required();
  mass->add_option("--q", mass_q, "residue field size(s)")->delimiter(',')->required();

  int qr_m = 0;
  bool qr_check = false;
  auto* qr = app.add_subcommand("qr", "the quadratic-residue family");
  qr->add_option("--m", qr_m, "prime m = 3 mod 4")->required();
  qr->add_flag("--check", qr_check, "compare with the general algorithm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args, g);
    if (*tables) return cmd_tables(tables_family, g);
    if (*classify_cmd) return cmd_classify(classify_args, g);
    if (*degen) return cmd_degenerations(degen_args, g);
    if (*mass) return cmd_mass(mass_case, mass_n, mass_q, g);
    if (*qr) return cmd_qr(qr_m, qr_check, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const npstrata::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
