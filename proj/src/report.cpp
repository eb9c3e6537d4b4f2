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

#include "npstrata/report.hpp"

#include <algorithm>
#include <sstream>

#include "npstrata/classify.hpp"
#include "npstrata/degeneration.hpp"
#include "npstrata/kottwitz.hpp"
#include "npstrata/registry.hpp"

namespace npstrata {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError("report check failed: " + what);
}

}  // namespace

Report build_report(const MonodromyDatum& d, Residue p) {
  if (p.modulus() != d.m()) p = Residue::make(d.m(), p.value());
  Report r(d);
  r.residue_class = class_of(p);
  // Use the class representative so every p in the class gives equal output.
  p = Residue::make(d.m(), r.residue_class.front());
  r.family = Registry::builtin().match_datum(d);
  const auto sig = signature(d);
  r.signature = sig.values();
  r.genus = genus(d);
  r.dimension = family_dimension(d);
  for (const auto& o : orbit_decomposition(sig, p)) {
    OrbitReport orep{o.cycle, o.f, o.g, o.dual_id, mu_ordinary_orbit(o).polygon,
                     admissible_orbit_polygons(o)};
    r.orbits.push_back(std::move(orep));
  }
  r.mu_ordinary = mu_ordinary(d, p);
  r.np_set = newton_polygon_set(d, p);
  r.basic = basic_polygon(d, p);

  const auto module = mu_ordinary_module(d, p);
  r.module_invariants = module_invariants(module);
  r.eo = eo_type(module);
  const auto components = decompose(module);
  r.module_summary = summarize(components);
  for (const auto& c : components)
    r.components.push_back({c.word, c.name, c.copies, c.invariants, c.eo});

  if (d.n_points() >= 4) {
    for (const auto& deg : degenerations(d)) r.degenerations.push_back(deg.text());
    r.decomposable = pel_decomposable_set(d, p);
  }
  if (r.family) {
    for (const auto& s : classify(d, p)) {
      std::string witness;
      if (s.witness)
        witness = s.witness->degeneration.text() + " with " + s.witness->nu1.text() + " and " +
                  s.witness->nu2.text();
      r.verdicts.push_back({s.polygon, verdict_name(s.verdict), s.justification, witness});
    }
  }

  require(r.module_invariants.rank == 2 * r.genus, "module rank is 2g");
  require(r.module_invariants.p_rank == invariants(r.mu_ordinary).p_rank,
          "module p-rank equals the slope-0 multiplicity");
  require(r.module_invariants.a_number == a_number_by_kernels(module),
          "a-number by images equals a-number by kernels");
  int fixed = 0;
  for (std::size_t i = 0; i < r.eo.psi.size(); ++i)
    if (r.eo.psi[i] == static_cast<int>(i + 1)) ++fixed;
  require(fixed == r.module_invariants.p_rank, "EO type is compatible with the p-rank");
  require(r.np_set.front() == r.mu_ordinary && r.np_set.back() == r.basic,
          "set is bounded by the mu-ordinary and basic polygons");
  for (const auto& nu : r.decomposable)
    require(std::find(r.np_set.begin(), r.np_set.end(), nu) != r.np_set.end(),
            "decomposable polygon " + nu.text() + " belongs to the set");
  return r;
}

json datum_to_json(const MonodromyDatum& d) {
  return json{{"m", d.m()}, {"N", d.n_points()}, {"a", d.a()}};
}

MonodromyDatum datum_from_json(const json& j) {
  const auto a = j.at("a").get<std::vector<long long>>();
  const int n = j.contains("N") ? j.at("N").get<int>() : static_cast<int>(a.size());
  return MonodromyDatum::make(j.at("m").get<int>(), n, a);
}

json polygon_to_json(const NewtonPolygon& nu) {
  json out = json::array();
  for (const auto& s : nu.segments()) out.push_back({s.slope.num(), s.slope.den(), s.multiplicity});
  return out;
}

NewtonPolygon polygon_from_json(const json& j) {
  std::vector<Segment> segs;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw DomainError("polygon segments are [num, den, mult]");
    segs.push_back({Slope(t[0].get<long long>(), t[1].get<long long>()), t[2].get<long long>()});
  }
  return NewtonPolygon(std::move(segs));
}

namespace {

json poly_entry(const NewtonPolygon& nu) {
  return json{{"segments", polygon_to_json(nu)}, {"text", nu.text()}};
}

NewtonPolygon poly_entry_from(const json& j) { return polygon_from_json(j.at("segments")); }

json invariants_json(const ModuleInvariants& inv) {
  return json{{"rank", inv.rank}, {"p_rank", inv.p_rank}, {"a_number", inv.a_number}};
}

ModuleInvariants invariants_from(const json& j) {
  return {j.at("rank").get<int>(), j.at("p_rank").get<int>(), j.at("a_number").get<int>()};
}

}  // namespace

json report_to_json(const Report& r) {
  json out;
  out["schema"] = kReportSchema;
  out["datum"] = datum_to_json(r.datum);
  out["residue_class"] = r.residue_class;
  out["class"] = class_text(r.datum.m(), r.residue_class);
  out["family"] = r.family ? json(*r.family) : json(nullptr);
  out["signature"] = r.signature;
  out["genus"] = r.genus;
  out["dimension"] = r.dimension;
  out["orbits"] = json::array();
  for (const auto& o : r.orbits) {
    json admissible = json::array();
    for (const auto& nu : o.admissible) admissible.push_back(poly_entry(nu));
    out["orbits"].push_back({{"cycle", o.cycle},
                             {"f", o.f},
                             {"g", o.g},
                             {"dual", o.dual},
                             {"mu", poly_entry(o.mu)},
                             {"admissible", admissible}});
  }
  out["mu_ordinary"] = poly_entry(r.mu_ordinary);
  out["np_set"] = json::array();
  for (const auto& nu : r.np_set) out["np_set"].push_back(poly_entry(nu));
  out["basic"] = poly_entry(r.basic);
  json dm = invariants_json(r.module_invariants);
  dm["eo_type"] = r.eo.psi;
  dm["summary"] = r.module_summary;
  dm["components"] = json::array();
  for (const auto& c : r.components) {
    json cj = invariants_json(c.invariants);
    cj["word"] = c.word;
    cj["presentation"] = word_text(c.word);
    cj["name"] = c.name;
    cj["copies"] = c.copies;
    cj["eo_type"] = c.eo ? json(c.eo->psi) : json(nullptr);
    dm["components"].push_back(cj);
  }
  out["dieudonne"] = dm;
  out["degenerations"] = r.degenerations;
  out["decomposable"] = json::array();
  for (const auto& nu : r.decomposable) out["decomposable"].push_back(poly_entry(nu));
  out["classification"] = json::array();
  for (const auto& v : r.verdicts)
    out["classification"].push_back({{"polygon", poly_entry(v.polygon)},
                                     {"verdict", v.verdict},
                                     {"justification", v.justification},
                                     {"witness", v.witness}});
  return out;
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema)
      throw DomainError("unsupported report schema " + j.at("schema").dump());
    Report r(datum_from_json(j.at("datum")));
    r.residue_class = j.at("residue_class").get<std::vector<int>>();
    if (!j.at("family").is_null()) r.family = j.at("family").get<std::string>();
    r.signature = j.at("signature").get<std::vector<int>>();
    r.genus = j.at("genus").get<int>();
    r.dimension = j.at("dimension").get<int>();
    for (const auto& o : j.at("orbits")) {
      OrbitReport orep{o.at("cycle").get<std::vector<int>>(), o.at("f").get<std::vector<int>>(),
                       o.at("g").get<int>(), o.at("dual").get<int>(), poly_entry_from(o.at("mu")),
                       {}};
      for (const auto& nu : o.at("admissible")) orep.admissible.push_back(poly_entry_from(nu));
      r.orbits.push_back(std::move(orep));
    }
    r.mu_ordinary = poly_entry_from(j.at("mu_ordinary"));
    for (const auto& nu : j.at("np_set")) r.np_set.push_back(poly_entry_from(nu));
    r.basic = poly_entry_from(j.at("basic"));
    const auto& dm = j.at("dieudonne");
    r.module_invariants = invariants_from(dm);
    r.eo.psi = dm.at("eo_type").get<std::vector<int>>();
    r.module_summary = dm.at("summary").get<std::string>();
    for (const auto& c : dm.at("components")) {
      ComponentReport cr{c.at("word").get<std::string>(), c.at("name").get<std::string>(),
                         c.at("copies").get<int>(), invariants_from(c), std::nullopt};
      if (!c.at("eo_type").is_null()) cr.eo = EOType{c.at("eo_type").get<std::vector<int>>()};
      r.components.push_back(std::move(cr));
    }
    r.degenerations = j.at("degenerations").get<std::vector<std::string>>();
    for (const auto& nu : j.at("decomposable")) r.decomposable.push_back(poly_entry_from(nu));
    for (const auto& v : j.at("classification"))
      r.verdicts.push_back({poly_entry_from(v.at("polygon")), v.at("verdict").get<std::string>(),
                            v.at("justification").get<std::string>(),
                            v.at("witness").get<std::string>()});
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "datum        " << r.datum.text();
  if (r.family) os << "  (" << *r.family << ")";
  os << "\nclass        " << class_text(r.datum.m(), r.residue_class) << "\n";
  os << "signature    (";
  for (std::size_t i = 0; i < r.signature.size(); ++i) os << (i ? "," : "") << r.signature[i];
  os << ")\ngenus        " << r.genus << "\ndimension    " << r.dimension << "\n\norbits\n";
  for (const auto& o : r.orbits) {
    os << "  (";
    for (std::size_t i = 0; i < o.cycle.size(); ++i) os << (i ? "," : "") << o.cycle[i];
    os << ")  f=(";
    for (std::size_t i = 0; i < o.f.size(); ++i) os << (i ? "," : "") << o.f[i];
    os << ")  g=" << o.g << "  dual=#" << o.dual << "  mu=" << o.mu.text() << "\n";
  }
  os << "\nmu-ordinary  " << r.mu_ordinary.text() << "\nbasic        " << r.basic.text()
     << "\nNP set       " << set_text(r.np_set) << "\n\n";
  os << "mu-ordinary Dieudonne module  " << r.module_summary << "\n";
  os << "  rank " << r.module_invariants.rank << ", p-rank " << r.module_invariants.p_rank
     << ", a-number " << r.module_invariants.a_number << ", EO type " << r.eo.text() << "\n";
  for (const auto& c : r.components) {
    os << "  " << word_text(c.word);
    if (c.copies > 1) os << " x" << c.copies;
    os << "  " << c.name;
    if (c.eo) os << "  EO " << c.eo->text();
    os << "\n";
  }
  if (r.datum.n_points() >= 4) {
    os << "\ndegenerations";
    if (r.degenerations.empty()) os << "  none";
    os << "\n";
    for (const auto& t : r.degenerations) os << "  " << t << "\n";
    os << "PEL-decomposable  " << set_text(r.decomposable) << "\n";
  }
  if (!r.verdicts.empty()) {
    os << "\nclassification\n";
    for (const auto& v : r.verdicts) os << "  " << v.polygon.text() << " : " << v.verdict << "\n";
  }
  return os.str();
}

}  // namespace npstrata
