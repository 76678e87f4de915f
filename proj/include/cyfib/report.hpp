#pragma once

// Serialization of surfaces and enumeration reports: JSON (round-trippable),
// CSV (one pair per row) and a plain-text table.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cyfib/enumerate.hpp"
#include "json.hpp"

namespace cyfib {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

namespace detail {

inline Json integer_to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

inline Integer integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument(std::string("expected an integer for '") + what + "'");
}

inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

template <class T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Surface descriptor: {name, L2, c1L, c1sq, c2, n0, proportionality?: [r, s]}

inline Json surface_to_json(const BaseSurface& s) {
  Json j;
  j["name"] = s.name;
  j["L2"] = s.L2;
  j["c1L"] = s.c1L;
  j["c1sq"] = s.c1sq;
  j["c2"] = s.c2;
  j["n0"] = s.n0;
  if (s.proportionality) j["proportionality"] = {s.proportionality->r, s.proportionality->s};
  return j;
}

inline BaseSurface surface_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("surface descriptor must be a JSON object");
  static const std::set<std::string> known{"name", "L2", "c1L", "c1sq", "c2", "n0", "proportionality"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw std::invalid_argument("unknown key '" + key + "' in surface descriptor");

  auto integer = [&](const char* key) -> std::int64_t {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string("key '") + key + "' must be an integer");
    return v.get<std::int64_t>();
  };

  BaseSurface s;
  if (!j.contains("name") || !j.at("name").is_string())
    throw std::invalid_argument("key 'name' must be a string");
  s.name = j.at("name").get<std::string>();
  s.L2 = integer("L2");
  s.c1L = integer("c1L");
  s.c1sq = integer("c1sq");
  s.c2 = integer("c2");
  s.n0 = integer("n0");
  if (j.contains("proportionality")) {
    const auto& p = j.at("proportionality");
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw std::invalid_argument("'proportionality' must be an array [r, s] of two integers");
    s.proportionality = Proportionality{p[0].get<std::int64_t>(), p[1].get<std::int64_t>()};
  }
  return s;
}

inline BaseSurface parse_surface_descriptor(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("surface descriptor is not valid JSON: ") + e.what());
  }
  return surface_from_json(j);
}

// ---------------------------------------------------------------------------
// Report JSON

inline Json pair_to_json(const PairRecord& r) {
  Json j;
  j["a"] = r.pair.a;
  j["b"] = r.pair.b;
  j["status"] = to_string(r.status);
  j["euler"] = r.euler ? detail::integer_to_json(*r.euler) : Json(nullptr);
  j["residual"] = detail::integer_to_json(r.residual);
  j["section_guaranteed"] = r.section_guaranteed;
  j["reducibility_certified"] = r.reducibility_certified;
  Json prov = Json::array();
  for (const auto& p : r.provenance)
    prov.push_back({{"source", to_string(p.source)}, {"value", detail::integer_to_json(p.value)}});
  j["provenance"] = prov;
  Json weights = Json::array();
  for (const auto& w : r.weights) {
    weights.push_back({{"monomial", to_string(w.weight.monomial)},
                       {"i", w.weight.monomial.i},
                       {"j", w.weight.monomial.j},
                       {"k", w.weight.monomial.k},
                       {"wL", w.weight.wL},
                       {"status", to_string(w.status)}});
  }
  j["weights"] = weights;
  return j;
}

inline PairRecord pair_from_json(const Json& j) {
  PairRecord r;
  r.pair = BundlePair::make(detail::require<std::int64_t>(j, "a"), detail::require<std::int64_t>(j, "b"));
  const auto status = parse_pair_status(detail::require<std::string>(j, "status"));
  if (!status) throw std::invalid_argument("unknown pair status");
  r.status = *status;
  if (!j.at("euler").is_null()) r.euler = detail::integer_from_json(j.at("euler"), "euler");
  r.residual = detail::integer_from_json(j.at("residual"), "residual");
  r.section_guaranteed = detail::require<bool>(j, "section_guaranteed");
  r.reducibility_certified = detail::require<bool>(j, "reducibility_certified");
  for (const auto& p : j.at("provenance")) {
    const auto src = parse_source(detail::require<std::string>(p, "source"));
    if (!src) throw std::invalid_argument("unknown provenance source");
    r.provenance.push_back({*src, detail::integer_from_json(p.at("value"), "value")});
  }
  const auto& weights = j.at("weights");
  if (!weights.is_array() || weights.size() != r.weights.size())
    throw std::invalid_argument("weight table must list all ten cubic monomials");
  for (std::size_t n = 0; n < r.weights.size(); ++n) {
    const auto& w = weights[n];
    auto& entry = r.weights[n];
    entry.weight.monomial = Monomial::make(detail::require<int>(w, "i"), detail::require<int>(w, "j"),
                                           detail::require<int>(w, "k"));
    entry.weight.wL = detail::require<std::int64_t>(w, "wL");
    entry.status = detail::require<std::string>(w, "status") == to_string(CoefficientStatus::CertifiedZero)
                       ? CoefficientStatus::CertifiedZero
                       : CoefficientStatus::PossiblyNonzero;
  }
  return r;
}

inline Json report_to_json(const EnumerationReport& rep) {
  Json j;
  j["surface"] = surface_to_json(rep.surface);
  j["D"] = detail::integer_to_json(rep.hodge_discriminant);
  j["branch"] = to_string(rep.branch);
  j["ratio"] = rep.ratio ? Json(to_string(*rep.ratio)) : Json(nullptr);
  Json pairs = Json::array();
  for (const auto& r : rep.pairs) pairs.push_back(pair_to_json(r));
  j["pairs"] = pairs;
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  j["counts"] = {{"small_exact", rep.counts.small_exact},
                 {"paper_small_bound", rep.counts.paper_small_bound},
                 {"conic_points", rep.counts.conic_points},
                 {"paper_conic_bound", opt(rep.counts.paper_conic_bound)},
                 {"paper_total_bound", opt(rep.counts.paper_total_bound)},
                 {"total", rep.counts.total}};
  j["notes"] = rep.notes;
  return j;
}

inline EnumerationReport report_from_json(const Json& j) {
  EnumerationReport rep;
  rep.surface = surface_from_json(j.at("surface"));
  rep.hodge_discriminant = detail::integer_from_json(j.at("D"), "D");
  const auto branch = parse_branch(detail::require<std::string>(j, "branch"));
  if (!branch) throw std::invalid_argument("unknown branch");
  rep.branch = *branch;
  if (!j.at("ratio").is_null()) rep.ratio = detail::rational_from_string(j.at("ratio").get<std::string>());
  for (const auto& p : j.at("pairs")) rep.pairs.push_back(pair_from_json(p));
  const auto& c = j.at("counts");
  auto opt = [&](const char* key) -> std::optional<std::int64_t> {
    if (c.at(key).is_null()) return std::nullopt;
    return c.at(key).get<std::int64_t>();
  };
  rep.counts.small_exact = detail::require<std::int64_t>(c, "small_exact");
  rep.counts.paper_small_bound = detail::require<std::int64_t>(c, "paper_small_bound");
  rep.counts.conic_points = detail::require<std::int64_t>(c, "conic_points");
  rep.counts.paper_conic_bound = opt("paper_conic_bound");
  rep.counts.paper_total_bound = opt("paper_total_bound");
  rep.counts.total = detail::require<std::int64_t>(c, "total");
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

// ---------------------------------------------------------------------------
// CSV and text

inline std::string provenance_summary(const PairRecord& r, const char* sep) {
  std::string out;
  for (const auto& p : r.provenance) {
    if (!out.empty()) out += sep;
    out += to_string(p);
  }
  return out;
}

inline std::string report_to_csv(const EnumerationReport& rep) {
  std::ostringstream os;
  os << "a,b,status,euler,residual,section_guaranteed,reducibility_certified,provenance\n";
  for (const auto& r : rep.pairs) {
    os << r.pair.a << ',' << r.pair.b << ',' << to_string(r.status) << ','
       << (r.euler ? r.euler->str() : "") << ',' << r.residual << ','
       << (r.section_guaranteed ? 1 : 0) << ',' << (r.reducibility_certified ? 1 : 0) << ','
       << provenance_summary(r, ";") << '\n';
  }
  return os.str();
}

inline std::string report_to_text(const EnumerationReport& rep) {
  const BaseSurface& s = rep.surface;
  std::ostringstream os;
  os << "surface   " << s.name << "\n"
     << "          L^2 = " << s.L2 << ", c1.L = " << s.c1L << ", c1^2 = " << s.c1sq
     << ", c2 = " << s.c2 << ", n0 = " << s.n0;
  if (s.proportionality) os << ", (r, s) = (" << s.proportionality->r << ", " << s.proportionality->s << ")";
  os << "\nD         " << rep.hodge_discriminant << "\nbranch    " << to_string(rep.branch);
  if (rep.ratio) os << " (c1.L / L^2 = " << to_string(*rep.ratio) << ")";
  os << "\n\n";

  // Summary grid: the not-ample column, then the section-certified columns.
  const PairStatus order[] = {PairStatus::UnknownSection, PairStatus::CandidateCalabiYau,
                              PairStatus::FailsNecessaryCondition, PairStatus::CertifiedReducible};
  const char* heading[] = {"(2a-b)L + K_B not ample", "candidate Calabi-Yau",
                           "fails Friedman relation", "certified reducible"};
  for (std::size_t n = 0; n < 4; ++n) {
    os << std::left << std::setw(26) << heading[n] << "|";
    for (const auto& r : rep.pairs)
      if (r.status == order[n]) os << ' ' << to_string(r.pair);
    os << "\n";
  }

  os << "\n" << std::right << std::setw(5) << "a" << std::setw(6) << "b" << "  " << std::left
     << std::setw(27) << "status" << std::right << std::setw(9) << "chi_top" << std::setw(10)
     << "residual" << "  provenance\n";
  for (const auto& r : rep.pairs) {
    os << std::right << std::setw(5) << r.pair.a << std::setw(6) << r.pair.b << "  " << std::left
       << std::setw(27) << to_string(r.status) << std::right << std::setw(9)
       << (r.euler ? r.euler->str() : "-") << std::setw(10) << r.residual << "  "
       << provenance_summary(r, ", ") << "\n";
  }

  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << "\ncounts    small region " << rep.counts.small_exact << " (closed form "
     << rep.counts.paper_small_bound << "), conic points " << rep.counts.conic_points
     << " (bound " << opt(rep.counts.paper_conic_bound) << "), total " << rep.counts.total
     << " (closed form " << opt(rep.counts.paper_total_bound) << ")\n";
  for (const auto& n : rep.notes) os << "note      " << n << "\n";
  return os.str();
}

inline std::string emit_report(const EnumerationReport& rep, Format format) {
  switch (format) {
    case Format::Json: return report_to_json(rep).dump(2) + "\n";
    case Format::Csv: return report_to_csv(rep);
    case Format::Text: return report_to_text(rep);
  }
  throw std::invalid_argument("unknown report format");
}

}  // namespace cyfib
