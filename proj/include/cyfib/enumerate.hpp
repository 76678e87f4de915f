#pragma once

// Finiteness algorithm: the pairs (a, b), a >= b >= 0, for which the generic
// anticanonical hypersurface of P(L^a + L^b + O_B) can still be a smooth
// Calabi-Yau elliptic fibration.
//
//  * small region 2a - b < n0: no section can be certified;
//  * otherwise (1:0:0) is a section and the Friedman relation forces (a, b)
//    onto the conic a(a-b) L^2 + (b-2a) c1.L + c1^2 = 0, whose octant points
//    are found by divisor enumeration (irreducible conic) or along the two
//    lines a = m, b = a - m (reducible conic, m = c1.L / L^2).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyfib/arith.hpp"
#include "cyfib/chow.hpp"
#include "cyfib/cubic.hpp"
#include "cyfib/surface.hpp"

namespace cyfib {

class InvalidSurface : public std::invalid_argument {
 public:
  explicit InvalidSurface(ValidationResult result)
      : std::invalid_argument(describe(result)), result_(std::move(result)) {}

  const ValidationResult& result() const { return result_; }

 private:
  static std::string describe(const ValidationResult& r) {
    std::string msg = "invalid surface data:";
    for (const auto& v : r.violations) msg += " [" + v.identity + "] " + v.detail + ";";
    return msg;
  }
  ValidationResult result_;
};

enum class PairStatus {
  UnknownSection,           // 2a - b < n0
  CandidateCalabiYau,       // section, residual 0, not forced reducible
  FailsNecessaryCondition,  // section, residual != 0
  CertifiedReducible,       // every z-free coefficient vanishes
};

inline const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::UnknownSection: return "unknown_section";
    case PairStatus::CandidateCalabiYau: return "candidate_calabi_yau";
    case PairStatus::FailsNecessaryCondition: return "fails_necessary_condition";
    case PairStatus::CertifiedReducible: return "certified_reducible";
  }
  return "?";
}

inline std::optional<PairStatus> parse_pair_status(const std::string& s) {
  for (auto st : {PairStatus::UnknownSection, PairStatus::CandidateCalabiYau,
                  PairStatus::FailsNecessaryCondition, PairStatus::CertifiedReducible})
    if (s == to_string(st)) return st;
  return std::nullopt;
}

enum class Source {
  SmallRegion,  // value unused (0)
  Divisor,      // value = d, a divisor of the Hodge discriminant
  LineA,        // value = m, the line a = m
  LineB,        // value = m, the line b = a - m
};

struct Provenance {
  Source source = Source::SmallRegion;
  Integer value = 0;

  bool on_conic() const { return source != Source::SmallRegion; }
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

inline const char* to_string(Source s) {
  switch (s) {
    case Source::SmallRegion: return "small_region";
    case Source::Divisor: return "divisor";
    case Source::LineA: return "line_a_eq_m";
    case Source::LineB: return "line_b_eq_a_minus_m";
  }
  return "?";
}

inline std::optional<Source> parse_source(const std::string& s) {
  for (auto src : {Source::SmallRegion, Source::Divisor, Source::LineA, Source::LineB})
    if (s == to_string(src)) return src;
  return std::nullopt;
}

inline std::string to_string(const Provenance& p) {
  switch (p.source) {
    case Source::SmallRegion: return "small region";
    case Source::Divisor: return "divisor d=" + p.value.str();
    case Source::LineA: return "line a=" + p.value.str();
    case Source::LineB: return "line b=a-" + p.value.str();
  }
  return "?";
}

struct WeightEntry {
  MonomialWeight weight;
  CoefficientStatus status = CoefficientStatus::PossiblyNonzero;
  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

using WeightTable = std::array<WeightEntry, 10>;

struct PairRecord {
  BundlePair pair;
  PairStatus status = PairStatus::UnknownSection;
  std::optional<Integer> euler;  // chi_top(X), recorded for candidates
  Integer residual = 0;
  bool section_guaranteed = false;
  bool reducibility_certified = false;
  WeightTable weights{};
  std::vector<Provenance> provenance;

  bool on_conic() const {
    return std::any_of(provenance.begin(), provenance.end(),
                       [](const Provenance& p) { return p.on_conic(); });
  }
  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

enum class Branch { Irreducible, ReducibleIntegral, ReducibleNonIntegral };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::Irreducible: return "irreducible";
    case Branch::ReducibleIntegral: return "reducible_integral";
    case Branch::ReducibleNonIntegral: return "reducible_non_integral";
  }
  return "?";
}

inline std::optional<Branch> parse_branch(const std::string& s) {
  for (auto b : {Branch::Irreducible, Branch::ReducibleIntegral, Branch::ReducibleNonIntegral})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

struct Counts {
  std::int64_t small_exact = 0;
  std::int64_t paper_small_bound = 0;
  std::int64_t conic_points = 0;
  std::optional<std::int64_t> paper_conic_bound;  // 3m + 1, or 0 for a non-integral ratio
  std::optional<std::int64_t> paper_total_bound;  // del Pezzo closed form, m >= 1 only
  std::int64_t total = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct EnumerationReport {
  BaseSurface surface;
  Integer hodge_discriminant = 0;
  Branch branch = Branch::Irreducible;
  std::optional<Rational> ratio;  // c1.L / L^2 on the reducible branches
  std::vector<PairRecord> pairs;  // sorted by (a, b)
  Counts counts;
  std::vector<std::string> notes;

  std::optional<std::int64_t> m() const {
    if (branch != Branch::ReducibleIntegral || !ratio) return std::nullopt;
    return as_integer(*ratio).convert_to<std::int64_t>();
  }
  const PairRecord* find(const BundlePair& p) const {
    for (const auto& r : pairs)
      if (r.pair == p) return &r;
    return nullptr;
  }
  friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

/// D = (c1.L)^2 - c1^2 L^2.
inline Integer hodge_discriminant(const BaseSurface& surface) {
  const Integer d = hodge_discriminant_value(surface);
  if (d < 0)
    throw InvalidSurface(ValidationResult{{{"hodge_inequality",
                                            "Hodge discriminant " + d.str() + " is negative"}}});
  return d;
}

/// Octant pairs with 2a - b < n0.
inline std::vector<BundlePair> small_region(std::int64_t n0) {
  if (n0 < 1) throw std::invalid_argument("small_region needs n0 >= 1");
  std::vector<BundlePair> out;
  // 2a - b >= a on the octant, so a < n0.
  for (std::int64_t a = 0; a < n0; ++a)
    for (std::int64_t b = std::max<std::int64_t>(0, 2 * a - n0 + 1); b <= a; ++b)
      out.push_back({a, b});
  return out;
}

/// |small_region(n0)| in closed form.
inline std::int64_t count_small_exact(std::int64_t n0) {
  if (n0 < 1) throw std::invalid_argument("count_small_exact needs n0 >= 1");
  if (n0 % 2 == 0) return n0 * (n0 + 2) / 4;
  const std::int64_t h = (n0 + 1) / 2;
  return h * h;
}

/// Closed forms as printed in the literature for the del Pezzo setting:
/// small region n0(n0+2)/4 (n0 even), (n0^2 + 4n0 - 1)/4 (n0 odd); total
/// (m^2 + 18m + 4)/4 (m even), (m^2 + 16m + 3)/4 (m odd).
struct PaperBounds {
  std::int64_t small = 0;
  std::int64_t total_delpezzo = 0;
  std::int64_t total_exact = 0;  // count_small_exact(m + 1) + 3m

  bool small_matches(std::int64_t n0) const { return small == count_small_exact(n0); }
  bool total_matches() const { return total_delpezzo == total_exact; }
};

inline std::int64_t paper_small_bound(std::int64_t n0) {
  if (n0 < 1) throw std::invalid_argument("paper_small_bound needs n0 >= 1");
  return n0 % 2 == 0 ? n0 * (n0 + 2) / 4 : (n0 * n0 + 4 * n0 - 1) / 4;
}

inline std::int64_t paper_total_bound(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("paper_total_bound needs m >= 1");
  return m % 2 == 0 ? (m * m + 18 * m + 4) / 4 : (m * m + 16 * m + 3) / 4;
}

inline PaperBounds count_paper_bounds(std::int64_t n) {
  return {paper_small_bound(n), paper_total_bound(n), count_small_exact(n + 1) + 3 * n};
}

struct ConicPoint {
  BundlePair pair;
  Provenance provenance;
};

namespace detail {

inline std::vector<ConicPoint> irreducible_points(const BaseSurface& s) {
  const Integer D = hodge_discriminant(s);
  if (D == 0) throw std::domain_error("divisor enumeration needs a positive Hodge discriminant");
  std::vector<ConicPoint> out;
  for (const Integer& pos : positive_divisors(D)) {
    for (const Integer& d : {pos, Integer(-pos)}) {
      const Integer d2 = D / d;
      const auto a = exact_div(d + s.c1L, s.L2);
      const auto b = exact_div(d - d2, s.L2);
      if (!a || !b || !(*a >= *b && *b >= 0)) continue;
      out.push_back({{a->convert_to<std::int64_t>(), b->convert_to<std::int64_t>()},
                     {Source::Divisor, d}});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ConicPoint& x, const ConicPoint& y) { return x.pair < y.pair; });
  return out;
}

/// Integer m = c1.L / L^2 on the reducible branch, nullopt when not in N.
inline std::optional<std::int64_t> integral_ratio(const BaseSurface& s) {
  const auto q = proportional_ratio(s);
  if (!q) throw std::domain_error("line enumeration needs a vanishing Hodge discriminant");
  if (s.proportionality && s.proportionality->ratio() != *q)
    throw std::logic_error("stored proportionality disagrees with c1.L / L^2");
  if (!is_integral(*q) || *q < 0) return std::nullopt;
  return as_integer(*q).convert_to<std::int64_t>();
}

inline std::vector<ConicPoint> reducible_points(const BaseSurface& s) {
  std::vector<ConicPoint> out;
  const auto m = integral_ratio(s);
  if (!m) return out;
  for (std::int64_t b = 0; b <= *m; ++b) out.push_back({{*m, b}, {Source::LineA, *m}});
  for (std::int64_t b = 0; b <= 2 * *m; ++b) out.push_back({{*m + b, b}, {Source::LineB, *m}});
  return out;
}

}  // namespace detail

inline std::vector<BundlePair> unique_pairs(const std::vector<ConicPoint>& pts) {
  std::vector<BundlePair> out;
  for (const auto& p : pts) out.push_back(p.pair);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Octant integral points of the irreducible conic, via the factorization
/// (L^2 a - c1.L)(L^2 (a-b) - c1.L) = D over every divisor d of D, both signs.
inline std::vector<BundlePair> conic_points_irreducible(const BaseSurface& surface) {
  return unique_pairs(detail::irreducible_points(surface));
}

/// Octant points of the reducible conic on a = m and b = a - m, with b <= 2m
/// on the second line; empty unless m = c1.L / L^2 is a non-negative integer.
inline std::vector<BundlePair> conic_points_reducible(const BaseSurface& surface) {
  return unique_pairs(detail::reducible_points(surface));
}

inline PairStatus classify_pair(const BundlePair& pair, const BaseSurface& surface) {
  const BundlePair p = BundlePair::make(pair.a, pair.b);
  if (!section_guaranteed(p, surface)) return PairStatus::UnknownSection;
  if (reducibility_certified(p, surface)) return PairStatus::CertifiedReducible;
  return friedman_residual(p, surface) == 0 ? PairStatus::CandidateCalabiYau
                                            : PairStatus::FailsNecessaryCondition;
}

inline WeightTable weight_table(const BundlePair& pair, const BaseSurface& surface) {
  WeightTable t{};
  for (std::size_t n = 0; n < kCubicMonomials.size(); ++n)
    t[n] = {weight(kCubicMonomials[n], pair), coefficient_status(kCubicMonomials[n], pair, surface)};
  return t;
}

inline PairRecord make_record(const BundlePair& pair, const BaseSurface& surface,
                              std::vector<Provenance> provenance) {
  PairRecord r;
  r.pair = pair;
  r.status = classify_pair(pair, surface);
  r.residual = friedman_residual(pair, surface);
  r.section_guaranteed = section_guaranteed(pair, surface);
  r.reducibility_certified = reducibility_certified(pair, surface);
  if (r.status == PairStatus::CandidateCalabiYau) r.euler = euler_characteristic(pair, surface);
  r.weights = weight_table(pair, surface);
  r.provenance = std::move(provenance);
  return r;
}

inline EnumerationReport enumerate_all(const BaseSurface& input) {
  if (auto v = validate(input); !v.ok()) throw InvalidSurface(std::move(v));
  const BaseSurface s = normalized(input);

  EnumerationReport rep;
  rep.surface = s;
  rep.hodge_discriminant = hodge_discriminant(s);

  std::vector<ConicPoint> conic;
  if (rep.hodge_discriminant > 0) {
    rep.branch = Branch::Irreducible;
    conic = detail::irreducible_points(s);
  } else {
    rep.ratio = proportional_ratio(s);
    const auto m = detail::integral_ratio(s);
    rep.branch = m ? Branch::ReducibleIntegral : Branch::ReducibleNonIntegral;
    conic = detail::reducible_points(s);
  }

  std::map<BundlePair, std::vector<Provenance>> merged;
  for (const auto& p : small_region(s.n0)) merged[p].push_back({Source::SmallRegion, 0});
  for (const auto& c : conic) merged[c.pair].push_back(c.provenance);

  for (auto& [pair, prov] : merged) {
    rep.pairs.push_back(make_record(pair, s, std::move(prov)));
    const auto& rec = rep.pairs.back();
    if (rec.on_conic() && rec.status == PairStatus::UnknownSection)
      rep.notes.push_back(to_string(pair) +
                          " lies on the conic inside the small region; no section is certified");
  }

  rep.counts.small_exact = count_small_exact(s.n0);
  rep.counts.paper_small_bound = paper_small_bound(s.n0);
  rep.counts.conic_points = static_cast<std::int64_t>(unique_pairs(conic).size());
  rep.counts.total = static_cast<std::int64_t>(rep.pairs.size());

  if (rep.counts.paper_small_bound != rep.counts.small_exact) {
    rep.notes.push_back("small-region closed form gives " +
                        std::to_string(rep.counts.paper_small_bound) + " for n0 = " +
                        std::to_string(s.n0) + ", lattice count is " +
                        std::to_string(rep.counts.small_exact));
  }

  switch (rep.branch) {
    case Branch::Irreducible:
      rep.notes.push_back("irreducible conic: " + std::to_string(rep.counts.conic_points) +
                          " octant points from the divisors of D = " +
                          rep.hodge_discriminant.str());
      break;
    case Branch::ReducibleNonIntegral:
      rep.counts.paper_conic_bound = 0;
      rep.notes.push_back("c1.L / L^2 = " + to_string(*rep.ratio) +
                          " is not a non-negative integer: no integral points on the conic");
      break;
    case Branch::ReducibleIntegral: {
      const std::int64_t m = *rep.m();
      rep.counts.paper_conic_bound = 3 * m + 1;
      if (rep.counts.conic_points != 3 * m + 1)
        throw std::logic_error("reducible conic point count differs from 3m + 1");
      const BundlePair w{3 * m, 2 * m};
      const PairRecord* rec = rep.find(w);
      if (rec == nullptr) throw std::logic_error("Weierstrass pair missing from the enumeration");
      rep.notes.push_back("Weierstrass pair " + to_string(w) + " = P(K^-3 + K^-2 + O): " +
                          to_string(rec->status));
      if (m >= 1) {
        rep.counts.paper_total_bound = paper_total_bound(m);
        if (*rep.counts.paper_total_bound != rep.counts.total)
          rep.notes.push_back("total closed form gives " +
                              std::to_string(*rep.counts.paper_total_bound) + " for m = " +
                              std::to_string(m) + ", exact total is " +
                              std::to_string(rep.counts.total));
      }
      break;
    }
  }
  return rep;
}

}  // namespace cyfib
