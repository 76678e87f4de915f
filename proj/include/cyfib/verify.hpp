#pragma once

// Brute-force cross-check of an enumeration against a direct scan of the
// box 0 <= b <= a <= box using the closed-form Friedman residual.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cyfib/enumerate.hpp"

namespace cyfib {

inline constexpr std::int64_t kDefaultScanBox = 200;

/// All octant pairs in the box with vanishing residual.
inline std::vector<BundlePair> residual_zero_scan(const BaseSurface& surface, std::int64_t box) {
  std::vector<BundlePair> out;
  for (std::int64_t a = 0; a <= box; ++a)
    for (std::int64_t b = 0; b <= a; ++b)
      if (friedman_residual_closed_form({a, b}, surface) == 0) out.push_back({a, b});
  return out;
}

struct Verification {
  std::int64_t box = kDefaultScanBox;
  std::int64_t scanned_zero = 0;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

inline Verification verify_report(const EnumerationReport& report, std::int64_t box) {
  Verification v;
  v.box = box;
  const BaseSurface& s = report.surface;

  std::set<BundlePair> reported, conic;
  for (const auto& r : report.pairs) {
    reported.insert(r.pair);
    if (r.on_conic()) {
      conic.insert(r.pair);
      if (r.residual != 0)
        v.problems.push_back("conic point " + to_string(r.pair) + " has residual " +
                             r.residual.str());
    }
  }

  const auto zeros = residual_zero_scan(s, box);
  v.scanned_zero = static_cast<std::int64_t>(zeros.size());
  const std::set<BundlePair> zero_set(zeros.begin(), zeros.end());

  for (const auto& p : conic)
    if (p.a <= box && !zero_set.count(p))
      v.problems.push_back("conic point " + to_string(p) + " missed by the scan");

  for (const auto& p : zeros) {
    if (conic.count(p)) continue;
    if (report.branch == Branch::Irreducible) {
      v.problems.push_back("scan finds conic point " + to_string(p) + " not produced by divisors");
    } else if (!reducibility_certified(p, s) && section_guaranteed(p, s)) {
      v.problems.push_back("scan finds admissible pair " + to_string(p) + " outside the lines");
    }
    if (section_guaranteed(p, s) && !reducibility_certified(p, s) && !reported.count(p))
      v.problems.push_back("admissible pair " + to_string(p) + " missing from the report");
  }
  return v;
}

}  // namespace cyfib
