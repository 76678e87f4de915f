#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "cyfib/figure.hpp"
#include "cyfib/report.hpp"
#include "oracles.hpp"

namespace cyfib {
namespace {

using Row = std::tuple<std::int64_t, std::int64_t, std::string>;

std::multiset<Row> rows_from_csv(const std::string& csv) {
  std::multiset<Row> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string a, b, status;
    std::getline(fields, a, ',');
    std::getline(fields, b, ',');
    std::getline(fields, status, ',');
    out.insert({std::stoll(a), std::stoll(b), status});
  }
  return out;
}

std::multiset<Row> rows_from_json(const Json& j) {
  std::multiset<Row> out;
  for (const auto& p : j.at("pairs"))
    out.insert({p.at("a").get<std::int64_t>(), p.at("b").get<std::int64_t>(),
                p.at("status").get<std::string>()});
  return out;
}

std::multiset<Row> rows_from_text(const std::string& text) {
  // Detail rows start with two right-aligned integers.
  std::multiset<Row> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::int64_t a, b;
    std::string status;
    if (line.size() > 5 && line[0] == ' ' && (fields >> a >> b >> status)) out.insert({a, b, status});
  }
  return out;
}

TEST(Format, Parse) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("text"), Format::Text);
  EXPECT_FALSE(parse_format("yaml").has_value());
}

TEST(Descriptor, RoundTrip) {
  for (const auto& s : {preset_projective_plane(1), fixtures::p1xp1_1_2(), fixtures::quintic()})
    EXPECT_EQ(surface_from_json(surface_to_json(s)), s);
}

TEST(Descriptor, StrictParsing) {
  EXPECT_NO_THROW(parse_surface_descriptor(
      R"({"name": "P2", "L2": 1, "c1L": 3, "c1sq": 9, "c2": 3, "n0": 4, "proportionality": [3, 1]})"));
  EXPECT_THROW(parse_surface_descriptor(R"({"name": "x", "L2": 1, "c1L": 3, "c1sq": 9, "c2": 3})"),
               std::invalid_argument);
  EXPECT_THROW(parse_surface_descriptor(
                   R"({"name": "x", "L2": 1, "c1L": 3, "c1sq": 9, "c2": 3, "n0": 4, "extra": 1})"),
               std::invalid_argument);
  EXPECT_THROW(parse_surface_descriptor(
                   R"({"name": "x", "L2": 1.5, "c1L": 3, "c1sq": 9, "c2": 3, "n0": 4})"),
               std::invalid_argument);
  EXPECT_THROW(parse_surface_descriptor(
                   R"({"name": "x", "L2": 1, "c1L": 3, "c1sq": 9, "c2": 3, "n0": 4, "proportionality": [3]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_surface_descriptor("{not json"), std::invalid_argument);
  EXPECT_THROW(parse_surface_descriptor("[1, 2]"), std::invalid_argument);
}

TEST(ReportJson, RoundTrip) {
  for (const auto& s : {preset_projective_plane(1), preset_projective_plane(2), fixtures::p1xp1_1_2(),
                        fixtures::bl1p2_2h_e(), preset_del_pezzo_submultiple(8, 2)}) {
    const auto rep = enumerate_all(s);
    const Json j = report_to_json(rep);
    EXPECT_EQ(report_from_json(j), rep) << s.name;
    EXPECT_EQ(report_from_json(Json::parse(j.dump())), rep) << s.name;
  }
}

TEST(ReportJson, Fields) {
  const Json j = report_to_json(enumerate_all(preset_projective_plane(1)));
  EXPECT_EQ(j.at("D"), 0);
  EXPECT_EQ(j.at("branch"), "reducible_integral");
  EXPECT_EQ(j.at("pairs").size(), 15u);
  const auto w = std::find_if(j.at("pairs").begin(), j.at("pairs").end(),
                              [](const Json& p) { return p.at("a") == 9 && p.at("b") == 6; });
  ASSERT_NE(w, j.at("pairs").end());
  EXPECT_EQ(w->at("euler"), -540);
  EXPECT_EQ(w->at("status"), "candidate_calabi_yau");
  EXPECT_EQ(w->at("weights").size(), 10u);
  EXPECT_EQ(w->at("weights")[0].at("monomial"), "x^3");
  EXPECT_EQ(w->at("weights")[0].at("status"), "certified_zero");
  const Json& counts = j.at("counts");
  EXPECT_EQ(counts.at("small_exact"), 6);
  EXPECT_EQ(counts.at("conic_points"), 10);
  EXPECT_EQ(counts.at("paper_total_bound"), 15);
  EXPECT_EQ(counts.at("total"), 15);
}

TEST(ReportJson, UnknownSectionHasNoEuler) {
  const Json j = report_to_json(enumerate_all(preset_projective_plane(1)));
  for (const auto& p : j.at("pairs"))
    if (p.at("status") != "candidate_calabi_yau") {
      EXPECT_TRUE(p.at("euler").is_null());
    }
}

TEST(ReportFormats, SamePairsInEveryFormat) {
  for (const auto& s : {preset_projective_plane(1), fixtures::p1xp1_1_3(), fixtures::bl1p2_2h_e(),
                        preset_del_pezzo_submultiple(4, 2)}) {
    const auto rep = enumerate_all(s);
    const auto json = rows_from_json(report_to_json(rep));
    EXPECT_EQ(json.size(), rep.pairs.size());
    EXPECT_EQ(rows_from_csv(report_to_csv(rep)), json) << s.name;
    EXPECT_EQ(rows_from_text(report_to_text(rep)), json) << s.name;
    EXPECT_EQ(emit_report(rep, Format::Csv), report_to_csv(rep));
  }
}

TEST(ReportCsv, HeaderAndProvenance) {
  const std::string csv = report_to_csv(enumerate_all(preset_projective_plane(1)));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "a,b,status,euler,residual,section_guaranteed,reducibility_certified,provenance");
  EXPECT_NE(csv.find("3,0,candidate_calabi_yau,-216"), std::string::npos);
  EXPECT_NE(csv.find("line a=3;line b=a-3"), std::string::npos);
  EXPECT_NE(csv.find(";"), std::string::npos);
}

TEST(ReportText, SummaryGrid) {
  const std::string text = report_to_text(enumerate_all(preset_projective_plane(1)));
  EXPECT_NE(text.find("candidate Calabi-Yau"), std::string::npos);
  EXPECT_NE(text.find("(9, 6)"), std::string::npos);
  EXPECT_NE(text.find("counts    small region 6"), std::string::npos);
}

TEST(Figure, ContainsEveryPairAndDoesNotChangeReport) {
  const auto rep = enumerate_all(preset_projective_plane(1));
  const Json before = report_to_json(rep);
  const std::string svg = render_svg(rep);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("class=\"pair\""); pos != std::string::npos;
       pos = svg.find("class=\"pair\"", pos + 1))
    ++circles;
  EXPECT_EQ(circles, rep.pairs.size());
  EXPECT_NE(svg.find("data-status=\"candidate_calabi_yau\""), std::string::npos);
  EXPECT_EQ(report_to_json(rep), before);
}

TEST(Figure, IrreducibleConicRenders) {
  const std::string svg = render_svg(enumerate_all(fixtures::p1xp1_1_2()));
  EXPECT_NE(svg.find("class=\"conic\""), std::string::npos);
}

}  // namespace
}  // namespace cyfib
