#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <set>

#include "json.hpp"
#include "sectionring/plot.hpp"
#include "sectionring/report.hpp"

using namespace sectionring;
using R = Rational;
using json = nlohmann::json;
using Pt = std::pair<std::int64_t, std::int64_t>;

namespace {

WeierstrassCurve<R> default_curve() {
  return WeierstrassCurve<R>(R(0), R(0), R(1), R(-1), R(0));
}

std::set<Pt> to_set(const std::vector<Pt>& v) { return {v.begin(), v.end()}; }

std::map<Pt, std::string> labeled(const LatticePlot& plot) {
  std::map<Pt, std::string> out;
  for (const auto& m : plot.marks)
    if (m.kind == MarkKind::kFilled) out[{m.d, m.c}] = m.label;
  return out;
}

}  // namespace

TEST_CASE("job config round-trips") {
  JobConfig job;
  job.command = "explore";
  job.alpha1 = "13/5";
  job.alpha2 = "1/7";
  job.max_degree = 14;
  job.format = "svg";
  job.out = "fig.svg";
  CHECK(JobConfig::parse(job.serialize()) == job);
  CHECK(JobConfig::parse(job.serialize()).serialize() == job.serialize());

  JobConfig defaults;
  CHECK(JobConfig::parse(defaults.serialize()) == defaults);
  CHECK(JobConfig::parse("command=verify;max_degree=9").max_degree == 9);
  CHECK(JobConfig::parse("command=verify;max_degree=9").alpha1 == "1");
  CHECK_THROWS_AS(JobConfig::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(JobConfig::parse("bogus_key=1"), std::invalid_argument);
}

TEST_CASE("divisor and curve rendering") {
  CHECK(divisor_desc(R(1), std::nullopt, false) == "1 P");
  CHECK(divisor_desc(R(13, 5), R(1, 7), true) == "13/5 P1 - 1/7 P2");
  CHECK(divisor_desc(R(1), R(1, 2), false) == "1 P1 + 1/2 P2");
  CHECK(weierstrass_equation(R(0), R(0), R(1), R(-1), R(0)) == "y^2 + y = x^3 - x");
  CHECK(weierstrass_equation(R(0), R(0), R(0), R(0), R(1)) == "y^2 = x^3 + 1");
  CHECK(weierstrass_equation(R(2), R(0), R(0), R(-3, 2), R(5)) ==
        "y^2 + 2 xy = x^3 - 3/2 x + 5");
}

TEST_CASE("presentation json: one-point example") {
  auto pres = one_point_presentation(R(3, 2));
  ReportContext ctx{divisor_desc(pres.alpha, std::nullopt, false), "y^2 + y = x^3 - x", 1};
  std::string text = presentation_json(ctx, pres.gens, pres.rels, nullptr);
  CHECK(text == presentation_json(ctx, pres.gens, pres.rels, nullptr));
  CHECK(text.back() == '\n');

  json doc = json::parse(text);
  CHECK(doc["schema"] == 1);
  CHECK(doc["divisor"] == "3/2 P");
  CHECK(doc["curve"] == "y^2 + y = x^3 - x");
  CHECK(doc["verification"].is_null());
  REQUIRE(doc["generators"].size() == 4);
  CHECK(doc["generators"][0]["symbol"] == "u");
  CHECK(doc["generators"][0]["degree"] == 1);
  CHECK(doc["generators"][0]["ord_p1"] == 0);
  CHECK_FALSE(doc["generators"][0].contains("ord_p2"));
  CHECK(doc["generators"][0]["label"] == "a");

  // the boxed non-minimal quartic u^2 f_2^2
  bool found = false;
  for (const auto& rel : doc["relations"]) {
    if (!(rel["boxed"] == true && rel["minimal"] == false)) continue;
    found = true;
    REQUIRE(rel["leading"].size() == 2);
    CHECK(rel["leading"][0]["gen"] == "u");
    CHECK(rel["leading"][0]["exp"] == 2);
    CHECK(rel["leading"][1]["gen"] == "f_2");
    CHECK(rel["leading"][1]["exp"] == 2);
  }
  CHECK(found);
}

TEST_CASE("presentation json: two-point orders and verification") {
  auto pres = two_point_presentation(R(1), R(1, 2));
  ReportContext ctx{divisor_desc(R(1), R(1, 2), false), "y^2 + y = x^3 - x", 2};
  VerifyReport rep;
  rep.ok = true;
  rep.notes = {"d_max 12"};
  json doc = json::parse(presentation_json(ctx, pres.gens, pres.rels, &rep));

  CHECK(doc["generators"].size() == 4);
  CHECK(doc["relations"].size() == 3);
  CHECK(doc["verification"]["status"] == "MATCH");
  CHECK(doc["verification"]["diffs"].empty());
  CHECK(doc["verification"]["notes"][0] == "d_max 12");
  for (const auto& g : doc["generators"]) {
    REQUIRE(g.contains("ord_p2"));
    std::int64_t o1 = g["ord_p1"], o2 = g["ord_p2"];
    // pole at one point forces the matching zero or pole at the other
    if (o1 < 0) CHECK((o2 == -o1 - 1 || o2 == -1));
    if (o1 == 0) CHECK(o2 == 0);
  }
}

TEST_CASE("presentation text table") {
  auto pres = one_point_presentation(R(1));
  ReportContext ctx{"1 P", "y^2 + y = x^3 - x", 1};
  std::string text = presentation_text(ctx, pres.gens, pres.rels);
  CHECK(text.find("section ring of D = 1 P") != std::string::npos);
  CHECK(text.find("f_c") != std::string::npos);
  CHECK(text.find("f_c^2") != std::string::npos);
  CHECK(text.find("minimal") != std::string::npos);
  CHECK(text.find("ord(P2)") == std::string::npos);

  auto two = two_point_presentation(R(1), R(1));
  ReportContext ctx2{"1 P1 + 1 P2", "y^2 + y = x^3 - x", 2};
  CHECK(presentation_text(ctx2, two.gens, two.rels).find("ord(P2)") != std::string::npos);
}

TEST_CASE("explore report carries the scan and the oracle") {
  auto e = default_curve();
  auto chk = conjecture_check(e, CurvePoint<R>::at_infinity(), CurvePoint<R>::affine(R(0), R(0)),
                              R(4), R(1), 8);
  ReportContext ctx{"4 P1 - 1 P2", "y^2 + y = x^3 - x", 2};

  std::string text = explore_text(ctx, chk);
  CHECK(text.find("MATCH") != std::string::npos);
  CHECK(text.find("dimensions") != std::string::npos);
  CHECK(text.find("oracle generator degrees: 1") != std::string::npos);

  std::string js = explore_json(ctx, chk);
  CHECK(js == explore_json(ctx, chk));
  json doc = json::parse(js);
  CHECK(doc["schema"] == 1);
  CHECK(doc["strip"] == "above-ceiling");
  CHECK(doc["check"]["status"] == "MATCH");
  CHECK(doc["candidates"].size() == 3);
  CHECK(doc["oracle_generators"].size() == 3);
  CHECK(doc["dimensions"].size() == 8);
  std::int64_t d2 = 0;
  for (const auto& row : doc["dimensions"])
    if (row["degree"] == 2) d2 = row["dim"].get<std::int64_t>();
  CHECK(d2 == 6);
}

TEST_CASE("sweep json rows") {
  auto entries = one_point_sweep(sweep_alphas(2, 2), false);
  json doc = json::parse(sweep_json(entries));
  CHECK(doc["schema"] == 1);
  REQUIRE(doc["sweep"].size() == 4);
  for (const auto& row : doc["sweep"]) CHECK(row["status"] == "MATCH");
  CHECK(doc["sweep"][0]["alpha"] == "1");
  CHECK(doc["sweep"][0]["generators"] == 3);
  CHECK(doc["sweep"][0]["leaders"] == 1);
}

TEST_CASE("one-point plot reproduces the degree-one figure") {
  auto plot = plot_one_point(one_point_presentation(R(1)), 4);
  CHECK(to_set(plot.points(MarkKind::kFilled)) == std::set<Pt>{{1, 0}, {2, 2}, {3, 3}});
  CHECK(to_set(plot.points(MarkKind::kCross)) == std::set<Pt>{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  CHECK(to_set(plot.points(MarkKind::kOpen)) ==
        std::set<Pt>{{0, 0}, {2, 0}, {3, 0}, {3, 2}, {4, 0}, {4, 2}, {4, 3}, {4, 4}});
  auto lab = labeled(plot);
  CHECK(lab[{1, 0}] == "a");
  CHECK(lab[{2, 2}] == "b");
  CHECK(lab[{3, 3}] == "c");
  CHECK(plot.boundaries == std::vector<R>{R(1)});
}

TEST_CASE("one-point plot for a fractional slope") {
  auto plot = plot_one_point(one_point_presentation(R(5, 2)), 4);
  auto lab = labeled(plot);
  REQUIRE(lab.size() == 4);
  CHECK(lab[{1, 0}] == "a");
  CHECK(lab[{1, 2}] == "a");
  CHECK(lab[{2, 3}] == "c");
  CHECK(lab[{2, 5}] == "a");
  CHECK(to_set(plot.points(MarkKind::kCross)) == std::set<Pt>{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  auto opens = to_set(plot.points(MarkKind::kOpen));
  CHECK(opens.count({0, 0}) == 1);
  CHECK(opens.count({2, 4}) == 1);
  CHECK(opens.count({3, 7}) == 1);
  CHECK(opens.count({3, 8}) == 0);  // above floor(3 * 5/2)
  CHECK(opens.count({4, 10}) == 1);
  CHECK(opens.size() == 1 + 0 + 3 + 7 + 10);
}

TEST_CASE("strip plot reproduces the integer-divisor panel") {
  auto plot = plot_strip(conjecture_generators(R(5), R(3), 2));
  CHECK(to_set(plot.points(MarkKind::kFilled)) == std::set<Pt>{{1, 4}, {1, 5}, {2, 7}});
  CHECK(to_set(plot.points(MarkKind::kCross)) == std::set<Pt>{{1, 3}, {2, 6}});
  CHECK(to_set(plot.points(MarkKind::kOpen)) == std::set<Pt>{{2, 8}, {2, 9}, {2, 10}});
}

TEST_CASE("strip plot reproduces the first conjecture figure") {
  auto plot = plot_strip(conjecture_generators(R(13, 5), R(1, 7), 7));
  auto lab = labeled(plot);
  REQUIRE(lab.size() == 11);
  CHECK(lab[{1, 2}] == "a");
  CHECK(lab[{2, 5}] == "a");
  CHECK(lab[{5, 13}] == "a");
  CHECK(lab[{2, 3}] == "c");
  CHECK(lab[{3, 3}] == "c");
  for (std::int64_t d = 2; d <= 7; ++d) CHECK(lab[{d, 2}] == "b");

  CHECK(to_set(plot.points(MarkKind::kCross)) ==
        std::set<Pt>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}});

  auto opens = to_set(plot.points(MarkKind::kOpen));
  CHECK(opens.size() == 52);
  CHECK(opens.count({2, 4}) == 1);
  CHECK(opens.count({4, 3}) == 1);
  CHECK(opens.count({5, 12}) == 1);
  CHECK(opens.count({7, 18}) == 1);
  CHECK(opens.count({1, 2}) == 0);
  CHECK(opens.count({7, 19}) == 0);
}

TEST_CASE("strip plot reproduces the magma-example figure") {
  auto plot = plot_strip(conjecture_generators(R(2, 3), R(3, 5), 37));
  auto lab = labeled(plot);
  REQUIRE(lab.size() == 18);
  CHECK(lab[{15, 10}] == "a");
  CHECK(lab[{18, 12}] == "b");
  CHECK(lab[{37, 24}] == "b");

  CHECK(to_set(plot.points(MarkKind::kOpen)) ==
        std::set<Pt>{{30, 20}, {33, 22}, {35, 23}, {36, 23}, {36, 24}});

  auto crosses = to_set(plot.points(MarkKind::kCross));
  std::set<Pt> printed = {{3, 2},   {5, 3},   {6, 4},   {8, 5},   {10, 6},  {11, 7},  {12, 8},
                          {13, 8},  {14, 9},  {15, 9},  {16, 10}, {17, 11}, {18, 11}, {19, 12},
                          {20, 12}, {21, 13}, {22, 14}, {23, 14}, {24, 15}, {25, 15}, {26, 16},
                          {27, 17}, {28, 17}, {29, 18}, {30, 18}, {31, 19}, {32, 20}, {33, 20},
                          {34, 21}, {35, 21}, {36, 22}, {37, 23}};
  for (const auto& p : printed) CHECK(crosses.count(p) == 1);
  // ceil(9 * 3/5) = 6 <= floor(9 * 2/3): the rule also crosses out (9,6)
  CHECK(crosses.count({9, 6}) == 1);
  CHECK(crosses.size() == printed.size() + 1);
  // degrees whose excluded order lies above the alpha1 ray carry no cross
  for (std::int64_t d : {1, 2, 4, 7}) {
    for (const auto& [cd, cc] : crosses) CHECK(cd != d);
  }
}

TEST_CASE("two-point plot puts each pole on its side") {
  auto plot = plot_two_point(two_point_presentation(R(2), R(2, 3)));
  REQUIRE(!plot.marks.empty());
  for (const auto& m : plot.marks) CHECK(m.kind == MarkKind::kFilled);
  bool below = false, above = false;
  for (const auto& m : plot.marks) {
    if (m.c > 0) above = true;
    if (m.c < 0) below = true;
  }
  CHECK(above);
  CHECK(below);
  CHECK(plot.boundaries == std::vector<R>{R(2), R(-2, 3)});
}

TEST_CASE("svg output is deterministic and well formed") {
  auto plot = plot_one_point(one_point_presentation(R(5, 2)), 4);
  std::string svg = svg_plot(plot);
  CHECK(svg == svg_plot(plot));
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(svg.find("D = 5/2 P") != std::string::npos);

  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    ++pos;
  }
  CHECK(circles == plot.points(MarkKind::kFilled).size() + plot.points(MarkKind::kOpen).size());

  PlotLayout big;
  big.unit = 80;
  CHECK(svg_plot(plot, big).size() > 0);
  CHECK(svg_plot(plot, big) != svg);
}

TEST_CASE("ascii fallback draws the same marks") {
  auto plot = plot_one_point(one_point_presentation(R(1)), 3);
  std::string art = ascii_plot(plot);
  CHECK(art.find("D = 1 P") != std::string::npos);
  CHECK(art.find("*a") != std::string::npos);
  CHECK(art.find("*b") != std::string::npos);
  CHECK(art.find("*c") != std::string::npos);
  CHECK(art.find('+') != std::string::npos);
  CHECK(art.find('o') != std::string::npos);
  CHECK(art.find("generator") != std::string::npos);
  CHECK(art == ascii_plot(plot));
}
