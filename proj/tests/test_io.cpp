#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lprips/io.hpp"

using namespace lprips;
using nlohmann::json;

namespace {

FiniteMetricSpace two_points(double d) {
  return validate_metric(DistanceMatrix::from_rows({{0, d}, {d, 0}}), false);
}

FiniteMetricSpace space_of(const std::string& csv, bool pseudo = false) {
  std::istringstream in(csv);
  return parse_space_csv(in, pseudo, "test");
}

FiniteMetricSpace points_of(const std::string& csv, const std::string& geometry) {
  std::istringstream in(csv);
  return parse_points_csv(in, geometry, "test");
}

}  // namespace

TEST_CASE("square matrices come in with comments and labels") {
  FiniteMetricSpace plain = space_of("0,1\n1,0\n");
  CHECK(plain.size() == 2);
  CHECK(plain.d(0, 1) == 1.0);
  REQUIRE(plain.labels.size() == 2);  // indices stand in when nothing is given
  CHECK(plain.labels[0] == "0");

  FiniteMetricSpace commented = space_of("# a comment\n\n0,2\n\n2,0\n# done\n");
  CHECK(commented.size() == 2);
  CHECK(commented.d(0, 1) == 2.0);

  FiniteMetricSpace header = space_of("a,b\n0,1\n1,0\n");
  REQUIRE(header.labels.size() == 2);
  CHECK(header.labels[0] == "a");
  CHECK(header.labels[1] == "b");

  FiniteMetricSpace corner = space_of("dist,a,b\n0,1\n1,0\n");
  REQUIRE(corner.labels.size() == 2);
  CHECK(corner.labels[0] == "a");

  // row labels need a header line, otherwise the first row becomes one
  FiniteMetricSpace rows = space_of("dist,a,b\np0,0,1\np1,1,0\n");
  REQUIRE(rows.labels.size() == 2);
  CHECK(rows.labels[0] == "p0");
  CHECK(rows.labels[1] == "p1");

  FiniteMetricSpace single = space_of("0\n");
  CHECK(single.size() == 1);
}

TEST_CASE("bad matrices are refused with the source named") {
  CHECK_THROWS_AS(space_of(""), input_error);
  CHECK_THROWS_AS(space_of("0,1\n1,0,2\n"), input_error);
  CHECK_THROWS_AS(space_of("0,1\n2,0\n"), input_error);  // not symmetric

  try {
    space_of("0,1\np1,one,0\n");
    FAIL("expected a parse error");
  } catch (const input_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("test:2") != std::string::npos);
    CHECK(msg.find("one") != std::string::npos);
  }

  // zero off the diagonal needs the pseudo flag
  CHECK_THROWS_AS(space_of("0,0\n0,0\n"), input_error);
  CHECK(space_of("0,0\n0,0\n", true).size() == 2);
}

TEST_CASE("point clouds in three geometries") {
  FiniteMetricSpace tri = points_of("0,0\n3,0\n3,4\n", "euclidean");
  CHECK(tri.d(0, 1) == doctest::Approx(3.0));
  CHECK(tri.d(1, 2) == doctest::Approx(4.0));
  CHECK(tri.d(0, 2) == doctest::Approx(5.0));

  FiniteMetricSpace taxi = points_of("0,0\n1,2\n", "l1");
  CHECK(taxi.d(0, 1) == doctest::Approx(3.0));

  FiniteMetricSpace circ = points_of("0.9\n0.1\n", "circle");
  CHECK(circ.d(0, 1) == doctest::Approx(0.2));
  FiniteMetricSpace wrapped = points_of("-0.1\n0.1\n", "circle");
  CHECK(wrapped.d(0, 1) == doctest::Approx(0.2));

  // coincident points are allowed in clouds
  CHECK(points_of("1,1\n1,1\n", "euclidean").size() == 2);

  FiniteMetricSpace labeled = points_of("x,y\np,0,0\nq,1,0\n", "euclidean");
  REQUIRE(labeled.labels.size() == 2);
  CHECK(labeled.labels[1] == "q");
}

TEST_CASE("point cloud shape errors") {
  CHECK_THROWS_AS(points_of("0,0\n1\n", "euclidean"), input_error);
  CHECK_THROWS_AS(points_of("0,0\n1,1\n", "circle"), input_error);
  CHECK_THROWS_AS(points_of("0,0\n1,1\n", "chebyshev"), input_error);
  CHECK_THROWS_AS(points_of("", "euclidean"), input_error);
}

TEST_CASE("raw matrices skip the metric checks but not the cone ones") {
  std::istringstream in("0,1\n2,0\n");
  DistanceMatrix m = parse_matrix_csv(in, "test");
  CHECK(m(0, 1) == 1.0);
  CHECK(m(1, 0) == 2.0);

  std::istringstream neg("0,-1\n-1,0\n");
  CHECK_THROWS_AS(parse_matrix_csv(neg, "test"), input_error);
  std::istringstream ragged("0,1\n1,0,0\n");
  CHECK_THROWS_AS(parse_matrix_csv(ragged, "test"), input_error);
}

TEST_CASE("missing files name the path") {
  CHECK_THROWS_AS(read_space_csv("/no/such/file.csv", false), input_error);
  CHECK_THROWS_AS(read_matrix_csv("/no/such/file.csv"), input_error);
  CHECK_THROWS_AS(read_points_csv("/no/such/file.csv", "euclidean"), input_error);
}

TEST_CASE("doubles round trip through their tokens") {
  CHECK(double_token(1.5) == "1.5");
  CHECK(double_token(infty) == "inf");
  CHECK(double_token(-infty) == "-inf");
  for (double v : {0.1, 1.0 / 3.0, 1e300, -2.5e-7, 0.0}) {
    const std::string tok = double_token(v);
    CHECK(std::strtod(tok.c_str(), nullptr) == v);
  }
}

TEST_CASE("barcode tsv is pinned byte for byte") {
  Barcode bc;
  bc.bars.push_back({0, 0.0, infty});
  bc.bars.push_back({1, 1.0 / 3.0, 0.5});
  CHECK(barcode_tsv(bc) == "dim\tbirth\tdeath\n0\t0\tinf\n1\t0.333333\t0.5\n");
  CHECK(barcode_tsv(Barcode{}) == "dim\tbirth\tdeath\n");
}

TEST_CASE("barcode json parses back with ordered keys") {
  Barcode bc;
  bc.bars.push_back({0, 0.0, infty});
  bc.bars.push_back({1, 0.25, 1.0});
  const std::string text = barcode_json(bc);

  json j = json::parse(text);
  REQUIRE(j["bars"].size() == 2);
  CHECK(j["bars"][0]["dim"] == 0);
  CHECK(j["bars"][0]["death"] == "inf");
  CHECK(j["bars"][1]["birth"].get<double>() == 0.25);
  CHECK(j["bars"][1]["death"].get<double>() == 1.0);

  CHECK(text.find("\"dim\"") < text.find("\"birth\""));
  CHECK(text.find("\"birth\"") < text.find("\"death\""));
}

TEST_CASE("barcode svg draws one bar per class") {
  Barcode bc;
  bc.bars.push_back({0, 0.0, infty});
  bc.bars.push_back({0, 0.0, 0.6});
  bc.bars.push_back({1, 0.4, 0.9});
  const std::string svg = barcode_svg(bc);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  CHECK(svg.find(">H0</text>") != std::string::npos);
  CHECK(svg.find(">H1</text>") != std::string::npos);

  size_t rects = 0;
  for (size_t at = svg.find("<rect"); at != std::string::npos; at = svg.find("<rect", at + 1))
    ++rects;
  CHECK(rects == 4);  // three bars plus the background
}

TEST_CASE("filtration json carries the cells") {
  FilteredComplex F = build_vr_filtration(two_points(1.0), lp_norm(2), 1);
  json j = json::parse(filtration_json(F));
  CHECK(j["n_points"] == 2);
  CHECK(j["max_dim"] == 1);
  CHECK(j["total_cells"] == 3);
  CHECK(j["norm"]["p"].get<double>() == 2.0);
  CHECK(j["norm"]["symmetric"] == false);
  CHECK(j["norm"]["cyclic"] == false);
  REQUIRE(j["simplices"].size() == 2);
  CHECK(j["simplices"][0].size() == 2);
  CHECK(j["simplices"][1][0]["vertices"] == json::array({0, 1}));
  CHECK(j["simplices"][1][0]["value"].get<double>() == 1.0);
}

TEST_CASE("tuple complex json records the interval") {
  TupleChainComplex C = build_tuple_complex(two_points(1.0), lp_norm(1),
                                            LeftInterval::at_most(1.0), 1);
  json j = json::parse(tuple_complex_json(C));
  CHECK(j["n_points"] == 2);
  CHECK(j["bound"].get<double>() == 1.0);
  CHECK(j["strict"] == false);
  CHECK(j["max_deg"] == 1);
  CHECK(j["total_cells"] == 4);
  REQUIRE(j["degrees"].size() == 2);
  CHECK(j["degrees"][1]["tuples"] == json::array({json::array({0, 1}), json::array({1, 0})}));
  CHECK(j["degrees"][1]["weights"] == json::array({1.0, 1.0}));

  TupleChainComplex open_ended = build_tuple_complex(two_points(1.0), lp_norm(1),
                                                     LeftInterval::all(), 1);
  json u = json::parse(tuple_complex_json(open_ended));
  CHECK(u["bound"] == "none");
  CHECK_FALSE(u.contains("strict"));
}

TEST_CASE("analysis reports serialize with their fields") {
  FiniteMetricSpace X = two_points(1.0);

  json m = json::parse(magnitude_json(magnitude_homology(X, 1.0, MagnitudeVariant::graded, 1, 3)));
  CHECK(m["r"].get<double>() == 1.0);
  CHECK(m["degree"] == 1);
  CHECK(m["field"] == 3);
  CHECK(m["variant"] == "graded");
  CHECK(m["rank"] == 2);

  json l = json::parse(les_json(les_magnitude_check(X, 1.0, 1, 2)));
  CHECK(l["rank_strict"] == 0);
  CHECK(l["rank_nonstrict"] == 1);
  CHECK(l["rank_graded"] == 2);
  CHECK(l["composite_zero"] == true);
  CHECK(l["exact"] == true);

  json s = json::parse(les_sweep_json(les_sweep(X, 1, 2)));
  CHECK(s["degree"] == 1);
  CHECK(s["all_exact"] == true);
  REQUIRE(s["entries"].size() == 3);
  CHECK(s["entries"][1]["r"].get<double>() == 1.0);
  CHECK(s["entries"][1]["rank_graded"] == 2);

  json st = json::parse(stability_json(stability_report(X, two_points(1.2), lp_norm(2), {0}, 2)));
  CHECK(st["p"].get<double>() == 2.0);
  CHECK(st["gromov_hausdorff"].get<double>() == doctest::Approx(0.1));
  REQUIRE(st["degrees"].size() == 1);
  CHECK(st["degrees"][0]["pass"] == true);
  CHECK(st["all_pass"] == true);

  json c = json::parse(campaign_json(stability_campaign(11, 2, {2.0}, {0}, 2)));
  REQUIRE(c["trials"].size() == 2);
  CHECK(c["trials"][0].contains("seed"));
  CHECK(c["trials"][0]["reports"].size() == 1);
  CHECK(c["all_pass"] == true);

  json ci = json::parse(circle_json(circle_experiment(infty, 6, 3)));
  CHECK(ci["p"] == "inf");
  CHECK(ci["n"] == 6);
  CHECK(ci["death"].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(ci["found"] == true);
  CHECK(ci["pass"] == true);
}
