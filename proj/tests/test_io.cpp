#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <regex>
#include <set>
#include <sstream>

#include "jnrange/demos.hpp"
#include "jnrange/errors.hpp"
#include "jnrange/io.hpp"
#include "jnrange/svg.hpp"
#include "test_helpers.hpp"

using namespace jnrange;
using namespace jnrange::testing;
using jnrange::io::json;

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(-0.5) == "-0.5");
  CHECK(std::stod(io::format_double(std::sqrt(0.5))) == std::sqrt(0.5));
}

TEST_CASE("matrix JSON") {
  const auto m = io::matrix_from_json(json::parse(R"({"rows":2,"cols":2,"re":[[0,1],[0,0]]})"));
  CHECK(m == ComplexMatrix{{0, 1}, {0, 0}});

  const auto c = io::matrix_from_json(
      json::parse(R"({"rows":1,"cols":2,"re":[[1,2]],"im":[[3,-4]]})"));
  CHECK(c(0, 0) == Complex(1, 3));
  CHECK(c(0, 1) == Complex(2, -4));

  CounterRng rng(1);
  const auto r = random_matrix(3, 2, rng);
  CHECK(io::matrix_from_json(io::matrix_to_json(r)) == r);
  CHECK(io::matrix_from_json(json::parse(io::matrix_to_json(r).dump())) == r);

  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2,"re":[[0,1],[0]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2,"re":[[0,1]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"re":[["a"]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"cols":1,"re":[[1]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"re":[[1]],"im":[[1,2]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[1,2]")), ParseError);
}

TEST_CASE("state and density JSON") {
  const auto psi = io::state_from_json(
      json::parse(R"({"kind":"state","rows":2,"cols":1,"re":[[0.6],[0]],"im":[[0],[0.8]]})"));
  CHECK(psi[1] == Complex(0, 0.8));
  CHECK(io::state_from_json(io::state_to_json(psi))[0] == psi[0]);

  const auto rho = io::density_from_json(
      json::parse(R"({"kind":"density","rows":2,"cols":2,"re":[[0.5,0],[0,0.5]]})"));
  CHECK(rho.matrix() == Complex(0.5) * ComplexMatrix::identity(2));

  CHECK_THROWS_AS(io::state_from_json(json::parse(R"({"kind":"density","rows":1,"cols":1,"re":[[1]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::state_from_json(json::parse(R"({"kind":"state","rows":2,"cols":1,"re":[[1],[1]]})")),
                  DomainError);
  CHECK_THROWS_AS(io::density_from_json(json::parse(R"({"kind":"density","rows":1,"cols":1,"re":[[2]]})")),
                  DomainError);
}

TEST_CASE("channel and tuple JSON") {
  const auto ch = phase_flip_channel(0.25);
  const auto back = io::channel_from_json(io::channel_to_json(ch));
  CHECK(back.dim() == 2);
  CHECK(max_abs_diff(apply(back, ComplexMatrix{{0, 1}, {0, 0}}), ComplexMatrix{{0, 0.75}, {0.25, 0}}) <= 1e-15);

  CHECK_THROWS_AS(io::channel_from_json(json::parse(R"({"dim":2,"kraus":[]})")), ParseError);
  CHECK_THROWS_AS(
      io::channel_from_json(json::parse(R"({"dim":3,"kraus":[{"rows":2,"cols":2,"re":[[1,0],[0,1]]}]})")),
      DimensionError);

  const auto t = io::tuple_from_json(json::parse(
      R"({"operators":[{"rows":2,"cols":2,"re":[[0,1],[1,0]]},{"rows":2,"cols":2,"re":[[1,0],[0,-1]]}]})"));
  CHECK(t.size() == 2);
  CHECK(t[1] == sigma3());
  CHECK_THROWS_AS(io::tuple_from_json(json::parse(R"([{"rows":2,"cols":2,"re":[[0,1],[0,0]]}])")),
                  DomainError);
  CHECK_THROWS_AS(io::tuple_from_json(json::parse(R"({"ops":[]})")), ParseError);
}

TEST_CASE("CSV writers") {
  std::ostringstream b;
  io::write_boundary_csv(b, boundary(ComplexMatrix{{0, 1}, {0, 0}}, 4));
  std::istringstream lines(b.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "theta,support,re,im");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
  }
  CHECK(rows == 4);

  PointCloud pts;
  pts.dim = 3;
  pts.coords = {0.1, 0.2, 0.3};
  std::ostringstream p;
  io::write_points_csv(p, pts);
  CHECK(p.str() == "x1,x2,x3\n0.10000000000000001,0.20000000000000001,0.29999999999999999\n");

  std::ostringstream m;
  io::write_moments_csv(m, moments(shadow_from_points(pts), 1), 3);
  CHECK(m.str().rfind("k1,k2,k3,estimate,std_error\n0,0,0,1,0\n1,0,0,0.10000000000000001,0\n", 0) == 0);
}

TEST_CASE("histogram and report JSON fields") {
  PointCloud pts;
  pts.dim = 1;
  pts.coords = {0.1, 0.6};
  const auto h = io::histogram_to_json(histogram(shadow_from_points(pts), 2,
                                                 std::vector<std::pair<double, double>>{{0.0, 1.0}}));
  CHECK(h["bins"] == 2);
  CHECK(h["counts"] == json::array({1, 1}));
  CHECK(h["bounds"] == json::array({json::array({0.0, 1.0})}));

  const auto inj = io::report_to_json(verify_affine_injectivity(pauli_basis(), 10, 1));
  for (const char* key : {"rank", "condition_number", "violations"}) CHECK(inj.contains(key));

  const auto inc = io::report_to_json(verify_inclusion(phase_flip_channel(0.25), ComplexMatrix{{0, 1}, {0, 0}}, 8, 8, 1));
  for (const char* key : {"max_violation", "directions_checked", "hypothesis_defects"}) CHECK(inc.contains(key));
}

TEST_CASE("demos") {
  CHECK(demo_from_string("fig2") == DemoName::fig2);
  CHECK(to_string(DemoName::fig1b) == "fig1b");
  CHECK_THROWS_AS(demo_from_string("fig3"), ParseError);

  const auto d = run_demo(DemoName::fig1b, 3, 64);
  REQUIRE(d.iterates.size() == 3);
  CHECK(d.iterates[0].label == "B1");
  CHECK(d.iterates[1].matrix == ComplexMatrix{{0, 0.75}, {0.25, 0}});
  CHECK(d.iterates[2].matrix == ComplexMatrix{{0, 0.625}, {0.375, 0}});
  CHECK(d.iterates[2].boundary.size() == 64);

  const auto fig2 = run_demo(DemoName::fig2, 3, 64);
  CHECK(fig2.iterates[0].label == "C1");
  CHECK(std::abs(fig2.iterates[2].barycenter - Complex(1.0 / 3.0, 2.0 / 3.0)) <= 1e-12);
}

TEST_CASE("SVG coordinates all appear in the CSV output") {
  const auto d = run_demo(DemoName::fig2, 3, 32);
  const std::string svg = demo_svg(d);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::set<std::string> csv_values;
  for (const auto& it : d.iterates) {
    for (const auto& z : it.boundary.boundary_points) {
      csv_values.insert(io::format_double(z.real()));
      csv_values.insert(io::format_double(z.imag()));
    }
    csv_values.insert(io::format_double(it.barycenter.real()));
    csv_values.insert(io::format_double(it.barycenter.imag()));
  }

  const std::regex polygon(R"(points="([^"]*)\")");
  std::size_t plotted = 0;
  for (auto m = std::sregex_iterator(svg.begin(), svg.end(), polygon); m != std::sregex_iterator(); ++m) {
    std::istringstream pairs((*m)[1].str());
    std::string pair;
    while (pairs >> pair) {
      const auto comma = pair.find(',');
      CHECK(csv_values.count(pair.substr(0, comma)) == 1);
      CHECK(csv_values.count(pair.substr(comma + 1)) == 1);
      ++plotted;
    }
  }
  CHECK(plotted == 3 * 32);

  const std::regex star(R"(translate\(([^,]*),([^)]*)\))");
  std::smatch sm;
  REQUIRE(std::regex_search(svg, sm, star));
  CHECK(csv_values.count(sm[1].str()) == 1);
  CHECK(csv_values.count(sm[2].str()) == 1);
}
