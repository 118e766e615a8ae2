#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncball/sampling.hpp"
#include "ncball/serialize.hpp"
#include "oracles.hpp"

using namespace ncball;

TEST_CASE("points and maps round-trip bit for bit") {
  Sampler sampler(401);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + (i % 3);
    const Point p = sampler.point_in_ball(n);
    const Point back = point_from_json(point_to_json(p));
    CHECK((p.coords() - back.coords()).norm() == 0.0);

    const MoebiusMap m = sampler.random_moebius(n);
    const MoebiusMap mback = map_from_json(map_to_json(m));
    CHECK(map_distance(m, mback) == 0.0);
  }
}

TEST_CASE("polynomials round-trip through the term list") {
  Sampler sampler(409);
  const NcPoly p = sampler.random_poly(3, 4, 6);
  const NcPoly back = poly_from_json(poly_to_json(p), 3);
  CHECK(back.coeffs().size() == p.coeffs().size());
  const Point lambda = sampler.point_in_ball(3);
  CHECK(std::abs(eval_scalar(p, lambda) - eval_scalar(back, lambda)) == 0.0);
}

TEST_CASE("witness expression trees evaluate identically after a round trip") {
  Sampler sampler(419);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + (i % 2);
    std::vector<Point> delta;
    for (int k = 0; k < 3; ++k) delta.push_back(sampler.point_in_ball(n));
    const Point z = sampler.point_in_ball(n);
    bool too_close = false;
    for (const auto& p : delta)
      if (pseudo_distance(z, p) <= 1e-6) too_close = true;
    if (too_close) continue;
    const auto w = vanishing_witness(delta, z);
    const BallFunction back =
        ball_function_from_json(ball_function_to_json(w.witness));
    for (int s = 0; s < 5; ++s) {
      const Point probe = sampler.point_in_ball(n);
      CHECK(std::abs(back.evaluate(probe) - w.witness.evaluate(probe)) <= 1e-14);
    }
  }
}

TEST_CASE("malformed wire data is rejected") {
  CHECK_THROWS(point_from_json(json::array()));
  CHECK_THROWS(point_from_json(json::parse(R"([[1.5, 0.0]])")));  // outside the ball
  CHECK_THROWS(map_from_json(json::parse(R"([[ [1,0] ]])")));
  CHECK_THROWS(ball_function_from_json(json{{"kind", "mystery"}}));
  CHECK_THROWS(presentation_from_json(json{{"n", 1}}));
}

TEST_CASE("presentations round-trip") {
  const GroupPresentation g{1, {oracles::cyclic_generator()}};
  const GroupPresentation back = presentation_from_json(presentation_to_json(g));
  CHECK(back.n == 1);
  REQUIRE(back.generators.size() == 1);
  CHECK(map_distance(back.generators.front(), g.generators.front()) == 0.0);
}

TEST_CASE("orbit CSV has one row per point with the shell tag") {
  const auto e = enumerate_elements({1, {oracles::cyclic_generator()}}, 2);
  const auto orbit = orbit_of_origin(e.elements);
  const std::string csv = orbit_to_csv(orbit);
  CHECK(csv.rfind("re1,im1,shell\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == orbit.points.size() + 1);
}

TEST_CASE("operator export carries basis metadata and row-major entries") {
  const TruncatedFockBasis basis(2, 1);
  const auto op = creation(1, basis);
  const json j = operator_to_json(op);
  CHECK(j.at("n") == 2);
  CHECK(j.at("d") == 1);
  CHECK(j.at("entries").size() == basis.size() * basis.size());
  // entry (row 1, col 0) is the image of the vacuum under S_1
  const auto entry = j.at("entries")[1 * basis.size() + 0];
  CHECK(complex_from_json(entry) == Complex(1.0, 0.0));
}

TEST_CASE("blaschke and membership reports serialize their verdicts") {
  const auto e = enumerate_elements({1, {oracles::cyclic_generator()}}, 4);
  const json b = blaschke_to_json(blaschke_report(e));
  CHECK(b.at("verdict") == "convergent");
  CHECK(b.at("shells").size() == 5);

  const auto verdict = spectral_membership(oracles::cyclic_orbit_points(5),
                                           oracles::point1({0.0, 0.5}));
  const json m = membership_to_json(verdict);
  CHECK(m.at("status") == "Out");
  CHECK(m.at("witness_value").get<double>() > 0.0);
  CHECK(m.contains("witness"));
}
