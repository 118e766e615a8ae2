#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncball/sampling.hpp"
#include "ncball/spectral.hpp"
#include "oracles.hpp"

using namespace ncball;
using oracles::cyclic_generator;
using oracles::point1;
using oracles::point2;

TEST_CASE("single-factor witness at the origin") {
  const auto w = vanishing_witness({point1({-0.5, 0.0})}, Point::origin(1));
  CHECK(w.value_at_probe == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(w.evaluate(Point::origin(1))) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(w.evaluate(point1({-0.5, 0.0}))) <= kCrossTol);
}

TEST_CASE("empty set yields the constant one") {
  const auto w = vanishing_witness({}, point1({0.3, 0.2}));
  CHECK(w.value_at_probe == 1.0);
  CHECK(std::abs(w.evaluate(point1({0.1, -0.4}))) == doctest::Approx(1.0));
}

TEST_CASE("frozen product over the first three cyclic points") {
  const std::vector<Point> delta{point1({-0.5, 0.0}), point1({-0.8, 0.0}),
                                 point1({-13.0 / 14.0, 0.0})};
  const auto w = vanishing_witness(delta, Point::origin(1));
  CHECK(w.value_at_probe == doctest::Approx(13.0 / 35.0).epsilon(1e-12));
  CHECK(std::abs(w.evaluate(Point::origin(1))) ==
        doctest::Approx(13.0 / 35.0).epsilon(1e-12));
  for (const auto& p : delta) CHECK(std::abs(w.evaluate(p)) <= kCrossTol);
}

TEST_CASE("witness value is the product of pseudohyperbolic distances") {
  Sampler sampler(103);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + (i % 3);
    std::vector<Point> delta;
    for (int k = 0; k < 4 + (i % 3); ++k) delta.push_back(sampler.point_in_ball(n));
    const Point z = sampler.point_in_ball(n);
    bool too_close = false;
    for (const auto& p : delta)
      if (pseudo_distance(z, p) <= 1e-6) too_close = true;
    if (too_close) continue;

    const auto w = vanishing_witness(delta, z);
    double expected = 1.0;
    for (const auto& p : delta) expected *= pseudo_distance(z, p);
    CHECK(std::abs(w.value_at_probe - expected) <= kCrossTol);
    CHECK(std::abs(std::abs(w.evaluate(z)) - expected) <= kCrossTol);
    for (const auto& p : delta) CHECK(std::abs(w.evaluate(p)) <= kCrossTol);
    // certified contraction
    CHECK(std::abs(w.evaluate(sampler.point_in_ball(n, 0.95))) <= 1.0 + 1e-12);
  }
}

TEST_CASE("appending a point never increases the witness value") {
  Sampler sampler(107);
  std::vector<Point> delta;
  const Point z = Point::origin(2);
  double prev = 1.0;
  for (int k = 0; k < 6; ++k) {
    delta.push_back(sampler.point_in_ball(2));
    const auto w = vanishing_witness(delta, z);
    CHECK(w.value_at_probe <= prev + 1e-14);
    prev = w.value_at_probe;
  }
}

TEST_CASE("witness construction rejects probes inside the set") {
  const Point p = point1({0.4, 0.1});
  CHECK_THROWS_AS(vanishing_witness({p}, p), std::domain_error);
}

TEST_CASE("membership verdicts on the cyclic orbit") {
  const std::vector<Point> delta = oracles::cyclic_orbit_points(10);

  SUBCASE("every set point classifies In") {
    for (const auto& p : delta) {
      const auto v = spectral_membership(delta, p);
      CHECK(v.status == Membership::In);
      CHECK(v.truncation == delta.size());
    }
  }

  SUBCASE("an off-axis probe classifies Out with the product value") {
    const Point z = point1({0.0, 0.5});
    const auto v = spectral_membership(delta, z);
    CHECK(v.status == Membership::Out);
    double expected = 1.0;
    for (const auto& p : delta) expected *= pseudo_distance(z, p);
    CHECK(v.witness_value == doctest::Approx(expected).epsilon(1e-10));
    CHECK(v.witness_value > v.threshold);
    REQUIRE(v.witness.has_value());
  }

  SUBCASE("points separate: each orbit point is separated from the rest") {
    for (std::size_t i = 0; i < delta.size(); ++i) {
      std::vector<Point> rest;
      for (std::size_t k = 0; k < delta.size(); ++k)
        if (k != i) rest.push_back(delta[k]);
      const auto w = vanishing_witness(rest, delta[i]);
      CHECK(w.value_at_probe > 0.0);
      CHECK(std::abs(w.evaluate(delta[i])) > 0.0);
    }
  }
}

TEST_CASE("a non-Blaschke prefix drives the witness toward Undecided") {
  // Delta = {1 - 1/k}: partial products at a probe near the boundary decay
  // toward zero, so the trivalent verdict refuses to certify Out.
  std::vector<Point> delta;
  for (int k = 2; k <= 40; ++k) delta.push_back(point1({1.0 - 1.0 / k, 0.0}));
  const Point z = point1({0.995, 0.0});
  const auto v = spectral_membership(delta, z);
  CHECK(v.status == Membership::Undecided);
  CHECK(v.witness_value <= v.threshold);
  // and the partial products only shrink as the prefix grows
  std::vector<Point> shorter(delta.begin(), delta.begin() + 10);
  CHECK(vanishing_witness(shorter, z).value_at_probe >= v.witness_value);
}

TEST_CASE("ergodicity certificates on the cyclic orbit") {
  const auto e = enumerate_elements({1, {cyclic_generator()}}, 6);

  SUBCASE("constants have zero defects") {
    const auto r = ergodicity_certificate(e.elements, NcPoly::constant(1, {1.0, 0.0}),
                                          kCrossTol);
    CHECK(r.invariance_defect == 0.0);
    CHECK(r.constancy_defect == 0.0);
    CHECK(r.implication_holds);
  }

  SUBCASE("the coordinate function is a non-invariant control") {
    const auto r =
        ergodicity_certificate(e.elements, NcPoly::generator(1, 1), kCrossTol);
    CHECK(r.invariance_defect >= 0.49);
    CHECK(r.implication_holds);  // vacuous: the premise fails
  }

  SUBCASE("invariance forces constancy at the truncation") {
    for (int trial = 0; trial < 8; ++trial) {
      Sampler sampler(200 + trial);
      const NcPoly f = sampler.random_poly(1, 3, 3);
      const auto r = ergodicity_certificate(e.elements, f, kCrossTol);
      CHECK(r.implication_holds);
    }
  }
}

TEST_CASE("ergodicity on a rotation orbit fixing the origin") {
  const auto e =
      enumerate_elements({1, {oracles::disk_rotation(3.14159265358979323846)}}, 4);
  const NcPoly s1sq = NcPoly::generator(1, 1) * NcPoly::generator(1, 1);
  const auto r = ergodicity_certificate(e.elements, s1sq, kCrossTol);
  CHECK(r.n_orbit_points == 1);
  CHECK(r.invariance_defect <= 1e-14);
  CHECK(r.constancy_defect == 0.0);
}

TEST_CASE("quotient automorphism surrogate") {
  const auto e = enumerate_elements({1, {cyclic_generator()}}, 6);
  const auto orbit = orbit_of_origin(e.elements);

  SUBCASE("the identity passes") {
    CHECK(quotient_automorphism_check(MoebiusMap::identity(1), orbit.points,
                                      kIsometryTol) == CheckResult::Pass);
  }
  SUBCASE("a rotation by pi maps the symmetric orbit to itself") {
    CHECK(quotient_automorphism_check(oracles::disk_rotation(3.14159265358979323846),
                                      orbit.points, kIsometryTol) == CheckResult::Pass);
  }
  SUBCASE("an incommensurable translation fails") {
    Mat g(2, 2);
    g << Complex(1.0, 0.0), Complex(-1.0 / 3.0, 0.0), Complex(-1.0 / 3.0, 0.0),
        Complex(1.0, 0.0);
    CHECK(quotient_automorphism_check(MoebiusMap(g), orbit.points, kIsometryTol) ==
          CheckResult::Fail);
  }
}

TEST_CASE("dimension reduction") {
  SUBCASE("a real-axis set in two dimensions has rank one and U = I") {
    std::vector<Point> delta;
    for (double t : {0.1, 0.3, 0.7}) delta.push_back(point2({t, 0.0}, {0.0, 0.0}));
    const auto r = reduce_dimension(delta);
    CHECK(r.rank == 1);
    CHECK((r.unitary - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("multiples of one vector rotate onto the first axis") {
    const Vec v = (Vec(2) << Complex(0.3, 0.1), Complex(-0.2, 0.4)).finished();
    std::vector<Point> delta;
    for (double t : {0.2, 0.5, 0.9}) delta.push_back(Point(v * t));
    const auto r = reduce_dimension(delta);
    CHECK(r.rank == 1);
    CHECK((r.unitary * r.unitary.adjoint() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          kGeomTol);
    for (const auto& p : delta) {
      const Vec image = r.unitary * p.coords();
      CHECK(std::abs(image(1)) <= 1e-10);
      CHECK(image.norm() == doctest::Approx(p.norm()).epsilon(1e-12));
    }
  }

  SUBCASE("a spanning set has full rank") {
    Sampler sampler(307);
    std::vector<Point> delta;
    for (int i = 0; i < 6; ++i) delta.push_back(sampler.point_in_ball(2));
    CHECK(reduce_dimension(delta).rank == 2);
  }

  SUBCASE("the origin alone has rank zero") {
    CHECK(reduce_dimension({Point::origin(3)}).rank == 0);
  }
}

TEST_CASE("fixed-point rigidity") {
  Sampler sampler(311);
  std::vector<Point> spanning;
  for (int i = 0; i < 3; ++i) spanning.push_back(sampler.point_in_ball(2, 0.5));
  REQUIRE(reduce_dimension(spanning).rank == 2);

  SUBCASE("the identity is confirmed") {
    CHECK(fixed_point_rigidity(MoebiusMap::identity(2), spanning, 1e-10) ==
          RigidityVerdict::IdentityConfirmed);
  }
  SUBCASE("a tiny perturbation fixing everything is still the identity") {
    Mat wiggle = Mat::Identity(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) wiggle(r, c) += 1e-13 * sampler.complex_gaussian();
    const MoebiusMap m(wiggle);
    CHECK(fixed_point_rigidity(m, spanning, 1e-10) ==
          RigidityVerdict::IdentityConfirmed);
  }
  SUBCASE("a rotation fixes 0 but not a spanning set") {
    Mat u = Mat::Identity(2, 2);
    u(0, 0) = std::polar(1.0, 0.7);
    CHECK(fixed_point_rigidity(MoebiusMap::from_unitary(u), spanning, 1e-10) ==
          RigidityVerdict::PremiseFailed);
    // points on the fixed axis alone do not span
    std::vector<Point> axis{point2({0.0, 0.0}, {0.3, 0.0}),
                            point2({0.0, 0.0}, {0.6, 0.0})};
    CHECK(fixed_point_rigidity(MoebiusMap::from_unitary(u), axis, 1e-10) ==
          RigidityVerdict::PremiseFailed);
  }
}
