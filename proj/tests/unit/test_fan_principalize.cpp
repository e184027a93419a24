#include "doctest.h"

#include "toroidal/errors.hpp"
#include "toroidal/fan.hpp"
#include "toroidal/generators.hpp"
#include "toroidal/principalize.hpp"

using namespace toroidal;

namespace {

std::array<Rational, 3> random_point(Rng& rng) {
  std::array<Rational, 3> p;
  for (auto& x : p) {
    x = Rational(static_cast<long>(rng.uniform(-20, 20)), static_cast<long>(rng.uniform(1, 7)));
    x.canonicalize();
  }
  return p;
}

bool all_smooth(const SmoothFan& fan) {
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    auto d = fan.cone_det(static_cast<int>(c));
    if (d != 1 && d != -1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("star subdivisions") {
  SmoothFan octant = SmoothFan::octant();
  CHECK(octant.is_smooth());
  CHECK(octant.violations().empty());

  SUBCASE("2-cone") {
    SmoothFan f = star_subdivide_2cone(octant, {0, 1});
    CHECK(f.rays().size() == 4);
    CHECK(f.rays()[3] == Ray{1, 1, 0});
    CHECK(f.cones().size() == 2);
    CHECK(all_smooth(f));
    CHECK(f.is_simplicial_complex());
    CHECK(f.ray_parents()[3] == std::vector<int>{0, 1});
  }
  SUBCASE("3-cone") {
    SmoothFan f = star_subdivide_3cone(octant, 0);
    CHECK(f.rays().back() == Ray{1, 1, 1});
    CHECK(f.cones().size() == 3);
    CHECK(all_smooth(f));
  }
  SUBCASE("interior faces split both incident cones") {
    SmoothFan f = star_subdivide_3cone(octant, 0);
    Face interior{0, 3};
    REQUIRE(f.is_interior(interior));
    SmoothFan g = star_subdivide_2cone(f, interior);
    CHECK(g.cones().size() == 5);
    CHECK(g.rays().back() == Ray{2, 1, 1});
    CHECK(g.is_simplicial_complex());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(star_subdivide_2cone(octant, {0, 5}), Error);
    CHECK_THROWS_AS(star_subdivide_3cone(octant, 4), Error);
    try {
      star_subdivide_3cone(octant, 4);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotACone);
    }
  }
}

TEST_CASE("repeated subdivisions keep smoothness and support") {
  Rng rng(29);
  SmoothFan fan = SmoothFan::octant();
  for (int round = 0; round < 12; ++round) {
    if (rng.coin()) {
      fan = star_subdivide_3cone(fan, static_cast<int>(rng.uniform(
                                          0, static_cast<std::int64_t>(fan.cones().size()) - 1)));
    } else {
      std::vector<Face> faces;
      for (const auto& [f, cones] : fan.faces()) faces.push_back(f);
      fan = star_subdivide_2cone(fan, rng.pick(faces));
    }
    CHECK(all_smooth(fan));
    CHECK(fan.is_simplicial_complex());
  }
  SmoothFan octant = SmoothFan::octant();
  for (int i = 0; i < 1000; ++i) {
    auto p = random_point(rng);
    CHECK(fan.contains(p) == octant.contains(p));
  }
}

TEST_CASE("divisor pullback and chart exponents") {
  SmoothFan octant = SmoothFan::octant();
  Divisor d{2, 0, 0};
  CHECK(chart_exponents(d, octant, 0) == ExpVec{2, 0, 0});
  CHECK(chart_exponents(Divisor{0, 0, 0}, octant, 0) == ExpVec{0, 0, 0});

  SmoothFan f = star_subdivide_2cone(octant, {0, 1});
  Divisor pd = pullback(d, f);
  CHECK(pd == Divisor{2, 0, 0, 2});
  int cone = f.find_cone(Cone{0, 3, 2});
  REQUIRE(cone >= 0);
  CHECK(chart_exponents(pd, f, cone) == ExpVec{2, 2, 0});

  SmoothFan g = star_subdivide_3cone(octant, 0);
  CHECK(pullback(Divisor{1, 2, 4}, g).back() == 7);
  CHECK_THROWS_AS(chart_exponents(d, octant, 3), Error);
}

TEST_CASE("omega") {
  CHECK(omega(2, 0, 0, 3) == OmegaValue::pair(3, 2));
  CHECK(omega(2, 1, 3, 2).is_minus_infinity());
  CHECK(omega(1, 1, 1, 1).is_minus_infinity());
  CHECK(OmegaValue::minus_infinity() < OmegaValue::pair(0, 0));
  CHECK(OmegaValue::pair(2, 9) < OmegaValue::pair(3, 0));

  SmoothFan octant = SmoothFan::octant();
  CHECK(omega_bar(octant, {2, 0, 0}, {0, 3, 0}) == OmegaValue::pair(3, 2));
  CHECK(omega_bar(octant, {2, 0, 0}, {2, 0, 0}).is_minus_infinity());
  CHECK(omega_bar(octant, {0, 0, 0}, {0, 0, 0}).is_minus_infinity());
}

TEST_CASE("local principality") {
  SmoothFan octant = SmoothFan::octant();
  CHECK(is_locally_principal(octant, DivisorSet{{{2, 0, 0}}}));
  CHECK_FALSE(is_locally_principal(octant, DivisorSet{{{2, 0, 0}, {0, 3, 0}}}));
  CHECK(is_locally_principal(octant, DivisorSet{{{1, 1, 0}, {2, 3, 1}, {1, 2, 0}}}));
}

TEST_CASE("principalizing a pair") {
  SmoothFan octant = SmoothFan::octant();
  PrincipalizeResult r = principalize_pair(octant, {2, 0, 0}, {0, 3, 0});
  CHECK(r.principal);
  CHECK(is_locally_principal(r.fan, r.divisors));
  REQUIRE(r.history.size() >= 2);
  CHECK(r.history[0].omega_bar == OmegaValue::pair(3, 2));
  for (std::size_t i = 1; i < r.history.size(); ++i)
    CHECK(r.history[i].omega_bar < r.history[i - 1].omega_bar);
  for (const auto& round : r.history) {
    CHECK(round.confined);
    CHECK(round.smooth);
  }

  PrincipalizeResult same = principalize_pair(octant, {1, 2, 0}, {1, 2, 0});
  CHECK(same.history.empty());
  CHECK(same.fan.cones().size() == 1);

  try {
    principalize_pair(octant, {2, 0, 0}, {0, 3, 0}, 1);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StepBudgetExceeded);
  }
}

TEST_CASE("principalizing several divisors") {
  SmoothFan octant = SmoothFan::octant();
  DivisorSet three{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (auto* strategy : {&principalize_many, &principalize_with_3points}) {
    PrincipalizeResult r = (*strategy)(octant, three, 0);
    CHECK(r.principal);
    CHECK(is_locally_principal(r.fan, r.divisors));
    CHECK(r.fan.is_smooth());
  }
  PrincipalizeResult one = principalize_many(octant, DivisorSet{{{3, 1, 0}}}, 0);
  CHECK(one.history.empty());
  PrincipalizeResult equal = principalize_with_3points(octant, DivisorSet{{{1, 1, 1}, {1, 1, 1}}}, 0);
  CHECK(equal.history.empty());

  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    FanInput in = random_fan_instance(rng, 3, 3, 6);
    PrincipalizeResult a = principalize_many(in.fan, in.divisors);
    PrincipalizeResult b = principalize_with_3points(in.fan, in.divisors);
    CHECK(is_locally_principal(a.fan, a.divisors));
    CHECK(is_locally_principal(b.fan, b.divisors));
  }
}

TEST_CASE("fan json") {
  Json j = Json::parse(R"({"rays": [[1,0,0],[0,1,0],[0,0,1]], "cones": [[0,1,2]],
                           "divisors": [{"coeffs": [2,0,0]}, [0,3,0]]})");
  FanInput in = fan_from_json(j);
  CHECK(in.fan.rays().size() == 3);
  CHECK(in.divisors.divisors.size() == 2);
  CHECK(in.divisors.divisors[1] == Divisor{0, 3, 0});
  FanInput again = fan_from_json(to_json(in.fan, in.divisors));
  CHECK(again.divisors.divisors == in.divisors.divisors);
  CHECK_THROWS_AS(fan_from_json(Json::parse(R"({"rays": [[1,0]]})")), Error);
}
