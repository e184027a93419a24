#include "doctest.h"

#include "helpers.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/generators.hpp"
#include "toroidal/jacobian.hpp"

using namespace toroidal;
using namespace toroidal::test;

namespace {

Germ monomial_germ(const std::array<ExpVec, 3>& rows) {
  return germ(PointKind::ThreePoint, PointKind::ThreePoint, Payload::monomial(rows[0]),
              Payload::monomial(rows[1]), Payload::monomial(rows[2]));
}

ExpVec ord_vector(const TruncSeries& s) {
  return ExpVec{s.ord_along(0), s.ord_along(1), s.ord_along(2)};
}

}  // namespace

TEST_CASE("orders along boundary axes") {
  Payload unit_times_cube =
      Payload::with_series(ExpVec{3, 0, 0}, TruncSeries::translated_axis(1, Rational(2)));
  CHECK(ord_along(unit_times_cube, 0) == 3);
  CHECK(ord_along(mono(2, 1, 0), 1) == 1);
  Payload mixed = Payload::with_series(ExpVec{0, 0, 0},
                                       poly({{ExpVec{2, 1, 0}, 1}, {ExpVec{3, 0, 0}, 1}}));
  CHECK(ord_along(mixed, 0) == 2);
}

TEST_CASE("jacobian determinants") {
  SUBCASE("identity") {
    CHECK(jacobian_det(identity_germ()) == TruncSeries::constant(1));
  }
  SUBCASE("toroidal form 3") {
    Germ g = germ(PointKind::ThreePoint, PointKind::OnePoint, mono(2, 0, 0),
                  Payload::with_series(ExpVec{3, 0, 0}, TruncSeries::translated_axis(1, 1)),
                  Payload::with_series(ExpVec{1, 0, 0}, TruncSeries::translated_axis(2, 1)));
    TruncSeries jac = jacobian_det(g);
    CHECK(jac.ord_along(0) == 5);
    CHECK(jac.coefficient(ExpVec{5, 0, 0}) == 2);
    CHECK(jac.divided_by_monomial(ExpVec{5, 0, 0}).is_unit());
  }
  SUBCASE("monomial germs follow the closed form") {
    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
      std::array<ExpVec, 3> rows;
      do {
        for (auto& r : rows) r = ExpVec{rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 4)};
      } while (det3(rows[0], rows[1], rows[2]) == 0);
      TruncSeries jac = jacobian_det(monomial_germ(rows));
      for (std::size_t axis = 0; axis < 3; ++axis)
        CHECK(jac.ord_along(axis) == rows[0][axis] + rows[1][axis] + rows[2][axis] - 1);
      LambdaReport rep = lambda_of(monomial_germ(rows));
      CHECK(rep.all_one());
    }
  }
  SUBCASE("chain rule on monomial substitutions") {
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
      std::array<ExpVec, 3> rows;
      do {
        for (auto& r : rows) r = ExpVec{rng.uniform(0, 3), rng.uniform(0, 3), rng.uniform(0, 3)};
      } while (det3(rows[0], rows[1], rows[2]) == 0);
      SubMatrix s = random_chart_chain(rng, 3);
      std::array<ExpVec, 3> composed, s_rows;
      for (int k = 0; k < 3; ++k) {
        composed[k] = s.apply(rows[k]);
        s_rows[k] = ExpVec{s(k, 0), s(k, 1), s(k, 2)};
      }
      ExpVec lhs = ord_vector(jacobian_det(monomial_germ(composed)));
      ExpVec pulled = s.apply(ord_vector(jacobian_det(monomial_germ(rows))));
      ExpVec rhs = pulled + ord_vector(jacobian_det(monomial_germ(s_rows)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("lambda values") {
  SUBCASE("toroidal forms give lambda = 1") {
    Rng rng(43);
    for (int form = 1; form <= 6; ++form)
      for (int i = 0; i < 20; ++i) {
        Germ g = random_toroidal(rng, form);
        LambdaReport rep = lambda_of(g);
        CHECK(rep.components.size() == static_cast<std::size_t>(boundary_count(g.domain_kind)));
        for (const auto& c : rep.components) CHECK(c.lambda == c.ord_boundary - c.ord_jac);
        CHECK(rep.all_one());
      }
    CHECK(lambda_of(identity_germ()).all_one());
  }
  SUBCASE("1-point over a 2-point") {
    Germ g = one_point_over_two_point(3, 2, 2, Rational(1));
    LambdaReport rep = lambda_of(g);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].lambda == -1);
    for (std::int64_t c = 0; c <= 4; ++c)
      CHECK(lambda_of(one_point_over_two_point(2, 1, c, Rational(-3, 2))).components[0].lambda ==
            1 - c);
  }
  SUBCASE("1-point over a 3-point") {
    for (std::int64_t d = 0; d <= 4; ++d) {
      Germ g = one_point_over_three_point(2, 1, 1, d, Rational(1), Rational(2));
      CHECK(lambda_of(g).components[0].lambda == 1 - d);
    }
  }
  SUBCASE("an unknown jacobian cannot be certified") {
    Germ g = germ(PointKind::OnePoint, PointKind::OnePoint, mono(1, 0, 0), mono(0, 1, 0),
                  Payload::with_series(ExpVec{0, 0, 0}, poly({{ExpVec{0, 0, 9}, 1}}, 4)));
    CHECK_THROWS_AS(lambda_of(g), Error);
  }
}

TEST_CASE("classification by lambda") {
  SUBCASE("d = 0 forces toroidal form 3") {
    ClassifyVerdict v = classify_by_lambda(one_point_over_three_point(2, 3, 1, 0, Rational(1),
                                                                      Rational(-1)));
    CHECK(v.kind == ClassifyVerdict::Kind::Toroidal);
    CHECK(v.tag == FormTag::Toroidal3);
  }
  SUBCASE("d > 0 is a counterexample") {
    ClassifyVerdict v = classify_by_lambda(one_point_over_three_point(2, 3, 1, 2, Rational(1),
                                                                      Rational(-1)));
    CHECK(v.kind == ClassifyVerdict::Kind::Counterexample);
    REQUIRE(v.witness);
    CHECK(v.witness->lambda == -1);
  }
  SUBCASE("excluded shapes always witness lambda != 1") {
    Rng rng(47);
    for (ExcludedShape shape : excluded_shapes())
      for (int i = 0; i < 25; ++i) {
        ExcludedInstance inst = random_excluded(rng, shape);
        LambdaReport rep = lambda_of(inst.germ);
        REQUIRE(rep.components.size() == 2);
        CHECK(rep.components[0].lambda == 1 - inst.c);
        CHECK(rep.components[1].lambda == 1 - inst.d);
        ClassifyVerdict v = classify_by_lambda(inst.germ);
        CHECK(v.kind == ClassifyVerdict::Kind::Counterexample);
        CHECK(v.to_json().at("verdict") == "counterexample");
      }
  }
  SUBCASE("lambda = 1 without the forced shape is inconclusive") {
    Germ g = one_point_over_three_point(2, 3, 1, 0, Rational(1), Rational(-1),
                                        {{ExpVec{1, 1, 0}, Rational(1)}});
    CHECK(lambda_of(g).all_one());
    CHECK(classify_by_lambda(g).kind == ClassifyVerdict::Kind::Inconclusive);
  }
}
