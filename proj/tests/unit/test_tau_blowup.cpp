#include "doctest.h"

#include <variant>

#include "helpers.hpp"
#include "toroidal/blowup.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/generators.hpp"
#include "toroidal/tau.hpp"

using namespace toroidal;
using namespace toroidal::test;

TEST_CASE("tau of exponent data") {
  SUBCASE("monomial form over a 3-point") {
    ThreePointGerm t;
    t.target_kind = PointKind::ThreePoint;
    t.u_exp = ExpVec{1, 0, 0};
    t.v_exp = ExpVec{0, 1, 0};
    t.n_exp = ExpVec{0, 0, 1};
    CHECK(tau_of(t).is_minus_infinity());
    CHECK(tau_of(t).to_string() == "-inf");
  }
  SUBCASE("2-point target") {
    TauValue tau = tau_of(order_two_germ());
    REQUIRE_FALSE(tau.is_minus_infinity());
    CHECK(tau.value() == 2);
  }
  SUBCASE("3-point target") {
    ThreePointGerm t;
    t.target_kind = PointKind::ThreePoint;
    t.u_exp = ExpVec{2, 0, 0};
    t.v_exp = ExpVec{0, 2, 0};
    t.series_terms = {{Rational(1), ExpVec{1, 1, 0}}, {Rational(-2), ExpVec{2, 1, 0}}};
    t.n_exp = ExpVec{1, 1, 1};
    CHECK(t.violations().empty());
    CHECK(tau_of(t) == TauValue::order(2));
  }
  SUBCASE("trivial quotient") {
    ThreePointGerm t = order_two_germ();
    t.series_terms = {{Rational(1), ExpVec{2, 2, 4}}};
    CHECK(tau_of(t) == TauValue::order(1));
  }
}

TEST_CASE("tau under domain substitutions") {
  ThreePointGerm t = order_two_germ();
  auto same = tau_preserved_under(t, SubMatrix::identity());
  CHECK(same.first == same.second);

  SubMatrix curve = SubMatrix::identity();
  curve(1, 0) = 1;  // 2-curve chart x = x1, y = x1 y1
  auto [before, after] = tau_preserved_under(t, curve);
  CHECK(before == TauValue::order(2));
  CHECK(after == TauValue::order(2));

  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    SubMatrix chain = random_chart_chain(rng, 4);
    auto [b, a] = tau_preserved_under(t, chain);
    CHECK(b == a);
  }
  CHECK(tau_of(apply_target_chart(t, false)) == TauValue::order(2));
}

TEST_CASE("domain blow-up charts") {
  Germ g = from_three_point(order_two_germ());

  SUBCASE("2-curve at a 3-point") {
    auto charts = domain_charts(CenterKind::TwoCurve, g);
    REQUIRE(charts.size() == 2);
    for (const auto& [chart, child] : charts) {
      CHECK(chart.sub.det() == 1);
      CHECK(chart.sub.is_nonnegative());
      CHECK(chart.is_monomial());
      CHECK(child.domain_kind == PointKind::ThreePoint);
      CHECK(tau_of(to_three_point(child)) == TauValue::order(2));
    }
  }
  SUBCASE("3-point blow-up with translations") {
    auto plain = domain_charts(CenterKind::ThreePoint, g);
    CHECK(plain.size() == 3);
    auto translated = domain_charts(CenterKind::ThreePoint, g, {Rational(2)});
    CHECK(translated.size() > 3);
    bool has_translation = false;
    for (const auto& [chart, child] : translated) {
      CHECK(std::abs(chart.sub.det()) == 1);
      if (!chart.is_monomial()) {
        has_translation = true;
        CHECK(chart.substitution().find("+2") != std::string::npos);
        CHECK(child.domain_kind != PointKind::ThreePoint);
      }
    }
    CHECK(has_translation);
  }
  SUBCASE("germ charts compose like their matrices") {
    auto first = domain_charts(CenterKind::TwoCurve, g);
    const auto& [c1, g1] = first[0];
    auto second = domain_charts(CenterKind::TwoCurve, g1);
    const auto& [c2, g2] = second[1];
    Chart composite = c1;
    composite.sub = c1.sub.then(c2.sub);
    Germ direct = apply_domain_chart(g, composite);
    for (int i = 0; i < 3; ++i) CHECK(direct.payloads[i].expanded() == g2.payloads[i].expanded());
  }
}

TEST_CASE("target blow-up charts") {
  CHECK_THROWS_AS(target_charts(TargetPoint::ThreePoint, 1), Error);
  CHECK(target_charts(TargetPoint::TwoPoint, 1).size() == 2);
  CHECK(target_charts(TargetPoint::ThreePoint, 3).size() == 4);
  CHECK(target_charts(TargetPoint::TwoPoint, 3).size() == 2);
  auto c2 = target_charts(TargetPoint::TwoPoint, 2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].substitution() != c2[1].substitution());
  for (const auto& ch : c2) CHECK(ch.side == Side::Target);
  CHECK_THROWS_AS(target_charts(TargetPoint::TwoPoint, 7), Error);
}

TEST_CASE("descent steps") {
  SUBCASE("1-point state with A = 2") {
    DescentState s = DescentState::at_one_point(3, 5, 1);
    CHECK(s.invariant() == 2);
    auto children = a_descent_step(s, 1);
    REQUIRE(children.size() == 3);
    const auto* next = std::get_if<DescentState>(&children[0].second);
    REQUIRE(next != nullptr);
    CHECK(next->invariant() == 1);
    for (std::size_t i = 1; i < children.size(); ++i) {
      const auto* r = std::get_if<Resolved>(&children[i].second);
      REQUIRE(r != nullptr);
      CHECK(ideal_invertible({r->u, r->v, r->w}));
    }
  }
  SUBCASE("A = 1 resolves in one step") {
    DescentState s = DescentState::at_one_point(2, 4, 1);
    REQUIRE(s.invariant() == 1);
    for (const auto& [chart, child] : a_descent_step(s, Rational(-3, 2)))
      CHECK(std::holds_alternative<Resolved>(child));
  }
  SUBCASE("2-point state") {
    DescentState s = DescentState::at_two_point(2, 2, 3, 4, 1, 1);
    CHECK(s.violations().empty());
    auto children = a_descent_step(s, 1);
    const auto* r = std::get_if<Resolved>(&children.back().second);
    REQUIRE(r != nullptr);
    CHECK(ideal_invertible({r->u, r->v, r->w}));
    if (const auto* next = std::get_if<DescentState>(&children[0].second))
      CHECK(next->invariant() < s.invariant());
  }
  SUBCASE("invalid states are rejected") {
    CHECK_THROWS_AS(a_descent_step(DescentState::at_one_point(1, 5, 1), 1), Error);
  }
}
