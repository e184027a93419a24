#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/generators.hpp"
#include "toroidal/json_io.hpp"

using namespace toroidal;
using namespace toroidal::test;

namespace {

bool has(const std::vector<std::string>& xs, const std::string& s) {
  return std::find(xs.begin(), xs.end(), s) != xs.end();
}

}  // namespace

TEST_CASE("classify toroidal forms") {
  CHECK(classify(germ(PointKind::OnePoint, PointKind::OnePoint, mono(3, 0, 0), mono(0, 1, 0),
                      mono(0, 0, 1))) == FormTag::Toroidal6);
  CHECK(classify(identity_germ()) == FormTag::Toroidal6);
  CHECK(classify(identity_germ(PointKind::ThreePoint)) == FormTag::Toroidal1);

  Rng rng(3);
  for (int form = 1; form <= 6; ++form)
    for (int i = 0; i < 20; ++i) {
      Germ g = random_toroidal(rng, form);
      CHECK(classify(g) == *g.form_tag);
      CHECK(validate(g).empty());
    }
}

TEST_CASE("super parameters") {
  // u = m^2, v = m^3 (1 + z), w = m * gamma + x^5 y with m = xy
  TruncSeries gamma_plus = poly({{ExpVec{0, 0, 0}, 1}, {ExpVec{1, 1, 0}, 2}, {ExpVec{4, 0, 0}, 1}}, 8);
  Germ g = germ(PointKind::TwoPoint, PointKind::TwoPoint, mono(2, 2, 0),
                Payload::with_series(ExpVec{3, 3, 0}, TruncSeries::translated_axis(2, 1)),
                Payload::with_series(ExpVec{1, 1, 0}, gamma_plus));
  CHECK(is_super_parameters(g));
  CHECK(super_parameter_form(g) == 3);
  FormTag tag = classify(g);
  CHECK(tag != FormTag::Toroidal4);
  CHECK(tag != FormTag::Toroidal5);

  SUBCASE("rank(u, v) = 1 rules out the shape") {
    Germ bad = germ(PointKind::TwoPoint, PointKind::TwoPoint, mono(1, 1, 0), mono(2, 2, 0),
                    Payload::with_series(ExpVec{0, 0, 0}, poly({{ExpVec{0, 0, 1}, 1}})));
    CHECK_FALSE(is_super_parameters(bad));
  }
}

TEST_CASE("monomial form") {
  CHECK(is_monomial_form(identity_germ(PointKind::ThreePoint)));
  Germ series_w = germ(PointKind::ThreePoint, PointKind::ThreePoint, mono(2, 0, 2), mono(0, 2, 2),
                       Payload::with_series(ExpVec{1, 1, 2}, TruncSeries::translated_axis(0, 1)));
  CHECK_FALSE(is_monomial_form(series_w));
  CHECK(is_monomial_form(germ(PointKind::ThreePoint, PointKind::ThreePoint, mono(1, 1, 0),
                              mono(0, 1, 1), mono(1, 0, 1))));
}

TEST_CASE("validate names the failed condition") {
  Germ t4 = germ(PointKind::TwoPoint, PointKind::TwoPoint, mono(1, 2, 0), mono(2, 1, 0),
                 mono(0, 0, 1));
  t4.form_tag = FormTag::Toroidal4;
  CHECK(validate(t4).empty());

  Germ t2 = germ(PointKind::ThreePoint, PointKind::TwoPoint, mono(1, 2, 0), mono(2, 4, 0),
                 Payload::with_series(ExpVec{1, 1, 0}, TruncSeries::translated_axis(2, 3)));
  t2.form_tag = FormTag::Toroidal2;
  CHECK(has(validate(t2), "determinant condition"));

  ThreePointGerm t = order_two_germ();
  t.n_exp = ExpVec{1, 1, 1};
  t.series_terms = {{Rational(1), ExpVec{1, 1, 2}}};
  Germ eq = from_three_point(t);
  eq.form_tag = FormTag::Eq16;
  CHECK(has(validate(eq), "N divides M_0"));
}

TEST_CASE("exponent data round trip") {
  ThreePointGerm t = order_two_germ();
  Germ g = from_three_point(t);
  CHECK(to_three_point(g) == t);
  CHECK(t.violations().empty());
  CHECK_THROWS_AS(to_three_point(identity_germ()), Error);
}

TEST_CASE("germ json") {
  Rng rng(5);
  for (int form = 1; form <= 6; ++form) {
    Germ g = random_toroidal(rng, form);
    CHECK(germ_from_json(to_json(g)) == g);
  }
  CHECK_THROWS_AS(parse_json_text("{\"u\": "), Error);
  try {
    germ_from_json(parse_json_text(R"({"target_kind": "ThreePoint"})"));
    FAIL("missing fields accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("structural errors") {
  Germ g = identity_germ();
  g.payloads[2].exp = ExpVec{0, 0};
  CHECK_THROWS_AS(check_structure(g), Error);
  try {
    check_structure(g);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedGerm);
  }
}
