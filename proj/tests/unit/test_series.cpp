#include "doctest.h"

#include "helpers.hpp"
#include "toroidal/errors.hpp"
#include "toroidal/json_io.hpp"
#include "toroidal/series.hpp"

using namespace toroidal;
using toroidal::test::poly;

TEST_CASE("rational text round trip") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(format_rational(Rational(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("order along an axis") {
  TruncSeries s = poly({{ExpVec{2, 1, 0}, 1}, {ExpVec{3, 0, 0}, 1}});
  CHECK(s.ord_along(0) == 2);
  CHECK(s.ord_along(1) == 0);
  CHECK_THROWS_AS(TruncSeries(4).ord_along(0), Error);
}

TEST_CASE("truncated arithmetic") {
  TruncSeries one_plus_x = poly({{ExpVec{0, 0, 0}, 1}, {ExpVec{1, 0, 0}, 1}}, 5);
  TruncSeries inv = one_plus_x.inverse();
  CHECK(inv.window() == 5);
  CHECK(inv.coefficient(ExpVec{3, 0, 0}) == -1);
  TruncSeries prod = one_plus_x * inv;
  CHECK(prod == TruncSeries::constant(1, 5));

  TruncSeries exact = TruncSeries::translated_axis(1, 2);
  CHECK(exact.is_exact());
  CHECK(exact.pow(3).coefficient(ExpVec{0, 1, 0}) == 12);

  SUBCASE("a product is valid up to the smaller window shifted by orders") {
    TruncSeries x = poly({{ExpVec{1, 0, 0}, 1}}, 3);
    TruncSeries y = poly({{ExpVec{0, 1, 0}, 1}}, 4);
    CHECK((x * y).window() >= 4);
    CHECK((x + y).window() == 3);
  }
}

TEST_CASE("derivatives and substitution") {
  TruncSeries s = poly({{ExpVec{2, 1, 0}, 3}, {ExpVec{0, 0, 2}, 1}});
  CHECK(s.derivative(0) == poly({{ExpVec{1, 1, 0}, 6}}));
  CHECK(s.derivative(2) == poly({{ExpVec{0, 0, 1}, 2}}));
  std::array<TruncSeries, 3> images{TruncSeries::monomial(ExpVec{1, 0, 0}),
                                    TruncSeries::monomial(ExpVec{1, 1, 0}),
                                    TruncSeries::monomial(ExpVec{0, 0, 1})};
  CHECK(s.substitute(images) == poly({{ExpVec{3, 1, 0}, 3}, {ExpVec{0, 0, 2}, 1}}));
}

TEST_CASE("series json") {
  TruncSeries s = poly({{ExpVec{1, 0, 0}, Rational(1, 3)}}, 6);
  CHECK(series_from_json(to_json(s)) == s);
  Json no_window = Json::parse(R"({"terms": [{"exp": [0, 0, 0], "coef": "2"}]})");
  CHECK(series_from_json(no_window, 11).window() == 11);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"terms": [{"exp": [0, 0]}]})")), Error);
}
