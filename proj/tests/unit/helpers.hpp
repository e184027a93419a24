#pragma once

#include <initializer_list>
#include <utility>

#include "toroidal/germ.hpp"

namespace toroidal::test {

inline Payload mono(std::int64_t a, std::int64_t b, std::int64_t c) {
  return Payload::monomial(ExpVec{a, b, c});
}

inline TruncSeries poly(std::initializer_list<std::pair<ExpVec, Rational>> terms,
                        std::int64_t window = TruncSeries::kExact) {
  TruncSeries::Terms t;
  for (const auto& [e, c] : terms) t[e] += c;
  return TruncSeries(t, window);
}

inline Germ germ(PointKind target, PointKind domain, Payload u, Payload v, Payload w) {
  Germ g;
  g.target_kind = target;
  g.domain_kind = domain;
  g.payloads = {std::move(u), std::move(v), std::move(w)};
  return g;
}

inline Germ identity_germ(PointKind kind = PointKind::OnePoint) {
  return germ(kind, kind, mono(1, 0, 0), mono(0, 1, 0), mono(0, 0, 1));
}

/// The 2-point-target exponent data with tau of order 2.
inline ThreePointGerm order_two_germ() {
  ThreePointGerm t;
  t.target_kind = PointKind::TwoPoint;
  t.u_exp = ExpVec{2, 0, 2};
  t.v_exp = ExpVec{0, 2, 2};
  t.series_terms = {{Rational(1), ExpVec{1, 1, 2}}};
  t.n_exp = ExpVec{3, 0, 1};
  return t;
}

}  // namespace toroidal::test
