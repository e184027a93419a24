#include "toroidal/tau.hpp"

#include "toroidal/errors.hpp"

namespace toroidal {

TauValue TauValue::order(Int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "tau order must be positive");
  TauValue t;
  t.order_ = std::move(n);
  return t;
}

const Int& TauValue::value() const {
  if (!order_) fail(ErrorCode::InvalidArgument, "tau is minus infinity");
  return *order_;
}

std::string TauValue::to_string() const { return order_ ? order_->get_str() : "-inf"; }

TauDetails tau_details(const ThreePointGerm& g) {
  if (g.u_exp.size() != 3 || g.v_exp.size() != 3 || g.n_exp.size() != 3)
    fail(ErrorCode::MalformedGerm, "exponent vectors must have length 3");
  if (g.target_kind == PointKind::OnePoint)
    fail(ErrorCode::MalformedGerm, "tau needs a 2-point or 3-point target");
  if (rank_of({g.u_exp, g.v_exp}) != 2) fail(ErrorCode::MalformedGerm, "rank(u,v) must be 2");
  if (rank_of({g.u_exp, g.v_exp, g.n_exp}) != 3)
    fail(ErrorCode::MalformedGerm, "rank(u,v,N) must be 3");
  for (const auto& [c, e] : g.series_terms)
    if (e.size() != 3 || rank_of({g.u_exp, g.v_exp, e}) != 2)
      fail(ErrorCode::MalformedGerm, "series term " + e.to_string() + " has rank(u,v,M) != 2");

  TauDetails d;
  if (g.target_kind == PointKind::ThreePoint && g.series_terms.empty()) return d;

  d.h_gens = {g.u_exp, g.v_exp};
  for (const auto& [c, e] : g.series_terms) d.h_gens.push_back(e);
  d.a_gens = {g.u_exp, g.v_exp};
  if (g.target_kind == PointKind::ThreePoint) d.a_gens.push_back(*g.m0());

  LatticeQuotient q = lattice_quotient(d.h_gens, d.a_gens);
  if (q.index.is_infinite())
    fail(ErrorCode::MalformedGerm, "H/A is infinite; rank conditions are violated");
  d.tau = TauValue::order(*q.index.order);
  d.invariant_factors = q.invariant_factors;
  return d;
}

TauValue tau_of(const ThreePointGerm& g) { return tau_details(g).tau; }

ThreePointGerm apply_domain_sub(const ThreePointGerm& g, const SubMatrix& sub) {
  ThreePointGerm out = g;
  out.u_exp = sub.apply(g.u_exp);
  out.v_exp = sub.apply(g.v_exp);
  out.n_exp = sub.apply(g.n_exp);
  for (auto& [c, e] : out.series_terms) e = sub.apply(e);
  out.sort_terms();
  return out;
}

std::pair<TauValue, TauValue> tau_preserved_under(const ThreePointGerm& g, const SubMatrix& sub) {
  if (!sub.is_unimodular() || !sub.is_nonnegative())
    fail(ErrorCode::NonUnimodular, "substitution " + sub.to_string() +
                                       " is not a nonnegative unimodular chart");
  return {tau_of(g), tau_of(apply_domain_sub(g, sub))};
}

ThreePointGerm apply_target_chart(const ThreePointGerm& g, bool mirror) {
  ThreePointGerm out = g;
  if (mirror)
    out.u_exp = g.u_exp - g.v_exp;
  else
    out.v_exp = g.v_exp - g.u_exp;
  return out;
}

}  // namespace toroidal
