#include "toroidal/jacobian.hpp"

#include "toroidal/errors.hpp"

namespace toroidal {

std::int64_t ord_along(const Payload& p, std::size_t axis) {
  if (axis >= 3) fail(ErrorCode::InvalidArgument, "axis must be 0, 1 or 2");
  std::int64_t k = p.exp[axis];
  if (p.series && !p.series->is_unit()) k += p.series->ord_along(axis);
  return k;
}

TruncSeries jacobian_det(const Germ& g) {
  check_structure(g);
  auto f = g.expanded();
  std::array<std::array<TruncSeries, 3>, 3> d;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d[i][j] = f[i].derivative(j);
  auto minor = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return d[r0][c0] * d[r1][c1] - d[r0][c1] * d[r1][c0];
  };
  return d[0][0] * minor(1, 2, 1, 2) - d[0][1] * minor(1, 2, 0, 2) + d[0][2] * minor(1, 2, 0, 1);
}

bool LambdaReport::all_one() const {
  for (const auto& c : components)
    if (c.lambda != 1) return false;
  return true;
}

Json LambdaReport::to_json() const {
  Json arr = Json::array();
  for (const auto& c : components)
    arr.push_back(Json{{"axis", c.axis},
                       {"ord_boundary", c.ord_boundary},
                       {"ord_jac", c.ord_jac},
                       {"lambda", c.lambda}});
  return Json{{"components", arr}};
}

LambdaReport lambda_of(const Germ& g) {
  TruncSeries jac = jacobian_det(g);
  if (jac.known_zero())
    fail(ErrorCode::TruncationInsufficient,
         "Jacobian has no known term; raise the truncation degree");
  LambdaReport rep;
  int targets = boundary_count(g.target_kind);
  for (int axis = 0; axis < boundary_count(g.domain_kind); ++axis) {
    LambdaComponent c;
    c.axis = static_cast<std::size_t>(axis);
    for (int t = 0; t < targets; ++t) c.ord_boundary += ord_along(g.payloads[t], c.axis);
    c.ord_jac = jac.ord_along(c.axis);
    c.lambda = c.ord_boundary - c.ord_jac;
    rep.components.push_back(c);
  }
  return rep;
}

std::optional<FormTag> forced_toroidal_tag(PointKind target, PointKind domain) {
  int t = boundary_count(target), d = boundary_count(domain);
  if (t == 3 && d == 1) return FormTag::Toroidal3;
  if (t == 3 && d == 2) return FormTag::Toroidal2;
  if (t == 3 && d == 3) return FormTag::Toroidal1;
  if (t == 2 && d == 1) return FormTag::Toroidal5;
  if (t == 2 && d == 2) return FormTag::Toroidal4;
  if (t == 1 && d == 1) return FormTag::Toroidal6;
  return std::nullopt;
}

std::string_view verdict_name(ClassifyVerdict::Kind k) noexcept {
  switch (k) {
    case ClassifyVerdict::Kind::Toroidal: return "toroidal";
    case ClassifyVerdict::Kind::Counterexample: return "counterexample";
    case ClassifyVerdict::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

Json ClassifyVerdict::to_json() const {
  Json j = report.to_json();
  j["verdict"] = std::string(verdict_name(kind));
  if (tag) j["form"] = std::string(form_tag_name(*tag));
  if (witness)
    j["witness"] = Json{{"axis", witness->axis}, {"lambda", witness->lambda}};
  j["reason"] = reason;
  return j;
}

ClassifyVerdict classify_by_lambda(const Germ& g) {
  ClassifyVerdict v;
  v.report = lambda_of(g);
  for (const auto& c : v.report.components)
    if (c.lambda != 1) {
      v.kind = ClassifyVerdict::Kind::Counterexample;
      v.witness = c;
      v.reason = "lambda = " + std::to_string(c.lambda) + " on the component of axis " +
                 std::to_string(c.axis);
      return v;
    }
  auto forced = forced_toroidal_tag(g.target_kind, g.domain_kind);
  if (!forced) {
    v.reason = "no toroidal form for a 1-point target at a 2-point";
    return v;
  }
  auto fails = check_form(g, *forced);
  if (!fails.empty()) {
    v.reason = "lambda = 1 on every component but " + std::string(form_tag_name(*forced)) +
               " fails: " + fails.front();
    return v;
  }
  v.kind = ClassifyVerdict::Kind::Toroidal;
  v.tag = forced;
  v.reason = "lambda = 1 on every component";
  return v;
}

}  // namespace toroidal
