#include "toroidal/blowup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

constexpr const char* kDomainOld[] = {"x", "y", "z"};
constexpr const char* kDomainNew[] = {"x1", "y1", "z1"};
constexpr const char* kTargetOld[] = {"u", "v", "w"};
constexpr const char* kTargetNew[] = {"u1", "v1", "w1"};

std::string short_center(CenterKind k) {
  switch (k) {
    case CenterKind::TwoCurve: return "2curve";
    case CenterKind::TwoPoint: return "2pt";
    case CenterKind::ThreePoint: return "3pt";
    case CenterKind::CurveThrough1Point: return "curve";
  }
  return "?";
}

/// Chart of the blow-up of {x_keep = x_other = 0} that keeps x_keep:
/// x_other = x_keep * (x_other' + c).
SubMatrix curve_sub(int keep, int other) {
  SubMatrix s = SubMatrix::identity();
  s(other, keep) = 1;
  return s;
}

/// Inverse of a unimodular 3x3 integer matrix.
std::array<std::array<std::int64_t, 3>, 3> unimodular_inverse(const SubMatrix& m) {
  std::int64_t d = m.det();
  if (d != 1 && d != -1) fail(ErrorCode::NonUnimodular, "chart matrix is not unimodular");
  std::array<std::array<std::int64_t, 3>, 3> inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      std::int64_t cof = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      inv[i][j] = cof * d;
    }
  return inv;
}

Payload multiply(const Payload& a, const Payload& b) {
  Payload r;
  r.exp = a.exp + b.exp;
  r.coef = a.coef * b.coef;
  if (a.series && b.series)
    r.series = *a.series * *b.series;
  else if (a.series)
    r.series = a.series;
  else if (b.series)
    r.series = b.series;
  return r;
}

Payload invert(const Payload& a) {
  Payload r;
  r.exp = -a.exp;
  r.coef = 1 / a.coef;
  if (a.series) {
    TruncSeries s = *a.series;
    if (s.is_exact() && s.terms().size() > 1) s = s.truncated(TruncSeries::kDefaultTrunc);
    r.series = s.inverse();
  }
  return r;
}

/// Moves monomial content out of the series until the exponent is nonnegative.
Payload make_regular(Payload p) {
  ExpVec shift(3);
  bool need = false;
  for (int i = 0; i < 3; ++i)
    if (p.exp[i] < 0) {
      shift[i] = -p.exp[i];
      need = true;
    }
  if (!need) return p;
  if (!p.series || p.series->known_zero() || !shift.divides(p.series->support_min()))
    fail(ErrorCode::MalformedGerm, "parameter is not regular in this chart");
  p.series = p.series->divided_by_monomial(shift);
  p.exp = p.exp + shift;
  return p;
}

}  // namespace

std::string_view side_name(Side s) noexcept { return s == Side::Domain ? "Domain" : "Target"; }

std::string_view center_kind_name(CenterKind k) noexcept {
  switch (k) {
    case CenterKind::TwoCurve: return "TwoCurve";
    case CenterKind::TwoPoint: return "TwoPoint";
    case CenterKind::ThreePoint: return "ThreePoint";
    case CenterKind::CurveThrough1Point: return "CurveThrough1Point";
  }
  return "?";
}

CenterKind parse_center_kind(std::string_view s) {
  if (s == "TwoCurve" || s == "2curve") return CenterKind::TwoCurve;
  if (s == "TwoPoint" || s == "2pt") return CenterKind::TwoPoint;
  if (s == "ThreePoint" || s == "3pt") return CenterKind::ThreePoint;
  if (s == "CurveThrough1Point" || s == "curve") return CenterKind::CurveThrough1Point;
  fail(ErrorCode::ParseError, "unknown center kind '" + std::string(s) + "'");
}

bool Chart::is_monomial() const {
  return std::all_of(translation.begin(), translation.end(), [](const Rational& c) { return c == 0; });
}

std::string Chart::substitution() const {
  const char* const* olds = side == Side::Domain ? kDomainOld : kTargetOld;
  const char* const* news = side == Side::Domain ? kDomainNew : kTargetNew;
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    if (i) os << ", ";
    os << olds[i] << "=";
    bool first = true;
    for (int j = 0; j < 3; ++j) {
      std::int64_t k = sub(i, j);
      if (k == 0) continue;
      if (!first) os << "*";
      first = false;
      if (translation[j] == 0)
        os << news[j];
      else
        os << "(" << news[j] << (translation[j] > 0 ? "+" : "") << format_rational(translation[j])
           << ")";
      if (k > 1) os << "^" << k;
    }
    if (first) os << "1";
  }
  return os.str();
}

std::vector<Chart> blowup_charts(Side side, CenterKind kind, const std::vector<int>& axes_in,
                                 const std::array<bool, 3>& boundary,
                                 const std::vector<Rational>& translations) {
  std::vector<int> axes = axes_in;
  std::sort(axes.begin(), axes.end());
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
  if (axes.size() < 2 || axes.front() < 0 || axes.back() > 2)
    fail(ErrorCode::InvalidCenterForm, "a center needs two or three distinct axes");

  std::vector<Rational> values{Rational(0)};
  for (const auto& c : translations)
    if (c != 0 && std::find(values.begin(), values.end(), c) == values.end()) values.push_back(c);

  const char* const* olds = side == Side::Domain ? kDomainOld : kTargetOld;
  std::vector<Chart> out;
  for (std::size_t ki = 0; ki < axes.size(); ++ki) {
    int k = axes[ki];
    std::vector<int> later(axes.begin() + static_cast<long>(ki) + 1, axes.end());
    std::vector<std::size_t> pick(later.size(), 0);
    while (true) {
      Chart ch;
      ch.side = side;
      ch.center_kind = kind;
      for (int j : axes)
        if (j != k) ch.sub(j, k) = 1;
      std::array<bool, 3> newb = boundary;
      newb[k] = true;
      std::string tr;
      for (std::size_t t = 0; t < later.size(); ++t) {
        const Rational& c = values[pick[t]];
        ch.translation[later[t]] = c;
        if (c != 0) {
          newb[later[t]] = false;
          tr += std::string(tr.empty() ? "" : ",") + olds[later[t]] +
                (c > 0 ? "+" : "") + format_rational(c);
        }
      }
      ch.label = short_center(kind) + ":" + olds[k] + (tr.empty() ? "" : "[" + tr + "]");

      if (side == Side::Domain) {
        std::array<int, 3> perm{};
        int next = 0;
        for (int pass = 0; pass < 2; ++pass)
          for (int j = 0; j < 3; ++j)
            if (newb[j] == (pass == 0)) perm[j] = next++;
        SubMatrix permuted;
        std::array<Rational, 3> tperm{};
        for (int j = 0; j < 3; ++j) {
          for (int i = 0; i < 3; ++i) permuted(i, perm[j]) = ch.sub(i, j);
          tperm[perm[j]] = ch.translation[j];
        }
        ch.sub = permuted;
        ch.translation = tperm;
        int nb = static_cast<int>(std::count(newb.begin(), newb.end(), true));
        ch.new_kind = static_cast<PointKind>(nb);
      }
      out.push_back(std::move(ch));

      std::size_t t = 0;
      while (t < pick.size() && ++pick[t] == values.size()) pick[t++] = 0;
      if (t == pick.size()) break;
    }
  }
  return out;
}

std::vector<int> domain_center_axes(CenterKind kind, PointKind domain) {
  switch (kind) {
    case CenterKind::TwoCurve:
      if (domain == PointKind::OnePoint)
        fail(ErrorCode::InvalidCenterForm, "a 2-curve does not pass through a 1-point");
      return {0, 1};
    case CenterKind::TwoPoint:
      if (domain != PointKind::TwoPoint)
        fail(ErrorCode::InvalidCenterForm, "a 2-point center needs a 2-point");
      return {0, 1, 2};
    case CenterKind::ThreePoint:
      if (domain != PointKind::ThreePoint)
        fail(ErrorCode::InvalidCenterForm, "a 3-point center needs a 3-point");
      return {0, 1, 2};
    case CenterKind::CurveThrough1Point:
      if (domain == PointKind::ThreePoint)
        fail(ErrorCode::InvalidCenterForm, "curve center x=z=0 needs a non-boundary z");
      return {0, 2};
  }
  fail(ErrorCode::InvalidCenterForm, "unknown center");
}

Payload substitute_payload(const Payload& p, const Chart& chart) {
  std::array<TruncSeries, 3> axis_images;
  for (int j = 0; j < 3; ++j)
    axis_images[j] = chart.translation[j] == 0
                         ? TruncSeries::monomial(ExpVec::unit(3, static_cast<std::size_t>(j)))
                         : TruncSeries::translated_axis(static_cast<std::size_t>(j), chart.translation[j]);
  ExpVec m = chart.sub.apply(p.exp);
  TruncSeries unit = TruncSeries::constant(1);
  bool has_unit = false;
  for (int j = 0; j < 3; ++j)
    if (chart.translation[j] != 0 && m[j] > 0) {
      unit = unit * axis_images[j].pow(static_cast<unsigned>(m[j]));
      m[j] = 0;
      has_unit = true;
    }
  Payload out;
  out.exp = m;
  out.coef = p.coef;
  if (!p.series && !has_unit) return out;
  TruncSeries s = TruncSeries::constant(1);
  if (p.series) {
    std::array<TruncSeries, 3> images;
    for (int i = 0; i < 3; ++i) {
      TruncSeries im = TruncSeries::constant(1);
      for (int j = 0; j < 3; ++j)
        if (chart.sub(i, j) > 0) im = im * axis_images[j].pow(static_cast<unsigned>(chart.sub(i, j)));
      images[i] = im;
    }
    s = p.series->substitute(images);
  }
  out.series = s * unit;
  return out;
}

Germ apply_domain_chart(const Germ& g, const Chart& chart) {
  if (chart.side != Side::Domain) fail(ErrorCode::InvalidArgument, "not a domain chart");
  Germ out;
  out.target_kind = g.target_kind;
  out.domain_kind = chart.new_kind.value_or(g.domain_kind);
  for (int i = 0; i < 3; ++i) out.payloads[i] = substitute_payload(g.payloads[i], chart);
  out.constants = g.constants;
  out.form_tag = classify(out);
  return out;
}

std::vector<std::pair<Chart, Germ>> domain_charts(CenterKind kind, const Germ& g,
                                                  const std::vector<Rational>& translations) {
  check_structure(g);
  std::array<bool, 3> boundary{};
  for (int i = 0; i < boundary_count(g.domain_kind); ++i) boundary[i] = true;
  std::vector<std::pair<Chart, Germ>> out;
  for (auto& ch : blowup_charts(Side::Domain, kind, domain_center_axes(kind, g.domain_kind),
                                boundary, translations))
    out.emplace_back(ch, apply_domain_chart(g, ch));
  return out;
}

std::vector<Chart> target_charts(TargetPoint point, int center_form) {
  auto make = [](int keep, int other, const char* center, int center_form_) {
    Chart ch;
    ch.side = Side::Target;
    ch.center_kind = center_form_ == 1 ? CenterKind::TwoPoint : CenterKind::TwoCurve;
    ch.sub = curve_sub(keep, other);
    ch.label = std::string(center) + ":" + kTargetOld[keep];
    return ch;
  };
  std::vector<Chart> out;
  switch (center_form) {
    case 1: {
      if (point == TargetPoint::ThreePoint)
        fail(ErrorCode::InvalidCenterForm,
             "only 2-curves are admissible centers for 3-point pre-relations");
      for (int keep : {0, 1}) {
        Chart ch;
        ch.side = Side::Target;
        ch.center_kind = CenterKind::TwoPoint;
        ch.sub = SubMatrix::identity();
        for (int j = 0; j < 3; ++j)
          if (j != keep) ch.sub(j, keep) = 1;
        ch.label = std::string("u=v=w=0:") + kTargetOld[keep];
        out.push_back(ch);
      }
      break;
    }
    case 2:
      out.push_back(make(0, 1, "u=v=0", 2));
      out.push_back(make(1, 0, "u=v=0", 2));
      break;
    case 3:
      out.push_back(make(0, 2, "u=w=0", 3));
      if (point == TargetPoint::ThreePoint) out.push_back(make(2, 0, "u=w=0", 3));
      out.push_back(make(1, 2, "v=w=0", 3));
      if (point == TargetPoint::ThreePoint) out.push_back(make(2, 1, "v=w=0", 3));
      break;
    default:
      fail(ErrorCode::InvalidCenterForm, "center form must be 1, 2 or 3");
  }
  return out;
}

Germ apply_target_chart(const Germ& g, const Chart& chart) {
  if (chart.side != Side::Target || !chart.is_monomial())
    fail(ErrorCode::InvalidArgument, "not a monomial target chart");
  check_structure(g);
  auto inv = unimodular_inverse(chart.sub);
  Germ out = g;
  for (int i = 0; i < 3; ++i) {
    Payload acc = Payload::monomial(ExpVec{0, 0, 0});
    for (int j = 0; j < 3; ++j) {
      std::int64_t k = inv[i][j];
      Payload base = k < 0 ? invert(g.payloads[j]) : g.payloads[j];
      for (std::int64_t t = 0; t < (k < 0 ? -k : k); ++t) acc = multiply(acc, base);
    }
    out.payloads[i] = make_regular(acc);
  }
  out.form_tag = classify(out);
  return out;
}

DescentState DescentState::at_one_point(std::int64_t a, std::int64_t b, std::int64_t d, Rational alpha) {
  DescentState s;
  s.point = PointKind::OnePoint;
  s.u = ExpVec{a, 0, 0};
  s.v = ExpVec{b, 0, 0};
  s.w = ExpVec{d, 0, 1};
  s.alpha = std::move(alpha);
  return s;
}

DescentState DescentState::at_two_point(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                  std::int64_t g, std::int64_t h) {
  DescentState s;
  s.point = PointKind::TwoPoint;
  s.u = ExpVec{a, b, 0};
  s.v = ExpVec{c, d, 0};
  s.w = ExpVec{g, h, 1};
  return s;
}

std::int64_t DescentState::invariant() const {
  std::int64_t gap0 = std::min(u[0], v[0]) - w[0];
  if (point == PointKind::OnePoint) return gap0;
  return gap0 + std::min(u[1], v[1]) - w[1];
}

std::vector<std::string> DescentState::violations() const {
  std::vector<std::string> out;
  if (point == PointKind::OnePoint) {
    if (u[1] || u[2] || v[1] || v[2] || w[1] || w[2] != 1) out.emplace_back("shape");
    if (alpha == 0) out.emplace_back("alpha nonzero");
    if (w[0] >= std::min(u[0], v[0])) out.emplace_back("d < min{a,b}");
  } else if (point == PointKind::TwoPoint) {
    if (u[2] || v[2] || w[2] != 1) out.emplace_back("shape");
    if (u[0] * v[1] - u[1] * v[0] == 0) out.emplace_back("determinant condition");
    if (!(u.divides(v) || v.divides(u))) out.emplace_back("(u,v) invertible");
    if (w[0] > std::min(u[0], v[0]) || w[1] > std::min(u[1], v[1]))
      out.emplace_back("(g,h) <= min{(a,b),(c,d)}");
    if (invariant() <= 0) out.emplace_back("A > 0");
  } else {
    out.emplace_back("descent states live at 1-points or 2-points");
  }
  if (!u.is_nonnegative() || !v.is_nonnegative() || !w.is_nonnegative())
    out.emplace_back("nonnegative exponents");
  return out;
}

std::string DescentState::to_string() const {
  std::ostringstream os;
  os << point_kind_name(point) << " u=" << u << " v=" << v << " w=" << w << " A=" << invariant();
  return os.str();
}

bool ideal_invertible(const std::vector<ExpVec>& gens) {
  for (const auto& g : gens)
    if (std::all_of(gens.begin(), gens.end(), [&](const ExpVec& h) { return g.divides(h); }))
      return true;
  return false;
}

std::vector<std::pair<Chart, DescentChild>> a_descent_step(const DescentState& s,
                                                           const Rational& beta) {
  auto bad = s.violations();
  if (!bad.empty()) fail(ErrorCode::MalformedGerm, "descent state violates " + bad.front());
  if (beta == 0) fail(ErrorCode::InvalidArgument, "the translated chart needs beta != 0");

  int k = (s.point == PointKind::OnePoint || s.w[0] < std::min(s.u[0], s.v[0])) ? 0 : 1;
  const char* axis = kDomainOld[k];

  auto chart = [&](SubMatrix sub, Rational c, std::string label) {
    Chart ch;
    ch.side = Side::Domain;
    ch.center_kind = CenterKind::CurveThrough1Point;
    ch.sub = sub;
    ch.translation[2] = std::move(c);
    ch.label = std::move(label);
    return ch;
  };
  std::string center = std::string(axis) + "=z=0";
  std::vector<Chart> charts = {
      chart(curve_sub(k, 2), 0, center + ":" + axis),
      chart(curve_sub(k, 2), beta, center + ":" + axis + "[z" + (beta > 0 ? "+" : "") +
                                        format_rational(beta) + "]"),
      chart(curve_sub(2, k), 0, center + ":z")};

  std::vector<std::pair<Chart, DescentChild>> out;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const Chart& ch = charts[i];
    auto image = [&](const ExpVec& e) {
      ExpVec m = ch.sub.apply(e);
      if (ch.translation[2] != 0) m[2] = 0;
      return m;
    };
    ExpVec u = image(s.u), v = image(s.v), w = image(s.w);
    if (ideal_invertible({u, v, w})) {
      out.emplace_back(ch, Resolved{u, v, w});
      continue;
    }
    if (i != 0)
      fail(ErrorCode::InvalidArgument, "point ideal stays non-invertible in chart " + ch.label);
    DescentState child = s;
    child.u = u;
    child.v = v;
    child.w = w;
    out.emplace_back(ch, child);
  }
  return out;
}

}  // namespace toroidal
