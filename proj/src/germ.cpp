#include "toroidal/germ.hpp"

#include <algorithm>
#include <numeric>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

constexpr std::array<std::string_view, 16> kTagNames = {
    "TF1",       "TF21",      "TF22",      "TF3",       "TF01",      "TF02",
    "Prep2b",    "Prep2c",    "Toroidal1", "Toroidal2", "Toroidal3", "Toroidal4",
    "Toroidal5", "Toroidal6", "Eq16",      "Unclassified"};

using Terms = TruncSeries::Terms;

struct Violations {
  std::vector<std::string> list;
  bool need(bool ok, const char* name) {
    if (!ok) list.emplace_back(name);
    return ok;
  }
  bool ok() const { return list.empty(); }
};

std::optional<ExpVec> single_monomial(const TruncSeries& s) {
  if (s.terms().size() != 1) return std::nullopt;
  const auto& [e, c] = *s.terms().begin();
  if (c != 1) return std::nullopt;
  return e;
}

bool zero_from(const ExpVec& e, std::size_t first) {
  for (std::size_t i = first; i < e.size(); ++i)
    if (e[i] != 0) return false;
  return true;
}

bool is_axis(const std::optional<ExpVec>& e, std::size_t axis) {
  return e && *e == ExpVec::unit(3, axis);
}

/// s = x^base * (alpha + x_axis). Returns (base, alpha); alpha may be 0.
std::optional<std::pair<ExpVec, Rational>> shifted(const TruncSeries& s, std::size_t axis) {
  if (s.terms().empty() || s.terms().size() > 2) return std::nullopt;
  std::optional<ExpVec> base;
  for (const auto& [e, c] : s.terms())
    if (e[axis] >= 1 && c == 1) {
      ExpVec b = e;
      b[axis] -= 1;
      if (!base || b < *base) base = b;
    }
  if (!base) return std::nullopt;
  Rational alpha = s.coefficient(*base);
  std::size_t expected = alpha == 0 ? 1 : 2;
  if (s.terms().size() != expected) return std::nullopt;
  return std::make_pair(*base, alpha);
}

/// Exponent (p, q, 0) with p, q > 0 written as k * (a, b) with gcd(a, b) = 1.
struct PrimitivePower {
  std::int64_t a, b, k;
};

std::optional<PrimitivePower> primitive_power(const std::optional<ExpVec>& e) {
  if (!e || (*e)[2] != 0 || (*e)[0] <= 0 || (*e)[1] <= 0) return std::nullopt;
  std::int64_t k = std::gcd((*e)[0], (*e)[1]);
  return PrimitivePower{(*e)[0] / k, (*e)[1] / k, k};
}

/// Returns j if (e0, e1) = j * (a, b) with j >= 0.
std::optional<std::int64_t> multiple_of(const ExpVec& e, const PrimitivePower& p) {
  if (e[0] % p.a != 0) return std::nullopt;
  std::int64_t j = e[0] / p.a;
  if (e[1] != j * p.b) return std::nullopt;
  return j;
}

/// The componentwise minimum over the boundary coordinates (zero elsewhere)
/// is itself an element of `set`: the unit-times-monomial test.
bool boundary_min_in(const std::vector<ExpVec>& set, int boundary) {
  if (set.empty()) return false;
  ExpVec m(3);
  for (int i = 0; i < boundary; ++i) {
    std::int64_t v = set.front()[i];
    for (const auto& e : set) v = std::min(v, e[i]);
    m[i] = v;
  }
  return std::find(set.begin(), set.end(), m) != set.end();
}

std::int64_t det2(const ExpVec& p, const ExpVec& q) { return p[0] * q[1] - p[1] * q[0]; }

bool kinds(Violations& v, const Germ& g, std::initializer_list<PointKind> targets,
           PointKind domain) {
  bool ok = g.domain_kind == domain &&
            std::find(targets.begin(), targets.end(), g.target_kind) != targets.end();
  return v.need(ok, "point kinds");
}

// u = x^a, v = x^b (alpha + y), alpha != 0.
struct OnePointUV {
  std::int64_t a = 0, b = 0;
  Rational alpha;
};

std::optional<OnePointUV> one_point_uv(Violations& v, const std::array<TruncSeries, 3>& s) {
  auto u = single_monomial(s[0]);
  bool u_ok = v.need(u && zero_from(*u, 1), "u shape");
  auto sv = shifted(s[1], 1);
  bool v_ok = v.need(sv && zero_from(sv->first, 1), "v shape");
  if (!u_ok || !v_ok) return std::nullopt;
  v.need(sv->second != 0, "alpha nonzero");
  return OnePointUV{(*u)[0], sv->first[0], sv->second};
}

// u = x^a y^b, v = x^c y^d with ad - bc != 0.
std::optional<std::pair<ExpVec, ExpVec>> two_point_uv(Violations& v,
                                                      const std::array<TruncSeries, 3>& s) {
  auto u = single_monomial(s[0]);
  auto w = single_monomial(s[1]);
  bool ok = v.need(u && (*u)[2] == 0, "u shape");
  ok = v.need(w && (*w)[2] == 0, "v shape") && ok;
  if (!ok) return std::nullopt;
  v.need(det2(*u, *w) != 0, "determinant condition");
  return std::make_pair(*u, *w);
}

// u = (x^a y^b)^k, v = (x^a y^b)^t (alpha + z).
std::optional<PrimitivePower> power_uv(Violations& v, const std::array<TruncSeries, 3>& s,
                                       bool shifted_v) {
  auto p = primitive_power(single_monomial(s[0]));
  if (!v.need(p.has_value(), "u shape")) return std::nullopt;
  if (shifted_v) {
    auto sv = shifted(s[1], 2);
    bool ok = sv && sv->first[2] == 0;
    std::optional<std::int64_t> t;
    if (ok) t = multiple_of(sv->first, *p);
    if (!v.need(ok && t && *t > 0, "v shape")) return p;
    v.need(sv->second != 0, "alpha nonzero");
  }
  return p;
}

/// Terms of s split by whether their exponent lies in `keep` or not.
std::pair<std::vector<ExpVec>, std::vector<std::pair<ExpVec, Rational>>> partition(
    const TruncSeries& s, const std::function<bool(const ExpVec&)>& keep) {
  std::vector<ExpVec> kept;
  std::vector<std::pair<ExpVec, Rational>> rest;
  for (const auto& [e, c] : s.terms()) {
    if (keep(e))
      kept.push_back(e);
    else
      rest.emplace_back(e, c);
  }
  return {kept, rest};
}

/// w = g(...) + x^e y^f z where g has no z: returns the z-term base or nothing.
std::optional<ExpVec> linear_z_term(Violations& v, const TruncSeries& w, std::size_t boundary) {
  auto [g, zs] = partition(w, [](const ExpVec& e) { return e[2] == 0; });
  bool ok = zs.size() == 1 && zs[0].second == 1 && zs[0].first[2] == 1 &&
            zero_from(ExpVec{zs[0].first[0], zs[0].first[1], 0}, boundary);
  if (!v.need(ok, "w shape")) return std::nullopt;
  ExpVec base = zs[0].first;
  base[2] = 0;
  return base;
}

/// w = g(x^a y^b, z) + x^c y^d with rank(u, x^c y^d) = 2.
std::optional<ExpVec> power_remainder(Violations& v, const TruncSeries& w,
                                      const PrimitivePower& p, std::vector<ExpVec>* gamma) {
  auto [g, rest] =
      partition(w, [&](const ExpVec& e) { return multiple_of(e, p).has_value(); });
  if (gamma) *gamma = g;
  bool ok = rest.size() == 1 && rest[0].second == 1 && rest[0].first[2] == 0;
  if (!v.need(ok, "w shape")) return std::nullopt;
  ExpVec r = rest[0].first;
  v.need(p.a * r[1] - p.b * r[0] != 0, "rank condition");
  return r;
}

struct ThreePointSplit {
  ExpVec u, v;
  std::vector<std::pair<ExpVec, Rational>> rank3;
  std::vector<ExpVec> rank2;
};

std::optional<ThreePointSplit> three_point_split(Violations& v,
                                                 const std::array<TruncSeries, 3>& s) {
  auto u = single_monomial(s[0]);
  auto w = single_monomial(s[1]);
  bool ok = v.need(u.has_value(), "u monomial");
  ok = v.need(w.has_value(), "v monomial") && ok;
  if (!ok) return std::nullopt;
  if (!v.need(rank_of({*u, *w}) == 2, "rank condition")) return std::nullopt;
  ThreePointSplit out{*u, *w, {}, {}};
  for (const auto& [e, c] : s[2].terms()) {
    if (rank_of({*u, *w, e}) == 3)
      out.rank3.emplace_back(e, c);
    else
      out.rank2.push_back(e);
  }
  return out;
}

std::vector<std::string> check_toroidal(const Germ& g, FormTag tag,
                                        const std::array<TruncSeries, 3>& s) {
  Violations v;
  using PK = PointKind;
  switch (tag) {
    case FormTag::Toroidal1: {
      if (!kinds(v, g, {PK::ThreePoint}, PK::ThreePoint)) break;
      auto u = single_monomial(s[0]), w1 = single_monomial(s[1]), w2 = single_monomial(s[2]);
      bool ok = v.need(u.has_value(), "u monomial");
      ok = v.need(w1.has_value(), "v monomial") && ok;
      ok = v.need(w2.has_value(), "w monomial") && ok;
      if (ok) v.need(det3(*u, *w1, *w2) != 0, "determinant condition");
      break;
    }
    case FormTag::Toroidal2: {
      if (!kinds(v, g, {PK::ThreePoint}, PK::TwoPoint)) break;
      two_point_uv(v, s);
      auto w = shifted(s[2], 2);
      if (v.need(w && w->first[2] == 0, "w shape")) v.need(w->second != 0, "alpha nonzero");
      break;
    }
    case FormTag::Toroidal3: {
      if (!kinds(v, g, {PK::ThreePoint}, PK::OnePoint)) break;
      auto uv = one_point_uv(v, s);
      auto w = shifted(s[2], 2);
      if (v.need(w && zero_from(w->first, 1), "w shape")) {
        v.need(w->second != 0, "beta nonzero");
        if (uv) v.need(uv->a > 0 && uv->b > 0 && w->first[0] > 0, "positive exponents");
      }
      break;
    }
    case FormTag::Toroidal4: {
      if (!kinds(v, g, {PK::TwoPoint}, PK::TwoPoint)) break;
      two_point_uv(v, s);
      v.need(is_axis(single_monomial(s[2]), 2), "w shape");
      break;
    }
    case FormTag::Toroidal5: {
      if (!kinds(v, g, {PK::TwoPoint}, PK::OnePoint)) break;
      auto uv = one_point_uv(v, s);
      v.need(is_axis(single_monomial(s[2]), 2), "w shape");
      if (uv) v.need(uv->a > 0 && uv->b > 0, "positive exponents");
      break;
    }
    case FormTag::Toroidal6: {
      if (!kinds(v, g, {PK::OnePoint}, PK::OnePoint)) break;
      auto u = single_monomial(s[0]);
      if (v.need(u && zero_from(*u, 1), "u shape")) v.need((*u)[0] > 0, "positive exponents");
      v.need(is_axis(single_monomial(s[1]), 1), "v shape");
      v.need(is_axis(single_monomial(s[2]), 2), "w shape");
      break;
    }
    default:
      break;
  }
  return v.list;
}

std::vector<std::string> check_prepared(const Germ& g, FormTag tag,
                                        const std::array<TruncSeries, 3>& s) {
  Violations v;
  using PK = PointKind;
  if (tag == FormTag::Prep2b) {
    if (!kinds(v, g, {PK::TwoPoint}, PK::OnePoint)) return v.list;
    auto u = single_monomial(s[0]);
    v.need(u && zero_from(*u, 1) && (*u)[0] > 0, "u shape");
    v.need(is_axis(single_monomial(s[2]), 1), "w shape");
    // v = x^c (gamma(x, y) + x^d z)
    auto [gamma, zs] = partition(s[1], [](const ExpVec& e) { return e[2] == 0; });
    bool ok = zs.size() == 1 && zs[0].second == 1 && zs[0].first[2] == 1 &&
              zs[0].first[1] == 0;
    if (!v.need(ok, "v shape")) return v.list;
    if (v.need(boundary_min_in(gamma, 1), "gamma unit")) {
      std::int64_t c = gamma.front()[0];
      for (const auto& e : gamma) c = std::min(c, e[0]);
      v.need(zs[0].first[0] >= c, "v shape");
    }
    return v.list;
  }
  // Prep2c: u = (x^a y^b)^k, v = (x^a y^b)^l (gamma(x^a y^b, z) + x^c y^d), w = z.
  if (!kinds(v, g, {PK::TwoPoint}, PK::TwoPoint)) return v.list;
  auto p = power_uv(v, s, false);
  v.need(is_axis(single_monomial(s[2]), 2), "w shape");
  if (!p) return v.list;
  std::vector<ExpVec> gamma;
  Violations inner;
  auto r = power_remainder(inner, s[1], *p, &gamma);
  if (!r) {
    v.need(false, "v shape");
    return v.list;
  }
  if (!v.need(boundary_min_in(gamma, 2), "gamma unit")) return v.list;
  std::int64_t l = *multiple_of(gamma.front(), *p);
  for (const auto& e : gamma) l = std::min(l, *multiple_of(e, *p));
  ExpVec cd{(*r)[0] - l * p->a, (*r)[1] - l * p->b, 0};
  if (v.need(cd.is_nonnegative(), "v shape"))
    v.need(p->a * cd[1] - p->b * cd[0] != 0, "determinant condition");
  return v.list;
}

std::vector<std::string> check_tf(const Germ& g, FormTag tag,
                                  const std::array<TruncSeries, 3>& s) {
  Violations v;
  using PK = PointKind;
  switch (tag) {
    case FormTag::TF1:
      if (!kinds(v, g, {PK::TwoPoint, PK::ThreePoint}, PK::OnePoint)) break;
      one_point_uv(v, s);
      linear_z_term(v, s[2], 1);
      break;
    case FormTag::TF21:
      if (!kinds(v, g, {PK::TwoPoint, PK::ThreePoint}, PK::TwoPoint)) break;
      two_point_uv(v, s);
      linear_z_term(v, s[2], 2);
      break;
    case FormTag::TF22:
    case FormTag::TF02: {
      bool tf22 = tag == FormTag::TF22;
      if (tf22 && !kinds(v, g, {PK::TwoPoint, PK::ThreePoint}, PK::TwoPoint)) break;
      if (!tf22 && !kinds(v, g, {PK::OnePoint}, PK::TwoPoint)) break;
      auto p = power_uv(v, s, tf22);
      if (!tf22) v.need(is_axis(single_monomial(s[1]), 2), "v shape");
      if (p) power_remainder(v, s[2], *p, nullptr);
      break;
    }
    case FormTag::TF3: {
      if (!kinds(v, g, {PK::TwoPoint, PK::ThreePoint}, PK::ThreePoint)) break;
      auto split = three_point_split(v, s);
      if (split)
        v.need(split->rank3.size() == 1 && split->rank3[0].second == 1, "w has a unique N");
      break;
    }
    case FormTag::TF01:
      if (!kinds(v, g, {PK::OnePoint}, PK::OnePoint)) break;
      {
        auto u = single_monomial(s[0]);
        v.need(u && zero_from(*u, 1), "u shape");
        v.need(is_axis(single_monomial(s[1]), 1), "v shape");
        linear_z_term(v, s[2], 1);
      }
      break;
    default:
      break;
  }
  return v.list;
}

std::vector<std::string> check_eq16(const Germ& g, const std::array<TruncSeries, 3>& s) {
  Violations v;
  if (!kinds(v, g, {PointKind::TwoPoint, PointKind::ThreePoint}, PointKind::ThreePoint))
    return v.list;
  auto split = three_point_split(v, s);
  if (!split) return v.list;
  if (!v.need(split->rank3.size() == 1 && split->rank3[0].second == 1, "w has a unique N"))
    return v.list;
  const ExpVec& n = split->rank3[0].first;
  std::vector<ExpVec> ms = split->rank2;
  std::sort(ms.begin(), ms.end(), degree_lex_less);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (n.divides(ms[i])) {
      v.list.push_back("N divides M_" + std::to_string(i));
      break;
    }
  return v.list;
}

}  // namespace

std::string_view point_kind_name(PointKind k) noexcept {
  switch (k) {
    case PointKind::OnePoint: return "OnePoint";
    case PointKind::TwoPoint: return "TwoPoint";
    case PointKind::ThreePoint: return "ThreePoint";
  }
  return "?";
}

PointKind parse_point_kind(std::string_view s) {
  if (s == "OnePoint" || s == "1") return PointKind::OnePoint;
  if (s == "TwoPoint" || s == "2") return PointKind::TwoPoint;
  if (s == "ThreePoint" || s == "3") return PointKind::ThreePoint;
  fail(ErrorCode::ParseError, "unknown point kind '" + std::string(s) + "'");
}

std::string_view form_tag_name(FormTag t) noexcept {
  return kTagNames[static_cast<std::size_t>(t)];
}

FormTag parse_form_tag(std::string_view s) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (kTagNames[i] == s) return static_cast<FormTag>(i);
  fail(ErrorCode::ParseError, "unknown form tag '" + std::string(s) + "'");
}

const std::vector<FormTag>& classification_order() {
  static const std::vector<FormTag> order = {
      FormTag::Toroidal1, FormTag::Toroidal2, FormTag::Toroidal3, FormTag::Toroidal4,
      FormTag::Toroidal5, FormTag::Toroidal6, FormTag::Prep2b,    FormTag::Prep2c,
      FormTag::Eq16,      FormTag::TF1,       FormTag::TF21,      FormTag::TF22,
      FormTag::TF3,       FormTag::TF01,      FormTag::TF02};
  return order;
}

TruncSeries Payload::expanded() const {
  TruncSeries base = series ? *series : TruncSeries::constant(1);
  return base.times_monomial(exp).scaled(coef);
}

std::array<TruncSeries, 3> Germ::expanded() const {
  return {payloads[0].expanded(), payloads[1].expanded(), payloads[2].expanded()};
}

void check_structure(const Germ& g) {
  static const char* names[] = {"u", "v", "w"};
  for (int i = 0; i < 3; ++i) {
    const Payload& p = g.payloads[i];
    std::string who = names[i];
    if (p.exp.size() != 3)
      fail(ErrorCode::MalformedGerm, who + " exponent must have length 3");
    if (!p.exp.is_nonnegative())
      fail(ErrorCode::MalformedGerm, who + " exponent has a negative entry");
    if (p.coef == 0) fail(ErrorCode::MalformedGerm, who + " has zero coefficient");
    if (p.series && p.series->window() < 0)
      fail(ErrorCode::MalformedGerm, who + " series has a negative window");
    if (p.series && p.series->known_zero() && p.series->is_exact())
      fail(ErrorCode::MalformedGerm, who + " series is identically zero");
  }
}

std::vector<std::string> check_form(const Germ& g, FormTag tag) {
  check_structure(g);
  auto s = g.expanded();
  switch (tag) {
    case FormTag::Toroidal1:
    case FormTag::Toroidal2:
    case FormTag::Toroidal3:
    case FormTag::Toroidal4:
    case FormTag::Toroidal5:
    case FormTag::Toroidal6:
      return check_toroidal(g, tag, s);
    case FormTag::Prep2b:
    case FormTag::Prep2c:
      return check_prepared(g, tag, s);
    case FormTag::Eq16:
      return check_eq16(g, s);
    case FormTag::Unclassified:
      return {};
    default:
      return check_tf(g, tag, s);
  }
}

FormTag classify(const Germ& g) {
  for (FormTag t : classification_order())
    if (check_form(g, t).empty()) return t;
  return FormTag::Unclassified;
}

std::vector<std::string> validate(const Germ& g) {
  try {
    check_structure(g);
  } catch (const Error& e) {
    return {e.what()};
  }
  if (!g.form_tag || *g.form_tag == FormTag::Unclassified) return {};
  return check_form(g, *g.form_tag);
}

bool is_monomial_form(const Germ& g) {
  check_structure(g);
  if (g.domain_kind != PointKind::ThreePoint)
    fail(ErrorCode::MalformedGerm, "monomial form needs a 3-point domain");
  auto s = g.expanded();
  std::array<ExpVec, 3> e;
  for (int i = 0; i < 3; ++i) {
    if (!g.payloads[i].is_pure_monomial()) return false;
    auto m = single_monomial(s[i]);
    if (!m && s[i].terms().size() == 1) m = s[i].terms().begin()->first;
    if (!m) return false;
    e[i] = *m;
  }
  return det3(e[0], e[1], e[2]) != 0;
}

std::optional<int> super_parameter_form(const Germ& g) {
  check_structure(g);
  if (g.target_kind != PointKind::TwoPoint) return std::nullopt;
  auto s = g.expanded();
  const bool truncated = !s[2].is_exact();

  auto unit_or_zero = [&](const std::vector<ExpVec>& part, int boundary) {
    if (part.empty()) {
      if (truncated)
        fail(ErrorCode::TruncationInsufficient,
             "unit part of w is not visible within the truncation window");
      return true;
    }
    return boundary_min_in(part, boundary);
  };

  // Forms 1 and 2: w = M gamma + m_z (z + beta); beta absorbs the m_z
  // coefficient, or is zero and m_z belongs to the unit part.
  auto beta_test = [&](int boundary) -> bool {
    Violations v;
    auto mz = linear_z_term(v, s[2], static_cast<std::size_t>(boundary));
    if (!mz) return false;
    auto [rest, zs] = partition(s[2], [](const ExpVec& e) { return e[2] == 0; });
    std::vector<ExpVec> s0;
    bool has_mz = false;
    for (const auto& e : rest) {
      if (e == *mz)
        has_mz = true;
      else
        s0.push_back(e);
    }
    if (s0.empty()) {
      if (truncated && !has_mz)
        fail(ErrorCode::TruncationInsufficient,
             "unit part of w is not visible within the truncation window");
      return true;
    }
    if (boundary_min_in(s0, boundary)) return true;
    return has_mz && boundary_min_in(rest, boundary);
  };

  Violations v;
  switch (g.domain_kind) {
    case PointKind::OnePoint: {
      auto uv = one_point_uv(v, s);
      if (!uv || !v.ok()) return std::nullopt;
      return beta_test(1) ? std::optional<int>(1) : std::nullopt;
    }
    case PointKind::TwoPoint: {
      {
        Violations v2;
        auto uv = two_point_uv(v2, s);
        if (uv && v2.ok()) return beta_test(2) ? std::optional<int>(2) : std::nullopt;
      }
      auto p = power_uv(v, s, true);
      if (!p || !v.ok()) return std::nullopt;
      std::vector<ExpVec> gamma;
      auto r = power_remainder(v, s[2], *p, &gamma);
      if (!r || !v.ok()) return std::nullopt;
      return unit_or_zero(gamma, 2) ? std::optional<int>(3) : std::nullopt;
    }
    case PointKind::ThreePoint: {
      auto split = three_point_split(v, s);
      if (!split || split->rank3.size() != 1 || split->rank3[0].second != 1)
        return std::nullopt;
      return unit_or_zero(split->rank2, 3) ? std::optional<int>(4) : std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_super_parameters(const Germ& g) { return super_parameter_form(g).has_value(); }

std::optional<ExpVec> ThreePointGerm::m0() const {
  if (series_terms.empty()) return std::nullopt;
  ExpVec best = series_terms.front().second;
  for (const auto& [c, e] : series_terms)
    if (degree_lex_less(e, best)) best = e;
  return best;
}

void ThreePointGerm::sort_terms() {
  std::stable_sort(series_terms.begin(), series_terms.end(),
                   [](const auto& a, const auto& b) { return degree_lex_less(a.second, b.second); });
}

std::vector<std::string> ThreePointGerm::violations() const {
  std::vector<std::string> out;
  auto len_ok = [](const ExpVec& e) { return e.size() == 3; };
  if (!len_ok(u_exp) || !len_ok(v_exp) || !len_ok(n_exp)) {
    out.emplace_back("exponent length");
    return out;
  }
  for (const auto& [c, e] : series_terms)
    if (!len_ok(e)) {
      out.emplace_back("exponent length");
      return out;
    }
  if (target_kind == PointKind::OnePoint) out.emplace_back("target kind");
  bool nonneg = u_exp.is_nonnegative() && v_exp.is_nonnegative() && n_exp.is_nonnegative();
  for (const auto& [c, e] : series_terms) nonneg = nonneg && e.is_nonnegative();
  if (!nonneg) out.emplace_back("nonnegative exponents");
  if (rank_of({u_exp, v_exp}) != 2) out.emplace_back("rank(u,v) = 2");
  if (rank_of({u_exp, v_exp, n_exp}) != 3) out.emplace_back("rank(u,v,N) = 3");
  for (const auto& [c, e] : series_terms) {
    if (c == 0) {
      out.emplace_back("nonzero coefficients");
      break;
    }
  }
  for (const auto& [c, e] : series_terms)
    if (rank_of({u_exp, v_exp, e}) != 2) {
      out.emplace_back("rank(u,v,M_i) = 2");
      break;
    }
  for (const auto& [c, e] : series_terms)
    if (n_exp.divides(e)) {
      out.emplace_back("N divides M_i");
      break;
    }
  for (std::size_t i = 1; i < series_terms.size(); ++i)
    if (series_terms[i].second.total_degree() < series_terms[i - 1].second.total_degree()) {
      out.emplace_back("series order");
      break;
    }
  return out;
}

ThreePointGerm to_three_point(const Germ& g) {
  check_structure(g);
  if (g.domain_kind != PointKind::ThreePoint)
    fail(ErrorCode::MalformedGerm, "exponent data needs a 3-point domain");
  if (g.target_kind == PointKind::OnePoint)
    fail(ErrorCode::MalformedGerm, "exponent data needs a 2-point or 3-point target");
  auto s = g.expanded();
  ThreePointGerm t;
  t.target_kind = g.target_kind;
  for (int i = 0; i < 2; ++i) {
    if (s[i].terms().size() != 1)
      fail(ErrorCode::MalformedGerm, std::string(i == 0 ? "u" : "v") + " is not a monomial");
    (i == 0 ? t.u_exp : t.v_exp) = s[i].terms().begin()->first;
  }
  if (rank_of({t.u_exp, t.v_exp}) != 2)
    fail(ErrorCode::MalformedGerm, "rank(u,v) must be 2");
  std::optional<ExpVec> n;
  for (const auto& [e, c] : s[2].terms()) {
    if (rank_of({t.u_exp, t.v_exp, e}) == 3) {
      if (n) fail(ErrorCode::MalformedGerm, "w has more than one monomial N");
      n = e;
    } else {
      t.series_terms.emplace_back(c, e);
    }
  }
  if (!n) fail(ErrorCode::MalformedGerm, "w has no monomial N with rank(u,v,N) = 3");
  t.n_exp = *n;
  t.sort_terms();
  return t;
}

Germ from_three_point(const ThreePointGerm& t) {
  Germ g;
  g.target_kind = t.target_kind;
  g.domain_kind = PointKind::ThreePoint;
  g.payloads[0] = Payload::monomial(t.u_exp);
  g.payloads[1] = Payload::monomial(t.v_exp);
  if (t.series_terms.empty()) {
    g.payloads[2] = Payload::monomial(t.n_exp);
  } else {
    TruncSeries::Terms terms;
    for (const auto& [c, e] : t.series_terms) terms[e] += c;
    terms[t.n_exp] += 1;
    g.payloads[2] = Payload::with_series(ExpVec{0, 0, 0}, TruncSeries(terms, TruncSeries::kExact));
  }
  return g;
}

}  // namespace toroidal
