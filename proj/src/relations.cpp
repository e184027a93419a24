#include "toroidal/relations.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

constexpr const char* kVars[] = {"u", "v", "w"};

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

bool mixed_signs(const ExpVec& r) {
  bool pos = false, neg = false;
  for (auto x : r) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  return pos && neg;
}

void write_monomial(std::ostream& os, const ExpVec& e, bool& first) {
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << kVars[i];
    if (e[i] != 1) os << "^" << e[i];
  }
}

void require_valid(const std::vector<std::string>& v, const std::string& what) {
  if (v.empty()) return;
  std::string msg = what + ": ";
  for (std::size_t i = 0; i < v.size(); ++i) msg += (i ? "; " : "") + v[i];
  fail(ErrorCode::InvalidPreRelation, msg);
}

Chart role_chart(int keep, int other, const std::string& center) {
  Chart ch;
  ch.side = Side::Target;
  ch.center_kind = CenterKind::TwoCurve;
  ch.sub = SubMatrix::identity();
  ch.sub(other, keep) = 1;
  ch.label = center + ":" + kVars[keep];
  return ch;
}

std::string center_name(int i, int j) {
  if (i > j) std::swap(i, j);
  return std::string(kVars[i]) + "=" + kVars[j] + "=0";
}

}  // namespace

std::vector<std::string> TwoPointPreRel::violations() const {
  std::vector<std::string> out;
  if (a.has_value() != b.has_value()) out.push_back("a and b must both be finite or both -inf");
  if (is_degenerate()) {
    if (e != 1) out.push_back("degenerate relation needs e = 1");
    if (lambda != 1) out.push_back("degenerate relation needs lambda = 1");
    return out;
  }
  if (!b) return out;
  if (e <= 1) out.push_back("e > 1");
  if (lambda == 0) out.push_back("lambda nonzero");
  if (gcd3(*a, *b, e) != 1) out.push_back("gcd(a, b, e) = 1");
  return out;
}

std::string TwoPointPreRel::to_string() const {
  std::ostringstream os;
  if (is_degenerate()) {
    os << "(e=1, a=-inf, b=-inf)";
    return os.str();
  }
  os << "(e=" << e << ", a=" << *a << ", b=" << *b << ", lambda=" << format_rational(lambda)
     << ")";
  return os.str();
}

std::vector<std::string> ThreePointPreRel::violations() const {
  std::vector<std::string> out;
  if (lambda == 0) out.push_back("lambda nonzero");
  if (gcd3(a, b, c) != 1) out.push_back("gcd(a, b, c) = 1");
  if (!mixed_signs(exponents())) out.push_back("exponents of mixed sign");
  return out;
}

std::string ThreePointPreRel::to_string() const {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ", lambda=" << format_rational(lambda) << ")";
  return os.str();
}

std::string SurfaceForm::to_string() const {
  std::ostringstream os;
  os << "F = ";
  bool first = true;
  write_monomial(os, lead, first);
  if (first) os << "1";
  if (coef == 0) return os.str();
  os << " - ";
  bool rest_first = true;
  std::ostringstream r;
  write_monomial(r, rest, rest_first);
  bool coef_one = coef == 1;
  if (rest_first) {
    os << format_rational(coef);
  } else {
    if (!coef_one) {
      if (coef.get_den() != 1 || coef < 0)
        os << "(" << format_rational(coef) << ")*";
      else
        os << format_rational(coef) << "*";
    }
    os << r.str();
  }
  return os.str();
}

SurfaceForm f_form(const TwoPointPreRel& r) {
  require_valid(r.violations(), "invalid 2-point pre-relation");
  SurfaceForm f;
  if (r.is_degenerate()) {
    f.lead = ExpVec{0, 0, 1};
    f.coef = 0;
    return f;
  }
  std::int64_t a = *r.a, b = *r.b;
  f.coef = r.lambda;
  f.lead = ExpVec{a < 0 ? -a : 0, b < 0 ? -b : 0, r.e};
  f.rest = ExpVec{a > 0 ? a : 0, b > 0 ? b : 0, 0};
  f.is_unit = a <= 0 && b <= 0;
  return f;
}

SurfaceForm f_form(const ThreePointPreRel& r) {
  require_valid(r.violations(), "invalid 3-point pre-relation");
  NormalForm3 nf = normalize3_raw(r);
  SurfaceForm f;
  f.coef = nf.lambda;
  f.lead = ExpVec{0, 0, 0};
  f.rest = ExpVec{0, 0, 0};
  f.lead[static_cast<std::size_t>(nf.role_map[2])] = nf.cbar;
  f.rest[static_cast<std::size_t>(nf.role_map[0])] = nf.abar;
  f.rest[static_cast<std::size_t>(nf.role_map[1])] = nf.bbar;
  return f;
}

bool NormalForm3::side_condition() const {
  return (abar != 0 || cbar <= bbar) && (bbar != 0 || cbar <= abar);
}

std::string NormalForm3::roles() const {
  std::string s;
  for (int i : role_map) s += kVars[i];
  return s;
}

std::string NormalForm3::to_string() const {
  std::ostringstream os;
  os << "(" << abar << ", " << bbar << ", " << cbar << ") roles=" << roles()
     << " lambda=" << format_rational(lambda);
  return os.str();
}

NormalForm3 normalize3_raw(const ThreePointPreRel& r) {
  ExpVec e = r.exponents();
  if (!mixed_signs(e)) fail(ErrorCode::InvalidPreRelation, "exponents of mixed sign");
  std::vector<int> pos, rest;
  for (int i = 0; i < 3; ++i) (e[static_cast<std::size_t>(i)] > 0 ? pos : rest).push_back(i);
  NormalForm3 nf;
  if (pos.size() == 1) {
    int w = pos[0];
    nf.role_map = {rest[0], rest[1], w};
    nf.cbar = e[static_cast<std::size_t>(w)];
    nf.abar = -e[static_cast<std::size_t>(rest[0])];
    nf.bbar = -e[static_cast<std::size_t>(rest[1])];
    nf.lambda = r.lambda;
  } else {
    int w = rest[0];
    nf.role_map = {pos[0], pos[1], w};
    nf.cbar = -e[static_cast<std::size_t>(w)];
    nf.abar = e[static_cast<std::size_t>(pos[0])];
    nf.bbar = e[static_cast<std::size_t>(pos[1])];
    nf.lambda = 1 / r.lambda;
  }
  return nf;
}

NormalForm3 canonicalize(const NormalForm3& nf) {
  NormalForm3 out = nf;
  if (nf.abar == 0 && nf.cbar > nf.bbar) {
    out.role_map = {nf.role_map[0], nf.role_map[2], nf.role_map[1]};
    out.bbar = nf.cbar;
    out.cbar = nf.bbar;
    out.lambda = 1 / nf.lambda;
  } else if (nf.bbar == 0 && nf.cbar > nf.abar) {
    out.role_map = {nf.role_map[2], nf.role_map[1], nf.role_map[0]};
    out.abar = nf.cbar;
    out.cbar = nf.abar;
    out.lambda = 1 / nf.lambda;
  }
  return out;
}

NormalForm3 normalize3(const ThreePointPreRel& r) {
  require_valid(r.violations(), "invalid 3-point pre-relation");
  return canonicalize(normalize3_raw(r));
}

ThreePointPreRel relation_of(const NormalForm3& nf) {
  ExpVec e{0, 0, 0};
  e[static_cast<std::size_t>(nf.role_map[0])] = -nf.abar;
  e[static_cast<std::size_t>(nf.role_map[1])] = -nf.bbar;
  e[static_cast<std::size_t>(nf.role_map[2])] = nf.cbar;
  return {e[0], e[1], e[2], nf.lambda};
}

std::string_view leaf_kind_name(LeafKind k) noexcept {
  switch (k) {
    case LeafKind::Continue: return "open";
    case LeafKind::Resolved: return "Resolved";
    case LeafKind::Exited: return "Exited";
  }
  return "?";
}

ResolveStep resolve3_step(const NormalForm3& nf) {
  ResolveStep step;
  int iu = nf.role_map[0], iv = nf.role_map[1], iw = nf.role_map[2];
  int keep_side = iu;
  if (nf.abar + nf.bbar < nf.cbar) {
    step.case_tag = "a+b<c";
  } else if (nf.abar < nf.cbar && nf.bbar < nf.cbar) {
    step.case_tag = "a,b<c<=a+b";
  } else if (nf.abar >= nf.cbar) {
    step.case_tag = "a>=c";
  } else {
    step.case_tag = "b>=c";
    keep_side = iv;
  }
  step.center = center_name(keep_side, iw);
  ThreePointPreRel rel = relation_of(nf);
  const std::pair<int, int> charts[] = {{keep_side, iw}, {iw, keep_side}};
  for (std::size_t k = 0; k < 2; ++k) {
    StepChild child;
    child.chart = role_chart(charts[k].first, charts[k].second, step.center);
    ExpVec e = child.chart.sub.apply(rel.exponents());
    child.relation = {e[0], e[1], e[2], rel.lambda};
    if (mixed_signs(e)) {
      child.raw = normalize3_raw(child.relation);
      child.normal = canonicalize(*child.raw);
      child.kind = LeafKind::Continue;
    } else {
      child.kind = k == 0 ? LeafKind::Resolved : LeafKind::Exited;
    }
    step.children.push_back(std::move(child));
  }
  return step;
}

bool CertificateEntry::descends() const {
  if (outcome != LeafKind::Continue) return true;
  if (!cbar_after || !sum_after) return false;
  return *cbar_after < cbar_before || (*cbar_after == cbar_before && *sum_after < sum_before);
}

Json to_json(const ThreePointPreRel& r) {
  return Json{{"a", r.a}, {"b", r.b}, {"c", r.c}, {"lambda", format_rational(r.lambda)}};
}

Json to_json(const NormalForm3& nf) {
  return Json{{"abar", nf.abar},
              {"bbar", nf.bbar},
              {"cbar", nf.cbar},
              {"lambda", format_rational(nf.lambda)},
              {"roles", nf.roles()}};
}

ResolveResult resolve3(const ThreePointPreRel& r, int max_steps) {
  require_valid(r.violations(), "invalid 3-point pre-relation");
  ResolveResult res;
  res.input = r;
  NormalForm3 root = normalize3(r);
  auto node_data = [](const ThreePointPreRel& rel, const std::optional<NormalForm3>& nf) {
    Json j{{"relation", to_json(rel)}};
    if (nf) j["normal_form"] = to_json(*nf);
    return j;
  };
  res.tree.add_root("F: " + root.to_string(), node_data(r, root));
  struct Pending {
    int id;
    NormalForm3 nf;
    ThreePointPreRel rel;
  };
  std::deque<Pending> queue{{0, root, r}};
  while (!queue.empty()) {
    auto [id, nf, rel] = queue.front();
    queue.pop_front();
    if (res.steps >= max_steps)
      fail(ErrorCode::StepBudgetExceeded,
           "resolution did not finish within " + std::to_string(max_steps) + " steps");
    ++res.steps;
    ResolveStep step = resolve3_step(nf);
    res.tree.node(id).status = "expanded";
    int index = 0;
    for (auto& child : step.children) {
      CertificateEntry entry;
      entry.node = id;
      entry.child = index++;
      entry.case_tag = step.case_tag;
      entry.chart = child.chart.label;
      entry.cbar_before = nf.cbar;
      entry.sum_before = nf.abar + nf.bbar;
      entry.outcome = child.kind;
      ExpVec e = child.chart.sub.apply(rel.exponents());
      ThreePointPreRel literal{e[0], e[1], e[2], rel.lambda};
      std::string summary;
      if (child.normal) {
        entry.cbar_after = child.normal->cbar;
        entry.sum_after = child.normal->abar + child.normal->bbar;
        entry.raw_after = std::array<std::int64_t, 3>{child.raw->abar, child.raw->bbar,
                                                      child.raw->cbar};
        summary = "F: " + child.normal->to_string();
      } else {
        summary = "unit: " + literal.to_string();
      }
      int cid = res.tree.add_child(id, child.chart, std::string(leaf_kind_name(child.kind)),
                                   summary, node_data(literal, child.normal));
      res.certificate.push_back(entry);
      if (child.normal) queue.push_back({cid, *child.normal, literal});
    }
  }
  return res;
}

Json ResolveResult::to_json() const {
  Json cert = Json::array();
  for (const auto& c : certificate) {
    Json j{{"node", c.node},
           {"child", c.child},
           {"case", c.case_tag},
           {"chart", c.chart},
           {"before", {{"cbar", c.cbar_before}, {"a_plus_b", c.sum_before}}},
           {"outcome", std::string(leaf_kind_name(c.outcome))}};
    if (c.cbar_after)
      j["after"] = {{"cbar", *c.cbar_after}, {"a_plus_b", *c.sum_after}};
    if (c.raw_after) j["raw_after"] = *c.raw_after;
    j["descends"] = c.descends();
    cert.push_back(std::move(j));
  }
  std::size_t resolved = 0, exited = 0;
  for (int leaf : tree.leaves()) {
    const auto& st = tree.node(leaf).status;
    resolved += st == "Resolved";
    exited += st == "Exited";
  }
  return Json{{"input", toroidal::to_json(input)},
              {"normal_form", toroidal::to_json(normalize3(input))},
              {"steps", steps},
              {"depth", tree.depth()},
              {"leaves", {{"Resolved", resolved}, {"Exited", exited}}},
              {"tree", tree.to_json()},
              {"certificate", cert}};
}

std::variant<ThreePointPreRel, Dropped> transform_prerel(const ThreePointPreRel& r,
                                                         const Chart& chart) {
  require_valid(r.violations(), "invalid 3-point pre-relation");
  if (chart.side != Side::Target || !chart.is_monomial() ||
      chart.center_kind != CenterKind::TwoCurve)
    fail(ErrorCode::InvalidCenterForm, "3-point pre-relations transform only under 2-curve charts");
  ExpVec e = chart.sub.apply(r.exponents());
  if (!mixed_signs(e)) return Dropped{};
  return ThreePointPreRel{e[0], e[1], e[2], r.lambda};
}

std::variant<TwoPointPreRel, Dropped> transform_prerel(const TwoPointPreRel& r,
                                                       const Chart& chart) {
  require_valid(r.violations(), "invalid 2-point pre-relation");
  if (chart.side != Side::Target || !chart.is_monomial())
    fail(ErrorCode::InvalidCenterForm, "not a monomial target chart");
  if (chart.sub(0, 2) != 0 || chart.sub(1, 2) != 0 || chart.sub(2, 2) != 1) return Dropped{};
  if (r.is_degenerate()) return r;
  ExpVec e = chart.sub.apply(ExpVec{-*r.a, -*r.b, r.e});
  return TwoPointPreRel{e[2], -e[0], -e[1], r.lambda};
}

std::vector<std::pair<Chart, std::variant<TwoPointPreRel, Dropped>>> target_charts(
    const TwoPointPreRel& r, int center_form) {
  std::vector<std::pair<Chart, std::variant<TwoPointPreRel, Dropped>>> out;
  for (const auto& ch : target_charts(TargetPoint::TwoPoint, center_form))
    out.emplace_back(ch, transform_prerel(r, ch));
  return out;
}

std::vector<std::pair<Chart, std::variant<ThreePointPreRel, Dropped>>> target_charts(
    const ThreePointPreRel& r, int center_form) {
  std::vector<std::pair<Chart, std::variant<ThreePointPreRel, Dropped>>> out;
  for (const auto& ch : target_charts(TargetPoint::ThreePoint, center_form))
    out.emplace_back(ch, transform_prerel(r, ch));
  return out;
}

}  // namespace toroidal
