#include "toroidal/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

using Adj = std::array<std::array<std::int64_t, 3>, 3>;

std::int64_t det_rows(const Ray& a, const Ray& b, const Ray& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// inv such that p = sum_k coords_k * ray_k with coords = inv * p / det.
Adj coordinate_adjugate(const Ray& r0, const Ray& r1, const Ray& r2) {
  // Solve M^T coords = p where M has the rays as rows; inv = adj(M^T).
  const Ray* r[3] = {&r0, &r1, &r2};
  Adj inv{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      // cofactor of entry (i, k) of M^T, i.e. (k, i) of M, transposed.
      int a = (k + 1) % 3, b = (k + 2) % 3, c = (i + 1) % 3, d = (i + 2) % 3;
      inv[k][i] = (*r[a])[c] * (*r[b])[d] - (*r[a])[d] * (*r[b])[c];
    }
  return inv;
}

bool primitive(const Ray& r) {
  return std::gcd(std::gcd(r[0], r[1]), r[2]) == 1;
}

Face make_face(int a, int b) { return a < b ? Face{a, b} : Face{b, a}; }

}  // namespace

SmoothFan::SmoothFan(std::vector<Ray> rays, std::vector<Cone> cones)
    : rays_(std::move(rays)), cones_(std::move(cones)), parents_(rays_.size()) {
  for (const auto& c : cones_)
    for (int i : c)
      if (i < 0 || static_cast<std::size_t>(i) >= rays_.size())
        fail(ErrorCode::InvalidArgument, "cone refers to a missing ray");
}

SmoothFan SmoothFan::octant() {
  return SmoothFan({Ray{1, 0, 0}, Ray{0, 1, 0}, Ray{0, 0, 1}}, {Cone{0, 1, 2}});
}

std::map<Face, std::vector<int>> SmoothFan::faces() const {
  std::map<Face, std::vector<int>> out;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto& k = cones_[c];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) out[make_face(k[a], k[b])].push_back(static_cast<int>(c));
  }
  return out;
}

bool SmoothFan::has_face(Face f) const {
  f = make_face(f.first, f.second);
  for (const auto& k : cones_) {
    bool a = std::find(k.begin(), k.end(), f.first) != k.end();
    bool b = std::find(k.begin(), k.end(), f.second) != k.end();
    if (a && b && f.first != f.second) return true;
  }
  return false;
}

bool SmoothFan::is_interior(Face f) const {
  auto all = faces();
  auto it = all.find(make_face(f.first, f.second));
  return it != all.end() && it->second.size() == 2;
}

std::int64_t SmoothFan::cone_det(int cone) const {
  const auto& k = cones_.at(static_cast<std::size_t>(cone));
  return det_rows(rays_[static_cast<std::size_t>(k[0])], rays_[static_cast<std::size_t>(k[1])],
                  rays_[static_cast<std::size_t>(k[2])]);
}

bool SmoothFan::is_smooth() const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto d = cone_det(static_cast<int>(c));
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool SmoothFan::is_simplicial_complex() const {
  for (const auto& [face, incident] : faces())
    if (incident.size() > 2) return false;
  std::vector<Adj> adj;
  std::vector<std::int64_t> det;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto& k = cones_[c];
    adj.push_back(coordinate_adjugate(rays_[static_cast<std::size_t>(k[0])],
                                      rays_[static_cast<std::size_t>(k[1])],
                                      rays_[static_cast<std::size_t>(k[2])]));
    det.push_back(cone_det(static_cast<int>(c)));
    if (det.back() == 0) return false;
  }
  for (std::size_t a = 0; a < cones_.size(); ++a)
    for (std::size_t b = 0; b < cones_.size(); ++b) {
      if (a == b) continue;
      const auto& ka = cones_[a];
      const auto& kb = cones_[b];
      for (int mask = 1; mask < 8; ++mask) {
        Ray p{0, 0, 0};
        bool inside_b = true;
        for (int i = 0; i < 3; ++i) {
          if (!(mask & (1 << i))) continue;
          const auto& r = rays_[static_cast<std::size_t>(ka[i])];
          for (int t = 0; t < 3; ++t) p[t] += r[t];
          inside_b = inside_b && std::find(kb.begin(), kb.end(), ka[i]) != kb.end();
        }
        if (inside_b) continue;
        bool in = true;
        for (int k = 0; k < 3 && in; ++k) {
          std::int64_t s = adj[b][k][0] * p[0] + adj[b][k][1] * p[1] + adj[b][k][2] * p[2];
          in = (det[b] > 0 ? s : -s) >= 0;
        }
        if (in) return false;
      }
    }
  return true;
}

std::vector<std::string> SmoothFan::violations() const {
  std::vector<std::string> out;
  for (const auto& r : rays_)
    if (!primitive(r)) out.push_back("ray is not primitive");
  for (const auto& k : cones_)
    if (k[0] == k[1] || k[1] == k[2] || k[0] == k[2]) out.push_back("cone repeats a ray");
  if (!is_smooth()) out.push_back("cone with determinant other than +-1");
  if (!is_simplicial_complex()) out.push_back("cones do not meet in common faces");
  return out;
}

std::array<Rational, 3> SmoothFan::cone_coordinates(int cone,
                                                    const std::array<Rational, 3>& p) const {
  const auto& k = cones_.at(static_cast<std::size_t>(cone));
  Adj a = coordinate_adjugate(rays_[static_cast<std::size_t>(k[0])],
                              rays_[static_cast<std::size_t>(k[1])],
                              rays_[static_cast<std::size_t>(k[2])]);
  Rational d = Rational(static_cast<long>(cone_det(cone)));
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += Rational(static_cast<long>(a[i][j])) * p[j];
    out[i] = s / d;
  }
  return out;
}

bool SmoothFan::contains(const std::array<Rational, 3>& p) const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto co = cone_coordinates(static_cast<int>(c), p);
    if (co[0] >= 0 && co[1] >= 0 && co[2] >= 0) return true;
  }
  return false;
}

int SmoothFan::find_cone(const Cone& c) const {
  Cone s = c;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    Cone t = cones_[i];
    std::sort(t.begin(), t.end());
    if (s == t) return static_cast<int>(i);
  }
  return -1;
}

SmoothFan star_subdivide_2cone(const SmoothFan& fan, Face face) {
  face = make_face(face.first, face.second);
  if (face.first == face.second || !fan.has_face(face))
    fail(ErrorCode::NotAFace, "rays " + std::to_string(face.first) + ", " +
                                  std::to_string(face.second) + " do not span a 2-cone");
  SmoothFan out = fan;
  const auto& a = fan.rays_[static_cast<std::size_t>(face.first)];
  const auto& b = fan.rays_[static_cast<std::size_t>(face.second)];
  int n = static_cast<int>(out.rays_.size());
  out.rays_.push_back(Ray{a[0] + b[0], a[1] + b[1], a[2] + b[2]});
  out.parents_.push_back({face.first, face.second});
  std::vector<Cone> cones;
  for (const auto& k : fan.cones_) {
    bool has_a = std::find(k.begin(), k.end(), face.first) != k.end();
    bool has_b = std::find(k.begin(), k.end(), face.second) != k.end();
    if (!(has_a && has_b)) {
      cones.push_back(k);
      continue;
    }
    for (int drop : {face.second, face.first}) {
      Cone c = k;
      std::replace(c.begin(), c.end(), drop, n);
      cones.push_back(c);
    }
  }
  out.cones_ = std::move(cones);
  return out;
}

SmoothFan star_subdivide_3cone(const SmoothFan& fan, int cone) {
  if (cone < 0 || static_cast<std::size_t>(cone) >= fan.cones_.size())
    fail(ErrorCode::NotACone, "no max cone with index " + std::to_string(cone));
  SmoothFan out = fan;
  const Cone k = fan.cones_[static_cast<std::size_t>(cone)];
  Ray sum{0, 0, 0};
  for (int i : k)
    for (int t = 0; t < 3; ++t) sum[t] += fan.rays_[static_cast<std::size_t>(i)][t];
  int n = static_cast<int>(out.rays_.size());
  out.rays_.push_back(sum);
  out.parents_.push_back({k[0], k[1], k[2]});
  std::vector<Cone> cones;
  for (std::size_t c = 0; c < fan.cones_.size(); ++c) {
    if (static_cast<int>(c) != cone) {
      cones.push_back(fan.cones_[c]);
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      Cone part = k;
      part[static_cast<std::size_t>(i)] = n;
      cones.push_back(part);
    }
  }
  out.cones_ = std::move(cones);
  return out;
}

std::vector<std::string> DivisorSet::violations(const SmoothFan& fan) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].size() != fan.rays().size())
      out.push_back("divisor " + std::to_string(i) + " does not cover every ray");
    for (auto c : divisors[i])
      if (c < 0) {
        out.push_back("divisor " + std::to_string(i) + " has a negative coefficient");
        break;
      }
  }
  return out;
}

Divisor pullback(const Divisor& d, const SmoothFan& fan) {
  Divisor out = d;
  const auto& parents = fan.ray_parents();
  for (std::size_t r = out.size(); r < fan.rays().size(); ++r) {
    if (parents[r].empty())
      fail(ErrorCode::InvalidArgument, "divisor has no coefficient on ray " + std::to_string(r));
    std::int64_t s = 0;
    for (int p : parents[r]) s += out[static_cast<std::size_t>(p)];
    out.push_back(s);
  }
  return out;
}

DivisorSet pullback(const DivisorSet& ds, const SmoothFan& fan) {
  DivisorSet out;
  for (const auto& d : ds.divisors) out.divisors.push_back(pullback(d, fan));
  return out;
}

ExpVec chart_exponents(const Divisor& d, const SmoothFan& fan, int cone) {
  if (cone < 0 || static_cast<std::size_t>(cone) >= fan.cones().size())
    fail(ErrorCode::NotACone, "no max cone with index " + std::to_string(cone));
  const auto& k = fan.cones()[static_cast<std::size_t>(cone)];
  ExpVec out(3);
  for (int i = 0; i < 3; ++i) {
    auto r = static_cast<std::size_t>(k[static_cast<std::size_t>(i)]);
    if (r >= d.size()) fail(ErrorCode::InvalidArgument, "divisor does not cover the cone");
    out[static_cast<std::size_t>(i)] = d[r];
  }
  return out;
}

Json to_json(const SmoothFan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(r);
  Json cones = Json::array();
  for (const auto& c : fan.cones()) cones.push_back(c);
  return Json{{"rays", rays}, {"cones", cones}};
}

Json to_json(const SmoothFan& fan, const DivisorSet& ds) {
  Json j = to_json(fan);
  Json divs = Json::array();
  for (const auto& d : ds.divisors) divs.push_back(Json{{"coeffs", d}});
  j["divisors"] = divs;
  return j;
}

FanInput fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
    fail(ErrorCode::ParseError, "fan needs 'rays' and 'cones'");
  auto triple = [](const Json& t, const char* what) {
    if (!t.is_array() || t.size() != 3)
      fail(ErrorCode::ParseError, std::string(what) + " must have three entries");
    return std::array<std::int64_t, 3>{json_int(t[0], what), json_int(t[1], what),
                                       json_int(t[2], what)};
  };
  std::vector<Ray> rays;
  for (const auto& r : j.at("rays")) rays.push_back(triple(r, "ray"));
  std::vector<Cone> cones;
  for (const auto& c : j.at("cones")) {
    auto t = triple(c, "cone");
    cones.push_back(Cone{static_cast<int>(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2])});
  }
  FanInput in{SmoothFan(std::move(rays), std::move(cones)), {}};
  if (j.contains("divisors")) {
    for (const auto& d : j.at("divisors")) {
      const Json& coeffs = d.is_object() ? d.at("coeffs") : d;
      if (!coeffs.is_array()) fail(ErrorCode::ParseError, "divisor coefficients must be a list");
      Divisor div;
      for (const auto& c : coeffs) div.push_back(json_int(c, "divisor coefficient"));
      in.divisors.divisors.push_back(std::move(div));
    }
  }
  return in;
}

}  // namespace toroidal
