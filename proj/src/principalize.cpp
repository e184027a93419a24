#include "toroidal/principalize.hpp"

#include <algorithm>
#include <optional>

#include "toroidal/blowup.hpp"
#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

Json face_json(const Face& f) { return Json::array({f.first, f.second}); }

bool pair_principal_at(const SmoothFan& fan, const Divisor& d1, const Divisor& d2, int cone) {
  ExpVec a = chart_exponents(d1, fan, cone);
  ExpVec b = chart_exponents(d2, fan, cone);
  return a.divides(b) || b.divides(a);
}

std::int64_t default_budget(const OmegaValue& w) {
  return 10 * ((w.value ? w.value->first : 0) + 1);
}

void fail_budget(std::int64_t budget) {
  fail(ErrorCode::StepBudgetExceeded,
       "principalization did not finish within " + std::to_string(budget) + " rounds");
}

struct State {
  SmoothFan fan;
  DivisorSet divisors;
  std::vector<RoundRecord> history;
};

/// Runs omega descent on divisors i and j of the state.
void pair_stage(State& st, std::size_t i, std::size_t j, int stage, int budget) {
  OmegaValue first = omega_bar(st.fan, st.divisors.divisors[i], st.divisors.divisors[j]);
  std::int64_t cap = budget > 0 ? budget : default_budget(first);
  for (std::int64_t round = 0;; ++round) {
    const Divisor& d1 = st.divisors.divisors[i];
    const Divisor& d2 = st.divisors.divisors[j];
    OmegaValue bar = omega_bar(st.fan, d1, d2);
    if (bar.is_minus_infinity()) return;
    if (round >= cap) fail_budget(cap);
    RoundRecord rec;
    rec.round = static_cast<int>(st.history.size()) + 1;
    rec.stage = stage;
    rec.omega_bar = bar;
    for (const auto& [face, incident] : st.fan.faces()) {
      if (omega_at(st.fan, d1, d2, face) != bar) continue;
      rec.centers.push_back(face);
      for (int c : incident) rec.confined = rec.confined && !pair_principal_at(st.fan, d1, d2, c);
    }
    for (const auto& face : rec.centers) st.fan = star_subdivide_2cone(st.fan, face);
    st.divisors = pullback(st.divisors, st.fan);
    rec.smooth = st.fan.is_smooth();
    st.history.push_back(std::move(rec));
  }
}

PrincipalizeResult finish(State st) {
  PrincipalizeResult r;
  r.principal = is_locally_principal(st.fan, st.divisors);
  r.fan = std::move(st.fan);
  r.divisors = std::move(st.divisors);
  r.history = std::move(st.history);
  return r;
}

State initial_state(const SmoothFan& fan, const DivisorSet& ds) {
  auto fv = fan.violations();
  if (!fv.empty()) fail(ErrorCode::InvalidArgument, "fan is not smooth: " + fv.front());
  auto dv = ds.violations(fan);
  if (!dv.empty()) fail(ErrorCode::InvalidArgument, dv.front());
  return State{fan, ds, {}};
}

}  // namespace

std::string OmegaValue::to_string() const {
  if (!value) return "-inf";
  return "(" + std::to_string(value->first) + ", " + std::to_string(value->second) + ")";
}

Json OmegaValue::to_json() const {
  if (!value) return "-inf";
  return Json::array({value->first, value->second});
}

OmegaValue omega(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t x = a - c, y = b - d;
  if (x == 0 || y == 0 || (x > 0) == (y > 0)) return OmegaValue::minus_infinity();
  auto p = std::make_pair(abs64(x), abs64(y));
  auto q = std::make_pair(abs64(y), abs64(x));
  auto m = std::max(p, q);
  return OmegaValue::pair(m.first, m.second);
}

OmegaValue omega_at(const SmoothFan& fan, const Divisor& d1, const Divisor& d2, Face face) {
  if (!fan.has_face(face))
    fail(ErrorCode::NotAFace, "rays " + std::to_string(face.first) + ", " +
                                  std::to_string(face.second) + " do not span a 2-cone");
  auto i = static_cast<std::size_t>(face.first), j = static_cast<std::size_t>(face.second);
  return omega(d1.at(i), d1.at(j), d2.at(i), d2.at(j));
}

OmegaValue omega_bar(const SmoothFan& fan, const Divisor& d1, const Divisor& d2) {
  OmegaValue best = OmegaValue::minus_infinity();
  for (const auto& [face, incident] : fan.faces())
    best = std::max(best, omega_at(fan, d1, d2, face));
  return best;
}

bool is_locally_principal_at(const SmoothFan& fan, const DivisorSet& ds, int cone) {
  if (ds.divisors.empty()) return true;
  std::vector<ExpVec> exps;
  for (const auto& d : ds.divisors) exps.push_back(chart_exponents(d, fan, cone));
  return ideal_invertible(exps);
}

bool is_locally_principal(const SmoothFan& fan, const DivisorSet& ds) {
  for (std::size_t c = 0; c < fan.cones().size(); ++c)
    if (!is_locally_principal_at(fan, ds, static_cast<int>(c))) return false;
  return true;
}

PrincipalizeResult principalize_pair(const SmoothFan& fan, const Divisor& d1, const Divisor& d2,
                                     int budget) {
  State st = initial_state(fan, DivisorSet{{d1, d2}});
  pair_stage(st, 0, 1, 1, budget);
  return finish(std::move(st));
}

PrincipalizeResult principalize_many(const SmoothFan& fan, const DivisorSet& ds, int budget) {
  State st = initial_state(fan, ds);
  if (ds.size() < 2) return finish(std::move(st));
  // Slot n holds Dbar; the input divisors keep their positions.
  st.divisors.divisors.push_back(st.divisors.divisors[0]);
  std::size_t bar = ds.size();
  for (std::size_t i = 1; i < ds.size(); ++i) {
    pair_stage(st, bar, i, static_cast<int>(i), budget);
    Divisor& dbar = st.divisors.divisors[bar];
    const Divisor& di = st.divisors.divisors[i];
    for (std::size_t r = 0; r < dbar.size(); ++r) dbar[r] = std::min(dbar[r], di[r]);
  }
  st.divisors.divisors.pop_back();
  return finish(std::move(st));
}

PrincipalizeResult principalize_with_3points(const SmoothFan& fan, const DivisorSet& ds,
                                             int budget) {
  State st = initial_state(fan, ds);
  std::size_t n = ds.size();
  auto active_pair = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l)
        if (!omega_bar(st.fan, st.divisors.divisors[k], st.divisors.divisors[l])
                 .is_minus_infinity())
          return std::make_pair(k, l);
    return std::nullopt;
  };
  std::optional<std::pair<std::size_t, std::size_t>> current;
  std::int64_t cap = 0, used = 0;
  while (true) {
    auto pair = active_pair();
    RoundRecord rec;
    rec.round = static_cast<int>(st.history.size()) + 1;
    if (pair) {
      const Divisor& d1 = st.divisors.divisors[pair->first];
      const Divisor& d2 = st.divisors.divisors[pair->second];
      OmegaValue bar = omega_bar(st.fan, d1, d2);
      if (pair != current) {
        current = pair;
        cap = budget > 0 ? budget : default_budget(bar);
        used = 0;
      }
      rec.omega_bar = bar;
      for (const auto& [face, incident] : st.fan.faces()) {
        if (omega_at(st.fan, d1, d2, face) != bar) continue;
        rec.centers.push_back(face);
        for (int c : incident) rec.confined = rec.confined && !pair_principal_at(st.fan, d1, d2, c);
      }
    } else {
      for (std::size_t c = 0; c < st.fan.cones().size(); ++c)
        if (!is_locally_principal_at(st.fan, st.divisors, static_cast<int>(c)))
          rec.cone_centers.push_back(st.fan.cones()[c]);
      if (rec.cone_centers.empty()) break;
      if (current != std::make_pair(n, n)) {
        current = std::make_pair(n, n);
        cap = budget > 0 ? budget : 10;
        used = 0;
      }
    }
    if (used++ >= cap) fail_budget(cap);
    for (const auto& face : rec.centers) st.fan = star_subdivide_2cone(st.fan, face);
    for (const auto& cone : rec.cone_centers)
      st.fan = star_subdivide_3cone(st.fan, st.fan.find_cone(cone));
    st.divisors = pullback(st.divisors, st.fan);
    rec.smooth = st.fan.is_smooth();
    st.history.push_back(std::move(rec));
  }
  return finish(std::move(st));
}

Json PrincipalizeResult::history_json() const {
  Json out = Json::array();
  for (const auto& r : history) {
    Json centers = Json::array();
    for (const auto& f : r.centers) centers.push_back(face_json(f));
    Json j{{"round", r.round}, {"omega_bar", r.omega_bar.to_json()}, {"centers", centers}};
    if (!r.cone_centers.empty()) j["cone_centers"] = r.cone_centers;
    if (r.stage > 0) j["stage"] = r.stage;
    j["confined"] = r.confined;
    j["smooth"] = r.smooth;
    out.push_back(std::move(j));
  }
  return out;
}

Json PrincipalizeResult::to_json() const {
  return Json{{"rounds", history.size()},
              {"locally_principal", principal},
              {"history", history_json()},
              {"fan", toroidal::to_json(fan, divisors)}};
}

}  // namespace toroidal
