#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/fan.hpp"

namespace toroidal {

/// Minus infinity or a pair compared lexicographically.
struct OmegaValue {
  std::optional<std::pair<std::int64_t, std::int64_t>> value;

  static OmegaValue minus_infinity() { return {}; }
  static OmegaValue pair(std::int64_t a, std::int64_t b) { return {std::make_pair(a, b)}; }
  bool is_minus_infinity() const noexcept { return !value.has_value(); }
  std::string to_string() const;
  Json to_json() const;

  friend bool operator==(const OmegaValue&, const OmegaValue&) = default;
  friend std::strong_ordering operator<=>(const OmegaValue& x, const OmegaValue& y) {
    if (!x.value || !y.value) return x.value.has_value() <=> y.value.has_value();
    return *x.value <=> *y.value;
  }
};

/// Local exponents (a, b) and (c, d) of two divisors at a 2-curve.
OmegaValue omega(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
OmegaValue omega_at(const SmoothFan& fan, const Divisor& d1, const Divisor& d2, Face face);
OmegaValue omega_bar(const SmoothFan& fan, const Divisor& d1, const Divisor& d2);

bool is_locally_principal_at(const SmoothFan& fan, const DivisorSet& ds, int cone);
bool is_locally_principal(const SmoothFan& fan, const DivisorSet& ds);

struct RoundRecord {
  int round = 0;
  int stage = 0;  // pair index for principalize_many
  OmegaValue omega_bar;
  std::vector<Face> centers;         // 2-cone centers
  std::vector<Cone> cone_centers;    // 3-cone centers (mixed strategy)
  bool confined = true;              // every center lay in a non-principal cone
  bool smooth = true;                // fan smooth after the round
};

struct PrincipalizeResult {
  SmoothFan fan;
  DivisorSet divisors;
  std::vector<RoundRecord> history;
  bool principal = false;

  Json history_json() const;
  Json to_json() const;
};

/// Default round budget 10 * (first coordinate of the initial omega_bar + 1);
/// pass a positive `budget` to override.
PrincipalizeResult principalize_pair(const SmoothFan& fan, const Divisor& d1, const Divisor& d2,
                                     int budget = 0);
/// Pairwise reduction: principalizes (Dbar, D_i) and replaces Dbar by the
/// per-ray minimum of the pair.
PrincipalizeResult principalize_many(const SmoothFan& fan, const DivisorSet& ds, int budget = 0);
/// Runs omega descent on the first pair that is not yet comparable, moving to
/// the next pair when it is. Non-principal cones whose faces are all
/// comparable are star subdivided at their 3-point.
PrincipalizeResult principalize_with_3points(const SmoothFan& fan, const DivisorSet& ds,
                                             int budget = 0);

}  // namespace toroidal
