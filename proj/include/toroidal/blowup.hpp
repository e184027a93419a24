#pragma once

// Blow-up charts. A chart expresses each old coordinate as a monomial in
// translated new coordinates:
//   old_i = prod_j (new_j + c_j)^{sub(i, j)}
// with c_j = 0 for untranslated coordinates.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toroidal/germ.hpp"
#include "toroidal/lattice.hpp"
#include "toroidal/series.hpp"

namespace toroidal {

enum class Side { Domain, Target };
enum class CenterKind { TwoCurve, TwoPoint, ThreePoint, CurveThrough1Point };

std::string_view side_name(Side s) noexcept;
std::string_view center_kind_name(CenterKind k) noexcept;
CenterKind parse_center_kind(std::string_view s);

struct Chart {
  Side side = Side::Domain;
  CenterKind center_kind = CenterKind::TwoCurve;
  SubMatrix sub = SubMatrix::identity();
  std::array<Rational, 3> translation{};
  std::string label;
  /// Point kind of the chart origin (domain charts only).
  std::optional<PointKind> new_kind;

  bool is_monomial() const;
  /// Text such as "x=x1, y=x1*(y1+2), z=z1" using the side's variable names.
  std::string substitution() const;

  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Charts of the blow-up of the center `axes = 0` (a coordinate subspace).
/// Chart k keeps axis k and writes each other center axis j as
/// x_k * (x_j + c_j); nonzero c_j are taken from `translations` only for
/// j after k, so every exceptional point lies in exactly one chart.
/// `boundary` flags the old boundary coordinates; the result coordinates
/// are reordered with boundary coordinates first.
std::vector<Chart> blowup_charts(Side side, CenterKind kind, const std::vector<int>& axes,
                                 const std::array<bool, 3>& boundary,
                                 const std::vector<Rational>& translations);

/// Center axes for a domain center kind at a point of the given kind.
std::vector<int> domain_center_axes(CenterKind kind, PointKind domain);

Payload substitute_payload(const Payload& p, const Chart& chart);
Germ apply_domain_chart(const Germ& g, const Chart& chart);

/// All charts of the given center at the germ's point, with transformed,
/// reclassified germs. `translations` supplies the constants for
/// translated charts (empty: monomial charts only).
std::vector<std::pair<Chart, Germ>> domain_charts(CenterKind kind, const Germ& g,
                                                  const std::vector<Rational>& translations = {});

/// Which pre-relation or parameter family a target chart acts on.
enum class TargetPoint { TwoPoint, ThreePoint };

/// Target charts for a center in local form 1 (u=v=w=0), 2 (u=v=0) or
/// 3 (u=w=0 and v=w=0). Both u/v orientations are emitted.
/// Throws InvalidCenterForm for forms that are not admissible.
std::vector<Chart> target_charts(TargetPoint point, int center_form);

/// Transforms the germ's target parameters by a target chart.
Germ apply_target_chart(const Germ& g, const Chart& chart);

/// A(C) descent state: the point ideal (u, v, w) at a 1-point
/// (u = x^a, v = x^b (alpha + y), w = x^d z) or at a 2-point
/// (u = x^a y^b, v = x^c y^d, w = x^g y^h z), stored as monomial parts.
struct DescentState {
  PointKind point = PointKind::OnePoint;
  ExpVec u{0, 0, 0};
  ExpVec v{0, 0, 0};
  ExpVec w{0, 0, 0};
  Rational alpha = 1;

  static DescentState at_one_point(std::int64_t a, std::int64_t b, std::int64_t d, Rational alpha = 1);
  static DescentState at_two_point(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                             std::int64_t g, std::int64_t h);

  std::int64_t invariant() const;
  /// Conditions of the form that fail; empty for a valid state.
  std::vector<std::string> violations() const;
  std::string to_string() const;

  friend bool operator==(const DescentState&, const DescentState&) = default;
};

/// Monomial ideal generated by the given exponents is invertible iff one
/// generator divides all the others.
bool ideal_invertible(const std::vector<ExpVec>& gens);

struct Resolved {
  ExpVec u, v, w;
  friend bool operator==(const Resolved&, const Resolved&) = default;
};

using DescentChild = std::variant<DescentState, Resolved>;

/// Blows up the curve x = z = 0 (or y = z = 0) and returns the charts
/// z = x1 z1 (beta = 0), z = x1 (z1 + beta) and x = x1 z1.
std::vector<std::pair<Chart, DescentChild>> a_descent_step(const DescentState& s,
                                                           const Rational& beta);

}  // namespace toroidal
