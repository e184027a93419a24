#pragma once

// Local map germs u, v, w in coordinates x, y, z and their normal-form
// classification. Boundary coordinates come first: a 1-point has boundary
// x = 0, a 2-point xy = 0 and a 3-point xyz = 0.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toroidal/lattice.hpp"
#include "toroidal/series.hpp"

namespace toroidal {

enum class PointKind { OnePoint = 1, TwoPoint = 2, ThreePoint = 3 };

std::string_view point_kind_name(PointKind k) noexcept;
PointKind parse_point_kind(std::string_view s);
inline int boundary_count(PointKind k) noexcept { return static_cast<int>(k); }

enum class FormTag {
  TF1,
  TF21,
  TF22,
  TF3,
  TF01,
  TF02,
  Prep2b,
  Prep2c,
  Toroidal1,
  Toroidal2,
  Toroidal3,
  Toroidal4,
  Toroidal5,
  Toroidal6,
  Eq16,
  Unclassified,
};

std::string_view form_tag_name(FormTag t) noexcept;
FormTag parse_form_tag(std::string_view s);
/// Tags in the order classify() tries them.
const std::vector<FormTag>& classification_order();

/// coef * x^exp * series, where a missing series means 1.
struct Payload {
  ExpVec exp{0, 0, 0};
  Rational coef = 1;
  std::optional<TruncSeries> series;

  static Payload monomial(ExpVec e, Rational c = 1) { return {std::move(e), std::move(c), {}}; }
  static Payload with_series(ExpVec e, TruncSeries s) {
    return {std::move(e), Rational(1), std::move(s)};
  }

  bool is_pure_monomial() const noexcept { return !series.has_value(); }
  /// The payload multiplied out as a single series.
  TruncSeries expanded() const;

  friend bool operator==(const Payload&, const Payload&) = default;
};

struct Germ {
  PointKind target_kind = PointKind::ThreePoint;
  PointKind domain_kind = PointKind::ThreePoint;
  std::optional<FormTag> form_tag;
  std::array<Payload, 3> payloads;
  std::map<std::string, Rational> constants;

  const Payload& u() const { return payloads[0]; }
  const Payload& v() const { return payloads[1]; }
  const Payload& w() const { return payloads[2]; }

  std::array<TruncSeries, 3> expanded() const;

  friend bool operator==(const Germ&, const Germ&) = default;
};

/// Throws MalformedGerm when a payload is structurally inconsistent.
void check_structure(const Germ& g);

FormTag classify(const Germ& g);
/// Named conditions of `tag` that fail on `g`; empty when the form holds.
std::vector<std::string> check_form(const Germ& g, FormTag tag);
/// Checks the germ against its declared tag (empty for untagged germs).
std::vector<std::string> validate(const Germ& g);

bool is_monomial_form(const Germ& g);
bool is_super_parameters(const Germ& g);
/// Which of the four super-parameter shapes the germ has, if any.
std::optional<int> super_parameter_form(const Germ& g);

struct ThreePointGerm {
  ExpVec u_exp{0, 0, 0};
  ExpVec v_exp{0, 0, 0};
  std::vector<std::pair<Rational, ExpVec>> series_terms;
  ExpVec n_exp{0, 0, 0};
  PointKind target_kind = PointKind::TwoPoint;

  /// The minimum-degree series term (ties broken lexicographically).
  std::optional<ExpVec> m0() const;
  std::vector<std::string> violations() const;
  void sort_terms();

  friend bool operator==(const ThreePointGerm&, const ThreePointGerm&) = default;
};

/// Reads off u, v monomials, the series terms M_i and the monomial N.
ThreePointGerm to_three_point(const Germ& g);
Germ from_three_point(const ThreePointGerm& t);

}  // namespace toroidal
