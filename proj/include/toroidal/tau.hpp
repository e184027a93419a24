#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toroidal/germ.hpp"
#include "toroidal/lattice.hpp"

namespace toroidal {

/// Either minus infinity or the order n >= 1 of a finite group.
class TauValue {
public:
  static TauValue minus_infinity() { return TauValue(); }
  static TauValue order(Int n);

  bool is_minus_infinity() const noexcept { return !order_.has_value(); }
  const Int& value() const;

  /// "-inf" or the decimal order.
  std::string to_string() const;

  friend bool operator==(const TauValue&, const TauValue&) = default;

private:
  TauValue() = default;
  std::optional<Int> order_;
};

struct TauDetails {
  TauValue tau = TauValue::minus_infinity();
  std::vector<ExpVec> h_gens;
  std::vector<ExpVec> a_gens;
  std::vector<Int> invariant_factors;
};

TauDetails tau_details(const ThreePointGerm& g);
TauValue tau_of(const ThreePointGerm& g);

/// Right-multiplies every exponent vector by `sub`.
ThreePointGerm apply_domain_sub(const ThreePointGerm& g, const SubMatrix& sub);

/// Tau before and after a nonnegative unimodular domain substitution.
std::pair<TauValue, TauValue> tau_preserved_under(const ThreePointGerm& g, const SubMatrix& sub);

/// The 2-point target chart u = u1, v = u1 v1 (or its mirror u = u1 v1,
/// v = v1 when `mirror`), expressed on exponents.
ThreePointGerm apply_target_chart(const ThreePointGerm& g, bool mirror);

}  // namespace toroidal
