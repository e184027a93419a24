#pragma once

// Truncated power series in the three local coordinates x, y, z with
// rational coefficients.

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include <gmpxx.h>

#include "toroidal/lattice.hpp"

namespace toroidal {

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws ParseError.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// A series known exactly in total degree <= window(). Terms of higher degree
/// are unknown. Exact polynomials carry the `kExact` window.
class TruncSeries {
public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;
  static constexpr std::int64_t kDefaultTrunc = 8;

  using Terms = std::map<ExpVec, Rational>;

  TruncSeries() = default;
  explicit TruncSeries(std::int64_t window) : window_(window) {}
  TruncSeries(Terms terms, std::int64_t window);

  static TruncSeries constant(const Rational& c, std::int64_t window = kExact);
  static TruncSeries monomial(const ExpVec& e, const Rational& c = 1,
                              std::int64_t window = kExact);
  /// c + x_axis, exact.
  static TruncSeries translated_axis(std::size_t axis, const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  std::int64_t window() const noexcept { return window_; }
  bool is_exact() const noexcept { return window_ >= kExact; }
  bool known_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const ExpVec& e) const;
  Rational constant_term() const;
  /// Unit test at truncated level: nonzero constant term.
  bool is_unit() const;

  /// Minimum total degree over known terms; window()+1 when none are known.
  std::int64_t min_degree() const;
  /// Largest power of x_axis dividing every known term.
  /// Throws TruncationInsufficient when no term is known.
  std::int64_t ord_along(std::size_t axis) const;
  /// Componentwise minimum over the support. Requires a nonempty support.
  ExpVec support_min() const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries scaled(const Rational& c) const;
  TruncSeries times_monomial(const ExpVec& e) const;
  /// Divides every term by the monomial; terms must be divisible.
  TruncSeries divided_by_monomial(const ExpVec& e) const;
  TruncSeries derivative(std::size_t axis) const;
  TruncSeries pow(unsigned k) const;
  /// Multiplicative inverse of a unit series, valid to the same window.
  TruncSeries inverse() const;
  /// Drops known terms above a smaller window.
  TruncSeries truncated(std::int64_t window) const;

  /// Substitute each coordinate by a series: x_i -> images[i].
  TruncSeries substitute(const std::array<TruncSeries, 3>& images) const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  std::string to_string() const;

private:
  void normalize();

  Terms terms_;
  std::int64_t window_ = kExact;
};

std::int64_t saturating_add(std::int64_t a, std::int64_t b);

}  // namespace toroidal
