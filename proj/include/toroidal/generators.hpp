#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "toroidal/fan.hpp"
#include "toroidal/germ.hpp"
#include "toroidal/lattice.hpp"

namespace toroidal {

/// Seeded generator with a platform-independent bounded draw.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }
  /// Nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
  Rational nonzero_rational();

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
  }

private:
  std::mt19937_64 engine_;
};

/// Derives the seed of an independent stream from a base seed and a stream index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// A germ in toroidal form 1-6 with random exponents and constants.
Germ random_toroidal(Rng& rng, int form, std::int64_t trunc = TruncSeries::kDefaultTrunc);

/// Non-toroidal shapes at a 2-point with two boundary components:
///   PerturbedW2: u = m^k, v = m^t (alpha + z), w = g(m, z) + x^c y^d, 2-point target
///   PerturbedW3: as PerturbedW2 with w multiplied by m^s, 3-point target
///   PerturbedW1: u = m^k, v = z, w = g(m, z) + x^c y^d, 1-point target
///   PerturbedV: u = m^k, v = m^l (gamma(m, z) + x^c y^d), w = z, 2-point target
/// with m = x^a y^b, gcd(a, b) = 1, ad - bc != 0 and g, gamma unit series.
enum class ExcludedShape { PerturbedW2, PerturbedW3, PerturbedW1, PerturbedV };

std::string_view excluded_shape_name(ExcludedShape s) noexcept;
const std::vector<ExcludedShape>& excluded_shapes();

struct ExcludedInstance {
  ExcludedShape shape = ExcludedShape::PerturbedW2;
  Germ germ;
  std::int64_t c = 0, d = 0;
};

ExcludedInstance random_excluded(Rng& rng, ExcludedShape shape,
                                 std::int64_t trunc = TruncSeries::kDefaultTrunc);

/// u = x^a, v = x^b (alpha + y), w = x^c (gamma(x, y) + x^d z) at a 1-point over
/// a 3-point; gamma is the constant `beta` unless `gamma_terms` are given.
Germ one_point_over_three_point(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
             const Rational& alpha, const Rational& beta,
             const std::vector<std::pair<ExpVec, Rational>>& gamma_terms = {},
             std::int64_t trunc = TruncSeries::kDefaultTrunc);

/// u = x^a, v = x^b (alpha + y), w = g(x, y) + x^c z at a 1-point over a 2-point.
Germ one_point_over_two_point(std::int64_t a, std::int64_t b, std::int64_t c, const Rational& alpha,
             const std::vector<std::pair<ExpVec, Rational>>& g_terms = {});

/// Exponent data with u, v exponents in [0, 9] and 0-4 series terms. For a
/// 3-point target the minimal term divides every other term and N.
ThreePointGerm random_three_point(Rng& rng, PointKind target);

/// Product of `length` random elementary blow-up charts and permutations:
/// a nonnegative unimodular substitution.
SubMatrix random_chart_chain(Rng& rng, int length);

/// Octant refined by `pre_subdivisions` random star subdivisions, with
/// `count` divisors whose coefficients on every ray are in [0, max_coef].
FanInput random_fan_instance(Rng& rng, int pre_subdivisions, int count, std::int64_t max_coef);

}  // namespace toroidal
