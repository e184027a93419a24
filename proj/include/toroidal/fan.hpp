#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "toroidal/json_io.hpp"
#include "toroidal/lattice.hpp"
#include "toroidal/series.hpp"

namespace toroidal {

using Ray = std::array<std::int64_t, 3>;
using Cone = std::array<int, 3>;
using Face = std::pair<int, int>;  // sorted ray indices of a 2-cone

/// Smooth simplicial fan in Z^3. Rays created by star subdivision remember
/// the rays they were summed from, so divisors can be pulled back.
class SmoothFan {
public:
  SmoothFan() = default;
  SmoothFan(std::vector<Ray> rays, std::vector<Cone> cones);

  static SmoothFan octant();

  const std::vector<Ray>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  const std::vector<std::vector<int>>& ray_parents() const noexcept { return parents_; }

  /// 2-cones with the indices of the max cones containing them.
  std::map<Face, std::vector<int>> faces() const;
  bool has_face(Face f) const;
  bool is_interior(Face f) const;

  std::int64_t cone_det(int cone) const;
  bool is_smooth() const;
  /// Every 2-cone lies in at most two max cones and no face of one cone
  /// meets the relative interior of another cone.
  bool is_simplicial_complex() const;
  std::vector<std::string> violations() const;

  /// Whether the point lies in the union of the cones.
  bool contains(const std::array<Rational, 3>& p) const;
  /// Coordinates of p in the basis of the cone's rays.
  std::array<Rational, 3> cone_coordinates(int cone, const std::array<Rational, 3>& p) const;

  int find_cone(const Cone& c) const;

private:
  friend SmoothFan star_subdivide_2cone(const SmoothFan&, Face);
  friend SmoothFan star_subdivide_3cone(const SmoothFan&, int);

  std::vector<Ray> rays_;
  std::vector<Cone> cones_;
  std::vector<std::vector<int>> parents_;
};

/// Inserts the ray v_i + v_j and splits every max cone containing the face.
/// Throws NotAFace when {i, j} is not a 2-cone of the fan.
SmoothFan star_subdivide_2cone(const SmoothFan& fan, Face face);
/// Inserts v_1 + v_2 + v_3 and splits the cone in three. Throws NotACone.
SmoothFan star_subdivide_3cone(const SmoothFan& fan, int cone);

/// Coefficients of a torus-invariant divisor, one per ray.
using Divisor = std::vector<std::int64_t>;

struct DivisorSet {
  std::vector<Divisor> divisors;

  std::size_t size() const noexcept { return divisors.size(); }
  std::vector<std::string> violations(const SmoothFan& fan) const;
};

/// Extends a divisor to rays added by subdivision: each new ray receives the
/// sum of the coefficients of its parents.
Divisor pullback(const Divisor& d, const SmoothFan& fan);
DivisorSet pullback(const DivisorSet& ds, const SmoothFan& fan);

/// Coefficients on the rays of a max cone, in the cone's ray order.
ExpVec chart_exponents(const Divisor& d, const SmoothFan& fan, int cone);

struct FanInput {
  SmoothFan fan;
  DivisorSet divisors;
};

Json to_json(const SmoothFan& fan);
Json to_json(const SmoothFan& fan, const DivisorSet& ds);
FanInput fan_from_json(const Json& j);

}  // namespace toroidal
