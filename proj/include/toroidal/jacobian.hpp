#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toroidal/germ.hpp"
#include "toroidal/json_io.hpp"

namespace toroidal {

/// Largest power of x_axis dividing the payload. A unit series contributes 0.
/// Throws TruncationInsufficient when the series has no known term.
std::int64_t ord_along(const Payload& p, std::size_t axis);

/// det(d(u, v, w) / d(x, y, z)) of the expanded payloads.
TruncSeries jacobian_det(const Germ& g);

struct LambdaComponent {
  std::size_t axis = 0;
  std::int64_t ord_boundary = 0;
  std::int64_t ord_jac = 0;
  std::int64_t lambda = 0;
};

/// One entry per boundary axis of the domain point. ord_boundary is the
/// order of uvw, uv or u according to the target point kind.
struct LambdaReport {
  std::vector<LambdaComponent> components;

  bool all_one() const;
  Json to_json() const;
};

LambdaReport lambda_of(const Germ& g);

/// Toroidal tag forced by (target kind, domain kind) when lambda = 1 on every
/// component; empty for (1-point target, 2-point domain).
std::optional<FormTag> forced_toroidal_tag(PointKind target, PointKind domain);

struct ClassifyVerdict {
  enum class Kind { Toroidal, Counterexample, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<FormTag> tag;
  std::optional<LambdaComponent> witness;  // a component with lambda != 1
  LambdaReport report;
  std::string reason;

  Json to_json() const;
};

std::string_view verdict_name(ClassifyVerdict::Kind k) noexcept;

/// Returns the forced toroidal tag when lambda = 1 everywhere and the germ
/// satisfies that form; otherwise a component with lambda != 1.
ClassifyVerdict classify_by_lambda(const Germ& g);

}  // namespace toroidal
