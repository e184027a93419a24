#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toroidal/blowup.hpp"
#include "toroidal/chart_tree.hpp"

namespace toroidal {

/// w^e - lambda u^a v^b, or the degenerate relation F = w (a = b = -inf).
struct TwoPointPreRel {
  std::int64_t e = 2;
  std::optional<std::int64_t> a, b;  // empty means minus infinity
  Rational lambda = 1;

  static TwoPointPreRel degenerate() { return {1, std::nullopt, std::nullopt, Rational(1)}; }
  bool is_degenerate() const noexcept { return !a.has_value(); }
  std::vector<std::string> violations() const;
  std::string to_string() const;

  friend bool operator==(const TwoPointPreRel&, const TwoPointPreRel&) = default;
};

/// u^a v^b w^c = lambda.
struct ThreePointPreRel {
  std::int64_t a = 0, b = 0, c = 0;
  Rational lambda = 1;

  ExpVec exponents() const { return ExpVec{a, b, c}; }
  std::vector<std::string> violations() const;
  std::string to_string() const;

  friend bool operator==(const ThreePointPreRel&, const ThreePointPreRel&) = default;
};

/// F = lead - coef * rest in the target variables u, v, w. For the unit
/// case F = lead - coef with rest = 0; for the degenerate 2-point case F = w.
struct SurfaceForm {
  ExpVec lead{0, 0, 0};
  Rational coef;
  ExpVec rest{0, 0, 0};
  bool is_unit = false;

  std::string to_string() const;
  friend bool operator==(const SurfaceForm&, const SurfaceForm&) = default;
};

SurfaceForm f_form(const TwoPointPreRel& r);
SurfaceForm f_form(const ThreePointPreRel& r);

/// F = w^cbar - lambda u^abar v^bbar, where role_map[0], role_map[1],
/// role_map[2] are the actual coordinates playing u, v and w.
struct NormalForm3 {
  std::int64_t abar = 0, bbar = 0, cbar = 1;
  Rational lambda = 1;
  std::array<int, 3> role_map{0, 1, 2};

  bool side_condition() const;
  std::string roles() const;
  std::string to_string() const;

  friend bool operator==(const NormalForm3&, const NormalForm3&) = default;
};

/// The sign-case normal form before the side-condition swap.
NormalForm3 normalize3_raw(const ThreePointPreRel& r);
/// Swaps roles when the side condition fails.
NormalForm3 canonicalize(const NormalForm3& nf);
NormalForm3 normalize3(const ThreePointPreRel& r);

/// The relation x^L = lambda written by a normal form, in actual coordinates.
ThreePointPreRel relation_of(const NormalForm3& nf);

enum class LeafKind { Continue, Resolved, Exited };
std::string_view leaf_kind_name(LeafKind k) noexcept;

struct StepChild {
  Chart chart;
  LeafKind kind = LeafKind::Continue;
  ThreePointPreRel relation;          // transformed relation in new coordinates
  std::optional<NormalForm3> raw;     // sign-case form before the swap
  std::optional<NormalForm3> normal;  // canonical form when continuing
};

struct ResolveStep {
  std::string case_tag;
  std::string center;
  std::vector<StepChild> children;
};

ResolveStep resolve3_step(const NormalForm3& nf);

struct CertificateEntry {
  int node = 0;
  int child = 0;
  std::string case_tag;
  std::string chart;
  std::int64_t cbar_before = 0, sum_before = 0;
  std::optional<std::int64_t> cbar_after, sum_after;
  std::optional<std::array<std::int64_t, 3>> raw_after;
  LeafKind outcome = LeafKind::Continue;

  /// cbar drops, or cbar ties and abar + bbar drops, or the path ends.
  bool descends() const;
};

struct ResolveResult {
  ThreePointPreRel input;
  ChartTree tree;
  std::vector<CertificateEntry> certificate;
  int steps = 0;

  Json to_json() const;
};

/// Expands the resolution tree until every leaf is Resolved or Exited.
/// Throws StepBudgetExceeded after `max_steps` expansions.
ResolveResult resolve3(const ThreePointPreRel& r, int max_steps = 200);

struct Dropped {
  friend bool operator==(const Dropped&, const Dropped&) = default;
};

std::variant<ThreePointPreRel, Dropped> transform_prerel(const ThreePointPreRel& r,
                                                         const Chart& chart);
std::variant<TwoPointPreRel, Dropped> transform_prerel(const TwoPointPreRel& r,
                                                       const Chart& chart);

/// All target charts of a center form with the transformed pre-relation.
std::vector<std::pair<Chart, std::variant<TwoPointPreRel, Dropped>>> target_charts(
    const TwoPointPreRel& r, int center_form);
std::vector<std::pair<Chart, std::variant<ThreePointPreRel, Dropped>>> target_charts(
    const ThreePointPreRel& r, int center_form);

Json to_json(const ThreePointPreRel& r);
Json to_json(const NormalForm3& nf);

}  // namespace toroidal
