#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "toroidal/json_io.hpp"
#include "toroidal/lattice.hpp"

namespace toroidal {

struct SuiteConfig {
  std::uint64_t seed = 20240607;
  std::int64_t trunc = 8;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::int64_t cases = 0;
  std::vector<std::string> failures;  // first few failure descriptions
  Json metrics = Json::object();
  double seconds = 0;  // wall time, not part of the report

  Json to_json() const;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
  /// Deterministic report: provenance header and per-criterion results.
  Json to_json() const;
};

using CriterionFn = CriterionResult (*)(const SuiteConfig&);

struct CriterionInfo {
  std::string id;
  CriterionFn run;
};

/// The acceptance criteria in report order.
const std::vector<CriterionInfo>& criteria();

CriterionResult check_tau_invariance(const SuiteConfig& cfg);
CriterionResult check_tau_blowups(const SuiteConfig& cfg);
CriterionResult check_resolver_sweep(const SuiteConfig& cfg);
CriterionResult check_principalization(const SuiteConfig& cfg);
CriterionResult check_jacobian(const SuiteConfig& cfg);
CriterionResult check_lattice(const SuiteConfig& cfg);
CriterionResult check_descent(const SuiteConfig& cfg);
/// Runs every other criterion twice and compares the serialized reports.
CriterionResult check_determinism(const SuiteConfig& cfg);

/// Runs the criteria whose ids are listed (all when empty). The optional
/// callback sees each result as soon as it is available.
SuiteReport run_suite(const SuiteConfig& cfg, const std::vector<std::string>& only = {},
                      const std::function<void(const CriterionResult&)>& on_result = {});

Json provenance(std::uint64_t seed, std::int64_t trunc);

namespace oracle {

/// Invariant factors from gcds of k x k minors.
std::vector<Int> determinantal_invariant_factors(const IntMatrix& m);

/// |span(h) / span(a)| for vectors in Z^3 by breadth-first enumeration of cosets, reducing
/// vectors modulo a Hermite basis of span(a). Empty when the ranks differ
/// or the enumeration exceeds `cap` cosets.
std::optional<Int> coset_index(std::span<const ExpVec> h, std::span<const ExpVec> a,
                               std::size_t cap = 200000);

}  // namespace oracle

}  // namespace toroidal
