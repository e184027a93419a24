#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toroidal/blowup.hpp"
#include "toroidal/json_io.hpp"

namespace toroidal {

struct ChartNode {
  int id = 0;
  int parent = -1;
  int depth = 0;
  std::optional<Chart> chart;  // edge from the parent; empty at the root
  std::string status;          // "open", "Resolved", "Exited", "Dropped", ...
  std::string summary;
  Json data;
  std::vector<int> children;
};

/// Blow-up history. Every node records the chart leading to it, so any
/// node is reproducible from the root by replaying the charts on the path.
class ChartTree {
public:
  int add_root(std::string summary, Json data, std::string status = "open");
  int add_child(int parent, const Chart& chart, std::string status, std::string summary,
                Json data);

  const std::vector<ChartNode>& nodes() const noexcept { return nodes_; }
  const ChartNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  ChartNode& node(int id) { return nodes_.at(static_cast<std::size_t>(id)); }
  std::vector<int> leaves() const;
  std::vector<int> path_to(int id) const;
  int depth() const;

  /// Product of the monomial parts of the charts from the root to `id`.
  SubMatrix composite_sub(int id) const;

  Json to_json() const;
  std::string to_dot(const std::string& name = "charts") const;

private:
  std::vector<ChartNode> nodes_;
};

Json to_json(const Chart& c);

}  // namespace toroidal
