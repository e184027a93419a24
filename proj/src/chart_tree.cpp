#include "toroidal/chart_tree.hpp"

#include <algorithm>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

Json to_json(const Chart& c) {
  Json sub = Json::array();
  for (const auto& row : c.sub.rows()) sub.push_back(Json(row));
  Json tr = Json::array();
  for (const auto& t : c.translation) tr.push_back(format_rational(t));
  Json out{{"side", std::string(side_name(c.side))},
           {"center_kind", std::string(center_kind_name(c.center_kind))},
           {"label", c.label},
           {"substitution", c.substitution()},
           {"sub", sub},
           {"translation", tr}};
  if (c.new_kind) out["point_kind"] = std::string(point_kind_name(*c.new_kind));
  return out;
}

int ChartTree::add_root(std::string summary, Json data, std::string status) {
  if (!nodes_.empty()) fail(ErrorCode::InvalidArgument, "chart tree already has a root");
  ChartNode n;
  n.status = std::move(status);
  n.summary = std::move(summary);
  n.data = std::move(data);
  nodes_.push_back(std::move(n));
  return 0;
}

int ChartTree::add_child(int parent, const Chart& chart, std::string status, std::string summary,
                         Json data) {
  ChartNode n;
  n.id = static_cast<int>(nodes_.size());
  n.parent = parent;
  n.depth = node(parent).depth + 1;
  n.chart = chart;
  n.status = std::move(status);
  n.summary = std::move(summary);
  n.data = std::move(data);
  nodes_.push_back(std::move(n));
  node(parent).children.push_back(nodes_.back().id);
  return nodes_.back().id;
}

std::vector<int> ChartTree::leaves() const {
  std::vector<int> out;
  for (const auto& n : nodes_)
    if (n.children.empty()) out.push_back(n.id);
  return out;
}

std::vector<int> ChartTree::path_to(int id) const {
  std::vector<int> path;
  for (int cur = id; cur >= 0; cur = node(cur).parent) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

int ChartTree::depth() const {
  int d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.depth);
  return d;
}

SubMatrix ChartTree::composite_sub(int id) const {
  SubMatrix m = SubMatrix::identity();
  for (int step : path_to(id))
    if (node(step).chart) m = m.then(node(step).chart->sub);
  return m;
}

Json ChartTree::to_json() const {
  Json arr = Json::array();
  for (const auto& n : nodes_) {
    Json j{{"id", n.id}, {"parent", n.parent}, {"depth", n.depth}, {"status", n.status}};
    if (n.chart) j["chart"] = toroidal::to_json(*n.chart);
    j["summary"] = n.summary;
    j["data"] = n.data;
    j["children"] = n.children;
    arr.push_back(std::move(j));
  }
  return Json{{"nodes", arr}};
}

std::string ChartTree::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n  node [shape=box];\n";
  for (const auto& n : nodes_) {
    std::string label = "chart:" + (n.chart ? n.chart->label : std::string("root"));
    if (!n.summary.empty()) label += "\n" + n.summary;
    if (n.children.empty() && n.status != "open") label += "\n" + n.status;
    os << "  n" << n.id << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& n : nodes_)
    if (n.parent >= 0)
      os << "  n" << n.parent << " -> n" << n.id << " [label=\""
         << dot_escape(n.chart->substitution()) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace toroidal
