#include "casctree/cascade.hpp"

#include <algorithm>

namespace casctree {

CascadeTree::CascadeTree(NodeId root) : root_(root) {
  time_[root] = 0;
}

CascadeTree CascadeTree::from_parent_map(
    NodeId root, const std::unordered_map<NodeId, NodeId>& parent) {
  if (parent.count(root) > 0)
    throw StructureError("root has a parent");

  CascadeTree t;
  t.root_ = root;
  t.parent_ = parent;
  t.time_[root] = 0;

  // Resolve depths by walking parent chains with memoization; a chain that
  // revisits a node in progress is a cycle, one that leaves the map without
  // hitting the root is disconnected.
  for (const auto& [child, _] : parent) {
    if (t.time_.count(child)) continue;
    std::vector<NodeId> chain;
    NodeId cur = child;
    while (t.time_.count(cur) == 0) {
      chain.push_back(cur);
      auto it = parent.find(cur);
      if (it == parent.end())
        throw StructureError("node " + std::to_string(cur) + " does not reach the root");
      cur = it->second;
      if (chain.size() > parent.size())
        throw StructureError("cycle in parent map");
    }
    int base = t.time_.at(cur);
    for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit)
      t.time_[*rit] = ++base;
  }

  for (const auto& [v, time] : t.time_) {
    (void)v;
    t.depth_ = std::max(t.depth_, time);
  }
  return t;
}

std::optional<NodeId> CascadeTree::parent(NodeId v) const {
  auto it = parent_.find(v);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

int CascadeTree::time(NodeId v) const {
  auto it = time_.find(v);
  if (it == time_.end())
    throw StructureError("node " + std::to_string(v) + " is not in the tree");
  return it->second;
}

std::vector<NodeId> CascadeTree::nodes() const {
  std::vector<NodeId> result;
  result.reserve(node_count());
  result.push_back(root_);
  for (const auto& [child, _] : parent_) result.push_back(child);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::pair<NodeId, NodeId>> CascadeTree::edges() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  result.reserve(edge_count());
  for (const auto& [child, par] : parent_) result.emplace_back(par, child);
  std::sort(result.begin(), result.end());
  return result;
}

bool CascadeTree::operator==(const CascadeTree& other) const {
  return root_ == other.root_ && parent_ == other.parent_;
}

PartialObservation::PartialObservation(NodeId source,
                                       std::vector<std::pair<NodeId, int>> points,
                                       ObservationMode mode)
    : source_(source), mode_(mode), points_(std::move(points)) {
  bool source_seen = false;
  for (const auto& [v, t] : points_) {
    if (t < 0) throw InputError("negative observation time");
    if (v == source && t == 0) source_seen = true;
    if (v != source && t == 0)
      throw InputError("non-source node " + std::to_string(v) + " observed at time 0");
    if (v == source && t != 0)
      throw InputError("source observed at a non-zero time");
    auto [it, inserted] = index_.emplace(v, t);
    if (!inserted)
      throw InputError("duplicate observation point for node " + std::to_string(v));
    t_max_ = std::max(t_max_, t);
  }
  if (!source_seen) throw InputError("observation is missing the source at time 0");

  std::sort(points_.begin(), points_.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second < b.second : a.first < b.first;
            });
}

std::optional<int> PartialObservation::time_of(NodeId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PartialObservation PartialObservation::with_mode(ObservationMode mode) const {
  return PartialObservation(source_, points_, mode);
}

}  // namespace casctree
