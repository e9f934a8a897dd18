#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "casctree/graph.hpp"

namespace casctree {

/// Rooted directed tree with a per-node activation time. Activation time
/// always equals tree depth: the constructor derives times from the parent
/// map, so the invariant holds for every instance. Immutable once built.
class CascadeTree {
 public:
  /// Single-node tree (the root activates at time 0).
  explicit CascadeTree(NodeId root);

  /// Builds a tree from child -> parent links. Throws StructureError if the
  /// map has a cycle, maps the root, or contains a chain that never reaches
  /// the root.
  static CascadeTree from_parent_map(NodeId root,
                                     const std::unordered_map<NodeId, NodeId>& parent);

  NodeId root() const { return root_; }
  bool contains(NodeId v) const { return v == root_ || parent_.count(v) > 0; }
  std::optional<NodeId> parent(NodeId v) const;
  /// Activation time (= depth) of a node in the tree. Throws StructureError
  /// if absent.
  int time(NodeId v) const;

  std::size_t node_count() const { return parent_.size() + 1; }
  std::size_t edge_count() const { return parent_.size(); }
  /// Maximum activation time over all nodes.
  int depth() const { return depth_; }

  /// Nodes sorted ascending by id.
  std::vector<NodeId> nodes() const;
  /// (parent, child) pairs sorted ascending.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  bool operator==(const CascadeTree& other) const;

 private:
  CascadeTree() = default;
  NodeId root_ = kNoNode;
  std::unordered_map<NodeId, NodeId> parent_;
  std::unordered_map<NodeId, int> time_;
  int depth_ = 0;
};

enum class ObservationMode {
  exact,  // node known newly active AT the stated time (perfect-tree semantics)
  by,     // node known newly active BY the stated time (bounded-tree semantics)
};

/// A set of (node, time) observation points including the source at time 0.
/// At most one point per node and no non-source point at time 0.
class PartialObservation {
 public:
  PartialObservation(NodeId source, std::vector<std::pair<NodeId, int>> points,
                     ObservationMode mode);

  NodeId source() const { return source_; }
  ObservationMode mode() const { return mode_; }
  /// Observation points sorted ascending by (time, node).
  std::span<const std::pair<NodeId, int>> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int t_max() const { return t_max_; }

  bool observed(NodeId v) const { return time_of(v).has_value(); }
  std::optional<int> time_of(NodeId v) const;

  /// Same points, different interpretation flag.
  PartialObservation with_mode(ObservationMode mode) const;

 private:
  NodeId source_;
  ObservationMode mode_;
  std::vector<std::pair<NodeId, int>> points_;
  std::unordered_map<NodeId, int> index_;
  int t_max_ = 0;
};

}  // namespace casctree
