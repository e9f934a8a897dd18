#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "casctree/errors.hpp"

namespace casctree {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Directed social graph with an influence probability f(u,v) in (0,1] on
/// every edge. Nodes are dense ids 0..n-1 with optional string labels.
/// Immutable after construction; forward and reverse adjacency are kept in
/// sync and sorted by neighbor id.
class DiffusionGraph {
 public:
  struct Edge {
    NodeId src;
    NodeId dst;
    double prob;
  };
  /// Adjacency entry; `to` is the neighbor on the traversed side.
  struct Arc {
    NodeId to;
    double prob;
  };

  DiffusionGraph() = default;

  /// Validates and indexes the edge list. Rejects self-loops, duplicate
  /// (src,dst) pairs, out-of-range ids and probabilities outside (0,1].
  /// When `labels` is empty, nodes are labeled by their decimal id.
  DiffusionGraph(NodeId node_count, const std::vector<Edge>& edges,
                 std::vector<std::string> labels = {});

  NodeId node_count() const { return static_cast<NodeId>(out_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool contains(NodeId v) const { return v >= 0 && v < node_count(); }

  /// Out-neighbors of u, ascending by id.
  std::span<const Arc> out_arcs(NodeId u) const { return out_[u]; }
  /// In-neighbors of v, ascending by id (Arc::to is the edge source).
  std::span<const Arc> in_arcs(NodeId v) const { return in_[v]; }

  bool has_edge(NodeId u, NodeId v) const { return edge_prob(u, v).has_value(); }
  std::optional<double> edge_prob(NodeId u, NodeId v) const;

  /// f_min / f_max over all edges. The edge set must be non-empty.
  double min_prob() const;
  double max_prob() const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::optional<NodeId> find_label(std::string_view label) const;

  /// All edges, sorted by (src, dst).
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::size_t edge_count_ = 0;
  double min_prob_ = 0.0;
  double max_prob_ = 0.0;
};

}  // namespace casctree
