#include "casctree/graph.hpp"

#include <algorithm>

namespace casctree {

DiffusionGraph::DiffusionGraph(NodeId node_count, const std::vector<Edge>& edges,
                               std::vector<std::string> labels) {
  if (node_count < 0) throw InputError("negative node count");
  if (!labels.empty() && static_cast<NodeId>(labels.size()) != node_count)
    throw InputError("label table size does not match node count");

  out_.resize(node_count);
  in_.resize(node_count);
  if (labels.empty()) {
    labels_.reserve(node_count);
    for (NodeId v = 0; v < node_count; ++v) labels_.push_back(std::to_string(v));
  } else {
    labels_ = std::move(labels);
  }
  for (NodeId v = 0; v < node_count; ++v) {
    auto [it, inserted] = label_index_.emplace(labels_[v], v);
    if (!inserted) throw InputError("duplicate node label '" + labels_[v] + "'");
  }

  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= node_count || e.dst < 0 || e.dst >= node_count)
      throw InputError("edge endpoint out of range");
    if (e.src == e.dst)
      throw InputError("self-loop on node " + labels_[e.src]);
    if (!(e.prob > 0.0) || e.prob > 1.0)
      throw InputError("edge probability outside (0,1] on edge " + labels_[e.src] +
                       " -> " + labels_[e.dst]);
    out_[e.src].push_back({e.dst, e.prob});
    in_[e.dst].push_back({e.src, e.prob});
  }

  auto by_id = [](const Arc& a, const Arc& b) { return a.to < b.to; };
  for (NodeId v = 0; v < node_count; ++v) {
    std::sort(out_[v].begin(), out_[v].end(), by_id);
    std::sort(in_[v].begin(), in_[v].end(), by_id);
    for (std::size_t i = 1; i < out_[v].size(); ++i)
      if (out_[v][i].to == out_[v][i - 1].to)
        throw InputError("duplicate edge " + labels_[v] + " -> " + labels_[out_[v][i].to]);
  }

  edge_count_ = edges.size();
  min_prob_ = 1.0;
  max_prob_ = 0.0;
  for (const Edge& e : edges) {
    min_prob_ = std::min(min_prob_, e.prob);
    max_prob_ = std::max(max_prob_, e.prob);
  }
}

std::optional<double> DiffusionGraph::edge_prob(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  const auto& arcs = out_[u];
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, NodeId id) { return a.to < id; });
  if (it == arcs.end() || it->to != v) return std::nullopt;
  return it->prob;
}

double DiffusionGraph::min_prob() const {
  if (edge_count_ == 0) throw ContractError("min_prob on a graph with no edges");
  return min_prob_;
}

double DiffusionGraph::max_prob() const {
  if (edge_count_ == 0) throw ContractError("max_prob on a graph with no edges");
  return max_prob_;
}

std::optional<NodeId> DiffusionGraph::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<DiffusionGraph::Edge> DiffusionGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u)
    for (const Arc& a : out_[u]) result.push_back({u, a.to, a.prob});
  return result;
}

}  // namespace casctree
