#include "casctree/consistency.hpp"

#include <cmath>
#include <deque>

namespace casctree {

std::vector<int> bfs_levels(const DiffusionGraph& g, NodeId src,
                            std::optional<int> bound) {
  if (!g.contains(src))
    throw InputError("bfs_levels: unknown source node " + std::to_string(src));

  std::vector<int> level(g.node_count(), -1);
  level[src] = 0;
  std::deque<NodeId> queue{src};
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    if (bound && level[u] >= *bound) continue;
    for (const auto& arc : g.out_arcs(u)) {
      if (level[arc.to] < 0) {
        level[arc.to] = level[u] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level;
}

double tree_log_likelihood(const DiffusionGraph& g, const CascadeTree& t) {
  double sum = 0.0;
  for (const auto& [parent, child] : t.edges()) {
    auto prob = g.edge_prob(parent, child);
    if (!prob)
      throw StructureError("tree edge " + std::to_string(parent) + " -> " +
                           std::to_string(child) + " is not a graph edge");
    sum += std::log(*prob);
  }
  return sum;
}

bool tree_uses_graph_edges(const DiffusionGraph& g, const CascadeTree& t) {
  for (const auto& [parent, child] : t.edges())
    if (!g.has_edge(parent, child)) return false;
  return true;
}

bool check_bounded_consistent(const DiffusionGraph& /*g*/, const CascadeTree& t,
                              const PartialObservation& x) {
  if (t.root() != x.source()) return false;
  for (const auto& [v, time] : x.points()) {
    if (!t.contains(v)) return false;
    if (t.time(v) > time) return false;
  }
  return true;
}

bool check_perfect_consistent(const DiffusionGraph& /*g*/, const CascadeTree& t,
                              const PartialObservation& x) {
  if (t.root() != x.source()) return false;
  for (const auto& [v, time] : x.points()) {
    if (!t.contains(v)) return false;
    if (t.time(v) != time) return false;
  }
  return true;
}

bool check_sp_consistent(const DiffusionGraph& g, const CascadeTree& t,
                         const PartialObservation& x) {
  if (!check_perfect_consistent(g, t, x)) return false;
  std::vector<int> dist = bfs_levels(g, x.source());
  for (const auto& [v, time] : x.points())
    if (dist[v] != time) return false;
  return true;
}

}  // namespace casctree
