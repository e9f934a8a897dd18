#pragma once

#include <optional>
#include <vector>

#include "casctree/cascade.hpp"
#include "casctree/graph.hpp"

namespace casctree {

/// Hop distances from src. Returns a vector of size node_count with -1 for
/// nodes that are unreachable or beyond `bound` (when given). Throws
/// InputError for an unknown src.
std::vector<int> bfs_levels(const DiffusionGraph& g, NodeId src,
                            std::optional<int> bound = std::nullopt);

/// Sum of log f(u,v) over tree edges (natural log, always <= 0). The
/// minimized inference objective is its negation. Throws StructureError if a
/// tree edge is absent from the graph. Edges are accumulated in sorted order
/// so the value is reproducible bit-for-bit.
double tree_log_likelihood(const DiffusionGraph& g, const CascadeTree& t);

/// True iff every tree edge exists in the graph.
bool tree_uses_graph_edges(const DiffusionGraph& g, const CascadeTree& t);

/// True iff t is rooted at x.source, contains every observed node, and each
/// observed node's depth is at most its observed time.
bool check_bounded_consistent(const DiffusionGraph& g, const CascadeTree& t,
                              const PartialObservation& x);

/// As bounded, but each observed node's depth must equal its observed time.
bool check_perfect_consistent(const DiffusionGraph& g, const CascadeTree& t,
                              const PartialObservation& x);

/// Perfect-consistent and each observed time equals the graph distance from
/// the source, i.e. every observed node sits on a shortest path.
bool check_sp_consistent(const DiffusionGraph& g, const CascadeTree& t,
                         const PartialObservation& x);

}  // namespace casctree
