#pragma once

#include <optional>
#include <string>

#include "casctree/cascade.hpp"

namespace casctree {

enum class InferStatus {
  ok,          // a consistent tree was found
  infeasible,  // provably no tree in the family exists for this observation
  failed,      // the heuristic could not construct a tree (one may still exist)
};

/// Witness for a non-ok outcome. `node`/`observed_time` identify the
/// violating observation point when there is one.
struct InferFailure {
  NodeId node = kNoNode;
  int observed_time = -1;
  int distance = -1;  // relevant graph distance, -1 when unreachable
  std::string detail;
};

struct InferResult {
  InferStatus status = InferStatus::failed;
  std::optional<CascadeTree> tree;
  InferFailure why;

  bool ok() const { return status == InferStatus::ok; }

  static InferResult success(CascadeTree t) {
    InferResult r;
    r.status = InferStatus::ok;
    r.tree = std::move(t);
    return r;
  }
  static InferResult infeasible(InferFailure why) {
    InferResult r;
    r.status = InferStatus::infeasible;
    r.why = std::move(why);
    return r;
  }
  static InferResult failure(InferFailure why) {
    InferResult r;
    r.status = InferStatus::failed;
    r.why = std::move(why);
    return r;
  }
};

}  // namespace casctree
