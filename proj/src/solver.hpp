#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pbes.hpp"

namespace influence {

struct SolverStats {
  std::uint64_t expansions = 0;
  std::uint64_t stable_true = 0;
  std::uint64_t stable_false = 0;
};

// Self-sufficient boolean subgraph justifying a verdict: for true, one
// shortest dep path from the root to a TRUE leaf (breadth-first
// tie-breaking); for false, the dependency-closed explored region.
struct Diagnostic {
  BesNodeKey root;
  bool verdict = false;
  std::vector<BesNodeKey> nodes;
  // `to == nullopt` encodes the edge into the TRUE leaf.
  std::vector<std::pair<BesNodeKey, std::optional<BesNodeKey>>> edges;

  std::string to_dot() const;
};

// Demand-driven resolution over the boolean graph induced by expand().
// Nodes are expanded at most once per store lifetime; verdicts and partial
// explorations persist across solve calls. A store is bound to one LTS and
// one analysis variant and is confined to a single owner at a time.
class SolverStore {
 public:
  SolverStore(const Lts& lts, IaVariant variant);

  const IaVariant& variant() const { return variant_; }

  BesNodeKey key(StateId state, std::string var) const {
    return {variant_.tag, state, std::move(var)};
  }

  // Least-fixed-point value of the projected variable. Forward depth-first
  // exploration (explicit stack) with backward propagation of stabilized
  // values; on exhaustion the remaining explored region is stable-false.
  bool solve(const BesNodeKey& k);
  bool solve(StateId state, std::string var) {
    return solve(key(state, std::move(var)));
  }

  // Requires k to be solved in this store.
  Diagnostic diagnostic(const BesNodeKey& k) const;

  SolverStats stats() const { return stats_; }
  void reset();

  // Debug rendering of the whole explored boolean graph.
  std::string to_dot() const;

 private:
  struct Node {
    bool expanded = false;
    bool true_leaf = false;
    bool value = false;
    bool stable = false;
    std::vector<BesNodeKey> deps;
    std::vector<BesNodeKey> parents;  // reverse dependencies
  };

  using NodeMap = std::unordered_map<BesNodeKey, Node, BesNodeKeyHash>;

  Node& expand_node(const BesNodeKey& k);
  void stabilize_true(const BesNodeKey& k);

  const Lts* lts_;
  IaVariant variant_;
  NodeMap nodes_;
  SolverStats stats_;
};

}  // namespace influence
