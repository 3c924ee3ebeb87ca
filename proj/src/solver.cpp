#include "solver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "errors.hpp"

namespace influence {

namespace {

std::string node_name(const BesNodeKey& k) {
  return "Y_" + std::to_string(k.state) + "_" + k.var;
}

}  // namespace

SolverStore::SolverStore(const Lts& lts, IaVariant variant)
    : lts_(&lts), variant_(std::move(variant)) {
  require_property_vars(variant_, lts_->var_universe());
}

SolverStore::Node& SolverStore::expand_node(const BesNodeKey& k) {
  {
    Node& node = nodes_[k];
    if (node.expanded) return node;
  }
  BesNode projected = expand(*lts_, variant_, k);
  // Register reverse edges first: these insertions may rehash the map, so no
  // node reference is held across them.
  for (const auto& dep : projected.deps) nodes_[dep].parents.push_back(k);

  Node& node = nodes_[k];
  node.expanded = true;
  node.true_leaf = projected.true_leaf;
  node.deps = std::move(projected.deps);
  ++stats_.expansions;

  if (node.true_leaf) {
    stabilize_true(k);
  } else if (node.deps.empty()) {
    node.value = false;
    node.stable = true;
    ++stats_.stable_false;
  }
  return nodes_[k];
}

void SolverStore::stabilize_true(const BesNodeKey& k) {
  // Back-propagation along reverse dependencies; every node is disjunctive,
  // so one true dep settles each parent. Only existing entries are touched.
  std::vector<BesNodeKey> worklist{k};
  while (!worklist.empty()) {
    BesNodeKey cur = std::move(worklist.back());
    worklist.pop_back();
    Node& node = nodes_.at(cur);
    if (node.stable) continue;
    node.value = true;
    node.stable = true;
    ++stats_.stable_true;
    for (const auto& parent : node.parents)
      if (!nodes_.at(parent).stable) worklist.push_back(parent);
  }
}

bool SolverStore::solve(const BesNodeKey& k) {
  if (k.tag != variant_.tag)
    throw ArgumentError("key was built for a different analysis variant");
  if (k.state >= lts_->state_count())
    throw ArgumentError("unknown state id " + std::to_string(k.state));
  if (!lts_->has_var(k.var))
    throw ArgumentError("variable '" + k.var +
                        "' does not occur in the model");

  {
    auto it = nodes_.find(k);
    if (it != nodes_.end() && it->second.stable) return it->second.value;
  }

  // Depth-first forward exploration of the unresolved region reachable from
  // k, resuming through nodes left unstable by earlier calls.
  std::vector<BesNodeKey> stack{k};
  std::unordered_set<BesNodeKey, BesNodeKeyHash> visited{k};

  while (!stack.empty()) {
    {
      auto it = nodes_.find(k);
      if (it != nodes_.end() && it->second.stable) break;
    }
    BesNodeKey cur = std::move(stack.back());
    stack.pop_back();
    Node& node = expand_node(cur);
    if (node.stable) continue;

    for (const auto& dep : node.deps) {
      auto it = nodes_.find(dep);
      if (it != nodes_.end() && it->second.stable) {
        if (it->second.value) {
          stabilize_true(cur);
          break;
        }
        continue;  // false deps contribute nothing to a disjunction
      }
      if (visited.insert(dep).second) stack.push_back(dep);
    }
  }

  Node& root = nodes_.at(k);
  if (!root.stable) {
    // The region reachable from k is completely explored and contains no
    // path to a TRUE leaf: by mu semantics everything still unstable in it
    // is false.
    for (const auto& key : visited) {
      Node& node = nodes_.at(key);
      if (!node.stable) {
        node.value = false;
        node.stable = true;
        ++stats_.stable_false;
      }
    }
  }
  return root.value;
}

Diagnostic SolverStore::diagnostic(const BesNodeKey& k) const {
  auto it = nodes_.find(k);
  if (it == nodes_.end() || !it->second.stable)
    throw ArgumentError("diagnostic requested for an unsolved variable " +
                        node_name(k));

  Diagnostic diag;
  diag.root = k;
  diag.verdict = it->second.value;

  if (diag.verdict) {
    // Shortest dep path to a TRUE leaf within the stable-true subgraph,
    // breadth-first tie-breaking over the canonical dep order.
    std::deque<BesNodeKey> queue{k};
    std::unordered_map<BesNodeKey, BesNodeKey, BesNodeKeyHash> parent_of;
    std::unordered_set<BesNodeKey, BesNodeKeyHash> seen{k};
    std::optional<BesNodeKey> leaf;
    while (!queue.empty()) {
      BesNodeKey cur = queue.front();
      queue.pop_front();
      const Node& node = nodes_.at(cur);
      if (node.true_leaf) {
        leaf = cur;
        break;
      }
      for (const auto& dep : node.deps) {
        auto dit = nodes_.find(dep);
        if (dit == nodes_.end() || !dit->second.stable || !dit->second.value)
          continue;
        if (seen.insert(dep).second) {
          parent_of.emplace(dep, cur);
          queue.push_back(dep);
        }
      }
    }
    if (!leaf)
      throw Error("no witness path found for a true verdict at " +
                  node_name(k));
    std::vector<BesNodeKey> path{*leaf};
    while (path.back() != k) path.push_back(parent_of.at(path.back()));
    std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      diag.edges.emplace_back(path[i], path[i + 1]);
    diag.edges.emplace_back(path.back(), std::nullopt);  // the TRUE leaf
    diag.nodes = std::move(path);
    return diag;
  }

  // False verdict: the dependency-closed explored region reachable from k.
  std::vector<BesNodeKey> order{k};
  std::unordered_set<BesNodeKey, BesNodeKeyHash> seen{k};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Node& node = nodes_.at(order[i]);
    for (const auto& dep : node.deps) {
      diag.edges.emplace_back(order[i], dep);
      if (seen.insert(dep).second) order.push_back(dep);
    }
  }
  std::sort(order.begin(), order.end());
  diag.nodes = std::move(order);
  std::sort(diag.edges.begin(), diag.edges.end());
  return diag;
}

void SolverStore::reset() {
  nodes_.clear();
  stats_ = SolverStats{};
}

std::string Diagnostic::to_dot() const {
  std::ostringstream out;
  out << "digraph diagnostic {\n";
  out << "  label=\"" << node_name(root) << " = "
      << (verdict ? "true" : "false") << "\";\n";
  for (const auto& node : nodes)
    out << "  " << node_name(node)
        << " [shape=ellipse, style=filled, fillcolor="
        << (verdict ? "white" : "black")
        << (verdict ? "" : ", fontcolor=white") << "];\n";
  bool leaf = false;
  for (const auto& [from, to] : edges) {
    if (to) {
      out << "  " << node_name(from) << " -> " << node_name(*to) << ";\n";
    } else {
      leaf = true;
      out << "  " << node_name(from) << " -> TRUE;\n";
    }
  }
  if (leaf) out << "  TRUE [shape=box];\n";
  out << "}\n";
  return out.str();
}

std::string SolverStore::to_dot() const {
  std::vector<const BesNodeKey*> keys;
  keys.reserve(nodes_.size());
  for (const auto& [key, node] : nodes_)
    if (node.expanded) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const BesNodeKey* a, const BesNodeKey* b) { return *a < *b; });

  std::ostringstream out;
  out << "digraph boolean_graph {\n";
  for (const BesNodeKey* key : keys) {
    const Node& node = nodes_.at(*key);
    const char* fill = !node.stable ? "gray" : (node.value ? "white" : "black");
    out << "  " << node_name(*key)
        << " [shape=ellipse, style=filled, fillcolor=" << fill
        << (node.stable && !node.value ? ", fontcolor=white" : "") << "];\n";
    if (node.true_leaf) out << "  " << node_name(*key) << " -> TRUE;\n";
    for (const auto& dep : node.deps)
      out << "  " << node_name(*key) << " -> " << node_name(dep) << ";\n";
  }
  out << "  TRUE [shape=box];\n";
  out << "}\n";
  return out.str();
}

}  // namespace influence
