#include "pbes.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace influence {

std::string_view to_string(IaTag tag) {
  switch (tag) {
    case IaTag::ia1:
      return "IA1";
    case IaTag::ia2:
      return "IA2";
    case IaTag::ia3:
      return "IA3";
    case IaTag::ia4:
      return "IA4";
  }
  return "IA?";
}

IaVariant IaVariant::ia4(std::vector<std::string> property_vars) {
  std::sort(property_vars.begin(), property_vars.end());
  property_vars.erase(
      std::unique(property_vars.begin(), property_vars.end()),
      property_vars.end());
  return {IaTag::ia4, std::move(property_vars)};
}

bool IaVariant::is_property_var(std::string_view v) const {
  return std::binary_search(property_vars.begin(), property_vars.end(), v);
}

void require_property_vars(const IaVariant& variant,
                           const std::vector<std::string>& universe) {
  if (variant.tag != IaTag::ia4 && !variant.property_vars.empty())
    throw ArgumentError("property variables are only meaningful for IA4");
  for (const auto& v : variant.property_vars)
    if (!std::binary_search(universe.begin(), universe.end(), v))
      throw ArgumentError("property variable '" + v +
                          "' does not occur in the model");
}

BesNode expand(const Lts& lts, const IaVariant& variant,
               const BesNodeKey& key) {
  if (key.tag != variant.tag)
    throw ArgumentError("key was built for a different analysis variant");
  if (key.state >= lts.state_count())
    throw ArgumentError("unknown state id " + std::to_string(key.state));
  if (!lts.has_var(key.var))
    throw ArgumentError("variable '" + key.var +
                        "' does not occur in the model");

  BesNode node;
  node.key = key;
  const std::string& v = key.var;

  std::set<BesNodeKey> deps;
  for (const auto& [label, to] : lts.successors(key.state)) {
    // <BOOL v> TRUE
    if (label.kind == ActionKind::boolean && label.var == v)
      node.true_leaf = true;
    // IA2/IA3: <ASSERT v> TRUE
    if (variant.matches_asserts() && label.kind == ActionKind::assertion &&
        label.var == v)
      node.true_leaf = true;
    // IA4: <ASSIGN w v> TRUE for property variables w
    if (variant.tag == IaTag::ia4 && label.kind == ActionKind::assign &&
        label.source == v && variant.is_property_var(label.var))
      node.true_leaf = true;
    // <ASSIGN z v> Y_to(z): v flows into z, so v matters here if z matters
    // at the target (self-assignments included).
    if (label.kind == ActionKind::assign && label.source == v)
      deps.insert({key.tag, to, label.var});
    // <not (ASSIGN v _)> Y_to(v): any step that does not overwrite v keeps
    // its neededness alive (tau, conditions, asserts, other assignments).
    if (!label.is_assign_to(v)) deps.insert({key.tag, to, v});
  }

  node.deps.assign(deps.begin(), deps.end());
  if (node.true_leaf) {
    node.value = true;
    node.stable = true;
  } else if (node.deps.empty()) {
    node.value = false;
    node.stable = true;
  }
  return node;
}

GlobalTable::GlobalTable(std::uint32_t state_count,
                         std::vector<std::string> universe)
    : state_count_(state_count),
      universe_(std::move(universe)),
      values_(static_cast<std::size_t>(state_count_) * universe_.size(),
              0) {}

bool GlobalTable::at(StateId s, std::string_view var) const {
  if (s >= state_count_)
    throw ArgumentError("unknown state id " + std::to_string(s));
  auto it = std::lower_bound(universe_.begin(), universe_.end(), var);
  if (it == universe_.end() || *it != var)
    throw ArgumentError("variable '" + std::string(var) +
                        "' does not occur in the model");
  return get(s, static_cast<std::size_t>(it - universe_.begin()));
}

GlobalTable global_solve(const Lts& lts, const IaVariant& variant) {
  const auto& universe = lts.var_universe();
  require_property_vars(variant, universe);
  GlobalTable table(lts.state_count(), universe);
  const std::size_t n_vars = universe.size();
  if (n_vars == 0) return table;

  // Cache the projected right-hand sides once; the Kleene rounds then only
  // re-evaluate disjunctions. Dep keys are stored as dense indices.
  struct Rhs {
    bool true_leaf = false;
    std::vector<std::size_t> deps;
  };
  auto var_index = [&](const std::string& v) {
    return static_cast<std::size_t>(
        std::lower_bound(universe.begin(), universe.end(), v) -
        universe.begin());
  };
  std::vector<Rhs> rhs(static_cast<std::size_t>(lts.state_count()) * n_vars);
  for (StateId s = 0; s < lts.state_count(); ++s) {
    for (std::size_t vi = 0; vi < n_vars; ++vi) {
      BesNode node = expand(lts, variant, {variant.tag, s, universe[vi]});
      Rhs& r = rhs[s * n_vars + vi];
      r.true_leaf = node.true_leaf;
      for (const auto& dep : node.deps)
        r.deps.push_back(dep.state * n_vars + var_index(dep.var));
    }
  }

  const std::size_t total = rhs.size();
  bool changed = true;
  std::size_t rounds = 0;
  while (changed) {
    changed = false;
    if (++rounds > total + 1)
      throw Error("fixed point iteration failed to converge");
    for (std::size_t i = 0; i < total; ++i) {
      if (table.get(static_cast<StateId>(i / n_vars), i % n_vars)) continue;
      const Rhs& r = rhs[i];
      bool value = r.true_leaf;
      if (!value)
        for (std::size_t dep : r.deps)
          if (table.get(static_cast<StateId>(dep / n_vars), dep % n_vars)) {
            value = true;
            break;
          }
      if (value) {
        table.set(static_cast<StateId>(i / n_vars), i % n_vars, true);
        changed = true;
      }
    }
  }
  return table;
}

}  // namespace influence
