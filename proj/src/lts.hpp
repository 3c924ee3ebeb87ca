#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"

namespace influence {

// Finite labeled transition system over dense state ids 0..n-1.
// Immutable after construction; concurrent readers are safe.
class Lts {
 public:
  struct Transition {
    StateId from = 0;
    ActionLabel label;
    StateId to = 0;
  };

  using Successor = std::pair<ActionLabel, StateId>;

  // Validates endpoints against state_count, sorts successors canonically
  // (label order, then target) and drops duplicate transitions.
  Lts(std::uint32_t state_count, StateId initial,
      std::vector<Transition> transitions);

  std::uint32_t state_count() const { return state_count_; }
  StateId initial() const { return initial_; }
  std::uint64_t transition_count() const { return transition_count_; }

  // All (label, target) pairs out of s, canonically ordered. Stable across
  // calls. Throws ArgumentError for an unknown state id.
  std::span<const Successor> successors(StateId s) const;

  // Sorted union of the variables occurring in any transition label.
  const std::vector<std::string>& var_universe() const { return universe_; }
  bool has_var(std::string_view v) const;

  // Per-state reachability from the initial state.
  std::vector<bool> reachable() const;

  bool operator==(const Lts& other) const;

 private:
  std::uint32_t state_count_;
  StateId initial_;
  std::uint64_t transition_count_ = 0;
  std::vector<std::vector<Successor>> adjacency_;
  std::vector<std::string> universe_;
};

}  // namespace influence
