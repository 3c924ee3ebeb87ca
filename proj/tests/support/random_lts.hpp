#pragma once

#include <random>
#include <string>
#include <vector>

#include "lts.hpp"
#include "pbes.hpp"

namespace testgen {

// Random instance generator shared by the property suites and the acceptance
// corpus: up to 50 states, 150 transitions and 4 variables, every label kind
// represented.
inline influence::Lts random_lts(std::mt19937& rng) {
  static const std::vector<std::string> names{"w", "x", "y", "z"};

  std::uniform_int_distribution<std::uint32_t> state_count_dist(1, 50);
  std::uint32_t n_states = state_count_dist(rng);
  std::uniform_int_distribution<std::uint32_t> var_count_dist(1, 4);
  std::uint32_t n_vars = var_count_dist(rng);
  std::uniform_int_distribution<std::uint32_t> trans_count_dist(0, 150);
  std::uint32_t n_trans = trans_count_dist(rng);

  std::uniform_int_distribution<std::uint32_t> state_dist(0, n_states - 1);
  std::uniform_int_distribution<std::uint32_t> var_dist(0, n_vars - 1);
  std::uniform_int_distribution<int> kind_dist(0, 99);

  std::vector<influence::Lts::Transition> transitions;
  transitions.reserve(n_trans);
  for (std::uint32_t i = 0; i < n_trans; ++i) {
    influence::StateId from = state_dist(rng);
    influence::StateId to = state_dist(rng);
    int roll = kind_dist(rng);
    influence::ActionLabel label;
    if (roll < 15) {
      label = influence::ActionLabel::tau();
    } else if (roll < 40) {
      label = influence::ActionLabel::boolean(names[var_dist(rng)]);
    } else if (roll < 55) {
      label = influence::ActionLabel::assertion(names[var_dist(rng)]);
    } else if (roll < 65) {
      label = influence::ActionLabel::assign(names[var_dist(rng)]);
    } else {
      label = influence::ActionLabel::assign(names[var_dist(rng)],
                                             names[var_dist(rng)]);
    }
    transitions.push_back({from, std::move(label), to});
  }
  return influence::Lts(n_states, 0, std::move(transitions));
}

// Random subset of the universe (possibly empty) for IA4 instances.
inline std::vector<std::string> random_property_vars(
    std::mt19937& rng, const std::vector<std::string>& universe) {
  std::vector<std::string> vars;
  std::bernoulli_distribution pick(0.3);
  for (const auto& v : universe)
    if (pick(rng)) vars.push_back(v);
  return vars;
}

inline std::vector<influence::IaVariant> all_variants(
    std::mt19937& rng, const std::vector<std::string>& universe) {
  return {influence::IaVariant::ia1(), influence::IaVariant::ia2(),
          influence::IaVariant::ia3(),
          influence::IaVariant::ia4(random_property_vars(rng, universe))};
}

}  // namespace testgen
