#include "lts.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "errors.hpp"

namespace influence {

bool is_valid_var_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name) {
    auto uc = static_cast<unsigned char>(c);
    if (!std::isalnum(uc) && uc != '_') return false;
  }
  return true;
}

std::string ActionLabel::text() const {
  switch (kind) {
    case ActionKind::tau:
      return "tau";
    case ActionKind::boolean:
      return "BOOL " + var;
    case ActionKind::assertion:
      return "ASSERT " + var;
    case ActionKind::assign:
      return source.empty() ? "ASSIGN " + var : "ASSIGN " + var + " " + source;
  }
  return "tau";
}

std::string ActionLabel::aut_token() const {
  if (kind == ActionKind::tau) return "i";
  return "\"" + text() + "\"";
}

Lts::Lts(std::uint32_t state_count, StateId initial,
         std::vector<Transition> transitions)
    : state_count_(state_count), initial_(initial) {
  if (state_count_ == 0)
    throw ArgumentError("an LTS needs at least one state");
  if (initial_ >= state_count_)
    throw ArgumentError("initial state " + std::to_string(initial_) +
                        " is outside 0.." + std::to_string(state_count_ - 1));

  adjacency_.resize(state_count_);
  for (auto& t : transitions) {
    if (t.from >= state_count_ || t.to >= state_count_)
      throw ArgumentError("transition endpoint outside the state range: (" +
                          std::to_string(t.from) + ", " + t.label.text() +
                          ", " + std::to_string(t.to) + ")");
    adjacency_[t.from].emplace_back(std::move(t.label), t.to);
  }

  std::set<std::string> vars;
  for (auto& succs : adjacency_) {
    std::sort(succs.begin(), succs.end());
    succs.erase(std::unique(succs.begin(), succs.end()), succs.end());
    transition_count_ += succs.size();
    for (const auto& [label, to] : succs) {
      if (!label.var.empty()) vars.insert(label.var);
      if (!label.source.empty()) vars.insert(label.source);
    }
  }
  universe_.assign(vars.begin(), vars.end());
}

std::span<const Lts::Successor> Lts::successors(StateId s) const {
  if (s >= state_count_)
    throw ArgumentError("unknown state id " + std::to_string(s));
  return adjacency_[s];
}

bool Lts::has_var(std::string_view v) const {
  return std::binary_search(universe_.begin(), universe_.end(), v);
}

std::vector<bool> Lts::reachable() const {
  std::vector<bool> seen(state_count_, false);
  std::vector<StateId> stack{initial_};
  seen[initial_] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const auto& [label, to] : adjacency_[s]) {
      if (!seen[to]) {
        seen[to] = true;
        stack.push_back(to);
      }
    }
  }
  return seen;
}

bool Lts::operator==(const Lts& other) const {
  return state_count_ == other.state_count_ && initial_ == other.initial_ &&
         adjacency_ == other.adjacency_;
}

}  // namespace influence
