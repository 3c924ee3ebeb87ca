#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace influence {

using StateId = std::uint32_t;

// Variable names are plain identifier tokens: [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_var_name(std::string_view name);

enum class ActionKind : std::uint8_t {
  tau = 0,        // invisible step
  boolean = 1,    // BOOL v   -- condition reading v
  assertion = 2,  // ASSERT v -- assertion reading v
  assign = 3,     // ASSIGN target [source]
};

// A transition label in post-split form: BOOL/ASSERT carry exactly one
// variable, ASSIGN carries a target and at most one source.
struct ActionLabel {
  ActionKind kind = ActionKind::tau;
  std::string var;     // boolean/assertion: the variable; assign: the target
  std::string source;  // assign only; empty means a constant assignment

  static ActionLabel tau() { return {}; }
  static ActionLabel boolean(std::string v) {
    return {ActionKind::boolean, std::move(v), {}};
  }
  static ActionLabel assertion(std::string v) {
    return {ActionKind::assertion, std::move(v), {}};
  }
  static ActionLabel assign(std::string target) {
    return {ActionKind::assign, std::move(target), {}};
  }
  static ActionLabel assign(std::string target, std::string source) {
    return {ActionKind::assign, std::move(target), std::move(source)};
  }

  bool is_assign_to(std::string_view v) const {
    return kind == ActionKind::assign && var == v;
  }
  bool is_unary_assign() const {
    return kind == ActionKind::assign && source.empty();
  }

  // Canonical ordering: kind, then variable fields. Drives successor order,
  // .aut output order and dep ordering, so it must stay total and stable.
  friend auto operator<=>(const ActionLabel&, const ActionLabel&) = default;
  friend bool operator==(const ActionLabel&, const ActionLabel&) = default;

  // Serialized form used by the Aldebaran writer and diagnostics:
  // `i` for tau, otherwise the quoted label text.
  std::string aut_token() const;
  // Unquoted human-readable text ("tau", "BOOL x", ...).
  std::string text() const;
};

}  // namespace influence
