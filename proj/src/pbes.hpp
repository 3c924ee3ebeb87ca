#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lts.hpp"

namespace influence {

// ---------------------------------------------------------------------------
// Generic equation-system vocabulary. Only the single mu-block disjunctive
// fragment is produced by the influence encodings, but the types cover the
// general shape (nu blocks, conjunctions, modal steps) so the printers and
// the solver contracts are stated against the real model.
// ---------------------------------------------------------------------------

enum class FixSign : std::uint8_t { mu, nu };
enum class BoolOp : std::uint8_t { disj, conj };

// One operand of a right-hand side: either a plain propositional occurrence
// (`modality` empty) or a modal step `< modality > target`. `target` is a
// propositional variable name or the constant TRUE.
struct PbesOperand {
  std::string modality;
  std::string target;

  friend bool operator==(const PbesOperand&, const PbesOperand&) = default;
};

struct PbesEquation {
  std::string lhs;
  BoolOp op = BoolOp::disj;
  std::vector<PbesOperand> operands;  // empty disj = FALSE, empty conj = TRUE

  friend bool operator==(const PbesEquation&, const PbesEquation&) = default;
};

struct PbesBlock {
  FixSign sign = FixSign::mu;
  std::string name;
  std::vector<PbesEquation> equations;
};

// A whole system: the queried main variable plus its blocks in topological
// order (a block may only reference variables of itself or later blocks).
// The influence encodings emit exactly one mu block.
struct PbesSystem {
  std::string main_var;
  std::vector<PbesBlock> blocks;
};

// ---------------------------------------------------------------------------
// Influence-analysis instances.
// ---------------------------------------------------------------------------

enum class IaTag : std::uint8_t { ia1 = 1, ia2 = 2, ia3 = 3, ia4 = 4 };

std::string_view to_string(IaTag tag);

// Analysis selector. IA3 shares IA2's equations; IA4 carries the variables
// of the external property being preserved.
struct IaVariant {
  IaTag tag = IaTag::ia1;
  std::vector<std::string> property_vars;  // sorted, duplicate-free; IA4 only

  static IaVariant ia1() { return {IaTag::ia1, {}}; }
  static IaVariant ia2() { return {IaTag::ia2, {}}; }
  static IaVariant ia3() { return {IaTag::ia3, {}}; }
  static IaVariant ia4(std::vector<std::string> property_vars);

  bool matches_asserts() const {
    return tag == IaTag::ia2 || tag == IaTag::ia3;
  }
  bool is_property_var(std::string_view v) const;

  friend bool operator==(const IaVariant&, const IaVariant&) = default;
};

// Identity of one projected boolean variable Y_state(var).
struct BesNodeKey {
  IaTag tag = IaTag::ia1;
  StateId state = 0;
  std::string var;

  friend auto operator<=>(const BesNodeKey&, const BesNodeKey&) = default;
  friend bool operator==(const BesNodeKey&, const BesNodeKey&) = default;
};

struct BesNodeKeyHash {
  std::size_t operator()(const BesNodeKey& k) const {
    std::size_t h = std::hash<std::string>{}(k.var);
    h ^= (static_cast<std::size_t>(k.state) * 0x9E3779B97F4A7C15ull) +
         static_cast<std::size_t>(k.tag) + (h << 6) + (h >> 2);
    return h;
  }
};

// One projected right-hand side. All projections are disjunctive and live in
// a single mu block, so: a node with a TRUE leaf is stable-true, a node with
// no deps and no leaf is stable-false.
struct BesNode {
  BesNodeKey key;
  BoolOp op = BoolOp::disj;
  bool true_leaf = false;
  std::vector<BesNodeKey> deps;  // deduplicated, sorted by (state, var)
  bool value = false;
  bool stable = false;
};

// Projects the variant's modal equation on one (state, variable) pair.
// Throws ArgumentError for an unknown state or a variable outside the
// universe, or a key whose tag disagrees with `variant`.
BesNode expand(const Lts& lts, const IaVariant& variant, const BesNodeKey& key);

// Dense verdict table over all states x var_universe.
class GlobalTable {
 public:
  GlobalTable(std::uint32_t state_count, std::vector<std::string> universe);

  bool at(StateId s, std::string_view var) const;
  void set(StateId s, std::size_t var_index, bool value) {
    values_[s * universe_.size() + var_index] = value;
  }
  bool get(StateId s, std::size_t var_index) const {
    return values_[s * universe_.size() + var_index];
  }
  const std::vector<std::string>& universe() const { return universe_; }

 private:
  std::uint32_t state_count_;
  std::vector<std::string> universe_;
  std::vector<char> values_;
};

// Least fixed point by Kleene iteration from all-false over the full
// S x var_universe key space. Independent solving route from the local
// on-the-fly resolution; used as its cross-check oracle.
GlobalTable global_solve(const Lts& lts, const IaVariant& variant);

// Rejects IA4 property variables that do not occur in the universe.
void require_property_vars(const IaVariant& variant,
                           const std::vector<std::string>& universe);

}  // namespace influence
