#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lts.hpp"
#include "minilang.hpp"

namespace influence {

using NodeId = StateId;

enum class RawKind : std::uint8_t { tau, boolean, assign, assertion };

// Pre-split edge action: the full variable list of the originating
// expression. `target` is present exactly for assignments.
struct RawAction {
  RawKind kind = RawKind::tau;
  std::optional<std::string> target;
  std::vector<std::string> vars;  // sorted, duplicate-free

  friend bool operator==(const RawAction&, const RawAction&) = default;
};

struct CfgEdge {
  NodeId from = 0;
  RawAction action;
  NodeId to = 0;

  friend bool operator==(const CfgEdge&, const CfgEdge&) = default;
};

// Control flow graph of a single procedure. Nodes are numbered in statement
// order, entry = 0; the procedure's exit point gets the last id.
struct Cfg {
  std::uint32_t node_count = 0;
  NodeId entry = 0;
  std::vector<CfgEdge> edges;
  std::map<std::string, NodeId> label_points;  // source label -> node
};

// Requires exactly one procedure (single-process model).
Cfg build_cfg(const Program& program);

// Expands each raw edge into post-split transitions:
//   BOOL/ASSERT over {v1..vj} -> one unary transition per vi (tau if empty),
//   ASSIGN t over {v1..vj}    -> one `ASSIGN t vi` per vi (`ASSIGN t` if empty),
//   TAU                       -> tau.
Lts cfg_to_lts(const Cfg& cfg);

// Convenience: parse + build + extract.
Lts extract_lts(std::string_view source);

}  // namespace influence
