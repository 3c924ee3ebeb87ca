#include "cfg.hpp"

#include <algorithm>

#include "errors.hpp"

namespace influence {

namespace {

// Core statements (everything except standalone labels) own a node each.
bool owns_node(const Stmt& s) {
  return !std::holds_alternative<LabelStmt>(s.node);
}

class CfgBuilder {
 public:
  Cfg build(const Procedure& proc) {
    number_list(proc.body);
    exit_node_ = next_id_++;
    cfg_.node_count = next_id_;
    cfg_.entry = 0;
    wire_list(proc.body, exit_node_);
    return std::move(cfg_);
  }

 private:
  void number_list(const StmtList& list) {
    for (const Stmt& s : list) {
      if (owns_node(s)) node_of_[&s] = next_id_++;
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IfStmt>) {
              number_list(node.then_body);
              number_list(node.else_body);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
              number_list(node.body);
            }
          },
          s.node);
    }
  }

  // Wires `list` so that it falls through to `cont`; returns the entry point.
  NodeId wire_list(const StmtList& list, NodeId cont) {
    NodeId entry = cont;
    for (auto it = list.rbegin(); it != list.rend(); ++it)
      entry = wire_stmt(*it, entry);
    return entry;
  }

  NodeId wire_stmt(const Stmt& s, NodeId next) {
    NodeId point = std::visit(
        [&](const auto& node) -> NodeId {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LabelStmt>) {
            // A standalone label names the point the block falls through to.
            cfg_.label_points[node.name] = next;
            return next;
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            NodeId id = node_of_.at(&s);
            edge(id, {RawKind::assign, node.target, node.value.vars}, next);
            return id;
          } else if constexpr (std::is_same_v<T, SkipStmt>) {
            NodeId id = node_of_.at(&s);
            edge(id, {RawKind::tau, {}, {}}, next);
            return id;
          } else if constexpr (std::is_same_v<T, AssertStmt>) {
            NodeId id = node_of_.at(&s);
            edge(id, {RawKind::assertion, {}, node.cond.vars}, next);
            return id;
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            NodeId id = node_of_.at(&s);
            NodeId then_entry = wire_list(node.then_body, next);
            NodeId else_entry = wire_list(node.else_body, next);
            edge(id, {RawKind::boolean, {}, node.cond.vars}, then_entry);
            edge(id, {RawKind::boolean, {}, node.cond.vars}, else_entry);
            return id;
          } else {
            static_assert(std::is_same_v<T, WhileStmt>);
            NodeId id = node_of_.at(&s);
            NodeId body_entry = wire_list(node.body, id);
            edge(id, {RawKind::boolean, {}, node.cond.vars}, body_entry);
            edge(id, {RawKind::boolean, {}, node.cond.vars}, next);
            return id;
          }
        },
        s.node);
    for (const auto& label : s.labels) cfg_.label_points[label] = point;
    return point;
  }

  void edge(NodeId from, RawAction action, NodeId to) {
    cfg_.edges.push_back({from, std::move(action), to});
  }

  Cfg cfg_;
  std::map<const Stmt*, NodeId> node_of_;
  NodeId next_id_ = 0;
  NodeId exit_node_ = 0;
};

}  // namespace

Cfg build_cfg(const Program& program) {
  if (program.procedures.empty())
    throw ArgumentError("program contains no statements");
  if (program.procedures.size() > 1)
    throw ArgumentError(
        "multi-procedure programs are not supported; found " +
        std::to_string(program.procedures.size()) + " procedures");
  return CfgBuilder().build(program.procedures.front());
}

Lts cfg_to_lts(const Cfg& cfg) {
  std::vector<Lts::Transition> transitions;
  for (const CfgEdge& e : cfg.edges) {
    switch (e.action.kind) {
      case RawKind::tau:
        transitions.push_back({e.from, ActionLabel::tau(), e.to});
        break;
      case RawKind::boolean:
      case RawKind::assertion: {
        if (e.action.vars.empty()) {
          transitions.push_back({e.from, ActionLabel::tau(), e.to});
          break;
        }
        for (const auto& v : e.action.vars)
          transitions.push_back({e.from,
                                 e.action.kind == RawKind::boolean
                                     ? ActionLabel::boolean(v)
                                     : ActionLabel::assertion(v),
                                 e.to});
        break;
      }
      case RawKind::assign: {
        const std::string& target = *e.action.target;
        if (e.action.vars.empty()) {
          transitions.push_back({e.from, ActionLabel::assign(target), e.to});
          break;
        }
        for (const auto& v : e.action.vars)
          transitions.push_back({e.from, ActionLabel::assign(target, v), e.to});
        break;
      }
    }
  }
  return Lts(cfg.node_count, cfg.entry, std::move(transitions));
}

Lts extract_lts(std::string_view source) {
  return cfg_to_lts(build_cfg(parse_program(source)));
}

}  // namespace influence
