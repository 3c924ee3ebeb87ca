#include "analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <thread>

#include "errors.hpp"
#include "json.hpp"

namespace influence {

namespace {

std::vector<StateId> reachable_states(const Lts& lts) {
  // Breadth-first from the initial state; the visit order is the worklist
  // order of the analysis loop.
  std::vector<StateId> order;
  std::vector<bool> seen(lts.state_count(), false);
  std::deque<StateId> queue{lts.initial()};
  seen[lts.initial()] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (const auto& [label, to] : lts.successors(s)) {
      if (!seen[to]) {
        seen[to] = true;
        queue.push_back(to);
      }
    }
  }
  return order;
}

void annotate_states(const Lts& lts, SolverStore& store,
                     const std::vector<StateId>& states, AnnotationMap& d) {
  const auto& universe = lts.var_universe();
  const IaVariant& variant = store.variant();
  for (StateId s : states) {
    auto& entry = d.entries[s];
    for (const auto& v : universe) {
      if (variant.tag == IaTag::ia4 && variant.is_property_var(v)) {
        entry.insert(v);  // external property variables count everywhere
        continue;
      }
      if (store.solve(s, v)) entry.insert(v);
    }
  }
}

std::string join(const std::set<std::string>& vars) {
  if (vars.empty()) return "-";
  std::string out;
  for (const auto& v : vars) {
    if (!out.empty()) out += ',';
    out += v;
  }
  return out;
}

}  // namespace

bool AnnotationMap::keeps(StateId s, std::string_view var) const {
  auto it = entries.find(s);
  return it != entries.end() && it->second.count(std::string(var)) > 0;
}

AnnotationMap influence_analysis(const Lts& lts, SolverStore& store) {
  AnnotationMap d;
  annotate_states(lts, store, reachable_states(lts), d);
  return d;
}

AnnotationMap influence_analysis(const Lts& lts, const IaVariant& variant,
                                 unsigned jobs) {
  require_property_vars(variant, lts.var_universe());
  std::vector<StateId> states = reachable_states(lts);

  if (jobs <= 1 || states.size() < 2) {
    SolverStore store(lts, variant);
    AnnotationMap d;
    annotate_states(lts, store, states, d);
    return d;
  }

  unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(states.size()));
  std::vector<std::vector<StateId>> chunks(workers);
  for (std::size_t i = 0; i < states.size(); ++i)
    chunks[i % workers].push_back(states[i]);

  std::vector<AnnotationMap> partials(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      SolverStore store(lts, variant);
      annotate_states(lts, store, chunks[w], partials[w]);
    });
  }
  for (auto& t : threads) t.join();

  AnnotationMap d;
  for (auto& partial : partials)
    d.entries.merge(partial.entries);
  return d;
}

MatchingTable matching_table(const AnnotationMap& d,
                             const std::vector<std::string>& universe) {
  MatchingTable table;
  for (const auto& [state, keep] : d.entries) {
    MatchingTable::Row row;
    row.keep = keep;
    for (const auto& v : universe)
      if (!keep.count(v)) row.hide.insert(v);
    table.entries[state] = std::move(row);
  }
  return table;
}

std::string render_report(const IaVariant& variant,
                          const std::vector<std::string>& universe,
                          const MatchingTable& table, ReportFormat format) {
  if (format == ReportFormat::table) {
    std::ostringstream out;
    out << "variant: " << to_string(variant.tag);
    if (variant.tag == IaTag::ia3) out << " (alias of IA2)";
    out << "\n";
    if (variant.tag == IaTag::ia4) {
      std::set<std::string> props(variant.property_vars.begin(),
                                  variant.property_vars.end());
      out << "property vars: " << join(props) << "\n";
    }
    for (const auto& [state, row] : table.entries)
      out << state << "  keep: " << join(row.keep)
          << "  hide: " << join(row.hide) << "\n";
    return out.str();
  }

  nlohmann::ordered_json doc;
  doc["variant"] = std::string(to_string(variant.tag));
  doc["property_vars"] = variant.property_vars;
  doc["universe"] = universe;
  auto& states = doc["states"] = nlohmann::ordered_json::array();
  for (const auto& [state, row] : table.entries) {
    nlohmann::ordered_json entry;
    entry["id"] = state;
    entry["keep"] = std::vector<std::string>(row.keep.begin(), row.keep.end());
    entry["hide"] = std::vector<std::string>(row.hide.begin(), row.hide.end());
    states.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string render_blk(const PbesBlock& block,
                       const std::optional<std::string>& eval_target) {
  std::ostringstream out;
  out << "block " << (block.sign == FixSign::mu ? "mu" : "nu") << " "
      << block.name << " is\n";
  for (const auto& eq : block.equations) {
    out << "  " << eq.lhs << " = ";
    if (eq.operands.empty()) {
      out << (eq.op == BoolOp::disj ? "FALSE" : "TRUE");
    } else {
      const char* glue = eq.op == BoolOp::disj ? " or " : " and ";
      for (std::size_t i = 0; i < eq.operands.size(); ++i) {
        if (i > 0) out << glue;
        const PbesOperand& operand = eq.operands[i];
        if (!operand.modality.empty()) out << "< " << operand.modality << " > ";
        out << operand.target;
      }
    }
    out << "\n";
  }
  out << "end block\n";
  if (eval_target) out << "eval " << block.name << ":" << *eval_target << "\n";
  return out.str();
}

std::string render_blk(const PbesSystem& system) {
  std::string out;
  const PbesBlock* defining = nullptr;
  for (const auto& block : system.blocks) {
    out += render_blk(block, std::nullopt);
    for (const auto& eq : block.equations)
      if (eq.lhs == system.main_var && !defining) defining = &block;
  }
  if (!defining)
    throw ArgumentError("main variable '" + system.main_var +
                        "' is not defined by any block");
  out += "eval " + defining->name + ":" + system.main_var + "\n";
  return out;
}

std::string export_blk(const std::vector<std::string>& universe,
                       const IaVariant& variant, const BlkOptions& options) {
  require_property_vars(variant, universe);
  if (!options.force && universe.size() > options.max_variables)
    throw LimitError(
        "refusing to expand " + std::to_string(universe.size()) +
        " variables into a quadratic equation block (limit " +
        std::to_string(options.max_variables) + "); raise the limit or force");
  if (options.eval_var &&
      !std::binary_search(universe.begin(), universe.end(), *options.eval_var))
    throw ArgumentError("eval variable '" + *options.eval_var +
                        "' does not occur in the model");

  PbesBlock block{FixSign::mu, "B", {}};
  for (const auto& v : universe) {
    // Y1: the projected variable; Y2: direct hits; Y3..Y5: flow through
    // assignments. `z` ranges over the other variables, except that a
    // one-variable universe keeps the self-assignment pair.
    std::vector<std::string> others;
    for (const auto& z : universe)
      if (z != v) others.push_back(z);
    if (others.empty()) others.push_back(v);

    PbesEquation y1{"Y1_" + v, BoolOp::disj, {}};
    y1.operands.push_back({"", "Y2_" + v});
    y1.operands.push_back({"", "Y3_" + v});

    PbesEquation y2{"Y2_" + v, BoolOp::disj, {}};
    y2.operands.push_back({"\"BOOL " + v + "\"", "TRUE"});
    if (variant.matches_asserts())
      y2.operands.push_back({"\"ASSERT " + v + "\"", "TRUE"});
    if (variant.tag == IaTag::ia4)
      for (const auto& w : variant.property_vars)
        y2.operands.push_back({"\"ASSIGN " + w + " " + v + "\"", "TRUE"});

    PbesEquation y3{"Y3_" + v, BoolOp::disj, {}};
    y3.operands.push_back({"", "Y4_" + v});
    y3.operands.push_back({"", "Y5_" + v});

    PbesEquation y4{"Y4_" + v, BoolOp::disj, {}};
    for (const auto& z : others)
      y4.operands.push_back({"\"ASSIGN " + z + " " + v + "\"", "Y1_" + z});

    std::string killers;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (i > 0) killers += " or ";
      killers += "\"ASSIGN " + v + " " + others[i] + "\"";
    }
    PbesEquation y5{"Y5_" + v, BoolOp::disj, {}};
    y5.operands.push_back({"not (" + killers + ")", "Y1_" + v});

    for (auto& eq : {y1, y2, y3, y4, y5}) block.equations.push_back(eq);
  }

  std::optional<std::string> eval_target;
  if (options.eval_var) eval_target = "Y1_" + *options.eval_var;
  return render_blk(block, eval_target);
}

std::string export_blk(const Lts& lts, const IaVariant& variant,
                       const BlkOptions& options) {
  return export_blk(lts.var_universe(), variant, options);
}

}  // namespace influence
