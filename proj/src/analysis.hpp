#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lts.hpp"
#include "pbes.hpp"
#include "solver.hpp"

namespace influence {

// The annotation function d: one entry per reachable state, mapping it to
// the sorted set of variables whose current value can still matter there.
struct AnnotationMap {
  std::map<StateId, std::set<std::string>> entries;

  bool keeps(StateId s, std::string_view var) const;
};

// Per-state partition of the universe into kept and hidden variables.
struct MatchingTable {
  struct Row {
    std::set<std::string> keep;
    std::set<std::string> hide;
  };
  std::map<StateId, Row> entries;
};

// Iterates reachable states (breadth-first from the initial state) and all
// universe variables, resolving every projected variable through the shared
// store. For IA4 the property variables are added everywhere up front,
// without resolution.
AnnotationMap influence_analysis(const Lts& lts, SolverStore& store);

// Convenience overloads. `jobs > 1` partitions the reachable states across
// that many workers, each with a private store; the merged result is
// identical to the single-threaded one.
AnnotationMap influence_analysis(const Lts& lts, const IaVariant& variant,
                                 unsigned jobs = 1);

MatchingTable matching_table(const AnnotationMap& d,
                             const std::vector<std::string>& universe);

enum class ReportFormat { table, json };

// Deterministic serialization: states ascending, variables sorted.
std::string render_report(const IaVariant& variant,
                          const std::vector<std::string>& universe,
                          const MatchingTable& table, ReportFormat format);

struct BlkOptions {
  std::optional<std::string> eval_var;  // adds `eval B:Y1_<v>` when set
  std::size_t max_variables = 64;       // quadratic blowup guard
  bool force = false;                   // override the guard
};

// Parameterless single-operator encoding of the variant's equations over
// the given universe, in the `block mu B is ... end block` text format.
// The schema is quadratic in the universe size, hence the guard.
std::string export_blk(const std::vector<std::string>& universe,
                       const IaVariant& variant, const BlkOptions& options);

std::string export_blk(const Lts& lts, const IaVariant& variant,
                       const BlkOptions& options);

// Renders a generic block; export_blk goes through this.
std::string render_blk(const PbesBlock& block,
                       const std::optional<std::string>& eval_target);

// Multi-block form: all blocks in order, then an eval clause for the
// system's main variable (resolved against the block defining it).
std::string render_blk(const PbesSystem& system);

}  // namespace influence
