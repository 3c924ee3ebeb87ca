#include "influence/influence.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "aut.hpp"
#include "cfg.hpp"
#include "errors.hpp"
#include "lts.hpp"
#include "minilang.hpp"
#include "pbes.hpp"
#include "solver.hpp"

namespace {

thread_local std::string g_last_error;

ia_status set_error(ia_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating the library's exception vocabulary to status codes.
template <typename Fn>
ia_status wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const influence::ParseError& e) {
    return set_error(IA_ERROR_PARSE, std::string(e.what()) + " (line " +
                                         std::to_string(e.line) + ", column " +
                                         std::to_string(e.column) + ")");
  } catch (const influence::LimitError& e) {
    return set_error(IA_ERROR_LIMIT, e.what());
  } catch (const influence::ArgumentError& e) {
    return set_error(IA_ERROR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(IA_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

influence::IaVariant make_variant(ia_variant variant,
                                  const char* const* property_vars,
                                  uint32_t property_var_count) {
  std::vector<std::string> props;
  props.reserve(property_var_count);
  for (uint32_t i = 0; i < property_var_count; ++i) {
    if (!property_vars || !property_vars[i])
      throw influence::ArgumentError("null property variable name");
    props.emplace_back(property_vars[i]);
  }
  switch (variant) {
    case IA_VARIANT_IA1:
    case IA_VARIANT_IA2:
    case IA_VARIANT_IA3:
      if (!props.empty())
        throw influence::ArgumentError(
            "property variables are only meaningful for IA4");
      return {static_cast<influence::IaTag>(variant), {}};
    case IA_VARIANT_IA4:
      return influence::IaVariant::ia4(std::move(props));
  }
  throw influence::ArgumentError("unknown analysis variant " +
                                 std::to_string(static_cast<int>(variant)));
}

}  // namespace

struct ia_lts {
  influence::Lts lts;
};

struct ia_analysis {
  const ia_lts* model;
  influence::IaVariant variant;
  influence::SolverStore store;  // retained for diagnostics and stats
  influence::AnnotationMap annotation;
  influence::MatchingTable table;
};

extern "C" {

const char* ia_version(void) { return "1.0.0"; }

const char* ia_last_error(void) { return g_last_error.c_str(); }

void ia_string_free(char* text) { delete[] text; }

ia_status ia_lts_from_source(const char* text, ia_lts** out) {
  return wrap([&]() -> ia_status {
    if (!text || !out)
      throw influence::ArgumentError("null argument");
    *out = new ia_lts{influence::extract_lts(text)};
    return IA_OK;
  });
}

ia_status ia_lts_from_aut(const char* text, ia_lts** out) {
  return wrap([&]() -> ia_status {
    if (!text || !out)
      throw influence::ArgumentError("null argument");
    *out = new ia_lts{influence::read_aut(text)};
    return IA_OK;
  });
}

void ia_lts_free(ia_lts* lts) { delete lts; }

uint32_t ia_lts_state_count(const ia_lts* lts) {
  return lts ? lts->lts.state_count() : 0;
}

uint32_t ia_lts_initial_state(const ia_lts* lts) {
  return lts ? lts->lts.initial() : 0;
}

uint64_t ia_lts_transition_count(const ia_lts* lts) {
  return lts ? lts->lts.transition_count() : 0;
}

uint32_t ia_lts_variable_count(const ia_lts* lts) {
  return lts ? static_cast<uint32_t>(lts->lts.var_universe().size()) : 0;
}

const char* ia_lts_variable(const ia_lts* lts, uint32_t index) {
  if (!lts || index >= lts->lts.var_universe().size()) return nullptr;
  return lts->lts.var_universe()[index].c_str();
}

ia_status ia_lts_to_aut(const ia_lts* lts, char** out_text) {
  return wrap([&]() -> ia_status {
    if (!lts || !out_text)
      throw influence::ArgumentError("null argument");
    *out_text = copy_string(influence::write_aut(lts->lts));
    return IA_OK;
  });
}

ia_status ia_analyze(const ia_lts* lts, ia_variant variant,
                     const char* const* property_vars,
                     uint32_t property_var_count, uint32_t jobs,
                     ia_analysis** out) {
  return wrap([&]() -> ia_status {
    if (!lts || !out)
      throw influence::ArgumentError("null argument");
    influence::IaVariant ia =
        make_variant(variant, property_vars, property_var_count);
    influence::require_property_vars(ia, lts->lts.var_universe());

    auto analysis = std::make_unique<ia_analysis>(
        ia_analysis{lts, ia, influence::SolverStore(lts->lts, ia), {}, {}});
    if (jobs > 1) {
      // Partitioned run with per-worker stores; the retained store then
      // serves diagnostics on demand.
      analysis->annotation = influence::influence_analysis(lts->lts, ia, jobs);
    } else {
      analysis->annotation =
          influence::influence_analysis(lts->lts, analysis->store);
    }
    analysis->table =
        influence::matching_table(analysis->annotation, lts->lts.var_universe());
    *out = analysis.release();
    return IA_OK;
  });
}

void ia_analysis_free(ia_analysis* analysis) { delete analysis; }

int ia_analysis_keeps(const ia_analysis* analysis, uint32_t state,
                      const char* var) {
  if (!analysis || !var) return -1;
  if (state >= analysis->model->lts.state_count()) return -1;
  if (!analysis->model->lts.has_var(var)) return -1;
  return analysis->annotation.keeps(state, var) ? 1 : 0;
}

ia_status ia_analysis_report(const ia_analysis* analysis, ia_format format,
                             char** out_text) {
  return wrap([&]() -> ia_status {
    if (!analysis || !out_text)
      throw influence::ArgumentError("null argument");
    if (format != IA_FORMAT_TABLE && format != IA_FORMAT_JSON)
      throw influence::ArgumentError("unknown report format");
    *out_text = copy_string(influence::render_report(
        analysis->variant, analysis->model->lts.var_universe(),
        analysis->table,
        format == IA_FORMAT_TABLE ? influence::ReportFormat::table
                                  : influence::ReportFormat::json));
    return IA_OK;
  });
}

ia_status ia_analysis_diagnose(ia_analysis* analysis, uint32_t state,
                               const char* var, char** out_dot) {
  return wrap([&]() -> ia_status {
    if (!analysis || !var || !out_dot)
      throw influence::ArgumentError("null argument");
    influence::BesNodeKey key = analysis->store.key(state, var);
    analysis->store.solve(key);  // memoized when already resolved
    *out_dot = copy_string(analysis->store.diagnostic(key).to_dot());
    return IA_OK;
  });
}

ia_status ia_analysis_check_oracle(const ia_analysis* analysis) {
  return wrap([&]() -> ia_status {
    if (!analysis) throw influence::ArgumentError("null argument");
    const influence::Lts& lts = analysis->model->lts;
    influence::GlobalTable table =
        influence::global_solve(lts, analysis->variant);
    influence::SolverStore fresh(lts, analysis->variant);
    std::vector<bool> reachable = lts.reachable();
    for (influence::StateId s = 0; s < lts.state_count(); ++s) {
      if (!reachable[s]) continue;
      for (const auto& v : lts.var_universe()) {
        if (fresh.solve(s, v) != table.at(s, v))
          return set_error(IA_ERROR_MISMATCH,
                           "local and global solvers disagree on Y_" +
                               std::to_string(s) + "(" + v + ")");
        bool annotated = analysis->annotation.keeps(s, v);
        bool expected = table.at(s, v) ||
                        (analysis->variant.tag == influence::IaTag::ia4 &&
                         analysis->variant.is_property_var(v));
        if (annotated != expected)
          return set_error(IA_ERROR_MISMATCH,
                           "annotation disagrees with the global solver on Y_" +
                               std::to_string(s) + "(" + v + ")");
      }
    }
    return IA_OK;
  });
}

ia_status ia_analysis_stats(const ia_analysis* analysis, uint64_t* expansions,
                            uint64_t* stable_true, uint64_t* stable_false) {
  return wrap([&]() -> ia_status {
    if (!analysis) throw influence::ArgumentError("null argument");
    influence::SolverStats stats = analysis->store.stats();
    if (expansions) *expansions = stats.expansions;
    if (stable_true) *stable_true = stats.stable_true;
    if (stable_false) *stable_false = stats.stable_false;
    return IA_OK;
  });
}

ia_status ia_export_blk(const ia_lts* lts, ia_variant variant,
                        const char* const* property_vars,
                        uint32_t property_var_count, const char* eval_var,
                        uint32_t max_variables, int force, char** out_text) {
  return wrap([&]() -> ia_status {
    if (!lts || !out_text)
      throw influence::ArgumentError("null argument");
    influence::BlkOptions options;
    if (eval_var) options.eval_var = std::string(eval_var);
    if (max_variables > 0) options.max_variables = max_variables;
    options.force = force != 0;
    *out_text = copy_string(influence::export_blk(
        lts->lts, make_variant(variant, property_vars, property_var_count),
        options));
    return IA_OK;
  });
}

}  // extern "C"
