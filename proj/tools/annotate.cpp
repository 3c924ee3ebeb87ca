// annotate -- influence analysis front end.
//
// Reads a mini-language program (.mc) or a labeled transition system (.aut),
// runs the selected influence analysis and prints the keep/hide report.
// Everything goes through the public C interface of libinfluence.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "influence/influence.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConsistency = 2;
constexpr int kExitUsage = 64;

struct StringDeleter {
  void operator()(char* p) const { ia_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct LtsDeleter {
  void operator()(ia_lts* p) const { ia_lts_free(p); }
};
struct AnalysisDeleter {
  void operator()(ia_analysis* p) const { ia_analysis_free(p); }
};

int fail_input(const std::string& context) {
  std::cerr << "annotate: " << context << ": " << ia_last_error() << "\n";
  return kExitInput;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) items.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) items.push_back(current);
  return items;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Influence analysis of mini-language programs and LTS models"};
  app.get_formatter()->column_width(34);

  std::string input;
  int variant_number = 1;
  std::string property_vars_csv;
  std::string kind = "auto";
  std::string format = "table";
  std::string emit_blk, emit_aut, diagnose, blk_eval;
  unsigned blk_limit = 0;
  bool blk_force = false;
  bool oracle = false;
  unsigned jobs = 1;

  app.add_option("input", input, "program (.mc) or LTS (.aut) file")
      ->required();
  app.add_option("--ia", variant_number, "analysis variant 1..4")
      ->check(CLI::Range(1, 4));
  app.add_option("--property-vars", property_vars_csv,
                 "comma-separated property variables (IA4 only)");
  app.add_option("--kind", kind, "input kind: auto, mc or aut")
      ->check(CLI::IsMember({"auto", "mc", "aut"}));
  app.add_option("--format", format, "report format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--emit-blk", emit_blk, "write the equation block file here");
  app.add_option("--blk-eval", blk_eval,
                 "add an `eval B:Y1_<var>` clause to the block file");
  app.add_option("--blk-limit", blk_limit,
                 "refuse block export above this many variables (default 64)");
  app.add_flag("--blk-force", blk_force, "export the block regardless of size");
  app.add_option("--emit-aut", emit_aut, "write the (extracted) LTS here");
  app.add_option("--diagnose", diagnose,
                 "STATE:VAR -- append the DOT diagnostic for that verdict");
  app.add_flag("--oracle", oracle,
               "cross-check against the global solver (exit 2 on mismatch)");
  app.add_option("--jobs", jobs, "number of analysis workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  auto variant = static_cast<ia_variant>(variant_number);
  std::vector<std::string> property_vars = split_csv(property_vars_csv);
  if (!property_vars.empty() && variant != IA_VARIANT_IA4) {
    std::cerr << "annotate: --property-vars requires --ia 4\n";
    return kExitUsage;
  }

  uint32_t diag_state = 0;
  std::string diag_var;
  if (!diagnose.empty()) {
    auto colon = diagnose.find(':');
    bool ok = colon != std::string::npos && colon > 0 &&
              colon + 1 < diagnose.size();
    if (ok) {
      try {
        diag_state = static_cast<uint32_t>(
            std::stoul(diagnose.substr(0, colon)));
      } catch (...) {
        ok = false;
      }
      diag_var = diagnose.substr(colon + 1);
    }
    if (!ok) {
      std::cerr << "annotate: --diagnose expects STATE:VAR, got '" << diagnose
                << "'\n";
      return kExitUsage;
    }
  }

  if (kind == "auto") {
    if (input.size() >= 3 && input.rfind(".mc") == input.size() - 3)
      kind = "mc";
    else if (input.size() >= 4 && input.rfind(".aut") == input.size() - 4)
      kind = "aut";
    else {
      std::cerr << "annotate: cannot detect the input kind of '" << input
                << "'; pass --kind mc or --kind aut\n";
      return kExitUsage;
    }
  }

  std::string text;
  if (!read_file(input, text)) {
    std::cerr << "annotate: cannot read '" << input << "'\n";
    return kExitInput;
  }

  ia_lts* raw_lts = nullptr;
  ia_status status = kind == "mc" ? ia_lts_from_source(text.c_str(), &raw_lts)
                                  : ia_lts_from_aut(text.c_str(), &raw_lts);
  if (status != IA_OK) return fail_input(input);
  std::unique_ptr<ia_lts, LtsDeleter> lts(raw_lts);

  std::vector<const char*> prop_ptrs;
  for (const auto& v : property_vars) prop_ptrs.push_back(v.c_str());

  ia_analysis* raw_analysis = nullptr;
  status = ia_analyze(lts.get(), variant,
                      prop_ptrs.empty() ? nullptr : prop_ptrs.data(),
                      static_cast<uint32_t>(prop_ptrs.size()), jobs,
                      &raw_analysis);
  if (status != IA_OK) return fail_input("analysis");
  std::unique_ptr<ia_analysis, AnalysisDeleter> analysis(raw_analysis);

  char* report = nullptr;
  status = ia_analysis_report(
      analysis.get(), format == "json" ? IA_FORMAT_JSON : IA_FORMAT_TABLE,
      &report);
  if (status != IA_OK) return fail_input("report");
  OwnedString report_owner(report);
  std::cout << report;

  if (!emit_aut.empty()) {
    char* aut_text = nullptr;
    if (ia_lts_to_aut(lts.get(), &aut_text) != IA_OK)
      return fail_input("aut export");
    OwnedString owner(aut_text);
    if (!write_file(emit_aut, aut_text)) {
      std::cerr << "annotate: cannot write '" << emit_aut << "'\n";
      return kExitInput;
    }
  }

  if (!emit_blk.empty()) {
    char* blk_text = nullptr;
    if (ia_export_blk(lts.get(), variant,
                      prop_ptrs.empty() ? nullptr : prop_ptrs.data(),
                      static_cast<uint32_t>(prop_ptrs.size()),
                      blk_eval.empty() ? nullptr : blk_eval.c_str(), blk_limit,
                      blk_force ? 1 : 0, &blk_text) != IA_OK)
      return fail_input("blk export");
    OwnedString owner(blk_text);
    if (!write_file(emit_blk, blk_text)) {
      std::cerr << "annotate: cannot write '" << emit_blk << "'\n";
      return kExitInput;
    }
  }

  if (!diagnose.empty()) {
    char* dot = nullptr;
    if (ia_analysis_diagnose(analysis.get(), diag_state, diag_var.c_str(),
                             &dot) != IA_OK)
      return fail_input("diagnose");
    OwnedString owner(dot);
    std::cout << dot;
  }

  if (oracle) {
    status = ia_analysis_check_oracle(analysis.get());
    if (status == IA_ERROR_MISMATCH) {
      std::cerr << "annotate: oracle cross-check failed: " << ia_last_error()
                << "\n";
      return kExitConsistency;
    }
    if (status != IA_OK) return fail_input("oracle");
  }

  return kExitOk;
}
