#pragma once

#include "vanhom/engine.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace vanhom {

enum class OutputFormat { Text, Machine };

struct RunOptions {
    std::string input_path;
    ComputeMode mode = ComputeMode::Auto;
    bool run_oracle = false;
    OutputFormat format = OutputFormat::Text;
    bool assume_phi_injective = false;
};

/* Exit codes:
   0 success, 1 I/O failure, 2 parse/validation failure (including exact mode
   requested without the data for it), 3 oracle verdict failure, 4 engine
   inconsistency. */
struct RunOutcome {
    int exit_code = 0;
    std::string output;   // stdout payload
    std::string errors;   // stderr payload
};

RunOutcome run(const RunOptions& opts);

// Both formats carry the full numeric content plus an echo of the input.
nlohmann::json report_to_json(const HomologyReport& report, const HypersurfaceConfig& cfg,
                              const RunOptions& opts);
std::string report_to_text(const HomologyReport& report, const HypersurfaceConfig& cfg);

std::string mode_name(ComputeMode mode);

}  // namespace vanhom
