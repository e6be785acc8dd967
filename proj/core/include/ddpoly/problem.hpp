#pragma once

#include "ddpoly/report.hpp"

#include <optional>
#include <string>

namespace ddpoly {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct RunFlags {
    std::optional<int> verify;  // oracle r_max; overrides the file
    std::optional<int> table;   // value-table limit; overrides the file
    bool partition_mode = false;
    bool strict_polynomial = false;  // quasi_probe non-polynomial -> error
};

struct RunResult {
    Json document;
    std::string text;
};

// Parses, validates and executes a problem file. Tasks run in order; any
// validation failure, oracle mismatch or requested-as-error verdict throws
// (oracle mismatches are always fatal).
RunResult run_problem_text(const std::string& content,
                           const std::string& source_name,
                           const RunFlags& flags);

RunResult run_problem_file(const std::string& path, const RunFlags& flags);

}  // namespace ddpoly
