#pragma once

// Named verification checks driven by `paramodular verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paramodular/series.hpp"
#include "paramodular/siegel.hpp"

namespace paramodular {

struct CheckOptions {
    std::optional<std::int64_t> q_order;
    std::optional<std::int64_t> s_order;
    std::optional<std::int64_t> max_n;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

const std::vector<std::string>& check_names();

/// Runs one named check, or every check for "all". Unknown names throw UsageError.
std::vector<CheckResult> run_checks(const std::string& selector, const CheckOptions& options);

/// "CHECK <name> PASS|FAIL <detail>"
std::string format_result(const CheckResult& r);

/// Window used by the per-form checks: (24 q, 24 t q) with t the
/// polarization, so the tau1 <-> tau3 swap maps the window onto itself.
Truncation form_window(FormName name, const CheckOptions& options);

}  // namespace paramodular
