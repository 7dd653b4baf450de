#pragma once

// The acceptance battery: one pass/fail result per criterion, rendered as a
// markdown report plus CSV tables.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypiso {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// One-line summary.
    std::string summary;
    /// Markdown lines with the supporting evidence.
    std::vector<std::string> details;
    /// Wall time in seconds; never rendered into the report.
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0x1509'0001;
    /// Worker threads; 0 uses the hardware concurrency.
    int threads = 0;
};

/// Criteria 1 through 8.
std::vector<CriterionResult> run_core_criteria(const AcceptanceOptions& opts);

/// Criteria 1 through 9. Criterion 9 re-runs 1 through 8 single-threaded and
/// compares the rendered bundle byte for byte.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// File name to contents: report.md, criteria.csv, inradius_audit.csv,
/// area_perimeter_audit.csv. Deterministic for a fixed seed.
std::map<std::string, std::string> render_bundle(const std::vector<CriterionResult>& results,
                                                 std::uint64_t seed);

/// Rows of the inradius audit table (n, R, printed value, reference, discrepancy).
std::string inradius_audit_csv();
/// Rows of the cos/cosh comparison for the total-area-given-perimeter bound.
std::string area_perimeter_audit_csv();

} // namespace hypiso
