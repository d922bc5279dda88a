#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heightlab/flags.hpp"
#include "heightlab/heights.hpp"

namespace heightlab {

inline constexpr const char* kVersion = "0.1.0";

// Every input file carries {"schema": 1}; malformed fields raise
// parse_error with a pointer to the offending field.
HermitianLattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const HermitianLattice& lat);

CompactifiedRep rep_from_json(const std::string& text);
PointInP point_from_json(const CompactifiedRep& rep, const std::string& text);
InvariantGeneratorSet gens_from_json(const std::string& text);
// {"components": [<gens or null>, ...]} for non-homogeneous bound checks.
std::vector<std::optional<InvariantGeneratorSet>> component_gens_from_json(
    const std::string& text);
OnePS one_ps_from_json(const std::string& text);

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(const std::string& name);

// Echoed into every report so identical inputs, seed and version give
// byte-identical output.
struct ReportContext {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    int float_digits = 6;
    OutputFormat format = OutputFormat::json;
};

struct SemistableAnalysis {
    TorusReport torus;
    std::optional<bool> adjoint_decision;
    std::optional<std::pair<int, Rational>> invariant;
    bool invariant_checked = false;
    std::optional<InstabilityCertificate> instability;
    bool instability_searched = false;
    int budget = 0;
    std::uint64_t seed = 0;
};

struct BoundSuiteRow {
    int index = 0;
    bool satisfied = false;
    double height = 0;
    double floor = 0;
};

struct BoundSuiteResult {
    int count = 0;
    int failures = 0;
    std::vector<BoundSuiteRow> rows;
};

struct DriftSuiteRow {
    int index = 0;
    bool certificate_found = false;
    bool degrees_constant = false;
    int decreasing_from = -1; // first n with strict decrease through the end
    int constant_from = -1;
    bool single_exponent = false;
    double asymptotic_step = 0;
    bool ok = false;
};

struct DriftSuiteResult {
    int count = 0;
    int failures = 0;
    std::vector<DriftSuiteRow> rows;
};

// Batch experiments behind the --count/--seed flags (adjoint reps).
BoundSuiteResult run_bound_suite(const CompactifiedRep& rep, int count,
                                 std::uint64_t seed);
DriftSuiteResult run_drift_suite(const CompactifiedRep& rep, int count,
                                 int steps, long base, std::uint64_t seed);

std::string render_degree_report(const ReportContext& ctx,
                                 const HermitianLattice& lat);
std::string render_height_report(const ReportContext& ctx, const LogValue& h);
std::string render_rep_info(const ReportContext& ctx, const CompactifiedRep& rep);
std::string render_semistable_report(const ReportContext& ctx,
                                     const SemistableAnalysis& an);
std::string render_bound_report(const ReportContext& ctx, const BoundReport& br);
std::string render_drift_report(const ReportContext& ctx, const DriftReport& dr);
std::string render_flag_table(const ReportContext& ctx, int n);
std::string render_bound_suite(const ReportContext& ctx, const BoundSuiteResult& r);
std::string render_drift_suite(const ReportContext& ctx, const DriftSuiteResult& r);

} // namespace heightlab
