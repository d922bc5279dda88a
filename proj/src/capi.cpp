// C API wrapper: exceptions from the core are converted to status codes,
// with the message stored thread-locally.

#include "heightlab.h"

#include <json.hpp>

#include <cstring>
#include <string>

#include "heightlab/jsonio.hpp"

using namespace heightlab;
using ojson = nlohmann::ordered_json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hl_status status_of(const error& e) {
    g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
    switch (e.code()) {
    case errc::parse_error: return HL_ERR_PARSE;
    case errc::internal: return HL_ERR_INTERNAL;
    default: return HL_ERR_INVALID;
    }
}

template <typename F>
hl_status guarded(F&& f) {
    try {
        f();
        return HL_OK;
    } catch (const error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = std::string("internal: ") + e.what();
        return HL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "internal: unknown exception";
        return HL_ERR_INTERNAL;
    }
}

struct Options {
    ReportContext ctx;
    std::uint64_t seed = 0;
    int count = 0;
    int budget = 0;
    long base = 2;
    int steps = 15;
    std::string components_gens_text; // raw JSON for mixed generator sets
};

Options parse_options(const char* options_json, const std::string& command) {
    Options o;
    o.ctx.command = command;
    if (options_json == nullptr || *options_json == '\0') return o;
    ojson j = ojson::parse(options_json, nullptr, false);
    if (j.is_discarded())
        fail(errc::parse_error, "options string is not valid JSON");
    if (j.contains("digits")) o.ctx.float_digits = j["digits"].get<int>();
    if (o.ctx.float_digits < 1) o.ctx.float_digits = 1;
    if (j.contains("format"))
        o.ctx.format = parse_format(j["format"].get<std::string>());
    if (j.contains("seed")) o.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("count")) o.count = j["count"].get<int>();
    if (j.contains("budget")) o.budget = j["budget"].get<int>();
    if (j.contains("base")) o.base = j["base"].get<long>();
    if (j.contains("steps")) o.steps = j["steps"].get<int>();
    if (j.contains("components")) o.components_gens_text = j["components"].dump();
    if (j.contains("echo") && j["echo"].is_object())
        for (const auto& [k, v] : j["echo"].items())
            o.ctx.config.emplace_back(
                k, v.is_string() ? v.get<std::string>() : v.dump());
    // the full effective configuration is part of every report
    o.ctx.config.emplace_back("seed", std::to_string(o.seed));
    o.ctx.config.emplace_back("digits", std::to_string(o.ctx.float_digits));
    o.ctx.config.emplace_back(
        "format", o.ctx.format == OutputFormat::json
                      ? "json"
                      : (o.ctx.format == OutputFormat::csv ? "csv" : "text"));
    if (j.contains("count")) o.ctx.config.emplace_back("count", std::to_string(o.count));
    if (j.contains("budget"))
        o.ctx.config.emplace_back("budget", std::to_string(o.budget));
    if (j.contains("base")) o.ctx.config.emplace_back("base", std::to_string(o.base));
    if (j.contains("steps"))
        o.ctx.config.emplace_back("steps", std::to_string(o.steps));
    return o;
}

} // namespace

struct hl_lattice {
    HermitianLattice value;
};
struct hl_rep {
    CompactifiedRep value;
};
struct hl_point {
    PointInP value;
};
struct hl_gens {
    InvariantGeneratorSet value;
};

extern "C" {

const char* hl_version(void) { return kVersion; }

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* s) { std::free(s); }

hl_status hl_lattice_parse(const char* json, hl_lattice** out) {
    if (!json || !out) return HL_ERR_NULL;
    return guarded([&] { *out = new hl_lattice{lattice_from_json(json)}; });
}

void hl_lattice_free(hl_lattice* lat) { delete lat; }

hl_status hl_rep_parse(const char* json, hl_rep** out) {
    if (!json || !out) return HL_ERR_NULL;
    return guarded([&] { *out = new hl_rep{rep_from_json(json)}; });
}

void hl_rep_free(hl_rep* rep) { delete rep; }

hl_status hl_point_parse(const hl_rep* rep, const char* json, hl_point** out) {
    if (!rep || !json || !out) return HL_ERR_NULL;
    return guarded([&] { *out = new hl_point{point_from_json(rep->value, json)}; });
}

void hl_point_free(hl_point* p) { delete p; }

hl_status hl_point_was_normalized(const hl_point* p, int* normalized) {
    if (!p || !normalized) return HL_ERR_NULL;
    *normalized = p->value.was_normalized ? 1 : 0;
    return HL_OK;
}

hl_status hl_gens_parse(const char* json, hl_gens** out) {
    if (!json || !out) return HL_ERR_NULL;
    return guarded([&] { *out = new hl_gens{gens_from_json(json)}; });
}

hl_status hl_gens_adjoint(int n, hl_gens** out) {
    if (!out) return HL_ERR_NULL;
    return guarded([&] { *out = new hl_gens{adjoint_invariants(n)}; });
}

void hl_gens_free(hl_gens* g) { delete g; }

hl_status hl_lattice_degree(const hl_lattice* lat, char** out) {
    if (!lat || !out) return HL_ERR_NULL;
    return guarded(
        [&] { *out = dup_string(lat->value.arakelov_degree().to_string()); });
}

hl_status hl_point_height(const hl_lattice* lat, const hl_rep* rep,
                          const hl_point* p, char** out) {
    if (!lat || !rep || !p || !out) return HL_ERR_NULL;
    return guarded([&] {
        *out = dup_string(
            point_height(lat->value, rep->value, p->value).to_string());
    });
}

hl_status hl_logv_to_decimal(const char* logv, int digits, char** out) {
    if (!logv || !out) return HL_ERR_NULL;
    return guarded(
        [&] { *out = dup_string(parse_logvalue(logv).to_decimal(digits)); });
}

hl_status hl_report_degree(const hl_lattice* lat, const char* options_json,
                           char** out) {
    if (!lat || !out) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "degree");
        *out = dup_string(render_degree_report(o.ctx, lat->value));
    });
}

hl_status hl_report_height(const hl_lattice* lat, const hl_rep* rep,
                           const hl_point* p, const char* options_json,
                           char** out) {
    if (!lat || !rep || !p || !out) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "height");
        LogValue h = point_height(lat->value, rep->value, p->value);
        *out = dup_string(render_height_report(o.ctx, h));
    });
}

hl_status hl_report_rep_info(const hl_rep* rep, const char* options_json,
                             char** out) {
    if (!rep || !out) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "rep-info");
        *out = dup_string(render_rep_info(o.ctx, rep->value));
    });
}

hl_status hl_report_semistable(const hl_rep* rep, const hl_point* p,
                               const hl_gens* gens, const char* options_json,
                               char** out) {
    if (!rep || !p || !out) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "semistable");
        SemistableAnalysis an;
        an.torus = torus_semistable(p->value);
        if (rep->value.tree->kind == RepTree::Kind::adjoint)
            an.adjoint_decision = adjoint_semistable(matrix_from_point(p->value));
        if (gens) {
            an.invariant = invariant_certificate(p->value, gens->value);
            an.invariant_checked = true;
        } else if (rep->value.tree->kind == RepTree::Kind::adjoint) {
            an.invariant = invariant_certificate(
                p->value, adjoint_invariants(rep->value.tree->group_rank));
            an.invariant_checked = true;
        }
        if (o.budget > 0) {
            an.instability = instability_search(p->value, o.budget, o.seed);
            an.instability_searched = true;
            an.budget = o.budget;
            an.seed = o.seed;
        }
        *out = dup_string(render_semistable_report(o.ctx, an));
    });
}

hl_status hl_report_check_bound(const hl_lattice* lat, const hl_rep* rep,
                                const hl_point* p, const hl_gens* gens,
                                const char* options_json, char** out,
                                int* satisfied) {
    if (!lat || !rep || !p || !out || !satisfied) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "check-bound");
        BoundReport br;
        if (is_homogeneous(*rep->value.tree)) {
            InvariantGeneratorSet g =
                gens ? gens->value
                     : (rep->value.tree->kind == RepTree::Kind::adjoint
                            ? adjoint_invariants(rep->value.tree->group_rank)
                            : InvariantGeneratorSet{});
            br = check_height_floor(lat->value, rep->value, p->value, g);
        } else {
            std::vector<std::optional<InvariantGeneratorSet>> comp;
            if (!o.components_gens_text.empty()) {
                ojson arr = ojson::parse(o.components_gens_text);
                ojson wrapped;
                wrapped["schema"] = 1;
                wrapped["components"] = arr;
                comp = component_gens_from_json(wrapped.dump());
            } else if (gens) {
                fail(errc::invalid_argument,
                     "non-homogeneous representations need per-component "
                     "generator sets (options key \"components\")");
            }
            br = check_height_floor_mixed(lat->value, rep->value, p->value, comp);
        }
        *satisfied = br.satisfied ? 1 : 0;
        *out = dup_string(render_bound_report(o.ctx, br));
    });
}

hl_status hl_report_drift(const hl_lattice* lat, const hl_rep* rep,
                          const hl_point* p, const char* lambda_json,
                          const char* options_json, char** out) {
    if (!lat || !rep || !p || !lambda_json || !out) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "drift");
        OnePS lam = one_ps_from_json(lambda_json);
        DriftReport dr = drift_sequence(p->value, lam, o.base, o.steps,
                                        lat->value, rep->value);
        *out = dup_string(render_drift_report(o.ctx, dr));
    });
}

hl_status hl_report_flag_constants(int n, const char* options_json, char** out) {
    if (!out) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "flag-constants");
        *out = dup_string(render_flag_table(o.ctx, n));
    });
}

hl_status hl_report_bound_suite(const hl_rep* rep, const char* options_json,
                                char** out, int* all_ok) {
    if (!rep || !out || !all_ok) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "check-bound");
        int count = o.count > 0 ? o.count : 100;
        BoundSuiteResult r = run_bound_suite(rep->value, count, o.seed);
        *all_ok = r.failures == 0 ? 1 : 0;
        *out = dup_string(render_bound_suite(o.ctx, r));
    });
}

hl_status hl_report_drift_suite(const hl_rep* rep, const char* options_json,
                                char** out, int* all_ok) {
    if (!rep || !out || !all_ok) return HL_ERR_NULL;
    return guarded([&] {
        Options o = parse_options(options_json, "drift");
        int count = o.count > 0 ? o.count : 25;
        DriftSuiteResult r =
            run_drift_suite(rep->value, count, o.steps, o.base, o.seed);
        *all_ok = r.failures == 0 ? 1 : 0;
        *out = dup_string(render_drift_suite(o.ctx, r));
    });
}

} // extern "C"
