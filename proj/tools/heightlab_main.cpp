// Command-line front end. Everything goes through the shared-library C API;
// this file only parses arguments, reads files and prints reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "heightlab.h"

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitBoundViolation = 3;

struct CommonOpts {
    std::string format = "json";
    int digits = 6;
    unsigned long long seed = 0;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--digits", c.digits, "Significant digits for floats")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "Seed for randomized searches/suites");
    cmd->add_option("--out", c.out_path, "Write the report to a file");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(kExitValidation);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool color_enabled() {
    return std::getenv("HEIGHTLAB_NO_COLOR") == nullptr;
}

[[noreturn]] void die_api(const std::string& what) {
    std::cerr << "error (" << what << "): " << hl_last_error() << "\n";
    std::exit(kExitValidation);
}

void emit(const CommonOpts& c, const char* report) {
    if (c.out_path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream out(c.out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << c.out_path << "'\n";
        std::exit(kExitValidation);
    }
    out << report;
}

std::string options_json(const CommonOpts& c, const ojson& extra,
                         const ojson& echo) {
    ojson j;
    j["format"] = c.format;
    j["digits"] = c.digits;
    j["seed"] = c.seed;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    j["echo"] = echo;
    return j.dump();
}

struct Handles {
    hl_lattice* lattice = nullptr;
    hl_rep* rep = nullptr;
    hl_point* point = nullptr;
    hl_gens* gens = nullptr;
    ~Handles() {
        hl_lattice_free(lattice);
        hl_rep_free(rep);
        hl_point_free(point);
        hl_gens_free(gens);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heightlab: exact heights, semistability and drift "
                 "experiments on metrized lattices"};
    app.require_subcommand(1);

    std::string lattice_path, rep_path, point_path, gens_path, lambda_path;
    int flag_n = 0;
    int budget = 0;
    int count = 0;
    int steps = 15;
    long base = 2;

    CommonOpts c_degree, c_height, c_repinfo, c_semi, c_bound, c_drift, c_flags;

    CLI::App* cmd_degree = app.add_subcommand("degree", "Arakelov degree of a lattice");
    cmd_degree->add_option("--lattice", lattice_path)->required();
    add_common(cmd_degree, c_degree);

    CLI::App* cmd_height = app.add_subcommand("height", "Height of a point");
    cmd_height->add_option("--lattice", lattice_path)->required();
    cmd_height->add_option("--rep", rep_path)->required();
    cmd_height->add_option("--point", point_path)->required();
    add_common(cmd_height, c_height);

    CLI::App* cmd_repinfo = app.add_subcommand("rep-info", "Dimension, weights and degrees");
    cmd_repinfo->add_option("--rep", rep_path)->required();
    add_common(cmd_repinfo, c_repinfo);

    CLI::App* cmd_semi = app.add_subcommand("semistable", "Torus test, invariants, instability search");
    cmd_semi->add_option("--rep", rep_path)->required();
    cmd_semi->add_option("--point", point_path)->required();
    cmd_semi->add_option("--gens", gens_path);
    cmd_semi->add_option("--budget", budget, "Instability search iterations");
    add_common(cmd_semi, c_semi);

    CLI::App* cmd_bound = app.add_subcommand("check-bound", "Certified height floor check");
    cmd_bound->add_option("--lattice", lattice_path);
    cmd_bound->add_option("--rep", rep_path)->required();
    cmd_bound->add_option("--point", point_path);
    cmd_bound->add_option("--gens", gens_path);
    cmd_bound->add_option("--count", count, "Run a seeded random suite instead");
    add_common(cmd_bound, c_bound);

    CLI::App* cmd_drift = app.add_subcommand("drift", "Metric drift experiment");
    cmd_drift->add_option("--lattice", lattice_path);
    cmd_drift->add_option("--rep", rep_path)->required();
    cmd_drift->add_option("--point", point_path);
    cmd_drift->add_option("--lambda", lambda_path);
    cmd_drift->add_option("--base", base)->check(CLI::Range(2L, 1000000L));
    cmd_drift->add_option("--steps", steps)->check(CLI::PositiveNumber);
    cmd_drift->add_option("--count", count, "Run a seeded random suite instead");
    add_common(cmd_drift, c_drift);

    CLI::App* cmd_flags = app.add_subcommand("flag-constants", "Dimension, degree and bound constants per flag type");
    cmd_flags->add_option("--N", flag_n)->required()->check(CLI::PositiveNumber);
    add_common(cmd_flags, c_flags);

    CLI11_PARSE(app, argc, argv);

    Handles h;
    char* report = nullptr;

    auto parse_lattice = [&](const std::string& path) {
        if (hl_lattice_parse(read_file(path).c_str(), &h.lattice) != HL_OK)
            die_api("lattice");
    };
    auto parse_rep = [&](const std::string& path) {
        if (hl_rep_parse(read_file(path).c_str(), &h.rep) != HL_OK)
            die_api("rep");
    };
    auto parse_point = [&](const std::string& path) {
        if (hl_point_parse(h.rep, read_file(path).c_str(), &h.point) != HL_OK)
            die_api("point");
        int normalized = 0;
        hl_point_was_normalized(h.point, &normalized);
        if (normalized)
            std::cerr << "warning: covector in '" << path
                      << "' was not primitive; divided by its content\n";
    };

    if (cmd_degree->parsed()) {
        parse_lattice(lattice_path);
        ojson echo{{"lattice", lattice_path}};
        if (hl_report_degree(h.lattice, options_json(c_degree, {}, echo).c_str(),
                             &report) != HL_OK)
            die_api("degree");
        emit(c_degree, report);
    } else if (cmd_height->parsed()) {
        parse_lattice(lattice_path);
        parse_rep(rep_path);
        parse_point(point_path);
        ojson echo{{"lattice", lattice_path}, {"rep", rep_path}, {"point", point_path}};
        if (hl_report_height(h.lattice, h.rep, h.point,
                             options_json(c_height, {}, echo).c_str(),
                             &report) != HL_OK)
            die_api("height");
        emit(c_height, report);
    } else if (cmd_repinfo->parsed()) {
        parse_rep(rep_path);
        ojson echo{{"rep", rep_path}};
        if (hl_report_rep_info(h.rep, options_json(c_repinfo, {}, echo).c_str(),
                               &report) != HL_OK)
            die_api("rep-info");
        emit(c_repinfo, report);
    } else if (cmd_semi->parsed()) {
        parse_rep(rep_path);
        parse_point(point_path);
        if (!gens_path.empty() &&
            hl_gens_parse(read_file(gens_path).c_str(), &h.gens) != HL_OK)
            die_api("gens");
        ojson echo{{"rep", rep_path}, {"point", point_path}};
        if (!gens_path.empty()) echo["gens"] = gens_path;
        ojson extra{{"budget", budget}};
        if (hl_report_semistable(h.rep, h.point, h.gens,
                                 options_json(c_semi, extra, echo).c_str(),
                                 &report) != HL_OK)
            die_api("semistable");
        emit(c_semi, report);
    } else if (cmd_bound->parsed()) {
        parse_rep(rep_path);
        ojson echo{{"rep", rep_path}};
        if (count > 0) {
            ojson extra{{"count", count}};
            int ok = 0;
            if (hl_report_bound_suite(h.rep,
                                      options_json(c_bound, extra, echo).c_str(),
                                      &report, &ok) != HL_OK)
                die_api("check-bound");
            emit(c_bound, report);
            if (!ok) {
                if (color_enabled())
                    std::cerr << "\x1b[1;31mCERTIFIED BOUND VIOLATION\x1b[0m "
                                 "(this signals a bug in the toolchain)\n";
                else
                    std::cerr << "CERTIFIED BOUND VIOLATION (this signals a "
                                 "bug in the toolchain)\n";
                return kExitBoundViolation;
            }
        } else {
            if (lattice_path.empty() || point_path.empty()) {
                std::cerr << "error: check-bound needs --lattice and --point "
                             "(or --count for the suite)\n";
                return kExitValidation;
            }
            parse_lattice(lattice_path);
            parse_point(point_path);
            ojson extra = ojson::object();
            if (!gens_path.empty()) {
                std::string text = read_file(gens_path);
                ojson parsed = ojson::parse(text, nullptr, false);
                if (parsed.is_discarded()) {
                    std::cerr << "error: '" << gens_path << "' is not valid JSON\n";
                    return kExitValidation;
                }
                if (parsed.contains("components")) {
                    extra["components"] = parsed["components"];
                } else if (hl_gens_parse(text.c_str(), &h.gens) != HL_OK) {
                    die_api("gens");
                }
                echo["gens"] = gens_path;
            }
            echo["lattice"] = lattice_path;
            echo["point"] = point_path;
            int satisfied = 0;
            if (hl_report_check_bound(h.lattice, h.rep, h.point, h.gens,
                                      options_json(c_bound, extra, echo).c_str(),
                                      &report, &satisfied) != HL_OK)
                die_api("check-bound");
            emit(c_bound, report);
            if (!satisfied) {
                if (color_enabled())
                    std::cerr << "\x1b[1;31mCERTIFIED BOUND VIOLATION\x1b[0m "
                                 "(this signals a bug in the toolchain)\n";
                else
                    std::cerr << "CERTIFIED BOUND VIOLATION (this signals a "
                                 "bug in the toolchain)\n";
                return kExitBoundViolation;
            }
        }
    } else if (cmd_drift->parsed()) {
        parse_rep(rep_path);
        ojson echo{{"rep", rep_path}};
        ojson extra{{"base", base}, {"steps", steps}};
        if (count > 0) {
            extra["count"] = count;
            int ok = 0;
            if (hl_report_drift_suite(h.rep,
                                      options_json(c_drift, extra, echo).c_str(),
                                      &report, &ok) != HL_OK)
                die_api("drift");
            emit(c_drift, report);
            if (!ok) {
                std::cerr << "DRIFT SUITE FAILURE (this signals a bug in the "
                             "toolchain)\n";
                return kExitBoundViolation;
            }
        } else {
            if (lattice_path.empty() || point_path.empty() || lambda_path.empty()) {
                std::cerr << "error: drift needs --lattice, --point and "
                             "--lambda (or --count for the suite)\n";
                return kExitValidation;
            }
            parse_lattice(lattice_path);
            parse_point(point_path);
            echo["lattice"] = lattice_path;
            echo["point"] = point_path;
            echo["lambda"] = lambda_path;
            if (hl_report_drift(h.lattice, h.rep, h.point,
                                read_file(lambda_path).c_str(),
                                options_json(c_drift, extra, echo).c_str(),
                                &report) != HL_OK)
                die_api("drift");
            emit(c_drift, report);
        }
    } else if (cmd_flags->parsed()) {
        ojson echo{{"N", std::to_string(flag_n)}};
        if (hl_report_flag_constants(flag_n,
                                     options_json(c_flags, {}, echo).c_str(),
                                     &report) != HL_OK)
            die_api("flag-constants");
        emit(c_flags, report);
    }

    hl_string_free(report);
    return 0;
}
