#include "heightlab/jsonio.hpp"

#include <json.hpp>

#include <sstream>

#include "heightlab/errors.hpp"
#include "heightlab/sampling.hpp"

namespace heightlab {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse_error, "input is not valid JSON");
    return j;
}

void require_schema(const json& j) {
    if (!j.is_object() || !j.contains("schema"))
        fail(errc::parse_error, "missing field: $.schema");
    if (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
        fail(errc::parse_error, "unsupported value at $.schema (expected 1)");
}

Rational rational_field(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    fail(errc::parse_error, "expected a rational at " + where);
}

std::string fmt_float(const LogValue& v, int digits) { return v.to_decimal(digits); }

std::string fmt_double(double x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    std::string s = os.str();
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

// JSON numbers are emitted from the digit-rounded rendering so reports stay
// byte-identical for identical inputs.
double num_float(const LogValue& v, int digits) {
    return std::stod(fmt_float(v, digits));
}

double num_double(double x, int digits) { return std::stod(fmt_double(x, digits)); }

json header(const ReportContext& ctx) {
    json h;
    h["command"] = ctx.command;
    h["version"] = kVersion;
    json cfg = json::object();
    for (const auto& [k, v] : ctx.config) cfg[k] = v;
    h["config"] = cfg;
    return h;
}

std::string header_text(const ReportContext& ctx) {
    std::ostringstream os;
    os << "# " << ctx.command << " (version " << kVersion << ")\n";
    for (const auto& [k, v] : ctx.config) os << "# " << k << " = " << v << "\n";
    return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    fail(errc::parse_error, "unknown format '" + name + "'");
}

// ---------------------------------------------------------------------------
// input files

HermitianLattice lattice_from_json(const std::string& text) {
    json j = parse_text(text);
    require_schema(j);
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        fail(errc::parse_error, "missing or bad field: $.rank");
    int n = j["rank"].get<int>();
    if (!j.contains("gram") || !j["gram"].is_array() ||
        static_cast<int>(j["gram"].size()) != n)
        fail(errc::parse_error, "missing or bad field: $.gram (expected " +
                                    std::to_string(n) + " rows)");
    QMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = j["gram"][static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail(errc::parse_error,
                 "bad row at $.gram[" + std::to_string(i) + "]");
        for (int k = 0; k < n; ++k)
            g.at(i, k) = rational_field(row[static_cast<size_t>(k)],
                                        "$.gram[" + std::to_string(i) + "][" +
                                            std::to_string(k) + "]");
    }
    return HermitianLattice(g);
}

std::string lattice_to_json(const HermitianLattice& lat) {
    json j;
    j["schema"] = 1;
    j["rank"] = lat.rank();
    json rows = json::array();
    for (int i = 0; i < lat.rank(); ++i) {
        json row = json::array();
        for (int k = 0; k < lat.rank(); ++k)
            row.push_back(format_rational(lat.gram().at(i, k)));
        rows.push_back(row);
    }
    j["gram"] = rows;
    return dump(j);
}

namespace {

RepPtr rep_tree_from_json(const json& j, const std::string& where) {
    if (!j.is_object())
        fail(errc::parse_error, "expected a representation object at " + where);
    int tags = 0;
    for (const char* t : {"std", "adjoint", "dual", "sym", "wedge", "tensor",
                          "dsum", "detpow"})
        if (j.contains(t)) ++tags;
    if (tags != 1)
        fail(errc::parse_error,
             "expected exactly one representation tag at " + where);
    if (j.contains("std")) return rep_standard(j["std"].get<int>());
    if (j.contains("adjoint")) return rep_adjoint(j["adjoint"].get<int>());
    if (j.contains("dual"))
        return rep_dual(rep_tree_from_json(j["dual"], where + ".dual"));
    if (j.contains("sym")) {
        const json& s = j["sym"];
        if (!s.is_object() || !s.contains("n") || !s.contains("of"))
            fail(errc::parse_error, "bad field: " + where + ".sym");
        return rep_sym(s["n"].get<int>(),
                       rep_tree_from_json(s["of"], where + ".sym.of"));
    }
    if (j.contains("wedge")) {
        const json& s = j["wedge"];
        if (!s.is_object() || !s.contains("k") || !s.contains("of"))
            fail(errc::parse_error, "bad field: " + where + ".wedge");
        return rep_wedge(s["k"].get<int>(),
                         rep_tree_from_json(s["of"], where + ".wedge.of"));
    }
    if (j.contains("tensor")) {
        const json& s = j["tensor"];
        if (!s.is_array() || s.size() != 2)
            fail(errc::parse_error, "bad field: " + where + ".tensor");
        return rep_tensor(rep_tree_from_json(s[0], where + ".tensor[0]"),
                          rep_tree_from_json(s[1], where + ".tensor[1]"));
    }
    if (j.contains("dsum")) {
        const json& s = j["dsum"];
        if (!s.is_array() || s.size() != 2)
            fail(errc::parse_error, "bad field: " + where + ".dsum");
        return rep_direct_sum(rep_tree_from_json(s[0], where + ".dsum[0]"),
                              rep_tree_from_json(s[1], where + ".dsum[1]"));
    }
    if (j.contains("detpow")) {
        const json& s = j["detpow"];
        if (!s.is_object() || !s.contains("N") || !s.contains("k"))
            fail(errc::parse_error, "bad field: " + where + ".detpow");
        return rep_det_power(s["N"].get<int>(), s["k"].get<int>());
    }
    fail(errc::parse_error, "no representation tag at " + where);
}

} // namespace

CompactifiedRep rep_from_json(const std::string& text) {
    json j = parse_text(text);
    require_schema(j);
    CompactifiedRep rep;
    rep.tree = rep_tree_from_json(j, "$");
    rep.scale = j.contains("scale") ? rational_field(j["scale"], "$.scale")
                                    : Rational(1);
    require(rep.scale > 0, errc::parse_error, "$.scale must be positive");
    return rep;
}

PointInP point_from_json(const CompactifiedRep& rep, const std::string& text) {
    json j = parse_text(text);
    require_schema(j);
    if (j.contains("covector")) {
        const json& c = j["covector"];
        if (!c.is_array()) fail(errc::parse_error, "bad field: $.covector");
        std::vector<Integer> u;
        for (const auto& v : c) {
            if (v.is_number_integer())
                u.emplace_back(v.get<long>());
            else if (v.is_string())
                u.emplace_back(Integer(v.get<std::string>()));
            else
                fail(errc::parse_error, "bad entry in $.covector");
        }
        return make_point(rep.tree, std::move(u));
    }
    if (j.contains("matrix")) {
        const json& m = j["matrix"];
        if (!m.is_array()) fail(errc::parse_error, "bad field: $.matrix");
        int n = static_cast<int>(m.size());
        QMatrix x(n, n);
        for (int i = 0; i < n; ++i) {
            const json& row = m[static_cast<size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                fail(errc::parse_error,
                     "bad row at $.matrix[" + std::to_string(i) + "]");
            for (int k = 0; k < n; ++k)
                x.at(i, k) = rational_field(row[static_cast<size_t>(k)],
                                            "$.matrix[..][..]");
        }
        return point_from_matrix(rep.tree, x);
    }
    fail(errc::parse_error, "point needs $.covector or $.matrix");
}

namespace {

InvariantGeneratorSet gens_from_object(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("generators"))
        fail(errc::parse_error, "generator set needs " + where + ".vars and " +
                                    where + ".generators");
    InvariantGeneratorSet out;
    out.nvars = j["vars"].get<int>();
    for (const auto& g : j["generators"]) {
        if (!g.is_object() || !g.contains("monomials"))
            fail(errc::parse_error, "bad generator in " + where);
        MPoly p(out.nvars);
        for (const auto& m : g["monomials"]) {
            if (!m.is_object() || !m.contains("exps") || !m.contains("coef"))
                fail(errc::parse_error, "bad monomial in " + where);
            std::vector<int> exps = m["exps"].get<std::vector<int>>();
            if (static_cast<int>(exps.size()) != out.nvars)
                fail(errc::parse_error, "monomial exponent length mismatch in " + where);
            p.add_term(exps, rational_field(m["coef"], where + "...coef"));
        }
        require(!p.is_zero(), errc::parse_error, "zero generator in " + where);
        require(p.is_homogeneous(), errc::parse_error,
                "generators must be homogeneous (" + where + ")");
        require(p.has_integer_coefficients(), errc::parse_error,
                "generators must have integer coefficients (" + where + ")");
        int deg = g.contains("degree") ? g["degree"].get<int>() : p.total_degree();
        require(deg == p.total_degree(), errc::parse_error,
                "declared degree differs from the polynomial degree (" + where + ")");
        require(deg >= 1, errc::parse_error, "generator degrees must be positive");
        out.gens.push_back(InvariantGenerator{std::move(p), deg});
    }
    require(!out.gens.empty(), errc::parse_error, "empty generator list in " + where);
    return out;
}

} // namespace

InvariantGeneratorSet gens_from_json(const std::string& text) {
    json j = parse_text(text);
    require_schema(j);
    return gens_from_object(j, "$");
}

std::vector<std::optional<InvariantGeneratorSet>> component_gens_from_json(
    const std::string& text) {
    json j = parse_text(text);
    require_schema(j);
    if (!j.contains("components") || !j["components"].is_array())
        fail(errc::parse_error, "missing field: $.components");
    std::vector<std::optional<InvariantGeneratorSet>> out;
    int i = 0;
    for (const auto& c : j["components"]) {
        if (c.is_null())
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(gens_from_object(
                c, "$.components[" + std::to_string(i) + "]"));
        ++i;
    }
    return out;
}

OnePS one_ps_from_json(const std::string& text) {
    json j = parse_text(text);
    require_schema(j);
    if (!j.contains("r") || !j["r"].is_array())
        fail(errc::parse_error, "missing field: $.r");
    return make_one_ps(j["r"].get<std::vector<long>>());
}

// ---------------------------------------------------------------------------
// suites

BoundSuiteResult run_bound_suite(const CompactifiedRep& rep, int count,
                                 std::uint64_t seed) {
    require(rep.tree->kind == RepTree::Kind::adjoint, errc::invalid_argument,
            "batch bound experiments are defined for the adjoint representation");
    int n = rep.tree->group_rank;
    InvariantGeneratorSet gens = adjoint_invariants(n);
    Rng rng(seed);
    BoundSuiteResult res;
    res.count = count;
    for (int i = 0; i < count; ++i) {
        HermitianLattice lat(random_spd_gram(rng, n, 50, 50));
        QMatrix x(n, n);
        do {
            x = random_traceless(rng, n, 9, 4);
        } while (!adjoint_semistable(x));
        PointInP p = point_from_matrix(rep.tree, x);
        BoundReport br = check_height_floor(lat, rep, p, gens);
        BoundSuiteRow row;
        row.index = i;
        row.satisfied = br.satisfied;
        row.height = br.height.to_double();
        row.floor = br.height.to_double() - br.margin;
        res.rows.push_back(row);
        if (!br.satisfied) ++res.failures;
    }
    return res;
}

DriftSuiteResult run_drift_suite(const CompactifiedRep& rep, int count,
                                 int steps, long base, std::uint64_t seed) {
    require(rep.tree->kind == RepTree::Kind::adjoint, errc::invalid_argument,
            "batch drift experiments are defined for the adjoint representation");
    int n = rep.tree->group_rank;
    Rng rng(seed);
    DriftSuiteResult res;
    res.count = count;
    HermitianLattice lat(QMatrix::identity(n));
    for (int i = 0; i < count; ++i) {
        QMatrix x = random_nilpotent(rng, n, 6);
        PointInP p = point_from_matrix(rep.tree, x);
        DriftSuiteRow row;
        row.index = i;
        auto cert = instability_search(p, 64, seed ^ (0x9e37u + i));
        row.certificate_found = cert.has_value();
        if (cert) {
            PointInP moved = make_point(rep.tree, cert->translated);
            DriftReport dr = drift_sequence(moved, cert->lambda, base, steps, lat, rep);
            row.degrees_constant = true; // drift_sequence checks exactly
            row.constant_from = dr.constant_from;
            row.single_exponent = dr.single_exponent;
            row.asymptotic_step = dr.asymptotic_step.to_double();
            int dec = steps;
            for (int k2 = steps; k2 >= 1; --k2) {
                if (lv_compare(dr.heights[static_cast<size_t>(k2)],
                               dr.heights[static_cast<size_t>(k2) - 1]) ==
                    Ordering::LT)
                    dec = k2 - 1;
                else
                    break;
            }
            row.decreasing_from = dec == steps ? -1 : dec;
            row.ok = row.certificate_found && row.decreasing_from >= 0;
        }
        if (!row.ok) ++res.failures;
        res.rows.push_back(row);
    }
    return res;
}

// ---------------------------------------------------------------------------
// rendering

std::string render_degree_report(const ReportContext& ctx,
                                 const HermitianLattice& lat) {
    LogValue d = lat.arakelov_degree();
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        j["result"] = {{"rank", lat.rank()},
                       {"degree", d.to_string()},
                       {"degree_float", num_float(d, ctx.float_digits)}};
        return dump(j);
    }
    if (ctx.format == OutputFormat::csv) {
        std::ostringstream os;
        os << "key,exact,float\n";
        os << "degree," << d.to_string() << "," << fmt_float(d, ctx.float_digits)
           << "\n";
        return os.str();
    }
    return header_text(ctx) + "deg = " + d.to_string() + " (" +
           fmt_float(d, ctx.float_digits) + ")\n";
}

std::string render_height_report(const ReportContext& ctx, const LogValue& h) {
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        j["result"] = {{"height", h.to_string()},
                       {"height_float", num_float(h, ctx.float_digits)}};
        return dump(j);
    }
    if (ctx.format == OutputFormat::csv) {
        std::ostringstream os;
        os << "key,exact,float\n";
        os << "height," << h.to_string() << "," << fmt_float(h, ctx.float_digits)
           << "\n";
        return os.str();
    }
    return header_text(ctx) + "h = " + h.to_string() + " (" +
           fmt_float(h, ctx.float_digits) + ")\n";
}

std::string render_rep_info(const ReportContext& ctx, const CompactifiedRep& rep) {
    WeightSystem ws = rep_weights(*rep.tree);
    auto degs = homogeneity_degrees(*rep.tree);
    long a = 0;
    bool homog = is_homogeneous(*rep.tree, &a);
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        json r;
        r["group_rank"] = rep.tree->group_rank;
        r["dimension"] = rep_dimension(*rep.tree);
        r["scale"] = format_rational(rep.scale);
        r["homogeneous"] = homog;
        r["degrees"] = std::vector<long>(degs.begin(), degs.end());
        json basis = json::array();
        for (size_t i = 0; i < ws.weights.size(); ++i)
            basis.push_back(
                {{"label", ws.labels[i]}, {"weight", ws.weights[i]}});
        r["basis"] = basis;
        j["result"] = r;
        return dump(j);
    }
    std::ostringstream os;
    if (ctx.format == OutputFormat::text) os << header_text(ctx);
    os << (ctx.format == OutputFormat::csv ? "index,label,weight\n" : "");
    if (ctx.format == OutputFormat::text) {
        os << "group rank N = " << rep.tree->group_rank
           << ", dim W = " << rep_dimension(*rep.tree)
           << ", scale = " << format_rational(rep.scale) << "\n";
        os << "homogeneous: " << (homog ? "yes (degree " + std::to_string(a) + ")"
                                        : "no")
           << "\n";
    }
    for (size_t i = 0; i < ws.weights.size(); ++i) {
        if (ctx.format == OutputFormat::csv) {
            os << i << "," << ws.labels[i] << ",";
            for (size_t k = 0; k < ws.weights[i].size(); ++k)
                os << (k ? " " : "") << ws.weights[i][k];
            os << "\n";
        } else {
            os << "  " << ws.labels[i] << " : (";
            for (size_t k = 0; k < ws.weights[i].size(); ++k)
                os << (k ? "," : "") << ws.weights[i][k];
            os << ")\n";
        }
    }
    return os.str();
}

namespace {

json one_ps_json(const OnePS& l) { return json(l.r); }

json covector_json(const std::vector<Integer>& u) {
    json a = json::array();
    for (const auto& z : u) {
        if (z.fits_slong_p())
            a.push_back(z.get_si());
        else
            a.push_back(z.get_str());
    }
    return a;
}

} // namespace

std::string render_semistable_report(const ReportContext& ctx,
                                     const SemistableAnalysis& an) {
    json j = header(ctx);
    json torus;
    torus["semistable"] = an.torus.semistable;
    torus["active_weights"] = an.torus.active;
    if (an.torus.semistable) {
        json comb = json::array();
        for (const auto& c : an.torus.combination)
            comb.push_back(format_rational(c));
        torus["combination"] = comb;
        torus["line_coordinate"] = format_rational(an.torus.line_coord);
    } else {
        torus["separating"] = one_ps_json(an.torus.separating);
    }
    j["torus"] = torus;
    if (an.adjoint_decision.has_value())
        j["adjoint_semistable"] = *an.adjoint_decision;
    if (an.invariant_checked) {
        if (an.invariant.has_value())
            j["invariant_certificate"] = {
                {"index", an.invariant->first},
                {"value", format_rational(an.invariant->second)}};
        else
            j["invariant_certificate"] = nullptr;
    }
    if (an.instability_searched) {
        json s;
        s["budget"] = an.budget;
        s["seed"] = an.seed;
        if (an.instability.has_value()) {
            json g = json::array();
            for (int r = 0; r < an.instability->g.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < an.instability->g.cols(); ++c)
                    row.push_back(format_rational(an.instability->g.at(r, c)));
                g.push_back(row);
            }
            s["found"] = true;
            s["g"] = g;
            s["lambda"] = one_ps_json(an.instability->lambda);
            s["translated_covector"] = covector_json(an.instability->translated);
        } else {
            s["found"] = false;
            s["note"] = "inconclusive: absence of a certificate proves nothing";
        }
        j["instability_search"] = s;
    }
    if (ctx.format == OutputFormat::json) return dump(j);
    // text/csv fall back to a compact text form
    std::ostringstream os;
    os << header_text(ctx);
    os << "torus-semistable: " << (an.torus.semistable ? "yes" : "no") << "\n";
    if (!an.torus.semistable) {
        os << "separating lambda = (";
        for (size_t i = 0; i < an.torus.separating.r.size(); ++i)
            os << (i ? "," : "") << an.torus.separating.r[i];
        os << ")\n";
    }
    if (an.adjoint_decision.has_value())
        os << "adjoint-semistable: " << (*an.adjoint_decision ? "yes" : "no")
           << "\n";
    if (an.invariant_checked)
        os << "invariant certificate: "
           << (an.invariant ? "generator " + std::to_string(an.invariant->first) +
                                  " = " + format_rational(an.invariant->second)
                            : std::string("none"))
           << "\n";
    if (an.instability_searched)
        os << "instability search: "
           << (an.instability ? "certificate found" : "inconclusive") << "\n";
    return os.str();
}

std::string render_bound_report(const ReportContext& ctx, const BoundReport& br) {
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        json r;
        r["kind"] = br.mixed ? "mixed" : "homogeneous";
        r["height"] = br.height.to_string();
        r["height_float"] = num_float(br.height, ctx.float_digits);
        r["floor"] = {{"slope_degree", br.slope_degree},
                      {"group_rank", br.group_rank},
                      {"lattice_degree", br.lattice_degree.to_string()},
                      {"constant", br.constant.to_string()}};
        r["satisfied"] = br.satisfied;
        r["margin"] = num_double(br.margin, ctx.float_digits);
        r["witness"] = br.witness;
        if (br.mixed) {
            r["component"] = br.component;
            r["used_projection"] = br.used_projection;
            r["projected_height"] = br.projected_height.to_string();
        }
        j["result"] = r;
        return dump(j);
    }
    std::ostringstream os;
    if (ctx.format == OutputFormat::text) os << header_text(ctx);
    os << "height = " << br.height.to_string() << " ("
       << fmt_float(br.height, ctx.float_digits) << ")\n";
    os << "floor  = (" << br.slope_degree << "/" << br.group_rank << ")*deg + C, "
       << "deg = " << br.lattice_degree.to_string()
       << ", C = " << br.constant.to_string() << " ("
       << fmt_float(br.constant, ctx.float_digits) << ")\n";
    os << "satisfied: " << (br.satisfied ? "yes" : "NO") << "  margin = "
       << fmt_double(br.margin, ctx.float_digits) << "\n";
    os << "witness: " << br.witness << "\n";
    return os.str();
}

std::string render_drift_report(const ReportContext& ctx, const DriftReport& dr) {
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        json r;
        r["certificate_ok"] = dr.certificate_ok;
        r["asymptotic_step"] = dr.asymptotic_step.to_string();
        r["asymptotic_step_float"] =
            num_float(dr.asymptotic_step, ctx.float_digits);
        r["single_exponent"] = dr.single_exponent;
        r["constant_from"] = dr.constant_from;
        json rows = json::array();
        for (size_t i = 0; i < dr.heights.size(); ++i)
            rows.push_back({{"n", dr.exponents[i]},
                            {"height", dr.heights[i].to_string()},
                            {"height_float",
                             num_float(dr.heights[i], ctx.float_digits)},
                            {"degree", dr.degrees[i].to_string()}});
        r["sequence"] = rows;
        j["result"] = r;
        return dump(j);
    }
    std::ostringstream os;
    if (ctx.format == OutputFormat::text) {
        os << header_text(ctx);
        os << "certificate_ok: " << (dr.certificate_ok ? "yes" : "NO (not destabilizing)")
           << ", asymptotic step = " << dr.asymptotic_step.to_string() << " ("
           << fmt_float(dr.asymptotic_step, ctx.float_digits) << ")\n";
    }
    os << "n,height_float,height_exact,degree_exact\n";
    for (size_t i = 0; i < dr.heights.size(); ++i)
        os << dr.exponents[i] << "," << fmt_float(dr.heights[i], ctx.float_digits)
           << "," << dr.heights[i].to_string() << "," << dr.degrees[i].to_string()
           << "\n";
    return os.str();
}

std::string render_flag_table(const ReportContext& ctx, int n) {
    require(n >= 1 && n <= 12, errc::invalid_argument,
            "flag tables are enumerated for 1 <= N <= 12");
    auto comps = compositions(n);
    struct Row {
        std::string parts;
        long d;
        Integer delta;
        Rational a;
        std::optional<Rational> closed_variant;
        Rational a_full;
    };
    std::vector<Row> rows;
    for (const auto& p : comps) {
        Row r;
        std::ostringstream ps;
        ps << "(";
        for (size_t i = 0; i < p.parts.size(); ++i)
            ps << (i ? "," : "") << p.parts[i];
        ps << ")";
        r.parts = ps.str();
        r.d = flag_dimension(p);
        r.delta = flag_degree(p);
        r.a = constant_A(p);
        r.closed_variant = closed_form_degree_variant(p);
        r.a_full = constant_A_full_product(p);
        rows.push_back(std::move(r));
    }
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        json arr = json::array();
        for (const auto& r : rows) {
            json e;
            e["N"] = n;
            e["partition"] = r.parts;
            e["d"] = r.d;
            e["delta"] = r.delta.get_str();
            e["A"] = format_rational(r.a);
            e["A_float"] = num_double(r.a.get_d(), ctx.float_digits);
            e["closed_form_degree_variant"] =
                r.closed_variant ? json(format_rational(*r.closed_variant))
                                 : json(nullptr);
            e["A_full_product"] = format_rational(r.a_full);
            e["B"] = "not computed";
            arr.push_back(e);
        }
        j["rows"] = arr;
        j["notes"] = json::array(
            {"values are bound constants, not heights",
             "B requires the compactification constant of the cycle-space "
             "embedding and is not computed here",
             "closed_form_degree_variant differs from delta by a factor of d "
             "for Grassmannians and is reported for comparison only",
             "A_full_product includes the final i = k factor and therefore "
             "vanishes; A uses i <= k-1"});
        return dump(j);
    }
    std::ostringstream os;
    if (ctx.format == OutputFormat::text) os << header_text(ctx);
    os << "N,partition,d,delta,A,A_float,closed_form_degree_variant,"
          "A_full_product,B\n";
    for (const auto& r : rows) {
        os << n << ",\"" << r.parts << "\"," << r.d << "," << r.delta.get_str()
           << "," << format_rational(r.a) << ","
           << fmt_double(r.a.get_d(), ctx.float_digits) << ",";
        os << (r.closed_variant ? format_rational(*r.closed_variant) : "");
        os << "," << format_rational(r.a_full) << ",not computed\n";
    }
    if (ctx.format == OutputFormat::text) {
        os << "# bound constants, not heights\n";
        os << "# B not computed: it needs the compactification constant of "
              "the cycle-space embedding\n";
        os << "# closed_form_degree_variant disagrees with delta (factor d on "
              "Grassmannians); reported, not substituted\n";
        os << "# A_full_product includes the final i = k factor and vanishes\n";
    }
    return os.str();
}

std::string render_bound_suite(const ReportContext& ctx, const BoundSuiteResult& r) {
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        j["count"] = r.count;
        j["failures"] = r.failures;
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back({{"index", row.index},
                            {"satisfied", row.satisfied},
                            {"height_float", num_double(row.height, ctx.float_digits)},
                            {"floor_float", num_double(row.floor, ctx.float_digits)}});
        j["rows"] = rows;
        return dump(j);
    }
    std::ostringstream os;
    if (ctx.format == OutputFormat::text) {
        os << header_text(ctx);
        os << "instances: " << r.count << ", failures: " << r.failures << "\n";
    }
    os << "index,satisfied,height_float,floor_float\n";
    for (const auto& row : r.rows)
        os << row.index << "," << (row.satisfied ? 1 : 0) << ","
           << fmt_double(row.height, ctx.float_digits) << ","
           << fmt_double(row.floor, ctx.float_digits) << "\n";
    return os.str();
}

std::string render_drift_suite(const ReportContext& ctx, const DriftSuiteResult& r) {
    if (ctx.format == OutputFormat::json) {
        json j = header(ctx);
        j["count"] = r.count;
        j["failures"] = r.failures;
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back({{"index", row.index},
                            {"certificate_found", row.certificate_found},
                            {"degrees_constant", row.degrees_constant},
                            {"decreasing_from", row.decreasing_from},
                            {"constant_from", row.constant_from},
                            {"single_exponent", row.single_exponent},
                            {"asymptotic_step_float",
                             num_double(row.asymptotic_step, ctx.float_digits)},
                            {"ok", row.ok}});
        j["rows"] = rows;
        return dump(j);
    }
    std::ostringstream os;
    if (ctx.format == OutputFormat::text) {
        os << header_text(ctx);
        os << "instances: " << r.count << ", failures: " << r.failures << "\n";
    }
    os << "index,certificate_found,decreasing_from,constant_from,single_exponent,"
          "asymptotic_step_float,ok\n";
    for (const auto& row : r.rows)
        os << row.index << "," << (row.certificate_found ? 1 : 0) << ","
           << row.decreasing_from << "," << row.constant_from << ","
           << (row.single_exponent ? 1 : 0) << ","
           << fmt_double(row.asymptotic_step, ctx.float_digits) << ","
           << (row.ok ? 1 : 0) << "\n";
    return os.str();
}

} // namespace heightlab
