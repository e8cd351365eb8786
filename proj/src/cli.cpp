#include "psb/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psb/bounds.hpp"
#include "psb/census.hpp"
#include "psb/enumeration.hpp"
#include "psb/svg.hpp"

namespace psb {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

json quad_json(const Quad& q, int digits) {
    return json{{"exact", q.str()}, {"decimal", q.decimal(digits)}};
}

Name need_name(const std::string& id) {
    auto n = parse_name(id);
    if (!n) throw usage_error("unknown construction '" + id + "' (rect4, hex6, rect8, rect12, hex12)");
    return *n;
}

void emit(std::ostream& out, const std::string& payload, const std::string& path) {
    if (path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot open output file: " + path);
    f << payload;
}

struct Common {
    std::string construction;
    std::string format = "json";
    std::string output;
    int precision = 50;
    int threads = 1;
};

int precision_default() {
    if (const char* env = std::getenv("PSB_PRECISION")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= 1000) return v;
    }
    return 50;
}

json report_json(const AsymptoticReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.lambda_rows)
        rows.push_back(json{{"m", r.m},
                            {"i", r.multiplicity},
                            {"observed", r.observed},
                            {"coefficient", r.coefficient.str()},
                            {"residual", r.residual.str()},
                            {"ok", r.ok}});
    json trows = json::array();
    for (const auto& r : rep.type_rows)
        trows.push_back(json{{"m", r.m},
                             {"signature", signature_bundles(r.signature)},
                             {"observed", r.observed},
                             {"density", r.density.str()},
                             {"residual", r.residual.str()},
                             {"ok", r.ok}});
    return json{{"construction", to_string(rep.name)},
                {"lambda", rows},
                {"types", trows},
                {"failures", rep.failures},
                {"pass", rep.pass},
                {"version", kVersion}};
}

json census_json(const CrossingCensus& c, const Arrangement& arr) {
    json lam = json::object();
    for (const auto& [i, count] : c.lambda) lam[std::to_string(i)] = count;
    json sigs = json::array();
    for (const auto& [mask, count] : c.signature_counts)
        sigs.push_back(json{{"bundles", signature_bundles(mask)}, {"count", count}});
    Conservation cons = conservation(c, arr);
    return json{{"construction", to_string(c.name)},
                {"m", c.m},
                {"lambda", lam},
                {"signatures", sigs},
                {"total_points", c.total_points},
                {"conservation", json{{"lhs", cons.lhs}, {"rhs", cons.rhs}, {"ok", cons.ok()}}},
                {"version", kVersion}};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact slope-bundle arrangements: censuses, counts and bounds"};
    app.require_subcommand(1);

    Common common;
    common.precision = precision_default();

    // construct
    auto* sc_construct = app.add_subcommand("construct", "generate an arrangement");
    int m = 0;
    sc_construct->add_option("--construction", common.construction)->required();
    sc_construct->add_option("--m", m, "lines per bundle (odd, >= 3)")->required();

    // census
    auto* sc_census = app.add_subcommand("census", "exact crossing census");
    std::string m_list_str;
    bool check = false;
    int slack = 8;
    sc_census->add_option("--construction", common.construction)->required();
    sc_census->add_option("--m", m);
    sc_census->add_option("--m-list", m_list_str, "comma-separated m values; implies --check");
    sc_census->add_flag("--check", check, "compare against the reference densities");
    sc_census->add_option("--slack", slack, "residual allowance per m (default 8)");

    // areas
    auto* sc_areas = app.add_subcommand("areas", "exact coverage areas");
    sc_areas->add_option("--construction", common.construction)->required();

    // types
    auto* sc_types = app.add_subcommand("types", "non-grid crossing signatures");
    sc_types->add_option("--construction", common.construction)->required();
    sc_types->add_option("--m", m)->required();

    // enumerate
    auto* sc_enum = app.add_subcommand("enumerate", "A_n / B_n counts");
    std::string what = "A";
    int n_arg = 0;
    int cap_words = 6, cap_classes = 8;
    bool timing = false;
    sc_enum->add_option("--what", what, "A | words | B | both");
    sc_enum->add_option("--n", n_arg)->required();
    sc_enum->add_option("--cap-words", cap_words);
    sc_enum->add_option("--cap-classes", cap_classes);
    sc_enum->add_flag("--timing", timing, "include wall-clock seconds (non-deterministic)");

    // tilings
    auto* sc_til = app.add_subcommand("tilings", "boxed plane partition counts");
    long ti = -1, tj = -1, tk = -1;
    long box_cap = 64;
    bool oracle = false;
    std::string trace_str;
    sc_til->add_option("--i", ti);
    sc_til->add_option("--j", tj);
    sc_til->add_option("--k", tk);
    sc_til->add_flag("--oracle", oracle, "cross-check against the direct box count");
    sc_til->add_option("--box-cap", box_cap);
    sc_til->add_option("--trace", trace_str, "comma-separated n values for ln P(n,n,n)/n^2");

    // bounds
    auto* sc_bounds = app.add_subcommand("bounds", "lower/upper bound evaluations");
    std::string which = "constants";
    long bn = 0;
    sc_bounds->add_option("--which", which, "constants | knuth | matousek | fv | upper | unrolled");
    sc_bounds->add_option("--n", bn);
    sc_bounds->add_option("--construction", common.construction);

    // render
    auto* sc_render = app.add_subcommand("render", "SVG figure");
    RenderOptions ropt;
    sc_render->add_option("--construction", common.construction)->required();
    sc_render->add_option("--m", m)->required();
    sc_render->add_option("--width", ropt.width);
    sc_render->add_flag("--markers", ropt.markers);
    sc_render->add_option("--marker-min", ropt.marker_min);

    for (auto* sc : {sc_construct, sc_census, sc_areas, sc_types, sc_enum, sc_til, sc_bounds,
                     sc_render}) {
        sc->add_option("--format", common.format, "json | csv | svg");
        sc->add_option("--output", common.output, "write to file instead of stdout");
        sc->add_option("--precision", common.precision, "decimal digits for bound output");
        sc->add_option("--threads", common.threads, "census worker threads");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    }

    if (sc_construct->parsed()) {
        Name name = need_name(common.construction);
        Arrangement arr = build(name, m);
        json lines = json::array();
        for (const Line& l : arr.lines)
            lines.push_back(json{{"bundle", l.bundle},
                                 {"index", l.index_in_bundle},
                                 {"alpha", l.alpha.str()},
                                 {"beta", l.beta.str()},
                                 {"gamma", l.gamma.str()}});
        json doc{{"construction", to_string(name)},
                 {"k", arr.k()},
                 {"m", arr.m},
                 {"lines", lines},
                 {"version", kVersion}};
        emit(out, doc.dump(2) + "\n", common.output);
        return 0;
    }

    if (sc_census->parsed()) {
        Name name = need_name(common.construction);
        if (!m_list_str.empty()) {
            AsymptoticReport rep = verify_asymptotics(name, parse_int_list(m_list_str),
                                                      Rat(slack), common.threads);
            emit(out, report_json(rep).dump(2) + "\n", common.output);
            return rep.pass ? 0 : 1;
        }
        if (m == 0) throw usage_error("census needs --m or --m-list");
        Arrangement arr = build(name, m);
        CrossingCensus c = crossing_census(arr, common.threads);
        bool ok = conservation(c, arr).ok();
        if (check) {
            AsymptoticReport rep = verify_asymptotics(name, {m}, Rat(slack), common.threads);
            ok = ok && rep.pass;
        }
        if (common.format == "csv") {
            emit(out, census_csv(c), common.output);
        } else {
            emit(out, census_json(c, arr).dump(2) + "\n", common.output);
        }
        return ok ? 0 : 1;
    }

    if (sc_areas->parsed()) {
        Name name = need_name(common.construction);
        const ConstructionSpec& spec = get_construction(name);
        auto computed = coverage_areas(name);
        bool match = true;
        for (const auto& [i, a] : spec.area_table) {
            auto it = computed.find(i);
            if (it == computed.end() || !(it->second == a)) match = false;
        }
        for (const auto& [i, a] : computed)
            if (i >= 3 && !spec.area_table.count(i)) match = false;
        json areas = json::object();
        for (const auto& [i, a] : computed) areas[std::to_string(i)] = quad_json(a, 30);
        json lam = json::object();
        for (const auto& [i, c] : predicted_lambda_coefficients(name))
            lam[std::to_string(i)] = c.str();
        json doc{{"construction", to_string(name)},
                 {"cell_area", quad_json(spec.cell_area, 30)},
                 {"areas", areas},
                 {"lambda_coefficients", lam},
                 {"matches_reference", match},
                 {"version", kVersion}};
        emit(out, doc.dump(2) + "\n", common.output);
        return match ? 0 : 1;
    }

    if (sc_types->parsed()) {
        Name name = need_name(common.construction);
        const ConstructionSpec& spec = get_construction(name);
        Arrangement arr = build(name, m);
        CrossingCensus c = crossing_census(arr, common.threads);
        auto observed = classify_types(c, spec);
        bool pass = true;
        json rows = json::array();
        Rat bound = Rat(8) * Rat(m);
        for (const auto& t : spec.types) {
            auto it = observed.find(t.mask);
            unsigned long long count = it == observed.end() ? 0 : it->second;
            Quad density = t.w / spec.cell_area;
            Rat expect = density.rational() * Rat(m) * Rat(m);
            Rat residual = Rat(static_cast<long>(count)) - expect;
            bool ok = residual.abs() <= bound;
            if (it == observed.end() || !ok) pass = false;
            rows.push_back(json{{"signature", signature_bundles(t.mask)},
                                {"observed", count},
                                {"expected_density", density.rational().str()},
                                {"residual", residual.str()},
                                {"ok", ok}});
            if (it != observed.end()) observed.erase(it);
        }
        json extras = json::array();
        for (const auto& [mask, count] : observed) {
            extras.push_back(json{{"signature", signature_bundles(mask)}, {"count", count}});
            pass = false;
        }
        json doc{{"construction", to_string(name)},
                 {"m", m},
                 {"types", rows},
                 {"unexpected", extras},
                 {"pass", pass},
                 {"version", kVersion}};
        emit(out, doc.dump(2) + "\n", common.output);
        return pass ? 0 : 1;
    }

    if (sc_enum->parsed()) {
        auto t0 = std::chrono::steady_clock::now();
        json doc{{"n", n_arg}, {"version", kVersion}};
        if (what == "A") {
            CountResult r = stanley_A(n_arg);
            doc["A_n"] = r.value.get_str();
            doc["method"] = r.method_str();
        } else if (what == "words") {
            CountResult r = count_reduced_words(n_arg, cap_words);
            doc["A_n"] = r.value.get_str();
            doc["method"] = r.method_str();
        } else if (what == "B") {
            CountResult r = count_commutation_classes(n_arg, cap_classes);
            doc["B_n"] = r.value.get_str();
            doc["method"] = r.method_str();
        } else if (what == "both") {
            doc["A_n"] = stanley_A(n_arg).value.get_str();
            CountResult r = count_commutation_classes(n_arg, cap_classes);
            doc["B_n"] = r.value.get_str();
            doc["method"] = r.method_str();
        } else {
            throw usage_error("--what must be A, words, B or both");
        }
        if (timing) {
            auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
            doc["seconds"] = dt.count();
        }
        emit(out, doc.dump(2) + "\n", common.output);
        return 0;
    }

    if (sc_til->parsed()) {
        if (!trace_str.empty()) {
            std::vector<int> ns = parse_int_list(trace_str);
            auto rows = fv_constant_trace(ns, 30);
            json arr = json::array();
            for (size_t i = 0; i < ns.size(); ++i)
                arr.push_back(json{{"n", ns[i]}, {"log2_P_over_n2", rows[i]}});
            emit(out, json{{"trace", arr}, {"version", kVersion}}.dump(2) + "\n", common.output);
            return 0;
        }
        if (ti < 0 || tj < 0 || tk < 0) throw usage_error("tilings needs --i --j --k or --trace");
        CountResult p = macmahon_P(ti, tj, tk);
        json doc{{"i", ti}, {"j", tj}, {"k", tk},
                 {"P", p.value.get_str()}, {"method", p.method_str()}, {"version", kVersion}};
        int code = 0;
        if (oracle) {
            CountResult o = count_plane_partitions_box(static_cast<int>(ti), static_cast<int>(tj),
                                                       static_cast<int>(tk), box_cap);
            doc["oracle"] = o.value.get_str();
            doc["oracle_matches"] = (o.value == p.value);
            if (o.value != p.value) code = 1;
        }
        emit(out, doc.dump(2) + "\n", common.output);
        return code;
    }

    if (sc_bounds->parsed()) {
        int digits = common.precision;
        if (which == "constants") {
            json arr = json::array();
            for (Name name : all_constructions()) {
                LogBound c = construction_constant(name);
                json row{{"name", to_string(name)},
                         {"log2_terms", c.exact_str()},
                         {"decimal", c.decimal(digits)}};
                if (auto exact = c.exact_value()) row["exact"] = Rat(*exact).str();
                arr.push_back(row);
            }
            emit(out, json{{"constants", arr}, {"version", kVersion}}.dump(2) + "\n",
                 common.output);
            return 0;
        }
        if (bn <= 0) throw usage_error("bounds needs --n");
        LogBound lb;
        Name name = Name::rect4;
        if (which == "knuth") lb = knuth_lower(bn);
        else if (which == "matousek") lb = matousek_lower(bn);
        else if (which == "fv") lb = fv_lower(bn);
        else if (which == "upper") lb = knuth_upper(bn);
        else if (which == "unrolled") {
            if (common.construction.empty())
                throw usage_error("bounds --which unrolled needs --construction");
            name = need_name(common.construction);
            lb = unrolled_lower(name, bn, common.threads).log2_lower;
        } else {
            throw usage_error("--which must be constants, knuth, matousek, fv, upper or unrolled");
        }
        Ival norm = lb.eval(digits).div_int(mpz_class(bn) * bn);
        bool lower = lb.direction == LogBound::Direction::lower;
        json doc{{"which", which},
                 {"n", bn},
                 {lower ? "log2_lower" : "log2_upper", lb.exact_str()},
                 {"decimal", lb.decimal(digits)},
                 {"normalized", lower ? norm.decimal_lower(digits) : norm.decimal_upper(digits)},
                 {"version", kVersion}};
        if (which == "unrolled") doc["construction"] = to_string(name);
        emit(out, doc.dump(2) + "\n", common.output);
        return 0;
    }

    if (sc_render->parsed()) {
        Name name = need_name(common.construction);
        Arrangement arr = build(name, m);
        ropt.threads = common.threads;
        emit(out, render_svg(arr, ropt), common.output);
        return 0;
    }

    err << "no subcommand given\n";
    return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace psb
