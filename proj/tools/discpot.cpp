#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "discpot/tables.hpp"
#include "json.hpp"

using namespace discpot;
using nlohmann::json;

namespace {

// ---- output helpers ----------------------------------------------------

std::string rational_text(const Rational& r) { return r.get_str(); }

json series_to_json(const TruncatedSeries& s) {
    json j;
    j["small_variables"] = s.spec().small_names;
    j["phase_variables"] = s.spec().phase_names;
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json t;
        t["exponents"] = e;
        t["value"] = rational_text(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

std::string series_csv(const TruncatedSeries& s) {
    std::ostringstream out;
    const VariableSpec& spec = s.spec();
    for (int i = 0; i < spec.arity(); ++i) out << spec.name_of(i) << ",";
    out << "value\n";
    for (const auto& [e, c] : s.terms()) {
        for (int x : e) out << x << ",";
        out << rational_text(c) << "\n";
    }
    return out.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw SeriesError("cannot open output file " + out_path);
    f << text;
}

std::string format_series(const TruncatedSeries& s, const std::string& format) {
    if (format == "pretty") return s.to_pretty() + "\n";
    if (format == "csv") return series_csv(s);
    if (format == "json") return series_to_json(s).dump(2) + "\n";
    return s.to_text();
}

// ---- configuration -----------------------------------------------------

struct CommonOpts {
    std::string geometry = "c3";
    std::string config_path;
    int q_total = -1;
    int uv_max = -1;
    int z_window = -1;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--geometry", o.geometry,
                    "builtin geometry name (c3, kp2-inner, kp2-outer, kp3, surface-a0, abelian)");
    cmd->add_option("--config", o.config_path, "JSON geometry config file");
    cmd->add_option("--q-total", o.q_total, "override: max total Kahler degree");
    cmd->add_option("--uv-max", o.uv_max, "override: max uv exponent");
    cmd->add_option("--z-window", o.z_window, "override: symmetric z exponent window");
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

int env_int(const char* name) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : -1;
}

std::string canonical_name(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "local-surface-a0" || s == "a0") s = "surface-a0";
    if (s == "abelian-family") s = "abelian";
    return s;
}

GeometryCase resolve_geometry(const CommonOpts& o) {
    GeometryCase g = o.config_path.empty() ? builtin_geometry(canonical_name(o.geometry))
                                           : geometry_from_config_file(o.config_path);
    Truncation& t = g.default_trunc;
    auto apply = [&](int flag, int env, const char* cap_name, bool window) {
        int v = flag >= 0 ? flag : env;
        if (v < 0) return;
        if (window) {
            t.z_window = v;
        } else if (cap_name) {
            // Adjust the total so the per-variable override is effective.
            int old = t.per_small_max.count(cap_name) ? t.per_small_max[cap_name] : 0;
            t.per_small_max[cap_name] = v;
            t.small_total_max += v - old;
        }
    };
    apply(o.uv_max, env_int("DISCPOT_UV_MAX"), "uv", false);
    apply(o.z_window, env_int("DISCPOT_Z_WINDOW"), nullptr, true);
    int qt = o.q_total >= 0 ? o.q_total : env_int("DISCPOT_Q_TOTAL");
    if (qt >= 0) {
        int uv = t.per_small_max.count("uv") ? t.per_small_max["uv"] : 0;
        t.small_total_max = qt + uv;
        if (g.kind == GeometryCase::Kind::Toric && g.data.num_generators() == 1)
            t.per_small_max["q"] = qt;
        if (g.kind == GeometryCase::Kind::Surface) t.per_small_max["q"] = qt;
    }
    if (t.small_total_max < 0 || t.z_window < 0)
        throw ToricError("truncation bounds must be nonnegative");
    return g;
}

// ---- subcommand bodies ---------------------------------------------------

int cmd_mirror_map(const CommonOpts& o, int order, bool as_json) {
    GeometryCase g = resolve_geometry(o);
    if (g.kind != GeometryCase::Kind::Toric)
        throw ToricError("mirror-map requires a toric geometry");
    MirrorMap mm = compute_mirror_map(g.data, order);
    std::ostringstream out;
    if (as_json) {
        json j;
        j["order"] = order;
        for (int k = 0; k < g.data.num_generators(); ++k) {
            const std::string& name = g.data.kahler_names[k];
            j["forward"][name] = series_to_json(mm.forward[k]);
            j["inverse"][name] = series_to_json(mm.inverse[k]);
        }
        for (int i = 0; i < g.data.m(); ++i) {
            TruncatedSeries d = delta_series(g.data, i, order);
            if (!d.is_zero()) j["delta"][std::to_string(i)] = series_to_json(d);
        }
        out << j.dump(2) << "\n";
    } else {
        for (int k = 0; k < g.data.num_generators(); ++k) {
            const std::string& name = g.data.kahler_names[k];
            out << "forward " << name << ": " << mm.forward[k].to_pretty() << "\n";
            out << "inverse " << name << ": " << mm.inverse[k].to_pretty() << "\n";
        }
        for (int i = 0; i < g.data.m(); ++i) {
            TruncatedSeries d = delta_series(g.data, i, order);
            if (!d.is_zero())
                out << "delta[" << i << "]: " << d.to_pretty() << "\n";
        }
    }
    emit(out.str(), o.out_path);
    return 0;
}

int cmd_slab(const CommonOpts& o, bool as_json) {
    GeometryCase g = resolve_geometry(o);
    std::ostringstream out;
    if (g.kind != GeometryCase::Kind::Toric) {
        PipelineResult pr = run_pipeline(g);
        if (as_json)
            out << series_to_json(pr.slab.series).dump(2) << "\n";
        else
            out << pr.slab.series.to_text();
        emit(out.str(), o.out_path);
        return 0;
    }
    SlabFunction f = slab_function(g.data, g.frame, g.default_trunc);
    if (as_json) {
        json j = series_to_json(f.series);
        json prov = json::array();
        for (const auto& p : f.provenance) {
            json e;
            e["point"] = p.point_index;
            e["w"] = p.w;
            e["q_charge"] = p.q_charge;
            prov.push_back(e);
        }
        j["provenance"] = prov;
        out << j.dump(2) << "\n";
    } else {
        out << f.series.to_text();
        for (const auto& p : f.provenance) {
            out << "# point " << p.point_index << " w=(";
            for (size_t i = 0; i < p.w.size(); ++i) out << (i ? "," : "") << p.w[i];
            out << ") charge=(";
            for (size_t i = 0; i < p.q_charge.size(); ++i)
                out << (i ? "," : "") << p.q_charge[i];
            out << ")\n";
        }
    }
    emit(out.str(), o.out_path);
    return 0;
}

TableConvention parse_convention(const std::string& s) {
    if (s == "inner") return TableConvention::Inner;
    if (s == "plain") return TableConvention::Plain;
    if (s == "neg") return TableConvention::NegatedPlain;
    throw ToricError("unknown convention: " + s);
}

int cmd_potential(const CommonOpts& o, const std::string& format) {
    GeometryCase g = resolve_geometry(o);
    PipelineResult pr = run_pipeline(g);
    emit(format_series(pr.log_z, format), o.out_path);
    return 0;
}

int cmd_table(const CommonOpts& o, const std::string& convention, const std::string& format) {
    GeometryCase g = resolve_geometry(o);
    PipelineResult pr = run_pipeline(g);
    CoefficientTable t = coefficient_table(pr.log_z, parse_convention(convention));
    std::ostringstream out;
    if (format == "json") {
        json j;
        j["convention"] = convention;
        json entries = json::array();
        for (const auto& [e, a] : t.entries) {
            json row;
            row["exponents"] = e;
            row["value"] = rational_text(a);
            entries.push_back(row);
        }
        j["small_variables"] = t.spec.small_names;
        j["phase_variables"] = t.spec.phase_names;
        j["entries"] = entries;
        out << j.dump(2) << "\n";
    } else {
        // csv and pretty share the row layout; pretty pads with spaces.
        const char sep = (format == "csv") ? ',' : ' ';
        for (int i = 0; i < t.spec.arity(); ++i) out << t.spec.name_of(i) << sep;
        out << "value\n";
        for (const auto& [e, a] : t.entries) {
            for (int x : e) out << x << sep;
            out << rational_text(a) << "\n";
        }
    }
    emit(out.str(), o.out_path);
    return 0;
}

int cmd_av_potential(const CommonOpts& o, std::string wrt, const std::string& format) {
    GeometryCase g = resolve_geometry(o);
    PipelineResult pr = run_pipeline(g);
    if (wrt.empty()) {
        for (const auto& z : pr.log_z.spec().phase_names)
            if (z != SlabFunction::solving_variable()) {
                wrt = z;
                break;
            }
    }
    if (wrt.empty()) throw ToricError("no spectator variable to integrate against");
    emit(format_series(av_potential(pr.solution, wrt), format), o.out_path);
    return 0;
}

int cmd_verify(const std::string& which, const std::string& report_format,
               const std::string& out_path) {
    std::vector<VerificationReport> reports;
    if (which == "all")
        reports = verify_all();
    else
        reports.push_back(verify_case(canonical_name(which)));

    std::ostringstream out;
    bool any_failed = false;
    if (report_format == "json") {
        json j = json::array();
        for (const auto& r : reports) {
            json c;
            c["case"] = r.case_name;
            c["passed"] = r.passed();
            c["matched"] = r.matched();
            c["failed"] = r.failed();
            c["crosscheck_failed"] = r.crosscheck_failed();
            c["residual_verified"] = r.residual_verified;
            json mism = json::array();
            for (const auto& ch : r.checks) {
                if (ch.ok()) continue;
                json m;
                m["label"] = ch.label;
                m["coords"] = ch.coords;
                m["expected"] = rational_text(ch.expected);
                m["computed"] = rational_text(ch.computed);
                m["crosscheck"] = ch.crosscheck;
                mism.push_back(m);
            }
            c["mismatches"] = mism;
            j.push_back(c);
            any_failed = any_failed || !r.passed();
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << r.case_name << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
                << r.matched() << " matched, " << r.failed() << " failed, "
                << r.crosscheck_failed() << " cross-check mismatches)\n";
            for (const auto& ch : r.checks) {
                if (ch.ok()) continue;
                out << "  " << (ch.crosscheck ? "cross-check " : "MISMATCH ") << ch.label
                    << " at {";
                bool first = true;
                for (const auto& [k, v] : ch.coords) {
                    out << (first ? "" : ", ") << k << ":" << v;
                    first = false;
                }
                out << "} expected " << rational_text(ch.expected) << " computed "
                    << rational_text(ch.computed) << "\n";
            }
            any_failed = any_failed || !r.passed();
        }
    }
    emit(out.str(), out_path);
    return any_failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact disc-potential computations for toric Calabi-Yau mirrors"};
    app.require_subcommand(1);

    CommonOpts mm_opts, slab_opts, pot_opts, table_opts, av_opts;
    int order = 5;
    bool mm_json = false, slab_json = false;
    std::string pot_format = "pretty", table_convention = "inner", table_format = "pretty";
    std::string av_wrt, av_format = "pretty";
    std::string verify_which = "all", verify_report = "text", verify_out;

    auto* mm = app.add_subcommand("mirror-map", "forward/inverse mirror map and delta series");
    add_common(mm, mm_opts);
    mm->add_option("--order", order, "truncation order of the mirror map");
    mm->add_flag("--json", mm_json, "emit JSON");

    auto* slab = app.add_subcommand("slab", "slab function with provenance");
    add_common(slab, slab_opts);
    slab->add_flag("--json", slab_json, "emit JSON");

    auto* pot = app.add_subcommand("potential", "equivariant disc potential (log Z)");
    add_common(pot, pot_opts);
    pot->add_option("--format", pot_format, "pretty|csv|json");

    auto* table = app.add_subcommand("table", "coefficient table of the potential");
    add_common(table, table_opts);
    table->add_option("--convention", table_convention, "inner|plain|neg");
    table->add_option("--format", table_format, "pretty|csv|json");

    auto* av = app.add_subcommand("av-potential", "axial-vertex potential at uv=0");
    add_common(av, av_opts);
    av->add_option("--wrt", av_wrt, "spectator variable to integrate against");
    av->add_option("--format", av_format, "pretty|csv|json");

    auto* ver = app.add_subcommand("verify", "check the embedded reference tables");
    ver->add_option("case", verify_which, "case name or 'all'");
    ver->add_option("--report", verify_report, "text|json");
    ver->add_option("--out", verify_out, "write report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mm->parsed()) return cmd_mirror_map(mm_opts, order, mm_json);
        if (slab->parsed()) return cmd_slab(slab_opts, slab_json);
        if (pot->parsed()) return cmd_potential(pot_opts, pot_format);
        if (table->parsed()) return cmd_table(table_opts, table_convention, table_format);
        if (av->parsed()) return cmd_av_potential(av_opts, av_wrt, av_format);
        if (ver->parsed()) return cmd_verify(verify_which, verify_report, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
