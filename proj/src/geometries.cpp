#include "discpot/geometries.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace discpot {

namespace {

Truncation make_trunc(int total, int window, std::map<std::string, int> per_small) {
    Truncation t;
    t.small_total_max = total;
    t.z_window = window;
    t.per_small_max = std::move(per_small);
    return t;
}

Frame identity_frame(int base, int d) {
    Frame f;
    f.base_index = base;
    f.matrix.assign(d, std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i) f.matrix[i][i] = 1;
    return f;
}

}  // namespace

std::vector<std::string> builtin_geometry_names() {
    return {"c3", "kp2-inner", "kp2-outer", "kp3", "surface-a0", "abelian"};
}

GeometryCase builtin_geometry(const std::string& name) {
    GeometryCase g;
    g.name = name;
    if (name == "c3") {
        g.data = build_toric_data({{0, 0}, {1, 0}, {0, 1}}, {0, 1, 2});
        g.frame = identity_frame(0, 2);
        g.default_trunc = make_trunc(3, 3, {{"uv", 3}});
    } else if (name == "kp2-inner" || name == "kp2-outer") {
        g.data = build_toric_data({{0, 0}, {1, 0}, {0, 1}, {-1, -1}}, {0, 1, 2});
        if (name == "kp2-inner") {
            g.frame = identity_frame(0, 2);
        } else {
            g.frame.base_index = 2;
            g.frame.matrix = {{1, -1}, {0, -1}};
        }
        g.default_trunc = make_trunc(5, 4, {{"q", 3}, {"uv", 2}});
    } else if (name == "kp3") {
        g.data = build_toric_data(
            {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {0, 1, 2, 3});
        g.frame = identity_frame(0, 3);
        g.default_trunc = make_trunc(3, 3, {{"q", 2}, {"uv", 1}});
    } else if (name == "surface-a0") {
        g.kind = GeometryCase::Kind::Surface;
        g.default_trunc = make_trunc(10, 0, {{"q", 5}, {"uv", 5}});
    } else if (name == "abelian") {
        g.kind = GeometryCase::Kind::Abelian;
        g.default_trunc = make_trunc(7, 2, {{"q1", 2}, {"q2", 2}, {"qs", 2}, {"uv", 1}});
    } else {
        throw ToricError("unknown geometry: " + name);
    }
    return g;
}

GeometryCase geometry_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SeriesError(std::string("json: ") + e.what());
    }
    GeometryCase g;
    g.name = j.value("name", std::string("custom"));
    try {
        std::vector<std::vector<long>> points = j.at("points");
        std::vector<int> sigma = j.at("sigma");
        g.data = build_toric_data(points, sigma);
        g.frame.base_index = j.at("chamber");
        std::vector<std::vector<long>> mat = j.at("frame");
        g.frame.matrix = mat;
        validate_frame(g.data, g.frame);
        const auto& t = j.at("truncation");
        const int q_total = t.at("q_total");
        const int uv_max = t.at("uv_max");
        const int z_window = t.at("z_window");
        if (q_total < 0 || uv_max < 0 || z_window < 0)
            throw ToricError("truncation bounds must be nonnegative");
        std::map<std::string, int> caps{{"uv", uv_max}};
        if (g.data.num_generators() == 1) caps["q"] = q_total;
        g.default_trunc = make_trunc(q_total + uv_max, z_window, caps);
    } catch (const nlohmann::json::exception& e) {
        throw SeriesError(std::string("json: ") + e.what());
    }
    return g;
}

GeometryCase geometry_from_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SeriesError("json: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return geometry_from_json_text(ss.str());
}

Truncation inflated_truncation(const Truncation& final_t, int reentry_rate, int max_w) {
    Truncation t = final_t;
    t.z_window = std::max(final_t.z_window, max_w) +
                 std::max(1, reentry_rate) * final_t.small_total_max;
    return t;
}

PipelineResult run_pipeline(const GeometryCase& geom, const Truncation& final_t) {
    PipelineResult out;
    Truncation work;
    if (geom.kind == GeometryCase::Kind::Toric) {
        // Negative z-exponents of charged slab summands per unit charge;
        // sigma summands must be nonnegative anyway (checked later).
        int rate = 1;
        int max_w = 1;
        for (int i = 0; i < geom.data.m(); ++i) {
            for (long wj : frame_coordinates(geom.data, geom.frame, i)) {
                rate = std::max(rate, static_cast<int>(-wj));
                max_w = std::max(max_w, static_cast<int>(std::abs(wj)));
            }
        }
        work = inflated_truncation(final_t, rate, max_w);
        out.slab = slab_function(geom.data, geom.frame, work);
    } else {
        work = inflated_truncation(final_t, 1, 1);
        if (geom.kind == GeometryCase::Kind::Surface)
            out.slab.series = local_surface_mirror(work);
        else
            out.slab.series = abelian_family_mirror(work);
    }
    GluingSolution sol = solve_gluing(out.slab.series, SlabFunction::solving_variable());
    out.log_z = log_series(sol.Z).restricted(final_t);
    sol.Z = sol.Z.restricted(final_t);
    out.solution = std::move(sol);
    out.slab.series = out.slab.series.restricted(final_t);
    return out;
}

PipelineResult run_pipeline(const GeometryCase& geom) {
    return run_pipeline(geom, geom.default_trunc);
}

}  // namespace discpot
