#include "shortc2/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "shortc2/error.hpp"

namespace shortc2 {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json carr(std::complex<double> v) { return json::array({v.real(), v.imag()}); }

std::complex<double> cfrom(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number())
        throw Error("bad-config",
                    std::string(what) + " must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

const char* json_type_name(const json& v) {
    if (v.is_object()) return "object";
    if (v.is_array()) return "array";
    if (v.is_string()) return "string";
    if (v.is_boolean()) return "boolean";
    if (v.is_null()) return "null";
    if (v.is_number_integer()) return "integer";
    return "number";
}

bool type_matches(const std::string& want, const json& v) {
    if (want == "number") return v.is_number();
    if (want == "integer") return v.is_number_integer();
    return want == json_type_name(v);
}

bool validate_node(const json& schema, const json& value, std::string path,
                   std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = path + ": " + msg;
        return false;
    };
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), value);
        } else {
            for (const auto& alt : t)
                ok = ok || type_matches(alt.get<std::string>(), value);
        }
        if (!ok)
            return fail(std::string("expected type ") + t.dump() + ", got " +
                        json_type_name(value));
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || alt == value;
        if (!ok) return fail("value not in enum " + schema["enum"].dump());
    }
    if (schema.contains("required")) {
        if (!value.is_object()) return fail("required needs an object");
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>()))
                return fail("missing required field " +
                            key.get<std::string>());
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (auto it = schema["properties"].begin();
             it != schema["properties"].end(); ++it) {
            if (!value.contains(it.key())) continue;
            if (!validate_node(it.value(), value[it.key()],
                               path + "." + it.key(), why))
                return false;
        }
    }
    if (schema.contains("items") && value.is_array()) {
        int idx = 0;
        for (const auto& el : value) {
            if (!validate_node(schema["items"], el,
                               path + "[" + std::to_string(idx) + "]", why))
                return false;
            ++idx;
        }
    }
    return true;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io-error", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io-error", "cannot write " + path);
    out << content;
    if (!out) throw Error("io-error", "write failed for " + path);
}

json load_json(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw Error("bad-config", path + ": " + e.what());
    }
}

void save_json(const json& j, const std::string& path) {
    write_text_file(path, j.dump(2) + "\n");
}

json map_to_json(const HenonMap& H) {
    json q = json::array();
    for (const auto& c : H.p.low_coeffs()) q.push_back(carr(c));
    return json{{"d", H.degree()}, {"a", carr(H.a)}, {"q", q}};
}

HenonMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("a") ||
        !j.contains("q"))
        throw Error("bad-config", "map document needs fields d, a, q");
    if (!j["d"].is_number_integer())
        throw Error("bad-config", "d must be an integer");
    int d = j["d"].get<int>();
    std::complex<double> a = cfrom(j["a"], "a");
    if (!j["q"].is_array())
        throw Error("bad-config", "q must be an array of [re, im] pairs");
    std::vector<std::complex<double>> low;
    for (const auto& c : j["q"]) low.push_back(cfrom(c, "q entry"));
    if (static_cast<int>(low.size()) != d - 1)
        throw Error("bad-config",
                    "q must list exactly d-1 coefficients (a_0 first)");
    return HenonMap(MonicPoly(d, std::move(low)), a);
}

HenonMap load_map(const std::string& path) {
    return map_from_json(load_json(path));
}

void save_map(const HenonMap& H, const std::string& path) {
    save_json(map_to_json(H), path);
}

json path_to_json(const SampledPath& path) {
    json arr = json::array();
    for (const auto& pt : path.points)
        arr.push_back(json::array({pt.x.real(), pt.x.imag(), pt.y.real(),
                                   pt.y.imag()}));
    return arr;
}

SampledPath path_from_json(const json& j) {
    if (!j.is_array() || j.size() < 2)
        throw Error("bad-config",
                    "path must be an array of at least two samples");
    SampledPath path;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4)
            throw Error("bad-config",
                        "path sample must be [x_re, x_im, y_re, y_im]");
        for (const auto& v : row)
            if (!v.is_number())
                throw Error("bad-config", "path sample must be numeric");
        path.points.push_back(
            ComplexPair{{row[0].get<double>(), row[1].get<double>()},
                        {row[2].get<double>(), row[3].get<double>()}});
    }
    return path;
}

SampledPath load_path(const std::string& path) {
    return path_from_json(load_json(path));
}

void save_path(const SampledPath& p, const std::string& path) {
    save_json(path_to_json(p), path);
}

json green_to_json(const GreenEstimate& g) {
    json j{{"value", g.value},
           {"error_bound", g.error_bound},
           {"iterations", g.iterations},
           {"escaped", g.escaped}};
    if (g.undecided) j["undecided"] = true;
    return j;
}

json dyadic_to_json(const DyadicClass& c) {
    return json{{"k", c.k}, {"n", c.n}};
}

DyadicClass dyadic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("n") ||
        !j["k"].is_number_integer() || !j["n"].is_number_integer())
        throw Error("bad-config", "class must be {\"k\": int, \"n\": int}");
    DyadicClass c;
    c.k = j["k"].get<long long>();
    c.n = j["n"].get<int>();
    if (c.n < 0) throw Error("bad-config", "class exponent n must be >= 0");
    return c;
}

std::string grid_to_csv(const GridResult& g) {
    std::ostringstream out;
    out << "# shortc2 render v1\n";
    out << "# nx=" << g.grid.nx << " ny=" << g.grid.ny << "\n";
    out << "# smin=" << fmt_double(g.grid.smin)
        << " smax=" << fmt_double(g.grid.smax)
        << " tmin=" << fmt_double(g.grid.tmin)
        << " tmax=" << fmt_double(g.grid.tmax) << "\n";
    out << "# level=" << fmt_double(g.level) << " tol=" << fmt_double(g.tol)
        << " budget=" << g.budget << "\n";
    out << "# r_epsilon calibration: doubling search on R until the "
           "certified gap bound drops below eps (no closed form claimed)\n";
    out << "i,j,s,t,value,error_bound,iterations,escaped,undecided,"
           "membership\n";
    for (int j = 0; j < g.grid.ny; ++j) {
        for (int i = 0; i < g.grid.nx; ++i) {
            const auto& cell = g.cells[static_cast<size_t>(j) * g.grid.nx + i];
            double s = g.grid.smin + (g.grid.smax - g.grid.smin) *
                                         ((i + 0.5) / g.grid.nx);
            double t = g.grid.tmin + (g.grid.tmax - g.grid.tmin) *
                                         ((j + 0.5) / g.grid.ny);
            out << i << ',' << j << ',' << fmt_double(s) << ','
                << fmt_double(t) << ',' << fmt_double(cell.value) << ','
                << fmt_double(cell.error_bound) << ',' << cell.iterations
                << ',' << (cell.escaped ? 1 : 0) << ','
                << (cell.undecided ? 1 : 0) << ','
                << membership_name(
                       g.tags[static_cast<size_t>(j) * g.grid.nx + i])
                << "\n";
        }
    }
    return out.str();
}

void write_grid_csv(const GridResult& g, const std::string& path) {
    write_text_file(path, grid_to_csv(g));
}

namespace {

void grid_range(const GridResult& g, double& vmin, double& vmax) {
    vmin = 0.0;
    vmax = 0.0;
    bool first = true;
    for (const auto& cell : g.cells) {
        if (first) {
            vmin = vmax = cell.value;
            first = false;
        } else {
            vmin = std::min(vmin, cell.value);
            vmax = std::max(vmax, cell.value);
        }
    }
}

} // namespace

std::string grid_to_pgm(const GridResult& g) {
    double vmin, vmax;
    grid_range(g, vmin, vmax);
    std::string out = "P5\n" + std::to_string(g.grid.nx) + " " +
                      std::to_string(g.grid.ny) + "\n255\n";
    out.reserve(out.size() + g.cells.size());
    for (const auto& cell : g.cells) {
        int gray = 0;
        if (vmax > vmin) {
            gray = static_cast<int>(
                std::lround(255.0 * (cell.value - vmin) / (vmax - vmin)));
            gray = std::max(0, std::min(255, gray));
        }
        out.push_back(static_cast<char>(static_cast<unsigned char>(gray)));
    }
    return out;
}

json pgm_sidecar(const GridResult& g, const std::string& pgm_name) {
    double vmin, vmax;
    grid_range(g, vmin, vmax);
    return json{
        {"schema_version", 1},
        {"pgm", pgm_name},
        {"vmin", vmin},
        {"vmax", vmax},
        {"mapping",
         "gray = round(255 (value - vmin) / (vmax - vmin)); constant grid "
         "maps to 0"},
        {"grid",
         {{"nx", g.grid.nx},
          {"ny", g.grid.ny},
          {"smin", g.grid.smin},
          {"smax", g.grid.smax},
          {"tmin", g.grid.tmin},
          {"tmax", g.grid.tmax}}},
        {"plane",
         {{"origin", {carr(g.plane.origin.x), carr(g.plane.origin.y)}},
          {"u", {carr(g.plane.u.x), carr(g.plane.u.y)}},
          {"v", {carr(g.plane.v.x), carr(g.plane.v.y)}}}},
        {"level", g.level},
        {"tol", g.tol},
        {"budget", g.budget},
        {"r_epsilon",
         {{"policy",
           "doubling search on R until the certified gap bound drops below "
           "eps"},
          {"closed_form_claimed", false}}}};
}

void write_grid_pgm(const GridResult& g, const std::string& pgm_path,
                    const std::string& sidecar_path) {
    write_text_file(pgm_path, grid_to_pgm(g));
    std::string name = pgm_path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    save_json(pgm_sidecar(g, name), sidecar_path);
}

json report_schema() {
    json num{{"type", "number"}};
    json integer{{"type", "integer"}};
    json boolean{{"type", "boolean"}};
    json str{{"type", "string"}};
    json cpair{{"type", "array"}, {"items", num}};

    json green{{"type", "object"},
               {"properties",
                {{"value", num},
                 {"error_bound", num},
                 {"iterations", integer},
                 {"escaped", boolean},
                 {"undecided", boolean}}},
               {"required",
                json::array({"value", "error_bound", "iterations",
                             "escaped"})}};
    json dyadic{{"type", "object"},
                {"properties", {{"k", integer}, {"n", integer}}},
                {"required", json::array({"k", "n"})}};
    json path{{"type", "array"}, {"items", cpair}};
    json mapdoc{{"type", "object"},
                {"properties",
                 {{"d", integer},
                  {"a", cpair},
                  {"q", {{"type", "array"}, {"items", cpair}}}}},
                {"required", json::array({"d", "a", "q"})}};
    json membership{
        {"type", "string"},
        {"enum", json::array({"K_plus", "Omega_prime_interior",
                              "boundary_unresolved", "outside"})}};
    json group_el{{"type", "object"},
                  {"properties",
                   {{"exponent", integer}, {"e", cpair}, {"f", cpair}}},
                  {"required", json::array({"exponent"})}};
    json group{{"type", "object"},
               {"properties",
                {{"modulus", integer},
                 {"order", integer},
                 {"generator_exponent", integer},
                 {"elements", {{"type", "array"}, {"items", group_el}}}}},
               {"required",
                json::array({"modulus", "order", "generator_exponent",
                             "elements"})}};
    json bihol{{"type", "object"},
               {"properties",
                {{"n", {{"type", json::array({"integer", "null"})}}}}},
               {"required", json::array({"n"})}};
    json model_point{{"type", "object"},
                     {"properties",
                      {{"z", cpair}, {"zeta", cpair}, {"c", num}}},
                     {"required", json::array({"z", "zeta", "c"})}};
    json sample_report{{"type", "object"},
                       {"properties",
                        {{"name", str},
                         {"samples", integer},
                         {"max_err", num},
                         {"tolerance", num},
                         {"pass", boolean}}},
                       {"required",
                        json::array({"name", "samples", "max_err",
                                     "tolerance", "pass"})}};
    json check{{"type", "object"},
               {"properties",
                {{"name", str},
                 {"pass", boolean},
                 {"detail", str},
                 {"max_err", num},
                 {"tolerance", num}}},
               {"required", json::array({"name", "pass"})}};
    json verify_report{{"type", "object"},
                       {"properties",
                        {{"schema_version", integer},
                         {"suite", str},
                         {"seed", integer},
                         {"pass", boolean},
                         {"checks", {{"type", "array"}, {"items", check}}}}},
                       {"required",
                        json::array({"schema_version", "suite", "pass",
                                     "checks"})}};
    json sidecar{{"type", "object"},
                 {"properties",
                  {{"schema_version", integer},
                   {"pgm", str},
                   {"vmin", num},
                   {"vmax", num},
                   {"mapping", str},
                   {"level", num},
                   {"tol", num},
                   {"budget", integer}}},
                 {"required",
                  json::array({"pgm", "vmin", "vmax", "mapping", "level"})}};

    return json{{"schema_version", 1},
                {"outputs",
                 {{"map", mapdoc},
                  {"green_estimate", green},
                  {"dyadic_class", dyadic},
                  {"path", path},
                  {"membership", membership},
                  {"affine_group", group},
                  {"bihol_result", bihol},
                  {"model_point", model_point},
                  {"sample_report", sample_report},
                  {"verify_report", verify_report},
                  {"render_sidecar", sidecar}}}};
}

bool schema_validate(const json& schema, const json& value,
                     std::string* why) {
    return validate_node(schema, value, "$", why);
}

} // namespace shortc2
