#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "shortc2/error.hpp"
#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"
#include "shortc2/io.hpp"

using namespace shortc2;

namespace {
HenonMap quad_gen() {
    return HenonMap(MonicPoly(2, {{1.0, -0.5}}), {2.0, 0.25});
}

GridResult small_grid() {
    HenonMap H(MonicPoly(2, {{0.0, 0.0}}), {1.0, 0.0});
    return render_slice(H, SlicePlane{}, {4, 3, 3.5, 4.5, -0.5, 0.5}, {2.0});
}
} // namespace

TEST_CASE("map documents round-trip") {
    HenonMap H = quad_gen();
    json j = map_to_json(H);
    CHECK(j["d"] == 2);
    CHECK(j["a"][0] == 2.0);
    CHECK(j["q"].size() == 1);

    HenonMap back = map_from_json(j);
    CHECK(back.degree() == 2);
    CHECK(back.a == H.a);
    CHECK(back.p.low_coeffs()[0] == H.p.low_coeffs()[0]);

    CHECK_THROWS_AS(map_from_json(json::parse(R"({"d":2,"a":[1,0]})")),
                    Error);
    CHECK_THROWS_AS(
        map_from_json(json::parse(R"({"d":2,"a":[0,0],"q":[[0,0]]})")),
        Error);
    CHECK_THROWS_AS(
        map_from_json(json::parse(R"({"d":2,"a":[1,0],"q":[]})")), Error);
    CHECK_THROWS_AS(
        map_from_json(json::parse(R"({"d":1,"a":[1,0],"q":[]})")), Error);
}

TEST_CASE("path documents round-trip") {
    SampledPath p;
    p.points = {{{0.0, 1.0}, {4.0, 0.0}}, {{0.5, 0.0}, {0.0, 4.0}}};
    json j = path_to_json(p);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0][1] == 1.0);
    CHECK(j[1][3] == 4.0);

    SampledPath back = path_from_json(j);
    REQUIRE(back.points.size() == 2);
    CHECK(back.points[0].x == p.points[0].x);
    CHECK(back.points[1].y == p.points[1].y);

    CHECK_THROWS_AS(path_from_json(json::parse("[[0,0,4,0]]")), Error);
    CHECK_THROWS_AS(path_from_json(json::parse("[[0,0,4],[0,0,4,1]]")),
                    Error);
    CHECK_THROWS_AS(path_from_json(json::parse(R"({"points":[]})")), Error);
}

TEST_CASE("green and dyadic documents") {
    GreenEstimate g{1.25, 1e-11, 7, true, false};
    json j = green_to_json(g);
    CHECK(j["value"] == 1.25);
    CHECK(j["iterations"] == 7);
    CHECK(j["escaped"] == true);
    CHECK(!j.contains("undecided"));

    g.undecided = true;
    CHECK(green_to_json(g)["undecided"] == true);

    json dj = dyadic_to_json({3, 2});
    CHECK(dj["k"] == 3);
    CHECK(dj["n"] == 2);
    DyadicClass back = dyadic_from_json(dj);
    CHECK(back == DyadicClass{3, 2});
    CHECK_THROWS_AS(dyadic_from_json(json::parse(R"({"k":1,"n":-1})")),
                    Error);
    CHECK_THROWS_AS(dyadic_from_json(json::parse(R"({"k":1})")), Error);
}

TEST_CASE("grid CSV shape and determinism") {
    GridResult g = small_grid();
    std::string csv = grid_to_csv(g);
    CHECK(csv == grid_to_csv(g));

    std::istringstream in(csv);
    std::string line;
    int comments = 0, rows = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            ++comments;
            continue;
        }
        if (!saw_header) {
            CHECK(line ==
                  "i,j,s,t,value,error_bound,iterations,escaped,undecided,"
                  "membership");
            saw_header = true;
            continue;
        }
        ++rows;
        int commas = 0;
        for (char ch : line)
            if (ch == ',') ++commas;
        CHECK(commas == 9);
    }
    CHECK(comments >= 4);
    CHECK(saw_header);
    CHECK(rows == 12);
}

TEST_CASE("grid PGM and sidecar") {
    GridResult g = small_grid();
    std::string pgm = grid_to_pgm(g);
    CHECK(pgm == grid_to_pgm(g));
    CHECK(pgm.rfind("P5\n4 3\n255\n", 0) == 0);
    CHECK(pgm.size() == 11 + 12); // header + one byte per cell

    json sc = pgm_sidecar(g, "slice.pgm");
    CHECK(sc["schema_version"] == 1);
    CHECK(sc["pgm"] == "slice.pgm");
    CHECK(sc["grid"]["nx"] == 4);
    CHECK(sc["vmax"].get<double>() >= sc["vmin"].get<double>());

    json schema = report_schema();
    std::string why;
    CHECK(schema_validate(schema["outputs"]["render_sidecar"], sc, &why));
}

TEST_CASE("schema validation accepts and rejects") {
    json schema = report_schema();
    CHECK(schema["schema_version"] == 1);

    json good = {{"value", 1.5},
                 {"error_bound", 1e-10},
                 {"iterations", 12},
                 {"escaped", true}};
    std::string why;
    CHECK(schema_validate(schema["outputs"]["green_estimate"], good, &why));

    json missing = {{"value", 1.5}, {"iterations", 12}, {"escaped", true}};
    CHECK(!schema_validate(schema["outputs"]["green_estimate"], missing,
                           &why));
    CHECK(why.find("error_bound") != std::string::npos);

    json wrong_type = good;
    wrong_type["iterations"] = "twelve";
    CHECK(!schema_validate(schema["outputs"]["green_estimate"], wrong_type));

    json tag = "K_plus";
    CHECK(schema_validate(schema["outputs"]["membership"], tag));
    CHECK(!schema_validate(schema["outputs"]["membership"], json("K_minus")));

    json dy = {{"k", 1}, {"n", 2}};
    CHECK(schema_validate(schema["outputs"]["dyadic_class"], dy));
    json dyf = {{"k", 1.5}, {"n", 2}};
    CHECK(!schema_validate(schema["outputs"]["dyadic_class"], dyf));
}

TEST_CASE("file round-trips") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "shortc2-io-test";
    fs::create_directories(dir);

    HenonMap H = quad_gen();
    std::string mp = (dir / "map.json").string();
    save_map(H, mp);
    HenonMap back = load_map(mp);
    CHECK(back.a == H.a);

    SampledPath p;
    p.points = {{{0.0, 0.0}, {4.0, 0.0}}, {{0.0, 0.0}, {5.0, 0.0}}};
    std::string pp = (dir / "path.json").string();
    save_path(p, pp);
    CHECK(load_path(pp).points.size() == 2);

    std::string bad = (dir / "bad.json").string();
    write_text_file(bad, "{not json");
    CHECK_THROWS_AS(load_json(bad), Error);
    CHECK_THROWS_AS(read_text_file((dir / "absent.json").string()), Error);

    GridResult g = small_grid();
    std::string csv1 = (dir / "a.csv").string();
    std::string csv2 = (dir / "b.csv").string();
    write_grid_csv(g, csv1);
    write_grid_csv(g, csv2);
    CHECK(read_text_file(csv1) == read_text_file(csv2));

    write_grid_pgm(g, (dir / "a.pgm").string(), (dir / "a.json").string());
    json sc = load_json((dir / "a.json").string());
    CHECK(sc["pgm"] == "a.pgm");

    fs::remove_all(dir);
}
