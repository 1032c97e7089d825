#include <complex>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shortc2/affine.hpp"
#include "shortc2/biholo.hpp"
#include "shortc2/boettcher.hpp"
#include "shortc2/error.hpp"
#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"
#include "shortc2/io.hpp"
#include "shortc2/modelspace.hpp"
#include "shortc2/topology.hpp"
#include "shortc2/verify.hpp"

namespace sc = shortc2;

namespace {

sc::ComplexPair to_pair(const std::vector<double>& v) {
    return {{v[0], v[1]}, {v[2], v[3]}};
}

void emit(const sc::json& j, const std::string& out_file) {
    if (out_file.empty())
        std::cout << j.dump(2) << "\n";
    else
        sc::save_json(j, out_file);
}

struct Common {
    std::string map_file;
    std::string out;
    double tol = 1e-9;
    long long budget = sc::kDefaultBudget;
    std::uint64_t seed = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hénon-map Green's functions, Böttcher/covering "
                 "coordinates, deck groups, and Short C^2 level tools"};
    app.require_subcommand(1);

    Common opt;
    std::vector<double> point, pa, pb, model_pt;
    std::vector<long long> cls;
    double level = 1.0;
    int grid_nx = 64, grid_ny = 64;
    std::vector<double> bounds{-1.0, 1.0, 3.0, 5.0};
    std::vector<double> plane_origin{0.0, 0.0, 0.0, 0.0};
    std::vector<double> plane_u{0.0, 0.0, 1.0, 0.0};
    std::vector<double> plane_v{0.0, 0.0, 0.0, 1.0};
    std::string path_file, suite = "all";
    bool verify_comm = false;
    int deck_m = 0;
    double model_c = 0.4;
    std::vector<std::string> bihol_args;

    auto add_map = [&](CLI::App* cmd) {
        cmd->add_option("--map", opt.map_file, "map JSON file")->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "output file (default stdout)");
        cmd->add_option("--tol", opt.tol, "certified tolerance");
        cmd->add_option("--budget", opt.budget, "iteration budget");
        cmd->add_option("--seed", opt.seed, "sampling seed");
    };

    CLI::App* green = app.add_subcommand(
        "green", "certified G+ at a point (exit 4 if undecided)");
    add_map(green);
    add_common(green);
    green->add_option("--point", point, "x_re x_im y_re y_im")
        ->expected(4)
        ->required();
    bool backward = false;
    green->add_flag("--minus", backward, "evaluate G- instead");

    CLI::App* member = app.add_subcommand(
        "member", "membership tag at a level (exit 4 if unresolved)");
    add_map(member);
    add_common(member);
    member->add_option("--point", point, "x_re x_im y_re y_im")
        ->expected(4)
        ->required();
    member->add_option("--level", level, "level c > 0")->required();

    CLI::App* render = app.add_subcommand(
        "render", "grid of G+ values over an affine slice (CSV + PGM)");
    add_map(render);
    add_common(render);
    render->add_option("--grid", grid_nx, "columns")->required();
    render->add_option("--rows", grid_ny, "rows")->required();
    render->add_option("--bounds", bounds, "smin smax tmin tmax")
        ->expected(4);
    render->add_option("--origin", plane_origin, "plane origin")->expected(4);
    render->add_option("--u", plane_u, "plane u direction")->expected(4);
    render->add_option("--v", plane_v, "plane v direction")->expected(4);
    render->add_option("--level", level, "level c > 0");

    CLI::App* loop_class = app.add_subcommand(
        "loop-class", "d-adic winding class of a closed path file");
    add_map(loop_class);
    add_common(loop_class);
    loop_class->add_option("--path", path_file, "path JSON file")->required();
    loop_class->add_option("--level", level, "band level c > 0")->required();

    CLI::App* connect = app.add_subcommand(
        "connect", "path in Omega'_c joining two certified points");
    add_map(connect);
    add_common(connect);
    connect->add_option("--a", pa, "first point")->expected(4)->required();
    connect->add_option("--b", pb, "second point")->expected(4)->required();
    connect->add_option("--level", level, "level c > 0")->required();

    CLI::App* group = app.add_subcommand(
        "affine-group", "diagonal affine maps preserving K+");
    add_map(group);
    add_common(group);

    CLI::App* deck = app.add_subcommand(
        "deck", "apply a deck transformation in the model space");
    add_map(deck);
    add_common(deck);
    deck->add_option("--class", cls, "k n")->expected(2);
    deck->add_option("--point", model_pt, "z_re z_im zeta_re zeta_im")
        ->expected(4);
    deck->add_option("--c", model_c, "annulus level");
    deck->add_option("--m", deck_m, "cover level index");
    deck->add_flag("--verify-comm", verify_comm,
                   "run the deck/lift commutation suite (exit 3 on failure)");

    CLI::App* bihol = app.add_subcommand(
        "bihol", "level biholomorphism criterion: c1 c2 d");
    bihol->add_option("args", bihol_args, "c1 c2 d")->expected(3);
    bihol->add_option("--out", opt.out, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "invariant suites (exit 3 on failure)");
    verify->add_option("--suite", suite,
                       "all|core|greens|boettcher|modelspace|affine|topology|"
                       "biholo|io");
    verify->add_option("--out", opt.out, "output file (default stdout)");
    verify->add_option("--seed", opt.seed, "sampling seed");

    CLI::App* schema =
        app.add_subcommand("schema", "print the versioned output schema");
    schema->add_option("--out", opt.out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (green->parsed()) {
            sc::HenonMap H = sc::load_map(opt.map_file);
            sc::GreenEstimate g =
                backward
                    ? sc::green_minus(H, to_pair(point), opt.tol, opt.budget)
                    : sc::green_plus(H, to_pair(point), opt.tol, opt.budget);
            emit(sc::green_to_json(g), opt.out);
            return g.undecided ? 4 : 0;
        }
        if (member->parsed()) {
            sc::HenonMap H = sc::load_map(opt.map_file);
            sc::Membership m =
                sc::membership(H, to_pair(point), {level}, opt.budget);
            emit(sc::json{{"membership", sc::membership_name(m)},
                          {"level", level}},
                 opt.out);
            return m == sc::Membership::boundary_unresolved ? 4 : 0;
        }
        if (render->parsed()) {
            sc::HenonMap H = sc::load_map(opt.map_file);
            sc::SlicePlane plane{to_pair(plane_origin), to_pair(plane_u),
                                 to_pair(plane_v)};
            sc::GridSpec grid{grid_nx, grid_ny, bounds[0], bounds[1],
                              bounds[2], bounds[3]};
            sc::GridResult res =
                sc::render_slice(H, plane, grid, {level}, opt.tol,
                                 opt.budget);
            std::string dir = opt.out.empty() ? "." : opt.out;
            sc::write_grid_csv(res, dir + "/slice.csv");
            sc::write_grid_pgm(res, dir + "/slice.pgm", dir + "/slice.json");
            return 0;
        }
        if (loop_class->parsed()) {
            sc::HenonMap H = sc::load_map(opt.map_file);
            sc::SampledPath loop = sc::load_path(path_file);
            sc::DyadicClass c = sc::winding_class(H, loop, {level});
            emit(sc::dyadic_to_json(c), opt.out);
            return 0;
        }
        if (connect->parsed()) {
            sc::HenonMap H = sc::load_map(opt.map_file);
            sc::SampledPath path =
                sc::connect_points(H, to_pair(pa), to_pair(pb), {level});
            emit(sc::path_to_json(path), opt.out);
            return 0;
        }
        if (group->parsed()) {
            sc::HenonMap H = sc::load_map(opt.map_file);
            sc::AffineGroup G = sc::affine_preservers(H);
            sc::json elements = sc::json::array();
            for (const auto& L : G.elements) {
                elements.push_back(
                    {{"exponent", L.exponent},
                     {"e", {L.e().real(), L.e().imag()}},
                     {"f", {L.f().real(), L.f().imag()}}});
            }
            emit(sc::json{{"modulus", G.modulus},
                          {"order", G.order},
                          {"generator_exponent", G.generator_exponent},
                          {"elements", elements}},
                 opt.out);
            return 0;
        }
        if (deck->parsed()) {
            sc::HenonMap H = sc::load_map(opt.map_file);
            if (verify_comm) {
                bool pass = true;
                sc::json runs = sc::json::array();
                for (int n = 0; n <= 6; ++n) {
                    sc::SampleReport rep =
                        sc::verify_comm_cover(H, n, deck_m, 1000, opt.seed);
                    pass = pass && rep.pass;
                    runs.push_back({{"n", n},
                                    {"m", deck_m},
                                    {"samples", rep.samples},
                                    {"max_err", rep.max_err},
                                    {"tolerance", rep.tolerance},
                                    {"pass", rep.pass}});
                }
                emit(sc::json{{"name", "deck-lift-commutation"},
                              {"pass", pass},
                              {"runs", runs}},
                     opt.out);
                return pass ? 0 : 3;
            }
            if (cls.size() != 2 || model_pt.size() != 4)
                throw sc::Error("bad-config",
                                "deck needs --class k n and --point");
            sc::DyadicClass klass = sc::make_dyadic(
                cls[0], static_cast<int>(cls[1]), H.degree());
            sc::ModelPoint pt{{model_pt[0], model_pt[1]},
                              {model_pt[2], model_pt[3]},
                              model_c};
            sc::ModelPoint out =
                sc::deck_apply(H, {klass, deck_m}, pt);
            emit(sc::json{{"z", {out.z.real(), out.z.imag()}},
                          {"zeta", {out.zeta.real(), out.zeta.imag()}},
                          {"c", out.c}},
                 opt.out);
            return 0;
        }
        if (bihol->parsed()) {
            if (bihol_args.size() != 3)
                throw sc::Error("bad-config", "bihol needs c1 c2 d");
            int d = 0;
            try {
                d = std::stoi(bihol_args[2]);
            } catch (...) {
                throw sc::Error("bad-config", "d must be an integer");
            }
            auto r1 = sc::parse_positive_rational(bihol_args[0]);
            auto r2 = sc::parse_positive_rational(bihol_args[1]);
            std::optional<long long> n;
            if (r1 && r2) {
                n = sc::biholo_criterion(*r1, *r2, d);
            } else {
                double c1, c2;
                try {
                    c1 = std::stod(bihol_args[0]);
                    c2 = std::stod(bihol_args[1]);
                } catch (...) {
                    throw sc::Error("bad-level", "levels must be numeric");
                }
                n = sc::biholo_criterion(c1, c2, d);
            }
            sc::json out;
            out["n"] = n ? sc::json(*n) : sc::json(nullptr);
            emit(out, opt.out);
            return 0;
        }
        if (verify->parsed()) {
            sc::json rep = sc::run_verify(suite, opt.seed);
            emit(rep, opt.out);
            return rep["pass"].get<bool>() ? 0 : 3;
        }
        if (schema->parsed()) {
            emit(sc::report_schema(), opt.out);
            return 0;
        }
    } catch (const sc::Error& e) {
        std::cerr << sc::json{{"error",
                               {{"code", e.code()}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << sc::json{{"error",
                               {{"code", "internal"},
                                {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 2;
    }
    return 2;
}
