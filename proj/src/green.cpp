#include "shortc2/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace shortc2 {

namespace {

constexpr double kEps = 2.220446049250313e-16;

struct Phase {
    // Direction-independent description of one certified evaluation:
    // dominant() picks the coordinate whose log drives the value.
    bool backward;
    double R0;
    double C;
};

double dominant_log(const Phase& ph, const XComplex& x, const XComplex& y) {
    return ph.backward ? x.log_abs() : y.log_abs();
}

void advance(const HenonMap& H, const Phase& ph, XComplex& x, XComplex& y) {
    if (ph.backward)
        step_back(H, x, y);
    else
        step(H, x, y);
}

bool in_escape_region(const Phase& ph, const XComplex& x, const XComplex& y) {
    double lx = x.log_abs();
    double ly = y.log_abs();
    double lr = std::log(ph.R0);
    if (ph.backward) return lx >= ly && lx >= lr;
    return ly >= lx && ly >= lr;
}

// Shared engine for green_plus / green_minus. Phase 1 iterates inside the
// bounded filtration zone until the escape region is entered or the budget
// runs out; phase 2 accumulates the certified log-sum until the geometric
// tail majorant falls under tol.
GreenEstimate run_green(const HenonMap& H, const ComplexPair& z, double tol,
                        long long budget, bool backward) {
    if (!(tol > 0.0)) throw Error("bad-tol", "tol must be positive");
    if (budget < 1) throw Error("bad-budget", "budget must be >= 1");

    const int d = H.degree();
    Phase ph{backward,
             backward ? escape_radius_backward(H) : escape_radius(H),
             backward ? tail_constant_backward(H) : tail_constant(H)};

    GreenEstimate out;
    XComplex x(z.x), y(z.y);
    long long n = 0;

    // First-order absolute error carried by each coordinate of the computed
    // orbit, held as a log so it survives the doubly exponential growth.
    // Starting from exact doubles, each step can only inject rounding at the
    // scale of its largest operand; when p(y) and a x cancel, that scale
    // dwarfs the result and the bound swallows the value. Once the dominant
    // coordinate's bound reaches its own magnitude the orbit carries no
    // information about log|w| and the only honest answer is undecided.
    // (Absolute, not relative: orbits may pass exactly through zero.)
    const double S = H.p.coeff_abs_sum();
    const double la = std::log(std::abs(H.a));
    const double kNegInf = -std::numeric_limits<double>::infinity();
    const double lrnd = std::log((2.0 * d + 2.0) * kEps);
    double lex = kNegInf, ley = kNegInf;
    auto logsum3 = [&](double u, double v, double w) {
        double m = std::max({u, v, w});
        if (m == kNegInf) return kNegInf;
        return m + std::log(std::exp(u - m) + std::exp(v - m) + std::exp(w - m));
    };
    auto track = [&](double lx0, double ly0, double lx1, double ly1) {
        if (backward) {
            // x1 = (p(x0) - y0) / a
            double M = std::max(lx0, 0.0);
            double lpp = std::log(static_cast<double>(d)) + (d - 1) * M +
                         std::log1p(S * std::exp(-M));
            double lp = d * M + std::log1p(S * std::exp(-M));
            double rnd = lrnd + std::max({lp, ly0, la + lx1});
            double nx = logsum3(lpp + lex, ley, rnd) - la;
            ley = lex;
            lex = nx;
        } else {
            // y1 = p(y0) - a x0
            double M = std::max(ly0, 0.0);
            double lpp = std::log(static_cast<double>(d)) + (d - 1) * M +
                         std::log1p(S * std::exp(-M));
            double lp = d * M + std::log1p(S * std::exp(-M));
            double rnd = lrnd + std::max({lp, la + lx0, ly1});
            double ny = logsum3(lpp + ley, la + lex, rnd);
            lex = ley;
            ley = ny;
        }
    };
    // first-order relative error of the dominant coordinate, saturated at 1
    auto dominant_relerr = [&](double ldom) {
        double l = (backward ? lex : ley) - ldom;
        return l >= 0.0 ? 1.0 : std::exp(l);
    };

    while (n < budget && !in_escape_region(ph, x, y)) {
        double lx0 = x.log_abs(), ly0 = y.log_abs();
        advance(H, ph, x, y);
        ++n;
        if (!x.finite() || !y.finite())
            throw Error("orbit-overflow", "non-finite orbit value");
        track(lx0, ly0, x.log_abs(), y.log_abs());
    }
    out.iterations = n;
    if (!in_escape_region(ph, x, y)) {
        // Confined for the full budget: budget-limited bounded-orbit claim.
        return out;
    }
    if (dominant_relerr(dominant_log(ph, x, y)) >= 0.5) {
        out.undecided = true; // escape entry computed from cancelled digits
        return out;
    }
    const long long entry = n;

    // Certified phase, relative to the entry point w0 = H^{+-entry}(z):
    //   value(N) = d^{-N} log|w_N|  (minus log|a|/(d-1) backward, exact),
    // accumulated as value(N+1) = value(N) + d^{-(N+1)} log|1+delta_N|.
    // The result is G at the entry point; dividing by d^entry at the end
    // gives G(z) since G(H z) = d G(z).
    const double log_a = std::log(std::abs(H.a));
    double scale = 1.0;
    double value = dominant_log(ph, x, y);
    if (backward) value -= log_a / (d - 1);
    long long steps_cert = 0;

    auto tail_bound = [&](double dom_log) {
        // 4C/((2d-1)|w_N|) * d^{-N}; |w| at least doubles per step.
        double inv_w = std::exp(std::min(700.0, std::log(ph.C) - dom_log));
        return scale * inv_w * 4.0 / (2.0 * d - 1.0);
    };

    double tail = tail_bound(dominant_log(ph, x, y));
    double slop = 4.0 * kEps * (std::abs(value) + 1.0);
    // value(N) = d^{-N} log|w_N| exactly (telescoped), so the inherited
    // coordinate error enters only through the last log: |dlog| <= 2 r for
    // relative error r <= 1/2.
    double cancel = 2.0 * scale * dominant_relerr(dominant_log(ph, x, y));
    while (tail + slop + cancel > tol) {
        if (n >= budget) {
            out.iterations = n;
            out.undecided = true; // entered the escape region, ran out mid-certification
            return out;
        }
        XComplex px = x, py = y;
        double lx0 = px.log_abs(), ly0 = py.log_abs();
        advance(H, ph, x, y);
        ++n;
        ++steps_cert;
        scale /= d;
        track(lx0, ly0, x.log_abs(), y.log_abs());
        double lw = dominant_log(ph, x, y);
        double rdom = dominant_relerr(lw);
        cancel = 2.0 * scale * rdom;
        // tail and slop are strictly positive and cancel never shrinks once
        // the orbit expands, so these two states cannot reach tol; stopping
        // here avoids iterating the exponent past its range for nothing.
        if (rdom >= 0.5 || cancel >= tol) {
            out.iterations = n;
            out.undecided = true;
            return out;
        }
        // log|1 + q/w^d| = log|w_next| - d log|w| (+ log|a| backward), exact
        // in logs; accumulating it keeps the value identical to the telescoped
        // closed form at every truncation point.
        double lw_prev = dominant_log(ph, px, py);
        double log_factor = lw - d * lw_prev; // log|1+delta| (+log|a| backward)
        if (backward) log_factor += log_a;
        value += scale * log_factor;
        tail = tail_bound(lw);
        slop = 4.0 * kEps * (std::abs(value) + 1.0) * (1.0 + static_cast<double>(steps_cert));
    }

    double down = std::pow(static_cast<double>(d), -static_cast<double>(entry));
    out.value = value * down;
    out.error_bound = (tail + slop + cancel) * down;
    out.iterations = n;
    out.escaped = true;
    return out;
}

} // namespace

GreenEstimate green_plus(const HenonMap& H, const ComplexPair& z, double tol,
                         long long budget) {
    return run_green(H, z, tol, budget, false);
}

GreenEstimate green_minus(const HenonMap& H, const ComplexPair& z, double tol,
                          long long budget) {
    return run_green(H, z, tol, budget, true);
}

Membership membership(const HenonMap& H, const ComplexPair& z, LevelSpec level,
                      long long budget) {
    if (!(level.c > 0.0)) throw Error("bad-level", "level c must be positive");
    GreenEstimate g = green_plus(H, z, std::min(1e-9, level.c * 1e-6), budget);
    if (g.undecided) return Membership::boundary_unresolved;
    if (!g.escaped) return Membership::K_plus;
    if (g.value - g.error_bound >= level.c) return Membership::outside;
    if (g.value + g.error_bound < level.c && g.value > 0.0)
        return Membership::Omega_prime_interior;
    return Membership::boundary_unresolved;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::K_plus: return "K_plus";
        case Membership::Omega_prime_interior: return "Omega_prime_interior";
        case Membership::boundary_unresolved: return "boundary_unresolved";
        case Membership::outside: return "outside";
    }
    return "?";
}

double log_gap_bound(const HenonMap& H, double R) {
    double r0 = escape_radius(H);
    if (!(R >= r0)) throw Error("radius-too-small", "R below escape radius");
    return 4.0 * tail_constant(H) / ((2.0 * H.degree() - 1.0) * R);
}

double r_epsilon(const HenonMap& H, double eps) {
    if (!(eps > 0.0)) throw Error("bad-tol", "eps must be positive");
    double R = escape_radius(H);
    while (log_gap_bound(H, R) >= eps) {
        R *= 2.0;
        if (!std::isfinite(R)) throw Error("radius-too-small", "eps unattainable");
    }
    return R;
}

GridResult render_slice(const HenonMap& H, const SlicePlane& plane,
                        const GridSpec& grid, LevelSpec level, double tol,
                        long long budget) {
    if (grid.nx < 1 || grid.ny < 1) throw Error("bad-grid", "grid must be nonempty");
    if (!(grid.smin <= grid.smax) || !(grid.tmin <= grid.tmax))
        throw Error("bad-grid", "bounds must be finite and ordered");
    if (!(level.c > 0.0)) throw Error("bad-level", "level c must be positive");

    GridResult res;
    res.grid = grid;
    res.plane = plane;
    res.level = level.c;
    res.tol = tol;
    res.budget = budget;
    res.cells.resize(static_cast<size_t>(grid.nx) * grid.ny);
    res.tags.resize(res.cells.size());

    auto cell_point = [&](int i, int j) {
        double s = grid.smin + (grid.smax - grid.smin) * (i + 0.5) / grid.nx;
        double t = grid.tmin + (grid.tmax - grid.tmin) * (j + 0.5) / grid.ny;
        return ComplexPair{plane.origin.x + s * plane.u.x + t * plane.v.x,
                           plane.origin.y + s * plane.u.y + t * plane.v.y};
    };

    auto run_rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            for (int i = 0; i < grid.nx; ++i) {
                ComplexPair z = cell_point(i, j);
                size_t idx = static_cast<size_t>(j) * grid.nx + i;
                res.cells[idx] = green_plus(H, z, tol, budget);
                const GreenEstimate& g = res.cells[idx];
                if (g.undecided) {
                    res.tags[idx] = Membership::boundary_unresolved;
                } else if (!g.escaped) {
                    res.tags[idx] = Membership::K_plus;
                } else if (g.value - g.error_bound >= level.c) {
                    res.tags[idx] = Membership::outside;
                } else if (g.value + g.error_bound < level.c && g.value > 0.0) {
                    res.tags[idx] = Membership::Omega_prime_interior;
                } else {
                    res.tags[idx] = Membership::boundary_unresolved;
                }
            }
        }
    };

    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    int nthreads = static_cast<int>(std::min<unsigned>(hw, grid.ny));
    if (nthreads <= 1 || static_cast<long long>(grid.nx) * grid.ny < 64) {
        run_rows(0, grid.ny);
    } else {
        std::vector<std::thread> pool;
        int per = (grid.ny + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            int j0 = t * per;
            int j1 = std::min(grid.ny, j0 + per);
            if (j0 >= j1) break;
            pool.emplace_back(run_rows, j0, j1);
        }
        for (auto& th : pool) th.join();
    }
    return res;
}

} // namespace shortc2
