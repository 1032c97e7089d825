#include "shortc2/biholo.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "shortc2/error.hpp"
#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"
#include "shortc2/rng.hpp"

namespace shortc2 {

namespace {

void require_degree(int d) {
    if (d < 2) throw Error("bad-map", "degree must be >= 2");
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::optional<long long> parse_ll(const std::string& s) {
    if (!all_digits(s) || s.size() > 18) return std::nullopt;
    long long v = 0;
    for (char ch : s) v = v * 10 + (ch - '0');
    return v;
}

} // namespace

Rat make_rat(long long num, long long den) {
    if (num <= 0 || den <= 0)
        throw Error("bad-level", "levels must be positive");
    long long g = std::gcd(num, den);
    return Rat{num / g, den / g};
}

std::optional<Rat> parse_positive_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        auto num = parse_ll(text.substr(0, slash));
        auto den = parse_ll(text.substr(slash + 1));
        if (!num || !den || *num == 0 || *den == 0) return std::nullopt;
        return make_rat(*num, *den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot);
        std::string fp = text.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!all_digits(ip) || !all_digits(fp) || ip.size() + fp.size() > 15)
            return std::nullopt;
        auto digits = parse_ll(ip + fp);
        if (!digits || *digits == 0) return std::nullopt;
        long long den = 1;
        for (size_t k = 0; k < fp.size(); ++k) den *= 10;
        return make_rat(*digits, den);
    }
    auto num = parse_ll(text);
    if (!num || *num == 0) return std::nullopt;
    return make_rat(*num, 1);
}

std::optional<long long> biholo_criterion(const Rat& c1, const Rat& c2,
                                          int d) {
    require_degree(d);
    if (c1.num <= 0 || c1.den <= 0 || c2.num <= 0 || c2.den <= 0)
        throw Error("bad-level", "levels must be positive");
    // ratio = c1/c2 in lowest terms, via 128-bit cross products.
    __int128 p = static_cast<__int128>(c1.num) * c2.den;
    __int128 q = static_cast<__int128>(c1.den) * c2.num;
    __int128 a = p < 0 ? -p : p, b = q < 0 ? -q : q;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    p /= a;
    q /= a;
    if (p == q) return 0;
    if (q == 1) { // ratio is an integer: must be a pure power of d
        long long n = 0;
        while (p % d == 0) {
            p /= d;
            ++n;
        }
        if (p == 1) return n;
        return std::nullopt;
    }
    if (p == 1) { // unit fraction: negative exponent
        long long n = 0;
        while (q % d == 0) {
            q /= d;
            ++n;
        }
        if (q == 1) return -n;
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<long long> biholo_criterion(double c1, double c2, int d) {
    require_degree(d);
    if (!(c1 > 0.0) || !(c2 > 0.0))
        throw Error("bad-level", "levels must be positive");
    double t = std::log(c1 / c2) / std::log(static_cast<double>(d));
    long long n = std::llround(t);
    if (std::llabs(n) > 1024) return std::nullopt;
    double scaled = c2 * std::pow(static_cast<double>(d),
                                  static_cast<double>(n));
    if (std::abs(c1 - scaled) <= 1e-12 * std::max(c1, scaled)) return n;
    return std::nullopt;
}

ContinuumFamily continuum_family(double c, int d, int count) {
    require_degree(d);
    if (!(c > 0.0)) throw Error("bad-level", "level must be positive");
    if (count < 2) throw Error("bad-level", "count must be >= 2");
    ContinuumFamily fam;
    fam.lo = c / d;
    fam.hi = c;
    double step = (fam.hi - fam.lo) / (count + 1);
    for (int i = 1; i <= count; ++i) fam.levels.push_back(fam.lo + step * i);
    fam.all_none = true;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            bool none = !biholo_criterion(fam.levels[i], fam.levels[j], d)
                             .has_value();
            fam.certificates.push_back(PairCertificate{i, j, none});
            fam.all_none = fam.all_none && none;
        }
    }
    return fam;
}

InvolutionReport involution_check(int samples, std::uint64_t seed) {
    if (samples < 1) throw Error("bad-iterate", "samples >= 1 required");
    HenonMap H(MonicPoly(2, {{0.0, 0.0}}), {1.0, 0.0});

    Rng rng(seed);
    InvolutionReport rep;
    rep.samples = samples;
    rep.pass = true;
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (int s = 0; s < samples; ++s) {
        // |y| >= 7 puts (x,y) straight into V+ and the swap into V-, so
        // both estimates certify on the first iterate.
        std::complex<double> x = rng.complex_box(2.0);
        std::complex<double> y =
            std::polar(rng.uniform(7.0, 10.0), rng.uniform(0.0, two_pi));
        GreenEstimate fwd = green_plus(H, {x, y}, 1e-9);
        GreenEstimate bwd = green_minus(H, {y, x}, 1e-9);
        if (!fwd.escaped || !bwd.escaped) {
            rep.pass = false;
            continue;
        }
        double diff = std::abs(fwd.value - bwd.value);
        double bound = fwd.error_bound + bwd.error_bound;
        rep.max_discrepancy = std::max(rep.max_discrepancy, diff);
        rep.max_combined_bound = std::max(rep.max_combined_bound, bound);
        if (diff > bound) rep.pass = false;
    }
    return rep;
}

} // namespace shortc2
