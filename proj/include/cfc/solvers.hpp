#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "cfc/errors.hpp"

namespace cfc {

struct RootResult {
    double x = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

/// Bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs.
/// Runs until the bracket width drops below xtol.
template <typename F>
RootResult bisect(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0, 0.0};
    if (fhi == 0.0) return {hi, 0, 0.0};
    if ((flo > 0.0) == (fhi > 0.0))
        throw domain_error("bisection: no sign change on bracket [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] (f = " + std::to_string(flo) + ", " +
                           std::to_string(fhi) + ")");
    int it = 0;
    while (hi - lo > xtol && it < max_iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return {mid, it + 1, 0.0};
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        ++it;
    }
    const double x = 0.5 * (lo + hi);
    return {x, it, f(x)};
}

/// Golden-section minimizer on [a, b]; f must be unimodal there for an exact
/// answer, otherwise returns a local minimizer. Deterministic.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double xtol,
                                     int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498948482;  // 1/phi
    double c = b - (b - a) * inv_phi;
    double d = a + (b - a) * inv_phi;
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    while (b - a > xtol && it < max_iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
        ++it;
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

/// Golden-section maximizer.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double xtol,
                                     int max_iter = 200) {
    auto [x, v] = golden_min([&](double t) { return -f(t); }, a, b, xtol, max_iter);
    return {x, -v};
}

}  // namespace cfc
