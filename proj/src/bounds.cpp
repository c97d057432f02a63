#include "cfc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cfc/solvers.hpp"

namespace cfc::bounds {

namespace {

constexpr double kBracketInset = 1e-9;  // open intervals are never clamped, only inset

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void require_l2(int l) {
    if (l < 2)
        throw domain_error(
            "l must be >= 2 here; the l=1 (list-decoding) case is outside this machinery");
    if (l > 20) throw domain_error("l > 20 not supported (type table has 2^l entries)");
}

void check_q_cap(double q_cap) {
    if (!(q_cap > 0.0 && q_cap < 1.0)) throw domain_error("Q must lie in (0,1)");
}

// q(y) = Q * (1 + y + ... + y^{s-1}); stable geometric-sum form.
double q_of_y(int s, double q_cap, double y) {
    double sum = 1.0;
    double p = 1.0;
    for (int i = 1; i < s; ++i) {
        p *= y;
        sum += p;
    }
    return q_cap * sum;
}

// One-minus-(1-z)^l without cancellation near z = 0.
double one_minus_pow(double z, int l) { return -std::expm1(l * std::log1p(-z)); }

// Q(z) = (1-z) - (1-q) z (1-z)^l / (1 - (1-z)^l); decreasing bijection.
double q_cap_of_z(int l, double q, double z) {
    const double omt = one_minus_pow(z, l);
    const double t = 1.0 - omt;
    return (1.0 - z) - (1.0 - q) * z * t / omt;
}

}  // namespace

double binary_entropy(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw domain_error("entropy argument must lie in [0,1]");
    return -xlog2x(a) - xlog2x(1.0 - a);
}

double pos_part(double x) { return x > 0.0 ? x : 0.0; }

double q_hat(double q_cap, int s) {
    check_q_cap(q_cap);
    if (s < 1) throw domain_error("s must be >= 1");
    return -std::expm1(s * std::log1p(-q_cap));
}

SolveResult solve_y(int s, double q_cap, double q) {
    check_q_cap(q_cap);
    if (s < 2) throw domain_error("solve_y requires s >= 2");
    const double upper = std::min(1.0, s * q_cap);
    if (!(q > q_cap && q < upper))
        throw domain_error("q=" + std::to_string(q) + " must lie strictly inside (Q, min(1,sQ)) = (" +
                           std::to_string(q_cap) + ", " + std::to_string(upper) + ")");
    const RootResult r = bisect([&](double y) { return q_of_y(s, q_cap, y) - q; },
                                kBracketInset, 1.0 - kBracketInset, 1e-13);
    return SolveResult{r.x, r.iterations, q_of_y(s, q_cap, r.x) - q};
}

double a_exponent(int s, double q_cap, double q) {
    const double y = solve_y(s, q_cap, q).value;
    return (1.0 - q) * std::log2(1.0 - q) +
           q * std::log2(q_cap * std::pow(y, s) / (1.0 - y)) +
           s * q_cap * std::log2((1.0 - y) / y) + s * binary_entropy(q_cap);
}

SolveResult solve_z(int l, double q_cap, double q) {
    require_l2(l);
    check_q_cap(q_cap);
    if (!(q > 0.0 && q <= 1.0)) throw domain_error("q must lie in (0,1]");
    const RootResult r = bisect([&](double z) { return q_cap_of_z(l, q, z) - q_cap; },
                                kBracketInset, 1.0 - kBracketInset, 1e-13);
    return SolveResult{r.x, r.iterations, q_cap_of_z(l, q, r.x) - q_cap};
}

TypeDistribution::TypeDistribution(int l, std::vector<double> tau) : l_(l), tau_(std::move(tau)) {
    if (tau_.size() != (std::size_t{1} << l_)) throw domain_error("type table size mismatch");
}

double TypeDistribution::sum() const {
    double s = 0.0;
    for (double v : tau_) s += v;
    return s;
}

double TypeDistribution::marginal(int i) const {
    double s = 0.0;
    for (std::size_t mask = 0; mask < tau_.size(); ++mask)
        if ((mask >> i) & 1u) s += tau_[mask];
    return s;
}

TypeDistribution extremal_type(int l, double q_cap, double q) {
    const double z = solve_z(l, q_cap, q).value;
    const double c = (1.0 - q_cap) / z;
    const double omt = one_minus_pow(z, l);
    std::vector<double> tau(std::size_t{1} << l);
    const std::uint32_t full = (std::uint32_t{1} << l) - 1;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        const int ones = std::popcount(mask);
        tau[mask] = c * std::pow(1.0 - z, ones) * std::pow(z, l - ones);
    }
    tau[full] = 1.0 - c * omt;
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        if (!(tau[mask] > 0.0 && tau[mask] < 1.0))
            throw domain_error("extremal type leaves (0,1) at Q=" + std::to_string(q_cap) +
                               ", q=" + std::to_string(q) + " (component " +
                               std::to_string(mask) + " = " + std::to_string(tau[mask]) + ")");
    return TypeDistribution(l, std::move(tau));
}

double type_objective(const TypeDistribution& tau, double q_cap, double q) {
    const double t1 = tau.all_ones();
    if (t1 > q)
        throw domain_error("type objective needs tau(all-ones) <= q (got " + std::to_string(t1) +
                           " > " + std::to_string(q) + ")");
    double entropy_sum = 0.0;
    for (double v : tau.values()) entropy_sum += xlog2x(v);
    return entropy_sum - q * binary_entropy(t1 / q) + binary_entropy(t1) +
           tau.width() * binary_entropy(q_cap);
}

double d_exponent(int l, double q_cap, double q) {
    const double z = solve_z(l, q_cap, q).value;
    const double c = (1.0 - q_cap) / z;
    const double omt = one_minus_pow(z, l);
    const double t1 = 1.0 - c * omt;
    if (!(t1 > 0.0 && t1 < 1.0) || t1 > q)
        throw domain_error("covering exponent undefined at Q=" + std::to_string(q_cap) +
                           ", q=" + std::to_string(q));
    // sum over patterns grouped by weight
    double entropy_sum = xlog2x(t1);
    for (int ones = 0; ones < l; ++ones) {
        const double v = c * std::pow(1.0 - z, ones) * std::pow(z, l - ones);
        entropy_sum += static_cast<double>(binom_u64(static_cast<std::uint64_t>(l),
                                                     static_cast<std::uint64_t>(ones))) *
                       xlog2x(v);
    }
    return entropy_sum - q * binary_entropy(t1 / q) + binary_entropy(t1) +
           l * binary_entropy(q_cap);
}

double d_at_qhat(int l, double q_cap, int s) {
    require_l2(l);
    check_q_cap(q_cap);
    if (s < 1) throw domain_error("s must be >= 1");
    const double qh = q_hat(q_cap, s);
    const double z = solve_z(l, q_cap, qh).value;
    const double omt = one_minus_pow(z, l);
    const double t = 1.0 - omt;
    const double c = (1.0 - q_cap) / z;
    return (1.0 - q_cap) * l * std::log2(z) - (1.0 - qh) * std::log2(omt) +
           l * (c * (1.0 - z) - (c - qh) * t) * std::log2(1.0 - z) +
           l * binary_entropy(q_cap);
}

namespace {

constexpr double kCoarseStep = 1e-3;

// Coarse grid over Q in (0,1), then golden refinement around the best point.
template <typename F>
std::pair<double, double> maximize_over_q_cap(F&& f) {
    double best_q = kCoarseStep;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < 1000; ++i) {
        const double q_cap = i * kCoarseStep;
        const double v = f(q_cap);
        if (v > best_v) {
            best_v = v;
            best_q = q_cap;
        }
    }
    const double lo = std::max(kBracketInset, best_q - kCoarseStep);
    const double hi = std::min(1.0 - kBracketInset, best_q + kCoarseStep);
    auto [x, v] = golden_max(f, lo, hi, 1e-9);
    if (v < best_v) return {best_q, best_v};  // refinement can only improve
    return {x, v};
}

}  // namespace

BoundResult capacity_lower(int s, int l) {
    require_l2(l);
    if (s < 1) throw domain_error("s must be >= 1");
    auto [q_cap, d] = maximize_over_q_cap([&](double q) { return d_at_qhat(l, q, s); });
    BoundResult res;
    res.value = d / l;
    res.argmax_q_cap = q_cap;
    res.q_hat = q_hat(q_cap, s);
    const SolveResult zr = solve_z(l, q_cap, res.q_hat);
    res.z = zr.value;
    res.iterations = zr.iterations;
    res.residual = std::abs(zr.residual);
    return res;
}

double capacity_upper(int s, int l) {
    if (s < 1 || l < 1) throw domain_error("require s >= 1 and l >= 1");
    return 1.0 / (static_cast<double>(s) * static_cast<double>(l));
}

namespace {

struct InnerMin {
    double value = std::numeric_limits<double>::infinity();
    double argmin_q = std::numeric_limits<double>::quiet_NaN();
};

// min over q in (Q, min(1,sQ)) of A(s,Q,q) + [D(l,Q,q) - l R]^+.
// The objective is smooth except where D = l R; kinks are located by
// bisection and each smooth segment is minimized separately. A coarse safety
// grid guards against missed structure; `dense` additionally applies the
// 1e-4-resolution fallback grid.
InnerMin inner_min_over_q(int s, int l, double rate, double q_cap, bool dense) {
    const double upper = std::min(1.0, s * q_cap);
    const double span = upper - q_cap;
    InnerMin best;
    if (span <= 4 * kBracketInset) return best;
    // Scan bounds sit slightly inside the open interval; this trims a sliver
    // where the objective is large anyway (A is bounded away from 0 there).
    const double inset = std::max(kBracketInset, 1e-7 * span);
    const double lo = q_cap + inset;
    const double hi = upper - inset;

    auto objective = [&](double q) {
        return a_exponent(s, q_cap, q) + pos_part(d_exponent(l, q_cap, q) - l * rate);
    };
    auto consider = [&](double q, double v) {
        if (v < best.value) {
            best.value = v;
            best.argmin_q = q;
        }
    };

    // Locate kinks: sign changes of D - lR on a scan grid.
    const int n_scan = 128;
    std::vector<double> boundaries{lo};
    double prev_q = lo;
    double prev_g = d_exponent(l, q_cap, prev_q) - l * rate;
    for (int i = 1; i <= n_scan; ++i) {
        const double q = lo + (hi - lo) * i / n_scan;
        const double g = d_exponent(l, q_cap, q) - l * rate;
        if ((g > 0.0) != (prev_g > 0.0)) {
            const RootResult kink = bisect(
                [&](double x) { return d_exponent(l, q_cap, x) - l * rate; }, prev_q, q, 1e-12);
            boundaries.push_back(kink.x);
        }
        prev_q = q;
        prev_g = g;
    }
    boundaries.push_back(hi);

    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        auto [x, v] = golden_min(objective, boundaries[i], boundaries[i + 1], 1e-10);
        consider(x, v);
    }
    const int n_coarse = dense ? static_cast<int>(std::min(50000.0, std::ceil(span / 1e-4)))
                               : 256;
    for (int i = 0; i <= n_coarse; ++i) {
        const double q = lo + (hi - lo) * i / n_coarse;
        consider(q, objective(q));
    }
    // Final polish around the winner.
    const double step = (hi - lo) / n_coarse;
    auto [x, v] = golden_min(objective, std::max(lo, best.argmin_q - step),
                             std::min(hi, best.argmin_q + step), 1e-11);
    consider(x, v);
    return best;
}

}  // namespace

double exponent_lower_at_q_cap(int s, int l, double rate, double q_cap) {
    require_l2(l);
    check_q_cap(q_cap);
    if (s < 2) throw domain_error("exponent bound requires s >= 2");
    if (!(rate > 0.0)) throw domain_error("R must be positive");
    return inner_min_over_q(s, l, rate, q_cap, /*dense=*/true).value;
}

BoundResult exponent_lower(int s, int l, double rate) {
    require_l2(l);
    if (s < 2) throw domain_error("exponent bound requires s >= 2");
    if (!(rate > 0.0)) throw domain_error("R must be positive");

    auto coarse = [&](double q_cap) {
        return inner_min_over_q(s, l, rate, q_cap, /*dense=*/false).value;
    };
    auto [q_cap, coarse_value] = maximize_over_q_cap(coarse);
    (void)coarse_value;
    const InnerMin inner = inner_min_over_q(s, l, rate, q_cap, /*dense=*/true);

    BoundResult res;
    res.value = inner.value;
    res.argmax_q_cap = q_cap;
    res.argmin_q = inner.argmin_q;
    res.q_hat = q_hat(q_cap, s);
    if (std::isfinite(inner.argmin_q)) {
        const SolveResult zr = solve_z(l, q_cap, inner.argmin_q);
        const SolveResult yr = solve_y(s, q_cap, inner.argmin_q);
        res.z = zr.value;
        res.y = yr.value;
        res.iterations = zr.iterations + yr.iterations;
        res.residual = std::max(std::abs(zr.residual), std::abs(yr.residual));
    }
    return res;
}

BigInt superset_count(const BigInt& t, int s, int l) { return strict_superset_count(t, s, l); }

double design_error_floor(int n_rows, double rate, int s, int l) {
    if (n_rows < 1) throw domain_error("N must be >= 1");
    if (!(rate > 0.0)) throw domain_error("R must be positive");
    const double exponent = rate * n_rows;
    if (exponent > 1000.0) throw domain_error("floor(2^{RN}) too large (RN > 1000)");
    using BigFloat = boost::multiprecision::cpp_bin_float_100;
    const BigFloat tf = boost::multiprecision::floor(
        boost::multiprecision::pow(BigFloat(2), BigFloat(exponent)));
    const BigInt t = tf.convert_to<BigInt>();
    const BigInt count = superset_count(t, s, l);
    if (count == 0) return 0.0;
    const BigRat ratio(BigInt(1) << static_cast<unsigned>(n_rows), count);
    if (ratio >= 1) return 0.0;
    return 1.0 - static_cast<double>(ratio);
}

AsymptoticRates asymptotic_rates(int s, int l) {
    if (s < 2 || l < 1) throw domain_error("require s >= 2 and l >= 1");
    const double e = std::exp(1.0);
    AsymptoticRates r;
    const double common = std::pow(l + 1.0, l + 1.0) * std::log2(static_cast<double>(s)) /
                          std::pow(static_cast<double>(s), l + 1.0);
    r.rate_upper = common / (2.0 * std::pow(e, l - 1.0));
    r.rate_lower = common / std::pow(e, l + 1.0);
    r.capacity_lower_asym = std::log2(e) * std::pow(static_cast<double>(l), l - 1.0) /
                            (std::pow(e, l) * std::pow(static_cast<double>(s), l));
    return r;
}

}  // namespace cfc::bounds
