#pragma once

#include <cstdint>
#include <vector>

#include "cfc/combinatorics.hpp"

namespace cfc::bounds {

/// Binary entropy, base 2, with the continuous extension h(0)=h(1)=0.
double binary_entropy(double a);

/// max(x, 0).
double pos_part(double x);

/// 1 - (1-Q)^s.
double q_hat(double q_cap, int s);

struct SolveResult {
    double value = 0.0;   // the solved parameter (y or z)
    int iterations = 0;
    double residual = 0.0;  // defining-equation residual at the solution
};

/// Unique y in (0,1) with q = Q*(1-y^s)/(1-y); q must lie strictly inside
/// (Q, min(1, s*Q)).
SolveResult solve_y(int s, double q_cap, double q);

/// Unique z in (0,1) satisfying the row-type stationarity relation
/// Q = [(1-z)(1-(1-z)^l) - (1-q) z (1-z)^l] / [1-(1-z)^l]; l >= 2.
SolveResult solve_z(int l, double q_cap, double q);

/// Union-weight exponent A(s,Q,q) in parametric form (zero exactly at q_hat).
double a_exponent(int s, double q_cap, double q);

/// Extremal row-type distribution over {0,1}^l for the covering exponent.
class TypeDistribution {
public:
    TypeDistribution(int l, std::vector<double> tau);

    int width() const { return l_; }
    double at_mask(std::uint32_t mask) const { return tau_[mask]; }
    double all_ones() const { return tau_[tau_.size() - 1]; }
    double sum() const;
    double marginal(int i) const;  // sum over patterns with bit i set
    const std::vector<double>& values() const { return tau_; }

private:
    int l_;
    std::vector<double> tau_;  // indexed by bit pattern
};

/// Extremal type for (l, Q, q); every component must land in (0,1).
TypeDistribution extremal_type(int l, double q_cap, double q);

/// Objective F(tau, Q, q) of the covering-exponent minimization.
double type_objective(const TypeDistribution& tau, double q_cap, double q);

/// Covering exponent D(l,Q,q) via the extremal type.
double d_exponent(int l, double q_cap, double q);

/// Closed form of D(l,Q,q_hat(Q,s)) (the capacity integrand).
double d_at_qhat(int l, double q_cap, int s);

struct BoundResult {
    double value = 0.0;
    double argmax_q_cap = 0.0;  // maximizing Q
    double argmin_q = 0.0;      // minimizing q (exponent bound only)
    double q_hat = 0.0;
    double z = 0.0;
    double y = 0.0;             // exponent bound only
    int iterations = 0;
    double residual = 0.0;      // max defining-equation residual seen at the optimum
};

/// Random-coding capacity lower bound (1/l) max_Q D(l,Q,q_hat); l >= 2.
BoundResult capacity_lower(int s, int l);

/// 1/(s*l).
double capacity_upper(int s, int l);

/// Error-exponent lower bound max_Q min_q { A + [D - l*R]^+ }; l >= 2, R > 0.
BoundResult exponent_lower(int s, int l, double rate);

/// Inner minimum over q at a fixed Q.
double exponent_lower_at_q_cap(int s, int l, double rate, double q_cap);

/// |P_hat_s(l,t)|, overflow-safe.
BigInt superset_count(const BigInt& t, int s, int l);

/// 1 - 2^N / |P_hat_s(l, floor(2^{R N}))| clipped to [0,1].
double design_error_floor(int n_rows, double rate, int s, int l);

struct AsymptoticRates {
    double rate_upper = 0.0;          // (l+1)^{l+1} log2(s) / (2 e^{l-1} s^{l+1})
    double rate_lower = 0.0;          // (l+1)^{l+1} log2(s) / (e^{l+1} s^{l+1})
    double capacity_lower_asym = 0.0; // log2(e) l^{l-1} / (e^l s^l)
};

/// Leading-order asymptotic expressions (no o(1) terms).
AsymptoticRates asymptotic_rates(int s, int l);

}  // namespace cfc::bounds
