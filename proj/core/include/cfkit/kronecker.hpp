#pragma once

#include <vector>

#include "cfkit/numeration.hpp"

namespace cfkit {

/// Multiset of circle-gap lengths with multiplicities, largest first.
struct GapSpectrum {
    std::vector<std::pair<ExactReal, long>> items;

    long points() const {
        long n = 0;
        for (auto& [len, cnt] : items) n += cnt;
        return n;
    }
    std::vector<ExactReal> lengths() const {
        std::vector<ExactReal> out;
        for (auto& [len, cnt] : items) out.push_back(len);
        return out;
    }
};

struct ThreeDistanceResult {
    GapSpectrum spectrum;           // directly sorted gaps of {k alpha}, k < N
    std::vector<ExactReal> predicted; // distinct lengths from the formula
    long s = 0;                     // least s with N <= q_s + q_{s-1}
    Int i;                          // a_s - n_s in the formula
    bool two_value_boundary = false;
    bool matches = false;           // spectrum lengths == predicted set
};

/// Gaps of the subdivision of [0,1] by {k alpha}, k in [0,N-1], computed
/// both by direct exact sorting and by the closed formulas (two or three
/// lengths delta_{s-1}, delta_s + i delta_{s-1}, delta_s + (i+1)
/// delta_{s-1}); the result carries the agreement verdict. For a rational
/// base N may not exceed the reduced denominator.
ThreeDistanceResult three_distance(const ExactReal& alpha_value, long n_points);

/// Largest N such that floor(n alpha) = floor(n alpha2) for all n < N:
/// the denominator of the best rational in ]alpha, alpha2].
Int floors_match_horizon(const ExactReal& alpha_value, const ExactReal& alpha2);

/// I_n(x) = sum_{k<n} floor(kx) and F_n(x) = sum_{k<n} {kx}, exact.
Int floor_sum(const ExactReal& x, long n);
ExactReal frac_sum(const ExactReal& x, long n);

/// Floor-sum membership test: p/q is a reduced semi-convergent of alpha
/// iff sum_{k<q} floor(k alpha) = (p-1)(q-1)/2 (alpha must not be the
/// nearest left strict convergent of p/q; the caller asserts that).
bool is_semiconvergent_by_floor_sum(const ExactReal& alpha_value, const Int& p, const Int& q);

/// Indices n <= n_max whose {n alpha} is a best one-sided approximation
/// of beta, from the closed-form digit parametrization, ascending.
std::vector<Int> best_sided_alpha_approximations(const Alpha& alpha, const ExactReal& beta,
                                                 Side side, const Int& n_max);

struct CountWitnessRow {
    Int b;      // digit b_i of beta
    Int nu;     // shifted integer nu_i
    Int tau;    // 1 or min(b_i, n_i)
    int eps = 0;
    int eps_prime = 0;
};

struct CountWitness {
    std::vector<CountWitnessRow> rows;
};

/// C(alpha,beta,nu) = #{k in [0,nu-1] : {k alpha} < beta} via the
/// alternating digit formula sum (-1)^{i-1} [b_i nu_i + tau_i + eps_i -
/// eps'_i]. For a rational base nu <= q and beta on the grid; over a
/// quadratic base beta must be exactly representable (a grid point
/// frac(m alpha) or a rational).
Int count_below(const Alpha& alpha, const ExactReal& beta, const Int& nu,
                CountWitness* witness = nullptr);

/// C'(alpha,beta,nu) = #{k in [0,nu] : {k alpha} <= beta} via the
/// correction D = 1_{n <=_A b} + 1_{b <=_R n} - 1_{n=b}.
Int count_below_or_equal(const Alpha& alpha, const ExactReal& beta, const Int& nu);

/// mu_nu([0,beta[) = C(alpha,beta,nu)/nu as an exact rational.
ExactReal repartition(const Alpha& alpha, const ExactReal& beta, const Int& nu);

} // namespace cfkit
