#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfkit/exact_real.hpp"

namespace cfkit::oracle {

/// What a brute-force referee computed, for CLI agreement reports.
struct OracleReport {
    std::string instance;
    std::string value;
    std::string method;
    double milliseconds = 0.0;
};

/// Definitional brute-force reference implementations. They share no code
/// with the main modules except ExactReal: partial quotients come from a
/// local Euclid loop and every count is a direct enumeration. Intended for
/// desk-scale inputs; TooLarge guards the obvious blowups.

/// Partial quotients a_1..a_r of a rational x in [0,1[ under the
/// trailing-1 convention (depth r; the trailing 1 itself is not listed).
std::vector<Int> base_digits(const ExactReal& x);

/// All admissible digit words of a rational base, sorted by RLO. The
/// count always equals the reduced denominator. When `drop_zero` is set
/// the all-zero word is omitted (the Maxes-tail reading).
std::vector<std::vector<Int>> enumerate_admissible(const ExactReal& alpha, bool drop_zero = false);

/// Gap lengths (with multiplicities, largest first) of the subdivision of
/// [0,1] by {k alpha}, k < n_points, by direct exact sorting.
std::vector<std::pair<ExactReal, long>> gaps(const ExactReal& alpha, long n_points);

/// Indices n <= n_max that are best one-sided alpha-approximations of
/// beta: a plain record scan of {n alpha - beta} resp. {beta - n alpha}.
std::vector<Int> records(const ExactReal& alpha, const ExactReal& beta, bool right_side,
                         long n_max);

/// #{k in [0,nu-1] : {k alpha} < beta} by direct enumeration.
Int count(const ExactReal& alpha, const ExactReal& beta, long nu);

/// #{k in [0,nu] : {k alpha} <= beta} by direct enumeration.
Int count_leq(const ExactReal& alpha, const ExactReal& beta, long nu);

/// First n with floor(n alpha) != floor(n alpha2).
Int floor_horizon(const ExactReal& alpha, const ExactReal& alpha2, long cap = 1000000);

/// Minimal-denominator rational in the closed interval between theta and
/// theta2, by scanning denominators 1..q_max.
std::optional<ExactReal> best_rational(const ExactReal& theta, const ExactReal& theta2,
                                       const Int& q_max);

/// Best one-sided rational approximations of x with denominators <= q_max
/// by a per-denominator record scan.
std::vector<ExactReal> sided_rational_records(const ExactReal& x, bool right_side,
                                              const Int& q_max);

} // namespace cfkit::oracle
