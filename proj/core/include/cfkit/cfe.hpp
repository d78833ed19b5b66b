#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/exact_real.hpp"

namespace cfkit {

/// A continued-fraction digit: a positive integer or the symbol infinity.
/// Infinity compares greater than every integer and 1/infinity evaluates
/// to 0 inside cfe_value.
class ExtDigit {
public:
    ExtDigit() : value_(0), infinite_(true) {}
    ExtDigit(Int v) : value_(std::move(v)), infinite_(false) {}
    static ExtDigit infinity() { return ExtDigit(); }

    bool is_infinite() const { return infinite_; }
    const Int& value() const;

    bool operator==(const ExtDigit& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator!=(const ExtDigit& o) const { return !(*this == o); }
    bool operator<(const ExtDigit& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    std::string str() const;

private:
    Int value_;
    bool infinite_;
};

/// Lazy continued-fraction expansion of an exact real under the
/// conventions used throughout this library:
///
///   t_0 = ceil(x) - 1, and t_k for k >= 1 comes from iterating the
///   extended Gauss maps; rational expansions end with a final partial
///   quotient 1 (abbreviating an infinite tail of infinity symbols),
///   so 9/4 = [2,3,1] and every integer n = [n-1,1].
///
/// digit(k) returns the full-form digit: infinity past a rational's end.
/// Quadratic inputs yield an infinite, eventually periodic stream that is
/// generated exactly on demand. Lazy memoization is not synchronized:
/// serialize digit requests externally if a stream is shared.
class CfeStream {
public:
    explicit CfeStream(ExactReal x);

    const ExactReal& value() const { return x_; }
    /// Full-form digit t_k (k >= 0); infinity beyond a rational's end.
    ExtDigit digit(std::size_t k);
    /// True once the expansion is known to be finite (always true for
    /// rational inputs after enough digits were pulled).
    bool finished() const { return finished_; }
    /// All abbreviated-form digits [t_0,...,t_r,1]; rational inputs only.
    const std::vector<Int>& digits();
    /// CFE-depth: s for [a_0,...,a_s,1]; nullopt for irrationals.
    std::optional<long> depth();

private:
    ExactReal x_;
    ExactReal state_; // current T_1-orbit point in [0,1]
    std::vector<Int> memo_;
    bool finished_;
    void advance();
};

/// Extended Gauss digit map on [0,1]: 0 -> infinity, 1 -> 1, else
/// ceil(1/x) - 1.
ExtDigit gauss_a1(const ExactReal& x);

/// Extended Gauss shift on [0,1]: 0 -> 0, 1 -> 0, x -> 1 when 1/x is an
/// integer >= 2, else {1/x}.
ExactReal gauss_t1(const ExactReal& x);

/// phi_1^-1: the abbreviated digit list of x (rational => trailing 1).
/// For irrational x only the stream form is finite; use CfeStream directly.
std::vector<Int> cfe_of(const ExactReal& x);

/// Backward evaluation of [t_0,...,t_n]; exact. Digits t_k (k >= 1) must
/// be >= 1. Throws EmptyInput on an empty list.
ExactReal cfe_value(const std::vector<Int>& digits);

/// CFE-depth mu(x): nullopt (infinity) iff x is irrational.
std::optional<long> mu_depth(const ExactReal& x);

/// Reduced convergent (p_k, q_k) of x, k >= -2 with the standard seeds
/// p_-2/q_-2 = 0/1 and p_-1/q_-1 = 1/0. For rational x indices run up to
/// mu(x)+1; beyond that IndexBeyondDepth.
std::pair<Int, Int> convergent(const ExactReal& x, long k);

/// Semi-convergents of x with denominator <= max_denominator: the
/// rationals [a_0,...,a_{s-1},b_s,1] with 1 <= b_s <= a_s and a_{s+1}
/// finite, deduplicated, ascending by denominator.
std::vector<ExactReal> semiconvergents(const ExactReal& x, const Int& max_denominator);

/// The unique rational of minimal denominator in the closed interval
/// between theta and theta2 (either order). Throws EqualEndpoints.
ExactReal best_rational_between(const ExactReal& theta, const ExactReal& theta2);

/// Minimal-denominator rational in an interval with configurable open
/// endpoints (Stern-Brocot style descent). Used for half-open brackets;
/// the closed case must agree with best_rational_between.
std::optional<ExactReal> simplest_rational_in(const ExactReal& lo, const ExactReal& hi,
                                              bool lo_strict, bool hi_strict);

enum class Side { Left, Right };

/// Best one-sided rational approximations of x with denominator bound:
/// 0/1 resp. ceil(x)/1 followed by the semi-convergents on the requested
/// side, ascending by denominator.
std::vector<ExactReal> best_sided_rational_approximations(const ExactReal& x, Side side,
                                                          const Int& max_denominator);

/// delta_i = (-1)^i (q_i alpha - p_i) with delta_-2 = alpha, delta_-1 = 1.
/// For rational alpha of depth r, indices above r are IndexBeyondDepth.
ExactReal delta(const ExactReal& alpha, long i);

/// Shared continued-fraction context for a base alpha in [0,1[: partial
/// quotients a_k (a_{r+1} = 1 for rationals of depth r), convergents and
/// the delta tables, all cached. Lazy materialization is not thread-safe;
/// warm the caches before sharing across threads.
class Alpha {
public:
    explicit Alpha(ExactReal value);

    const ExactReal& value() const { return alpha_; }
    bool rational() const { return alpha_.is_rational(); }
    /// mu(alpha); nullopt for irrational alpha.
    std::optional<long> depth() const { return depth_; }
    long depth_or(long fallback) const { return depth_ ? *depth_ : fallback; }

    /// True when digit index k (k >= 1) exists: k <= r+1 for rationals.
    bool has_digit(long k) const { return !depth_ || k <= *depth_ + 1; }
    /// Partial quotient a_k for k in [1 .. r+1] (any k >= 1 if irrational).
    const Int& a(long k) const;
    /// Convergent numerators/denominators, k >= -2.
    const Int& p(long k) const;
    const Int& q(long k) const;
    /// delta_k, k in [-2 .. r+1] (delta_{r+1} = 0 for rationals).
    const ExactReal& delta(long k) const;
    /// delta'_k = q_k alpha - p_k = (-1)^k delta_k.
    ExactReal delta_signed(long k) const;
    /// Gauss-shift alpha_k = {1/alpha_{k-1}}, alpha_r = 0 for rationals.
    ExactReal shift(long k) const;
    /// q_{r+1} for rational alpha: the grid size of the numeration.
    const Int& grid_size() const;

private:
    ExactReal alpha_;
    std::optional<long> depth_;
    mutable CfeStream cfe_;
    mutable std::vector<Int> a_;          // a_1.. (a_0 = 0 implicit)
    mutable std::vector<Int> p_, q_;      // index 0 <-> k = -2
    mutable std::vector<ExactReal> dl_;   // index 0 <-> k = -2
    void ensure(long k) const;
};

/// Compares two reals through their full-form CFE digit streams under the
/// index-shifted alternate lexicographic order of the coding space; the
/// result must agree with the numeric order (phi_1 is increasing).
std::strong_ordering compare_cfe_alo(const ExactReal& x, const ExactReal& y);

std::string format_cfe(const std::vector<Int>& digits);
std::vector<Int> parse_cfe(std::string_view text);

} // namespace cfkit
