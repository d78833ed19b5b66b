#pragma once

#include <optional>
#include <vector>

#include "cfkit/numeration.hpp"

namespace cfkit {

/// Point of the open trapezoid U: 0 < x < 1, -x < y < 1.
struct SkewState {
    ExactReal x;
    ExactReal y;
};

bool in_trapezoid(const SkewState& s);

struct SkewStep {
    Int cfe_digit;   // floor(1/x)
    Int word_digit;  // min(floor(1/x), ceil(y/x))
    SkewState next;  // H(x, y)
};

/// One step of the skew product: the digit pair A(x,y) and the new state
/// H(x,y) = ({1/x}, min(floor(1/x), ceil(y/x)) - y/x). H maps U into U;
/// a rational x of exhausted depth leaves the trapezoid (x hits 0) and the
/// step reports DomainError instead of dividing by zero.
SkewStep skew_step(const SkewState& s);

/// alpha_k = {1/alpha_{k-1}}; alpha_r = 0 for a rational base of depth r.
ExactReal shift_alpha(const Alpha& alpha, long k);

/// nu_k: the integer whose alpha_k-numeration is sigma^k(n) when
/// n_{k+1} != 0 or sigma^k(n) = (0), and (1, sigma^{k+1}(n)) otherwise.
Int shift_integer(const Alpha& alpha, const Int& nu, long k);

/// gamma_k from the recurrence gamma_k = (b_k alpha_{k-1} - gamma_{k-1})
/// / alpha_{k-1}; in the base-shift picture it carries beta to base
/// alpha_k (negative in the paper's Case 2).
ExactReal shift_real(const Alpha& alpha, const ExactReal& beta, long k);

/// RLO-successor within the germ class of w, by the carry rule: replace
/// the prefix up to the lowest non-maximal digit by its Psi-successor.
/// The all-maximal word has no successor in its class (NoSuccessor); over
/// a rational base the top grid word q_{r+1}-1 is likewise terminal.
DigitWord germ_successor(const Alpha& alpha, const DigitWord& w);

struct KDecompositionReport {
    bool holds = false;
    long checked = 0;        // orbit points examined
    bool disjoint = false;   // every point fell into exactly one part
    bool exhaustive = false; // full set equality (rational bases)
};

/// Checks the disjoint self-similar decomposition of K_alpha = {frac(k
/// alpha)}: K_alpha = alpha ({0} u union_j (j - K_T(alpha)) u (a_1 +
/// T(alpha) (K_T^2(alpha) \ {0}))). Exact set equality for rational
/// bases; for irrational bases the first `orbit_points` orbit values are
/// classified.
KDecompositionReport k_alpha_decomposition_check(const ExactReal& alpha_value, long orbit_points);

namespace detail {

/// Digits of sigma^k(n), or (1, sigma^{k+1}(n)) when the shifted word
/// would start with an inadmissible zero (the shift-case split).
std::vector<Int> shifted_integer_word(const std::vector<Int>& n_digits, long k);

/// sum w_j q_{j-1}(alpha_k) over the k-shifted base.
Int shifted_psi_value(const Alpha& alpha, const std::vector<Int>& word, long k);

} // namespace detail

} // namespace cfkit
