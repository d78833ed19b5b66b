#pragma once

#include <functional>
#include <vector>

#include "cfkit/numeration.hpp"

namespace cfkit {

/// Digit m_k of the complement base: m_1 = a_1 + 1, m_k = a_k for k > 1.
/// L_alpha(m) = 1 exactly.
Int complement_base_digit(const Alpha& alpha, long k);

/// Linear evaluation L_alpha(d) = sum d_k delta'_{k-1} on an arbitrary
/// integer sequence given by its deviation from a tail. Maxes tails are
/// summed in closed form (sum_{k>K} a_k delta'_{k-1} = -delta'_{K-1} -
/// delta'_K), never by truncation; over a rational base the sum simply
/// runs to the depth.
ExactReal l_alpha(const Alpha& alpha, const std::vector<Int>& coeffs, Tail tail);

/// Observer for the conversion sweep: called with the working sequence
/// after the initial subtraction and after every rewrite.
using RewriteObserver = std::function<void(const std::vector<Int>&, Tail)>;

/// CFE-complement: the admissible word equivalent to m - w, produced by a
/// single left-to-right sweep of the even/odd zero-run rewrites. Satisfies
/// Lambda(result) = 1 - Lambda(w) and is an involution on nonzero words.
/// Throws ZeroWord on the all-zero input (C(0) = 0 is handled by callers).
DigitWord cfe_complement(const Alpha& alpha, const DigitWord& w,
                         const RewriteObserver& observer = nullptr);

/// Psi extended to F_alpha: Zeros-tail words map to Psi(w) >= 0, Maxes-tail
/// words to -1 - sum (a_k - e_k) q_{k-1} < 0.
Int psi_signed(const Alpha& alpha, const DigitWord& w);

/// Inverse of the extension: psi_inv for n >= 0, the CFE-complement of
/// psi_inv(-n) for n < 0. For a rational base n must lie in
/// [-(q_{r+1}-1), q_{r+1}-1].
DigitWord psi_signed_inv(const Alpha& alpha, const Int& n);

} // namespace cfkit
