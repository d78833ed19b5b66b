#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cfkit/cfe.hpp"

namespace cfkit {

/// Tail of a digit word beyond its explicit support: all zeros, or all
/// maximal digits a_k.
enum class Tail { Zeros, Maxes };

/// A finitely described digit vector d_1..d_s over a base alpha, plus a
/// tail marker. Canonical form trims explicit digits equal to the tail.
/// For a rational base of depth r the support never exceeds r; the Maxes
/// marker then only flags the signed (negative-integer) reading of the
/// word. The word does not carry its base: every operation takes the
/// Alpha context explicitly.
class DigitWord {
public:
    DigitWord() : tail_(Tail::Zeros) {}
    DigitWord(std::vector<Int> digits, Tail tail) : digits_(std::move(digits)), tail_(tail) {}

    static DigitWord zero() { return DigitWord(); }

    const std::vector<Int>& digits() const { return digits_; }
    Tail tail() const { return tail_; }
    std::size_t support() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty() && tail_ == Tail::Zeros; }

    /// Digit d_k (k >= 1) including the tail: 0 beyond support for Zeros,
    /// a_k for Maxes.
    Int digit(const Alpha& alpha, long k) const;

    /// Trims trailing digits equal to the tail (needs the base to know
    /// what "maximal" means).
    DigitWord canonical(const Alpha& alpha) const;

    bool equals(const Alpha& alpha, const DigitWord& other) const;

    /// "(d1,d2,...,ds)|0" or "(...)|max"; the zero word prints "()|0".
    std::string str() const;
    static DigitWord parse(std::string_view text);

private:
    std::vector<Int> digits_;
    Tail tail_;
};

/// Lazily produced admissible digit sequence of a real beta in [0,1[ in
/// base alpha; the state is the exact remainder beta_k. The invariant
/// -delta_k < beta_k < delta_{k-1} holds after every step, and the stream
/// terminates (all further digits zero) exactly when the remainder hits 0.
/// Advance under exclusive access; transfer between threads only between
/// steps.
class DigitStream {
public:
    DigitStream(const Alpha& alpha, ExactReal beta);

    /// Produces b_{k+1} = min(a_{k+1}, ceil(beta_k / delta_k)).
    const Int& next();
    bool terminated() const { return terminated_; }
    long index() const { return static_cast<long>(produced_.size()); }
    const std::vector<Int>& produced() const { return produced_; }
    const ExactReal& remainder() const { return remainder_; }
    /// Digit d_k, pulling from the source as needed.
    const Int& digit(long k);

    /// The finite word, once terminated.
    DigitWord to_word() const;

private:
    const Alpha* alpha_;
    ExactReal remainder_;
    std::vector<Int> produced_;
    bool terminated_;
};

/// Variant Markov admissibility: d_j <= a_j and
/// d_j = 0 => (d_i = 0 for all i >= j) or d_{j-1} = a_{j-1},
/// with tail digits read literally (Maxes tails never satisfy the
/// "all later zero" branch).
bool is_admissible(const Alpha& alpha, const DigitWord& w);

/// Psi: sum of d_j q_{j-1}; requires an admissible Zeros-tail word.
Int psi(const Alpha& alpha, const DigitWord& w);

/// Greedy inverse of Psi (top-down digit extraction). For a rational base
/// n must be below the grid size q_{r+1}.
DigitWord psi_inv(const Alpha& alpha, const Int& n);

/// Lambda: sum of d_j (-1)^{j-1} delta_{j-1}; admissible words only. The
/// Maxes tail is evaluated in closed form, never by truncation.
ExactReal lambda(const Alpha& alpha, const DigitWord& w);

/// Digit stream of beta in [0,1[. For a rational base beta must be a
/// multiple of 1/q_{r+1} (NotGridPoint otherwise); use lambda_tilde_inv
/// for off-grid reals.
DigitStream lambda_inv(const Alpha& alpha, const ExactReal& beta);

/// As lambda_inv but demands termination within max_digits steps and
/// returns the finite word. Throws NotGridPoint when the expansion keeps
/// going (beta is not a grid point).
DigitWord lambda_inv_word(const Alpha& alpha, const ExactReal& beta, long max_digits = 4096);

/// Extension of Lambda to all of [0,1[ for a rational base: value of
/// (w, eps) is lambda(w) + eps * delta_r.
ExactReal lambda_tilde(const Alpha& alpha, const DigitWord& w, const ExactReal& eps);
std::pair<DigitWord, ExactReal> lambda_tilde_inv(const Alpha& alpha, const ExactReal& beta);

/// Reversed lexicographic order on F_alpha: decide at the highest
/// differing index; a Maxes-tail word precedes a Zeros-tail word.
std::strong_ordering compare_rlo(const Alpha& alpha, const DigitWord& u, const DigitWord& v);

/// Alternate lexicographic order: first differing index j with the sign
/// (-1)^{j-1}.
std::strong_ordering compare_alo(const Alpha& alpha, const DigitWord& u, const DigitWord& v);

/// RLO on two streams; only eventually-constant streams are comparable.
/// Streams that both fail to terminate within the probe window raise
/// IncomparableStreams.
std::strong_ordering compare_rlo_streams(DigitStream& u, DigitStream& v, long probe_limit = 4096);

/// Digits of 1 - beta in base 1 - alpha for alpha in ]0,1/2[:
/// (1, b_1 - 1, b_2, b_3, ...).
DigitWord reflect(const Alpha& alpha, const DigitWord& beta_digits);

/// Base 1 - alpha, whose CFE is [0, 1, a_1 - 1, a_2, ...].
ExactReal reflected_base(const Alpha& alpha);

/// Identity on proper (Zeros-tail) words, after validation.
DigitWord normalize_improper(const Alpha& alpha, const DigitWord& w);

/// Rewrites an improper expansion (prefix, (max,0)^infinity) into the
/// unique proper word of equal Lambda-value. NotConvertible when the
/// prefix itself violates admissibility or the value leaves [0,1[.
DigitWord normalize_improper_maxzero(const Alpha& alpha, const std::vector<Int>& prefix);

} // namespace cfkit
