#include "cfkit/signed_numeration.hpp"

#include <algorithm>
#include <cassert>

namespace cfkit {

Int complement_base_digit(const Alpha& alpha, long k) {
    if (k == 1) return alpha.a(1) + 1;
    return alpha.a(k);
}

ExactReal l_alpha(const Alpha& alpha, const std::vector<Int>& coeffs, Tail tail) {
    long support = static_cast<long>(coeffs.size());
    if (alpha.rational() && support > *alpha.depth())
        throw DomainError("sequence longer than the base depth");
    ExactReal sum(0);
    for (long k = 1; k <= support; ++k)
        sum += ExactReal(coeffs[static_cast<std::size_t>(k - 1)]) * alpha.delta_signed(k - 1);
    if (tail == Tail::Maxes) {
        if (alpha.rational()) {
            for (long k = support + 1; k <= *alpha.depth(); ++k)
                sum += ExactReal(alpha.a(k)) * alpha.delta_signed(k - 1);
        } else {
            sum += -alpha.delta_signed(support - 1) - alpha.delta_signed(support);
        }
    }
    return sum;
}

namespace {

// One left-to-right sweep repairing every non-admissible zero run of the
// working sequence. `digit_at` reads beyond the explicit part (the virtual
// tail); `extend_to` materializes tail digits when a rewrite has to touch
// them. Positions are 1-based.
struct Sweep {
    const Alpha& alpha;
    std::vector<Int>& e;
    Tail tail;
    bool rational;
    long depth; // r for rational bases, -1 otherwise

    Int digit_at(long k) const {
        if (k <= static_cast<long>(e.size())) return e[static_cast<std::size_t>(k - 1)];
        return tail == Tail::Zeros ? Int(0) : alpha.a(k);
    }
    // True when position k exists at all (always, except past a rational depth).
    bool in_range(long k) const { return depth < 0 || k <= depth; }

    void set(long k, Int v) {
        while (static_cast<long>(e.size()) < k)
            e.push_back(digit_at(static_cast<long>(e.size()) + 1));
        e[static_cast<std::size_t>(k - 1)] = std::move(v);
    }

    void run(const RewriteObserver& observer) {
        long i = 1;
        for (;;) {
            // Zeros only live in the explicit part: virtual Maxes digits
            // are positive and a virtual Zeros tail is trailing anyway.
            while (i <= static_cast<long>(e.size()) && e[static_cast<std::size_t>(i - 1)] != 0)
                ++i;
            if (i > static_cast<long>(e.size())) break;
            long j = i;
            while (j <= static_cast<long>(e.size()) && e[static_cast<std::size_t>(j - 1)] == 0)
                ++j;
            bool follower_exists = in_range(j) && digit_at(j) != 0;
            if (!follower_exists) break; // trailing zeros are admissible
            // A zero immediately after a maximal digit is admissible: absorb it.
            if (i >= 2 && digit_at(i - 1) == alpha.a(i - 1)) ++i;
            if (i == j) continue;
            rewrite(i - 1, j - i, j, observer);
            i = j;
        }
    }

    // Repairs the run at positions [r+1 .. r+len], follower at position f.
    void rewrite(long r, long len, long f, const RewriteObserver& observer) {
        assert(digit_at(f) > 0);
        if (len % 2 == 0) {
            long s = len / 2;
            set(r + 1, Int(1));
            for (long t = 1; t <= s - 1; ++t) {
                set(r + 2 * t, alpha.a(r + 2 * t));
                set(r + 2 * t + 1, Int(0));
            }
            set(r + 2 * s, alpha.a(r + 2 * s));
        } else {
            long s = (len + 1) / 2;
            set(r, digit_at(r) + 1);
            for (long t = 0; t <= s - 2; ++t) {
                set(r + 1 + 2 * t, alpha.a(r + 1 + 2 * t));
                set(r + 2 + 2 * t, Int(0));
            }
            set(r + 2 * s - 1, alpha.a(r + 2 * s - 1));
        }
        set(f, digit_at(f) - 1);
        if (observer) observer(e, tail);
    }
};

} // namespace

DigitWord cfe_complement(const Alpha& alpha, const DigitWord& w, const RewriteObserver& observer) {
    if (!is_admissible(alpha, w)) throw NotAdmissible("word is not admissible");
    DigitWord input = w.canonical(alpha);
    if (input.is_zero()) throw ZeroWord("the zero word has no complement word (C(0) = 0)");
    Tail out_tail = input.tail() == Tail::Zeros ? Tail::Maxes : Tail::Zeros;
    long depth = alpha.depth() ? *alpha.depth() : -1;
    long explicit_len = alpha.rational()
                            ? depth
                            : std::max<long>(1, static_cast<long>(input.digits().size()));
    std::vector<Int> e;
    e.reserve(static_cast<std::size_t>(explicit_len));
    for (long k = 1; k <= explicit_len; ++k)
        e.push_back(complement_base_digit(alpha, k) - input.digit(alpha, k));
    if (observer) observer(e, out_tail);
    Sweep sweep{alpha, e, out_tail, alpha.rational(), depth};
    sweep.run(observer);
    DigitWord result = DigitWord(std::move(e), out_tail).canonical(alpha);
    assert(is_admissible(alpha, result));
    return result;
}

Int psi_signed(const Alpha& alpha, const DigitWord& w) {
    if (!is_admissible(alpha, w)) throw NotAdmissible("word is not admissible");
    if (w.tail() == Tail::Zeros) return psi(alpha, w);
    // Psi~ = -1 - sum (a_k - e_k) q_{k-1}; only indices below the explicit
    // support (or the depth, over a rational base) contribute.
    long hi = alpha.rational() ? *alpha.depth() : static_cast<long>(w.digits().size());
    Int n = -1;
    for (long k = 1; k <= hi; ++k) n -= (alpha.a(k) - w.digit(alpha, k)) * alpha.q(k - 1);
    return n;
}

DigitWord psi_signed_inv(const Alpha& alpha, const Int& n) {
    if (n >= 0) return psi_inv(alpha, n);
    if (alpha.rational() && -n >= alpha.grid_size())
        throw OutOfRange("integer beyond the signed numeration range");
    return cfe_complement(alpha, psi_inv(alpha, -n));
}

} // namespace cfkit
