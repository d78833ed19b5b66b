#include "cfkit/kronecker.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "cfkit/dynamics.hpp"

namespace cfkit {

namespace {

// Digit word of nu with the grid top allowed: for a rational base nu may
// equal q_{r+1}, in which case the word extends to the trailing-1 level.
std::vector<Int> counting_word(const Alpha& alpha, const Int& nu) {
    long r = 0;
    while (nu >= alpha.q(r) + alpha.q(r - 1)) ++r;
    std::vector<Int> digits(static_cast<std::size_t>(r), Int(0));
    Int rest = nu;
    for (long k = r; k >= 1; --k) {
        Int d = floor_div(rest - alpha.q(k - 2), alpha.q(k - 1));
        if (d < 0) d = 0;
        digits[static_cast<std::size_t>(k - 1)] = d;
        rest -= d * alpha.q(k - 1);
    }
    assert(rest == 0);
    return digits;
}

struct ShiftCompare {
    const std::vector<Int>& n; // finite digits, trailing zeros trimmed
    DigitStream& b;

    Int n_at(long k) const {
        return k <= static_cast<long>(n.size()) ? n[static_cast<std::size_t>(k - 1)] : Int(0);
    }

    // Trimmed support of the (terminated) beta word.
    long b_support() {
        long s = b.index();
        while (s >= 1 && b.digit(s) == 0) --s;
        return s;
    }

    // sigma^i(b) vs sigma^i(n) under ALO (offset t has sign (-1)^{t-1}).
    std::strong_ordering alo(long i) {
        for (long t = 1;; ++t) {
            if (t > 1000000) throw TooLarge("ALO comparison did not resolve");
            Int bd = b.digit(i + t);
            Int nd = n_at(i + t);
            if (bd != nd) {
                bool odd = (t % 2) == 1;
                bool b_smaller = bd < nd;
                return (b_smaller == odd) ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
            }
            if (b.terminated() && i + t >= static_cast<long>(n.size()) && i + t >= b_support())
                return std::strong_ordering::equal; // both tails all-zero from here
        }
    }

    // sigma^i(b) <_R sigma^i(n); false whenever b does not terminate.
    bool rlo_less(long i) {
        if (!b.terminated()) return false;
        long hi = std::max(static_cast<long>(n.size()), b_support());
        for (long k = hi; k > i; --k) {
            Int bd = b.digit(k);
            Int nd = n_at(k);
            if (bd != nd) return bd < nd;
        }
        return false;
    }

    bool equal_words() {
        if (!b.terminated()) return false;
        long hi = std::max(static_cast<long>(n.size()), b_support());
        for (long k = 1; k <= hi; ++k)
            if (b.digit(k) != n_at(k)) return false;
        return true;
    }
};

} // namespace

Int count_below(const Alpha& alpha, const ExactReal& beta, const Int& nu, CountWitness* witness) {
    if (nu < 1) throw DomainError("nu must be a positive integer");
    if (beta.sign() < 0 || beta >= ExactReal(1)) throw DomainError("beta must lie in [0,1[");
    if (alpha.rational() && nu > alpha.grid_size())
        throw DomainError("nu exceeds the grid of a rational base");
    if (beta.is_zero()) return 0;

    std::vector<Int> n = counting_word(alpha, nu);
    DigitStream b = lambda_inv(alpha, beta);

    // s: minimum of the two support lengths.
    long s = static_cast<long>(n.size());
    for (long k = 1; k <= static_cast<long>(n.size()) && !b.terminated(); ++k) b.digit(k);
    if (b.terminated()) {
        long support = b.index();
        while (support >= 1 && b.digit(support) == 0) --support;
        s = std::min(s, support);
    }
    assert(s >= 1);

    ShiftCompare cmp{n, b};
    auto n_at = [&](long k) { return cmp.n_at(k); };
    auto sigma_n_zero = [&](long i) {
        for (long j = i + 1; j <= static_cast<long>(n.size()); ++j)
            if (n_at(j) != 0) return false;
        return true;
    };

    Int total = 0;
    int sign = 1;
    for (long i = 1; i <= s; ++i) {
        Int bi = b.digit(i);
        Int nu_i = detail::shifted_psi_value(alpha, detail::shifted_integer_word(n, i), i);
        Int tau;
        if (n_at(i) * n_at(i + 1) == 0 && !sigma_n_zero(i))
            tau = 1;
        else
            tau = std::min(bi, n_at(i));
        int eps = (bi < n_at(i) && cmp.alo(i) == std::strong_ordering::less) ? 1 : 0;
        int eps_prime = cmp.rlo_less(i) ? 1 : 0;
        Int term = bi * nu_i + tau + eps - eps_prime;
        total += sign > 0 ? term : -term;
        sign = -sign;
        if (witness) witness->rows.push_back({bi, nu_i, tau, eps, eps_prime});
    }
    return total;
}

Int count_below_or_equal(const Alpha& alpha, const ExactReal& beta, const Int& nu) {
    if (nu < 0) throw DomainError("nu must be non-negative");
    if (beta.sign() < 0 || beta >= ExactReal(1)) throw DomainError("beta must lie in [0,1[");
    if (nu == 0) return 1; // only k = 0, and {0} <= beta always
    if (alpha.rational()) {
        if (nu > alpha.grid_size()) throw DomainError("nu exceeds the grid of a rational base");
        if (nu == alpha.grid_size())
            return count_below_or_equal(alpha, beta, nu - 1) + 1; // {q alpha} = 0 <= beta
    }
    Int c = beta.is_zero() ? Int(0) : count_below(alpha, beta, nu);
    std::vector<Int> n = counting_word(alpha, nu);
    DigitStream b = lambda_inv(alpha, beta);
    ShiftCompare cmp{n, b};
    int d = 0;
    if (cmp.alo(0) != std::strong_ordering::less) ++d;                            // n <=_A b
    if (b.terminated() && (cmp.rlo_less(0) || cmp.equal_words())) ++d;            // b <=_R n
    if (cmp.equal_words()) --d;                                                   // n = b
    return c + d;
}

ExactReal repartition(const Alpha& alpha, const ExactReal& beta, const Int& nu) {
    Int c = beta.is_zero() ? Int(0) : count_below(alpha, beta, nu);
    return ExactReal::rational(c, nu);
}

ThreeDistanceResult three_distance(const ExactReal& alpha_value, long n_points) {
    if (n_points < 1) throw OutOfRange("need at least one point");
    Alpha alpha(alpha_value);
    if (alpha.rational() && Int(n_points) > alpha.grid_size())
        throw OutOfRange("N exceeds the denominator of a rational base");

    // Direct route: sort the orbit prefix and collect gap multiplicities.
    std::vector<ExactReal> points;
    points.reserve(static_cast<std::size_t>(n_points));
    ExactReal cur(0);
    for (long k = 0; k < n_points; ++k) {
        points.push_back(cur);
        cur = (cur + alpha_value).frac();
    }
    std::sort(points.begin(), points.end());
    std::vector<ExactReal> gaps;
    gaps.reserve(points.size());
    for (std::size_t j = 0; j + 1 < points.size(); ++j) gaps.push_back(points[j + 1] - points[j]);
    gaps.push_back(ExactReal(1) - points.back());
    std::sort(gaps.begin(), gaps.end(), [](const ExactReal& u, const ExactReal& v) { return v < u; });

    ThreeDistanceResult result;
    for (auto& g : gaps) {
        if (!result.spectrum.items.empty() && result.spectrum.items.back().first == g)
            ++result.spectrum.items.back().second;
        else
            result.spectrum.items.push_back({g, 1});
    }

    // Formula route.
    if (n_points == 1) {
        result.s = 0;
        result.i = 0;
        result.two_value_boundary = true;
        result.predicted = {ExactReal(1)};
    } else {
        long s = 0;
        while (Int(n_points) > alpha.q(s) + alpha.q(s - 1)) ++s;
        result.s = s;
        DigitWord top = psi_inv(alpha, Int(n_points) - 1);
        assert(static_cast<long>(top.digits().size()) == s);
        Int ns = top.digits().back();
        result.i = alpha.a(s) - ns;
        result.two_value_boundary = Int(n_points) == alpha.q(s - 2) + (ns + 1) * alpha.q(s - 1);
        std::vector<ExactReal> predicted;
        predicted.push_back(alpha.delta(s - 1));
        predicted.push_back(alpha.delta(s) + ExactReal(result.i) * alpha.delta(s - 1));
        if (!result.two_value_boundary)
            predicted.push_back(alpha.delta(s) + ExactReal(result.i + 1) * alpha.delta(s - 1));
        std::sort(predicted.begin(), predicted.end(),
                  [](const ExactReal& u, const ExactReal& v) { return v < u; });
        predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());
        result.predicted = std::move(predicted);
    }

    std::vector<ExactReal> observed = result.spectrum.lengths();
    result.matches = observed == result.predicted;
    return result;
}

Int floors_match_horizon(const ExactReal& alpha_value, const ExactReal& alpha2) {
    if (alpha_value.sign() <= 0 || alpha2 <= alpha_value || alpha2 >= ExactReal(1))
        throw DomainError("need 0 < alpha < alpha2 < 1");
    ExactReal best = best_rational_between(alpha_value, alpha2);
    if (best != alpha_value) return best.denominator();
    // alpha itself is the closed-interval optimum; the half-open bracket
    // ]alpha, alpha2] needs the next simplest rational.
    auto inside = simplest_rational_in(alpha_value, alpha2, true, false);
    assert(inside.has_value());
    return inside->denominator();
}

Int floor_sum(const ExactReal& x, long n) {
    Int total = 0;
    ExactReal cur(0);
    for (long k = 0; k < n; ++k) {
        total += cur.floor();
        cur += x;
    }
    return total;
}

ExactReal frac_sum(const ExactReal& x, long n) {
    ExactReal total(0);
    ExactReal cur(0);
    for (long k = 0; k < n; ++k) {
        total += cur.frac();
        cur += x;
    }
    return total;
}

bool is_semiconvergent_by_floor_sum(const ExactReal& alpha_value, const Int& p, const Int& q) {
    if (q < 1 || boost::multiprecision::gcd(p, q) != 1)
        throw DomainError("p/q must be a reduced fraction with q >= 1");
    Int lhs = 2 * floor_sum(alpha_value, static_cast<long>(q));
    return lhs == (p - 1) * (q - 1);
}

std::vector<Int> best_sided_alpha_approximations(const Alpha& alpha, const ExactReal& beta,
                                                 Side side, const Int& n_max) {
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    DigitStream b = lambda_inv(alpha, beta);
    long depth_cap = alpha.depth() ? *alpha.depth() : -1;
    auto digit = [&](long k) -> Int {
        if (depth_cap >= 0 && k > depth_cap) return 0;
        return b.digit(k);
    };
    std::set<Int> out;
    Int partial = 0; // sum_{i<=t} b_i q_{i-1}, advanced in lockstep below
    long t = 0;
    auto advance_to = [&](long target) {
        while (t < target) {
            ++t;
            partial += digit(t) * alpha.q(t - 1);
        }
    };
    auto b_support = [&]() -> long { // only meaningful once terminated
        long s = b.index();
        while (s >= 1 && b.digit(s) == 0) --s;
        return s;
    };
    if (side == Side::Right) {
        out.insert(Int(0));
        for (long k = 1;; ++k) {
            long i1 = 2 * k - 1, i2 = 2 * k;
            if (depth_cap >= 0 && i1 > depth_cap) break;
            advance_to(i1);
            if (partial > n_max) break;
            Int families = (depth_cap >= 0 && i2 > depth_cap) ? Int(0) : digit(i2);
            for (Int j = 0; j < families; ++j) {
                Int n = partial + j * alpha.q(i1);
                if (n <= n_max) out.insert(n);
            }
            if (b.terminated() && i2 >= b_support()) break;
        }
    } else {
        for (long k = 0;; ++k) {
            long i2 = 2 * k, i3 = 2 * k + 1;
            if (depth_cap >= 0 && i3 > depth_cap) break;
            advance_to(i2);
            if (partial > n_max) break;
            Int families = digit(i3);
            for (Int j = 0; j < families; ++j) {
                Int n = partial + j * alpha.q(i2);
                if (n <= n_max) out.insert(n);
            }
            if (b.terminated() && i3 >= b_support()) break;
        }
    }
    if (b.terminated()) {
        // Exact hit: n with {n alpha} = beta closes both record lists.
        advance_to(b_support());
        if (partial <= n_max) out.insert(partial);
    }
    return std::vector<Int>(out.begin(), out.end());
}

} // namespace cfkit
