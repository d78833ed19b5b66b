#include "cfkit/oracle.hpp"

#include <algorithm>

namespace cfkit::oracle {

std::vector<Int> base_digits(const ExactReal& x) {
    if (!x.is_rational() || x.sign() < 0 || x >= ExactReal(1))
        throw DomainError("base_digits needs a rational in [0,1[");
    Int p = x.numerator(), q = x.denominator();
    if (p == 0) return {};
    // Euclid on q/p gives the classical digits [c_1..c_t] with c_t >= 2;
    // the trailing-1 convention turns the last digit into c_t - 1, 1.
    std::vector<Int> c;
    Int num = q, den = p;
    while (den != 0) {
        c.push_back(num / den);
        Int rem = num % den;
        num = den;
        den = rem;
    }
    c.back() -= 1;
    return c;
}

std::vector<std::vector<Int>> enumerate_admissible(const ExactReal& alpha, bool drop_zero) {
    std::vector<Int> a = base_digits(alpha);
    if (alpha.denominator() > 10000) throw TooLarge("admissible enumeration beyond 10^4");
    std::size_t r = a.size();
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(r, Int(0));
    // Depth-first generation; once a digit 0 follows a non-maximal digit,
    // every later digit is forced to 0.
    auto rec = [&](auto&& self, std::size_t j, bool forced_zero) -> void {
        if (j == r) {
            out.push_back(cur);
            return;
        }
        Int limit = forced_zero ? Int(0) : a[j];
        for (Int d = 0; d <= limit; ++d) {
            cur[j] = d;
            bool next_forced = forced_zero;
            if (d == 0 && !(j >= 1 && cur[j - 1] == a[j - 1])) next_forced = true;
            self(self, j + 1, next_forced);
        }
    };
    rec(rec, 0, false);
    // RLO: compare at the highest differing index.
    std::sort(out.begin(), out.end(), [](const std::vector<Int>& u, const std::vector<Int>& v) {
        for (std::size_t k = u.size(); k-- > 0;)
            if (u[k] != v[k]) return u[k] < v[k];
        return false;
    });
    if (Int(out.size()) != alpha.denominator())
        throw Error("admissible enumeration does not match the denominator");
    if (drop_zero) out.erase(out.begin());
    return out;
}

std::vector<std::pair<ExactReal, long>> gaps(const ExactReal& alpha, long n_points) {
    if (n_points < 1 || n_points > 100000) throw TooLarge("gap oracle bound");
    std::vector<ExactReal> pts;
    ExactReal cur(0);
    for (long k = 0; k < n_points; ++k) {
        pts.push_back(cur);
        cur = (cur + alpha).frac();
    }
    std::sort(pts.begin(), pts.end());
    std::vector<ExactReal> lens;
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) lens.push_back(pts[j + 1] - pts[j]);
    lens.push_back(ExactReal(1) - pts.back());
    std::sort(lens.begin(), lens.end(), [](const ExactReal& u, const ExactReal& v) { return v < u; });
    std::vector<std::pair<ExactReal, long>> grouped;
    for (auto& g : lens) {
        if (!grouped.empty() && grouped.back().first == g)
            ++grouped.back().second;
        else
            grouped.push_back({g, 1});
    }
    return grouped;
}

std::vector<Int> records(const ExactReal& alpha, const ExactReal& beta, bool right_side,
                         long n_max) {
    if (n_max < 0 || n_max > 1000000) throw TooLarge("record scan bound");
    std::vector<Int> out;
    std::optional<ExactReal> best;
    ExactReal mult(0); // {n alpha} accumulated exactly
    for (long n = 0; n <= n_max; ++n) {
        ExactReal dist = right_side ? (mult - beta).frac() : (beta - mult).frac();
        if (!best || dist < *best) {
            best = dist;
            out.push_back(Int(n));
        }
        mult = (mult + alpha).frac();
    }
    return out;
}

Int count(const ExactReal& alpha, const ExactReal& beta, long nu) {
    if (nu < 0 || nu > 1000000) throw TooLarge("count bound");
    Int total = 0;
    ExactReal cur(0);
    for (long k = 0; k < nu; ++k) {
        if (cur < beta) ++total;
        cur = (cur + alpha).frac();
    }
    return total;
}

Int count_leq(const ExactReal& alpha, const ExactReal& beta, long nu) {
    if (nu < 0 || nu > 1000000) throw TooLarge("count bound");
    Int total = 0;
    ExactReal cur(0);
    for (long k = 0; k <= nu; ++k) {
        if (cur <= beta) ++total;
        cur = (cur + alpha).frac();
    }
    return total;
}

Int floor_horizon(const ExactReal& alpha, const ExactReal& alpha2, long cap) {
    ExactReal cur1(0), cur2(0);
    for (long n = 0; n < cap; ++n) {
        if (cur1.floor() != cur2.floor()) return Int(n);
        cur1 += alpha;
        cur2 += alpha2;
    }
    throw TooLarge("no floor mismatch within the cap");
}

std::optional<ExactReal> best_rational(const ExactReal& theta, const ExactReal& theta2,
                                       const Int& q_max) {
    if (q_max > 100000) throw TooLarge("denominator scan bound");
    ExactReal lo = theta, hi = theta2;
    if (hi < lo) std::swap(lo, hi);
    for (Int q = 1; q <= q_max; ++q) {
        Int p = (lo * ExactReal(q)).ceil();
        if (ExactReal::rational(p, q) <= hi) return ExactReal::rational(p, q);
    }
    return std::nullopt;
}

std::vector<ExactReal> sided_rational_records(const ExactReal& x, bool right_side,
                                              const Int& q_max) {
    if (q_max > 100000) throw TooLarge("denominator scan bound");
    std::vector<ExactReal> out;
    std::optional<ExactReal> best;
    for (Int q = 1; q <= q_max; ++q) {
        ExactReal scaled = x * ExactReal(q);
        Int p = right_side ? scaled.ceil() : scaled.floor();
        ExactReal candidate = ExactReal::rational(p, q);
        bool better = !best || (right_side ? candidate < *best : candidate > *best);
        if (better) {
            best = candidate;
            out.push_back(candidate);
        }
    }
    return out;
}

} // namespace cfkit::oracle
