#include "cfkit/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace cfkit {

bool in_trapezoid(const SkewState& s) {
    return s.x.sign() > 0 && s.x < ExactReal(1) && s.y > -s.x && s.y < ExactReal(1);
}

SkewStep skew_step(const SkewState& s) {
    if (!in_trapezoid(s)) throw DomainError("state outside the open trapezoid");
    ExactReal inv = s.x.reciprocal();
    Int a = inv.floor();
    ExactReal ratio = s.y / s.x;
    Int b = ratio.ceil();
    if (b > a) b = a;
    SkewStep step;
    step.cfe_digit = a;
    step.word_digit = b;
    step.next.x = inv.frac();
    step.next.y = ExactReal(b) - ratio;
    return step;
}

ExactReal shift_alpha(const Alpha& alpha, long k) { return alpha.shift(k); }

namespace detail {

std::vector<Int> shifted_integer_word(const std::vector<Int>& n_digits, long k) {
    auto digit = [&](long j) -> Int {
        return j <= static_cast<long>(n_digits.size()) ? n_digits[static_cast<std::size_t>(j - 1)]
                                                       : Int(0);
    };
    bool tail_zero = true;
    for (long j = k + 1; j <= static_cast<long>(n_digits.size()); ++j)
        if (digit(j) != 0) tail_zero = false;
    std::vector<Int> w;
    if (digit(k + 1) != 0 || tail_zero) {
        for (long j = k + 1; j <= static_cast<long>(n_digits.size()); ++j) w.push_back(digit(j));
    } else {
        w.push_back(Int(1));
        for (long j = k + 2; j <= static_cast<long>(n_digits.size()); ++j) w.push_back(digit(j));
    }
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

Int shifted_psi_value(const Alpha& alpha, const std::vector<Int>& word, long k) {
    // q_{j-1}(alpha_k) built from the shifted partial quotients a_{k+1},...
    Int q2 = 0, q1 = 1; // q_{-1}, q_0 of the shifted base
    Int sum = 0;
    for (std::size_t j = 0; j < word.size(); ++j) {
        sum += word[j] * q1;
        Int q = alpha.a(k + static_cast<long>(j) + 1) * q1 + q2;
        q2 = q1;
        q1 = q;
    }
    return sum;
}

} // namespace detail

Int shift_integer(const Alpha& alpha, const Int& nu, long k) {
    if (k < 0 || (alpha.depth() && k > *alpha.depth() - 2))
        throw IndexBeyondDepth("shift index beyond depth - 2");
    if (k == 0) return nu;
    DigitWord n = psi_inv(alpha, nu);
    return detail::shifted_psi_value(alpha, detail::shifted_integer_word(n.digits(), k), k);
}

ExactReal shift_real(const Alpha& alpha, const ExactReal& beta, long k) {
    if (k < 0 || (alpha.depth() && k > *alpha.depth() - 2))
        throw IndexBeyondDepth("shift index beyond depth - 2");
    DigitStream b = lambda_inv(alpha, beta);
    ExactReal gamma = beta;
    for (long j = 1; j <= k; ++j) {
        ExactReal aj = alpha.shift(j - 1);
        gamma = ExactReal(b.digit(j)) - gamma / aj;
    }
    return gamma;
}

DigitWord germ_successor(const Alpha& alpha, const DigitWord& w) {
    if (!is_admissible(alpha, w)) throw NotAdmissible("word is not admissible");
    DigitWord cw = w.canonical(alpha);
    long support = static_cast<long>(cw.digits().size());
    long r = -1;
    for (long k = 1; k <= support; ++k) {
        if (cw.digits()[static_cast<std::size_t>(k - 1)] < alpha.a(k)) {
            r = k;
            break;
        }
    }
    if (r < 0) {
        if (cw.tail() == Tail::Maxes)
            throw NoSuccessor("the all-maximal word is terminal in its class");
        if (alpha.depth() && support >= *alpha.depth())
            throw NoSuccessor("top of the rational grid");
        r = support + 1;
    }
    // Carry rule: the prefix up to r is (a_1,...,a_{r-1}, d_r); replace it
    // by the word of its Psi-value + 1, which has support exactly r.
    Int m = 0;
    for (long j = 1; j <= r; ++j) m += cw.digit(alpha, j) * alpha.q(j - 1);
    DigitWord bumped = psi_inv(alpha, m + 1);
    assert(static_cast<long>(bumped.digits().size()) == r);
    std::vector<Int> out = bumped.digits();
    out.resize(static_cast<std::size_t>(r), Int(0));
    for (long j = r + 1; j <= support; ++j)
        out.push_back(cw.digits()[static_cast<std::size_t>(j - 1)]);
    return DigitWord(std::move(out), cw.tail()).canonical(alpha);
}

namespace {

// Membership in K_gamma = {frac(k gamma), k in N}: rational gamma has the
// full grid {j/q}; an irrational base admits x exactly when its expansion
// terminates.
bool in_orbit_closure(const ExactReal& gamma, const ExactReal& x) {
    if (x.sign() < 0 || x >= ExactReal(1)) return false;
    if (gamma.is_rational()) {
        if (!x.is_rational()) return false;
        return (x * ExactReal(gamma.denominator())).is_integer();
    }
    Alpha ctx(gamma);
    try {
        lambda_inv_word(ctx, x, 256);
        return true;
    } catch (const NotGridPoint&) {
        return false;
    } catch (const IncompatibleFields&) {
        return false;
    }
}

} // namespace

KDecompositionReport k_alpha_decomposition_check(const ExactReal& alpha_value, long orbit_points) {
    KDecompositionReport report;
    Alpha alpha(alpha_value);
    if (alpha_value.is_zero()) {
        report.holds = report.disjoint = report.exhaustive = true;
        report.checked = 1;
        return report;
    }
    Int a1 = alpha.a(1);
    ExactReal t1 = alpha_value.reciprocal().frac();
    bool has_t2 = !alpha.depth() || *alpha.depth() >= 2;
    ExactReal t2 = has_t2 ? (t1.is_zero() ? ExactReal(0) : t1.reciprocal().frac()) : ExactReal(0);

    auto classify = [&](const ExactReal& x) -> int {
        // Number of parts of the decomposition containing x; the part sets
        // live inside scaled windows, so at most two integers j compete.
        int hits = 0;
        ExactReal y = x / alpha_value;
        if (y.is_zero()) ++hits;
        for (Int j = y.floor(); j <= y.floor() + 1; ++j) {
            if (j < 1 || j > a1) continue;
            ExactReal diff = ExactReal(j) - y;
            if (diff.sign() < 0 || diff >= ExactReal(1)) continue;
            if (in_orbit_closure(t1, diff)) ++hits;
        }
        if (has_t2 && !t1.is_zero() && y > ExactReal(a1)) {
            ExactReal z = (y - ExactReal(a1)) / t1;
            if (!z.is_zero() && z.sign() > 0 && z < ExactReal(1) && in_orbit_closure(t2, z)) ++hits;
        }
        return hits;
    };

    bool disjoint = true;
    long checked = 0;
    if (alpha.rational()) {
        // Exhaustive: build the right-hand side explicitly and compare it
        // with the full grid {j/q}.
        std::set<Rat> rhs;
        auto add = [&](const ExactReal& v) {
            if (!rhs.insert(v.as_rational()).second) disjoint = false;
        };
        add(ExactReal(0));
        Int q1 = t1.is_zero() ? Int(1) : t1.denominator();
        for (Int j = 1; j <= a1; ++j)
            for (Int t = 0; t < q1; ++t)
                add(alpha_value * (ExactReal(j) - ExactReal(t) / ExactReal(q1)));
        if (has_t2 && !t1.is_zero()) {
            Int q2 = t2.is_zero() ? Int(1) : t2.denominator();
            for (Int z = 1; z < q2; ++z)
                add(alpha_value * (ExactReal(a1) + t1 * (ExactReal(z) / ExactReal(q2))));
        }
        const Int q = alpha_value.denominator();
        bool equal = Int(rhs.size()) == q;
        for (Int j = 0; j < q && equal; ++j)
            if (!rhs.count(Rat(j, q))) equal = false;
        checked = static_cast<long>(rhs.size());
        report.exhaustive = true;
        report.disjoint = disjoint;
        report.holds = disjoint && equal;
        report.checked = checked;
        return report;
    }
    ExactReal x(0);
    for (long k = 0; k < orbit_points; ++k) {
        if (classify(x) != 1) disjoint = false;
        x = (x + alpha_value).frac();
        ++checked;
    }
    report.checked = checked;
    report.disjoint = disjoint;
    report.holds = disjoint;
    return report;
}

} // namespace cfkit
