#include "cfkit/cfe.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace cfkit {

const Int& ExtDigit::value() const {
    if (infinite_) throw DomainError("infinite digit has no integer value");
    return value_;
}

std::string ExtDigit::str() const { return infinite_ ? "inf" : value_.str(); }

ExtDigit gauss_a1(const ExactReal& x) {
    if (x.sign() < 0 || x > ExactReal(1)) throw DomainError("gauss_a1 needs x in [0,1]");
    if (x.is_zero()) return ExtDigit::infinity();
    if (x == ExactReal(1)) return ExtDigit(Int(1));
    return ExtDigit(x.reciprocal().ceil_minus_one());
}

ExactReal gauss_t1(const ExactReal& x) {
    if (x.sign() < 0 || x > ExactReal(1)) throw DomainError("gauss_t1 needs x in [0,1]");
    if (x.is_zero() || x == ExactReal(1)) return ExactReal(0);
    ExactReal r = x.reciprocal();
    // 1/x an integer >= 2 maps to 1, the hook for the trailing-1 form.
    return r.is_integer() ? ExactReal(1) : r.frac();
}

CfeStream::CfeStream(ExactReal x) : x_(std::move(x)), state_(0), finished_(false) {}

void CfeStream::advance() {
    if (finished_) return;
    if (memo_.empty()) {
        Int t0 = x_.ceil_minus_one();
        memo_.push_back(t0);
        state_ = x_ - ExactReal(t0); // in ]0,1]
        return;
    }
    if (state_.is_zero()) {
        finished_ = true;
        return;
    }
    ExtDigit d = gauss_a1(state_);
    memo_.push_back(d.value()); // state is in ]0,1], never 0 here
    state_ = gauss_t1(state_);
}

ExtDigit CfeStream::digit(std::size_t k) {
    while (!finished_ && memo_.size() <= k) advance();
    if (k < memo_.size()) return ExtDigit(memo_[k]);
    return ExtDigit::infinity();
}

const std::vector<Int>& CfeStream::digits() {
    if (!x_.is_rational()) throw DomainError("irrational expansion is infinite");
    while (!finished_) advance();
    return memo_;
}

std::optional<long> CfeStream::depth() {
    if (!x_.is_rational()) return std::nullopt;
    return static_cast<long>(digits().size()) - 2;
}

std::vector<Int> cfe_of(const ExactReal& x) {
    CfeStream s(x);
    return s.digits();
}

ExactReal cfe_value(const std::vector<Int>& digits) {
    if (digits.empty()) throw EmptyInput("empty continued fraction");
    for (std::size_t k = 1; k < digits.size(); ++k)
        if (digits[k] < 1) throw DomainError("partial quotients must be positive");
    ExactReal value(digits.back());
    for (std::size_t k = digits.size() - 1; k-- > 0;)
        value = ExactReal(digits[k]) + value.reciprocal();
    return value;
}

std::optional<long> mu_depth(const ExactReal& x) {
    CfeStream s(x);
    return s.depth();
}

std::pair<Int, Int> convergent(const ExactReal& x, long k) {
    if (k < -2) throw IndexBeyondDepth("convergent index below -2");
    if (k == -2) return {Int(0), Int(1)};
    if (k == -1) return {Int(1), Int(0)};
    CfeStream s(x);
    Int p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    for (long j = 0; j <= k; ++j) {
        ExtDigit t = s.digit(static_cast<std::size_t>(j));
        if (t.is_infinite()) throw IndexBeyondDepth("convergent index beyond CFE depth");
        Int p = t.value() * p1 + p2;
        Int q = t.value() * q1 + q2;
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
    }
    return {p1, q1};
}

std::vector<ExactReal> semiconvergents(const ExactReal& x, const Int& max_denominator) {
    if (max_denominator < 1) throw DomainError("denominator bound must be >= 1");
    CfeStream s(x);
    std::map<Rat, ExactReal> found;
    // Convergents of the level prefix [a_0..a_{lev-1}].
    Int p1 = 1, p2 = 0, q1 = 0, q2 = 1; // p_{-1}, p_{-2}, q_{-1}, q_{-2}
    for (long lev = 0;; ++lev) {
        ExtDigit a_lev = s.digit(static_cast<std::size_t>(lev));
        if (a_lev.is_infinite()) break;
        ExtDigit a_next = s.digit(static_cast<std::size_t>(lev + 1));
        if (!a_next.is_infinite()) {
            // [a_0,..,a_{lev-1}, b, 1] = ((b+1)p_{lev-1}+p_{lev-2}) / ((b+1)q_{lev-1}+q_{lev-2})
            for (Int b = 1; b <= a_lev.value(); ++b) {
                Int den = (b + 1) * q1 + q2;
                if (den > max_denominator) break;
                Int num = (b + 1) * p1 + p2;
                ExactReal v = ExactReal::rational(num, den);
                found.emplace(v.as_rational(), v);
            }
        }
        Int p = a_lev.value() * p1 + p2;
        Int q = a_lev.value() * q1 + q2;
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
        if (2 * q1 + q2 > max_denominator) break; // deeper levels only grow
    }
    std::vector<ExactReal> out;
    for (auto& [key, v] : found) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const ExactReal& u, const ExactReal& v) {
        if (u.denominator() != v.denominator()) return u.denominator() < v.denominator();
        return u.numerator() < v.numerator();
    });
    return out;
}

ExactReal best_rational_between(const ExactReal& theta, const ExactReal& theta2) {
    if (theta == theta2) throw EqualEndpoints("interval endpoints are equal");
    CfeStream s1(theta), s2(theta2);
    long r = 0;
    while (s1.digit(static_cast<std::size_t>(r)) == s2.digit(static_cast<std::size_t>(r))) ++r;
    auto mu1 = mu_depth(theta);
    auto mu2 = mu_depth(theta2);
    bool within = (!mu1 || r <= *mu1) && (!mu2 || r <= *mu2);
    if (within) {
        std::vector<Int> digits;
        for (long k = 0; k < r; ++k) digits.push_back(s1.digit(static_cast<std::size_t>(k)).value());
        digits.push_back(std::min(s1.digit(static_cast<std::size_t>(r)).value(),
                                  s2.digit(static_cast<std::size_t>(r)).value()));
        digits.push_back(1);
        return cfe_value(digits);
    }
    // One endpoint is rational and shallower than the mismatch index: it is
    // a semi-convergent of the other and itself the best rational.
    assert(mu1 || mu2);
    if (mu1 && (!mu2 || *mu1 < *mu2)) return theta;
    return theta2;
}

std::optional<ExactReal> simplest_rational_in(const ExactReal& lo, const ExactReal& hi,
                                              bool lo_strict, bool hi_strict) {
    if (lo > hi || (lo == hi && (lo_strict || hi_strict))) return std::nullopt;
    if (lo == hi) {
        if (lo.is_rational()) return lo;
        return std::nullopt; // a single irrational point holds no rational
    }
    Int n = lo_strict ? lo.floor() + 1 : lo.ceil();
    ExactReal ne(n);
    if (ne < hi || (ne == hi && !hi_strict)) return ne;
    // No integer inside: both bounds live in (m, m+1] with m = floor(lo);
    // descend one CFE level. Candidates are m + 1/y with y in the flipped
    // reciprocal interval; openness swaps sides.
    Int m = lo.floor();
    ExactReal flo = lo - ExactReal(m);
    ExactReal fhi = hi - ExactReal(m);
    ExactReal ylo = fhi.reciprocal();
    if (flo.is_zero()) {
        // y ranges over [ylo, +inf) (strictness from the hi side); the
        // smallest numerator is attained by the smallest admissible integer.
        Int y = hi_strict ? ylo.floor() + 1 : ylo.ceil();
        return ExactReal(m) + ExactReal(y).reciprocal();
    }
    ExactReal yhi = flo.reciprocal();
    auto y = simplest_rational_in(ylo, yhi, hi_strict, lo_strict);
    if (!y) return std::nullopt;
    return ExactReal(m) + y->reciprocal();
}

std::vector<ExactReal> best_sided_rational_approximations(const ExactReal& x, Side side,
                                                          const Int& max_denominator) {
    if (max_denominator < 1) throw DomainError("denominator bound must be >= 1");
    std::map<Rat, ExactReal> found;
    ExactReal unit = (side == Side::Left) ? ExactReal(x.floor()) : ExactReal(x.ceil());
    found.emplace(unit.as_rational(), unit);
    for (const ExactReal& v : semiconvergents(x, max_denominator)) {
        bool keep = (side == Side::Left) ? (v <= x) : (v >= x);
        if (keep) found.emplace(v.as_rational(), v);
    }
    std::vector<ExactReal> out;
    for (auto& [key, v] : found) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const ExactReal& u, const ExactReal& v) {
        if (u.denominator() != v.denominator()) return u.denominator() < v.denominator();
        return u.numerator() < v.numerator();
    });
    return out;
}

ExactReal delta(const ExactReal& alpha, long i) {
    Alpha ctx(alpha);
    if (ctx.rational() && i > *ctx.depth()) throw IndexBeyondDepth("delta index beyond depth");
    return ctx.delta(i);
}

Alpha::Alpha(ExactReal value) : alpha_(std::move(value)), cfe_(alpha_) {
    if (alpha_.sign() < 0 || alpha_ >= ExactReal(1))
        throw DomainError("numeration base must lie in [0,1[");
    depth_ = mu_depth(alpha_);
    // Seed convergent and delta tables at k = -2, -1, 0.
    Int t0 = cfe_.digit(0).value(); // 0 for alpha in ]0,1[, -1 for alpha = 0
    p_ = {Int(0), Int(1), t0};
    q_ = {Int(1), Int(0), Int(1)};
    dl_ = {alpha_, ExactReal(1), alpha_ - ExactReal(t0)};
}

void Alpha::ensure(long k) const {
    while (static_cast<long>(a_.size()) < k) {
        long next = static_cast<long>(a_.size()) + 1; // digit index being added
        ExtDigit d = cfe_.digit(static_cast<std::size_t>(next));
        if (d.is_infinite()) throw IndexBeyondDepth("digit index beyond CFE depth");
        a_.push_back(d.value());
        const Int& an = a_.back();
        p_.push_back(an * p_[p_.size() - 1] + p_[p_.size() - 2]);
        q_.push_back(an * q_[q_.size() - 1] + q_[q_.size() - 2]);
        dl_.push_back(ExactReal(-an) * dl_[dl_.size() - 1] + dl_[dl_.size() - 2]);
    }
}

const Int& Alpha::a(long k) const {
    if (k < 1) throw IndexBeyondDepth("partial quotient index must be >= 1");
    if (!has_digit(k)) throw IndexBeyondDepth("partial quotient index beyond depth");
    ensure(k);
    return a_[static_cast<std::size_t>(k - 1)];
}

const Int& Alpha::p(long k) const {
    if (k < -2 || !(!depth_ || k <= *depth_ + 1))
        throw IndexBeyondDepth("convergent index out of range");
    ensure(k);
    return p_[static_cast<std::size_t>(k + 2)];
}

const Int& Alpha::q(long k) const {
    if (k < -2 || !(!depth_ || k <= *depth_ + 1))
        throw IndexBeyondDepth("convergent index out of range");
    ensure(k);
    return q_[static_cast<std::size_t>(k + 2)];
}

const ExactReal& Alpha::delta(long k) const {
    if (k < -2 || !(!depth_ || k <= *depth_ + 1))
        throw IndexBeyondDepth("delta index out of range");
    ensure(k);
    return dl_[static_cast<std::size_t>(k + 2)];
}

ExactReal Alpha::delta_signed(long k) const {
    const ExactReal& d = delta(k);
    return (k % 2) == 0 ? d : -d;
}

ExactReal Alpha::shift(long k) const {
    if (k < 0 || (depth_ && k > *depth_)) throw IndexBeyondDepth("shift index beyond depth");
    ExactReal v = alpha_;
    for (long j = 0; j < k; ++j) v = v.reciprocal().frac();
    return v;
}

const Int& Alpha::grid_size() const {
    if (!depth_) throw DomainError("irrational base has no finite grid");
    return q(*depth_ + 1);
}

std::strong_ordering compare_cfe_alo(const ExactReal& x, const ExactReal& y) {
    if (x == y) return std::strong_ordering::equal; // equal irrationals never differ digitwise
    CfeStream sx(x), sy(y);
    for (std::size_t j = 0;; ++j) {
        ExtDigit dx = sx.digit(j);
        ExtDigit dy = sy.digit(j);
        if (dx == dy) {
            if (dx.is_infinite()) return std::strong_ordering::equal;
            continue;
        }
        bool x_smaller_digit = dx < dy;
        bool even = (j % 2) == 0;
        return (x_smaller_digit == even) ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
}

std::string format_cfe(const std::vector<Int>& digits) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ",";
        os << digits[i];
    }
    os << "]";
    return os.str();
}

std::vector<Int> parse_cfe(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size() || text[i] != '[') throw ParseError("expected '['");
    ++i;
    std::vector<Int> out;
    skip();
    if (i < text.size() && text[i] == ']') {
        ++i;
        skip();
        if (i != text.size()) throw ParseError("trailing characters after CFE literal");
        return out;
    }
    for (;;) {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected digit in CFE literal");
        out.emplace_back(std::string(text.substr(start, i - start)));
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        throw ParseError("malformed CFE literal");
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters after CFE literal");
    return out;
}

} // namespace cfkit
