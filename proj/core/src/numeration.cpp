#include "cfkit/numeration.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cfkit {

namespace {
const Int kZero = 0;
const Int kOne = 1;
} // namespace

Int DigitWord::digit(const Alpha& alpha, long k) const {
    if (k < 1) throw DomainError("digit index must be >= 1");
    if (k <= static_cast<long>(digits_.size())) return digits_[static_cast<std::size_t>(k - 1)];
    if (tail_ == Tail::Zeros) return kZero;
    // Maxes tail: a_k while the base still has digit positions.
    if (alpha.depth() && k > *alpha.depth()) return kZero;
    return alpha.a(k);
}

DigitWord DigitWord::canonical(const Alpha& alpha) const {
    std::vector<Int> d = digits_;
    if (alpha.depth() && static_cast<long>(d.size()) > *alpha.depth())
        throw NotAdmissible("word longer than the base depth");
    if (tail_ == Tail::Zeros) {
        while (!d.empty() && d.back() == 0) d.pop_back();
    } else {
        while (!d.empty() && d.back() == alpha.a(static_cast<long>(d.size()))) d.pop_back();
    }
    return DigitWord(std::move(d), tail_);
}

bool DigitWord::equals(const Alpha& alpha, const DigitWord& other) const {
    DigitWord a = canonical(alpha);
    DigitWord b = other.canonical(alpha);
    return a.tail_ == b.tail_ && a.digits_ == b.digits_;
}

std::string DigitWord::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) os << ",";
        os << digits_[i];
    }
    os << ")|" << (tail_ == Tail::Zeros ? "0" : "max");
    return os.str();
}

DigitWord DigitWord::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size() || text[i] != '(') throw ParseError("expected '(' in digit word");
    ++i;
    std::vector<Int> digits;
    skip();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        for (;;) {
            skip();
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("expected digit in word literal");
            digits.emplace_back(std::string(text.substr(start, i - start)));
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw ParseError("malformed word literal");
        }
    }
    skip();
    if (i == text.size() || text[i] != '|') throw ParseError("expected tail marker '|0' or '|max'");
    ++i;
    Tail tail;
    if (text.substr(i, 3) == "max") {
        tail = Tail::Maxes;
        i += 3;
    } else if (i < text.size() && text[i] == '0') {
        tail = Tail::Zeros;
        i += 1;
    } else {
        throw ParseError("unknown tail marker");
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters after word literal");
    // Trim explicit zero padding so equal words parse to equal values.
    if (tail == Tail::Zeros)
        while (!digits.empty() && digits.back() == 0) digits.pop_back();
    return DigitWord(std::move(digits), tail);
}

bool is_admissible(const Alpha& alpha, const DigitWord& w) {
    long support = static_cast<long>(w.digits().size());
    if (alpha.depth()) {
        long r = *alpha.depth();
        if (support > r) return false;
        if (w.tail() == Tail::Maxes) {
            // The signed reading must stay inside [-(q-1), -1]: the
            // materialized word may not be all zero.
            bool all_zero = true;
            for (long k = 1; k <= r && all_zero; ++k)
                if (w.digit(alpha, k) != 0) all_zero = false;
            if (all_zero) return false;
        }
    }
    long check_to = support;
    for (long j = 1; j <= check_to; ++j) {
        const Int& dj = w.digits()[static_cast<std::size_t>(j - 1)];
        if (dj < 0 || dj > alpha.a(j)) return false;
        if (dj != 0) continue;
        bool zeros_to_end = (w.tail() == Tail::Zeros);
        for (long i = j + 1; i <= support && zeros_to_end; ++i)
            if (w.digits()[static_cast<std::size_t>(i - 1)] != 0) zeros_to_end = false;
        if (zeros_to_end) continue;
        if (j == 1) return false; // the all-zero word is the only one starting with 0
        if (w.digit(alpha, j - 1) != alpha.a(j - 1)) return false;
    }
    return true;
}

Int psi(const Alpha& alpha, const DigitWord& w) {
    if (w.tail() != Tail::Zeros) throw NotAdmissible("psi expects a Zeros-tail word");
    if (!is_admissible(alpha, w)) throw NotAdmissible("word is not admissible");
    Int n = 0;
    for (long j = 1; j <= static_cast<long>(w.digits().size()); ++j)
        n += w.digits()[static_cast<std::size_t>(j - 1)] * alpha.q(j - 1);
    return n;
}

DigitWord psi_inv(const Alpha& alpha, const Int& n) {
    if (n < 0) throw OutOfRange("psi_inv expects a non-negative integer");
    if (alpha.rational() && n >= alpha.grid_size())
        throw OutOfRange("integer beyond the numeration grid");
    // Support bound: least r with n < q_r + q_{r-1}.
    long r = 0;
    while (n >= alpha.q(r) + alpha.q(r - 1)) ++r;
    std::vector<Int> digits(static_cast<std::size_t>(r), Int(0));
    Int rest = n;
    for (long k = r; k >= 1; --k) {
        Int d = floor_div(rest - alpha.q(k - 2), alpha.q(k - 1));
        if (d < 0) d = 0;
        digits[static_cast<std::size_t>(k - 1)] = d;
        rest -= d * alpha.q(k - 1);
    }
    assert(rest == 0);
    return DigitWord(std::move(digits), Tail::Zeros).canonical(alpha);
}

ExactReal lambda(const Alpha& alpha, const DigitWord& w) {
    if (!is_admissible(alpha, w)) throw NotAdmissible("word is not admissible");
    ExactReal sum(0);
    long support = static_cast<long>(w.digits().size());
    if (alpha.rational()) {
        long r = *alpha.depth();
        for (long k = 1; k <= r; ++k)
            sum += ExactReal(w.digit(alpha, k)) * alpha.delta_signed(k - 1);
        return sum;
    }
    for (long k = 1; k <= support; ++k)
        sum += ExactReal(w.digits()[static_cast<std::size_t>(k - 1)]) * alpha.delta_signed(k - 1);
    if (w.tail() == Tail::Maxes) {
        // sum_{k>K} a_k delta'_{k-1} = -delta'_{K-1} - delta'_K
        sum += -alpha.delta_signed(support - 1) - alpha.delta_signed(support);
    }
    return sum;
}

DigitStream::DigitStream(const Alpha& alpha, ExactReal beta)
    : alpha_(&alpha), remainder_(std::move(beta)), terminated_(false) {
    if (remainder_.sign() < 0 || remainder_ >= ExactReal(1))
        throw DomainError("beta must lie in [0,1[");
    if (alpha.rational()) {
        if (!remainder_.is_rational() ||
            !(remainder_ * ExactReal(alpha.grid_size())).is_integer())
            throw NotGridPoint("beta is not a multiple of 1/q_{r+1}");
    }
    terminated_ = remainder_.is_zero();
}

const Int& DigitStream::next() {
    long k = static_cast<long>(produced_.size()) + 1;
    if (terminated_) {
        produced_.push_back(kZero);
        return produced_.back();
    }
    if (alpha_->rational() && k > *alpha_->depth())
        throw NotGridPoint("expansion did not terminate within the base depth");
    const ExactReal& dk1 = alpha_->delta(k - 1);
    Int b = (remainder_ / dk1).ceil();
    if (b < 0) b = 0;
    if (b > alpha_->a(k)) b = alpha_->a(k);
    remainder_ = ExactReal(b) * dk1 - remainder_;
    produced_.push_back(std::move(b));
    terminated_ = remainder_.is_zero();
    return produced_.back();
}

const Int& DigitStream::digit(long k) {
    if (k < 1) throw DomainError("digit index must be >= 1");
    while (static_cast<long>(produced_.size()) < k) next();
    return produced_[static_cast<std::size_t>(k - 1)];
}

DigitWord DigitStream::to_word() const {
    if (!terminated_) throw NotGridPoint("stream has not terminated");
    std::vector<Int> d = produced_;
    while (!d.empty() && d.back() == 0) d.pop_back();
    return DigitWord(std::move(d), Tail::Zeros);
}

DigitStream lambda_inv(const Alpha& alpha, const ExactReal& beta) {
    return DigitStream(alpha, beta);
}

DigitWord lambda_inv_word(const Alpha& alpha, const ExactReal& beta, long max_digits) {
    DigitStream s(alpha, beta);
    long cap = alpha.depth() ? std::min(max_digits, *alpha.depth()) : max_digits;
    for (long k = 0; k < cap && !s.terminated(); ++k) s.next();
    if (!s.terminated()) throw NotGridPoint("beta has no finite expansion within the digit bound");
    return s.to_word();
}

ExactReal lambda_tilde(const Alpha& alpha, const DigitWord& w, const ExactReal& eps) {
    if (!alpha.rational()) throw DomainError("lambda_tilde needs a rational base");
    if (eps.sign() < 0 || eps >= ExactReal(1)) throw DomainError("eps must lie in [0,1[");
    return lambda(alpha, w) + eps * alpha.delta(*alpha.depth());
}

std::pair<DigitWord, ExactReal> lambda_tilde_inv(const Alpha& alpha, const ExactReal& beta) {
    if (!alpha.rational()) throw DomainError("lambda_tilde needs a rational base");
    if (beta.sign() < 0 || beta >= ExactReal(1)) throw DomainError("beta must lie in [0,1[");
    ExactReal scaled = beta * ExactReal(alpha.grid_size());
    ExactReal eps = scaled.frac(); // {q_{r+1} beta}
    ExactReal grid_point = ExactReal(scaled.floor()) / ExactReal(alpha.grid_size());
    return {lambda_inv_word(alpha, grid_point), eps};
}

std::strong_ordering compare_rlo(const Alpha& alpha, const DigitWord& u, const DigitWord& v) {
    if (u.tail() != v.tail())
        return u.tail() == Tail::Maxes ? std::strong_ordering::less : std::strong_ordering::greater;
    long hi = std::max(static_cast<long>(u.digits().size()), static_cast<long>(v.digits().size()));
    if (alpha.depth()) hi = std::min(hi, *alpha.depth());
    for (long k = hi; k >= 1; --k) {
        Int du = u.digit(alpha, k);
        Int dv = v.digit(alpha, k);
        if (du != dv) return du < dv ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_alo(const Alpha& alpha, const DigitWord& u, const DigitWord& v) {
    long hi = std::max(static_cast<long>(u.digits().size()), static_cast<long>(v.digits().size()));
    if (u.tail() != v.tail()) ++hi;
    if (alpha.depth()) hi = std::min(hi, *alpha.depth());
    for (long j = 1; j <= hi; ++j) {
        Int du = u.digit(alpha, j);
        Int dv = v.digit(alpha, j);
        if (du == dv) continue;
        bool odd_index = (j % 2) == 1; // sign (-1)^{j-1} positive
        bool u_digit_smaller = du < dv;
        return (u_digit_smaller == odd_index) ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_rlo_streams(DigitStream& u, DigitStream& v, long probe_limit) {
    for (long k = 0; k < probe_limit && !(u.terminated() && v.terminated()); ++k) {
        if (!u.terminated()) u.next();
        if (!v.terminated()) v.next();
    }
    if (!(u.terminated() && v.terminated()))
        throw IncomparableStreams("RLO is undecided on non-terminating streams");
    long hi = std::max(u.index(), v.index());
    for (long k = hi; k >= 1; --k) {
        const Int& du = k <= u.index() ? u.produced()[static_cast<std::size_t>(k - 1)] : kZero;
        const Int& dv = k <= v.index() ? v.produced()[static_cast<std::size_t>(k - 1)] : kZero;
        if (du != dv) return du < dv ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ExactReal reflected_base(const Alpha& alpha) { return ExactReal(1) - alpha.value(); }

DigitWord reflect(const Alpha& alpha, const DigitWord& beta_digits) {
    if (alpha.value().sign() <= 0 || alpha.value() >= ExactReal::rational(1, 2))
        throw DomainError("reflection needs alpha in ]0,1/2[");
    if (beta_digits.is_zero()) throw DomainError("reflection needs beta in ]0,1[");
    if (!is_admissible(alpha, beta_digits)) throw NotAdmissible("word is not admissible");
    const std::vector<Int>& b = beta_digits.digits();
    std::vector<Int> out;
    out.reserve(b.size() + 1);
    out.push_back(kOne);
    out.push_back(b[0] - 1);
    for (std::size_t i = 1; i < b.size(); ++i) out.push_back(b[i]);
    return DigitWord(std::move(out), beta_digits.tail());
}

DigitWord normalize_improper(const Alpha& alpha, const DigitWord& w) {
    if (!is_admissible(alpha, w)) throw NotConvertible("word is not admissible");
    return w.canonical(alpha);
}

DigitWord normalize_improper_maxzero(const Alpha& alpha, const std::vector<Int>& prefix) {
    if (alpha.rational())
        throw DomainError("improper (max,0)-tails only arise over irrational bases");
    // Local admissibility of the prefix, with position K+1 known nonzero.
    long support = static_cast<long>(prefix.size());
    for (long j = 1; j <= support; ++j) {
        const Int& dj = prefix[static_cast<std::size_t>(j - 1)];
        if (dj < 0 || dj > alpha.a(j)) throw NotConvertible("prefix digit out of range");
        if (dj != 0) continue;
        if (j == 1 || prefix[static_cast<std::size_t>(j - 2)] != alpha.a(j - 1))
            throw NotConvertible("prefix violates the admissibility condition");
    }
    // Lambda value of (prefix, (max,0)^inf): explicit sum plus the
    // telescoped tail (-1)^K delta_{K-1}.
    ExactReal value(0);
    for (long k = 1; k <= support; ++k)
        value += ExactReal(prefix[static_cast<std::size_t>(k - 1)]) * alpha.delta_signed(k - 1);
    ExactReal tail = alpha.delta(support - 1);
    value += (support % 2 == 0) ? tail : -tail;
    if (value.sign() < 0 || value >= ExactReal(1))
        throw NotConvertible("improper expansion does not evaluate into [0,1[");
    try {
        return lambda_inv_word(alpha, value, support + 64);
    } catch (const NotGridPoint&) {
        throw NotConvertible("improper expansion has no terminating proper form");
    }
}

} // namespace cfkit
