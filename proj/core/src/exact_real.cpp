#include "cfkit/exact_real.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace cfkit {

namespace {

Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Splits d = s^2 * f with f square-free (for the factor range a trial
// division up to 10^6 covers; larger prime-square factors are left alone,
// which is harmless for every radicand this library ever builds).
void extract_square(std::int64_t d, std::int64_t& square_root, std::int64_t& free_part) {
    square_root = 1;
    free_part = d;
    Int root = isqrt(Int(d));
    if (root * root == d) {
        square_root = static_cast<std::int64_t>(root);
        free_part = 1;
        return;
    }
    for (std::int64_t p = 2; p * p <= free_part && p <= 1000000; p == 2 ? p = 3 : p += 2) {
        while (free_part % (p * p) == 0) {
            free_part /= p * p;
            square_root *= p;
        }
    }
}

} // namespace

Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

ExactReal ExactReal::rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return ExactReal(Rat(num, den));
}

ExactReal ExactReal::quadratic(const Rat& a, const Rat& b, std::int64_t d) {
    if (d < 0) throw DomainError("negative radicand");
    if (b == 0 || d == 0) return ExactReal(b == 0 ? a : a + Rat(0));
    if (d == 1) return ExactReal(a + b);
    std::int64_t s = 1, f = d;
    extract_square(d, s, f);
    if (f == 1) return ExactReal(a + b * s);
    return ExactReal(a, b * s, f);
}

bool ExactReal::is_integer() const {
    return is_rational() && rat_den(a_) == 1;
}

const Rat& ExactReal::as_rational() const {
    if (!is_rational()) throw DomainError("value is irrational");
    return a_;
}

Int ExactReal::numerator() const { return rat_num(as_rational()); }
Int ExactReal::denominator() const { return rat_den(as_rational()); }

void ExactReal::require_same_field(const ExactReal& o) const {
    if (!is_rational() && !o.is_rational() && d_ != o.d_)
        throw IncompatibleFields("operands lie in distinct quadratic fields");
}

ExactReal ExactReal::operator-() const { return ExactReal(-a_, -b_, d_); }

ExactReal ExactReal::operator+(const ExactReal& o) const {
    require_same_field(o);
    std::int64_t d = is_rational() ? o.d_ : d_;
    Rat b = b_ + o.b_;
    if (b == 0) return ExactReal(a_ + o.a_);
    return ExactReal(a_ + o.a_, b, d);
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

ExactReal ExactReal::operator*(const ExactReal& o) const {
    require_same_field(o);
    std::int64_t d = is_rational() ? o.d_ : d_;
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    Rat a = a_ * o.a_ + b_ * o.b_ * d;
    Rat b = a_ * o.b_ + o.a_ * b_;
    if (b == 0) return ExactReal(a);
    return ExactReal(a, b, d);
}

ExactReal ExactReal::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    if (is_rational()) return ExactReal(Rat(1) / a_);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is
    // nonzero because sqrt(d) is irrational.
    Rat norm = a_ * a_ - b_ * b_ * d_;
    return ExactReal(a_ / norm, -b_ / norm, d_);
}

ExactReal ExactReal::operator/(const ExactReal& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return *this * o.reciprocal();
}

int ExactReal::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0; // impossible for square-free d > 1, kept for safety
    bool rational_part_wins = lhs > rhs;
    return rational_part_wins ? sa : sb;
}

Int ExactReal::floor() const {
    if (is_rational()) return floor_div(rat_num(a_), rat_den(a_));
    // floor(b sqrt(d)) via the integer square root of num^2 d / den^2.
    Int bn = rat_num(b_), bd = rat_den(b_);
    Int radical = bn * bn * Int(d_) * bd * bd; // (bn*bd)^2 d
    Int root = isqrt(radical);                 // floor(|b| sqrt(d) * bd^2) / ...
    // |b| sqrt(d) = sqrt(radical) / bd^2
    Int t;
    if (bn > 0) {
        t = root / (bd * bd);
    } else {
        // ceil(sqrt(radical)) = root + 1 (radical is never a perfect square here)
        t = -((root + (bd * bd)) / (bd * bd)); // -ceil(root_real / bd^2) lower bound
    }
    Int candidate = floor_div(rat_num(a_), rat_den(a_)) + t - 1;
    while (*this >= ExactReal(candidate + 1)) ++candidate;
    while (*this < ExactReal(candidate)) --candidate;
    return candidate;
}

Int ExactReal::ceil() const {
    Int f = floor();
    return (*this == ExactReal(f)) ? f : f + 1;
}

std::string ExactReal::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << rat_num(a_);
        if (rat_den(a_) != 1) os << "/" << rat_den(a_);
        return os.str();
    }
    // Common positive denominator c, coefficients reduced jointly.
    Int c = boost::multiprecision::lcm(rat_den(a_), rat_den(b_));
    Int an = rat_num(a_) * (c / rat_den(a_));
    Int bn = rat_num(b_) * (c / rat_den(b_));
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(an), abs(bn)), c);
    an /= g;
    bn /= g;
    c /= g;
    os << "(" << an;
    os << (bn < 0 ? "-" : "+");
    os << abs(bn) << "*sqrt(" << d_ << "))/" << c;
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0) throw ParseError("expected integer in '" + std::string(s) + "'");
        return Int(std::string(s.substr(start, i - start)));
    }
    bool keyword(std::string_view kw) {
        skip_ws();
        if (s.substr(i, kw.size()) == kw) {
            i += kw.size();
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

} // namespace

ExactReal ExactReal::parse(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    ExactReal value;
    if (c.eat('(')) {
        // (a+b*sqrt(d))/c  or (a-b*sqrt(d))/c
        Int a = c.integer();
        c.skip_ws();
        bool minus = false;
        if (c.eat('+')) {
        } else if (c.eat('-')) {
            minus = true;
        } else {
            throw ParseError("expected '+' or '-' in quadratic literal");
        }
        Int b = c.integer();
        if (!c.eat('*') || !c.keyword("sqrt") || !c.eat('('))
            throw ParseError("expected '*sqrt(' in quadratic literal");
        Int d = c.integer();
        if (!c.eat(')') || !c.eat(')'))
            throw ParseError("unbalanced parentheses in quadratic literal");
        Int den = 1;
        if (c.eat('/')) den = c.integer();
        if (den == 0) throw DivisionByZero("zero denominator");
        if (d < 0 || d > Int(std::numeric_limits<std::int64_t>::max()))
            throw ParseError("radicand out of range");
        if (minus) b = -b;
        value = quadratic(Rat(a, den), Rat(b, den), static_cast<std::int64_t>(d));
    } else if (c.keyword("sqrt")) {
        if (!c.eat('(')) throw ParseError("expected '(' after sqrt");
        Int d = c.integer();
        if (!c.eat(')')) throw ParseError("expected ')' after sqrt radicand");
        if (d < 0 || d > Int(std::numeric_limits<std::int64_t>::max()))
            throw ParseError("radicand out of range");
        value = sqrt_of(static_cast<std::int64_t>(d));
        if (c.eat('/')) {
            Int den = c.integer();
            if (den == 0) throw DivisionByZero("zero denominator");
            value = value / ExactReal(den);
        }
    } else {
        Int num = c.integer();
        Int den = 1;
        if (c.eat('/')) den = c.integer();
        if (den == 0) throw DivisionByZero("zero denominator");
        value = rational(num, den);
    }
    if (!c.done()) throw ParseError("trailing characters in '" + std::string(text) + "'");
    return value;
}

double ExactReal::approx() const {
    double av = static_cast<double>(rat_num(a_)) / static_cast<double>(rat_den(a_));
    if (is_rational()) return av;
    double bv = static_cast<double>(rat_num(b_)) / static_cast<double>(rat_den(b_));
    return av + bv * std::sqrt(static_cast<double>(d_));
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) { return os << x.str(); }

} // namespace cfkit
