#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cfkit/error.hpp"

namespace cfkit {

// Expression templates are disabled so that arithmetic yields plain
// values; the numbers here stay desk-sized and clarity wins.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

/// An exactly representable real: either a rational p/q or an element
/// a + b*sqrt(d) of a real quadratic field (b != 0, d square-free > 1).
///
/// All arithmetic, comparisons, floor/ceil and reciprocals are exact.
/// Values are immutable after construction and freely shareable.
///
/// Mixing two quadratic values with distinct radicands is an error
/// (IncompatibleFields); the library never silently extends the field.
class ExactReal {
public:
    ExactReal() : a_(0), b_(0), d_(1) {}
    ExactReal(long long n) : a_(n), b_(0), d_(1) {}
    ExactReal(const Int& n) : a_(n), b_(0), d_(1) {}
    ExactReal(Rat r) : a_(std::move(r)), b_(0), d_(1) {}

    static ExactReal rational(const Int& num, const Int& den);

    /// a + b*sqrt(d). Extracts square factors of d and collapses to a
    /// rational when the surd part vanishes or d is a perfect square.
    static ExactReal quadratic(const Rat& a, const Rat& b, std::int64_t d);

    /// sqrt(d) for a non-negative integer d.
    static ExactReal sqrt_of(std::int64_t d) { return quadratic(0, 1, d); }

    bool is_rational() const { return d_ == 1; }
    bool is_zero() const { return b_ == 0 && a_ == 0; }
    bool is_integer() const;

    /// Rational part a (the full value when is_rational()).
    const Rat& rat_part() const { return a_; }
    /// Coefficient of sqrt(d); zero for rationals.
    const Rat& surd_part() const { return b_; }
    /// Radicand; 1 for rationals.
    std::int64_t radicand() const { return d_; }

    /// The value as a rational. Requires is_rational().
    const Rat& as_rational() const;
    Int numerator() const;
    Int denominator() const;

    ExactReal operator-() const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator/(const ExactReal& o) const;
    ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
    ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }
    ExactReal& operator*=(const ExactReal& o) { return *this = *this * o; }
    ExactReal& operator/=(const ExactReal& o) { return *this = *this / o; }

    ExactReal reciprocal() const;

    /// Exact sign in {-1, 0, +1}. For a + b*sqrt(d) the sign is decided by
    /// case analysis on the signs of a and b and a comparison of a^2 with
    /// b^2 d; no floating point is involved.
    int sign() const;

    bool operator==(const ExactReal& o) const { return (*this - o).is_zero(); }
    bool operator!=(const ExactReal& o) const { return !(*this == o); }
    bool operator<(const ExactReal& o) const { return (*this - o).sign() < 0; }
    bool operator>(const ExactReal& o) const { return o < *this; }
    bool operator<=(const ExactReal& o) const { return !(o < *this); }
    bool operator>=(const ExactReal& o) const { return !(*this < o); }

    Int floor() const;
    Int ceil() const;
    /// I(u) = ceil(u) - 1; equals u - 1 on integers.
    Int ceil_minus_one() const { return ceil() - 1; }
    /// x - floor(x), always in [0,1[.
    ExactReal frac() const { return *this - ExactReal(floor()); }

    /// Text form: "p/q" (or "p" for integers) for rationals,
    /// "(a+b*sqrt(d))/c" with integers a,b,c,d for quadratics.
    /// parse() round-trips exactly.
    std::string str() const;
    static ExactReal parse(std::string_view text);

    /// Crude double approximation, for diagnostics only.
    double approx() const;

private:
    Rat a_;          // rational part
    Rat b_;          // coefficient of sqrt(d); 0 iff rational
    std::int64_t d_; // square-free radicand, 1 for rationals

    ExactReal(Rat a, Rat b, std::int64_t d)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {}
    void require_same_field(const ExactReal& o) const;
};

std::ostream& operator<<(std::ostream& os, const ExactReal& x);

inline Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

} // namespace cfkit
