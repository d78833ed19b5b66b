#pragma once

#include <random>
#include <vector>

#include "cfkit/cfe.hpp"
#include "cfkit/exact_real.hpp"

namespace testutil {

using cfkit::Alpha;
using cfkit::ExactReal;
using cfkit::Int;
using cfkit::Rat;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

inline long rand_long(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng());
}

/// Random reduced rational in [0,1[ with denominator in [1, max_den].
inline ExactReal random_unit_rational(long max_den) {
    long q = rand_long(1, max_den);
    long p = rand_long(0, q - 1);
    return ExactReal::rational(p, q);
}

/// Random reduced rational in ]0,1[ with denominator in [2, max_den].
inline ExactReal random_positive_unit_rational(long max_den) {
    for (;;) {
        long q = rand_long(2, max_den);
        long p = rand_long(1, q - 1);
        return ExactReal::rational(p, q);
    }
}

inline ExactReal golden() { return ExactReal::quadratic(Rat(-1, 2), Rat(1, 2), 5); }
inline ExactReal sqrt2m1() { return ExactReal::quadratic(-1, 1, 2); }
inline ExactReal sqrt3m1() { return ExactReal::quadratic(-1, 1, 3); }

/// frac(sqrt(d)) for the first ten square-free d: a spread of quadratic
/// numeration bases.
inline std::vector<ExactReal> quadratic_bases() {
    std::vector<ExactReal> out;
    for (long d : {2, 3, 5, 6, 7, 10, 11, 13, 14, 15}) {
        ExactReal s = ExactReal::sqrt_of(d);
        out.push_back(s.frac());
    }
    return out;
}

/// All reduced p/q with 1 <= q <= max_den, 0 <= p < q.
inline std::vector<ExactReal> all_unit_rationals(long max_den) {
    std::vector<ExactReal> out;
    for (long q = 1; q <= max_den; ++q)
        for (long p = 0; p < q; ++p)
            if (boost::multiprecision::gcd(Int(p), Int(q)) == 1)
                out.push_back(ExactReal::rational(p, q));
    return out;
}

} // namespace testutil
