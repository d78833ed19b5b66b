#include <doctest.h>

#include <algorithm>

#include "cfkit/cfe.hpp"
#include "cfkit/oracle.hpp"
#include "helpers.hpp"

using namespace cfkit;
using testutil::all_unit_rationals;
using testutil::golden;
using testutil::rand_long;
using testutil::random_positive_unit_rational;
using testutil::random_unit_rational;

namespace {

std::vector<Int> digits(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

ExactReal rat(long p, long q) { return ExactReal::rational(p, q); }

} // namespace

TEST_CASE("cfe_of under the trailing-1 convention") {
    CHECK(cfe_of(rat(9, 4)) == digits({2, 3, 1}));
    CHECK(cfe_of(ExactReal(7)) == digits({6, 1}));
    CHECK(cfe_of(ExactReal(0)) == digits({-1, 1}));
    CHECK(cfe_of(ExactReal(-3)) == digits({-4, 1}));
    CHECK(cfe_of(rat(2, 5)) == digits({0, 2, 1, 1}));
    CHECK(cfe_of(rat(1, 2)) == digits({0, 1, 1}));
}

TEST_CASE("cfe_value evaluates backward") {
    CHECK(cfe_value(digits({2, 3, 1})) == rat(9, 4));
    CHECK(cfe_value(digits({5})) == ExactReal(5));
    CHECK(cfe_value(digits({0, 2, 1, 1})) == rat(2, 5));
    CHECK_THROWS_AS(cfe_value({}), EmptyInput);
    CHECK_THROWS_AS(cfe_value(digits({1, 0, 2})), DomainError);
}

TEST_CASE("quadratic streams are lazy and periodic-looking") {
    CfeStream s(golden());
    CHECK(s.digit(0) == ExtDigit(Int(0)));
    for (std::size_t k = 1; k <= 30; ++k) CHECK(s.digit(k) == ExtDigit(Int(1)));
    CfeStream t(ExactReal::sqrt_of(2) - ExactReal(1)); // [0;2,2,2,...]
    CHECK(t.digit(0) == ExtDigit(Int(0)));
    for (std::size_t k = 1; k <= 20; ++k) CHECK(t.digit(k) == ExtDigit(Int(2)));
}

TEST_CASE("mu_depth") {
    CHECK(mu_depth(ExactReal(7)) == 0);
    CHECK(mu_depth(rat(9, 4)) == 1);
    CHECK(!mu_depth(golden()).has_value());
    for (int i = 0; i < 200; ++i) {
        ExactReal x = random_positive_unit_rational(400);
        long mu = *mu_depth(x);
        CHECK(*mu_depth(x + ExactReal(rand_long(-3, 3))) == mu);
        if (!x.is_integer()) {
            // T(x) = {1/{x}} drops the depth by one.
            ExactReal t = x.frac().reciprocal().frac();
            CHECK(*mu_depth(t) == mu - 1);
        }
    }
}

TEST_CASE("convergents") {
    std::vector<long> fib = {1, 1, 2, 3, 5, 8};
    for (long k = 0; k <= 5; ++k) CHECK(convergent(golden(), k).second == fib[k]);
    CHECK(convergent(rat(2, 5), 3) == std::pair<Int, Int>(2, 5));
    CHECK(convergent(rat(2, 5), -1) == std::pair<Int, Int>(1, 0));
    CHECK(convergent(rat(2, 5), -2) == std::pair<Int, Int>(0, 1));
    CHECK_THROWS_AS(convergent(rat(2, 5), 4), IndexBeyondDepth);
    // p_k/q_k is reduced and q_k strictly increasing from k = 1 on.
    for (int i = 0; i < 50; ++i) {
        ExactReal x = random_positive_unit_rational(500);
        long top = *mu_depth(x) + 1;
        Int prev_q = 0;
        for (long k = 1; k <= top; ++k) {
            auto [p, q] = convergent(x, k);
            CHECK(boost::multiprecision::gcd(p, q) == 1);
            CHECK(q > prev_q);
            prev_q = q;
        }
        auto [p, q] = convergent(x, top);
        CHECK(ExactReal::rational(p, q) == x);
    }
}

TEST_CASE("rational round trip: value of cfe_of is the input") {
    for (int i = 0; i < 10000; ++i) {
        Int den = Int(rand_long(1, 1000000));
        Int num = Int(rand_long(0, 1000000)) % den;
        ExactReal x = ExactReal::rational(num, den) + ExactReal(rand_long(-2, 2));
        std::vector<Int> d = cfe_of(x);
        CHECK(d.back() == 1);
        CHECK(cfe_value(d) == x);
    }
}

TEST_CASE("phi_1 is increasing for the index-shifted ALO") {
    for (int i = 0; i < 2000; ++i) {
        ExactReal x = random_unit_rational(2000);
        ExactReal y = random_unit_rational(2000);
        if (x == y) continue;
        auto ord = compare_cfe_alo(x, y);
        CHECK((ord == std::strong_ordering::less) == (x < y));
    }
    // Mixed rational/irrational pairs exercise the infinity tail.
    CHECK(compare_cfe_alo(rat(9, 4), cfe_value(digits({2, 3, 1})) + rat(1, 500)) ==
          std::strong_ordering::less);
    CHECK(compare_cfe_alo(golden(), rat(1, 2)) == std::strong_ordering::greater);
    CHECK(compare_cfe_alo(golden(), golden()) == std::strong_ordering::equal);
}

TEST_CASE("semiconvergents: frozen small cases") {
    // golden: the digit-pattern rule gives the convergent chain 1/2, 2/3,
    // 3/5 below denominator 5; every member must be a one-sided record.
    auto s = semiconvergents(golden(), 5);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == rat(1, 2));
    CHECK(s[1] == rat(2, 3));
    CHECK(s[2] == rat(3, 5));
    auto s2 = semiconvergents(rat(2, 5), 5);
    REQUIRE(s2.size() == 3);
    CHECK(s2[0] == rat(1, 2));
    CHECK(s2[1] == rat(1, 3));
    CHECK(s2[2] == rat(2, 5));
    auto s3 = semiconvergents(rat(1, 2), 2);
    REQUIRE(s3.size() == 1);
    CHECK(s3[0] == rat(1, 2));
}

TEST_CASE("semiconvergents are one-sided records") {
    for (int i = 0; i < 25; ++i) {
        ExactReal x = i % 2 ? random_positive_unit_rational(200)
                            : (ExactReal::sqrt_of(2 + i) .frac());
        Int bound = 60;
        auto left = oracle::sided_rational_records(x, false, bound);
        auto right = oracle::sided_rational_records(x, true, bound);
        for (const ExactReal& v : semiconvergents(x, bound)) {
            bool found = std::count(left.begin(), left.end(), v) ||
                         std::count(right.begin(), right.end(), v);
            CHECK(found);
        }
    }
}

TEST_CASE("best rational between: frozen examples") {
    CHECK(best_rational_between(rat(3, 10), rat(17, 50)) == rat(1, 3));
    CHECK(*oracle::best_rational(rat(3, 10), rat(17, 50), 100) == rat(1, 3));
    CHECK(best_rational_between(rat(2, 5), golden()) == rat(1, 2));
    // An endpoint that is a semi-convergent of the other endpoint wins.
    CHECK(best_rational_between(rat(3, 5), golden()) == rat(3, 5));
    CHECK(best_rational_between(rat(2, 3), golden()) == rat(2, 3));
    CHECK_THROWS_AS(best_rational_between(rat(1, 2), rat(1, 2)), EqualEndpoints);
    // Order of endpoints does not matter.
    CHECK(best_rational_between(rat(17, 50), rat(3, 10)) == rat(1, 3));
    // An integer inside the interval short-circuits to denominator 1.
    CHECK(best_rational_between(rat(-1, 2), rat(1, 2)) == ExactReal(0));
}

TEST_CASE("best rational between agrees with the scan oracle exhaustively") {
    auto pool = all_unit_rationals(40);
    for (int i = 0; i < 1500; ++i) {
        const ExactReal& u = pool[static_cast<std::size_t>(rand_long(0, pool.size() - 1))];
        const ExactReal& v = pool[static_cast<std::size_t>(rand_long(0, pool.size() - 1))];
        if (u == v) continue;
        ExactReal best = best_rational_between(u, v);
        auto ref = oracle::best_rational(u, v, 40);
        REQUIRE(ref.has_value());
        CHECK(best == *ref);
        // Same answer through the Stern-Brocot descent.
        auto sb = simplest_rational_in(std::min(u, v), std::max(u, v), false, false);
        REQUIRE(sb.has_value());
        CHECK(best == *sb);
        // Depth bound of the optimum.
        long mu_best = *mu_depth(best);
        CHECK(mu_best <= std::min(*mu_depth(u), *mu_depth(v)));
    }
}

TEST_CASE("best rational is the common semi-convergent of largest denominator") {
    for (int i = 0; i < 300; ++i) {
        ExactReal u = random_positive_unit_rational(150);
        ExactReal v = random_positive_unit_rational(150);
        if (u == v) continue;
        ExactReal best = best_rational_between(u, v);
        if (best.is_integer()) continue; // integers sit outside the digit pattern
        Int bound = std::max(u.denominator(), v.denominator());
        auto su = semiconvergents(u, bound);
        auto sv = semiconvergents(v, bound);
        std::vector<ExactReal> common;
        for (auto& a : su)
            if (std::count(sv.begin(), sv.end(), a)) common.push_back(a);
        REQUIRE(!common.empty());
        // Entries are denominator-ascending; the best rational closes the list.
        CHECK(common.back() == best);
    }
}

TEST_CASE("simplest_rational_in honors open endpoints") {
    // ]1/3, 1/2]: 1/2 itself is the simplest.
    CHECK(*simplest_rational_in(rat(1, 3), rat(1, 2), true, false) == rat(1, 2));
    // ]1/3, 1/2[: nothing with denominator <= 2 is left.
    CHECK(*simplest_rational_in(rat(1, 3), rat(1, 2), true, true) == rat(2, 5));
    CHECK(!simplest_rational_in(golden(), golden(), false, false).has_value());
    CHECK(!simplest_rational_in(rat(1, 2), rat(1, 3), false, false).has_value());
}

TEST_CASE("sided rational approximations: frozen examples") {
    auto left = best_sided_rational_approximations(golden(), Side::Left, 5);
    REQUIRE(left.size() == 3);
    CHECK(left[0] == ExactReal(0));
    CHECK(left[1] == rat(1, 2));
    CHECK(left[2] == rat(3, 5));
    auto right = best_sided_rational_approximations(golden(), Side::Right, 3);
    REQUIRE(right.size() == 2);
    CHECK(right[0] == ExactReal(1));
    CHECK(right[1] == rat(2, 3));
    auto half = best_sided_rational_approximations(rat(1, 2), Side::Left, 1);
    REQUIRE(half.size() == 1);
    CHECK(half[0] == ExactReal(0));
}

TEST_CASE("sided rational approximations equal the record scan") {
    for (int i = 0; i < 50; ++i) {
        ExactReal x = i % 2 ? random_unit_rational(300) : ExactReal::sqrt_of(2 + i).frac();
        Int bound = 100;
        for (Side side : {Side::Left, Side::Right}) {
            auto mine = best_sided_rational_approximations(x, side, bound);
            auto ref = oracle::sided_rational_records(x, side == Side::Right, bound);
            CHECK(mine == ref);
        }
    }
}

TEST_CASE("delta sequence") {
    CHECK(delta(rat(2, 5), 0) == rat(2, 5));
    CHECK(delta(rat(2, 5), 1) == rat(1, 5));
    CHECK(delta(rat(2, 5), 2) == rat(1, 5));
    CHECK(delta(rat(2, 5), -2) == rat(2, 5));
    CHECK(delta(rat(2, 5), -1) == ExactReal(1));
    CHECK_THROWS_AS(delta(rat(2, 5), 3), IndexBeyondDepth);
    // Golden base: the delta ratio is the fixed point of the Gauss map.
    Alpha g(golden());
    for (long i = 0; i <= 12; ++i) CHECK(g.delta(i) / g.delta(i - 1) == golden());
    // delta_r = delta_{r-1} = 1/q_{r+1} for every rational base.
    for (int i = 0; i < 100; ++i) {
        ExactReal x = random_unit_rational(500);
        Alpha a(x);
        long r = *a.depth();
        CHECK(a.delta(r) == a.delta(r - 1));
        if (r >= 1) CHECK(a.delta(r) == ExactReal(1) / ExactReal(a.grid_size()));
        // Strict decrease below the depth.
        for (long j = 0; j <= r - 1; ++j) {
            CHECK(a.delta(j).sign() > 0);
            CHECK(a.delta(j) < a.delta(j - 1));
        }
    }
}

TEST_CASE("alpha shift") {
    Alpha g(golden());
    for (long k = 0; k <= 6; ++k) CHECK(g.shift(k) == golden());
    Alpha a(rat(2, 5));
    CHECK(a.shift(1) == rat(1, 2));
    CHECK(a.shift(2) == ExactReal(0));
    CHECK_THROWS_AS(a.shift(3), IndexBeyondDepth);
}
