#include <doctest.h>

#include <algorithm>

#include "cfkit/numeration.hpp"
#include "cfkit/oracle.hpp"
#include "helpers.hpp"

using namespace cfkit;
using testutil::all_unit_rationals;
using testutil::golden;
using testutil::rand_long;
using testutil::random_positive_unit_rational;

namespace {

std::vector<Int> digits(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

DigitWord word(std::initializer_list<long> xs, Tail tail = Tail::Zeros) {
    return DigitWord(digits(xs), tail);
}

ExactReal rat(long p, long q) { return ExactReal::rational(p, q); }

// ALO comparison of two plain digit vectors (test-local, for oracle sorts).
bool alo_less(const std::vector<Int>& u, const std::vector<Int>& v) {
    for (std::size_t j = 0; j < std::max(u.size(), v.size()); ++j) {
        Int du = j < u.size() ? u[j] : Int(0);
        Int dv = j < v.size() ? v[j] : Int(0);
        if (du == dv) continue;
        bool odd = (j % 2) == 0; // 1-based index j+1 odd
        return odd ? du < dv : du > dv;
    }
    return false;
}

} // namespace

TEST_CASE("admissibility of small words") {
    Alpha a(rat(2, 5)); // digits a_1 = 2, a_2 = 1
    auto words = oracle::enumerate_admissible(rat(2, 5));
    REQUIRE(words.size() == 5); // q_{r+1} elements
    CHECK(words[0] == digits({0, 0}));
    CHECK(words[1] == digits({1, 0}));
    CHECK(words[2] == digits({2, 0}));
    CHECK(words[3] == digits({1, 1}));
    CHECK(words[4] == digits({2, 1}));
    for (auto& w : words) CHECK(is_admissible(a, DigitWord(w, Tail::Zeros)));
    CHECK(!is_admissible(a, word({0, 1})));
    CHECK(!is_admissible(a, word({3, 0})));
    CHECK(!is_admissible(a, word({1, 2})));
    CHECK(!is_admissible(a, word({1, 0, 1}))); // longer than the depth

    Alpha g(golden());
    // d_2 = 0 after the maximal digit d_1 = a_1 = 1 is admissible even
    // with a nonzero digit after it; the rank oracle below agrees.
    CHECK(is_admissible(g, word({1, 0, 1})));
    CHECK(psi_inv(g, 3).digits() == digits({1, 0, 1}));
    CHECK(!is_admissible(g, word({0, 1})));
    CHECK(!is_admissible(g, word({1, 0, 0, 1}))); // 0 after non-maximal 0
}

TEST_CASE("psi and psi_inv on frozen examples") {
    Alpha a(rat(2, 5));
    Alpha g(golden());
    CHECK(psi(a, DigitWord::zero()) == 0);
    CHECK(psi(a, word({1, 1})) == 3);
    CHECK(psi(g, word({1, 1, 1})) == 4);
    CHECK(psi_inv(a, 0).is_zero());
    CHECK(psi_inv(g, 4).digits() == digits({1, 1, 1}));
    CHECK(psi_inv(a, 4).digits() == digits({2, 1}));
    CHECK_THROWS_AS(psi_inv(a, 5), OutOfRange);
    CHECK_THROWS_AS(psi_inv(a, -1), OutOfRange);
    CHECK_THROWS_AS(psi(a, word({0, 1})), NotAdmissible);
}

TEST_CASE("lambda on frozen examples") {
    Alpha a(rat(2, 5));
    CHECK(lambda(a, word({1, 1})) == rat(1, 5));
    CHECK(lambda(a, word({1, 1})) == (rat(2, 5) * ExactReal(3)).frac());
    CHECK(lambda(a, word({2, 1})) == rat(3, 5));
    CHECK(lambda(a, DigitWord::zero()) == ExactReal(0));
}

TEST_CASE("lambda_inv on frozen examples") {
    Alpha a(rat(2, 5));
    CHECK(lambda_inv_word(a, ExactReal(0)).is_zero());
    CHECK(lambda_inv_word(a, rat(3, 5)).digits() == digits({2, 1}));
    Alpha g(golden());
    ExactReal beta = (ExactReal(4) * golden()).frac();
    CHECK(lambda_inv_word(g, beta).digits() == digits({1, 1, 1}));
    CHECK_THROWS_AS(lambda_inv(a, rat(1, 3)), NotGridPoint);
    CHECK_THROWS_AS(lambda_inv(a, ExactReal(1)), DomainError);
    CHECK_THROWS_AS(lambda_inv(a, rat(-1, 5)), DomainError);
}

TEST_CASE("order isomorphisms on every rational base with q <= 30") {
    for (const ExactReal& x : all_unit_rationals(30)) {
        Alpha a(x);
        Int q = a.grid_size();
        auto words = oracle::enumerate_admissible(x);
        REQUIRE(Int(words.size()) == q);
        // RLO rank k <-> integer k, exhaustively.
        for (Int n = 0; n < q; ++n) {
            DigitWord w = psi_inv(a, n);
            std::vector<Int> padded = w.digits();
            padded.resize(words[0].size(), Int(0));
            CHECK(padded == words[static_cast<std::size_t>(n)]);
            CHECK(psi(a, w) == n);
            // Fundamental identity {n alpha} = Lambda(Psi^-1(n)).
            ExactReal value = lambda(a, w);
            CHECK(value == (x * ExactReal(n)).frac());
            CHECK(lambda_inv_word(a, value).equals(a, w));
        }
        // Lambda is an ALO -> [0,1[ order isomorphism: sort words by ALO
        // and demand strictly increasing values.
        std::vector<std::vector<Int>> alo_sorted = words;
        std::sort(alo_sorted.begin(), alo_sorted.end(), alo_less);
        for (std::size_t i = 0; i + 1 < alo_sorted.size(); ++i) {
            CHECK(lambda(a, DigitWord(alo_sorted[i], Tail::Zeros)) <
                  lambda(a, DigitWord(alo_sorted[i + 1], Tail::Zeros)));
        }
        // Lemma 2(i): every admissible prefix sum stays below q_k + q_{k-1}.
        for (auto& w : words) {
            Int sum = 0;
            for (long k = 1; k <= static_cast<long>(w.size()); ++k) {
                sum += w[static_cast<std::size_t>(k - 1)] * a.q(k - 1);
                CHECK(sum < a.q(k) + a.q(k - 1));
            }
        }
    }
}

TEST_CASE("fundamental identity for a quadratic base") {
    Alpha g(golden());
    ExactReal mult(0);
    for (long n = 0; n <= 2000; ++n) {
        DigitWord w = psi_inv(g, n);
        CHECK(lambda(g, w) == mult);
        mult = (mult + golden()).frac();
    }
}

TEST_CASE("remainder bounds of the digit stream") {
    for (int i = 0; i < 40; ++i) {
        ExactReal x = random_positive_unit_rational(120);
        Alpha a(x);
        Int q = a.grid_size();
        for (Int n = 0; n < q; ++n) {
            DigitStream s = lambda_inv(a, ExactReal::rational(n, q));
            long k = 0;
            while (!s.terminated()) {
                s.next();
                ++k;
                CHECK(s.remainder() > -a.delta(k));
                CHECK(s.remainder() < a.delta(k - 1));
            }
        }
    }
}

TEST_CASE("streams of off-grid reals never lock into the improper tail") {
    Alpha g(golden());
    for (int i = 0; i < 10; ++i) {
        ExactReal beta = rat(rand_long(1, 997), 998 + i);
        DigitStream s = lambda_inv(g, beta);
        std::vector<Int> d;
        for (int k = 0; k < 120; ++k) d.push_back(s.next());
        REQUIRE(!s.terminated());
        // The last 2m digits must not all be (max, 0) pairs for m = 50.
        bool improper_suffix = true;
        for (std::size_t m = 1; m <= 50 && improper_suffix; ++m) {
            std::size_t lo = d.size() - 2 * m; // pair (d[lo], d[lo+1]), 1-based index lo+1
            if (d[lo] != g.a(static_cast<long>(lo + 1)) || d[lo + 1] != 0)
                improper_suffix = false;
        }
        CHECK(!improper_suffix);
    }
}

TEST_CASE("lambda_tilde splits a real into grid word and epsilon") {
    Alpha a(rat(2, 5));
    auto [w, eps] = lambda_tilde_inv(a, rat(1, 2));
    CHECK(eps == rat(1, 2)); // {q_{r+1} beta} = {5/2}
    CHECK(w.digits() == digits({1}));
    CHECK(lambda_tilde(a, w, eps) == rat(1, 2));
    auto [wz, ez] = lambda_tilde_inv(a, ExactReal(0));
    CHECK(wz.is_zero());
    CHECK(ez.is_zero());
    // Monotone along the ALO order: walking the grid by increasing value
    // and eps within each cell gives strictly increasing lambda_tilde.
    ExactReal prev(-1);
    for (Int n = 0; n < a.grid_size(); ++n) {
        ExactReal cell = ExactReal::rational(n, a.grid_size());
        DigitWord g = lambda_inv_word(a, cell);
        for (long e = 0; e < 4; ++e) {
            ExactReal val = lambda_tilde(a, g, ExactReal::rational(e, 4));
            CHECK(val > prev);
            prev = val;
            auto [w2, e2] = lambda_tilde_inv(a, val);
            CHECK(w2.equals(a, g));
            CHECK(e2 == ExactReal::rational(e, 4));
        }
    }
    Alpha gb(golden());
    CHECK_THROWS_AS(lambda_tilde_inv(gb, rat(1, 2)), DomainError);
}

TEST_CASE("RLO and ALO comparisons") {
    Alpha a(rat(2, 5));
    CHECK(compare_rlo(a, word({1}), word({0, 1})) == std::strong_ordering::less);
    CHECK(compare_alo(a, word({1, 1}), word({1})) == std::strong_ordering::less);
    CHECK(compare_alo(a, word({1}), word({2})) == std::strong_ordering::less);
    // Any Maxes-tail word precedes any Zeros-tail word under RLO.
    CHECK(compare_rlo(a, word({2, 1}, Tail::Maxes), word({0, 0})) == std::strong_ordering::less);
    CHECK(compare_rlo(a, word({1, 0}), word({1})) == std::strong_ordering::equal);
    Alpha g(golden());
    CHECK(compare_rlo(g, word({1, 0, 1}, Tail::Maxes), DigitWord::zero()) ==
          std::strong_ordering::less);
    // Equal digits with opposite tails stay RLO-ordered but ALO-equal over
    // a rational base (their Lambda values coincide).
    CHECK(compare_rlo(a, word({2, 1}, Tail::Maxes), word({2, 1})) == std::strong_ordering::less);
    CHECK(compare_alo(a, word({2, 1}, Tail::Maxes), word({2, 1})) == std::strong_ordering::equal);
}

TEST_CASE("incomparable infinite streams raise") {
    Alpha g(golden());
    DigitStream u = lambda_inv(g, rat(1, 3));
    DigitStream v = lambda_inv(g, rat(1, 7));
    CHECK_THROWS_AS(compare_rlo_streams(u, v, 64), IncomparableStreams);
    DigitStream w1 = lambda_inv(g, (golden() * ExactReal(3)).frac());
    DigitStream w2 = lambda_inv(g, (golden() * ExactReal(5)).frac());
    CHECK(compare_rlo_streams(w1, w2, 64) == std::strong_ordering::less);
}

TEST_CASE("reflection to base 1 - alpha") {
    // beta = alpha with word (1): the reflected word evaluates to 1 - alpha.
    ExactReal a_val = rat(2, 5);
    Alpha a(a_val);
    Alpha ra(reflected_base(a)); // 3/5
    DigitWord r = reflect(a, word({1}));
    CHECK(lambda(ra, r.canonical(ra)) == ExactReal(1) - a_val);
    // b_1 = a_1 maximal: the image starts (1, a_1 - 1).
    DigitWord r2 = reflect(a, word({2, 1}));
    CHECK(r2.digits()[0] == 1);
    CHECK(r2.digits()[1] == 1);
    // Exact identity over random rational bases and grid points.
    for (int i = 0; i < 100; ++i) {
        ExactReal x = random_positive_unit_rational(150);
        if (x >= rat(1, 2)) x = x / ExactReal(2);
        if (x.is_zero()) continue;
        Alpha base(x);
        Alpha refl(reflected_base(base));
        Int q = base.grid_size();
        Int n = Int(rand_long(1, 1000)) % q;
        if (n == 0) n = 1;
        DigitWord b = psi_inv(base, n);
        ExactReal beta = lambda(base, b);
        if (beta.is_zero()) continue;
        DigitWord image = reflect(base, b);
        CHECK(is_admissible(refl, image));
        CHECK(lambda(refl, image) == ExactReal(1) - beta);
    }
    // The reflected base has CFE [0, 1, a_1 - 1, a_2, ...].
    CHECK(cfe_of(reflected_base(a)) == digits({0, 1, 1, 1, 1}));
    Alpha too_big(rat(3, 5));
    CHECK_THROWS_AS(reflect(too_big, word({1})), DomainError);
}

TEST_CASE("improper (max,0)-tails normalize to the proper word") {
    Alpha g(golden());
    for (long n : {1L, 2L, 3L, 5L, 12L, 30L}) {
        DigitWord proper = psi_inv(g, n);
        std::vector<Int> d = proper.digits();
        long r = static_cast<long>(d.size());
        // (d_{[1,r]}, 1, (max,0)^inf)
        std::vector<Int> form1 = d;
        form1.push_back(Int(1));
        CHECK(normalize_improper_maxzero(g, form1).equals(g, proper));
        if (d.back() < g.a(r)) {
            // (d_{[1,r-1]}, d_r + 1, (max,0)^inf)
            std::vector<Int> form2 = d;
            form2.back() += 1;
            CHECK(normalize_improper_maxzero(g, form2).equals(g, proper));
        } else {
            // (d_{[1,r]}, 0, 1, (max,0)^inf)
            std::vector<Int> form3 = d;
            form3.push_back(Int(0));
            form3.push_back(Int(1));
            CHECK(normalize_improper_maxzero(g, form3).equals(g, proper));
        }
    }
    // (1, (max,0)^inf) is the improper expansion of 0.
    CHECK(normalize_improper_maxzero(g, digits({1})).is_zero());
    // Proper input returns unchanged.
    CHECK(normalize_improper(g, word({1, 1})).digits() == digits({1, 1}));
    CHECK_THROWS_AS(normalize_improper_maxzero(g, digits({0, 1})), NotConvertible);
    Alpha ar(rat(2, 5));
    CHECK_THROWS_AS(normalize_improper_maxzero(ar, digits({1})), DomainError);
}

TEST_CASE("telescoped tail sums match truncations") {
    Alpha g(golden());
    for (long s : {1L, 2L, 3L, 4L}) {
        // sum_{j=0..J} a_{s+2j+1} delta_{s+2j} = delta_{s-1} - delta_{s+2J+1}
        ExactReal sum(0);
        for (long j = 0; j <= 8; ++j) {
            sum += ExactReal(g.a(s + 2 * j + 1)) * g.delta(s + 2 * j);
            CHECK(sum == g.delta(s - 1) - g.delta(s + 2 * j + 1));
        }
    }
}

TEST_CASE("digit word text form round-trips") {
    CHECK(DigitWord::parse("(1,1,1)|0").digits() == digits({1, 1, 1}));
    CHECK(DigitWord::parse("()|0").is_zero());
    CHECK(DigitWord::parse("(2,1)|max").tail() == Tail::Maxes);
    CHECK(DigitWord::parse(word({1, 0, 2}, Tail::Maxes).str()).digits() == digits({1, 0, 2}));
    CHECK_THROWS_AS(DigitWord::parse("(1,2"), ParseError);
    CHECK_THROWS_AS(DigitWord::parse("(1)|x"), ParseError);
}
