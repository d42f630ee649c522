#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "primes/primes.hpp"

using namespace wordmap;
using namespace wordmap::primes;

TEST_CASE("ppd pinned examples and exceptions") {
    CHECK_FALSE(ppd(2, 6).has_value());
    CHECK_FALSE(ppd(2, 1).has_value());
    CHECK_FALSE(ppd(3, 2).has_value());   // 3 + 1 = 4
    CHECK_FALSE(ppd(7, 2).has_value());   // 7 + 1 = 8
    CHECK(ppd(5, 2).value() == 3);        // 5 + 1 = 6 = 2 * 3
    CHECK(ppd(2, 10).value() == 11);      // 2^10 - 1 = 3 * 11 * 31
    CHECK(ppd(3, 5).value() == 11);       // 3^5 - 1 = 2 * 11^2
    CHECK(ppd(2, 13).value() == 8191);
    CHECK(ppd(2, 11).value() == 23);      // 2047 = 23 * 89
    CHECK(ppd(3, 1).value() == 2);
}

TEST_CASE("ppd output is a primitive divisor (brute check, small range)") {
    for (int64_t a = 2; a <= 6; ++a) {
        for (int64_t n = 1; n <= 14; ++n) {
            auto p = ppd(a, n);
            if (!p) continue;
            // divides a^n - 1
            BigInt an = 1;
            for (int64_t i = 0; i < n; ++i) an *= a;
            an -= 1;
            CHECK(an % *p == 0);
            // divides no smaller a^i - 1
            BigInt ai = 1;
            for (int64_t i = 1; i < n; ++i) {
                ai = 1;
                for (int64_t j = 0; j < i; ++j) ai *= a;
                ai -= 1;
                CHECK(ai % *p != 0);
            }
        }
    }
}

TEST_CASE("odd primitive ppd is congruent to 1 mod n") {
    for (int64_t a = 2; a <= 9; ++a)
        for (int64_t n = 2; n <= 40; ++n) {
            auto p = ppd(a, n);
            if (!p || *p == 2) continue;
            CHECK((*p - 1) % n == 0);
        }
}

TEST_CASE("ppd_star pinned examples") {
    CHECK(ppd_star(2, 13, -1) == 2731);
    CHECK(ppd_star(2, 13, +1) == 8191);
    CHECK(ppd_star(2, 14, +1) == BigInt(43) * 127);
    CHECK_THROWS(ppd_star(2, 12, +1));  // below the asymptotic regime
    CHECK(ppd_star(2, 10, +1, true) == BigInt(11) * 31);
}

TEST_CASE("special prime table rows") {
    auto sp24 = special_primes(LieFamily::SpOrSpinOdd, 12, 2);
    CHECK(sp24.primes == std::vector<BigInt>{241, 13, 7});
    auto sp12 = special_primes(LieFamily::SpOrSpinOdd, 6, 2);
    CHECK(sp12.primes == std::vector<BigInt>{13, 3, 7});
    auto sl62 = special_primes(LieFamily::SL, 6, 2);
    CHECK(sl62.primes == std::vector<BigInt>{31});
    auto sl72 = special_primes(LieFamily::SL, 7, 2);
    CHECK(sl72.primes == std::vector<BigInt>{127});
    auto su42 = special_primes(LieFamily::SU, 4, 2);
    CHECK(su42.primes == std::vector<BigInt>{5});
    CHECK_FALSE(special_primes(LieFamily::SpinPlus, 4, 2).covered);
    CHECK_FALSE(special_primes(LieFamily::SpOrSpinOdd, 3, 4).covered);
    CHECK_THROWS(special_primes(LieFamily::SL, 3, 5));
    // generic rows divide the group order and avoid the characteristic
    for (auto fam : {LieFamily::SL, LieFamily::SU, LieFamily::SpOrSpinOdd, LieFamily::SpinPlus,
                     LieFamily::SpinMinus}) {
        for (int n : {4, 5, 6, 7}) {
            for (int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
                if (fam == LieFamily::SpOrSpinOdd && n % 2 == 0 && n < 6) continue;
                SpecialPrimeSet s;
                try {
                    s = special_primes(fam, n, q);
                } catch (const std::domain_error&) {
                    continue;
                }
                if (!s.covered) continue;
                BigInt order = lie_group_order(fam, n, q);
                for (auto& r : s.primes) {
                    CAPTURE(lie_family_name(fam));
                    CHECK(order % r == 0);
                    CHECK(q % r != 0);
                }
            }
        }
    }
    // exceptional-group rows at a few parameters
    for (auto [fam, n, q] : std::vector<std::tuple<LieFamily, int, int64_t>>{
             {LieFamily::G2, 0, 3},
             {LieFamily::G2, 0, 5},
             {LieFamily::Steinberg3D4, 0, 2},
             {LieFamily::F4, 0, 2},
             {LieFamily::E6, 0, 2},
             {LieFamily::TwistedE6, 0, 2},
             {LieFamily::E7, 0, 2},
             {LieFamily::E8, 0, 2},
             {LieFamily::Suzuki2B2, 0, 32},
             {LieFamily::Ree2G2, 0, 243}}) {
        auto s = special_primes(fam, n, q);
        REQUIRE(s.covered);
        BigInt order = lie_group_order(fam, n, q);
        for (auto& r : s.primes) {
            CAPTURE(lie_family_name(fam));
            CHECK(order % r == 0);
        }
    }
}

TEST_CASE("lemma-pair scan has no violations on a reduced range") {
    std::vector<std::string> notes;
    auto v = scan_lemma_pair(4, 24, &notes);
    CHECK(v.empty());
    // allowed collisions exist: (n, +) vs (n/2, +) should share a factor
    BigInt a = ppd_star(2, 26, +1);
    BigInt b = ppd_star(2, 13, +1);
    CHECK(gcd(a, b) > 1);
}

TEST_CASE("center exponent D") {
    CHECK(center_exponent_D(2, 3, LieFamily::SL) == 432);
    CHECK(center_exponent_D(1, 2, LieFamily::SpOrSpinOdd) == 4);
    CHECK(center_exponent_D(3, 2, LieFamily::SU) == 32);
}
