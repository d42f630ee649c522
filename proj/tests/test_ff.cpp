#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "base/util.hpp"
#include "ff/matrix.hpp"
#include "ff/poly.hpp"

using namespace wordmap;
using namespace wordmap::ff;

TEST_CASE("F9 is F3[t]/(t^2+1) with exact arithmetic") {
    Field f9 = field(3, 2);
    CHECK(f9->modulus == std::vector<uint32_t>{1, 0, 1});  // t^2 + 1
    FieldElement t = f9->from_code(3);                     // coefficients (0,1)
    CHECK((t * t) == f9->from_int(2));                     // t^2 = -1 = 2
    // frobenius fixes the prime subfield
    FieldElement two = f9->from_int(2);
    CHECK(two.frobenius() == two);
    // norm_{F9/F3}(t) = t * t^3 = t^4 = 1
    FieldElement n = f9->norm_to_subfield(t, 1);
    CHECK(n == field(3, 1)->from_int(1));
}

TEST_CASE("field element basics and literals") {
    Field f5 = field(5, 1);
    FieldElement a = f5->from_int(3);
    CHECK(a.inv() * a == f5->one());
    CHECK(a.pow(4) == f5->one());
    CHECK(parse_element(a.str()) == a);
    Field f9 = field(3, 2);
    FieldElement t = f9->from_code(3);
    CHECK(parse_element(t.str()) == t);
    CHECK(t.str() == "3^2:[0,1]");
}

TEST_CASE("unit group properties on several fields") {
    Rng rng(11);
    for (auto [p, k] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {7, 1}, {2, 4}, {17, 2}}) {
        Field F = field(p, k);
        for (int trial = 0; trial < 50; ++trial) {
            FieldElement a = F->from_code(rng.below(F->size));
            if (a.is_zero()) continue;
            CHECK(a * a.inv() == F->one());
            CHECK(a.pow(F->size - 1) == F->one());
            FieldElement fr = a;
            for (int i = 0; i < k; ++i) fr = fr.frobenius();
            CHECK(fr == a);
        }
        FieldElement g = F->gen();
        CHECK(g.order() == F->size - 1);
    }
}

TEST_CASE("norm is multiplicative, trace is additive") {
    Rng rng(12);
    for (auto [p, k, d] : {std::tuple<int64_t, int, int>{3, 2, 1}, {2, 4, 2}, {5, 2, 1}, {2, 6, 3}, {3, 4, 2}}) {
        Field F = field(p, k);
        for (int trial = 0; trial < 40; ++trial) {
            FieldElement a = F->from_code(rng.below(F->size));
            FieldElement b = F->from_code(rng.below(F->size));
            CHECK(F->trace_to_subfield(a + b, d) ==
                  F->trace_to_subfield(a, d) + F->trace_to_subfield(b, d));
            if (!a.is_zero() && !b.is_zero())
                CHECK(F->norm_to_subfield(a * b, d) ==
                      F->norm_to_subfield(a, d) * F->norm_to_subfield(b, d));
        }
    }
}

TEST_CASE("tower embedding is a ring homomorphism") {
    Field f4 = field(2, 2), f16 = field(2, 4);
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        FieldElement a = f4->from_code(rng.below(4));
        FieldElement b = f4->from_code(rng.below(4));
        CHECK(f16->embed(a * b) == f16->embed(a) * f16->embed(b));
        CHECK(f16->embed(a + b) == f16->embed(a) + f16->embed(b));
        CHECK(f16->project_to_subfield(f16->embed(a), 2) == a);
    }
}

TEST_CASE("factor_poly on the pinned examples") {
    Field f2 = field(2, 1);
    // 5th cyclotomic polynomial stays irreducible over F_2 (ord_5(2) = 4)
    Poly c5 = Poly::from_codes(f2, {1, 1, 1, 1, 1});
    auto fac = factor_poly(c5, 1);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].factor == c5);
    CHECK(fac[0].multiplicity == 1);

    Field f5 = field(5, 1);
    Poly x2m1 = Poly::from_codes(f5, {4, 0, 1});  // x^2 - 1
    auto fac2 = factor_poly(x2m1, 1);
    REQUIRE(fac2.size() == 2);
    CHECK(fac2[0].factor.degree() == 1);
    CHECK(fac2[1].factor.degree() == 1);

    Poly x2p1 = Poly::from_codes(f5, {1, 0, 1});  // x^2 + 1 = (x-2)(x-3)
    auto rts = roots(x2p1, 1);
    REQUIRE(rts.size() == 2);
    uint64_t r0 = rts[0].first.code(), r1 = rts[1].first.code();
    CHECK(((r0 == 2 && r1 == 3) || (r0 == 3 && r1 == 2)));
}

TEST_CASE("factor_poly remultiplies to the input") {
    Rng rng(99);
    for (auto [p, k] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        Field F = field(p, k);
        for (int trial = 0; trial < 1000; ++trial) {
            int deg = 1 + static_cast<int>(rng.below(12));
            std::vector<uint64_t> codes(deg + 1);
            for (auto& c : codes) c = rng.below(F->size);
            codes[deg] = 1 + rng.below(F->size - 1);
            Poly f = Poly::from_codes(F, codes);
            auto fac = factor_poly(f, trial);
            Poly prod = Poly::constant(f.lead());
            for (auto& pf : fac) {
                CHECK(pf.factor.lead().is_one());
                for (int m = 0; m < pf.multiplicity; ++m) prod = prod * pf.factor;
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("factored polynomials are irreducible (spot check against brute force)") {
    // Over small fields, verify irreducibility by scanning for roots and
    // degree-2 divisors up to degree 4.
    Field f3 = field(3, 1);
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<uint64_t> codes(5);
        for (auto& c : codes) c = rng.below(3);
        codes[4] = 1 + rng.below(2);
        Poly f = Poly::from_codes(f3, codes);
        for (auto& pf : factor_poly(f, trial)) {
            if (pf.factor.degree() <= 1) continue;
            for (uint64_t a = 0; a < 3; ++a)
                CHECK_FALSE(pf.factor.eval(f3->from_code(a)).is_zero());
        }
    }
}

TEST_CASE("discrete log against a brute-force oracle") {
    Field f5 = field(5, 1);
    FieldElement g = f5->from_int(2);
    CHECK(f5->discrete_log(f5->from_int(4), g) == 2);
    CHECK(f5->discrete_log(f5->one(), g) == 0);

    Field f9 = field(3, 2);
    FieldElement g9 = f9->from_code(4);  // t + 1
    // brute-force oracle: iterate powers
    auto brute = [&](const FieldElement& x) -> uint64_t {
        FieldElement cur = f9->one();
        for (uint64_t e = 0; e < f9->size - 1; ++e) {
            if (cur == x) return e;
            cur = cur * g9;
        }
        FAIL("not a power");
        return 0;
    };
    FieldElement two = f9->from_int(2);
    uint64_t expected = brute(two);
    CHECK(expected == 4);  // (t+1)^2 = 2t, (t+1)^4 = 4t^2 = 2
    CHECK(f9->discrete_log(two, g9) == expected);
    CHECK_THROWS(f9->discrete_log(f9->zero(), g9));
    CHECK_THROWS(f9->discrete_log(two, f9->from_int(2)));  // 2 has order 2, not a generator
}

TEST_CASE("matrix arithmetic over small fields") {
    const SmallField* f3 = small_field(3, 1);
    Mat a = Mat::from_codes(f3, 2, 2, {1, 2, 0, 1});
    Mat b = Mat::from_codes(f3, 2, 2, {1, 0, 1, 1});
    Mat c = a * b;
    CHECK(c == Mat::from_codes(f3, 2, 2, {0, 2, 1, 1}));
    CHECK(a.inverse() * a == Mat::identity(f3, 2));
    CHECK(a.det() == 1);
    CHECK(parse_matrix(a.str()) == a);

    const SmallField* f4 = small_field(2, 2);
    Mat m = Mat::from_codes(f4, 2, 2, {2, 1, 1, 1});
    CHECK(m.invertible());
    CHECK((m * m.inverse()).is_identity());
}

TEST_CASE("charpoly matches explicit determinant expansion on 2x2") {
    const SmallField* f5 = small_field(5, 1);
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        Mat m(f5, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = static_cast<uint16_t>(rng.below(5));
        Poly cp = m.charpoly();
        // x^2 - tr x + det
        Field F = f5->F;
        Poly expect = Poly::from_codes(F, {m.det(), static_cast<uint64_t>((5 - m.trace()) % 5), 1});
        CHECK(cp == expect);
    }
}

TEST_CASE("charpoly degree and evaluation on random 6x6 over F2") {
    const SmallField* f2 = small_field(2, 1);
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Mat m(f2, 6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = static_cast<uint16_t>(rng.below(2));
        Poly cp = m.charpoly();
        CHECK(cp.degree() == 6);
        CHECK(cp.lead().is_one());
        // Cayley-Hamilton: cp(m) = 0
        Mat acc(f2, 6, 6);
        Mat pw = Mat::identity(f2, 6);
        for (int i = 0; i <= cp.degree(); ++i) {
            if (!cp.coeff(i).is_zero()) acc = acc + pw;
            pw = pw * m;
        }
        bool zero = true;
        for (int i = 0; i < 6 && zero; ++i)
            for (int j = 0; j < 6; ++j)
                if (acc.at(i, j)) {
                    zero = false;
                    break;
                }
        CHECK(zero);
    }
}

TEST_CASE("kernel and rank") {
    const SmallField* f7 = small_field(7, 1);
    Mat m = Mat::from_codes(f7, 2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(m.rank() == 1);
    auto ker = m.kernel();
    CHECK(ker.size() == 2);
    for (auto& v : ker) {
        // check m v = 0
        for (int i = 0; i < 2; ++i) {
            uint16_t acc = 0;
            for (int j = 0; j < 3; ++j) acc = f7->add(acc, f7->mul(m.at(i, j), v[j]));
            CHECK(acc == 0);
        }
    }
}
