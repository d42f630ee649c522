#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "groups/group.hpp"

using namespace wordmap;
using namespace wordmap::groups;

namespace {

std::vector<Element> a_n_generators(int n) {
    // (1,2,3) plus an n- or (n-1)-cycle, whichever is even.
    std::vector<Element> gens;
    gens.push_back(Element(Perm::from_cycles(n, {{1, 2, 3}})));
    std::vector<int> cyc;
    if (n % 2 == 1) {
        for (int i = 1; i <= n; ++i) cyc.push_back(i);
    } else {
        for (int i = 2; i <= n; ++i) cyc.push_back(i);
    }
    gens.push_back(Element(Perm::from_cycles(n, {cyc})));
    return gens;
}

std::vector<Element> sl2_generators(int64_t p) {
    const ff::SmallField* f = ff::small_field(p, 1);
    // [[1,1],[0,1]] and [[0,-1],[1,0]] generate SL_2(p)
    ff::Mat t = ff::Mat::from_codes(f, 2, 2, {1, 1, 0, 1});
    ff::Mat w = ff::Mat::from_codes(f, 2, 2, {0, static_cast<uint16_t>(p - 1), 1, 0});
    return {Element(t), Element(w)};
}

}  // namespace

TEST_CASE("enumerate A4 from its textbook generators") {
    std::vector<Element> gens = {Element(Perm::from_cycles(4, {{1, 2, 3}})),
                                 Element(Perm::from_cycles(4, {{1, 2}, {3, 4}}))};
    auto g = enumerate_group(gens, 100000, "A4");
    CHECK(g.order() == 12);
    CHECK(g.num_classes() == 4);
    CHECK(g.exponent() == 6);
}

TEST_CASE("enumerate SL2(3): order 24, 7 classes") {
    auto g = enumerate_group(sl2_generators(3), 100000, "SL2(3)");
    CHECK(g.order() == 24);
    CHECK(g.num_classes() == 7);
}

TEST_CASE("trivial group") {
    std::vector<Element> gens = {Element(Perm::identity(3))};
    auto g = enumerate_group(gens, 10, "triv");
    CHECK(g.order() == 1);
    CHECK(g.num_classes() == 1);
}

TEST_CASE("cap exceeded reports partial count") {
    auto gens = a_n_generators(6);
    CHECK_THROWS_AS(enumerate_group(gens, 100, "A6"), EnumerationCapExceeded);
}

TEST_CASE("class invariants on A5") {
    auto g = enumerate_group(a_n_generators(5), 100000, "A5");
    CHECK(g.order() == 60);
    CHECK(g.num_classes() == 5);
    CHECK(g.exponent() == 30);
    int64_t total = 0;
    for (int c = 0; c < g.num_classes(); ++c) {
        total += g.class_size(c);
        CHECK(g.order() % g.class_size(c) == 0);
        CHECK(g.centralizer_order(c) * g.class_size(c) == g.order());
        CHECK(g.class_inverse(g.class_inverse(c)) == c);
    }
    CHECK(total == 60);
    CHECK(g.class_of_id(0) == 0);
    CHECK(g.class_element_order(0) == 1);
}

TEST_CASE("class_of is conjugation invariant and splits 5A/5B in A5") {
    auto g = enumerate_group(a_n_generators(5), 100000, "A5");
    Element five = Element(Perm::from_cycles(5, {{1, 2, 3, 4, 5}}));
    Element fiveb = Element(Perm::from_cycles(5, {{1, 3, 5, 2, 4}}));
    CHECK(g.class_of(five) != g.class_of(fiveb));
    // conjugate by an even permutation stays in the class
    Element t = Element(Perm::from_cycles(5, {{2, 1, 3}}));  // odd? (2,1,3) is a 3-cycle: even
    CHECK(g.class_of(five.conj(t)) == g.class_of(five));
    Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        Element by = g.element(static_cast<int32_t>(rng.below(static_cast<uint64_t>(g.order()))));
        CHECK(g.class_of(five.conj(by)) == g.class_of(five));
    }
}

TEST_CASE("power_class_map basics") {
    auto g = enumerate_group(a_n_generators(5), 100000, "A5");
    auto id_map = g.power_class_map(1);
    for (int c = 0; c < g.num_classes(); ++c) CHECK(id_map[c] == c);
    // N = 12 sends an order-5 class to the other order-5 class (g^12 = g^2)
    int c5 = -1;
    for (int c = 0; c < g.num_classes(); ++c)
        if (g.class_element_order(c) == 5) {
            c5 = c;
            break;
        }
    REQUIRE(c5 >= 0);
    auto m12 = g.power_class_map(12);
    CHECK(m12[c5] != c5);
    CHECK(g.class_element_order(m12[c5]) == 5);
    // periodicity mod exponent
    auto m42 = g.power_class_map(12 + 30);
    CHECK(m12 == m42);
}

TEST_CASE("brute_structure_constant on pinned examples") {
    // abelian C3: singleton classes, nonzero iff xy = z
    std::vector<Element> c3gens = {Element(Perm::from_cycles(3, {{1, 2, 3}}))};
    auto c3 = enumerate_group(c3gens, 100, "C3");
    CHECK(c3.order() == 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                int64_t cnt = c3.brute_structure_constant(a, b, c);
                Element prod = c3.element(c3.class_rep(a)) * c3.element(c3.class_rep(b));
                bool hit = c3.class_of(prod) == c;
                CHECK(cnt == (hit ? 1 : 0));
            }

    auto a5 = enumerate_group(a_n_generators(5), 100000, "A5");
    // a = b = 5A, c = identity: |5A| = 12 pairs
    int c5 = -1, c2 = -1, c3a = -1;
    for (int c = 0; c < a5.num_classes(); ++c) {
        if (a5.class_element_order(c) == 5 && c5 < 0) c5 = c;
        if (a5.class_element_order(c) == 2) c2 = c;
        if (a5.class_element_order(c) == 3) c3a = c;
    }
    // 5A's inverse class is 5A itself (g ~ g^-1 in A5)
    CHECK(a5.class_inverse(c5) == c5);
    CHECK(a5.brute_structure_constant(c5, c5, 0) == 12);
    CHECK(a5.brute_structure_constant(c2, c3a, c5) > 0);
}

TEST_CASE("brute structure constants: inversion symmetry") {
    // a_{abc} |C_c| is invariant under (a,b,c) -> (b^-1, a^-1, c^-1).
    auto g = enumerate_group(a_n_generators(5), 100000, "A5");
    const int k = g.num_classes();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                int64_t lhs = g.brute_structure_constant(a, b, c) * g.centralizer_order(c);
                int64_t rhs = g.brute_structure_constant(g.class_inverse(b), g.class_inverse(a),
                                                         g.class_inverse(c)) *
                              g.centralizer_order(g.class_inverse(c));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("random_element determinism and membership") {
    auto gens = a_n_generators(5);
    Element e1 = random_element(gens, 12345, 64);
    Element e2 = random_element(gens, 12345, 64);
    CHECK(e1 == e2);
    auto g = enumerate_group(gens, 100000, "A5");
    CHECK(g.id_of(e1) >= 0);
}

TEST_CASE("random_element class distribution is within 5x of uniform-by-size") {
    auto gens = a_n_generators(5);
    auto g = enumerate_group(gens, 100000, "A5");
    RandomWalker w(gens, 777, 100);
    std::map<int, int> counts;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) counts[g.class_of(w.next())]++;
    for (int c = 0; c < g.num_classes(); ++c) {
        double expect = static_cast<double>(g.class_size(c)) / g.order() * draws;
        double got = counts[c];
        CHECK(got < 5.0 * expect);
        CHECK(got > expect / 5.0);
    }
}
