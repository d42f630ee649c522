#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "catalog/catalog.hpp"

using namespace wordmap;
using namespace wordmap::words;
using catalog::build_bundle;
using groups::Element;
using groups::Perm;

namespace {

std::multiset<int64_t> missed_orders(const catalog::GroupBundle& b, const WordCheckResult& r) {
    std::multiset<int64_t> out;
    for (int c : r.missed) out.insert(b.gt->table.orders[c]);
    return out;
}

}  // namespace

TEST_CASE("structure_constant equals brute force on all A5 triples") {
    auto b = build_bundle("A5", 1);
    const int k = b.E().classes();
    for (int a = 0; a < k; ++a)
        for (int c2 = 0; c2 < k; ++c2)
            for (int c3 = 0; c3 < k; ++c3) {
                Rat exact = b.E().structure_constant(a, c2, c3);
                // map table columns back to group classes to query brute force
                int ga = -1, gb = -1, gc = -1;
                for (int gcls = 0; gcls < k; ++gcls) {
                    if (b.gt->col_of_class[gcls] == a) ga = gcls;
                    if (b.gt->col_of_class[gcls] == c2) gb = gcls;
                    if (b.gt->col_of_class[gcls] == c3) gc = gcls;
                }
                int64_t brute = b.G().brute_structure_constant(ga, gb, gc);
                CHECK(exact == Rat(brute));
            }
}

TEST_CASE("A5 pinned structure constants") {
    auto b = build_bundle("A5", 2);
    const auto& t = b.gt->table;
    // locate columns by element order
    int c5a = -1, c2 = -1, c3 = -1;
    for (int j = 0; j < t.k; ++j) {
        if (t.orders[j] == 5 && c5a < 0) c5a = j;
        if (t.orders[j] == 2) c2 = j;
        if (t.orders[j] == 3) c3 = j;
    }
    CHECK(b.E().structure_constant(c5a, t.inverse[c5a], 0) == Rat(12));
    CHECK(b.E().positive(c2, c3, c5a));
}

TEST_CASE("check_xNyN on the pinned examples") {
    auto a5 = build_bundle("A5", 3);
    CHECK(check_xNyN(a5.E(), 12).status == Status::Surjective);
    auto r30 = check_xNyN(a5.E(), 30);
    CHECK(r30.status == Status::NotSurjective);
    // image is exactly the identity class
    CHECK(r30.missed.size() == static_cast<size_t>(a5.E().classes() - 1));

    auto sl25 = build_bundle("SL2(5)", 3);
    auto r20 = check_xNyN(sl25.E(), 20);
    CHECK(r20.status == Status::NotSurjective);
    // missed: the two order-5 classes and the central involution
    CHECK(missed_orders(sl25, r20) == std::multiset<int64_t>{2, 5, 5});

    auto psl211 = build_bundle("PSL2(11)", 3);
    CHECK(psl211.G().order() == 660);
    auto r165 = check_xNyN(psl211.E(), 165);
    CHECK(r165.status == Status::NotSurjective);
    CHECK(missed_orders(psl211, r165) == std::multiset<int64_t>{11, 11});
}

TEST_CASE("surjectivity is stable under N -> N + exp(G)") {
    auto b = build_bundle("A6", 4);
    int64_t e = b.gt->table.exponent;
    for (uint64_t N : {4ull, 6ull, 12ull, 15ull}) {
        auto r1 = check_xNyN(b.E(), N);
        auto r2 = check_xNyN(b.E(), N + static_cast<uint64_t>(e));
        CHECK(r1.status == r2.status);
        CHECK(r1.missed == r2.missed);
    }
}

TEST_CASE("witnesses re-verify by brute force") {
    auto b = build_bundle("A6", 5);
    auto r = check_xNyN(b.E(), 12);
    REQUIRE(r.status == Status::Surjective);
    const int k = b.E().classes();
    std::vector<int> class_of_col(k);
    for (int g = 0; g < k; ++g) class_of_col[b.gt->col_of_class[g]] = g;
    for (int c = 0; c < k; ++c) {
        auto [a, bb, cc] = r.witnesses[c];
        REQUIRE(a >= 0);
        CHECK(b.G().brute_structure_constant(class_of_col[a], class_of_col[bb], class_of_col[cc]) > 0);
    }
}

TEST_CASE("k-2-element cover") {
    auto a5 = build_bundle("A5", 6);
    CHECK(check_k_2element_cover(a5.E(), 2).status == Status::Surjective);
    auto sl25 = build_bundle("SL2(5)", 6);
    CHECK(check_k_2element_cover(sl25.E(), 3).status == Status::Surjective);
    CHECK(check_k_2element_cover(sl25.E(), 1).status == Status::NotSurjective);
}

TEST_CASE("cube criterion agrees with the two-step route") {
    auto b = build_bundle("SL2(5)", 7);
    const int k = b.E().classes();
    for (int s = 0; s < k; ++s)
        for (int c = 0; c < k; ++c)
            CHECK(b.E().cube_positive(s, c) == b.E().triple_positive(s, s, s, c));
}

TEST_CASE("check_condition_PN desk instances") {
    auto gl25 = build_bundle("GL2(5)", 8);
    auto r = check_condition_PN(*gl25.spec, gl25.G(), *gl25.gt, gl25.E(), 15, false);
    CHECK(r.status == Status::Surjective);
    // identity class is always witnessed (central elements are N-th powers)
    CHECK(r.witnesses[0][0] >= 0);
}

TEST_CASE("two_2elements_witness") {
    auto a5 = build_bundle("A5", 9);
    Element g(Perm::from_cycles(5, {{1, 2, 3, 4, 5}}));
    auto w = two_2elements_witness(a5.G(), g);
    REQUIRE(w.has_value());
    CHECK(w->first * w->second == g);
    // identity decomposes trivially
    auto wid = two_2elements_witness(a5.G(), Element(Perm::identity(5)));
    REQUIRE(wid.has_value());
    // non-real order-3 class in A4 has no witness
    auto a4 = build_bundle("A4", 9);
    auto none = two_2elements_witness(a4.G(), Element(Perm::from_cycles(4, {{1, 2, 3}})));
    CHECK_FALSE(none.has_value());
}

TEST_CASE("alt_odd_decompose pinned examples") {
    // g = (1,2,3,4,5): x = (1,5)(2,4), y = xg with y^2 = 1
    Perm g = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
    auto [x, y] = alt_odd_decompose(g);
    CHECK(x * y == g);
    CHECK(x == Perm::from_cycles(5, {{1, 5}, {2, 4}}));
    CHECK(y.order() <= 2);

    // g = (1,2,3)(4,5,6,7,8): the n1 = 3 routing with an order-4 second part
    Perm g2 = Perm::from_cycles(8, {{1, 2, 3}, {4, 5, 6, 7, 8}});
    auto [x2, y2] = alt_odd_decompose(g2);
    CHECK(x2 * y2 == g2);
    CHECK(x2.is_even());
    CHECK(y2.is_even());
    uint64_t ox = x2.order(), oy = y2.order();
    CHECK((ox & (ox - 1)) == 0);
    CHECK((oy & (oy - 1)) == 0);

    // a 7-cycle is inverted by (1,7)(2,6)(3,5)
    Perm g7 = Perm::from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}});
    auto [x7, y7] = alt_odd_decompose(g7);
    CHECK(x7 * y7 == g7);

    // every element of A5..A8 decomposes (Lemma-7.2-style sweep)
    for (int n = 5; n <= 8; ++n) {
        auto an = build_bundle("A" + std::to_string(n), 10);
        for (int c = 0; c < an.G().num_classes(); ++c) {
            Perm rep = an.G().element(an.G().class_rep(c)).perm();
            auto [xx, yy] = alt_odd_decompose(rep);
            CHECK(xx * yy == rep);
        }
    }
}

TEST_CASE("proportion_divisible") {
    auto a5 = build_bundle("A5", 11);
    CHECK(proportion_divisible(a5.G(), {2, 5}) == Rat(39, 60));
    CHECK(proportion_divisible(a5.G(), {}) == Rat(0));
    CHECK(proportion_divisible(a5.G(), {2, 3, 5}) == Rat(59, 60));
}

TEST_CASE("tail_bound contract") {
    auto a5 = build_bundle("A5", 12);
    const auto& t = a5.gt->table;
    int c5 = -1, c2 = -1;
    for (int j = 0; j < t.k; ++j) {
        if (t.orders[j] == 5 && c5 < 0) c5 = j;
        if (t.orders[j] == 2) c2 = j;
    }
    auto tb = tail_bound(a5.E(), 6, c5, c5, c2);
    CHECK(tb.actual <= 1e-9);  // D above the largest degree
    auto tb2 = tail_bound(a5.E(), 4, c5, c5, c2);
    CHECK(tb2.actual <= tb2.bound);
    Rng rng(55);
    for (int trial = 0; trial < 1000; ++trial) {
        int64_t D = 1 + static_cast<int64_t>(rng.below(8));
        int a = static_cast<int>(rng.below(t.k));
        int b2 = static_cast<int>(rng.below(t.k));
        int c = static_cast<int>(rng.below(t.k));
        auto r = tail_bound(a5.E(), D, a, b2, c);
        CHECK(r.actual <= r.bound + 1e-9);
    }
}

TEST_CASE("psl2 permutation models have the right orders") {
    CHECK(build_bundle("PSL2(7)", 13).G().order() == 168);
    CHECK(build_bundle("PSL2(8)", 13).G().order() == 504);
}

TEST_CASE("table-only bundle supports xNyN") {
    auto m11 = catalog::table_bundle(std::string(WORDMAP_TESTDATA) + "/m11.ctab");
    CHECK(m11.gt->table.order == 7920);
    auto r = check_xNyN(m11.E(), 8 * 9);  // N = 72 = 2^3 * 3^2
    CHECK(r.status == Status::Surjective);
}
