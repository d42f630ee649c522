#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "chartab/table.hpp"

using namespace wordmap;
using namespace wordmap::chartab;
using namespace wordmap::groups;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

EnumeratedGroup make_a5() {
    std::vector<Element> gens = {Element(Perm::from_cycles(5, {{1, 2, 3}})),
                                 Element(Perm::from_cycles(5, {{1, 2, 3, 4, 5}}))};
    return enumerate_group(gens, 100000, "A5");
}

std::multiset<int64_t> degrees(const CharacterTable& t) {
    std::multiset<int64_t> d;
    for (int i = 0; i < t.k; ++i) d.insert(t.degree(i));
    return d;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic basics") {
    const CycContext* ctx = cyc_context(12);
    Cyc z = Cyc::root_of_unity(ctx, 1);
    Cyc acc = Cyc::integer(ctx, 1);
    for (int i = 0; i < 12; ++i) acc = acc * z;
    CHECK(acc == Cyc::integer(ctx, 1));
    // sum of all primitive 12th roots = mu(12) = ... Moebius: mu(12)=0? 12=2^2*3 -> 0
    Cyc s(ctx);
    for (int j : {1, 5, 7, 11}) s = s + Cyc::root_of_unity(ctx, j);
    CHECK(s == Cyc::integer(ctx, 0));
    // conjugation is an involution
    Cyc v = Cyc::root_of_unity(ctx, 5) + Cyc::integer(ctx, 3).scaled(Rat(1, 2));
    CHECK(v.conj().conj() == v);
    CHECK(parse_cyc(ctx, v.str()) == v);
    // zeta_3 via conductor 12
    Cyc z3 = Cyc::root_of_unity(ctx, 4);
    CHECK((z3 * z3 + z3 + Cyc::integer(ctx, 1)) == Cyc(ctx));
}

TEST_CASE("cyclotomic literal round trips") {
    const CycContext* ctx = cyc_context(8);
    for (const char* lit : {"0", "3", "-1/2", "1+-1*E^3", "1/2+1/2*E^1+-3*E^5"}) {
        Cyc c = parse_cyc(ctx, lit);
        CHECK(parse_cyc(ctx, c.str()) == c);
    }
}

TEST_CASE("dixon: cyclic C3 gives the Fourier table") {
    std::vector<Element> gens = {Element(Perm::from_cycles(3, {{1, 2, 3}}))};
    auto g = enumerate_group(gens, 100, "C3");
    auto dt = dixon_schneider(g, 1);
    CHECK(dt.table.k == 3);
    CHECK(degrees(dt.table) == std::multiset<int64_t>{1, 1, 1});
    const CycContext* ctx = dt.table.ctx();
    // every nontrivial row has a primitive cube root somewhere
    int prim = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (dt.table.values[i][j] == Cyc::root_of_unity(ctx, 1)) ++prim;
    CHECK(prim == 2);
}

TEST_CASE("dixon: A5 degrees and validation") {
    auto g = make_a5();
    auto dt = dixon_schneider(g, 7);
    CHECK(degrees(dt.table) == std::multiset<int64_t>{1, 3, 3, 4, 5});
    CHECK_FALSE(check_orthogonality(dt.table).has_value());
    // determinism
    auto dt2 = dixon_schneider(g, 7);
    CHECK(write_table(dt.table) == write_table(dt2.table));
}

TEST_CASE("dixon: S3 degrees {1,1,2}") {
    std::vector<Element> gens = {Element(Perm::from_cycles(3, {{1, 2}})),
                                 Element(Perm::from_cycles(3, {{1, 2, 3}}))};
    auto g = enumerate_group(gens, 100, "S3");
    auto dt = dixon_schneider(g, 3);
    CHECK(degrees(dt.table) == std::multiset<int64_t>{1, 1, 2});
}

TEST_CASE("dixon: SL2(3) has 7 characters") {
    const ff::SmallField* f3 = ff::small_field(3, 1);
    std::vector<Element> gens = {Element(ff::Mat::from_codes(f3, 2, 2, {1, 1, 0, 1})),
                                 Element(ff::Mat::from_codes(f3, 2, 2, {0, 2, 1, 0}))};
    auto g = enumerate_group(gens, 1000, "SL2(3)");
    auto dt = dixon_schneider(g, 2);
    CHECK(dt.table.k == 7);
    CHECK(degrees(dt.table) == std::multiset<int64_t>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("table round trip and fault injection") {
    auto g = make_a5();
    auto dt = dixon_schneider(g, 9);
    std::string text = write_table(dt.table);
    CharacterTable back = parse_table(text);
    CHECK(write_table(back) == text);

    // perturb one value by +1: orthogonality must flag it
    CharacterTable bad = dt.table;
    bad.values[2][3] = bad.values[2][3] + Cyc::integer(bad.ctx(), 1);
    auto viol = check_orthogonality(bad);
    REQUIRE(viol.has_value());

    // drop a powermap line: parse must fail with "powermap incomplete"
    std::string broken;
    {
        std::istringstream in(text);
        std::ostringstream out;
        std::string line;
        bool dropped = false;
        while (std::getline(in, line)) {
            if (!dropped && line.rfind("powermap 5", 0) == 0) {
                dropped = true;
                continue;
            }
            out << line << "\n";
        }
        broken = out.str();
    }
    CHECK_THROWS_WITH_AS(parse_table(broken), doctest::Contains("powermap incomplete"), std::runtime_error);
}

TEST_CASE("ingested M11 fixture passes certification") {
    CharacterTable m11 = parse_table(read_file(std::string(WORDMAP_TESTDATA) + "/m11.ctab"));
    CHECK(m11.order == 7920);
    CHECK(m11.k == 10);
    CHECK_FALSE(check_orthogonality(m11).has_value());
    CHECK_FALSE(check_powermap_consistency(m11).has_value());
    CHECK(degrees(m11) == std::multiset<int64_t>{1, 10, 10, 10, 11, 16, 16, 44, 45, 55});
    // Galois-orbit nonvanishing bound on every column
    for (int j = 0; j < m11.k; ++j) CHECK(m11.nonvanishing_profile(j) <= m11.centralizer_order(j));
}

TEST_CASE("hand-written C4 fixture") {
    CharacterTable c4 = parse_table(read_file(std::string(WORDMAP_TESTDATA) + "/c4.ctab"));
    CHECK(degrees(c4) == std::multiset<int64_t>{1, 1, 1, 1});
}

TEST_CASE("nonvanishing profile: identity column counts everything") {
    auto g = make_a5();
    auto dt = dixon_schneider(g, 5);
    CHECK(dt.table.nonvanishing_profile(0) == dt.table.k);
    // column of a 5-element: at most |C| = 5 characters are nonzero
    for (int j = 0; j < dt.table.k; ++j) {
        if (dt.table.orders[j] == 5) CHECK(dt.table.nonvanishing_profile(j) <= 5);
    }
}

TEST_CASE("power maps agree with the group and compose for composite N") {
    auto g = make_a5();
    auto dt = dixon_schneider(g, 13);
    // table class_power vs direct group powering
    for (int c = 0; c < g.num_classes(); ++c) {
        for (uint64_t N : {2ull, 3ull, 5ull, 6ull, 12ull, 30ull, 7ull, 49ull}) {
            int via_group = dt.col_of_class[g.class_power(c, N)];
            int via_table = dt.table.class_power(dt.col_of_class[c], N);
            CHECK(via_group == via_table);
        }
    }
}
