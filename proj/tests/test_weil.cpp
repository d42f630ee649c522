#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog/catalog.hpp"
#include "weil/weil.hpp"

using namespace wordmap;
using namespace wordmap::weil;
using catalog::build_bundle;
using chartab::Cyc;

namespace {

// multiset match: every formula-generated value vector equals some table row
void check_rows_match(const catalog::GroupBundle& b, int eps) {
    const auto& t = b.gt->table;
    auto params = weil_params(b.spec->n, b.spec->q, eps, t.ctx());
    for (int64_t i = 0; i < params.index_count(); ++i) {
        for (int64_t j = 0; j < params.index_count(); ++j) {
            std::vector<Cyc> vec;
            for (int col = 0; col < t.k; ++col) {
                ff::Mat rep = b.G().element(b.gt->rep_id_of_col[col]).mat();
                vec.push_back(weil_value(params, i, j, rep));
            }
            bool found = false;
            for (int r = 0; r < t.k && !found; ++r) {
                bool eq = true;
                for (int col = 0; col < t.k && eq; ++col)
                    if (!(t.values[r][col] == vec[col])) eq = false;
                found = eq;
            }
            CAPTURE(i);
            CAPTURE(j);
            CHECK(found);
        }
    }
}

}  // namespace

TEST_CASE("pinned GL/GU Weil values at the identity") {
    auto gl33 = build_bundle("GL3(3)", 17);
    auto params = weil_params(3, 3, +1, gl33.gt->table.ctx());
    ff::Mat id3 = ff::Mat::identity(gl33.spec->mf, 3);
    CHECK(weil_value(params, 0, 0, id3) == Cyc::integer(params.ctx, 12));
    CHECK(weil_value(params, 1, 0, id3) == Cyc::integer(params.ctx, 13));

    auto gu33 = build_bundle("GU3(3)", 17);
    auto pu = weil_params(3, 3, -1, gu33.gt->table.ctx());
    ff::Mat idu = ff::Mat::identity(gu33.spec->mf, 3);
    CHECK(weil_value(pu, 0, 0, idu) == Cyc::integer(pu.ctx, 6));
    CHECK(weil_value(pu, 1, 0, idu) == Cyc::integer(pu.ctx, 7));
}

TEST_CASE("degree identities for n <= 5, q <= 7") {
    for (int64_t q : {3, 4, 5, 7}) {
        for (int n = 1; n <= 5; ++n) {
            for (int eps : {+1, -1}) {
                int64_t t = eps == +1 ? q - 1 : q + 1;
                const chartab::CycContext* ctx = chartab::cyc_context(t);
                auto params = weil_params(n, q, eps, ctx);
                ff::Mat id = ff::Mat::identity(params.spec.mf, n);
                int64_t qn = 1;
                for (int i = 0; i < n; ++i) qn *= q;
                for (int64_t i2 = 0; i2 < std::min<int64_t>(t, 4); ++i2) {
                    Cyc v = weil_value(params, i2, 0, id);
                    int64_t expect;
                    if (eps == +1)
                        expect = (qn - 1) / (q - 1) - (i2 == 0 ? 1 : 0);
                    else {
                        int sign = n % 2 == 0 ? 1 : -1;
                        expect = (qn - sign) / (q + 1) + (i2 == 0 ? sign : 0);
                    }
                    CAPTURE(q);
                    CAPTURE(n);
                    CAPTURE(eps);
                    CHECK(v == Cyc::integer(ctx, expect));
                }
            }
        }
    }
}

TEST_CASE("GL2(3) Weil rows appear in the Dixon table") {
    auto b = build_bundle("GL2(3)", 19);
    check_rows_match(b, +1);
}

TEST_CASE("GU2(3) Weil rows appear in the Dixon table") {
    auto b = build_bundle("GU2(3)", 19);
    check_rows_match(b, -1);
}

TEST_CASE("sp weil profile degrees match the Sp4(3) table") {
    auto profile = sp_weil_profile(2, 3);
    CHECK(profile.degrees == std::vector<int64_t>{4, 4, 5, 5});
    auto b = build_bundle("Sp4(3)", 19);
    const auto& t = b.gt->table;
    std::multiset<int64_t> degs;
    for (int i = 0; i < t.k; ++i) degs.insert(t.degree(i));
    for (int64_t d : profile.degrees) CHECK(degs.count(d) >= 2);
    for (int i = 0; i < t.k; ++i) {
        int64_t d = t.degree(i);
        if (d != 4 && d != 5) continue;
        for (int col = 0; col < t.k; ++col) {
            ff::Mat rep = b.G().element(b.gt->rep_id_of_col[col]).mat();
            double bound = profile.bound(*b.spec, rep);
            CHECK(t.values[i][col].abs_upper_bound() <= bound + 1e-6);
        }
    }
    for (int col = 0; col < t.k; ++col) {
        ff::Mat rep = b.G().element(b.gt->rep_id_of_col[col]).mat();
        if (classical::eigenspace_dim(rep, b.spec->mf->F->one()) == 0 &&
            classical::eigenspace_dim(rep, -b.spec->mf->F->one()) == 0)
            CHECK(profile.bound(*b.spec, rep) == 1.0);
    }
    CHECK_THROWS(sp_weil_profile(2, 4));
}
