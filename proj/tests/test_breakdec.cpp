#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "breakdec/breakdec.hpp"
#include "groups/group.hpp"

using namespace wordmap;
using namespace wordmap::breakdec;
using namespace wordmap::classical;
using ff::Mat;

namespace {

Mat jordan_block(const ff::SmallField* f, int n, uint16_t eig) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = eig;
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    return m;
}

}  // namespace

TEST_CASE("GL breakability pinned examples") {
    auto gl42 = build_group(Family::GL, 4, 2);
    // elementary divisor degrees {1, 3}: breakable as 1 + 3
    Mat m(gl42.mf, 4, 4);
    m.at(0, 0) = 1;  // J_1 at eigenvalue 1
    // companion of an irreducible cubic x^3 + x + 1
    m.at(2, 1) = 1;
    m.at(3, 2) = 1;
    m.at(1, 3) = 1;
    m.at(2, 3) = 1;
    REQUIRE(membership(gl42, m).member);
    auto br = is_breakable(gl42, m);
    CHECK(br.breakable);

    // single J_4: unbreakable
    Mat j4 = jordan_block(gl42.mf, 4, 1);
    CHECK_FALSE(is_breakable(gl42, j4).breakable);

    // Singer element of order 5: one irreducible degree-4 divisor, unbreakable
    Mat singer(gl42.mf, 4, 4);
    for (int i = 0; i < 3; ++i) singer.at(i + 1, i) = 1;
    for (int i = 0; i < 4; ++i) singer.at(i, 3) = 1;
    CHECK_FALSE(is_breakable(gl42, singer).breakable);
}

TEST_CASE("form module decomposition labels on Sp4(3)") {
    auto sp43 = build_group(Family::Sp, 4, 3);
    // regular unipotent: a symplectic J_4; find one by squaring a random
    // element until unipotent of the right type appears, or build directly:
    // V(4) must appear for some unipotent; scan the enumerated classes.
    auto g = groups::enumerate_group(sp43.generator_elements(), 60000, "Sp4(3)");
    bool saw_v4 = false, saw_w = false;
    for (int c = 0; c < g.num_classes(); ++c) {
        Mat rep = g.element(g.class_rep(c)).mat();
        auto dec = form_module_decomposition(sp43, rep);
        int total = 0;
        for (auto& s : dec.summands) total += s.dim;
        CHECK(total == 4);
        if (dec.summands.size() == 1 && dec.summands[0].label == "V(4)") saw_v4 = true;
        if (dec.summands.size() == 1 && dec.summands[0].label == "W(2)") saw_w = true;
        (void)saw_w;
    }
    CHECK(saw_v4);  // the class of the regular unipotent
}

TEST_CASE("Sp4(3) has no breakable elements under the literal definition") {
    // Sp_2(3) is not perfect, so neither clause can fire on a 2+2 split.
    auto sp43 = build_group(Family::Sp, 4, 3);
    groups::RandomWalker w(sp43.generator_elements(), 21, 50);
    for (int t = 0; t < 200; ++t) {
        Mat x = w.next().mat();
        CHECK_FALSE(is_breakable(sp43, x).breakable);
    }
}

TEST_CASE("Sp8(5) breakability finds genuine splits") {
    // over q = 5 the factors Sp_2(5), Sp_6(5) are perfect, so split elements
    // must be detected
    auto sp85 = build_group(Family::Sp, 8, 5);
    Mat id = Mat::identity(sp85.mf, 8);
    auto br = is_breakable(sp85, id);
    CHECK(br.breakable);
    groups::RandomWalker w(sp85.generator_elements(), 5, 50);
    int breakable_count = 0;
    for (int t = 0; t < 40; ++t) {
        Mat x = w.next().mat();
        auto r = is_breakable(sp85, x);
        if (r.breakable) ++breakable_count;
        // class function: conjugates agree
        Mat h = w.next().mat();
        CHECK(is_breakable(sp85, h * x * h.inverse()).breakable == r.breakable);
    }
    CHECK(breakable_count > 0);
}

TEST_CASE("decomposition reassembly is conjugate to the input (spot check)") {
    auto sp43 = build_group(Family::Sp, 4, 3);
    auto g = groups::enumerate_group(sp43.generator_elements(), 60000, "Sp4(3)");
    groups::RandomWalker w(sp43.generator_elements(), 33, 50);
    for (int t = 0; t < 25; ++t) {
        Mat x = w.next().mat();
        auto dec = form_module_decomposition(sp43, x);
        // assemble restricted matrices over the direct-sum gram
        std::vector<Mat> blocks;
        FormSpec sum;
        sum.kind = sp43.form.kind;
        sum.field = sp43.mf;
        sum.gram = Mat(sp43.mf, 4, 4);
        int off = 0;
        for (auto& s : dec.summands) {
            blocks.push_back(restrict_to(x, s.basis));
            Mat gr = sp43.form.restrict_gram(s.basis);
            for (int i = 0; i < s.dim; ++i)
                for (int j = 0; j < s.dim; ++j) sum.gram.at(off + i, off + j) = gr.at(i, j);
            off += s.dim;
        }
        Mat direct = ff::block_diag(blocks);
        Mat p = change_of_basis(sum, sp43.form);
        Mat reassembled = p * direct * p.inverse();
        REQUIRE(membership(sp43, reassembled).member);
        CHECK(g.class_of(groups::Element(reassembled)) == g.class_of(groups::Element(x)));
    }
}

TEST_CASE("GU3(3) decomposition invariants (spot check)") {
    auto gu33 = build_group(Family::GU, 3, 3);
    groups::RandomWalker w(gu33.generator_elements(), 44, 50);
    for (int t = 0; t < 50; ++t) {
        Mat x = w.next().mat();
        auto dec = form_module_decomposition(gu33, x);
        int total = 0;
        for (auto& s : dec.summands) {
            total += s.dim;
            Mat gr = gu33.form.restrict_gram(s.basis);
            CHECK(gr.rank() == gr.rows());
        }
        CHECK(total == 3);
        (void)is_breakable(gu33, x);
    }
}

TEST_CASE("lemma 3.6 sampling on GL7(2) finds no violations") {
    auto gl72 = build_group(Family::GL, 7, 2);
    auto rep = sample_bound_check(gl72, "3.6", 400, 2024);
    CHECK(rep.ok());
    CHECK(rep.unbreakable_hits > 0);
}

TEST_CASE("lemma 3.8 sampling on GL7(3) finds no violations") {
    auto gl73 = build_group(Family::GL, 7, 3);
    auto rep = sample_bound_check(gl73, "3.8", 150, 7);
    CHECK(rep.ok());
}

TEST_CASE("lemma 3.4 sampling on Sp8(3) finds no violations") {
    auto sp83 = build_group(Family::Sp, 8, 3);
    auto rep = sample_bound_check(sp83, "3.4", 150, 99);
    CHECK(rep.ok());
    CHECK(rep.unbreakable_hits > 0);
}

TEST_CASE("eq (3.1) sampling on GL4(5)") {
    auto gl45 = build_group(Family::GL, 4, 5);
    auto rep = sample_bound_check(gl45, "eq-3.1", 200, 5);
    CHECK(rep.ok());
}

TEST_CASE("hypothesis ranges are enforced") {
    CHECK_THROWS(sample_bound_check(build_group(Family::GL, 5, 2), "3.6", 10, 1));
    CHECK_THROWS(sample_bound_check(build_group(Family::Sp, 4, 3), "3.2", 10, 1));
    CHECK_THROWS(sample_bound_check(build_group(Family::GL, 7, 2), "bogus", 10, 1));
}
