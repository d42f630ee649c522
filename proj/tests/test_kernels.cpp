#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "base/util.hpp"
#include "kernels/kernels.hpp"

using namespace wordmap;

namespace {

std::vector<uint16_t> random_vec(Rng& rng, size_t n, uint16_t mod) {
    std::vector<uint16_t> v(n);
    for (auto& x : v) x = static_cast<uint16_t>(rng.below(mod));
    return v;
}

}  // namespace

TEST_CASE("scalar and simd kernels agree on random inputs") {
    const auto& s = kern::scalar_backend();
#if defined(WORDMAP_HAVE_AVX2_BUILD)
    if (!__builtin_cpu_supports("avx2")) return;
    const auto& v = kern::avx2_backend();
#else
    const auto& v = kern::scalar_backend();
#endif
    Rng rng(20240901);
    const uint16_t mods[] = {2, 3, 5, 7, 17, 31, 241, 337, 541, 661, 1093, 2039};
    for (uint16_t mod : mods) {
        for (int trial = 0; trial < 12; ++trial) {
            int mr = 1 + static_cast<int>(rng.below(24));
            int kc = 1 + static_cast<int>(rng.below(40));
            int nc = 1 + static_cast<int>(rng.below(24));
            auto A = random_vec(rng, static_cast<size_t>(mr) * kc, mod);
            auto B = random_vec(rng, static_cast<size_t>(kc) * nc, mod);
            std::vector<uint16_t> C1(static_cast<size_t>(mr) * nc), C2 = C1;
            s.matmul_mod(A.data(), B.data(), C1.data(), mr, kc, nc, mod);
            v.matmul_mod(A.data(), B.data(), C2.data(), mr, kc, nc, mod);
            CHECK(C1 == C2);

            auto x = random_vec(rng, static_cast<size_t>(kc), mod);
            std::vector<uint16_t> y1(mr), y2(mr);
            s.matvec_mod(A.data(), x.data(), y1.data(), mr, kc, mod);
            v.matvec_mod(A.data(), x.data(), y2.data(), mr, kc, mod);
            CHECK(y1 == y2);

            auto r1 = random_vec(rng, static_cast<size_t>(kc), mod);
            auto r2 = r1;
            uint16_t a = static_cast<uint16_t>(rng.below(mod));
            s.row_addmul_mod(r1.data(), x.data(), a, kc, mod);
            v.row_addmul_mod(r2.data(), x.data(), a, kc, mod);
            CHECK(r1 == r2);

            CHECK(s.dot_mod(A.data(), A.data(), kc, mod) == v.dot_mod(A.data(), A.data(), kc, mod));
        }
    }
}

TEST_CASE("permutation composition applies the right factor first") {
    const auto& s = kern::scalar_backend();
#if defined(WORDMAP_HAVE_AVX2_BUILD)
    const auto& v = __builtin_cpu_supports("avx2") ? kern::avx2_backend() : kern::scalar_backend();
#else
    const auto& v = kern::scalar_backend();
#endif
    Rng rng(7);
    for (int n : {1, 2, 5, 8, 14, 16, 17, 31, 100}) {
        std::vector<uint8_t> f(n), g(n), r1(n), r2(n);
        for (int i = 0; i < n; ++i) f[i] = static_cast<uint8_t>(i);
        for (int i = 0; i < n; ++i) g[i] = static_cast<uint8_t>(i);
        // random shuffles
        for (int i = n - 1; i > 0; --i) {
            std::swap(f[i], f[rng.below(static_cast<uint64_t>(i) + 1)]);
            std::swap(g[i], g[rng.below(static_cast<uint64_t>(i) + 1)]);
        }
        s.perm_compose(f.data(), g.data(), r1.data(), n);
        v.perm_compose(f.data(), g.data(), r2.data(), n);
        CHECK(r1 == r2);
        for (int i = 0; i < n; ++i) CHECK(r1[i] == f[g[i]]);
    }
}

TEST_CASE("backend override") {
    CHECK(kern::set_backend("scalar"));
    CHECK(std::string(kern::backend().name) == "scalar");
#if defined(WORDMAP_HAVE_AVX2_BUILD)
    if (__builtin_cpu_supports("avx2")) {
        CHECK(kern::set_backend("avx2"));
        CHECK(std::string(kern::backend().name) == "avx2");
    }
#endif
    CHECK_FALSE(kern::set_backend("no-such-backend"));
}
