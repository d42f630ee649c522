#include "kernels/kernels.hpp"

#if defined(WORDMAP_HAVE_AVX2_BUILD)

#include <immintrin.h>

namespace wordmap::kern {
namespace {

// Widen 8 u16 lanes to u32, multiply, accumulate. mod < 2048 keeps every
// product below 2^22, so sums of length <= 512 stay below 2^31.

inline __m256i load8_u16_as_u32(const uint16_t* p) {
    return _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

void matmul_avx2(const uint16_t* A, const uint16_t* B, uint16_t* C, int mr,
                 int kc, int nc, uint16_t mod) {
    const int ncb = nc & ~7;
    for (int i = 0; i < mr; ++i) {
        const uint16_t* a = A + static_cast<size_t>(i) * kc;
        uint16_t* c = C + static_cast<size_t>(i) * nc;
        for (int j = 0; j < ncb; j += 8) {
            __m256i acc = _mm256_setzero_si256();
            for (int k = 0; k < kc; ++k) {
                __m256i av = _mm256_set1_epi32(a[k]);
                __m256i bv = load8_u16_as_u32(B + static_cast<size_t>(k) * nc + j);
                acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(av, bv));
            }
            alignas(32) uint32_t tmp[8];
            _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), acc);
            for (int t = 0; t < 8; ++t) c[j + t] = static_cast<uint16_t>(tmp[t] % mod);
        }
        for (int j = ncb; j < nc; ++j) {
            uint32_t acc = 0;
            for (int k = 0; k < kc; ++k)
                acc += static_cast<uint32_t>(a[k]) * B[static_cast<size_t>(k) * nc + j];
            c[j] = static_cast<uint16_t>(acc % mod);
        }
    }
}

void matvec_avx2(const uint16_t* A, const uint16_t* x, uint16_t* y, int mr,
                 int kc, uint16_t mod) {
    const int kb = kc & ~7;
    for (int i = 0; i < mr; ++i) {
        const uint16_t* a = A + static_cast<size_t>(i) * kc;
        __m256i acc = _mm256_setzero_si256();
        for (int k = 0; k < kb; k += 8)
            acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(load8_u16_as_u32(a + k),
                                                           load8_u16_as_u32(x + k)));
        alignas(32) uint32_t tmp[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), acc);
        uint32_t s = tmp[0] + tmp[1] + tmp[2] + tmp[3] + tmp[4] + tmp[5] + tmp[6] + tmp[7];
        for (int k = kb; k < kc; ++k) s += static_cast<uint32_t>(a[k]) * x[k];
        y[i] = static_cast<uint16_t>(s % mod);
    }
}

void row_addmul_avx2(uint16_t* y, const uint16_t* x, uint16_t a, int n,
                     uint16_t mod) {
    const int nb = n & ~7;
    const __m256i av = _mm256_set1_epi32(a);
    alignas(32) uint32_t tmp[8];
    for (int i = 0; i < nb; i += 8) {
        __m256i v = _mm256_add_epi32(load8_u16_as_u32(y + i),
                                     _mm256_mullo_epi32(av, load8_u16_as_u32(x + i)));
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), v);
        for (int t = 0; t < 8; ++t) y[i + t] = static_cast<uint16_t>(tmp[t] % mod);
    }
    for (int i = nb; i < n; ++i)
        y[i] = static_cast<uint16_t>((y[i] + static_cast<uint32_t>(a) * x[i]) % mod);
}

uint16_t dot_avx2(const uint16_t* x, const uint16_t* y, int n, uint16_t mod) {
    uint64_t total = 0;
    int i = 0;
    while (i < n) {
        int block = n - i;
        if (block > 512) block = 512;
        const int bb = block & ~7;
        __m256i acc = _mm256_setzero_si256();
        for (int k = 0; k < bb; k += 8)
            acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(load8_u16_as_u32(x + i + k),
                                                           load8_u16_as_u32(y + i + k)));
        alignas(32) uint32_t tmp[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), acc);
        uint32_t s = tmp[0] + tmp[1] + tmp[2] + tmp[3] + tmp[4] + tmp[5] + tmp[6] + tmp[7];
        for (int k = bb; k < block; ++k)
            s += static_cast<uint32_t>(x[i + k]) * y[i + k];
        total += s % mod;
        i += block;
    }
    return static_cast<uint16_t>(total % mod);
}

void perm_compose_avx2(const uint8_t* f, const uint8_t* g, uint8_t* r, int n) {
    if (n <= 16) {
        // pshufb computes exactly r[i] = f[g[i]] for byte tables.
        alignas(16) uint8_t fb[16] = {0}, gb[16] = {0}, rb[16];
        for (int i = 0; i < n; ++i) fb[i] = f[i];
        for (int i = 0; i < n; ++i) gb[i] = g[i];
        __m128i fv = _mm_load_si128(reinterpret_cast<const __m128i*>(fb));
        __m128i gv = _mm_load_si128(reinterpret_cast<const __m128i*>(gb));
        _mm_store_si128(reinterpret_cast<__m128i*>(rb), _mm_shuffle_epi8(fv, gv));
        for (int i = 0; i < n; ++i) r[i] = rb[i];
        return;
    }
    for (int i = 0; i < n; ++i) r[i] = f[g[i]];
}

}  // namespace

const Backend& avx2_backend() {
    static const Backend b{"avx2",          matmul_avx2, matvec_avx2,
                           row_addmul_avx2, dot_avx2,    perm_compose_avx2};
    return b;
}

}  // namespace wordmap::kern

#endif  // WORDMAP_HAVE_AVX2_BUILD
