#pragma once
// Runtime-dispatched arithmetic kernels. Every entry point has a scalar
// reference implementation and, on x86-64 with AVX2, a vector variant. The
// two are equivalence-tested; selection happens once at startup and can be
// forced with the WORDMAP_KERNELS environment variable ("scalar" / "avx2").
//
// All modular kernels require mod < 2048 so that products fit in 32 bits and
// row sums of length <= 512 fit without intermediate reduction.

#include <cstdint>

namespace wordmap::kern {

inline constexpr uint32_t kMaxModulus = 2048;

struct Backend {
    const char* name;

    // C = A*B mod m. A is mr x kc, B is kc x nc, C is mr x nc, row-major.
    void (*matmul_mod)(const uint16_t* A, const uint16_t* B, uint16_t* C,
                       int mr, int kc, int nc, uint16_t mod);

    // y = A*x mod m. A is mr x kc.
    void (*matvec_mod)(const uint16_t* A, const uint16_t* x, uint16_t* y,
                       int mr, int kc, uint16_t mod);

    // y[i] = (y[i] + a*x[i]) mod m.
    void (*row_addmul_mod)(uint16_t* y, const uint16_t* x, uint16_t a, int n,
                           uint16_t mod);

    // sum_i x[i]*y[i] mod m.
    uint16_t (*dot_mod)(const uint16_t* x, const uint16_t* y, int n,
                        uint16_t mod);

    // r[i] = f[g[i]] ("apply right factor first"), n <= 255.
    void (*perm_compose)(const uint8_t* f, const uint8_t* g, uint8_t* r,
                         int n);
};

const Backend& scalar_backend();
#if defined(WORDMAP_HAVE_AVX2_BUILD)
const Backend& avx2_backend();
#endif

// Active backend (runtime CPU detection + env override).
const Backend& backend();

// Force a backend by name; returns false if unavailable. Test hook.
bool set_backend(const char* name);

}  // namespace wordmap::kern
