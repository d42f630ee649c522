#include "kernels/kernels.hpp"

#include <cstddef>

namespace wordmap::kern {
namespace {

void matmul_scalar(const uint16_t* A, const uint16_t* B, uint16_t* C, int mr,
                   int kc, int nc, uint16_t mod) {
    for (int i = 0; i < mr; ++i) {
        const uint16_t* a = A + static_cast<size_t>(i) * kc;
        uint16_t* c = C + static_cast<size_t>(i) * nc;
        for (int j = 0; j < nc; ++j) {
            uint32_t acc = 0;
            for (int k = 0; k < kc; ++k)
                acc += static_cast<uint32_t>(a[k]) * B[static_cast<size_t>(k) * nc + j];
            c[j] = static_cast<uint16_t>(acc % mod);
        }
    }
}

void matvec_scalar(const uint16_t* A, const uint16_t* x, uint16_t* y, int mr,
                   int kc, uint16_t mod) {
    for (int i = 0; i < mr; ++i) {
        const uint16_t* a = A + static_cast<size_t>(i) * kc;
        uint32_t acc = 0;
        for (int k = 0; k < kc; ++k) acc += static_cast<uint32_t>(a[k]) * x[k];
        y[i] = static_cast<uint16_t>(acc % mod);
    }
}

void row_addmul_scalar(uint16_t* y, const uint16_t* x, uint16_t a, int n,
                       uint16_t mod) {
    for (int i = 0; i < n; ++i)
        y[i] = static_cast<uint16_t>((y[i] + static_cast<uint32_t>(a) * x[i]) % mod);
}

uint16_t dot_scalar(const uint16_t* x, const uint16_t* y, int n, uint16_t mod) {
    uint32_t acc = 0;
    int i = 0;
    for (; i < n; ++i) {
        acc += static_cast<uint32_t>(x[i]) * y[i];
        if ((i & 511) == 511) acc %= mod;
    }
    return static_cast<uint16_t>(acc % mod);
}

void perm_compose_scalar(const uint8_t* f, const uint8_t* g, uint8_t* r, int n) {
    for (int i = 0; i < n; ++i) r[i] = f[g[i]];
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar",        matmul_scalar, matvec_scalar,
                           row_addmul_scalar, dot_scalar,   perm_compose_scalar};
    return b;
}

}  // namespace wordmap::kern
