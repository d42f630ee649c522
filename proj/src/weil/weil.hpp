#pragma once
// Closed-form Weil character values for GL^eps_n(q) from the eigenvalue-
// counting formulas, plus the symplectic Weil degree/magnitude profile.
// Values are exact cyclotomics at a chosen conductor (divisible by q - eps).

#include "chartab/cyclotomic.hpp"
#include "classical/eigen.hpp"

namespace wordmap::weil {

using chartab::Cyc;
using chartab::CycContext;

struct WeilParams {
    classical::ClassicalGroupSpec spec;  // GL or GU
    const CycContext* ctx;               // conductor divisible by q - eps
    // delta (eps=+) or xi (eps=-): exponent-least power of the canonical
    // field generator with order q - eps; the complex counterpart is
    // zeta_e^{e/(q-eps)}.
    ff::FieldElement root;
    int64_t root_order;

    // indices 0 <= i, j <= q - 2 (eps=+) or q (eps=-)
    int64_t index_count() const { return root_order; }
};

WeilParams weil_params(int n, int64_t q, int eps, const CycContext* ctx);

// tau_{i,j}(x) (eps=+) or zeta_{i,j}(x) (eps=-): exact value.
Cyc weil_value(const WeilParams& p, int64_t i, int64_t j, const ff::Mat& x);

// e(x, root^l) for l = 0..root_order-1 (eigenspace dimensions over the
// closure); exposed for tests.
std::vector<int> mu_eigenspace_profile(const WeilParams& p, const ff::Mat& x);

struct SpWeilProfile {
    std::vector<int64_t> degrees;  // {(q^n-1)/2 x2, (q^n+1)/2 x2}
    // B(g) = q^{dim Ker(g - 1)/2}; the magnitude bound for every irreducible
    // Weil character is (B(g) + B(zg))/2 with z = -1.
    double bound(const classical::ClassicalGroupSpec& spec, const ff::Mat& g) const;
};

SpWeilProfile sp_weil_profile(int n, int64_t q);  // Sp_{2n}(q), q odd

}  // namespace wordmap::weil
