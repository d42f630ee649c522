#include "weil/weil.hpp"

#include <cmath>

namespace wordmap::weil {

using classical::ClassicalGroupSpec;
using classical::Family;
using ff::FieldElement;
using ff::Mat;

WeilParams weil_params(int n, int64_t q, int eps, const CycContext* ctx) {
    WeilParams p{classical::build_group(eps == +1 ? Family::GL : Family::GU, n, q), ctx,
                 FieldElement(), 0};
    p.root_order = eps == +1 ? q - 1 : q + 1;
    if (ctx->e % p.root_order != 0)
        throw std::domain_error("weil_params: conductor must be divisible by q - eps");
    const ff::Field& F = p.spec.mf->F;
    p.root = F->gen().pow((F->size - 1) / static_cast<uint64_t>(p.root_order));
    return p;
}

std::vector<int> mu_eigenspace_profile(const WeilParams& p, const Mat& x) {
    std::vector<int> e(static_cast<size_t>(p.root_order));
    FieldElement cur = p.spec.mf->F->one();
    for (int64_t l = 0; l < p.root_order; ++l) {
        e[static_cast<size_t>(l)] = classical::eigenspace_dim(x, cur);
        cur = cur * p.root;
    }
    return e;
}

Cyc weil_value(const WeilParams& p, int64_t i, int64_t j, const Mat& x) {
    const int64_t t = p.root_order;
    if (i < 0 || i >= t || j < 0 || j >= t) throw std::domain_error("weil_value: index out of range");
    const CycContext* ctx = p.ctx;
    const int64_t step = ctx->e / t;  // complex root: zeta_e^{step}
    auto mr = classical::membership(p.spec, x);
    if (!mr.member) throw std::domain_error("weil_value: not a member of " + p.spec.name());

    auto prof = mu_eigenspace_profile(p, x);
    int64_t qv = p.spec.q;
    Cyc sum(ctx);
    for (int64_t l = 0; l < t; ++l) {
        // (eps q)^{e(x, root^l)}
        int64_t qe = 1;
        for (int e2 = 0; e2 < prof[static_cast<size_t>(l)]; ++e2)
            qe = checked_mul(qe, p.spec.eps == +1 ? qv : -qv);
        Cyc term = Cyc::root_of_unity(ctx, i * l % ctx->e * step % ctx->e);
        sum = sum + term.scaled(Rat(qe));
    }
    Cyc value(ctx);
    if (p.spec.eps == +1) {
        value = sum.scaled(Rat(1, qv - 1));
        if (i == 0) value = value - Cyc::integer(ctx, 2);
    } else {
        int sign = (p.spec.n % 2 == 0) ? 1 : -1;
        value = sum.scaled(Rat(sign, qv + 1));
    }
    // linear twist lambda_j(x) = (complex root)^{j * dlog_root(det x)}
    if (j != 0) {
        FieldElement det = p.spec.mf->F->from_code(x.det());
        // det x lies in mu_{q-eps}; its discrete log base root
        uint64_t dl = 0;
        FieldElement cur = p.spec.mf->F->one();
        bool found = false;
        for (int64_t l = 0; l < t; ++l) {
            if (cur == det) {
                dl = static_cast<uint64_t>(l);
                found = true;
                break;
            }
            cur = cur * p.root;
        }
        if (!found) throw std::logic_error("weil_value: determinant outside mu_{q-eps}");
        value = value * Cyc::root_of_unity(ctx, static_cast<int64_t>(j * dl % static_cast<uint64_t>(t)) * step);
    }
    return value;
}

double SpWeilProfile::bound(const ClassicalGroupSpec& spec, const Mat& g) const {
    auto B = [&](const Mat& h) {
        int d = classical::eigenspace_dim(h, spec.mf->F->one());
        return std::pow(static_cast<double>(spec.q), d / 2.0);
    };
    Mat zg = g.scaled(spec.mf->neg(1));
    return (B(g) + B(zg)) / 2.0;
}

SpWeilProfile sp_weil_profile(int n, int64_t q) {
    if (q % 2 == 0) throw std::domain_error("sp_weil_profile: q must be odd");
    SpWeilProfile p;
    int64_t qn = 1;
    for (int i = 0; i < n; ++i) qn = checked_mul(qn, q);
    p.degrees = {(qn - 1) / 2, (qn - 1) / 2, (qn + 1) / 2, (qn + 1) / 2};
    return p;
}

}  // namespace wordmap::weil
