#include <sstream>

#include "breakdec/breakdec.hpp"

namespace wordmap::breakdec {

using classical::FormKind;
using classical::FormSpec;
using ff::Mat;

bool perfect_sp(int dim, int64_t q) {
    if (dim == 0) return true;
    if (dim == 2) return q >= 4;
    if (dim == 4) return q != 2;
    return true;
}

bool perfect_omega(int dim, int64_t q, int eps) {
    if (dim <= 1) return true;  // trivial group
    if (dim == 2) {
        // cyclic of order (q - eps) / gcd(2, q - 1)
        int64_t ord = (q - eps) / (q % 2 == 0 ? 1 : 2);
        return ord <= 1;
    }
    if (dim == 3) return q >= 4;           // Omega_3(q) = PSL_2(q)
    if (dim == 4 && eps == +1) return q >= 4;  // SL_2(q) central product
    if (dim == 4 && eps == -1) return true;    // PSL_2(q^2)
    return true;
}

namespace {

// type of the form restricted to a summand union (orthogonal families)
int restricted_type(const FormSpec& form, const std::vector<std::vector<uint16_t>>& rows) {
    if (rows.size() % 2) return 0;  // odd dimension: no type
    FormSpec sub;
    sub.kind = form.kind;
    sub.field = form.field;
    sub.frob_steps = form.frob_steps;
    sub.gram = form.restrict_gram(rows);
    if (form.kind == FormKind::Quadratic2) sub.quad = form.restrict_quad(rows);
    return classical::witt_type(sub);
}

bool omega_restriction_member(const ClassicalGroupSpec& spec, const Mat& x,
                              const std::vector<std::vector<uint16_t>>& rows) {
    // x restricted to the span must land in Omega of the restricted form
    FormSpec sub;
    sub.kind = spec.form.kind;
    sub.field = spec.form.field;
    sub.frob_steps = spec.form.frob_steps;
    sub.gram = spec.form.restrict_gram(rows);
    if (spec.form.kind == FormKind::Quadratic2) sub.quad = spec.form.restrict_quad(rows);
    Mat xr = restrict_to(x, rows);
    if (spec.mf->p == 2) return classical::dickson_invariant_of(xr) == 0;
    if (xr.det() != 1) return false;
    return classical::spinor_norm_of(sub, xr) == 1;
}

}  // namespace

BreakResult is_breakable(const ClassicalGroupSpec& spec, const Mat& x) {
    auto dec = form_module_decomposition(spec, x);
    const int m = static_cast<int>(dec.summands.size());
    const int n = spec.n;
    const int64_t q = spec.q;

    if (spec.family == Family::GL || spec.family == Family::SL || spec.family == Family::GU ||
        spec.family == Family::SU) {
        // natural subgroup GL^eps_a x GL^eps_b with the per-q exclusions
        auto excluded = [&](int a) {
            if (q == 2 && (spec.family == Family::GL || spec.family == Family::SL)) return a == 2;
            if (q == 2) return a == 2 || a == 3;  // GU(2)
            if (q == 3) return a == 2;
            return false;
        };
        // subset sums over summand dims
        std::vector<int> dims;
        for (auto& s : dec.summands) dims.push_back(s.dim);
        std::vector<int32_t> reach(static_cast<size_t>(n) + 1, -1);
        std::vector<int32_t> from(static_cast<size_t>(n) + 1, -1);
        reach[0] = 0;
        for (int idx = 0; idx < m; ++idx) {
            for (int s2 = n - dims[idx]; s2 >= 0; --s2) {
                if (reach[s2] >= 0 && reach[s2] <= idx && reach[s2 + dims[idx]] < 0) {
                    reach[s2 + dims[idx]] = idx + 1;
                    from[s2 + dims[idx]] = idx;
                }
            }
        }
        for (int a = 1; a < n; ++a) {
            int b = n - a;
            if (a > b) break;
            if (reach[a] < 0) continue;
            if (excluded(a) || excluded(b)) continue;
            // reconstruct witness
            std::vector<int> witness;
            int cur = a;
            while (cur > 0) {
                int idx = from[cur];
                witness.push_back(idx);
                cur -= dims[idx];
            }
            std::ostringstream os;
            os << "splits as " << a << " + " << b;
            return {true, witness, os.str()};
        }
        return {false, {}, "no admissible split of the elementary-divisor dimensions"};
    }

    if (spec.family == Family::Sp || spec.family == Family::GO || spec.family == Family::SO ||
        spec.family == Family::Omega) {
        bool symplectic = spec.family == Family::Sp;
        if (m > 20) throw std::domain_error("is_breakable: too many summands");
        for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
            std::vector<std::vector<uint16_t>> U, Uperp;
            std::vector<int> widx;
            for (int idx = 0; idx < m; ++idx) {
                auto& rows = dec.summands[idx].basis;
                if (mask & (1u << idx)) {
                    widx.push_back(idx);
                    for (auto& r : rows) U.push_back(r);
                } else {
                    for (auto& r : rows) Uperp.push_back(r);
                }
            }
            int du = static_cast<int>(U.size());
            int dp = static_cast<int>(Uperp.size());
            if (du == 0 || dp == 0) continue;
            bool perf_u, perf_p;
            if (symplectic) {
                if (du % 2 || dp % 2) continue;
                perf_u = perfect_sp(du, q);
                perf_p = perfect_sp(dp, q);
            } else {
                if (spec.mf->p == 2 && (du % 2 || dp % 2)) continue;
                int tu = (du % 2 == 0) ? restricted_type(spec.form, U) : 0;
                int tp = (dp % 2 == 0) ? restricted_type(spec.form, Uperp) : 0;
                perf_u = perfect_omega(du, q, tu);
                perf_p = perfect_omega(dp, q, tp);
            }
            // clause (ii): x|_U = +-1 with Cl(U-perp) perfect
            Mat xu = restrict_to(x, U);
            bool xu_pm1 = xu.is_identity() || (xu.scaled(spec.mf->neg(1))).is_identity();
            bool clause_i = perf_u && perf_p;
            bool clause_ii = perf_p && xu_pm1;
            if (!clause_i && !clause_ii) continue;
            if (!symplectic && spec.family == Family::Omega) {
                // the literal definition asks x = x1 x2 in Cl(U) x Cl(U-perp)
                if (!omega_restriction_member(spec, x, U)) continue;
                if (!omega_restriction_member(spec, x, Uperp)) continue;
            }
            if (!symplectic && spec.family != Family::Omega) {
                // For GO/SO inputs the paper's Cl is still Omega; evaluate the
                // same restriction conditions.
                if (!omega_restriction_member(spec, x, U)) continue;
                if (!omega_restriction_member(spec, x, Uperp)) continue;
            }
            std::ostringstream os;
            os << "splits as " << du << " + " << dp << (clause_i ? " (both perfect)" : " (scalar on U)");
            return {true, widx, os.str()};
        }
        return {false, {}, "no admissible nondegenerate invariant splitting"};
    }
    throw std::domain_error("is_breakable: unsupported family");
}

}  // namespace wordmap::breakdec
