#include "classical/eigen.hpp"

namespace wordmap::classical {

using ff::Field;
using ff::FieldElement;
using ff::Mat;
using ff::MatG;
using ff::Poly;
using ff::SmallField;

int EigenProfile::algebraic_multiplicity(const FieldElement& alpha) const {
    int total = 0;
    for (auto& ev : eigenvalues) {
        // compare across possibly different extensions through a common one
        const auto& fa = ev.value.fld();
        const auto& fb = alpha.fld();
        if (fa->p != fb->p) continue;
        int lcm_deg = static_cast<int>(lcm64_checked(fa->k, fb->k));
        Field ext = ff::field(fa->p, lcm_deg);
        if (ext->embed(ev.value) == ext->embed(alpha)) total += ev.algebraic_mult;
    }
    return total;
}

EigenProfile eigen_profile(const ClassicalGroupSpec& spec, const Mat& g) {
    EigenProfile out;
    out.n = spec.n;
    out.base = spec.mf;
    Poly cp = g.charpoly();
    auto fac = ff::factor_poly(cp, 0xE16EULL);
    for (auto& pf : fac) {
        out.factors.push_back({pf.factor, pf.multiplicity});
        int d = pf.factor.degree();
        Field ext = ff::field(spec.mf->p, spec.mf->k * d);
        // lift and split into linear factors over the splitting field
        Poly lifted(ext, [&] {
            std::vector<FieldElement> cs;
            for (int i = 0; i <= pf.factor.degree(); ++i) cs.push_back(ext->embed(pf.factor.coeff(i)));
            return cs;
        }());
        uint64_t seed = 0x5eedULL ^ fnv1a(pf.factor.str().data(), pf.factor.str().size());
        auto rts = ff::roots(lifted, seed);
        if (static_cast<int>(rts.size()) != d) throw std::logic_error("eigen_profile: factor did not split");
        for (auto& [root, mult] : rts) {
            (void)mult;
            out.eigenvalues.push_back({root, pf.multiplicity});
        }
    }
    int total = 0;
    for (auto& ev : out.eigenvalues) total += ev.algebraic_mult;
    if (total != spec.n) throw std::logic_error("eigen_profile: multiplicities do not sum to n");
    return out;
}

int eigenspace_dim(const Mat& g, const FieldElement& alpha) {
    const Field& ext = alpha.fld();
    if (ext->p != g.fld()->p) throw std::domain_error("eigenspace_dim: characteristic mismatch");
    if (ext->k % g.fld()->k != 0) throw std::domain_error("eigenspace_dim: alpha field does not contain entries");
    MatG m = MatG::lift(g, ext);
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = m.at(i, i) - alpha;
    return g.rows() - m.rank();
}

std::vector<FieldElement> mu_q_minus_eps(const ClassicalGroupSpec& spec) {
    std::vector<FieldElement> out;
    const Field& F = spec.mf->F;
    int64_t target = spec.unitary() || spec.eps == -1 ? spec.q + 1 : spec.q - 1;
    FieldElement g = F->gen();
    FieldElement h = g.pow((F->size - 1) / static_cast<uint64_t>(target));
    FieldElement cur = F->one();
    for (int64_t i = 0; i < target; ++i) {
        out.push_back(cur);
        cur = cur * h;
    }
    return out;
}

namespace {

// multiplicity of the i-th vs factors x -+ 1
int mult_of_pm1(const EigenProfile& pr, const ClassicalGroupSpec& spec, int sign) {
    const Field& F = spec.mf->F;
    FieldElement val = sign > 0 ? F->one() : -F->one();
    int m = 0;
    for (auto& [f, mult] : pr.factors)
        if (f.degree() == 1 && -f.coeff(0) == val) m += mult;
    return m;
}

bool criterion_multiplicities(const ClassicalGroupSpec& spec, const Mat& g, const EigenProfile& pr) {
    // semisimplicity on the +-1 part is checked geometrically when the
    // algebraic multiplicity 2 is allowed.
    int m1 = mult_of_pm1(pr, spec, +1);
    int mm1 = mult_of_pm1(pr, spec, -1);
    auto others_simple = [&](bool allow_pm1) {
        for (auto& [f, mult] : pr.factors) {
            bool is_pm1 = f.degree() == 1 && (-f.coeff(0)).is_one();
            bool is_m1 = f.degree() == 1 && (-f.coeff(0) == -spec.mf->F->one());
            if (allow_pm1 && (is_pm1 || is_m1)) continue;
            if (mult != 1) return false;
        }
        return true;
    };
    auto geom_ok = [&](int sign, int want) {
        if (want == 0) return true;
        FieldElement a = sign > 0 ? spec.mf->F->one() : -spec.mf->F->one();
        return eigenspace_dim(g, a) == want;
    };
    switch (spec.family) {
        case Family::GL:
        case Family::SL:
        case Family::GU:
        case Family::SU:
            return others_simple(false);
        case Family::Sp:
            return others_simple(false) && m1 == 0 && mm1 == 0;
        case Family::GO:
        case Family::SO:
        case Family::Omega: {
            if (spec.mf->p == 2) {
                // char 2: +1 = -1; regular semisimple needs multiplicity <= 2
                if (!others_simple(true)) return false;
                if (m1 > 2) return false;
                return geom_ok(+1, m1);
            }
            if (spec.n % 2 == 0) {
                if (!others_simple(true)) return false;
                if (m1 > 2 || mm1 > 2 || m1 == 1 || mm1 == 1) return false;
                return geom_ok(+1, m1) && geom_ok(-1, mm1);
            }
            if (!others_simple(true)) return false;
            if (m1 != 1 || mm1 > 2 || mm1 == 1) return false;
            return geom_ok(-1, mm1);
        }
    }
    return false;
}

}  // namespace

int lie_commutant_dim(const ClassicalGroupSpec& spec, const Mat& g) {
    const SmallField* f = spec.mf;
    const int n = spec.n;
    if (!spec.unitary()) {
        // variables X_{ij} over F_q; equations Xg - gX = 0 and, for form
        // families, X^T B + B X = 0.
        int vars = n * n;
        std::vector<std::vector<uint16_t>> eqs;
        auto var = [&](int i, int j) { return i * n + j; };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<uint16_t> row(vars, 0);
                // (Xg - gX)_{ab} = sum_k X_{ak} g_{kb} - g_{ak} X_{kb}
                for (int k2 = 0; k2 < n; ++k2) {
                    row[var(a, k2)] = f->add(row[var(a, k2)], g.at(k2, b));
                    row[var(k2, b)] = f->sub(row[var(k2, b)], g.at(a, k2));
                }
                eqs.push_back(std::move(row));
            }
        if (spec.form.kind == FormKind::Symplectic || spec.form.kind == FormKind::Symmetric ||
            spec.form.kind == FormKind::Quadratic2) {
            const Mat& B = spec.form.gram;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    std::vector<uint16_t> row(vars, 0);
                    // (X^T B + B X)_{ab} = sum_k X_{ka} B_{kb} + B_{ak} X_{kb}
                    for (int k2 = 0; k2 < n; ++k2) {
                        row[var(k2, a)] = f->add(row[var(k2, a)], B.at(k2, b));
                        row[var(k2, b)] = f->add(row[var(k2, b)], B.at(a, k2));
                    }
                    eqs.push_back(std::move(row));
                }
        }
        Mat sys(f, static_cast<int>(eqs.size()), vars);
        for (size_t i = 0; i < eqs.size(); ++i)
            for (int j = 0; j < vars; ++j) sys.at(static_cast<int>(i), j) = eqs[i][j];
        return vars - sys.rank();
    }
    // unitary: F_q-linear conditions on X over F_{q^2}: write X = X0 + w X1
    // with X0, X1 over F_q. Encode F_{q^2} arithmetic F_q-linearly.
    const SmallField* fq = ff::small_field(f->p, f->k / 2);
    const Field& F2 = f->F;
    FieldElement w = F2->from_code(f->gen_code);
    // basis {1, w} of F_{q^2} over F_q: code -> (c0, c1) via a lookup table
    std::vector<std::pair<uint16_t, uint16_t>> split_tab(f->q, {0xffff, 0xffff});
    for (uint32_t c1 = 0; c1 < fq->q; ++c1) {
        FieldElement c1w = F2->embed(fq->F->from_code(c1)) * w;
        for (uint32_t c0 = 0; c0 < fq->q; ++c0) {
            FieldElement x = F2->embed(fq->F->from_code(c0)) + c1w;
            split_tab[x.code()] = {static_cast<uint16_t>(c0), static_cast<uint16_t>(c1)};
        }
    }
    auto split = [&](uint16_t code) -> std::pair<uint16_t, uint16_t> {
        auto pr = split_tab[code];
        if (pr.first == 0xffff) throw std::logic_error("split: no decomposition");
        return pr;
    };
    const int vars = 2 * n * n;  // X0 then X1 entries, each in F_q
    auto v0 = [&](int i, int j) { return i * n + j; };
    auto v1 = [&](int i, int j) { return n * n + i * n + j; };
    // Precompute structure constants: (a0 + a1 w) * (b0 + b1 w) where w^2 = s0 + s1 w.
    auto [s0, s1] = split(f->mul(f->gen_code, f->gen_code));
    // w^q = conj(w) = t0 + t1 w
    auto [t0, t1] = split(f->frob_iter(f->gen_code, spec.form.frob_steps));
    // Each equation over F_{q^2} gives two F_q rows. We expand symbolically:
    // entry X_{ij} = x0 + x1 w contributes with coefficient c = c0 + c1 w:
    //   c*X = (c0 x0 + s0 c1 x1) + (c1 x0 + (c0 + s1 c1) x1) w
    // conj(X) = x0 + x1 (t0 + t1 w) = (x0 + t0 x1) + (t1 x1) w
    struct RowPair {
        std::vector<uint16_t> re, im;
    };
    auto fresh = [&] { return RowPair{std::vector<uint16_t>(vars, 0), std::vector<uint16_t>(vars, 0)}; };
    auto add_term = [&](RowPair& rp, int xi, int xj, uint16_t ccode, bool conjx) {
        auto [c0, c1] = split(ccode);
        // coefficients acting on (x0, x1) of X_{xi,xj}
        // plain X: re += c0 x0 + s0 c1 x1 ; im += c1 x0 + (c0 + s1 c1) x1
        // conj X: substitute x0 -> x0 + t0 x1, x1 -> t1 x1
        uint16_t a00 = c0, a01 = fq->mul(s0, c1);
        uint16_t a10 = c1, a11 = fq->add(c0, fq->mul(s1, c1));
        if (conjx) {
            // x0' = x0 + t0 x1, x1' = t1 x1
            uint16_t b00 = a00;
            uint16_t b01 = fq->add(fq->mul(a00, t0), fq->mul(a01, t1));
            uint16_t b10 = a10;
            uint16_t b11 = fq->add(fq->mul(a10, t0), fq->mul(a11, t1));
            a00 = b00;
            a01 = b01;
            a10 = b10;
            a11 = b11;
        }
        rp.re[v0(xi, xj)] = fq->add(rp.re[v0(xi, xj)], a00);
        rp.re[v1(xi, xj)] = fq->add(rp.re[v1(xi, xj)], a01);
        rp.im[v0(xi, xj)] = fq->add(rp.im[v0(xi, xj)], a10);
        rp.im[v1(xi, xj)] = fq->add(rp.im[v1(xi, xj)], a11);
    };
    std::vector<std::vector<uint16_t>> eqs;
    // Xg - gX = 0
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            RowPair rp = fresh();
            for (int k2 = 0; k2 < n; ++k2) {
                add_term(rp, a, k2, g.at(k2, b), false);
                add_term(rp, k2, b, f->neg(g.at(a, k2)), false);
            }
            eqs.push_back(std::move(rp.re));
            eqs.push_back(std::move(rp.im));
        }
    // conj(X)^T B + B X = 0  (Lie algebra of the unitary group, B = I here,
    // but keep it general)
    const Mat& B = spec.form.gram;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            RowPair rp = fresh();
            for (int k2 = 0; k2 < n; ++k2) {
                add_term(rp, k2, a, B.at(k2, b), true);
                add_term(rp, k2, b, B.at(a, k2), false);
            }
            eqs.push_back(std::move(rp.re));
            eqs.push_back(std::move(rp.im));
        }
    Mat sys(fq, static_cast<int>(eqs.size()), vars);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (int j = 0; j < vars; ++j) sys.at(static_cast<int>(i), j) = eqs[i][j];
    return vars - sys.rank();
}

bool is_regular_semisimple(const ClassicalGroupSpec& spec, const Mat& g) {
    EigenProfile pr = eigen_profile(spec, g);
    bool crit_a = criterion_multiplicities(spec, g, pr);
    // criterion (b): semisimple (geometric multiplicity of every factor equals
    // the algebraic one) with commutant dimension in the form Lie algebra
    // equal to the rank. The Lie-algebra computation is reliable for GL/GU in
    // any characteristic and for all families in odd characteristic.
    bool b_valid = spec.family == Family::GL || spec.family == Family::SL ||
                   spec.family == Family::GU || spec.family == Family::SU || spec.mf->p != 2;
    if (b_valid) {
        bool semisimple = true;
        for (auto& [fpoly, mult] : pr.factors) {
            if (mult == 1) continue;
            // dim Ker f(g) must be deg(f) * mult
            ff::Mat fg(spec.mf, spec.n, spec.n);
            ff::Mat pw = ff::Mat::identity(spec.mf, spec.n);
            for (int i = 0; i <= fpoly.degree(); ++i) {
                uint16_t c = static_cast<uint16_t>(fpoly.coeff(i).code());
                if (c) fg = fg + pw.scaled(c);
                if (i < fpoly.degree()) pw = pw * g;
            }
            int ker = spec.n - fg.rank();
            if (ker != fpoly.degree() * mult) {
                semisimple = false;
                break;
            }
        }
        int rank;
        switch (spec.family) {
            case Family::GL:
            case Family::SL:
            case Family::GU:
            case Family::SU:
                rank = spec.n;
                break;
            default:
                rank = spec.n / 2;
                break;
        }
        bool crit_b = semisimple && lie_commutant_dim(spec, g) == rank;
        if (crit_a != crit_b)
            throw std::logic_error("is_regular_semisimple: criteria disagree on " + spec.name());
    }
    return crit_a;
}

}  // namespace wordmap::classical
