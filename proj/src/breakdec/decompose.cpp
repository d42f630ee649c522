#include <algorithm>
#include <sstream>

#include "breakdec/breakdec.hpp"

namespace wordmap::breakdec {

using classical::FormKind;
using classical::FormSpec;
using ff::Mat;
using ff::Poly;
using ff::SmallField;

namespace {

using Vec = std::vector<uint16_t>;
using Basis = std::vector<Vec>;

Vec mvec(const Mat& m, const Vec& v) {
    const SmallField* f = m.fld();
    Vec out(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        uint16_t acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc = f->add(acc, f->mul(m.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

bool is_zero_vec(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

Basis echelon(const SmallField* f, Basis rows, int n) {
    Mat m(f, static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    auto piv = m.rref();
    Basis out;
    for (size_t r = 0; r < piv.size(); ++r) {
        Vec row(n);
        for (int j = 0; j < n; ++j) row[j] = m.at(static_cast<int>(r), j);
        out.push_back(std::move(row));
    }
    return out;
}

// f(x) evaluated at the matrix.
Mat eval_poly_at(const Mat& x, const Poly& f) {
    const SmallField* sf = x.fld();
    Mat acc(sf, x.rows(), x.cols());
    Mat pw = Mat::identity(sf, x.rows());
    for (int i = 0; i <= f.degree(); ++i) {
        uint16_t c = static_cast<uint16_t>(f.coeff(i).code());
        if (c) acc = acc + pw.scaled(c);
        if (i < f.degree()) pw = pw * x;
    }
    return acc;
}

// kernel of m intersected with the row space of `within` (if nonempty).
Basis kernel_within(const Mat& m, const Basis& within) {
    const SmallField* f = m.fld();
    int n = m.cols();
    if (within.empty()) {
        auto ker = m.kernel();
        return echelon(f, Basis(ker.begin(), ker.end()), n);
    }
    // coordinates c over the within-basis with m * (c . within) = 0
    int d = static_cast<int>(within.size());
    Mat sys(f, m.rows(), d);
    for (int t = 0; t < d; ++t) {
        Vec img = mvec(m, within[t]);
        for (int i = 0; i < m.rows(); ++i) sys.at(i, t) = img[i];
    }
    auto ker = sys.kernel();
    Basis out;
    for (auto& c : ker) {
        Vec v(n, 0);
        for (int t = 0; t < d; ++t) {
            if (!c[t]) continue;
            for (int j = 0; j < n; ++j) v[j] = f->add(v[j], f->mul(c[t], within[t][j]));
        }
        out.push_back(std::move(v));
    }
    return echelon(f, out, n);
}

// Perp of span(U) within span(piece), w.r.t. the spec form.
Basis perp_within(const FormSpec& form, const Basis& U, const Basis& piece) {
    const SmallField* f = form.field;
    int n = form.dim();
    int d = static_cast<int>(piece.size());
    Mat sys(f, static_cast<int>(U.size()), d);
    for (int i = 0; i < static_cast<int>(U.size()); ++i)
        for (int t = 0; t < d; ++t) sys.at(i, t) = form.bilinear(piece[t], U[i]);
    auto ker = sys.kernel();
    Basis out;
    for (auto& c : ker) {
        Vec v(n, 0);
        for (int t = 0; t < d; ++t) {
            if (!c[t]) continue;
            for (int j = 0; j < n; ++j) v[j] = f->add(v[j], f->mul(c[t], piece[t][j]));
        }
        out.push_back(std::move(v));
    }
    return echelon(f, out, n);
}

bool nondegenerate_on(const FormSpec& form, const Basis& basis) {
    if (basis.empty()) return true;
    Mat g = form.restrict_gram(basis);
    return g.rank() == g.rows();
}

// dual polynomial: roots inverted (and conjugated for hermitian forms).
Poly dual_poly(const FormSpec& form, const Poly& f) {
    const ff::Field& F = f.fld();
    int d = f.degree();
    std::vector<ff::FieldElement> rev(d + 1, F->zero());
    for (int i = 0; i <= d; ++i) rev[d - i] = f.coeff(i);
    Poly r(F, rev);
    r = r.monic();
    if (form.kind == FormKind::Hermitian) {
        std::vector<ff::FieldElement> conj;
        for (int i = 0; i <= r.degree(); ++i) {
            ff::FieldElement c = r.coeff(i);
            for (int s = 0; s < form.frob_steps; ++s) c = c.frobenius();
            conj.push_back(c);
        }
        r = Poly(F, conj);
    }
    return r;
}

// height of v in the f-primary piece: least j with f(x)^j v = 0.
int height_of(const Mat& x, const Poly& f, const Vec& v, int maxh) {
    Vec cur = v;
    Mat fx = eval_poly_at(x, f);
    for (int j = 0; j < maxh; ++j) {
        if (is_zero_vec(cur)) return j;
        cur = mvec(fx, cur);
    }
    return is_zero_vec(cur) ? maxh : maxh + 1;
}

// cyclic F_q[x]-module basis generated by v (dimension deg(f) * height).
Basis cyclic_basis(const Mat& x, const Vec& v, int dim_target, int n) {
    Basis out;
    Vec cur = v;
    for (int i = 0; i < dim_target; ++i) {
        out.push_back(cur);
        cur = mvec(x, cur);
    }
    return echelon(x.fld(), out, n);
}

// Candidate generators inside a piece: basis rows, then pairwise combos.
std::vector<Vec> generator_candidates(const SmallField* f, const Basis& piece) {
    std::vector<Vec> cands(piece.begin(), piece.end());
    for (size_t i = 0; i < piece.size(); ++i)
        for (size_t j = 0; j < piece.size(); ++j) {
            if (i == j) continue;
            for (uint32_t lam = 1; lam < std::min<uint32_t>(f->q, 8); ++lam) {
                Vec v = piece[i];
                for (size_t t = 0; t < v.size(); ++t) v[t] = f->add(v[t], f->mul(static_cast<uint16_t>(lam), piece[j][t]));
                cands.push_back(std::move(v));
            }
        }
    return cands;
}

}  // namespace

Mat restrict_to(const Mat& x, const Basis& basis) {
    const SmallField* f = x.fld();
    int d = static_cast<int>(basis.size());
    int n = x.rows();
    // solve x b_t = sum_s c_st b_s via the echelon structure: build the
    // [basis | images] system
    Mat bs(f, d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) bs.at(i, j) = basis[i][j];
    // coordinates via rref bookkeeping: append images and reduce
    Mat out(f, d, d);
    // Solve the linear systems B^T c = img for each image.
    Mat bt(f, n, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) bt.at(j, i) = basis[i][j];
    for (int t = 0; t < d; ++t) {
        Vec img = mvec(x, basis[t]);
        // augmented elimination
        Mat aug(f, n, d + 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < d; ++j) aug.at(i, j) = bt.at(i, j);
            aug.at(i, d) = img[i];
        }
        auto piv = aug.rref();
        // read solution: pivot in column j gives c_j
        std::vector<uint16_t> c(d, 0);
        for (size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] == d) throw std::logic_error("restrict_to: image not in span");
            c[piv[r]] = aug.at(static_cast<int>(r), d);
        }
        for (int s = 0; s < d; ++s) out.at(s, t) = c[s];
    }
    return out;
}

FormModuleDecomposition form_module_decomposition(const ClassicalGroupSpec& spec, const Mat& x) {
    const SmallField* f = spec.mf;
    const int n = spec.n;
    if (spec.n > 12) throw std::domain_error("form_module_decomposition: n <= 12 supported");
    FormModuleDecomposition out{spec, x, {}};
    Poly cp = x.charpoly();
    auto fac = ff::factor_poly(cp, 0xDEC0ULL);

    auto push_summand = [&](SummandKind kind, const Poly& poly, int jordan, Basis basis,
                            const std::string& label) {
        Summand s;
        s.kind = kind;
        s.poly = poly;
        s.jordan = jordan;
        s.basis = std::move(basis);
        s.dim = static_cast<int>(s.basis.size());
        s.label = label;
        out.summands.push_back(std::move(s));
    };

    if (spec.form.kind == FormKind::None) {
        // GL: one summand per elementary divisor; only the dimension multiset
        // feeds the breakability search, so bases stay empty here.
        auto ed = classical::elementary_divisors(f, x);
        for (auto& [deg, sizes] : ed.blocks) {
            // recover the matching irreducible from the charpoly factorization
            Poly factor = fac[0].factor;
            for (auto& pf : fac)
                if (pf.factor.degree() == deg) {
                    // degrees can repeat; the dimension data is what matters below
                    factor = pf.factor;
                    break;
                }
            for (int k2 : sizes) {
                Summand s;
                s.kind = SummandKind::GLBlock;
                s.poly = factor;
                s.jordan = k2;
                s.dim = deg * k2;
                std::ostringstream lab;
                lab << "block(deg" << deg << ",k=" << k2 << ")";
                s.label = lab.str();
                out.summands.push_back(std::move(s));
            }
        }
        int total = 0;
        for (auto& s : out.summands) total += s.dim;
        if (total != n) throw std::logic_error("decompose: GL dimensions do not sum to n");
        return out;
    }

    // form case: group primary pieces into self-dual pieces and dual pairs
    const FormSpec& form = spec.form;
    std::vector<bool> used(fac.size(), false);
    for (size_t i = 0; i < fac.size(); ++i) {
        if (used[i]) continue;
        Poly dual = dual_poly(form, fac[i].factor);
        bool selfdual = dual == fac[i].factor;
        Basis piece;
        {
            Mat fx = eval_poly_at(x, fac[i].factor);
            piece = kernel_within(fx.pow(static_cast<uint64_t>(fac[i].multiplicity)), {});
        }
        if (!selfdual) {
            // locate the partner
            int partner = -1;
            for (size_t j = 0; j < fac.size(); ++j)
                if (j != i && fac[j].factor == dual) partner = static_cast<int>(j);
            if (partner < 0) throw std::logic_error("decompose: dual factor missing");
            used[partner] = true;
            Mat gx = eval_poly_at(x, fac[partner].factor);
            Basis piece2 = kernel_within(gx.pow(static_cast<uint64_t>(fac[partner].multiplicity)), {});
            // combined piece
            Basis combined = piece;
            for (auto& v : piece2) combined.push_back(v);
            combined = echelon(f, combined, n);
            // extract dual-pair units
            while (!combined.empty()) {
                // pieces restricted to the current combined space
                Basis p1, p2;
                {
                    Mat fx = eval_poly_at(x, fac[i].factor);
                    p1 = kernel_within(fx.pow(static_cast<uint64_t>(fac[i].multiplicity)), combined);
                    Mat gx2 = eval_poly_at(x, fac[partner].factor);
                    p2 = kernel_within(gx2.pow(static_cast<uint64_t>(fac[partner].multiplicity)), combined);
                }
                int besth = 0;
                Vec bestv;
                for (auto& cand : generator_candidates(f, p1)) {
                    int h = height_of(x, fac[i].factor, cand, fac[i].multiplicity);
                    if (h > besth) {
                        besth = h;
                        bestv = cand;
                    }
                }
                if (besth == 0) throw std::logic_error("decompose: empty dual piece");
                Basis cv = cyclic_basis(x, bestv, besth * fac[i].factor.degree(), n);
                // partner generator w in p2 with nondegenerate pairing
                bool found = false;
                for (auto& w : generator_candidates(f, p2)) {
                    int h = height_of(x, fac[partner].factor, w, fac[partner].multiplicity);
                    if (h != besth) continue;
                    Basis cw = cyclic_basis(x, w, besth * fac[partner].factor.degree(), n);
                    Basis unit = cv;
                    for (auto& r : cw) unit.push_back(r);
                    unit = echelon(f, unit, n);
                    if (static_cast<int>(unit.size()) != besth * (fac[i].factor.degree() + fac[partner].factor.degree()))
                        continue;
                    if (!nondegenerate_on(form, unit)) continue;
                    std::ostringstream lab;
                    lab << "pair(deg" << fac[i].factor.degree() << ",k=" << besth << ")";
                    push_summand(SummandKind::DualPair, fac[i].factor, besth, unit, lab.str());
                    combined = perp_within(form, out.summands.back().basis, combined);
                    found = true;
                    break;
                }
                if (!found) throw std::logic_error("decompose: no nondegenerate dual partner found");
            }
            used[i] = true;
            continue;
        }
        used[i] = true;
        bool pm_one = fac[i].factor.degree() == 1 &&
                      (fac[i].factor.coeff(0).is_one() || (-fac[i].factor.coeff(0)).is_one() ||
                       fac[i].factor.coeff(0).is_zero());
        // t - 1 has coeff(0) = -1; t + 1 has coeff(0) = 1 (monic linear)
        pm_one = fac[i].factor.degree() == 1 &&
                 ((-fac[i].factor.coeff(0)).is_one() || (-fac[i].factor.coeff(0) == -f->F->one()));
        while (!piece.empty()) {
            int besth = 0;
            Vec bestv;
            Vec best_nondeg;
            int best_nondeg_h = 0;
            for (auto& cand : generator_candidates(f, piece)) {
                int h = height_of(x, fac[i].factor, cand, fac[i].multiplicity);
                if (h == 0) continue;
                if (h > besth) {
                    besth = h;
                    bestv = cand;
                }
                if (h >= best_nondeg_h) {
                    Basis cv = cyclic_basis(x, cand, h * fac[i].factor.degree(), n);
                    if (static_cast<int>(cv.size()) == h * fac[i].factor.degree() &&
                        nondegenerate_on(form, cv) && h > best_nondeg_h) {
                        best_nondeg_h = h;
                        best_nondeg = cand;
                    }
                }
            }
            if (besth == 0) throw std::logic_error("decompose: empty self-dual piece");
            if (best_nondeg_h == besth) {
                Basis unit = cyclic_basis(x, best_nondeg, besth * fac[i].factor.degree(), n);
                std::ostringstream lab;
                if (pm_one)
                    lab << "V(" << unit.size() << ")";
                else
                    lab << "selfdual(deg" << fac[i].factor.degree() << ",k=" << besth << ")";
                push_summand(pm_one ? SummandKind::UnipotentV : SummandKind::SelfDual, fac[i].factor,
                             besth, unit, lab.str());
                piece = perp_within(form, out.summands.back().basis, piece);
                continue;
            }
            // pair two max-height cyclic modules into a W-type unit
            Basis cv = cyclic_basis(x, bestv, besth * fac[i].factor.degree(), n);
            bool found = false;
            for (auto& w : generator_candidates(f, piece)) {
                int h = height_of(x, fac[i].factor, w, fac[i].multiplicity);
                if (h != besth) continue;
                Basis cw = cyclic_basis(x, w, h * fac[i].factor.degree(), n);
                Basis unit = cv;
                for (auto& r : cw) unit.push_back(r);
                unit = echelon(f, unit, n);
                if (static_cast<int>(unit.size()) != 2 * besth * fac[i].factor.degree()) continue;
                if (!nondegenerate_on(form, unit)) continue;
                std::ostringstream lab;
                if (pm_one)
                    lab << "W(" << besth << ")";
                else
                    lab << "selfdual-pair(deg" << fac[i].factor.degree() << ",k=" << besth << ")";
                push_summand(pm_one ? SummandKind::UnipotentW : SummandKind::SelfDual, fac[i].factor,
                             besth, unit, lab.str());
                piece = perp_within(form, out.summands.back().basis, piece);
                found = true;
                break;
            }
            if (!found) throw std::logic_error("decompose: no W-type partner found");
        }
    }

    int total = 0;
    for (auto& s : out.summands) {
        total += s.dim;
        if (!nondegenerate_on(form, s.basis)) throw std::logic_error("decompose: degenerate summand");
    }
    if (total != n) throw std::logic_error("decompose: dimensions do not sum to n");
    return out;
}

}  // namespace wordmap::breakdec
