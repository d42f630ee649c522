#include "classical/form.hpp"

#include <stdexcept>

namespace wordmap::classical {

using ff::Mat;
using ff::SmallField;

namespace {

std::vector<uint16_t> mat_apply(const Mat& m, const std::vector<uint16_t>& v) {
    const SmallField* f = m.fld();
    std::vector<uint16_t> out(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        uint16_t acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc = f->add(acc, f->mul(m.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

}  // namespace

uint16_t FormSpec::bilinear(const std::vector<uint16_t>& u, const std::vector<uint16_t>& v) const {
    uint16_t acc = 0;
    for (int i = 0; i < dim(); ++i) {
        if (!u[i]) continue;
        uint16_t rowacc = 0;
        for (int j = 0; j < dim(); ++j) {
            uint16_t vj = (kind == FormKind::Hermitian) ? conj(v[j]) : v[j];
            rowacc = field->add(rowacc, field->mul(gram.at(i, j), vj));
        }
        acc = field->add(acc, field->mul(u[i], rowacc));
    }
    return acc;
}

uint16_t FormSpec::quadratic(const std::vector<uint16_t>& v) const {
    if (kind == FormKind::Quadratic2) {
        uint16_t acc = 0;
        for (int i = 0; i < dim(); ++i) {
            if (!v[i]) continue;
            acc = field->add(acc, field->mul(quad[i], field->mul(v[i], v[i])));
            for (int j = i + 1; j < dim(); ++j)
                acc = field->add(acc, field->mul(gram.at(i, j), field->mul(v[i], v[j])));
        }
        return acc;
    }
    uint16_t b = bilinear(v, v);
    if (kind == FormKind::Hermitian) return b;  // norm form, already "Q"
    // odd characteristic: Q(v) = f(v,v)/2
    uint16_t two_inv = field->inv(field->add(1, 1));
    return field->mul(b, two_inv);
}

bool FormSpec::preserves(const ff::Mat& g) const {
    if (kind == FormKind::None) return true;
    Mat lhs = g.transpose() * gram;
    lhs = lhs * (kind == FormKind::Hermitian ? g.entrywise_frob(frob_steps) : g);
    if (!(lhs == gram)) return false;
    if (kind == FormKind::Quadratic2) {
        // polarization preserved; also need Q(g e_i) = Q(e_i)
        for (int i = 0; i < dim(); ++i) {
            std::vector<uint16_t> col(dim());
            for (int r = 0; r < dim(); ++r) col[r] = g.at(r, i);
            if (quadratic(col) != quad[i]) return false;
        }
    }
    return true;
}

ff::Mat FormSpec::restrict_gram(const std::vector<std::vector<uint16_t>>& rows) const {
    int d = static_cast<int>(rows.size());
    Mat out(field, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.at(i, j) = bilinear(rows[i], rows[j]);
    return out;
}

std::vector<uint16_t> FormSpec::restrict_quad(const std::vector<std::vector<uint16_t>>& rows) const {
    std::vector<uint16_t> out;
    for (auto& r : rows) out.push_back(quadratic(r));
    return out;
}

FormSpec standard_symplectic(const SmallField* f, int n) {
    if (n % 2) throw std::domain_error("symplectic form needs even dimension");
    FormSpec s;
    s.kind = FormKind::Symplectic;
    s.field = f;
    s.gram = Mat(f, n, n);
    for (int i = 0; i < n / 2; ++i) {
        s.gram.at(i, n - 1 - i) = 1;
        s.gram.at(n - 1 - i, i) = f->neg(1);
    }
    return s;
}

FormSpec standard_symmetric(const SmallField* f, int n, int eps) {
    if (f->p == 2) throw std::domain_error("use standard_quadratic2 in characteristic 2");
    FormSpec s;
    s.kind = FormKind::Symmetric;
    s.field = f;
    s.gram = Mat(f, n, n);
    if (n % 2 == 1 || eps == +1) {
        for (int i = 0; i < n; ++i) s.gram.at(i, n - 1 - i) = 1;
        if (n % 2 == 0 && eps != +1) throw std::domain_error("bad eps");
    } else {
        for (int i = 0; i < n / 2 - 1; ++i) {
            s.gram.at(i, n - 1 - i) = 1;
            s.gram.at(n - 1 - i, i) = 1;
        }
        // central anisotropic block: gram of N_{F_q^2/F_q} in basis {1, w};
        // the polarization of the norm form is f(x, y) = Tr(x y^q).
        const SmallField* f2 = ff::small_field(f->p, f->k * 2);
        ff::FieldElement w = f2->F->from_code(f2->F->gen().code());
        ff::FieldElement wq = w;
        for (int i = 0; i < f->k; ++i) wq = wq.frobenius();
        auto tr = [&](const ff::FieldElement& x) {
            return f2->F->trace_to_subfield(x, f->k).code();
        };
        int a = n / 2 - 1, b = n / 2;
        s.gram.at(a, a) = static_cast<uint16_t>(tr(f2->F->one()));            // Tr(1) = 2
        s.gram.at(a, b) = static_cast<uint16_t>(tr(wq));                      // Tr(w^q) = Tr(w)
        s.gram.at(b, a) = s.gram.at(a, b);
        s.gram.at(b, b) = static_cast<uint16_t>(tr(w * wq));                  // Tr(w^{q+1}) = 2 N(w)
    }
    return s;
}

FormSpec standard_quadratic2(const SmallField* f, int n, int eps) {
    if (f->p != 2) throw std::domain_error("standard_quadratic2 needs characteristic 2");
    if (n % 2) throw std::domain_error("char-2 orthogonal groups need even dimension");
    FormSpec s;
    s.kind = FormKind::Quadratic2;
    s.field = f;
    s.gram = Mat(f, n, n);
    s.quad.assign(n, 0);
    for (int i = 0; i < n / 2; ++i) {
        s.gram.at(i, n - 1 - i) = 1;
        s.gram.at(n - 1 - i, i) = 1;
    }
    if (eps == -1) {
        // central pair carries x^2 + xy + nu y^2 with nu making it anisotropic
        int a = n / 2 - 1, b = n / 2;
        uint16_t nu = 0;
        for (uint16_t cand = 1; cand < f->q; ++cand) {
            // anisotropic iff x^2 + x + nu has no root
            bool root = false;
            for (uint32_t x = 0; x < f->q && !root; ++x)
                if (f->add(f->add(f->mul(static_cast<uint16_t>(x), static_cast<uint16_t>(x)),
                                  static_cast<uint16_t>(x)),
                           cand) == 0)
                    root = true;
            if (!root) {
                nu = cand;
                break;
            }
        }
        if (!nu) throw std::logic_error("no anisotropic parameter found");
        s.quad[a] = 1;
        s.quad[b] = nu;
    }
    return s;
}

FormSpec standard_hermitian(const SmallField* fq2, int n, int frob_steps) {
    FormSpec s;
    s.kind = FormKind::Hermitian;
    s.field = fq2;
    s.frob_steps = frob_steps;
    s.gram = Mat::identity(fq2, n);
    return s;
}

int square_class(const SmallField* f, uint16_t x) {
    if (!x) throw std::domain_error("square_class of zero");
    if (f->p == 2) return 1;  // every element is a square
    return f->pow(x, (f->q - 1) / 2) == 1 ? 1 : -1;
}

namespace {

// Find v (as coordinates) with Q(v) != 0 inside the span of `rows`, with the
// extra predicate `moved`; deterministic scan.
std::optional<std::vector<uint16_t>> find_anisotropic(const FormSpec& form,
                                                      const std::vector<std::vector<uint16_t>>& rows,
                                                      const std::function<bool(const std::vector<uint16_t>&)>& want) {
    const SmallField* f = form.field;
    auto combine = [&](const std::vector<uint16_t>& a, const std::vector<uint16_t>& b, uint16_t lam) {
        std::vector<uint16_t> v(a.size());
        for (size_t i = 0; i < a.size(); ++i) v[i] = f->add(a[i], f->mul(lam, b[i]));
        return v;
    };
    for (auto& r : rows)
        if (form.quadratic(r) != 0 && want(r)) return r;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) {
            if (i == j) continue;
            for (uint32_t lam = 1; lam < f->q; ++lam) {
                auto v = combine(rows[i], rows[j], static_cast<uint16_t>(lam));
                if (form.quadratic(v) != 0 && want(v)) return v;
            }
        }
    // triples as a last resort
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            for (size_t k2 = j + 1; k2 < rows.size(); ++k2)
                for (uint32_t lam = 1; lam < f->q; ++lam)
                    for (uint32_t mu = 1; mu < f->q; ++mu) {
                        auto v = combine(combine(rows[i], rows[j], static_cast<uint16_t>(lam)), rows[k2],
                                         static_cast<uint16_t>(mu));
                        if (form.quadratic(v) != 0 && want(v)) return v;
                    }
    return std::nullopt;
}

std::vector<uint16_t> sub_vec(const FormSpec& form, const std::vector<uint16_t>& a,
                              const std::vector<uint16_t>& b) {
    std::vector<uint16_t> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = form.field->sub(a[i], b[i]);
    return v;
}

std::vector<uint16_t> add_vec(const FormSpec& form, const std::vector<uint16_t>& a,
                              const std::vector<uint16_t>& b) {
    std::vector<uint16_t> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = form.field->add(a[i], b[i]);
    return v;
}

// apply the reflection r_v to g from the left: g := r_v * g.
void apply_reflection(const FormSpec& form, const std::vector<uint16_t>& v, Mat& g) {
    const SmallField* f = form.field;
    uint16_t qv = form.quadratic(v);
    uint16_t qinv = f->inv(qv);
    // r_v(x) = x - f(x,v)/Q(v) v; columns of g transform independently
    for (int c = 0; c < g.cols(); ++c) {
        std::vector<uint16_t> col(g.rows());
        for (int r = 0; r < g.rows(); ++r) col[r] = g.at(r, c);
        uint16_t coef = f->mul(form.bilinear(col, v), qinv);
        if (!coef) continue;
        for (int r = 0; r < g.rows(); ++r) g.at(r, c) = f->sub(g.at(r, c), f->mul(coef, v[r]));
    }
}

}  // namespace

int spinor_norm_of(const FormSpec& form, const Mat& g) {
    if (form.kind != FormKind::Symmetric) throw std::domain_error("spinor norm needs an odd-char symmetric form");
    const SmallField* f = form.field;
    const int n = form.dim();
    Mat work = g;
    // subspace basis, shrinking as vectors get fixed
    std::vector<std::vector<uint16_t>> basis;
    for (int i = 0; i < n; ++i) {
        std::vector<uint16_t> e(n, 0);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    std::vector<std::vector<uint16_t>> used;
    int guard = 0;
    while (!basis.empty()) {
        if (++guard > 4 * n + 8) throw std::logic_error("spinor norm: factorization failure");
        // does work fix the whole current subspace?
        auto moved = [&](const std::vector<uint16_t>& v) { return mat_apply(work, v) != v; };
        bool any_moved = false;
        for (auto& b : basis)
            if (moved(b)) {
                any_moved = true;
                break;
            }
        if (!any_moved) break;
        auto wopt = find_anisotropic(form, basis, moved);
        if (!wopt) throw std::logic_error("spinor norm: no anisotropic moved vector");
        const auto& w = *wopt;
        auto gw = mat_apply(work, w);
        auto u = sub_vec(form, gw, w);
        if (form.quadratic(u) != 0) {
            apply_reflection(form, u, work);
            used.push_back(u);
        } else {
            auto u2 = add_vec(form, gw, w);
            apply_reflection(form, u2, work);
            apply_reflection(form, w, work);
            used.push_back(u2);
            used.push_back(w);
        }
        // shrink the subspace to w-perp within the current one
        std::vector<std::vector<uint16_t>> next;
        std::vector<uint16_t>* pivot = nullptr;
        std::vector<std::vector<uint16_t>> updated;
        for (auto& b : basis) {
            // project b to w-perp: b - f(b,w)/f(w,w) w ... f(w,w) = 2Q(w) != 0
            uint16_t fw = form.bilinear(b, w);
            if (!fw) {
                updated.push_back(b);
                continue;
            }
            uint16_t coef = f->mul(fw, f->inv(form.bilinear(w, w)));
            std::vector<uint16_t> nb(b.size());
            for (size_t i = 0; i < b.size(); ++i) nb[i] = f->sub(b[i], f->mul(coef, w[i]));
            bool zero = true;
            for (auto x : nb)
                if (x) zero = false;
            if (!zero) updated.push_back(std::move(nb));
        }
        (void)pivot;
        // re-echelonize to keep an independent spanning set of w-perp ∩ span
        Mat m(f, static_cast<int>(updated.size()), n);
        for (size_t i = 0; i < updated.size(); ++i)
            for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = updated[i][j];
        auto piv = m.rref();
        next.clear();
        for (size_t r = 0; r < piv.size(); ++r) {
            std::vector<uint16_t> row(n);
            for (int j = 0; j < n; ++j) row[j] = m.at(static_cast<int>(r), j);
            next.push_back(std::move(row));
        }
        basis = std::move(next);
    }
    if (!work.is_identity()) {
        // the remainder fixes the scanned flag only if g was an isometry
        throw std::logic_error("spinor norm: residual is not the identity (non-isometry input?)");
    }
    int cls = 1;
    for (auto& v : used) cls *= square_class(f, form.quadratic(v));
    return cls;
}

int dickson_invariant_of(const Mat& g) {
    Mat diff = g - Mat::identity(g.fld(), g.rows());
    return diff.rank() % 2;
}

int witt_type(const FormSpec& form) {
    const SmallField* f = form.field;
    const int n = form.dim();
    if (n % 2) throw std::domain_error("witt_type: even dimension required");
    if (form.kind == FormKind::Symmetric) {
        // type + iff disc = (-1)^{n/2} times a square
        uint16_t det = form.gram.det();
        if (!det) throw std::domain_error("witt_type: degenerate form");
        int sign = square_class(f, det);
        int target = (n / 2) % 2 == 0 ? 1 : square_class(f, f->neg(1)) * 1;
        // disc(plus type) = (-1)^{n/2} mod squares
        uint16_t want = 1;
        for (int i = 0; i < n / 2; ++i) want = f->mul(want, f->neg(1));
        int wsign = square_class(f, want);
        (void)target;
        return sign == wsign ? +1 : -1;
    }
    if (form.kind == FormKind::Quadratic2) {
        // count isotropic vectors: #{v : Q(v) = 0} = q^{n-1} + (eps) (q^{n/2} - q^{n/2 - 1})
        // For the dimensions we use (n <= 12, q <= 8 in char 2) the direct count
        // is affordable only for small q^n; use the Arf invariant instead:
        // reduce to a symplectic basis and accumulate Q(e_i) Q(f_i).
        // Constructive symplectic basis for the polarization:
        std::vector<std::vector<uint16_t>> rows;
        for (int i = 0; i < n; ++i) {
            std::vector<uint16_t> e(n, 0);
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        uint16_t arf = 0;
        std::vector<std::vector<uint16_t>> rem = rows;
        while (!rem.empty()) {
            // pick u = rem[0]; find v with f(u,v) != 0
            auto u = rem[0];
            int vi = -1;
            for (size_t i = 1; i < rem.size(); ++i)
                if (form.bilinear(u, rem[i]) != 0) {
                    vi = static_cast<int>(i);
                    break;
                }
            if (vi < 0) throw std::domain_error("witt_type: degenerate polarization");
            auto v = rem[vi];
            uint16_t fuv = form.bilinear(u, v);
            uint16_t inv = f->inv(fuv);
            for (auto& x : v) x = f->mul(x, inv);  // f(u,v) = 1
            arf = f->add(arf, f->mul(form.quadratic(u), form.quadratic(v)));
            // project remaining onto the perp of <u, v>
            std::vector<std::vector<uint16_t>> nxt;
            for (size_t i = 1; i < rem.size(); ++i) {
                if (static_cast<int>(i) == vi) continue;
                auto w = rem[i];
                uint16_t a = form.bilinear(w, v);  // coefficient of u
                uint16_t b = form.bilinear(w, u);  // coefficient of v (note alternating)
                for (size_t t = 0; t < w.size(); ++t)
                    w[t] = f->add(w[t], f->add(f->mul(a, u[t]), f->mul(b, v[t])));
                nxt.push_back(std::move(w));
            }
            rem = std::move(nxt);
        }
        // type - iff Arf has nonzero absolute trace to F_2
        ff::FieldElement a = f->F->from_code(arf);
        ff::FieldElement tr = f->F->trace_to_subfield(a, 1);
        return tr.is_zero() ? +1 : -1;
    }
    throw std::domain_error("witt_type: unsupported form kind");
}

namespace {

// Orthogonal-diagonalize an odd-char symmetric gram; returns basis rows (in
// original coordinates) with pairwise f(b_i, b_j) = 0 and the diagonal values.
void diagonalize_symmetric(const FormSpec& form, std::vector<std::vector<uint16_t>>& basis,
                           std::vector<uint16_t>& diag) {
    const SmallField* f = form.field;
    const int n = form.dim();
    std::vector<std::vector<uint16_t>> rem;
    for (int i = 0; i < n; ++i) {
        std::vector<uint16_t> e(n, 0);
        e[i] = 1;
        rem.push_back(std::move(e));
    }
    basis.clear();
    diag.clear();
    while (!rem.empty()) {
        auto always = [](const std::vector<uint16_t>&) { return true; };
        auto w = find_anisotropic(form, rem, always);
        if (!w) throw std::domain_error("diagonalize: totally isotropic remainder (degenerate form)");
        basis.push_back(*w);
        diag.push_back(form.quadratic(*w));
        uint16_t fww = form.bilinear(*w, *w);
        uint16_t inv = f->inv(fww);
        std::vector<std::vector<uint16_t>> nxt;
        Mat m(f, static_cast<int>(rem.size()), n);
        int cnt = 0;
        for (auto& b : rem) {
            uint16_t c = f->mul(form.bilinear(b, *w), inv);
            std::vector<uint16_t> nb(n);
            for (int t = 0; t < n; ++t) nb[t] = f->sub(b[t], f->mul(c, (*w)[t]));
            for (int t = 0; t < n; ++t) m.at(cnt, t) = nb[t];
            ++cnt;
        }
        auto piv = m.rref();
        for (size_t r = 0; r < piv.size(); ++r) {
            std::vector<uint16_t> row(n);
            for (int t = 0; t < n; ++t) row[t] = m.at(static_cast<int>(r), t);
            nxt.push_back(std::move(row));
        }
        rem = std::move(nxt);
    }
}

// Solve a x^2 + b y^2 = c with a, b, c nonzero (odd char, always solvable).
std::pair<uint16_t, uint16_t> represent2(const SmallField* f, uint16_t a, uint16_t b, uint16_t c) {
    for (uint32_t x = 0; x < f->q; ++x) {
        uint16_t rest = f->sub(c, f->mul(a, f->mul(static_cast<uint16_t>(x), static_cast<uint16_t>(x))));
        // need rest / b a square
        if (!rest) return {static_cast<uint16_t>(x), 0};
        uint16_t t = f->mul(rest, f->inv(b));
        if (square_class(f, t) == 1) {
            // find sqrt by scan (fields are tiny)
            for (uint32_t y = 0; y < f->q; ++y)
                if (f->mul(static_cast<uint16_t>(y), static_cast<uint16_t>(y)) == t)
                    return {static_cast<uint16_t>(x), static_cast<uint16_t>(y)};
        }
    }
    throw std::logic_error("represent2: no representation found");
}

}  // namespace

ff::Mat change_of_basis(const FormSpec& src, const FormSpec& dst) {
    const SmallField* f = src.field;
    const int n = src.dim();
    if (dst.dim() != n || dst.field != f || dst.kind != src.kind)
        throw std::domain_error("change_of_basis: incompatible forms");

    auto cols_to_mat = [&](const std::vector<std::vector<uint16_t>>& cols) {
        Mat p(f, n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) p.at(i, j) = cols[j][i];
        return p;
    };

    if (src.kind == FormKind::Symplectic) {
        // symplectic basis for each; map one to the other
        auto sym_basis = [&](const FormSpec& form) {
            std::vector<std::vector<uint16_t>> rem;
            for (int i = 0; i < n; ++i) {
                std::vector<uint16_t> e(n, 0);
                e[i] = 1;
                rem.push_back(std::move(e));
            }
            std::vector<std::vector<uint16_t>> es, fs;
            while (!rem.empty()) {
                auto u = rem[0];
                int vi = -1;
                for (size_t i = 1; i < rem.size(); ++i)
                    if (form.bilinear(u, rem[i]) != 0) {
                        vi = static_cast<int>(i);
                        break;
                    }
                if (vi < 0) throw std::domain_error("symplectic basis: degenerate form");
                auto v = rem[vi];
                uint16_t inv = f->inv(form.bilinear(u, v));
                for (auto& x : v) x = f->mul(x, inv);
                es.push_back(u);
                fs.push_back(v);
                std::vector<std::vector<uint16_t>> nxt;
                for (size_t i = 1; i < rem.size(); ++i) {
                    if (static_cast<int>(i) == vi) continue;
                    auto w = rem[i];
                    uint16_t a = form.bilinear(w, v);
                    uint16_t b = form.bilinear(w, u);
                    uint16_t binv = form.bilinear(u, v);
                    (void)binv;
                    // w -> w - f(w,v)/f(u,v) u + f(w,u)/f(u,v) v with f(u,v)=1
                    for (size_t t = 0; t < w.size(); ++t)
                        w[t] = f->add(f->sub(w[t], f->mul(a, u[t])), f->mul(b, v[t]));
                    bool zero = true;
                    for (auto x : w)
                        if (x) zero = false;
                    if (!zero) nxt.push_back(std::move(w));
                }
                // re-reduce for independence
                Mat m(f, static_cast<int>(nxt.size()), n);
                for (size_t i = 0; i < nxt.size(); ++i)
                    for (int t = 0; t < n; ++t) m.at(static_cast<int>(i), t) = nxt[i][t];
                auto piv = m.rref();
                rem.clear();
                for (size_t r = 0; r < piv.size(); ++r) {
                    std::vector<uint16_t> row(n);
                    for (int t = 0; t < n; ++t) row[t] = m.at(static_cast<int>(r), t);
                    rem.push_back(std::move(row));
                }
            }
            // order e1..em, f m..f1 to match the standard antidiagonal shape
            std::vector<std::vector<uint16_t>> cols;
            for (auto& e : es) cols.push_back(e);
            for (size_t i = fs.size(); i-- > 0;) cols.push_back(fs[i]);
            return cols;
        };
        Mat ps = cols_to_mat(sym_basis(src));
        Mat pd = cols_to_mat(sym_basis(dst));
        // ps^T src ps = J0 = pd^T dst pd  =>  P = pd ps^{-1} ... we need
        // P^T dst P = src: take P = pd * ps^{-1}; then
        // P^T dst P = ps^{-T} (pd^T dst pd) ps^{-1} = ps^{-T} J0 ps^{-1} = src. ✓
        return pd * ps.inverse();
    }

    if (src.kind == FormKind::Symmetric) {
        // diagonalize both, normalize diagonals to (1,...,1,d) with d in {1, nu}
        auto normal_basis = [&](const FormSpec& form) -> std::pair<std::vector<std::vector<uint16_t>>, uint16_t> {
            std::vector<std::vector<uint16_t>> basis;
            std::vector<uint16_t> diag;
            diagonalize_symmetric(form, basis, diag);
            // sweep: make leading entries 1 by pairing off square parts
            for (size_t i = 0; i + 1 < basis.size(); ++i) {
                if (square_class(f, diag[i]) == 1) {
                    // scale to exactly 1
                    uint16_t s = 0;
                    for (uint32_t y = 1; y < f->q; ++y)
                        if (f->mul(static_cast<uint16_t>(y), static_cast<uint16_t>(y)) == f->inv(diag[i])) {
                            s = static_cast<uint16_t>(y);
                            break;
                        }
                    for (auto& x : basis[i]) x = f->mul(x, s);
                    diag[i] = 1;
                    continue;
                }
                // diag[i] nonsquare: find (x,y) with diag[i] x^2 + diag[i+1] y^2 = 1
                auto [x, y] = represent2(f, diag[i], diag[i + 1], 1);
                // new vector v = x b_i + y b_{i+1} has Q = 1/?: f(v,v)/2 = ...
                std::vector<uint16_t> v(basis[i].size());
                for (size_t t = 0; t < v.size(); ++t)
                    v[t] = f->add(f->mul(x, basis[i][t]), f->mul(y, basis[i + 1][t]));
                // complete the 2-space <b_i, b_{i+1}> with the orthogonal complement of v
                // w = diag[i+1] y b_i - diag[i] x b_{i+1} is orthogonal to v
                std::vector<uint16_t> w(basis[i].size());
                for (size_t t = 0; t < w.size(); ++t)
                    w[t] = f->sub(f->mul(f->mul(diag[i + 1], y), basis[i][t]),
                                  f->mul(f->mul(diag[i], x), basis[i + 1][t]));
                basis[i] = v;
                basis[i + 1] = w;
                diag[i] = 1;
                diag[i + 1] = form.quadratic(w);
                if (!diag[i + 1]) throw std::logic_error("normal_basis: degenerate after sweep");
            }
            // scale the last one to 1 if square
            size_t last = basis.size() - 1;
            if (square_class(f, diag[last]) == 1) {
                uint16_t s = 0;
                for (uint32_t y2 = 1; y2 < f->q; ++y2)
                    if (f->mul(static_cast<uint16_t>(y2), static_cast<uint16_t>(y2)) == f->inv(diag[last])) {
                        s = static_cast<uint16_t>(y2);
                        break;
                    }
                for (auto& x2 : basis[last]) x2 = f->mul(x2, s);
                diag[last] = 1;
            } else {
                // normalize the nonsquare to the canonical least nonsquare
                uint16_t nu = 0;
                for (uint32_t c = 2; c < f->q; ++c)
                    if (square_class(f, static_cast<uint16_t>(c)) == -1) {
                        nu = static_cast<uint16_t>(c);
                        break;
                    }
                // want Q(s v) = nu: s^2 diag = nu -> s^2 = nu/diag (a square since both nonsquare)
                uint16_t t = f->mul(nu, f->inv(diag[last]));
                uint16_t s = 0;
                for (uint32_t y2 = 1; y2 < f->q; ++y2)
                    if (f->mul(static_cast<uint16_t>(y2), static_cast<uint16_t>(y2)) == t) {
                        s = static_cast<uint16_t>(y2);
                        break;
                    }
                for (auto& x2 : basis[last]) x2 = f->mul(x2, s);
                diag[last] = nu;
            }
            return {basis, diag[last]};
        };
        auto [bs, ds] = normal_basis(src);
        auto [bd, dd] = normal_basis(dst);
        if (ds != dd) throw std::domain_error("change_of_basis: inequivalent symmetric forms");
        // The Q-values above are f(v,v)/2; both sides normalized identically.
        Mat ps = cols_to_mat(bs), pd = cols_to_mat(bd);
        return pd * ps.inverse();
    }

    if (src.kind == FormKind::Hermitian) {
        // hermitian Gram-Schmidt to orthonormal basis on both sides
        auto unit_basis = [&](const FormSpec& form) {
            std::vector<std::vector<uint16_t>> rem;
            for (int i = 0; i < n; ++i) {
                std::vector<uint16_t> e(n, 0);
                e[i] = 1;
                rem.push_back(std::move(e));
            }
            std::vector<std::vector<uint16_t>> basis;
            while (!rem.empty()) {
                auto always = [](const std::vector<uint16_t>&) { return true; };
                auto w = find_anisotropic(form, rem, always);
                if (!w) throw std::domain_error("hermitian basis: degenerate form");
                // scale to norm 1: f(w,w) = d in F_q; find c with c^{q+1} = d^{-1}
                uint16_t d = form.bilinear(*w, *w);
                uint16_t target = f->inv(d);
                uint16_t c = 0;
                uint64_t qq = 1;
                for (int i2 = 0; i2 < form.frob_steps; ++i2) qq *= static_cast<uint64_t>(f->p);
                for (uint32_t cand = 1; cand < f->q; ++cand) {
                    if (f->mul(static_cast<uint16_t>(cand), form.conj(static_cast<uint16_t>(cand))) == target) {
                        c = static_cast<uint16_t>(cand);
                        break;
                    }
                }
                (void)qq;
                if (!c) throw std::logic_error("hermitian basis: norm equation unsolvable");
                auto v = *w;
                for (auto& x : v) x = f->mul(x, c);
                basis.push_back(v);
                // project remainder to v-perp
                std::vector<std::vector<uint16_t>> nxt;
                Mat m(f, static_cast<int>(rem.size()), n);
                int cnt = 0;
                for (auto& b : rem) {
                    uint16_t coef = form.bilinear(b, v);  // f(v,v) = 1
                    std::vector<uint16_t> nb(n);
                    for (int t = 0; t < n; ++t) nb[t] = f->sub(b[t], f->mul(coef, v[t]));
                    for (int t = 0; t < n; ++t) m.at(cnt, t) = nb[t];
                    ++cnt;
                }
                auto piv = m.rref();
                for (size_t r = 0; r < piv.size(); ++r) {
                    std::vector<uint16_t> row(n);
                    for (int t = 0; t < n; ++t) row[t] = m.at(static_cast<int>(r), t);
                    nxt.push_back(std::move(row));
                }
                rem = std::move(nxt);
            }
            return basis;
        };
        Mat ps = cols_to_mat(unit_basis(src));
        Mat pd = cols_to_mat(unit_basis(dst));
        return pd * ps.inverse();
    }

    if (src.kind == FormKind::Quadratic2) {
        // hyperbolic/Arf normal basis on both sides
        auto q2_basis = [&](const FormSpec& form) -> std::pair<std::vector<std::vector<uint16_t>>, int> {
            std::vector<std::vector<uint16_t>> rem;
            for (int i = 0; i < n; ++i) {
                std::vector<uint16_t> e(n, 0);
                e[i] = 1;
                rem.push_back(std::move(e));
            }
            std::vector<std::pair<std::vector<uint16_t>, std::vector<uint16_t>>> pairs;
            while (!rem.empty()) {
                auto u = rem[0];
                int vi = -1;
                for (size_t i = 1; i < rem.size(); ++i)
                    if (form.bilinear(u, rem[i]) != 0) {
                        vi = static_cast<int>(i);
                        break;
                    }
                if (vi < 0) throw std::domain_error("quadratic basis: degenerate polarization");
                auto v = rem[vi];
                uint16_t inv = f->inv(form.bilinear(u, v));
                for (auto& x : v) x = f->mul(x, inv);
                // make Q(u) = 0 if possible: if Q(u) != 0 and Q(v) != 0, try u' = u + t v
                // Q(u + t v) = Q(u) + t^2 Q(v) + t f(u,v) = Q(u) + t^2 Q(v) + t
                auto qu = form.quadratic(u);
                if (qu) {
                    for (uint32_t t = 0; t < f->q; ++t) {
                        uint16_t val = f->add(qu, f->add(f->mul(f->mul(static_cast<uint16_t>(t), static_cast<uint16_t>(t)),
                                                                form.quadratic(v)),
                                                         static_cast<uint16_t>(t)));
                        if (!val) {
                            for (size_t s = 0; s < u.size(); ++s)
                                u[s] = f->add(u[s], f->mul(static_cast<uint16_t>(t), v[s]));
                            break;
                        }
                    }
                }
                if (!form.quadratic(u)) {
                    // now clear Q(v): v' = v + s u keeps f(u,v') = 1, Q(v') = Q(v) + s
                    uint16_t qv = form.quadratic(v);
                    if (qv)
                        for (size_t s2 = 0; s2 < v.size(); ++s2) v[s2] = f->add(v[s2], f->mul(qv, u[s2]));
                }
                pairs.push_back({u, v});
                std::vector<std::vector<uint16_t>> nxt;
                for (size_t i = 1; i < rem.size(); ++i) {
                    if (static_cast<int>(i) == vi) continue;
                    auto w = rem[i];
                    uint16_t a = form.bilinear(w, v);
                    uint16_t b = form.bilinear(w, u);
                    for (size_t t = 0; t < w.size(); ++t)
                        w[t] = f->add(f->add(w[t], f->mul(a, u[t])), f->mul(b, v[t]));
                    nxt.push_back(std::move(w));
                }
                Mat m(f, static_cast<int>(nxt.size()), n);
                for (size_t i = 0; i < nxt.size(); ++i)
                    for (int t = 0; t < n; ++t) m.at(static_cast<int>(i), t) = nxt[i][t];
                auto piv = m.rref();
                rem.clear();
                for (size_t r = 0; r < piv.size(); ++r) {
                    std::vector<uint16_t> row(n);
                    for (int t = 0; t < n; ++t) row[t] = m.at(static_cast<int>(r), t);
                    rem.push_back(std::move(row));
                }
            }
            // all but possibly one pair are hyperbolic now; count anisotropic pairs
            // and push the non-hyperbolic pair (if any) to the center position.
            std::vector<std::pair<std::vector<uint16_t>, std::vector<uint16_t>>> hyp, aniso;
            for (auto& pr : pairs) {
                if (!form.quadratic(pr.first) && !form.quadratic(pr.second))
                    hyp.push_back(pr);
                else
                    aniso.push_back(pr);
            }
            if (aniso.size() > 1) {
                // Combine two anisotropic planes into hyperbolic + anisotropic:
                // fall back to an exhaustive search for an isotropic vector in
                // their 4-dim span and redo the reduction there.
                throw std::logic_error("quadratic basis: unexpected multiple anisotropic planes");
            }
            std::vector<std::vector<uint16_t>> cols;
            for (auto& pr : hyp) cols.push_back(pr.first);
            if (!aniso.empty()) {
                cols.push_back(aniso[0].first);
                cols.push_back(aniso[0].second);
            }
            for (size_t i = hyp.size(); i-- > 0;) cols.push_back(hyp[i].second);
            return {cols, aniso.empty() ? +1 : -1};
        };
        auto [bs, ts] = q2_basis(src);
        auto [bd, td] = q2_basis(dst);
        if (ts != td) throw std::domain_error("change_of_basis: inequivalent quadratic forms");
        if (ts == -1) {
            // normalize the central anisotropic planes to the same (1, nu) shape:
            // both are anisotropic with f(u,v) = 1; Q(u)x^2 + xy + Q(v)y^2.
            // Scale u' = c u, v' = c^{-1} v: Q -> c^2 Q(u), c^{-2} Q(v). Search
            // (c, t-shears) mapping to Q(u)=1; then Q(v) is determined up to
            // Artin-Schreier equivalence; match by a final shear search.
            auto fix_center = [&](std::vector<std::vector<uint16_t>>& cols, const FormSpec& form) {
                size_t a = cols.size() / 2 - 1, b = cols.size() / 2;
                auto &u = cols[a], &v = cols[b];
                // make Q(u) = 1 by scaling u (and v to keep f = 1)
                uint16_t qu = form.quadratic(u);
                // need c^2 qu = 1 -> c = sqrt(qu)^{-1}; squares are bijective in char 2
                uint16_t c = qu;
                for (int i = 0; i < form.field->k * 1 - 1; ++i) c = form.field->mul(c, c);
                // c = qu^{2^{k-1}} = sqrt(qu); want inverse
                c = form.field->inv(c);
                for (auto& x : u) x = form.field->mul(x, c);
                uint16_t cinv = form.field->inv(c);
                for (auto& x : v) x = form.field->mul(x, cinv);
            };
            fix_center(bs, src);
            fix_center(bd, dst);
            // Now Q(u)=1 on both; Q(v) values nu1, nu2 both give anisotropic
            // x^2+xy+nu y^2 and nu1 + nu2 must be of the form t^2 + t (same Arf
            // class); shear v' = v + t u fixes it.
            size_t a = bs.size() / 2 - 1, b = bs.size() / 2;
            uint16_t nu_s = src.quadratic(bs[b]);
            uint16_t nu_d = dst.quadratic(bd[b]);
            const SmallField* f2 = f;
            bool fixed = false;
            for (uint32_t t = 0; t < f2->q && !fixed; ++t) {
                uint16_t tt = static_cast<uint16_t>(t);
                // Q_dst(v + t u) = nu_d + t^2 + t
                uint16_t val = f2->add(nu_d, f2->add(f2->mul(tt, tt), tt));
                if (val == nu_s) {
                    for (size_t s2 = 0; s2 < bd[b].size(); ++s2)
                        bd[b][s2] = f2->add(bd[b][s2], f2->mul(tt, bd[a][s2]));
                    fixed = true;
                }
            }
            if (!fixed) throw std::domain_error("change_of_basis: quadratic forms of different Arf class");
        }
        Mat ps = cols_to_mat(bs), pd = cols_to_mat(bd);
        return pd * ps.inverse();
    }
    throw std::domain_error("change_of_basis: unsupported form kind");
}

}  // namespace wordmap::classical
