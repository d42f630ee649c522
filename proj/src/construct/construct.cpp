#include "construct/construct.hpp"

#include <sstream>

#include "classical/form.hpp"

namespace wordmap::construct {

using classical::change_of_basis;
using classical::FormKind;
using classical::FormSpec;
using classical::square_class;
using ff::Field;
using ff::FieldElement;
using ff::Mat;
using ff::SmallField;

namespace {

struct Block {
    Mat m;
    FormSpec form;  // form the block preserves (kind None for GL/GU pieces)
};

int64_t two_part(int64_t x) {
    int64_t t = 1;
    while (x % 2 == 0) {
        x /= 2;
        t *= 2;
    }
    return t;
}

// gamma in F_{q^{2^m}} of order (q^{2^m}-1)_2, as the exponent-least power of
// the canonical generator.
FieldElement gamma_element(int64_t p, int f, int m) {
    Field ext = ff::field(p, f << m);
    uint64_t full = ext->size - 1;
    int64_t tp = two_part(static_cast<int64_t>(full));
    FieldElement g = ext->gen();
    return g.pow(full / static_cast<uint64_t>(tp));
}

// minimal polynomial of x over the subfield F_{p^d} (coefficients projected).
ff::Poly minpoly_over(const FieldElement& x, int d) {
    const Field& E = x.fld();
    ff::Poly prod = ff::Poly::one(E);
    FieldElement cur = x;
    uint64_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= static_cast<uint64_t>(E->p);
    std::vector<FieldElement> orbit;
    do {
        orbit.push_back(cur);
        cur = cur.pow(pd);
    } while (!(cur == x));
    for (auto& r : orbit) {
        ff::Poly lin(E, {-r, E->one()});
        prod = prod * lin;
    }
    // project to the subfield
    Field sub = ff::field(E->p, d);
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= prod.degree(); ++i) coeffs.push_back(E->project_to_subfield(prod.coeff(i), d));
    return ff::Poly(sub, coeffs);
}

Mat companion(const SmallField* f, const ff::Poly& monic) {
    int d = monic.degree();
    Mat c(f, d, d);
    for (int i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = f->neg(static_cast<uint16_t>(monic.coeff(i).code()));
    return c;
}

Mat antidiag_K(const SmallField* f, int m) {
    Mat k(f, m, m);
    for (int i = 0; i < m; ++i) k.at(i, m - 1 - i) = 1;
    return k;
}

// diag(A, K A^{-T} K) preserves the all-antidiagonal bilinear gram (+ type)
// and the corresponding symplectic/hermitian variants.
Mat hyperbolic_embed(const Mat& a, int frob_steps_for_conj = 0) {
    const SmallField* f = a.fld();
    int m = a.rows();
    Mat k = antidiag_K(f, m);
    Mat lower = a;
    if (frob_steps_for_conj) lower = lower.entrywise_frob(frob_steps_for_conj);
    lower = k * lower.inverse().transpose() * k;
    Mat out(f, 2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            out.at(i, j) = a.at(i, j);
            out.at(m + i, m + j) = lower.at(i, j);
        }
    return out;
}

// ----- GL/GU base blocks -----

// s_m in GL^eps_{2^m}(q): eigenvalues gamma^{(eps q)^i}, all of order
// (q^{2^m}-1)_2.
Mat base_block_glu(const ClassicalGroupSpec& spec, int m) {
    int64_t p = spec.mf->p;
    int f = spec.unitary() ? spec.mf->k / 2 : spec.mf->k;
    if (spec.eps == +1) {
        FieldElement gamma = gamma_element(p, f, m);
        ff::Poly mp = minpoly_over(gamma, f);
        if (mp.degree() != (1 << m)) throw std::logic_error("base_block_glu: wrong minimal polynomial degree");
        return companion(spec.mf, mp);
    }
    // eps = -1: A = companion of minpoly over F_{q^2} (degree 2^{m-1}),
    // embedded as diag(A, K conj(A)^{-T} K) w.r.t. the antidiagonal hermitian
    // gram, then moved to the identity-gram model.
    FieldElement gamma = gamma_element(p, f, m);
    ff::Poly mp = minpoly_over(gamma, 2 * f);
    if (mp.degree() != (1 << (m - 1))) throw std::logic_error("base_block_glu: wrong GU minimal polynomial degree");
    Mat a = companion(spec.mf, mp);
    Mat em = hyperbolic_embed(a, f);
    int n = 1 << m;
    FormSpec jform;
    jform.kind = FormKind::Hermitian;
    jform.field = spec.mf;
    jform.frob_steps = f;
    jform.gram = Mat(spec.mf, n, n);
    for (int i = 0; i < n; ++i) jform.gram.at(i, n - 1 - i) = 1;
    if (!jform.preserves(em)) throw std::logic_error("base_block_glu: embed is not an isometry");
    FormSpec iform = classical::standard_hermitian(spec.mf, n, f);
    Mat pmat = change_of_basis(jform, iform);
    return pmat * em * pmat.inverse();
}

// s_2(delta) in GL^eps_2(q).
Mat s2_block(const ClassicalGroupSpec& spec, const FieldElement& delta) {
    const SmallField* mf = spec.mf;
    int64_t q = spec.q;
    if (!delta.is_one()) {
        Mat m(mf, 2, 2);
        m.at(0, 0) = 1;
        m.at(1, 1) = static_cast<uint16_t>(delta.code());
        return m;
    }
    if (spec.eps == +1) {
        if (q % 4 == 1) {
            // i in F_q
            uint16_t i4 = mf->pow(mf->gen_code, static_cast<uint64_t>((q - 1) / 4));
            Mat m(mf, 2, 2);
            m.at(0, 0) = i4;
            m.at(1, 1) = mf->inv(i4);
            return m;
        }
        Mat m(mf, 2, 2);
        m.at(0, 1) = mf->neg(1);
        m.at(1, 0) = 1;
        return m;
    }
    // SU_2(q) w.r.t. the identity gram: [[a, -conj(b)],[b, conj(a)]] with
    // trace 0 and N(a) + N(b) = 1; such an element squares to -I.
    int f = mf->k / 2;
    for (uint32_t a = 0; a < mf->q; ++a) {
        uint16_t ac = static_cast<uint16_t>(a);
        if (mf->add(ac, mf->frob_iter(ac, f)) != 0) continue;
        uint16_t na = mf->mul(ac, mf->frob_iter(ac, f));
        for (uint32_t b = 0; b < mf->q; ++b) {
            uint16_t bc = static_cast<uint16_t>(b);
            uint16_t nb = mf->mul(bc, mf->frob_iter(bc, f));
            if (mf->add(na, nb) != 1) continue;
            Mat m(mf, 2, 2);
            m.at(0, 0) = ac;
            m.at(0, 1) = mf->neg(mf->frob_iter(bc, f));
            m.at(1, 0) = bc;
            m.at(1, 1) = mf->frob_iter(ac, f);
            if (m.order(16) == 4) return m;
        }
    }
    throw std::logic_error("s2_block: no order-4 torus element found");
}

std::vector<int> binary_exponents(int n) {  // descending
    std::vector<int> out;
    for (int b = 30; b >= 0; --b)
        if (n & (1 << b)) out.push_back(b);
    return out;
}

}  // namespace

std::vector<FieldElement> glu_deltas(int64_t q, int eps) {
    for (int64_t pp : prime_factors_distinct(q)) {
        int f = 0;
        int64_t v = q;
        while (v > 1) {
            v /= pp;
            ++f;
        }
        Field F = eps == +1 ? ff::field(pp, f) : ff::field(pp, 2 * f);
        int64_t target = eps == +1 ? q - 1 : q + 1;
        int64_t t2 = two_part(target);
        FieldElement root = F->gen().pow(static_cast<uint64_t>((F->size - 1) / t2));
        std::vector<FieldElement> out;
        FieldElement cur = F->one();
        for (int64_t i = 0; i < t2; ++i) {
            out.push_back(cur);
            cur = cur * root;
        }
        return out;
    }
    throw std::domain_error("glu_deltas: bad q");
}

Construction construct_glu_2element(int n, int64_t q, int eps, const FieldElement& delta) {
    if (q % 2 == 0) throw std::domain_error("construct_glu_2element: q must be odd");
    if (n < 1) throw std::domain_error("construct_glu_2element: n must be >= 1");
    ClassicalGroupSpec spec = classical::build_group(eps == +1 ? Family::GL : Family::GU, n, q);
    const SmallField* mf = spec.mf;
    // delta must be a 2-element of mu_{q-eps}
    FieldElement d = delta;
    if (d.fld()->p != mf->p || d.fld()->k != mf->k) throw std::domain_error("delta lives in the wrong field");
    if (!d.pow(static_cast<uint64_t>(eps == 1 ? q - 1 : q + 1)).is_one())
        throw std::domain_error("delta is not in mu_{q-eps}");
    {
        uint64_t o = d.is_one() ? 1 : d.order();
        while (o % 2 == 0) o /= 2;
        if (o != 1) throw std::domain_error("delta is not a 2-element");
    }

    std::vector<Mat> blocks;
    std::ostringstream desc;
    FieldElement alpha_needed = d;
    auto det_of = [&](const Mat& m) { return mf->F->from_code(m.det()); };

    if (n == 1) {
        Mat m(mf, 1, 1);
        m.at(0, 0) = static_cast<uint16_t>(d.code());
        blocks.push_back(m);
        desc << "s_1(delta)";
    } else if (n % 2 == 1) {
        auto ms = binary_exponents(n - 1);
        for (int m : ms) {
            Mat b = base_block_glu(spec, m);
            alpha_needed = alpha_needed * det_of(b).inv();
            blocks.push_back(b);
        }
        Mat last(mf, 1, 1);
        last.at(0, 0) = static_cast<uint16_t>(alpha_needed.code());
        blocks.push_back(last);
        desc << "odd case: base blocks + 1x1 alpha";
    } else {
        auto ms = binary_exponents(n);
        int mt = ms.back();
        std::vector<int> sizes(ms.begin(), ms.end() - 1);
        if (mt == 1) {
            // trailing s_2(alpha)
        } else {
            for (int a = mt - 1; a >= 1; --a) sizes.push_back(a);
        }
        for (int m : sizes) {
            Mat b = base_block_glu(spec, m);
            alpha_needed = alpha_needed * det_of(b).inv();
            blocks.push_back(b);
        }
        Mat s2 = s2_block(spec, alpha_needed);
        blocks.push_back(s2);
        desc << "even case (m_t = " << mt << "): base blocks + s_2(alpha)";
    }

    Mat assembled = ff::block_diag(blocks);
    // determinant composition law, rechecked exactly
    FieldElement detprod = mf->F->one();
    for (auto& b : blocks) detprod = detprod * det_of(b);
    if (!(det_of(assembled) == detprod)) throw std::logic_error("block determinant composition failed");

    Construction c{spec, assembled, Certificate{}, desc.str()};
    c.cert.order = assembled.order(1 << 20);
    c.cert.det = d;
    return c;
}

Construction construct_sp_2element(int n, int64_t q) {
    if (q % 2 == 0) throw std::domain_error("construct_sp_2element: q must be odd");
    if (n < 1) throw std::domain_error("construct_sp_2element: n must be >= 1");
    ClassicalGroupSpec spec = classical::build_group(Family::Sp, 2 * n, q);
    const SmallField* mf = spec.mf;
    ClassicalGroupSpec glspec = classical::build_group(Family::GL, 1, q);  // for gamma fields
    (void)glspec;

    std::vector<Block> blocks;
    auto sp_base = [&](int m) {
        // A = companion of minpoly of gamma over F_q (degree 2^m), embedded in
        // Sp_{2^{m+1}} w.r.t. the standard antidiagonal symplectic gram.
        FieldElement gamma = gamma_element(mf->p, mf->k, m);
        ff::Poly mp = minpoly_over(gamma, mf->k);
        if (mp.degree() != (1 << m)) throw std::logic_error("sp base: wrong degree");
        Mat a = companion(mf, mp);
        Mat em = hyperbolic_embed(a);
        FormSpec form = classical::standard_symplectic(mf, 2 << m);
        if (!form.preserves(em)) throw std::logic_error("sp base: embed not symplectic");
        return Block{em, form};
    };

    auto ms = binary_exponents(n);
    int mt = ms.back();
    std::ostringstream desc;
    if (mt >= 1) {
        for (int m : ms) blocks.push_back(sp_base(m));
        desc << "blocks s_m for the binary expansion";
    } else {
        for (size_t i = 0; i + 1 < ms.size(); ++i) blocks.push_back(sp_base(ms[i]));
        // trailing s_2(1) in Sp_2(q)
        ClassicalGroupSpec sl2 = classical::build_group(Family::SL, 2, q);
        Mat s2 = s2_block(sl2, mf->F->one());
        blocks.push_back(Block{s2, classical::standard_symplectic(mf, 2)});
        desc << "blocks s_m plus s_2(1) for the trailing 1";
    }

    // assemble: direct sum, then move the direct-sum gram to the standard one
    std::vector<Mat> mats;
    for (auto& b : blocks) mats.push_back(b.m);
    Mat direct = ff::block_diag(mats);
    FormSpec sum_form;
    sum_form.kind = FormKind::Symplectic;
    sum_form.field = mf;
    sum_form.gram = Mat(mf, 2 * n, 2 * n);
    {
        int off = 0;
        for (auto& b : blocks) {
            for (int i = 0; i < b.form.dim(); ++i)
                for (int j = 0; j < b.form.dim(); ++j) sum_form.gram.at(off + i, off + j) = b.form.gram.at(i, j);
            off += b.form.dim();
        }
    }
    Mat pmat = change_of_basis(sum_form, spec.form);
    Mat assembled = pmat * direct * pmat.inverse();

    Construction c{spec, assembled, Certificate{}, desc.str()};
    c.cert.order = assembled.order(1 << 20);
    c.cert.det = mf->F->one();
    return c;
}

namespace {

// SO building blocks, each with its own gram.
Block so2_block(const SmallField* mf, int eps, int delta) {
    // SO^eps_2(q) is cyclic of order q - eps; delta = -1 picks the element of
    // order (q-eps)_2, delta = +1 the identity.
    FormSpec form = classical::standard_symmetric(mf, 2, eps);
    if (delta == +1) return {Mat::identity(mf, 2), form};
    if (eps == +1) {
        int64_t t2 = two_part(static_cast<int64_t>(mf->q) - 1);
        uint16_t lam = mf->pow(mf->gen_code, (mf->q - 1) / static_cast<uint32_t>(t2));
        Mat m(mf, 2, 2);
        m.at(0, 0) = lam;
        m.at(1, 1) = mf->inv(lam);
        return {m, form};
    }
    // eps = -1: multiplication by lambda of order (q+1)_2 on F_{q^2} in the
    // basis {1, w}; this is exactly the torus of the norm-form block.
    const SmallField* f2 = ff::small_field(mf->p, mf->k * 2);
    int64_t t2 = two_part(static_cast<int64_t>(mf->q) + 1);
    FieldElement lam = f2->F->gen().pow((f2->F->size - 1) / static_cast<uint64_t>(t2));
    FieldElement w = f2->F->from_code(f2->F->gen().code());
    // columns: lam * 1 and lam * w in the basis {1, w}
    auto coords = [&](const FieldElement& x) -> std::pair<uint16_t, uint16_t> {
        // x = c0 + c1 w with c0, c1 in F_q
        for (uint32_t c1 = 0; c1 < mf->q; ++c1) {
            FieldElement cand = x - f2->F->embed(mf->F->from_code(c1)) * w;
            try {
                FieldElement c0 = f2->F->project_to_subfield(cand, mf->k);
                return {static_cast<uint16_t>(c0.code()), static_cast<uint16_t>(c1)};
            } catch (const std::domain_error&) {
            }
        }
        throw std::logic_error("so2_block: coordinate split failed");
    };
    auto [a0, a1] = coords(lam);
    auto [b0, b1] = coords(lam * w);
    Mat m(mf, 2, 2);
    m.at(0, 0) = a0;
    m.at(1, 0) = a1;
    m.at(0, 1) = b0;
    m.at(1, 1) = b1;
    if (!form.preserves(m)) throw std::logic_error("so2_block: torus element is not an isometry");
    return {m, form};
}

Block so_base_block(const SmallField* mf, int m) {
    // s_m in SO^+_{2^{m+1}}(q) via the GL_{2^m} hyperbolic embedding.
    FieldElement gamma = gamma_element(mf->p, mf->k, m);
    ff::Poly mp = minpoly_over(gamma, mf->k);
    if (mp.degree() != (1 << m)) throw std::logic_error("so base: wrong degree");
    Mat a = companion(mf, mp);
    Mat em = hyperbolic_embed(a);
    FormSpec form = classical::standard_symmetric(mf, 2 << m, +1);
    if (!form.preserves(em)) throw std::logic_error("so base: embed not orthogonal");
    return {em, form};
}

Block minus_identity_block(const SmallField* mf, int eps) {
    FormSpec form = classical::standard_symmetric(mf, 2, eps);
    return {Mat::identity(mf, 2).scaled(mf->neg(1)), form};
}

Block so4_block(const SmallField* mf, int eps, int delta) {
    // paper case (ii): q == alpha mod 4, s0 = s^alpha_2(-1) of order >= 4
    int64_t q = mf->q;
    int alpha = (q % 4 == 1) ? +1 : -1;
    Block b1, b2;
    if (eps == +1 && delta == +1) {
        b1 = minus_identity_block(mf, alpha);
        b2 = {Mat::identity(mf, 2), classical::standard_symmetric(mf, 2, alpha)};
    } else if (eps == -1 && delta == +1) {
        b1 = so2_block(mf, alpha, -1);
        b2 = minus_identity_block(mf, -alpha);
    } else if (eps == +1 && delta == -1) {
        b1 = so2_block(mf, alpha, -1);
        b2 = minus_identity_block(mf, alpha);
    } else {
        b1 = so2_block(mf, alpha, -1);
        b2 = {Mat::identity(mf, 2), classical::standard_symmetric(mf, 2, -alpha)};
    }
    // direct sum with the concatenated gram
    Mat m = ff::block_diag({b1.m, b2.m});
    FormSpec form;
    form.kind = FormKind::Symmetric;
    form.field = mf;
    form.gram = Mat(mf, 4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            form.gram.at(i, j) = b1.form.gram.at(i, j);
            form.gram.at(2 + i, 2 + j) = b2.form.gram.at(i, j);
        }
    return {m, form};
}

}  // namespace

Construction construct_so_2element(int n, int64_t q, int eps, int delta) {
    if (q % 2 == 0) throw std::domain_error("construct_so_2element: q must be odd");
    if (n < 2) throw std::domain_error("construct_so_2element: n must be >= 2");
    if (n % 2 == 1) eps = 0;
    if (n % 2 == 0 && eps != +1 && eps != -1) throw std::domain_error("construct_so_2element: eps required");
    if (delta != +1 && delta != -1) throw std::domain_error("construct_so_2element: delta must be +-1");
    ClassicalGroupSpec spec = classical::build_group(Family::SO, n, q, eps);
    const SmallField* mf = spec.mf;
    int alpha_q = (q % 4 == 1) ? +1 : -1;

    std::vector<Block> blocks;
    std::ostringstream desc;
    if (n == 2) {
        blocks.push_back(so2_block(mf, eps, delta));
        desc << "n=2 torus element";
    } else if (n == 4) {
        blocks.push_back(so4_block(mf, eps, delta));
        desc << "n=4 paper case (ii)";
    } else if (n % 4 == 2) {
        // n = sum 2^{m_i+1} + 2 with m_i >= 1
        auto ms = binary_exponents((n - 2) / 2);  // exponents m_i + 1 - 1
        int t = static_cast<int>(ms.size());
        for (int e : ms) blocks.push_back(so_base_block(mf, e));
        int a = (t % 2 == 0) ? delta : -delta;  // (-1)^t * delta
        blocks.push_back(so2_block(mf, eps, a));
        desc << "n == 2 mod 4: s_m blocks + s^eps_2(alpha)";
    } else if (n % 4 == 0) {
        // n = sum 2^{m_i+1}: the binary exponents of n/2 are the m_i (all >= 1)
        auto ms = binary_exponents(n / 2);
        std::vector<int> mexp = ms;
        int t = static_cast<int>(mexp.size());
        int mt = mexp.back();
        std::vector<int> chain(mexp.begin(), mexp.end() - 1);
        int k2;
        if (mt >= 2) {
            for (int a2 = mt - 1; a2 >= 1; --a2) chain.push_back(a2);
            k2 = t + mt - 1;
        } else {
            k2 = t;
        }
        // chain now lists a_1 .. a_{k-1}; the final a_k = 1 block is s^eps_4(alpha)
        for (int e : chain) blocks.push_back(so_base_block(mf, e));
        int a = (k2 % 2 == 1) ? delta : -delta;  // (-1)^{k-1} delta
        blocks.push_back(so4_block(mf, eps, a));
        desc << "n == 0 mod 4: s_m blocks + s^eps_4(alpha)";
    } else {
        // odd n: n = sum 2^{m_i+1} + 1, m_i >= 0
        auto ms = binary_exponents((n - 1) / 2);
        std::vector<int> mexp;
        for (int e : ms) mexp.push_back(e);
        int t = static_cast<int>(mexp.size());
        int mt = mexp.back();
        if (mt == 0) {
            for (int i = 0; i + 1 < t; ++i) blocks.push_back(so_base_block(mf, mexp[i]));
            int sign_t = (t % 2 == 0) ? +1 : -1;
            if (delta == sign_t) {
                blocks.push_back(so2_block(mf, alpha_q, -1));  // s_0
            } else {
                blocks.push_back(minus_identity_block(mf, alpha_q));
            }
            desc << "odd n, m_t = 0";
        } else {
            std::vector<int> chain(mexp.begin(), mexp.end() - 1);
            int k2;
            if (mt >= 2) {
                for (int a2 = mt - 1; a2 >= 1; --a2) chain.push_back(a2);
                k2 = t + mt - 1;
            } else {
                k2 = t;
            }
            for (int e : chain) blocks.push_back(so_base_block(mf, e));
            int beta = (k2 % 2 == 0) ? delta : -delta;  // (-1)^k delta
            blocks.push_back(so4_block(mf, beta, -beta));
            desc << "odd n, m_t >= 1: blocks + s^beta_4(-beta)";
        }
        // trailing SO_1 block
        blocks.push_back(Block{Mat::identity(mf, 1), classical::standard_symmetric(mf, 1, 0)});
    }

    std::vector<Mat> mats;
    int total = 0;
    for (auto& b : blocks) {
        mats.push_back(b.m);
        total += b.form.dim();
    }
    if (total != n) throw std::logic_error("construct_so_2element: block sizes do not sum to n");
    Mat direct = ff::block_diag(mats);
    FormSpec sum_form;
    sum_form.kind = FormKind::Symmetric;
    sum_form.field = mf;
    sum_form.gram = Mat(mf, n, n);
    {
        int off = 0;
        for (auto& b : blocks) {
            for (int i = 0; i < b.form.dim(); ++i)
                for (int j = 0; j < b.form.dim(); ++j) sum_form.gram.at(off + i, off + j) = b.form.gram.at(i, j);
            off += b.form.dim();
        }
    }
    if (n % 2 == 1 && square_class(mf, sum_form.gram.det()) != square_class(mf, spec.form.gram.det())) {
        // odd dimension: scaling the form by a nonsquare switches the
        // discriminant class without changing the isometry group
        uint16_t nu = 0;
        for (uint32_t cand = 2; cand < mf->q; ++cand)
            if (square_class(mf, static_cast<uint16_t>(cand)) == -1) {
                nu = static_cast<uint16_t>(cand);
                break;
            }
        sum_form.gram = sum_form.gram.scaled(nu);
    }
    Mat pmat = change_of_basis(sum_form, spec.form);
    Mat assembled = pmat * direct * pmat.inverse();

    Construction c{spec, assembled, Certificate{}, desc.str()};
    c.cert.order = assembled.order(1 << 20);
    c.cert.det = mf->F->one();
    c.cert.spinor = delta;
    return c;
}

void verify(const Construction& c) {
    const ClassicalGroupSpec& spec = c.spec;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("certificate check failed for " + spec.name() + ": " + what);
    };
    auto mr = classical::membership(spec, c.element);
    if (!mr.member) fail("membership: " + mr.reason);
    // 2-power order, recomputed by squaring
    {
        uint64_t o = c.cert.order;
        if (o == 0 || (o & (o - 1)) != 0) fail("claimed order is not a 2-power");
        Mat sq = c.element;
        uint64_t reached = 1;
        bool hit_identity = sq.is_identity();
        while (reached < o) {
            sq = sq * sq;
            reached *= 2;
            if (reached == o / 2 && sq.is_identity()) fail("order smaller than claimed");
        }
        if (!sq.is_identity()) fail("order larger than claimed");
        (void)hit_identity;
    }
    if (spec.family == Family::GL || spec.family == Family::GU) {
        if (!(spec.mf->F->from_code(c.element.det()) == c.cert.det)) fail("determinant mismatch");
    }
    if (spec.family == Family::SO) {
        if (classical::spinor_norm(spec, c.element) != c.cert.spinor) fail("spinor norm mismatch");
    }
    if (!classical::is_regular_semisimple(spec, c.element)) fail("element is not regular semisimple");
    // eigenvalue clauses
    auto pr = classical::eigen_profile(spec, c.element);
    if (spec.family == Family::GL || spec.family == Family::GU) {
        int64_t target = spec.eps == +1 ? spec.q - 1 : spec.q + 1;
        int in_mu = 0;
        for (auto& ev : pr.eigenvalues) {
            if (ev.value.pow(static_cast<uint64_t>(target)).is_one()) {
                ++in_mu;
                if (ev.algebraic_mult != 1) fail("mu eigenvalue with multiplicity > 1");
            }
            if (ev.algebraic_mult != 1) fail("eigenvalue multiplicity > 1");
        }
        if (in_mu > 2) fail("more than two eigenvalues in mu_{q-eps}");
    } else if (spec.family == Family::Sp) {
        for (auto& ev : pr.eigenvalues) {
            if (ev.algebraic_mult != 1) fail("eigenvalue multiplicity > 1");
            if (ev.value.fld()->k == spec.mf->k) {
                if (ev.value.is_one() || (-ev.value).is_one()) fail("+-1 in the spectrum");
            }
        }
    } else if (spec.family == Family::SO) {
        for (auto& ev : pr.eigenvalues) {
            if (ev.algebraic_mult > 2) fail("eigenvalue multiplicity > 2");
            if (ev.algebraic_mult == 2) {
                bool pm1 = ev.value.fld()->k == spec.mf->k && (ev.value.is_one() || (-ev.value).is_one());
                if (!pm1) fail("multiplicity 2 away from +-1");
            }
        }
    }
}

}  // namespace wordmap::construct
