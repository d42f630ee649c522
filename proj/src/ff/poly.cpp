#include "ff/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wordmap::ff {

Poly::Poly(Field f, std::vector<FieldElement> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::one(const Field& f) { return Poly(f, {f->one()}); }

Poly Poly::x(const Field& f) { return Poly(f, {f->zero(), f->one()}); }

Poly Poly::constant(const FieldElement& c) { return Poly(c.fld(), {c}); }

Poly Poly::from_codes(const Field& f, const std::vector<uint64_t>& codes) {
    std::vector<FieldElement> c;
    c.reserve(codes.size());
    for (uint64_t v : codes) c.push_back(f->from_code(v));
    return Poly(f, std::move(c));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return f_->zero();
    return c_[i];
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < r.size(); ++i) {
        FieldElement v = f_->zero();
        if (i < c_.size()) v = v + c_[i];
        if (i < o.c_.size()) v = v + o.c_[i];
        r[i] = v;
    }
    return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-f_->one()); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly::zero(f_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(f_, std::move(r));
}

Poly Poly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> r = c_;
    for (auto& v : r) v = v * c;
    return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    const Field& f = a.f_;
    std::vector<FieldElement> rem = a.c_;
    int db = b.degree();
    FieldElement binv = b.lead().inv();
    std::vector<FieldElement> quot;
    if (static_cast<int>(rem.size()) - 1 >= db) quot.assign(rem.size() - db, f->zero());
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i].is_zero()) continue;
        FieldElement c = rem[i] * binv;
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - c * b.c_[j];
    }
    q = Poly(f, std::move(quot));
    r = Poly(f, std::move(rem));
}

Poly Poly::operator%(const Poly& o) const {
    Poly q, r;
    divmod(*this, o, q, r);
    return r;
}

Poly Poly::operator/(const Poly& o) const {
    Poly q, r;
    divmod(*this, o, q, r);
    return q;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly::zero(f_);
    std::vector<FieldElement> r(c_.size() - 1, f_->zero());
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * f_->from_int(static_cast<int64_t>(i));
    return Poly(f_, std::move(r));
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = f_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::powmod(uint64_t e, const Poly& m) const {
    Poly acc = Poly::one(f_) % m;
    Poly base = *this % m;
    while (e) {
        if (e & 1) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str() << "*x^" << i;
        first = false;
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

namespace {

// distinct-degree decomposition: list of (product of degree-d irreducibles, d)
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    const Field& F = f.fld();
    std::vector<std::pair<Poly, int>> out;
    Poly g = f;
    Poly h = Poly::x(F) % g;  // x^(q^d) mod g, incrementally
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            out.push_back({g.monic(), g.degree()});
            break;
        }
        h = h.powmod(F->size, g);
        Poly diff = h - Poly::x(F);
        Poly gd = gcd(diff, g);
        if (gd.degree() > 0) {
            out.push_back({gd, d});
            g = g / gd;
            h = h % g;
        }
    }
    return out;
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out, int depth) {
    const Field& F = f.fld();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    if (depth > 64) throw std::runtime_error("factor_poly: equal-degree retry cap exhausted");
    const int n = f.degree();
    Poly split = Poly::zero(F);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // random polynomial of degree < n
        std::vector<FieldElement> rc;
        rc.reserve(n);
        for (int i = 0; i < n; ++i) rc.push_back(F->from_code(rng.below(F->size)));
        Poly r(F, std::move(rc));
        if (r.is_zero()) continue;
        Poly g = gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split = g;
            break;
        }
        Poly trace;
        if (F->p == 2) {
            // T(r) = r + r^2 + r^4 + ... over F_{2^(k*d)}
            int bits = F->k * d;
            Poly acc = r % f;
            Poly cur = acc;
            for (int i = 1; i < bits; ++i) {
                cur = (cur * cur) % f;
                acc = acc + cur;
            }
            trace = acc;
        } else {
            uint64_t e = 1;
            // (q^d - 1) / 2 may overflow for large q^d; compute via pow chain
            // q^d fits: q^d <= field sizes we factor over (guarded by caller sizes)
            __uint128_t qd = 1;
            for (int i = 0; i < d; ++i) qd *= F->size;
            __uint128_t ee = (qd - 1) / 2;
            // powmod with 128-bit exponent
            Poly acc = Poly::one(F) % f;
            Poly base = r % f;
            while (ee) {
                if (ee & 1) acc = (acc * base) % f;
                base = (base * base) % f;
                ee >>= 1;
            }
            (void)e;
            trace = acc - Poly::one(F);
        }
        Poly g2 = gcd(trace, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            split = g2;
            break;
        }
    }
    if (split.is_zero()) throw std::runtime_error("factor_poly: equal-degree retry cap exhausted");
    equal_degree(split, d, rng, out, depth + 1);
    equal_degree(f / split, d, rng, out, depth + 1);
}

// strips p-th powers: returns g with f = g(x^p) given f' == 0
Poly pth_root(const Poly& f) {
    const Field& F = f.fld();
    int64_t p = F->p;
    std::vector<FieldElement> r;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
        FieldElement c = f.coeff(i);
        // p-th root in F_{p^k}: c^(p^(k-1))
        FieldElement root = c;
        for (int j = 0; j < F->k - 1; ++j) root = root.pow(static_cast<uint64_t>(p));
        r.push_back(root);
    }
    return Poly(F, std::move(r));
}

void factor_squarefree_part(const Poly& f, Rng& rng, int mult, std::vector<PolyFactor>& out);

void factor_rec(const Poly& f, Rng& rng, int mult, std::vector<PolyFactor>& out) {
    if (f.degree() <= 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        factor_rec(pth_root(f), rng, mult * static_cast<int>(f.fld()->p), out);
        return;
    }
    Poly g = gcd(f, d);
    Poly sqfree = f / g;  // product of distinct irreducibles in f
    factor_squarefree_part(sqfree.monic(), rng, mult, out);
    if (g.degree() > 0) {
        // remaining part: divide out one copy of each factor found at this level
        Poly rest = g;
        factor_rec(rest.monic(), rng, mult, out);
    }
}

void factor_squarefree_part(const Poly& f, Rng& rng, int mult, std::vector<PolyFactor>& out) {
    for (auto& [prod, d] : distinct_degree(f)) {
        std::vector<Poly> irr;
        equal_degree(prod, d, rng, irr, 0);
        for (auto& q : irr) out.push_back({q, mult});
    }
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor_poly: zero polynomial");
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<PolyFactor> raw;
    factor_rec(f.monic(), rng, 1, raw);
    // merge equal factors (factor_rec emits one entry per multiplicity level)
    std::vector<PolyFactor> out;
    for (auto& pf : raw) {
        bool merged = false;
        for (auto& o : out) {
            if (o.factor == pf.factor) {
                o.multiplicity += pf.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(pf);
    }
    // deterministic ordering: by degree, then by coefficient codes
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (int i = a.factor.degree(); i >= 0; --i) {
            uint64_t ca = a.factor.coeff(i).code(), cb = b.factor.coeff(i).code();
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    return out;
}

std::vector<std::pair<FieldElement, int>> roots(const Poly& f, uint64_t seed) {
    std::vector<std::pair<FieldElement, int>> out;
    for (auto& pf : factor_poly(f, seed)) {
        if (pf.factor.degree() == 1) {
            // x + c  ->  root -c
            FieldElement root = -pf.factor.coeff(0);
            out.push_back({root, pf.multiplicity});
        }
    }
    return out;
}

}  // namespace wordmap::ff
