#include "chartab/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace wordmap::chartab {

namespace {

// Exact division of integer polynomials (little-endian), remainder must vanish.
std::vector<int64_t> zpoly_divide(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    std::vector<int64_t> rem = a;
    if (b.empty() || b.back() != 1) throw std::logic_error("zpoly_divide: divisor must be monic");
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < db) throw std::logic_error("zpoly_divide: degree underflow");
    std::vector<int64_t> q(rem.size() - db, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        int64_t c = rem[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = checked_sub(rem[i - db + j], checked_mul(c, b[j]));
    }
    for (int64_t r : rem)
        if (r) throw std::logic_error("zpoly_divide: nonzero remainder");
    return q;
}

std::vector<int64_t> cyclotomic_polynomial(int64_t e) {
    // x^e - 1 divided by all Phi_d, d | e, d < e (computed recursively).
    if (e == 1) return {-1, 1};
    std::vector<int64_t> num(static_cast<size_t>(e) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(e)] = 1;
    for (int64_t d = 1; d < e; ++d) {
        if (e % d) continue;
        auto phi_d = cyclotomic_polynomial(d);
        num = zpoly_divide(num, phi_d);
    }
    return num;
}

}  // namespace

const CycContext* cyc_context(int64_t e) {
    static std::mutex mu;
    static std::map<int64_t, std::unique_ptr<CycContext>> registry;
    if (e < 1) throw std::domain_error("cyc_context: conductor must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(e);
    if (it != registry.end()) return it->second.get();
    auto ctx = std::make_unique<CycContext>();
    ctx->e = e;
    ctx->cyclotomic_poly = cyclotomic_polynomial(e);
    ctx->phi = static_cast<int>(ctx->cyclotomic_poly.size()) - 1;
    const int phi = ctx->phi;
    size_t maxj = std::max<size_t>(static_cast<size_t>(e), 2 * static_cast<size_t>(phi) - 1);
    ctx->xpow.resize(maxj);
    for (int j = 0; j < phi && j < static_cast<int>(maxj); ++j) {
        std::vector<int64_t> v(phi, 0);
        v[j] = 1;
        ctx->xpow[j] = std::move(v);
    }
    for (size_t j = phi; j < maxj; ++j) {
        // x^j = x * x^(j-1) reduced
        const auto& prev = ctx->xpow[j - 1];
        std::vector<int64_t> v(phi, 0);
        for (int i = 0; i + 1 < phi; ++i) v[i + 1] = prev[i];
        int64_t top = prev[phi - 1];
        if (top) {
            // subtract top * (x^phi mod Phi) = top * -(lower part of Phi)
            for (int i = 0; i < phi; ++i)
                v[i] = checked_sub(v[i], checked_mul(top, ctx->cyclotomic_poly[i]));
        }
        ctx->xpow[j] = std::move(v);
    }
    ctx->unit_root.resize(e);
    for (int64_t j = 0; j < e; ++j) {
        double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(e);
        ctx->unit_root[j] = {std::cos(ang), std::sin(ang)};
    }
    auto* out = ctx.get();
    registry[e] = std::move(ctx);
    return out;
}

Cyc::Cyc(const CycContext* ctx) : ctx_(ctx), num_(ctx->phi, 0), den_(1) {}

void Cyc::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& n : num_) n = checked_mul(n, -1);
    }
    int64_t g = den_;
    for (int64_t n : num_) {
        g = gcd64(g, n);
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& n : num_) n /= g;
    }
    if (den_ == 0) throw std::domain_error("Cyc: zero denominator");
}

Cyc Cyc::from_rat(const CycContext* ctx, const Rat& r) {
    Cyc c(ctx);
    c.num_[0] = r.num;
    c.den_ = r.den;
    return c;
}

Cyc Cyc::integer(const CycContext* ctx, int64_t n) { return from_rat(ctx, Rat(n)); }

Cyc Cyc::root_of_unity(const CycContext* ctx, int64_t j) {
    j %= ctx->e;
    if (j < 0) j += ctx->e;
    Cyc c(ctx);
    c.num_ = ctx->xpow[static_cast<size_t>(j)];
    c.den_ = 1;
    return c;
}

Cyc Cyc::from_terms(const CycContext* ctx, const std::vector<std::pair<Rat, int64_t>>& terms) {
    Cyc acc(ctx);
    for (auto& [r, j] : terms) acc = acc + root_of_unity(ctx, j).scaled(r);
    return acc;
}

bool Cyc::is_zero() const {
    for (int64_t n : num_)
        if (n) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i]) return false;
    return true;
}

Rat Cyc::rational() const {
    if (!is_rational()) throw std::domain_error("Cyc: value is not rational");
    if (num_.empty()) return Rat(0);
    return Rat(num_[0], den_);
}

bool Cyc::operator==(const Cyc& o) const {
    if (ctx_->e != o.ctx_->e) return false;
    return den_ == o.den_ && num_ == o.num_;
}

Cyc Cyc::operator+(const Cyc& o) const {
    if (ctx_ != o.ctx_) throw std::domain_error("Cyc: conductor mismatch");
    Cyc out(ctx_);
    int64_t g = gcd64(den_, o.den_);
    int64_t la = o.den_ / g, lb = den_ / g;
    out.den_ = checked_mul(den_, la);
    for (size_t i = 0; i < num_.size(); ++i)
        out.num_[i] = checked_add(checked_mul(num_[i], la), checked_mul(o.num_[i], lb));
    out.normalize();
    return out;
}

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& n : out.num_) n = checked_mul(n, -1);
    return out;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
    if (ctx_ != o.ctx_) throw std::domain_error("Cyc: conductor mismatch");
    const int phi = ctx_->phi;
    std::vector<int64_t> conv(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (!num_[i]) continue;
        for (int j = 0; j < phi; ++j) {
            if (!o.num_[j]) continue;
            conv[i + j] = checked_add(conv[i + j], checked_mul(num_[i], o.num_[j]));
        }
    }
    Cyc out(ctx_);
    for (int i = 0; i < phi; ++i) out.num_[i] = conv[i];
    for (int j = phi; j < 2 * phi - 1; ++j) {
        if (!conv[j]) continue;
        const auto& row = ctx_->xpow[j];
        for (int i = 0; i < phi; ++i)
            out.num_[i] = checked_add(out.num_[i], checked_mul(conv[j], row[i]));
    }
    out.den_ = checked_mul(den_, o.den_);
    out.normalize();
    return out;
}

Cyc Cyc::scaled(const Rat& r) const {
    Cyc out = *this;
    for (auto& n : out.num_) n = checked_mul(n, r.num);
    out.den_ = checked_mul(out.den_, r.den);
    out.normalize();
    return out;
}

Cyc Cyc::galois(int64_t s) const {
    s %= ctx_->e;
    if (s < 0) s += ctx_->e;
    if (gcd64(s, ctx_->e) != 1) throw std::domain_error("Cyc::galois: exponent not coprime to conductor");
    Cyc out(ctx_);
    for (int i = 0; i < ctx_->phi; ++i) {
        if (!num_[i]) continue;
        const auto& row = ctx_->xpow[static_cast<size_t>(static_cast<int64_t>(i) * s % ctx_->e)];
        for (int j = 0; j < ctx_->phi; ++j)
            out.num_[j] = checked_add(out.num_[j], checked_mul(num_[i], row[j]));
    }
    out.den_ = den_;
    out.normalize();
    return out;
}

std::complex<double> Cyc::complex_value() const {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < ctx_->phi; ++i) {
        if (!num_[i]) continue;
        acc += static_cast<double>(num_[i]) * ctx_->unit_root[i];
    }
    return acc / static_cast<double>(den_);
}

double Cyc::abs_upper_bound() const {
    // |value| <= sum |num_i| / den exactly; add the evaluation error margin.
    double mass = 0.0;
    for (int64_t n : num_) mass += std::abs(static_cast<double>(n));
    mass /= static_cast<double>(den_);
    double err = mass * 1e-12 + 1e-300;
    return std::abs(complex_value()) + err + mass * 4e-16 * ctx_->phi;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ctx_->phi; ++i) {
        if (!num_[i]) continue;
        if (!first) os << "+";
        Rat c(num_[i], den_);
        if (i == 0) {
            os << c.str();
        } else {
            os << c.str() << "*E^" << i;
        }
        first = false;
    }
    return os.str();
}

Cyc parse_cyc(const CycContext* ctx, const std::string& literal) {
    if (literal.empty()) throw std::runtime_error("empty cyclotomic literal");
    if (literal == "0") return Cyc(ctx);
    std::vector<std::pair<Rat, int64_t>> terms;
    std::stringstream ss(literal);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        if (tok.empty()) throw std::runtime_error("bad cyclotomic literal: " + literal);
        size_t star = tok.find("*E^");
        Rat coeff;
        int64_t expn = 0;
        if (star == std::string::npos) {
            coeff = parse_rat(tok);
        } else {
            coeff = parse_rat(tok.substr(0, star));
            expn = std::stoll(tok.substr(star + 3));
            if (expn < 0 || expn >= ctx->e)
                throw std::runtime_error("cyclotomic exponent out of range: " + literal);
        }
        terms.push_back({coeff, expn});
    }
    return Cyc::from_terms(ctx, terms);
}

}  // namespace wordmap::chartab
