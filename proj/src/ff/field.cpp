#include "ff/field.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace wordmap::ff {

namespace detail {

static void trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint32_t> pmul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    }
    std::vector<uint32_t> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint32_t>(acc[i] % p);
    trim(out);
    return out;
}

std::vector<uint32_t> pmod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, int64_t p) {
    trim(a);
    const size_t dm = m.size() - 1;
    // Callers keep m monic.
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead) {
            for (size_t i = 0; i < dm; ++i) {
                int64_t v = static_cast<int64_t>(a[shift + i]) -
                            static_cast<int64_t>(lead) * m[i] % p;
                a[shift + i] = static_cast<uint32_t>((v % p + p) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

static std::vector<uint32_t> ppowmod_x(uint64_t e_hi_p, int reps,
                                       const std::vector<uint32_t>& m, int64_t p) {
    // x^(p^reps) mod m via repeated p-th powering.
    std::vector<uint32_t> x = {0, 1};
    x = pmod(x, m, p);
    for (int r = 0; r < reps; ++r) {
        // raise to p-th power by square-and-multiply
        std::vector<uint32_t> base = x;
        std::vector<uint32_t> acc = {1};
        uint64_t e = e_hi_p;
        while (e) {
            if (e & 1) acc = pmod(pmul(acc, base, p), m, p);
            base = pmod(pmul(base, base, p), m, p);
            e >>= 1;
        }
        x = acc;
    }
    return x;
}

static std::vector<uint32_t> pgcd(std::vector<uint32_t> a, std::vector<uint32_t> b, int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic
        uint32_t lead = b.back();
        if (lead != 1) {
            // inverse mod p
            int64_t inv = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& c : b) c = static_cast<uint32_t>(c * inv % p);
        }
        a = pmod(std::move(a), b, p);
        std::swap(a, b);
    }
    trim(a);
    return a;
}

bool irreducible_mod_p(const std::vector<uint32_t>& f, int64_t p) {
    const int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    // Rabin: x^(p^k) == x mod f, and gcd(x^(p^(k/r)) - x, f) == 1 for prime r | k.
    std::vector<uint32_t> xq = ppowmod_x(static_cast<uint64_t>(p), k, f, p);
    std::vector<uint32_t> x = {0, 1};
    // xq - x must be 0
    std::vector<uint32_t> diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<uint32_t>((static_cast<int64_t>(diff[1]) - 1 % p + p) % p);
    trim(diff);
    if (!diff.empty()) return false;
    for (int64_t r : prime_factors_distinct(k)) {
        std::vector<uint32_t> xe = ppowmod_x(static_cast<uint64_t>(p), k / static_cast<int>(r), f, p);
        std::vector<uint32_t> d = xe;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<uint32_t>((static_cast<int64_t>(d[1]) - 1 % p + p) % p);
        trim(d);
        std::vector<uint32_t> g = pgcd(d, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

using detail::pmod;
using detail::pmul;

namespace {

std::vector<uint32_t> canonical_modulus(int64_t p, int k) {
    if (k == 1) return {0, 1};  // x (unused; arithmetic is plain mod p)
    uint64_t limit = 1;
    for (int i = 0; i < k; ++i) limit *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < limit; ++code) {
        std::vector<uint32_t> f(k + 1, 0);
        uint64_t c = code;
        for (int i = 0; i < k; ++i) {
            f[i] = static_cast<uint32_t>(c % p);
            c /= p;
        }
        f[k] = 1;
        if (detail::irreducible_mod_p(f, p)) return f;
    }
    throw std::logic_error("no irreducible modulus found");
}

struct FieldKey {
    int64_t p;
    int k;
    bool operator<(const FieldKey& o) const { return p < o.p || (p == o.p && k < o.k); }
};

}  // namespace

Field field(int64_t p, int k) {
    static std::mutex mu;
    static std::map<FieldKey, Field> registry;
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) throw std::domain_error("field: p must be prime");
    if (k < 1) throw std::domain_error("field: k must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find({p, k});
    if (it != registry.end()) return it->second;
    double bits = k * std::log2(static_cast<double>(p));
    if (bits >= 62) throw std::domain_error("field: p^k too large");
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->k = k;
    uint64_t size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<uint64_t>(p);
    spec->size = size;
    spec->modulus = canonical_modulus(p, k);
    Field f = spec;
    registry[{p, k}] = f;
    return f;
}

FieldElement::FieldElement(Field f, std::vector<uint32_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    c_.resize(f_->k, 0);
    for (auto& x : c_) x %= static_cast<uint32_t>(f_->p);
}

bool FieldElement::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (f_->p != o.f_->p || f_->k != o.f_->k) throw std::domain_error("comparing elements of different fields");
    return c_ == o.c_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (f_.get() != o.f_.get()) throw std::domain_error("field mismatch in add");
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = static_cast<uint32_t>((c_[i] + static_cast<uint64_t>(o.c_[i])) % f_->p);
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = static_cast<uint32_t>((f_->p - c_[i]) % f_->p);
    return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (f_.get() != o.f_.get()) throw std::domain_error("field mismatch in mul");
    if (f_->k == 1) {
        uint64_t v = static_cast<uint64_t>(c_[0]) * o.c_[0] % f_->p;
        return FieldElement(f_, {static_cast<uint32_t>(v)});
    }
    auto prod = pmod(pmul(c_, o.c_, f_->p), f_->modulus, f_->p);
    return FieldElement(f_, std::move(prod));
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement acc = f_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in field");
    return pow(f_->size - 2);
}

FieldElement FieldElement::frobenius() const { return pow(static_cast<uint64_t>(f_->p)); }

uint64_t FieldElement::code() const {
    uint64_t v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * static_cast<uint64_t>(f_->p) + c_[i];
    return v;
}

uint64_t FieldElement::order() const {
    if (is_zero()) throw std::domain_error("order of zero");
    uint64_t n = f_->size - 1;
    uint64_t ord = n;
    for (auto [q, e] : f_->unit_order_factorization()) {
        (void)e;
        while (ord % q == 0 && pow(ord / q).is_one()) ord /= static_cast<uint64_t>(q);
    }
    return ord;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << f_->p;
    if (f_->k > 1) os << "^" << f_->k;
    os << ":[";
    for (int i = 0; i < f_->k; ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint32_t>(k, 0));
}

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_code(uint64_t code) const {
    std::vector<uint32_t> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<uint32_t>(code % p);
        code /= static_cast<uint64_t>(p);
    }
    if (code) throw std::domain_error("from_code: code out of range");
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_int(int64_t n) const {
    int64_t v = n % p;
    if (v < 0) v += p;
    std::vector<uint32_t> c(k, 0);
    c[0] = static_cast<uint32_t>(v);
    return FieldElement(shared_from_this(), std::move(c));
}

const std::vector<std::pair<int64_t, int>>& FieldSpec::unit_order_factorization() const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (unit_factors_.empty()) {
        uint64_t n = size - 1;
        for (int64_t q : prime_factors_distinct(static_cast<int64_t>(n))) {
            int e = 0;
            while (n % static_cast<uint64_t>(q) == 0) {
                n /= static_cast<uint64_t>(q);
                ++e;
            }
            unit_factors_.push_back({q, e});
        }
    }
    return unit_factors_;
}

FieldElement FieldSpec::gen() const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        if (!gen_coeffs_.empty()) return FieldElement(shared_from_this(), gen_coeffs_);
    }
    auto factors = unit_order_factorization();
    uint64_t n = size - 1;
    for (uint64_t code = 1; code < size; ++code) {
        FieldElement x = from_code(code);
        bool ok = true;
        for (auto [q, e] : factors) {
            (void)e;
            if (x.pow(n / static_cast<uint64_t>(q)).is_one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::lock_guard<std::mutex> lock(cache_mu_);
            gen_coeffs_ = x.coeffs();
            return x;
        }
    }
    throw std::logic_error("no generator found");
}

const std::vector<uint32_t>* FieldSpec::embed_root_coeffs(int d) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        for (auto& [dd, r] : embed_roots_)
            if (dd == d) return &r;
    }
    if (k % d != 0) throw std::domain_error("embed: subfield degree must divide k");
    Field sub = field(p, d);
    // Roots of the subfield modulus form one Frobenius orbit; the canonical
    // embedding sends the subfield variable to the least-code root.
    // Root search: the subfield's multiplicative group embeds as the unique
    // subgroup of order p^d - 1; scan its elements plus 0.
    std::vector<uint32_t> best;
    bool found = false;
    if (d == 1) {
        best = {};  // unused
        found = true;
    } else {
        uint64_t subord = 1;
        for (int i = 0; i < d; ++i) subord *= static_cast<uint64_t>(p);
        --subord;
        FieldElement g = gen();
        FieldElement h = g.pow((size - 1) / subord);  // generator of the subfield units
        // Evaluate the subfield modulus at each candidate.
        auto eval = [&](const FieldElement& x) {
            FieldElement acc = zero();
            const auto& m = sub->modulus;
            for (size_t i = m.size(); i-- > 0;) acc = acc * x + from_int(static_cast<int64_t>(m[i]));
            return acc;
        };
        uint64_t bestcode = 0;
        FieldElement cur = one();
        for (uint64_t i = 0; i < subord; ++i) {
            if (eval(cur).is_zero()) {
                uint64_t c = cur.code();
                if (!found || c < bestcode) {
                    best = cur.coeffs();
                    bestcode = c;
                    found = true;
                }
            }
            cur = cur * h;
        }
        if (!found) throw std::logic_error("embed: no root of subfield modulus");
    }
    std::lock_guard<std::mutex> lock(cache_mu_);
    embed_roots_.push_back({d, best});
    return &embed_roots_.back().second;
}

FieldElement FieldSpec::embed(const FieldElement& sub) const {
    int d = sub.fld()->k;
    if (sub.fld()->p != p) throw std::domain_error("embed: characteristic mismatch");
    if (d == k) return FieldElement(shared_from_this(), sub.coeffs());
    if (d == 1) return from_int(static_cast<int64_t>(sub.coeffs()[0]));
    const auto* rootc = embed_root_coeffs(d);
    FieldElement root(shared_from_this(), *rootc);
    FieldElement acc = zero();
    const auto& c = sub.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * root + from_int(static_cast<int64_t>(c[i]));
    return acc;
}

FieldElement FieldSpec::project_to_subfield(const FieldElement& x, int d) const {
    Field sub = field(p, d);
    if (d == k) return FieldElement(sub, x.coeffs());
    if (d == 1) {
        // must be a prime-field element
        for (size_t i = 1; i < x.coeffs().size(); ++i)
            if (x.coeffs()[i]) throw std::domain_error("element not in prime subfield");
        return FieldElement(sub, {x.coeffs()[0]});
    }
    // Solve for coordinates in the power basis of the embedded root.
    const auto* rootc = embed_root_coeffs(d);
    FieldElement root(shared_from_this(), *rootc);
    // Build the k x d matrix of root^j coefficients and solve by elimination.
    std::vector<std::vector<int64_t>> cols;
    FieldElement powr = one();
    for (int j = 0; j < d; ++j) {
        std::vector<int64_t> col(powr.coeffs().begin(), powr.coeffs().end());
        cols.push_back(col);
        powr = powr * root;
    }
    // Gaussian elimination on the k x (d+1) augmented system mod p.
    std::vector<std::vector<int64_t>> aug(k, std::vector<int64_t>(d + 1, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < d; ++j) aug[i][j] = cols[j][i];
        aug[i][d] = x.coeffs()[i];
    }
    auto inv_mod = [&](int64_t a) {
        int64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int row = 0;
    std::vector<int> pivot_col(d, -1);
    for (int col = 0; col < d && row < k; ++col) {
        int pr = -1;
        for (int i = row; i < k; ++i)
            if (aug[i][col] % p != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[row], aug[pr]);
        int64_t iv = inv_mod(((aug[row][col] % p) + p) % p);
        for (int j = 0; j <= d; ++j) aug[row][j] = ((aug[row][j] % p) + p) % p * iv % p;
        for (int i = 0; i < k; ++i) {
            if (i == row) continue;
            int64_t f = ((aug[i][col] % p) + p) % p;
            if (!f) continue;
            for (int j = 0; j <= d; ++j) aug[i][j] = ((aug[i][j] - f * aug[row][j]) % p + p) % p;
        }
        pivot_col[col] = row;
        ++row;
    }
    std::vector<uint32_t> sol(d, 0);
    for (int col = 0; col < d; ++col)
        if (pivot_col[col] >= 0) sol[col] = static_cast<uint32_t>(aug[pivot_col[col]][d]);
    // Consistency: rows past the pivots must have zero rhs.
    FieldElement check = zero();
    FieldElement powr2 = one();
    for (int j = 0; j < d; ++j) {
        check = check + powr2 * from_int(sol[j]);
        powr2 = powr2 * root;
    }
    if (!(check == x)) throw std::domain_error("element not in subfield");
    return FieldElement(sub, std::move(sol));
}

FieldElement FieldSpec::norm_to_subfield(const FieldElement& x, int d) const {
    if (k % d != 0) throw std::domain_error("norm: subfield degree must divide k");
    FieldElement acc = one();
    FieldElement cur = x;
    uint64_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= static_cast<uint64_t>(p);
    for (int i = 0; i < k / d; ++i) {
        acc = acc * cur;
        cur = cur.pow(pd);
    }
    return project_to_subfield(acc, d);
}

FieldElement FieldSpec::trace_to_subfield(const FieldElement& x, int d) const {
    if (k % d != 0) throw std::domain_error("trace: subfield degree must divide k");
    FieldElement acc = zero();
    FieldElement cur = x;
    uint64_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= static_cast<uint64_t>(p);
    for (int i = 0; i < k / d; ++i) {
        acc = acc + cur;
        cur = cur.pow(pd);
    }
    return project_to_subfield(acc, d);
}

uint64_t FieldSpec::discrete_log(const FieldElement& x, const FieldElement& g) const {
    if (size > (1ull << 24)) throw std::domain_error("discrete_log: field too large");
    if (x.is_zero()) throw std::domain_error("discrete_log of zero");
    uint64_t n = size - 1;
    // verify generator
    for (auto [q, e] : unit_order_factorization()) {
        (void)e;
        if (g.pow(n / static_cast<uint64_t>(q)).is_one()) throw std::domain_error("discrete_log: g is not a generator");
    }
    // baby-step giant-step
    uint64_t m = 1;
    while (m * m < n) ++m;
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(m * 2);
    FieldElement cur = one();
    for (uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur.code(), j);
        cur = cur * g;
    }
    FieldElement factor = g.pow(m).inv();
    FieldElement gamma = x;
    for (uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(gamma.code());
        if (it != baby.end()) {
            uint64_t e = i * m + it->second;
            return e % n;
        }
        gamma = gamma * factor;
    }
    throw std::logic_error("discrete_log: not found");
}

FieldElement parse_element(const std::string& literal) {
    // p[^k]:[c0,c1,...]
    size_t colon = literal.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bad element literal: " + literal);
    std::string head = literal.substr(0, colon);
    int64_t p;
    int k = 1;
    size_t caret = head.find('^');
    if (caret == std::string::npos) {
        p = std::stoll(head);
    } else {
        p = std::stoll(head.substr(0, caret));
        k = std::stoi(head.substr(caret + 1));
    }
    std::string body = literal.substr(colon + 1);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::runtime_error("bad element literal: " + literal);
    body = body.substr(1, body.size() - 2);
    std::vector<uint32_t> coeffs;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) coeffs.push_back(static_cast<uint32_t>(std::stoul(tok)));
    }
    Field f = field(p, k);
    if (static_cast<int>(coeffs.size()) != k) throw std::runtime_error("bad element literal length: " + literal);
    return FieldElement(f, std::move(coeffs));
}

}  // namespace wordmap::ff
