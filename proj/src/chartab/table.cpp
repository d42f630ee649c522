#include "chartab/table.hpp"

#include <algorithm>

namespace wordmap::chartab {

int64_t CharacterTable::degree(int i) const {
    Rat r = values[i][0].rational();
    if (!r.is_integer() || r.num <= 0) throw std::runtime_error("table: degree is not a positive integer");
    return r.num;
}

const std::vector<int>* CharacterTable::powermap(int64_t p) const {
    for (auto& [q, m] : powermaps)
        if (q == p) return &m;
    return nullptr;
}

int CharacterTable::class_power(int j, uint64_t n) const {
    uint64_t e = static_cast<uint64_t>(exponent);
    uint64_t r = n % e;
    if (r == 0) return 0;  // identity class
    int cur = j;
    uint64_t rest = r;
    for (auto& [p, m] : powermaps) {
        while (rest % static_cast<uint64_t>(p) == 0) {
            rest /= static_cast<uint64_t>(p);
            cur = m[cur];
        }
    }
    if (rest == 1) return cur;
    if (gcd64(static_cast<int64_t>(rest), exponent) != 1)
        throw std::runtime_error("table: missing power map for a prime dividing the exponent");
    // Galois permutation: the class j -> j^(rest) permutation matches columns
    // after twisting every character value by zeta -> zeta^rest.
    for (int cand = 0; cand < k; ++cand) {
        if (orders[cand] != orders[cur]) continue;
        if (sizes[cand] != sizes[cur]) continue;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if (!(values[i][cur].galois(static_cast<int64_t>(rest)) == values[i][cand])) ok = false;
        if (ok) return cand;
    }
    throw std::runtime_error("table: Galois power-class not found (corrupt table?)");
}

int CharacterTable::nonvanishing_profile(int j) const {
    int count = 0;
    for (int i = 0; i < k; ++i)
        if (!values[i][j].is_zero()) ++count;
    return count;
}

std::optional<OrthoViolation> check_orthogonality(const CharacterTable& t) {
    const CycContext* ctx = t.ctx();
    // trivial character must be row of ones (after sorting it is first; check any row of all ones exists)
    {
        bool found = false;
        for (int i = 0; i < t.k && !found; ++i) {
            bool ones = true;
            for (int j = 0; j < t.k && ones; ++j)
                if (!(t.values[i][j] == Cyc::integer(ctx, 1))) ones = false;
            found = ones;
        }
        if (!found) return OrthoViolation{"trivial-character", -1, -1, "no all-ones row"};
    }
    // degrees
    int64_t sq = 0;
    for (int i = 0; i < t.k; ++i) {
        Cyc d = t.values[i][0];
        if (!d.is_rational()) return OrthoViolation{"degree-integer", i, -1, d.str()};
        Rat r = d.rational();
        if (!r.is_integer() || r.num <= 0) return OrthoViolation{"degree-integer", i, -1, d.str()};
        if (t.order % r.num != 0) return OrthoViolation{"degree-divides", i, -1, r.str()};
        sq = checked_add(sq, checked_mul(r.num, r.num));
    }
    if (sq != t.order)
        return OrthoViolation{"degree-sum", -1, -1, std::to_string(sq) + " != " + std::to_string(t.order)};
    // row orthogonality: sum_j sizes[j] chi_i(j) chi_i'(j^-1) = |G| delta
    for (int i = 0; i < t.k; ++i)
        for (int i2 = i; i2 < t.k; ++i2) {
            Cyc acc(ctx);
            for (int j = 0; j < t.k; ++j) {
                Cyc term = t.values[i][j] * t.values[i2][t.inverse[j]];
                acc = acc + term.scaled(Rat(t.sizes[j]));
            }
            Cyc expect = Cyc::integer(ctx, i == i2 ? t.order : 0);
            if (!(acc == expect)) return OrthoViolation{"row", i, i2, (acc - expect).str()};
        }
    // column orthogonality: sum_i chi_i(j) chi_i(j'^-1) = delta_jj' |C(g_j)|
    for (int j = 0; j < t.k; ++j)
        for (int j2 = j; j2 < t.k; ++j2) {
            Cyc acc(ctx);
            for (int i = 0; i < t.k; ++i) acc = acc + t.values[i][j] * t.values[i][t.inverse[j2]];
            Cyc expect = Cyc::integer(ctx, j == j2 ? t.centralizer_order(j) : 0);
            if (!(acc == expect)) return OrthoViolation{"column", j, j2, (acc - expect).str()};
        }
    return std::nullopt;
}

namespace {

// chi values are algebraic integers, so den == 1 after normalization.
std::vector<int64_t> coeffs_mod_p(const Cyc& v, int64_t p) {
    if (v.den() != 1) throw std::runtime_error("table: non-integral character value " + v.str());
    std::vector<int64_t> out(v.nums().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = ((v.nums()[i] % p) + p) % p;
    return out;
}

std::vector<int64_t> cyc_mult_mod_p(const CycContext* ctx, const std::vector<int64_t>& a,
                                    const std::vector<int64_t>& b, int64_t p) {
    const int phi = ctx->phi;
    std::vector<int64_t> conv(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < phi; ++j) conv[i + j] = (conv[i + j] + a[i] * b[j]) % p;
    }
    std::vector<int64_t> out(conv.begin(), conv.begin() + phi);
    for (int j = phi; j < 2 * phi - 1; ++j) {
        if (!conv[j]) continue;
        const auto& row = ctx->xpow[j];
        for (int i = 0; i < phi; ++i) out[i] = ((out[i] + conv[j] * row[i]) % p + p) % p;
    }
    for (auto& x : out) x = ((x % p) + p) % p;
    return out;
}

}  // namespace

std::optional<OrthoViolation> check_powermap_consistency(const CharacterTable& t) {
    const CycContext* ctx = t.ctx();
    for (int64_t p : prime_factors_distinct(t.exponent))
        if (!t.powermap(p))
            return OrthoViolation{"powermap-missing", static_cast<int>(p), -1, "powermap incomplete"};
    for (auto& [p, m] : t.powermaps) {
        for (int j = 0; j < t.k; ++j) {
            int pj = m[j];
            if (pj < 0 || pj >= t.k) return OrthoViolation{"powermap", static_cast<int>(p), j, "index out of range"};
            int64_t o = t.orders[j];
            int64_t expect_order = o / gcd64(o, p);
            if (t.orders[pj] != expect_order)
                return OrthoViolation{"powermap", static_cast<int>(p), j, "order of p-th power class is wrong"};
            if (o % p != 0) {
                // p is invertible mod o: chi(g^p) is the Galois twist of chi(g)
                // by any t == p mod o with gcd(t, e) = 1.
                int64_t tw = p % o;
                if (tw == 0) tw = o;
                while (gcd64(tw, t.exponent) != 1) tw += o;
                for (int i = 0; i < t.k; ++i)
                    if (!(t.values[i][pj] == t.values[i][j].galois(tw)))
                        return OrthoViolation{"powermap", i, j, "Galois twist mismatch at prime " + std::to_string(p)};
            } else {
                // p divides the element order: exact equality is not a Galois
                // twist; the Dixon lift still must satisfy the Adams-operation
                // congruence chi(g^p) == chi(g)^p mod p in Z[zeta].
                for (int i = 0; i < t.k; ++i) {
                    auto base = coeffs_mod_p(t.values[i][j], p);
                    std::vector<int64_t> acc(ctx->phi, 0);
                    acc[0] = 1;
                    int64_t e = p;
                    while (e) {
                        if (e & 1) acc = cyc_mult_mod_p(ctx, acc, base, p);
                        e >>= 1;
                        if (e) base = cyc_mult_mod_p(ctx, base, base, p);
                    }
                    auto lhs = coeffs_mod_p(t.values[i][pj], p);
                    if (lhs != acc)
                        return OrthoViolation{"powermap", i, j,
                                              "Frobenius congruence fails at prime " + std::to_string(p)};
                }
            }
        }
    }
    return std::nullopt;
}

void validate_table(const CharacterTable& t) {
    if (t.k <= 0 || static_cast<int>(t.sizes.size()) != t.k || static_cast<int>(t.orders.size()) != t.k ||
        static_cast<int>(t.inverse.size()) != t.k || static_cast<int>(t.values.size()) != t.k)
        throw std::runtime_error("table: inconsistent dimensions");
    int64_t total = 0;
    for (int j = 0; j < t.k; ++j) {
        if (t.order % t.sizes[j] != 0) throw std::runtime_error("table: class size does not divide order");
        total = checked_add(total, t.sizes[j]);
        if (t.inverse[t.inverse[j]] != j) throw std::runtime_error("table: inverse map is not an involution");
        if (t.exponent % t.orders[j] != 0) throw std::runtime_error("table: element order does not divide exponent");
    }
    if (total != t.order) throw std::runtime_error("table: class sizes do not sum to order");
    if (t.sizes[0] != 1 || t.orders[0] != 1) throw std::runtime_error("table: class 0 is not the identity class");
    for (int64_t p : prime_factors_distinct(t.exponent))
        if (!t.powermap(p)) throw std::runtime_error("powermap incomplete");
    for (auto& [p, m] : t.powermaps) {
        if (t.exponent % p != 0) throw std::runtime_error("table: powermap prime does not divide exponent");
        if (static_cast<int>(m.size()) != t.k) throw std::runtime_error("table: powermap has wrong length");
    }
    if (auto v = check_orthogonality(t))
        throw std::runtime_error("table: orthogonality violation (" + v->kind + "): " + v->defect);
    if (auto v = check_powermap_consistency(t))
        throw std::runtime_error("table: power-map inconsistency (" + v->kind + "): " + v->defect);
    // Galois-orbit bound on every column
    for (int j = 0; j < t.k; ++j)
        if (t.nonvanishing_profile(j) > t.centralizer_order(j))
            throw std::runtime_error("table: nonvanishing profile exceeds centralizer order");
}

}  // namespace wordmap::chartab
