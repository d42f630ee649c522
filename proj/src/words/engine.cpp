#include <algorithm>
#include <cmath>

#include "words/words.hpp"

namespace wordmap::words {

std::string status_name(Status s) {
    switch (s) {
        case Status::Surjective: return "surjective";
        case Status::NotSurjective: return "not-surjective";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

Engine::Engine(const CharacterTable& t) : t_(t), ctx_(t_.ctx()), phi_(ctx_->phi) {
    degree_.resize(t_.k);
    lcm_deg_ = 1;
    for (int i = 0; i < t_.k; ++i) {
        degree_[i] = t_.degree(i);
        lcm_deg_ = lcm64_checked(lcm_deg_, degree_[i]);
    }
    vals_.assign(t_.k, {});
    for (int i = 0; i < t_.k; ++i) {
        vals_[i].reserve(t_.k);
        for (int j = 0; j < t_.k; ++j) {
            const chartab::Cyc& v = t_.values[i][j];
            if (v.den() != 1) throw std::runtime_error("Engine: non-integral character value");
            vals_[i].push_back(v.nums());
        }
    }
}

namespace {

// out (len phi) += reduce(conv(a, b)) * scale, all checked int64
void mul_acc(const chartab::CycContext* ctx, const std::vector<int64_t>& a,
             const std::vector<int64_t>& b, int64_t scale, std::vector<int64_t>& conv_scratch,
             std::vector<int64_t>& out) {
    const int phi = ctx->phi;
    std::fill(conv_scratch.begin(), conv_scratch.end(), 0);
    for (int i = 0; i < phi; ++i) {
        if (!a[i]) continue;
        int64_t ai = checked_mul(a[i], scale);
        for (int j = 0; j < phi; ++j) {
            if (!b[j]) continue;
            conv_scratch[i + j] = checked_add(conv_scratch[i + j], checked_mul(ai, b[j]));
        }
    }
    for (int i = 0; i < phi; ++i) out[i] = checked_add(out[i], conv_scratch[i]);
    for (int j = phi; j < 2 * phi - 1; ++j) {
        if (!conv_scratch[j]) continue;
        const auto& row = ctx->xpow[j];
        for (int i = 0; i < phi; ++i)
            out[i] = checked_add(out[i], checked_mul(conv_scratch[j], row[i]));
    }
}

std::vector<int64_t> mul_reduced(const chartab::CycContext* ctx, const std::vector<int64_t>& a,
                                 const std::vector<int64_t>& b) {
    std::vector<int64_t> conv(2 * ctx->phi - 1, 0), out(ctx->phi, 0);
    mul_acc(ctx, a, b, 1, conv, out);
    return out;
}

}  // namespace

Rat Engine::compute_constant(int a, int b, int c) const {
    // (|C_a||C_b|/|G|) * sum_i chi_i(a) chi_i(b) chi_i(c^-1) / d_i, exactly.
    std::vector<int64_t> acc(phi_, 0), conv(2 * phi_ - 1, 0);
    int invc = t_.inverse[c];
    for (int i = 0; i < t_.k; ++i) {
        auto ab = mul_reduced(ctx_, vals_[i][a], vals_[i][b]);
        mul_acc(ctx_, ab, vals_[i][invc], lcm_deg_ / degree_[i], conv, acc);
    }
    for (int i = 1; i < phi_; ++i)
        if (acc[i]) throw std::runtime_error("structure_constant: non-rational character sum (corrupt table?)");
    // value = sizes[a] * sizes[b] * acc0 / (|G| * L)
    Rat v = Rat(t_.sizes[a]) * Rat(t_.sizes[b]) * Rat(acc[0]) / (Rat(t_.order) * Rat(lcm_deg_));
    if (v.sign() < 0) throw std::runtime_error("structure_constant: negative count (corrupt table?)");
    if (!v.is_integer()) throw std::runtime_error("structure_constant: non-integral count (corrupt table?)");
    return v;
}

Rat Engine::structure_constant(int a, int b, int c) const {
    uint64_t key = (static_cast<uint64_t>(a) << 40) | (static_cast<uint64_t>(b) << 20) |
                   static_cast<uint64_t>(c);
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Rat v = compute_constant(a, b, c);
    std::lock_guard<std::mutex> lock(memo_mu_);
    memo_.emplace(key, v);
    return v;
}

bool Engine::positive(int a, int b, int c) const { return structure_constant(a, b, c).sign() > 0; }

bool Engine::triple_positive(int a, int b, int d, int c) const {
    // sum_i chi(a) chi(b) chi(d) conj(chi)(c) / d_i^2 != 0 decides whether
    // C_a C_b C_d covers C_c; expand through the intermediate class t:
    // equivalently exists t with (a,b,t) and (t,d,c) positive.
    for (int t = 0; t < t_.k; ++t)
        if (positive(a, b, t) && positive(t, d, c)) return true;
    return false;
}

bool Engine::cube_positive(int s, int c) const {
    chartab::Cyc acc(ctx_);
    for (int i = 0; i < t_.k; ++i) {
        chartab::Cyc term = t_.values[i][s] * t_.values[i][s] * t_.values[i][s] *
                            t_.values[i][t_.inverse[c]];
        acc = acc + term.scaled(Rat(1, checked_mul(degree_[i], degree_[i])));
    }
    if (!acc.is_rational()) throw std::runtime_error("cube_positive: non-rational sum (corrupt table?)");
    Rat v = acc.rational();
    if (v.sign() < 0) throw std::runtime_error("cube_positive: negative weighted count");
    return v.sign() > 0;
}

std::vector<int> Engine::power_map(uint64_t N) const {
    std::vector<int> out(t_.k);
    for (int j = 0; j < t_.k; ++j) out[j] = t_.class_power(j, N);
    return out;
}

std::vector<int> Engine::power_image(uint64_t N) const {
    auto m = power_map(N);
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

std::vector<int> Engine::two_element_classes() const {
    std::vector<int> out;
    for (int j = 0; j < t_.k; ++j) {
        int64_t o = t_.orders[j];
        while (o % 2 == 0) o /= 2;
        if (o == 1) out.push_back(j);
    }
    return out;
}

std::vector<int> Engine::product_support(const std::vector<int>& A, const std::vector<int>& B) const {
    std::vector<bool> hit(t_.k, false);
    for (int c = 0; c < t_.k; ++c) {
        bool found = false;
        for (int a : A) {
            for (int b : B) {
                if (positive(a, b, c)) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        hit[c] = found;
    }
    std::vector<int> out;
    for (int c = 0; c < t_.k; ++c)
        if (hit[c]) out.push_back(c);
    return out;
}

TailBound tail_bound(const Engine& e, int64_t D, int a, int b, int c) {
    const CharacterTable& t = e.table();
    const chartab::CycContext* ctx = t.ctx();
    chartab::Cyc acc(ctx);
    for (int i = 0; i < t.k; ++i) {
        if (t.degree(i) < D) continue;
        chartab::Cyc term = t.values[i][a] * t.values[i][b] * t.values[i][t.inverse[c]];
        acc = acc + term.scaled(Rat(1, t.degree(i)));
    }
    TailBound out;
    out.actual = acc.abs_upper_bound();
    double prod = static_cast<double>(t.centralizer_order(a)) * static_cast<double>(t.centralizer_order(b)) *
                  static_cast<double>(t.centralizer_order(c));
    out.bound = std::sqrt(prod) / static_cast<double>(D);
    return out;
}

}  // namespace wordmap::words
