#include "ff/smallfield.hpp"

#include <map>
#include <mutex>

namespace wordmap::ff {

uint16_t SmallField::inv(uint16_t a) const {
    if (a == 0) throw std::domain_error("SmallField: inverse of zero");
    if (prime()) {
        // Fermat
        return pow(a, q - 2);
    }
    return inv_tab_[a];
}

uint16_t SmallField::pow(uint16_t a, uint64_t e) const {
    uint16_t acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

uint16_t SmallField::embed_code(const SmallField& sub, uint16_t code) const {
    if (sub.p != p || k % sub.k != 0) throw std::domain_error("embed_code: bad subfield");
    if (sub.k == k) return code;
    return static_cast<uint16_t>(F->embed(sub.F->from_code(code)).code());
}

const SmallField* small_field(int64_t p, int k) {
    static std::mutex mu;
    static std::map<std::pair<int64_t, int>, std::unique_ptr<SmallField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find({p, k});
    if (it != registry.end()) return it->second.get();

    Field F = field(p, k);
    if (F->size > 2048) throw std::domain_error("small_field: q too large for code arithmetic");
    auto sf = std::make_unique<SmallField>();
    sf->F = F;
    sf->p = p;
    sf->k = k;
    sf->q = static_cast<uint32_t>(F->size);
    const uint32_t q = sf->q;

    sf->frob_tab_.resize(q);
    for (uint32_t a = 0; a < q; ++a)
        sf->frob_tab_[a] = static_cast<uint16_t>(F->from_code(a).pow(static_cast<uint64_t>(p)).code());

    if (k > 1) {
        sf->add_tab_.resize(static_cast<size_t>(q) * q);
        sf->mul_tab_.resize(static_cast<size_t>(q) * q);
        sf->neg_tab_.resize(q);
        sf->inv_tab_.resize(q);
        std::vector<FieldElement> elems;
        elems.reserve(q);
        for (uint32_t a = 0; a < q; ++a) elems.push_back(F->from_code(a));
        for (uint32_t a = 0; a < q; ++a) {
            sf->neg_tab_[a] = static_cast<uint16_t>((-elems[a]).code());
            if (a) sf->inv_tab_[a] = static_cast<uint16_t>(elems[a].inv().code());
            for (uint32_t b = 0; b < q; ++b) {
                sf->add_tab_[static_cast<size_t>(a) * q + b] = static_cast<uint16_t>((elems[a] + elems[b]).code());
                sf->mul_tab_[static_cast<size_t>(a) * q + b] = static_cast<uint16_t>((elems[a] * elems[b]).code());
            }
        }
    }
    sf->gen_code = static_cast<uint16_t>(F->gen().code());
    auto* out = sf.get();
    registry[{p, k}] = std::move(sf);
    return out;
}

const SmallField* small_field(const Field& F) { return small_field(F->p, F->k); }

}  // namespace wordmap::ff
