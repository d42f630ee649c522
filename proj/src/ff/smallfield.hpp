#pragma once
// Code-level field arithmetic for the hot paths. Elements are integer codes
// (sum c_i p^i < p^k). Prime fields compute directly mod p and ride the SIMD
// kernels; extension fields (all that we enumerate over are <= F_289) use
// multiplication tables.

#include <cstdint>
#include <vector>

#include "ff/field.hpp"

namespace wordmap::ff {

class SmallField {
  public:
    Field F;
    int64_t p;
    int k;
    uint32_t q;         // p^k
    uint16_t gen_code;  // canonical generator

    bool prime() const { return k == 1; }

    uint16_t add(uint16_t a, uint16_t b) const {
        if (prime()) {
            uint32_t s = static_cast<uint32_t>(a) + b;
            return static_cast<uint16_t>(s >= q ? s - q : s);
        }
        return add_tab_[static_cast<size_t>(a) * q + b];
    }
    uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
    uint16_t neg(uint16_t a) const {
        if (prime()) return static_cast<uint16_t>(a ? q - a : 0);
        return neg_tab_[a];
    }
    uint16_t mul(uint16_t a, uint16_t b) const {
        if (prime()) return static_cast<uint16_t>(static_cast<uint32_t>(a) * b % q);
        return mul_tab_[static_cast<size_t>(a) * q + b];
    }
    uint16_t inv(uint16_t a) const;
    uint16_t pow(uint16_t a, uint64_t e) const;
    uint16_t frob(uint16_t a) const { return frob_tab_[a]; }  // a^p
    // a^(p^i)
    uint16_t frob_iter(uint16_t a, int i) const {
        for (int j = 0; j < i; ++j) a = frob(a);
        return a;
    }

    FieldElement lift(uint16_t code) const { return F->from_code(code); }
    uint16_t code(const FieldElement& x) const { return static_cast<uint16_t>(x.code()); }

    // Embedding codes of the canonical subfield F_{p^d} (d | k).
    uint16_t embed_code(const SmallField& sub, uint16_t code) const;

  private:
    friend const SmallField* small_field(int64_t p, int k);
    std::vector<uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_, frob_tab_;
};

// Registry; q = p^k must be <= 2048 for extensions, <= 2048 for primes.
const SmallField* small_field(int64_t p, int k);
const SmallField* small_field(const Field& F);

}  // namespace wordmap::ff
