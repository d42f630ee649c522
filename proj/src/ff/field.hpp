#pragma once
// Exact arithmetic over F_p and F_{p^k}, with deterministic canonical moduli.
//
// The modulus for (p, k) is the monic irreducible polynomial of degree k over
// F_p whose non-leading coefficient vector (c_0, ..., c_{k-1}) has the least
// value of sum c_i * p^i. This is reproducible without Conway-polynomial
// tables and is documented in the README; serialized element literals are
// portable across runs.

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "base/util.hpp"

namespace wordmap::ff {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// Returns the canonical field with p prime, k >= 1, p^k < 2^62.
Field field(int64_t p, int k = 1);

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field f, std::vector<uint32_t> coeffs);

    const Field& fld() const { return f_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;
    FieldElement frobenius() const;  // x -> x^p

    // Encodes sum c_i p^i; unique in [0, p^k).
    uint64_t code() const;

    // Multiplicative order (0 for the zero element is an error).
    uint64_t order() const;

    std::string str() const;  // "p^k:[c0,c1,...]"

  private:
    Field f_;
    std::vector<uint32_t> c_;  // length k, reduced mod p
};

class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    int64_t p;
    int k;
    uint64_t size;                  // p^k
    std::vector<uint32_t> modulus;  // monic, length k+1

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_code(uint64_t code) const;
    FieldElement from_int(int64_t n) const;  // image of n under Z -> F_p -> F_{p^k}
    FieldElement gen() const;                // canonical multiplicative generator

    // Embedding of the canonical subfield F_{p^d}, d | k: the image of that
    // field's canonical variable, chosen as the root of its modulus with the
    // least code. embed() maps a subfield element through it.
    FieldElement embed(const FieldElement& sub) const;

    // Inverse of embed() on the image; throws if x is not in the subfield.
    FieldElement project_to_subfield(const FieldElement& x, int d) const;

    FieldElement norm_to_subfield(const FieldElement& x, int d) const;
    FieldElement trace_to_subfield(const FieldElement& x, int d) const;

    // Discrete log base g: least non-negative e with g^e = x. Requires g to
    // generate the multiplicative group and size <= 2^24.
    uint64_t discrete_log(const FieldElement& x, const FieldElement& g) const;

    const std::vector<std::pair<int64_t, int>>& unit_order_factorization() const;

  private:
    friend Field field(int64_t, int);
    mutable std::mutex cache_mu_;
    mutable std::vector<std::pair<int64_t, int>> unit_factors_;
    mutable std::vector<uint32_t> gen_coeffs_;
    mutable std::vector<std::pair<int, std::vector<uint32_t>>> embed_roots_;
    const std::vector<uint32_t>* embed_root_coeffs(int d) const;
};

FieldElement parse_element(const std::string& literal);

// Low-level helpers over the prime field (coefficient vectors mod p),
// exposed for the polynomial layer.
namespace detail {
std::vector<uint32_t> pmul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, int64_t p);
std::vector<uint32_t> pmod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, int64_t p);
bool irreducible_mod_p(const std::vector<uint32_t>& f, int64_t p);
}  // namespace detail

}  // namespace wordmap::ff
