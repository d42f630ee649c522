#pragma once
// Centralizer orders: the GL partition formula over primary components, and
// brute-force counting through the commuting algebra for the other families.

#include "classical/eigen.hpp"

namespace wordmap::classical {

// Elementary divisor data: one entry per irreducible polynomial, with the
// multiset of Jordan block sizes over that polynomial.
struct ElementaryDivisors {
    std::vector<std::pair<int, std::vector<int>>> blocks;  // (deg f, sizes)
    int total_dim() const;
};

ElementaryDivisors elementary_divisors(const ff::SmallField* f, const ff::Mat& g, uint64_t seed = 0xE16E);

// |C_{GL_n(q)}(x)| from the standard partition formula.
BigInt gl_centralizer_order(int64_t q, const ElementaryDivisors& ed);

// Brute force |C_G(x)|: enumerate the commuting algebra (dimension d over the
// matrix entry field) and count members. Throws if |field|^d exceeds the cap.
BigInt brute_centralizer_order(const ClassicalGroupSpec& spec, const ff::Mat& g,
                               uint64_t cap = 1ull << 24);

// Commuting-algebra basis {X : Xg = gX} over the matrix entry field.
std::vector<ff::Mat> commuting_algebra_basis(const ff::Mat& g);

}  // namespace wordmap::classical
