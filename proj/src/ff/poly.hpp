#pragma once
// Univariate polynomials over a FieldSpec, normalized with no trailing zeros.
// Factorization is squarefree + distinct-degree + seeded equal-degree
// splitting (Cantor-Zassenhaus; trace construction in characteristic 2).

#include <cstdint>
#include <vector>

#include "ff/field.hpp"

namespace wordmap::ff {

class Poly {
  public:
    Poly() = default;
    Poly(Field f, std::vector<FieldElement> coeffs);
    static Poly zero(const Field& f) { return Poly(f, {}); }
    static Poly one(const Field& f);
    static Poly x(const Field& f);
    static Poly constant(const FieldElement& c);
    // coeffs given as field codes, least degree first
    static Poly from_codes(const Field& f, const std::vector<uint64_t>& codes);

    const Field& fld() const { return f_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const FieldElement& lead() const { return c_.back(); }
    FieldElement coeff(int i) const;

    bool operator==(const Poly& o) const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElement& c) const;
    Poly monic() const;

    // division with remainder; divisor must be nonzero
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    Poly operator%(const Poly& o) const;
    Poly operator/(const Poly& o) const;

    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    Poly powmod(uint64_t e, const Poly& m) const;
    // x -> x^(p^reps) composed with this... (substitutes this for x in x^(p^reps) mod m)
    std::string str() const;

  private:
    Field f_;
    std::vector<FieldElement> c_;
    void normalize();
};

Poly gcd(Poly a, Poly b);

struct PolyFactor {
    Poly factor;  // monic irreducible
    int multiplicity;
};

// Factors f into monic irreducibles times lead(f); deterministic given seed.
// Splitting retries are capped; exhaustion raises.
std::vector<PolyFactor> factor_poly(const Poly& f, uint64_t seed);

// Roots in the coefficient field, with multiplicity.
std::vector<std::pair<FieldElement, int>> roots(const Poly& f, uint64_t seed);

}  // namespace wordmap::ff
