#pragma once
// Elements of Q(zeta_e) as rational vectors reduced mod the e-th cyclotomic
// polynomial (degree < phi(e)). Coefficients are a common-denominator int64
// fraction; all arithmetic is overflow-checked and exact.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "base/util.hpp"

namespace wordmap::chartab {

struct CycContext {
    int64_t e;
    int phi;
    std::vector<int64_t> cyclotomic_poly;        // Phi_e, monic, length phi+1
    std::vector<std::vector<int64_t>> xpow;      // x^j mod Phi_e for 0 <= j < max(e, 2*phi-1)
    std::vector<std::complex<double>> unit_root; // zeta_e^j, j < e
};

const CycContext* cyc_context(int64_t e);

class Cyc {
  public:
    Cyc() : ctx_(nullptr), den_(1) {}
    explicit Cyc(const CycContext* ctx);  // zero
    static Cyc from_rat(const CycContext* ctx, const Rat& r);
    static Cyc integer(const CycContext* ctx, int64_t n);
    // zeta_e^j
    static Cyc root_of_unity(const CycContext* ctx, int64_t j);
    static Cyc from_terms(const CycContext* ctx, const std::vector<std::pair<Rat, int64_t>>& terms);

    const CycContext* ctx() const { return ctx_; }
    int64_t conductor() const { return ctx_->e; }
    const std::vector<int64_t>& nums() const { return num_; }
    int64_t den() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational() const;  // throws if not rational

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator-() const;
    Cyc scaled(const Rat& r) const;

    // Galois action zeta -> zeta^s, gcd(s, e) = 1.
    Cyc galois(int64_t s) const;
    Cyc conj() const { return galois(ctx_->e - 1); }

    // Complex value and a certified bound on the evaluation error.
    std::complex<double> complex_value() const;
    double abs_upper_bound() const;

    std::string str() const;  // canonical literal, e.g. "2+-1*E^3+1/2*E^5"

  private:
    const CycContext* ctx_;
    std::vector<int64_t> num_;
    int64_t den_;
    void normalize();
};

Cyc parse_cyc(const CycContext* ctx, const std::string& literal);

}  // namespace wordmap::chartab
