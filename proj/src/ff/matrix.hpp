#pragma once
// Dense matrices over a SmallField (u16 codes, kernel-backed for prime
// fields) plus a generic FieldElement matrix for exact work in large
// extensions (eigenspace ranks over F_{q^d}).

#include <cstdint>
#include <string>
#include <vector>

#include "ff/poly.hpp"
#include "ff/smallfield.hpp"

namespace wordmap::ff {

class Mat {
  public:
    Mat() : f_(nullptr), r_(0), c_(0) {}
    Mat(const SmallField* f, int rows, int cols)
        : f_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    static Mat identity(const SmallField* f, int n);
    static Mat from_codes(const SmallField* f, int rows, int cols, std::vector<uint16_t> codes);

    const SmallField* fld() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    uint16_t at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    uint16_t& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const std::vector<uint16_t>& data() const { return a_; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_identity() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(uint16_t c) const;
    Mat transpose() const;
    Mat conj_transpose(int frob_steps) const;  // entrywise x -> x^(p^steps), then transpose
    Mat entrywise_frob(int steps) const;
    Mat pow(uint64_t e) const;
    Mat inverse() const;  // throws std::domain_error if singular
    bool invertible() const;
    uint16_t det() const;
    uint16_t trace() const;
    int rank() const;
    // Right kernel basis, rows = basis vectors (length cols()).
    std::vector<std::vector<uint16_t>> kernel() const;
    // Row-reduce in place; returns pivot column list.
    std::vector<int> rref();

    Poly charpoly() const;  // over fld()->F
    uint64_t order(uint64_t cap = 1ull << 40) const;  // multiplicative order; throws past cap

    std::string str() const;  // matrix literal: rows ';'-separated, entries ','-separated field literals

  private:
    const SmallField* f_;
    int r_, c_;
    std::vector<uint16_t> a_;
};

Mat parse_matrix(const std::string& literal);

// Block-diagonal assembly.
Mat block_diag(const std::vector<Mat>& blocks);

// Generic matrices over arbitrary FieldSpec (cold paths only).
class MatG {
  public:
    MatG() : r_(0), c_(0) {}
    MatG(Field f, int rows, int cols);
    static MatG lift(const Mat& m, const Field& ext);  // embed codes into an extension of m's field

    int rows() const { return r_; }
    int cols() const { return c_; }
    FieldElement& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const FieldElement& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    MatG operator-(const MatG& o) const;
    int rank() const;

  private:
    Field f_;
    int r_, c_;
    std::vector<FieldElement> a_;
};

}  // namespace wordmap::ff
