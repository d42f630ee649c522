#include "ff/matrix.hpp"

#include <sstream>

#include "kernels/kernels.hpp"

namespace wordmap::ff {

Mat Mat::identity(const SmallField* f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_codes(const SmallField* f, int rows, int cols, std::vector<uint16_t> codes) {
    Mat m(f, rows, cols);
    if (codes.size() != m.a_.size()) throw std::domain_error("from_codes: size mismatch");
    m.a_ = std::move(codes);
    return m;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_ || f_ != o.f_) throw std::domain_error("matmul shape/field mismatch");
    Mat out(f_, r_, o.c_);
    if (f_->prime()) {
        kern::backend().matmul_mod(a_.data(), o.a_.data(), out.a_.data(), r_, c_, o.c_,
                                   static_cast<uint16_t>(f_->q));
        return out;
    }
    for (int i = 0; i < r_; ++i)
        for (int kk = 0; kk < c_; ++kk) {
            uint16_t v = at(i, kk);
            if (!v) continue;
            for (int j = 0; j < o.c_; ++j) {
                uint16_t& dst = out.at(i, j);
                dst = f_->add(dst, f_->mul(v, o.at(kk, j)));
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    Mat out(f_, r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_->add(a_[i], o.a_[i]);
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    Mat out(f_, r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_->sub(a_[i], o.a_[i]);
    return out;
}

Mat Mat::scaled(uint16_t c) const {
    Mat out(f_, r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_->mul(a_[i], c);
    return out;
}

Mat Mat::transpose() const {
    Mat out(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::entrywise_frob(int steps) const {
    Mat out(f_, r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_->frob_iter(a_[i], steps);
    return out;
}

Mat Mat::conj_transpose(int frob_steps) const { return entrywise_frob(frob_steps).transpose(); }

Mat Mat::pow(uint64_t e) const {
    Mat acc = identity(f_, r_);
    Mat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int pr = -1;
        for (int i = row; i < r_; ++i)
            if (at(i, col)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < c_; ++j) std::swap(at(row, j), at(pr, j));
        uint16_t iv = f_->inv(at(row, col));
        for (int j = 0; j < c_; ++j) at(row, j) = f_->mul(at(row, j), iv);
        for (int i = 0; i < r_; ++i) {
            if (i == row || !at(i, col)) continue;
            uint16_t factor = f_->neg(at(i, col));
            if (f_->prime()) {
                kern::backend().row_addmul_mod(&at(i, 0), &at(row, 0), factor, c_,
                                               static_cast<uint16_t>(f_->q));
            } else {
                for (int j = 0; j < c_; ++j)
                    at(i, j) = f_->add(at(i, j), f_->mul(factor, at(row, j)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int Mat::rank() const {
    Mat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

std::vector<std::vector<uint16_t>> Mat::kernel() const {
    Mat tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<uint16_t>> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint16_t> v(c_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f_->neg(tmp.at(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat Mat::inverse() const {
    if (r_ != c_) throw std::domain_error("inverse of non-square matrix");
    Mat aug(f_, r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = 1;
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != r_ || pivots[r_ - 1] >= c_)
        throw std::domain_error("matrix not invertible");
    for (int i = 0; i < r_; ++i)
        if (pivots[i] != i) throw std::domain_error("matrix not invertible");
    Mat out(f_, r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(i, j) = aug.at(i, c_ + j);
    return out;
}

bool Mat::invertible() const {
    if (r_ != c_) return false;
    return rank() == r_;
}

uint16_t Mat::det() const {
    if (r_ != c_) throw std::domain_error("det of non-square matrix");
    Mat tmp = *this;
    uint16_t d = 1;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int pr = -1;
        for (int i = row; i < r_; ++i)
            if (tmp.at(i, col)) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != row) {
            for (int j = 0; j < c_; ++j) std::swap(tmp.at(row, j), tmp.at(pr, j));
            d = f_->neg(d);
        }
        uint16_t piv = tmp.at(row, col);
        d = f_->mul(d, piv);
        uint16_t iv = f_->inv(piv);
        for (int i = row + 1; i < r_; ++i) {
            if (!tmp.at(i, col)) continue;
            uint16_t factor = f_->neg(f_->mul(tmp.at(i, col), iv));
            for (int j = col; j < c_; ++j)
                tmp.at(i, j) = f_->add(tmp.at(i, j), f_->mul(factor, tmp.at(row, j)));
        }
        ++row;
    }
    if (row < r_) return 0;
    return d;
}

uint16_t Mat::trace() const {
    uint16_t t = 0;
    for (int i = 0; i < r_; ++i) t = f_->add(t, at(i, i));
    return t;
}

Poly Mat::charpoly() const {
    if (r_ != c_) throw std::domain_error("charpoly of non-square matrix");
    const int n = r_;
    const Field& F = f_->F;
    if (n == 0) return Poly::one(F);
    // Hessenberg reduction by similarity, then the standard recurrence.
    Mat h = *this;
    for (int col = 0; col + 2 < n; ++col) {
        int pr = -1;
        for (int i = col + 1; i < n; ++i)
            if (h.at(i, col)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.at(col + 1, j), h.at(pr, j));
            for (int i = 0; i < n; ++i) std::swap(h.at(i, col + 1), h.at(i, pr));
        }
        uint16_t iv = f_->inv(h.at(col + 1, col));
        for (int i = col + 2; i < n; ++i) {
            uint16_t factor = f_->mul(h.at(i, col), iv);
            if (!factor) continue;
            uint16_t nf = f_->neg(factor);
            // row_i += nf * row_{col+1}; col_{col+1} += factor * col_i
            for (int j = 0; j < n; ++j) h.at(i, j) = f_->add(h.at(i, j), f_->mul(nf, h.at(col + 1, j)));
            for (int j = 0; j < n; ++j) h.at(j, col + 1) = f_->add(h.at(j, col + 1), f_->mul(factor, h.at(j, i)));
        }
    }
    // p_0 = 1, p_m(x) = (x - h[m-1][m-1]) p_{m-1}
    //                  - sum_{i=1..m-1} h[m-1-i][m-1] (prod_{j=1..i} h[m-j][m-j-1]) p_{m-1-i}
    std::vector<Poly> ps;
    ps.push_back(Poly::one(F));
    for (int m = 1; m <= n; ++m) {
        FieldElement diag = F->from_code(h.at(m - 1, m - 1));
        Poly pm = (Poly::x(F) - Poly::constant(diag)) * ps[m - 1];
        FieldElement prod = F->one();
        for (int i = 1; i <= m - 1; ++i) {
            prod = prod * F->from_code(h.at(m - i, m - i - 1));
            FieldElement c = F->from_code(h.at(m - 1 - i, m - 1)) * prod;
            pm = pm - ps[m - 1 - i].scaled(c);
        }
        ps.push_back(pm);
    }
    return ps[n];
}

uint64_t Mat::order(uint64_t cap) const {
    Mat acc = *this;
    uint64_t e = 1;
    while (!acc.is_identity()) {
        acc = acc * (*this);
        ++e;
        if (e > cap) throw std::runtime_error("matrix order exceeds cap");
    }
    return e;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        if (i) os << ";";
        for (int j = 0; j < c_; ++j) {
            if (j) os << ",";
            os << f_->lift(at(i, j)).str();
        }
    }
    return os.str();
}

Mat parse_matrix(const std::string& literal) {
    std::vector<std::vector<uint16_t>> rows;
    const SmallField* f = nullptr;
    std::stringstream rs(literal);
    std::string rowtok;
    while (std::getline(rs, rowtok, ';')) {
        std::vector<uint16_t> row;
        // split on commas outside brackets
        std::vector<std::string> entries;
        std::string cur;
        int depth = 0;
        for (char ch : rowtok) {
            if (ch == '[') ++depth;
            if (ch == ']') --depth;
            if (ch == ',' && depth == 0) {
                entries.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) entries.push_back(cur);
        for (auto& e : entries) {
            FieldElement x = parse_element(e);
            if (!f) f = small_field(x.fld());
            row.push_back(static_cast<uint16_t>(x.code()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty matrix literal");
    int n = static_cast<int>(rows.size());
    int m = static_cast<int>(rows[0].size());
    Mat out(f, n, m);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != m) throw std::runtime_error("ragged matrix literal");
        for (int j = 0; j < m; ++j) out.at(i, j) = rows[i][j];
    }
    return out;
}

Mat block_diag(const std::vector<Mat>& blocks) {
    if (blocks.empty()) throw std::domain_error("block_diag: no blocks");
    int n = 0;
    for (auto& b : blocks) {
        if (b.rows() != b.cols()) throw std::domain_error("block_diag: non-square block");
        n += b.rows();
    }
    Mat out(blocks[0].fld(), n, n);
    int off = 0;
    for (auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return out;
}

MatG::MatG(Field f, int rows, int cols)
    : f_(std::move(f)), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, FieldElement()) {
    for (auto& x : a_) x = f_->zero();
}

MatG MatG::lift(const Mat& m, const Field& ext) {
    MatG out(ext, m.rows(), m.cols());
    const Field& base = m.fld()->F;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = ext->embed(base->from_code(m.at(i, j)));
    return out;
}

MatG MatG::operator-(const MatG& o) const {
    MatG out(f_, r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

int MatG::rank() const {
    std::vector<FieldElement> w = a_;
    auto at2 = [&](int i, int j) -> FieldElement& { return w[static_cast<size_t>(i) * c_ + j]; };
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int pr = -1;
        for (int i = row; i < r_; ++i)
            if (!at2(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < c_; ++j) std::swap(at2(row, j), at2(pr, j));
        FieldElement iv = at2(row, col).inv();
        for (int j = col; j < c_; ++j) at2(row, j) = at2(row, j) * iv;
        for (int i = row + 1; i < r_; ++i) {
            if (at2(i, col).is_zero()) continue;
            FieldElement factor = at2(i, col);
            for (int j = col; j < c_; ++j) at2(i, j) = at2(i, j) - factor * at2(row, j);
        }
        ++row;
    }
    return row;
}

}  // namespace wordmap::ff
