#include "classical/centralizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wordmap::classical {

using ff::Mat;
using ff::Poly;
using ff::SmallField;

int ElementaryDivisors::total_dim() const {
    int n = 0;
    for (auto& [d, sizes] : blocks)
        for (int s : sizes) n += d * s;
    return n;
}

ElementaryDivisors elementary_divisors(const SmallField* f, const Mat& g, uint64_t seed) {
    ElementaryDivisors out;
    Poly cp = g.charpoly();
    auto fac = ff::factor_poly(cp, seed);
    const int n = g.rows();
    for (auto& pf : fac) {
        // Jordan sizes from kernel ranks of f(g)^j
        int d = pf.factor.degree();
        std::vector<int> kernels;  // dim Ker f(g)^j, j = 1..mult
        Mat fg(f, n, n);
        {
            Mat pw = Mat::identity(f, n);
            for (int i = 0; i <= pf.factor.degree(); ++i) {
                uint16_t c = static_cast<uint16_t>(pf.factor.coeff(i).code());
                if (c) fg = fg + pw.scaled(c);
                if (i < pf.factor.degree()) pw = pw * g;
            }
        }
        Mat acc = fg;
        for (int j = 1; j <= pf.multiplicity; ++j) {
            kernels.push_back(n - acc.rank());
            acc = acc * fg;
        }
        // number of blocks of size >= j is (ker_j - ker_{j-1}) / d
        std::vector<int> atleast;
        int prev = 0;
        for (int j = 0; j < static_cast<int>(kernels.size()); ++j) {
            atleast.push_back((kernels[j] - prev) / d);
            prev = kernels[j];
        }
        std::vector<int> sizes;
        for (int j = 0; j < static_cast<int>(atleast.size()); ++j) {
            int exactly = atleast[j] - (j + 1 < static_cast<int>(atleast.size()) ? atleast[j + 1] : 0);
            for (int t = 0; t < exactly; ++t) sizes.push_back(j + 1);
        }
        std::sort(sizes.rbegin(), sizes.rend());
        out.blocks.push_back({d, std::move(sizes)});
    }
    if (out.total_dim() != n) throw std::logic_error("elementary_divisors: dimensions do not sum to n");
    return out;
}

BigInt gl_centralizer_order(int64_t q, const ElementaryDivisors& ed) {
    BigInt total = 1;
    for (auto& [d, sizes] : ed.blocks) {
        if (sizes.empty()) throw std::domain_error("gl_centralizer_order: empty partition");
        BigInt Q = 1;
        for (int i = 0; i < d; ++i) Q *= q;
        // sum of min(l_i, l_j) over ordered pairs
        int64_t expo = 0;
        for (int a : sizes)
            for (int b : sizes) expo += std::min(a, b);
        // multiplicities of each part size
        std::map<int, int> mult;
        for (int s : sizes) mult[s]++;
        int64_t kexp = 0;
        BigInt prod = 1;
        for (auto& [s, m] : mult) {
            (void)s;
            for (int k2 = 1; k2 <= m; ++k2) {
                BigInt Qk = 1;
                for (int i = 0; i < k2; ++i) Qk *= Q;
                prod *= Qk - 1;
                kexp += k2;
            }
        }
        BigInt Qpow = 1;
        for (int64_t i = 0; i < expo - kexp; ++i) Qpow *= Q;
        total *= Qpow * prod;
    }
    return total;
}

std::vector<Mat> commuting_algebra_basis(const Mat& g) {
    const SmallField* f = g.fld();
    const int n = g.rows();
    const int vars = n * n;
    Mat sys(f, vars, vars);
    auto var = [&](int i, int j) { return i * n + j; };
    int row = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int k2 = 0; k2 < n; ++k2) {
                sys.at(row, var(a, k2)) = f->add(sys.at(row, var(a, k2)), g.at(k2, b));
                sys.at(row, var(k2, b)) = f->sub(sys.at(row, var(k2, b)), g.at(a, k2));
            }
            ++row;
        }
    auto ker = sys.kernel();
    std::vector<Mat> basis;
    for (auto& v : ker) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[var(i, j)];
        basis.push_back(std::move(m));
    }
    return basis;
}

BigInt brute_centralizer_order(const ClassicalGroupSpec& spec, const Mat& g, uint64_t cap) {
    auto basis = commuting_algebra_basis(g);
    const SmallField* f = spec.mf;
    size_t d = basis.size();
    double total_log = d * std::log2(static_cast<double>(f->q));
    if (total_log > std::log2(static_cast<double>(cap)))
        throw std::runtime_error("brute_centralizer_order: commuting algebra too large to enumerate");
    // odometer over coefficient vectors with incremental updates
    std::vector<uint16_t> coef(d, 0);
    Mat cur(f, spec.n, spec.n);
    BigInt count = 0;
    while (true) {
        if (membership(spec, cur).member) ++count;
        // increment
        size_t pos = 0;
        while (pos < d) {
            uint16_t old = coef[pos];
            uint16_t nxt = static_cast<uint16_t>((old + 1) % f->q);
            coef[pos] = nxt;
            // cur += (nxt - old) * basis[pos]
            uint16_t delta = f->sub(nxt, old);
            for (int i = 0; i < spec.n; ++i)
                for (int j = 0; j < spec.n; ++j)
                    cur.at(i, j) = f->add(cur.at(i, j), f->mul(delta, basis[pos].at(i, j)));
            if (nxt != 0) break;
            ++pos;
        }
        if (pos == d) break;
    }
    return count;
}

}  // namespace wordmap::classical
