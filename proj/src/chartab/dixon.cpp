#include <algorithm>
#include <cmath>

#include "chartab/table.hpp"
#include "ff/poly.hpp"

namespace wordmap::chartab {

namespace {

// Linear algebra mod ell on small dense matrices (k <= ~40).
struct ModMat {
    int n = 0;
    int64_t ell = 0;
    std::vector<int64_t> a;
    ModMat() = default;
    ModMat(int n_, int64_t ell_) : n(n_), ell(ell_), a(static_cast<size_t>(n_) * n_, 0) {}
    int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

int64_t pow_mod(int64_t b, int64_t e, int64_t m) {
    int64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<int64_t>(static_cast<__int128>(r) * b % m);
        b = static_cast<int64_t>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

int64_t inv_mod(int64_t x, int64_t ell) { return pow_mod(((x % ell) + ell) % ell, ell - 2, ell); }

// Tonelli-Shanks; ell odd prime, x a QR.
int64_t sqrt_mod(int64_t x, int64_t ell) {
    x = ((x % ell) + ell) % ell;
    if (x == 0) return 0;
    if (pow_mod(x, (ell - 1) / 2, ell) != 1) throw std::runtime_error("sqrt_mod: not a quadratic residue");
    if (ell % 4 == 3) return pow_mod(x, (ell + 1) / 4, ell);
    int64_t q = ell - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    int64_t z = 2;
    while (pow_mod(z, (ell - 1) / 2, ell) != ell - 1) ++z;
    int64_t m = s, c = pow_mod(z, q, ell), t = pow_mod(x, q, ell), r = pow_mod(x, (q + 1) / 2, ell);
    while (t != 1) {
        int64_t tt = t;
        int i = 0;
        while (tt != 1) {
            tt = static_cast<int64_t>(static_cast<__int128>(tt) * tt % ell);
            ++i;
        }
        int64_t b = c;
        for (int64_t j = 0; j < m - i - 1; ++j) b = static_cast<int64_t>(static_cast<__int128>(b) * b % ell);
        m = i;
        c = static_cast<int64_t>(static_cast<__int128>(b) * b % ell);
        t = static_cast<int64_t>(static_cast<__int128>(t) * c % ell);
        r = static_cast<int64_t>(static_cast<__int128>(r) * b % ell);
    }
    return r;
}

// Row basis in reduced echelon form for a subspace of F_ell^k.
struct Subspace {
    std::vector<std::vector<int64_t>> rows;
    std::vector<int> pivots;
};

Subspace echelonize(std::vector<std::vector<int64_t>> rows, int64_t ell) {
    Subspace s;
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < cols; ++c) {
        int pr = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] % ell != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        int64_t iv = inv_mod(rows[r][c], ell);
        for (auto& x : rows[r]) x = static_cast<int64_t>(static_cast<__int128>(((x % ell) + ell) % ell) * iv % ell);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r) continue;
            int64_t f = ((rows[i][c] % ell) + ell) % ell;
            if (!f) continue;
            for (int j = 0; j < cols; ++j)
                rows[i][j] = ((rows[i][j] - static_cast<int64_t>(static_cast<__int128>(f) * rows[r][j] % ell)) % ell + ell) % ell;
        }
        s.pivots.push_back(c);
        ++r;
        if (r == static_cast<int>(rows.size())) break;
    }
    rows.resize(r);
    s.rows = std::move(rows);
    return s;
}

}  // namespace

GroupTable dixon_schneider(const groups::EnumeratedGroup& g, uint64_t seed) {
    const int k = g.num_classes();
    const int64_t n = g.order();
    const int64_t e = g.exponent();

    // Dixon prime: least ell == 1 (mod e) with ell > 2 sqrt(|G|).
    int64_t bound = static_cast<int64_t>(2.0 * std::sqrt(static_cast<double>(n))) + 1;
    int64_t ell = 0;
    for (int64_t t = 1; t < 2000000; ++t) {
        int64_t cand = 1 + e * t;
        if (cand <= bound) continue;
        if (is_prime_u64(static_cast<uint64_t>(cand))) {
            ell = cand;
            break;
        }
    }
    if (!ell) throw std::runtime_error("dixon: modulus search failure");

    // Class multiplication coefficients a[i][j][kc] = #{(x,y) in C_i x C_j : xy = z_kc}.
    std::vector<groups::Element> reps;
    for (int c = 0; c < k; ++c) reps.push_back(g.element(g.class_rep(c)));
    std::vector<ModMat> M(k, ModMat(k, ell));
    {
        std::vector<std::vector<int64_t>> cnt(static_cast<size_t>(k),
                                              std::vector<int64_t>(static_cast<size_t>(k) * k, 0));
        for (int i = 0; i < k; ++i) {
            for (int32_t xid : g.class_elements(i)) {
                groups::Element xin = g.element(g.inverse_id(xid));
                for (int kc = 0; kc < k; ++kc) {
                    groups::Element y = xin * reps[kc];
                    int j = g.class_of_id(g.id_of(y));
                    cnt[i][static_cast<size_t>(j) * k + kc]++;
                }
            }
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int kc = 0; kc < k; ++kc) M[i].at(j, kc) = cnt[i][static_cast<size_t>(j) * k + kc] % ell;
    }

    // Split F_ell^k into common eigenspaces of the commuting family {M_i}.
    Rng rng(seed ^ 0xd1c50ull);
    std::vector<Subspace> spaces;
    {
        std::vector<std::vector<int64_t>> full;
        for (int i = 0; i < k; ++i) {
            std::vector<int64_t> row(k, 0);
            row[i] = 1;
            full.push_back(std::move(row));
        }
        spaces.push_back(echelonize(std::move(full), ell));
    }
    ff::Field Fl = ff::field(ell, 1);
    int attempts = 0;
    while (true) {
        bool all_one = true;
        for (auto& s : spaces)
            if (s.rows.size() > 1) all_one = false;
        if (all_one) break;
        if (++attempts > 32) throw std::runtime_error("dixon: eigenspace splitting failed after retry cap");
        // random combination of class matrices
        ModMat C(k, ell);
        for (int i = 0; i < k; ++i) {
            int64_t r = static_cast<int64_t>(rng.below(static_cast<uint64_t>(ell)));
            if (!r) continue;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    C.at(a, b) = (C.at(a, b) + static_cast<__int128>(r) * M[i].at(a, b)) % ell;
        }
        std::vector<Subspace> next;
        for (auto& s : spaces) {
            int d = static_cast<int>(s.rows.size());
            if (d == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // restriction R: C * v_t = sum_s R[s][t] v_s  (vectors as columns)
            ModMat R(d, ell);
            bool invariant = true;
            std::vector<std::vector<int64_t>> images(d, std::vector<int64_t>(k, 0));
            for (int t = 0; t < d; ++t) {
                for (int r2 = 0; r2 < k; ++r2) {
                    __int128 acc = 0;
                    for (int c2 = 0; c2 < k; ++c2) acc += static_cast<__int128>(C.at(r2, c2)) * s.rows[t][c2];
                    images[t][r2] = static_cast<int64_t>(acc % ell);
                }
            }
            for (int t = 0; t < d && invariant; ++t) {
                std::vector<int64_t> w = images[t];
                for (int r2 = 0; r2 < d; ++r2) {
                    int64_t c = w[s.pivots[r2]];
                    R.at(r2, t) = c;
                    if (!c) continue;
                    for (int j = 0; j < k; ++j)
                        w[j] = ((w[j] - static_cast<int64_t>(static_cast<__int128>(c) * s.rows[r2][j] % ell)) % ell + ell) % ell;
                }
                for (int j = 0; j < k; ++j)
                    if (w[j]) invariant = false;
            }
            if (!invariant) throw std::logic_error("dixon: subspace not invariant");
            // characteristic polynomial of R over F_ell via the generic field layer
            ff::MatG rg(Fl, d, d);
            std::vector<std::vector<uint16_t>> dummy;
            // build Poly via Hessenberg on a generic matrix: reuse Mat path is
            // limited to SmallField; do a direct Danilevsky-free approach:
            // compute char poly by interpolation-free expansion using Faddeev
            // is unstable in char p; instead use the ff::Mat when ell < 2048
            // and a fallback elimination otherwise.
            ff::Poly cp;
            if (ell < 2048) {
                const ff::SmallField* sf = ff::small_field(ell, 1);
                ff::Mat rm(sf, d, d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) rm.at(i, j) = static_cast<uint16_t>(R.at(i, j));
                cp = rm.charpoly();
            } else {
                throw std::runtime_error("dixon: modulus exceeds small-field bound");
            }
            bool split_any = false;
            std::vector<Subspace> pieces;
            for (auto& [eig, mult] : ff::roots(cp, seed ^ attempts)) {
                (void)mult;
                int64_t lam = static_cast<int64_t>(eig.code());
                // kernel of (R - lam I)
                std::vector<std::vector<int64_t>> mat(d, std::vector<int64_t>(d, 0));
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) mat[i][j] = (R.at(i, j) + (i == j ? ell - lam : 0)) % ell;
                // solve: kernel via echelon form on the transpose trick: we need
                // x with (R - lam) x = 0 where x are column coords.
                Subspace es = echelonize(std::move(mat), ell);
                // free columns give kernel vectors
                std::vector<bool> is_p(d, false);
                for (int p : es.pivots) is_p[p] = true;
                std::vector<std::vector<int64_t>> kern;
                for (int freec = 0; freec < d; ++freec) {
                    if (is_p[freec]) continue;
                    std::vector<int64_t> v(d, 0);
                    v[freec] = 1;
                    for (size_t r2 = 0; r2 < es.pivots.size(); ++r2)
                        v[es.pivots[r2]] = (ell - es.rows[r2][freec]) % ell;
                    kern.push_back(std::move(v));
                }
                if (kern.empty()) continue;
                // lift kernel coords to ambient space
                std::vector<std::vector<int64_t>> amb;
                for (auto& v : kern) {
                    std::vector<int64_t> w(k, 0);
                    for (int t = 0; t < d; ++t) {
                        if (!v[t]) continue;
                        for (int j = 0; j < k; ++j)
                            w[j] = (w[j] + static_cast<__int128>(v[t]) * s.rows[t][j]) % ell;
                    }
                    amb.push_back(std::move(w));
                }
                pieces.push_back(echelonize(std::move(amb), ell));
            }
            int total = 0;
            for (auto& p : pieces) total += static_cast<int>(p.rows.size());
            if (total != d) throw std::logic_error("dixon: eigenspaces do not fill the subspace");
            if (pieces.size() > 1) split_any = true;
            for (auto& p : pieces) next.push_back(std::move(p));
            (void)split_any;
        }
        spaces = std::move(next);
    }

    // Each 1-dim space carries omega_chi(i) = |C_i| chi(g_i) / chi(1) mod ell.
    std::vector<std::vector<int64_t>> omega(k, std::vector<int64_t>(k, 0));
    {
        int idx = 0;
        for (auto& s : spaces) {
            const auto& v = s.rows[0];
            int t0 = s.pivots[0];
            for (int i = 0; i < k; ++i) {
                __int128 acc = 0;
                for (int c2 = 0; c2 < k; ++c2) acc += static_cast<__int128>(M[i].at(t0, c2)) * v[c2];
                omega[idx][i] = static_cast<int64_t>(acc % ell);  // since v[t0] = 1
            }
            ++idx;
        }
    }

    // degrees: d^2 = |G| / sum_j omega(j) omega(j*) / |C_j|   (mod ell)
    std::vector<int64_t> degree(k, 0);
    for (int K = 0; K < k; ++K) {
        int64_t s = 0;
        for (int j = 0; j < k; ++j) {
            int64_t w = static_cast<int64_t>(static_cast<__int128>(omega[K][j]) * omega[K][g.class_inverse(j)] % ell);
            s = (s + static_cast<__int128>(w) * inv_mod(g.class_size(j) % ell, ell)) % ell;
        }
        int64_t d2 = static_cast<int64_t>(static_cast<__int128>(n % ell) * inv_mod(s, ell) % ell);
        int64_t r = sqrt_mod(d2, ell);
        int64_t d = std::min(r, ell - r);
        if (d == 0 || d * d > n) throw std::logic_error("dixon: implausible degree");
        degree[K] = d;
    }

    // theta: element of order e mod ell
    int64_t theta = 0;
    for (int64_t z = 2; z < ell; ++z) {
        if (pow_mod(z, ell - 1, ell) != 1) continue;
        int64_t cand = pow_mod(z, (ell - 1) / e, ell);
        // check exact order e
        bool ok = cand != 1;
        for (int64_t q : prime_factors_distinct(e))
            if (pow_mod(cand, e / q, ell) == 1) ok = false;
        if (ok) {
            theta = cand;
            break;
        }
    }
    if (!theta) throw std::runtime_error("dixon: no element of order e mod ell");

    // chi(g_j) mod ell, then exact lift through root-of-unity multiplicities.
    const CycContext* ctx = cyc_context(e);
    std::vector<std::vector<Cyc>> values(k, std::vector<Cyc>(k, Cyc(ctx)));
    std::vector<int64_t> sizes(k), orders(k);
    std::vector<int> inverse(k);
    for (int j = 0; j < k; ++j) {
        sizes[j] = g.class_size(j);
        orders[j] = static_cast<int64_t>(g.class_element_order(j));
        inverse[j] = g.class_inverse(j);
    }
    for (int j = 0; j < k; ++j) {
        int64_t o = orders[j];
        // classes of rep^s, 0 <= s < o
        std::vector<int> pw(static_cast<size_t>(o));
        {
            groups::Element cur = reps[j].identity_like();
            for (int64_t s = 0; s < o; ++s) {
                pw[static_cast<size_t>(s)] = g.class_of(cur);
                cur = cur * reps[j];
            }
        }
        int64_t zeta_o = pow_mod(theta, e / o, ell);  // order o mod ell
        int64_t oinv = inv_mod(o % ell, ell);
        for (int K = 0; K < k; ++K) {
            // chi mod ell on the powers
            std::vector<int64_t> chis(static_cast<size_t>(o));
            for (int64_t s = 0; s < o; ++s) {
                int c = pw[static_cast<size_t>(s)];
                chis[static_cast<size_t>(s)] =
                    static_cast<int64_t>(static_cast<__int128>(degree[K]) * omega[K][c] % ell *
                                         inv_mod(sizes[c] % ell, ell) % ell);
            }
            int64_t total = 0;
            std::vector<std::pair<Rat, int64_t>> terms;
            for (int64_t u = 0; u < o; ++u) {
                __int128 acc = 0;
                int64_t zinv = inv_mod(pow_mod(zeta_o, u, ell), ell);
                int64_t zp = 1;
                for (int64_t s = 0; s < o; ++s) {
                    acc += static_cast<__int128>(chis[static_cast<size_t>(s)]) * zp % ell;
                    zp = static_cast<int64_t>(static_cast<__int128>(zp) * zinv % ell);
                }
                int64_t m = static_cast<int64_t>(static_cast<__int128>(static_cast<int64_t>(acc % ell)) * oinv % ell);
                m = ((m % ell) + ell) % ell;
                if (m) {
                    total += m;
                    terms.push_back({Rat(m), u * (e / o)});
                }
            }
            if (total != degree[K]) throw std::logic_error("dixon: multiplicity lift failed");
            values[K][j] = Cyc::from_terms(ctx, terms);
        }
    }

    // Sort characters by degree then value string; sort classes by
    // (element order, class size, least rep id).
    std::vector<int> char_order(k), class_order_idx(k);
    for (int i = 0; i < k; ++i) char_order[i] = i, class_order_idx[i] = i;
    std::sort(class_order_idx.begin(), class_order_idx.end(), [&](int a, int b) {
        if (orders[a] != orders[b]) return orders[a] < orders[b];
        if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
        return g.class_rep(a) < g.class_rep(b);
    });
    std::vector<int> col_of_class(k);
    for (int c = 0; c < k; ++c) col_of_class[class_order_idx[c]] = c;

    CharacterTable t;
    t.label = g.label;
    t.order = n;
    t.exponent = e;
    t.k = k;
    t.sizes.resize(k);
    t.orders.resize(k);
    t.inverse.resize(k);
    for (int c = 0; c < k; ++c) {
        int gc = class_order_idx[c];
        t.sizes[c] = sizes[gc];
        t.orders[c] = orders[gc];
        t.inverse[c] = col_of_class[inverse[gc]];
    }
    for (int64_t p : prime_factors_distinct(e)) {
        std::vector<int> pm(k);
        for (int c = 0; c < k; ++c) pm[c] = col_of_class[g.class_power(class_order_idx[c], static_cast<uint64_t>(p))];
        t.powermaps.push_back({p, std::move(pm)});
    }
    // permute value columns, then sort rows
    std::vector<std::vector<Cyc>> rows;
    for (int K = 0; K < k; ++K) {
        std::vector<Cyc> row;
        row.reserve(k);
        for (int c = 0; c < k; ++c) row.push_back(values[K][class_order_idx[c]]);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [&](const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
        Rat da = a[0].rational(), db = b[0].rational();
        if (da.num != db.num) return da.num < db.num;
        for (int j = 0; j < k; ++j) {
            std::string sa = a[j].str(), sb = b[j].str();
            if (sa != sb) return sa < sb;
        }
        return false;
    });
    t.values = std::move(rows);

    validate_table(t);

    GroupTable out;
    out.table = std::move(t);
    out.col_of_class = std::move(col_of_class);
    out.rep_id_of_col.resize(k);
    for (int c = 0; c < k; ++c) out.rep_id_of_col[c] = g.class_rep(class_order_idx[c]);
    return out;
}

}  // namespace wordmap::chartab
