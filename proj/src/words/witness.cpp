#include <algorithm>

#include "words/words.hpp"

namespace wordmap::words {

using groups::Perm;

std::optional<std::pair<Element, Element>> two_2elements_witness(const EnumeratedGroup& g,
                                                                 const Element& x) {
    int32_t id = g.id_of(x);
    if (id < 0) throw std::domain_error("two_2elements_witness: element not in the group");
    Element ginv = g.element(g.inverse_id(id));
    // search for an inverting t
    for (int64_t tid = 0; tid < g.order(); ++tid) {
        Element t = g.element(static_cast<int32_t>(tid));
        if (!(t * x * t.inverse() == ginv)) continue;
        uint64_t o = t.order();
        uint64_t odd = o;
        while (odd % 2 == 0) odd /= 2;
        Element t2 = t.pow(odd);  // 2-element, still inverts x
        Element u = t2.inverse();
        Element v = t2 * x;
        // u * v = x; both have 2-power order
        auto two_power = [](uint64_t n) { return (n & (n - 1)) == 0; };
        if (!two_power(u.order()) || !two_power(v.order())) continue;
        if (!(u * v == x)) throw std::logic_error("two_2elements_witness: composition failed");
        return std::make_pair(u, v);
    }
    return std::nullopt;
}

namespace {

// the inverting reflection (c_1, c_m)(c_2, c_{m-1}) ... of one cycle; for odd
// length this is the (1,2k+1)(2,2k)...(k,k+2) pairing, and dropping the last
// transposition gives the order-4 variant.
std::vector<std::vector<int>> cycle_reflection(const std::vector<int>& cyc, bool drop_last) {
    std::vector<std::vector<int>> transpositions;
    int m = static_cast<int>(cyc.size());
    for (int i = 0; 2 * i + 1 < m; ++i) transpositions.push_back({cyc[i], cyc[m - 1 - i]});
    if (drop_last && !transpositions.empty()) transpositions.pop_back();
    return transpositions;
}

// vertex-type reflection of an even cycle (fixes cyc[0] and cyc[m/2]); has
// the opposite parity to cycle_reflection on even lengths.
std::vector<std::vector<int>> cycle_reflection_vertex(const std::vector<int>& cyc) {
    std::vector<std::vector<int>> transpositions;
    int m = static_cast<int>(cyc.size());
    for (int i = 1; 2 * i < m; ++i) transpositions.push_back({cyc[i], cyc[m - i]});
    return transpositions;
}

Perm from_transpositions(int n, const std::vector<std::vector<int>>& ts) {
    Perm p = Perm::identity(n);
    for (auto& t : ts) p = p * Perm::from_cycles(n, {t});
    return p;
}

bool is_two_power(uint64_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

std::pair<Perm, Perm> alt_odd_decompose(const Perm& g) {
    const int n = g.degree();
    if (!g.is_even()) throw std::domain_error("alt_odd_decompose: input must be an even permutation");
    auto cycles = g.cycles();
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    auto finish = [&](Perm x) {
        Perm y = x * g;  // x inverts g, so y^2 = x^2
        if (!(x * y == g)) throw std::logic_error("alt_odd_decompose: composition failed");
        if (!is_two_power(std::max<uint64_t>(1, x.order())) || !is_two_power(std::max<uint64_t>(1, y.order())))
            throw std::logic_error("alt_odd_decompose: outputs are not 2-elements");
        if (!x.is_even() || !y.is_even()) throw std::logic_error("alt_odd_decompose: outputs are odd");
        return std::make_pair(x, y);
    };

    // realness route: find an even inverting element constructively
    {
        std::vector<std::vector<int>> ts;
        for (auto& c : cycles)
            for (auto& t : cycle_reflection(c, false)) ts.push_back(t);
        Perm x = from_transpositions(n, ts);
        bool inverts = (x * g * x.inverse()) == g.inverse();
        if (!inverts) throw std::logic_error("alt_odd_decompose: reflection does not invert");
        if (x.is_even()) return finish(x);
        // parity fixes: two fixed points of g; an even-length cycle (switch
        // reflection class); or two cycles of equal odd length (swap them)
        std::vector<bool> moved(n, false);
        for (auto& c : cycles)
            for (int v : c) moved[v - 1] = true;
        std::vector<int> fixed;
        for (int i = 1; i <= n; ++i)
            if (!moved[i - 1]) fixed.push_back(i);
        if (fixed.size() >= 2) {
            Perm x2 = x * Perm::from_cycles(n, {{fixed[0], fixed[1]}});
            return finish(x2);
        }
        for (auto& c : cycles) {
            if (c.size() % 2 == 0) {
                // the two reflection classes of an even cycle have opposite
                // parities; switch this cycle to the vertex-type one
                std::vector<std::vector<int>> ts2;
                for (auto& c2 : cycles) {
                    if (&c2 == &c) {
                        for (auto& t : cycle_reflection_vertex(c2)) ts2.push_back(t);
                    } else {
                        for (auto& t : cycle_reflection(c2, false)) ts2.push_back(t);
                    }
                }
                Perm x2 = from_transpositions(n, ts2);
                if ((x2 * g * x2.inverse()) == g.inverse() && x2.is_even()) return finish(x2);
            }
        }
        for (size_t i = 0; i + 1 < cycles.size(); ++i) {
            if (cycles[i].size() == cycles[i + 1].size() && cycles[i].size() % 2 == 1) {
                std::vector<std::vector<int>> swap_ts;
                for (size_t t = 0; t < cycles[i].size(); ++t)
                    swap_ts.push_back({cycles[i][t], cycles[i + 1][t]});
                Perm x2 = x * from_transpositions(n, swap_ts);
                if ((x2 * g * x2.inverse()) == g.inverse() && x2.is_even()) return finish(x2);
            }
        }
        // fall through to the non-real construction
    }

    // non-real case: distinct odd cycle lengths; per-cycle variants with a
    // parity budget (cycle 1 of length 3 forces two odd factors routed
    // through the second cycle)
    for (auto& c : cycles)
        if (c.size() % 2 == 0)
            throw std::domain_error("alt_odd_decompose: malformed input (even cycle, not real)");
    if (cycles.empty()) return finish(Perm::identity(n));
    bool has3 = cycles[0].size() == 3;
    if (has3 && cycles.size() == 1)
        throw std::domain_error("alt_odd_decompose: a lone 3-cycle is not a product of two 2-elements");
    std::vector<std::vector<int>> ts;
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& c = cycles[ci];
        int m = static_cast<int>(c.size());
        int k = (m - 1) / 2;
        bool want_odd;
        if (has3) {
            want_odd = (ci == 0) || (ci == 1);
        } else {
            want_odd = false;
        }
        if (ci == 0 && has3) {
            // x_1 = (c_1, c_3): one transposition (odd), y_1 = (c_1, c_2)
            ts.push_back({c[0], c[2]});
            continue;
        }
        // full reflection has k transpositions; the primed variant k-1
        bool full_is_odd = (k % 2 == 1);
        bool use_full = (full_is_odd == want_odd);
        if (!use_full && k - 1 < 1 && want_odd)
            throw std::logic_error("alt_odd_decompose: cannot route parity through a 3-cycle");
        for (auto& t : cycle_reflection(c, !use_full)) ts.push_back(t);
    }
    Perm x = from_transpositions(n, ts);
    Perm y = x * g;
    if (!(x * y == g)) throw std::logic_error("alt_odd_decompose: composition failed");
    if (!is_two_power(std::max<uint64_t>(1, x.order())) ||
        !is_two_power(std::max<uint64_t>(1, y.order())))
        throw std::logic_error("alt_odd_decompose: outputs are not 2-elements");
    if (!x.is_even() || !y.is_even()) throw std::logic_error("alt_odd_decompose: outputs are odd");
    return {x, y};
}

}  // namespace wordmap::words
