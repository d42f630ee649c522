#include <algorithm>

#include "words/words.hpp"

namespace wordmap::words {

namespace {

// pair order heuristic: large classes first (positivity is dense there)
std::vector<std::pair<int, int>> ordered_pairs(const Engine& e, const std::vector<int>& S) {
    std::vector<std::pair<int, int>> pairs;
    for (int a : S)
        for (int b : S) pairs.push_back({a, b});
    const auto& t = e.table();
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto& x, auto& y) {
        return static_cast<double>(t.sizes[x.first]) * t.sizes[x.second] >
               static_cast<double>(t.sizes[y.first]) * t.sizes[y.second];
    });
    return pairs;
}

}  // namespace

WordCheckResult check_xNyN(const Engine& e, uint64_t N) {
    WordCheckResult r;
    r.method = "character-formula";
    std::vector<int> S;
    try {
        S = e.power_image(N);
    } catch (const std::runtime_error& ex) {
        r.status = Status::Inconclusive;
        r.method = ex.what();
        return r;
    }
    auto pairs = ordered_pairs(e, S);
    r.witnesses.assign(e.classes(), {-1, -1, -1});
    bool all = true;
    for (int c = 0; c < e.classes(); ++c) {
        bool found = false;
        for (auto& [a, b] : pairs) {
            if (e.positive(a, b, c)) {
                r.witnesses[c] = {a, b, c};
                found = true;
                break;
            }
        }
        if (!found) {
            r.missed.push_back(c);
            all = false;
        }
    }
    r.status = all ? Status::Surjective : Status::NotSurjective;
    return r;
}

WordCheckResult check_xNyNzN(const Engine& e, uint64_t N) {
    WordCheckResult r;
    r.method = "character-formula";
    std::vector<int> S;
    try {
        S = e.power_image(N);
    } catch (const std::runtime_error& ex) {
        r.status = Status::Inconclusive;
        r.method = ex.what();
        return r;
    }
    // T = supp(S * S) with witnesses
    std::vector<std::array<int, 2>> via(e.classes(), {-1, -1});
    std::vector<int> T;
    auto pairs = ordered_pairs(e, S);
    for (int t = 0; t < e.classes(); ++t) {
        for (auto& [a, b] : pairs) {
            if (e.positive(a, b, t)) {
                via[t] = {a, b};
                T.push_back(t);
                break;
            }
        }
    }
    r.triple_witnesses.assign(e.classes(), {-1, -1, -1, -1});
    bool all = true;
    for (int c = 0; c < e.classes(); ++c) {
        bool found = false;
        for (int t : T) {
            for (int d : S) {
                if (e.positive(t, d, c)) {
                    r.triple_witnesses[c] = {via[t][0], via[t][1], d, c};
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            r.missed.push_back(c);
            all = false;
        }
    }
    r.status = all ? Status::Surjective : Status::NotSurjective;
    return r;
}

WordCheckResult check_k_2element_cover(const Engine& e, int k) {
    WordCheckResult r;
    r.method = "character-formula";
    std::vector<int> S = e.two_element_classes();
    std::vector<int> reach = S;
    for (int depth = 1; depth < k; ++depth) reach = e.product_support(S, reach);
    std::sort(reach.begin(), reach.end());
    bool all = static_cast<int>(reach.size()) == e.classes();
    for (int c = 0, idx = 0; c < e.classes(); ++c) {
        if (idx < static_cast<int>(reach.size()) && reach[idx] == c)
            ++idx;
        else
            r.missed.push_back(c);
    }
    r.status = all ? Status::Surjective : Status::NotSurjective;
    return r;
}

namespace {

uint16_t det_of_col(const EnumeratedGroup& g, const chartab::GroupTable& gt, int col) {
    return g.element(gt.rep_id_of_col[col]).mat().det();
}

}  // namespace

WordCheckResult check_condition_PN(const classical::ClassicalGroupSpec& spec,
                                   const EnumeratedGroup& g, const chartab::GroupTable& gt,
                                   const Engine& e, uint64_t N, bool unbreakable_only) {
    WordCheckResult r;
    r.method = unbreakable_only ? "Pu(N)" : "P(N)";
    const int k = e.classes();
    std::vector<int> S = e.power_image(N);
    std::vector<int> A;  // N-th power classes with det 1
    for (int a : S)
        if (det_of_col(g, gt, a) == 1) A.push_back(a);
    // det is a class function; spot-assert on one conjugate per class
    for (int c = 0; c < k; ++c) {
        groups::Element rep = g.element(gt.rep_id_of_col[c]);
        groups::Element conj = rep.conj(g.element(1 % g.order()));
        if (conj.mat().det() != rep.mat().det())
            throw std::logic_error("check_condition_PN: determinant is not constant on a class");
    }
    r.witnesses.assign(k, {-1, -1, -1});
    bool all = true;
    for (int c = 0; c < k; ++c) {
        if (unbreakable_only) {
            ff::Mat rep = g.element(gt.rep_id_of_col[c]).mat();
            if (breakdec::is_breakable(spec, rep).breakable) continue;
        }
        uint16_t dc = det_of_col(g, gt, c);
        bool found = false;
        for (int a : A) {
            for (int b : S) {
                if (det_of_col(g, gt, b) != dc) continue;
                if (e.positive(a, b, c)) {
                    r.witnesses[c] = {a, b, c};
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            r.missed.push_back(c);
            all = false;
        }
    }
    r.status = all ? Status::Surjective : Status::NotSurjective;
    return r;
}

WordCheckResult check_det_constrained_triples(const classical::ClassicalGroupSpec& spec,
                                              const EnumeratedGroup& g,
                                              const chartab::GroupTable& gt, const Engine& e) {
    (void)spec;
    WordCheckResult r;
    r.method = "det-constrained 2-element triples";
    const int k = e.classes();
    std::vector<int> two = e.two_element_classes();
    std::vector<int> A;  // 2-element classes of determinant 1
    for (int a : two)
        if (det_of_col(g, gt, a) == 1) A.push_back(a);
    // T = supp(A * A) with witnesses
    std::vector<std::array<int, 2>> via(k, {-1, -1});
    std::vector<int> T;
    for (int t = 0; t < k; ++t)
        for (int a : A) {
            bool done = false;
            for (int b : A)
                if (e.positive(a, b, t)) {
                    via[t] = {a, b};
                    T.push_back(t);
                    done = true;
                    break;
                }
            if (done) break;
        }
    r.triple_witnesses.assign(k, {-1, -1, -1, -1});
    bool all = true;
    for (int c = 0; c < k; ++c) {
        uint16_t dc = det_of_col(g, gt, c);
        bool found = false;
        for (int z : two) {
            if (det_of_col(g, gt, z) != dc) continue;
            for (int t : T) {
                if (e.positive(t, z, c)) {
                    r.triple_witnesses[c] = {via[t][0], via[t][1], z, c};
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            r.missed.push_back(c);
            all = false;
        }
    }
    r.status = all ? Status::Surjective : Status::NotSurjective;
    return r;
}

Rat proportion_divisible(const EnumeratedGroup& g, const std::vector<int64_t>& primes) {
    int64_t count = 0;
    for (int c = 0; c < g.num_classes(); ++c) {
        uint64_t o = g.class_element_order(c);
        bool hit = false;
        for (int64_t p : primes)
            if (o % static_cast<uint64_t>(p) == 0) hit = true;
        if (hit) count += g.class_size(c);
    }
    return Rat(count, g.order());
}

}  // namespace wordmap::words
