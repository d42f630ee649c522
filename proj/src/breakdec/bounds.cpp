#include <sstream>

#include "breakdec/breakdec.hpp"
#include "groups/group.hpp"

namespace wordmap::breakdec {

using classical::BigInt;
using ff::Mat;

namespace {

BigInt qpow(int64_t q, int64_t e) {
    BigInt r = 1;
    for (int64_t i = 0; i < e; ++i) r *= q;
    return r;
}

// Table bound for symplectic groups (half-dimension n).
BigInt sp_bound(int n, int64_t q) {
    if (q == 2) return BigInt(9) * qpow(2, 2 * n + 9);
    if (q == 3) return (n % 2) ? BigInt(24) * qpow(3, 2 * n - 2) : BigInt(48) * qpow(3, 2 * n + 1);
    if (n % 2 == 1) return (q % 2) ? qpow(q, 2 * n - 1) * (q * q - 1) : BigInt(2) * qpow(q, 2 * n) * (q + 1);
    return (q % 2) ? BigInt(2) * qpow(q, n) : qpow(q, 2 * n) * (q * q - 1);
}

// Table bound for orthogonal groups (n = half the even dimension, or the
// half-integer part for odd dimension).
BigInt orth_bound(int dimV, int64_t q) {
    int n = dimV / 2;
    if (q == 2) return BigInt(3) * qpow(2, 2 * n + 6);
    if (q == 3) return (dimV % 2 == 0) ? BigInt(64) * qpow(3, 2 * n + 4) : BigInt(16) * qpow(3, 2 * n + 3);
    return qpow(q, 2 * n - 2) * (q + 1) * (q + 1);
}

int64_t mu_union_count(int64_t q) { return (q - 1) + (q + 1); }

}  // namespace

BoundCheckReport sample_bound_check(const ClassicalGroupSpec& spec, const std::string& lemma,
                                    int samples, uint64_t seed) {
    BoundCheckReport rep;
    rep.lemma = lemma;
    rep.group = spec.name();
    rep.samples = samples;
    const int64_t q = spec.q;
    const int n = spec.n;

    // hypothesis ranges
    if (lemma == "3.2") {
        if (spec.family != Family::Sp) throw std::domain_error("lemma 3.2 needs Sp");
        int half = n / 2;
        if (half < 2 || (q == 3 && half < 4) || (q == 2 && half < 7))
            throw std::domain_error("lemma 3.2 hypothesis range violated");
    } else if (lemma == "3.3") {
        if (!spec.orthogonal()) throw std::domain_error("lemma 3.3 needs an orthogonal group");
        if ((n % 2 == 0 && n < 8) || (n % 2 == 1 && n < 7)) throw std::domain_error("lemma 3.3 range");
        if (q <= 3 && n < 13) throw std::domain_error("lemma 3.3 needs dim V >= 13 when q <= 3");
    } else if (lemma == "3.4") {
        bool q23 = (q == 2 || q == 3);
        bool q5 = (q == 5 && spec.orthogonal() && n % 2 == 0 && n >= 10);
        if (!q23 && !q5) throw std::domain_error("lemma 3.4 needs q in {2,3} or the q=5 orthogonal case");
        if (!spec.orthogonal() && spec.family != Family::Sp) throw std::domain_error("lemma 3.4 needs Sp or O");
    } else if (lemma == "3.6") {
        if (spec.family != Family::GL || q != 2 || n < 7) throw std::domain_error("lemma 3.6 needs GL_n(2), n >= 7");
    } else if (lemma == "3.7") {
        if (spec.family != Family::GU || q != 2 || n < 9) throw std::domain_error("lemma 3.7 needs GU_n(2), n >= 9");
    } else if (lemma == "3.8") {
        if (!(spec.family == Family::GL || spec.family == Family::GU) || q != 3 || n < 7)
            throw std::domain_error("lemma 3.8 needs GL^eps_n(3), n >= 7");
    } else if (lemma == "eq-3.1") {
        if (!(spec.family == Family::GL || spec.family == Family::GU) || q < 4)
            throw std::domain_error("eq (3.1) needs GL^eps_n(q), q >= 4");
    } else {
        throw std::domain_error("unknown lemma tag " + lemma);
    }

    groups::RandomWalker walker(spec.generator_elements(), seed, 64);
    for (int t = 0; t < samples; ++t) {
        Mat x = walker.next().mat();
        auto br = is_breakable(spec, x);
        if (br.breakable) continue;
        rep.unbreakable_hits++;
        auto violate = [&](const std::string& why) {
            std::ostringstream os;
            os << why << " at " << x.str();
            rep.violations.push_back(os.str());
        };
        if (lemma == "3.4") {
            // eigenspace bound over the closure for alpha with alpha^{q-+1} = 1
            int cap = (q == 5) ? 2 : 4;
            const ff::Field& F2 = ff::field(spec.mf->p, spec.mf->k * 2);
            ff::FieldElement g2 = F2->gen();
            int64_t checked = 0;
            for (int64_t target : {q - 1, q + 1}) {
                ff::FieldElement root = g2.pow((F2->size - 1) / static_cast<uint64_t>(target));
                ff::FieldElement cur = F2->one();
                for (int64_t l = 0; l < target; ++l) {
                    int e = classical::eigenspace_dim(x, cur);
                    if (e > cap) {
                        std::ostringstream os;
                        os << "e(x, alpha) = " << e << " > " << cap;
                        violate(os.str());
                    }
                    cur = cur * root;
                    ++checked;
                }
            }
            (void)mu_union_count;
            (void)checked;
            continue;
        }
        // centralizer-order bounds
        BigInt bound;
        bool use_formula = (spec.family == Family::GL && spec.mf->k == 1);
        if (lemma == "3.2") bound = sp_bound(n / 2, q);
        else if (lemma == "3.3") bound = orth_bound(n, q);
        else if (lemma == "3.6") bound = qpow(2, n + 2);
        else if (lemma == "3.7") bound = (n >= 10) ? qpow(2, n + 4) * 9 : qpow(2, 48);
        else if (lemma == "3.8") bound = qpow(3, n + 2) * 16;
        else if (lemma == "eq-3.1")
            bound = (spec.family == Family::GL) ? qpow(q, n) - 1 : qpow(q, n - 1) * (q + 1);
        BigInt cent;
        if (use_formula) {
            cent = classical::gl_centralizer_order(q, classical::elementary_divisors(spec.mf, x));
        } else {
            try {
                cent = classical::brute_centralizer_order(spec, x);
            } catch (const std::runtime_error&) {
                rep.skipped++;
                continue;
            }
        }
        if (cent > bound) {
            if (lemma == "3.6") {
                // the alternative branch: |C| = 9 * 2^n with x in GL_{n/2}(4):
                // elementary divisors (f, {a-1, 1}) for a single quadratic f
                bool alt = false;
                if (n % 2 == 0 && cent == BigInt(9) * qpow(2, n)) {
                    auto ed = classical::elementary_divisors(spec.mf, x);
                    if (ed.blocks.size() == 1 && ed.blocks[0].first == 2) {
                        auto sz = ed.blocks[0].second;
                        if (sz.size() == 2 && sz[0] == n / 2 - 1 && sz[1] == 1) alt = true;
                    }
                }
                if (alt) continue;
            }
            std::ostringstream os;
            os << "|C| = " << cent << " > " << bound;
            violate(os.str());
        }
    }
    return rep;
}

}  // namespace wordmap::breakdec
