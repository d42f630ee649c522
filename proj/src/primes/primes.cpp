#include "primes/primes.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "base/util.hpp"

namespace wordmap::primes {

namespace {

BigInt powmod_big(BigInt b, BigInt e, const BigInt& m) {
    BigInt r = 1;
    b %= m;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

bool has_order(int64_t a, int64_t n, const BigInt& p) {
    if (powmod_big(a, n, p) != 1) return false;
    for (int64_t r : prime_factors_distinct(n))
        if (powmod_big(a, n / r, p) == 1) return false;
    return true;
}

std::pair<int64_t, int> split_prime_power(int64_t q) {
    auto ps = prime_factors_distinct(q);
    if (ps.size() != 1) throw std::domain_error("q must be a prime power");
    int64_t p = ps[0];
    int f = 0;
    int64_t v = q;
    while (v > 1) {
        v /= p;
        ++f;
    }
    return {p, f};
}

}  // namespace

std::optional<BigInt> ppd(int64_t a, int64_t n) {
    if (a < 2 || n < 1) throw std::domain_error("ppd: need a >= 2, n >= 1");
    static std::mutex mu;
    static std::map<std::pair<int64_t, int64_t>, std::optional<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({a, n});
        if (it != cache.end()) return it->second;
    }
    std::optional<BigInt> result;
    if (n == 1) {
        if (a == 2)
            result = std::nullopt;
        else
            result = least_prime_factor(BigInt(a) - 1);
    } else if (a == 2 && n == 6) {
        result = std::nullopt;
    } else if (n == 2 && ((a + 1) & a) == 0) {
        // a + 1 a power of two
        result = std::nullopt;
    } else {
        BigInt m = cyclotomic_value(n, a);
        // Any prime divisor of Phi_n(a) is primitive except possibly the
        // largest prime factor of n; strip copies whose order is short.
        auto nf = prime_factors_distinct(n);
        int64_t big = nf.back();
        while (m % big == 0 && !has_order(a, n, BigInt(big))) m /= big;
        if (m == 1) {
            result = std::nullopt;
        } else {
            BigInt least = least_prime_factor(m);
            if (!has_order(a, n, least)) throw std::logic_error("ppd: non-primitive factor survived");
            result = least;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[{a, n}] = result;
    return result;
}

BigInt ppd_star(int64_t q, int64_t n, int eps, bool allow_small) {
    if (n < 13 && !allow_small) throw std::domain_error("ppd_star: the asymptotic regime needs n >= 13");
    auto need = [&](int64_t nn) {
        auto p = ppd(q, nn);
        if (!p) throw std::domain_error("ppd_star: primitive prime divisor does not exist (Zsygmondy exception)");
        return *p;
    };
    if (eps == -1) return need(2 * n);
    if (eps != +1) throw std::domain_error("ppd_star: eps must be +-1");
    if (n % 2) return need(n);
    return need(n) * need(n / 2);
}

std::string lie_family_name(LieFamily f) {
    switch (f) {
        case LieFamily::SL: return "SL";
        case LieFamily::SU: return "SU";
        case LieFamily::SpOrSpinOdd: return "Sp/Spin_odd";
        case LieFamily::SpinPlus: return "Spin+";
        case LieFamily::SpinMinus: return "Spin-";
        case LieFamily::Suzuki2B2: return "2B2";
        case LieFamily::Ree2G2: return "2G2";
        case LieFamily::Ree2F4: return "2F4";
        case LieFamily::G2: return "G2";
        case LieFamily::Steinberg3D4: return "3D4";
        case LieFamily::F4: return "F4";
        case LieFamily::E6: return "E6";
        case LieFamily::TwistedE6: return "2E6";
        case LieFamily::E7: return "E7";
        case LieFamily::E8: return "E8";
    }
    return "?";
}

namespace {

SpecialPrimeSet make(const std::vector<BigInt>& v, std::string src) {
    SpecialPrimeSet s;
    s.primes = v;
    s.source = std::move(src);
    return s;
}

SpecialPrimeSet uncovered(std::string why) {
    SpecialPrimeSet s;
    s.covered = false;
    s.source = std::move(why);
    return s;
}

BigInt rq(int64_t p, int64_t e) {
    auto v = ppd(p, e);
    if (!v) throw std::domain_error("special_primes: primitive prime divisor missing at exponent " + std::to_string(e));
    return *v;
}

}  // namespace

SpecialPrimeSet special_primes(LieFamily family, int n, int64_t q) {
    auto [p, f] = split_prime_power(q);
    switch (family) {
        case LieFamily::SL: {
            if (n < 4) throw std::domain_error("special_primes: SL row needs n >= 4");
            if (n == 6 && q == 2) return make({31}, "exceptional set {31}");
            if (n == 7 && q == 2) return make({127}, "exceptional set {127}");
            if (n == 4 && q == 4) return make({17, 7}, "exceptional set {17, 7}");
            return make({rq(p, static_cast<int64_t>(n) * f), rq(p, static_cast<int64_t>(n - 1) * f)},
                        "SL row");
        }
        case LieFamily::SU: {
            if (n < 4) throw std::domain_error("special_primes: SU rows need n >= 4");
            if (n % 2 == 1) {
                if (n == 7 && q == 4) return make({113, 7}, "exceptional set {113, 7}");
                BigInt r = rq(p, 2ll * n * f);
                BigInt s = (n % 4 == 1) ? rq(p, static_cast<int64_t>(n - 1) * f)
                                        : rq(p, static_cast<int64_t>(n - 1) * f / 2);
                return make({r, s}, "SU odd row");
            }
            if (n == 4 && q == 2) return make({5}, "exceptional set {5}");
            if (n == 6 && q == 4) return make({41, 7}, "exceptional set {41, 7}");
            BigInt r = rq(p, (2ll * n - 2) * f);
            BigInt s = (n % 4 == 0) ? rq(p, static_cast<int64_t>(n) * f)
                                    : rq(p, static_cast<int64_t>(n) * f / 2);
            return make({r, s}, "SU even row");
        }
        case LieFamily::SpOrSpinOdd: {
            if (n >= 3 && n % 2 == 1) {
                if (n == 3 && q == 4) return uncovered("Sp6(4) sits in the exception column");
                return make({rq(p, 2ll * n * f), rq(p, static_cast<int64_t>(n) * f)}, "Sp odd-n row");
            }
            if (n >= 6 && n % 2 == 0) {
                if (n == 6 && q == 2) return make({13, 3, 7}, "hard-coded Sp12(2) row");
                if (n == 12 && q == 2) return make({241, 13, 7}, "hard-coded Sp24(2) row");
                return make({rq(p, 2ll * n * f), rq(p, static_cast<int64_t>(n) * f),
                             rq(p, static_cast<int64_t>(n) * f / 2)},
                            "Sp even-n row");
            }
            throw std::domain_error("special_primes: Sp/Spin_odd rows need odd n >= 3 or even n >= 6");
        }
        case LieFamily::SpinPlus: {
            if (n < 4) throw std::domain_error("special_primes: Spin+ row needs n >= 4");
            if (n == 4 && q == 2) return uncovered("Spin+8(2) sits in the exception column");
            BigInt r = rq(p, (2ll * n - 2) * f);
            BigInt s = (n % 2 == 1) ? rq(p, static_cast<int64_t>(n) * f)
                                    : rq(p, static_cast<int64_t>(n - 1) * f);
            return make({r, s}, "Spin+ row");
        }
        case LieFamily::SpinMinus: {
            if (n < 4) throw std::domain_error("special_primes: Spin- row needs n >= 4");
            if (n == 4 && q == 2) return uncovered("Spin-8(2) sits in the exception column");
            return make({rq(p, 2ll * n * f), rq(p, (2ll * n - 2) * f)}, "Spin- row");
        }
        case LieFamily::Suzuki2B2: {
            if (p != 2 || f % 2 == 0) throw std::domain_error("2B2 needs q = 2^(odd)");
            if (q <= 8) return uncovered("2B2 row needs q^2 > 8");
            return make({rq(2, 4ll * f)}, "2B2 row");  // 8 * (f/2)
        }
        case LieFamily::Ree2G2: {
            if (p != 3 || f % 2 == 0) throw std::domain_error("2G2 needs q = 3^(odd)");
            if (q <= 27) return uncovered("2G2 row needs q^2 > 27");
            return make({rq(3, 6ll * f)}, "2G2 row");  // 12 * (f/2)
        }
        case LieFamily::Ree2F4: {
            if (p != 2 || f % 2 == 0) throw std::domain_error("2F4 needs q = 2^(odd)");
            if (q <= 8) return uncovered("2F4 row needs q^2 > 8");
            return make({rq(2, 12ll * f), rq(2, 6ll * f)}, "2F4 row");
        }
        case LieFamily::G2: {
            if (q == 2 || q == 4) return uncovered("G2 row excludes q = 2, 4");
            return make({rq(p, 3ll * f)}, "G2 row");
        }
        case LieFamily::Steinberg3D4:
            return make({rq(p, 12ll * f)}, "3D4 row");
        case LieFamily::F4:
            return make({rq(p, 12ll * f), rq(p, 8ll * f)}, "F4 row");
        case LieFamily::E6:
            return make({rq(p, 9ll * f), rq(p, 8ll * f)}, "E6 row");
        case LieFamily::TwistedE6:
            return make({rq(p, 18ll * f), rq(p, 8ll * f)}, "2E6 row");
        case LieFamily::E7:
            return make({rq(p, 18ll * f), rq(p, 7ll * f)}, "E7 row");
        case LieFamily::E8:
            return make({rq(p, 24ll * f), rq(p, 20ll * f)}, "E8 row");
    }
    throw std::logic_error("special_primes: unreachable");
}

BigInt lie_group_order(LieFamily family, int n, int64_t q) {
    BigInt Q = q;
    auto qp = [&](int64_t e) {
        BigInt r = 1;
        for (int64_t i = 0; i < e; ++i) r *= Q;
        return r;
    };
    auto torus_prod = [&](std::vector<int64_t> exps, int64_t power) {
        BigInt o = qp(power);
        for (int64_t e : exps) o *= qp(e) - 1;
        return o;
    };
    switch (family) {
        case LieFamily::SL: {
            BigInt o = qp(static_cast<int64_t>(n) * (n - 1) / 2);
            for (int i = 2; i <= n; ++i) o *= qp(i) - 1;
            return o;
        }
        case LieFamily::SU: {
            BigInt o = qp(static_cast<int64_t>(n) * (n - 1) / 2);
            for (int i = 1; i <= n; ++i) o *= qp(i) - ((i % 2) ? BigInt(-1) : BigInt(1));
            return o;
        }
        case LieFamily::SpOrSpinOdd: {
            BigInt o = qp(static_cast<int64_t>(n) * n);
            for (int i = 1; i <= n; ++i) o *= qp(2 * i) - 1;
            return o;
        }
        case LieFamily::SpinPlus: {
            BigInt o = qp(static_cast<int64_t>(n) * (n - 1)) * (qp(n) - 1);
            for (int i = 1; i <= n - 1; ++i) o *= qp(2 * i) - 1;
            return o;
        }
        case LieFamily::SpinMinus: {
            BigInt o = qp(static_cast<int64_t>(n) * (n - 1)) * (qp(n) + 1);
            for (int i = 1; i <= n - 1; ++i) o *= qp(2 * i) - 1;
            return o;
        }
        case LieFamily::Suzuki2B2:
            return qp(2) * (Q - 1) * (qp(2) + 1);
        case LieFamily::Ree2G2:
            return qp(3) * (Q - 1) * (qp(3) + 1);
        case LieFamily::Ree2F4:
            return qp(12) * (Q - 1) * (qp(3) + 1) * (qp(4) - 1) * (qp(6) + 1);
        case LieFamily::G2:
            return torus_prod({6, 2}, 6);
        case LieFamily::Steinberg3D4:
            return qp(12) * (qp(8) + qp(4) + 1) * (qp(6) - 1) * (qp(2) - 1);
        case LieFamily::F4:
            return torus_prod({12, 8, 6, 2}, 24);
        case LieFamily::E6:
            return torus_prod({12, 9, 8, 6, 5, 2}, 36);
        case LieFamily::TwistedE6: {
            BigInt o = qp(36) * (qp(12) - 1) * (qp(9) + 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(5) + 1) * (qp(2) - 1);
            return o;
        }
        case LieFamily::E7:
            return torus_prod({18, 14, 12, 10, 8, 6, 2}, 63);
        case LieFamily::E8:
            return torus_prod({30, 24, 20, 18, 14, 12, 8, 2}, 120);
    }
    throw std::logic_error("lie_group_order: unreachable");
}

std::vector<PairViolation> scan_lemma_pair(int64_t q_max, int64_t n_max,
                                           std::vector<std::string>* skip_notes) {
    std::vector<PairViolation> out;
    for (int64_t q = 2; q <= q_max; ++q) {
        for (int64_t n = 13; n <= n_max; ++n) {
            for (int64_t m = 13; m <= n; ++m) {
                for (int alpha : {+1, -1}) {
                    for (int beta : {+1, -1}) {
                        BigInt a, b;
                        try {
                            a = ppd_star(q, n, alpha);
                            b = ppd_star(q, m, beta);
                        } catch (const std::domain_error& e) {
                            if (skip_notes) {
                                std::ostringstream os;
                                os << "skipped q=" << q << " (n,a)=(" << n << "," << alpha << ") (m,b)=(" << m
                                   << "," << beta << "): " << e.what();
                                skip_notes->push_back(os.str());
                            }
                            continue;
                        }
                        if (gcd(a, b) == 1) continue;
                        bool allowed = (n == m && alpha == beta) ||
                                       (alpha == +1 && (n == 2 * m || n == 4 * m));
                        if (!allowed)
                            out.push_back({q, n, m, alpha, beta, "gcd(l*, l*) > 1 outside the allowed cases"});
                    }
                }
            }
        }
    }
    return out;
}

BigInt center_exponent_D(int k, int64_t Q, LieFamily family) {
    if (k < 1 || Q < 2) throw std::domain_error("center_exponent_D: need k >= 1, Q >= 2");
    if (family == LieFamily::SL || family == LieFamily::SU) {
        BigInt fact = 1;
        for (int64_t i = 2; i <= Q; ++i) fact *= i;
        BigInt out = 2;
        for (int i = 0; i < k + 1; ++i) out *= fact;
        return out;
    }
    if (family == LieFamily::SpOrSpinOdd || family == LieFamily::SpinPlus) {
        return BigInt(1) << (k + 1);
    }
    throw std::domain_error("center_exponent_D: defined for SL/SU and Sp/Omega+");
}

}  // namespace wordmap::primes
