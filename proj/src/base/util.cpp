#include "base/util.hpp"

#include <cstdlib>

namespace wordmap {

int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm64_checked(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd64(a, b), b);
}

Rat::Rat(int64_t n, int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = checked_mul(n, -1);
        d = checked_mul(d, -1);
    }
    int64_t g = gcd64(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rat Rat::operator+(const Rat& o) const {
    int64_t g = gcd64(den, o.den);
    int64_t da = den / g;
    int64_t db = o.den / g;
    return Rat(checked_add(checked_mul(num, db), checked_mul(o.num, da)),
               checked_mul(checked_mul(da, db), g));
}

Rat Rat::operator-(const Rat& o) const { return *this + Rat(-o.num, o.den); }

Rat Rat::operator*(const Rat& o) const {
    int64_t g1 = gcd64(num, o.den);
    int64_t g2 = gcd64(o.num, den);
    return Rat(checked_mul(num / g1, o.num / g2), checked_mul(den / g2, o.den / g1));
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0) throw std::domain_error("rational division by zero");
    return *this * Rat(o.den, o.num);
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::runtime_error("bad rational literal: " + s);
    }
}

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rng::Rng(uint64_t seed) {
    uint64_t st = seed;
    for (auto& x : s) x = splitmix64(st);
}

static inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

uint64_t Rng::next() {
    uint64_t result = rotl(s[1] * 5, 7) * 9;
    uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw std::domain_error("Rng::below(0)");
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
    };
    auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) -> uint64_t {
        uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic set for 64-bit inputs.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<int64_t> prime_factors_distinct(int64_t n) {
    std::vector<int64_t> out;
    if (n < 0) n = -n;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t ipow64_checked(int64_t base, unsigned exp) {
    int64_t r = 1;
    while (exp) {
        if (exp & 1) r = checked_mul(r, base);
        exp >>= 1;
        if (exp) base = checked_mul(base, base);
    }
    return r;
}

}  // namespace wordmap
