#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordmap {

struct ArithmeticOverflow : std::runtime_error {
    explicit ArithmeticOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Checked int64 helpers. Exact paths must fail loudly rather than wrap.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 add overflow");
    return r;
}
inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 sub overflow");
    return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 mul overflow");
    return r;
}

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64_checked(int64_t a, int64_t b);

// Exact rational on checked int64, normalized with den > 0 and gcd 1.
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d);

    static Rat of(int64_t n, int64_t d) { return Rat(n, d); }

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat operator-() const { return Rat(-num, den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

Rat parse_rat(const std::string& s);  // "n" or "n/d", optional leading '-'

// splitmix64-seeded xoshiro256** — deterministic cross-platform PRNG.
struct Rng {
    uint64_t s[4];
    explicit Rng(uint64_t seed);
    uint64_t next();
    // Uniform in [0, n) without modulo bias.
    uint64_t below(uint64_t n);
};

uint64_t splitmix64(uint64_t& state);

// Simple FNV-1a over bytes; used for element keys and report hashes.
inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = 1469598103934665603ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<int64_t> prime_factors_distinct(int64_t n);
bool is_prime_u64(uint64_t n);
int64_t ipow64_checked(int64_t base, unsigned exp);

}  // namespace wordmap
