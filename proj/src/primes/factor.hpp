#pragma once
// Big-integer primality and factoring support for primitive-prime-divisor
// extraction: Miller-Rabin plus Pollard-Brent rho over cpp_int.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <vector>

namespace wordmap::primes {

using BigInt = boost::multiprecision::cpp_int;

bool is_probable_prime(const BigInt& n);

// Full factorization (trial division then rho); map prime -> exponent.
std::map<BigInt, int> factorize(BigInt n);

// Least prime factor of n (n >= 2).
BigInt least_prime_factor(const BigInt& n);

// Phi_n(a) as a big integer (a >= 2, n >= 1).
BigInt cyclotomic_value(int64_t n, int64_t a);

}  // namespace wordmap::primes
