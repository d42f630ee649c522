#pragma once
// Zsygmondy primitive prime divisors, the ell* variants, the special-prime
// table for groups of Lie type with its hard-coded and exceptional rows, the
// pairwise-gcd scan, and the center-exponent bound.

#include <optional>
#include <string>
#include <vector>

#include "primes/factor.hpp"

namespace wordmap::primes {

// Least primitive prime divisor of a^n - 1 (divides no a^i - 1, i < n);
// nullopt exactly in the Zsygmondy exceptions: (a, n) = (2, 6), n = 2 with
// a + 1 a power of two, and n = 1 with a = 2.
std::optional<BigInt> ppd(int64_t a, int64_t n);

// ell*(q^n - eps) per the asymptotic-section convention:
//   eps = +: ppd(q, n) for odd n, ppd(q, n) * ppd(q, n/2) for even n;
//   eps = -: ppd(q, 2n).
// The paper works with n >= 13; allow_small permits smaller n when the
// needed primitive divisors exist.
BigInt ppd_star(int64_t q, int64_t n, int eps, bool allow_small = false);

enum class LieFamily {
    SL, SU, SpOrSpinOdd, SpinPlus, SpinMinus,
    Suzuki2B2, Ree2G2, Ree2F4, G2, Steinberg3D4, F4, E6, TwistedE6, E7, E8
};

std::string lie_family_name(LieFamily f);

struct SpecialPrimeSet {
    std::vector<BigInt> primes;  // {r, s1, s2}; r first; s1 == s2 collapses to two entries
    std::string source;          // table-row / exception description
    bool covered = true;         // false: parameters in the exception column with no substitute
};

// R(G) per the special-prime table; n is the table's rank parameter
// (matrix size for SL/SU, half-dimension for Sp/Spin rows). Spin rows are
// evaluated through the same torus-order formulas as the corresponding
// Omega groups. Throws on parameters outside every row.
SpecialPrimeSet special_primes(LieFamily family, int n, int64_t q);

// Order of the ambient quasisimple group as a polynomial in q (used for the
// divisibility checks).
BigInt lie_group_order(LieFamily family, int n, int64_t q);

struct PairViolation {
    int64_t q;
    int64_t n, m;
    int alpha, beta;
    std::string note;
};

// Scans all q <= q_max, 13 <= m <= n <= n_max, sign pairs: any common prime
// factor of ell*(q^n - alpha) and ell*(q^m - beta) must come from
// (n, alpha) = (m, beta) or alpha = + with n in {2m, 4m}. Returns violations
// (expected empty); nonexistent ppds inside the range are skipped with a note.
std::vector<PairViolation> scan_lemma_pair(int64_t q_max, int64_t n_max,
                                           std::vector<std::string>* skip_notes = nullptr);

// 2 (Q!)^{k+1} for SL/SU; 2^{k+1} for Sp / Omega^+.
BigInt center_exponent_D(int k, int64_t Q, LieFamily family);

}  // namespace wordmap::primes
