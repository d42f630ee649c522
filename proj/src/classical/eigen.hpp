#pragma once
// Eigenvalue profiles over the algebraic closure: characteristic polynomial
// factorization, alpha-eigenspace dimensions e(x, alpha), and the two
// cross-checked regular-semisimplicity criteria.

#include "classical/group.hpp"
#include "ff/poly.hpp"

namespace wordmap::classical {

struct EigenValue {
    ff::FieldElement value;  // lives in F_{Q^d} for the factor's degree d
    int algebraic_mult;
};

struct EigenProfile {
    int n = 0;
    const ff::SmallField* base = nullptr;
    std::vector<std::pair<ff::Poly, int>> factors;  // irreducible / multiplicity
    std::vector<EigenValue> eigenvalues;            // one entry per root

    // Algebraic multiplicity of alpha (code in some extension of the base).
    int algebraic_multiplicity(const ff::FieldElement& alpha) const;
    // e(x, alpha) = dim Ker(x - alpha I) over the field of alpha.
    // Provided by the profile holder (kernel ranks are computed on demand).
};

EigenProfile eigen_profile(const ClassicalGroupSpec& spec, const ff::Mat& g);

// dim Ker(g - alpha I) over the field containing alpha (an extension of the
// matrix entry field).
int eigenspace_dim(const ff::Mat& g, const ff::FieldElement& alpha);

// mu_{q-eps} of the spec: elements alpha with alpha^{q-eps} = 1, as elements
// of F_q (eps=+) or F_{q^2} (eps=-).
std::vector<ff::FieldElement> mu_q_minus_eps(const ClassicalGroupSpec& spec);

// TRUE iff the centralizer dimension in the ambient algebraic group equals
// the rank; decided by the per-family eigenvalue-multiplicity criterion and
// cross-checked against the form-Lie-algebra commutant dimension. A
// disagreement throws std::logic_error.
bool is_regular_semisimple(const ClassicalGroupSpec& spec, const ff::Mat& g);

// Commutant dimension used by criterion (b); exposed for tests.
int lie_commutant_dim(const ClassicalGroupSpec& spec, const ff::Mat& g);

}  // namespace wordmap::classical
