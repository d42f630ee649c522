#pragma once
// Explicit regular 2-elements in classical groups over odd fields, with
// machine-checkable certificates: the binary-decomposition block assemblies
// for GL/GU (prescribed determinant), Sp (spectrum avoiding +-1), and SO
// (prescribed spinor norm).

#include "classical/eigen.hpp"

namespace wordmap::construct {

using classical::ClassicalGroupSpec;
using classical::Family;

struct Certificate {
    uint64_t order = 1;         // 2-power
    ff::FieldElement det;       // GL/GU claim
    int spinor = 0;             // SO claim: +1 / -1
    bool regular = true;
    // eigenvalue clause per family is re-verified in verify():
    //   GL/GU: at most two eigenvalues in mu_{q-eps}, each with multiplicity 1
    //   Sp: no +-1 eigenvalue, all multiplicities 1
    //   SO: multiplicities <= 2 and 2 only at +-1
};

struct Construction {
    ClassicalGroupSpec spec;
    ff::Mat element;
    Certificate cert;
    std::string description;
};

// Lemma-style constructions; q odd throughout.
Construction construct_glu_2element(int n, int64_t q, int eps, const ff::FieldElement& delta);
Construction construct_sp_2element(int n, int64_t q);  // Sp_{2n}(q)
Construction construct_so_2element(int n, int64_t q, int eps, int delta);

// Re-verifies every certificate claim through the classical module; throws
// std::runtime_error describing the first failed claim.
void verify(const Construction& c);

// All legal delta inputs for the GLU construction: 2-elements of mu_{q-eps}.
std::vector<ff::FieldElement> glu_deltas(int64_t q, int eps);

}  // namespace wordmap::construct
