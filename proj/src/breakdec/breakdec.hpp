#pragma once
// Canonical form-module decomposition (primary pieces refined into
// nondegenerate unit blocks), breakability per the natural-subgroup
// definitions, and sampled verification of the centralizer/eigenspace
// bound lemmas.

#include "classical/centralizer.hpp"

namespace wordmap::breakdec {

using classical::ClassicalGroupSpec;
using classical::Family;

enum class SummandKind {
    GLBlock,        // elementary-divisor block (no form)
    DualPair,       // (f, f*-dual) paired block
    SelfDual,       // self-dual f != t -+ 1 unit
    UnipotentV,     // +-1 piece, single nondegenerate Jordan block: V(k)
    UnipotentW,     // +-1 piece, paired Jordan blocks: W(k)
};

struct Summand {
    SummandKind kind;
    ff::Poly poly;   // the irreducible (for DualPair: the canonical one of the pair)
    int jordan = 1;  // block size over poly
    int dim = 0;     // ambient dimension of the summand
    std::vector<std::vector<uint16_t>> basis;  // rows, ambient coordinates
    std::string label;                         // "W(3)", "V(4)", "pair(deg2,k=1)", ...
};

struct FormModuleDecomposition {
    ClassicalGroupSpec spec;
    ff::Mat element;
    std::vector<Summand> summands;
};

// Primary decomposition refined to nondegenerate units; throws on
// unsupported parameters (char-2 orthogonal beyond the supported range
// errors loudly rather than approximating).
FormModuleDecomposition form_module_decomposition(const ClassicalGroupSpec& spec, const ff::Mat& x);

struct BreakResult {
    bool breakable;
    // witness: indices of summands spanning U (empty when unbreakable)
    std::vector<int> witness;
    std::string detail;
};

BreakResult is_breakable(const ClassicalGroupSpec& spec, const ff::Mat& x);

// Perfection of Sp_n(q) / Omega^eps_n(q), the hard-coded small-group table.
bool perfect_sp(int dim, int64_t q);
bool perfect_omega(int dim, int64_t q, int eps);

// Restriction of x to the span of `basis` (coordinates in that basis).
ff::Mat restrict_to(const ff::Mat& x, const std::vector<std::vector<uint16_t>>& basis);

struct BoundCheckReport {
    std::string lemma;
    std::string group;
    int samples = 0;
    int unbreakable_hits = 0;
    int skipped = 0;  // centralizer too large to enumerate
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// lemma in {"3.2","3.3","3.4","3.6","3.7","3.8","eq-3.1"}.
BoundCheckReport sample_bound_check(const ClassicalGroupSpec& spec, const std::string& lemma,
                                    int samples, uint64_t seed);

}  // namespace wordmap::breakdec
