#pragma once
// The verification layer: exact Frobenius positivity through character
// tables, power-word surjectivity, iterated 2-element class coverage,
// det-constrained conditions, constructive decompositions into 2-elements,
// proportion counts, and the Cauchy-Schwarz tail bound.

#include <array>
#include <optional>
#include <unordered_map>

#include "breakdec/breakdec.hpp"
#include "chartab/table.hpp"

namespace wordmap::words {

using chartab::CharacterTable;
using groups::Element;
using groups::EnumeratedGroup;

enum class Status { Surjective, NotSurjective, Inconclusive };
std::string status_name(Status s);

struct WordCheckResult {
    Status status = Status::Inconclusive;
    // per-class witnesses: c -> (a, b) with positive constant, or (a, b, d)
    // for triple words; -1 entries when missed
    std::vector<std::array<int, 3>> witnesses;  // [a, b, c]
    std::vector<std::array<int, 4>> triple_witnesses;  // [a, b, d, c]
    std::vector<int> missed;
    std::string method;
};

// Exact class-algebra engine over one character table.
class Engine {
  public:
    explicit Engine(const CharacterTable& t);

    const CharacterTable& table() const { return t_; }
    int classes() const { return t_.k; }

    // #{(x, y) in C_a x C_b : xy = z} for fixed z in C_c, exactly.
    Rat structure_constant(int a, int b, int c) const;
    bool positive(int a, int b, int c) const;

    // number of solutions to s1 s2 s3 = z weighted by the class-algebra
    // (positive iff z is a product of one element from each class)
    bool triple_positive(int a, int b, int d, int c) const;

    // single-class-cubed criterion: sum chi(s)^3 conj(chi)(c) / chi(1)^2 != 0,
    // decided exactly (the sum is a rational and is asserted to be one)
    bool cube_positive(int s, int c) const;

    // classes of g^N (as the image set and the full map)
    std::vector<int> power_map(uint64_t N) const;
    std::vector<int> power_image(uint64_t N) const;  // sorted distinct

    // classes of 2-power-order elements (including the identity)
    std::vector<int> two_element_classes() const;

    // product support of a set of classes: all c with positive (a, b, c)
    std::vector<int> product_support(const std::vector<int>& A, const std::vector<int>& B) const;

  private:
    CharacterTable t_;
    const chartab::CycContext* ctx_;
    int phi_;
    int64_t lcm_deg_;
    std::vector<int64_t> degree_;
    std::vector<std::vector<std::vector<int64_t>>> vals_;  // [i][j] -> coeff vec
    mutable std::unordered_map<uint64_t, Rat> memo_;
    mutable std::mutex memo_mu_;
    Rat compute_constant(int a, int b, int c) const;
};

WordCheckResult check_xNyN(const Engine& e, uint64_t N);
WordCheckResult check_xNyNzN(const Engine& e, uint64_t N);
WordCheckResult check_k_2element_cover(const Engine& e, int k);

// Condition P(N) / P_u(N) for an enumerable GL^eps_k(q): every (unbreakable)
// class g admits N-th power classes a (det 1) and b (det matching g) with a
// positive constant. col_of_class / rep ids come from the Dixon bundle.
WordCheckResult check_condition_PN(const classical::ClassicalGroupSpec& spec,
                                   const EnumeratedGroup& g, const chartab::GroupTable& gt,
                                   const Engine& e, uint64_t N, bool unbreakable_only);

// Lemma 7.4(ii)-style det-constrained triple coverage: every class is hit by
// a product of three 2-element classes with the first two of determinant 1.
WordCheckResult check_det_constrained_triples(const classical::ClassicalGroupSpec& spec,
                                              const EnumeratedGroup& g,
                                              const chartab::GroupTable& gt, const Engine& e);

// x := t^{|t|_{2'}} for an inverting t found by search; returns 2-elements
// (u, v) with u v = g, or nullopt when g is not real.
std::optional<std::pair<Element, Element>> two_2elements_witness(const EnumeratedGroup& g,
                                                                 const Element& x);

// Constructive alternating-group decomposition into two 2-elements.
std::pair<groups::Perm, groups::Perm> alt_odd_decompose(const groups::Perm& g);

// |{g : some prime in `primes` divides |g|}| / |G| exactly.
Rat proportion_divisible(const EnumeratedGroup& g, const std::vector<int64_t>& primes);

struct TailBound {
    double bound;
    double actual;  // certified upper bound on the partial-sum absolute value
};

TailBound tail_bound(const Engine& e, int64_t D, int a, int b, int c);

}  // namespace wordmap::words
