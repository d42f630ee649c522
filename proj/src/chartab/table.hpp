#pragma once
// Exact complex character tables with class metadata, orthogonality
// certification, the Galois-orbit nonvanishing bound, and the text format.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chartab/cyclotomic.hpp"
#include "groups/group.hpp"

namespace wordmap::chartab {

struct CharacterTable {
    std::string label;
    int64_t order = 0;
    int64_t exponent = 1;
    int k = 0;                       // number of classes == number of characters
    std::vector<int64_t> sizes;      // class sizes
    std::vector<int64_t> orders;     // element orders per class
    std::vector<int> inverse;        // inverse-class map
    std::vector<std::pair<int64_t, std::vector<int>>> powermaps;  // per prime dividing exponent
    std::vector<std::vector<Cyc>> values;  // values[character][class]

    const CycContext* ctx() const { return cyc_context(exponent); }
    int64_t centralizer_order(int j) const { return order / sizes[j]; }
    int64_t degree(int i) const;  // values[i][0], must be a positive integer

    const std::vector<int>* powermap(int64_t p) const;
    // class of g^n for the class j, via stored prime maps (and Galois
    // permutations for primes coprime to the exponent). Throws if a needed
    // map is missing.
    int class_power(int j, uint64_t n) const;

    // Lemma-2.9-style profile: #{i : chi_i(g_j) != 0}.
    int nonvanishing_profile(int j) const;
};

struct OrthoViolation {
    std::string kind;  // "row", "column", "degree-sum", "degree-divides", ...
    int a = -1, b = -1;
    std::string defect;
};

// Exact verification of both orthogonality relations, sum of squares,
// degree divisibility, and the trivial-character row. nullopt = certificate.
std::optional<OrthoViolation> check_orthogonality(const CharacterTable& t);

// Exact power-map consistency: for every character and class, the root-of-
// unity multiplicity vector recovered through the stored power maps must be
// nonnegative integers summing to the degree.
std::optional<OrthoViolation> check_powermap_consistency(const CharacterTable& t);

// Runs all table validations; throws std::runtime_error on the first defect.
void validate_table(const CharacterTable& t);

// Dixon-Schneider computation from an enumerated group. col_of_class maps a
// group class id to its table column (columns are sorted by element order,
// class size, then least representative id).
struct GroupTable {
    CharacterTable table;
    std::vector<int> col_of_class;
    std::vector<int32_t> rep_id_of_col;  // group element id of each column's representative
};

GroupTable dixon_schneider(const groups::EnumeratedGroup& g, uint64_t seed);

// Text format (see README): `group/order/exponent/classes/sizes/orders/
// inverse/powermap*/char*` lines.
CharacterTable parse_table(const std::string& text);
std::string write_table(const CharacterTable& t);

}  // namespace wordmap::chartab
