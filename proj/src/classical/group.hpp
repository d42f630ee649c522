#pragma once
// Classical matrix groups over small finite fields: specs with fixed forms,
// standard generators, membership predicates, and order polynomials.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "classical/form.hpp"
#include "groups/element.hpp"

namespace wordmap::classical {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { GL, SL, GU, SU, Sp, GO, SO, Omega };

std::string family_name(Family f);

struct ClassicalGroupSpec {
    Family family;
    int n;        // matrix size
    int64_t q;    // defining field size (entries live over F_{q^2} for GU/SU)
    int eps = 0;  // +1 / -1 for GU-type and orthogonal families
    const ff::SmallField* mf = nullptr;  // matrix entry field
    FormSpec form;
    std::vector<ff::Mat> generators;

    bool unitary() const { return family == Family::GU || family == Family::SU; }
    bool orthogonal() const {
        return family == Family::GO || family == Family::SO || family == Family::Omega;
    }
    std::string name() const;
    std::vector<groups::Element> generator_elements() const;
};

// Fixed documented grams and generators; throws on illegal parameters.
ClassicalGroupSpec build_group(Family family, int n, int64_t q, int eps = 0);

struct MembershipResult {
    bool member;
    std::string reason;  // empty when member
};

MembershipResult membership(const ClassicalGroupSpec& spec, const ff::Mat& g);

// Spinor norm of g in SO (odd characteristic); Dickson invariant in O (char 2).
int spinor_norm(const ClassicalGroupSpec& spec, const ff::Mat& g);
int dickson_invariant(const ClassicalGroupSpec& spec, const ff::Mat& g);

uint16_t det_code(const ff::Mat& g);

// Exact group order from the closed-form order polynomial.
BigInt group_order(Family family, int n, int64_t q, int eps = 0);

}  // namespace wordmap::classical
