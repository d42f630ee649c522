#pragma once
// Bilinear/hermitian/quadratic form data for classical groups, Witt-type
// computation, and constructive change-of-basis between equivalent forms.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ff/matrix.hpp"

namespace wordmap::classical {

enum class FormKind { None, Symplectic, Symmetric, Quadratic2, Hermitian };

struct FormSpec {
    FormKind kind = FormKind::None;
    const ff::SmallField* field = nullptr;  // matrix entry field (F_{q^2} for hermitian)
    int frob_steps = 0;                     // hermitian conjugation x -> x^(p^frob_steps)
    ff::Mat gram;                           // bilinear gram (polarization for Quadratic2)
    std::vector<uint16_t> quad;             // char 2: Q(e_i)

    int dim() const { return gram.rows(); }
    uint16_t conj(uint16_t a) const { return field->frob_iter(a, frob_steps); }

    // f(u, v); hermitian uses xT B conj(y).
    uint16_t bilinear(const std::vector<uint16_t>& u, const std::vector<uint16_t>& v) const;
    // Q(v): char 2 quadratic value; odd characteristic f(v,v)/2; hermitian norm form.
    uint16_t quadratic(const std::vector<uint16_t>& v) const;

    bool preserves(const ff::Mat& g) const;
    // Gram of the form restricted to the span of `rows` (each a length-dim vector).
    ff::Mat restrict_gram(const std::vector<std::vector<uint16_t>>& rows) const;
    std::vector<uint16_t> restrict_quad(const std::vector<std::vector<uint16_t>>& rows) const;
};

// Standard forms (documented in the README):
//  - symplectic: antidiagonal, +1 above the antidiagonal and -1 below;
//  - symmetric (odd char): all-ones antidiagonal for odd dim and type +;
//    type - replaces the central 2x2 by the F_{q^2}/F_q norm-form gram in the
//    basis {1, w} with w the canonical generator of F_{q^2};
//  - quadratic (char 2): hyperbolic pairs (Q = 0 on basis vectors), type -
//    replaces the central pair by Q(x, y) = x^2 + xy + nu y^2 with nu the
//    least value making that form anisotropic;
//  - hermitian: identity gram over F_{q^2}.
FormSpec standard_symplectic(const ff::SmallField* f, int n);
FormSpec standard_symmetric(const ff::SmallField* f, int n, int eps);   // odd char
FormSpec standard_quadratic2(const ff::SmallField* f, int n, int eps);  // char 2, even n
FormSpec standard_hermitian(const ff::SmallField* fq2, int n, int frob_steps);

// Witt type of a nondegenerate even-dimensional form: +1 or -1.
int witt_type(const FormSpec& form);

// P with P^T * dst.gram * conj(P) = src.gram, so m -> P m P^-1 carries
// src-isometries to dst-isometries. Throws if the forms are inequivalent.
ff::Mat change_of_basis(const FormSpec& src, const FormSpec& dst);

// Spinor norm (odd characteristic) via constructive reflection factorization:
// +1 / -1 as the square class of the product of Q(v_i).
int spinor_norm_of(const FormSpec& form, const ff::Mat& g);

// Dickson invariant (char 2): rank(g - 1) mod 2.
int dickson_invariant_of(const ff::Mat& g);

// 1 if x is a nonzero square in the field, -1 if a nonsquare (odd char).
int square_class(const ff::SmallField* f, uint16_t x);

}  // namespace wordmap::classical
