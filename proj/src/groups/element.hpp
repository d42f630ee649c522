#pragma once
// Uniform group element: a permutation or an invertible matrix over a small
// field. Canonical byte keys drive hashing and deterministic tie-breaking.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ff/matrix.hpp"
#include "groups/perm.hpp"

namespace wordmap::groups {

class Element {
  public:
    Element() = default;
    explicit Element(Perm p) : v_(std::move(p)) {}
    explicit Element(ff::Mat m) : v_(std::move(m)) {}

    bool is_perm() const { return std::holds_alternative<Perm>(v_); }
    bool is_mat() const { return std::holds_alternative<ff::Mat>(v_); }
    const Perm& perm() const { return std::get<Perm>(v_); }
    const ff::Mat& mat() const { return std::get<ff::Mat>(v_); }

    Element operator*(const Element& o) const;
    Element inverse() const;
    Element pow(uint64_t e) const;
    Element conj(const Element& by) const;  // by * this * by^-1
    Element identity_like() const;
    bool is_identity() const;
    bool operator==(const Element& o) const { return key() == o.key(); }
    uint64_t order() const;

    std::vector<uint8_t> key() const;  // canonical bytes
    std::string str() const;

  private:
    std::variant<Perm, ff::Mat> v_;
};

}  // namespace wordmap::groups
