#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wordmap::groups {

// Permutation on {0, ..., n-1}; composition applies the right factor first:
// (f*g)(i) = f(g(i)).
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<uint8_t> images);
    static Perm identity(int n) { return Perm(n); }
    // 1-based disjoint cycle input, e.g. {{1,2,3},{4,5}} on n points.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    uint8_t operator()(int i) const { return img_[i]; }
    const std::vector<uint8_t>& images() const { return img_; }

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool is_identity() const;
    bool is_even() const;
    uint64_t order() const;
    std::vector<std::vector<int>> cycles() const;  // 1-based, nontrivial cycles
    std::string str() const;

  private:
    std::vector<uint8_t> img_;
};

}  // namespace wordmap::groups
