#pragma once
// Breadth-first closure of a generated group, with conjugacy classes,
// power maps, centralizer orders, and the brute-force structure constant.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "groups/element.hpp"

namespace wordmap::groups {

struct EnumerationCapExceeded : std::runtime_error {
    int64_t partial_count;
    EnumerationCapExceeded(int64_t n)
        : std::runtime_error("enumeration cap exceeded after " + std::to_string(n) + " elements"),
          partial_count(n) {}
};

class EnumeratedGroup {
  public:
    std::string label;
    std::vector<Element> generators;

    int64_t order() const { return count_; }
    int64_t exponent() const { return exponent_; }
    int num_classes() const { return static_cast<int>(class_rep_.size()); }

    // id 0 is the identity; ids follow BFS discovery order.
    Element element(int32_t id) const;
    int32_t id_of(const Element& e) const;  // -1 if not a member
    int32_t inverse_id(int32_t id) const { return inv_id_[id]; }
    int32_t mul_id(int32_t a, int32_t b) const;

    int class_of_id(int32_t id) const { return class_of_[id]; }
    int class_of(const Element& e) const;   // throws if not a member
    int32_t class_rep(int cls) const { return class_rep_[cls]; }
    int64_t class_size(int cls) const { return class_size_[cls]; }
    int class_inverse(int cls) const { return class_inv_[cls]; }
    uint64_t class_element_order(int cls) const { return class_order_[cls]; }
    int64_t centralizer_order(int cls) const { return count_ / class_size_[cls]; }
    const std::vector<int32_t>& class_elements(int cls) const { return class_elems_[cls]; }

    // class of rep^N; power maps are class functions.
    int class_power(int cls, uint64_t N) const;
    std::vector<int> power_class_map(uint64_t N) const;

    // #{(x,y) in C_a x C_b : xy = z} for the fixed representative z of C_c.
    int64_t brute_structure_constant(int a, int b, int c) const;

  private:
    friend EnumeratedGroup enumerate_group(const std::vector<Element>&, int64_t, const std::string&);
    int64_t count_ = 0;
    int64_t exponent_ = 1;
    size_t keylen_ = 0;
    std::vector<uint8_t> arena_;       // count_ * keylen_ bytes
    std::vector<int32_t> slots_;       // open addressing, -1 empty
    uint64_t slot_mask_ = 0;
    Element exemplar_;                 // identity, used to decode records
    std::vector<int32_t> inv_id_;
    std::vector<int32_t> class_of_;
    std::vector<int32_t> class_rep_;
    std::vector<int64_t> class_size_;
    std::vector<int32_t> class_inv_;
    std::vector<uint64_t> class_order_;
    std::vector<std::vector<int32_t>> class_elems_;

    int32_t lookup_key(const uint8_t* key) const;
    Element decode(const uint8_t* rec) const;
};

// Breadth-first closure; throws EnumerationCapExceeded past `cap` elements.
EnumeratedGroup enumerate_group(const std::vector<Element>& generators, int64_t cap = 20000000,
                                const std::string& label = "");

// Product-replacement walk; deterministic given seed.
Element random_element(const std::vector<Element>& generators, uint64_t seed, int burn_in);

// Incremental sampler sharing one walk.
class RandomWalker {
  public:
    RandomWalker(std::vector<Element> generators, uint64_t seed, int burn_in = 50);
    Element next();

  private:
    std::vector<Element> state_;
    Element acc_;
    Rng rng_;
    void step();
};

}  // namespace wordmap::groups
