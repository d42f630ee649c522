#pragma once
// Designator resolution: builds generator sets (permutation models for
// alternating and PSL2 groups, matrix models for classical groups), and the
// enumerate + Dixon + engine pipeline with table caching.

#include <memory>
#include <optional>

#include "words/words.hpp"

namespace wordmap::catalog {

std::vector<groups::Element> alternating_generators(int n);
std::vector<groups::Element> symmetric_generators(int n);
std::vector<groups::Element> cyclic_generators(int n);
// PSL_2(q) acting on the projective line (q + 1 points).
std::vector<groups::Element> psl2_generators(int64_t q);

struct GroupBundle {
    std::string label;
    std::vector<groups::Element> generators;
    std::optional<classical::ClassicalGroupSpec> spec;
    std::shared_ptr<groups::EnumeratedGroup> group;
    std::shared_ptr<chartab::GroupTable> gt;
    std::shared_ptr<words::Engine> engine;
    bool cache_hit = false;

    const groups::EnumeratedGroup& G() const { return *group; }
    const words::Engine& E() const { return *engine; }
};

// Designators: A5, S4, C6, PSL2(11), SL2(5), GL3(3), GU3(3), SU4(2), Sp4(3),
// SO+4(3), Omega-4(2), PSL3(3), PSU3(3), PSU4(2), or file:<path>.ctab.
// Builds the group, its character table (Dixon-Schneider, seeded), and the
// class-algebra engine. cache_dir, when nonempty, is used to reuse tables
// for table-only work; the group/Dixon pipeline still runs when a group
// model exists (the mapping between group classes and table columns is not
// part of the file format).
GroupBundle build_bundle(const std::string& designator, uint64_t seed, const std::string& cache_dir = "");

// Table-only bundle from a .ctab file.
GroupBundle table_bundle(const std::string& path);

}  // namespace wordmap::catalog
