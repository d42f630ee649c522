#include "groups/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "base/util.hpp"

namespace wordmap::groups {

namespace {

struct KeyTable {
    std::vector<int32_t> slots;
    uint64_t mask;
    size_t keylen;
    const std::vector<uint8_t>* arena;

    explicit KeyTable(size_t keylen_, const std::vector<uint8_t>* arena_)
        : slots(1024, -1), mask(1023), keylen(keylen_), arena(arena_) {}

    void maybe_grow(size_t n) {
        if (n * 2 < slots.size()) return;
        size_t ns = slots.size();
        while (n * 2 >= ns) ns *= 2;
        std::vector<int32_t> fresh(ns, -1);
        uint64_t nm = ns - 1;
        for (int32_t id : slots) {
            if (id < 0) continue;
            uint64_t h = fnv1a(arena->data() + static_cast<size_t>(id) * keylen, keylen);
            uint64_t s = h & nm;
            while (fresh[s] >= 0) s = (s + 1) & nm;
            fresh[s] = id;
        }
        slots = std::move(fresh);
        mask = nm;
    }

    int32_t find(const uint8_t* key) const {
        uint64_t h = fnv1a(key, keylen);
        uint64_t s = h & mask;
        while (true) {
            int32_t id = slots[s];
            if (id < 0) return -1;
            if (std::memcmp(arena->data() + static_cast<size_t>(id) * keylen, key, keylen) == 0) return id;
            s = (s + 1) & mask;
        }
    }

    // insert assuming absent
    void insert(const uint8_t* key, int32_t id) {
        uint64_t h = fnv1a(key, keylen);
        uint64_t s = h & mask;
        while (slots[s] >= 0) s = (s + 1) & mask;
        slots[s] = id;
    }
};

struct UnionFind {
    std::vector<int32_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int32_t find(int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int32_t a, int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep least id as root
        parent[b] = a;
    }
};

}  // namespace

Element EnumeratedGroup::decode(const uint8_t* rec) const {
    if (exemplar_.is_perm()) {
        std::vector<uint8_t> img(rec, rec + keylen_);
        return Element(Perm(std::move(img)));
    }
    const auto& m0 = exemplar_.mat();
    std::vector<uint16_t> codes(keylen_ / 2);
    for (size_t i = 0; i < codes.size(); ++i)
        codes[i] = static_cast<uint16_t>(rec[2 * i] | (rec[2 * i + 1] << 8));
    return Element(ff::Mat::from_codes(m0.fld(), m0.rows(), m0.cols(), std::move(codes)));
}

Element EnumeratedGroup::element(int32_t id) const {
    return decode(arena_.data() + static_cast<size_t>(id) * keylen_);
}

int32_t EnumeratedGroup::lookup_key(const uint8_t* key) const {
    uint64_t h = fnv1a(key, keylen_);
    uint64_t s = h & slot_mask_;
    while (true) {
        int32_t id = slots_[s];
        if (id < 0) return -1;
        if (std::memcmp(arena_.data() + static_cast<size_t>(id) * keylen_, key, keylen_) == 0) return id;
        s = (s + 1) & slot_mask_;
    }
}

int32_t EnumeratedGroup::id_of(const Element& e) const {
    auto key = e.key();
    if (key.size() != keylen_) return -1;
    return lookup_key(key.data());
}

int32_t EnumeratedGroup::mul_id(int32_t a, int32_t b) const {
    Element prod = element(a) * element(b);
    return id_of(prod);
}

int EnumeratedGroup::class_of(const Element& e) const {
    int32_t id = id_of(e);
    if (id < 0) throw std::domain_error("class_of: element is not in the group index");
    return class_of_[id];
}

int EnumeratedGroup::class_power(int cls, uint64_t N) const {
    Element rep = element(class_rep_[cls]);
    // power maps depend only on N mod exp(G)
    uint64_t e = N % static_cast<uint64_t>(exponent_);
    Element p = rep.pow(e);
    return class_of_[id_of(p)];
}

std::vector<int> EnumeratedGroup::power_class_map(uint64_t N) const {
    std::vector<int> out(num_classes());
    for (int c = 0; c < num_classes(); ++c) out[c] = class_power(c, N);
    return out;
}

int64_t EnumeratedGroup::brute_structure_constant(int a, int b, int c) const {
    Element z = element(class_rep_[c]);
    int64_t count = 0;
    for (int32_t xid : class_elems_[a]) {
        Element y = element(inv_id_[xid]) * z;
        int32_t yid = id_of(y);
        if (yid >= 0 && class_of_[yid] == b) ++count;
    }
    return count;
}

EnumeratedGroup enumerate_group(const std::vector<Element>& generators, int64_t cap,
                                const std::string& label) {
    if (generators.empty()) throw std::domain_error("enumerate_group: no generators");
    if (cap < 1) throw std::domain_error("enumerate_group: cap must be >= 1");
    EnumeratedGroup g;
    g.label = label;
    g.generators = generators;
    Element id = generators[0].identity_like();
    for (const auto& gen : generators) {
        if (gen.is_perm() != id.is_perm()) throw std::domain_error("enumerate_group: mixed generator variants");
        if (gen.key().size() != id.key().size()) throw std::domain_error("enumerate_group: inconsistent degrees");
    }
    g.exemplar_ = id;
    g.keylen_ = id.key().size();
    // Hard memory guard: arena + per-element tables.
    if (static_cast<uint64_t>(cap) * g.keylen_ > (1ull << 33))
        throw std::domain_error("enumerate_group: cap exceeds the memory guard");

    KeyTable table(g.keylen_, &g.arena_);
    auto push = [&](const Element& e) -> int32_t {
        auto key = e.key();
        int32_t found = table.find(key.data());
        if (found >= 0) return -1;
        int32_t nid = static_cast<int32_t>(g.count_);
        g.arena_.insert(g.arena_.end(), key.begin(), key.end());
        table.maybe_grow(static_cast<size_t>(g.count_) + 1);
        table.insert(key.data(), nid);
        ++g.count_;
        return nid;
    };

    push(id);
    // Plain BFS closure over right-multiplication by generators.
    for (int64_t head = 0; head < g.count_; ++head) {
        Element cur = g.decode(g.arena_.data() + static_cast<size_t>(head) * g.keylen_);
        for (const auto& gen : generators) {
            Element nxt = cur * gen;
            if (push(nxt) >= 0 && g.count_ > cap) throw EnumerationCapExceeded(g.count_);
        }
    }
    g.slots_ = std::move(table.slots);
    g.slot_mask_ = table.mask;

    const int64_t n = g.count_;
    // inverses
    g.inv_id_.resize(n);
    for (int64_t i = 0; i < n; ++i) {
        Element e = g.element(static_cast<int32_t>(i));
        g.inv_id_[i] = g.id_of(e.inverse());
    }

    // conjugacy classes: union-find over conjugation by generators
    UnionFind uf(static_cast<size_t>(n));
    std::vector<Element> gen_inv;
    for (const auto& gen : generators) gen_inv.push_back(gen.inverse());
    for (int64_t i = 0; i < n; ++i) {
        Element x = g.element(static_cast<int32_t>(i));
        for (size_t k = 0; k < generators.size(); ++k) {
            Element conj = generators[k] * x * gen_inv[k];
            int32_t cid = g.id_of(conj);
            uf.unite(static_cast<int32_t>(i), cid);
        }
    }
    // deterministic numbering: classes sorted by least element id; id 0 first
    std::vector<int32_t> root_of(n);
    std::vector<int32_t> roots;
    for (int64_t i = 0; i < n; ++i) {
        root_of[i] = uf.find(static_cast<int32_t>(i));
        if (root_of[i] == i) roots.push_back(static_cast<int32_t>(i));
    }
    std::sort(roots.begin(), roots.end());
    std::vector<int32_t> class_index(n, -1);
    for (size_t c = 0; c < roots.size(); ++c) class_index[roots[c]] = static_cast<int32_t>(c);
    g.class_of_.resize(n);
    g.class_rep_ = roots;
    g.class_size_.assign(roots.size(), 0);
    g.class_elems_.assign(roots.size(), {});
    for (int64_t i = 0; i < n; ++i) {
        int32_t c = class_index[root_of[i]];
        g.class_of_[i] = c;
        g.class_size_[c]++;
        g.class_elems_[c].push_back(static_cast<int32_t>(i));
    }
    // orders, exponent, inverse classes
    g.class_order_.resize(roots.size());
    g.class_inv_.resize(roots.size());
    int64_t expo = 1;
    for (size_t c = 0; c < roots.size(); ++c) {
        Element rep = g.element(roots[c]);
        g.class_order_[c] = rep.order();
        expo = lcm64_checked(expo, static_cast<int64_t>(g.class_order_[c]));
        g.class_inv_[c] = g.class_of_[g.inv_id_[roots[c]]];
    }
    g.exponent_ = expo;
    return g;
}

Element random_element(const std::vector<Element>& generators, uint64_t seed, int burn_in) {
    RandomWalker w(generators, seed, burn_in);
    return w.next();
}

RandomWalker::RandomWalker(std::vector<Element> generators, uint64_t seed, int burn_in)
    : rng_(seed ^ 0xa5a5a5a55a5a5a5aull) {
    if (generators.empty()) throw std::domain_error("RandomWalker: no generators");
    // product-replacement state: generators cycled to at least 8 slots
    size_t slots = std::max<size_t>(8, generators.size() * 2);
    for (size_t i = 0; i < slots; ++i) state_.push_back(generators[i % generators.size()]);
    acc_ = generators[0].identity_like();
    for (int i = 0; i < burn_in; ++i) step();
}

void RandomWalker::step() {
    size_t i = rng_.below(state_.size());
    size_t j = rng_.below(state_.size() - 1);
    if (j >= i) ++j;
    bool invert = rng_.below(2) == 1;
    Element rhs = invert ? state_[j].inverse() : state_[j];
    state_[i] = state_[i] * rhs;
    acc_ = acc_ * state_[i];
}

Element RandomWalker::next() {
    step();
    return acc_;
}

}  // namespace wordmap::groups
