#include "groups/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "base/util.hpp"
#include "kernels/kernels.hpp"

namespace wordmap::groups {

Perm::Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = static_cast<uint8_t>(i);
}

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (uint8_t v : img_) {
        if (v >= img_.size() || seen[v]) throw std::domain_error("Perm: images are not a bijection");
        seen[v] = true;
    }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<uint8_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n) throw std::domain_error("Perm: cycle point out of range");
            img[from] = static_cast<uint8_t>(to);
        }
    }
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw std::domain_error("Perm: degree mismatch");
    std::vector<uint8_t> r(img_.size());
    kern::backend().perm_compose(img_.data(), o.img_.data(), r.data(), degree());
    Perm out;
    out.img_ = std::move(r);
    return out;
}

Perm Perm::inverse() const {
    std::vector<uint8_t> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<uint8_t>(i);
    Perm out;
    out.img_ = std::move(r);
    return out;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<std::vector<int>> out;
    for (size_t s = 0; s < img_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        size_t i = s;
        while (!seen[i]) {
            seen[i] = true;
            cyc.push_back(static_cast<int>(i) + 1);
            i = img_[i];
        }
        if (cyc.size() > 1) out.push_back(std::move(cyc));
    }
    return out;
}

bool Perm::is_even() const {
    int transpositions = 0;
    for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
    return transpositions % 2 == 0;
}

uint64_t Perm::order() const {
    uint64_t o = 1;
    for (const auto& c : cycles()) o = lcm64_checked(static_cast<int64_t>(o), static_cast<int64_t>(c.size()));
    return o;
}

std::string Perm::str() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << ")";
    }
    return os.str();
}

}  // namespace wordmap::groups
