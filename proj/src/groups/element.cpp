#include "groups/element.hpp"

#include <stdexcept>

namespace wordmap::groups {

Element Element::operator*(const Element& o) const {
    if (is_perm() && o.is_perm()) return Element(perm() * o.perm());
    if (is_mat() && o.is_mat()) return Element(mat() * o.mat());
    throw std::domain_error("Element: mixed variants in product");
}

Element Element::inverse() const {
    if (is_perm()) return Element(perm().inverse());
    return Element(mat().inverse());
}

Element Element::pow(uint64_t e) const {
    Element acc = identity_like();
    Element base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Element Element::conj(const Element& by) const { return by * (*this) * by.inverse(); }

Element Element::identity_like() const {
    if (is_perm()) return Element(Perm::identity(perm().degree()));
    return Element(ff::Mat::identity(mat().fld(), mat().rows()));
}

bool Element::is_identity() const {
    if (is_perm()) return perm().is_identity();
    return mat().is_identity();
}

uint64_t Element::order() const {
    if (is_perm()) return perm().order();
    return mat().order();
}

std::vector<uint8_t> Element::key() const {
    if (is_perm()) return perm().images();
    const auto& m = mat();
    std::vector<uint8_t> out;
    out.reserve(m.data().size() * 2);
    for (uint16_t v : m.data()) {
        out.push_back(static_cast<uint8_t>(v & 0xff));
        out.push_back(static_cast<uint8_t>(v >> 8));
    }
    return out;
}

std::string Element::str() const {
    if (is_perm()) return perm().str();
    return mat().str();
}

}  // namespace wordmap::groups
