#include "catalog/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace wordmap::catalog {

using groups::Element;
using groups::Perm;

std::vector<Element> alternating_generators(int n) {
    if (n < 3) throw std::domain_error("alternating_generators: n >= 3");
    std::vector<Element> gens;
    gens.push_back(Element(Perm::from_cycles(n, {{1, 2, 3}})));
    std::vector<int> cyc;
    if (n % 2 == 1)
        for (int i = 1; i <= n; ++i) cyc.push_back(i);
    else
        for (int i = 2; i <= n; ++i) cyc.push_back(i);
    if (cyc.size() > 2) gens.push_back(Element(Perm::from_cycles(n, {cyc})));
    return gens;
}

std::vector<Element> symmetric_generators(int n) {
    std::vector<Element> gens;
    gens.push_back(Element(Perm::from_cycles(n, {{1, 2}})));
    std::vector<int> cyc;
    for (int i = 1; i <= n; ++i) cyc.push_back(i);
    if (n >= 3) gens.push_back(Element(Perm::from_cycles(n, {cyc})));
    return gens;
}

std::vector<Element> cyclic_generators(int n) {
    std::vector<int> cyc;
    for (int i = 1; i <= n; ++i) cyc.push_back(i);
    return {Element(Perm::from_cycles(n, {cyc}))};
}

std::vector<Element> psl2_generators(int64_t q) {
    // points: index 0 = infinity, 1 + code = field element
    const ff::SmallField* f = nullptr;
    for (int64_t p : prime_factors_distinct(q)) {
        int e = 0;
        int64_t v = q;
        while (v > 1) {
            v /= p;
            ++e;
        }
        f = ff::small_field(p, e);
        break;
    }
    int n = static_cast<int>(q) + 1;
    auto act = [&](uint16_t a, uint16_t b, uint16_t c, uint16_t d) {
        std::vector<uint8_t> img(n);
        // infinity
        img[0] = c == 0 ? 0 : static_cast<uint8_t>(1 + f->mul(a, f->inv(c)));
        for (uint32_t z = 0; z < f->q; ++z) {
            uint16_t zn = f->add(f->mul(a, static_cast<uint16_t>(z)), b);
            uint16_t zd = f->add(f->mul(c, static_cast<uint16_t>(z)), d);
            img[1 + z] = zd == 0 ? 0 : static_cast<uint8_t>(1 + f->mul(zn, f->inv(zd)));
        }
        return Element(Perm(std::move(img)));
    };
    // translation, torus (covers all root-subgroup parameters by conjugation),
    // and the Weyl inversion
    uint16_t g = f->gen_code;
    std::vector<Element> out = {act(1, 1, 0, 1), act(0, f->neg(1), 1, 0)};
    if (f->q > 3) out.push_back(act(g, 0, 0, f->inv(g)));
    return out;
}

namespace {

GroupBundle finish_bundle(GroupBundle b, uint64_t seed, const std::string& cache_dir) {
    b.group = std::make_shared<groups::EnumeratedGroup>(
        groups::enumerate_group(b.generators, 20000000, b.label));
    if (!cache_dir.empty()) {
        std::filesystem::path p = std::filesystem::path(cache_dir) / (b.label + ".ctab");
        if (std::filesystem::exists(p)) {
            std::ifstream in(p);
            std::ostringstream ss;
            ss << in.rdbuf();
            chartab::CharacterTable cached = chartab::parse_table(ss.str());  // validates
            b.cache_hit = true;
            (void)cached;
        }
    }
    auto gt = chartab::dixon_schneider(*b.group, seed);
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::filesystem::path p = std::filesystem::path(cache_dir) / (b.label + ".ctab");
        std::ofstream out(p);
        out << chartab::write_table(gt.table);
    }
    b.gt = std::make_shared<chartab::GroupTable>(std::move(gt));
    b.engine = std::make_shared<words::Engine>(b.gt->table);
    return b;
}

}  // namespace

GroupBundle table_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open table file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    chartab::CharacterTable t = chartab::parse_table(ss.str());
    GroupBundle b;
    b.label = t.label;
    auto gt = std::make_shared<chartab::GroupTable>();
    gt->table = std::move(t);
    b.gt = gt;
    b.engine = std::make_shared<words::Engine>(b.gt->table);
    return b;
}

GroupBundle build_bundle(const std::string& designator, uint64_t seed, const std::string& cache_dir) {
    GroupBundle b;
    b.label = designator;
    std::smatch m;
    if (designator.rfind("file:", 0) == 0) return table_bundle(designator.substr(5));
    if (std::regex_match(designator, m, std::regex(R"(A(\d+))"))) {
        b.generators = alternating_generators(std::stoi(m[1]));
    } else if (std::regex_match(designator, m, std::regex(R"(S(\d+))"))) {
        b.generators = symmetric_generators(std::stoi(m[1]));
    } else if (std::regex_match(designator, m, std::regex(R"(C(\d+))"))) {
        b.generators = cyclic_generators(std::stoi(m[1]));
    } else if (std::regex_match(designator, m, std::regex(R"(PSL2\((\d+)\))"))) {
        b.generators = psl2_generators(std::stoll(m[1]));
    } else if (std::regex_match(designator, m, std::regex(R"((PSL|PSU|GL|SL|GU|SU|Sp|GO|SO|Omega)([+-]?)(\d+)\((\d+)\))"))) {
        std::string fam = m[1];
        std::string sign = m[2];
        int n = std::stoi(m[3]);
        int64_t q = std::stoll(m[4]);
        classical::Family family;
        // PSL_n / PSU_n designators resolve to SL/SU models when the center
        // is trivial (the only cases the corpus uses).
        if (fam == "PSL" || fam == "SL")
            family = classical::Family::SL;
        else if (fam == "PSU" || fam == "SU")
            family = classical::Family::SU;
        else if (fam == "GL")
            family = classical::Family::GL;
        else if (fam == "GU")
            family = classical::Family::GU;
        else if (fam == "Sp")
            family = classical::Family::Sp;
        else if (fam == "GO")
            family = classical::Family::GO;
        else if (fam == "SO")
            family = classical::Family::SO;
        else
            family = classical::Family::Omega;
        if (fam == "PSL" || fam == "PSU") {
            int64_t d = gcd64(n, fam == "PSL" ? q - 1 : q + 1);
            if (d != 1)
                throw std::domain_error(designator + ": nontrivial center; use the permutation model");
        }
        int eps = sign == "+" ? +1 : (sign == "-" ? -1 : 0);
        auto spec = classical::build_group(family, n, q, eps);
        b.spec = spec;
        b.generators = spec.generator_elements();
    } else {
        throw std::domain_error("unknown group designator: " + designator);
    }
    return finish_bundle(std::move(b), seed, cache_dir);
}

}  // namespace wordmap::catalog
