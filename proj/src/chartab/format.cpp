#include <sstream>

#include "chartab/table.hpp"

namespace wordmap::chartab {

namespace {

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("table parse error at line " + std::to_string(lineno) + ": " + msg);
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

CharacterTable parse_table(const std::string& text) {
    LineReader rd(text);
    CharacterTable t;
    std::string line;
    auto expect_tag = [&](const std::string& line_, const std::string& tag) -> std::string {
        if (line_.rfind(tag + " ", 0) != 0) rd.fail("expected `" + tag + "`");
        return line_.substr(tag.size() + 1);
    };
    if (!rd.next(line)) rd.fail("empty input");
    t.label = expect_tag(line, "group");
    if (!rd.next(line)) rd.fail("missing order");
    t.order = std::stoll(expect_tag(line, "order"));
    if (!rd.next(line)) rd.fail("missing exponent");
    t.exponent = std::stoll(expect_tag(line, "exponent"));
    if (!rd.next(line)) rd.fail("missing classes");
    t.k = std::stoi(expect_tag(line, "classes"));
    if (t.k <= 0) rd.fail("classes must be positive");

    auto read_ints = [&](const std::string& tag) {
        if (!rd.next(line)) rd.fail("missing `" + tag + "`");
        auto toks = split_ws(expect_tag(line, tag));
        if (static_cast<int>(toks.size()) != t.k) rd.fail(tag + " needs exactly k integers");
        std::vector<int64_t> out;
        for (auto& s : toks) out.push_back(std::stoll(s));
        return out;
    };
    t.sizes = read_ints("sizes");
    t.orders = read_ints("orders");
    for (int64_t v : read_ints("inverse")) t.inverse.push_back(static_cast<int>(v));

    const CycContext* ctx = cyc_context(t.exponent);
    // powermap lines then char lines
    int chars_seen = 0;
    t.values.assign(t.k, {});
    std::vector<bool> got(t.k, false);
    while (rd.next(line)) {
        if (line.rfind("powermap ", 0) == 0) {
            auto toks = split_ws(line.substr(9));
            if (static_cast<int>(toks.size()) != t.k + 1) rd.fail("powermap needs a prime and k images");
            int64_t p = std::stoll(toks[0]);
            std::vector<int> m;
            for (int i = 1; i <= t.k; ++i) {
                int v = std::stoi(toks[i]);
                if (v < 0 || v >= t.k) rd.fail("powermap image out of range");
                m.push_back(v);
            }
            t.powermaps.push_back({p, std::move(m)});
        } else if (line.rfind("char ", 0) == 0) {
            auto toks = split_ws(line.substr(5));
            if (static_cast<int>(toks.size()) != t.k + 1) rd.fail("char needs an index and k values");
            int idx = std::stoi(toks[0]);
            if (idx < 0 || idx >= t.k) rd.fail("char index out of range");
            if (got[idx]) rd.fail("duplicate char index");
            got[idx] = true;
            std::vector<Cyc> row;
            for (int i = 1; i <= t.k; ++i) row.push_back(parse_cyc(ctx, toks[i]));
            t.values[idx] = std::move(row);
            ++chars_seen;
        } else {
            rd.fail("unknown line");
        }
    }
    if (chars_seen != t.k) rd.fail("expected k char lines");
    validate_table(t);
    return t;
}

std::string write_table(const CharacterTable& t) {
    std::ostringstream os;
    os << "group " << t.label << "\n";
    os << "order " << t.order << "\n";
    os << "exponent " << t.exponent << "\n";
    os << "classes " << t.k << "\n";
    os << "sizes";
    for (auto v : t.sizes) os << " " << v;
    os << "\norders";
    for (auto v : t.orders) os << " " << v;
    os << "\ninverse";
    for (auto v : t.inverse) os << " " << v;
    os << "\n";
    for (auto& [p, m] : t.powermaps) {
        os << "powermap " << p;
        for (auto v : m) os << " " << v;
        os << "\n";
    }
    for (int i = 0; i < t.k; ++i) {
        os << "char " << i;
        for (int j = 0; j < t.k; ++j) os << " " << t.values[i][j].str();
        os << "\n";
    }
    return os.str();
}

}  // namespace wordmap::chartab
