#include <atomic>
#include <chrono>
#include <map>
#include <regex>
#include <sstream>
#include <mutex>
#include <set>
#include <thread>

#include "cli/roster.hpp"
#include "construct/construct.hpp"
#include "primes/primes.hpp"

namespace wordmap::cli {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::runtime_error("config: unknown key `" + it.key() + "` in " + where);
}

// residues of p^a q^b mod e (complete by power-map periodicity)
std::vector<uint64_t> sweep_residues(int64_t p, int64_t q, int64_t e) {
    auto powers = [&](int64_t b) {
        std::set<uint64_t> out;
        uint64_t cur = 1 % static_cast<uint64_t>(e);
        while (out.insert(cur).second) cur = cur * static_cast<uint64_t>(b) % static_cast<uint64_t>(e);
        return out;
    };
    std::set<uint64_t> res;
    for (uint64_t a : powers(p))
        for (uint64_t b : powers(q)) res.insert(a * b % static_cast<uint64_t>(e));
    return {res.begin(), res.end()};
}

}  // namespace

primes::LieFamily parse_lie_family(const std::string& s) {
    using LF = primes::LieFamily;
    if (s == "SL") return LF::SL;
    if (s == "SU") return LF::SU;
    if (s == "Sp" || s == "Spin_odd" || s == "Sp/Spin_odd") return LF::SpOrSpinOdd;
    if (s == "Spin+") return LF::SpinPlus;
    if (s == "Spin-") return LF::SpinMinus;
    if (s == "2B2") return LF::Suzuki2B2;
    if (s == "2G2") return LF::Ree2G2;
    if (s == "2F4") return LF::Ree2F4;
    if (s == "G2") return LF::G2;
    if (s == "3D4") return LF::Steinberg3D4;
    if (s == "F4") return LF::F4;
    if (s == "E6") return LF::E6;
    if (s == "2E6") return LF::TwistedE6;
    if (s == "E7") return LF::E7;
    if (s == "E8") return LF::E8;
    throw std::runtime_error("unknown Lie family " + s);
}

namespace {

Json word_result_json(const words::WordCheckResult& r) {
    Json out;
    out["status"] = words::status_name(r.status);
    out["missed"] = r.missed;
    Json w = Json::array();
    for (auto& arr : r.witnesses)
        if (arr[0] >= 0) w.push_back({arr[0], arr[1], arr[2]});
    if (!w.empty()) out["witnesses"] = w;
    Json tw = Json::array();
    for (auto& arr : r.triple_witnesses)
        if (arr[0] >= 0) tw.push_back({arr[0], arr[1], arr[2], arr[3]});
    if (!tw.empty()) out["triple_witnesses"] = tw;
    out["method"] = r.method;
    return out;
}

std::mutex cache_mu;

VerificationReport run_target(const Json& t, const RosterConfig& cfg) {
    VerificationReport rep;
    rep.target = t;
    rep.seed = t.value("seed", cfg.seed);
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string check = t.at("check").get<std::string>();
        if (check == "xNyN" || check == "xNyNzN" || check == "k-2elements" || check == "P(N)" ||
            check == "Pu(N)") {
            reject_unknown(t, {"group", "check", "N", "sweep", "k", "seed", "expect"}, "target");
            catalog::GroupBundle b;
            {
                std::lock_guard<std::mutex> lock(cache_mu);
                b = catalog::build_bundle(t.at("group").get<std::string>(), rep.seed, cfg.cache_dir);
            }
            rep.cache_hit = b.cache_hit;
            if (check == "k-2elements") {
                auto r = words::check_k_2element_cover(b.E(), t.at("k").get<int>());
                rep.payload = word_result_json(r);
                rep.status = words::status_name(r.status);
            } else if (check == "P(N)" || check == "Pu(N)") {
                if (!b.spec || !b.group) throw std::runtime_error("P(N) needs an enumerable matrix group");
                auto r = words::check_condition_PN(*b.spec, b.G(), *b.gt, b.E(),
                                                   t.at("N").get<uint64_t>(), check == "Pu(N)");
                rep.payload = word_result_json(r);
                rep.status = words::status_name(r.status);
            } else if (t.contains("sweep")) {
                auto& sw = t.at("sweep");
                reject_unknown(sw, {"p", "q"}, "sweep");
                int64_t e = b.gt->table.exponent;
                auto residues = sweep_residues(sw.at("p").get<int64_t>(), sw.at("q").get<int64_t>(), e);
                Json residue_report = Json::array();
                bool all = true;
                for (uint64_t N : residues) {
                    auto r = check == "xNyN" ? words::check_xNyN(b.E(), N) : words::check_xNyNzN(b.E(), N);
                    if (r.status != words::Status::Surjective) all = false;
                    residue_report.push_back({{"N", N}, {"status", words::status_name(r.status)}});
                }
                rep.payload["residues"] = residue_report;
                rep.payload["residue_count"] = residues.size();
                rep.status = all ? "surjective" : "not-surjective";
            } else {
                uint64_t N = t.at("N").get<uint64_t>();
                auto r = check == "xNyN" ? words::check_xNyN(b.E(), N) : words::check_xNyNzN(b.E(), N);
                rep.payload = word_result_json(r);
                rep.status = words::status_name(r.status);
            }
        } else if (check == "construction-suite") {
            reject_unknown(t, {"check", "family", "n", "q", "eps", "seed", "expect"}, "target");
            std::string fam = t.at("family").get<std::string>();
            int n = t.at("n").get<int>();
            int64_t q = t.at("q").get<int64_t>();
            int count = 0;
            if (fam == "GL" || fam == "GU") {
                int eps = fam == "GL" ? +1 : -1;
                for (auto& d : construct::glu_deltas(q, eps)) {
                    auto c = construct::construct_glu_2element(n, q, eps, d);
                    construct::verify(c);
                    ++count;
                }
            } else if (fam == "Sp") {
                auto c = construct::construct_sp_2element(n, q);
                construct::verify(c);
                ++count;
            } else if (fam == "SO") {
                std::vector<int> epss = n % 2 ? std::vector<int>{0} : std::vector<int>{+1, -1};
                for (int eps : epss)
                    for (int delta : {+1, -1}) {
                        auto c = construct::construct_so_2element(n, q, eps, delta);
                        construct::verify(c);
                        ++count;
                    }
            } else {
                throw std::runtime_error("construction-suite: family must be GL/GU/Sp/SO");
            }
            rep.payload["verified"] = count;
            rep.status = "verified";
        } else if (check == "bound-sample") {
            reject_unknown(t, {"group", "check", "lemma", "samples", "seed", "expect"}, "target");
            auto spec_name = t.at("group").get<std::string>();
            catalog::GroupBundle b;  // only the spec is needed; avoid enumeration
            auto specb = catalog::build_bundle;  // not used; build spec directly
            (void)specb;
            // parse the designator as a classical group without enumerating
            // reuse catalog by regex through build_group: accept GL7(2) etc.
            std::smatch m;
            std::regex re(R"((GL|GU|SL|SU|Sp|GO|SO|Omega)([+-]?)(\d+)\((\d+)\))");
            if (!std::regex_match(spec_name, m, re)) throw std::runtime_error("bound-sample: bad group");
            classical::Family family = classical::Family::GL;
            std::string f = m[1];
            if (f == "GU") family = classical::Family::GU;
            else if (f == "SL") family = classical::Family::SL;
            else if (f == "SU") family = classical::Family::SU;
            else if (f == "Sp") family = classical::Family::Sp;
            else if (f == "GO") family = classical::Family::GO;
            else if (f == "SO") family = classical::Family::SO;
            else if (f == "Omega") family = classical::Family::Omega;
            int eps = m[2] == "+" ? 1 : (m[2] == "-" ? -1 : 0);
            auto spec = classical::build_group(family, std::stoi(m[3]), std::stoll(m[4]), eps);
            auto r = breakdec::sample_bound_check(spec, t.at("lemma").get<std::string>(),
                                                  t.at("samples").get<int>(), rep.seed);
            rep.payload["samples"] = r.samples;
            rep.payload["unbreakable_hits"] = r.unbreakable_hits;
            rep.payload["skipped"] = r.skipped;
            rep.payload["violations"] = r.violations;
            rep.status = r.ok() ? "no-violation" : "violation";
        } else if (check == "prime-table") {
            reject_unknown(t, {"check", "family", "n", "q", "seed", "expect"}, "target");
            auto fam = parse_lie_family(t.at("family").get<std::string>());
            auto s = primes::special_primes(fam, t.value("n", 0), t.at("q").get<int64_t>());
            Json primes_json = Json::array();
            for (auto& p : s.primes) primes_json.push_back(p.str());
            rep.payload["primes"] = primes_json;
            rep.payload["source"] = s.source;
            rep.status = s.covered ? "covered" : "not-covered";
        } else if (check == "lemma-pair-scan") {
            reject_unknown(t, {"check", "q_max", "n_max", "seed", "expect"}, "target");
            std::vector<std::string> notes;
            auto v = primes::scan_lemma_pair(t.at("q_max").get<int64_t>(), t.at("n_max").get<int64_t>(), &notes);
            Json vj = Json::array();
            for (auto& viol : v)
                vj.push_back({{"q", viol.q}, {"n", viol.n}, {"m", viol.m}, {"alpha", viol.alpha},
                              {"beta", viol.beta}});
            rep.payload["violations"] = vj;
            rep.payload["skipped_notes"] = notes;
            rep.status = v.empty() ? "no-violation" : "violation";
        } else {
            throw std::runtime_error("unknown check kind " + check);
        }
    } catch (const std::exception& e) {
        rep.error = true;
        rep.status = "error";
        rep.payload["error"] = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (rep.target.contains("expect"))
        rep.matches_expectation = rep.status == rep.target.at("expect").get<std::string>();
    else
        rep.matches_expectation = !rep.error;
    return rep;
}

}  // namespace

RosterConfig RosterConfig::parse(const Json& j) {
    reject_unknown(j, {"seed", "threads", "cache_dir", "targets"}, "config");
    RosterConfig cfg;
    cfg.seed = j.value("seed", 1ull);
    cfg.threads = j.value("threads", 0);
    cfg.cache_dir = j.value("cache_dir", std::string());
    if (!j.contains("targets") || !j.at("targets").is_array())
        throw std::runtime_error("config: `targets` array is required");
    for (auto& t : j.at("targets")) cfg.targets.push_back(t);
    return cfg;
}

std::vector<VerificationReport> run_roster(const RosterConfig& cfg) {
    std::vector<VerificationReport> out(cfg.targets.size());
    int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(cfg.targets.size())));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= cfg.targets.size()) break;
            out[i] = run_target(cfg.targets[i], cfg);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

Json report_json(const std::vector<VerificationReport>& reports, const RosterConfig& cfg,
                 bool include_timing) {
    Json out;
    out["toolkit_version"] = kToolkitVersion;
    out["seed"] = cfg.seed;
    Json arr = Json::array();
    for (auto& r : reports) {
        Json jr;
        jr["target"] = r.target;
        jr["status"] = r.status;
        jr["seed"] = r.seed;
        jr["cache_hit"] = r.cache_hit;
        jr["payload"] = r.payload;
        jr["matches_expectation"] = r.matches_expectation;
        if (include_timing) jr["wall_ms"] = r.wall_ms;
        arr.push_back(jr);
    }
    out["reports"] = arr;
    return out;
}

std::string report_markdown(const std::vector<VerificationReport>& reports) {
    std::map<std::string, std::pair<int, int>> per_kind;  // kind -> (pass, total)
    std::ostringstream os;
    os << "| # | check | group | status | ok |\n|---|-------|-------|--------|----|\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::string kind = r.target.value("check", "?");
        std::string group = r.target.value("group", "-");
        per_kind[kind].second++;
        if (r.matches_expectation) per_kind[kind].first++;
        os << "| " << i << " | " << kind << " | " << group << " | " << r.status << " | "
           << (r.matches_expectation ? "yes" : "NO") << " |\n";
    }
    os << "\n";
    for (auto& [kind, pt] : per_kind)
        os << "- " << kind << ": " << pt.first << "/" << pt.second << " targets as expected\n";
    return os.str();
}

bool all_expectations_met(const std::vector<VerificationReport>& reports) {
    for (auto& r : reports)
        if (!r.matches_expectation) return false;
    return true;
}

}  // namespace wordmap::cli
