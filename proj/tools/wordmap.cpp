// wordmap: exact verification toolkit for power-word surjectivity and
// 2-element product coverage in finite groups.
//
// Subcommands: enumerate, chartab, verify, construct, primes, report.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cli/roster.hpp"
#include "construct/construct.hpp"
#include "primes/primes.hpp"

using namespace wordmap;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wordmap: exact word-map and 2-element coverage verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, cache_dir, format = "json", group, out_path;
    uint64_t seed = 1;
    int threads = 0;
    app.add_option("--cache-dir", cache_dir, "character table cache directory");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--threads", threads, "parallel targets (0 = hardware)");
    app.add_option("--format", format, "report format: json | markdown");

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate a group and print class data");
    enum_cmd->add_option("group", group, "designator, e.g. A5 or Sp4(3)")->required();

    auto* chartab_cmd = app.add_subcommand("chartab", "compute and print a character table");
    chartab_cmd->add_option("group", group, "designator")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification roster");
    verify_cmd->add_option("--config", config_path, "roster config (json)")->required();

    auto* construct_cmd = app.add_subcommand("construct", "build a regular 2-element with certificate");
    std::string fam = "GL";
    int cn = 2, ceps = 1, cdelta = 1;
    int64_t cq = 5;
    std::string delta_lit;
    construct_cmd->add_option("--family", fam, "GL | GU | Sp | SO")->required();
    construct_cmd->add_option("--n", cn, "dimension parameter")->required();
    construct_cmd->add_option("--q", cq, "field size")->required();
    construct_cmd->add_option("--eps", ceps, "+1 / -1 for SO");
    construct_cmd->add_option("--delta", cdelta, "+1 / -1 spinor target (SO)");
    construct_cmd->add_option("--delta-element", delta_lit, "determinant target as a field literal (GL/GU)");

    auto* primes_cmd = app.add_subcommand("primes", "special prime sets and ell* values");
    std::string pfam;
    int pn = 0;
    int64_t pq = 2, lstar_n = 0;
    int lstar_eps = 1;
    int64_t scan_q = 0, scan_n = 0;
    primes_cmd->add_option("--family", pfam, "table family (SL, SU, Sp, Spin+, Spin-, G2, ...)");
    primes_cmd->add_option("--n", pn, "rank parameter");
    primes_cmd->add_option("--q", pq, "field size");
    primes_cmd->add_option("--lstar-n", lstar_n, "print ell*(q^n - eps)");
    primes_cmd->add_option("--lstar-eps", lstar_eps, "+1 / -1");
    primes_cmd->add_option("--scan-qmax", scan_q, "run the pairwise-gcd scan up to q_max");
    primes_cmd->add_option("--scan-nmax", scan_n, "scan n_max");

    auto* report_cmd = app.add_subcommand("report", "re-emit a report file");
    report_cmd->add_option("--input", config_path, "report json")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enum_cmd) {
            auto b = catalog::build_bundle(group, seed, cache_dir);
            std::cout << "group " << b.label << "\norder " << b.G().order() << "\nexponent "
                      << b.G().exponent() << "\nclasses " << b.G().num_classes() << "\n";
            for (int c = 0; c < b.G().num_classes(); ++c)
                std::cout << "class " << c << ": size " << b.G().class_size(c) << ", element order "
                          << b.G().class_element_order(c) << "\n";
            return 0;
        }
        if (*chartab_cmd) {
            auto b = catalog::build_bundle(group, seed, cache_dir);
            std::cout << chartab::write_table(b.gt->table);
            return 0;
        }
        if (*verify_cmd) {
            auto j = cli::Json::parse(read_file(config_path));
            auto cfg = cli::RosterConfig::parse(j);
            if (seed != 1) cfg.seed = seed;
            if (threads) cfg.threads = threads;
            if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
            auto reports = cli::run_roster(cfg);
            if (format == "markdown")
                std::cout << cli::report_markdown(reports);
            else
                std::cout << cli::report_json(reports, cfg).dump(2) << "\n";
            return cli::all_expectations_met(reports) ? 0 : 1;
        }
        if (*construct_cmd) {
            construct::Construction c;
            if (fam == "GL" || fam == "GU") {
                int eps = fam == "GL" ? +1 : -1;
                ff::FieldElement delta;
                if (delta_lit.empty())
                    delta = construct::glu_deltas(cq, eps)[0];
                else
                    delta = ff::parse_element(delta_lit);
                c = construct::construct_glu_2element(cn, cq, eps, delta);
            } else if (fam == "Sp") {
                c = construct::construct_sp_2element(cn, cq);
            } else if (fam == "SO") {
                c = construct::construct_so_2element(cn, cq, ceps, cdelta);
            } else {
                throw std::runtime_error("construct: family must be GL/GU/Sp/SO");
            }
            construct::verify(c);
            std::cout << "group " << c.spec.name() << "\n";
            std::cout << "element " << c.element.str() << "\n";
            std::cout << "order " << c.cert.order << "\n";
            if (fam == "GL" || fam == "GU") std::cout << "det " << c.cert.det.str() << "\n";
            if (fam == "SO") std::cout << "spinor " << (c.cert.spinor > 0 ? "+1" : "-1") << "\n";
            std::cout << "regular-semisimple yes\nassembly " << c.description << "\n";
            return 0;
        }
        if (*primes_cmd) {
            if (scan_q > 0) {
                std::vector<std::string> notes;
                auto v = primes::scan_lemma_pair(scan_q, scan_n, &notes);
                std::cout << "violations " << v.size() << "\n";
                for (auto& note : notes) std::cout << "note: " << note << "\n";
                return v.empty() ? 0 : 1;
            }
            if (lstar_n > 0) {
                std::cout << "l*(" << pq << "^" << lstar_n << (lstar_eps > 0 ? " - 1" : " + 1")
                          << ") = " << primes::ppd_star(pq, lstar_n, lstar_eps, true).str() << "\n";
                return 0;
            }
            auto s = primes::special_primes(cli::parse_lie_family(pfam), pn, pq);
            if (!s.covered) {
                std::cout << "not covered: " << s.source << "\n";
                return 1;
            }
            std::cout << "R(G) = {";
            for (size_t i = 0; i < s.primes.size(); ++i)
                std::cout << (i ? ", " : "") << s.primes[i].str();
            std::cout << "}  (" << s.source << ")\n";
            return 0;
        }
        if (*report_cmd) {
            auto j = cli::Json::parse(read_file(config_path));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
