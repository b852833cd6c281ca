#pragma once

// pancyc command line. Exit codes: 0 property holds / run clean,
// 1 property fails / counterexample found, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pancyc/pancyc.hpp"

namespace pancyc::cli {

inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

namespace detail {

struct GraphSource {
    std::string file;
    std::string family;

    void attach(CLI::App& cmd) {
        auto* f = cmd.add_option("--file", file, "graph in edge-list format");
        auto* s = cmd.add_option("--family", family, "family spec, e.g. petersen, f4r:3, kbb:3,3");
        f->excludes(s);
        s->excludes(f);
    }

    Graph load() const {
        if (file.empty() == family.empty()) throw std::invalid_argument("give exactly one of --file or --family");
        return file.empty() ? make_family(parse_family(family)) : read_graph_file(file);
    }
};

inline std::string join(const std::vector<int>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
    }
    return s;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fan-type heavy subgraph conditions, cycle spectra and theorem checks", "pancyc"};
    app.require_subcommand(1);

    detail::GraphSource check_src;
    std::string check_pattern;
    int check_fi = -1;
    bool check_free = false;
    auto* check = app.add_subcommand("check", "test P-free or P-f_i-heavy");
    check_src.attach(*check);
    check->add_option("--pattern", check_pattern, "pattern id")->required();
    check->add_option("--fi", check_fi, "heaviness index 0 or 1");
    check->add_flag("--free", check_free, "test P-freeness instead");

    detail::GraphSource spec_src;
    bool spec_certs = false;
    auto* spectrum = app.add_subcommand("spectrum", "cycle lengths present");
    spec_src.attach(*spectrum);
    spectrum->add_flag("--certificates", spec_certs, "print one cycle per length");

    std::string theorem;
    std::optional<int> exhaustive;
    std::optional<int> random_n;
    std::uint64_t samples = 1000;
    double prob = 0.5;
    std::uint64_t seed = 0;
    int jobs = 1;
    int verify_nmin = 3;
    bool verify_long = false;
    auto* verify = app.add_subcommand("verify", "classify a corpus against a theorem or lemma");
    verify->add_option("--theorem", theorem, "th1:<s> th2:<s> th3 th4:<s> th5..th9 th10:<s> lem1..lem4")->required();
    auto* ex_opt = verify->add_option("--exhaustive", exhaustive, "all labeled graphs up to this order");
    auto* rn_opt = verify->add_option("--random", random_n, "order of random 2-connected samples");
    ex_opt->excludes(rn_opt);
    rn_opt->excludes(ex_opt);
    verify->add_option("--samples", samples)->needs(rn_opt);
    verify->add_option("--p", prob, "edge probability")->needs(rn_opt);
    verify->add_option("--seed", seed)->needs(rn_opt);
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    verify->add_option("--nmin", verify_nmin, "smallest order for --exhaustive")->needs(ex_opt);
    verify->add_flag("--long", verify_long, "allow n = 8 enumeration");

    std::string hypothesis;
    std::string conclusion;
    int search_nmax = 0;
    int search_nmin = 3;
    bool search_long = false;
    auto* search = app.add_subcommand("search", "first labeled counterexample to an implication");
    search->add_option("--hypothesis", hypothesis, "e.g. 2conn,notcycle,free:claw,free:b")->required();
    search->add_option("--conclusion", conclusion, "hamiltonian | pancyclic")->required();
    search->add_option("--nmax", search_nmax)->required();
    search->add_option("--nmin", search_nmin);
    search->add_flag("--long", search_long, "allow n = 8 enumeration");

    std::string family_spec;
    std::string family_out;
    auto* family = app.add_subcommand("family", "write a named graph");
    family->add_option("spec", family_spec, "family spec")->required();
    family->add_option("-o", family_out, "output file (stdout if omitted)");

    detail::GraphSource explain_src;
    std::string explain_pattern;
    int explain_fi = 0;
    auto* explain = app.add_subcommand("explain", "witnesses for heavy-condition and pancyclicity failures");
    explain_src.attach(*explain);
    explain->add_option("--pattern", explain_pattern)->required();
    explain->add_option("--fi", explain_fi)->required();

    std::vector<const char*> argv{"pancyc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kHolds;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (check->parsed()) {
            const Graph g = check_src.load();
            const Pattern p = parse_pattern(check_pattern);
            if (check_free) {
                const auto copies = find_induced_copies(g, p);
                if (copies.empty()) {
                    out << "holds\n";
                    return kHolds;
                }
                out << "fails\n";
                for (const auto& c : copies) out << "copy=" << format_set(c.subset.vertices()) << "\n";
                return kFails;
            }
            if (check_fi != 0 && check_fi != 1) throw std::invalid_argument("--fi must be 0 or 1");
            const auto v = violations(g, p, check_fi);
            out << (v.empty() ? "holds\n" : "fails\n");
            for (const auto& w : v) out << format_violation(w) << "\n";
            return v.empty() ? kHolds : kFails;
        }
        if (spectrum->parsed()) {
            const auto s = cycle_spectrum(spec_src.load(), spec_certs);
            out << format_spectrum(s) << "\n";
            if (spec_certs) {
                for (int k : s.lengths()) out << k << ": " << detail::join(s.certificates[static_cast<std::size_t>(k)]) << "\n";
            }
            return kHolds;
        }
        if (verify->parsed()) {
            if (exhaustive.has_value() == random_n.has_value()) {
                throw std::invalid_argument("give exactly one of --exhaustive or --random");
            }
            const TheoremId id = parse_theorem_id(theorem);
            const Report r = exhaustive ? verify_exhaustive(id, ExhaustiveOptions{verify_nmin, *exhaustive, jobs, verify_long})
                                        : verify_random(id, RandomOptions{*random_n, samples, prob, seed, jobs});
            out << format_report(r);
            return r.clean() ? kHolds : kFails;
        }
        if (search->parsed()) {
            const auto found = search_counterexample(parse_hypothesis(hypothesis), parse_conclusion(conclusion),
                                                     search_nmin, search_nmax, search_long);
            if (!found) {
                out << "none\n";
                return kHolds;
            }
            out << "found\n" << serialize_graph(*found);
            return kFails;
        }
        if (family->parsed()) {
            const std::string text = serialize_graph(make_family(parse_family(family_spec)));
            if (family_out.empty()) {
                out << text;
            } else {
                std::ofstream f(family_out, std::ios::binary);
                if (!(f << text)) throw std::runtime_error("cannot write " + family_out);
            }
            return kHolds;
        }
        if (explain->parsed()) {
            const Graph g = explain_src.load();
            if (explain_fi != 0 && explain_fi != 1) throw std::invalid_argument("--fi must be 0 or 1");
            const auto v = violations(g, parse_pattern(explain_pattern), explain_fi);
            for (const auto& w : v) out << format_violation(w) << "\n";
            if (v.empty()) out << "holds\n";
            if (g.order() >= 3) {
                const auto s = cycle_spectrum(g);
                out << (s.pancyclic() ? std::string("pancyclic") : "missing=" + format_set(s.missing())) << "\n";
            }
            return v.empty() ? kHolds : kFails;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace pancyc::cli
