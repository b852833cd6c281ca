#pragma once

// Executable forms of the pancyclicity / Hamiltonicity results and the four
// cycle lemmas, plus exhaustive, random and counterexample-search drivers.
//
// A verdict is COUNTEREXAMPLE only when the hypothesis holds, the conclusion
// fails, and the graph is not isomorphic to a listed exception.

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pancyc/cycles.hpp"
#include "pancyc/enumerate.hpp"
#include "pancyc/families.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/graph_io.hpp"
#include "pancyc/heavy.hpp"
#include "pancyc/isomorphism.hpp"
#include "pancyc/pattern.hpp"
#include "pancyc/random.hpp"

namespace pancyc {

// ---------------------------------------------------------------------------
// Hypotheses and conclusions

enum class Heaviness { Free, F0, F1 };

struct PatternCondition {
    Pattern pattern;
    Heaviness heaviness;
};

struct Hypothesis {
    bool two_connected = true;
    bool not_cycle = false;
    /// Every pair at distance 2 in G has max degree >= n/2.
    bool fan = false;
    std::vector<PatternCondition> patterns;
};

enum class Conclusion { Hamiltonian, Pancyclic };

inline bool holds(const PatternCondition& c, const Graph& g) {
    switch (c.heaviness) {
        case Heaviness::Free: return is_R_free(g, c.pattern);
        case Heaviness::F0: return is_R_fi_heavy(g, c.pattern, 0);
        case Heaviness::F1: return is_R_fi_heavy(g, c.pattern, 1);
    }
    return false;
}

inline bool holds(const Hypothesis& h, const Graph& g) {
    if (h.two_connected && !is_2_connected(g)) return false;
    if (h.not_cycle && is_cycle_graph(g)) return false;
    if (h.fan && !fan_condition(g)) return false;
    return std::all_of(h.patterns.begin(), h.patterns.end(), [&](const auto& c) { return holds(c, g); });
}

/// Comma-separated terms: "2conn", "notcycle", "fan", "free:<p>", "f0:<p>"
/// (or "f:<p>"), "f1:<p>". No term requires 2-connectivity unless "2conn" is given.
inline Hypothesis parse_hypothesis(std::string_view expr) {
    Hypothesis h;
    h.two_connected = false;
    std::size_t pos = 0;
    while (pos <= expr.size()) {
        auto end = expr.find(',', pos);
        if (end == std::string_view::npos) end = expr.size();
        const auto term = expr.substr(pos, end - pos);
        pos = end + 1;
        if (term.empty()) throw std::invalid_argument("empty hypothesis term");
        if (term == "2conn") {
            h.two_connected = true;
        } else if (term == "notcycle") {
            h.not_cycle = true;
        } else if (term == "fan") {
            h.fan = true;
        } else {
            const auto colon = term.find(':');
            if (colon == std::string_view::npos) {
                throw std::invalid_argument("unknown hypothesis term \"" + std::string(term) + "\"");
            }
            const auto kind = term.substr(0, colon);
            Heaviness hv{};
            if (kind == "free") {
                hv = Heaviness::Free;
            } else if (kind == "f0" || kind == "f") {
                hv = Heaviness::F0;
            } else if (kind == "f1") {
                hv = Heaviness::F1;
            } else {
                throw std::invalid_argument("unknown hypothesis term \"" + std::string(term) + "\"");
            }
            h.patterns.push_back({parse_pattern(term.substr(colon + 1)), hv});
        }
    }
    return h;
}

inline Conclusion parse_conclusion(std::string_view s) {
    if (s == "hamiltonian") return Conclusion::Hamiltonian;
    if (s == "pancyclic") return Conclusion::Pancyclic;
    throw std::invalid_argument("conclusion must be hamiltonian or pancyclic");
}

// ---------------------------------------------------------------------------
// Theorem and lemma identifiers

enum class Claim { TH1, TH2, TH3, TH4, TH5, TH6, TH7, TH8, TH9, TH10, LEM1, LEM2, LEM3, LEM4 };

struct TheoremId {
    Claim claim = Claim::TH3;
    /// The paired pattern S for TH1, TH2, TH4, TH10.
    std::optional<Pattern> s;

    bool is_lemma() const { return claim >= Claim::LEM1; }
};

namespace detail {

inline bool takes_pattern(Claim c) {
    return c == Claim::TH1 || c == Claim::TH2 || c == Claim::TH4 || c == Claim::TH10;
}

inline std::vector<std::string> allowed_patterns(Claim c) {
    switch (c) {
        case Claim::TH1: return {"p4", "p5", "p6", "c3", "z1", "z2", "b", "n", "w"};
        case Claim::TH2: return {"p4", "p5", "z1", "z2"};
        case Claim::TH4: return {"p4", "p5", "p6", "z1", "z2", "b", "n", "w"};
        case Claim::TH10: return {"p4", "z1", "z2"};
        default: return {};
    }
}

inline constexpr std::array<std::string_view, 14> kClaimNames = {
    "th1", "th2", "th3", "th4", "th5", "th6", "th7", "th8", "th9", "th10", "lem1", "lem2", "lem3", "lem4"};

}  // namespace detail

inline std::string to_string(const TheoremId& id) {
    std::string out(detail::kClaimNames[static_cast<std::size_t>(id.claim)]);
    if (id.s) out += ":" + id.s->id();
    return out;
}

/// "th6", "th1:p4", "th10:z2", "lem3", ...
inline TheoremId parse_theorem_id(std::string_view text) {
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    const auto it = std::find(detail::kClaimNames.begin(), detail::kClaimNames.end(), head);
    if (it == detail::kClaimNames.end()) throw std::invalid_argument("unknown theorem id \"" + std::string(text) + "\"");
    TheoremId id{static_cast<Claim>(it - detail::kClaimNames.begin()), std::nullopt};
    const bool has_arg = colon != std::string_view::npos;
    if (detail::takes_pattern(id.claim) != has_arg) {
        throw std::invalid_argument("theorem id \"" + std::string(text) + "\": pattern argument " +
                                    (has_arg ? "not accepted" : "required"));
    }
    if (has_arg) {
        Pattern p = parse_pattern(text.substr(colon + 1));
        const auto allowed = detail::allowed_patterns(id.claim);
        if (std::find(allowed.begin(), allowed.end(), p.id()) == allowed.end()) {
            throw std::invalid_argument("pattern " + p.id() + " is not listed for " + std::string(head));
        }
        id.s = std::move(p);
    }
    return id;
}

/// The premise of a theorem (not a lemma) as a Hypothesis.
inline Hypothesis hypothesis_of(const TheoremId& id) {
    const Pattern claw = make_pattern(PatternKind::Claw);
    Hypothesis h;
    auto pair = [&](const Pattern& other, Heaviness hv) { h.patterns = {{claw, hv}, {other, hv}}; };
    switch (id.claim) {
        case Claim::TH1: pair(*id.s, Heaviness::Free); break;
        case Claim::TH2: pair(*id.s, Heaviness::Free); h.not_cycle = true; break;
        case Claim::TH3: h.fan = true; break;
        case Claim::TH4: pair(*id.s, Heaviness::F0); break;
        case Claim::TH5: h.patterns = {{make_pattern(PatternKind::Path, 3), Heaviness::F0}}; break;
        case Claim::TH6: pair(make_pattern(PatternKind::Z, 2), Heaviness::F1); h.not_cycle = true; break;
        case Claim::TH7: pair(make_pattern(PatternKind::Path, 4), Heaviness::F1); h.not_cycle = true; break;
        case Claim::TH8: pair(make_pattern(PatternKind::Z, 1), Heaviness::F0); break;
        case Claim::TH9: pair(make_pattern(PatternKind::Z, 1), Heaviness::F1); h.not_cycle = true; break;
        case Claim::TH10: pair(*id.s, Heaviness::F1); h.not_cycle = true; break;
        default: throw std::invalid_argument("lemmas have no pattern hypothesis");
    }
    return h;
}

inline Conclusion conclusion_of(const TheoremId& id) {
    switch (id.claim) {
        case Claim::TH1:
        case Claim::TH3:
        case Claim::TH4: return Conclusion::Hamiltonian;
        default: return Conclusion::Pancyclic;
    }
}

inline std::optional<ExceptionList> exceptions_of(const TheoremId& id) {
    if (id.claim == Claim::TH5) return ExceptionList::TH5;
    if (id.claim == Claim::TH8) return ExceptionList::TH8;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class Classification { Vacuous, Consistent, Exception, Counterexample };

inline constexpr std::array<std::string_view, 4> kClassificationNames = {"VACUOUS", "CONSISTENT", "EXCEPTION",
                                                                        "COUNTEREXAMPLE"};

struct Verdict {
    TheoremId theorem;
    Graph graph;
    bool hypothesis_met = false;
    /// Evaluated only when the hypothesis holds.
    std::optional<bool> conclusion_met;
    std::optional<FamilyId> exception_matched;
    Classification classification = Classification::Vacuous;
    /// Missing cycle lengths, when a pancyclicity conclusion was evaluated.
    std::vector<int> missing;
    /// How a lemma hypothesis was triggered, e.g. "x=2 y=3 C=(0 1 2 3 4)".
    std::string trigger;
};

namespace detail {

inline bool evaluate_conclusion(Conclusion c, const Graph& g, std::vector<int>& missing) {
    if (c == Conclusion::Hamiltonian) return is_hamiltonian(g);
    missing = cycle_spectrum(g).missing();
    return missing.empty();
}

inline std::string format_cycle(const CycleCertificate& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
    }
    return s + ")";
}

inline void classify(Verdict& v) {
    if (!v.hypothesis_met) {
        v.classification = Classification::Vacuous;
    } else if (*v.conclusion_met) {
        v.classification = Classification::Consistent;
    } else if (v.exception_matched) {
        v.classification = Classification::Exception;
    } else {
        v.classification = Classification::Counterexample;
    }
}

}  // namespace detail

/// Hypothesis (G, C, x, y) checks for the cycle lemmas.
///   LEM1: n >= 4, some x with 2d(x) >= n has an (n-1)-cycle in G - x.
///   LEM2: Hamilton cycle C, d_C(x,y) = 1, d(x)+d(y) >= n+1.
///   LEM3: Hamilton cycle C, d_C(x,y) = 1, d(x)+d(y) >= n.
///   LEM4: Hamilton cycle C, d_C(x,y) = 2, d(x)+d(y) >= n+1.
/// Conclusion: pancyclic; LEM3 also accepts bipartite or missing exactly {n-1}.
/// LEM2-4 use the single deterministic Hamilton cycle from find_hamilton_cycle.
inline Verdict check_lemma(const TheoremId& id, const Graph& g) {
    if (!id.is_lemma()) throw std::invalid_argument("check_lemma expects lem1..lem4");
    Verdict v{id, g, false, std::nullopt, std::nullopt, Classification::Vacuous, {}, {}};
    const int n = g.order();
    if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return v;

    if (id.claim == Claim::LEM1) {
        if (n < 4) return v;
        for (int x = 0; x < n && !v.hypothesis_met; ++x) {
            if (2 * g.degree(x) < n) continue;
            if (is_hamiltonian(remove_vertices(g, VertexSet{bit(x)}))) {
                v.hypothesis_met = true;
                v.trigger = "x=" + std::to_string(x);
            }
        }
    } else {
        const auto cycle = find_hamilton_cycle(g);
        if (!cycle) return v;
        const int step = id.claim == Claim::LEM4 ? 2 : 1;
        const int need = id.claim == Claim::LEM3 ? n : n + 1;
        if (2 * step <= n) {
            for (int i = 0; i < n && !v.hypothesis_met; ++i) {
                const int x = (*cycle)[static_cast<std::size_t>(i)];
                const int y = (*cycle)[static_cast<std::size_t>((i + step) % n)];
                if (g.degree(x) + g.degree(y) >= need) {
                    v.hypothesis_met = true;
                    v.trigger = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " C=" +
                                detail::format_cycle(*cycle);
                }
            }
        }
    }
    if (!v.hypothesis_met) return v;

    bool ok = detail::evaluate_conclusion(Conclusion::Pancyclic, g, v.missing);
    if (!ok && id.claim == Claim::LEM3) {
        ok = is_bipartite(g) || v.missing == std::vector<int>{n - 1};
    }
    v.conclusion_met = ok;
    detail::classify(v);
    return v;
}

inline Verdict check_theorem(const TheoremId& id, const Graph& g) {
    if (id.is_lemma()) return check_lemma(id, g);
    Verdict v{id, g, false, std::nullopt, std::nullopt, Classification::Vacuous, {}, {}};
    v.hypothesis_met = holds(hypothesis_of(id), g);
    if (v.hypothesis_met) {
        v.conclusion_met = detail::evaluate_conclusion(conclusion_of(id), g, v.missing);
        if (!*v.conclusion_met) {
            if (auto list = exceptions_of(id)) {
                for (const auto& e : exception_catalog(*list, g.order())) {
                    if (are_isomorphic(g, e.graph)) {
                        v.exception_matched = e.family;
                        break;
                    }
                }
            }
        }
    }
    detail::classify(v);
    return v;
}

// ---------------------------------------------------------------------------
// Reports

struct ExceptionTally {
    std::uint64_t count = 0;
    std::vector<int> missing;
};

struct Report {
    std::string theorem;
    std::string corpus;
    std::optional<std::uint64_t> seed;
    std::array<std::uint64_t, 4> counts{};
    std::map<std::string, ExceptionTally> exceptions;
    /// Serialized graphs, sorted.
    std::vector<std::string> counterexamples;
    std::string note;

    std::uint64_t count(Classification c) const { return counts[static_cast<std::size_t>(c)]; }
    std::uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    bool clean() const { return count(Classification::Counterexample) == 0; }

    void add(const Verdict& v) {
        ++counts[static_cast<std::size_t>(v.classification)];
        if (v.classification == Classification::Exception) {
            auto& t = exceptions[to_string(*v.exception_matched)];
            ++t.count;
            t.missing = v.missing;
        } else if (v.classification == Classification::Counterexample) {
            counterexamples.push_back(serialize_graph(v.graph));
        }
    }

    void merge(const Report& other) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
        for (const auto& [k, t] : other.exceptions) {
            auto& mine = exceptions[k];
            mine.count += t.count;
            mine.missing = t.missing;
        }
        counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
    }
};

/// Header, one count line per classification, exception tallies, an optional
/// note, then each counterexample as an edge-list block preceded by "---".
inline std::string format_report(const Report& r) {
    std::string out = "theorem=" + r.theorem + " corpus=" + r.corpus +
                      " seed=" + (r.seed ? std::to_string(*r.seed) : std::string("none")) + "\n";
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
        out += std::string(kClassificationNames[i]) + "=" + std::to_string(r.counts[i]) + "\n";
    }
    for (const auto& [family, t] : r.exceptions) {
        out += "exception " + family + " count=" + std::to_string(t.count) + " missing=" + format_set(t.missing) + "\n";
    }
    if (!r.note.empty()) out += "note=" + r.note + "\n";
    for (const auto& g : r.counterexamples) out += "---\n" + g;
    return out;
}

namespace detail {

inline std::string lemma_note(const TheoremId& id) {
    switch (id.claim) {
        case Claim::LEM1: return "(n-1)-cycles quantified over all cycles avoiding each heavy x";
        case Claim::LEM2:
        case Claim::LEM3:
        case Claim::LEM4: return "hypothesis triggered on one deterministic Hamilton cycle per graph";
        default: return {};
    }
}

// Runs work(i, report) for i in [0, tasks) on `jobs` threads; per-task reports
// are merged in task order so the result does not depend on scheduling.
template <typename Work>
Report run_tasks(std::uint64_t tasks, int jobs, Work&& work) {
    std::vector<Report> parts(static_cast<std::size_t>(tasks));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= tasks) return;
            try {
                work(i, parts[static_cast<std::size_t>(i)]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks;
                return;
            }
        }
    };
    const int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    Report out;
    for (const auto& p : parts) out.merge(p);
    std::sort(out.counterexamples.begin(), out.counterexamples.end());
    return out;
}

inline constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;

}  // namespace detail

struct ExhaustiveOptions {
    int n_min = 3;
    int n_max = 7;
    int jobs = 1;
    bool allow_long = false;
};

/// Every labeled graph with n_min <= n <= n_max passing the min-degree-2 +
/// connected prefilter, classified against id.
inline Report verify_exhaustive(const TheoremId& id, const ExhaustiveOptions& opt) {
    if (opt.n_min < 3 || opt.n_min > opt.n_max) throw std::out_of_range("verify_exhaustive: bad order range");
    std::vector<LabeledGraphs> orders;
    for (int n = opt.n_min; n <= opt.n_max; ++n) orders.emplace_back(n, opt.allow_long);
    // Task t covers one chunk of one order.
    std::vector<std::pair<std::size_t, std::uint64_t>> tasks;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        for (std::uint64_t lo = 0; lo < orders[k].size(); lo += detail::kChunk) tasks.emplace_back(k, lo);
    }
    Report r = detail::run_tasks(tasks.size(), opt.jobs, [&](std::uint64_t t, Report& part) {
        const auto [k, lo] = tasks[static_cast<std::size_t>(t)];
        const auto& all = orders[k];
        all.for_each(Prefilter::MinDegree2Connected, lo, std::min(all.size(), lo + detail::kChunk),
                     [&](std::uint64_t, const Graph& g) { part.add(check_theorem(id, g)); });
    });
    r.theorem = to_string(id);
    r.corpus = "exhaustive:n=" + std::to_string(opt.n_min) + ".." + std::to_string(opt.n_max) +
               ",prefilter=mindeg2+connected";
    r.note = detail::lemma_note(id);
    return r;
}

inline Report verify_exhaustive(const TheoremId& id, int n_max) {
    return verify_exhaustive(id, ExhaustiveOptions{3, n_max, 1, false});
}

struct RandomOptions {
    int n = 10;
    std::uint64_t samples = 1000;
    double p = 0.5;
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// Sample i is random_2connected(n, p, derive_seed(seed, i)).
inline Report verify_random(const TheoremId& id, const RandomOptions& opt) {
    const bool hamiltonian_only = !id.is_lemma() && conclusion_of(id) == Conclusion::Hamiltonian;
    const int limit = hamiltonian_only ? 20 : 14;
    if (opt.n < 3 || opt.n > limit) {
        throw std::out_of_range("verify_random: n must be in 3.." + std::to_string(limit) + " for " + to_string(id));
    }
    const std::uint64_t tasks = (opt.samples + 255) / 256;
    Report r = detail::run_tasks(tasks, opt.jobs, [&](std::uint64_t t, Report& part) {
        const std::uint64_t end = std::min(opt.samples, (t + 1) * 256);
        for (std::uint64_t i = t * 256; i < end; ++i) {
            part.add(check_theorem(id, random_2connected(opt.n, opt.p, derive_seed(opt.seed, i))));
        }
    });
    r.theorem = to_string(id);
    char p_text[32];
    auto [pend, ec] = std::to_chars(p_text, p_text + sizeof p_text, opt.p);
    (void)ec;
    r.corpus = "random:n=" + std::to_string(opt.n) + ",samples=" + std::to_string(opt.samples) +
               ",p=" + std::string(p_text, pend);
    r.seed = opt.seed;
    r.note = detail::lemma_note(id);
    return r;
}

/// First labeled graph (ascending n, then ascending edge mask) meeting the
/// hypothesis and failing the conclusion.
inline std::optional<Graph> search_counterexample(const Hypothesis& h, Conclusion c, int n_min, int n_max,
                                                  bool allow_long = false) {
    if (n_min < 3 || n_min > n_max) throw std::out_of_range("search_counterexample: bad order range");
    const Prefilter filter = h.two_connected ? Prefilter::TwoConnected : Prefilter::None;
    for (int n = n_min; n <= n_max; ++n) {
        LabeledGraphs all(n, allow_long);
        for (std::uint64_t m = 0; m < all.size(); ++m) {
            const Graph g = all.at(m);
            if (!LabeledGraphs::passes(g, filter) || !holds(h, g)) continue;
            std::vector<int> missing;
            if (!detail::evaluate_conclusion(c, g, missing)) return g;
        }
    }
    return std::nullopt;
}

}  // namespace pancyc
