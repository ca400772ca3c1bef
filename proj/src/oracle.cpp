#include "sigwedge/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sigwedge/algebra.hpp"
#include "sigwedge/combinat.hpp"
#include "sigwedge/covers.hpp"
#include "sigwedge/families.hpp"

namespace sigwedge {

bool balanced_characterization_predicate(const SignedGraph& g, std::size_t k) {
    const std::size_t n = g.order();
    if (n < 2) throw std::invalid_argument("characterization needs n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("characterization needs a connected graph");
    if (k < 1 || k + 1 > n) throw std::out_of_range("characterization needs 1 <= k <= n-1");

    if (k == 1) return is_balanced(g).balanced;
    if (k == n - 1) return is_antibalanced(g).balanced;
    if (is_path_graph(g)) return true;
    if (is_cycle_graph(g)) {
        const bool balanced = is_balanced(g).balanced;
        return (balanced && k % 2 == 1) || (!balanced && k % 2 == 0);
    }
    return false;
}

namespace {

using Clock = std::chrono::steady_clock;

/// Accumulates instances and failures for one claim.
class Tally {
  public:
    Tally(std::string claim, std::string description, std::size_t cap)
        : start_(Clock::now()), cap_(cap) {
        report_.claim = std::move(claim);
        report_.description = std::move(description);
    }

    void check(bool ok, const SignedGraph& g, std::size_t k, bool expected, bool got, std::string note = {}) {
        ++report_.instances;
        if (ok) return;
        ++report_.failures;
        if (report_.counterexamples.size() < cap_) {
            report_.counterexamples.push_back({g, k, expected, got, std::move(note)});
        }
    }
    /// Compares a computed truth value against the claimed one.
    void expect(bool expected, bool got, const SignedGraph& g, std::size_t k, std::string note = {}) {
        check(expected == got, g, k, expected, got, std::move(note));
    }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    void merge(const VerificationReport& part) {
        report_.instances += part.instances;
        report_.failures += part.failures;
        for (const auto& c : part.counterexamples) {
            if (report_.counterexamples.size() < cap_) report_.counterexamples.push_back(c);
        }
    }

    VerificationReport finish() {
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return std::move(report_);
    }

  private:
    VerificationReport report_;
    Clock::time_point start_;
    std::size_t cap_;
};

bool wedge_balanced(const SignedGraph& g, std::size_t k, WedgeSignRule rule) {
    return is_balanced(wedge_power(g, k, rule).graph).balanced;
}

/// Independent 2-coloring test, not routed through the balance code.
bool is_bipartite(const SignedGraph& g) {
    std::vector<int> color(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (const auto& nb : g.neighbors(x)) {
                if (color[nb.vertex] == -1) {
                    color[nb.vertex] = 1 - color[x];
                    stack.push_back(nb.vertex);
                } else if (color[nb.vertex] == color[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

unsigned worker_count(unsigned requested, std::size_t items) {
    unsigned t = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(items, 1)));
}

/// Runs fn(i) for i in [0, count) across workers; results come back in index order.
template <typename Fn>
std::vector<VerificationReport> run_indexed(std::size_t count, unsigned threads, Fn fn) {
    std::vector<VerificationReport> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
    };
    const unsigned workers = worker_count(threads, count);
    if (workers <= 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

std::size_t random_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

}  // namespace

VerificationReport sweep_theorem1(const SweepOptions& options) {
    std::ostringstream desc;
    desc << "balance of wedge^k equals the characterization predicate; connected graphs with "
         << options.n_min << " <= n <= " << options.n_max << ", signing budget " << options.signing_budget;
    Tally tally("theorem1", desc.str(), options.oracle.max_counterexamples);
    const BalancePredicate predicate =
        options.predicate ? options.predicate : BalancePredicate(balanced_characterization_predicate);

    struct Item {
        std::size_t n;
        std::size_t index;
        SignedGraph graph;
    };
    std::vector<Item> items;
    for (std::size_t n = std::max<std::size_t>(options.n_min, 2); n <= options.n_max; ++n) {
        std::size_t index = 0;
        std::size_t sampled = 0;
        std::size_t graphs = 0;
        for (auto& g : connected_graphs(n, std::max(options.n_max, ConnectedGraphEnumerator::kDefaultMaxOrder))) {
            if ((std::uint64_t{1} << g.size()) > options.signing_budget) ++sampled;
            ++graphs;
            items.push_back({n, index++, std::move(g)});
        }
        std::ostringstream line;
        line << "n=" << n << ": " << graphs << " connected labeled graphs";
        if (sampled) line << ", " << sampled << " sampled with " << options.signing_budget << " random signings";
        else line << ", all signings";
        tally.note(line.str());
    }

    auto parts = run_indexed(items.size(), options.oracle.threads, [&](std::size_t i) {
        const Item& item = items[i];
        Tally local("", "", options.oracle.max_counterexamples);
        const std::size_t m = item.graph.size();
        std::vector<std::uint64_t> masks;
        if ((std::uint64_t{1} << m) <= options.signing_budget) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) masks.push_back(mask);
        } else {
            std::mt19937_64 rng(mix_seed(options.oracle.seed, item.n, item.index));
            for (std::uint64_t s = 0; s < options.signing_budget; ++s) {
                masks.push_back(rng() & ((std::uint64_t{1} << m) - 1));
            }
        }
        for (std::uint64_t mask : masks) {
            SignedGraph g = signing_from_mask(item.graph, mask);
            for (std::size_t k = 1; k < item.n; ++k) {
                local.expect(predicate(g, k), wedge_balanced(g, k, options.oracle.rule), g, k);
            }
        }
        return local.finish();
    });
    for (const auto& p : parts) tally.merge(p);
    return tally.finish();
}

VerificationReport sweep_theorem1(std::size_t n_max, std::uint64_t signing_budget) {
    SweepOptions options;
    options.n_max = n_max;
    options.signing_budget = signing_budget;
    return sweep_theorem1(options);
}

VerificationReport check_path_exterior(const FactSuiteOptions& options) {
    Tally tally("path-exterior", "every signed path has balanced exterior powers, exhaustive over signings",
                options.oracle.max_counterexamples);
    for (std::size_t n = 2; n <= options.path_max_order; ++n) {
        const SignedGraph path = path_graph(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << path.size()); ++mask) {
            const SignedGraph g = signing_from_mask(path, mask);
            for (std::size_t k = 1; k < n; ++k) tally.expect(true, wedge_balanced(g, k, options.oracle.rule), g, k);
        }
    }
    return tally.finish();
}

VerificationReport check_cycle_exterior(const FactSuiteOptions& options) {
    Tally tally("cycle-exterior", "wedge^k of the unsigned cycle is balanced iff k is odd",
                options.oracle.max_counterexamples);
    for (std::size_t n = 3; n <= options.cycle_max_order; ++n) {
        const SignedGraph g = cycle_graph(n);
        for (std::size_t k = 1; k < n; ++k) tally.expect(k % 2 == 1, wedge_balanced(g, k, options.oracle.rule), g, k);
    }
    return tally.finish();
}

VerificationReport check_signed_path(const FactSuiteOptions& options) {
    Tally tally("signed-path", "randomly labeled, randomly signed paths have balanced exterior powers",
                options.oracle.max_counterexamples);
    std::mt19937_64 rng(mix_seed(options.oracle.seed, 3));
    for (std::size_t trial = 0; trial < options.signed_path_trials; ++trial) {
        const std::size_t n = random_between(rng, 2, 9);
        auto order = random_relabeling(n, rng());
        const SignedGraph g =
            relabel(apply_signing(path_graph(n), signing::Random{rng()}), order);
        for (std::size_t k = 1; k < n; ++k) tally.expect(true, wedge_balanced(g, k, options.oracle.rule), g, k);
    }
    return tally.finish();
}

VerificationReport check_claw_free(const FactSuiteOptions& options) {
    Tally tally("claw-free", "a claw in |g| forces wedge^k unbalanced for 2 <= k <= n-2; all signings",
                options.oracle.max_counterexamples);
    for (std::size_t n = 4; n <= options.claw_max_order; ++n) {
        for (const auto& base : all_graphs(n)) {
            if (!contains_claw(base)) continue;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size()); ++mask) {
                const SignedGraph g = signing_from_mask(base, mask);
                for (std::size_t k = 2; k + 2 <= n; ++k) {
                    tally.expect(false, wedge_balanced(g, k, options.oracle.rule), g, k);
                }
            }
        }
    }
    return tally.finish();
}

VerificationReport check_hypercube(const FactSuiteOptions& options) {
    Tally tally("hypercube", "wedge^k Q3 is bipartite for all k and unbalanced exactly for 2 <= k <= 6",
                options.oracle.max_counterexamples);
    const SignedGraph q3 = hypercube_graph(3);
    const std::size_t big_n = q3.order();
    for (std::size_t k = 1; k < big_n; ++k) {
        const ExteriorPower w = wedge_power(q3, k, options.oracle.rule);
        tally.expect(true, is_bipartite(w.graph), q3, k, "bipartite");
        tally.expect(k == 1 || k == big_n - 1, is_balanced(w.graph).balanced, q3, k, "balanced");
    }
    return tally.finish();
}

VerificationReport check_unsigned_corollary(const FactSuiteOptions& options) {
    Tally tally("unsigned-corollary",
                "unsigned connected graphs: wedge^(n-1) balanced iff bipartite; wedge^k for 2 <= k <= n-2 "
                "balanced iff path, or cycle with k odd",
                options.oracle.max_counterexamples);
    for (std::size_t n = 2; n <= options.corollary_max_order; ++n) {
        for (const auto& g : connected_graphs(n, std::max(n, ConnectedGraphEnumerator::kDefaultMaxOrder))) {
            tally.expect(is_bipartite(g), wedge_balanced(g, n - 1, options.oracle.rule), g, n - 1);
            for (std::size_t k = 2; k + 2 <= n; ++k) {
                const bool expected = is_path_graph(g) || (is_cycle_graph(g) && k % 2 == 1);
                tally.expect(expected, wedge_balanced(g, k, options.oracle.rule), g, k);
            }
        }
    }
    return tally.finish();
}

VerificationReport check_switching_class(const FactSuiteOptions& options) {
    Tally tally("switching-class",
                "wedge^k(switch(g, D)) = switch(wedge^k g, D-hat) exactly, and balance agrees",
                options.oracle.max_counterexamples);
    std::mt19937_64 rng(mix_seed(options.oracle.seed, 7));
    for (std::size_t trial = 0; trial < options.switching_trials; ++trial) {
        const std::size_t n = random_between(rng, 2, 7);
        const SignedGraph g = random_signed_graph(n, 0.5, rng());
        std::vector<Sign> d(n);
        for (auto& s : d) s = (rng() >> 63) ? Sign::Negative : Sign::Positive;
        const SwitchingVector sw(d);
        const SignedGraph switched = switch_graph(g, sw);
        for (std::size_t k = 1; k < n; ++k) {
            const SignedGraph lhs = wedge_power(switched, k, options.oracle.rule).graph;
            const SignedGraph plain = wedge_power(g, k, options.oracle.rule).graph;
            const SignedGraph rhs = switch_graph(plain, lift_switching(sw, k));
            tally.check(lhs == rhs, g, k, true, false, "edge sets differ");
            tally.expect(is_balanced(plain).balanced, is_balanced(lhs).balanced, g, k, "balance");
        }
    }
    return tally.finish();
}

namespace {

/// wedge^k g with every subset S renamed to rank(sort(rho(S))).
SignedGraph relabel_wedge(const ExteriorPower& w, std::span<const Vertex> rho) {
    std::vector<Vertex> mapping(w.subsets.size());
    for (std::size_t r = 0; r < w.subsets.size(); ++r) {
        std::vector<Vertex> image;
        for (Vertex x : w.subsets[r].elems()) image.push_back(rho[x]);
        std::sort(image.begin(), image.end());
        mapping[r] = rank(KSubset(std::move(image)), w.base_order);
    }
    return relabel(w.graph, mapping);
}

}  // namespace

VerificationReport check_ordering_invariance(const FactSuiteOptions& options) {
    Tally tally("ordering-invariant",
                "relabeled exterior powers are switching equivalent; swapping neighbors x, y in the order is "
                "witnessed by -1 on subsets containing both",
                options.oracle.max_counterexamples);
    std::mt19937_64 rng(mix_seed(options.oracle.seed, 11));
    for (std::size_t trial = 0; trial < options.switching_trials; ++trial) {
        const std::size_t n = random_between(rng, 2, 7);
        const SignedGraph g = random_signed_graph(n, 0.5, rng());
        const auto rho = random_relabeling(n, rng());
        const SignedGraph moved = relabel(g, rho);

        // The diagonal "-1 on subsets holding both" is exact only when x and y are
        // neighbors in the order; a general swap also picks up the sorting sign
        // (-1)^{|a strictly between x and y|} on subsets holding exactly one of them.
        const bool adjacent_swap = trial % 2 == 0;
        Vertex x = random_between(rng, 0, n - 2);
        Vertex y = x + 1;
        if (!adjacent_swap) {
            x = random_between(rng, 0, n - 1);
            y = random_between(rng, 0, n - 2);
            if (y >= x) ++y;
            if (y < x) std::swap(x, y);
        }
        std::vector<Vertex> swap_xy(n);
        for (Vertex i = 0; i < n; ++i) swap_xy[i] = i;
        std::swap(swap_xy[x], swap_xy[y]);
        const SignedGraph swapped = relabel(g, swap_xy);

        for (std::size_t k = 1; k < n; ++k) {
            const ExteriorPower w = wedge_power(g, k, options.oracle.rule);
            const SignedGraph target = wedge_power(moved, k, options.oracle.rule).graph;
            tally.check(switching_equivalent(target, relabel_wedge(w, rho)).has_value(), g, k, true, false,
                        "no switching witness");

            std::vector<Sign> dxy;
            for (const auto& s : all_subsets(n, k)) {
                const bool has_x = s.contains(x);
                const bool has_y = s.contains(y);
                bool negative = has_x && has_y;
                if (has_x != has_y) {
                    for (Vertex z = x + 1; z < y; ++z) negative ^= s.contains(z);
                }
                dxy.push_back(negative ? Sign::Negative : Sign::Positive);
            }
            const SignedGraph predicted = switch_graph(relabel_wedge(w, swap_xy), SwitchingVector(dxy));
            tally.check(predicted == wedge_power(swapped, k, options.oracle.rule).graph, g, k, true, false,
                        "transposition witness");
        }
    }
    return tally.finish();
}

VerificationReport check_johnson(const FactSuiteOptions& options) {
    Tally tally("johnson", "|wedge^k K_n| equals J(n,k,k-1) under the identity subset labeling",
                options.oracle.max_counterexamples);
    for (std::size_t n = 2; n <= options.johnson_max_order; ++n) {
        const SignedGraph kn = complete_graph(n);
        for (std::size_t k = 1; k < n; ++k) {
            const SignedGraph w = wedge_power(kn, k, options.oracle.rule).graph;
            // J(n,1,0) is K_n; the generator itself requires l >= 1.
            const SignedGraph j = k == 1 ? complete_graph(n) : johnson_graph(n, k, k - 1);
            std::vector<Vertex> identity(w.order());
            for (Vertex i = 0; i < identity.size(); ++i) identity[i] = i;
            tally.expect(true, w.order() == j.order() && edge_sets_equal_under_map(w, j, identity), kn, k);
        }
    }
    return tally.finish();
}

VerificationReport check_palindrome(const FactSuiteOptions& options) {
    Tally tally("palindrome-isomorphic", "|wedge^k G| and |wedge^(n-k) G| agree under the complement map",
                options.oracle.max_counterexamples);
    std::mt19937_64 rng(mix_seed(options.oracle.seed, 13));
    for (std::size_t trial = 0; trial < options.palindrome_trials; ++trial) {
        const std::size_t n = random_between(rng, 2, options.palindrome_max_order);
        const SignedGraph g = random_signed_graph(n, 0.5, rng());
        for (std::size_t k = 1; k < n; ++k) {
            const ExteriorPower lo = wedge_power(g, k, options.oracle.rule);
            const SignedGraph hi = wedge_power(g, n - k, options.oracle.rule).graph;
            std::vector<Vertex> map;
            map.reserve(lo.subsets.size());
            for (const auto& s : lo.subsets) map.push_back(rank(mirror_map(s, n), n));
            tally.expect(true, edge_sets_equal_under_map(lo.graph, hi, map), g, k);
        }
    }
    return tally.finish();
}

VerificationReport check_gain_cover(const FactSuiteOptions& options) {
    Tally tally("gain-cover",
                "(u, pi) -> pi(u) is an isomorphism from the S_k-cover of the gain graph onto G^k minus "
                "repeated-entry tuples; k = 2 gives a double cover whose sheet crossings match wedge signs",
                options.oracle.max_counterexamples);
    std::size_t double_covers = 0;
    for (std::size_t n = 2; n <= options.cover_max_order; ++n) {
        for (const auto& g : connected_graphs(n, std::max(n, ConnectedGraphEnumerator::kDefaultMaxOrder))) {
            for (std::size_t k = 1; k <= options.cover_max_k && k < n; ++k) {
                const auto report = check_cover_isomorphism(g, k);
                tally.expect(true, report.isomorphic(), g, k);
                if (k != 2) continue;
                ++double_covers;
                // Unsigned base: a wedge edge is negative iff its lift leaves the sheet.
                const GainGraph phi = gain_graph(g, 2);
                const CoverGraph cover = build_cover(phi);
                const ExteriorPower w = wedge_power(g, 2, options.oracle.rule);
                bool consistent = cover.group.size() == 2;
                for (std::size_t i = 0; i < w.edges.size() && consistent; ++i) {
                    const auto& e = w.edges[i];
                    const auto& id = cover.group[0];
                    const bool stays = cover.graph.adjacent(cover.id(e.u, id), cover.id(e.v, id));
                    consistent = stays == (e.sign == Sign::Positive);
                }
                tally.expect(true, consistent, g, k, "double-cover sign structure");
            }
        }
    }
    tally.note(std::to_string(double_covers) + " k=2 instances verified as double covers");
    return tally.finish();
}

VerificationReport check_exterior_lemma(const FactSuiteOptions& options) {
    Tally tally("exterior-lemma",
                "N^T N = k! I, N N^T commutes with A(G^k), N^T A(G^k) N = k! A(wedge^k) on random signed graphs",
                options.oracle.max_counterexamples);
    std::mt19937_64 rng(mix_seed(options.oracle.seed, 17));
    std::size_t skipped = 0;
    for (std::size_t trial = 0; trial < options.algebra_trials; ++trial) {
        const std::size_t n = random_between(rng, 2, options.algebra_max_order);
        const SignedGraph g = random_signed_graph(n, 0.5, rng());
        for (std::size_t k = 1; k < n; ++k) {
            if (int_power(n, k) > options.algebra_row_limit) {
                ++skipped;
                continue;
            }
            const auto report = verify_exterior_identities(g, wedge_power(g, k, options.oracle.rule),
                                                           options.algebra_row_limit);
            tally.expect(true, report.all(), g, k, report.describe());
        }
    }
    if (skipped) tally.note(std::to_string(skipped) + " (graph, k) pairs skipped by the row limit");
    return tally.finish();
}

std::vector<VerificationReport> verify_fact_suite(const FactSuiteOptions& options) {
    return {check_path_exterior(options),      check_cycle_exterior(options),    check_signed_path(options),
            check_claw_free(options),          check_hypercube(options),         check_unsigned_corollary(options),
            check_switching_class(options),    check_ordering_invariance(options), check_johnson(options),
            check_palindrome(options),         check_gain_cover(options),        check_exterior_lemma(options)};
}

nlohmann::json to_json(const SignedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, to_int(e.sign)});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const VerificationReport& report, bool with_timing) {
    nlohmann::json ces = nlohmann::json::array();
    for (const auto& c : report.counterexamples) {
        ces.push_back({{"graph", to_json(c.graph)},
                       {"k", c.k},
                       {"expected", c.expected},
                       {"got", c.got},
                       {"note", c.note}});
    }
    nlohmann::json out{{"claim", report.claim},
                       {"description", report.description},
                       {"passed", report.passed()},
                       {"instances", report.instances},
                       {"failures", report.failures},
                       {"counterexamples", std::move(ces)},
                       {"notes", report.notes}};
    if (with_timing) out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

std::string render_text(const VerificationReport& report, bool with_timing) {
    std::ostringstream out;
    out << (report.passed() ? "PASS " : "FAIL ") << report.claim << ": " << report.instances << " instances, "
        << report.failures << " counterexamples";
    if (with_timing) out << " (" << static_cast<long long>(report.elapsed_ms) << " ms)";
    out << '\n';
    out << "  " << report.description << '\n';
    for (const auto& note : report.notes) out << "  note: " << note << '\n';
    for (const auto& c : report.counterexamples) {
        out << "  counterexample k=" << c.k << " expected=" << c.expected << " got=" << c.got;
        if (!c.note.empty()) out << " (" << c.note << ")";
        out << " graph=" << to_json(c.graph).dump() << '\n';
    }
    return out.str();
}

}  // namespace sigwedge
