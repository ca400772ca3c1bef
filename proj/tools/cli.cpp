#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "sigwedge/algebra.hpp"
#include "sigwedge/covers.hpp"
#include "sigwedge/exterior.hpp"
#include "sigwedge/families.hpp"
#include "sigwedge/graph_io.hpp"
#include "sigwedge/oracle.hpp"

namespace sigwedge::cli {

namespace {

/// A command failed for a reason worth reporting as a usage/I-O error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SignedGraph load(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_graph(in);
    return read_graph_file(path);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
}

Signing parse_signing(const std::string& text, std::uint64_t seed) {
    if (text == "positive" || text == "+") return signing::AllPositive{};
    if (text == "negative" || text == "-") return signing::AllNegative{};
    if (text == "random") return signing::Random{seed};
    if (text == "one-negative") return signing::SingleNegative{};
    if (text.rfind("one-negative:", 0) == 0) {
        return signing::SingleNegative{static_cast<std::size_t>(std::stoull(text.substr(13)))};
    }
    if (text.rfind("explicit:", 0) == 0) {
        signing::Explicit list;
        std::stringstream items(text.substr(9));
        for (std::string item; std::getline(items, item, ',');) {
            if (item == "+" || item == "+1") list.signs.push_back(Sign::Positive);
            else if (item == "-" || item == "-1") list.signs.push_back(Sign::Negative);
            else throw UsageError("bad sign '" + item + "' in explicit signing");
        }
        return list;
    }
    throw UsageError("unknown signing '" + text +
                     "' (positive, negative, one-negative[:INDEX], explicit:S,S,..., random)");
}

std::string format_switching(const SwitchingVector& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << to_string(d[i]);
    return out.str();
}

std::string format_cycle(const std::vector<Vertex>& cycle) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
    return out.str();
}

struct GenArgs {
    std::string family;
    std::vector<std::size_t> params;
    std::string sign = "positive";
    std::uint64_t seed = 1;
    std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    static const std::map<std::string, FamilyKind> kinds{
        {"path", FamilyKind::Path},         {"cycle", FamilyKind::Cycle},
        {"complete", FamilyKind::Complete}, {"star", FamilyKind::Star},
        {"hypercube", FamilyKind::Hypercube}, {"johnson", FamilyKind::Johnson}};
    auto it = kinds.find(a.family);
    if (it == kinds.end()) throw UsageError("unknown family '" + a.family + "'");
    FamilySpec spec{it->second, a.params, parse_signing(a.sign, a.seed)};
    emit(a.output, format_graph(generate(spec)), out);
    return kOk;
}

struct WedgeArgs {
    std::size_t k = 0;
    std::string input;
    std::string output;
    std::string format = "sg";
    std::string sidecar;
};

int cmd_wedge(const WedgeArgs& a, std::istream& in, std::ostream& out) {
    const SignedGraph g = load(a.input, in);
    if (a.k < 1 || a.k + 1 > g.order()) {
        throw UsageError("-k must satisfy 1 <= k <= n-1 (n = " + std::to_string(g.order()) + ")");
    }
    const ExteriorPower w = wedge_power(g, a.k);
    if (a.format == "json") {
        emit(a.output, wedge_json(w).dump(2) + "\n", out);
    } else if (a.format == "dot") {
        emit(a.output, wedge_dot(w), out);
    } else {
        emit(a.output, format_graph(w.graph), out);
        std::string sidecar = a.sidecar;
        if (sidecar.empty() && !a.output.empty() && a.output != "-") sidecar = a.output + ".subsets.json";
        if (!sidecar.empty()) emit(sidecar, subset_sidecar(w).dump(2) + "\n", out);
    }
    return kOk;
}

int cmd_balance(const std::string& input, bool anti, std::istream& in, std::ostream& out) {
    const SignedGraph g = load(input, in);
    const BalanceReport r = anti ? is_antibalanced(g) : is_balanced(g);
    if (r.balanced) {
        out << (anti ? "anti-balanced" : "balanced") << '\n';
        out << "switching: " << format_switching(r.switching()) << '\n';
        return kOk;
    }
    out << (anti ? "not anti-balanced" : "unbalanced") << '\n';
    out << (anti ? "positive odd or negative even cycle: " : "negative cycle: ") << format_cycle(r.negative_cycle())
        << '\n';
    return kFalse;
}

int cmd_switch_equiv(const std::string& a, const std::string& b, std::istream& in, std::ostream& out) {
    const SignedGraph g1 = load(a, in);
    const SignedGraph g2 = load(b, in);
    if (!g1.same_underlying(g2)) throw UsageError("graphs do not share an underlying graph");
    auto d = switching_equivalent(g1, g2);
    if (!d) {
        out << "not equivalent\n";
        return kFalse;
    }
    out << "equivalent\nwitness: " << format_switching(*d) << '\n';
    return kOk;
}

int cmd_cover(std::size_t k, const std::string& input, const std::string& output, std::istream& in,
              std::ostream& out, std::ostream& err) {
    const SignedGraph g = load(input, in);
    if (k < 1 || k + 1 > g.order()) {
        throw UsageError("-k must satisfy 1 <= k <= n-1 (n = " + std::to_string(g.order()) + ")");
    }
    const CoverGraph cover = build_cover(gain_graph(g, k));
    const CoverIsomorphismReport report = check_cover_isomorphism(g, k);
    emit(output, format_graph(cover.graph), out);

    std::ostream& summary = (output.empty() || output == "-") ? err : out;
    summary << "cover: " << cover.graph.order() << " vertices, " << cover.graph.size() << " edges\n";
    summary << "isomorphic: " << (report.isomorphic() ? "true" : "false") << '\n';
    if (report.double_cover) summary << "double cover of the signed exterior square\n";
    return report.isomorphic() ? kOk : kFalse;
}

struct VerifyArgs {
    std::string suite = "all";
    std::size_t nmax = 5;
    std::uint64_t budget = 1024;
    bool json = false;
    bool timing = false;
    unsigned threads = 0;
    std::uint64_t seed = OracleOptions{}.seed;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    OracleOptions oracle;
    oracle.threads = a.threads;
    oracle.seed = a.seed;
    FactSuiteOptions facts;
    facts.oracle = oracle;

    std::vector<VerificationReport> reports;
    if (a.suite == "theorem1" || a.suite == "all") {
        SweepOptions sweep;
        sweep.n_max = a.nmax;
        sweep.signing_budget = a.budget;
        sweep.oracle = oracle;
        reports.push_back(sweep_theorem1(sweep));
    }
    if (a.suite == "facts" || a.suite == "all") {
        for (auto& r : verify_fact_suite(facts)) reports.push_back(std::move(r));
    } else if (a.suite == "algebra") {
        reports.push_back(check_exterior_lemma(facts));
    } else if (a.suite == "covers") {
        reports.push_back(check_gain_cover(facts));
    } else if (a.suite != "theorem1" && a.suite != "all") {
        throw UsageError("unknown suite '" + a.suite + "'");
    }

    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed();
    if (a.json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : reports) doc.push_back(to_json(r, a.timing));
        out << nlohmann::json{{"passed", all_passed}, {"reports", doc}}.dump(2) << '\n';
    } else {
        for (const auto& r : reports) out << render_text(r, a.timing);
        out << (all_passed ? "all claims verified" : "counterexamples found") << '\n';
    }
    return all_passed ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exterior powers of signed graphs: construction, balance and verification"};
    app.name("sigwedge");
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family as an .sg file");
    gen_cmd->add_option("family", gen.family, "path | cycle | complete | star | hypercube | johnson")->required();
    gen_cmd->add_option("params", gen.params, "Family parameters (n; leaves; d; or n k l)")->required();
    gen_cmd->add_option("--sign", gen.sign, "positive | negative | one-negative[:INDEX] | explicit:S,... | random");
    gen_cmd->add_option("--seed", gen.seed, "Seed for random signings");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    WedgeArgs wedge;
    auto* wedge_cmd = app.add_subcommand("wedge", "Compute the exterior k-th power");
    wedge_cmd->add_option("-k", wedge.k, "Exponent, 1 <= k <= n-1")->required();
    wedge_cmd->add_option("-i,--input", wedge.input, "Input .sg file (default stdin)");
    wedge_cmd->add_option("-o,--output", wedge.output, "Output file (default stdout)");
    wedge_cmd->add_option("--format", wedge.format, "sg | json | dot")
        ->check(CLI::IsMember({"sg", "json", "dot"}));
    wedge_cmd->add_option("--sidecar", wedge.sidecar, "Where to write the rank -> subset map for sg output");

    std::string balance_input;
    bool anti = false;
    auto* balance_cmd = app.add_subcommand("balance", "Test balance (or anti-balance) with a witness");
    balance_cmd->add_option("-i,--input", balance_input, "Input .sg file (default stdin)");
    balance_cmd->add_flag("--anti", anti, "Test anti-balance instead");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", verify.suite, "all | theorem1 | facts | algebra | covers")
        ->check(CLI::IsMember({"all", "theorem1", "facts", "algebra", "covers"}));
    verify_cmd->add_option("--nmax", verify.nmax, "Largest graph order for the theorem sweep")
        ->check(CLI::Range(2, 7));
    verify_cmd->add_option("--budget", verify.budget, "Signings per graph before sampling")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
    verify_cmd->add_flag("--timing", verify.timing, "Include wall-clock times (output is then not reproducible)");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
    verify_cmd->add_option("--seed", verify.seed, "Seed for sampled instances");

    std::string equiv_a;
    std::string equiv_b;
    auto* equiv_cmd = app.add_subcommand("switch-equiv", "Find a switching between two signings");
    equiv_cmd->add_option("-a", equiv_a, "First .sg file")->required();
    equiv_cmd->add_option("-b", equiv_b, "Second .sg file")->required();

    std::size_t cover_k = 0;
    std::string cover_input;
    std::string cover_output;
    auto* cover_cmd = app.add_subcommand("cover", "Build the S_k-cover of the gain graph and verify it");
    cover_cmd->add_option("-k", cover_k, "Exponent, 1 <= k <= n-1")->required();
    cover_cmd->add_option("-i,--input", cover_input, "Input .sg file (default stdin)");
    cover_cmd->add_option("-o,--output", cover_output, "Output file (default stdout)");

    std::vector<std::string> argv_store{"sigwedge"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "sigwedge: " << e.what() << '\n';
        return kError;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*wedge_cmd) return cmd_wedge(wedge, in, out);
        if (*balance_cmd) return cmd_balance(balance_input, anti, in, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*equiv_cmd) return cmd_switch_equiv(equiv_a, equiv_b, in, out);
        if (*cover_cmd) return cmd_cover(cover_k, cover_input, cover_output, in, out, err);
    } catch (const std::exception& e) {
        err << "sigwedge: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace sigwedge::cli
