#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sigwedge/graph_io.hpp"

using namespace sigwedge;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

SignedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("sigwedge-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::size_t negative_edges(const SignedGraph& g) {
    std::size_t count = 0;
    for (const auto& e : g.edges()) count += e.sign == Sign::Negative;
    return count;
}

}  // namespace

TEST_CASE("gen") {
    const auto c5 = run({"gen", "cycle", "5", "--sign", "one-negative"});
    CHECK(c5.code == 0);
    CHECK(parse(c5.out).sign(0, 4) == Sign::Negative);
    CHECK(negative_edges(parse(c5.out)) == 1);

    const auto j = run({"gen", "johnson", "4", "2", "1"});
    CHECK(parse(j.out).order() == 6);
    CHECK(parse(j.out).size() == 12);

    CHECK(run({"gen", "path", "4"}).out == "4 3\n0 1 +1\n1 2 +1\n2 3 +1\n");
    CHECK(negative_edges(parse(run({"gen", "path", "4", "--sign", "explicit:+,-,+"}).out)) == 1);
    CHECK(run({"gen", "complete", "5", "--sign", "random", "--seed", "3"}).out ==
          run({"gen", "complete", "5", "--sign", "random", "--seed", "3"}).out);

    CHECK(run({"gen", "blob", "3"}).code == 2);
    CHECK(run({"gen", "path", "4", "--sign", "sideways"}).code == 2);
    CHECK(run({"gen", "johnson", "4", "2"}).code == 2);
}

TEST_CASE("wedge") {
    const std::string c4 = run({"gen", "cycle", "4"}).out;
    const auto w = run({"wedge", "-k", "2"}, c4);
    REQUIRE(w.code == 0);
    const SignedGraph g = parse(w.out);
    CHECK(g.order() == 6);
    CHECK(g.size() == 8);
    CHECK(negative_edges(g) == 2);

    const std::string signed_graph = run({"gen", "complete", "5", "--sign", "random", "--seed", "8"}).out;
    CHECK(run({"wedge", "-k", "1"}, signed_graph).out == signed_graph);

    const auto claw = run({"wedge", "-k", "2"}, run({"gen", "star", "3"}).out);
    CHECK(parse(claw.out).size() == 6);
    CHECK(negative_edges(parse(claw.out)) == 3);

    CHECK(run({"wedge", "-k", "4"}, c4).code == 2);
    CHECK(run({"wedge", "-k", "0"}, c4).code == 2);
    CHECK(run({"wedge"}, c4).code == 2);
    CHECK(run({"wedge", "-k", "2"}, "garbage").code == 2);
    CHECK(run({"wedge", "-k", "2", "-i", "/nonexistent.sg"}).code == 2);

    const auto json = run({"wedge", "-k", "2", "--format", "json"}, c4);
    CHECK(nlohmann::json::parse(json.out)["k"] == 2);
    CHECK(run({"wedge", "-k", "2", "--format", "dot"}, c4).out.find("graph G {") == 0);
    CHECK(run({"wedge", "-k", "2", "--format", "xml"}, c4).code == 2);
}

TEST_CASE("wedge writes files and a subset sidecar") {
    TempDir dir;
    const std::string in = dir.file("c4.sg");
    const std::string out = dir.file("w.sg");
    CHECK(run({"gen", "cycle", "4", "-o", in}).code == 0);
    CHECK(run({"wedge", "-k", "2", "-i", in, "-o", out}).code == 0);
    CHECK(read_graph_file(out).order() == 6);
    std::ifstream sidecar(out + ".subsets.json");
    REQUIRE(sidecar.good());
    const auto subsets = nlohmann::json::parse(sidecar)["subsets"];
    CHECK(subsets.size() == 6);
    CHECK(subsets[1] == nlohmann::json::array({0, 2}));
}

TEST_CASE("balance") {
    const auto pos = run({"balance"}, run({"gen", "cycle", "4"}).out);
    CHECK(pos.code == 0);
    CHECK(pos.out.rfind("balanced\nswitching: ", 0) == 0);

    const auto neg = run({"balance"}, run({"gen", "cycle", "4", "--sign", "one-negative"}).out);
    CHECK(neg.code == 1);
    CHECK(neg.out.rfind("unbalanced\nnegative cycle: ", 0) == 0);
    std::istringstream cycle(neg.out.substr(neg.out.find(": ") + 2));
    std::size_t length = 0;
    for (Vertex v; cycle >> v;) ++length;
    CHECK(length == 4);

    CHECK(run({"balance", "--anti"}, run({"gen", "complete", "4", "--sign", "negative"}).out).code == 0);
    CHECK(run({"balance", "--anti"}, run({"gen", "complete", "4"}).out).code == 1);
}

TEST_CASE("switch-equiv") {
    TempDir dir;
    const std::string a = dir.file("a.sg");
    const std::string b = dir.file("b.sg");
    const std::string c = dir.file("c.sg");
    run({"gen", "cycle", "5", "--sign", "one-negative", "-o", a});
    // Switching at vertex 4 moves the negative edge (0,4) onto (3,4).
    run({"gen", "cycle", "5", "--sign", "explicit:+,+,+,+,-", "-o", b});
    run({"gen", "cycle", "5", "-o", c});
    const auto yes = run({"switch-equiv", "-a", a, "-b", b});
    CHECK(yes.code == 0);
    CHECK(yes.out.rfind("equivalent\nwitness: ", 0) == 0);
    const auto no = run({"switch-equiv", "-a", a, "-b", c});
    CHECK(no.code == 1);
    CHECK(no.out == "not equivalent\n");
    const std::string p = dir.file("p.sg");
    run({"gen", "path", "5", "-o", p});
    CHECK(run({"switch-equiv", "-a", a, "-b", p}).code == 2);
}

TEST_CASE("cover") {
    const auto p3 = run({"cover", "-k", "2"}, run({"gen", "path", "3"}).out);
    CHECK(p3.code == 0);
    CHECK(parse(p3.out).order() == 6);
    CHECK(p3.err.find("isomorphic: true") != std::string::npos);

    TempDir dir;
    const auto c5 = run({"cover", "-k", "2", "-o", dir.file("cover.sg")}, run({"gen", "cycle", "5"}).out);
    CHECK(c5.code == 0);
    CHECK(c5.out.find("isomorphic: true") != std::string::npos);
    CHECK(c5.out.find("double cover") != std::string::npos);
    CHECK(read_graph_file(dir.file("cover.sg")).order() == 20);
}

TEST_CASE("verify") {
    const auto t = run({"verify", "--suite", "theorem1", "--nmax", "4"});
    CHECK(t.code == 0);
    CHECK(t.out.find("PASS theorem1") != std::string::npos);
    CHECK(run({"verify", "--suite", "algebra"}).code == 0);
    CHECK(run({"verify", "--suite", "covers"}).code == 0);
    const auto j = run({"verify", "--suite", "theorem1", "--nmax", "3", "--json"});
    CHECK(nlohmann::json::parse(j.out)["passed"] == true);
    CHECK(run({"verify", "--suite", "theorem1", "--nmax", "4", "--threads", "3"}).out == t.out);
    CHECK(run({"verify", "--suite", "theorem1", "--nmax", "3", "--timing"}).out.find(" ms)") != std::string::npos);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
    CHECK(run({"verify", "--nmax", "9"}).code == 2);
}

TEST_CASE("help and usage errors") {
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("wedge") != std::string::npos);
    CHECK(run({"wedge", "--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}
