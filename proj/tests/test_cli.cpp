#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run run(const std::string& args) {
    Run r;
    const std::string cmd = std::string(G2PC_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream f(std::string(G2PC_GOLDEN) + "/" + name);
    REQUIRE(f.good());
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("dims table") {
    const Run r = run("dims --max-level 4");
    CHECK(r.code == 0);
    CHECK(r.out == golden("dims4.txt"));
}

TEST_CASE("level-1 graph in DOT") {
    const Run r = run("graph --level 1 --format dot");
    CHECK(r.code == 0);
    CHECK(r.out == golden("graph1.dot"));
    CHECK(r.out.find("\"9\" -> \"1\" [label=\"0\"]") != std::string::npos);
    int nodes = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);)
        if (line.find("->") == std::string::npos && line.find("\";") != std::string::npos) ++nodes;
    CHECK(nodes == 15);
}

TEST_CASE("JSON graph carries reverse certificates") {
    const Run r = run("graph --level 2 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"].size() == 92);
    std::set<std::string> vs;
    for (const auto& v : j["vertices"]) vs.insert(v.get<std::string>());
    CHECK(vs.size() == 92);
    for (const auto& e : j["edges"]) {
        CHECK(e["reverse"]["from"] == e["to"]);
        CHECK(e["reverse"]["to"] == e["from"]);
        CHECK(e["reverse"]["color"] == e["color"]);
    }
}

TEST_CASE("outputs are deterministic") {
    CHECK(run("phi --level 3").out == run("phi --level 3").out);
    CHECK(run("enumerate --level 2 --format json").out == run("enumerate --level 2 --format json").out);
}

TEST_CASE("minimal and connectivity") {
    const Run m = run("minimal --level 3");
    CHECK(m.code == 0);
    CHECK(m.out == golden("minimal3.txt"));
    const Run c = run("connectivity --level 2");
    CHECK(c.code == 0);
    CHECK(c.out.find("8464 elements, 1 component") != std::string::npos);
}

TEST_CASE("verify and qcheck succeed") {
    CHECK(run("verify --level 2").code == 0);
    const Run q = run("qcheck");
    CHECK(q.code == 0);
    CHECK(q.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("graph").code == 2);
    CHECK(run("graph --level 1 --format svg").code == 2);
    CHECK(run("minimal --level -1").code == 2);
    CHECK(run("frobnicate").code == 2);
}
