#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hexanet/hermitian_quat.hpp"
#include "hexanet/json_io.hpp"
#include "hexanet/svg.hpp"

using namespace hexanet;
using nlohmann::json;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

#ifdef HEXANET_CLI
struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& input = "") {
    static int counter = 0;
    std::string base = "/tmp/hexanet_cli_test_" + std::to_string(counter++);
    std::string in_file = base + ".in", out_file = base + ".out";
    {
        std::ofstream f(in_file);
        f << input;
    }
    std::string cmd = std::string(HEXANET_CLI) + " " + args + " < " + in_file + " > " + out_file +
                      " 2> /dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::stringstream buf;
    buf << f.rdbuf();
    std::remove(in_file.c_str());
    std::remove(out_file.c_str());
    return {WEXITSTATUS(status), buf.str()};
}
#endif

}  // namespace

TEST_CASE("matrix json round trip") {
    Rng rng(70);
    for (Ring ring : {Ring::Rat, Ring::Gauss, Ring::Quat})
        for (int n = 1; n <= 4; ++n) {
            ExactMatrix m = random_matrix(n, ring, rng);
            CHECK(matrix_from_json(matrix_to_json(m)) == m);
        }
    CHECK_THROWS_AS(matrix_from_json(json{{"n", 2}}), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("{\"n\":1,\"entries\":[[\"x\"]]}")), ParseError);
}

TEST_CASE("tiling json round trip") {
    for (int n = 2; n <= 5; ++n)
        for (const Tiling& t : enumerate_tilings(n))
            CHECK(tiling_from_json(tiling_to_json(t)) == t);
}

TEST_CASE("network json round trip") {
    Rng rng(71);
    for (Ring ring : {Ring::Rat, Ring::Gauss}) {
        ExactMatrix a = random_generic_matrix(3, ring, rng);
        for (const Tiling& t : enumerate_tilings(3)) {
            Network net = matrix_to_network(a, t);
            CHECK(network_from_json(network_to_json(net)) == net);
        }
    }
    ExactMatrix q = random_hermitian_generic(3, Ring::Quat, rng);
    Network qnet = q_matrix_to_network(q, standard_tiling(3));
    CHECK(network_from_json(network_to_json(qnet)) == qnet);

    // ring inference when the tag is missing
    ExactMatrix a = random_generic_matrix(2, Ring::Gauss, rng);
    Network net = matrix_to_network(a, standard_tiling(2));
    json j = network_to_json(net);
    j.erase("ring");
    CHECK(network_from_json(j) == net);
}

TEST_CASE("network json uses the documented key shapes") {
    ExactMatrix m = make_matrix(2, Ring::Rat);
    m.at(1, 1) = Scalar::rational(2);
    m.at(1, 2) = Scalar::rational(3);
    m.at(2, 1) = Scalar::rational(5);
    m.at(2, 2) = Scalar::rational(7);
    json j = network_to_json(matrix_to_network(m, standard_tiling(2)));
    CHECK(j["vertices"]["{}"] == "1/1");
    CHECK(j["vertices"]["{1}"] == "2/1");
    CHECK(j["vertices"]["{1,2}"] == "1/1");
    CHECK(j["faces"]["{1,2}"] == "5/1");
    CHECK(j["tiling"]["tiles"][0]["base"].is_array());
}

TEST_CASE("svg rendering") {
    std::string svg = render_tiling_svg(standard_tiling(4));
    CHECK(count_occurrences(svg, "<polygon") == 6);
    CHECK(count_occurrences(svg, "<text") == 11);
    CHECK(svg == render_tiling_svg(standard_tiling(4)));  // deterministic

    ExactMatrix m = make_matrix(2, Ring::Rat);
    m.at(1, 1) = Scalar::rational(2);
    m.at(1, 2) = Scalar::rational(3);
    m.at(2, 1) = Scalar::rational(5);
    m.at(2, 2) = Scalar::rational(7);
    std::string net_svg = render_network_svg(matrix_to_network(m, standard_tiling(2)));
    CHECK(count_occurrences(net_svg, ">5/1</text>") == 1);
    CHECK(count_occurrences(net_svg, ">7/1</text>") == 1);
    CHECK(count_occurrences(net_svg, ">1/1</text>") == 2);
    CHECK(count_occurrences(net_svg, "<polygon") == 1);
}

#ifdef HEXANET_CLI

TEST_CASE("cli: tilings count") {
    auto r = run_cli("tilings --n 3 --count-only");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    CHECK(run_cli("tilings --n 4 --count-only").out == "8\n");
}

TEST_CASE("cli: laurent counts") {
    auto r = run_cli("laurent --n 4 --entry 1,4 --count-only");
    CHECK(r.code == 0);
    CHECK(r.out == "22\n");
    CHECK(run_cli("laurent --n 4 --entry 1,2 --count-only").out == "2\n");
}

TEST_CASE("cli: gen | to-network | reconstruct round trip") {
    for (const char* flags : {"--n 4 --seed 1", "--n 3 --ring C --seed 9",
                              "--n 4 --ring Q --seed 5 --hermitian"}) {
        auto gen = run_cli(std::string("gen ") + flags);
        REQUIRE(gen.code == 0);
        auto net = run_cli("to-network", gen.out);
        REQUIRE(net.code == 0);
        auto back = run_cli("reconstruct", net.out);
        REQUIRE(back.code == 0);
        CHECK(back.out == gen.out);
    }
}

TEST_CASE("cli: determinism per seed") {
    CHECK(run_cli("gen --n 4 --seed 7").out == run_cli("gen --n 4 --seed 7").out);
    CHECK(run_cli("gen --n 4 --seed 7").out != run_cli("gen --n 4 --seed 8").out);
}

TEST_CASE("cli: flips preserve the matrix") {
    auto gen = run_cli("gen --n 4 --seed 3");
    auto net = run_cli("to-network", gen.out);
    auto flipped = run_cli("flip --random 6 --seed 2", net.out);
    REQUIRE(flipped.code == 0);
    CHECK(flipped.out != net.out);
    auto back = run_cli("reconstruct", flipped.out);
    CHECK(back.out == gen.out);
}

TEST_CASE("cli: qdet pipeline") {
    auto gen = run_cli("gen --n 3 --ring H --seed 11");
    REQUIRE(gen.code == 0);
    auto qd = run_cli("qdet", gen.out);
    REQUIRE(qd.code == 0);
    json j = json::parse(qd.out);
    CHECK(j["qdet"] == j["pfaffian"]);
    CHECK(j["agree"] == true);
}

TEST_CASE("cli: sample-posdef verifies") {
    auto pos = run_cli("sample-posdef --n 4 --ring C --seed 7");
    REQUIRE(pos.code == 0);
    json j = json::parse(pos.out);
    ExactMatrix m = matrix_from_json(j["matrix"]);
    CHECK(sylvester_posdef(m));
    CHECK(is_positive_network(network_from_json(j["network"])));
    auto verify = run_cli("verify", j["matrix"].dump());
    CHECK(verify.code == 0);
    CHECK(json::parse(verify.out)["ok"] == true);
}

TEST_CASE("cli: render emits svg") {
    auto gen = run_cli("gen --n 3 --seed 2");
    auto net = run_cli("to-network", gen.out);
    auto svg = run_cli("render --format svg", net.out);
    REQUIRE(svg.code == 0);
    CHECK(svg.out.find("<svg") == 0);
    // deterministic byte-for-byte
    CHECK(run_cli("render", net.out).out == svg.out);

    auto tilings = run_cli("tilings --n 3");
    json arr = json::parse(tilings.out);
    auto tsvg = run_cli("render", arr[0].dump());
    CHECK(tsvg.code == 0);
    CHECK(tsvg.out.find("<svg") == 0);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("no-such-command").code == 64);
    CHECK(run_cli("gen --bogus 1").code == 64);
    CHECK(run_cli("gen").code == 64);  // missing --n

    // identity matrix is non-generic: exit 3
    std::string id = R"({"n":2,"ring":"Q","entries":[["1/1","0/1"],["0/1","1/1"]]})";
    CHECK(run_cli("to-network", id).code == 3);

    // malformed input: exit 2
    CHECK(run_cli("to-network", "{not json").code == 2);
    CHECK(run_cli("qdet", run_cli("gen --n 2 --seed 1").out).code == 2);
}

#endif  // HEXANET_CLI
