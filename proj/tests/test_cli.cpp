#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef CANONICAL_AUT_BIN
#error "CANONICAL_AUT_BIN must point at the built binary"
#endif
#ifndef CANONAUT_TEST_DIR
#error "CANONAUT_TEST_DIR must point at the test source directory"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CANONICAL_AUT_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            if (!cur.empty()) lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

} // namespace

TEST_CASE("analyze emits the order and structure in text mode") {
    RunResult r = run("analyze \"w^2 - z^5 - x*y^7*z - x^9*y\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("order:        62") != std::string::npos);
    CHECK(r.out.find("C_62") != std::string::npos);
}

TEST_CASE("analyze --json matches the stable schema") {
    RunResult r = run("--json analyze \"w^2 - z^5 - x^2*y^6*z - x^8*y^2\"");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["order"] == 44);
    CHECK(j["support_size"] == 2);
    CHECK(j["kernel_order"] == 2);
    CHECK(j["structure"]["name"] == "C_2 × C_22");
    CHECK(j["structure"]["shape"] == "abelian_product");
    CHECK(j["mobius_type"] == "C_22");
    CHECK(j["generators"].is_array());
    CHECK(j["tolerances"]["cluster"] == 1e-6);
    CHECK(j["tolerances"]["match"] == 1e-7);
}

TEST_CASE("exit codes distinguish usage, invalid surfaces and breakdowns") {
    CHECK(run("analyze \"w^2 - z^5 - x^10 - y^10\"").exit_code == 0);
    CHECK(run("analyze").exit_code == 1);                      // usage
    CHECK(run("frobnicate x").exit_code == 1);                 // unknown subcommand
    CHECK(run("analyze \"w^2 - x^10\"").exit_code == 2);       // V1 violation
    CHECK(run("analyze \"w^2 - z^5 - x^10 +\"").exit_code == 2); // parse error
    CHECK(run("analyze \"w^2 - z^5 - x^2*y^6*z - x*y^3*z^3\"").exit_code == 2); // infinite
    // two roots separated by 3e-6: inside the ambiguity band
    RunResult ill = run(
        "analyze \"w^2 - z^5 - x^2*y^8 + 2000003/1000000*x*y^9 - 1000003/1000000*y^10\"");
    CHECK(ill.exit_code == 3);
}

TEST_CASE("invalid surfaces report their violations as JSON") {
    RunResult r = run("--json analyze \"w^2 - x^10\"");
    REQUIRE(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j["valid"] == false);
    REQUIRE(j["violations"].is_array());
    bool has_v1 = false;
    for (const auto& v : j["violations"])
        if (v["code"] == "V1") has_v1 = true;
    CHECK(has_v1);
}

TEST_CASE("tightening the cluster tolerance unlocks near-degenerate inputs") {
    // at the default tolerance the two roots 3e-6 apart sit in the
    // ambiguity band; at 1e-8 they count as honest distinct points
    std::string eq =
        "\"w^2 - z^5 - x^2*y^8 + 2000003/1000000*x*y^9 - 1000003/1000000*y^10\"";
    CHECK(run("analyze " + eq).exit_code == 3);
    RunResult r = run("--json --cluster-tol 1e-8 analyze " + eq);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["order"] == 20); // swap of the two close points times the C_10 kernel
    CHECK(j["support_size"] == 3);
}

TEST_CASE("validate reports without assembling") {
    CHECK(run("validate \"w^2 - z^5 - x^10 - y^10\"").exit_code == 0);
    RunResult r = run("--json validate \"w^2 - z^5 - x^5*y^5\"");
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j["valid"] == false);
    CHECK(j["support_size"] == 2);
}

TEST_CASE("batch processes the listed equations in order") {
    std::string path = std::string(CANONAUT_TEST_DIR) + "/data/prime_witnesses.txt";
    RunResult r = run("batch " + path);
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 7);
    std::vector<int> expected{62, 44, 52, 34, 38, 46, 62};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        json j = json::parse(lines[i]);
        CHECK(j["order"] == expected[i]);
    }
}

TEST_CASE("batch tolerates bad lines and empty files") {
    char tmpl[] = "/tmp/canonaut_batch_XXXXXX";
    int fd = mkstemp(tmpl);
    REQUIRE(fd >= 0);
    {
        std::ofstream f(tmpl);
        f << "# comment line\n";
        f << "w^2 - z^5 - x*y^7*z - x^9*y\n";
        f << "this is not an equation\n";
        f << "w^2 - z^5 - x^2*y^6*z - x^8*y^2\n";
    }
    RunResult r = run(std::string("batch ") + tmpl);
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(json::parse(lines[0])["order"] == 62);
    CHECK(json::parse(lines[1]).contains("error"));
    CHECK(json::parse(lines[2])["order"] == 44);

    {
        std::ofstream f(tmpl);
        f << "# nothing here\n";
    }
    RunResult empty = run(std::string("batch ") + tmpl);
    CHECK(empty.exit_code == 0);
    CHECK(lines_of(empty.out).empty());
    std::remove(tmpl);

    CHECK(run("batch /nonexistent/file.txt").exit_code == 1);
}

TEST_CASE("batch with several jobs keeps the input order") {
    std::string path = std::string(CANONAUT_TEST_DIR) + "/data/prime_witnesses.txt";
    RunResult serial = run("batch " + path);
    RunResult parallel = run("--jobs 3 batch " + path);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("survey emits the prime table") {
    RunResult r = run("--json survey");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["max_det"] == 80);
    CHECK(j["primes"] == json::array({2, 3, 5, 7, 11, 13, 17, 19, 23, 31}));
    CHECK(j["witnesses"].contains("31"));
    // the witness for 31 really has an automorphism of order 31
    RunResult w = run("--json analyze \"" + j["witnesses"]["31"].get<std::string>() + "\"");
    REQUIRE(w.exit_code == 0);
    CHECK(json::parse(w.out)["order"].get<int>() % 31 == 0);
}

TEST_CASE("the hidden oracle subcommand cross-checks the counts") {
    RunResult r = run("oracle diagonal \"w^2 - z^5 - x*y^7*z - x^9*y\"");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 62);
    CHECK(j["modulus"] == 62);

    RunResult cfg = run("oracle config \"w^2 - z^5 - x^10 - y^10\"");
    REQUIRE(cfg.exit_code == 0);
    CHECK(json::parse(cfg.out)["count"] == 20);
}

TEST_CASE("analysis JSON matches the golden files") {
    struct Golden {
        const char* equation;
        const char* file;
    };
    for (const Golden& g : {Golden{"w^2 - z^5 - x*y^7*z - x^9*y", "golden/cyclic62.json"},
                            Golden{"w^2 - z^5 - x^2*y^6*z - x^8*y^2", "golden/product44.json"},
                            Golden{"w^2 - z^5 - x^10 - y^10", "golden/extension200.json"},
                            Golden{"w^2 - x^10", "golden/invalid_v1.json"}}) {
        std::ifstream f(std::string(CANONAUT_TEST_DIR) + "/" + g.file);
        REQUIRE(f.good());
        json want = json::parse(f);

        RunResult r = run(std::string("--json analyze \"") + g.equation + "\"");
        json got = json::parse(r.out);

        // generators carry floating point; compare them by count and value
        json got_gens = got["generators"];
        json want_gens = want["generators"];
        got.erase("generators");
        want.erase("generators");
        INFO(g.file);
        CHECK(got == want);
        REQUIRE(got_gens.size() == want_gens.size());
        for (std::size_t i = 0; i < got_gens.size(); ++i)
            for (int e = 0; e < 4; ++e)
                for (int part = 0; part < 2; ++part)
                    CHECK(got_gens[i][e][part].get<double>() ==
                          Approx(want_gens[i][e][part].get<double>()).margin(1e-9));
    }
}
