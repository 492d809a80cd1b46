#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

#ifndef SEMIFLAG_BIN
#define SEMIFLAG_BIN "./semiflag"
#endif

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(SEMIFLAG_BIN) + " " +
                      args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("snake: reference output, byte for byte") {
    RunResult r = run("snake --lhs 2,3 --rhs 1,4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"S\":[3,2,1],\"k\":1}\n");
}

TEST_CASE("order compare: reference comparison") {
    RunResult r = run("order compare --n 8 --lhs \"123|46|1|1\" --rhs \"78|67|36|45\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "GT\n");
    RunResult eq = run("order compare --lhs \"1,2|3\" --rhs \"1,2|3\"");
    CHECK(eq.out == "EQ\n");
}

TEST_CASE("character local: the five-dimensional sp_4 fundamental") {
    RunResult r = run("character local --type C --n 2 --lambda 0,1 --qmax 8");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dimension"] == 5);
    CHECK(j["status"] == "polynomial");
}

TEST_CASE("malformed subsets exit with code 2") {
    CHECK(run("snake --lhs 2,,3 --rhs 1,4").exit_code == 2);
    CHECK(run("snake --lhs 2,3x --rhs 1,4").exit_code == 2);
    CHECK(run("allowed --type A --set 1,2").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verification failures exit with code 1") {
    // k' = k(I,J) is out of range: a usage error, not a verification one.
    CHECK(run("relations verify --lhs 2,3 --rhs 1,4 --kprime 1").exit_code == 2);
    // An inconclusive polynomiality window is a reportable failure.
    CHECK(run("character local --type A --n 3 --lambda 1,1 --qmax 2").exit_code == 1);
}

TEST_CASE("relations verify: snake family on a reference pair") {
    RunResult r = run("relations verify --lhs 1,4,5 --rhs 2,3,6 --trunc 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 2); // k = 2 relations
    for (const auto& rel : j)
        CHECK(rel["verified"] == true);
}

TEST_CASE("straighten minor agrees with the reference combination") {
    RunResult r = run("straighten minor --type C --n 2 --set 1,1b --seed 5");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verified"] == true);
    REQUIRE(j["result"].size() == 1);
    CHECK(j["result"][0]["coeff"] == "-1");
    CHECK(j["result"][0]["set"] == "2,2b");
}

TEST_CASE("identical config and seed give byte-identical output") {
    std::string cmd = "oracle sample --type C --n 2 --count 2 --seed 31 --trunc 3";
    RunResult a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"seed\":31") != std::string::npos);
}

TEST_CASE("SEMIFLAG_SEED is the seed fallback") {
    RunResult env = run("oracle sample --type A --n 2 --count 1 --trunc 2",
                        "SEMIFLAG_SEED=97");
    RunResult flag = run("oracle sample --type A --n 2 --count 1 --trunc 2 --seed 97");
    CHECK(env.exit_code == 0);
    CHECK(env.out == flag.out);
}

TEST_CASE("exported JSON reparses into the producing structures") {
    RunResult r = run("relations generate --lhs 2,3 --rhs 1,4");
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["family"] == "semiinf");
    CHECK(j[0]["pair"]["I"] == "2,3");
    CHECK(j[0]["terms"].size() == 3);
    for (const auto& t : j[0]["terms"]) {
        CHECK(t.contains("coeff"));
        CHECK(t.contains("deriv"));
        CHECK(t.contains("left"));
        CHECK(t.contains("right"));
    }

    RunResult b = run("basis verify --type A --r \"2,3=1|1,4=1\" --dmax 2");
    CHECK(b.exit_code == 0);
    auto bj = nlohmann::json::parse(b.out);
    CHECK(bj["ok"] == true);
    CHECK(bj["rows"].size() == 3);
}

TEST_CASE("basis enumerate honors the offset in its output") {
    RunResult r = run("basis enumerate --type A --r \"2,3=1|1,4=1\" --dmax 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const auto& mono : j)
        for (const auto& f : mono)
            if (f["set"] == "1,4")
                CHECK(f["jet"].get<int>() >= 1);
}

TEST_CASE("csv character export") {
    RunResult r = run("character local --type C --n 1 --lambda 1 --qmax 6 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("weight,q_power,coeff") == 0);
}
