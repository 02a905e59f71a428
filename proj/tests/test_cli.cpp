#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef QMAC_CLI_PATH
#error "QMAC_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QMAC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("macdonald text output in the g basis") {
    RunResult r = run("macdonald --shape 1,1 --beta 1 --route lowering --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "g[1,1] - g[2]");
}

TEST_CASE("json output is byte-identical across routes") {
    std::string shape = "2,1";
    RunResult gs = run("macdonald --shape " + shape + " --beta 1 --route gs --format json");
    for (const char* route : {"filtration", "lowering", "vertex"}) {
        RunResult r = run("macdonald --shape " + shape + " --beta 1 --route " +
                          route + " --format json");
        CHECK(r.exit_code == 0);
        CHECK(r.out == gs.out);
    }
}

TEST_CASE("rectangle-only route on a non-rectangle is a usage error") {
    CHECK(run("macdonald --shape 2,1 --beta 1 --route comb").exit_code == 2);
    CHECK(run("macdonald --shape 3,1,1 --beta 1 --route lowering").exit_code == 2);
}

TEST_CASE("size caps refuse oversized inputs") {
    CHECK(run("macdonald --shape 4,4,4,4 --beta 1 --route gs").exit_code == 3);
    CHECK(run("macdonald --shape 2,1 --beta 4 --route gs").exit_code == 3);
    CHECK(run("macdonald --shape 4,4,4,4 --beta 1 --route gs --max-weight 16")
              .exit_code == 0);
}

TEST_CASE("usage errors") {
    CHECK(run("macdonald --shape 2,1 --beta 1 --route bogus").exit_code == 2);
    CHECK(run("macdonald --shape x --beta 1").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("qdyson frobnicate --betas 1,1").exit_code == 2);
    CHECK(run("verify --suite nosuch").exit_code == 2);
}

TEST_CASE("qdyson modes") {
    CHECK(run("qdyson ct --betas 1,1").out == "1 + q\n");
    CHECK(run("qdyson kadell --betas 2 --a 1 --n 1").out == "1 + q\n");
    RunResult scan = run("qdyson scan --betas 1,1 --t 1 --cap 2 --format json");
    CHECK(scan.exit_code == 0);
    CHECK(scan.out.find("\"violations\": []") != std::string::npos);
    RunResult cl = run("qdyson cla --shape 1 --beta 2");
    CHECK(cl.exit_code == 0);
    CHECK(cl.out == "1 + q\n");  // (1-q^2)/(1-q)
}

TEST_CASE("jack command") {
    RunResult r = run("jack --shape 2,1 --beta 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"basis\":\"p\"") != std::string::npos);
}

TEST_CASE("verify command") {
    CHECK(run("verify --suite splitting --max-s 3 --max-beta 2").exit_code == 0);
    RunResult r = run("verify --suite routes --max-weight 4 --max-beta 2 --jobs 4");
    CHECK(r.exit_code == 0);
}

TEST_CASE("deterministic output") {
    std::string cmd = "macdonald --shape 2,2 --beta 2 --route comb --format json";
    CHECK(run(cmd).out == run(cmd).out);
}
