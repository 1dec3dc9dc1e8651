#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "catch_amalgamated.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace bcq;
using namespace bcq::tools;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("bcq_test_" + name);
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BCQ_VERIFY_EXE) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("cli: check records", "[cli]") {
    const CheckRecord r = make_check("x", "identity", 1.0 + 1e-10, 1.0, 1e-9);
    CHECK(r.pass);
    CHECK(std::abs(r.rel_err - 1e-10) < 1e-15);
    const CheckRecord z = make_check("z", "identity", 1e-12, 0.0, 1e-9);
    CHECK(z.rel_err == z.abs_err);
    CHECK(z.pass);
    CHECK_FALSE(make_check("y", "identity", 1.1, 1.0, 1e-3).pass);
    const CheckRecord f = failed_check("f", "identity", 1e-9, "pole");
    CHECK_FALSE(f.pass);
    CHECK(std::isnan(f.lhs));
}

TEST_CASE("cli: empty report", "[cli]") {
    CertificationReport r;
    r.suite = "aw";
    const std::string js = to_json(r);
    CHECK(js.find("\"pass\": 0") != std::string::npos);
    CHECK(js.find("\"fail\": 0") != std::string::npos);
    CHECK(parse_json(js) == r);
}

TEST_CASE("cli: JSON round trip", "[cli]") {
    CertificationReport r;
    r.suite = "little";
    r.config_echo = {{"n", "2"}, {"q", "0.5"}};
    r.checks.push_back(make_check("b.norm", "norm identity", 0.123456789012345678, 0.123456789012345, 1e-8));
    r.checks.push_back(make_check("a.sum", "summation", -3.5, 2.0, 1e-9));
    r.checks.push_back(failed_check("c.bad", "weight", 1e-9, "pole at x=1"));
    r.checks.back().lhs = INFINITY;
    r.sort();
    CHECK(r.checks.front().name == "a.sum");
    const CertificationReport back = parse_json(to_json(r));
    REQUIRE(back.checks.size() == 3);
    for (std::size_t i = 0; i < 2; ++i) CHECK(back.checks[i] == r.checks[i]);
    CHECK(std::isinf(back.checks[2].lhs));
    CHECK(std::isnan(back.checks[2].rhs));
    CHECK(back.checks[2].note == "pole at x=1");
    CHECK(back.passed() == 1);
    CHECK(back.failed() == 2);
    CHECK(to_text(r).find("c.bad") != std::string::npos);
}

TEST_CASE("cli: complex parameters", "[cli]") {
    CHECK(parse_complex("0.5") == cplx(0.5, 0.0));
    CHECK(parse_complex("-0.3i") == cplx(0.0, -0.3));
    CHECK(parse_complex("0.2+0.3i") == cplx(0.2, 0.3));
    CHECK(parse_complex("0.2-0.3i") == cplx(0.2, -0.3));
    CHECK(parse_complex("1e-2-2e-1i") == cplx(0.01, -0.2));
    CHECK_THROWS_AS(parse_complex("abc"), ConfigError);
    CHECK_THROWS_AS(parse_complex("0.2+i0.3"), ConfigError);
}

TEST_CASE("cli: configuration file and overrides", "[cli]") {
    const auto path = temp_file("cfg.txt");
    {
        std::ofstream f(path);
        f << "# little family\nsuite = little\nn = 1\nq=0.4 # base\n\na = 0.5\n";
    }
    auto entries = read_config_file(path.string());
    CHECK(entries.at("suite") == "little");
    CHECK(entries.at("q") == "0.4");
    entries["a"] = "0.7";
    const SuiteConfig c = make_config(entries);
    CHECK(c.suite == "little");
    CHECK(c.n == 1);
    CHECK(c.q == 0.4);
    CHECK(c.a == 0.7);
    CHECK(c.b == default_config("little").b);
    CHECK(c.echo().at("suite") == "little");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_config_file(temp_file("missing").string()), IoError);
}

TEST_CASE("cli: invalid configurations", "[cli]") {
    CHECK_THROWS_AS(make_config({{"n", "4"}}), ConfigError);
    CHECK_THROWS_AS(make_config({{"colour", "red"}}), ConfigError);
    CHECK_THROWS_AS(make_config({{"suite", "nope"}}), ConfigError);
    CHECK_THROWS_AS(make_config({{"q", "1.5"}}), ConfigError);
    CHECK_THROWS_AS(make_config({{"n", "two"}}), ConfigError);
    CHECK_THROWS_AS(make_config({{"format", "xml"}}), ConfigError);
}

TEST_CASE("cli: shipped suites pass", "[cli]") {
    {
        SuiteConfig c = default_config("selberg");
        c.n = 1;
        const auto r = run_suite(c);
        CHECK(r.failed() == 0);
        bool beta = false;
        for (const auto& k : r.checks) beta = beta || k.name.find("q_beta") != std::string::npos;
        CHECK(beta);
    }
    {
        SuiteConfig c = default_config("qracah");
        c.n = 2;
        c.N = 2;
        const auto r = run_suite(c);
        CHECK(r.passed() > 0);
        CHECK(r.failed() == 0);
    }
    {
        SuiteConfig c = default_config("limits");
        c.kmax = 15;
        const auto r = run_suite(c);
        CHECK(r.passed() > 0);
        CHECK(r.failed() == 0);
    }
    for (const char* s : {"aw", "little", "big"}) {
        const auto r = run_suite(default_config(s));
        CHECK(r.passed() > 0);
        CHECK(r.failed() == 0);
    }
}

TEST_CASE("cli: reports are deterministic", "[cli]") {
    const SuiteConfig c = default_config("big");
    const std::string a = to_json(run_suite(c), false);
    const std::string b = to_json(run_suite(c), false);
    CHECK(a == b);
}

TEST_CASE("cli: a tight tolerance produces failures", "[cli]") {
    SuiteConfig c = default_config("little");
    c.tol = 1e-300;
    const auto r = run_suite(c);
    CHECK(r.failed() > 0);
    for (const auto& k : r.checks) CHECK(k.tol == 1e-300);
}

TEST_CASE("cli: exit codes", "[cli]") {
    const auto out = temp_file("report.json");
    CHECK(run_cli("--suite selberg --n 1 --out " + out.string()) == 0);
    std::ifstream f(out);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(parse_json(text).failed() == 0);
    std::filesystem::remove(out);
    CHECK(run_cli("--suite little --tol 1e-300") == 1);
    CHECK(run_cli("--suite aw --n 4") == 2);
    CHECK(run_cli("--suite selberg --n 1 --out /nonexistent/dir/r.json") == 3);
}
