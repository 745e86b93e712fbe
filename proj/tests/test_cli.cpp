#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "piser/catalog.hpp"
#include "piser/formula_io.hpp"

using namespace piser;
namespace fs = std::filesystem;

namespace {

#ifndef PISERIES_BIN
#error "PISERIES_BIN must point at the CLI binary"
#endif

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    std::string capture = (fs::temp_directory_path() / ("piser_cli_" + std::to_string(counter++) + ".out")).string();
    std::string cmd = std::string(PISERIES_BIN) + " " + args + " > " + capture + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    fs::remove(capture);
    return r;
}

std::string tmp_path(const std::string& name) {
    return (fs::temp_directory_path() / name).string();
}

FormulaFile gosper_file() {
    FormulaFile ff;
    ff.formula.m = 3;
    ff.formula.p = 1;
    ff.formula.a = BigInt(2);
    ff.formula.r = BigInt(1);
    ff.formula.S_int = {BigInt(-6), BigInt(50)};
    return ff;
}

}  // namespace

TEST_CASE("formula file round trip") {
    FormulaFile ff = gosper_file();
    ff.comment = "degree-one series";
    std::string text = render_formula_file(ff);
    CHECK(text.find("pi-series v1\n") == 0);
    CHECK(text.find("m=3 p=1 a=2 r=1\n") != std::string::npos);
    CHECK(text.find("S: -6 50\n") != std::string::npos);
    FormulaFile back = parse_formula_file(text);
    CHECK(back.formula.m == 3);
    CHECK(back.formula.S_int == ff.formula.S_int);
    CHECK(parse_formula_file(render_formula_file(back)).formula.S_int == ff.formula.S_int);

    // with a certificate section of rational coefficients
    ff.rcheck = Poly{Rational(0), Rational(1, 3), Rational(-7, 5)};
    FormulaFile back2 = parse_formula_file(render_formula_file(ff));
    REQUIRE(back2.rcheck.has_value());
    CHECK(*back2.rcheck == *ff.rcheck);

    CHECK_THROWS_AS(parse_formula_file("nonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_formula_file("pi-series v1\nm=3 p=1 a=2 r=1\n"), std::invalid_argument);
}

TEST_CASE("formula file round trip, randomized") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    for (int t = 0; t < 20; ++t) {
        FormulaFile ff;
        ff.formula.m = 8;
        ff.formula.p = 4;
        ff.formula.a = BigInt(-4);
        ff.formula.r = BigInt(1 + std::abs(d(rng)));
        for (int i = 0; i < 5; ++i) ff.formula.S_int.push_back(BigInt(d(rng)));
        if (ff.formula.S_int.back().is_zero()) ff.formula.S_int.back() = BigInt(1);
        FormulaFile back = parse_formula_file(render_formula_file(ff));
        REQUIRE(back.formula.S_int == ff.formula.S_int);
        REQUIRE(back.formula.r == ff.formula.r);
    }
}

TEST_CASE("prove writes the k=1 certificate and exits 0") {
    std::string out = tmp_path("piser_k1.pis");
    RunResult r = run("prove --k 1 --out " + out);
    CHECK(r.exit_code == 0);
    FormulaFile ff = read_formula_file(out);
    CHECK(ff.formula.r == BigInt(11025));
    REQUIRE(ff.formula.S_int.size() == 5);
    CHECK(ff.formula.S_int[0] == BigInt(-89286));
    REQUIRE(ff.rcheck.has_value());
    fs::remove(out);
}

TEST_CASE("prove rejects k out of range") {
    CHECK(run("prove --k 0").exit_code == 2);
    CHECK(run("prove --k 9").exit_code == 2);
}

TEST_CASE("eval prints digits and fails cleanly on a missing file") {
    std::string f = tmp_path("piser_gosper.pis");
    write_formula_file(f, gosper_file());
    RunResult r = run("eval " + f + " --digits 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3.") == 0);
    CHECK(r.out.find("1415926535") != std::string::npos);
    fs::remove(f);

    CHECK(run("eval " + tmp_path("piser_missing.pis") + " --digits 50").exit_code == 2);
    std::string f2 = tmp_path("piser_gosper2.pis");
    write_formula_file(f2, gosper_file());
    CHECK(run("eval " + f2 + " --digits 0").exit_code == 2);
    fs::remove(f2);
}

TEST_CASE("candidates lists the known rows") {
    RunResult r = run("candidates --max-m 16");
    CHECK(r.exit_code == 0);
    for (const char* row : {"3\t1\t2", "7\t2\t2", "8\t4\t-4", "10\t4\t4", "12\t4\t-4", "16\t8\t16"})
        CHECK(r.out.find(row) != std::string::npos);
}

TEST_CASE("det prints the factorization with a match verdict") {
    RunResult r = run("det --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2^91 · 3^8 · 5^7 · 7^2") != std::string::npos);
    CHECK(r.out.find("match: yes") != std::string::npos);
}

TEST_CASE("identity and chain commands") {
    RunResult t = run("thm2 --k 1 --trials 3 --seed 42");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("3/3 points match") != std::string::npos);
    RunResult l = run("lemma7 --k 1 --trials 3 --seed 42");
    CHECK(l.exit_code == 0);
    RunResult c = run("chain --k 1");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("all checks passed") != std::string::npos);
    CHECK(run("chain --k 5").exit_code == 2);
}

TEST_CASE("catalog add verifies entries and the index stays consistent") {
    std::string dir = tmp_path("piser_catalog");
    fs::remove_all(dir);

    std::string f = tmp_path("piser_gosper3.pis");
    write_formula_file(f, gosper_file());
    RunResult ok = run("catalog-add " + f + " --name gosper --dir " + dir);
    CHECK(ok.exit_code == 0);

    RunResult dup = run("catalog-add " + f + " --name gosper --dir " + dir);
    CHECK(dup.exit_code == 2);

    // a corrupted formula must be refused (exit 1: verification failure)
    FormulaFile bad = gosper_file();
    bad.formula.S_int[0] = BigInt(-5);
    std::string fb = tmp_path("piser_bad.pis");
    write_formula_file(fb, bad);
    RunResult rb = run("catalog-add " + fb + " --name broken --dir " + dir);
    CHECK(rb.exit_code == 1);

    RunResult ls = run("catalog-list --dir " + dir);
    CHECK(ls.exit_code == 0);
    CHECK(ls.out.find("gosper") != std::string::npos);
    CHECK(ls.out.find("broken") == std::string::npos);

    // index entries correspond 1:1 to formula files
    Catalog cat(dir);
    auto entries = cat.list();
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].verified_digits >= 100);
    CHECK(fs::exists(cat.formula_path(entries[0].name)));

    fs::remove(f);
    fs::remove(fb);
    fs::remove_all(dir);
}

TEST_CASE("catalog directory comes from the environment when --dir is absent") {
    std::string dir = tmp_path("piser_catalog_env");
    fs::remove_all(dir);
    std::string f = tmp_path("piser_gosper_env.pis");
    write_formula_file(f, gosper_file());
    setenv("PI_SERIES_CATALOG", dir.c_str(), 1);
    Catalog cat("");
    cat.add("gosper", gosper_file());
    CHECK(cat.dir() == dir);
    CHECK(cat.list().size() == 1);
    unsetenv("PI_SERIES_CATALOG");
    fs::remove(f);
    fs::remove_all(dir);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("discover --m 3 --p 3 --a 2").exit_code == 2);
}
