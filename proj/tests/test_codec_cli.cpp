#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "orbitq/json_codec.hpp"
#include "orbitq/sampling.hpp"

using namespace orbitq;

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = std::string(ORBITQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

}  // namespace

TEST_CASE("scalar json round trip") {
    auto rng = make_rng();
    for (int t = 0; t < 20; ++t) {
        Scalar s(CRat(rand_rat(rng), rand_rat(rng)));
        s += Scalar(rand_rat(rng)) * Scalar::lambda();
        s += Scalar(rand_rat(rng)) * Scalar::lambda(2) * Scalar::sigma();
        CHECK(scalar_from_json(scalar_to_json(s)) == s);
    }
}

TEST_CASE("symbol json matches the documented shape") {
    // lambda-power-indexed [num, den] pairs for sigma-free coefficients
    SymbolFunction f;
    f.set_term(1, 2, Scalar(rat(3, 4)) + Scalar(rat(-1, 2)) * Scalar::lambda());
    json j = symbol_to_json(f);
    CHECK(j["terms"].size() == 1);
    const json& t = j["terms"][0];
    CHECK(t["n"] == 1);
    CHECK(t["d"] == 2);
    CHECK(t["re"][0][0] == "3");
    CHECK(t["re"][0][1] == "4");
    CHECK(t["re"][1][0] == "-1");
    CHECK(t["re"][1][1] == "2");
    CHECK(symbol_from_json(j) == f);
}

TEST_CASE("symbol and trig json round trips") {
    auto rng = make_rng();
    for (int t = 0; t < 20; ++t) {
        SymbolFunction f = rand_symbol(rng);
        CHECK(symbol_from_json(symbol_to_json(f)) == f);
    }
    DiffOp1 d = build_lhat(AlgebraElement::X());
    DiffOp1 back = diffop_from_json(diffop_to_json(d));
    CHECK(back == d);
    CHECK(diffop_to_json(d)["var"] == "s");
}

TEST_CASE("band matrix export") {
    DiffOp1 d = build_lhat(AlgebraElement::Y());
    DiffOp1 inst{d.var, d.c1.substitute_lambda(CRat(rat(1, 2))),
                 d.c0.substitute_lambda(CRat(rat(1, 2)))};
    BandMatrix m = matrix_elements(inst, 2);
    json j = band_matrix_to_json(m);
    CHECK(j["half_width"] == 2);
    // diagonal entries -2 i n, exact strings
    bool found = false;
    for (const auto& e : j["entries"])
        if (e["row"] == 1 && e["col"] == 1) {
            CHECK(e["value"] == "0-2 i");
            found = true;
        }
    CHECK(found);
    std::string csv = band_matrix_to_csv(m);
    CHECK(csv.find("row,col,value") == 0);
    CHECK(csv.find("1,1,0-2 i") != std::string::npos);

    // formal entries refuse CSV
    CHECK_THROWS(band_matrix_to_csv(matrix_elements(build_lhat(AlgebraElement::X()), 2)));
}

TEST_CASE("cli classify") {
    int code = 0;
    std::string out = run_cli("classify --point 0,1,0", &code);
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["class"] == "one-sheeted");
    CHECK(j["casimir"] == "1");

    out = run_cli("classify --point 0,0,0", &code);
    CHECK(code == 0);
    CHECK(json::parse(out)["class"] == "origin");

    out = run_cli("classify --point 1/2,-3/4,2", &code);
    CHECK(code == 0);
    j = json::parse(out);
    CHECK(j["class"] == "two-sheeted");
    CHECK(j["sheet"] == "+");
}

TEST_CASE("cli golden payloads") {
    // frozen byte-level payloads for the canonical encodings
    CHECK(run_cli("classify --point 0,1,0") ==
          "{\"casimir\":\"1\",\"class\":\"one-sheeted\",\"lambda\":\"1\"}\n");
    CHECK(run_cli("normal-form --elem 0,1,0") ==
          "{\"form\":\"diagonal\",\"lambda\":\"1\",\"lambda_sq\":\"1\"}\n");
    CHECK(run_cli("compare-reps") ==
          "{\"detail\":\"all residuals identically zero\",\"residuals_zero\":true,"
          "\"sigma\":\"2*i*lambda\"}\n");
}

TEST_CASE("cli commutator check") {
    int code = 1;
    std::string out = run_cli("commutator-check --A 1,0,0 --B 0,1,0", &code);
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["equal"] == true);
    CHECK(j["lhs"] == "4*i*p");
    CHECK(j["rhs"] == "4*i*p");
}

TEST_CASE("cli star consumes and produces symbol files") {
    SymbolFunction f = hamiltonian_symbol(AlgebraElement::X());
    SymbolFunction g = hamiltonian_symbol(AlgebraElement::H());
    const std::string fp = "/tmp/orbitq_f.json", gp = "/tmp/orbitq_g.json";
    {
        std::ofstream of(fp);
        of << canonical_dump(symbol_to_json(f));
        std::ofstream og(gp);
        og << canonical_dump(symbol_to_json(g));
    }
    int code = 1;
    std::string out = run_cli("star --lhs " + fp + " --rhs " + gp, &code);
    CHECK(code == 0);
    CHECK(symbol_from_json(json::parse(out)) == star(f, g));

    // file output path
    const std::string op = "/tmp/orbitq_fg.json";
    run_cli("star --lhs " + fp + " --rhs " + gp + " --out " + op, &code);
    CHECK(code == 0);
    std::ifstream in(op);
    json j;
    in >> j;
    CHECK(symbol_from_json(j) == star(f, g));
    std::remove(fp.c_str());
    std::remove(gp.c_str());
    std::remove(op.c_str());
}

TEST_CASE("cli matrix csv output") {
    const std::string op = "/tmp/orbitq_m.csv";
    int code = 1;
    run_cli("matrix --A 0,0,1 --lambda 1/2 --modes 2 --out " + op, &code);
    CHECK(code == 0);
    std::ifstream in(op);
    std::string first;
    std::getline(in, first);
    CHECK(first == "row,col,value");
    std::remove(op.c_str());
}

TEST_CASE("cli lhat and matrix") {
    int code = 1;
    std::string out = run_cli("lhat --A 0,0,1", &code);
    CHECK(code == 0);
    DiffOp1 d = diffop_from_json(json::parse(out));
    CHECK(d == build_lhat(AlgebraElement::Y()));

    out = run_cli("lhat --A 0,0,1 --as-printed", &code);
    CHECK(code == 0);
    CHECK(diffop_from_json(json::parse(out)) == build_lhat(AlgebraElement::Y(), true));

    out = run_cli("matrix --A 0,0,1 --lambda 1/2 --modes 2", &code);
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["half_width"] == 2);
}

TEST_CASE("cli polarization") {
    int code = 1;
    std::string out = run_cli("polarization --orbit two-sheeted --lambda 3/8", &code);
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["pass"] == true);
    CHECK(j["integral"] == true);
    CHECK(j["k"] == 3);
}

TEST_CASE("cli table format") {
    int code = 1;
    std::string out = run_cli("classify --point 0,1,0 --format table", &code);
    CHECK(code == 0);
    CHECK(out.find("class\tone-sheeted") != std::string::npos);
    CHECK(out.find("casimir\t1") != std::string::npos);
}

TEST_CASE("cli verify symbolic suite") {
    int code = 1;
    std::string out = run_cli("verify --suite symbolic", &code);
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["pass"] == true);
    CHECK(j["criteria"].size() == 9);
}

TEST_CASE("cli usage errors exit 2") {
    int code = 0;
    run_cli("no-such-command", &code);
    CHECK(code == 2);
    run_cli("classify --point 1,2", &code);
    CHECK(code == 2);
    run_cli("classify", &code);
    CHECK(code == 2);
}
