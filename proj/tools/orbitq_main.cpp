// orbitq: command-line front end for the exact coadjoint-orbit engine.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbitq/json_codec.hpp"
#include "orbitq/lie.hpp"
#include "orbitq/operator_rep.hpp"
#include "orbitq/orbits.hpp"
#include "orbitq/polarization.hpp"
#include "orbitq/symbol.hpp"
#include "orbitq/verify.hpp"

namespace {

using orbitq::json;

std::vector<orbitq::Rat> parse_triple(const std::string& csv) {
    std::vector<orbitq::Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(orbitq::rat_from_string(item));
    if (out.size() != 3) throw CLI::ValidationError("expected three comma-separated rationals");
    return out;
}

orbitq::AlgebraElement parse_algebra(const std::string& csv) {
    auto v = parse_triple(csv);
    return {orbitq::Scalar(v[0]), orbitq::Scalar(v[1]), orbitq::Scalar(v[2])};
}

orbitq::DualElement parse_dual(const std::string& csv) {
    auto v = parse_triple(csv);
    return {orbitq::Scalar(v[0]), orbitq::Scalar(v[1]), orbitq::Scalar(v[2])};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& payload, const std::string& format) {
    if (format == "table") {
        for (const auto& [key, value] : payload.items())
            std::cout << key << "\t"
                      << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    } else {
        std::cout << orbitq::canonical_dump(payload) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic + numeric engine for SL(2,R) coadjoint orbits"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand
    std::string format = "json";
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "classify a dual point");
    std::string point_csv;
    cmd_classify->add_option("--point", point_csv, "x,h,y as rationals")->required();

    // normal-form
    auto* cmd_nf = app.add_subcommand("normal-form", "conjugacy normal form of an element");
    std::string elem_csv;
    cmd_nf->add_option("--elem", elem_csv, "a,b,c as rationals")->required();

    // polarization
    auto* cmd_pol = app.add_subcommand("polarization", "run the polarization checklist");
    std::string orbit_name;
    std::string lambda_str = "1";
    cmd_pol->add_option("--orbit", orbit_name, "one-sheeted | cone | two-sheeted")
        ->required()
        ->check(CLI::IsMember({"one-sheeted", "cone", "two-sheeted"}));
    cmd_pol->add_option("--lambda", lambda_str, "rational lambda");

    // star
    auto* cmd_star = app.add_subcommand("star", "Moyal product of two symbol files");
    std::string lhs_path, rhs_path, out_path;
    cmd_star->add_option("--lhs", lhs_path, "symbol JSON")->required();
    cmd_star->add_option("--rhs", rhs_path, "symbol JSON")->required();
    cmd_star->add_option("--out", out_path, "write the product here instead of stdout");

    // commutator-check
    auto* cmd_comm = app.add_subcommand("commutator-check", "star commutator identity");
    std::string a_csv, b_csv;
    cmd_comm->add_option("--A", a_csv, "a,b,c")->required();
    cmd_comm->add_option("--B", b_csv, "a,b,c")->required();

    // lhat
    auto* cmd_lhat = app.add_subcommand("lhat", "quantized operator of an element");
    std::string lhat_csv;
    bool as_printed = false;
    cmd_lhat->add_option("--A", lhat_csv, "a,b,c")->required();
    cmd_lhat->add_flag("--as-printed", as_printed, "single-factor diagnostic variant");

    // compare-reps
    auto* cmd_cmp = app.add_subcommand("compare-reps",
                                       "match the classical and quantized operators");

    // matrix
    auto* cmd_matrix = app.add_subcommand("matrix", "band matrix on Fourier modes");
    std::string m_csv, m_lambda = "1", m_out;
    int modes = 8;
    cmd_matrix->add_option("--A", m_csv, "a,b,c")->required();
    cmd_matrix->add_option("--lambda", m_lambda, "rational lambda");
    cmd_matrix->add_option("--modes", modes, "half width N");
    cmd_matrix->add_option("--out", m_out, "write matrix JSON here");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite, "symbolic | numeric | all")
        ->check(CLI::IsMember({"symbolic", "numeric", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*cmd_classify) {
            emit(orbitq::orbit_class_to_json(orbitq::classify(parse_dual(point_csv))), format);
            return 0;
        }
        if (*cmd_nf) {
            emit(orbitq::normal_form_to_json(orbitq::normal_form(parse_algebra(elem_csv))),
                 format);
            return 0;
        }
        if (*cmd_pol) {
            orbitq::OrbitFamily fam = orbit_name == "one-sheeted"
                                          ? orbitq::OrbitFamily::OneSheeted
                                          : (orbit_name == "cone" ? orbitq::OrbitFamily::Cone
                                                                  : orbitq::OrbitFamily::TwoSheeted);
            const orbitq::Rat lambda = orbitq::rat_from_string(lambda_str);
            auto [F, eta] = orbitq::family_polarization(fam, orbitq::Scalar(lambda));
            orbitq::PolarizationReport rep = orbitq::check_polarization(F, eta);
            json payload = orbitq::polarization_report_to_json(rep);
            auto [integral, k] = orbitq::integrality_check(lambda);
            payload["integral"] = integral;
            if (k) payload["k"] = *k;
            emit(payload, format);
            return rep.pass() ? 0 : 1;
        }
        if (*cmd_star) {
            orbitq::SymbolFunction f = orbitq::symbol_from_json(load_json(lhs_path));
            orbitq::SymbolFunction g = orbitq::symbol_from_json(load_json(rhs_path));
            json out = orbitq::symbol_to_json(orbitq::star(f, g));
            if (!out_path.empty()) {
                std::ofstream o(out_path);
                o << orbitq::canonical_dump(out) << "\n";
                emit(json{{"written", out_path}}, format);
            } else {
                emit(out, format);
            }
            return 0;
        }
        if (*cmd_comm) {
            auto w = orbitq::star_commutator_check(parse_algebra(a_csv), parse_algebra(b_csv));
            json payload{{"equal", w.equal}, {"lhs", w.lhs.str()}, {"rhs", w.rhs.str()}};
            emit(payload, format);
            return w.equal ? 0 : 1;
        }
        if (*cmd_lhat) {
            emit(orbitq::diffop_to_json(orbitq::build_lhat(parse_algebra(lhat_csv), as_printed)),
                 format);
            return 0;
        }
        if (*cmd_cmp) {
            orbitq::RepComparison cmp = orbitq::compare_reps();
            json payload{{"sigma", cmp.sigma.str()},
                         {"residuals_zero", cmp.residuals_zero},
                         {"detail", cmp.detail}};
            emit(payload, format);
            return cmp.residuals_zero ? 0 : 1;
        }
        if (*cmd_matrix) {
            orbitq::DiffOp1 d = orbitq::build_lhat(parse_algebra(m_csv));
            const orbitq::CRat lambda(orbitq::rat_from_string(m_lambda));
            orbitq::DiffOp1 inst{d.var, d.c1.substitute_lambda(lambda),
                                 d.c0.substitute_lambda(lambda)};
            orbitq::BandMatrix m = orbitq::matrix_elements(inst, modes);
            if (!m_out.empty()) {
                std::ofstream o(m_out);
                if (m_out.size() > 4 && m_out.substr(m_out.size() - 4) == ".csv")
                    o << orbitq::band_matrix_to_csv(m);
                else
                    o << orbitq::canonical_dump(orbitq::band_matrix_to_json(m)) << "\n";
                emit(json{{"written", m_out}}, format);
            } else {
                emit(orbitq::band_matrix_to_json(m), format);
            }
            return 0;
        }
        if (*cmd_verify) {
            orbitq::verify::Suite s = suite == "symbolic"
                                          ? orbitq::verify::Suite::Symbolic
                                          : (suite == "numeric" ? orbitq::verify::Suite::Numeric
                                                                : orbitq::verify::Suite::All);
            auto results = orbitq::verify::run_suite(s);
            json arr = json::array();
            for (const auto& r : results) {
                json entry{{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                           {"detail", r.detail}};
                if (!r.metrics.empty()) {
                    json m = json::object();
                    for (const auto& [key, value] : r.metrics)
                        m[key] = json{{"approx", value}};
                    entry["metrics"] = m;
                }
                arr.push_back(entry);
                std::cerr << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": "
                          << r.name << " — " << r.detail << "\n";
            }
            const bool ok = orbitq::verify::all_pass(results);
            emit(json{{"criteria", arr}, {"pass", ok}}, format);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
