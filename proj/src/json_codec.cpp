#include "orbitq/json_codec.hpp"

#include <sstream>

namespace orbitq {

namespace {

json rat_pair(const Rat& r) {
    return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rat rat_from_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den]");
    auto piece = [](const json& v) -> std::string {
        return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
    };
    return rat_from_string(piece(j[0]) + "/" + piece(j[1]));
}

// One component (real or imaginary part) of a Scalar as a lambda-indexed
// array; entries are [num, den] or sigma-indexed arrays of [num, den].
json component_to_json(const Scalar& s, bool imag) {
    const int dl = s.deg_lambda(), ds = s.deg_sigma();
    json out = json::array();
    for (int l = 0; l <= dl; ++l) {
        if (ds == 0) {
            CRat c = s.coeff(l, 0);
            out.push_back(rat_pair(imag ? c.im : c.re));
        } else {
            json inner = json::array();
            for (int k = 0; k <= ds; ++k) {
                CRat c = s.coeff(l, k);
                inner.push_back(rat_pair(imag ? c.im : c.re));
            }
            out.push_back(inner);
        }
    }
    return out;
}

void component_from_json(const json& j, bool imag, Scalar& into) {
    for (size_t l = 0; l < j.size(); ++l) {
        const json& entry = j[l];
        auto put = [&](int spow, const Rat& r) {
            if (sgn(r) == 0) return;
            CRat c = into.coeff(int(l), spow);
            if (imag)
                c.im = r;
            else
                c.re = r;
            into.set_term({int(l), spow}, c);
        };
        if (entry.is_array() && !entry.empty() && entry[0].is_array()) {
            for (size_t k = 0; k < entry.size(); ++k) put(int(k), rat_from_pair(entry[k]));
        } else {
            put(0, rat_from_pair(entry));
        }
    }
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    return json{{"re", component_to_json(s, false)}, {"im", component_to_json(s, true)}};
}

Scalar scalar_from_json(const json& j) {
    Scalar s;
    if (j.contains("re")) component_from_json(j.at("re"), false, s);
    if (j.contains("im")) component_from_json(j.at("im"), true, s);
    return s;
}

json symbol_to_json(const SymbolFunction& f) {
    json terms = json::array();
    for (const auto& [k, c] : f.terms()) {
        json t{{"n", k.n}, {"d", k.d}};
        t["re"] = component_to_json(c, false);
        t["im"] = component_to_json(c, true);
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

SymbolFunction symbol_from_json(const json& j) {
    SymbolFunction f;
    for (const auto& t : j.at("terms")) {
        Scalar c;
        if (t.contains("re")) component_from_json(t.at("re"), false, c);
        if (t.contains("im")) component_from_json(t.at("im"), true, c);
        f.set_term(t.at("n").get<int>(), t.at("d").get<int>(), c);
    }
    return f;
}

json trigpoly_to_json(const TrigPoly& f) {
    json terms = json::array();
    for (const auto& [n, c] : f.terms()) {
        json t{{"n", n}};
        t["re"] = component_to_json(c, false);
        t["im"] = component_to_json(c, true);
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

TrigPoly trigpoly_from_json(const json& j) {
    TrigPoly f;
    for (const auto& t : j.at("terms")) {
        Scalar c;
        if (t.contains("re")) component_from_json(t.at("re"), false, c);
        if (t.contains("im")) component_from_json(t.at("im"), true, c);
        f.set_term(t.at("n").get<int>(), c);
    }
    return f;
}

json diffop_to_json(const DiffOp1& d) {
    return json{{"var", d.var == OpVar::S ? "s" : "theta"},
                {"c1", trigpoly_to_json(d.c1)},
                {"c0", trigpoly_to_json(d.c0)}};
}

DiffOp1 diffop_from_json(const json& j) {
    DiffOp1 d;
    const std::string v = j.at("var").get<std::string>();
    if (v == "s")
        d.var = OpVar::S;
    else if (v == "theta")
        d.var = OpVar::Theta;
    else
        throw std::invalid_argument("unknown operator variable: " + v);
    d.c1 = trigpoly_from_json(j.at("c1"));
    d.c0 = trigpoly_from_json(j.at("c0"));
    return d;
}

json orbit_class_to_json(const OrbitClass& c) {
    json j{{"class", orbit_tag_name(c.tag)}, {"casimir", rat_str(c.casimir)}};
    if (c.tag == OrbitTag::ConeSheet || c.tag == OrbitTag::TwoSheeted)
        j["sheet"] = c.sheet_sign > 0 ? "+" : "-";
    if (c.lambda) j["lambda"] = rat_str(*c.lambda);
    return j;
}

json normal_form_to_json(const NormalForm& f) {
    json j{{"form", normal_form_name(f.tag)}, {"lambda_sq", rat_str(f.lambda_sq)}};
    if (f.lambda) j["lambda"] = rat_str(*f.lambda);
    return j;
}

json polarization_report_to_json(const PolarizationReport& r) {
    return json{{"is_subalgebra", r.is_subalgebra},
                {"contains_stabilizer", r.contains_stabilizer},
                {"ad_invariant", r.ad_invariant},
                {"m_real_subalgebra", r.m_real_subalgebra},
                {"pukanszky", r.pukanszky},
                {"character_exponent", r.character_exponent.str()},
                {"component_characters", r.component_characters},
                {"pass", r.pass()}};
}

json band_matrix_to_json(const BandMatrix& m) {
    const int N = m.half_width();
    json entries = json::array();
    for (int row = -N; row <= N; ++row)
        for (int col = -N; col <= N; ++col) {
            const Scalar& v = m.at(row, col);
            if (v.is_zero()) continue;
            json e{{"row", row}, {"col", col}};
            e["value"] = v.is_constant() ? crat_str(v.constant_value()) : v.str();
            entries.push_back(e);
        }
    return json{{"half_width", N}, {"bandwidth", m.bandwidth()}, {"entries", entries}};
}

std::string band_matrix_to_csv(const BandMatrix& m) {
    const int N = m.half_width();
    std::ostringstream os;
    os << "row,col,value\n";
    for (int row = -N; row <= N; ++row)
        for (int col = -N; col <= N; ++col) {
            const Scalar& v = m.at(row, col);
            if (v.is_zero()) continue;
            if (!v.is_constant())
                throw std::domain_error("CSV export requires instantiated entries");
            os << row << "," << col << "," << crat_str(v.constant_value()) << "\n";
        }
    return os.str();
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace orbitq
