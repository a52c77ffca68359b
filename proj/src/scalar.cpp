#include "orbitq/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitq {

std::string crat_pretty(const CRat& z) {
    const bool has_re = sgn(z.re) != 0;
    const bool has_im = sgn(z.im) != 0;
    if (!has_re && !has_im) return "0";
    auto imag_part = [&]() -> std::string {
        if (z.im == 1) return "i";
        if (z.im == -1) return "-i";
        return rat_str(z.im) + "*i";
    };
    if (!has_im) return rat_str(z.re);
    if (!has_re) return imag_part();
    std::string im = z.im == 1 ? "i" : (z.im == -1 ? "-i" : rat_str(z.im) + "*i");
    std::string sep = im.front() == '-' ? "" : "+";
    return "(" + rat_str(z.re) + sep + im + ")";
}

Scalar Scalar::lambda(int power) {
    Scalar s;
    s.set_term({power, 0}, CRat(1));
    return s;
}

Scalar Scalar::sigma(int power) {
    Scalar s;
    s.set_term({0, power}, CRat(1));
    return s;
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

CRat Scalar::constant_value() const {
    if (terms_.empty()) return CRat();
    if (!is_constant()) throw std::domain_error("Scalar is not constant: " + str());
    return terms_.begin()->second;
}

Rat Scalar::rational_value() const {
    CRat c = constant_value();
    if (!c.is_real()) throw std::domain_error("Scalar is not real: " + str());
    return c.re;
}

int Scalar::deg_lambda() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.l);
    return d;
}

int Scalar::deg_sigma() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.s);
    return d;
}

CRat Scalar::coeff(int l, int s) const {
    auto it = terms_.find({l, s});
    return it == terms_.end() ? CRat() : it->second;
}

void Scalar::set_term(Mono m, const CRat& c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Scalar::Mono m{ma.l + mb.l, ma.s + mb.s};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                CRat p = ca * cb;
                if (!p.is_zero()) r.terms_[m] = std::move(p);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative Scalar power");
    Scalar r(1);
    for (int j = 0; j < k; ++j) r *= *this;
    return r;
}

Scalar Scalar::conjugated() const {
    Scalar r;
    for (const auto& [m, c] : terms_) r.terms_[m] = conj(c);
    return r;
}

CRat Scalar::eval(const CRat& lambda_value, const CRat& sigma_value) const {
    CRat out;
    for (const auto& [m, c] : terms_) {
        CRat t = c;
        for (int j = 0; j < m.l; ++j) t *= lambda_value;
        for (int j = 0; j < m.s; ++j) t *= sigma_value;
        out += t;
    }
    return out;
}

std::complex<double> Scalar::eval_c(std::complex<double> lambda_value,
                                    std::complex<double> sigma_value) const {
    std::complex<double> out = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = to_complex(c);
        for (int j = 0; j < m.l; ++j) t *= lambda_value;
        for (int j = 0; j < m.s; ++j) t *= sigma_value;
        out += t;
    }
    return out;
}

Scalar Scalar::lambda_to_i_lambda() const {
    Scalar r;
    const CRat i = CRat::unit_i();
    for (const auto& [m, c] : terms_) {
        CRat f = c;
        for (int j = 0; j < m.l; ++j) f *= i;
        r.set_term(m, f);
    }
    return r;
}

Scalar Scalar::substitute_sigma(const Scalar& value) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
        Scalar mono;
        mono.set_term({m.l, 0}, CRat(1));
        out += Scalar(c) * mono * value.pow(m.s);
    }
    return out;
}

Scalar Scalar::substitute_lambda(const CRat& value) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
        CRat f = c;
        for (int j = 0; j < m.l; ++j) f *= value;
        Scalar mono;
        mono.set_term({0, m.s}, CRat(1));
        out += Scalar(f) * mono;
    }
    return out;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coeff = crat_pretty(c);
        std::string mono;
        if (m.l == 1) mono = "lambda";
        else if (m.l > 1) mono = "lambda^" + std::to_string(m.l);
        if (m.s >= 1) {
            if (!mono.empty()) mono += "*";
            mono += m.s == 1 ? "sigma" : "sigma^" + std::to_string(m.s);
        }
        std::string term;
        if (mono.empty()) {
            term = coeff;
        } else if (coeff == "1") {
            term = mono;
        } else if (coeff == "-1") {
            term = "-" + mono;
        } else {
            term = coeff + "*" + mono;
        }
        if (first) {
            os << term;
            first = false;
        } else if (!term.empty() && term.front() == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
    }
    return os.str();
}

}  // namespace orbitq
