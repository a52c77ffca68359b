#include "orbitq/operator_rep.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitq {

TrigPoly TrigPoly::mode(int n) {
    TrigPoly f;
    f.set_term(n, Scalar(1));
    return f;
}

TrigPoly TrigPoly::cos(int n) {
    TrigPoly f;
    Scalar half(CRat(rat(1, 2)));
    f.set_term(n, half);
    f.set_term(-n, half);
    return f;
}

TrigPoly TrigPoly::sin(int n) {
    TrigPoly f;
    Scalar c(CRat(Rat(0), rat(-1, 2)));
    f.set_term(n, c);
    f.set_term(-n, -c);
    return f;
}

Scalar TrigPoly::coeff(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Scalar() : it->second;
}

void TrigPoly::set_term(int n, const Scalar& c) {
    if (c.is_zero())
        terms_.erase(n);
    else
        terms_[n] = c;
}

int TrigPoly::bandwidth() const {
    int b = 0;
    for (const auto& [n, c] : terms_) b = std::max(b, std::abs(n));
    return b;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r;
    for (const auto& [n, c] : terms_) r.terms_[n] = -c;
    return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [n, c] : o.terms_) {
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            terms_[n] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += -o; }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    for (const auto& [na, ca] : a.terms_)
        for (const auto& [nb, cb] : b.terms_) {
            auto it = r.terms_.find(na + nb);
            if (it == r.terms_.end()) {
                Scalar p = ca * cb;
                if (!p.is_zero()) r.terms_[na + nb] = std::move(p);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

TrigPoly operator*(const Scalar& s, const TrigPoly& f) {
    TrigPoly r;
    for (const auto& [n, c] : f.terms_) {
        Scalar p = s * c;
        if (!p.is_zero()) r.terms_[n] = std::move(p);
    }
    return r;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly r;
    for (const auto& [n, c] : terms_)
        if (n != 0) r.terms_[n] = Scalar(CRat(Rat(0), Rat(n))) * c;
    return r;
}

TrigPoly TrigPoly::substitute_lambda(const CRat& v) const {
    TrigPoly r;
    for (const auto& [n, c] : terms_) {
        Scalar t = c.substitute_lambda(v);
        if (!t.is_zero()) r.terms_[n] = std::move(t);
    }
    return r;
}

TrigPoly TrigPoly::substitute_sigma(const Scalar& v) const {
    TrigPoly r;
    for (const auto& [n, c] : terms_) {
        Scalar t = c.substitute_sigma(v);
        if (!t.is_zero()) r.terms_[n] = std::move(t);
    }
    return r;
}

std::complex<double> TrigPoly::eval(double angle, std::complex<double> lambda_value,
                                    std::complex<double> sigma_value) const {
    std::complex<double> out = 0.0;
    for (const auto& [n, c] : terms_)
        out += c.eval_c(lambda_value, sigma_value) *
               std::exp(std::complex<double>(0.0, n * angle));
    return out;
}

std::string TrigPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        std::string coeff = c.is_constant() ? crat_pretty(c.constant_value()) : "(" + c.str() + ")";
        std::string mono;
        if (n != 0) {
            std::string nn = n == 1 ? "" : (n == -1 ? "-" : std::to_string(n) + "*");
            mono = "exp(" + nn + "i*" + var + ")";
        }
        std::string term = mono.empty() ? coeff
                         : (coeff == "1" ? mono : (coeff == "-1" ? "-" + mono : coeff + "*" + mono));
        if (first) {
            os << term;
            first = false;
        } else if (term.front() == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
    }
    return os.str();
}

DiffOp1 operator+(const DiffOp1& a, const DiffOp1& b) {
    if (a.var != b.var) throw std::invalid_argument("operator variable mismatch");
    return {a.var, a.c1 + b.c1, a.c0 + b.c0};
}

DiffOp1 operator-(const DiffOp1& a, const DiffOp1& b) {
    if (a.var != b.var) throw std::invalid_argument("operator variable mismatch");
    return {a.var, a.c1 - b.c1, a.c0 - b.c0};
}

DiffOp1 operator*(const Scalar& s, const DiffOp1& d) { return {d.var, s * d.c1, s * d.c0}; }

DiffOp1 build_lhat(const AlgebraElement& A, bool as_printed) {
    TrigPoly c_a = A.a * TrigPoly::cos() + A.b * TrigPoly::sin() - TrigPoly(A.c);
    TrigPoly c_a_prime = -(A.a * TrigPoly::sin()) + A.b * TrigPoly::cos();
    Scalar deriv_factor = as_printed ? Scalar(1) : Scalar(2);
    Scalar zeroth = Scalar(CRat(Rat(0), Rat(2))) * Scalar::lambda() + Scalar(1);  // 2*i*lambda + 1
    return {OpVar::S, deriv_factor * c_a, zeroth * c_a_prime};
}

DiffOp1 build_classical(const AlgebraElement& A) {
    TrigPoly deriv = -(A.a * TrigPoly::cos(2)) + A.b * TrigPoly::sin(2) + TrigPoly(A.c);
    TrigPoly zeroth = A.a * TrigPoly::sin(2) + A.b * TrigPoly::cos(2);
    Scalar sp1 = Scalar::sigma() + Scalar(1);
    return {OpVar::Theta, deriv, sp1 * zeroth};
}

DiffOp1 diffop_commutator(const DiffOp1& d1, const DiffOp1& d2) {
    if (d1.var != d2.var) throw std::invalid_argument("operator variable mismatch");
    TrigPoly c1 = d1.c1 * d2.c1.derivative() - d2.c1 * d1.c1.derivative();
    TrigPoly c0 = d1.c1 * d2.c0.derivative() - d2.c1 * d1.c0.derivative();
    return {d1.var, c1, c0};
}

namespace {

TrigPoly theta_to_s(const TrigPoly& f) {
    TrigPoly r;
    for (const auto& [n, c] : f.terms()) {
        if (n % 2 != 0)
            throw std::invalid_argument("odd theta mode cannot move to integer s modes");
        r.set_term(-n / 2, c);
    }
    return r;
}

}  // namespace

DiffOp1 to_s_coordinates(const DiffOp1& d) {
    if (d.var != OpVar::Theta) throw std::invalid_argument("expected a theta operator");
    // theta = -s/2, d/dtheta = -2 d/ds
    return {OpVar::S, Scalar(-2) * theta_to_s(d.c1), theta_to_s(d.c0)};
}

std::vector<DiffOp1> rep_residuals(const Scalar& sigma_value) {
    std::vector<DiffOp1> out;
    for (const AlgebraElement& A :
         {AlgebraElement::X(), AlgebraElement::H(), AlgebraElement::Y()}) {
        DiffOp1 classical = to_s_coordinates(build_classical(A));
        DiffOp1 fixed{classical.var, classical.c1.substitute_sigma(sigma_value),
                      classical.c0.substitute_sigma(sigma_value)};
        out.push_back(fixed - build_lhat(A));
    }
    return out;
}

RepComparison compare_reps() {
    // Every coefficient of to_s(L_A) - lhat_A is of the form alpha*sigma + beta
    // with alpha, beta polynomials in lambda. Pick the first equation with an
    // invertible constant alpha, solve, then re-verify every residual.
    Scalar solution;
    bool found = false;
    for (const AlgebraElement& A :
         {AlgebraElement::X(), AlgebraElement::H(), AlgebraElement::Y()}) {
        DiffOp1 diff = to_s_coordinates(build_classical(A)) - build_lhat(A);
        for (const TrigPoly* part : {&diff.c1, &diff.c0}) {
            for (const auto& [n, c] : part->terms()) {
                if (c.deg_sigma() > 1)
                    throw std::logic_error("comparison system is not linear in sigma");
                // c = alpha*sigma + beta
                Scalar alpha, beta;
                for (const auto& [m, z] : c.terms()) {
                    Scalar mono;
                    mono.set_term({m.l, 0}, z);
                    if (m.s == 1)
                        alpha += mono;
                    else
                        beta += mono;
                }
                if (alpha.is_zero()) continue;
                if (!alpha.is_constant()) continue;
                Scalar candidate = Scalar(-CRat(1) * inv(alpha.constant_value())) * beta;
                if (!found) {
                    solution = candidate;
                    found = true;
                }
            }
        }
    }
    if (!found)
        return {Scalar(), false, "no sigma-dependent equation found"};

    bool all_zero = true;
    std::ostringstream detail;
    const auto residuals = rep_residuals(solution);
    const char* names[] = {"X", "H", "Y"};
    for (size_t j = 0; j < residuals.size(); ++j) {
        if (!residuals[j].is_zero()) {
            all_zero = false;
            detail << "residual on " << names[j] << ": d(" << residuals[j].c1.str("s")
                   << ") + " << residuals[j].c0.str("s") << "; ";
        }
    }
    if (all_zero) detail << "all residuals identically zero";
    return {solution, all_zero, detail.str()};
}

BandMatrix::BandMatrix(int half_width, int bandwidth)
    : half_width_(half_width), bandwidth_(bandwidth),
      a_((2 * half_width + 1) * (2 * half_width + 1)) {
    if (half_width < 0) throw std::invalid_argument("negative half width");
}

const Scalar& BandMatrix::at(int m, int n) const {
    const int N = half_width_;
    if (std::abs(m) > N || std::abs(n) > N) throw std::out_of_range("band matrix index");
    return a_[(m + N) * (2 * N + 1) + (n + N)];
}

void BandMatrix::set(int m, int n, const Scalar& v) {
    const int N = half_width_;
    if (std::abs(m) > N || std::abs(n) > N) throw std::out_of_range("band matrix index");
    a_[(m + N) * (2 * N + 1) + (n + N)] = v;
}

BandMatrix operator*(const BandMatrix& a, const BandMatrix& b) {
    if (a.half_width_ != b.half_width_) throw std::invalid_argument("size mismatch");
    const int N = a.half_width_;
    BandMatrix r(N, std::min(2 * N, a.bandwidth_ + b.bandwidth_));
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            Scalar s;
            for (int k = -N; k <= N; ++k) s += a.at(m, k) * b.at(k, n);
            r.set(m, n, s);
        }
    return r;
}

BandMatrix operator-(const BandMatrix& a, const BandMatrix& b) {
    if (a.half_width_ != b.half_width_) throw std::invalid_argument("size mismatch");
    const int N = a.half_width_;
    BandMatrix r(N, std::max(a.bandwidth_, b.bandwidth_));
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) r.set(m, n, a.at(m, n) - b.at(m, n));
    return r;
}

bool operator==(const BandMatrix& a, const BandMatrix& b) {
    if (a.half_width_ != b.half_width_) return false;
    return a.a_ == b.a_;
}

bool BandMatrix::is_skew_hermitian() const {
    const int N = half_width_;
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            const Scalar& u = at(m, n);
            const Scalar& v = at(n, m);
            if (!u.is_constant() || !v.is_constant()) return false;
            if (u.constant_value() != -conj(v.constant_value())) return false;
        }
    return true;
}

BandMatrix matrix_elements(const DiffOp1& d, int half_width) {
    if (d.var != OpVar::S) throw std::invalid_argument("matrix elements need an s operator");
    const int bw = std::max(d.c1.bandwidth(), d.c0.bandwidth());
    BandMatrix m(half_width, bw);
    // D e^{ins} = sum_r (c1_r * (in) + c0_r) e^{i(r+n)s}
    for (int n = -half_width; n <= half_width; ++n) {
        for (const auto& [r, c] : d.c1.terms()) {
            if (std::abs(r + n) > half_width) continue;
            Scalar v = m.at(r + n, n) + Scalar(CRat(Rat(0), Rat(n))) * c;
            m.set(r + n, n, v);
        }
        for (const auto& [r, c] : d.c0.terms()) {
            if (std::abs(r + n) > half_width) continue;
            m.set(r + n, n, m.at(r + n, n) + c);
        }
    }
    return m;
}

}  // namespace orbitq
