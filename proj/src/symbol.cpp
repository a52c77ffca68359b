#include "orbitq/symbol.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitq {

SymbolFunction SymbolFunction::p(int degree) {
    if (degree < 0) throw std::invalid_argument("negative p degree");
    SymbolFunction f;
    f.set_term(0, degree, Scalar(1));
    return f;
}

SymbolFunction SymbolFunction::mode(int n) {
    SymbolFunction f;
    f.set_term(n, 0, Scalar(1));
    return f;
}

SymbolFunction SymbolFunction::cos_q(int n) {
    SymbolFunction f;
    Scalar half(CRat(rat(1, 2)));
    f.set_term(n, 0, half);
    f.set_term(-n, 0, half);
    return f;
}

SymbolFunction SymbolFunction::sin_q(int n) {
    SymbolFunction f;
    // 1/(2i) = -i/2
    Scalar c(CRat(Rat(0), rat(-1, 2)));
    f.set_term(n, 0, c);
    f.set_term(-n, 0, -c);
    return f;
}

Scalar SymbolFunction::coeff(int n, int d) const {
    auto it = terms_.find({n, d});
    return it == terms_.end() ? Scalar() : it->second;
}

void SymbolFunction::set_term(int n, int d, const Scalar& c) {
    if (c.is_zero())
        terms_.erase({n, d});
    else
        terms_[{n, d}] = c;
}

int SymbolFunction::deg_p() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.d);
    return d;
}

int SymbolFunction::bandwidth() const {
    int b = 0;
    for (const auto& [k, c] : terms_) b = std::max(b, std::abs(k.n));
    return b;
}

bool SymbolFunction::is_real() const {
    for (const auto& [k, c] : terms_)
        if (coeff(-k.n, k.d) != c.conjugated()) return false;
    return true;
}

SymbolFunction SymbolFunction::operator-() const {
    SymbolFunction r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

SymbolFunction& SymbolFunction::operator+=(const SymbolFunction& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SymbolFunction& SymbolFunction::operator-=(const SymbolFunction& o) { return *this += -o; }

SymbolFunction operator*(const SymbolFunction& a, const SymbolFunction& b) {
    SymbolFunction r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            SymbolFunction::Key k{ka.n + kb.n, ka.d + kb.d};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                Scalar p = ca * cb;
                if (!p.is_zero()) r.terms_[k] = std::move(p);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

SymbolFunction operator*(const Scalar& s, const SymbolFunction& f) {
    SymbolFunction r;
    for (const auto& [k, c] : f.terms()) {
        Scalar p = s * c;
        if (!p.is_zero()) r.terms_[k] = std::move(p);
    }
    return r;
}

SymbolFunction SymbolFunction::dp() const {
    SymbolFunction r;
    for (const auto& [k, c] : terms_)
        if (k.d > 0) r.terms_[{k.n, k.d - 1}] = Scalar(k.d) * c;
    return r;
}

SymbolFunction SymbolFunction::dq() const {
    SymbolFunction r;
    for (const auto& [k, c] : terms_)
        if (k.n != 0) r.terms_[k] = Scalar(CRat(Rat(0), Rat(k.n))) * c;
    return r;
}

SymbolFunction SymbolFunction::lambda_to_i_lambda() const {
    SymbolFunction r;
    for (const auto& [k, c] : terms_) {
        Scalar t = c.lambda_to_i_lambda();
        if (!t.is_zero()) r.terms_[k] = std::move(t);
    }
    return r;
}

std::complex<double> SymbolFunction::eval(double p_value, double q_value,
                                          std::complex<double> lambda_value,
                                          std::complex<double> sigma_value) const {
    std::complex<double> out = 0.0;
    for (const auto& [k, c] : terms_) {
        std::complex<double> t = c.eval_c(lambda_value, sigma_value);
        t *= std::pow(p_value, k.d);
        t *= std::exp(std::complex<double>(0.0, k.n * q_value));
        out += t;
    }
    return out;
}

std::string SymbolFunction::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string coeff = c.is_constant() ? crat_pretty(c.constant_value()) : "(" + c.str() + ")";
        std::string mono;
        if (k.d == 1) mono = "p";
        else if (k.d > 1) mono = "p^" + std::to_string(k.d);
        if (k.n != 0) {
            if (!mono.empty()) mono += "*";
            std::string nn = k.n == 1 ? "" : (k.n == -1 ? "-" : std::to_string(k.n) + "*");
            mono += "exp(" + nn + "i*q)";
        }
        std::string term;
        if (mono.empty()) term = coeff;
        else if (coeff == "1") term = mono;
        else if (coeff == "-1") term = "-" + mono;
        else term = coeff + "*" + mono;
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

SymbolFunction hamiltonian_symbol(const AlgebraElement& A) {
    // C_A(q) = a cos q + b sin q - c and its q-derivative.
    SymbolFunction c_a = A.a * SymbolFunction::cos_q() + A.b * SymbolFunction::sin_q() -
                         SymbolFunction(A.c);
    SymbolFunction c_a_prime = -(A.a * SymbolFunction::sin_q()) + A.b * SymbolFunction::cos_q();
    Scalar two(2);
    return two * (c_a * SymbolFunction::p()) + (two * Scalar::lambda()) * c_a_prime;
}

SymbolFunction chart_m() {
    return SymbolFunction::p() * SymbolFunction::cos_q() -
           Scalar::lambda() * SymbolFunction::sin_q();
}

SymbolFunction chart_n() {
    return SymbolFunction::p() * SymbolFunction::sin_q() +
           Scalar::lambda() * SymbolFunction::cos_q();
}

SymbolFunction chart_p() { return SymbolFunction::p(); }

namespace {

Rat binomial(int n, int k) {
    Rat r(1);
    for (int j = 1; j <= k; ++j) r *= Rat(n - k + j, j);
    r.canonicalize();
    return r;
}

SymbolFunction iterated_deriv(SymbolFunction f, int np, int nq) {
    for (int j = 0; j < np; ++j) f = f.dp();
    for (int j = 0; j < nq; ++j) f = f.dq();
    return f;
}

}  // namespace

SymbolFunction pk(const SymbolFunction& f, const SymbolFunction& g, int k) {
    if (k < 0) throw std::invalid_argument("negative order in pk");
    SymbolFunction out;
    for (int m = 0; m <= k; ++m) {
        // m p-derivatives fall on f, k-m on g; skip vanishing pieces early.
        if (m > f.deg_p() || k - m > g.deg_p()) continue;
        SymbolFunction lhs = iterated_deriv(f, m, k - m);
        SymbolFunction rhs = iterated_deriv(g, k - m, m);
        Rat w = binomial(k, m);
        if ((k - m) % 2 != 0) w = -w;
        out += Scalar(w) * (lhs * rhs);
    }
    return out;
}

SymbolFunction star(const SymbolFunction& f, const SymbolFunction& g, const Rat& hbar) {
    const int kmax = f.deg_p() + g.deg_p();
    SymbolFunction out;
    // (1/(2i))^k / k!, with an optional hbar per order.
    CRat w(1);
    const CRat half_over_i(Rat(0), rat(-1, 2));  // 1/(2i)
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            w *= half_over_i;
            w *= CRat(Rat(hbar) / Rat(k));
        }
        out += Scalar(w) * pk(f, g, k);
    }
    return out;
}

SymbolFunction poisson(const SymbolFunction& f, const SymbolFunction& g) {
    return f.dp() * g.dq() - f.dq() * g.dp();
}

StarCommutatorWitness star_commutator_check(const AlgebraElement& A, const AlgebraElement& B) {
    const Scalar i = Scalar::unit_i();
    SymbolFunction ia = i * hamiltonian_symbol(A);
    SymbolFunction ib = i * hamiltonian_symbol(B);
    SymbolFunction lhs = star(ia, ib) - star(ib, ia);
    SymbolFunction rhs = i * hamiltonian_symbol(bracket(A, B));
    return {lhs == rhs, lhs, rhs};
}

SymbolFunction star_casimir() {
    SymbolFunction xs = hamiltonian_symbol(AlgebraElement::X());
    SymbolFunction hs = hamiltonian_symbol(AlgebraElement::H());
    SymbolFunction ys = hamiltonian_symbol(AlgebraElement::Y());
    return star(xs, xs) + star(hs, hs) - star(ys, ys);
}

SymbolFunction pointwise_casimir() {
    SymbolFunction xs = hamiltonian_symbol(AlgebraElement::X());
    SymbolFunction hs = hamiltonian_symbol(AlgebraElement::H());
    SymbolFunction ys = hamiltonian_symbol(AlgebraElement::Y());
    return xs * xs + hs * hs - ys * ys;
}

bool check_e36() {
    const SymbolFunction m = chart_m(), n = chart_n();
    const SymbolFunction cq = SymbolFunction::cos_q(), sq = SymbolFunction::sin_q();
    bool ok = true;
    ok = ok && (m.dq() == -n);
    ok = ok && (n.dq() == m);
    ok = ok && (m.dp() == cq);
    ok = ok && (n.dp() == sq);
    ok = ok && (m * cq + n * sq == chart_p());
    return ok;
}

}  // namespace orbitq
