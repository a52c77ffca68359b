#pragma once

#include <complex>
#include <map>
#include <string>

#include "orbitq/lie.hpp"

namespace orbitq {

/// Element of the closed function algebra on the orbit chart: a finite sum
///   sum_{n,d} c_{n,d}(lambda, sigma) * p^d * e^{i n q}
/// with exact Scalar coefficients. Trig functions live in exponential mode
/// form; cos/sin are derived constructors. Canonical: no zero coefficients.
class SymbolFunction {
public:
    struct Key {
        int n = 0;  // Fourier mode in q
        int d = 0;  // p degree, >= 0
        auto operator<=>(const Key&) const = default;
    };
    using TermMap = std::map<Key, Scalar>;

    SymbolFunction() = default;
    explicit SymbolFunction(const Scalar& constant) { set_term(0, 0, constant); }

    static SymbolFunction p(int degree = 1);
    static SymbolFunction mode(int n);  // e^{i n q}
    static SymbolFunction cos_q(int n = 1);
    static SymbolFunction sin_q(int n = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(int n, int d) const;
    void set_term(int n, int d, const Scalar& c);

    int deg_p() const;
    int bandwidth() const;

    /// Real-valued test (coefficients conjugate-reflect: c_{-n,d} = conj(c_{n,d})).
    bool is_real() const;

    SymbolFunction operator-() const;
    SymbolFunction& operator+=(const SymbolFunction& o);
    SymbolFunction& operator-=(const SymbolFunction& o);
    friend SymbolFunction operator+(SymbolFunction a, const SymbolFunction& b) { return a += b; }
    friend SymbolFunction operator-(SymbolFunction a, const SymbolFunction& b) { return a -= b; }
    friend SymbolFunction operator*(const SymbolFunction& a, const SymbolFunction& b);
    friend SymbolFunction operator*(const Scalar& s, const SymbolFunction& f);
    friend bool operator==(const SymbolFunction& a, const SymbolFunction& b) {
        return a.terms_ == b.terms_;
    }

    SymbolFunction dp() const;  // d/dp
    SymbolFunction dq() const;  // d/dq

    /// Apply lambda -> i*lambda to every coefficient.
    SymbolFunction lambda_to_i_lambda() const;

    std::complex<double> eval(double p_value, double q_value,
                              std::complex<double> lambda_value,
                              std::complex<double> sigma_value = {}) const;

    std::string str() const;

private:
    TermMap terms_;
};

/// Hamiltonian symbol of A = aX + bH + cY on the chart:
///   2(a cos q + b sin q - c) p + 2 lambda (-a sin q + b cos q).
SymbolFunction hamiltonian_symbol(const AlgebraElement& A);

/// Chart coordinate functions M = p cos q - lambda sin q,
/// N = p sin q + lambda cos q, P = p.
SymbolFunction chart_m();
SymbolFunction chart_n();
SymbolFunction chart_p();

/// Bidifferential operator P^k with Lambda^{12} = 1, Lambda^{21} = -1 in the
/// coordinates (p, q):
///   P^k(f,g) = sum_m C(k,m) (-1)^{k-m} (dp^m dq^{k-m} f)(dp^{k-m} dq^m g).
/// P^0(f,g) = f*g and P^1(f,g) = f_p g_q - f_q g_p.
SymbolFunction pk(const SymbolFunction& f, const SymbolFunction& g, int k);

/// Moyal product f * g = sum_k hbar^k/k! (1/(2i))^k P^k(f,g); the sum is
/// finite (k <= deg_p f + deg_p g) and exact.
SymbolFunction star(const SymbolFunction& f, const SymbolFunction& g,
                    const Rat& hbar = Rat(1));

/// Poisson bracket f_p g_q - f_q g_p.
SymbolFunction poisson(const SymbolFunction& f, const SymbolFunction& g);

struct StarCommutatorWitness {
    bool equal;
    SymbolFunction lhs;  // i*A~ star i*B~ - i*B~ star i*A~
    SymbolFunction rhs;  // i * hamiltonian_symbol([A, B])
};

/// Checks i*A~ star i*B~ - i*B~ star i*A~ = i * [A,B]~ as an exact polynomial
/// identity in lambda.
StarCommutatorWitness star_commutator_check(const AlgebraElement& A, const AlgebraElement& B);

/// X~*X~ + H~*H~ - Y~*Y~ under the Moyal product; a constant symbol.
SymbolFunction star_casimir();

/// Classical pointwise counterpart X~^2 + H~^2 - Y~^2.
SymbolFunction pointwise_casimir();

/// Verifies the chart identities M_q = -N, N_q = M, M_p = cos q,
/// N_p = sin q, M cos q + N sin q = p, exactly.
bool check_e36();

}  // namespace orbitq
