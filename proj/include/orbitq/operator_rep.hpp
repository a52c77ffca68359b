#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitq/lie.hpp"

namespace orbitq {

/// Trigonometric polynomial sum_n c_n e^{i n v} in one angular variable, with
/// exact Scalar coefficients.
class TrigPoly {
public:
    using TermMap = std::map<int, Scalar>;

    TrigPoly() = default;
    explicit TrigPoly(const Scalar& constant) { set_term(0, constant); }

    static TrigPoly mode(int n);
    static TrigPoly cos(int n = 1);
    static TrigPoly sin(int n = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(int n) const;
    void set_term(int n, const Scalar& c);
    int bandwidth() const;

    TrigPoly operator-() const;
    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(const Scalar& s, const TrigPoly& f);
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

    TrigPoly derivative() const;
    TrigPoly substitute_lambda(const CRat& v) const;
    TrigPoly substitute_sigma(const Scalar& v) const;
    std::complex<double> eval(double angle, std::complex<double> lambda_value,
                              std::complex<double> sigma_value = {}) const;
    std::string str(const std::string& var) const;

private:
    TermMap terms_;
};

enum class OpVar { S, Theta };

/// First-order differential operator c1(v) d/dv + c0(v) with trig-polynomial
/// coefficients. Closed under commutator.
struct DiffOp1 {
    OpVar var = OpVar::S;
    TrigPoly c1;  // coefficient of the derivative
    TrigPoly c0;  // multiplication part

    friend bool operator==(const DiffOp1& a, const DiffOp1& b) {
        return a.var == b.var && a.c1 == b.c1 && a.c0 == b.c0;
    }
    friend DiffOp1 operator+(const DiffOp1& a, const DiffOp1& b);
    friend DiffOp1 operator-(const DiffOp1& a, const DiffOp1& b);
    friend DiffOp1 operator*(const Scalar& s, const DiffOp1& d);
    bool is_zero() const { return c1.is_zero() && c0.is_zero(); }
};

/// Quantized operator of A = aX + bH + cY in the variable s:
///   2 C_A(s) d/ds + (2 i lambda + 1) C_A'(s),  C_A(s) = a cos s + b sin s - c.
/// With as_printed = true the derivative term carries coefficient C_A(s)
/// instead of 2 C_A(s); that historical variant breaks the commutator
/// homomorphism by a uniform factor 1/2 and is kept for diagnostics only.
DiffOp1 build_lhat(const AlgebraElement& A, bool as_printed = false);

/// Classical infinitesimal operator in theta with the formal parameter sigma:
///   (-a cos 2t + b sin 2t + c) d/dt + (sigma + 1)(a sin 2t + b cos 2t).
DiffOp1 build_classical(const AlgebraElement& A);

/// [c1 d + c0, e1 d + e0] = (c1 e1' - e1 c1') d + (c1 e0' - e1 c0').
DiffOp1 diffop_commutator(const DiffOp1& d1, const DiffOp1& d2);

/// Substitute theta = -s/2: modes e^{2 i n theta} -> e^{-i n s} and
/// d/dtheta -> -2 d/ds. Requires every theta-mode to be even.
DiffOp1 to_s_coordinates(const DiffOp1& d);

struct RepComparison {
    Scalar sigma;          // unique solution
    bool residuals_zero;   // all three generator differences vanish identically
    std::string detail;
};

/// Solves to_s_coordinates(L_A) = lhat_A for sigma across A in {X, H, Y} and
/// verifies the solution zeroes every coefficient identically in lambda.
RepComparison compare_reps();

/// Residual trig-polynomial data for a forced value of sigma (one DiffOp1
/// difference per generator X, H, Y).
std::vector<DiffOp1> rep_residuals(const Scalar& sigma_value);

/// Exact matrix of a DiffOp1 in s on the Fourier modes e^{i n s}, |n| <= N:
/// column n holds the coefficients of D(e^{i n s}).
class BandMatrix {
public:
    BandMatrix(int half_width, int bandwidth);

    int half_width() const { return half_width_; }
    int bandwidth() const { return bandwidth_; }

    /// Row m, column n, indices in [-N, N].
    const Scalar& at(int m, int n) const;
    void set(int m, int n, const Scalar& v);

    friend BandMatrix operator*(const BandMatrix& a, const BandMatrix& b);
    friend BandMatrix operator-(const BandMatrix& a, const BandMatrix& b);
    friend bool operator==(const BandMatrix& a, const BandMatrix& b);

    /// Entry-level test M[m,n] = -conj(M[n,m]); requires constant entries.
    bool is_skew_hermitian() const;

private:
    int half_width_;
    int bandwidth_;
    std::vector<Scalar> a_;
};

BandMatrix matrix_elements(const DiffOp1& d, int half_width);

}  // namespace orbitq
