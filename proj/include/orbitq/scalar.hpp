#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "orbitq/rational.hpp"

namespace orbitq {

/// Exact polynomial in the formal parameters lambda and sigma with Gaussian
/// rational coefficients. Kept in canonical form: zero coefficients are never
/// stored and terms are ordered by (lambda power, sigma power).
class Scalar {
public:
    struct Mono {
        int l = 0;  // lambda power
        int s = 0;  // sigma power
        auto operator<=>(const Mono&) const = default;
    };
    using TermMap = std::map<Mono, CRat>;

    Scalar() = default;
    Scalar(long n) { set_term({0, 0}, CRat(n)); }       // NOLINT
    Scalar(const Rat& r) { set_term({0, 0}, CRat(r)); } // NOLINT
    Scalar(const CRat& z) { set_term({0, 0}, z); }      // NOLINT

    static Scalar lambda(int power = 1);
    static Scalar sigma(int power = 1);
    static Scalar unit_i() { return Scalar(CRat::unit_i()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; throws if a formal parameter is present.
    CRat constant_value() const;
    /// Constant real rational value; throws otherwise.
    Rat rational_value() const;

    int deg_lambda() const;
    int deg_sigma() const;

    CRat coeff(int l, int s) const;
    void set_term(Mono m, const CRat& c);

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(int k) const;

    /// Coefficient-wise conjugation; lambda and sigma are treated as real.
    Scalar conjugated() const;

    /// Exact evaluation.
    CRat eval(const CRat& lambda_value, const CRat& sigma_value = CRat()) const;
    std::complex<double> eval_c(std::complex<double> lambda_value,
                                std::complex<double> sigma_value = {}) const;

    /// The substitution lambda -> i*lambda (complexified-orbit endomorphism).
    Scalar lambda_to_i_lambda() const;
    /// Substitute a polynomial for sigma.
    Scalar substitute_sigma(const Scalar& value) const;
    /// Substitute an exact value for lambda, keeping sigma formal.
    Scalar substitute_lambda(const CRat& value) const;

    std::string str() const;

private:
    TermMap terms_;
};

std::string crat_pretty(const CRat& z);

}  // namespace orbitq
