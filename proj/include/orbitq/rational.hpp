#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace orbitq {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "3", "-3", "3/4", "-3/4".
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: \"" + s + "\"");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_perfect_square(const Rat& q, Rat& root) {
    if (sgn(q) < 0) return false;
    const mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

/// Gaussian rational: exact complex number with rational real and imaginary parts.
struct CRat {
    Rat re{0};
    Rat im{0};

    CRat() = default;
    CRat(long n) : re(n) {}          // NOLINT
    CRat(Rat r) : re(std::move(r)) {}  // NOLINT
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static CRat unit_i() { return CRat(Rat(0), Rat(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    CRat operator-() const { return CRat(-re, -im); }

    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
    CRat& operator*=(const CRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline CRat conj(const CRat& z) { return CRat(z.re, -z.im); }

inline CRat inv(const CRat& z) {
    if (z.is_zero()) throw std::domain_error("division by zero Gaussian rational");
    Rat n = z.re * z.re + z.im * z.im;
    return CRat(z.re / n, -z.im / n);
}

inline CRat operator/(const CRat& a, const CRat& b) { return a * inv(b); }

inline std::complex<double> to_complex(const CRat& z) {
    return {z.re.get_d(), z.im.get_d()};
}

// Exact export format: always "re+im i" with the sign folded in, e.g. "1/2-3/4 i".
inline std::string crat_str(const CRat& z) {
    Rat abs_im = sgn(z.im) < 0 ? Rat(-z.im) : z.im;
    return rat_str(z.re) + (sgn(z.im) < 0 ? "-" : "+") + rat_str(abs_im) + " i";
}

// Human form: "3/2", "i", "-2*i", "(1/2+3/4*i)".
std::string crat_pretty(const CRat& z);

}  // namespace orbitq
