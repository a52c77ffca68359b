#include "orbitq/star_numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace orbitq {

namespace {

double real_coeff(const Scalar& s, const char* what) {
    if (!s.is_constant())
        throw std::invalid_argument(std::string(what) + ": constant coefficient required");
    CRat c = s.constant_value();
    if (!c.is_real())
        throw std::invalid_argument(std::string(what) + ": real coefficient required");
    return c.re.get_d();
}

// Column spectra along u: a[m * nq + jq], standard DFT ordering.
struct USpectrum {
    int n = 0, nq = 0;
    double k0 = 0.0;
    std::vector<std::complex<double>> a;
};

USpectrum u_spectrum(const Grid2& g) {
    USpectrum s;
    s.n = g.nu();
    s.nq = g.nq();
    s.k0 = 2.0 * M_PI / g.length_u();
    s.a.resize(size_t(s.n) * s.nq);
#pragma omp parallel for
    for (int jq = 0; jq < s.nq; ++jq) {
        std::vector<std::complex<double>> col(s.n);
        for (int j = 0; j < s.n; ++j) col[j] = g.at(j, jq);
        fft_radix2(col, -1);
        for (int m = 0; m < s.n; ++m) s.a[size_t(m) * s.nq + jq] = col[m];
    }
    return s;
}

// Inverse transform of (i k_u)^order times the stored spectrum.
Grid2 deriv_from_spectrum(const USpectrum& s, int order, const Grid2& like) {
    Grid2 out = like;
#pragma omp parallel for
    for (int jq = 0; jq < s.nq; ++jq) {
        std::vector<std::complex<double>> col(s.n);
        for (int m = 0; m < s.n; ++m) {
            int mm = m < s.n / 2 ? m : m - s.n;
            if (mm == -s.n / 2 && order % 2 != 0) {
                col[m] = 0.0;
                continue;
            }
            col[m] = s.a[size_t(m) * s.nq + jq] * spectral_factor(s.k0 * mm, order);
        }
        fft_radix2(col, +1);
        for (int j = 0; j < s.n; ++j) out.at(j, jq) = col[j] / double(s.n);
    }
    return out;
}

}  // namespace

StarResult numeric_star(const AlgebraElement& A, const Grid2& g, double lambda,
                        int max_order) {
    if (g.axis() != Axis::P) throw std::invalid_argument("numeric_star expects a (p,q) grid");
    const double a = real_coeff(A.a, "numeric_star");
    const double b = real_coeff(A.b, "numeric_star");
    const double c = real_coeff(A.c, "numeric_star");

    StarResult res{Grid2::zeros(Axis::P, g.nu(), g.nq(), g.length_u())};
    res.aliasing_warning = top_mode_energy_u(g) > 1e-10 || top_mode_energy_q(g) > 1e-10;

    const int n = g.nu(), nq = g.nq();
    std::vector<double> cq(nq), sq(nq), pv(n);
    for (int j = 0; j < nq; ++j) {
        cq[j] = std::cos(g.q(j));
        sq[j] = std::sin(g.q(j));
    }
    for (int i = 0; i < n; ++i) pv[i] = g.u(i);

    const USpectrum spec_g = u_spectrum(g);
    const USpectrum spec_gq = u_spectrum(deriv_q(g));

    // C_A^{(j)}(q) = alpha_j cos q + beta_j sin q - c [j = 0]; derivatives
    // rotate (alpha, beta) -> (beta, -alpha). M = 2 C_A, N = 2 lambda C_A'.
    auto cderiv = [&](int j, double& alpha, double& beta) {
        alpha = a;
        beta = b;
        for (int r = 0; r < j; ++r) {
            double na = beta, nb = -alpha;
            alpha = na;
            beta = nb;
        }
    };

    const std::complex<double> iunit(0.0, 1.0);
    std::complex<double> w(1.0, 0.0);  // (1/(2i))^k / k!
    double acc_norm = 0.0;
    int small_streak = 0;
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) w *= std::complex<double>(0.0, -0.5) / double(k);

        const Grid2 dpk_g = deriv_from_spectrum(spec_g, k, g);
        Grid2 term = Grid2::zeros(Axis::P, n, nq, g.length_u());

        double am, bm, an, bn;
        cderiv(k, am, bm);      // for M^{(k)} and N^{(k)} = 2 lambda C^{(k+1)}
        cderiv(k + 1, an, bn);
        const double msign = (k % 2 == 0) ? 1.0 : -1.0;
#pragma omp parallel for
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < nq; ++j) {
                const double Mk = 2.0 * (am * cq[j] + bm * sq[j] - (k == 0 ? c : 0.0));
                const double Nk = 2.0 * lambda * (an * cq[j] + bn * sq[j]);
                term.at(i, j) = msign * (pv[i] * Mk + Nk) * dpk_g.at(i, j);
            }
        if (k >= 1) {
            const Grid2 dpk1_gq = deriv_from_spectrum(spec_gq, k - 1, g);
            double am1, bm1;
            cderiv(k - 1, am1, bm1);
#pragma omp parallel for
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < nq; ++j) {
                    const double Mk1 =
                        2.0 * (am1 * cq[j] + bm1 * sq[j] - (k == 1 ? c : 0.0));
                    term.at(i, j) += -msign * double(k) * Mk1 * dpk1_gq.at(i, j);
                }
        }

        const std::complex<double> factor = w * iunit;
        double term_norm = 0.0;
#pragma omp parallel for reduction(+ : term_norm)
        for (long long idx = 0; idx < (long long)term.data().size(); ++idx) {
            const std::complex<double> v = factor * term.data()[idx];
            res.grid.data()[idx] += v;
            term_norm += std::norm(v);
        }
        term_norm = std::sqrt(term_norm);
        acc_norm = std::max(acc_norm, l2_norm(res.grid));
        res.terms_used = k + 1;
        if (k >= 3 && term_norm <= 1e-15 * std::max(acc_norm, 1e-300)) {
            if (++small_streak >= 2) {
                res.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    return res;
}

StarResult numeric_lhat(const AlgebraElement& A, const Grid2& f, double lambda,
                        int max_order) {
    if (f.axis() != Axis::X) throw std::invalid_argument("numeric_lhat expects an (x,q) grid");
    StarResult middle = numeric_star(A, to_p(f), lambda, max_order);
    StarResult out{to_x(middle.grid), middle.aliasing_warning, middle.converged,
                   middle.terms_used};
    return out;
}

Grid2 apply_diffop(const DiffOp1& d, const Grid2& f, std::complex<double> lambda,
                   std::complex<double> sigma) {
    if (d.var != OpVar::S) throw std::invalid_argument("apply_diffop expects an s operator");
    if (f.axis() != Axis::X) throw std::invalid_argument("apply_diffop expects an (x,q) grid");
    const Grid2 fs = deriv_s(f);
    Grid2 out = f;
    const int n = f.nu(), nq = f.nq();
#pragma omp parallel for
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < nq; ++j) {
            const double s = f.q(j) + 0.5 * f.u(i);
            out.at(i, j) = d.c1.eval(s, lambda, sigma) * fs.at(i, j) +
                           d.c0.eval(s, lambda, sigma) * f.at(i, j);
        }
    return out;
}

// Under the e^{+ipx} kernel the conjugated operators localize on
// s = q + x/2; the complementary variable is t = q - x/2. (The opposite
// kernel sign mirrors x and swaps the two.)
Grid2 deriv_s(const Grid2& f) {
    Grid2 dq = deriv_q(f);
    Grid2 du = deriv_u(f);
    Grid2 out = f;
    for (size_t i = 0; i < out.data().size(); ++i)
        out.data()[i] = 0.5 * dq.data()[i] + du.data()[i];
    return out;
}

Grid2 deriv_t(const Grid2& f) {
    Grid2 dq = deriv_q(f);
    Grid2 du = deriv_u(f);
    Grid2 out = f;
    for (size_t i = 0; i < out.data().size(); ++i)
        out.data()[i] = 0.5 * dq.data()[i] - du.data()[i];
    return out;
}

Grid2 sample_symbol(const SymbolFunction& f, const Grid2& shape, std::complex<double> lambda,
                    std::complex<double> sigma) {
    Grid2 out = shape;
    const int n = shape.nu(), nq = shape.nq();
#pragma omp parallel for
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < nq; ++j) out.at(i, j) = f.eval(shape.u(i), shape.q(j), lambda, sigma);
    return out;
}

}  // namespace orbitq
