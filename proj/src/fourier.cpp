#include "orbitq/fourier.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace orbitq {

void fft_radix2(std::span<std::complex<double>> x, int sign) {
    const size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size not a power of two");
    // bit reversal
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / double(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0);
            for (size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = x[i + j];
                std::complex<double> v = x[i + j + len / 2] * w;
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

namespace {

// Centered unitary transform along u for one direction:
//   dir = +1: out[k] = n^{-1/2} (-1)^k sum_j (-1)^j in[j] e^{+2 pi i jk/n}
//   dir = -1: adjoint.
// Valid because n is a multiple of 4, which kills the constant quarter phase.
Grid2 centered_transform(const Grid2& g, int dir, Axis out_axis, double out_length) {
    const int n = g.nu(), nq = g.nq();
    Grid2 out(out_axis, n, nq, out_length);
    const double scale = 1.0 / std::sqrt(double(n));
#pragma omp parallel for
    for (int jq = 0; jq < nq; ++jq) {
        std::vector<std::complex<double>> col(n);
        for (int j = 0; j < n; ++j) {
            double sgn = (j & 1) ? -1.0 : 1.0;
            col[j] = sgn * g.at(j, jq);
        }
        fft_radix2(col, dir);
        for (int k = 0; k < n; ++k) {
            double sgn = (k & 1) ? -1.0 : 1.0;
            out.at(k, jq) = scale * sgn * col[k];
        }
    }
    return out;
}

}  // namespace

Grid2 to_x(const Grid2& gp) {
    if (gp.axis() != Axis::P) throw std::invalid_argument("to_x expects a P grid");
    return centered_transform(gp, +1, Axis::X, gp.dual_length());
}

Grid2 to_p(const Grid2& gx) {
    if (gx.axis() != Axis::X) throw std::invalid_argument("to_p expects an X grid");
    return centered_transform(gx, -1, Axis::P, gx.dual_length());
}

Grid2 to_x_reference(const Grid2& gp) {
    if (gp.axis() != Axis::P) throw std::invalid_argument("to_x_reference expects a P grid");
    const int n = gp.nu(), nq = gp.nq();
    Grid2 out(Axis::X, n, nq, gp.dual_length());
    const double scale = 1.0 / std::sqrt(double(n));
    const double dp = gp.du();
    const double dx = 2.0 * M_PI / gp.length_u();
    for (int k = 0; k < n; ++k) {
        const double x = (k - n / 2) * dx;
        for (int jq = 0; jq < nq; ++jq) {
            std::complex<double> s = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p = (j - n / 2) * dp;
                s += gp.at(j, jq) * std::polar(1.0, p * x);
            }
            out.at(k, jq) = scale * s;
        }
    }
    return out;
}

Grid2 to_p_reference(const Grid2& gx) {
    if (gx.axis() != Axis::X) throw std::invalid_argument("to_p_reference expects an X grid");
    const int n = gx.nu(), nq = gx.nq();
    Grid2 out(Axis::P, n, nq, gx.dual_length());
    const double scale = 1.0 / std::sqrt(double(n));
    const double dx = gx.du();
    const double dp = 2.0 * M_PI / gx.length_u();
    for (int j = 0; j < n; ++j) {
        const double p = (j - n / 2) * dp;
        for (int jq = 0; jq < nq; ++jq) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < n; ++k) {
                const double x = (k - n / 2) * dx;
                s += gx.at(k, jq) * std::polar(1.0, -p * x);
            }
            out.at(j, jq) = scale * s;
        }
    }
    return out;
}

Grid2 deriv_u(const Grid2& g, int order) {
    const int n = g.nu(), nq = g.nq();
    Grid2 out = g;
    const double k0 = 2.0 * M_PI / g.length_u();
#pragma omp parallel for
    for (int jq = 0; jq < nq; ++jq) {
        std::vector<std::complex<double>> col(n);
        for (int j = 0; j < n; ++j) col[j] = g.at(j, jq);
        fft_radix2(col, -1);
        for (int m = 0; m < n; ++m) {
            int mm = m < n / 2 ? m : m - n;
            if (mm == -n / 2 && order % 2 != 0) {
                col[m] = 0.0;
                continue;
            }
            col[m] *= spectral_factor(k0 * mm, order);
        }
        fft_radix2(col, +1);
        for (int j = 0; j < n; ++j) out.at(j, jq) = col[j] / double(n);
    }
    return out;
}

Grid2 deriv_u_reference(const Grid2& g, int order) {
    const int n = g.nu(), nq = g.nq();
    Grid2 out = g;
    const double k0 = 2.0 * M_PI / g.length_u();
    std::vector<std::complex<double>> col(n), hat(n);
    for (int jq = 0; jq < nq; ++jq) {
        for (int m = 0; m < n; ++m) {
            std::complex<double> s = 0.0;
            for (int j = 0; j < n; ++j)
                s += g.at(j, jq) * std::polar(1.0, -2.0 * M_PI * j * m / n);
            hat[m] = s;
        }
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (int m = 0; m < n; ++m) {
                int mm = m < n / 2 ? m : m - n;
                if (mm == -n / 2 && order % 2 != 0) continue;
                s += spectral_factor(k0 * mm, order) * hat[m] *
                     std::polar(1.0, 2.0 * M_PI * j * m / n);
            }
            out.at(j, jq) = s / double(n);
        }
    }
    return out;
}

Grid2 deriv_q(const Grid2& g, int order) {
    const int n = g.nu(), nq = g.nq();
    Grid2 out = g;
#pragma omp parallel for
    for (int iu = 0; iu < n; ++iu) {
        std::vector<std::complex<double>> row(nq);
        for (int j = 0; j < nq; ++j) row[j] = g.at(iu, j);
        fft_radix2(row, -1);
        for (int m = 0; m < nq; ++m) {
            int mm = m < nq / 2 ? m : m - nq;
            if (mm == -nq / 2 && order % 2 != 0) {
                row[m] = 0.0;
                continue;
            }
            row[m] *= spectral_factor(double(mm), order);
        }
        fft_radix2(row, +1);
        for (int j = 0; j < nq; ++j) out.at(iu, j) = row[j] / double(nq);
    }
    return out;
}

double top_mode_energy_u(const Grid2& g) {
    const int n = g.nu(), nq = g.nq();
    double top = 0.0, total = 0.0;
    for (int jq = 0; jq < nq; ++jq) {
        std::vector<std::complex<double>> col(n);
        for (int j = 0; j < n; ++j) col[j] = g.at(j, jq);
        fft_radix2(col, -1);
        for (int m = 0; m < n; ++m) {
            int mm = m < n / 2 ? m : m - n;
            double e = std::norm(col[m]);
            total += e;
            if (std::abs(mm) >= n / 2 - 1) top += e;
        }
    }
    return total == 0.0 ? 0.0 : top / total;
}

double top_mode_energy_q(const Grid2& g) {
    const int n = g.nu(), nq = g.nq();
    double top = 0.0, total = 0.0;
    for (int iu = 0; iu < n; ++iu) {
        std::vector<std::complex<double>> row(nq);
        for (int j = 0; j < nq; ++j) row[j] = g.at(iu, j);
        fft_radix2(row, -1);
        for (int m = 0; m < nq; ++m) {
            int mm = m < nq / 2 ? m : m - nq;
            double e = std::norm(row[m]);
            total += e;
            if (std::abs(mm) >= nq / 2 - 1) top += e;
        }
    }
    return total == 0.0 ? 0.0 : top / total;
}

}  // namespace orbitq
