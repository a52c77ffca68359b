#pragma once

#include <complex>
#include <span>

#include "orbitq/grid.hpp"

namespace orbitq {

/// In-place radix-2 FFT, X[k] = sum_j x[j] exp(sign * 2*pi*i*j*k/n),
/// unnormalized. n must be a power of two.
void fft_radix2(std::span<std::complex<double>> x, int sign);

/// Unitary centered transform along the u axis with kernel e^{+i p x}:
///   out[k] = n^{-1/2} sum_j in[j] exp(+i p_j x_k),
/// p_j = (j - n/2) du, x_k = (k - n/2) dx, du*dx = 2*pi/n. Maps a P grid to
/// the dual X grid. OpenMP parallel over q columns.
Grid2 to_x(const Grid2& gp);

/// Adjoint (inverse) transform, X grid back to P.
Grid2 to_p(const Grid2& gx);

/// Serial reference for the same transforms: the literal O(n^2) sum with the
/// kernel written out. Kept as the testing oracle for the FFT path.
Grid2 to_x_reference(const Grid2& gp);
Grid2 to_p_reference(const Grid2& gx);

/// Spectral derivative of given order along the u axis (periodic
/// continuation; the Nyquist mode is zeroed for odd orders).
Grid2 deriv_u(const Grid2& g, int order = 1);
/// Serial reference (direct trigonometric interpolation sum).
Grid2 deriv_u_reference(const Grid2& g, int order = 1);

/// Spectral derivative along q (period 2*pi, integer modes).
Grid2 deriv_q(const Grid2& g, int order = 1);

/// Fraction of spectral energy sitting in the top |mode| ring along each
/// axis; used for aliasing detection.
double top_mode_energy_u(const Grid2& g);
double top_mode_energy_q(const Grid2& g);

/// (i k)^order, with the k = 0 case pinned ((i 0)^0 = 1, (i 0)^n = 0).
inline std::complex<double> spectral_factor(double k, int order) {
    if (k == 0.0) return order == 0 ? 1.0 : 0.0;
    double mag = std::pow(std::abs(k), order);
    double phase = order * (k > 0 ? M_PI_2 : -M_PI_2);
    return std::polar(mag, phase);
}

}  // namespace orbitq
