#pragma once

#include <complex>
#include <string>
#include <vector>

namespace orbitq {

enum class Axis { P, X };

/// Uniform complex grid over (u, q) with u either the momentum-like
/// coordinate p on [-L/2, L/2) or its Fourier dual x, and q on [0, 2*pi).
/// Row major: sample(iu, iq). Sizes are powers of two (>= 4) so the centered
/// transform phase factors stay exact.
class Grid2 {
public:
    Grid2(Axis axis, int nu, int nq, double length_u);

    static Grid2 zeros(Axis axis, int nu, int nq, double length_u) {
        return Grid2(axis, nu, nq, length_u);
    }

    Axis axis() const { return axis_; }
    int nu() const { return nu_; }
    int nq() const { return nq_; }
    double length_u() const { return length_u_; }
    double du() const { return length_u_ / nu_; }
    double u(int i) const { return (i - nu_ / 2) * du(); }
    double q(int j) const { return 2.0 * M_PI * j / nq_; }

    std::complex<double>& at(int iu, int iq) { return a_[size_t(iu) * nq_ + iq]; }
    const std::complex<double>& at(int iu, int iq) const { return a_[size_t(iu) * nq_ + iq]; }
    std::vector<std::complex<double>>& data() { return a_; }
    const std::vector<std::complex<double>>& data() const { return a_; }

    /// Dual grid geometry: du * dx = 2*pi / n.
    double dual_length() const { return 2.0 * M_PI * nu_ / length_u_; }

private:
    Axis axis_;
    int nu_, nq_;
    double length_u_;
    std::vector<std::complex<double>> a_;
};

double l2_norm(const Grid2& g);
/// Relative L2 distance over the central half of the u range (wrap-around
/// guard); q enters fully.
double rel_l2_interior(const Grid2& a, const Grid2& b);
double rel_l2_interior_to(const Grid2& diff, const Grid2& ref);

Grid2 operator+(const Grid2& a, const Grid2& b);
Grid2 operator-(const Grid2& a, const Grid2& b);
Grid2 operator*(std::complex<double> c, const Grid2& g);
Grid2 pointwise_mul(const Grid2& a, const Grid2& b);

/// Binary grid file: 32-byte header (magic "ORBITQG1", u32 axis, u32 nu,
/// u32 nq, f64 length, 4 pad bytes), then nu*nq little-endian complex doubles.
void write_grid(const std::string& path, const Grid2& g);
Grid2 read_grid(const std::string& path);

}  // namespace orbitq
