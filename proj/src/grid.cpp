#include "orbitq/grid.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace orbitq {

namespace {

bool power_of_two(int n) { return n >= 4 && (n & (n - 1)) == 0; }

}  // namespace

Grid2::Grid2(Axis axis, int nu, int nq, double length_u)
    : axis_(axis), nu_(nu), nq_(nq), length_u_(length_u), a_(size_t(nu) * nq) {
    if (!power_of_two(nu) || !power_of_two(nq))
        throw std::invalid_argument("grid sizes must be powers of two (>= 4)");
    if (!(length_u > 0)) throw std::invalid_argument("grid length must be positive");
}

double l2_norm(const Grid2& g) {
    double s = 0.0;
#pragma omp parallel for reduction(+ : s)
    for (long long i = 0; i < (long long)g.data().size(); ++i) s += std::norm(g.data()[i]);
    return std::sqrt(s);
}

double rel_l2_interior(const Grid2& a, const Grid2& b) {
    if (a.nu() != b.nu() || a.nq() != b.nq())
        throw std::invalid_argument("grid size mismatch");
    double num = 0.0, den = 0.0;
    const int lo = a.nu() / 4, hi = 3 * a.nu() / 4;
#pragma omp parallel for reduction(+ : num, den)
    for (int i = lo; i < hi; ++i)
        for (int j = 0; j < a.nq(); ++j) {
            num += std::norm(a.at(i, j) - b.at(i, j));
            den += std::norm(b.at(i, j));
        }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

double rel_l2_interior_to(const Grid2& diff, const Grid2& ref) {
    double num = 0.0, den = 0.0;
    const int lo = diff.nu() / 4, hi = 3 * diff.nu() / 4;
#pragma omp parallel for reduction(+ : num, den)
    for (int i = lo; i < hi; ++i)
        for (int j = 0; j < diff.nq(); ++j) {
            num += std::norm(diff.at(i, j));
            den += std::norm(ref.at(i, j));
        }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

Grid2 operator+(const Grid2& a, const Grid2& b) {
    Grid2 r = a;
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] += b.data()[i];
    return r;
}

Grid2 operator-(const Grid2& a, const Grid2& b) {
    Grid2 r = a;
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= b.data()[i];
    return r;
}

Grid2 operator*(std::complex<double> c, const Grid2& g) {
    Grid2 r = g;
    for (auto& v : r.data()) v *= c;
    return r;
}

Grid2 pointwise_mul(const Grid2& a, const Grid2& b) {
    Grid2 r = a;
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] *= b.data()[i];
    return r;
}

void write_grid(const std::string& path, const Grid2& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    char header[32] = {};
    std::memcpy(header, "ORBITQG1", 8);
    const uint32_t axis = g.axis() == Axis::P ? 0u : 1u;
    const uint32_t nu = uint32_t(g.nu()), nq = uint32_t(g.nq());
    const double len = g.length_u();
    std::memcpy(header + 8, &axis, 4);
    std::memcpy(header + 12, &nu, 4);
    std::memcpy(header + 16, &nq, 4);
    std::memcpy(header + 20, &len, 8);
    out.write(header, 32);
    out.write(reinterpret_cast<const char*>(g.data().data()),
              std::streamsize(g.data().size() * sizeof(std::complex<double>)));
    if (!out) throw std::runtime_error("short write to " + path);
}

Grid2 read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char header[32];
    in.read(header, 32);
    if (!in || std::memcmp(header, "ORBITQG1", 8) != 0)
        throw std::runtime_error("bad grid header in " + path);
    uint32_t axis, nu, nq;
    double len;
    std::memcpy(&axis, header + 8, 4);
    std::memcpy(&nu, header + 12, 4);
    std::memcpy(&nq, header + 16, 4);
    std::memcpy(&len, header + 20, 8);
    Grid2 g(axis == 0 ? Axis::P : Axis::X, int(nu), int(nq), len);
    in.read(reinterpret_cast<char*>(g.data().data()),
            std::streamsize(g.data().size() * sizeof(std::complex<double>)));
    if (!in) throw std::runtime_error("short read from " + path);
    return g;
}

}  // namespace orbitq
