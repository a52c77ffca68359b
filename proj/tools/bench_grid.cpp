// Timing comparison between the serial reference kernels and the
// OpenMP/FFT paths used by the numeric oracle.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "orbitq/fourier.hpp"
#include "orbitq/grid.hpp"

using namespace orbitq;

namespace {

Grid2 test_grid(int n) {
    Grid2 g(Axis::P, n, n, 16.0);
    for (int i = 0; i < n; ++i) {
        const double p = g.u(i);
        for (int j = 0; j < n; ++j)
            g.at(i, j) = std::exp(-p * p / 2.0) * std::polar(1.0, g.q(j));
    }
    return g;
}

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm up
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %8s %12s %12s %9s\n", "kernel", "n", "serial ms", "parallel ms",
                "speedup");
    for (int n : {64, 128, 256}) {
        Grid2 g = test_grid(n);
        const int reps = n <= 128 ? 5 : 3;

        double serial = time_ms([&] { volatile auto r = to_x_reference(g); (void)r; }, reps);
        double fast = time_ms([&] { volatile auto r = to_x(g); (void)r; }, reps);
        std::printf("%-28s %8d %12.3f %12.3f %8.1fx\n", "centered transform", n, serial, fast,
                    serial / fast);

        serial = time_ms([&] { volatile auto r = deriv_u_reference(g); (void)r; }, reps);
        fast = time_ms([&] { volatile auto r = deriv_u(g); (void)r; }, reps);
        std::printf("%-28s %8d %12.3f %12.3f %8.1fx\n", "spectral derivative", n, serial, fast,
                    serial / fast);
    }
    return 0;
}
