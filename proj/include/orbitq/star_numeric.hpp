#pragma once

#include <optional>

#include "orbitq/fourier.hpp"
#include "orbitq/grid.hpp"
#include "orbitq/lie.hpp"
#include "orbitq/operator_rep.hpp"
#include "orbitq/symbol.hpp"

namespace orbitq {

struct StarResult {
    Grid2 grid;
    bool aliasing_warning = false;
    bool converged = false;
    int terms_used = 0;
};

/// Left Moyal multiplication i*A~ star g on a (p,q) grid, from the termwise
/// series: q-derivatives of g spectral, p-derivatives of g spectral, the
/// derivatives of A~ exact (it is linear in p). The series is summed until the
/// terms fall below machine precision or max_order is reached; for g
/// band-limited in p this reproduces the exact truncation order. The number
/// of terms needed grows like half the u-domain radius, so the cap covers
/// grids up to 1024 points at the default box.
StarResult numeric_star(const AlgebraElement& A, const Grid2& g, double lambda,
                        int max_order = 320);

/// Ground-truth conjugation F_p (i*A~ star F_p^{-1} f) on an (x,q) grid.
StarResult numeric_lhat(const AlgebraElement& A, const Grid2& f, double lambda,
                        int max_order = 320);

/// Apply a first-order operator in s to an (x,q) grid. Under the e^{+ipx}
/// transform kernel the operator variable realizes on the grid as
/// s = q + x/2 (so d/ds = (1/2) d/dq + d/dx); t = q - x/2 is the
/// complementary direction the conjugated operators commute with.
Grid2 apply_diffop(const DiffOp1& d, const Grid2& f, std::complex<double> lambda,
                   std::complex<double> sigma = {});

Grid2 deriv_s(const Grid2& f);
Grid2 deriv_t(const Grid2& f);

/// Sample a symbol on a (p,q) grid.
Grid2 sample_symbol(const SymbolFunction& f, const Grid2& shape, std::complex<double> lambda,
                    std::complex<double> sigma = {});

}  // namespace orbitq
