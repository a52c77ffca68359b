#pragma once

#include <cstdlib>
#include <random>

#include "orbitq/lie.hpp"
#include "orbitq/symbol.hpp"

namespace orbitq {

/// Seed from ORBITQ_SEED when set, otherwise a fixed default so suites are
/// reproducible run to run.
inline std::mt19937_64 make_rng() {
    unsigned long long seed = 0x0051EEDULL;
    if (const char* env = std::getenv("ORBITQ_SEED")) seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed);
}

inline Rat rand_rat(std::mt19937_64& rng, int max_abs_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return rat(num(rng), den(rng));
}

inline Rat rand_rat_nonzero(std::mt19937_64& rng, int max_abs_num = 9, int max_den = 9) {
    Rat r;
    do {
        r = rand_rat(rng, max_abs_num, max_den);
    } while (sgn(r) == 0);
    return r;
}

/// Random real rational element of the algebra.
inline AlgebraElement rand_algebra_real(std::mt19937_64& rng) {
    return {Scalar(rand_rat(rng)), Scalar(rand_rat(rng)), Scalar(rand_rat(rng))};
}

/// Random element with degree-one polynomial coefficients in lambda and sigma,
/// exercising the full coefficient ring.
inline AlgebraElement rand_algebra_scalar(std::mt19937_64& rng) {
    auto coeff = [&]() {
        Scalar s(CRat(rand_rat(rng), rand_rat(rng)));
        s += Scalar(rand_rat(rng)) * Scalar::lambda();
        s += Scalar(rand_rat(rng)) * Scalar::sigma();
        return s;
    };
    return {coeff(), coeff(), coeff()};
}

/// Random exact group element: a short product of unipotent and diagonal
/// generators with small rational parameters.
inline GroupElement rand_group_exact(std::mt19937_64& rng, int factors = 4) {
    std::uniform_int_distribution<int> kind(0, 2);
    GroupElement g = GroupElement::identity();
    for (int j = 0; j < factors; ++j) {
        switch (kind(rng)) {
            case 0: g = g * GroupElement::upper_unipotent(rand_rat(rng, 3, 3)); break;
            case 1: g = g * GroupElement::lower_unipotent(rand_rat(rng, 3, 3)); break;
            default: g = g * GroupElement::diagonal(rand_rat_nonzero(rng, 3, 3)); break;
        }
    }
    return g;
}

/// Random dual point with rational coordinates.
inline DualElement rand_dual_real(std::mt19937_64& rng) {
    return {Scalar(rand_rat(rng)), Scalar(rand_rat(rng)), Scalar(rand_rat(rng))};
}

/// Random symbol with bounded p degree and bandwidth.
inline SymbolFunction rand_symbol(std::mt19937_64& rng, int max_deg_p = 2, int max_band = 3) {
    std::uniform_int_distribution<int> nd(0, max_deg_p);
    std::uniform_int_distribution<int> nn(-max_band, max_band);
    std::uniform_int_distribution<int> count(1, 4);
    SymbolFunction f;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        Scalar c(CRat(rand_rat(rng), rand_rat(rng)));
        c += Scalar(rand_rat(rng)) * Scalar::lambda();
        f.set_term(nn(rng), nd(rng), c);
    }
    return f;
}

}  // namespace orbitq
