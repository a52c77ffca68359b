#include <doctest.h>

#include "orbitq/operator_rep.hpp"
#include "orbitq/sampling.hpp"

using namespace orbitq;

namespace {

const Scalar kTwoILambdaPlusOne =
    Scalar(CRat(Rat(0), Rat(2))) * Scalar::lambda() + Scalar(1);

}  // namespace

TEST_CASE("trig polynomial algebra") {
    TrigPoly c = TrigPoly::cos(), s = TrigPoly::sin();
    CHECK(c * c + s * s == TrigPoly(Scalar(1)));
    CHECK(c.derivative() == -s);
    CHECK(s.derivative() == c);
    CHECK(TrigPoly::mode(3).derivative() == Scalar(CRat(Rat(0), Rat(3))) * TrigPoly::mode(3));
}

TEST_CASE("quantized operators of the basis") {
    // Y -> -2 d/ds
    DiffOp1 ly = build_lhat(AlgebraElement::Y());
    CHECK(ly.c1 == TrigPoly(Scalar(-2)));
    CHECK(ly.c0.is_zero());

    // X -> 2 cos s d/ds - (2 i lambda + 1) sin s
    DiffOp1 lx = build_lhat(AlgebraElement::X());
    CHECK(lx.c1 == Scalar(2) * TrigPoly::cos());
    CHECK(lx.c0 == -(kTwoILambdaPlusOne * TrigPoly::sin()));

    CHECK(build_lhat(AlgebraElement{}).is_zero());

    // linearity
    auto rng = make_rng();
    for (int t = 0; t < 20; ++t) {
        AlgebraElement A = rand_algebra_real(rng), B = rand_algebra_real(rng);
        CHECK(build_lhat(A + B) == build_lhat(A) + build_lhat(B));
    }
}

TEST_CASE("operator commutators") {
    DiffOp1 lx = build_lhat(AlgebraElement::X());
    DiffOp1 lh = build_lhat(AlgebraElement::H());
    DiffOp1 ly = build_lhat(AlgebraElement::Y());

    CHECK(diffop_commutator(lx, lx).is_zero());

    // [lhat_X, lhat_H] = 4 d/ds = lhat of [X,H] = -2Y
    DiffOp1 c = diffop_commutator(lx, lh);
    CHECK(c.c1 == TrigPoly(Scalar(4)));
    CHECK(c.c0.is_zero());
    CHECK(c == build_lhat(bracket(AlgebraElement::X(), AlgebraElement::H())));

    // [lhat_H, lhat_Y] = lhat_{2X}
    CHECK(diffop_commutator(lh, ly) ==
          build_lhat(Scalar(2) * AlgebraElement::X()));

    CHECK_THROWS(diffop_commutator(lx, build_classical(AlgebraElement::X())));
}

TEST_CASE("operator homomorphism, exact and the printed variant") {
    auto rng = make_rng();
    const std::array<AlgebraElement, 3> basis = {AlgebraElement::X(), AlgebraElement::H(),
                                                 AlgebraElement::Y()};
    for (const auto& A : basis)
        for (const auto& B : basis)
            CHECK(diffop_commutator(build_lhat(A), build_lhat(B)) ==
                  build_lhat(bracket(A, B)));
    for (int t = 0; t < 100; ++t) {
        AlgebraElement A = rand_algebra_real(rng), B = rand_algebra_real(rng);
        CHECK(diffop_commutator(build_lhat(A), build_lhat(B)) == build_lhat(bracket(A, B)));
    }

    // single-factor variant: commutators land at exactly half the target
    const Scalar half(CRat(rat(1, 2)));
    for (const auto& A : basis)
        for (const auto& B : basis) {
            DiffOp1 cp = diffop_commutator(build_lhat(A, true), build_lhat(B, true));
            DiffOp1 target = build_lhat(bracket(A, B), true);
            CHECK(cp == half * target);
            if (!bracket(A, B).is_zero()) CHECK_FALSE(cp == target);
        }
}

TEST_CASE("classical operators") {
    // Y -> d/dtheta
    DiffOp1 ly = build_classical(AlgebraElement::Y());
    CHECK(ly.c1 == TrigPoly(Scalar(1)));
    CHECK(ly.c0.is_zero());
    CHECK(ly.var == OpVar::Theta);

    // X -> (sigma + 1) sin 2theta - cos 2theta d/dtheta
    DiffOp1 lx = build_classical(AlgebraElement::X());
    CHECK(lx.c1 == -TrigPoly::cos(2));
    CHECK(lx.c0 == (Scalar::sigma() + Scalar(1)) * TrigPoly::sin(2));

    // linearity
    auto rng = make_rng();
    for (int t = 0; t < 10; ++t) {
        AlgebraElement A = rand_algebra_real(rng), B = rand_algebra_real(rng);
        CHECK(build_classical(A + B) == build_classical(A) + build_classical(B));
    }

    // classical commutators close the same way, with sigma formal
    const std::array<AlgebraElement, 3> basis = {AlgebraElement::X(), AlgebraElement::H(),
                                                 AlgebraElement::Y()};
    for (const auto& A : basis)
        for (const auto& B : basis)
            CHECK(diffop_commutator(build_classical(A), build_classical(B)) ==
                  build_classical(bracket(A, B)));
    for (int t = 0; t < 100; ++t) {
        AlgebraElement A = rand_algebra_real(rng), B = rand_algebra_real(rng);
        CHECK(diffop_commutator(build_classical(A), build_classical(B)) ==
              build_classical(bracket(A, B)));
    }
}

TEST_CASE("change of variables theta = -s/2") {
    // d/dtheta -> -2 d/ds
    DiffOp1 ly = to_s_coordinates(build_classical(AlgebraElement::Y()));
    CHECK(ly.var == OpVar::S);
    CHECK(ly.c1 == TrigPoly(Scalar(-2)));
    CHECK(ly.c0.is_zero());

    // multiplication by cos 2theta -> cos s
    DiffOp1 mul{OpVar::Theta, TrigPoly(), TrigPoly::cos(2)};
    CHECK(to_s_coordinates(mul).c0 == TrigPoly::cos());

    // L_X -> 2 cos s d/ds - (sigma + 1) sin s
    DiffOp1 lx = to_s_coordinates(build_classical(AlgebraElement::X()));
    CHECK(lx.c1 == Scalar(2) * TrigPoly::cos());
    CHECK(lx.c0 == -((Scalar::sigma() + Scalar(1)) * TrigPoly::sin()));

    // odd modes are rejected
    DiffOp1 odd{OpVar::Theta, TrigPoly(), TrigPoly::cos(1)};
    CHECK_THROWS(to_s_coordinates(odd));
}

TEST_CASE("matching the classical and quantized parameters") {
    RepComparison cmp = compare_reps();
    CHECK(cmp.residuals_zero);
    CHECK(cmp.sigma == Scalar(CRat(Rat(0), Rat(2))) * Scalar::lambda());
    CHECK(cmp.sigma.substitute_lambda(CRat(0)).is_zero());

    // the real substitution sigma = 2 lambda cannot zero the residuals
    bool nonzero = false;
    for (const auto& d : rep_residuals(Scalar(2) * Scalar::lambda()))
        if (!d.is_zero()) nonzero = true;
    CHECK(nonzero);

    // but sigma = 2 i lambda does
    for (const auto& d : rep_residuals(cmp.sigma)) CHECK(d.is_zero());
}

TEST_CASE("band matrices") {
    // lhat_Y is diagonal with entries -2 i n
    BandMatrix my = matrix_elements(build_lhat(AlgebraElement::Y()), 4);
    for (int n = -4; n <= 4; ++n) {
        CHECK(my.at(n, n) == Scalar(CRat(Rat(0), Rat(-2 * n))));
        for (int m = -4; m <= 4; ++m)
            if (m != n) CHECK(my.at(m, n).is_zero());
    }

    CHECK(matrix_elements(DiffOp1{OpVar::S, TrigPoly(), TrigPoly()}, 3) ==
          BandMatrix(3, 0));

    // lhat_X at N = 2: tridiagonal, M[n+1, n] = i(n + 1/2) - lambda and
    // M[n-1, n] = i(n - 1/2) + lambda
    BandMatrix mx = matrix_elements(build_lhat(AlgebraElement::X()), 2);
    for (int n = -2; n <= 2; ++n) {
        if (n + 1 <= 2) {
            Scalar expected = Scalar(CRat(Rat(0), Rat(n))) + Scalar(CRat(Rat(0), rat(1, 2))) -
                              Scalar::lambda();
            CHECK(mx.at(n + 1, n) == expected);
        }
        if (n - 1 >= -2) {
            Scalar expected = Scalar(CRat(Rat(0), Rat(n))) - Scalar(CRat(Rat(0), rat(1, 2))) +
                              Scalar::lambda();
            CHECK(mx.at(n - 1, n) == expected);
        }
        CHECK(mx.at(n, n).is_zero());
    }
    CHECK(mx.bandwidth() == 1);

    // skew symmetry after instantiating lambda
    auto rng = make_rng();
    for (int t = 0; t < 20; ++t) {
        Rat l = rand_rat(rng);
        AlgebraElement A = rand_algebra_real(rng);
        DiffOp1 d = build_lhat(A);
        DiffOp1 inst{d.var, d.c1.substitute_lambda(CRat(l)), d.c0.substitute_lambda(CRat(l))};
        CHECK(matrix_elements(inst, 16).is_skew_hermitian());
    }
}

TEST_CASE("band matrix commutators respect truncation away from the rim") {
    auto rng = make_rng();
    const int N = 8;
    for (int t = 0; t < 10; ++t) {
        AlgebraElement A = rand_algebra_real(rng), B = rand_algebra_real(rng);
        DiffOp1 da = build_lhat(A), db = build_lhat(B);
        BandMatrix ma = matrix_elements(da, N), mb = matrix_elements(db, N);
        BandMatrix comm = ma * mb - mb * ma;
        BandMatrix target = matrix_elements(diffop_commutator(da, db), N);
        const int bw = std::max(ma.bandwidth(), mb.bandwidth());
        for (int m = -(N - bw); m <= N - bw; ++m)
            for (int n = -(N - bw); n <= N - bw; ++n) CHECK(comm.at(m, n) == target.at(m, n));
    }
}
