#include <doctest.h>

#include <cmath>

#include "orbitq/lie.hpp"
#include "orbitq/sampling.hpp"

using namespace orbitq;

namespace {

// Independent oracle: the bracket as a literal 2x2 matrix commutator.
AlgebraElement bracket_oracle(const AlgebraElement& A, const AlgebraElement& B) {
    Mat2 ma = to_matrix(A), mb = to_matrix(B);
    Mat2 comm;
    comm.e[0] = ma.e[0] * mb.e[0] + ma.e[1] * mb.e[2] - (mb.e[0] * ma.e[0] + mb.e[1] * ma.e[2]);
    comm.e[1] = ma.e[0] * mb.e[1] + ma.e[1] * mb.e[3] - (mb.e[0] * ma.e[1] + mb.e[1] * ma.e[3]);
    comm.e[2] = ma.e[2] * mb.e[0] + ma.e[3] * mb.e[2] - (mb.e[2] * ma.e[0] + mb.e[3] * ma.e[2]);
    comm.e[3] = ma.e[2] * mb.e[1] + ma.e[3] * mb.e[3] - (mb.e[2] * ma.e[1] + mb.e[3] * ma.e[3]);
    return from_matrix(comm);
}

// 30-term power series for exp of a 2x2 double matrix.
Mat2d exp_series(const Mat2d& m) {
    Mat2d term{{1, 0, 0, 1}};
    Mat2d sum = term;
    for (int k = 1; k <= 30; ++k) {
        Mat2d next;
        next.e[0] = (term.e[0] * m.e[0] + term.e[1] * m.e[2]) / k;
        next.e[1] = (term.e[0] * m.e[1] + term.e[1] * m.e[3]) / k;
        next.e[2] = (term.e[2] * m.e[0] + term.e[3] * m.e[2]) / k;
        next.e[3] = (term.e[2] * m.e[1] + term.e[3] * m.e[3]) / k;
        term = next;
        for (int j = 0; j < 4; ++j) sum.e[j] += term.e[j];
    }
    return sum;
}

double max_abs_diff(const Mat2d& a, const Mat2d& b) {
    double m = 0;
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.e[j] - b.e[j]));
    return m;
}

}  // namespace

TEST_CASE("bracket relations") {
    const AlgebraElement X = AlgebraElement::X(), H = AlgebraElement::H(),
                         Y = AlgebraElement::Y();
    CHECK(bracket(H, X) == Scalar(2) * Y);
    CHECK(bracket(H, Y) == Scalar(2) * X);
    CHECK(bracket(X, Y) == Scalar(-2) * H);
    CHECK(bracket(X, X).is_zero());

    auto rng = make_rng();
    for (int t = 0; t < 30; ++t) {
        AlgebraElement A = rand_algebra_scalar(rng), B = rand_algebra_scalar(rng);
        CHECK(bracket(A, B) == bracket_oracle(A, B));
        CHECK(bracket(A, B) == -bracket(B, A));
    }
}

TEST_CASE("jacobi identity on basis triples") {
    const std::array<AlgebraElement, 3> basis = {AlgebraElement::X(), AlgebraElement::H(),
                                                 AlgebraElement::Y()};
    for (const auto& A : basis)
        for (const auto& B : basis)
            for (const auto& C : basis) {
                AlgebraElement jac = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) +
                                     bracket(C, bracket(A, B));
                CHECK(jac.is_zero());
            }
}

TEST_CASE("killing form values and signature") {
    const AlgebraElement X = AlgebraElement::X(), H = AlgebraElement::H(),
                         Y = AlgebraElement::Y();
    CHECK(killing(X, X) == Scalar(8));
    CHECK(killing(X, H) == Scalar(0));
    CHECK(killing(Y, Y) == Scalar(-8));

    auto rng = make_rng();
    for (int t = 0; t < 30; ++t) {
        AlgebraElement A = rand_algebra_real(rng), B = rand_algebra_real(rng);
        // closed form 8(a a' + b b' - c c')
        Scalar closed = Scalar(8) * (A.a * B.a + A.b * B.b - A.c * B.c);
        CHECK(killing(A, B) == closed);
        CHECK(killing(A, B) == killing(B, A));
        // quarter Killing form equals the matrix trace pairing
        Mat2 prod = to_matrix(A) * to_matrix(B);
        CHECK(killing(A, B) == Scalar(4) * (prod.e[0] + prod.e[3]));
    }
}

TEST_CASE("hat map and pairing") {
    CHECK(hat_map(AlgebraElement::X()) == DualElement{Scalar(1), Scalar(0), Scalar(0)});
    CHECK(hat_map(AlgebraElement::Y()) == DualElement{Scalar(0), Scalar(0), Scalar(1)});
    CHECK(hat_map(AlgebraElement{}).is_zero());

    CHECK(pair(hat_map(AlgebraElement::X()), AlgebraElement::X()) == Scalar(2));
    CHECK(pair(DualElement{Scalar(1), Scalar(2), Scalar(3)}, AlgebraElement{}).is_zero());

    auto rng = make_rng();
    for (int t = 0; t < 30; ++t) {
        AlgebraElement A = rand_algebra_scalar(rng), B = rand_algebra_scalar(rng);
        Mat2 prod = to_matrix(A) * to_matrix(B);
        CHECK(pair(hat_map(A), B) == prod.e[0] + prod.e[3]);
        CHECK(hat_inv(hat_map(A)) == A);
    }
}

TEST_CASE("adjoint action by explicit conjugation") {
    const AlgebraElement H = AlgebraElement::H();
    GroupElement u = GroupElement::upper_unipotent(rat(1));
    AlgebraElement expected = H - (AlgebraElement::X() + AlgebraElement::Y());
    CHECK(ad_action(u, H) == expected);

    GroupElement d = GroupElement::diagonal(rat(2));
    AlgebraElement xpy = AlgebraElement::X() + AlgebraElement::Y();
    // diag(2,1/2) [[0,2],[0,0]] diag(1/2,2) = [[0,8],[0,0]] = 4(X+Y)
    CHECK(ad_action(d, xpy) == Scalar(4) * xpy);

    CHECK(ad_action(GroupElement::identity(), H) == H);
    CHECK_THROWS(GroupElement(Mat2{{Scalar(2), Scalar(0), Scalar(0), Scalar(2)}}));
}

TEST_CASE("coadjoint action and equivariance") {
    auto rng = make_rng();
    DualElement F{Scalar(rat(1, 2)), Scalar(rat(-3, 4)), Scalar(rat(2, 3))};
    CHECK(coadjoint(GroupElement::identity(), F) == F);
    for (int t = 0; t < 100; ++t) {
        GroupElement g = rand_group_exact(rng);
        AlgebraElement A = rand_algebra_scalar(rng);
        CHECK(hat_map(ad_action(g, A)) == coadjoint(g, hat_map(A)));
        // defining pairing identity on every basis vector
        DualElement KF = coadjoint(g, hat_map(A));
        GroupElement ginv = g.inverse();
        for (const auto& Z : {AlgebraElement::X(), AlgebraElement::H(), AlgebraElement::Y()})
            CHECK(pair(KF, Z) == pair(hat_map(A), ad_action(ginv, Z)));
    }
}

TEST_CASE("borel exponential with the sinh(a)/a off-diagonal") {
    GroupElement g0 = exp_borel(0.0, 2.5);
    CHECK(g0.numeric_matrix().e[1] == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(g0.numeric_matrix().e[0] == doctest::Approx(1.0));

    GroupElement g1 = exp_borel(1.0, 0.0);
    CHECK(g1.numeric_matrix().e[0] == doctest::Approx(std::exp(1.0)));
    CHECK(g1.numeric_matrix().e[1] == doctest::Approx(0.0));

    GroupElement g2 = exp_borel(1.0, 1.0);
    CHECK(g2.numeric_matrix().e[1] == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));

    // series oracle on a small sweep
    for (double a : {-3.0, -1.0, -0.3, 1e-10, 0.5, 2.0, 3.0})
        for (double b : {-2.0, 0.0, 1.0, 3.0}) {
            Mat2d oracle = exp_series(Mat2d{{a, b, 0.0, -a}});
            CHECK(max_abs_diff(exp_borel(a, b).numeric_matrix(), oracle) < 1e-12);
        }

    // the off-diagonal is b*sinh(a)/a, not b*sinh(a); the two only
    // coincide at |a| = 1, so pin a point where they differ
    Mat2d oracle = exp_series(Mat2d{{2.0, 1.0, 0.0, -2.0}});
    CHECK(std::abs(oracle.e[1] - std::sinh(2.0) / 2.0) < 1e-12);
    CHECK(std::abs(oracle.e[1] - std::sinh(2.0)) > 1.0);
}

TEST_CASE("rotation exponential") {
    CHECK(max_abs_diff(exp_rotation(0.0).numeric_matrix(), Mat2d{{1, 0, 0, 1}}) == 0.0);
    Mat2d quarter = exp_rotation(M_PI / 2).numeric_matrix();
    CHECK(quarter.e[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(quarter.e[1] == doctest::Approx(1.0));
    CHECK(quarter.e[2] == doctest::Approx(-1.0));
    for (double a : {-3.0, -0.7, 0.1, 1.3, 3.0}) {
        Mat2d oracle = exp_series(Mat2d{{0.0, a, -a, 0.0}});
        CHECK(max_abs_diff(exp_rotation(a).numeric_matrix(), oracle) < 1e-12);
    }
}

TEST_CASE("iwasawa factors") {
    GroupElement ident = exp_rotation(0.0);
    IwasawaFactors f0 = iwasawa(ident);
    CHECK(f0.x == doctest::Approx(0.0));
    CHECK(f0.y == doctest::Approx(1.0));
    CHECK(f0.theta == doctest::Approx(0.0));

    for (double t0 : {0.3, 1.2, 2.9, 4.5, 6.1}) {
        IwasawaFactors f = iwasawa(exp_rotation(t0));
        CHECK(f.x == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(f.y == doctest::Approx(1.0));
        CHECK(f.theta == doctest::Approx(t0));
    }

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 50; ++t) {
        GroupElement g = exp_borel(u(rng), u(rng)) * exp_rotation(u(rng)) *
                         exp_borel(u(rng), u(rng));
        IwasawaFactors f = iwasawa(g);
        CHECK(f.y > 0.0);
        CHECK(f.theta >= 0.0);
        CHECK(f.theta < 2 * M_PI);
        Mat2d re = iwasawa_compose(f);
        CHECK(max_abs_diff(re, g.numeric_matrix()) < 1e-10);
    }
}
