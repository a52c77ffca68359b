#include <doctest.h>

#include "orbitq/orbits.hpp"
#include "orbitq/sampling.hpp"
#include "orbitq/symbol.hpp"

using namespace orbitq;

TEST_CASE("casimir values") {
    Scalar l = Scalar::lambda();
    CHECK(casimir(DualElement{Scalar(0), l, Scalar(0)}) == Scalar::lambda(2));
    CHECK(casimir(DualElement{}).is_zero());
    CHECK(casimir(DualElement{Scalar(1), Scalar(0), Scalar(1)}).is_zero());
}

TEST_CASE("classification of representative points") {
    OrbitClass one = classify(DualElement{Scalar(0), Scalar(1), Scalar(0)});
    CHECK(one.tag == OrbitTag::OneSheeted);
    CHECK(one.casimir == rat(1));
    CHECK(one.lambda.has_value());
    CHECK(*one.lambda == rat(1));

    OrbitClass origin = classify(DualElement{});
    CHECK(origin.tag == OrbitTag::Origin);

    OrbitClass two = classify(DualElement{Scalar(0), Scalar(0), Scalar(1)});
    CHECK(two.tag == OrbitTag::TwoSheeted);
    CHECK(two.casimir == rat(-1));
    CHECK(two.sheet_sign == 1);

    OrbitClass cone = classify(DualElement{Scalar(1), Scalar(0), Scalar(-1)});
    CHECK(cone.tag == OrbitTag::ConeSheet);
    CHECK(cone.sheet_sign == -1);

    CHECK_THROWS(classify(DualElement{Scalar::lambda(), Scalar(0), Scalar(0)}));
    CHECK_THROWS(classify(DualElement{Scalar(CRat(Rat(0), Rat(1))), Scalar(0), Scalar(0)}));
}

TEST_CASE("classification is a coadjoint invariant") {
    auto rng = make_rng();
    for (int t = 0; t < 100; ++t) {
        DualElement F = rand_dual_real(rng);
        GroupElement g = rand_group_exact(rng);
        DualElement moved = coadjoint(g, F);
        CHECK(casimir(moved) == casimir(F));
        CHECK(classify(moved) == classify(F));
    }
}

TEST_CASE("normal forms") {
    NormalForm h = normal_form(AlgebraElement::H());
    CHECK(h.tag == NormalFormTag::Diagonal);
    CHECK(h.lambda.has_value());
    CHECK(*h.lambda == rat(1));

    CHECK(normal_form(AlgebraElement{}).tag == NormalFormTag::Zero);

    NormalForm xy = normal_form(AlgebraElement::X() + AlgebraElement::Y());
    CHECK(xy.tag == NormalFormTag::NilpotentUpper);

    NormalForm xmy = normal_form(AlgebraElement::X() - AlgebraElement::Y());
    CHECK(xmy.tag == NormalFormTag::NilpotentLower);

    NormalForm y = normal_form(Scalar(3) * AlgebraElement::Y());
    CHECK(y.tag == NormalFormTag::RotationPlus);
    CHECK(*y.lambda == rat(3));
    CHECK(normal_form(Scalar(-3) * AlgebraElement::Y()).tag == NormalFormTag::RotationMinus);

    // tags agree with the orbit classification through the identification
    auto rng = make_rng();
    for (int t = 0; t < 50; ++t) {
        AlgebraElement A = rand_algebra_real(rng);
        NormalForm nf = normal_form(A);
        OrbitClass cls = classify(hat_map(A));
        switch (cls.tag) {
            case OrbitTag::OneSheeted: CHECK(nf.tag == NormalFormTag::Diagonal); break;
            case OrbitTag::Origin: CHECK(nf.tag == NormalFormTag::Zero); break;
            case OrbitTag::TwoSheeted:
                CHECK(nf.tag == (cls.sheet_sign > 0 ? NormalFormTag::RotationPlus
                                                    : NormalFormTag::RotationMinus));
                break;
            case OrbitTag::ConeSheet:
                CHECK(nf.tag == (cls.sheet_sign > 0 ? NormalFormTag::NilpotentUpper
                                                    : NormalFormTag::NilpotentLower));
                break;
        }
    }

    // conjugation does not move the normal form
    for (int t = 0; t < 50; ++t) {
        AlgebraElement A = rand_algebra_real(rng);
        GroupElement g = rand_group_exact(rng);
        CHECK(normal_form(ad_action(g, A)) == normal_form(A));
    }
}

TEST_CASE("chart point map at quarter angles") {
    Scalar l = Scalar::lambda();
    // base point of the one-sheeted family
    CHECK(psi(Scalar(0), QuarterAngle::Q0, l) == DualElement{Scalar(0), l, Scalar(0)});
    // generic p at angle zero
    Scalar p = Scalar(rat(3, 7));
    CHECK(psi(p, QuarterAngle::Q0, l) == DualElement{p, l, p});
    CHECK(psi(p, QuarterAngle::Q90, l) == DualElement{-l, p, p});

    // the image satisfies the level equation at every quarter angle
    for (QuarterAngle q : {QuarterAngle::Q0, QuarterAngle::Q90, QuarterAngle::Q180,
                           QuarterAngle::Q270})
        CHECK(casimir(psi(p, q, l)) == Scalar::lambda(2));

    // instantiated images land on the same sheet as the base point
    Scalar l0(rat(5, 3));
    const OrbitClass base = classify(DualElement{Scalar(0), l0, Scalar(0)});
    for (QuarterAngle q : {QuarterAngle::Q0, QuarterAngle::Q90, QuarterAngle::Q180,
                           QuarterAngle::Q270})
        for (const Rat& pv : {rat(0), rat(1, 2), rat(-7, 3)})
            CHECK(classify(psi(Scalar(pv), q, l0)) == base);
}

TEST_CASE("chart point map as a symbol identity") {
    // M^2 + N^2 - P^2 = lambda^2 identically in p and the q modes
    SymbolFunction m = chart_m(), n = chart_n(), p = chart_p();
    CHECK(m * m + n * n - p * p == SymbolFunction(Scalar::lambda(2)));
}

TEST_CASE("numeric chart samples lie on the level set") {
    for (double p : {-2.0, 0.0, 0.7}) {
        for (double q : {0.0, 0.4, 2.0, 5.5}) {
            auto [x, h, y] = psi_numeric(p, q, 1.25);
            CHECK(x * x + h * h - y * y == doctest::Approx(1.25 * 1.25).epsilon(1e-12));
        }
    }
}
