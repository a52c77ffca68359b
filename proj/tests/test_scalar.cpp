#include <doctest.h>

#include "orbitq/sampling.hpp"
#include "orbitq/scalar.hpp"

using namespace orbitq;

TEST_CASE("gaussian rational arithmetic is exact") {
    CRat a(rat(1, 3), rat(2, 5));
    CRat b(rat(-2, 7), rat(1, 2));
    CHECK(a + b - b == a);
    CHECK(a * inv(a) == CRat(1));
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(crat_str(CRat(rat(1, 2), rat(-3, 4))) == "1/2-3/4 i");
    CHECK(crat_str(CRat(rat(3, 4), rat(1, 2))) == "3/4+1/2 i");
}

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_from_string("-6/8") == rat(-3, 4));
    CHECK(rat_from_string("5") == rat(5));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("abc"));
}

TEST_CASE("perfect square detection") {
    Rat root;
    CHECK(rat_is_perfect_square(rat(9, 4), root));
    CHECK(root == rat(3, 2));
    CHECK_FALSE(rat_is_perfect_square(rat(2), root));
    CHECK_FALSE(rat_is_perfect_square(rat(-4), root));
}

TEST_CASE("scalar ring operations stay canonical") {
    Scalar l = Scalar::lambda(), s = Scalar::sigma();
    Scalar f = l * l + Scalar(2) * s - Scalar(1);
    CHECK((f - f).is_zero());
    CHECK(f * Scalar(0) == Scalar());
    CHECK((l + s) * (l - s) == l * l - s * s);
    CHECK(f.deg_lambda() == 2);
    CHECK(f.deg_sigma() == 1);

    // evaluation matches the structure
    CRat v = f.eval(CRat(rat(1, 2)), CRat(rat(3)));
    CHECK(v == CRat(rat(1, 4)) + CRat(rat(6)) - CRat(1));
}

TEST_CASE("scalar ring axioms on random elements") {
    auto rng = make_rng();
    for (int t = 0; t < 50; ++t) {
        auto r = [&] {
            Scalar x(CRat(rand_rat(rng), rand_rat(rng)));
            x += Scalar(rand_rat(rng)) * Scalar::lambda();
            x += Scalar(rand_rat(rng)) * Scalar::sigma(2);
            return x;
        };
        Scalar a = r(), b = r(), c = r();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("lambda -> i lambda substitution") {
    Scalar f = Scalar::lambda(2) + Scalar(3) * Scalar::lambda() + Scalar(1);
    Scalar g = f.lambda_to_i_lambda();
    // lambda^2 -> -lambda^2, lambda -> i lambda
    Scalar expected = -Scalar::lambda(2) + Scalar(CRat(Rat(0), Rat(3))) * Scalar::lambda() +
                      Scalar(1);
    CHECK(g == expected);
    // applying it four times is the identity
    CHECK(f.lambda_to_i_lambda().lambda_to_i_lambda().lambda_to_i_lambda().lambda_to_i_lambda() ==
          f);
}

TEST_CASE("sigma substitution") {
    Scalar f = Scalar::sigma(2) + Scalar::sigma() * Scalar::lambda() + Scalar(1);
    Scalar two_i_lambda = Scalar(CRat(Rat(0), Rat(2))) * Scalar::lambda();
    Scalar g = f.substitute_sigma(two_i_lambda);
    Scalar expected = Scalar(-4) * Scalar::lambda(2) +
                      Scalar(CRat(Rat(0), Rat(2))) * Scalar::lambda(2) + Scalar(1);
    CHECK(g == expected);
}

TEST_CASE("scalar printing") {
    CHECK(Scalar().str() == "0");
    CHECK((Scalar(CRat(Rat(0), Rat(2))) * Scalar::lambda()).str() == "2*i*lambda");
    CHECK((Scalar(4) * Scalar::lambda(2) + Scalar(1)).str() == "1 + 4*lambda^2");
}
