#include "orbitq/orbits.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitq {

Scalar casimir(const DualElement& F) { return F.x * F.x + F.h * F.h - F.y * F.y; }

std::string orbit_tag_name(OrbitTag t) {
    switch (t) {
        case OrbitTag::OneSheeted: return "one-sheeted";
        case OrbitTag::ConeSheet: return "cone";
        case OrbitTag::Origin: return "origin";
        case OrbitTag::TwoSheeted: return "two-sheeted";
    }
    return "?";
}

namespace {

Rat real_rational(const Scalar& s, const char* what) {
    if (!s.is_constant())
        throw std::invalid_argument(std::string(what) + ": parameterized coordinate rejected");
    CRat c = s.constant_value();
    if (!c.is_real())
        throw std::invalid_argument(std::string(what) + ": non-real coordinate rejected");
    return c.re;
}

}  // namespace

OrbitClass classify(const DualElement& F) {
    const Rat x = real_rational(F.x, "classify");
    const Rat h = real_rational(F.h, "classify");
    const Rat y = real_rational(F.y, "classify");
    const Rat cas = x * x + h * h - y * y;

    OrbitClass out;
    out.casimir = cas;
    Rat root;
    if (sgn(cas) > 0) {
        out.tag = OrbitTag::OneSheeted;
        if (rat_is_perfect_square(cas, root)) out.lambda = root;
    } else if (sgn(cas) < 0) {
        out.tag = OrbitTag::TwoSheeted;
        out.sheet_sign = sgn(y);
        if (rat_is_perfect_square(Rat(-cas), root)) out.lambda = root;
    } else if (sgn(x) == 0 && sgn(h) == 0 && sgn(y) == 0) {
        out.tag = OrbitTag::Origin;
    } else {
        out.tag = OrbitTag::ConeSheet;
        out.sheet_sign = sgn(y);
    }
    return out;
}

std::string normal_form_name(NormalFormTag t) {
    switch (t) {
        case NormalFormTag::Diagonal: return "diagonal";
        case NormalFormTag::RotationPlus: return "rotation+";
        case NormalFormTag::RotationMinus: return "rotation-";
        case NormalFormTag::NilpotentUpper: return "nilpotent-upper";
        case NormalFormTag::NilpotentLower: return "nilpotent-lower";
        case NormalFormTag::Zero: return "zero";
    }
    return "?";
}

NormalForm normal_form(const AlgebraElement& A) {
    const OrbitClass cls = classify(hat_map(A));
    NormalForm out;
    out.lambda_sq = sgn(cls.casimir) < 0 ? Rat(-cls.casimir) : cls.casimir;
    Rat root;
    if (rat_is_perfect_square(out.lambda_sq, root)) out.lambda = root;
    switch (cls.tag) {
        case OrbitTag::OneSheeted: out.tag = NormalFormTag::Diagonal; break;
        case OrbitTag::TwoSheeted:
            out.tag = cls.sheet_sign > 0 ? NormalFormTag::RotationPlus
                                         : NormalFormTag::RotationMinus;
            break;
        case OrbitTag::ConeSheet:
            out.tag = cls.sheet_sign > 0 ? NormalFormTag::NilpotentUpper
                                         : NormalFormTag::NilpotentLower;
            break;
        case OrbitTag::Origin: out.tag = NormalFormTag::Zero; break;
    }
    return out;
}

DualElement psi(const Scalar& p, QuarterAngle q, const Scalar& lambda) {
    // (cos q, sin q) at the four quarter turns
    long cq = 0, sq = 0;
    switch (q) {
        case QuarterAngle::Q0: cq = 1; sq = 0; break;
        case QuarterAngle::Q90: cq = 0; sq = 1; break;
        case QuarterAngle::Q180: cq = -1; sq = 0; break;
        case QuarterAngle::Q270: cq = 0; sq = -1; break;
    }
    Scalar c(cq), s(sq);
    return {c * p - s * lambda, s * p + c * lambda, p};
}

std::array<double, 3> psi_numeric(double p, double q, double lambda) {
    return {p * std::cos(q) - lambda * std::sin(q), p * std::sin(q) + lambda * std::cos(q), p};
}

}  // namespace orbitq
