#pragma once

#include <array>
#include <optional>
#include <string>

#include "orbitq/lie.hpp"

namespace orbitq {

/// Casimir invariant x^2 + h^2 - y^2; constant on every coadjoint orbit.
Scalar casimir(const DualElement& F);

enum class OrbitTag { OneSheeted, ConeSheet, Origin, TwoSheeted };

struct OrbitClass {
    OrbitTag tag;
    Rat casimir;                 // exact value at the classified point
    int sheet_sign = 0;          // sign of y for the cone / two-sheeted families
    std::optional<Rat> lambda;   // present when |casimir| is a perfect rational square

    friend bool operator==(const OrbitClass& a, const OrbitClass& b) {
        return a.tag == b.tag && a.casimir == b.casimir && a.sheet_sign == b.sheet_sign;
    }
};

std::string orbit_tag_name(OrbitTag t);

/// Classify a parameter-free rational point of the dual space. Throws on
/// parameterized or non-real input (sign tests are undecidable there).
OrbitClass classify(const DualElement& F);

enum class NormalFormTag {
    Diagonal,        // diag(l, -l)
    RotationPlus,    // [[0, l], [-l, 0]]
    RotationMinus,   // [[0, -l], [l, 0]]
    NilpotentUpper,  // [[0, t], [0, 0]], t > 0
    NilpotentLower,  // [[0, 0], [t, 0]], t > 0
    Zero,
};

struct NormalForm {
    NormalFormTag tag;
    Rat lambda_sq;               // |casimir of hat(A)|
    std::optional<Rat> lambda;

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.tag == b.tag && a.lambda_sq == b.lambda_sq;
    }
};

std::string normal_form_name(NormalFormTag t);

/// Conjugacy normal form of a parameter-free rational algebra element,
/// decided by the invariants of hat_map(A) (no conjugating matrix is built).
NormalForm normal_form(const AlgebraElement& A);

/// Quarter-turn angles, where cos and sin stay rational and the chart map
/// can be evaluated inside the exact coefficient ring.
enum class QuarterAngle { Q0, Q90, Q180, Q270 };

/// Darboux chart point map at a quarter angle:
///   (M, N, P) = (p cos q - lambda sin q, p sin q + lambda cos q, p).
DualElement psi(const Scalar& p, QuarterAngle q, const Scalar& lambda);

/// Same map at a floating-point angle; returns (x, h, y).
std::array<double, 3> psi_numeric(double p, double q, double lambda);

}  // namespace orbitq
