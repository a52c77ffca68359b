#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitq/lie.hpp"
#include "orbitq/orbits.hpp"

namespace orbitq {

/// Subalgebra of the complexified algebra, given by an explicit basis whose
/// coordinates are constant Gaussian rationals.
struct ComplexSubalgebra {
    std::vector<AlgebraElement> basis;
};

struct PolarizationReport {
    bool is_subalgebra = false;        // eta closed under bracket
    bool contains_stabilizer = false;  // g_F inside eta
    bool ad_invariant = false;         // [g_F, eta] inside eta
    bool m_real_subalgebra = false;    // (eta + conj eta) cut down to g closes
    bool pukanszky = false;
    Scalar character_exponent;         // coefficient of (pi*i*a) for the stabilizer character
    // Extensions of the character across the stabilizer's component group:
    // {"1", "sgn"} for the two-component stabilizers, {"1"} for the
    // connected rotation stabilizer.
    std::vector<std::string> component_characters;

    bool pass() const {
        return is_subalgebra && contains_stabilizer && ad_invariant && m_real_subalgebra &&
               pukanszky;
    }
};

/// Basis of {Z : <F, [Z, W]> = 0 for all W}, by exact 3x3 nullspace; dimension
/// 1 for F != 0 and 3 for F = 0. Accepts coordinates that are constants or
/// constant multiples of a single monomial (a formal lambda scales out).
std::vector<AlgebraElement> stabilizer_algebra(const DualElement& F);

/// Exact annihilator of eta inside the complexified dual, normalized so the
/// leading coefficient in the starred basis (X^*, H^*, Y^*) is 1.
std::vector<DualElement> eta_perp(const ComplexSubalgebra& eta);

/// True iff the Casimir is constant on F + span(eta_perp) as a polynomial
/// identity in the affine parameters, and the sheet sign survives where the
/// orbit family splits into sheets (y-coordinate constancy, or rational
/// sampling of the affine subspace when the annihilator moves y).
bool check_pukanszky(const DualElement& F, const ComplexSubalgebra& eta);

/// Runs the structural checklist; throws on a dependent basis.
PolarizationReport check_polarization(const DualElement& F, const ComplexSubalgebra& eta);

enum class OrbitFamily { OneSheeted, Cone, TwoSheeted };

/// Base point and subalgebra used for each family:
///   one-sheeted: F = hat(lambda H),  eta = <H, X+Y>
///   cone:        F = hat(X+Y),       eta = <H, X+Y>
///   two-sheeted: F = hat(lambda Y),  eta = <Y, X+iH>
std::pair<DualElement, ComplexSubalgebra> family_polarization(OrbitFamily fam,
                                                              const Scalar& lambda);

/// Stabilizer character exponent: the representation value on the stabilizer
/// one-parameter subgroup is exp(pi*i*coefficient), and this returns the
/// coefficient, 4*lambda*a on the Borel-type stabilizers and -4*lambda*a on
/// the rotation stabilizer. Additive in a.
Scalar character_exponent(OrbitFamily fam, const Scalar& lambda, const Rat& a);

/// lambda = k/8 test; returns k when integral.
std::pair<bool, std::optional<long>> integrality_check(const Rat& lambda);

}  // namespace orbitq
