#pragma once

#include <array>
#include <variant>

#include "orbitq/scalar.hpp"

namespace orbitq {

/// Element A = a*X + b*H + c*Y of sl(2,R) (or of its complexification when the
/// coefficients are non-real), in the basis
///   H = [[1,0],[0,-1]],  X = [[0,1],[1,0]],  Y = [[0,1],[-1,0]].
struct AlgebraElement {
    Scalar a, b, c;

    AlgebraElement() = default;
    AlgebraElement(Scalar a_, Scalar b_, Scalar c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    static AlgebraElement X() { return {Scalar(1), Scalar(0), Scalar(0)}; }
    static AlgebraElement H() { return {Scalar(0), Scalar(1), Scalar(0)}; }
    static AlgebraElement Y() { return {Scalar(0), Scalar(0), Scalar(1)}; }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

    AlgebraElement operator-() const { return {-a, -b, -c}; }
    friend AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
        return {u.a + v.a, u.b + v.b, u.c + v.c};
    }
    friend AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) {
        return {u.a - v.a, u.b - v.b, u.c - v.c};
    }
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& v) {
        return {s * v.a, s * v.b, s * v.c};
    }
    friend bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c;
    }
};

/// Point F = 2x*X^* + 2h*H^* - 2y*Y^* of the dual space.
struct DualElement {
    Scalar x, h, y;

    DualElement() = default;
    DualElement(Scalar x_, Scalar h_, Scalar y_)
        : x(std::move(x_)), h(std::move(h_)), y(std::move(y_)) {}

    bool is_zero() const { return x.is_zero() && h.is_zero() && y.is_zero(); }

    DualElement operator-() const { return {-x, -h, -y}; }
    friend DualElement operator+(const DualElement& u, const DualElement& v) {
        return {u.x + v.x, u.h + v.h, u.y + v.y};
    }
    friend DualElement operator-(const DualElement& u, const DualElement& v) {
        return {u.x - v.x, u.h - v.h, u.y - v.y};
    }
    friend DualElement operator*(const Scalar& s, const DualElement& v) {
        return {s * v.x, s * v.h, s * v.y};
    }
    friend bool operator==(const DualElement& u, const DualElement& v) {
        return u.x == v.x && u.h == v.h && u.y == v.y;
    }
};

/// Exact 2x2 matrix with Scalar entries, row major.
struct Mat2 {
    std::array<Scalar, 4> e;  // e[0]=m00 e[1]=m01 e[2]=m10 e[3]=m11

    static Mat2 identity();
    Scalar det() const { return e[0] * e[3] - e[1] * e[2]; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
};

/// Numeric 2x2 matrix.
struct Mat2d {
    std::array<double, 4> e{0, 0, 0, 0};

    double det() const { return e[0] * e[3] - e[1] * e[2]; }
    friend Mat2d operator*(const Mat2d& a, const Mat2d& b);
};

/// Group element of SL(2,R), either exact (Scalar entries, det checked to be
/// exactly 1) or numeric (double entries, |det - 1| < 1e-12). The exact
/// variant feeds the adjoint/coadjoint actions; the numeric one the matrix
/// exponentials and the Iwasawa decomposition.
class GroupElement {
public:
    explicit GroupElement(Mat2 m);   // throws unless det == 1 exactly
    explicit GroupElement(Mat2d m);  // throws unless |det - 1| < 1e-12

    bool exact() const { return std::holds_alternative<Mat2>(rep_); }
    const Mat2& exact_matrix() const;
    const Mat2d& numeric_matrix() const;

    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

    static GroupElement identity();
    /// [[1, t], [0, 1]]
    static GroupElement upper_unipotent(const Rat& t);
    /// [[1, 0], [t, 1]]
    static GroupElement lower_unipotent(const Rat& t);
    /// [[u, 0], [0, 1/u]], u != 0
    static GroupElement diagonal(const Rat& u);

private:
    std::variant<Mat2, Mat2d> rep_;
};

// --- algebra ---------------------------------------------------------------

/// Lie bracket from [H,X] = 2Y, [H,Y] = 2X, [X,Y] = -2H.
AlgebraElement bracket(const AlgebraElement& A, const AlgebraElement& B);

/// Killing form Tr(ad A . ad B), computed from the 3x3 adjoint matrices in the
/// (X, H, Y) basis.
Scalar killing(const AlgebraElement& A, const AlgebraElement& B);

/// Identification g -> g^* by A -> Tr(A . ): sends X to 2X^*, H to 2H^*,
/// Y to -2Y^*; in (x, h, y) coordinates simply (a, b, c).
DualElement hat_map(const AlgebraElement& A);
AlgebraElement hat_inv(const DualElement& F);

/// <F, A> = 2xa + 2hb - 2yc.
Scalar pair(const DualElement& F, const AlgebraElement& A);

/// 2x2 matrix of A in the chosen basis and its inverse decomposition.
Mat2 to_matrix(const AlgebraElement& A);
AlgebraElement from_matrix(const Mat2& m);  // requires trace 0

/// Adjoint action Ad(g)A = g A g^{-1}; exact group element required.
AlgebraElement ad_action(const GroupElement& g, const AlgebraElement& A);

/// Coadjoint action defined by <K(g)F, Z> = <F, Ad(g^{-1})Z>; computed from
/// that pairing directly, independently of hat_map, so equivariance stays a
/// two-route check.
DualElement coadjoint(const GroupElement& g, const DualElement& F);

// --- numeric group elements -------------------------------------------------

/// exp of [[a, b], [0, -a]]: [[e^a, b*sinh(a)/a], [0, e^{-a}]], with the
/// nilpotent limit [[1, b], [0, 1]] at a = 0.
GroupElement exp_borel(double a, double b);

/// exp of [[0, a], [-a, 0]] = [[cos a, sin a], [-sin a, cos a]].
GroupElement exp_rotation(double a);

struct IwasawaFactors {
    double x;
    double y;      // > 0
    double theta;  // in [0, 2*pi)
};

/// g = [[1/sqrt(y), 0], [0, 1/sqrt(y)]] . [[y, x], [0, 1]] . R(theta) with
/// R(theta) = [[cos t, sin t], [-sin t, cos t]].
IwasawaFactors iwasawa(const GroupElement& g);
Mat2d iwasawa_compose(const IwasawaFactors& f);

}  // namespace orbitq
