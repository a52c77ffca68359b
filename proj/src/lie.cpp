#include "orbitq/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitq {

Mat2 Mat2::identity() {
    return Mat2{{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                 a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Mat2d operator*(const Mat2d& a, const Mat2d& b) {
    return Mat2d{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                  a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

GroupElement::GroupElement(Mat2 m) : rep_(std::move(m)) {
    if (std::get<Mat2>(rep_).det() != Scalar(1))
        throw std::invalid_argument("exact group element must have det 1");
}

GroupElement::GroupElement(Mat2d m) : rep_(m) {
    if (std::abs(m.det() - 1.0) >= 1e-12)
        throw std::invalid_argument("numeric group element must have det 1 within 1e-12");
}

const Mat2& GroupElement::exact_matrix() const {
    if (!exact()) throw std::domain_error("numeric group element where exact required");
    return std::get<Mat2>(rep_);
}

const Mat2d& GroupElement::numeric_matrix() const {
    if (exact()) throw std::domain_error("exact group element where numeric required");
    return std::get<Mat2d>(rep_);
}

GroupElement GroupElement::inverse() const {
    if (exact()) {
        const Mat2& m = std::get<Mat2>(rep_);
        return GroupElement(Mat2{{m.e[3], -m.e[1], -m.e[2], m.e[0]}});
    }
    const Mat2d& m = std::get<Mat2d>(rep_);
    return GroupElement(Mat2d{{m.e[3], -m.e[1], -m.e[2], m.e[0]}});
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.exact() != b.exact())
        throw std::invalid_argument("cannot mix exact and numeric group elements");
    if (a.exact()) return GroupElement(a.exact_matrix() * b.exact_matrix());
    return GroupElement(a.numeric_matrix() * b.numeric_matrix());
}

GroupElement GroupElement::identity() { return GroupElement(Mat2::identity()); }

GroupElement GroupElement::upper_unipotent(const Rat& t) {
    return GroupElement(Mat2{{Scalar(1), Scalar(t), Scalar(0), Scalar(1)}});
}

GroupElement GroupElement::lower_unipotent(const Rat& t) {
    return GroupElement(Mat2{{Scalar(1), Scalar(0), Scalar(t), Scalar(1)}});
}

GroupElement GroupElement::diagonal(const Rat& u) {
    if (sgn(u) == 0) throw std::invalid_argument("diagonal group element needs u != 0");
    return GroupElement(Mat2{{Scalar(u), Scalar(0), Scalar(0), Scalar(Rat(1) / u)}});
}

AlgebraElement bracket(const AlgebraElement& A, const AlgebraElement& B) {
    Scalar two(2);
    return {two * (A.b * B.c - A.c * B.b),
            two * (A.c * B.a - A.a * B.c),
            two * (B.a * A.b - A.a * B.b)};
}

namespace {

// Columns of ad A in the (X, H, Y) basis.
std::array<AlgebraElement, 3> ad_matrix(const AlgebraElement& A) {
    return {bracket(A, AlgebraElement::X()), bracket(A, AlgebraElement::H()),
            bracket(A, AlgebraElement::Y())};
}

Scalar coord(const AlgebraElement& v, int i) { return i == 0 ? v.a : (i == 1 ? v.b : v.c); }

}  // namespace

Scalar killing(const AlgebraElement& A, const AlgebraElement& B) {
    const auto adA = ad_matrix(A);
    const auto adB = ad_matrix(B);
    // Tr(ad A . ad B) = sum_{i,j} (ad A)_{ij} (ad B)_{ji}
    Scalar tr;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) tr += coord(adA[j], i) * coord(adB[i], j);
    return tr;
}

DualElement hat_map(const AlgebraElement& A) { return {A.a, A.b, A.c}; }

AlgebraElement hat_inv(const DualElement& F) { return {F.x, F.h, F.y}; }

Scalar pair(const DualElement& F, const AlgebraElement& A) {
    Scalar two(2);
    return two * (F.x * A.a + F.h * A.b - F.y * A.c);
}

Mat2 to_matrix(const AlgebraElement& A) {
    return Mat2{{A.b, A.a + A.c, A.a - A.c, -A.b}};
}

AlgebraElement from_matrix(const Mat2& m) {
    if (!(m.e[0] + m.e[3]).is_zero())
        throw std::invalid_argument("matrix is not trace free");
    CRat half(rat(1, 2));
    return {Scalar(half) * (m.e[1] + m.e[2]), m.e[0], Scalar(half) * (m.e[1] - m.e[2])};
}

AlgebraElement ad_action(const GroupElement& g, const AlgebraElement& A) {
    const Mat2& m = g.exact_matrix();
    const Mat2 minv = g.inverse().exact_matrix();
    return from_matrix(m * to_matrix(A) * minv);
}

DualElement coadjoint(const GroupElement& g, const DualElement& F) {
    // <K(g)F, Z> = <F, Ad(g^{-1}) Z>. With the diagonal pairing matrix
    // J = diag(1, 1, -1) this reads v_KF = J M^T J v_F, where M is the matrix
    // of Ad(g^{-1}) in the (X, H, Y) basis.
    const GroupElement ginv = g.inverse();
    const std::array<AlgebraElement, 3> cols = {
        ad_action(ginv, AlgebraElement::X()), ad_action(ginv, AlgebraElement::H()),
        ad_action(ginv, AlgebraElement::Y())};
    auto jv = [](const DualElement& F_, int i) {
        return i == 0 ? F_.x : (i == 1 ? F_.h : -F_.y);
    };
    // (M^T J v_F)_j = sum_i M_{ij} (J v_F)_i = sum_i coord(cols[j], i) (J v_F)_i
    std::array<Scalar, 3> w;
    for (int j = 0; j < 3; ++j) {
        Scalar s;
        for (int i = 0; i < 3; ++i) s += coord(cols[j], i) * jv(F, i);
        w[j] = std::move(s);
    }
    return {w[0], w[1], -w[2]};
}

GroupElement exp_borel(double a, double b) {
    double sinhc = std::abs(a) < 1e-8 ? 1.0 + a * a / 6.0 : std::sinh(a) / a;
    return GroupElement(Mat2d{{std::exp(a), b * sinhc, 0.0, std::exp(-a)}});
}

GroupElement exp_rotation(double a) {
    return GroupElement(Mat2d{{std::cos(a), std::sin(a), -std::sin(a), std::cos(a)}});
}

IwasawaFactors iwasawa(const GroupElement& g) {
    const Mat2d& m = g.numeric_matrix();
    const double r = std::hypot(m.e[2], m.e[3]);
    if (r < 1e-12) throw std::invalid_argument("near-singular matrix in iwasawa");
    double theta = std::atan2(-m.e[2], m.e[3]);
    if (theta < 0) theta += 2.0 * M_PI;
    const double y = 1.0 / (r * r);
    const double x = (m.e[0] * m.e[2] + m.e[1] * m.e[3]) * y;
    return {x, y, theta};
}

Mat2d iwasawa_compose(const IwasawaFactors& f) {
    const double sy = std::sqrt(f.y);
    Mat2d scale{{1.0 / sy, 0.0, 0.0, 1.0 / sy}};
    Mat2d borel{{f.y, f.x, 0.0, 1.0}};
    Mat2d rot{{std::cos(f.theta), std::sin(f.theta), -std::sin(f.theta), std::cos(f.theta)}};
    return scale * (borel * rot);
}

}  // namespace orbitq
