#include "orbitq/polarization.hpp"

#include <array>
#include <stdexcept>

namespace orbitq {

namespace {

using Vec3 = std::array<Scalar, 3>;

Vec3 coords(const AlgebraElement& v) { return {v.a, v.b, v.c}; }

bool vec_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Scalar det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 bc = cross(b, c);
    return a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
}

// Divide out the common monomial and make the first nonzero coordinate 1
// (exact; valid generically in the formal parameters).
Vec3 normalize(Vec3 v) {
    int min_l = 1 << 20, min_s = 1 << 20;
    for (const Scalar& c : v)
        for (const auto& [m, z] : c.terms()) {
            min_l = std::min(min_l, m.l);
            min_s = std::min(min_s, m.s);
        }
    if (min_l == 1 << 20) return v;  // zero vector
    Vec3 shifted;
    for (int j = 0; j < 3; ++j)
        for (const auto& [m, z] : v[j].terms())
            shifted[j].set_term({m.l - min_l, m.s - min_s}, z);
    CRat lead;
    for (int j = 0; j < 3 && lead.is_zero(); ++j)
        if (!shifted[j].is_zero()) lead = shifted[j].terms().begin()->second;
    Scalar f(inv(lead));
    for (int j = 0; j < 3; ++j) shifted[j] = f * shifted[j];
    return shifted;
}

// Nullspace of the linear map v -> (row . v) over the coefficient ring,
// generic in the formal parameters. Rows and solutions are Scalar triples.
std::vector<Vec3> nullspace3(const std::vector<Vec3>& rows) {
    std::vector<Vec3> nz;
    for (const auto& r : rows)
        if (!vec_zero(r)) nz.push_back(r);

    if (nz.empty()) return {Vec3{Scalar(1), Scalar(0), Scalar(0)},
                            Vec3{Scalar(0), Scalar(1), Scalar(0)},
                            Vec3{Scalar(0), Scalar(0), Scalar(1)}};

    // rank 1 if all pairwise cross products vanish
    Vec3 r0 = nz[0];
    bool rank1 = true;
    Vec3 r1;
    for (size_t j = 1; j < nz.size() && rank1; ++j)
        if (!vec_zero(cross(r0, nz[j]))) {
            rank1 = false;
            r1 = nz[j];
        }
    if (rank1) {
        // two independent solutions orthogonal to r0 = (alpha, beta, gamma)
        const Scalar &al = r0[0], &be = r0[1], &ga = r0[2];
        std::vector<Vec3> cand = {{be, -al, Scalar(0)}, {ga, Scalar(0), -al},
                                  {Scalar(0), ga, -be}};
        std::vector<Vec3> out;
        for (const auto& c : cand) {
            if (vec_zero(c)) continue;
            bool indep = true;
            for (const auto& o : out)
                if (vec_zero(cross(c, o))) indep = false;
            if (indep) out.push_back(normalize(c));
            if (out.size() == 2) break;
        }
        return out;
    }

    // rank 3 if some third row has nonzero determinant with (r0, r1)
    for (const auto& r : nz)
        if (!det3(r0, r1, r).is_zero()) return {};

    return {normalize(cross(r0, r1))};
}

// Membership of v in the complex span of basis (constant coordinates).
bool in_span(const std::vector<Vec3>& basis, Vec3 v) {
    std::vector<Vec3> rows = basis;
    // Gaussian elimination over the Gaussian rationals.
    auto cval = [](const Scalar& s) { return s.constant_value(); };
    size_t pr = 0;
    for (int col = 0; col < 3 && pr < rows.size(); ++col) {
        size_t piv = pr;
        while (piv < rows.size() && cval(rows[piv][col]).is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[pr], rows[piv]);
        CRat inv_p = inv(cval(rows[pr][col]));
        for (int j = 0; j < 3; ++j) rows[pr][j] = Scalar(inv_p) * rows[pr][j];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pr) continue;
            CRat f = cval(rows[r][col]);
            if (f.is_zero()) continue;
            for (int j = 0; j < 3; ++j) rows[r][j] -= Scalar(f) * rows[pr][j];
        }
        // eliminate from v as well
        CRat fv = cval(v[col]);
        if (!fv.is_zero())
            for (int j = 0; j < 3; ++j) v[j] -= Scalar(fv) * rows[pr][j];
        ++pr;
    }
    return vec_zero(v);
}

size_t rank_const(const std::vector<Vec3>& vectors) {
    std::vector<Vec3> rows = vectors;
    auto cval = [](const Scalar& s) { return s.constant_value(); };
    size_t rank = 0;
    for (int col = 0; col < 3 && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && cval(rows[piv][col]).is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        CRat inv_p = inv(cval(rows[rank][col]));
        for (int j = 0; j < 3; ++j) rows[rank][j] = Scalar(inv_p) * rows[rank][j];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            CRat f = cval(rows[r][col]);
            if (f.is_zero()) continue;
            for (int j = 0; j < 3; ++j) rows[r][j] -= Scalar(f) * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

AlgebraElement from_vec(const Vec3& v) { return {v[0], v[1], v[2]}; }

void require_constant_basis(const ComplexSubalgebra& eta) {
    for (const auto& v : eta.basis)
        if (!v.a.is_constant() || !v.b.is_constant() || !v.c.is_constant())
            throw std::invalid_argument("subalgebra basis must have constant coordinates");
}

}  // namespace

std::vector<AlgebraElement> stabilizer_algebra(const DualElement& F) {
    const std::array<AlgebraElement, 3> basis = {AlgebraElement::X(), AlgebraElement::H(),
                                                 AlgebraElement::Y()};
    std::vector<Vec3> rows;
    for (const auto& w : basis) {
        Vec3 row;
        for (int z = 0; z < 3; ++z) row[z] = pair(F, bracket(basis[z], w));
        rows.push_back(row);
    }
    std::vector<AlgebraElement> out;
    for (const auto& v : nullspace3(rows)) out.push_back(from_vec(v));
    // every solution must annihilate identically
    for (const auto& z : out)
        for (const auto& w : basis)
            if (!pair(F, bracket(z, w)).is_zero())
                throw std::logic_error("stabilizer nullspace verification failed");
    return out;
}

std::vector<DualElement> eta_perp(const ComplexSubalgebra& eta) {
    require_constant_basis(eta);
    std::vector<Vec3> rows;
    for (const auto& v : eta.basis)
        rows.push_back({Scalar(2) * v.a, Scalar(2) * v.b, Scalar(-2) * v.c});
    std::vector<DualElement> out;
    for (const auto& n : nullspace3(rows)) {
        // normalize so the leading starred coefficient (2x, 2h, -2y) is 1
        Vec3 starred = {Scalar(2) * n[0], Scalar(2) * n[1], Scalar(-2) * n[2]};
        CRat lead;
        for (int j = 0; j < 3 && lead.is_zero(); ++j)
            if (!starred[j].is_zero()) lead = starred[j].constant_value();
        Scalar f(inv(lead));
        DualElement e{f * n[0], f * n[1], f * n[2]};
        for (const auto& v : eta.basis)
            if (!pair(e, v).is_zero())
                throw std::logic_error("annihilator verification failed");
        out.push_back(e);
    }
    return out;
}

bool check_pukanszky(const DualElement& F, const ComplexSubalgebra& eta) {
    const std::vector<DualElement> perp = eta_perp(eta);
    if (perp.size() > 2)
        throw std::invalid_argument("annihilator dimension above 2 not supported");

    const bool lambda_formal =
        F.x.deg_lambda() > 0 || F.h.deg_lambda() > 0 || F.y.deg_lambda() > 0;
    if (lambda_formal && perp.size() > 1)
        throw std::invalid_argument(
            "with formal lambda only one affine parameter slot is free");

    // Affine parameters ride in the unused formal slots: sigma always, lambda
    // too when the base point is fully instantiated.
    std::vector<Scalar> params;
    if (lambda_formal) {
        params = {Scalar::sigma()};
    } else {
        params = {Scalar::lambda(), Scalar::sigma()};
    }

    DualElement moved = F;
    for (size_t j = 0; j < perp.size(); ++j) moved = moved + params[j] * perp[j];

    if (casimir(moved) != casimir(F)) return false;

    // Sheet sign matters only where the level set splits.
    bool split_family = false;
    Scalar cas = casimir(F);
    if (cas.is_constant()) {
        CRat c = cas.constant_value();
        split_family = c.is_real() && sgn(c.re) <= 0 && !F.is_zero();
    }
    if (!split_family) return true;

    bool y_moves = false;
    for (const auto& e : perp)
        if (!e.y.is_zero()) y_moves = true;
    if (!y_moves) return true;

    // Rational sampling of the affine subspace; needs a real rational picture.
    for (const auto& e : perp) {
        auto real_const = [](const Scalar& s) {
            return s.is_constant() && s.constant_value().is_real();
        };
        if (!real_const(e.x) || !real_const(e.h) || !real_const(e.y)) return false;
    }
    const OrbitClass base = classify(F);
    const std::array<Rat, 4> ts = {rat(-1), rat(-1, 2), rat(1, 2), rat(1)};
    auto sample_ok = [&](const Rat& t0, const Rat& t1) {
        DualElement pt = F;
        pt = pt + Scalar(t0) * perp[0];
        if (perp.size() > 1) pt = pt + Scalar(t1) * perp[1];
        const OrbitClass c = classify(pt);
        return c.tag == base.tag && c.sheet_sign == base.sheet_sign;
    };
    for (const Rat& t0 : ts) {
        if (perp.size() == 1) {
            if (!sample_ok(t0, Rat(0))) return false;
        } else {
            for (const Rat& t1 : ts)
                if (!sample_ok(t0, t1)) return false;
        }
    }
    return true;
}

PolarizationReport check_polarization(const DualElement& F, const ComplexSubalgebra& eta) {
    require_constant_basis(eta);
    std::vector<Vec3> basis;
    for (const auto& v : eta.basis) basis.push_back(coords(v));
    if (rank_const(basis) != basis.size())
        throw std::invalid_argument("dependent subalgebra basis rejected");

    PolarizationReport rep;

    rep.is_subalgebra = true;
    for (size_t i = 0; i < eta.basis.size() && rep.is_subalgebra; ++i)
        for (size_t j = i + 1; j < eta.basis.size() && rep.is_subalgebra; ++j)
            rep.is_subalgebra = in_span(basis, coords(bracket(eta.basis[i], eta.basis[j])));

    const std::vector<AlgebraElement> stab = stabilizer_algebra(F);
    rep.contains_stabilizer = true;
    rep.ad_invariant = true;
    for (const auto& z : stab) {
        Vec3 zc = coords(z);
        for (Scalar& c : zc)
            if (!c.is_constant())
                throw std::invalid_argument("stabilizer with non-constant coordinates");
        rep.contains_stabilizer = rep.contains_stabilizer && in_span(basis, zc);
        for (const auto& v : eta.basis)
            rep.ad_invariant = rep.ad_invariant && in_span(basis, coords(bracket(z, v)));
    }

    // m = (eta + conj eta) cap g: real/imaginary parts of the basis span it.
    std::vector<Vec3> real_vecs;
    for (const auto& v : eta.basis) {
        Vec3 re, im;
        for (int j = 0; j < 3; ++j) {
            CRat c = coords(v)[j].constant_value();
            re[j] = Scalar(CRat(c.re));
            im[j] = Scalar(CRat(c.im));
        }
        if (!vec_zero(re)) real_vecs.push_back(re);
        if (!vec_zero(im)) real_vecs.push_back(im);
    }
    // reduce to an independent set
    std::vector<Vec3> m_basis;
    for (const auto& v : real_vecs) {
        if (m_basis.empty() ? !vec_zero(v) : !in_span(m_basis, v)) m_basis.push_back(v);
    }
    rep.m_real_subalgebra = true;
    for (size_t i = 0; i < m_basis.size() && rep.m_real_subalgebra; ++i)
        for (size_t j = i + 1; j < m_basis.size() && rep.m_real_subalgebra; ++j)
            rep.m_real_subalgebra =
                in_span(m_basis, coords(bracket(from_vec(m_basis[i]), from_vec(m_basis[j]))));

    rep.pukanszky = check_pukanszky(F, eta);

    if (!stab.empty() && stab.size() < 3)
        rep.character_exponent = Scalar(2) * pair(F, stab[0]);

    // rotation stabilizers (negative Casimir) are connected; the others have
    // two components and the character extends in two ways
    Scalar cas = casimir(F);
    bool connected = false;
    if (cas.is_constant()) {
        CRat c = cas.constant_value();
        connected = c.is_real() && sgn(c.re) < 0;
    }
    rep.component_characters =
        connected ? std::vector<std::string>{"1"} : std::vector<std::string>{"1", "sgn"};

    return rep;
}

std::pair<DualElement, ComplexSubalgebra> family_polarization(OrbitFamily fam,
                                                              const Scalar& lambda) {
    const AlgebraElement xpy = AlgebraElement::X() + AlgebraElement::Y();
    switch (fam) {
        case OrbitFamily::OneSheeted:
            return {hat_map(lambda * AlgebraElement::H()),
                    ComplexSubalgebra{{AlgebraElement::H(), xpy}}};
        case OrbitFamily::Cone:
            return {hat_map(xpy), ComplexSubalgebra{{AlgebraElement::H(), xpy}}};
        case OrbitFamily::TwoSheeted: {
            AlgebraElement x_plus_ih = AlgebraElement::X() +
                                       Scalar::unit_i() * AlgebraElement::H();
            return {hat_map(lambda * AlgebraElement::Y()),
                    ComplexSubalgebra{{AlgebraElement::Y(), x_plus_ih}}};
        }
    }
    throw std::logic_error("unreachable");
}

Scalar character_exponent(OrbitFamily fam, const Scalar& lambda, const Rat& a) {
    auto [F, eta] = family_polarization(fam, lambda);
    const std::vector<AlgebraElement> stab = stabilizer_algebra(F);
    if (stab.size() != 1) throw std::logic_error("expected a one-dimensional stabilizer");
    return Scalar(2) * Scalar(a) * pair(F, stab[0]);
}

std::pair<bool, std::optional<long>> integrality_check(const Rat& lambda) {
    Rat k8 = lambda * 8;
    k8.canonicalize();
    if (k8.get_den() == 1) return {true, k8.get_num().get_si()};
    return {false, std::nullopt};
}

}  // namespace orbitq
