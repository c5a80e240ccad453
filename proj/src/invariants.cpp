#include "rf3/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace rf3 {

bool in_omega(const FieldCtx& F, Fe s, Fe t) {
    return t.v != 0 && F.add(F.one(), F.add(s, t)).v != 0;
}

std::vector<FstParams> omega_points(const FieldCtx& F) {
    std::vector<FstParams> pts;
    pts.reserve(u64(F.q() - 1) * (F.q() - 1));
    for (u32 s = 0; s < F.q(); ++s)
        for (u32 t = 0; t < F.q(); ++t)
            if (in_omega(F, Fe{s}, Fe{t})) pts.push_back(FstParams{Fe{s}, Fe{t}});
    return pts;
}

RatFun fst(const FieldCtx& F, FstParams sp) {
    if (!in_omega(F, sp.s, sp.t)) throw std::domain_error("fst: (s,t) outside Omega");
    Poly num = poly_from({sp.t, sp.s, F.zero(), F.one()});
    Poly den = poly_from({F.zero(), F.from_int(-1), F.one()});
    return rf_make(F, std::move(num), std::move(den));
}

Poly g_quartic(const FieldCtx& F, FstParams sp) {
    return poly_from({sp.t, F.mul(F.from_int(-2), sp.t), F.neg(sp.s), F.from_int(-2), F.one()});
}

std::optional<std::pair<Fe, Fe>> class2_witness(const FieldCtx& F, FstParams sp) {
    if (!in_omega(F, sp.s, sp.t)) throw std::domain_error("class2_witness: outside Omega");
    Fe mt = F.neg(sp.t);
    for (Fe x : roots_in_base(F, g_quartic(F, sp))) {
        if (F.pow(x, 3) != mt)
            return std::make_pair(x, F.div(mt, F.mul(x, x)));
    }
    return std::nullopt;
}

Subclass subclass(const FieldCtx& F, FstParams sp) {
    if (class2_witness(F, sp)) return Subclass::II_escape;
    auto fs = factor(F, g_quartic(F, sp));
    for (const auto& fp : fs)
        if (fp.f.deg() == 1) return Subclass::IIId;
    if (fs.size() == 1 && fs[0].f.deg() == 4) return Subclass::IIIa;
    if (fs.size() == 2 && fs[0].f.deg() == 2 && fs[1].f.deg() == 2 && fs[0].mult == 1 &&
        fs[1].mult == 1)
        return Subclass::IIIb;
    if (fs.size() == 1 && fs[0].f.deg() == 2 && fs[0].mult == 2) return Subclass::IIIc;
    throw std::logic_error("subclass: unmatched factorization pattern");
}

const char* subclass_name(Subclass s) {
    switch (s) {
        case Subclass::II_escape: return "II";
        case Subclass::IIIa: return "III-a";
        case Subclass::IIIb: return "III-b";
        case Subclass::IIIc: return "III-c";
        case Subclass::IIId: return "III-d";
    }
    return "?";
}

Fe theta(const FieldCtx& F, FstParams sp) {
    if (!in_omega(F, sp.s, sp.t)) throw std::domain_error("theta: outside Omega");
    Fe opt = F.add(F.one(), F.add(sp.s, sp.t));
    return F.div(F.pow(sp.s, 3), F.mul(sp.t, opt));
}

bool disc_identity_check(const FieldCtx& F, FstParams sp) {
    if (F.p() == 2) throw std::domain_error("disc identity: odd characteristic only");
    Fe lhs = discriminant(F, g_quartic(F, sp));
    Fe opt = F.add(F.one(), F.add(sp.s, sp.t));
    Fe rhs = F.mul(F.from_int(16),
                   F.mul(F.mul(F.mul(sp.t, sp.t), F.mul(opt, opt)),
                         F.sub(theta(F, sp), F.from_int(27))));
    return lhs == rhs;
}

QuadPair quad_pair(const FieldCtx& F, FstParams sp) {
    if (subclass(F, sp) != Subclass::IIIb) throw std::domain_error("quad_pair: not Class III-b");
    auto fs = factor(F, g_quartic(F, sp));
    QuadPair qp{fs[0].f.c[0], fs[0].f.c[1], fs[1].f.c[0], fs[1].f.c[1]};
    // consistency with the coupled-coefficient relations
    Fe two_a0_a1 = F.add(F.mul(F.from_int(2), qp.a0), qp.a1);
    if (two_a0_a1.v == 0 || qp.b1 != F.sub(F.from_int(-2), qp.a1) ||
        F.mul(qp.b0, two_a0_a1) != F.mul(qp.a0, F.add(F.from_int(2), qp.a1)))
        throw std::logic_error("quad_pair: factor pair violates the coefficient relations");
    return qp;
}

Fe mu_squared(const FieldCtx& F, const QuadPair& qp) {
    Fe den = F.mul(qp.a1, F.mul(F.add(F.from_int(2), qp.a1),
                                F.add(F.mul(F.from_int(2), qp.a0), qp.a1)));
    if (den.v == 0) throw std::domain_error("mu_squared: vanishing denominator");
    Fe num = F.mul(F.sub(F.mul(qp.a1, qp.a1), F.mul(F.from_int(4), qp.a0)),
                   F.add(F.from_int(2), F.add(F.mul(F.from_int(2), qp.a0), qp.a1)));
    return F.div(num, den);
}

Fe mu_squared(const FieldCtx& F, FstParams sp) { return mu_squared(F, quad_pair(F, sp)); }

Fe lambda_cr(const FieldCtx& F, FstParams sp) {
    QuadPair qp = quad_pair(F, sp);
    const Embedding& E = extension(F, 2);
    const FieldCtx& K = E.ext();
    auto lift = [&](Fe c0, Fe c1) {
        return poly_from({E.embed(c0), E.embed(c1), K.one()});
    };
    auto r1 = roots_in_base(K, lift(qp.a0, qp.a1));
    auto r2 = roots_in_base(K, lift(qp.b0, qp.b1));
    if (r1.size() != 2 || r2.size() != 2)
        throw std::logic_error("lambda_cr: quadratic does not split in F_{q^2}");
    Fe c = cross_ratio(K, ProjPoint::finite(r1[0]), ProjPoint::finite(r1[1]),
                       ProjPoint::finite(r2[0]), ProjPoint::finite(r2[1]));
    Fe lam = K.add(c, K.inv(c));
    auto back = E.retract(lam);
    if (!back) throw std::logic_error("lambda_cr: value not Frobenius-fixed");
    return *back;
}

Fe lambda_from_mu2(const FieldCtx& F, Fe m) {
    Fe m1 = F.sub(m, F.one()), m9 = F.sub(m, F.from_int(9));
    if (m1.v == 0 || m9.v == 0) throw std::domain_error("lambda_from_mu2: m in {1, 9}");
    Fe num = F.mul(F.from_int(2),
                   F.add(F.from_int(9), F.add(F.mul(F.from_int(-2), m), F.mul(m, m))));
    return F.div(num, F.mul(m1, m9));
}

Fe theta_from_mu2(const FieldCtx& F, Fe m) {
    if (m.v == 0) throw std::domain_error("theta_from_mu2: m = 0");
    Fe m1 = F.sub(m, F.one()), m9 = F.sub(m, F.from_int(9));
    if (m1.v == 0 || m9.v == 0) throw std::domain_error("theta_from_mu2: m in {1, 9}");
    return F.add(F.from_int(27), F.div(F.mul(m, F.mul(m9, m9)), F.mul(m1, m1)));
}

std::array<FstParams, 6> s3_images(const FieldCtx& F, FstParams sp) {
    const Fe s = sp.s, t = sp.t;
    Fe opt = F.add(F.one(), F.add(s, t));  // 1+s+t
    Fe im = F.neg(F.inv(opt));
    return {{
        {s, t},
        {s, F.neg(opt)},
        {F.div(s, t), F.inv(t)},
        {F.div(s, t), F.neg(F.div(opt, t))},
        {F.mul(s, im), F.mul(t, im)},
        {F.mul(s, im), im},
    }};
}

std::vector<FstParams> s3_orbit(const FieldCtx& F, FstParams sp) {
    std::vector<FstParams> out;
    for (const auto& p : s3_images(F, sp)) {
        if (!in_omega(F, p.s, p.t)) throw std::logic_error("s3_orbit: image left Omega");
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

FstParams class3d_params(const FieldCtx& F, Fe u) {
    if (u.v == 0 || u == F.one()) throw std::domain_error("class3d_params: u in {0, 1}");
    Fe s = F.mul(F.from_int(3), F.sub(F.mul(u, u), u));
    Fe t = F.neg(F.pow(u, 3));
    return FstParams{s, t};
}

FstParams theta27_params(const FieldCtx& F, Fe u) {
    if (F.p() == 2) throw std::domain_error("theta27_params: odd characteristic only");
    if (u == F.one() || u == F.from_int(-1))
        throw std::domain_error("theta27_params: u must avoid +-1");
    Fe s = F.div(F.mul(F.from_int(3), F.sub(F.mul(u, u), F.one())), F.from_int(4));
    Fe t = F.neg(F.div(F.pow(F.add(F.one(), u), 3), F.from_int(8)));
    return FstParams{s, t};
}

FstParams to_fst(const FieldCtx& F, const RatFun& f) {
    if (f.deg() != 3) throw std::domain_error("to_fst: degree must be 3");
    if (coarse_class(F, f) != CoarseClass::III) throw std::domain_error("to_fst: not Class III");
    // scan-least value with a triple fiber
    std::vector<ProjPoint> pts;
    for (u32 x = 0; x < F.q(); ++x) pts.push_back(ProjPoint::finite(Fe{x}));
    pts.push_back(ProjPoint::infinity());
    ProjPoint alpha;
    std::vector<ProjPoint> fiber;
    bool found = false;
    for (const auto& a : pts) {
        auto pre = preimages(F, f, a);
        if (pre.size() == 3) {
            alpha = a;
            fiber = pre;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("to_fst: no triple fiber");
    RatFun g = pre_compose(F, f, moebius_through(F, fiber[0], fiber[1], fiber[2]));
    if (!alpha.inf)
        g = post_compose(F, moebius(F, F.zero(), F.one(), F.one(), F.neg(alpha.x)), g);
    // now g^{-1}(infinity) = {0, 1, infinity}: den = X(X-1), num a cubic
    if (g.den != poly_from({F.zero(), F.from_int(-1), F.one()}))
        throw std::logic_error("to_fst: denominator did not normalize to X(X-1)");
    Fe n3 = g.num.coeff(3), n2 = g.num.coeff(2);
    g = post_compose(F, moebius(F, F.one(), F.neg(n2), F.zero(), n3), g);
    if (g.num.coeff(2).v != 0 || g.num.coeff(3) != F.one())
        throw std::logic_error("to_fst: numerator did not normalize");
    FstParams sp{g.num.coeff(1), g.num.coeff(0)};
    if (!in_omega(F, sp.s, sp.t)) throw std::logic_error("to_fst: landed outside Omega");
    return sp;
}

bool appendix_b_identity(const FieldCtx& F, Fe c, Fe x, Fe y) {
    if (c.v == 0) throw std::domain_error("appendix_b_identity: c = 0");
    auto I = [&](i64 k) { return F.from_int(k); };
    Fe cm1 = F.sub(c, F.one());
    Fe a = F.div(F.mul(F.mul(cm1, cm1), F.add(c, I(8))), c);

    // K(x,y) as integer + a-linear coefficients on monomials x^ex y^ey
    struct Term {
        i64 k, ka;
        u32 ex, ey;
    };
    static const Term kTerms[] = {
        {8, 0, 6, 0},     {-12, 0, 7, 0},   {6, 0, 8, 0},    {-1, 0, 9, 0},
        {-24, 0, 4, 1},   {42, 0, 6, 1},    {-30, 0, 7, 1},  {6, 0, 8, 1},
        {-30, -2, 2, 2},  {171, 5, 3, 2},   {-180, -4, 4, 2}, {15, 1, 5, 2},
        {42, 0, 6, 2},    {-12, 0, 7, 2},   {-8, 0, 0, 3},   {84, 4, 1, 3},
        {-330, -14, 2, 3}, {442, 14, 3, 3}, {-180, -4, 4, 3}, {8, 0, 6, 3},
        {-24, 0, 0, 4},   {168, 8, 1, 4},   {-330, -14, 2, 4}, {171, 5, 3, 4},
        {-24, 0, 4, 4},   {-24, 0, 0, 5},   {84, 4, 1, 5},   {-30, -2, 2, 5},
        {-8, 0, 0, 6},
    };
    Fe K = F.zero();
    for (const Term& t : kTerms) {
        Fe coef = F.add(I(t.k), F.mul(I(t.ka), a));
        K = F.add(K, F.mul(coef, F.mul(F.pow(x, t.ex), F.pow(y, t.ey))));
    }

    Fe x2 = F.mul(x, x), y2 = F.mul(y, y), xy = F.mul(x, y);
    Fe x3 = F.mul(x2, x), x4 = F.mul(x2, x2), y3 = F.mul(y2, y), y4 = F.mul(y2, y2);
    Fe xm2y = F.sub(x, F.mul(I(2), y));
    Fe cinv = F.inv(c);

    Fe pc = F.add(F.add(F.mul(c, y), F.mul(I(2), x2)),
                  F.add(F.neg(F.mul(F.add(I(4), c), xy)),
                        F.add(F.mul(c, y2), F.neg(F.mul(x2, xm2y)))));

    Fe b2 = F.neg(F.mul(F.mul(I(8), cinv), y2));
    Fe b3 = F.neg(F.mul(F.mul(I(2), cinv),
                        F.mul(y, F.add(F.mul(F.mul(c, F.add(c, I(6))), x2),
                                       F.add(F.neg(F.mul(F.mul(I(2), F.add(I(4), F.add(F.mul(I(6), c), F.mul(c, c)))), xy)),
                                             F.mul(I(8), y2))))));
    Fe q46 = F.add(I(4), F.add(F.mul(I(6), c), F.mul(c, c)));  // 4 + 6c + c^2
    Fe b4 = F.mul(cinv,
                  F.add(F.add(F.mul(F.mul(I(4), c), x4),
                              F.mul(F.mul(c, F.add(I(2), F.mul(I(3), c))), F.mul(x3, y))),
                        F.add(F.neg(F.mul(F.mul(I(8), F.add(I(1), F.add(F.mul(I(4), c), F.mul(c, c)))), F.mul(x2, y2))),
                              F.add(F.mul(F.mul(I(4), q46), F.mul(x, y3)),
                                    F.neg(F.mul(I(8), y4))))));
    Fe b5 = F.neg(F.mul(F.mul(x2, xm2y),
                        F.add(F.mul(I(4), x2),
                              F.add(F.mul(F.sub(c, I(2)), xy),
                                    F.neg(F.mul(F.add(c, I(6)), y2))))));
    Fe b6 = F.mul(x4, F.mul(xm2y, xm2y));

    Fe rhs = F.mul(pc, F.add(b2, F.add(b3, F.add(b4, F.add(b5, b6)))));
    return K == rhs;
}

}  // namespace rf3
