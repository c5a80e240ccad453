#include "rf3/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace rf3 {

RatFun rf_make(const FieldCtx& F, Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("ratfun: zero denominator");
    if (num.is_zero()) throw std::domain_error("ratfun: constant function");
    Poly g = pgcd(F, num, den);
    if (g.deg() > 0) {
        num = pquo(F, num, g);
        den = pquo(F, den, g);
    }
    if (num.deg() <= 0 && den.deg() <= 0) throw std::domain_error("ratfun: constant function");
    Fe s = F.inv(den.deg() >= 1 ? den.lc() : num.lc());
    return RatFun{pscale(F, num, s), pscale(F, den, s)};
}

ProjPoint rf_eval(const FieldCtx& F, const RatFun& f, ProjPoint pt) {
    if (!pt.inf) {
        Fe d = peval(F, f.den, pt.x);
        if (d.v == 0) return ProjPoint::infinity();
        return ProjPoint::finite(F.div(peval(F, f.num, pt.x), d));
    }
    int dn = f.num.deg(), dd = f.den.deg();
    if (dn > dd) return ProjPoint::infinity();
    if (dn < dd) return ProjPoint::finite(F.zero());
    return ProjPoint::finite(F.div(f.num.lc(), f.den.lc()));
}

RatFun pre_compose(const FieldCtx& F, const RatFun& f, const Moebius& phi) {
    const int d = f.deg();
    Poly top = poly_from({phi.b, phi.a});   // aX+b
    Poly bot = poly_from({phi.d, phi.c});   // cX+d
    std::vector<Poly> tp(d + 1), bp(d + 1);
    tp[0] = bp[0] = poly_const(F.one());
    for (int i = 1; i <= d; ++i) {
        tp[i] = pmul(F, tp[i - 1], top);
        bp[i] = pmul(F, bp[i - 1], bot);
    }
    auto clear = [&](const Poly& g) {
        Poly acc;
        for (int i = 0; i <= d; ++i)
            if (g.coeff(i).v != 0)
                acc = padd(F, acc, pscale(F, pmul(F, tp[i], bp[d - i]), g.coeff(i)));
        return acc;
    };
    return rf_make(F, clear(f.num), clear(f.den));
}

RatFun post_compose(const FieldCtx& F, const Moebius& psi, const RatFun& f) {
    Poly n = padd(F, pscale(F, f.num, psi.a), pscale(F, f.den, psi.b));
    Poly d = padd(F, pscale(F, f.num, psi.c), pscale(F, f.den, psi.d));
    return rf_make(F, std::move(n), std::move(d));
}

Pencil pencil(const FieldCtx& F, const RatFun& f) {
    if (f.deg() != 3) throw std::domain_error("pencil: degree must be 3");
    Pencil P;
    for (int j = 0; j < 4; ++j) {
        P.rows[0][j] = f.num.coeff(3 - j);
        P.rows[1][j] = f.den.coeff(3 - j);
    }
    // reduced row echelon form of the 2x4 matrix
    int row = 0;
    for (int col = 0; col < 4 && row < 2; ++col) {
        int piv = -1;
        for (int r = row; r < 2; ++r)
            if (P.rows[r][col].v != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(P.rows[row], P.rows[piv]);
        Fe inv = F.inv(P.rows[row][col]);
        for (int j = col; j < 4; ++j) P.rows[row][j] = F.mul(P.rows[row][j], inv);
        for (int r = 0; r < 2; ++r) {
            if (r == row || P.rows[r][col].v == 0) continue;
            Fe t = P.rows[r][col];
            for (int j = col; j < 4; ++j)
                P.rows[r][j] = F.sub(P.rows[r][j], F.mul(t, P.rows[row][j]));
        }
        ++row;
    }
    return P;
}

std::map<u32, u32> value_profile(const FieldCtx& F, const RatFun& f) {
    const u32 q = F.q();
    std::vector<u32> hits(q + 1, 0);  // slot q = infinity
    auto slot = [&](ProjPoint v) { return v.inf ? q : v.x.v; };
    for (u32 x = 0; x < q; ++x) hits[slot(rf_eval(F, f, ProjPoint::finite(Fe{x})))]++;
    hits[slot(rf_eval(F, f, ProjPoint::infinity()))]++;
    std::map<u32, u32> census;
    for (u32 a = 0; a <= q; ++a) census[hits[a]]++;
    return census;
}

std::vector<ProjPoint> preimages(const FieldCtx& F, const RatFun& f, ProjPoint alpha) {
    std::vector<ProjPoint> pre;
    for (u32 x = 0; x < F.q(); ++x) {
        ProjPoint pt = ProjPoint::finite(Fe{x});
        if (rf_eval(F, f, pt) == alpha) pre.push_back(pt);
    }
    if (rf_eval(F, f, ProjPoint::infinity()) == alpha) pre.push_back(ProjPoint::infinity());
    return pre;  // already in scan order, infinity last
}

CoarseClass coarse_class(const FieldCtx& F, const RatFun& f) {
    if (f.deg() != 3) throw std::domain_error("coarse_class: degree must be 3");
    auto census = value_profile(F, f);
    bool has2 = census.count(2) && census.at(2) > 0;
    bool big = false;
    for (auto& [size, cnt] : census)
        if (size >= 2 && cnt > 0) big = true;
    if (!big) return CoarseClass::I;
    return has2 ? CoarseClass::II : CoarseClass::III;
}

bool is_separable(const FieldCtx& F, const RatFun& f) {
    Poly w = psub(F, pmul(F, pderiv(F, f.num), f.den), pmul(F, f.num, pderiv(F, f.den)));
    return !w.is_zero();
}

RatFun rf_embed(const Embedding& E, const RatFun& f) {
    return rf_make(E.ext(), E.embed_poly(f.num), E.embed_poly(f.den));
}

}  // namespace rf3
