#include "rf3/projline.hpp"

#include <stdexcept>

namespace rf3 {

Moebius moebius(const FieldCtx& F, Fe a, Fe b, Fe c, Fe d) {
    Fe det = F.sub(F.mul(a, d), F.mul(b, c));
    if (det.v == 0) throw std::domain_error("moebius: degenerate determinant");
    Fe lead = a.v ? a : b.v ? b : c;  // (a,b,c) = 0 would force det = 0
    if (a.v == 0 && b.v == 0 && c.v == 0) lead = d;
    Fe s = F.inv(lead);
    return Moebius{F.mul(a, s), F.mul(b, s), F.mul(c, s), F.mul(d, s)};
}

Moebius moebius_identity(const FieldCtx& F) {
    return Moebius{F.one(), F.zero(), F.zero(), F.one()};
}

Moebius moebius_compose(const FieldCtx& F, const Moebius& p, const Moebius& x) {
    return moebius(F,
                   F.add(F.mul(p.a, x.a), F.mul(p.b, x.c)),
                   F.add(F.mul(p.a, x.b), F.mul(p.b, x.d)),
                   F.add(F.mul(p.c, x.a), F.mul(p.d, x.c)),
                   F.add(F.mul(p.c, x.b), F.mul(p.d, x.d)));
}

Moebius moebius_invert(const FieldCtx& F, const Moebius& p) {
    return moebius(F, p.d, F.neg(p.b), F.neg(p.c), p.a);
}

ProjPoint moebius_apply(const FieldCtx& F, const Moebius& p, ProjPoint pt) {
    if (pt.inf) {
        if (p.c.v == 0) return ProjPoint::infinity();
        return ProjPoint::finite(F.div(p.a, p.c));
    }
    Fe den = F.add(F.mul(p.c, pt.x), p.d);
    if (den.v == 0) return ProjPoint::infinity();
    return ProjPoint::finite(F.div(F.add(F.mul(p.a, pt.x), p.b), den));
}

namespace {
struct Homog {
    Fe x, z;
};
Homog homog(const FieldCtx& F, ProjPoint p) {
    return p.inf ? Homog{F.one(), F.zero()} : Homog{p.x, F.one()};
}
}  // namespace

Moebius moebius_through(const FieldCtx& F, ProjPoint p1, ProjPoint p2, ProjPoint p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3)
        throw std::domain_error("moebius_through: points must be distinct");
    Homog v1 = homog(F, p1), v2 = homog(F, p2), v3 = homog(F, p3);
    // columns: M(infinity) = beta*v3, M(0) = alpha*v1, with beta*v3 + alpha*v1 = v2
    Fe det = F.sub(F.mul(v1.x, v3.z), F.mul(v3.x, v1.z));
    Fe alpha = F.div(F.sub(F.mul(v2.x, v3.z), F.mul(v3.x, v2.z)), det);
    Fe beta = F.div(F.sub(F.mul(v1.x, v2.z), F.mul(v2.x, v1.z)), det);
    return moebius(F, F.mul(beta, v3.x), F.mul(alpha, v1.x), F.mul(beta, v3.z),
                   F.mul(alpha, v1.z));
}

std::vector<Moebius> enumerate_pgl(const FieldCtx& F) {
    const u32 q = F.q();
    std::vector<Moebius> out;
    out.reserve(u64(q) * q * q - q);
    for (u32 a = 0; a < q; ++a)
        for (u32 b = 0; b < q; ++b)
            for (u32 c = 0; c < q; ++c)
                for (u32 d = 0; d < q; ++d) {
                    Fe fa{a}, fb{b}, fc{c}, fd{d};
                    u32 first = a ? a : b ? b : c ? c : d;
                    if (first != 1) continue;  // canonical representatives only
                    if (F.sub(F.mul(fa, fd), F.mul(fb, fc)).v == 0) continue;
                    out.push_back(Moebius{fa, fb, fc, fd});
                }
    return out;
}

std::array<Moebius, 6> s3_stabilizer(const FieldCtx& F) {
    const Fe o = F.one(), z = F.zero(), m = F.from_int(-1);
    return {
        Moebius{o, z, z, o},   // X
        Moebius{o, m, z, m},   // (X-1)/(-1) = 1-X
        Moebius{z, o, o, z},   // 1/X
        Moebius{z, o, m, o},   // 1/(1-X)
        Moebius{o, z, o, m},   // X/(X-1)
        Moebius{o, m, o, z},   // (X-1)/X
    };
}

Fe cross_ratio(const FieldCtx& F, ProjPoint p1, ProjPoint p2, ProjPoint p3, ProjPoint p4) {
    if (p1 == p2 || p1 == p3 || p1 == p4 || p2 == p3 || p2 == p4 || p3 == p4)
        throw std::domain_error("cross_ratio: repeated points");
    Fe num = F.one(), den = F.one();
    // numerator factors (p1-p3)(p2-p4), denominator (p1-p4)(p2-p3); a factor
    // with an infinite argument cancels against the partner factor sharing it
    if (!p1.inf && !p3.inf) num = F.mul(num, F.sub(p1.x, p3.x));
    if (!p2.inf && !p4.inf) num = F.mul(num, F.sub(p2.x, p4.x));
    if (!p1.inf && !p4.inf) den = F.mul(den, F.sub(p1.x, p4.x));
    if (!p2.inf && !p3.inf) den = F.mul(den, F.sub(p2.x, p3.x));
    return F.div(num, den);
}

}  // namespace rf3
