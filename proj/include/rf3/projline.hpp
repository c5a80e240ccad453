#pragma once

#include <array>
#include <vector>

#include "rf3/field.hpp"

namespace rf3 {

/// Point of P^1(F_q) = F_q u {infinity}.  Total order: scan order with
/// infinity last.
struct ProjPoint {
    bool inf = false;
    Fe x{};  // meaningful only when !inf (kept zero at infinity)

    static ProjPoint infinity() { return ProjPoint{true, Fe{0}}; }
    static ProjPoint finite(Fe v) { return ProjPoint{false, v}; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

inline bool proj_less(const ProjPoint& a, const ProjPoint& b) {
    if (a.inf != b.inf) return !a.inf;
    return !a.inf && a.x < b.x;
}

/// The map (aX+b)/(cX+d), ad - bc != 0, stored with the first nonzero
/// entry of (a,b,c,d) normalized to 1.  This picks a unique representative
/// per PGL(2,q) class, which is what enumeration and deduplication rely on.
struct Moebius {
    Fe a, b, c, d;
    friend bool operator==(const Moebius&, const Moebius&) = default;
};

Moebius moebius(const FieldCtx& F, Fe a, Fe b, Fe c, Fe d);
Moebius moebius_identity(const FieldCtx& F);
/// x -> phi(chi(x)).
Moebius moebius_compose(const FieldCtx& F, const Moebius& phi, const Moebius& chi);
Moebius moebius_invert(const FieldCtx& F, const Moebius& phi);
ProjPoint moebius_apply(const FieldCtx& F, const Moebius& phi, ProjPoint pt);

/// The unique Moebius map sending (0, 1, infinity) to (p1, p2, p3).
Moebius moebius_through(const FieldCtx& F, ProjPoint p1, ProjPoint p2, ProjPoint p3);

/// All q^3 - q elements of PGL(2,q) in scan order of their canonical
/// (a,b,c,d) tuples.
std::vector<Moebius> enumerate_pgl(const FieldCtx& F);

/// The set-wise stabilizer of {0, 1, infinity}, an S_3, in the fixed
/// conventional order (identity first).
std::array<Moebius, 6> s3_stabilizer(const FieldCtx& F);

/// (p1-p3)(p2-p4) / ((p1-p4)(p2-p3)) for pairwise distinct points, with
/// factors containing an infinite argument cancelled in pairs.  Never 0 or 1.
Fe cross_ratio(const FieldCtx& F, ProjPoint p1, ProjPoint p2, ProjPoint p3, ProjPoint p4);

}  // namespace rf3
