#pragma once

#include "rf3/invariants.hpp"
#include "rf3/parallel.hpp"

namespace rf3 {

/// Canonical label of an equivalence class.
///   I-sep / I-insep           permutation functions (I-insep only q = 3 mod 6)
///   II-A(t), t in the cube transversal; II-B(t), t != 0
///   III-a(theta)              theta - 27 a nonsquare
///   III-b(mu2)                mu2 a square outside {0, 1, 9}
///   III-wild27(ram)           the theta = 27 territory, tagged by ramification type
///   III-p3d                   the single p = 3 point (0, 1)
///   III-even(theta)           p = 2, theta in F_q*
struct ClassLabel {
    enum class Kind { Isep, Iinsep, IIA, IIB, IIIa, IIIb, IIIwild27, IIIp3d, IIIeven };
    Kind kind{};
    Fe value{};   // t / theta / mu2 as applicable
    RamType ram;  // IIIwild27 only

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

bool label_less(const ClassLabel& a, const ClassLabel& b);

ClassLabel classify(const FieldCtx& F, const RatFun& f);

/// Canonical Class II label via the constructive reduction: move the
/// scan-least double fiber to infinity, the ramified preimage to infinity
/// and the other to 0, land on (X^3 + sX^2 + t)/X, then normalize t.
ClassLabel class2_canonical(const FieldCtx& F, const RatFun& f);

struct Representative {
    ClassLabel label;
    RatFun fn;
};

/// One representative per equivalence class, produced by deterministic
/// scans (witnesses are searched, never read from stored tables, so the
/// construction works at any supported q).
std::vector<Representative> representatives(const FieldCtx& F, Exec mode = Exec::parallel);

struct ClassCounts {
    u64 class_i, class_ii, class_iii, total;
};

/// Closed-form class counts.
ClassCounts class_counts(const FieldCtx& F);

}  // namespace rf3
