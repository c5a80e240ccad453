#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rf3 {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Element of a fixed finite field, identified by its scan index
/// c0 + c1*p + ... + c_{n-1}*p^{n-1} (coefficients over the generator
/// in ascending powers).  Index 0 is the zero element, index 1 is one.
/// The index defines the total "scan order" used for every deterministic
/// choice in the library.
struct Fe {
    u32 v = 0;
    friend constexpr bool operator==(Fe, Fe) = default;
    friend constexpr auto operator<=>(Fe, Fe) = default;
};

/// F_{p^n} with a fixed monic irreducible modulus over F_p.
///
/// Immutable after construction and all operations are pure, so a context
/// can be shared freely across threads.  Multiplicative structure is
/// table-driven (discrete exp/log over a fixed generator), addition works
/// digit-wise on scan indices.
class FieldCtx {
public:
    /// Builds F_{p^n}.  When no modulus is given, the monic irreducible of
    /// degree n whose coefficient tuple has the smallest scan index is used,
    /// which makes construction reproducible.  A modulus is given as the
    /// full coefficient list (c0,...,cn) ascending, cn = 1.
    FieldCtx(u32 p, u32 n, std::optional<std::vector<u32>> modulus = std::nullopt);

    u32 p() const { return p_; }
    u32 n() const { return n_; }
    u32 q() const { return q_; }
    const std::vector<u32>& modulus() const { return mod_; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{q_ > 1 ? 1u : 0u}; }
    bool is_zero(Fe x) const { return x.v == 0; }

    /// The constant k mod p.
    Fe from_int(i64 k) const;
    /// Element with the given coefficient tuple (length <= n, entries in [0,p)).
    Fe from_coeffs(const std::vector<u32>& c) const;
    std::vector<u32> coeffs(Fe x) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;     // throws on zero
    Fe div(Fe a, Fe b) const;
    Fe pow(Fe a, i64 e) const;  // negative e requires a != 0

    /// Frobenius x -> x^p.
    Fe frob(Fe a) const { return pow(a, p_); }

    /// Membership in (F_q*)^2.  Rejects 0: callers that can see zero must
    /// branch explicitly.  Always true in characteristic 2.
    bool is_square(Fe x) const;
    /// Scan-least square root when x is a square (or zero).
    std::optional<Fe> sqrt(Fe x) const;

    /// Absolute trace to F_2, only for p = 2: x + x^2 + ... + x^{q/2}.
    u32 trace_q_over_2(Fe x) const;

    /// One representative per coset of the cubes in F_q*, each the
    /// scan-minimal member of its coset.  Size 3 iff q = 1 (mod 3), else 1.
    std::vector<Fe> cube_transversal() const;

    /// All q elements in scan order.
    std::vector<Fe> elements() const;

    Fe generator() const { return gen_; }

    bool same(const FieldCtx& o) const {
        return p_ == o.p_ && n_ == o.n_ && mod_ == o.mod_;
    }

    /// "p" or "p^n".
    std::string name() const;

private:
    u32 p_ = 0, n_ = 0, q_ = 0;
    std::vector<u32> mod_;      // length n+1, ascending, monic
    std::vector<u32> pw_;       // pw_[i] = p^i, i in [0, n]
    Fe gen_;
    std::vector<u32> exp_;      // exp_[i] = gen^i, i in [0, q-2]
    std::vector<u32> log_;      // log_[x.v] for x != 0

    u32 mul_raw(u32 a, u32 b) const;  // coefficient-space product, used to bootstrap tables
    void build_tables();
};

}  // namespace rf3
