#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rf3/ratfun.hpp"

namespace rf3 {

/// One ramification record per Galois orbit: a monic irreducible locus (or
/// infinity), its degree, and the common ramification index of its roots.
struct RamPoint {
    bool at_infinity = false;
    Poly locus;    // minimal polynomial over F_q; empty at infinity
    u32 degree = 1;
    u32 index = 1;
    u32 wronskian_mult = 0;  // multiplicity of the locus in the Wronskian (0 at infinity)
};

/// Multiset of (index, degree) tags, one per ramification point of the
/// algebraic closure, kept sorted.
struct RamType {
    std::vector<std::pair<u32, u32>> tags;
    friend bool operator==(const RamType&, const RamType&) = default;
};

RamType make_ram_type(std::vector<std::pair<u32, u32>> tags);

/// num' * den - num * den', not reduced.  Zero exactly for inseparable f.
Poly wronskian(const FieldCtx& F, const RatFun& f);

/// Ramification index at a point of P^1 over the field of f, by the
/// valuation recipe: multiplicity of (X-a) in f - f(a) (finite/finite), in
/// 1/f (finite/infinite), of X in f(1/X) - f(infinity) or in 1/f(1/X).
u32 ram_index_at(const FieldCtx& F, const RatFun& f, ProjPoint a);

/// All ramification records of a separable f, one per irreducible factor of
/// the Wronskian plus infinity when ramified.  Indices are always computed
/// from the valuation definition in the extension holding the root; wild
/// ramification breaks any shortcut through Wronskian multiplicities.
std::vector<RamPoint> ram_points(const FieldCtx& F, const RatFun& f);

/// Ramification type of a separable degree-3 f, validated against the
/// admissible patterns for the characteristic.
RamType ram_type(const FieldCtx& F, const RatFun& f);

/// Membership in the admissible index patterns for characteristic p
/// (degrees wildcarded): p = 2: (2), (2,2), (2,3), (3,3); p = 3:
/// (2,2,2,2), (2,3), (3); p >= 5: (2,2,2,2), (2,2,3), (3,3).
bool validate_ram_type(u32 p, const RamType& rt);

/// "e/d" tags joined with commas, sorted.
std::string ram_type_string(const RamType& rt);

}  // namespace rf3
