#pragma once

#include <array>
#include <map>

#include "rf3/poly.hpp"
#include "rf3/projline.hpp"

namespace rf3 {

/// Reduced rational function: gcd(num, den) = 1, den monic (or num monic
/// when den is constant), not constant.  Build through rf_make only.
struct RatFun {
    Poly num, den;
    int deg() const { return std::max(num.deg(), den.deg()); }
    friend bool operator==(const RatFun&, const RatFun&) = default;
};

RatFun rf_make(const FieldCtx& F, Poly num, Poly den);

ProjPoint rf_eval(const FieldCtx& F, const RatFun& f, ProjPoint pt);

/// f o phi: clears denominators with (cX+d)^deg f, then reduces.
RatFun pre_compose(const FieldCtx& F, const RatFun& f, const Moebius& phi);
/// psi o f.
RatFun post_compose(const FieldCtx& F, const Moebius& psi, const RatFun& f);

/// Canonical basis (reduced row echelon form) of the span <num, den>,
/// columns X^3, X^2, X, 1.  Defined for degree-3 functions; equal pencils
/// mean equality up to post-composition.
struct Pencil {
    std::array<std::array<Fe, 4>, 2> rows;
    friend bool operator==(const Pencil&, const Pencil&) = default;
};

Pencil pencil(const FieldCtx& F, const RatFun& f);

/// Census over P^1(F_q): fiber size -> number of values alpha with that
/// many preimages.
std::map<u32, u32> value_profile(const FieldCtx& F, const RatFun& f);

/// Fiber of alpha, sorted.
std::vector<ProjPoint> preimages(const FieldCtx& F, const RatFun& f, ProjPoint alpha);

enum class CoarseClass { I, II, III };

/// Value-frequency triage of a degree-3 function: I bijective, II some
/// fiber of size exactly 2, III otherwise.
CoarseClass coarse_class(const FieldCtx& F, const RatFun& f);

bool is_separable(const FieldCtx& F, const RatFun& f);

RatFun rf_embed(const Embedding& E, const RatFun& f);

}  // namespace rf3
