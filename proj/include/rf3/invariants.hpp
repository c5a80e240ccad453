#pragma once

#include <optional>

#include "rf3/ramify.hpp"

namespace rf3 {

/// Parameters of the Class III normal form (X^3 + sX + t)/(X(X-1)),
/// constrained to Omega = { (s,t) : t(1+s+t) != 0 }.
struct FstParams {
    Fe s, t;
    friend bool operator==(const FstParams&, const FstParams&) = default;
};

bool in_omega(const FieldCtx& F, Fe s, Fe t);

/// All Omega points, s-major scan order.
std::vector<FstParams> omega_points(const FieldCtx& F);

/// The normal form itself.
RatFun fst(const FieldCtx& F, FstParams sp);

/// X^4 - 2X^3 - sX^2 - 2tX + t, the numerator of fst'.  Its roots are
/// exactly the ramification points of fst (0, 1, infinity never ramify).
Poly g_quartic(const FieldCtx& F, FstParams sp);

/// When fst is really in Class II: the witness (a, b), a != b, with
/// t = -a^2 b and s = -2a - b + a^2 + 2ab, detected through a root x of the
/// quartic with x^3 != -t (then a = x, b = -t/x^2).  Empty for genuine
/// Class III parameters.
std::optional<std::pair<Fe, Fe>> class2_witness(const FieldCtx& F, FstParams sp);

enum class Subclass { II_escape, IIIa, IIIb, IIIc, IIId };

/// Subclass by the factorization pattern of the quartic: irreducible (a),
/// two distinct irreducible quadratics (b), square of an irreducible
/// quadratic (c), rational root with every rational root a cube root of -t (d).
Subclass subclass(const FieldCtx& F, FstParams sp);

const char* subclass_name(Subclass s);

/// theta(s,t) = s^3 / (t(1+s+t)), defined on all of Omega.
Fe theta(const FieldCtx& F, FstParams sp);

/// D(G_{s,t}) == 16 t^2 (1+s+t)^2 (theta - 27), odd characteristic.
bool disc_identity_check(const FieldCtx& F, FstParams sp);

/// The two irreducible quadratic factors (X^2+a1 X+a0)(X^2+b1 X+b0) of a
/// Class III-b quartic, the a-factor scan-minimal.  They satisfy
/// b1 = -2-a1 and b0 = a0(2+a1)/(2a0+a1).
struct QuadPair {
    Fe a0, a1, b0, b1;
};

QuadPair quad_pair(const FieldCtx& F, FstParams sp);

/// M(a0, a1) with M(X,Y) = (Y^2-4X)(2+2X+Y) / (Y(2+Y)(2X+Y)); symmetric in
/// the two factors of the quartic.
Fe mu_squared(const FieldCtx& F, const QuadPair& qp);
Fe mu_squared(const FieldCtx& F, FstParams sp);

/// Cross ratio of the four ramification points plus its reciprocal,
/// computed in F_{q^2} and mapped back to the base field.
Fe lambda_cr(const FieldCtx& F, FstParams sp);

/// lambda = 2(9 - 2m + m^2) / ((m-1)(m-9)) for m = mu^2.
Fe lambda_from_mu2(const FieldCtx& F, Fe m);

/// theta = 27 + m(m-9)^2 / (m-1)^2 for m = mu^2 not in {0, 1, 9}.
Fe theta_from_mu2(const FieldCtx& F, Fe m);

/// Parameter images under the six stabilizer elements, aligned with
/// s3_stabilizer's order: (s,t), (s,-1-s-t), (s/t,1/t), (s/t,-(1+s+t)/t),
/// (-s/(1+s+t),-t/(1+s+t)), (-s/(1+s+t),-1/(1+s+t)).
std::array<FstParams, 6> s3_images(const FieldCtx& F, FstParams sp);

/// The at most six parameter pairs reachable through the stabilizer of
/// {0,1,infinity}, deduplicated, in the conventional S_3 order.
std::vector<FstParams> s3_orbit(const FieldCtx& F, FstParams sp);

/// (s,t) = (3(u^2-u), -u^3) for u not in {0,1}; the quartic then factors as
/// (X-u)^2 (X^2 + 2(u-1)X - u).
FstParams class3d_params(const FieldCtx& F, Fe u);

/// Canonical reduction of a Class III function to the normal form: move the
/// scan-least triple fiber to infinity, its scan-ordered preimages to
/// (0, 1, infinity), then kill the quadratic numerator coefficient.
FstParams to_fst(const FieldCtx& F, const RatFun& f);

/// theta(s,t) = 27 parametrization: s = 3(u^2-1)/4, t = -(1+u)^3/8.
FstParams theta27_params(const FieldCtx& F, Fe u);

/// Numeric check of the quartic-sextic factorization identity behind the
/// Theta_a count, at one point: with a = (c-1)^2 (c+8)/c,
/// K(x,y) = P_c(x,y) * (B2+...+B6)(x,y).
bool appendix_b_identity(const FieldCtx& F, Fe c, Fe x, Fe y);

}  // namespace rf3
