#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rf3/field.hpp"

namespace rf3 {

/// Univariate polynomial over a fixed FieldCtx: coefficients ascending,
/// no trailing zeros.  The zero polynomial is the empty vector and has
/// degree -1 (the "-infinity" sentinel).
struct Poly {
    std::vector<Fe> c;

    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Fe lc() const { return c.back(); }
    Fe coeff(size_t i) const { return i < c.size() ? c[i] : Fe{0}; }

    friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_from(std::vector<Fe> coeffs);                       // trims trailing zeros
Poly poly_const(Fe a);
Poly poly_x(const FieldCtx& F);
Poly poly_from_ints(const FieldCtx& F, std::initializer_list<i64> coeffs);

Poly padd(const FieldCtx& F, const Poly& a, const Poly& b);
Poly psub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly pneg(const FieldCtx& F, const Poly& a);
Poly pmul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly pscale(const FieldCtx& F, const Poly& a, Fe s);
std::pair<Poly, Poly> pdivmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly pquo(const FieldCtx& F, const Poly& a, const Poly& b);
Poly pmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly monic(const FieldCtx& F, const Poly& a);
Poly pderiv(const FieldCtx& F, const Poly& a);
Fe peval(const FieldCtx& F, const Poly& a, Fe x);
Poly ppow_mod(const FieldCtx& F, Poly base, u128 e, const Poly& mod);

/// Monic greatest common divisor; errors when both inputs are zero.
Poly pgcd(const FieldCtx& F, Poly a, Poly b);

/// Resultant, normalized so that resultant(X-a, X-b) = b-a.  Errors on
/// zero input.
Fe resultant(const FieldCtx& F, const Poly& f, const Poly& g);

/// D(f) for deg f >= 1: vanishes exactly when f is inseparable or has a
/// repeated root.
Fe discriminant(const FieldCtx& F, const Poly& f);

/// Multiplicity of (X - r) in f.
u32 root_multiplicity(const FieldCtx& F, const Poly& f, Fe r);

struct FactorPair {
    Poly f;     // monic irreducible
    u32 mult;
};

/// Complete factorization over F_q.  Factors come out monic, in scan order
/// of their coefficient tuples (degree first).  Equal-degree splitting is
/// randomized but runs on a fixed seed, so the result is reproducible.
std::vector<FactorPair> factor(const FieldCtx& F, const Poly& f);

bool is_irreducible_poly(const FieldCtx& F, const Poly& f);

/// Distinct roots in the base field, scan order.
std::vector<Fe> roots_in_base(const FieldCtx& F, const Poly& f);

/// F_{q^m} together with the embedding F_q -> F_{q^m}.  The extension is a
/// fresh degree-(n*m) context over F_p with the scan-minimal modulus; the
/// embedding sends the F_q generator to the scan-minimal root of the F_q
/// modulus in the big field.  Instances are cached immutably per
/// (base field, m) and are safe to share across threads.
class Embedding {
public:
    Embedding(const FieldCtx& base, u32 m);

    const FieldCtx& ext() const { return *ext_; }
    u32 m() const { return m_; }
    Fe embed(Fe x) const { return Fe{embed_tab_[x.v]}; }
    std::optional<Fe> retract(Fe y) const;
    Poly embed_poly(const Poly& f) const;

private:
    u32 m_;
    std::unique_ptr<FieldCtx> ext_;
    std::vector<u32> embed_tab_;
    std::unordered_map<u32, u32> retract_;
};

/// Cached embedding F_q -> F_{q^m}, m >= 2.
const Embedding& extension(const FieldCtx& base, u32 m);

struct ExtensionRoots {
    const FieldCtx* field;   // context the roots live in
    std::vector<Fe> roots;   // distinct, scan order
};

/// All roots of f lying in F_{q^m}, 1 <= m <= 4.
ExtensionRoots roots_in_extension(const FieldCtx& F, const Poly& f, u32 m);

}  // namespace rf3
