#include "rf3/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

namespace rf3 {

Poly poly_from(std::vector<Fe> coeffs) {
    while (!coeffs.empty() && coeffs.back().v == 0) coeffs.pop_back();
    return Poly{std::move(coeffs)};
}

Poly poly_const(Fe a) { return a.v == 0 ? Poly{} : Poly{{a}}; }

Poly poly_x(const FieldCtx& F) { return Poly{{F.zero(), F.one()}}; }

Poly poly_from_ints(const FieldCtx& F, std::initializer_list<i64> coeffs) {
    std::vector<Fe> c;
    for (i64 k : coeffs) c.push_back(F.from_int(k));
    return poly_from(std::move(c));
}

Poly padd(const FieldCtx& F, const Poly& a, const Poly& b) {
    std::vector<Fe> c(std::max(a.c.size(), b.c.size()), Fe{0});
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return poly_from(std::move(c));
}

Poly pneg(const FieldCtx& F, const Poly& a) {
    std::vector<Fe> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.neg(a.c[i]);
    return Poly{std::move(c)};
}

Poly psub(const FieldCtx& F, const Poly& a, const Poly& b) { return padd(F, a, pneg(F, b)); }

Poly pmul(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Fe> c(a.c.size() + b.c.size() - 1, Fe{0});
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].v == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly{std::move(c)};
}

Poly pscale(const FieldCtx& F, const Poly& a, Fe s) {
    if (s.v == 0) return {};
    std::vector<Fe> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a.c[i], s);
    return Poly{std::move(c)};
}

std::pair<Poly, Poly> pdivmod(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    if (a.deg() < b.deg()) return {Poly{}, a};
    Fe lcinv = F.inv(b.lc());
    std::vector<Fe> rem = a.c;
    std::vector<Fe> quo(a.deg() - b.deg() + 1, Fe{0});
    for (int i = a.deg(); i >= b.deg(); --i) {
        Fe t = F.mul(rem[i], lcinv);
        if (t.v == 0) continue;
        quo[i - b.deg()] = t;
        for (int j = 0; j <= b.deg(); ++j)
            rem[i - b.deg() + j] = F.sub(rem[i - b.deg() + j], F.mul(t, b.c[j]));
    }
    return {poly_from(std::move(quo)), poly_from(std::move(rem))};
}

Poly pquo(const FieldCtx& F, const Poly& a, const Poly& b) { return pdivmod(F, a, b).first; }
Poly pmod(const FieldCtx& F, const Poly& a, const Poly& b) { return pdivmod(F, a, b).second; }

Poly monic(const FieldCtx& F, const Poly& a) {
    if (a.is_zero() || a.lc() == F.one()) return a;
    return pscale(F, a, F.inv(a.lc()));
}

Poly pderiv(const FieldCtx& F, const Poly& a) {
    if (a.deg() < 1) return {};
    std::vector<Fe> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = F.mul(F.from_int(i64(i)), a.c[i]);
    return poly_from(std::move(c));
}

Fe peval(const FieldCtx& F, const Poly& a, Fe x) {
    Fe r = F.zero();
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

Poly ppow_mod(const FieldCtx& F, Poly base, u128 e, const Poly& mod) {
    Poly r = poly_const(F.one());
    base = pmod(F, base, mod);
    while (e) {
        if (e & 1) r = pmod(F, pmul(F, r, base), mod);
        base = pmod(F, pmul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

Poly pgcd(const FieldCtx& F, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly: gcd(0, 0)");
    while (!b.is_zero()) {
        Poly r = pmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

namespace {

// Standard resultant lc(A)^{deg B} * prod B(alpha) over roots alpha of A.
Fe res_std(const FieldCtx& F, Poly a, Poly b) {
    Fe acc = F.one();
    while (b.deg() > 0) {
        Poly r = pmod(F, a, b);
        if (r.is_zero()) return F.zero();
        Fe sign = (u64(a.deg()) * u64(b.deg())) % 2 ? F.from_int(-1) : F.one();
        acc = F.mul(acc, F.mul(sign, F.pow(b.lc(), a.deg() - r.deg())));
        a = std::move(b);
        b = std::move(r);
    }
    return F.mul(acc, F.pow(b.c[0], a.deg()));
}

}  // namespace

Fe resultant(const FieldCtx& F, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero input");
    if (f.deg() == 0) return F.pow(f.c[0], g.deg());
    if (g.deg() == 0) return F.pow(g.c[0], f.deg());
    return res_std(F, g, f);
}

Fe discriminant(const FieldCtx& F, const Poly& f) {
    int d = f.deg();
    if (d < 1) throw std::domain_error("discriminant: constant input");
    Poly fp = pderiv(F, f);
    if (fp.is_zero()) return F.zero();
    // Sylvester resultant with f' at nominal degree d-1
    Fe r = res_std(F, f, fp);
    r = F.mul(r, F.pow(f.lc(), (d - 1) - fp.deg()));
    r = F.div(r, f.lc());
    if ((u64(d) * u64(d - 1) / 2) % 2) r = F.neg(r);
    return r;
}

u32 root_multiplicity(const FieldCtx& F, const Poly& f, Fe r) {
    if (f.is_zero()) throw std::domain_error("root_multiplicity: zero polynomial");
    u32 m = 0;
    Poly g = f;
    while (g.deg() >= 1) {
        // synthetic division by (X - r)
        std::vector<Fe> q(g.c.size() - 1);
        Fe carry = F.zero();
        for (size_t i = g.c.size(); i-- > 1;) {
            carry = F.add(g.c[i], F.mul(carry, r));
            q[i - 1] = carry;
        }
        Fe rem = F.add(g.c[0], F.mul(carry, r));
        if (rem.v != 0) break;
        ++m;
        g = poly_from(std::move(q));
    }
    return m;
}

namespace {

// f = g(X^p) -> g, lifting coefficients through the inverse Frobenius.
Poly pth_root(const FieldCtx& F, const Poly& f) {
    const u32 p = F.p();
    std::vector<Fe> c(f.deg() / p + 1, Fe{0});
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].v == 0) continue;
        if (i % p != 0) throw std::logic_error("pth_root: polynomial is not a p-th power");
        c[i / p] = F.pow(f.c[i], i64(F.q() / p));  // x^{q/p} inverts x -> x^p
    }
    return poly_from(std::move(c));
}

// (monic squarefree part, multiplicity) pairs, pairwise coprime parts.
void squarefree_decomp(const FieldCtx& F, const Poly& f, u32 outer,
                       std::vector<std::pair<Poly, u32>>& out) {
    Poly fp = pderiv(F, f);
    if (fp.is_zero()) {
        squarefree_decomp(F, pth_root(F, f), outer * F.p(), out);
        return;
    }
    Poly c = pgcd(F, f, fp);
    Poly w = pquo(F, f, c);
    u32 i = 1;
    while (w.deg() > 0) {
        Poly y = pgcd(F, w, c);
        Poly z = pquo(F, w, y);
        if (z.deg() > 0) out.emplace_back(z, i * outer);
        w = std::move(y);
        c = pquo(F, c, w);
        ++i;
    }
    if (c.deg() > 0) squarefree_decomp(F, pth_root(F, c), outer * F.p(), out);
}

// Distinct-degree splitting of a monic squarefree g: (product, factor degree).
std::vector<std::pair<Poly, u32>> distinct_degree(const FieldCtx& F, Poly g) {
    std::vector<std::pair<Poly, u32>> out;
    Poly h = pmod(F, poly_x(F), g);
    u32 i = 1;
    while (g.deg() >= 2 * int(i)) {
        h = ppow_mod(F, h, F.q(), g);
        Poly d = pgcd(F, g, psub(F, h, poly_x(F)));
        if (d.deg() > 0) {
            out.emplace_back(d, i);
            g = pquo(F, g, d);
            h = pmod(F, h, g);
        }
        ++i;
    }
    if (g.deg() > 0) out.emplace_back(g, u32(g.deg()));
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); h is a product of distinct
// monic irreducibles of degree d.
void equal_degree(const FieldCtx& F, const Poly& h, u32 d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
    if (u32(h.deg()) == d) {
        out.push_back(h);
        return;
    }
    const u32 q = F.q();
    for (;;) {
        std::vector<Fe> rc(h.deg());
        for (auto& x : rc) x = Fe{u32(rng() % q)};
        Poly a = poly_from(std::move(rc));
        if (a.deg() < 1) continue;
        Poly g;
        if (F.p() != 2) {
            u128 e = 1;
            for (u32 i = 0; i < d; ++i) e *= q;
            Poly b = ppow_mod(F, a, (e - 1) / 2, h);
            g = pgcd(F, h, psub(F, b, poly_const(F.one())));
        } else {
            // trace map over F_2
            Poly t, s = pmod(F, a, h);
            for (u32 i = 0; i < F.n() * d; ++i) {
                t = padd(F, t, s);
                s = pmod(F, pmul(F, s, s), h);
            }
            if (t.is_zero()) continue;
            g = pgcd(F, h, t);
        }
        if (g.deg() > 0 && g.deg() < h.deg()) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, pquo(F, h, g), d, rng, out);
            return;
        }
    }
}

// scan order on monic polynomials: degree, then the coefficient tuple read
// as a base-q number
bool poly_scan_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

}  // namespace

std::vector<FactorPair> factor(const FieldCtx& F, const Poly& f) {
    if (f.deg() < 1) throw std::domain_error("factor: constant input");
    std::vector<std::pair<Poly, u32>> parts;
    squarefree_decomp(F, monic(F, f), 1, parts);
    std::mt19937_64 rng(0x5eedf00dULL);  // fixed seed: reproducible splits
    std::vector<FactorPair> out;
    for (const auto& [part, mult] : parts) {
        for (const auto& [prod, d] : distinct_degree(F, part)) {
            std::vector<Poly> irr;
            equal_degree(F, prod, d, rng, irr);
            for (auto& g : irr) out.push_back({std::move(g), mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FactorPair& a, const FactorPair& b) { return poly_scan_less(a.f, b.f); });
    return out;
}

bool is_irreducible_poly(const FieldCtx& F, const Poly& f) {
    if (f.deg() < 1) return false;
    if (f.deg() == 1) return true;
    auto fs = factor(F, f);
    return fs.size() == 1 && fs[0].mult == 1;
}

std::vector<Fe> roots_in_base(const FieldCtx& F, const Poly& f) {
    std::vector<Fe> r;
    for (const auto& [g, mult] : factor(F, f))
        if (g.deg() == 1) r.push_back(F.neg(g.c[0]));
    std::sort(r.begin(), r.end());
    return r;
}

Embedding::Embedding(const FieldCtx& base, u32 m) : m_(m) {
    ext_ = std::make_unique<FieldCtx>(base.p(), base.n() * m);
    const FieldCtx& E = *ext_;
    // base modulus has prime-field coefficients; its scan-minimal root in E
    // pins the embedding
    std::vector<Fe> mc;
    for (u32 c : base.modulus()) mc.push_back(E.from_int(i64(c)));
    auto roots = roots_in_base(E, poly_from(std::move(mc)));
    if (roots.size() != base.n())
        throw std::logic_error("embedding: modulus does not split in the extension");
    Fe beta = roots.front();
    embed_tab_.resize(base.q());
    for (u32 v = 0; v < base.q(); ++v) {
        auto digits = base.coeffs(Fe{v});
        Fe acc = E.zero();
        for (size_t i = digits.size(); i-- > 0;)
            acc = E.add(E.mul(acc, beta), E.from_int(i64(digits[i])));
        embed_tab_[v] = acc.v;
        retract_[acc.v] = v;
    }
}

std::optional<Fe> Embedding::retract(Fe y) const {
    auto it = retract_.find(y.v);
    if (it == retract_.end()) return std::nullopt;
    return Fe{it->second};
}

Poly Embedding::embed_poly(const Poly& f) const {
    std::vector<Fe> c(f.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = embed(f.c[i]);
    return Poly{std::move(c)};
}

const Embedding& extension(const FieldCtx& base, u32 m) {
    if (m < 2) throw std::invalid_argument("extension: m must be >= 2");
    using Key = std::tuple<u32, u32, std::vector<u32>, u32>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<Embedding>> cache;
    Key key{base.p(), base.n(), base.modulus(), m};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(std::move(key), std::make_unique<Embedding>(base, m)).first;
    return *it->second;
}

ExtensionRoots roots_in_extension(const FieldCtx& F, const Poly& f, u32 m) {
    if (f.deg() < 1) throw std::domain_error("roots_in_extension: constant input");
    if (m < 1 || m > 4) throw std::invalid_argument("roots_in_extension: m out of range");
    if (m == 1) return {&F, roots_in_base(F, f)};
    const Embedding& E = extension(F, m);
    return {&E.ext(), roots_in_base(E.ext(), E.embed_poly(f))};
}

}  // namespace rf3
