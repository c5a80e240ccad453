#include "rf3/ramify.hpp"

#include <algorithm>
#include <stdexcept>

namespace rf3 {

RamType make_ram_type(std::vector<std::pair<u32, u32>> tags) {
    std::sort(tags.begin(), tags.end());
    return RamType{std::move(tags)};
}

Poly wronskian(const FieldCtx& F, const RatFun& f) {
    return psub(F, pmul(F, pderiv(F, f.num), f.den), pmul(F, f.num, pderiv(F, f.den)));
}

namespace {

u32 x_multiplicity(const Poly& g) {
    if (g.is_zero()) throw std::logic_error("ram: valuation of zero");
    u32 m = 0;
    while (g.c[m].v == 0) ++m;
    return m;
}

Poly reversal(const FieldCtx&, const Poly& g, int d) {
    // X^d * g(1/X)
    std::vector<Fe> c(d + 1, Fe{0});
    for (int i = 0; i <= g.deg(); ++i) c[d - i] = g.c[i];
    return poly_from(std::move(c));
}

}  // namespace

u32 ram_index_at(const FieldCtx& F, const RatFun& f, ProjPoint a) {
    if (!a.inf) {
        Fe den = peval(F, f.den, a.x);
        if (den.v != 0) {
            Fe val = F.div(peval(F, f.num, a.x), den);
            return root_multiplicity(F, psub(F, f.num, pscale(F, f.den, val)), a.x);
        }
        return root_multiplicity(F, f.den, a.x);
    }
    const int d = f.deg();
    Poly rn = reversal(F, f.num, d);
    Poly rd = reversal(F, f.den, d);
    if (rd.coeff(0).v != 0) {
        Fe val = F.div(rn.coeff(0), rd.coeff(0));
        return x_multiplicity(psub(F, rn, pscale(F, rd, val)));
    }
    return x_multiplicity(rd);
}

std::vector<RamPoint> ram_points(const FieldCtx& F, const RatFun& f) {
    Poly w = wronskian(F, f);
    if (w.is_zero()) throw std::domain_error("ram: function is inseparable");
    std::vector<RamPoint> out;
    std::vector<FactorPair> factors;
    if (w.deg() >= 1) factors = factor(F, w);  // constant Wronskian: no finite points
    for (const auto& [h, mult] : factors) {
        const u32 d = u32(h.deg());
        u32 e;
        if (d == 1) {
            e = ram_index_at(F, f, ProjPoint::finite(F.neg(h.c[0])));
        } else {
            const Embedding& E = extension(F, d);
            RatFun femb = rf_embed(E, f);
            auto roots = roots_in_base(E.ext(), E.embed_poly(h));
            if (roots.size() != d) throw std::logic_error("ram: factor does not split");
            e = ram_index_at(E.ext(), femb, ProjPoint::finite(roots.front()));
        }
        if (e > 1) out.push_back(RamPoint{false, h, d, e, mult});
    }
    u32 einf = ram_index_at(F, f, ProjPoint::infinity());
    if (einf > 1) out.push_back(RamPoint{true, Poly{}, 1, einf, 0});
    return out;
}

RamType ram_type(const FieldCtx& F, const RatFun& f) {
    if (f.deg() != 3) throw std::domain_error("ram_type: degree must be 3");
    std::vector<std::pair<u32, u32>> tags;
    for (const auto& rp : ram_points(F, f))
        for (u32 i = 0; i < rp.degree; ++i) tags.emplace_back(rp.index, rp.degree);
    RamType rt = make_ram_type(std::move(tags));
    if (!validate_ram_type(F.p(), rt))
        throw std::logic_error("ram_type: computed type not admissible for p=" +
                               std::to_string(F.p()) + ": " + ram_type_string(rt));
    return rt;
}

bool validate_ram_type(u32 p, const RamType& rt) {
    std::vector<u32> idx;
    for (auto& [e, d] : rt.tags) idx.push_back(e);
    std::sort(idx.begin(), idx.end());
    auto is = [&](std::initializer_list<u32> pat) {
        return idx == std::vector<u32>(pat);
    };
    if (p == 2) return is({2}) || is({2, 2}) || is({2, 3}) || is({3, 3});
    if (p == 3) return is({2, 2, 2, 2}) || is({2, 3}) || is({3});
    return is({2, 2, 2, 2}) || is({2, 2, 3}) || is({3, 3});
}

std::string ram_type_string(const RamType& rt) {
    std::string s;
    for (size_t i = 0; i < rt.tags.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rt.tags[i].first) + "/" + std::to_string(rt.tags[i].second);
    }
    return s;
}

}  // namespace rf3
