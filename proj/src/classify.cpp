#include "rf3/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace rf3 {

namespace {

bool is_cube(const FieldCtx& F, Fe x) {
    if (x.v == 0) return false;
    if ((F.q() - 1) % 3 != 0) return true;
    return F.pow(x, i64((F.q() - 1) / 3)) == F.one();
}

bool ram_less(const RamType& a, const RamType& b) { return a.tags < b.tags; }

}  // namespace

bool label_less(const ClassLabel& a, const ClassLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.value != b.value) return a.value < b.value;
    return ram_less(a.ram, b.ram);
}

ClassLabel class2_canonical(const FieldCtx& F, const RatFun& f) {
    if (coarse_class(F, f) != CoarseClass::II)
        throw std::domain_error("class2_canonical: not Class II");
    // scan-least value with a double fiber
    ProjPoint alpha;
    std::vector<ProjPoint> fiber;
    for (u32 x = 0; x <= F.q(); ++x) {
        ProjPoint a = x < F.q() ? ProjPoint::finite(Fe{x}) : ProjPoint::infinity();
        auto pre = preimages(F, f, a);
        if (pre.size() == 2) {
            alpha = a;
            fiber = pre;
            break;
        }
    }
    if (fiber.empty()) throw std::logic_error("class2_canonical: no double fiber");
    // the fiber splits as indices 2 + 1; the index-2 preimage goes to infinity
    ProjPoint r_ram = fiber[0], r_other = fiber[1];
    if (ram_index_at(F, f, r_ram) != 2) std::swap(r_ram, r_other);
    if (ram_index_at(F, f, r_ram) != 2 || ram_index_at(F, f, r_other) != 1)
        throw std::logic_error("class2_canonical: fiber indices are not 2 + 1");

    RatFun g = f;
    if (!alpha.inf)
        g = post_compose(F, moebius(F, F.zero(), F.one(), F.one(), F.neg(alpha.x)), g);
    Moebius phi;  // phi(infinity) = r_ram, phi(0) = r_other
    if (r_ram.inf)
        phi = moebius(F, F.one(), r_other.x, F.zero(), F.one());
    else if (r_other.inf)
        phi = moebius(F, r_ram.x, F.one(), F.one(), F.zero());
    else
        phi = moebius(F, r_ram.x, r_other.x, F.one(), F.one());
    g = pre_compose(F, g, phi);
    if (g.den != poly_x(F))
        throw std::logic_error("class2_canonical: denominator did not normalize to X");
    // kill the linear numerator coefficient, then make the numerator monic
    g = post_compose(F, moebius(F, F.one(), F.neg(g.num.coeff(1)), F.zero(), g.num.coeff(3)), g);
    if (g.num.coeff(1).v != 0 || g.num.coeff(3) != F.one() || g.den != poly_x(F))
        throw std::logic_error("class2_canonical: canonical form not reached");
    Fe s = g.num.coeff(2), t = g.num.coeff(0);
    if (s.v == 0) {
        for (Fe rep : F.cube_transversal())
            if (is_cube(F, F.div(t, rep))) return ClassLabel{ClassLabel::Kind::IIA, rep, {}};
        throw std::logic_error("class2_canonical: no transversal representative");
    }
    return ClassLabel{ClassLabel::Kind::IIB, F.div(t, F.pow(s, 3)), {}};
}

ClassLabel classify(const FieldCtx& F, const RatFun& f) {
    if (f.deg() != 3) throw std::domain_error("classify: degree must be 3");
    switch (coarse_class(F, f)) {
        case CoarseClass::I:
            return ClassLabel{is_separable(F, f) ? ClassLabel::Kind::Isep
                                                 : ClassLabel::Kind::Iinsep,
                              {}, {}};
        case CoarseClass::II:
            return class2_canonical(F, f);
        case CoarseClass::III:
            break;
    }
    FstParams sp = to_fst(F, f);
    Subclass sub = subclass(F, sp);
    if (sub == Subclass::II_escape)
        throw std::logic_error("classify: Class III function escaped to Class II");
    if (F.p() == 2)
        return ClassLabel{ClassLabel::Kind::IIIeven, theta(F, sp), {}};
    if (sub == Subclass::IIIa)
        return ClassLabel{ClassLabel::Kind::IIIa, theta(F, sp), {}};
    if (sub == Subclass::IIIb)
        return ClassLabel{ClassLabel::Kind::IIIb, mu_squared(F, sp), {}};
    if (F.p() == 3) {
        if (sub != Subclass::IIId)
            throw std::logic_error("classify: Class III-c is empty in characteristic 3");
        return ClassLabel{ClassLabel::Kind::IIIp3d, {}, {}};
    }
    return ClassLabel{ClassLabel::Kind::IIIwild27, {}, ram_type(F, fst(F, sp))};
}

namespace {

struct OmegaMemo {
    FstParams sp;
    bool class2 = false;
    Subclass sub = Subclass::II_escape;
    Fe th{};
    Fe mu2{};
    bool has_mu2 = false;
};

std::vector<OmegaMemo> scan_omega(const FieldCtx& F, Exec mode) {
    auto pts = omega_points(F);
    std::vector<OmegaMemo> memo(pts.size());
    for_each_index(mode, i64(pts.size()), [&](i64 i) {
        OmegaMemo& m = memo[i];
        m.sp = pts[i];
        m.class2 = class2_witness(F, m.sp).has_value();
        if (m.class2) return;
        m.sub = subclass(F, m.sp);
        m.th = theta(F, m.sp);
        if (m.sub == Subclass::IIIb) {
            m.mu2 = mu_squared(F, m.sp);
            m.has_mu2 = true;
        }
    });
    return memo;
}

RatFun make_rf(const FieldCtx& F, std::initializer_list<i64> num,
               std::initializer_list<i64> den) {
    return rf_make(F, poly_from_ints(F, num), poly_from_ints(F, den));
}

}  // namespace

std::vector<Representative> representatives(const FieldCtx& F, Exec mode) {
    const u32 q = F.q();
    std::vector<Representative> out;
    auto add = [&](ClassLabel::Kind k, Fe value, RamType ram, RatFun fn) {
        out.push_back({ClassLabel{k, value, std::move(ram)}, std::move(fn)});
    };

    // ----- Class I (permutation functions) -----
    if (q % 6 == 1) {
        Fe b{0};
        for (u32 v = 1; v < q; ++v)
            if (!F.is_square(F.neg(Fe{v}))) { b = Fe{v}; break; }
        Fe a = F.div(F.from_int(9), b);
        add(ClassLabel::Kind::Isep, {}, {},
            rf_make(F, poly_from({F.zero(), a, F.zero(), F.one()}),
                    poly_from({F.one(), F.zero(), b})));
    } else if (q % 6 == 3) {
        add(ClassLabel::Kind::Iinsep, {}, {}, make_rf(F, {0, 0, 0, 1}, {1}));
        Fe a{0};
        for (u32 v = 1; v < q; ++v)
            if (!F.is_square(F.neg(Fe{v}))) { a = Fe{v}; break; }
        add(ClassLabel::Kind::Isep, {}, {},
            rf_make(F, poly_from({F.zero(), a, F.zero(), F.one()}), poly_from({F.one()})));
    } else if (q % 6 == 4) {
        Fe b0{0};
        for (u32 v = 1; v < q; ++v)
            if (F.trace_q_over_2(Fe{v}) == 1) { b0 = Fe{v}; break; }
        Fe ib = F.inv(b0);
        Fe a1 = F.add(b0, ib), a2 = F.add(F.one(), ib);
        add(ClassLabel::Kind::Isep, {}, {},
            rf_make(F, poly_from({F.zero(), a1, a2, F.one()}),
                    poly_from({b0, F.one(), F.one()})));
    } else {
        add(ClassLabel::Kind::Isep, {}, {}, make_rf(F, {0, 0, 0, 1}, {1}));
    }

    // ----- Class II -----
    for (Fe t : F.cube_transversal())
        add(ClassLabel::Kind::IIA, t, {},
            rf_make(F, poly_from({t, F.zero(), F.zero(), F.one()}), poly_x(F)));
    for (u32 v = 1; v < q; ++v)
        add(ClassLabel::Kind::IIB, Fe{v}, {},
            rf_make(F, poly_from({Fe{v}, F.zero(), F.one(), F.one()}), poly_x(F)));

    // ----- Class III -----
    auto memo = scan_omega(F, mode);
    auto first_with = [&](auto&& pred) -> const OmegaMemo* {
        for (const auto& m : memo)
            if (!m.class2 && pred(m)) return &m;
        return nullptr;
    };
    auto require = [&](const OmegaMemo* m, const char* what) -> const OmegaMemo& {
        if (!m) throw std::logic_error(std::string("representatives: no witness for ") + what);
        return *m;
    };

    if (F.p() == 2) {
        for (u32 v = 1; v < q; ++v) {
            Fe th{v};
            const auto& m =
                require(first_with([&](const OmegaMemo& x) { return x.th == th; }), "III theta");
            add(ClassLabel::Kind::IIIeven, th, {}, fst(F, m.sp));
        }
        return out;
    }

    for (u32 v = 1; v < q; ++v) {
        if (F.is_square(Fe{v})) continue;
        Fe th = F.add(F.from_int(27), Fe{v});
        const auto& m = require(first_with([&](const OmegaMemo& x) {
                                    return x.sub == Subclass::IIIa && x.th == th;
                                }),
                                "III-a theta");
        add(ClassLabel::Kind::IIIa, th, {}, fst(F, m.sp));
    }
    Fe nine = F.from_int(9);
    for (u32 v = 2; v < q; ++v) {
        Fe b{v};
        if (!F.is_square(b) || b == nine) continue;
        const auto& m = require(first_with([&](const OmegaMemo& x) {
                                    return x.has_mu2 && x.mu2 == b;
                                }),
                                "III-b mu^2");
        add(ClassLabel::Kind::IIIb, b, {}, fst(F, m.sp));
    }
    if (F.p() == 3) {
        add(ClassLabel::Kind::IIIp3d, {}, {}, fst(F, FstParams{F.zero(), F.one()}));
    } else {
        Fe u{0};
        bool got = false;
        for (u32 v = 2; v < q && !got; ++v) {
            Fe w = F.add(F.sub(F.one(), Fe{v}), F.mul(Fe{v}, Fe{v}));  // 1 - u + u^2
            if (w.v != 0 && !F.is_square(w)) { u = Fe{v}; got = true; }
        }
        if (!got) throw std::logic_error("representatives: no Class III-d witness u");
        RatFun gu = fst(F, class3d_params(F, u));
        add(ClassLabel::Kind::IIIwild27, {}, ram_type(F, gu), gu);
        RatFun f31 = fst(F, FstParams{F.from_int(-3), F.one()});
        add(ClassLabel::Kind::IIIwild27, {}, ram_type(F, f31), f31);
    }
    return out;
}

ClassCounts class_counts(const FieldCtx& F) {
    const u64 q = F.q();
    ClassCounts c;
    c.class_i = (q % 6 == 3) ? 2 : 1;
    c.class_ii = (q % 3 == 1) ? q + 2 : q;
    c.class_iii = q - 1;
    c.total = c.class_i + c.class_ii + c.class_iii;
    return c;
}

}  // namespace rf3
