#include "rf3/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rf3/text.hpp"

namespace rf3 {

namespace {

struct UnionFind {
    std::vector<u32> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    u32 find(u32 x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(u32 a, u32 b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Solve g = psi o h given S(h) = S(g): express g's numerator/denominator in
// the basis (h.num, h.den).
std::optional<Moebius> recover_psi(const FieldCtx& F, const RatFun& h, const RatFun& g) {
    auto coord = [&](const Poly& p, int j) { return p.coeff(3 - j); };
    int j1 = -1, j2 = -1;
    for (int a = 0; a < 4 && j1 < 0; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Fe det = F.sub(F.mul(coord(h.num, a), coord(h.den, b)),
                           F.mul(coord(h.num, b), coord(h.den, a)));
            if (det.v != 0) {
                j1 = a;
                j2 = b;
                break;
            }
        }
    if (j1 < 0) return std::nullopt;
    Fe det = F.sub(F.mul(coord(h.num, j1), coord(h.den, j2)),
                   F.mul(coord(h.num, j2), coord(h.den, j1)));
    auto solve = [&](const Poly& target) {
        Fe u = F.div(F.sub(F.mul(coord(target, j1), coord(h.den, j2)),
                           F.mul(coord(target, j2), coord(h.den, j1))),
                     det);
        Fe v = F.div(F.sub(F.mul(coord(h.num, j1), coord(target, j2)),
                           F.mul(coord(h.num, j2), coord(target, j1))),
                     det);
        return std::pair<Fe, Fe>{u, v};
    };
    auto [u, v] = solve(g.num);
    auto [w, z] = solve(g.den);
    if (F.sub(F.mul(u, z), F.mul(v, w)).v == 0) return std::nullopt;
    Moebius psi = moebius(F, u, v, w, z);
    if (post_compose(F, psi, h) != g) return std::nullopt;
    return psi;
}

}  // namespace

std::optional<EquivWitness> brute_equiv(const FieldCtx& F, const RatFun& f, const RatFun& g,
                                        Exec mode) {
    if (f.deg() != 3 || g.deg() != 3) throw std::domain_error("brute_equiv: degree must be 3");
    auto pgl = enumerate_pgl(F);
    Pencil target = pencil(F, g);
    std::atomic<i64> best{i64(pgl.size())};
    for_each_index(mode, i64(pgl.size()), [&](i64 i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (pencil(F, pre_compose(F, f, pgl[i])) == target) {
            i64 cur = best.load(std::memory_order_relaxed);
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    });
    i64 idx = best.load();
    if (idx >= i64(pgl.size())) return std::nullopt;
    const Moebius& phi = pgl[idx];
    auto psi = recover_psi(F, pre_compose(F, f, phi), g);
    if (!psi) throw std::logic_error("brute_equiv: psi recovery failed on a pencil match");
    return EquivWitness{*psi, phi};
}

std::optional<FstParams> fst_image(const FieldCtx& F, FstParams sp, const Moebius& phi) {
    Pencil P = pencil(F, pre_compose(F, fst(F, sp), phi));
    const std::array<Fe, 4> want_den{F.zero(), F.one(), F.from_int(-1), F.zero()};
    if (P.rows[1] != want_den) return std::nullopt;
    if (P.rows[0][0] != F.one() || P.rows[0][1].v != 0) return std::nullopt;
    return FstParams{P.rows[0][2], P.rows[0][3]};
}

std::optional<u32> OrbitPartition::find_point(FstParams sp) const {
    auto it = std::lower_bound(points.begin(), points.end(), sp,
                               [](const FstParams& a, const FstParams& b) {
                                   return a.s != b.s ? a.s < b.s : a.t < b.t;
                               });
    if (it == points.end() || !(*it == sp)) return std::nullopt;
    return u32(it - points.begin());
}

OrbitPartition orbit_partition_fst(const FieldCtx& F, Exec mode, bool reverse_scan) {
    OrbitPartition part;
    for (const auto& sp : omega_points(F))
        if (!class2_witness(F, sp)) part.points.push_back(sp);
    const size_t n = part.points.size();
    auto pgl = enumerate_pgl(F);
    std::vector<std::vector<u32>> links(n);
    auto scan_point = [&](size_t i) {
        const FstParams sp = part.points[i];
        auto& out = links[i];
        for (size_t k = 0; k < pgl.size(); ++k) {
            const Moebius& phi = pgl[reverse_scan ? pgl.size() - 1 - k : k];
            if (auto img = fst_image(F, sp, phi)) {
                auto j = part.find_point(*img);
                if (!j) throw std::logic_error("orbit: image parameters not of Class III");
                out.push_back(*j);
            }
        }
    };
    if (reverse_scan) {
        for (size_t i = n; i-- > 0;) scan_point(i);
    } else {
        for_each_index(mode, i64(n), [&](i64 i) { scan_point(size_t(i)); });
    }
    UnionFind uf(n);
    for (size_t i = 0; i < n; ++i)
        for (u32 j : links[i]) uf.unite(u32(i), j);
    // canonical ids ordered by scan-least member
    std::map<u32, u32> root_to_id;
    part.orbit.resize(n);
    for (u32 i = 0; i < n; ++i) {
        u32 r = uf.find(i);
        auto [it, fresh] = root_to_id.emplace(r, u32(root_to_id.size()));
        part.orbit[i] = it->second;
    }
    part.orbit_count = u32(root_to_id.size());
    part.members.resize(part.orbit_count);
    for (u32 i = 0; i < n; ++i) part.members[part.orbit[i]].push_back(i);
    return part;
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

namespace {

struct Checker {
    const FieldCtx& F;
    std::vector<CheckResult> checks;
    void add(std::string name, bool pass, std::string note = "") {
        checks.push_back({std::move(name), pass, std::move(note)});
    }
};

// Runs fn over [0, n); fn returns an empty string on success.  Reports the
// first failure in index order.
template <class Fn>
std::string scan_for_failure(Exec mode, i64 n, Fn&& fn) {
    std::vector<std::string> fail(n);
    for_each_index(mode, n, [&](i64 i) { fail[i] = fn(i); });
    for (i64 i = 0; i < n; ++i)
        if (!fail[i].empty()) return fail[i];
    return "";
}

std::string sp_str(const FieldCtx& F, FstParams sp) {
    return "(s,t)=(" + elem_string(F, sp.s) + "," + elem_string(F, sp.t) + ")";
}

bool profile_has_double(const FieldCtx& F, const RatFun& f) {
    auto census = value_profile(F, f);
    auto it = census.find(2);
    return it != census.end() && it->second > 0;
}

Fe random_fe(const FieldCtx& F, std::mt19937_64& rng) { return Fe{u32(rng() % F.q())}; }

// -------------------- counts --------------------

void suite_counts(Checker& ck, const FieldCtx& F, Exec mode) {
    const u32 q = F.q();
    auto part = orbit_partition_fst(F, mode);
    ck.add("orbit-count", part.orbit_count == q - 1,
           "got " + std::to_string(part.orbit_count) + ", want " + std::to_string(q - 1));
    auto reps = representatives(F, mode);
    std::vector<const Representative*> ii;
    for (const auto& r : reps)
        if (r.label.kind == ClassLabel::Kind::IIA || r.label.kind == ClassLabel::Kind::IIB)
            ii.push_back(&r);
    ClassCounts cc = class_counts(F);
    ck.add("class2-count", ii.size() == cc.class_ii,
           "got " + std::to_string(ii.size()) + ", want " + std::to_string(cc.class_ii));
    std::string bad;
    for (size_t i = 0; i < ii.size() && bad.empty(); ++i)
        for (size_t j = i + 1; j < ii.size() && bad.empty(); ++j)
            if (brute_equiv(F, ii[i]->fn, ii[j]->fn, mode))
                bad = label_string(F, ii[i]->label) + " ~ " + label_string(F, ii[j]->label);
    ck.add("class2-pairwise-inequivalent", bad.empty(), bad);
    u64 want_total = (q % 6 == 1 || q % 6 == 4) ? 2 * (q + 1)
                     : (q % 6 == 3)             ? 2 * q + 1
                                                : 2 * q;
    ck.add("total-count", reps.size() == cc.total && cc.total == want_total,
           "representatives " + std::to_string(reps.size()) + ", formula " +
               std::to_string(want_total));
}

// -------------------- theorem2 --------------------

void suite_theorem2(Checker& ck, const FieldCtx& F, Exec mode) {
    auto pts = omega_points(F);
    std::string bad = scan_for_failure(mode, i64(pts.size()), [&](i64 i) -> std::string {
        const FstParams sp = pts[i];
        bool doubled = profile_has_double(F, fst(F, sp));
        auto wit = class2_witness(F, sp);
        if (doubled != wit.has_value())
            return sp_str(F, sp) + ": profile says " + (doubled ? "II" : "III") +
                   ", root criterion says " + (wit ? "II" : "III");
        if (wit) {
            auto [a, b] = *wit;
            Fe t_pred = F.neg(F.mul(F.mul(a, a), b));
            Fe s_pred = F.add(F.add(F.mul(F.from_int(-2), a), F.neg(b)),
                              F.add(F.mul(a, a), F.mul(F.from_int(2), F.mul(a, b))));
            if (a == b || t_pred != sp.t || s_pred != sp.s)
                return sp_str(F, sp) + ": witness identities fail";
        }
        return "";
    });
    ck.add("profile-vs-root-criterion", bad.empty(), bad);
}

// -------------------- s3table --------------------

void suite_s3table(Checker& ck, const FieldCtx& F, Exec mode) {
    auto pts = omega_points(F);
    auto stab = s3_stabilizer(F);
    std::string bad = scan_for_failure(mode, i64(pts.size()), [&](i64 i) -> std::string {
        const FstParams sp = pts[i];
        auto images = s3_images(F, sp);
        for (size_t k = 0; k < 6; ++k) {
            auto img = fst_image(F, sp, stab[k]);
            if (!img || !(*img == images[k]))
                return sp_str(F, sp) + " under stabilizer element " + std::to_string(k);
        }
        return "";
    });
    ck.add("table3-images", bad.empty(), bad);
}

// -------------------- eq-st --------------------

struct PhiCoeffs {
    Fe a, b, c, d;
};

// g0, g1 of the pencil-membership system for f_{s,t} o phi.
std::pair<Fe, Fe> membership_g(const FieldCtx& F, FstParams sp, const PhiCoeffs& m) {
    auto& [a, b, c, d] = m;
    Fe s = sp.s, t = sp.t;
    auto M = [&](std::initializer_list<Fe> xs) {
        Fe r = F.one();
        for (Fe x : xs) r = F.mul(r, x);
        return r;
    };
    Fe g0 = F.zero();
    for (Fe term : {M({a, a, b, b}), F.neg(M({a, b, b, c})), F.neg(M({a, a, b, d})),
                    F.neg(M({a, b, c, d, s})), F.neg(M({b, c, c, d, t})),
                    F.neg(M({a, c, d, d, t})), M({c, c, d, d, t})})
        g0 = F.add(g0, term);
    Fe g1 = F.zero();
    for (Fe term :
         {M({a, a, a, a}), M({F.from_int(2), a, a, a, b}), M({F.from_int(-2), a, a, a, c}),
          M({F.from_int(-3), a, a, b, c}), F.neg(M({a, a, a, d})), F.neg(M({a, a, c, c, s})),
          F.neg(M({a, b, c, c, s})), F.neg(M({a, a, c, d, s})),
          M({F.from_int(-2), a, c, c, c, t}), F.neg(M({b, c, c, c, t})), M({c, c, c, c, t}),
          M({F.from_int(-3), a, c, c, d, t}), M({F.from_int(2), c, c, c, d, t})})
        g1 = F.add(g1, term);
    return {g0, g1};
}

// (s,t) and (s',t') solved from phi outside the stabilizer.
std::pair<FstParams, FstParams> st_from_phi(const FieldCtx& F, const PhiCoeffs& m) {
    auto& [a, b, c, d] = m;
    Fe num = F.zero();
    auto M = [&](std::initializer_list<Fe> xs) {
        Fe r = F.one();
        for (Fe x : xs) r = F.mul(r, x);
        return r;
    };
    for (Fe term :
         {M({a, a, d}), M({F.from_int(2), a, b, c}), M({F.from_int(2), a, b, d}),
          M({F.from_int(-2), a, c, d}), F.neg(M({a, d, d})), M({b, b, c}), F.neg(M({b, c, c})),
          M({F.from_int(-2), b, c, d})})
        num = F.add(num, term);
    Fe dcd = M({c, d, F.add(c, d)});
    Fe dac = M({a, c, F.sub(a, c)});
    Fe s = F.div(num, dcd);
    Fe t = F.neg(F.div(M({a, b, F.add(a, b)}), dcd));
    Fe sp = F.div(num, dac);
    Fe tp = F.div(M({b, d, F.sub(b, d)}), dac);
    return {FstParams{s, t}, FstParams{sp, tp}};
}

void suite_eq_st(Checker& ck, const FieldCtx& F, u64 seed, u32 samples) {
    std::mt19937_64 rng(seed);
    std::string bad;
    u32 done = 0;
    auto admissible = [&](const PhiCoeffs& m) {
        if (F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)).v == 0) return false;
        if (F.mul(F.mul(m.a, m.c), F.sub(m.a, m.c)).v == 0) return false;
        if (F.mul(F.mul(m.c, m.d), F.add(m.c, m.d)).v == 0) return false;
        if (F.mul(F.mul(m.a, m.b), F.add(m.a, m.b)).v == 0) return false;
        if (F.mul(F.mul(m.b, m.d), F.sub(m.b, m.d)).v == 0) return false;
        auto [st, st2] = st_from_phi(F, m);
        return in_omega(F, st.s, st.t) && in_omega(F, st2.s, st2.t);
    };
    auto run_one = [&](const PhiCoeffs& m) {
        auto [st, st2] = st_from_phi(F, m);
        ++done;
        auto [g0, g1] = membership_g(F, st, m);
        if (g0.v != 0 || g1.v != 0) {
            bad = "membership system not satisfied by the solved (s,t)";
            return;
        }
        Moebius phi = moebius(F, m.a, m.b, m.c, m.d);
        auto img = fst_image(F, st, phi);
        if (!img || !(*img == st2)) bad = sp_str(F, st) + ": solved image mismatch";
    };
    // forward direction: phi outside the stabilizer determines (s,t), (s',t')
    if (F.q() <= 9) {
        // small fields: enumerate every admissible phi
        for (u32 a = 0; a < F.q() && bad.empty(); ++a)
            for (u32 b = 0; b < F.q() && bad.empty(); ++b)
                for (u32 c = 0; c < F.q() && bad.empty(); ++c)
                    for (u32 d = 0; d < F.q() && bad.empty(); ++d) {
                        PhiCoeffs m{Fe{a}, Fe{b}, Fe{c}, Fe{d}};
                        if (admissible(m)) run_one(m);
                    }
    } else {
        u32 guard = 0;
        while (done < samples && guard < samples * 2000 && bad.empty()) {
            ++guard;
            PhiCoeffs m{random_fe(F, rng), random_fe(F, rng), random_fe(F, rng),
                        random_fe(F, rng)};
            if (admissible(m)) run_one(m);
        }
    }
    ck.add("phi-to-parameters", bad.empty(),
           bad.empty() ? std::to_string(done) + " samples" : bad);

    // converse direction: membership holds iff g0 = g1 = 0
    bad.clear();
    auto pts = omega_points(F);
    for (u32 k = 0; k < samples && bad.empty(); ++k) {
        FstParams sp = pts[rng() % pts.size()];
        PhiCoeffs m{random_fe(F, rng), random_fe(F, rng), random_fe(F, rng), random_fe(F, rng)};
        if (F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)).v == 0) continue;
        auto [g0, g1] = membership_g(F, sp, m);
        auto img = fst_image(F, sp, moebius(F, m.a, m.b, m.c, m.d));
        if ((g0.v == 0 && g1.v == 0) != img.has_value())
            bad = sp_str(F, sp) + ": membership criterion mismatch";
    }
    ck.add("membership-iff-g-vanishes", bad.empty(), bad);
}

// -------------------- invariant-constancy --------------------

void suite_invariant_constancy(Checker& ck, const FieldCtx& F, Exec mode) {
    auto part = orbit_partition_fst(F, mode);
    std::string bad;
    std::map<u32, u32> theta_to_orbit_a;  // injectivity across III-a orbits
    std::map<u32, u32> mu2_to_orbit_b;
    for (u32 o = 0; o < part.orbit_count && bad.empty(); ++o) {
        std::set<u32> thetas, subs, mu2s, lambdas;
        for (u32 idx : part.members[o]) {
            FstParams sp = part.points[idx];
            thetas.insert(theta(F, sp).v);
            Subclass sub = subclass(F, sp);
            subs.insert(u32(sub));
            if (sub == Subclass::IIIb) {
                mu2s.insert(mu_squared(F, sp).v);
                lambdas.insert(lambda_cr(F, sp).v);
            }
        }
        if (thetas.size() != 1) { bad = "theta not constant on orbit " + std::to_string(o); break; }
        if (subs.size() != 1) { bad = "subclass not constant on orbit " + std::to_string(o); break; }
        if (mu2s.size() > 1) { bad = "mu^2 not constant on orbit " + std::to_string(o); break; }
        if (lambdas.size() > 1) { bad = "lambda not constant on orbit " + std::to_string(o); break; }
        Subclass sub = Subclass(*subs.begin());
        if (sub == Subclass::IIIa) {
            auto [it, fresh] = theta_to_orbit_a.emplace(*thetas.begin(), o);
            if (!fresh) bad = "theta repeats across III-a orbits";
        }
        if (sub == Subclass::IIIb) {
            auto [it, fresh] = mu2_to_orbit_b.emplace(*mu2s.begin(), o);
            if (!fresh) bad = "mu^2 repeats across III-b orbits";
        }
    }
    ck.add("orbit-invariants", bad.empty(), bad);
}

// -------------------- theta-reduction --------------------

void suite_theta_reduction(Checker& ck, const FieldCtx& F, u64 seed, u32 samples) {
    if (F.p() == 2) throw std::invalid_argument("theta-reduction: odd characteristic only");
    std::vector<FstParams> eligible;
    Fe m3 = F.from_int(-3);
    for (const auto& sp : omega_points(F))
        if (sp.s.v != 0 && !(sp.s == m3 && sp.t == F.one()) && !class2_witness(F, sp))
            eligible.push_back(sp);
    std::mt19937_64 rng(seed);
    std::string bad;
    u32 done = 0;
    for (u32 k = 0; k < samples && k < 4 * u32(eligible.size()) && bad.empty(); ++k) {
        if (eligible.empty()) break;
        FstParams sp = eligible[rng() % eligible.size()];
        ++done;
        // find a ramification point of index 2 and run the reduction chain
        // over the extension holding it
        Poly G = g_quartic(F, sp);
        const FieldCtx* K = nullptr;
        const Embedding* E = nullptr;
        Fe a{};
        bool found = false;
        for (const auto& fp : factor(F, G)) {
            u32 d = u32(fp.f.deg());
            if (d == 1) {
                Fe r = F.neg(fp.f.c[0]);
                if (ram_index_at(F, fst(F, sp), ProjPoint::finite(r)) == 2) {
                    K = &F;
                    a = r;
                    found = true;
                    break;
                }
            } else {
                const Embedding& ext = extension(F, d);
                auto roots = roots_in_base(ext.ext(), ext.embed_poly(fp.f));
                RatFun femb = rf_embed(ext, fst(F, sp));
                if (ram_index_at(ext.ext(), femb, ProjPoint::finite(roots.front())) == 2) {
                    K = &ext.ext();
                    E = &ext;
                    a = roots.front();
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            bad = sp_str(F, sp) + ": no index-2 ramification point";
            break;
        }
        auto emb = [&](Fe x) { return E ? E->embed(x) : x; };
        const FieldCtx& L = *K;
        RatFun f = E ? rf_embed(*E, fst(F, sp)) : fst(F, sp);
        ProjPoint pa = ProjPoint::finite(a);
        ProjPoint val = rf_eval(L, f, pa);
        if (val.inf) { bad = sp_str(F, sp) + ": branch value at infinity"; break; }
        Fe alpha = val.x;
        Fe b = L.sub(alpha, L.mul(L.from_int(2), a));
        // chain: subtract alpha; X -> X + a; X -> 1/X twice (pre and post);
        // X -> X - 1/(a-b); X -> (c2/c3) X
        RatFun g1 = post_compose(L, moebius(L, L.one(), L.neg(alpha), L.zero(), L.one()), f);
        RatFun g2 = pre_compose(L, g1, moebius(L, L.one(), a, L.zero(), L.one()));
        Moebius invx = moebius(L, L.zero(), L.one(), L.one(), L.zero());
        RatFun g3 = post_compose(L, invx, pre_compose(L, g2, invx));
        Fe amb = L.sub(a, b);
        RatFun g4 =
            pre_compose(L, g3, moebius(L, L.one(), L.neg(L.inv(amb)), L.zero(), L.one()));
        // the published chain is up to post-composition: kill the linear
        // numerator term (den is X, one subtraction) and work with monic
        // numerators to quotient out post-scalings
        auto monicize = [&](const RatFun& h) {
            return post_compose(L, moebius(L, L.one(), L.zero(), L.zero(), h.num.lc()), h);
        };
        g4 = monicize(post_compose(
            L, moebius(L, L.one(), L.neg(g4.num.coeff(1)), L.zero(), L.one()), g4));
        Fe c0 = L.neg(L.mul(b, L.sub(b, L.one())));
        Fe c2 = L.neg(L.mul(L.mul(amb, amb), emb(sp.s)));
        Fe c3 = L.mul(L.mul(L.sub(a, L.one()), a), L.pow(amb, 3));
        if (g4 != rf_make(L, poly_from({L.div(c0, c3), L.zero(), L.div(c2, c3), L.one()}),
                          poly_x(L))) {
            bad = sp_str(F, sp) + ": c-coefficient form mismatch";
            break;
        }
        RatFun g5 = monicize(
            pre_compose(L, g4, moebius(L, L.div(c2, c3), L.zero(), L.zero(), L.one())));
        Fe tprime = L.div(L.mul(c0, L.mul(c3, c3)), L.pow(c2, 3));
        Fe opt = F.add(F.one(), F.add(sp.s, sp.t));
        Fe expected = emb(F.div(F.mul(sp.t, opt), F.pow(sp.s, 3)));
        Poly want_num = poly_from({tprime, L.zero(), L.one(), L.one()});
        if (tprime != expected || g5.num != want_num || g5.den != poly_x(L)) {
            bad = sp_str(F, sp) + ": reduction chain did not land on the canonical form";
            break;
        }
    }
    ck.add("reduction-chain", bad.empty() && (eligible.empty() || done > 0),
           bad.empty() ? std::to_string(done) + " samples" : bad);
}

// -------------------- ramtable --------------------

void suite_ramtable(Checker& ck, const FieldCtx& F, Exec mode) {
    auto pts = omega_points(F);
    std::vector<u8> no_index2(pts.size(), 0);
    std::string bad = scan_for_failure(mode, i64(pts.size()), [&](i64 i) -> std::string {
        const FstParams sp = pts[i];
        RatFun f = fst(F, sp);
        auto rps = ram_points(F, f);
        RamType rt;
        bool has21 = false, has2 = false;
        for (const auto& rp : rps) {
            for (u32 k = 0; k < rp.degree; ++k) rt.tags.emplace_back(rp.index, rp.degree);
            if (rp.index == 2 && rp.degree == 1) has21 = true;
            if (rp.index == 2) has2 = true;
            if (rp.at_infinity) return sp_str(F, sp) + ": infinity ramified";
            if (rp.index % F.p() != 0 && rp.wronskian_mult != rp.index - 1)
                return sp_str(F, sp) + ": tame multiplicity rule fails";
            if (rp.index % F.p() == 0 && rp.wronskian_mult < 2)
                return sp_str(F, sp) + ": wild multiplicity rule fails";
        }
        rt = make_ram_type(std::move(rt.tags));
        if (!validate_ram_type(F.p(), rt))
            return sp_str(F, sp) + ": type " + ram_type_string(rt) + " not admissible";
        bool is2 = class2_witness(F, sp).has_value();
        if (has21 != is2)
            return sp_str(F, sp) + ": type-2/1 point " + (has21 ? "present" : "absent") +
                   " but class is " + (is2 ? "II" : "III");
        no_index2[i] = has2 ? 0 : 1;
        return "";
    });
    ck.add("types-and-2/1-lemma", bad.empty(), bad);
    std::vector<FstParams> free2;
    for (size_t i = 0; i < pts.size(); ++i)
        if (no_index2[i]) free2.push_back(pts[i]);
    FstParams special{F.from_int(-3), F.one()};
    bool uniq = free2.size() == 1 && free2[0] == special;
    std::string note = "index-2-free points:";
    for (auto& sp : free2) note += " " + sp_str(F, sp);
    ck.add("index2-free-uniqueness", uniq, note);
}

// -------------------- identities --------------------

void suite_identities(Checker& ck, const FieldCtx& F, u64 seed, u32 samples, Exec mode) {
    std::mt19937_64 rng(seed);
    const bool odd = F.p() != 2;
    auto pts = omega_points(F);

    if (odd) {
        std::string bad = scan_for_failure(mode, i64(pts.size()), [&](i64 i) -> std::string {
            return disc_identity_check(F, pts[i]) ? "" : sp_str(F, pts[i]);
        });
        ck.add("discriminant-identity", bad.empty(), bad);
    }

    {
        std::string bad;
        for (u32 k = 0; k < samples && bad.empty(); ++k) {
            auto rand_monic = [&](u32 d) {
                std::vector<Fe> c(d + 1, F.one());
                for (u32 i = 0; i < d; ++i) c[i] = random_fe(F, rng);
                return Poly{std::move(c)};
            };
            Poly f = rand_monic(1 + rng() % 4), g = rand_monic(1 + rng() % 4);
            Fe res = resultant(F, f, g);
            Fe lhs = discriminant(F, pmul(F, f, g));
            Fe rhs = F.mul(F.mul(discriminant(F, f), discriminant(F, g)), F.mul(res, res));
            if (lhs != rhs) bad = "D(fg) law fails for " + poly_string(F, f) + " ; " +
                                  poly_string(F, g);
        }
        ck.add("product-discriminant-law", bad.empty(), bad);
    }

    {
        // cross-ratio orbit under the S4 action
        std::string bad;
        auto check_quad = [&](ProjPoint x1, ProjPoint x2, ProjPoint x3, ProjPoint x4) {
            Fe C = cross_ratio(F, x1, x2, x3, x4);
            Fe one = F.one();
            struct Case {
                Fe want;
                std::array<ProjPoint, 4> pts;
            };
            Case cases[] = {
                {F.sub(one, C), {x1, x3, x2, x4}},
                {F.inv(C), {x2, x1, x3, x4}},
                {F.sub(one, F.inv(C)), {x2, x3, x1, x4}},
                {F.inv(F.sub(one, C)), {x3, x1, x2, x4}},
                {F.div(C, F.sub(C, one)), {x3, x2, x1, x4}},
            };
            for (auto& c : cases)
                if (cross_ratio(F, c.pts[0], c.pts[1], c.pts[2], c.pts[3]) != c.want)
                    return false;
            return true;
        };
        std::vector<ProjPoint> all;
        for (u32 v = 0; v < F.q(); ++v) all.push_back(ProjPoint::finite(Fe{v}));
        all.push_back(ProjPoint::infinity());
        if (F.q() <= 7) {
            for (size_t i1 = 0; i1 < all.size() && bad.empty(); ++i1)
                for (size_t i2 = 0; i2 < all.size() && bad.empty(); ++i2)
                    for (size_t i3 = 0; i3 < all.size() && bad.empty(); ++i3)
                        for (size_t i4 = 0; i4 < all.size() && bad.empty(); ++i4) {
                            if (i1 == i2 || i1 == i3 || i1 == i4 || i2 == i3 || i2 == i4 ||
                                i3 == i4)
                                continue;
                            if (!check_quad(all[i1], all[i2], all[i3], all[i4]))
                                bad = "orbit relations fail";
                        }
        } else {
            for (u32 k = 0; k < samples && bad.empty(); ++k) {
                std::vector<size_t> idx;
                while (idx.size() < 4) {
                    size_t c = rng() % all.size();
                    if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
                }
                if (!check_quad(all[idx[0]], all[idx[1]], all[idx[2]], all[idx[3]]))
                    bad = "orbit relations fail";
            }
        }
        ck.add("cross-ratio-orbit", bad.empty(), bad);
    }

    {
        std::string bad;
        for (u32 k = 0; k < samples && bad.empty(); ++k) {
            Fe c = random_fe(F, rng);
            if (c.v == 0) continue;
            Fe x = random_fe(F, rng), y = random_fe(F, rng);
            if (!appendix_b_identity(F, c, x, y))
                bad = "K factorization fails at c=" + elem_string(F, c) + ", x=" +
                      elem_string(F, x) + ", y=" + elem_string(F, y);
        }
        ck.add("quartic-sextic-factorization", bad.empty(), bad);
    }

    if (odd) {
        // theta = 27 fiber vs its parametrization
        std::set<std::pair<u32, u32>> fiber, param;
        Fe t27 = F.from_int(27);
        for (const auto& sp : pts)
            if (theta(F, sp) == t27) fiber.insert({sp.s.v, sp.t.v});
        for (u32 v = 0; v < F.q(); ++v) {
            Fe u{v};
            if (u == F.one() || u == F.from_int(-1)) continue;
            FstParams sp = theta27_params(F, u);
            param.insert({sp.s.v, sp.t.v});
        }
        param.insert({F.from_int(-3).v, F.one().v});
        ck.add("theta27-fiber", fiber == param,
               "fiber " + std::to_string(fiber.size()) + ", parametrized " +
                   std::to_string(param.size()));
    }

    if (odd) {
        // closed forms on Class III-b
        std::string bad = scan_for_failure(mode, i64(pts.size()), [&](i64 i) -> std::string {
            const FstParams sp = pts[i];
            if (class2_witness(F, sp) || subclass(F, sp) != Subclass::IIIb) return "";
            Fe m = mu_squared(F, sp);
            if (lambda_cr(F, sp) != lambda_from_mu2(F, m))
                return sp_str(F, sp) + ": lambda closed form";
            if (theta(F, sp) != theta_from_mu2(F, m))
                return sp_str(F, sp) + ": theta closed form";
            return "";
        });
        ck.add("mu2-closed-forms", bad.empty(), bad);
    }

    if (odd) {
        // exploratory tabulation: |V(H_b)| vs |V(F_b)| for the scan-least
        // nonsquare a (informational, not part of the gate)
        Fe a{0};
        for (u32 v = 1; v < F.q(); ++v)
            if (!F.is_square(Fe{v})) { a = Fe{v}; break; }
        Fe b = F.add(F.from_int(27), a);
        u64 vfb = 0, vhb = 0;
        for (u32 sv = 0; sv < F.q(); ++sv)
            for (u32 tv = 0; tv < F.q(); ++tv) {
                Fe s{sv}, t{tv};
                Fe fb = F.sub(F.pow(s, 3), F.mul(b, F.mul(t, F.add(F.one(), F.add(s, t)))));
                if (fb.v == 0) ++vfb;
                Fe x{sv}, y{tv};
                Fe n = F.zero();
                struct T { i64 k; u32 ex, ey; };
                static const T nt[] = {{2, 2, 0}, {-1, 3, 0}, {2, 1, 1}, {-5, 2, 1}, {2, 3, 1},
                                       {2, 0, 2}, {-5, 1, 2}, {2, 2, 2}, {-1, 0, 3}, {2, 1, 3}};
                for (auto& tt : nt)
                    n = F.add(n, F.mul(F.from_int(tt.k), F.mul(F.pow(x, tt.ex), F.pow(y, tt.ey))));
                Fe w = F.mul(F.mul(F.sub(x, F.one()), F.sub(x, F.one())), F.mul(x, x));
                w = F.mul(w, F.mul(F.mul(F.sub(y, F.one()), F.sub(y, F.one())), F.mul(y, y)));
                w = F.mul(w, F.sub(F.add(x, y), F.from_int(2)));
                w = F.mul(w, F.add(x, y));
                w = F.mul(w, F.sub(F.mul(F.from_int(2), F.mul(x, y)), F.add(x, y)));
                Fe hb = F.add(F.neg(F.mul(b, w)), F.pow(n, 3));
                if (hb.v == 0) ++vhb;
            }
        ck.add("vhb-vfb-tabulation", true,
               "|V(H_b)|=" + std::to_string(vhb) + " |V(F_b)|=" + std::to_string(vfb) +
                   (vhb == vfb + 1 ? " (equals |V(F_b)|+1)" : " (differs from |V(F_b)|+1)"));
    }
}

// -------------------- theta-sets --------------------

void suite_theta_sets(Checker& ck, const FieldCtx& F, Exec mode) {
    if (F.p() == 2) throw std::invalid_argument("theta-sets: odd characteristic only");
    const u32 q = F.q();
    auto pts = omega_points(F);
    struct Entry {
        u8 cls = 0;  // 0 = II, 1..4 = IIIa..IIId
        u32 th = 0, mu2 = 0;
        bool has_mu2 = false;
    };
    std::vector<Entry> entries(pts.size());
    for_each_index(mode, i64(pts.size()), [&](i64 i) {
        Entry& e = entries[i];
        if (class2_witness(F, pts[i])) return;
        Subclass sub = subclass(F, pts[i]);
        e.cls = sub == Subclass::IIIa ? 1 : sub == Subclass::IIIb ? 2
                : sub == Subclass::IIIc ? 3 : 4;
        e.th = theta(F, pts[i]).v;
        if (sub == Subclass::IIIb) {
            e.mu2 = mu_squared(F, pts[i]).v;
            e.has_mu2 = true;
        }
    });
    std::set<u32> theta_a, theta_b, theta_c, mu2s;
    for (const auto& e : entries) {
        if (e.cls == 1) theta_a.insert(e.th);
        if (e.cls == 2) theta_b.insert(e.th);
        if (e.cls == 3) theta_c.insert(e.th);
        if (e.has_mu2) mu2s.insert(e.mu2);
    }
    std::set<u32> want_a;
    for (u32 v = 1; v < q; ++v)
        if (!F.is_square(Fe{v})) want_a.insert(F.add(F.from_int(27), Fe{v}).v);
    ck.add("theta-a-set", theta_a == want_a,
           "got " + std::to_string(theta_a.size()) + ", want " + std::to_string(want_a.size()));

    std::set<u32> want_b;
    for (u32 v = 0; v < q; ++v) {
        Fe mu{v};
        if (mu.v == 0 || mu == F.one() || mu == F.from_int(-1) || mu == F.from_int(3) ||
            mu == F.from_int(-3))
            continue;
        Fe m2 = F.mul(mu, mu);
        Fe av = F.div(F.mul(mu, F.sub(m2, F.from_int(9))), F.sub(m2, F.one()));
        want_b.insert(F.add(F.from_int(27), F.mul(av, av)).v);
    }
    ck.add("theta-b-set", theta_b == want_b,
           "got " + std::to_string(theta_b.size()) + ", want " + std::to_string(want_b.size()));
    u64 want_size = F.p() == 3 ? (q - 3) / 6 : (q - 1) / 6;
    ck.add("theta-b-size", theta_b.size() == want_size,
           "got " + std::to_string(theta_b.size()) + ", want " + std::to_string(want_size));

    bool c_ok;
    if (F.p() == 3)
        c_ok = theta_c.empty();
    else if (q % 6 == 1)
        c_ok = theta_c.empty();
    else
        c_ok = theta_c == std::set<u32>{F.from_int(27).v};
    ck.add("theta-c-set", c_ok, "size " + std::to_string(theta_c.size()));

    u64 want_mu2 = F.p() == 3 ? (q - 3) / 2 : (q - 5) / 2;
    ck.add("mu2-value-count", mu2s.size() == want_mu2,
           "got " + std::to_string(mu2s.size()) + ", want " + std::to_string(want_mu2));
}

// -------------------- evenchar --------------------

void suite_evenchar(Checker& ck, const FieldCtx& F, Exec mode) {
    if (F.p() != 2) throw std::invalid_argument("evenchar: characteristic 2 only");
    const u32 q = F.q();
    auto pts = omega_points(F);
    std::string bad = scan_for_failure(mode, i64(pts.size()), [&](i64 i) -> std::string {
        const FstParams sp = pts[i];
        bool doubled = profile_has_double(F, fst(F, sp));
        bool predicted;
        if (sp.s.v == 0) {
            predicted = true;
        } else {
            Fe arg = F.div(sp.t, F.mul(sp.s, sp.s));
            predicted = F.trace_q_over_2(arg) == 0 && !(sp.s == F.one() && sp.t == F.one());
        }
        if (doubled != predicted) return sp_str(F, sp) + ": trace criterion mismatch";
        return "";
    });
    ck.add("trace-criterion", bad.empty(), bad);

    auto part = orbit_partition_fst(F, mode);
    std::set<u32> thetas;
    bool const_ok = true;
    for (u32 o = 0; o < part.orbit_count; ++o) {
        std::set<u32> th;
        for (u32 idx : part.members[o]) th.insert(theta(F, part.points[idx]).v);
        if (th.size() != 1) const_ok = false;
        thetas.insert(*th.begin());
    }
    std::set<u32> fqstar;
    for (u32 v = 1; v < q; ++v) fqstar.insert(v);
    ck.add("theta-orbit-bijection",
           const_ok && part.orbit_count == q - 1 && thetas == fqstar,
           "orbits " + std::to_string(part.orbit_count) + ", theta values " +
               std::to_string(thetas.size()));

    // canonical-form correspondences (the even-characteristic comparison table)
    const bool small = q <= 8;
    Fe sigma{0};
    for (u32 v = 1; v < q; ++v)
        if (F.trace_q_over_2(Fe{v}) == 1) { sigma = Fe{v}; break; }
    auto reps = representatives(F, mode);
    std::map<u32, const Representative*> theta_rep;
    const Representative* iiA1 = nullptr;
    std::map<u32, const Representative*> iiB;
    for (const auto& r : reps) {
        if (r.label.kind == ClassLabel::Kind::IIIeven) theta_rep[r.label.value.v] = &r;
        if (r.label.kind == ClassLabel::Kind::IIB) iiB[r.label.value.v] = &r;
        if (r.label.kind == ClassLabel::Kind::IIA && r.label.value == F.one()) iiA1 = &r;
    }
    (void)iiA1;
    std::string tbad;

    const bool square = F.n() % 2 == 0;
    RatFun x3 = rf_make(F, poly_from_ints(F, {0, 0, 0, 1}), poly_from_ints(F, {1}));
    ClassLabel lx3 = classify(F, x3);
    if (square) {
        if (!(lx3.kind == ClassLabel::Kind::IIIeven && lx3.value == F.one()))
            tbad = "X^3 should be Class III with theta = 1 for square q";
    } else if (lx3.kind != ClassLabel::Kind::Isep) {
        tbad = "X^3 should be Class I for nonsquare q";
    }
    if (tbad.empty() && ram_type(F, x3) != make_ram_type({{3, 1}, {3, 1}}))
        tbad = "X^3 ramification type";

    if (tbad.empty()) {
        RatFun row2 = rf_make(
            F, poly_from({sigma, sigma, F.zero(), F.one()}),
            poly_from({F.add(sigma, F.one()), F.one(), F.one()}));
        ClassLabel l2 = classify(F, row2);
        if (square) {
            if (l2.kind != ClassLabel::Kind::Isep) tbad = "row (ii) should be Class I";
        } else if (!(l2.kind == ClassLabel::Kind::IIIeven && l2.value == F.one())) {
            tbad = "row (ii) should be Class III with theta = 1";
        }
        if (tbad.empty() && ram_type(F, row2) != make_ram_type({{3, 2}, {3, 2}}))
            tbad = "row (ii) ramification type";
    }

    if (tbad.empty()) {
        RatFun row3 = rf_make(F, poly_from_ints(F, {0, 0, 1, 1}), poly_from_ints(F, {1}));
        ClassLabel l3 = classify(F, row3);
        if (!(l3.kind == ClassLabel::Kind::IIB && l3.value == F.one()))
            tbad = "X^3+X^2 should map to the s!=0 canonical form with t = 1";
    }

    for (u32 cv = 2; cv < q && tbad.empty(); ++cv) {  // c outside F_2
        Fe c{cv};
        RatFun f = rf_make(F, poly_from({c, F.zero(), F.zero(), F.one()}),
                           poly_from({c, F.one()}));
        // substituting X -> X+c gives (X^3+cX^2+c^2X+c^3+c)/X, so the
        // canonical parameter is (c^3+c)/c^3 = (1+1/c)^2
        Fe ratio = F.div(F.add(F.one(), c), c);
        Fe want_t = F.mul(ratio, ratio);
        ClassLabel l = classify(F, f);
        if (!(l.kind == ClassLabel::Kind::IIB && l.value == want_t)) {
            tbad = "(X^3+c)/(X+c) mapping fails at c=" + elem_string(F, c);
            break;
        }
        if (ram_type(F, f) != make_ram_type({{2, 1}, {2, 1}})) {
            tbad = "(X^3+c)/(X+c) ramification type at c=" + elem_string(F, c);
            break;
        }
        if (small && !brute_equiv(F, f, iiB.at(want_t.v)->fn, mode))
            tbad = "(X^3+c)/(X+c) not brute-equivalent to its canonical form";
    }

    for (u32 bv = 2; bv < q && tbad.empty(); ++bv) {  // b outside F_2
        Fe b{bv};
        Fe b1 = F.add(b, F.one());
        RatFun f = rf_make(
            F, poly_from({F.mul(b1, sigma), sigma, b, F.one()}),
            poly_from({F.add(F.add(b, F.one()), sigma), F.one(), F.one()}));
        Fe want_theta = F.inv(F.pow(b1, 4));
        ClassLabel l = classify(F, f);
        if (!(l.kind == ClassLabel::Kind::IIIeven && l.value == want_theta)) {
            tbad = "row (vi) theta mapping fails at b=" + elem_string(F, b);
            break;
        }
        if (ram_type(F, f) != make_ram_type({{2, 2}, {2, 2}})) {
            tbad = "row (vi) ramification type at b=" + elem_string(F, b);
            break;
        }
        if (small && !brute_equiv(F, f, theta_rep.at(want_theta.v)->fn, mode))
            tbad = "row (vi) not brute-equivalent to its representative";
    }
    ck.add("comparison-table", tbad.empty(), tbad);
}

// -------------------- lambda-table --------------------

void suite_lambda_table(Checker& ck, const FieldCtx& F, Exec mode) {
    if (F.p() == 2) throw std::invalid_argument("lambda-table: odd characteristic only");
    const u32 q = F.q();
    auto part = orbit_partition_fst(F, mode);
    struct OrbRec {
        Fe th, mu2, lam;
    };
    std::vector<OrbRec> iiib;
    for (u32 o = 0; o < part.orbit_count; ++o) {
        FstParams sp = part.points[part.members[o][0]];
        if (class2_witness(F, sp) || subclass(F, sp) != Subclass::IIIb) continue;
        iiib.push_back({theta(F, sp), mu_squared(F, sp), lambda_cr(F, sp)});
    }
    std::string bad;
    bool r3 = (q % 12 == 1 || q % 12 == 11);  // sqrt(3) exists
    Fe f54 = F.from_int(54);
    Fe f52 = F.div(F.from_int(5), F.from_int(2));
    for (const auto& r : iiib) {
        if (r.th.v == 0) {
            if (q % 6 != 1 || r.lam != F.one() || r.mu2 != F.from_int(-3)) {
                bad = "theta = 0 row violated";
                break;
            }
        } else if (r.th == f54 && F.from_int(54).v != 0) {
            if (!r3) { bad = "theta = 54 orbit without sqrt(3) in F_q"; break; }
            Fe rt3 = *F.sqrt(F.from_int(3));
            Fe m1 = F.add(F.from_int(21), F.mul(F.from_int(12), rt3));
            Fe m2 = F.sub(F.from_int(21), F.mul(F.from_int(12), rt3));
            if (r.lam == F.from_int(-2)) {
                if (r.mu2 != F.from_int(3)) { bad = "lambda = -2 without mu^2 = 3"; break; }
            } else if (r.lam == f52) {
                if (!(r.mu2 == m1 || r.mu2 == m2)) {
                    bad = "lambda = 5/2 with unexpected mu^2";
                    break;
                }
            } else {
                bad = "theta = 54 with lambda outside {-2, 5/2}";
                break;
            }
        }
        if (r.lam != lambda_from_mu2(F, r.mu2)) { bad = "lambda closed form"; break; }
    }
    ck.add("special-rows", bad.empty(), bad);

    // three lambda values per generic theta; exactly one collision of
    // (theta, lambda) when sqrt(3) exists
    std::map<u32, std::set<u32>> lam_by_theta, mu_by_theta;
    std::set<std::pair<u32, u32>> pairs;
    for (const auto& r : iiib) {
        lam_by_theta[r.th.v].insert(r.lam.v);
        mu_by_theta[r.th.v].insert(r.mu2.v);
        pairs.insert({r.th.v, r.lam.v});
    }
    std::string gbad;
    for (auto& [th, lams] : lam_by_theta) {
        bool special = (th == 0) || (Fe{th} == f54 && F.from_int(54).v != 0);
        if (!special && lams.size() != 3) {
            gbad = "theta with " + std::to_string(lams.size()) + " lambda values";
            break;
        }
        if (!special && mu_by_theta[th].size() != 3) {
            gbad = "theta with " + std::to_string(mu_by_theta[th].size()) + " mu^2 values";
            break;
        }
    }
    u64 expected_pairs = iiib.size() - (r3 && !iiib.empty() ? 1 : 0);
    if (gbad.empty() && pairs.size() != expected_pairs)
        gbad = "(theta, lambda) takes " + std::to_string(pairs.size()) + " values, want " +
               std::to_string(expected_pairs);
    ck.add("generic-rows", gbad.empty(), gbad);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "counts",         "theorem2",  "s3table",   "eq-st",
        "invariant-constancy", "theta-reduction", "ramtable", "identities",
        "theta-sets",     "evenchar",  "lambda-table"};
    return names;
}

SuiteReport verify_suite(const FieldCtx& F, const std::string& suite, u64 seed, u32 samples,
                         Exec mode) {
    SuiteReport rep;
    rep.suite = suite;
    rep.field = F.name();
    Checker ck{F, {}};
    if (suite == "counts")
        suite_counts(ck, F, mode);
    else if (suite == "theorem2")
        suite_theorem2(ck, F, mode);
    else if (suite == "s3table")
        suite_s3table(ck, F, mode);
    else if (suite == "eq-st")
        suite_eq_st(ck, F, seed, samples);
    else if (suite == "invariant-constancy")
        suite_invariant_constancy(ck, F, mode);
    else if (suite == "theta-reduction")
        suite_theta_reduction(ck, F, seed, samples);
    else if (suite == "ramtable")
        suite_ramtable(ck, F, mode);
    else if (suite == "identities")
        suite_identities(ck, F, seed, samples, mode);
    else if (suite == "theta-sets")
        suite_theta_sets(ck, F, mode);
    else if (suite == "evenchar")
        suite_evenchar(ck, F, mode);
    else if (suite == "lambda-table")
        suite_lambda_table(ck, F, mode);
    else
        throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    rep.checks = std::move(ck.checks);
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    return rep;
}

}  // namespace rf3
