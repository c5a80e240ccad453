#include <random>

#include "doctest.h"
#include "rf3/invariants.hpp"
#include "rf3/poly.hpp"
#include "test_util.hpp"

using namespace rf3;
using test::field_q;

TEST_CASE("gcd") {
    FieldCtx f5(5, 1);
    CHECK(pgcd(f5, poly_from_ints(f5, {-1, 0, 1}), poly_from_ints(f5, {-1, 1})) ==
          poly_from_ints(f5, {-1, 1}));
    Poly f = poly_from_ints(f5, {2, 0, 4});
    CHECK(pgcd(f5, f, Poly{}) == monic(f5, f));
    FieldCtx f7(7, 1);
    CHECK(pgcd(f7, poly_from_ints(f7, {1, 0, 0, 1}), poly_from_ints(f7, {1, 1})) ==
          poly_from_ints(f7, {1, 1}));
    CHECK_THROWS(pgcd(f5, Poly{}, Poly{}));
}

TEST_CASE("resultant") {
    FieldCtx f7(7, 1);
    for (u32 a = 0; a < 7; ++a)
        for (u32 b = 0; b < 7; ++b) {
            Poly fa = poly_from({f7.neg(Fe{a}), f7.one()});
            Poly fb = poly_from({f7.neg(Fe{b}), f7.one()});
            CHECK(resultant(f7, fa, fb) == f7.sub(Fe{b}, Fe{a}));
        }
    FieldCtx f5(5, 1);
    CHECK(resultant(f5, poly_from_ints(f5, {1, 0, 1}), poly_x(f5)) == f5.one());

    // Res(X^3 - u^3, X^2 + 2(u-1)X - u) = 9(u-1)u^3(1-u+u^2)
    for (u32 q : {7u, 11u}) {
        FieldCtx F = field_q(q);
        for (u32 uv = 0; uv < q; ++uv) {
            Fe u{uv};
            Poly f = poly_from({F.neg(F.pow(u, 3)), F.zero(), F.zero(), F.one()});
            Poly g = poly_from({F.neg(u), F.mul(F.from_int(2), F.sub(u, F.one())), F.one()});
            Fe want = F.mul(F.from_int(9),
                            F.mul(F.sub(u, F.one()),
                                  F.mul(F.pow(u, 3),
                                        F.add(F.sub(F.one(), u), F.mul(u, u)))));
            CHECK(resultant(F, f, g) == want);
        }
    }
}

TEST_CASE("discriminant") {
    std::mt19937_64 rng(7);
    for (u32 q : {7u, 9u}) {
        FieldCtx F = field_q(q);
        for (int k = 0; k < 50; ++k) {
            Fe b = test::rand_fe(F, rng), c = test::rand_fe(F, rng);
            Poly f = poly_from({c, b, F.one()});
            CHECK(discriminant(F, f) ==
                  F.sub(F.mul(b, b), F.mul(F.from_int(4), c)));
        }
        // D(X^3 + pX + q) = -4p^3 - 27q^2
        for (int k = 0; k < 50; ++k) {
            Fe p = test::rand_fe(F, rng), q2 = test::rand_fe(F, rng);
            Poly f = poly_from({q2, p, F.zero(), F.one()});
            Fe want = F.sub(F.mul(F.from_int(-4), F.pow(p, 3)),
                            F.mul(F.from_int(27), F.mul(q2, q2)));
            CHECK(discriminant(F, f) == want);
        }
    }
    FieldCtx f5(5, 1);
    CHECK(discriminant(f5, g_quartic(f5, {f5.from_int(-3), f5.one()})) == f5.zero());
    CHECK_THROWS(discriminant(f5, poly_from_ints(f5, {3})));

    // product law D(fg) = D(f) D(g) Res(f,g)^2
    std::mt19937_64 rng2(11);
    FieldCtx f7(7, 1);
    for (int k = 0; k < 200; ++k) {
        Poly f = monic(f7, test::rand_poly(f7, rng2, 3));
        Poly g = monic(f7, test::rand_poly(f7, rng2, 3));
        if (f.deg() < 1 || g.deg() < 1) continue;
        Fe res = resultant(f7, f, g);
        CHECK(discriminant(f7, pmul(f7, f, g)) ==
              f7.mul(f7.mul(discriminant(f7, f), discriminant(f7, g)), f7.mul(res, res)));
    }

    // D = 0 iff gcd(f, f') nonconstant or f' = 0
    for (u32 q : {5u, 9u}) {
        FieldCtx F = field_q(q);
        std::mt19937_64 rng3(13);
        for (int k = 0; k < 300; ++k) {
            Poly f = test::rand_poly(F, rng3, 4);
            if (f.deg() < 1) continue;
            Poly fp = pderiv(F, f);
            bool degenerate = fp.is_zero() || pgcd(F, f, fp).deg() > 0;
            CHECK((discriminant(F, f) == F.zero()) == degenerate);
        }
    }
}

TEST_CASE("factor examples") {
    FieldCtx f5(5, 1);
    auto fs = factor(f5, g_quartic(f5, {f5.from_int(-3), f5.one()}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].f == poly_from_ints(f5, {1, 4, 1}));
    CHECK(fs[0].mult == 2);

    auto x3 = factor(f5, poly_from_ints(f5, {0, 0, 0, 1}));
    REQUIRE(x3.size() == 1);
    CHECK(x3[0].f == poly_x(f5));
    CHECK(x3[0].mult == 3);

    auto g12 = factor(f5, g_quartic(f5, {f5.one(), f5.from_int(2)}));
    REQUIRE(g12.size() == 2);
    CHECK(g12[0].f == poly_from_ints(f5, {3, 1}));  // X - 2
    CHECK(g12[0].mult == 2);
    CHECK(g12[1].f == poly_from_ints(f5, {3, 2, 1}));  // X^2 + 2X + 3
    CHECK(g12[1].mult == 1);

    FieldCtx f3(3, 1);
    auto cube = factor(f3, poly_from_ints(f3, {-1, 0, 0, 1}));  // X^3 - 1 = (X-1)^3
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].f == poly_from_ints(f3, {2, 1}));
    CHECK(cube[0].mult == 3);
}

TEST_CASE("factor roundtrip and irreducibility") {
    std::mt19937_64 rng(17);
    for (u32 q : {5u, 8u, 9u, 27u}) {
        FieldCtx F = field_q(q);
        for (int k = 0; k < 60; ++k) {
            Poly f = test::rand_poly(F, rng, 4);
            if (f.deg() < 1) continue;
            auto fs = factor(F, f);
            Poly prod = poly_const(f.lc());
            for (const auto& [h, m] : fs) {
                CHECK(h.lc() == F.one());
                for (u32 i = 0; i < m; ++i) prod = pmul(F, prod, h);
                if (h.deg() <= 3) {
                    // small-degree irreducibility: no roots in the base field
                    // (and degree 1 is trivially irreducible)
                    if (h.deg() >= 2) CHECK(roots_in_base(F, h).empty());
                }
            }
            CHECK(prod == f);
            CHECK(std::is_sorted(fs.begin(), fs.end(), [](auto& a, auto& b) {
                return a.f.deg() < b.f.deg();
            }));
        }
    }
}

TEST_CASE("quartic factorization patterns vs discriminant") {
    for (u32 q : {5u, 7u}) {
        FieldCtx F = field_q(q);
        for (u32 c0 = 0; c0 < q; ++c0)
            for (u32 c1 = 0; c1 < q; ++c1)
                for (u32 c2 = 0; c2 < q; ++c2)
                    for (u32 c3 = 0; c3 < q; ++c3) {
                        Poly f = poly_from({Fe{c0}, Fe{c1}, Fe{c2}, Fe{c3}, F.one()});
                        Fe d = discriminant(F, f);
                        auto fs = factor(F, f);
                        std::vector<int> pat;
                        bool sep = true;
                        for (auto& [h, m] : fs) {
                            for (u32 i = 0; i < m; ++i) pat.push_back(h.deg());
                            if (m > 1) sep = false;
                        }
                        std::sort(pat.begin(), pat.end());
                        if (d.v == 0) {
                            CHECK(!sep);
                        } else if (!F.is_square(d)) {
                            bool want = pat == std::vector<int>{4} ||
                                        pat == std::vector<int>{1, 1, 2};
                            CHECK(want);
                        } else {
                            bool want = pat == std::vector<int>{2, 2} ||
                                        pat == std::vector<int>{1, 3} ||
                                        pat == std::vector<int>{1, 1, 1, 1};
                            CHECK(want);
                        }
                    }
    }
}

TEST_CASE("discriminant squareness of irreducibles") {
    FieldCtx F(5, 1);
    for (u32 deg = 2; deg <= 4; ++deg) {
        u32 count = 1;
        for (u32 i = 0; i < deg; ++i) count *= 5;
        for (u32 idx = 0; idx < count; ++idx) {
            std::vector<Fe> c(deg + 1, F.one());
            u32 v = idx;
            for (u32 i = 0; i < deg; ++i) {
                c[i] = Fe{v % 5};
                v /= 5;
            }
            Poly f{c};
            if (!is_irreducible_poly(F, f)) continue;
            Fe d = discriminant(F, f);
            REQUIRE(d.v != 0);
            CHECK(F.is_square(d) == (deg % 2 == 1));
        }
    }
}

TEST_CASE("roots in extensions") {
    FieldCtx f5(5, 1);
    auto r1 = roots_in_extension(f5, poly_from_ints(f5, {1, 0, 1}), 1);
    CHECK(r1.roots == std::vector<Fe>{Fe{2}, Fe{3}});

    auto r2 = roots_in_extension(f5, poly_from_ints(f5, {3, 2, 1}), 2);
    REQUIRE(r2.roots.size() == 2);
    const FieldCtx& K = *r2.field;
    CHECK(K.q() == 25);
    CHECK(K.pow(r2.roots[0], 5) == r2.roots[1]);  // conjugate pair

    auto r3 = roots_in_extension(f5, poly_from_ints(f5, {-3, 1}), 1);
    CHECK(r3.roots == std::vector<Fe>{Fe{3}});

    CHECK_THROWS(roots_in_extension(f5, poly_from_ints(f5, {1}), 1));
    CHECK_THROWS(roots_in_extension(f5, poly_x(f5), 5));
}

TEST_CASE("embedding is a field homomorphism") {
    for (u32 q : {5u, 9u}) {
        FieldCtx F = field_q(q);
        const Embedding& E = extension(F, 2);
        const FieldCtx& K = E.ext();
        for (u32 a = 0; a < q; ++a)
            for (u32 b = 0; b < q; ++b) {
                CHECK(E.embed(F.add(Fe{a}, Fe{b})) == K.add(E.embed(Fe{a}), E.embed(Fe{b})));
                CHECK(E.embed(F.mul(Fe{a}, Fe{b})) == K.mul(E.embed(Fe{a}), E.embed(Fe{b})));
            }
        CHECK(E.embed(F.one()) == K.one());
        for (u32 a = 0; a < q; ++a) {
            auto back = E.retract(E.embed(Fe{a}));
            REQUIRE(back.has_value());
            CHECK(*back == Fe{a});
        }
    }
}
