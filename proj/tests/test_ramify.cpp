#include <random>

#include "doctest.h"
#include "rf3/invariants.hpp"
#include "rf3/ramify.hpp"
#include "test_util.hpp"

using namespace rf3;
using test::field_q;

TEST_CASE("wronskian") {
    FieldCtx f7(7, 1);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 40; ++k) {
        FstParams sp{test::rand_fe(f7, rng), test::rand_fe(f7, rng)};
        if (!in_omega(f7, sp.s, sp.t)) continue;
        CHECK(wronskian(f7, fst(f7, sp)) == g_quartic(f7, sp));
    }
    FieldCtx f5(5, 1);
    RatFun x3_5 = rf_make(f5, poly_from_ints(f5, {0, 0, 0, 1}), poly_from_ints(f5, {1}));
    CHECK(wronskian(f5, x3_5) == poly_from_ints(f5, {0, 0, 3}));
    FieldCtx f3(3, 1);
    RatFun x3_3 = rf_make(f3, poly_from_ints(f3, {0, 0, 0, 1}), poly_from_ints(f3, {1}));
    CHECK(wronskian(f3, x3_3).is_zero());
}

TEST_CASE("ramification index") {
    FieldCtx f5(5, 1);
    RatFun x3 = rf_make(f5, poly_from_ints(f5, {0, 0, 0, 1}), poly_from_ints(f5, {1}));
    CHECK(ram_index_at(f5, x3, ProjPoint::finite(f5.zero())) == 3);
    CHECK(ram_index_at(f5, x3, ProjPoint::infinity()) == 3);
    CHECK(ram_index_at(f5, x3, ProjPoint::finite(f5.one())) == 1);

    RatFun f12 = fst(f5, {f5.one(), Fe{2}});
    CHECK(ram_index_at(f5, f12, ProjPoint::finite(Fe{2})) == 3);
}

TEST_CASE("ramification types") {
    FieldCtx f5(5, 1);
    CHECK(ram_type(f5, fst(f5, {f5.from_int(-3), f5.one()})) ==
          make_ram_type({{3, 2}, {3, 2}}));
    FieldCtx f7(7, 1);
    CHECK(ram_type(f7, fst(f7, {f7.from_int(-3), f7.one()})) ==
          make_ram_type({{3, 1}, {3, 1}}));
    CHECK(ram_type(f5, fst(f5, {f5.one(), Fe{2}})) == make_ram_type({{2, 2}, {2, 2}, {3, 1}}));

    FieldCtx f3(3, 1);
    RatFun x3 = rf_make(f3, poly_from_ints(f3, {0, 0, 0, 1}), poly_from_ints(f3, {1}));
    CHECK_THROWS(ram_type(f3, x3));  // inseparable
    // the p = 3 wild point: type (3/1)
    CHECK(ram_type(f3, fst(f3, {f3.zero(), f3.one()})) == make_ram_type({{3, 1}}));
}

TEST_CASE("admissible type table") {
    CHECK(validate_ram_type(5, make_ram_type({{2, 2}, {2, 2}, {3, 1}})));
    CHECK(validate_ram_type(3, make_ram_type({{2, 1}, {2, 1}, {2, 1}, {2, 1}})));
    CHECK(!validate_ram_type(5, make_ram_type({{2, 1}, {3, 1}})));
    CHECK(validate_ram_type(2, make_ram_type({{2, 1}})));
    CHECK(!validate_ram_type(2, make_ram_type({{2, 1}, {2, 1}, {2, 1}, {2, 1}})));
    CHECK(ram_type_string(make_ram_type({{3, 1}, {2, 2}, {2, 2}})) == "2/2,2/2,3/1");
}

TEST_CASE("type-2/1 point iff Class II, small fields") {
    for (u32 q : {5u, 7u, 9u}) {
        FieldCtx F = field_q(q);
        for (const auto& sp : omega_points(F)) {
            bool doubled = coarse_class(F, fst(F, sp)) == CoarseClass::II;
            bool has21 = false;
            for (const auto& rp : ram_points(F, fst(F, sp)))
                if (rp.index == 2 && rp.degree == 1) has21 = true;
            CHECK(has21 == doubled);
        }
    }
}

TEST_CASE("ram type is a PGL x PGL invariant") {
    std::mt19937_64 rng(37);
    for (u32 q : {5u, 7u}) {
        FieldCtx F = field_q(q);
        auto pts = omega_points(F);
        for (int k = 0; k < 25; ++k) {
            FstParams sp = pts[rng() % pts.size()];
            RatFun f = fst(F, sp);
            RatFun g = post_compose(F, test::rand_moebius(F, rng),
                                    pre_compose(F, f, test::rand_moebius(F, rng)));
            CHECK(ram_type(F, f) == ram_type(F, g));
        }
    }
}

TEST_CASE("index-2-free points at small q") {
    for (u32 q : {5u, 7u}) {
        FieldCtx F = field_q(q);
        std::vector<FstParams> free2;
        for (const auto& sp : omega_points(F)) {
            bool has2 = false;
            for (const auto& rp : ram_points(F, fst(F, sp)))
                if (rp.index == 2) has2 = true;
            if (!has2) free2.push_back(sp);
        }
        REQUIRE(free2.size() == 1);
        CHECK(free2[0] == FstParams{F.from_int(-3), F.one()});
    }
}
