#include <map>

#include "doctest.h"
#include "rf3/classify.hpp"
#include "rf3/oracle.hpp"
#include "rf3/text.hpp"
#include "test_util.hpp"

using namespace rf3;
using test::field_q;

namespace {
RatFun poly_fn(const FieldCtx& F, std::initializer_list<i64> num) {
    return rf_make(F, poly_from_ints(F, num), poly_from_ints(F, {1}));
}
}  // namespace

TEST_CASE("classify reaches every label kind") {
    FieldCtx f5(5, 1);
    CHECK(classify(f5, poly_fn(f5, {0, 0, 0, 1})).kind == ClassLabel::Kind::Isep);

    FieldCtx f9(3, 2);
    CHECK(classify(f9, poly_fn(f9, {0, 0, 0, 1})).kind == ClassLabel::Kind::Iinsep);

    FieldCtx f7(7, 1);
    for (u32 t = 1; t < 7; ++t) {
        RatFun f = rf_make(f7, poly_from({Fe{t}, f7.zero(), f7.one(), f7.one()}), poly_x(f7));
        ClassLabel l = classify(f7, f);
        CHECK(l.kind == ClassLabel::Kind::IIB);
        CHECK(l.value == Fe{t});
    }

    ClassLabel w = classify(f5, fst(f5, {f5.from_int(-3), f5.one()}));
    CHECK(w.kind == ClassLabel::Kind::IIIwild27);
    CHECK(w.ram == make_ram_type({{3, 2}, {3, 2}}));

    FieldCtx f3(3, 1);
    CHECK(classify(f3, fst(f3, {f3.zero(), f3.one()})).kind == ClassLabel::Kind::IIIp3d);
}

TEST_CASE("class II canonical form") {
    FieldCtx f7(7, 1);
    // t a cube: (X^3+6)/X lands on the transversal representative 1
    RatFun f = rf_make(f7, poly_from_ints(f7, {6, 0, 0, 1}), poly_x(f7));
    ClassLabel l = class2_canonical(f7, f);
    CHECK(l.kind == ClassLabel::Kind::IIA);
    CHECK(l.value == f7.one());

    // f_{2,2} is Class II; its label matches brute-force equivalence to the
    // emitted canonical form
    RatFun g = fst(f7, {Fe{2}, Fe{2}});
    ClassLabel lg = classify(f7, g);
    CHECK((lg.kind == ClassLabel::Kind::IIA || lg.kind == ClassLabel::Kind::IIB));
    for (const auto& r : representatives(f7))
        if (r.label == lg) CHECK(brute_equiv(f7, g, r.fn).has_value());

    // even characteristic: (X^3+c)/(X+c) -> t = (1+c)^{-2}
    FieldCtx f4(2, 2);
    for (u32 cv = 2; cv < 4; ++cv) {
        Fe c{cv};
        RatFun h = rf_make(f4, poly_from({c, f4.zero(), f4.zero(), f4.one()}),
                           poly_from({c, f4.one()}));
        ClassLabel lh = classify(f4, h);
        CHECK(lh.kind == ClassLabel::Kind::IIB);
        CHECK(lh.value == f4.inv(f4.mul(f4.add(f4.one(), c), f4.add(f4.one(), c))));
    }

    CHECK_THROWS(class2_canonical(f7, poly_fn(f7, {0, 0, 0, 1})));
}

TEST_CASE("representative counts") {
    std::map<u32, u32> want{{3, 7},  {4, 10}, {5, 10}, {7, 16}, {8, 16},
                            {9, 19}, {11, 22}, {13, 28}, {25, 52}, {27, 55}};
    for (auto [q, n] : want) {
        FieldCtx F = field_q(q);
        auto reps = representatives(F);
        CHECK(reps.size() == n);
        CHECK(reps.size() == class_counts(F).total);
        // labels are pairwise distinct
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                CHECK(!(reps[i].label == reps[j].label));
    }
}

TEST_CASE("classify(representative) returns its own label") {
    for (u32 q : {4u, 5u, 7u, 8u, 9u}) {
        FieldCtx F = field_q(q);
        for (const auto& r : representatives(F)) {
            ClassLabel l = classify(F, r.fn);
            CHECK(label_string(F, l) == label_string(F, r.label));
        }
    }
}

TEST_CASE("representatives pairwise inequivalent at small q") {
    for (u32 q : {4u, 5u}) {
        FieldCtx F = field_q(q);
        auto reps = representatives(F);
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                CHECK(!brute_equiv(F, reps[i].fn, reps[j].fn));
    }
}

TEST_CASE("count formulas") {
    auto c7 = class_counts(field_q(7));
    CHECK(c7.class_i == 1);
    CHECK(c7.class_ii == 9);
    CHECK(c7.class_iii == 6);
    CHECK(c7.total == 16);
    auto c9 = class_counts(field_q(9));
    CHECK(c9.class_i == 2);
    CHECK(c9.class_ii == 9);
    CHECK(c9.class_iii == 8);
    CHECK(c9.total == 19);
    auto c4 = class_counts(field_q(4));
    CHECK(c4.class_i == 1);
    CHECK(c4.class_ii == 6);
    CHECK(c4.class_iii == 3);
    CHECK(c4.total == 10);
}

TEST_CASE("serial and parallel representative search agree") {
    for (u32 q : {7u, 9u}) {
        FieldCtx F = field_q(q);
        auto a = representatives(F, Exec::serial);
        auto b = representatives(F, Exec::parallel);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].label == b[i].label);
            CHECK(a[i].fn == b[i].fn);
        }
    }
}
