#include "doctest.h"
#include "rf3/field.hpp"
#include "test_util.hpp"

using namespace rf3;
using test::field_25_paper;
using test::field_27_paper;
using test::field_q;

TEST_CASE("construction and default moduli") {
    FieldCtx f5(5, 1);
    CHECK(f5.q() == 5);
    CHECK(f5.modulus() == std::vector<u32>{0, 1});  // X

    // the scan-minimal irreducible cubic over F_3 is X^3 + 2X + 1 = X^3 - X + 1,
    // the published F_27 modulus
    FieldCtx f27(3, 3);
    CHECK(f27.modulus() == std::vector<u32>{1, 2, 0, 1});

    CHECK_THROWS(FieldCtx(4, 1));
    CHECK_THROWS(FieldCtx(3, 3, std::vector<u32>{1, 1, 0, 1}));  // X^3+X+1 has root 1
    CHECK_THROWS(FieldCtx(3, 3, std::vector<u32>{1, 2, 1}));     // wrong degree
}

TEST_CASE("arithmetic examples") {
    FieldCtx f7(7, 1);
    CHECK(f7.inv(Fe{3}) == Fe{5});

    FieldCtx f27 = field_27_paper();
    Fe alpha = f27.from_coeffs({0, 1, 0});
    CHECK(f27.pow(alpha, 3) == f27.from_coeffs({2, 1, 0}));  // a^3 = a - 1

    FieldCtx f5(5, 1);
    CHECK(f5.pow(Fe{2}, 5) == Fe{2});
    CHECK(f5.pow(Fe{2}, -1) == f5.inv(Fe{2}));
}

TEST_CASE("squares") {
    FieldCtx f7(7, 1);
    CHECK(f7.is_square(Fe{2}));
    FieldCtx f5(5, 1);
    CHECK(!f5.is_square(Fe{2}));
    FieldCtx f4(2, 2);
    for (u32 v = 1; v < 4; ++v) CHECK(f4.is_square(Fe{v}));
    CHECK_THROWS(f5.is_square(Fe{0}));

    for (u32 q : {5u, 7u, 9u, 27u}) {
        FieldCtx F = field_q(q);
        u32 squares = 0;
        for (u32 v = 1; v < q; ++v)
            if (F.is_square(Fe{v})) ++squares;
        CHECK(squares == (q - 1) / 2);
    }

    FieldCtx f9(3, 2);
    for (u32 v = 0; v < 9; ++v) {
        Fe sq = f9.mul(Fe{v}, Fe{v});
        auto r = f9.sqrt(sq);
        REQUIRE(r.has_value());
        CHECK((*r == Fe{v} || *r == f9.neg(Fe{v})));
        CHECK(*r == std::min(Fe{v}, f9.neg(Fe{v})));
    }
}

TEST_CASE("trace to F_2") {
    FieldCtx f4(2, 2);
    CHECK(f4.trace_q_over_2(f4.one()) == 0);
    FieldCtx f2(2, 1);
    CHECK(f2.trace_q_over_2(f2.one()) == 1);
    FieldCtx f8(2, 3);
    Fe alpha = f8.from_coeffs({0, 1, 0});
    CHECK(f8.trace_q_over_2(alpha) == 0);  // direct summation over X^3+X+1
    for (u32 v = 0; v < 8; ++v) {
        u32 t = f8.trace_q_over_2(Fe{v});
        CHECK(t <= 1);
        CHECK(t == f8.trace_q_over_2(f8.mul(Fe{v}, Fe{v})));
    }
    FieldCtx f5(5, 1);
    CHECK_THROWS(f5.trace_q_over_2(Fe{1}));
}

TEST_CASE("cube transversal") {
    FieldCtx f5(5, 1);
    CHECK(f5.cube_transversal() == std::vector<Fe>{Fe{1}});
    FieldCtx f7(7, 1);
    CHECK(f7.cube_transversal() == std::vector<Fe>{Fe{1}, Fe{2}, Fe{3}});
    FieldCtx f4(2, 2);
    CHECK(f4.cube_transversal() == std::vector<Fe>{Fe{1}, Fe{2}, Fe{3}});

    // representatives sit in pairwise distinct cosets and cover the quotient
    for (u32 q : {4u, 7u, 13u, 25u}) {
        FieldCtx F = field_q(q);
        auto reps = F.cube_transversal();
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j) {
                Fe ratio = F.div(reps[i], reps[j]);
                CHECK(F.pow(ratio, i64((F.q() - 1) / 3)) != F.one());
            }
        CHECK(reps.size() == ((q - 1) % 3 == 0 ? 3 : 1));
    }
}

TEST_CASE("enumerate") {
    FieldCtx f2(2, 1);
    CHECK(f2.elements() == std::vector<Fe>{Fe{0}, Fe{1}});
    FieldCtx f5(5, 1);
    CHECK(f5.elements().size() == 5);
    FieldCtx f9(3, 2);
    auto e = f9.elements();
    CHECK(e.size() == 9);
    CHECK(e[0] == f9.zero());
    CHECK(e[1] == f9.one());
}

TEST_CASE("field axioms, exhaustive for small q") {
    for (u32 q : {8u, 9u, 27u}) {
        FieldCtx F = field_q(q);
        for (u32 a = 0; a < q; ++a)
            for (u32 b = 0; b < q; ++b) {
                Fe x{a}, y{b};
                CHECK(F.add(x, y) == F.add(y, x));
                CHECK(F.mul(x, y) == F.mul(y, x));
                CHECK(F.sub(F.add(x, y), y) == x);
                if (b != 0) CHECK(F.mul(F.div(x, y), y) == x);
                // Frobenius is additive and multiplicative
                CHECK(F.frob(F.add(x, y)) == F.add(F.frob(x), F.frob(y)));
                CHECK(F.frob(F.mul(x, y)) == F.mul(F.frob(x), F.frob(y)));
            }
        for (u32 a = 0; a < q; ++a) {
            CHECK(F.pow(Fe{a}, i64(q)) == Fe{a});
            for (u32 b = 0; b < q; ++b)
                for (u32 c = 0; c < q; ++c) {
                    Fe x{a}, y{b}, z{c};
                    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
                    CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
                }
        }
    }
}

TEST_CASE("published F_25 modulus") {
    FieldCtx f25 = field_25_paper();
    Fe alpha = f25.from_coeffs({0, 1});
    // a^2 + a + 1 = 0
    CHECK(f25.add(f25.add(f25.mul(alpha, alpha), alpha), f25.one()) == f25.zero());
}
