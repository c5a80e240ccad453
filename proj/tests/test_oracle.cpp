#include <random>

#include "doctest.h"
#include "rf3/oracle.hpp"
#include "rf3/paper_tables.hpp"
#include "test_util.hpp"

using namespace rf3;
using test::field_q;

TEST_CASE("brute equivalence") {
    FieldCtx f5(5, 1);
    std::mt19937_64 rng(61);
    RatFun f = test::rand_ratfun3(f5, rng);
    auto self = brute_equiv(f5, f, f);
    REQUIRE(self.has_value());
    CHECK(post_compose(f5, self->psi, pre_compose(f5, f, self->phi)) == f);

    // Table 3 partner (s, -1-s-t)
    FstParams sp{Fe{1}, Fe{2}};
    FstParams sp2{Fe{1}, f5.neg(f5.add(f5.one(), f5.add(Fe{1}, Fe{2})))};
    auto w = brute_equiv(f5, fst(f5, sp), fst(f5, sp2));
    REQUIRE(w.has_value());
    CHECK(post_compose(f5, w->psi, pre_compose(f5, fst(f5, sp), w->phi)) == fst(f5, sp2));

    // the two Class II families never meet
    for (u32 q : {5u, 7u}) {
        FieldCtx F = field_q(q);
        for (u32 t = 1; t < q; ++t)
            for (u32 t2 = 1; t2 < q; ++t2) {
                RatFun a = rf_make(F, poly_from({Fe{t}, F.zero(), F.zero(), F.one()}),
                                   poly_x(F));
                RatFun b = rf_make(F, poly_from({Fe{t2}, F.zero(), F.one(), F.one()}),
                                   poly_x(F));
                CHECK(!brute_equiv(F, a, b));
            }
    }
}

TEST_CASE("brute equivalence is symmetric and transitive on orbit samples") {
    FieldCtx F(5, 1);
    std::mt19937_64 rng(67);
    RatFun f = fst(F, {Fe{1}, Fe{2}});
    RatFun g = post_compose(F, test::rand_moebius(F, rng),
                            pre_compose(F, f, test::rand_moebius(F, rng)));
    RatFun h = post_compose(F, test::rand_moebius(F, rng),
                            pre_compose(F, g, test::rand_moebius(F, rng)));
    CHECK(brute_equiv(F, f, g).has_value());
    CHECK(brute_equiv(F, g, f).has_value());
    CHECK(brute_equiv(F, g, h).has_value());
    CHECK(brute_equiv(F, f, h).has_value());
}

TEST_CASE("serial equals parallel") {
    FieldCtx F(7, 1);
    std::mt19937_64 rng(71);
    for (int k = 0; k < 5; ++k) {
        RatFun f = test::rand_ratfun3(F, rng), g = test::rand_ratfun3(F, rng);
        auto a = brute_equiv(F, f, g, Exec::serial);
        auto b = brute_equiv(F, f, g, Exec::parallel);
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
            CHECK(a->phi == b->phi);
            CHECK(a->psi == b->psi);
        }
    }
    auto pa = orbit_partition_fst(F, Exec::serial);
    auto pb = orbit_partition_fst(F, Exec::parallel);
    CHECK(pa.orbit == pb.orbit);
    CHECK(pa.orbit_count == pb.orbit_count);
    // scan direction does not matter
    auto pc = orbit_partition_fst(F, Exec::serial, true);
    CHECK(pa.orbit == pc.orbit);
}

TEST_CASE("orbit partition matches the count formula") {
    auto p5 = orbit_partition_fst(field_q(5));
    CHECK(p5.orbit_count == 4);
    FieldCtx f7(7, 1);
    auto p7 = orbit_partition_fst(f7);
    CHECK(p7.orbit_count == 6);
    u32 iiia = 0;
    for (u32 o = 0; o < p7.orbit_count; ++o)
        if (subclass(f7, p7.points[p7.members[o][0]]) == Subclass::IIIa) ++iiia;
    CHECK(iiia == 3);

    FieldCtx f9 = field_q(9);
    auto p9 = orbit_partition_fst(f9);
    CHECK(p9.orbit_count == 8);
    u32 a = 0, b = 0, d = 0;
    for (u32 o = 0; o < p9.orbit_count; ++o) {
        switch (subclass(f9, p9.points[p9.members[o][0]])) {
            case Subclass::IIIa: ++a; break;
            case Subclass::IIIb: ++b; break;
            case Subclass::IIId: ++d; break;
            default: break;
        }
    }
    CHECK(a == 4);
    CHECK(b == 3);
    CHECK(d == 1);
}

TEST_CASE("verification suites pass on small fields") {
    CHECK(verify_suite(field_q(5), "counts").pass);
    CHECK(verify_suite(field_q(7), "theorem2").pass);
    CHECK(verify_suite(field_q(7), "s3table").pass);
    CHECK(verify_suite(field_q(7), "eq-st").pass);
    CHECK(verify_suite(field_q(7), "invariant-constancy").pass);
    CHECK(verify_suite(field_q(7), "theta-reduction").pass);
    CHECK(verify_suite(field_q(5), "ramtable").pass);
    CHECK(verify_suite(field_q(7), "identities").pass);
    CHECK(verify_suite(field_q(7), "theta-sets").pass);
    CHECK(verify_suite(field_q(4), "evenchar").pass);
    CHECK(verify_suite(field_q(11), "lambda-table").pass);
    CHECK_THROWS(verify_suite(field_q(5), "bogus"));
    CHECK_THROWS(verify_suite(field_q(4), "theta-sets"));
}

TEST_CASE("published tables reproduce") {
    for (auto& t : paper_invariant_tables(27)) CHECK(t.pass);
    for (auto& t : paper_invariant_tables(25)) CHECK(t.pass);
    CHECK(paper_even_table(field_q(4)).pass);
}
