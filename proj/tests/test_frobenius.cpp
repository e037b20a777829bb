#include <doctest.h>

#include "drincert/frobenius.hpp"

using namespace drincert;

TEST_CASE("degree-1 closed form") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    DrinfeldModule t1 = make_drinfeld(s, Poly::var(), Poly::constant(1));
    DrinfeldModule t2 = make_drinfeld(s, Poly(), Poly::constant(1));

    FrobCharPoly P1 = frob_charpoly_deg1(t1, 2);
    CHECK(P1.a1() == Poly::constant(1));
    CHECK(P1.a2() == Poly::constant(1));  // g1(2) != 0 forces g1(2)^(q-1) = 1
    CHECK(P1.mu == 1);

    FrobCharPoly P2 = frob_charpoly_deg1(t2, 2);
    CHECK(P2.a1() == Poly::constant(1));
    CHECK(P2.a2().is_zero());

    CHECK_THROWS(frob_charpoly_deg1(t1, 0));

    // mod (T): M_c(x) = x^3 + x^2 + a2 x + c
    auto pT = make_prime_ideal(F, Poly::var());
    ResidueField RT = make_residue_field(s.F, pT);
    CharpolyModL m1 = charpoly_mod(P1, RT);
    CHECK(m1.c == std::vector<FF>{2, 1, 1, 1});
    CharpolyModL m2 = charpoly_mod(P2, RT);
    CHECK(m2.c == std::vector<FF>{2, 0, 1, 1});
}

TEST_CASE("solver agrees with the closed form at every degree-1 prime") {
    for (auto [p, e] : std::vector<std::pair<uint32_t, uint32_t>>{{7, 1}, {3, 2}, {11, 1}}) {
        FieldSpec s = make_field_spec(p, e);
        const SmallField& F = *s.F;
        for (bool type1 : {true, false}) {
            DrinfeldModule phi =
                make_drinfeld(s, type1 ? Poly::var() : Poly(), Poly::constant(1));
            REQUIRE(phi.in_family());
            for (uint64_t c = 1; c < F.size(); ++c) {
                auto pr = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant((FF)c)));
                ReducedModule rm = reduce_at(phi, pr);
                FrobCharPoly got = frob_charpoly_solve(rm);
                FrobCharPoly want = frob_charpoly_deg1(phi, (FF)c);
                CHECK(got.a1() == want.a1());
                CHECK(got.a2() == want.a2());
                CHECK(got.mu == want.mu);
            }
        }
    }
}

TEST_CASE("rank-1 Carlitz specialization reproduces the Hayes class") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    SkewPolyA CT = carlitz_module(s.F);
    for (uint64_t c = 0; c < 7; ++c) {
        Poly gen = c == 0 ? Poly::var() : poly_sub(F, Poly::var(), Poly::constant((FF)c));
        auto pr = make_prime_ideal(F, gen);
        ReducedModule rm;
        rm.prime = pr;
        rm.R = make_residue_field(s.F, pr);
        rm.psiT = skew_reduce(CT, rm.R);
        rm.parent_phiT = CT;
        rm.type = ReductionType::Good;
        FrobCharPoly P = frob_charpoly_solve(rm);
        CHECK(P.rank == 1);
        CHECK(P.mu == 1);  // P(x) = x - p: Frobenius acts as the class of p
        // det functional mod another prime equals the Hayes class
        auto l = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant((FF)((c + 1) % 7 == 0 ? 1 : (c + 1) % 7))));
        if (l.gen == gen) continue;
        ResidueField R = make_residue_field(s.F, l);
        CharpolyModL pm = charpoly_mod(P, R);
        CHECK(pm.det == R.reduce(gen));
    }
}

TEST_CASE("degree-2 prime: solver degree bounds and oracle cross-check") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    DrinfeldModule phi = make_drinfeld(s, Poly(), Poly::constant(1));  // Type 2
    Poly t2p1 = poly_add(F, Poly::monomial(1, 2), Poly::constant(1));
    auto pr = make_prime_ideal(F, t2p1);
    ReducedModule rm = reduce_at(phi, pr);
    REQUIRE(rm.type == ReductionType::Good);
    FrobCharPoly P = frob_charpoly_solve(rm);
    CHECK(P.a1().degree_or(-1) <= 1);
    CHECK(P.a2().degree_or(-1) <= 2);
    CHECK(P.mu != 0);

    // validate against the torsion-matrix oracle mod two degree-1 ideals
    for (FF lc : {1, 2}) {
        auto l = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(lc)));
        FrobMatrix M = frob_matrix_oracle(rm, l);
        ResidueField R = make_residue_field(s.F, l);
        CharpolyModL pm = charpoly_mod(P, R);
        std::vector<FF> cp = charpoly(*R.K, M.m);
        CHECK(cp == pm.c);
        CHECK(mat_det(*R.K, M.m) == R.K->mul(R.eval_fq(P.mu), R.reduce(pr.gen)));
    }
}

TEST_CASE("oracle equivalence and determinant at a sample of degree-1 pairs") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    DrinfeldModule phi = make_drinfeld(s, Poly::var(), Poly::constant(1));  // Type 1
    for (auto [pc, lc] : std::vector<std::pair<FF, FF>>{{1, 2}, {3, 5}}) {
        auto pr = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(pc)));
        auto l = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(lc)));
        ReducedModule rm = reduce_at(phi, pr);
        FrobCharPoly P = frob_charpoly_solve(rm);
        FrobMatrix M = frob_matrix_oracle(rm, l);
        ResidueField R = make_residue_field(s.F, l);
        CHECK(charpoly(*R.K, M.m) == charpoly_mod(P, R).c);
        CHECK(mat_det(*R.K, M.m) == R.reduce(pr.gen));  // det = p_bar (mu = 1 here)
    }
}

TEST_CASE("Carlitz 1x1 oracle: the Frobenius scalar is p mod l") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    SkewPolyA CT = carlitz_module(s.F);
    auto pr = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(3)));
    ReducedModule rm;
    rm.prime = pr;
    rm.R = make_residue_field(s.F, pr);
    rm.psiT = skew_reduce(CT, rm.R);
    rm.parent_phiT = CT;
    rm.type = ReductionType::Good;
    for (FF lc : {1, 2, 5}) {
        auto l = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(lc)));
        FrobMatrix M = frob_matrix_oracle(rm, l);
        CHECK(M.rank == 1);
        ResidueField R = make_residue_field(s.F, l);
        CHECK(M.m.at(0, 0) == R.reduce(pr.gen));
    }
}

TEST_CASE("charpoly_mod functionals") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    DrinfeldModule phi = make_drinfeld(s, Poly::var(), Poly::constant(1));
    FrobCharPoly P = frob_charpoly_deg1(phi, 2);
    // det/tr^3 = -(T-c) mod a
    Poly a = poly_mul(F, poly_sub(F, Poly::var(), Poly::constant(1)),
                      poly_sub(F, Poly::var(), Poly::constant(3)));
    ResidueRing ring(s.F, a);
    CharpolyModRing pm = charpoly_mod(P, ring);
    REQUIRE(pm.det_over_tr3.has_value());
    Poly want = poly_neg(F, poly_sub(F, Poly::var(), Poly::constant(2)));
    CHECK(*pm.det_over_tr3 == ring.encode(want));
    // trace is -1 (a1 = 1), so tr^3/det = -1/(mu p)
    CHECK(pm.trace == ring.encode(Poly::constant(F.neg(1))));
    // non-invertible trace in a ring is signalled, not thrown: build a case
    // with trace = -1 always invertible here, so just check presence
    CHECK(pm.tr3_over_det.has_value());
}
