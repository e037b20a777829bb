#include <doctest.h>

#include <numeric>

#include "drincert/gl3.hpp"

using namespace drincert;

TEST_CASE("classical orders") {
    ClassicalOrders t2 = classical_orders(2);
    CHECK(t2.gl3.value_str() == "168");
    ClassicalOrders t7 = classical_orders(7);
    CHECK(t7.go3.value_str() == "672");  // 2*7*48
    CHECK(t7.s_class.size() == 4);
    CHECK(t7.s_class[0].value_str() == "504");  // 168 * gcd(3, 6)
    CHECK(t7.s_class[1].value_str() == "1080");
    CHECK(t7.s_class[2].value_str() == "2160");
    CHECK(t7.s_class[3].value_str() == "7560");
    ClassicalOrders t11 = classical_orders(11);
    CHECK(t11.s_class[0].value_str() == "168");  // gcd(3, 10) = 1
    // GU3 only at square q
    CHECK_FALSE(t7.gu3.has_value());
    ClassicalOrders t49 = classical_orders(49);
    REQUIRE(t49.gu3.has_value());
    // |GU3(7)| = 7^3 * 8 * 48 * 344 = 45308928
    CHECK(t49.gu3->value_str() == "45308928");
}

TEST_CASE("order cross-checks up to q = 49") {
    for (uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 49u}) {
        ClassicalOrders t = classical_orders(q);
        CHECK(t.gl3.value == t.sl3.value * (q - 1));
        CHECK(t.pgl3.value == t.gl3.value / (q - 1));
        uint64_t z = std::gcd<uint64_t>(3, q - 1);
        CHECK(t.psl3.value == t.sl3.value / z);
        // value = product of the stored factorization
        for (const GroupOrder* g : {&t.gl3, &t.sl3, &t.psl3, &t.go3, &t.wreath_gl1_s3}) {
            unsigned __int128 v = 1;
            for (auto [pr, ex] : g->factors)
                for (int i = 0; i < ex; ++i) v *= pr;
            CHECK(v == g->value);
        }
    }
}

TEST_CASE("sieve excludes all classes with the full evidence quadruple") {
    for (uint64_t qp : {7ull, 49ull, 343ull}) {
        SieveEvidence ev;
        ev.q_prime = qp;
        ev.irreducible = true;
        ev.divisor = qp * qp;
        ev.det_full = true;
        ev.center_contained = true;
        SieveVerdict v = aschbacher_sieve(ev);
        CHECK(v.surjective);
        for (const auto& c : v.classes)
            CHECK(c.outcome != ClassOutcome::Failed);
    }
}

TEST_CASE("sieve at q' = 49: C5 exclusion via exact divisibility") {
    SieveEvidence ev;
    ev.q_prime = 49;
    ev.irreducible = true;
    ev.divisor = 49 * 49;
    ev.det_full = true;
    ev.center_contained = true;
    SieveVerdict v = aschbacher_sieve(ev);
    for (const auto& c : v.classes)
        if (c.cls == "C5") {
            CHECK(c.outcome == ClassOutcome::Excluded);
            // 7^4 does not divide 7^3 * 48 * 342 * 48
            CHECK(c.reason.find("q0 = 7") != std::string::npos);
        }
}

TEST_CASE("sieve is evidence-sensitive and monotone") {
    SieveEvidence good;
    good.q_prime = 7;
    good.irreducible = true;
    good.divisor = 49;
    good.det_full = true;
    good.center_contained = true;
    SieveVerdict strong = aschbacher_sieve(good);
    REQUIRE(strong.surjective);

    // divisor 1: divisibility classes cannot be excluded
    SieveEvidence weak = good;
    weak.divisor = 1;
    SieveVerdict v1 = aschbacher_sieve(weak);
    CHECK_FALSE(v1.surjective);
    for (const auto& c : v1.classes)
        if (c.cls == "C2") CHECK(c.outcome == ClassOutcome::Failed);

    // weakening any single field never turns a failed class into excluded
    auto outcome_of = [](const SieveVerdict& v, const std::string& cls) {
        for (const auto& c : v.classes)
            if (c.cls == cls) return c.outcome;
        return ClassOutcome::Failed;
    };
    std::vector<SieveEvidence> weakened;
    {
        SieveEvidence e = good;
        e.irreducible = false;
        weakened.push_back(e);
        e = good;
        e.det_full = false;
        weakened.push_back(e);
        e = good;
        e.center_contained = false;
        weakened.push_back(e);
        e = good;
        e.divisor = 1;
        weakened.push_back(e);
        e = good;
        e.divisor = 7;
        weakened.push_back(e);
    }
    for (const auto& e : weakened) {
        SieveVerdict w = aschbacher_sieve(e);
        CHECK_FALSE(w.surjective);  // every weakening breaks some class
        for (const auto& c : strong.classes) {
            ClassOutcome ws = outcome_of(w, c.cls);
            // excluded/not-applicable may degrade to failed, never the reverse
            if (c.outcome == ClassOutcome::Failed) CHECK(ws == ClassOutcome::Failed);
        }
    }
}

TEST_CASE("normal solvable subgroups of GL3(F_2) are central") {
    NormalSolvableReport r = normal_solvable_center_check(2);
    CHECK(r.ok);
    CHECK(r.group_order == 168);
    CHECK(r.n_conjugacy_classes == 6);
    CHECK(r.all_solvable_central);
    CHECK(r.center_found);
    CHECK(r.sl3_detected_nonsolvable);  // SL3(F_2) = GL3(F_2), simple of order 168
    // only normal subgroups: {1} and the whole group
    CHECK(r.normal_subgroups.size() == 2);
    CHECK_THROWS(normal_solvable_center_check(4));
    CHECK_THROWS(normal_solvable_center_check(5));
}

TEST_CASE("subring closure examples") {
    auto F = make_fq(7, 1);
    Poly T = Poly::var();
    Poly a = poly_mul(*F, poly_sub(*F, T, Poly::constant(1)), poly_sub(*F, T, Poly::constant(2)));
    ResidueRing ring(F, a);
    // S = {-(T-3), -(T-4)} generates all of F_7 x F_7
    std::vector<uint64_t> S = {
        ring.encode(poly_neg(*F, poly_sub(*F, T, Poly::constant(3)))),
        ring.encode(poly_neg(*F, poly_sub(*F, T, Poly::constant(4)))),
    };
    SubringResult full = subring_generated(ring, S);
    CHECK(full.is_full);
    CHECK(full.dim == 2);
    CHECK(full.size == 49);

    // S = {0}: just the prime subring
    SubringResult prime_only = subring_generated(ring, {ring.encode(Poly())});
    CHECK_FALSE(prime_only.is_full);
    CHECK(prime_only.dim == 1);
    CHECK(prime_only.size == 7);

    // S empty: same
    SubringResult empty = subring_generated(ring, {});
    CHECK_FALSE(empty.is_full);
    CHECK(empty.size == 7);

    // closure contains S and is idempotent: rerunning on the closure's basis
    // adds nothing
    SubringResult again = subring_generated(ring, full.basis);
    CHECK(again.dim == full.dim);
}

TEST_CASE("coset trace test") {
    auto Fq = make_fq(7, 1);
    const SmallField& F = *Fq;
    Poly T = Poly::var();
    auto l1 = make_prime_ideal(F, poly_sub(F, T, Poly::constant(1)));
    auto l2 = make_prime_ideal(F, poly_sub(F, T, Poly::constant(2)));
    ResidueField R1 = make_residue_field(Fq, l1);
    ResidueField R2 = make_residue_field(Fq, l2);

    // Type 2 shape: trace of the inverse side is 0, trace of the l2 side is
    // -1: refuted outright
    CharpolyModL p1;
    p1.c = {3, 1, 0, 1};  // x^3 + x + 3: trace 0
    p1.trace = 0;
    p1.det = F.neg(3);
    CharpolyModL p2;
    p2.c = {2, 0, 1, 1};  // x^3 + x^2 + 2: trace -1
    p2.trace = F.neg(1);
    p2.det = F.neg(2);
    CHECK(coset_trace_test(R1, p1, R2, p2) == CosetTestResult::Refuted);

    // size mismatch: not applicable
    Poly t2p1 = poly_add(F, Poly::monomial(1, 2), Poly::constant(1));
    ResidueField R2b = make_residue_field(Fq, make_prime_ideal(F, t2p1));
    CHECK(coset_trace_test(R1, p1, R2b, p2) == CosetTestResult::NotApplicable);

    // a consistent pair is NOT refuted: pick sigma = id, lambda = 2:
    // t1 = 2*t2, d1 = 8*d2
    CharpolyModL q2;
    q2.c = {0, 0, 0, 1};
    q2.trace = 3;
    q2.det = 5;
    CharpolyModL q1;
    q1.trace = F.mul(2, q2.trace);
    q1.det = F.mul(F.pow(2, 3), q2.det);
    q1.c = {F.neg(q1.det), 0, F.neg(q1.trace), 1};
    CHECK(coset_trace_test(R1, q1, R2, q2) == CosetTestResult::NotRefuted);
}
