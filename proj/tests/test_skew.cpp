#include <doctest.h>

#include "drincert/skew.hpp"

using namespace drincert;

namespace {
uint64_t rng_state = 0x5ca1ab1e;
uint64_t rnd() {
    uint64_t z = (rng_state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
SkewPolyA random_skew(FieldPtr F, int taudeg, int coeffdeg) {
    std::vector<Poly> c((size_t)(rnd() % (uint64_t)(taudeg + 1)) + 1);
    for (auto& p : c) {
        std::vector<FF> v((size_t)(rnd() % (uint64_t)(coeffdeg + 1)) + 1);
        for (auto& x : v) x = (FF)(rnd() % F->size());
        p = Poly(std::move(v));
    }
    return skew_a(F, std::move(c));
}
}  // namespace

TEST_CASE("commutation rule over A") {
    auto F = make_fq(7, 1);
    SkewPolyA tau = skew_a(F, {Poly(), Poly::constant(1)});
    SkewPolyA Tconst = skew_a(F, {Poly::var()});
    // tau * T = T^7 tau
    SkewPolyA lhs = skew_mul(tau, Tconst);
    CHECK(lhs.c.size() == 2);
    CHECK(lhs.c[0].is_zero());
    CHECK(lhs.c[1] == Poly::monomial(1, 7));
}

TEST_CASE("Carlitz conjugacy identity T psi_T = C_T T") {
    auto F = make_fq(7, 1);
    uint64_t q = F->size();
    SkewPolyA psiT = skew_a(F, {Poly::var(), Poly::monomial(1, (size_t)q - 1)});
    SkewPolyA CT = skew_a(F, {Poly::var(), Poly::constant(1)});
    SkewPolyA Tconst = skew_a(F, {Poly::var()});
    SkewPolyA lhs = skew_mul(Tconst, psiT);
    SkewPolyA rhs = skew_mul(CT, Tconst);
    CHECK(lhs == rhs);
    // both equal T^2 + T^q tau
    CHECK(lhs.c[0] == Poly::monomial(1, 2));
    CHECK(lhs.c[1] == Poly::monomial(1, (size_t)q));
}

TEST_CASE("skew multiplication is associative and distributive") {
    auto F = make_fq(7, 1);
    for (int t = 0; t < 15; ++t) {
        SkewPolyA a = random_skew(F, 2, 2), b = random_skew(F, 2, 2), c = random_skew(F, 2, 2);
        CHECK(skew_mul(skew_mul(a, b), c) == skew_mul(a, skew_mul(b, c)));
        CHECK(skew_mul(a, skew_add(b, c)) == skew_add(skew_mul(a, b), skew_mul(a, c)));
        CHECK(skew_mul(skew_add(a, b), c) == skew_add(skew_mul(a, c), skew_mul(b, c)));
    }
}

TEST_CASE("ring descriptor mismatch is an error") {
    auto F7 = make_fq(7, 1);
    auto F11 = make_fq(11, 1);
    SkewPolyA a = skew_a(F7, {Poly::constant(1)});
    SkewPolyA b = skew_a(F11, {Poly::constant(1)});
    CHECK_THROWS(skew_mul(a, b));
}

TEST_CASE("to_linearized on A-coefficients") {
    auto F = make_fq(7, 1);
    // C_T = T + tau -> T x + x^7
    SkewPolyA CT = skew_a(F, {Poly::var(), Poly::constant(1)});
    auto lin = to_linearized(CT);
    REQUIRE(lin.size() == 2);
    CHECK(lin[0].first == 1);
    CHECK(lin[0].second == Poly::var());
    CHECK(lin[1].first == 7);
    CHECK(lin[1].second == Poly::constant(1));
    CHECK(to_linearized(skew_a(F, {})).empty());
}

TEST_CASE("to_linearized over a field composes like skew multiplication") {
    // small twist field to keep dense degrees tame
    auto F3 = make_fq(3, 1);
    for (int t = 0; t < 10; ++t) {
        std::vector<FF> fc(1 + rnd() % 3), gc(1 + rnd() % 3);
        for (auto& x : fc) x = (FF)(rnd() % 3);
        for (auto& x : gc) x = (FF)(rnd() % 3);
        SkewPolyF f = skew_f(F3, 3, fc), g = skew_f(F3, 3, gc);
        if (f.is_zero() || g.is_zero()) continue;
        Poly lhs = to_linearized(skew_mul(f, g));
        // compose linearized(f) with linearized(g): f(g(x))
        Poly lf = to_linearized(f), lg = to_linearized(g);
        Poly comp;
        for (size_t i = 0; i < lf.c.size(); ++i) {
            if (lf.c[i] == 0) continue;
            Poly gi = poly_pow(*F3, lg, (uint64_t)i);
            comp = poly_add(*F3, comp, poly_scale(*F3, lf.c[i], gi));
        }
        CHECK(lhs == comp);
    }
}

TEST_CASE("skew print format") {
    auto F = make_fq(7, 1);
    SkewPolyA f = skew_a(F, {Poly::constant(2), Poly::var(), Poly::constant(3)});
    CHECK(skew_to_string(f) == "(2) + (T)*t + (3)*t^2");
    SkewPolyF g = skew_f(F, 7, {2, 0, 3});
    CHECK(skew_to_string(g) == "2 + 3*t^2");
}
