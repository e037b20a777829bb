#include <doctest.h>

#include "drincert/certify.hpp"

using namespace drincert;

TEST_CASE("verdict aggregation and mutation sensitivity") {
    std::vector<Check> checks(4);
    checks[0] = {"a", CheckStatus::Verified, "", json::object()};
    checks[1] = {"b", CheckStatus::Cited, "", json::object()};
    checks[2] = {"c", CheckStatus::NotApplicable, "", json::object()};
    checks[3] = {"d", CheckStatus::Verified, "", json::object()};
    CHECK(verdict_from_checks(checks) == "surjective");
    // flipping any single check to failed flips the verdict
    for (size_t i = 0; i < checks.size(); ++i) {
        auto mutated = checks;
        mutated[i].status = CheckStatus::Failed;
        CHECK(verdict_from_checks(mutated) == "failed(" + mutated[i].name + ")");
    }
}

TEST_CASE("certify_mod_l at (T) and at a degree-1 prime") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    CertifyOptions opt;

    DrinfeldModule t2 = make_drinfeld(s, Poly(), Poly::constant(1));
    auto pT = make_prime_ideal(F, Poly::var());
    Certificate cT = certify_mod_l(t2, pT, opt);
    CHECK(cT.surjective);
    CHECK(cT.verdict == "surjective");

    DrinfeldModule t1 = make_drinfeld(s, Poly::var(), Poly::constant(1));
    auto p3 = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(3)));
    Certificate c3 = certify_mod_l(t1, p3, opt);
    CHECK(c3.surjective);
    // every expected check is present with a passing status
    std::vector<std::string> names;
    for (const auto& ch : c3.checks) names.push_back(ch.name);
    CHECK(names == std::vector<std::string>{"family", "det_full_mod_l", "irreducible",
                                            "inertia_divisor", "center_in_image_closure",
                                            "aschbacher_sieve"});
}

TEST_CASE("negative control: not in family short-circuits") {
    FieldSpec s = make_field_spec(7, 1);
    DrinfeldModule bad = make_drinfeld(s, Poly::monomial(1, 2), Poly::var());
    auto pT = make_prime_ideal(*s.F, Poly::var());
    CertifyOptions opt;
    Certificate c = certify_mod_l(bad, pT, opt);
    CHECK_FALSE(c.surjective);
    CHECK(c.verdict == "failed(family)");
    CHECK(c.checks.size() == 1);
}

TEST_CASE("l-adic lifting checks") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    CertifyOptions opt;

    // (0,1) at (T): valuation witness path
    DrinfeldModule t2 = make_drinfeld(s, Poly(), Poly::constant(1));
    auto pT = make_prime_ideal(F, Poly::var());
    Certificate cT = certify_mod_l(t2, pT, opt);
    REQUIRE(cT.surjective);
    certify_l_adic(t2, pT, opt, cT);
    CHECK(cT.surjective);
    bool saw_witness = false, saw_det2 = false;
    for (const auto& ch : cT.checks) {
        if (ch.name == "nonscalar_witness_mod_l2") {
            saw_witness = true;
            CHECK(ch.status == CheckStatus::Verified);
            CHECK(ch.data["scalar_min"] == "-1/49");
            CHECK(ch.data["root_valuation"] == "-1/2401");
        }
        if (ch.name == "det_full_mod_l2") {
            saw_det2 = true;
            CHECK(ch.status == CheckStatus::Verified);
            CHECK(ch.data["unit_group_order"] == 42);  // |(A/T^2)^x| = q(q-1)
        }
    }
    CHECK(saw_witness);
    CHECK(saw_det2);

    // (T,1) at (T-1): cited inertia-shape path with divisor corroboration
    DrinfeldModule t1 = make_drinfeld(s, Poly::var(), Poly::constant(1));
    auto p1 = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(1)));
    Certificate c1 = certify_mod_l(t1, p1, opt);
    REQUIRE(c1.surjective);
    certify_l_adic(t1, p1, opt, c1);
    CHECK(c1.surjective);
    for (const auto& ch : c1.checks) {
        if (ch.name == "nonscalar_witness_mod_l2") {
            CHECK(ch.status == CheckStatus::Cited);
            CHECK(ch.data["corroborating_inertia_divisor"] == 49);
        }
        if (ch.name == "det_full_mod_l2")
            CHECK(ch.data["unit_group_order"] == 42);
    }
}

TEST_CASE("pair certificates") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    CertifyOptions opt;
    DrinfeldModule t1 = make_drinfeld(s, Poly::var(), Poly::constant(1));
    auto l1 = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(1)));
    auto l2 = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(2)));
    Certificate c1 = certify_mod_l(t1, l1, opt);
    Certificate c2 = certify_mod_l(t1, l2, opt);
    REQUIRE(c1.surjective);
    REQUIRE(c2.surjective);
    PairCertificate pc = certify_pair(t1, l1, l2, c1, c2);
    CHECK(pc.surjective);
    for (const auto& ch : pc.checks) {
        if (ch.name == "subring_full") CHECK(ch.status == CheckStatus::Verified);
        if (ch.name == "second_type_refuted") CHECK(ch.status == CheckStatus::Verified);
    }

    // degree mismatch: coset test not applicable, remaining checks run
    Poly t2p1 = poly_add(F, Poly::monomial(1, 2), Poly::constant(1));
    auto ldeg2 = make_prime_ideal(F, t2p1);
    Certificate cd2 = certify_mod_l(t1, ldeg2, opt);
    REQUIRE(cd2.surjective);
    PairCertificate mixed = certify_pair(t1, l1, ldeg2, c1, cd2);
    CHECK(mixed.surjective);
    for (const auto& ch : mixed.checks)
        if (ch.name == "second_type_refuted") CHECK(ch.status == CheckStatus::NotApplicable);

    // Type 2 pair: refuted by the trace-zero argument
    DrinfeldModule t2m = make_drinfeld(s, Poly(), Poly::constant(1));
    Certificate d1 = certify_mod_l(t2m, l1, opt);
    Certificate d2 = certify_mod_l(t2m, l2, opt);
    PairCertificate pc2 = certify_pair(t2m, l1, l2, d1, d2);
    CHECK(pc2.surjective);
}

TEST_CASE("run_report: determinism, schema, exit semantics") {
    CertifyConfig cfg;
    cfg.q = 7;
    cfg.g1_text = "0";
    cfg.g2_text = "1";
    cfg.opt.max_deg = 1;
    cfg.opt.pairs = true;
    cfg.format = "json";
    Report r1 = run_report(cfg);
    Report r2 = run_report(cfg);
    CHECK(r1.doc.dump(2) == r2.doc.dump(2));  // byte-identical
    CHECK(r1.all_surjective);
    CHECK(r1.doc["summary"]["n_certificates"] == 7);
    CHECK(r1.doc["summary"]["n_pairs"] == 21);
    // schema: each check has the four fields with a valid status
    for (const auto& cert : r1.doc["certificates"]) {
        CHECK(cert.contains("ideal"));
        CHECK(cert.contains("verdict"));
        for (const auto& ch : cert["checks"]) {
            CHECK(ch.contains("name"));
            CHECK(ch.contains("status"));
            CHECK(ch.contains("paper_anchor"));
            CHECK(ch.contains("data"));
            std::string st = ch["status"];
            CHECK((st == "verified" || st == "cited" || st == "failed" || st == "not-applicable"));
        }
    }
    CHECK(r1.doc["adelic"]["status"] == "cited");
}

TEST_CASE("config validation") {
    CertifyConfig cfg;
    cfg.q = 5;
    cfg.g1_text = "0";
    cfg.g2_text = "1";
    cfg.opt.max_deg = 1;
    CHECK_THROWS_AS(run_report(cfg), ConfigError);
    cfg.opt.allow_small_q = true;
    Report r = run_report(cfg);
    CHECK_FALSE(r.all_surjective);
    for (const auto& cert : r.doc["certificates"]) {
        std::string v = cert["verdict"];
        CHECK(v.find("out-of-scope") == 0);
    }

    CertifyConfig even;
    even.q = 8;
    CHECK_THROWS_AS(run_report(even), ConfigError);
    CertifyConfig notpp;
    notpp.q = 12;
    CHECK_THROWS_AS(run_report(notpp), ConfigError);
    CertifyConfig badpoly;
    badpoly.q = 7;
    badpoly.g1_text = "T + + 1";
    CHECK_THROWS_AS(run_report(badpoly), ConfigError);
}

TEST_CASE("degree caps give out-of-scope verdicts, not exceptions") {
    FieldSpec s = make_field_spec(7, 1);
    const SmallField& F = *s.F;
    DrinfeldModule phi = make_drinfeld(s, Poly(), Poly::constant(1));
    Poly t2p1 = poly_add(F, Poly::monomial(1, 2), Poly::constant(1));
    auto l = make_prime_ideal(F, t2p1);
    CertifyOptions opt;
    opt.scan_cap = 1;
    Certificate c = certify_mod_l(phi, l, opt);
    CHECK_FALSE(c.surjective);
    CHECK(c.verdict == "out-of-scope(zeta-scan degree cap 1)");
    opt = CertifyOptions{};
    opt.max_deg = 1;
    Certificate c2 = certify_mod_l(phi, l, opt);
    CHECK(c2.verdict == "out-of-scope(degree cap 1)");
}

TEST_CASE("non-prime q via the canonical and explicit modulus") {
    CertifyConfig cfg;
    cfg.q = 9;
    cfg.g1_text = "0";
    cfg.g2_text = "1";
    cfg.opt.max_deg = 1;
    Report r = run_report(cfg);
    CHECK(r.all_surjective);
    CHECK(r.doc["meta"]["config"]["ext_modulus"] == "u^2 + 1");

    cfg.ext_modulus = "u^2 + u + 2";  // another irreducible over F_3
    Report r2 = run_report(cfg);
    CHECK(r2.all_surjective);
}
