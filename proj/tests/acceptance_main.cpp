// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "drincert/certify.hpp"
#include "drincert/frobenius.hpp"
#include "drincert/gl3.hpp"
#include "drincert/irred.hpp"
#include "drincert/valuation.hpp"

using namespace drincert;

namespace {

int g_failures = 0;

void run(int number, const std::string& label, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                secs, err.empty() ? "" : " error: ", err.c_str());
    if (!ok) ++g_failures;
}

// closed forms of the seven tau-coefficients of phi_{T^2}
std::vector<Poly> phi_t2_closed_form(const SmallField& F, const Poly& g1, const Poly& g2) {
    uint64_t q = F.size(), q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    auto P = [&](const Poly& g, uint64_t e) { return g.is_zero() ? Poly() : poly_pow(F, g, e); };
    auto Tp = [&](uint64_t e) { return Poly::monomial(1, (size_t)e); };
    auto M = [&](const Poly& a, const Poly& b) { return poly_mul(F, a, b); };
    auto A2 = [&](const Poly& a, const Poly& b) { return poly_add(F, a, b); };
    std::vector<Poly> c(7);
    c[0] = Tp(2);
    c[1] = A2(M(Tp(1), P(g1, q - 1)), M(Tp(q), P(g1, q - 1)));
    c[2] = A2(A2(M(Tp(1), P(g2, q - 1)), P(g1, q2 - 1)), M(Tp(q2), P(g2, q - 1)));
    c[3] = A2(A2(Tp(q), M(P(g1, q - 1), P(g2, q2 - q))),
              A2(M(P(g1, q3 - q2), P(g2, q - 1)), Tp(q3 + q - 1)));
    c[4] = A2(A2(M(Tp(q2 - q), P(g1, q - 1)), P(g2, q3 - q2 + q - 1)),
              M(Tp(q - 1), P(g1, q4 - q3)));
    c[5] = A2(M(Tp(q3 - q2), P(g2, q - 1)), M(Tp(q - 1), P(g2, q4 - q3)));
    c[6] = Tp(q4 - q3 + q - 1);
    return c;
}

std::vector<std::pair<Poly, Poly>> family_members(const FieldSpec& s) {
    const SmallField& F = *s.F;
    // (0, 1), (T, 1), and (T, d) for the first irreducible quadratic d
    Poly quad;
    for (const auto& p : enum_primes(F, 2))
        if (p.degree == 2) {
            quad = p.gen;
            break;
        }
    return {{Poly(), Poly::constant(1)}, {Poly::var(), Poly::constant(1)}, {Poly::var(), quad}};
}

}  // namespace

int main() {
    run(1, "phi_{T^2} symbolic match at three (g1, g2) pairs, q = 7", [] {
        FieldSpec s = make_field_spec(7, 1);
        const SmallField& F = *s.F;
        Poly t2p1 = poly_add(F, Poly::monomial(1, 2), Poly::constant(1));
        Poly t2pt1 = poly_add(F, poly_add(F, Poly::monomial(1, 2), Poly::var()), Poly::constant(1));
        std::vector<std::pair<Poly, Poly>> pairs = {
            {Poly(), Poly::constant(1)}, {Poly::var(), Poly::constant(1)}, {t2pt1, t2p1}};
        for (auto& [g1, g2] : pairs) {
            DrinfeldModule phi = make_drinfeld(s, g1, g2);
            SkewPolyA got = phi_of(phi, Poly::monomial(1, 2));
            auto want = phi_t2_closed_form(F, g1, g2);
            if (got.c.size() != 7) return false;
            for (int i = 0; i < 7; ++i)
                if (!(got.c[(size_t)i] == want[(size_t)i])) return false;
        }
        return true;
    });

    run(2, "degree-1 charpoly law (a1 = 1, a2 = g1(c)^(q-1), const -(T-c)) for q in {7,9,11}", [] {
        for (auto [p, e] : std::vector<std::pair<uint32_t, uint32_t>>{{7, 1}, {3, 2}, {11, 1}}) {
            FieldSpec s = make_field_spec(p, e);
            const SmallField& F = *s.F;
            for (bool type1 : {true, false}) {
                DrinfeldModule phi =
                    make_drinfeld(s, type1 ? Poly::var() : Poly(), Poly::constant(1));
                if (!phi.in_family()) return false;
                for (uint64_t c = 1; c < F.size(); ++c) {
                    auto pr =
                        make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant((FF)c)));
                    FrobCharPoly P = frob_charpoly_solve(reduce_at(phi, pr));
                    if (!(P.a1() == Poly::constant(1))) return false;
                    FF g1c = poly_eval(F, phi.g1, (FF)c);
                    Poly want_a2 = Poly::constant(g1c == 0 ? 0 : F.pow(g1c, F.size() - 1));
                    if (!(P.a2() == want_a2)) return false;
                    if (P.mu != 1) return false;
                }
            }
        }
        return true;
    });

    run(3, "oracle equivalence and det = p_bar over all degree-1 (p, l), q = 7", [] {
        FieldSpec s = make_field_spec(7, 1);
        const SmallField& F = *s.F;
        for (bool type1 : {true, false}) {
            DrinfeldModule phi = make_drinfeld(s, type1 ? Poly::var() : Poly(), Poly::constant(1));
            for (FF pc = 1; pc < 7; ++pc) {
                auto pr = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(pc)));
                ReducedModule rm = reduce_at(phi, pr);
                FrobCharPoly P = frob_charpoly_solve(rm);
                for (FF lc = 1; lc < 7; ++lc) {
                    if (lc == pc) continue;
                    auto l = make_prime_ideal(F, poly_sub(F, Poly::var(), Poly::constant(lc)));
                    FrobMatrix M = frob_matrix_oracle(rm, l);
                    ResidueField R = make_residue_field(s.F, l);
                    if (charpoly(*R.K, M.m) != charpoly_mod(P, R).c) return false;
                    if (mat_det(*R.K, M.m) != R.reduce(pr.gen)) return false;
                }
            }
        }
        return true;
    });

    run(4, "permutation criterion vs brute force on all monic cubics, q in {5,7,11,13}", [] {
        for (uint32_t q : {5u, 7u, 11u, 13u}) {
            auto F = make_fq(q, 1);
            for (uint64_t idx = 0; idx < (uint64_t)q * q * q; ++idx) {
                uint64_t v = idx;
                Poly f({(FF)(v % q), (FF)(v / q % q), (FF)(v / q / q % q), 1});
                if (ms87_criterion(*F, f) != is_permutation_poly(*F, f)) return false;
            }
        }
        return true;
    });

    run(5, "Newton polygon numbers for phi_T/x and phi_{T^2}/x, q in {7,9,11}", [] {
        for (auto [p, e] : std::vector<std::pair<uint32_t, uint32_t>>{{7, 1}, {3, 2}, {11, 1}}) {
            FieldSpec s = make_field_spec(p, e);
            int64_t q = (int64_t)s.q(), q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q;
            for (auto& [g1, g2] : family_members(s)) {
                DrinfeldModule phi = make_drinfeld(s, g1, g2);
                if (!phi.in_family()) return false;
                NewtonPolygon npT = newton_polygon(phi_coeff_valuations(phi, Poly::var()));
                bool okT = false;
                for (const auto& seg : npT.segments)
                    if (seg.slope == Rat(1, q2) && seg.length == q3 - q2) okT = true;
                NewtonPolygon npT2 =
                    newton_polygon(phi_coeff_valuations(phi, Poly::monomial(1, 2)));
                bool okT2 = false;
                for (const auto& seg : npT2.segments)
                    if (seg.slope == Rat(1, q4) && seg.length == q5 - q4) okT2 = true;
                if (!okT || !okT2) return false;
            }
        }
        return true;
    });

    run(6, "inertia identity and z-valuation -q^(-2 deg l), q in {7,9,11}, deg in {1,2,3}", [] {
        for (auto [p, e] : std::vector<std::pair<uint32_t, uint32_t>>{{7, 1}, {3, 2}, {11, 1}}) {
            FieldSpec s = make_field_spec(p, e);
            const SmallField& F = *s.F;
            long long q = (long long)s.q();
            DrinfeldModule phi = make_drinfeld(s, Poly::var(), Poly::constant(1));
            for (int d = 1; d <= 3; ++d) {
                PrimeIdeal l;
                bool got = false;
                for (const auto& pr : enum_primes(F, d))
                    if (pr.degree == d && !(pr.gen == Poly::var())) {
                        l = pr;
                        got = true;
                        break;
                    }
                if (!got) return false;
                InertiaReport rep = inertia_order(phi, l);
                Rat expect(-1);
                for (int i = 0; i < 2 * d; ++i) expect = expect / Rat(q);
                if (!(rep.z_valuation == expect)) return false;
                if (!rep.identity_check) return false;
            }
        }
        return true;
    });

    run(7, "Aschbacher sieve excludes all nine classes for q' in {7, 49, 343}", [] {
        for (uint64_t qp : {7ull, 49ull, 343ull}) {
            SieveEvidence ev{qp, true, qp * qp, true, true};
            SieveVerdict v = aschbacher_sieve(ev);
            if (!v.surjective) return false;
            if (v.classes.size() != 9) return false;
        }
        // the S-class orders used are exactly 1080, 2160, 7560 plus the
        // PSL3(2)-based 168/504 cases
        ClassicalOrders t7 = classical_orders(7);
        if (t7.s_class[0].value_str() != "504") return false;   // gcd(3,6) = 3
        ClassicalOrders t11 = classical_orders(11);
        if (t11.s_class[0].value_str() != "168") return false;  // gcd(3,10) = 1
        for (const auto* t : {&t7, &t11}) {
            if ((*t).s_class[1].value_str() != "1080") return false;
            if ((*t).s_class[2].value_str() != "2160") return false;
            if ((*t).s_class[3].value_str() != "7560") return false;
        }
        return true;
    });

    run(8, "brute-force normal-solvable-center check for q in {2, 3}", [] {
        NormalSolvableReport r2 = normal_solvable_center_check(2);
        if (!r2.ok || !r2.sl3_detected_nonsolvable) return false;
        NormalSolvableReport r3 = normal_solvable_center_check(3);
        if (!r3.ok) return false;
        if (r3.group_order != 11232) return false;
        bool sl3_seen = false, center_seen = false;
        for (const auto& n : r3.normal_subgroups) {
            if (n.is_sl3 && !n.solvable) sl3_seen = true;
            if (n.is_center && n.order == 2) center_seen = true;
        }
        return sl3_seen && center_seen && r3.all_solvable_central;
    });

    run(9, "end-to-end certify (q 7, g1 0, g2 1, max-deg 2, pairs): all surjective, deterministic", [] {
        CertifyConfig cfg;
        cfg.q = 7;
        cfg.g1_text = "0";
        cfg.g2_text = "1";
        cfg.opt.max_deg = 2;
        cfg.opt.pairs = true;
        Report r1 = run_report(cfg);
        Report r2 = run_report(cfg);
        if (r1.doc.dump(2) != r2.doc.dump(2)) return false;
        if (!r1.all_surjective) return false;
        if (r1.doc["summary"]["n_certificates"] != 28) return false;
        if (r1.doc["summary"]["n_pairs"] != 28 * 27 / 2) return false;
        // every check is verified, cited, or not-applicable; the only
        // not-applicable entries are second-type tests on unequal residues
        auto scan = [](const json& certs, bool pair_section) {
            for (const auto& cert : certs) {
                if (cert["verdict"] != "surjective") return false;
                for (const auto& ch : cert["checks"]) {
                    std::string st = ch["status"];
                    if (st == "failed") return false;
                    if (st == "not-applicable" &&
                        !(pair_section && ch["name"] == "second_type_refuted"))
                        return false;
                }
            }
            return true;
        };
        return scan(r1.doc["certificates"], false) && scan(r1.doc["pairs"], true);
    });

    run(10, "negative controls: NotInFamily rejection and sieve mutation", [] {
        FieldSpec s = make_field_spec(7, 1);
        DrinfeldModule bad = make_drinfeld(s, Poly::monomial(1, 2), Poly::var());
        if (bad.family.tag != FamilyTag::NotInFamily) return false;
        CertifyOptions opt;
        Certificate c = certify_mod_l(bad, make_prime_ideal(*s.F, Poly::var()), opt);
        if (c.surjective || c.verdict != "failed(family)") return false;
        // sieve with divisor 1 instead of (q')^2 must FAIL
        SieveEvidence ev{7, true, 1, true, true};
        SieveVerdict v = aschbacher_sieve(ev);
        if (v.surjective) return false;
        bool c2_failed = false;
        for (const auto& cl : v.classes)
            if (cl.cls == "C2" && cl.outcome == ClassOutcome::Failed) c2_failed = true;
        return c2_failed;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
