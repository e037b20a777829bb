#include "drincert/irred.hpp"

#include <stdexcept>

namespace drincert {

bool is_permutation_poly(const SmallField& F, const Poly& f) {
    if (f.degree_or(0) != 3) throw std::invalid_argument("is_permutation_poly: cubic required");
    std::vector<char> hit(F.size(), 0);
    for (uint64_t x = 0; x < F.size(); ++x) {
        FF y = poly_eval(F, f, (FF)x);
        if (hit[y]) return false;
        hit[y] = 1;
    }
    return true;
}

bool ms87_criterion(const SmallField& F, const Poly& f) {
    if (F.characteristic() == 3) throw std::domain_error("criterion requires p != 3");
    if (f.degree_or(0) != 3 || f.coeff(3) == 0)
        throw std::invalid_argument("ms87_criterion: cubic with a3 != 0 required");
    FF a3 = f.coeff(3), a2 = f.coeff(2), a1 = f.coeff(1);
    FF lhs = F.mul(a2, a2);
    FF rhs = F.scalar_mul(3, F.mul(a3, a1));
    return lhs == rhs && F.size() % 3 == 2;
}

IrredCertificate irred_at_T(const DrinfeldModule& phi) {
    if (!phi.in_family()) throw std::invalid_argument("irred_at_T: module not in family");
    const SmallField& F = phi.F();
    IrredCertificate cert;
    cert.ideal = make_prime_ideal(F, Poly::var());
    cert.method = IrredMethod::EtaCollision;
    // eta(x) = x^3 + x^2 + x (Type 1) or x^3 + x^2 (Type 2)
    bool type1 = phi.family.tag == FamilyTag::Type1;
    cert.eta = Poly(type1 ? std::vector<FF>{0, 1, 1, 1} : std::vector<FF>{0, 0, 1, 1});

    // collision scan in enumeration order
    std::vector<int64_t> seen(F.size(), -1);
    bool found = false;
    for (uint64_t x = 0; x < F.size() && !found; ++x) {
        FF y = poly_eval(F, cert.eta, (FF)x);
        if (seen[y] >= 0) {
            cert.collision_x1 = (FF)seen[y];
            cert.collision_x2 = (FF)x;
            found = true;
        } else {
            seen[y] = (int64_t)x;
        }
    }
    if (!found) throw std::runtime_error("irreducibility certificate failed");

    // c in F_q^x with -c not a value of eta; M_c = eta + c is then root-free
    std::vector<char> image(F.size(), 0);
    for (uint64_t x = 0; x < F.size(); ++x) image[poly_eval(F, cert.eta, (FF)x)] = 1;
    bool have_c = false;
    for (uint64_t c = 1; c < F.size(); ++c) {
        if (image[F.neg((FF)c)]) continue;
        cert.witness_c = (FF)c;
        cert.m_c = poly_add(F, cert.eta, Poly::constant((FF)c));
        have_c = true;
        break;
    }
    if (!have_c) throw std::runtime_error("irreducibility certificate failed");
    if (!is_irreducible(F, cert.m_c)) throw std::runtime_error("irreducibility certificate failed");
    cert.ok = true;
    return cert;
}

IrredCertificate irred_zeta_scan(const DrinfeldModule& phi, const PrimeIdeal& l) {
    if (!phi.in_family()) throw std::invalid_argument("irred_zeta_scan: module not in family");
    const SmallField& F = phi.F();
    if (l.gen == Poly::var()) throw std::invalid_argument("irred_zeta_scan: l = (T) not handled here");
    IrredCertificate cert;
    cert.ideal = l;
    cert.method = IrredMethod::ZetaScan;
    ResidueField R = make_residue_field(phi.spec.F, l);
    const SmallField& K = *R.K;

    // usable degree-1 primes (T - c), c != 0, (T - c) != l
    struct P1 {
        FF c;
        FF p_bar;           // image of T - c in F_l
        std::vector<FF> pc;  // monic charpoly coefficients mod l
    };
    std::vector<P1> primes;
    for (uint64_t c = 1; c < F.size(); ++c) {
        Poly gen = poly_sub(F, Poly::var(), Poly::constant((FF)c));
        if (gen == l.gen) continue;
        FrobCharPoly P = frob_charpoly_deg1(phi, (FF)c);
        CharpolyModL pm = charpoly_mod(P, R);
        primes.push_back({(FF)c, R.reduce(gen), pm.c});
    }
    if (primes.size() < 3)
        throw std::runtime_error("irred_zeta_scan: fewer than 3 usable degree-1 primes");

    auto eval_cubic = [&](const std::vector<FF>& c, FF x) {
        FF r = 0;
        for (size_t i = c.size(); i-- > 0;) r = K.add(K.mul(r, x), c[i]);
        return r;
    };

    bool all_fail = true;
    for (uint64_t z = 1; z < K.size(); ++z) {
        ZetaRow row;
        row.zeta = (FF)z;
        FF zinv = K.inv((FF)z);
        for (const P1& p : primes) {
            FF root_a = K.mul(zinv, p.p_bar);
            FF va = eval_cubic(p.pc, root_a);
            if (va != 0) {
                row.a_failed = true;
                row.fail_prime_a_c = p.c;
                row.fail_value_a = va;
                break;
            }
        }
        for (const P1& p : primes) {
            FF vb = eval_cubic(p.pc, (FF)z);
            if (vb != 0) {
                row.b_failed = true;
                row.fail_prime_b_c = p.c;
                row.fail_value_b = vb;
                break;
            }
        }
        if (!row.a_failed || !row.b_failed) all_fail = false;
        cert.table.push_back(row);
    }
    cert.ok = all_fail;
    return cert;
}

bool irred_certificate_reverify(const DrinfeldModule& phi, const IrredCertificate& cert) {
    const SmallField& F = phi.F();
    if (cert.method == IrredMethod::EtaCollision) {
        if (cert.collision_x1 == cert.collision_x2) return false;
        if (poly_eval(F, cert.eta, cert.collision_x1) != poly_eval(F, cert.eta, cert.collision_x2))
            return false;
        if (cert.witness_c == 0) return false;
        for (uint64_t x = 0; x < F.size(); ++x)
            if (poly_eval(F, cert.m_c, (FF)x) == 0) return false;
        return true;
    }
    // zeta scan: re-evaluate each recorded failing value
    ResidueField R = make_residue_field(phi.spec.F, cert.ideal);
    const SmallField& K = *R.K;
    if (cert.table.size() != K.size() - 1) return false;
    for (const ZetaRow& row : cert.table) {
        if (!row.a_failed || !row.b_failed) return false;
        for (int scenario = 0; scenario < 2; ++scenario) {
            FF c = scenario == 0 ? row.fail_prime_a_c : row.fail_prime_b_c;
            FrobCharPoly P = frob_charpoly_deg1(phi, c);
            CharpolyModL pm = charpoly_mod(P, R);
            Poly gen = poly_sub(F, Poly::var(), Poly::constant(c));
            FF p_bar = R.reduce(gen);
            FF root = scenario == 0 ? K.mul(K.inv(row.zeta), p_bar) : row.zeta;
            FF v = 0;
            for (size_t i = pm.c.size(); i-- > 0;) v = K.add(K.mul(v, root), pm.c[i]);
            FF recorded = scenario == 0 ? row.fail_value_a : row.fail_value_b;
            if (v == 0 || v != recorded) return false;
        }
    }
    return true;
}

}  // namespace drincert
