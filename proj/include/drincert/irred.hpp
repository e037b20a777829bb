#pragma once

#include <optional>
#include <vector>

#include "drincert/drinfeld.hpp"
#include "drincert/frobenius.hpp"

namespace drincert {

// x -> f(x) bijective on F_q, by exhaustive evaluation. deg f == 3 required.
bool is_permutation_poly(const SmallField& F, const Poly& f);

// f = a3 x^3 + a2 x^2 + a1 x + a0 with a3 != 0 permutes F_q iff
// a2^2 = 3 a3 a1 and q = 2 (mod 3). Characteristic 3 is out of range.
bool ms87_criterion(const SmallField& F, const Poly& f);

enum class IrredMethod { EtaCollision, ZetaScan };

struct ZetaRow {
    FF zeta = 0;
    // scenario A mandates root zeta^{-1} p_bar; B mandates root zeta
    FF fail_prime_a_c = 0;  // the c of the first failing prime (T-c)
    FF fail_value_a = 0;    // nonzero P_bar(root)
    FF fail_prime_b_c = 0;
    FF fail_value_b = 0;
    bool a_failed = false, b_failed = false;
};

struct IrredCertificate {
    PrimeIdeal ideal;
    IrredMethod method = IrredMethod::EtaCollision;
    bool ok = false;

    // eta-collision witness (l = (T)): eta(x1) = eta(x2) with x1 != x2, and a
    // c in F_q^x with M_c root-free over F_q
    FF collision_x1 = 0, collision_x2 = 0;
    FF witness_c = 0;
    Poly eta;  // x^3+x^2+x (Type 1) or x^3+x^2 (Type 2)
    Poly m_c;

    // zeta-scan table (l != (T))
    std::vector<ZetaRow> table;
};

// l = (T): exhibits the non-injectivity of eta and a c with M_c irreducible.
IrredCertificate irred_at_T(const DrinfeldModule& phi);

// l != (T): for every zeta in F_l^x and both factorization scenarios, finds a
// degree-1 prime p not in {(T), l} whose mod-l charpoly misses the mandated
// root. A complete failure table certifies irreducibility against
// 1-dimensional sub/quotient representations (the unramified dichotomy is an
// imported case split).
IrredCertificate irred_zeta_scan(const DrinfeldModule& phi, const PrimeIdeal& l);

// re-verify a certificate by direct evaluation (tests and report integrity)
bool irred_certificate_reverify(const DrinfeldModule& phi, const IrredCertificate& cert);

}  // namespace drincert
