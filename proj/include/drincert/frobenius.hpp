#pragma once

#include <array>
#include <optional>

#include "drincert/drinfeld.hpp"
#include "drincert/extfield.hpp"
#include "drincert/linalg.hpp"

namespace drincert {

// P(x) = x^r + a[1] x^(r-1) + ... + a[r-1] x - mu * p, coefficients in A,
// mu in F_q^x. The family's rank is 3; rank 1 covers the Carlitz module.
struct FrobCharPoly {
    PrimeIdeal prime;
    int rank = 3;
    std::vector<Poly> a;  // a[i] for i = 1..rank-1; a[0] unused
    FF mu = 1;

    const Poly& a1() const { return a[1]; }
    const Poly& a2() const { return a[2]; }
    // constant term -mu*p as a polynomial
    Poly constant_term(const SmallField& F) const {
        return poly_scale(F, F.neg(mu), prime.gen);
    }
};

// Closed form at p = (T-c), c != 0, for family members:
// P = x^3 + x^2 + g1(c)^(q-1) x - (T-c).
FrobCharPoly frob_charpoly_deg1(const DrinfeldModule& phi, FF c);

// Exact linear solve of pi^r + psi_{a1} pi^(r-1) + ... - mu psi_p = 0 over
// F_p with pi = tau^deg(p); degree bounds deg a_i <= ceil(i*d/r). Unique
// solution; "internal: charpoly system degenerate" is a bug trap.
FrobCharPoly frob_charpoly_solve(const ReducedModule& psi);

struct FrobMatrix {
    ResidueField Fl;
    Mat m;           // rank x rank over Fl.K, column j = image of basis j
    int rank = 3;    // 1 for the Carlitz specialization
    uint32_t splitting_degree = 0;          // [roots field : F_p]
    std::vector<std::vector<FF>> basis;     // chosen F_l-basis, flattened F_q coords
};

// Independent oracle: torsion points of phi[l] over the reduction at p,
// Frobenius x -> x^{|F_p|} expressed on an F_l-basis of the kernel. The rank
// is tau_deg(psi_l) / deg(l): 3 for the family, 1 for the Carlitz module.
FrobMatrix frob_matrix_oracle(const ReducedModule& psi, const PrimeIdeal& l);

// P mod a for a prime modulus l (residue field), as monic coefficients
// c[0..rank] with c[rank] = 1, plus trace/det and the two functionals when
// defined (tr3/det needs tr invertible for det/tr3... the absent cases are
// signalled, not thrown).
struct CharpolyModL {
    std::vector<FF> c;  // length rank+1, monic
    FF trace = 0, det = 0;
    std::optional<FF> tr3_over_det;
    std::optional<FF> det_over_tr3;
};
CharpolyModL charpoly_mod(const FrobCharPoly& P, const ResidueField& R);

// P mod a for an arbitrary modulus (ResidueRing indices).
struct CharpolyModRing {
    std::vector<uint64_t> c;
    uint64_t trace = 0, det = 0;
    std::optional<uint64_t> tr3_over_det;
    std::optional<uint64_t> det_over_tr3;
};
CharpolyModRing charpoly_mod(const FrobCharPoly& P, const ResidueRing& ring);

}  // namespace drincert
