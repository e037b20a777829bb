#pragma once

#include <string>

#include "drincert/algebra.hpp"
#include "drincert/skew.hpp"

namespace drincert {

enum class FamilyTag { Type1, Type2, NotInFamily };

std::string family_tag_name(FamilyTag t);

struct FamilyClass {
    FamilyTag tag = FamilyTag::NotInFamily;
    Poly gcd_g1;  // gcd(g1, T^q - T)
    Poly gcd_g2;  // gcd(g2, T^q - T)
};

// Type 1: (g1, T^q-T) = T and (g2, T^q-T) = 1.
// Type 2: (g1, T^q-T) = T^q-T and (g2, T^q-T) = 1.
FamilyClass classify_family(const SmallField& F, const Poly& g1, const Poly& g2);

// The rank-3 module phi_T = T + g1^(q-1) tau + g2^(q-1) tau^2 + T^(q-1) tau^3.
struct DrinfeldModule {
    FieldSpec spec;
    Poly g1, g2;
    FamilyClass family;
    SkewPolyA phiT;  // cached coefficients (T, g1^(q-1), g2^(q-1), T^(q-1))

    const SmallField& F() const { return *spec.F; }
    uint64_t q() const { return spec.q(); }
    bool in_family() const { return family.tag != FamilyTag::NotInFamily; }
};

DrinfeldModule make_drinfeld(FieldSpec spec, Poly g1, Poly g2);

// The ring map a -> phi_a, Horner composition in T so every step multiplies
// by the tau-degree-3 generator image.
SkewPolyA phi_of(const DrinfeldModule& phi, const Poly& a);
// Same, from a bare phi_T (used on reductions and by the Carlitz module).
SkewPolyA phi_of_generic(FieldPtr Fq, const SkewPolyA& phiT, const Poly& a);

enum class ReductionType { Good, StableRank2, Other };

std::string reduction_type_name(ReductionType t);

struct ReducedModule {
    PrimeIdeal prime;
    ResidueField R;
    SkewPolyF psiT;       // phi_T with coefficients reduced mod prime
    ReductionType type = ReductionType::Other;
    SkewPolyA parent_phiT;  // for torsion polynomials phi_a mod prime

    SkewPolyF reduce_phi_a(const Poly& a) const;
};

ReducedModule reduce_at(const DrinfeldModule& phi, const PrimeIdeal& p);

// Carlitz module C_T = T + tau over F_q.
SkewPolyA carlitz_module(FieldPtr Fq);
// Hayes: the class of the monic generator of p in (A/a)^x; error if p | a.
Poly carlitz_frobenius(const SmallField& F, const PrimeIdeal& p, const Poly& a);

}  // namespace drincert
