#include "drincert/drinfeld.hpp"

#include <stdexcept>

namespace drincert {

std::string family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::Type1: return "Type1";
        case FamilyTag::Type2: return "Type2";
        default: return "NotInFamily";
    }
}

std::string reduction_type_name(ReductionType t) {
    switch (t) {
        case ReductionType::Good: return "good";
        case ReductionType::StableRank2: return "stable-of-rank-2";
        default: return "other";
    }
}

FamilyClass classify_family(const SmallField& F, const Poly& g1, const Poly& g2) {
    uint64_t q = F.size();
    Poly tq_t = poly_sub(F, Poly::monomial(1, (size_t)q), Poly::var());
    FamilyClass fc;
    fc.gcd_g1 = poly_gcd(F, g1, tq_t);
    fc.gcd_g2 = poly_gcd(F, g2, tq_t);
    bool g2_ok = fc.gcd_g2 == Poly::constant(1);
    if (g2_ok && fc.gcd_g1 == Poly::var())
        fc.tag = FamilyTag::Type1;
    else if (g2_ok && fc.gcd_g1 == make_monic(F, tq_t))
        fc.tag = FamilyTag::Type2;
    else
        fc.tag = FamilyTag::NotInFamily;
    return fc;
}

DrinfeldModule make_drinfeld(FieldSpec spec, Poly g1, Poly g2) {
    const SmallField& F = *spec.F;
    uint64_t q = F.size();
    DrinfeldModule m;
    m.spec = std::move(spec);
    m.family = classify_family(F, g1, g2);
    m.g1 = std::move(g1);
    m.g2 = std::move(g2);
    Poly d1 = m.g1.is_zero() ? Poly() : poly_pow(F, m.g1, q - 1);
    Poly d2 = m.g2.is_zero() ? Poly() : poly_pow(F, m.g2, q - 1);
    m.phiT = skew_a(m.spec.F, {Poly::var(), d1, d2, Poly::monomial(1, (size_t)q - 1)});
    return m;
}

SkewPolyA phi_of_generic(FieldPtr Fq, const SkewPolyA& phiT, const Poly& a) {
    if (a.is_zero()) return skew_a(Fq, {});
    SkewPolyA acc = skew_a(Fq, {Poly::constant(a.lead())});
    for (size_t i = a.c.size() - 1; i-- > 0;) {
        acc = skew_mul(acc, phiT);
        acc = skew_add(acc, skew_a(Fq, {Poly::constant(a.c[i])}));
    }
    return acc;
}

SkewPolyA phi_of(const DrinfeldModule& phi, const Poly& a) {
    return phi_of_generic(phi.spec.F, phi.phiT, a);
}

SkewPolyF ReducedModule::reduce_phi_a(const Poly& a) const {
    // Horner directly over the residue field; reduction commutes with phi
    if (a.is_zero()) return skew_f(R.K, R.Fq->size(), {});
    SkewPolyF acc = skew_f(R.K, R.Fq->size(), {R.eval_fq(a.lead())});
    for (size_t i = a.c.size() - 1; i-- > 0;) {
        acc = skew_mul(acc, psiT);
        acc = skew_add(acc, skew_f(R.K, R.Fq->size(), {R.eval_fq(a.c[i])}));
    }
    return acc;
}

ReducedModule reduce_at(const DrinfeldModule& phi, const PrimeIdeal& p) {
    ReducedModule rm;
    rm.prime = p;
    rm.R = make_residue_field(phi.spec.F, p);
    rm.psiT = skew_reduce(phi.phiT, rm.R);
    rm.parent_phiT = phi.phiT;
    FF d0 = rm.psiT.coeff(0);
    FF d2 = rm.psiT.coeff(2);
    FF d3 = rm.psiT.coeff(3);
    if (d3 != 0 && d0 != 0)
        rm.type = ReductionType::Good;
    else if (d2 != 0)
        rm.type = ReductionType::StableRank2;
    else
        rm.type = ReductionType::Other;
    return rm;
}

SkewPolyA carlitz_module(FieldPtr Fq) {
    return skew_a(std::move(Fq), {Poly::var(), Poly::constant(1)});
}

Poly carlitz_frobenius(const SmallField& F, const PrimeIdeal& p, const Poly& a) {
    if (a.is_zero() || a.degree_or(0) < 1)
        throw std::invalid_argument("carlitz_frobenius: modulus must be non-constant");
    if (poly_mod(F, a, p.gen).is_zero())
        throw std::domain_error("ramified");
    return poly_mod(F, p.gen, a);
}

}  // namespace drincert
