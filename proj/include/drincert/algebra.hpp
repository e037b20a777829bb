#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "drincert/poly.hpp"
#include "drincert/smallfield.hpp"

namespace drincert {

// F_q = F_p[u]/(modulus), the coefficient field of A = F_q[T]. The modulus is
// the lexicographically least monic irreducible of degree e unless overridden.
struct FieldSpec {
    uint32_t p = 0;
    uint32_t e = 1;
    FieldPtr F;  // the concrete field

    uint64_t q() const { return F->size(); }
};

// p must be an odd prime. q >= 7 is enforced where the family is
// instantiated, not here (brute-force oracles may use smaller q).
FieldSpec make_field_spec(uint32_t p, uint32_t e);
FieldSpec make_field_spec(uint32_t p, const std::vector<FF>& modulus);

// A monic irreducible of A = F_q[T], doubling as the ideal it generates.
struct PrimeIdeal {
    Poly gen;  // monic irreducible
    int degree = 0;

    bool operator==(const PrimeIdeal& o) const { return gen == o.gen; }
    bool operator<(const PrimeIdeal& o) const { return gen.lex_less(o.gen); }
};

PrimeIdeal make_prime_ideal(const SmallField& F, const Poly& gen);

// All monic irreducibles of degree <= max_degree, ordered by (degree,
// coefficient tuple low-power-least-significant), minus `exclude`.
std::vector<PrimeIdeal> enum_primes(const SmallField& F, int max_degree,
                                    const std::vector<PrimeIdeal>& exclude = {});

// Residue field F_l = A/l with elements carried by a SmallField whose
// coordinates over F_q are the coefficients of the canonical representative
// of degree < deg(l).
struct ResidueField {
    FieldPtr Fq;       // base F_q
    PrimeIdeal ideal;
    FieldPtr K;        // the field A/l (== Fq when deg l == 1)
    FF t_image = 0;    // image of T

    FF reduce(const Poly& a) const;       // a mod l
    Poly lift(FF a) const;                // canonical representative
    FF eval_fq(FF c) const { return K->from_coeffs({c}); }  // embed F_q
};

ResidueField make_residue_field(FieldPtr Fq, const PrimeIdeal& ideal);

// residue_reduce(a, l) as a bare operation on polynomials
FF residue_reduce(const ResidueField& R, const Poly& a);

// The quotient ring A/a for an arbitrary nonzero monic modulus a (prime
// powers, products). Elements are indices encoding the coefficient tuple of
// the canonical representative, base q. Not a field in general.
class ResidueRing {
public:
    ResidueRing(FieldPtr Fq, Poly modulus);

    uint64_t size() const { return size_; }
    const Poly& modulus() const { return modulus_; }
    const SmallField& field() const { return *Fq_; }

    uint64_t encode(const Poly& a) const;  // a mod modulus -> index
    Poly decode(uint64_t idx) const;

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    bool is_unit(uint64_t a) const;
    uint64_t inv(uint64_t a) const;  // throws on non-unit
    uint64_t one() const { return encode(Poly::constant(1)); }

    // subgroup of units generated by gens (indices); deterministic order
    std::vector<uint64_t> generated_unit_subgroup(const std::vector<uint64_t>& gens) const;

private:
    FieldPtr Fq_;
    Poly modulus_;
    uint64_t size_ = 0;
};

// |(A/prod l_i^{e_i})^x| from a known factorization.
uint64_t unit_group_order(uint64_t q, const std::vector<std::pair<int, int>>& deg_exp);

}  // namespace drincert
