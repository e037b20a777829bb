#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace drincert {

// Field element handle: the index of the element in its field's canonical
// enumeration. For a prime field the index is the value 0..p-1; for an
// extension K = B[t]/(m) of degree d it is sum_i c_i * |B|^i with c_i the
// coordinates over B (low power first). 0 and 1 are always the ring 0 and 1.
using FF = uint32_t;

// A concrete finite field of enumerable size, built either as F_p or as an
// extension of another SmallField by a monic irreducible modulus. Extensions
// carry exp/log tables (size q), so mul/inv/pow are O(1) and addition is
// digit-wise in the base field. All state is immutable after construction.
class SmallField {
public:
    static std::shared_ptr<const SmallField> prime_field(uint32_t p);
    // modulus: monic irreducible over `base`, coefficients low power first,
    // length deg+1. Irreducibility is verified; throws std::invalid_argument.
    static std::shared_ptr<const SmallField> extension(std::shared_ptr<const SmallField> base,
                                                       const std::vector<FF>& modulus);

    uint64_t size() const { return q_; }
    uint32_t characteristic() const { return p_; }
    uint32_t degree_over_prime() const { return e_; }
    uint32_t ext_degree() const { return d_; }  // degree over base(); 1 for F_p
    bool is_prime_field() const { return base_ == nullptr; }
    const SmallField& base() const { return *base_; }
    std::shared_ptr<const SmallField> base_ptr() const { return base_; }
    const std::vector<FF>& modulus() const { return modulus_; }

    FF zero() const { return 0; }
    FF one() const { return 1; }
    FF add(FF a, FF b) const;
    FF sub(FF a, FF b) const;
    FF neg(FF a) const;
    FF mul(FF a, FF b) const;
    FF inv(FF a) const;  // throws on 0
    FF div(FF a, FF b) const { return mul(a, inv(b)); }
    FF pow(FF a, uint64_t e) const;
    // a^(q0^k), exponent reduced mod q-1; q0 may exceed 2^32 safely.
    FF frob_pow(FF a, uint64_t q0, uint32_t k) const;
    FF from_int(uint64_t n) const { return (FF)(n % p_); }  // prime subfield
    FF scalar_mul(uint32_t n, FF a) const;                  // n*a with n an integer

    bool is_square(FF a) const;  // a in (K^x)^2, or a == 0
    uint64_t elem_order(FF a) const;
    // Multiplicative generator (the one backing the exp/log tables for
    // extensions; first primitive element in index order for prime fields).
    FF generator() const;
    FF exp_of(uint64_t k) const;          // generator^k
    uint64_t log_of(FF a) const;          // discrete log, a != 0

    // Coordinates over the base field (0 when i >= ext_degree()).
    FF coeff(FF a, uint32_t i) const;
    FF from_coeffs(const std::vector<FF>& c) const;

    // Render as an integer (prime field) or "[c0,c1,...]" with prime-field
    // digits, matching the CLI coefficient syntax.
    std::string to_string(FF a) const;

private:
    SmallField() = default;

    std::shared_ptr<const SmallField> base_;
    std::vector<FF> modulus_;
    uint64_t q_ = 0;
    uint32_t p_ = 0, e_ = 1, d_ = 1;
    FF gen_ = 0;
    std::vector<FF> exp_;        // extensions only: exp_[k] = g^k, k < q-1
    std::vector<uint32_t> log_;  // extensions only: log_[a], a != 0
};

using FieldPtr = std::shared_ptr<const SmallField>;

// Lexicographically least monic irreducible of degree e over F_p (coefficients
// compared low power first as base-p digits). Degree 1 returns {0,1} = t.
std::vector<FF> canonical_modulus(uint32_t p, uint32_t e);

// F_q = F_p[u]/(canonical modulus), or F_p itself when e == 1.
FieldPtr make_fq(uint32_t p, uint32_t e);
// Same but with an explicit modulus over F_p (e.g. the CLI's --ext-modulus).
FieldPtr make_fq_with_modulus(uint32_t p, const std::vector<FF>& modulus);

// All field isomorphisms F1 -> F2 (as full lookup tables of size |F1|).
// Empty when |F1| != |F2|. F1 == F2 yields the automorphism group.
std::vector<std::vector<FF>> field_isomorphisms(const SmallField& F1, const SmallField& F2);

}  // namespace drincert
