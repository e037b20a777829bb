#pragma once

#include <cstdint>
#include <vector>

#include "drincert/linalg.hpp"
#include "drincert/poly.hpp"
#include "drincert/skew.hpp"
#include "drincert/smallfield.hpp"

namespace drincert {

// K[u]/(h) for a monic irreducible h over a SmallField K, without element
// enumeration or tables: elements are coefficient vectors over K of fixed
// length deg(h). Hosts torsion-point coordinates when the splitting field is
// too large to tabulate.
class ExtField {
public:
    using Elem = std::vector<FF>;  // length degree(), low power first

    ExtField(FieldPtr K, std::vector<FF> modulus);

    const SmallField& K() const { return *K_; }
    FieldPtr K_ptr() const { return K_; }
    uint32_t degree() const { return n_; }
    const std::vector<FF>& modulus() const { return modulus_; }

    Elem zero() const { return Elem(n_, 0); }
    Elem one() const;
    Elem gen() const;  // the class of u (0 when degree()==1)
    Elem from_base(FF a) const;
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(FF s, const Elem& a) const;  // s in K
    Elem pow(Elem a, uint64_t e) const;

    // F_q-linear structure, where F_q is the subfield of K of size q0
    // (either K itself or its base). Flattened vectors have length
    // degree() * [K : F_q].
    const SmallField& fq(uint64_t q0) const;
    uint32_t fq_dim(uint64_t q0) const;
    std::vector<FF> flatten(const Elem& a, uint64_t q0) const;
    Elem unflatten(const std::vector<FF>& v, uint64_t q0) const;
    // Matrix of x -> x^{q0} on the flattened F_q-vector space.
    Mat frobenius_matrix(uint64_t q0) const;

private:
    FieldPtr K_;
    std::vector<FF> modulus_;
    uint32_t n_ = 0;
};

// Deterministic monic irreducible of the given degree over K: sequential
// search for prime-power degrees, tensor compositum of coprime pieces
// otherwise. Throws on degrees beyond desk scale.
std::vector<FF> find_irreducible(FieldPtr K, uint32_t degree);

ExtField ext_field_build(FieldPtr K, uint32_t degree);

struct KernelBasis {
    ExtField E;
    std::vector<ExtField::Elem> basis;  // F_q-basis of the root space
    uint32_t splitting_degree = 0;      // [E : K]
};

// Root space of the linearized polynomial of f (tau-degree r, twist q) in the
// smallest extension of K containing all roots. Errors: zero tau^0
// coefficient ("bad reduction"), or search overflow.
KernelBasis linearized_kernel(const SkewPolyF& f);

// Evaluate sum c_i x^(q^i) at an ExtField element (coefficients c_i in K).
ExtField::Elem linearized_eval_ext(const ExtField& E, const SkewPolyF& f,
                                   const ExtField::Elem& x);

}  // namespace drincert
