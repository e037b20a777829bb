#pragma once

#include <string>
#include <vector>

#include "drincert/algebra.hpp"
#include "drincert/poly.hpp"

namespace drincert {

// Element of A{tau}, A = F_q[T], with commutation tau * a = a^q * tau.
// Coefficients are polynomials in T, tau-degree low first.
struct SkewPolyA {
    FieldPtr Fq;
    std::vector<Poly> c;

    bool is_zero() const { return c.empty(); }
    int tau_degree_or(int ifzero) const { return c.empty() ? ifzero : (int)c.size() - 1; }
    Poly coeff(size_t i) const { return i < c.size() ? c[i] : Poly(); }
    void strip() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool operator==(const SkewPolyA& o) const;
};

SkewPolyA skew_a(FieldPtr Fq, std::vector<Poly> coeffs);
SkewPolyA skew_add(const SkewPolyA& f, const SkewPolyA& g);
SkewPolyA skew_mul(const SkewPolyA& f, const SkewPolyA& g);
SkewPolyA skew_scale(const SkewPolyA& f, const Poly& s);  // left multiply by tau^0 coeff
std::string skew_to_string(const SkewPolyA& f);

// Element of K{tau} for a finite coefficient field K containing F_q, with
// tau * a = a^q * tau (the twist stays the q-power Frobenius even when
// |K| > q). Coefficients are K-elements.
struct SkewPolyF {
    FieldPtr K;
    uint64_t twist_q = 0;
    std::vector<FF> c;

    bool is_zero() const { return c.empty(); }
    int tau_degree_or(int ifzero) const { return c.empty() ? ifzero : (int)c.size() - 1; }
    FF coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    void strip() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const SkewPolyF& o) const;
};

SkewPolyF skew_f(FieldPtr K, uint64_t twist_q, std::vector<FF> coeffs);
SkewPolyF skew_add(const SkewPolyF& f, const SkewPolyF& g);
SkewPolyF skew_mul(const SkewPolyF& f, const SkewPolyF& g);
SkewPolyF skew_scale(const SkewPolyF& f, FF s);
SkewPolyF skew_pow(const SkewPolyF& f, uint32_t n);
std::string skew_to_string(const SkewPolyF& f);

// Reduce coefficients of f in A{tau} modulo a prime, landing in F_p{tau}.
SkewPolyF skew_reduce(const SkewPolyA& f, const ResidueField& R);

// sum c_i tau^i -> sum c_i x^(q^i) as a dense polynomial over the coefficient
// field. Bijective on representations; sizes guarded.
Poly to_linearized(const SkewPolyF& f);
// Coefficients in A: the sparse (exponent q^i, coefficient) form.
std::vector<std::pair<uint64_t, Poly>> to_linearized(const SkewPolyA& f);

// Evaluate the linearized polynomial of f at x in K without expanding.
FF linearized_eval(const SkewPolyF& f, FF x);

}  // namespace drincert
