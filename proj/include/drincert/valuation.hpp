#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drincert/drinfeld.hpp"
#include "drincert/rational.hpp"

namespace drincert {

struct NPPoint {
    int64_t exponent = 0;
    Rat valuation;  // may be +infinity (skipped by the hull)
    bool on_hull = false;
};

struct NPSegment {
    Rat slope;
    int64_t length = 0;  // horizontal length; root multiplicity
};

// Lower convex hull of (exponent, valuation) points. Slopes strictly increase
// left to right; collinear points merge into one segment.
struct NewtonPolygon {
    std::vector<NPPoint> points;
    std::vector<size_t> vertices;  // indices into points
    std::vector<NPSegment> segments;

    // multiset of root valuations: one entry (-slope, multiplicity) per segment
    std::vector<std::pair<Rat, int64_t>> root_valuations() const;
    std::string to_table() const;  // plain text: exponent, valuation, on-hull
};

NewtonPolygon newton_polygon(const std::vector<std::pair<int64_t, Rat>>& pts);

// nu_T of a polynomial in T: index of the lowest nonzero coefficient.
Rat nu_T(const Poly& a);

// points (q^i - 1, nu_T(coefficient of tau^i)) of phi_a(x)/x
std::vector<std::pair<int64_t, Rat>> phi_coeff_valuations(const DrinfeldModule& phi, const Poly& a);

// the two-case valuation of e_Lambda(a1 w1 + a2 w2 + b z):
// q^(2i) * z_val when b != 0 with deg b = i, else w_val
Rat lattice_valuation(uint64_t q, int i, const Rat& z_val, bool b_zero, const Rat& w_val);

struct InertiaReport {
    PrimeIdeal ideal;
    uint64_t order_divisor = 0;  // q^(2 deg l)
    Rat z_valuation;             // -q^(-2 deg l); for l = (T) the root valuation -1/q^2
    bool identity_check = false;
};

// l = (T): divisor q^2 from the slope -1/q^2 segment of phi_T(x)/x.
// l != (T): solves the leading-coefficient identity for nu'(z) by exact
// summation over b in F_l \ {0} (the (a1,a2) factor enters as |F_l|^2), with
// the b = 0 terms cancelling against nu'(l) = 0.
InertiaReport inertia_order(const DrinfeldModule& phi, const PrimeIdeal& l);

struct NonscalarWitnessReport {
    Rat root_valuation;          // -1/q^4
    int64_t root_multiplicity = 0;  // q^5 - q^4
    uint64_t image_divisor = 0;     // q^4
    bool divisor_exceeds_gl3 = false;  // q^4 does not divide |GL3(F_q)|
    std::vector<Rat> scalar_terms;     // the four min candidates
    Rat scalar_min;
    bool min_unique = false;
    bool witness_ok = false;  // min = -1/q^2 != -1/q^4, uniquely attained
};

// The mod-l^2 non-scalar witness at l = (T): Newton polygon of phi_{T^2}/x
// plus the scalar-action valuation comparison.
NonscalarWitnessReport nonscalar_witness_at_T(const DrinfeldModule& phi);

}  // namespace drincert
