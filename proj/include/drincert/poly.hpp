#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drincert/smallfield.hpp"

namespace drincert {

// Dense univariate polynomial over a SmallField, coefficients low power first.
// The zero polynomial is the empty vector; its degree is a distinguished
// "none", never an integer sentinel.
struct Poly {
    std::vector<FF> c;

    Poly() = default;
    explicit Poly(std::vector<FF> coeffs) : c(std::move(coeffs)) { strip(); }

    bool is_zero() const { return c.empty(); }
    std::optional<int> degree() const {
        if (c.empty()) return std::nullopt;
        return (int)c.size() - 1;
    }
    int degree_or(int ifzero) const { return c.empty() ? ifzero : (int)c.size() - 1; }
    FF coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    FF lead() const { return c.back(); }
    void strip() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // total order: degree, then coefficient tuple as base-q digits (low power
    // least significant); used for deterministic enumeration
    bool lex_less(const Poly& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }

    static Poly zero() { return Poly(); }
    static Poly constant(FF a) { return a == 0 ? Poly() : Poly({a}); }
    static Poly var() { return Poly({0, 1}); }  // T
    static Poly monomial(FF a, size_t k) {
        if (a == 0) return Poly();
        std::vector<FF> v(k + 1, 0);
        v[k] = a;
        return Poly(std::move(v));
    }
};

Poly poly_add(const SmallField& K, const Poly& a, const Poly& b);
Poly poly_sub(const SmallField& K, const Poly& a, const Poly& b);
Poly poly_neg(const SmallField& K, const Poly& a);
Poly poly_mul(const SmallField& K, const Poly& a, const Poly& b);
Poly poly_scale(const SmallField& K, FF s, const Poly& a);
// quotient and remainder by nonzero divisor
std::pair<Poly, Poly> poly_divrem(const SmallField& K, const Poly& a, const Poly& b);
Poly poly_mod(const SmallField& K, const Poly& a, const Poly& m);
Poly poly_mulmod(const SmallField& K, const Poly& a, const Poly& b, const Poly& m);
Poly poly_powmod(const SmallField& K, Poly a, uint64_t e, const Poly& m);
Poly poly_pow(const SmallField& K, Poly a, uint64_t e);
FF poly_eval(const SmallField& K, const Poly& a, FF x);
Poly make_monic(const SmallField& K, const Poly& a);
Poly poly_derivative(const SmallField& K, const Poly& a);

// Monic gcd; gcd(0, b) = monic(b). Both zero is an error ("gcd undefined").
Poly poly_gcd(const SmallField& K, Poly a, Poly b);
// g = gcd, plus u, v with u*a + v*b = g (used by tests and unit inversion)
struct XgcdResult {
    Poly g, u, v;
};
XgcdResult poly_xgcd(const SmallField& K, const Poly& a, const Poly& b);

// Deterministic irreducibility test (Rabin). Degree >= 1 required; constant
// input is an error.
bool is_irreducible(const SmallField& K, const Poly& f);

// f viewed over K, composed with Frobenius: returns f(T) with T -> T^(q^k)
// and coefficients raised to q^k, i.e. the image of f under the q^k-power
// Frobenius of a polynomial ring over a field containing F_q. For f over F_q
// itself the coefficients are fixed and only exponents dilate.
Poly poly_frob_dilate(const SmallField& K, const Poly& f, uint64_t q0, uint32_t k);

// Text I/O for the CLI polynomial syntax: terms "c*T^k", "T^k", "c", joined
// by + or -, with c either an integer or "[a0,a1,...]" giving prime-field
// digits of an F_q coefficient. Parse errors carry the byte position.
std::string poly_to_string(const SmallField& K, const Poly& a, const std::string& var = "T");
Poly poly_parse(const SmallField& K, const std::string& text, const std::string& var = "T");

struct PolyParseError : std::runtime_error {
    size_t position;
    PolyParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace drincert
