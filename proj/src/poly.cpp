#include "drincert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace drincert {

Poly poly_add(const SmallField& K, const Poly& a, const Poly& b) {
    std::vector<FF> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = K.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

Poly poly_neg(const SmallField& K, const Poly& a) {
    std::vector<FF> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = K.neg(a.c[i]);
    return Poly(std::move(r));
}

Poly poly_sub(const SmallField& K, const Poly& a, const Poly& b) {
    return poly_add(K, a, poly_neg(K, b));
}

Poly poly_mul(const SmallField& K, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<FF> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j] != 0) r[i + j] = K.add(r[i + j], K.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
}

Poly poly_scale(const SmallField& K, FF s, const Poly& a) {
    if (s == 0) return Poly();
    std::vector<FF> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = K.mul(s, a.c[i]);
    return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divrem(const SmallField& K, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    if (a.c.size() < b.c.size()) return {Poly(), a};
    std::vector<FF> rem = a.c;
    std::vector<FF> quo(a.c.size() - b.c.size() + 1, 0);
    FF linv = K.inv(b.lead());
    for (size_t k = quo.size(); k-- > 0;) {
        FF top = rem[k + b.c.size() - 1];
        if (top == 0) continue;
        FF f = K.mul(top, linv);
        quo[k] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem[k + i] = K.sub(rem[k + i], K.mul(f, b.c[i]));
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_mod(const SmallField& K, const Poly& a, const Poly& m) {
    return poly_divrem(K, a, m).second;
}

Poly poly_mulmod(const SmallField& K, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(K, poly_mul(K, a, b), m);
}

Poly poly_powmod(const SmallField& K, Poly a, uint64_t e, const Poly& m) {
    Poly r = Poly::constant(1);
    a = poly_mod(K, a, m);
    while (e) {
        if (e & 1) r = poly_mulmod(K, r, a, m);
        a = poly_mulmod(K, a, a, m);
        e >>= 1;
    }
    return r;
}

Poly poly_pow(const SmallField& K, Poly a, uint64_t e) {
    Poly r = Poly::constant(1);
    while (e) {
        if (e & 1) r = poly_mul(K, r, a);
        a = poly_mul(K, a, a);
        e >>= 1;
    }
    return r;
}

FF poly_eval(const SmallField& K, const Poly& a, FF x) {
    FF r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = K.add(K.mul(r, x), a.c[i]);
    return r;
}

Poly make_monic(const SmallField& K, const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return poly_scale(K, K.inv(a.lead()), a);
}

Poly poly_derivative(const SmallField& K, const Poly& a) {
    if (a.c.size() < 2) return Poly();
    std::vector<FF> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = K.scalar_mul((uint32_t)(i % K.characteristic()), a.c[i]);
    return Poly(std::move(r));
}

Poly poly_gcd(const SmallField& K, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    while (!b.is_zero()) {
        Poly r = poly_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(K, a);
}

XgcdResult poly_xgcd(const SmallField& K, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(1), u1;
    Poly v0, v1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(K, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly u2 = poly_sub(K, u0, poly_mul(K, q, u1));
        u0 = std::move(u1);
        u1 = std::move(u2);
        Poly v2 = poly_sub(K, v0, poly_mul(K, q, v1));
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    FF l = r0.is_zero() ? 1 : r0.lead();
    FF li = K.inv(l);
    return {poly_scale(K, li, r0), poly_scale(K, li, u0), poly_scale(K, li, v0)};
}

bool is_irreducible(const SmallField& K, const Poly& f) {
    if (f.is_zero() || f.degree_or(0) < 1)
        throw std::domain_error("is_irreducible: constant input");
    int n = *f.degree();
    if (n == 1) return true;
    Poly m = make_monic(K, f);
    Poly x = Poly::var();
    Poly fr = x;
    std::vector<Poly> steps((size_t)n + 1);
    for (int i = 1; i <= n; ++i) {
        fr = poly_powmod(K, fr, K.size(), m);
        steps[(size_t)i] = fr;
    }
    if (poly_sub(K, steps[(size_t)n], x) != Poly()) return false;
    int rem = n;
    std::vector<int> primes;
    for (int d = 2; d * d <= rem; ++d)
        if (rem % d == 0) {
            primes.push_back(d);
            while (rem % d == 0) rem /= d;
        }
    if (rem > 1) primes.push_back(rem);
    for (int l : primes) {
        Poly diff = poly_sub(K, steps[(size_t)(n / l)], x);
        if (diff.is_zero()) return false;
        if (*poly_gcd(K, m, diff).degree() != 0) return false;
    }
    return true;
}

Poly poly_frob_dilate(const SmallField& K, const Poly& f, uint64_t q0, uint32_t k) {
    if (f.is_zero()) return f;
    uint64_t stretch = 1;
    for (uint32_t i = 0; i < k; ++i) stretch *= q0;
    std::vector<FF> r((f.c.size() - 1) * stretch + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i] != 0) r[i * stretch] = K.frob_pow(f.c[i], q0, k);
    return Poly(std::move(r));
}

std::string poly_to_string(const SmallField& K, const Poly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string s;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        bool unit_coeff = (a.c[i] == 1) && i > 0;
        if (!unit_coeff) s += K.to_string(a.c[i]);
        if (i > 0) {
            if (!unit_coeff) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;
    explicit Scanner(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            throw PolyParseError("expected integer", pos);
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (uint64_t)(s[pos] - '0');
            if (v > (1ull << 40)) throw PolyParseError("integer too large", pos);
            ++pos;
        }
        return v;
    }
};

}  // namespace

Poly poly_parse(const SmallField& K, const std::string& text, const std::string& var) {
    Scanner sc(text);
    Poly acc;
    bool first = true;
    while (!sc.eof()) {
        FF sign = 1;
        char ch = sc.peek();
        if (ch == '+' || ch == '-') {
            sc.take();
            if (ch == '-') sign = K.neg(1);
        } else if (!first) {
            throw PolyParseError("expected '+' or '-' between terms", sc.pos);
        }
        first = false;
        // term: [coefficient][*][var[^k]]  (at least one of the two parts)
        FF coeff = 1;
        bool saw_coeff = false;
        sc.skip_ws();
        if (sc.peek() == '[') {
            size_t start = sc.pos;
            sc.take();
            std::vector<FF> digits;
            while (true) {
                uint64_t d = sc.integer();
                digits.push_back((FF)(d % K.characteristic()));
                char c2 = sc.peek();
                if (c2 == ',') {
                    sc.take();
                    continue;
                }
                if (c2 == ']') {
                    sc.take();
                    break;
                }
                throw PolyParseError("expected ',' or ']' in coefficient", sc.pos);
            }
            if (digits.size() > K.degree_over_prime())
                throw PolyParseError("coefficient has too many digits for this field", start);
            // digits are prime-field coordinates of one F_q coefficient
            uint64_t idx = 0;
            for (size_t i = digits.size(); i-- > 0;) idx = idx * K.characteristic() + digits[i];
            coeff = (FF)idx;
            saw_coeff = true;
        } else if (std::isdigit((unsigned char)sc.peek())) {
            coeff = K.from_int(sc.integer());
            saw_coeff = true;
        }
        size_t expo = 0;
        sc.skip_ws();
        bool saw_var = false;
        if (sc.pos < sc.s.size() && sc.s[sc.pos] == '*') {
            ++sc.pos;
            sc.skip_ws();
        }
        if (sc.pos + var.size() <= sc.s.size() && sc.s.compare(sc.pos, var.size(), var) == 0) {
            sc.pos += var.size();
            saw_var = true;
            expo = 1;
            sc.skip_ws();
            if (sc.pos < sc.s.size() && sc.s[sc.pos] == '^') {
                ++sc.pos;
                expo = (size_t)sc.integer();
                if (expo > 4096) throw PolyParseError("exponent too large", sc.pos);
            }
        }
        if (!saw_coeff && !saw_var)
            throw PolyParseError("expected a term", sc.pos);
        acc = poly_add(K, acc, Poly::monomial(K.mul(sign, coeff), expo));
    }
    if (first) throw PolyParseError("empty polynomial", 0);
    return acc;
}

}  // namespace drincert
