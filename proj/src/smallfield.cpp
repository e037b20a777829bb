#include "drincert/smallfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace drincert {

namespace {

// Minimal dense polynomial helpers over an already-built SmallField, used only
// while constructing new fields (exp/log tables, irreducibility checks).
using Vec = std::vector<FF>;

void strip(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec pmul(const SmallField& K, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    strip(r);
    return r;
}

// remainder of a by monic m
Vec pmod(const SmallField& K, Vec a, const Vec& m) {
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        FF lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i < dm; ++i)
                a[shift + i] = K.sub(a[shift + i], K.mul(lead, m[i]));
        a.pop_back();
        strip(a);
        if (a.size() <= dm) break;
    }
    return a;
}

Vec pmulmod(const SmallField& K, const Vec& a, const Vec& b, const Vec& m) {
    return pmod(K, pmul(K, a, b), m);
}

Vec ppowmod(const SmallField& K, Vec a, uint64_t e, const Vec& m) {
    Vec r = {1};
    a = pmod(K, std::move(a), m);
    while (e) {
        if (e & 1) r = pmulmod(K, r, a, m);
        a = pmulmod(K, a, a, m);
        e >>= 1;
    }
    return r;
}

Vec pgcd(const SmallField& K, Vec a, Vec b) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        // make b monic for pmod
        FF li = K.inv(b.back());
        for (auto& c : b) c = K.mul(c, li);
        Vec r = pmod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Rabin: m (monic, degree n >= 1) irreducible over K iff x^{|K|^n} = x mod m
// and gcd(x^{|K|^{n/l}} - x, m) = 1 for all primes l | n.
bool poly_irreducible(const SmallField& K, const Vec& m) {
    size_t n = m.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    Vec x = {0, 1};
    Vec fr = x;
    std::vector<Vec> at_step(n + 1);
    for (size_t i = 1; i <= n; ++i) {
        fr = ppowmod(K, fr, K.size(), m);
        at_step[i] = fr;
    }
    Vec diff = at_step[n];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = K.sub(diff[1], 1);
    strip(diff);
    if (!diff.empty()) return false;
    for (uint64_t l : prime_divisors(n)) {
        Vec d = at_step[n / l];
        if (d.size() < 2) d.resize(2, 0);
        d[1] = K.sub(d[1], 1);
        strip(d);
        Vec g = pgcd(K, m, d);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldPtr SmallField::prime_field(uint32_t p) {
    if (p < 2) throw std::invalid_argument("prime_field: p must be >= 2");
    for (uint32_t d = 2; (uint64_t)d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("prime_field: p not prime");
    auto F = std::shared_ptr<SmallField>(new SmallField());
    F->q_ = p;
    F->p_ = p;
    F->e_ = 1;
    F->d_ = 1;
    // first primitive element in index order
    for (FF g = 2; g < p; ++g) {
        bool prim = true;
        for (uint64_t l : prime_divisors(p - 1))
            if (F->pow(g, (p - 1) / l) == 1) {
                prim = false;
                break;
            }
        if (prim) {
            F->gen_ = g;
            break;
        }
    }
    if (p == 2) F->gen_ = 1;
    return F;
}

FieldPtr SmallField::extension(FieldPtr base, const std::vector<FF>& modulus) {
    if (!base) throw std::invalid_argument("extension: null base field");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("extension: modulus must be monic of degree >= 1");
    if (!poly_irreducible(*base, modulus))
        throw std::invalid_argument("extension: modulus is reducible");
    auto F = std::shared_ptr<SmallField>(new SmallField());
    F->base_ = base;
    F->modulus_ = modulus;
    F->d_ = (uint32_t)modulus.size() - 1;
    F->p_ = base->characteristic();
    F->e_ = base->degree_over_prime() * F->d_;
    uint64_t q = 1;
    for (uint32_t i = 0; i < F->d_; ++i) {
        q *= base->size();
        if (q > (1u << 20))
            throw std::invalid_argument("extension: field too large for tabled representation");
    }
    F->q_ = q;

    const SmallField& B = *base;
    uint64_t Bsz = B.size();
    auto encode = [&](const Vec& v) {
        uint64_t idx = 0;
        for (size_t i = v.size(); i-- > 0;) idx = idx * Bsz + v[i];
        return (FF)idx;
    };
    auto vmulmod = [&](const Vec& a, const Vec& b) { return pmulmod(B, a, b, modulus); };

    // find a multiplicative generator, then fill exp/log
    auto decode = [&](uint64_t idx) {
        Vec v;
        while (idx) {
            v.push_back((FF)(idx % Bsz));
            idx /= Bsz;
        }
        return v;
    };
    auto ppow = [&](Vec a, uint64_t e) { return ppowmod(B, std::move(a), e, modulus); };
    std::vector<uint64_t> divs = prime_divisors(q - 1);
    uint64_t gen_idx = 0;
    for (uint64_t cand = 2; cand < q; ++cand) {
        Vec cv = decode(cand);
        bool prim = true;
        for (uint64_t l : divs) {
            Vec t = ppow(cv, (q - 1) / l);
            if (t.size() == 1 && t[0] == 1) {
                prim = false;
                break;
            }
        }
        if (prim) {
            gen_idx = cand;
            break;
        }
    }
    if (gen_idx == 0) throw std::logic_error("extension: no generator found");
    F->gen_ = (FF)gen_idx;
    F->exp_.assign(q - 1, 0);
    F->log_.assign(q, 0);
    Vec cur = {1};
    Vec g = decode(gen_idx);
    for (uint64_t k = 0; k < q - 1; ++k) {
        FF idx = encode(cur);
        F->exp_[k] = idx;
        F->log_[idx] = (uint32_t)k;
        cur = vmulmod(cur, g);
    }
    return F;
}

FF SmallField::add(FF a, FF b) const {
    if (!base_) return (FF)(((uint64_t)a + b) % p_);
    uint64_t Bsz = base_->size(), r = 0, m = 1;
    for (uint32_t i = 0; i < d_ && (a || b); ++i) {
        r += (uint64_t)base_->add((FF)(a % Bsz), (FF)(b % Bsz)) * m;
        a /= (FF)Bsz;
        b /= (FF)Bsz;
        m *= Bsz;
    }
    return (FF)r;
}

FF SmallField::neg(FF a) const {
    if (!base_) return a == 0 ? 0 : (FF)(p_ - a);
    uint64_t Bsz = base_->size(), r = 0, m = 1;
    for (uint32_t i = 0; i < d_ && a; ++i) {
        r += (uint64_t)base_->neg((FF)(a % Bsz)) * m;
        a /= (FF)Bsz;
        m *= Bsz;
    }
    return (FF)r;
}

FF SmallField::sub(FF a, FF b) const { return add(a, neg(b)); }

FF SmallField::mul(FF a, FF b) const {
    if (!base_) return (FF)((uint64_t)a * b % p_);
    if (a == 0 || b == 0) return 0;
    uint64_t k = (uint64_t)log_[a] + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
}

FF SmallField::inv(FF a) const {
    if (a == 0) throw std::domain_error("SmallField::inv(0)");
    if (!base_) return pow(a, p_ - 2);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FF SmallField::pow(FF a, uint64_t e) const {
    if (base_) {
        if (a == 0) return e == 0 ? 1 : 0;
        uint64_t k = ((__uint128_t)log_[a] * (e % (q_ - 1))) % (q_ - 1);
        return exp_[k];
    }
    uint64_t r = 1, x = a;
    while (e) {
        if (e & 1) r = r * x % p_;
        x = x * x % p_;
        e >>= 1;
    }
    return (FF)r;
}

FF SmallField::frob_pow(FF a, uint64_t q0, uint32_t k) const {
    if (a == 0) return 0;
    // exponent q0^k mod (q-1)
    uint64_t m = q_ - 1, e = 1, b = q0 % m;
    for (uint32_t i = 0; i < k; ++i) e = (__uint128_t)e * b % m;
    return pow(a, e == 0 ? m : e);
}

FF SmallField::scalar_mul(uint32_t n, FF a) const {
    return mul(from_int(n), a);
}

bool SmallField::is_square(FF a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

uint64_t SmallField::elem_order(FF a) const {
    if (a == 0) throw std::domain_error("elem_order(0)");
    uint64_t ord = q_ - 1;
    for (uint64_t l : prime_divisors(q_ - 1))
        while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
    return ord;
}

FF SmallField::generator() const { return gen_; }

FF SmallField::exp_of(uint64_t k) const {
    if (base_) return exp_[k % (q_ - 1)];
    return pow(gen_, k);
}

uint64_t SmallField::log_of(FF a) const {
    if (a == 0) throw std::domain_error("log_of(0)");
    if (base_) return log_[a];
    // prime field: brute force (tiny p, rarely used)
    FF cur = 1;
    for (uint64_t k = 0; k < q_ - 1; ++k) {
        if (cur == a) return k;
        cur = mul(cur, gen_);
    }
    throw std::logic_error("log_of: not found");
}

FF SmallField::coeff(FF a, uint32_t i) const {
    if (!base_) return i == 0 ? a : 0;
    uint64_t Bsz = base_->size();
    for (uint32_t k = 0; k < i; ++k) a /= (FF)Bsz;
    return (FF)(a % Bsz);
}

FF SmallField::from_coeffs(const std::vector<FF>& c) const {
    if (!base_) return c.empty() ? 0 : c[0];
    if (c.size() > d_) throw std::invalid_argument("from_coeffs: too many coordinates");
    uint64_t Bsz = base_->size(), r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * Bsz + c[i];
    return (FF)r;
}

std::string SmallField::to_string(FF a) const {
    if (e_ == 1) return std::to_string(a);
    // expand all the way to prime-field digits
    std::string s = "[";
    uint64_t v = a;
    for (uint32_t i = 0; i < e_; ++i) {
        if (i) s += ",";
        s += std::to_string(v % p_);
        v /= p_;
    }
    return s + "]";
}

std::vector<FF> canonical_modulus(uint32_t p, uint32_t e) {
    auto Fp = SmallField::prime_field(p);
    if (e == 1) return {0, 1};
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<FF> m(e + 1, 0);
        uint64_t v = idx;
        for (uint32_t i = 0; i < e; ++i) {
            m[i] = (FF)(v % p);
            v /= p;
        }
        m[e] = 1;
        if (poly_irreducible(*Fp, m)) return m;
    }
    throw std::logic_error("canonical_modulus: none found");
}

FieldPtr make_fq(uint32_t p, uint32_t e) {
    auto Fp = SmallField::prime_field(p);
    if (e == 1) return Fp;
    return SmallField::extension(Fp, canonical_modulus(p, e));
}

FieldPtr make_fq_with_modulus(uint32_t p, const std::vector<FF>& modulus) {
    auto Fp = SmallField::prime_field(p);
    if (modulus.size() == 2) {
        if (modulus != std::vector<FF>{0, 1})
            throw std::invalid_argument("degree-1 modulus must be the variable itself");
        return Fp;
    }
    return SmallField::extension(Fp, modulus);
}

std::vector<std::vector<FF>> field_isomorphisms(const SmallField& F1, const SmallField& F2) {
    std::vector<std::vector<FF>> out;
    if (F1.size() != F2.size()) return out;
    uint64_t q = F1.size();
    FF g = F1.generator();
    uint32_t p = F1.characteristic();
    // minimal polynomial of g over F_p, by linear algebra over prime digits
    uint32_t n = F1.degree_over_prime();
    auto digits = [&](const SmallField& F, FF a) {
        (void)F;
        std::vector<FF> d(n);
        uint64_t v = a;
        // peel through the tower down to prime digits: index encoding is
        // base-|B| positional at each level, so base-p digits of the index
        // are exactly the prime-field coordinates.
        for (uint32_t i = 0; i < n; ++i) {
            d[i] = (FF)(v % p);
            v /= p;
        }
        return d;
    };
    // powers 1, g, ..., g^n as vectors; find monic dependency of length n+1
    std::vector<std::vector<FF>> pw(n + 1);
    FF cur = 1;
    for (uint32_t i = 0; i <= n; ++i) {
        pw[i] = digits(F1, cur);
        cur = F1.mul(cur, g);
    }
    // solve sum_{i<n} c_i g^i = -g^n  (over F_p); minimal poly of a generator
    // of F1^x has full degree n, so the system is uniquely solvable.
    auto Fp = SmallField::prime_field(p);
    std::vector<std::vector<FF>> M(n, std::vector<FF>(n + 1, 0));
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) M[r][c] = pw[c][r];
        M[r][n] = Fp->neg(pw[n][r]);
    }
    // Gaussian elimination
    for (uint32_t col = 0, row = 0; col < n && row < n; ++col) {
        uint32_t piv = row;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(M[piv], M[row]);
        FF ival = Fp->inv(M[row][col]);
        for (uint32_t c = col; c <= n; ++c) M[row][c] = Fp->mul(M[row][c], ival);
        for (uint32_t r = 0; r < n; ++r)
            if (r != row && M[r][col] != 0) {
                FF f = M[r][col];
                for (uint32_t c = col; c <= n; ++c)
                    M[r][c] = Fp->sub(M[r][c], Fp->mul(f, M[row][c]));
            }
        ++row;
    }
    std::vector<FF> minpoly(n + 1, 1);  // monic
    for (uint32_t i = 0; i < n; ++i) minpoly[i] = M[i][n];
    // roots of minpoly in F2 give the isomorphisms g -> root
    for (uint64_t cand = 1; cand < q; ++cand) {
        FF acc = 0, xp = 1;
        for (uint32_t i = 0; i <= n; ++i) {
            acc = F2.add(acc, F2.mul(F2.from_int(minpoly[i]), xp));
            if (i < n) xp = F2.mul(xp, (FF)cand);
        }
        if (acc != 0) continue;
        std::vector<FF> map(q, 0);
        FF img = 1, src = 1;
        for (uint64_t k = 0; k < q - 1; ++k) {
            map[src] = img;
            src = F1.mul(src, g);
            img = F2.mul(img, (FF)cand);
        }
        out.push_back(std::move(map));
    }
    return out;
}

}  // namespace drincert
