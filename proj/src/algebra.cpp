#include "drincert/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace drincert {

FieldSpec make_field_spec(uint32_t p, uint32_t e) {
    if (p == 2) throw std::invalid_argument("field spec: p must be odd");
    FieldSpec s;
    s.p = p;
    s.e = e;
    s.F = make_fq(p, e);
    return s;
}

FieldSpec make_field_spec(uint32_t p, const std::vector<FF>& modulus) {
    if (p == 2) throw std::invalid_argument("field spec: p must be odd");
    FieldSpec s;
    s.p = p;
    s.e = (uint32_t)modulus.size() - 1;
    s.F = make_fq_with_modulus(p, modulus);
    return s;
}

PrimeIdeal make_prime_ideal(const SmallField& F, const Poly& gen) {
    if (gen.is_zero() || gen.degree_or(0) < 1)
        throw std::invalid_argument("prime ideal: generator must be non-constant");
    if (gen.lead() != 1) throw std::invalid_argument("prime ideal: generator must be monic");
    if (!is_irreducible(F, gen)) throw std::invalid_argument("prime ideal: generator reducible");
    return PrimeIdeal{gen, *gen.degree()};
}

std::vector<PrimeIdeal> enum_primes(const SmallField& F, int max_degree,
                                    const std::vector<PrimeIdeal>& exclude) {
    if (max_degree < 1) throw std::invalid_argument("enum_primes: max_degree >= 1 required");
    std::set<std::vector<FF>> excl;
    for (const auto& e : exclude) excl.insert(e.gen.c);
    std::vector<PrimeIdeal> out;
    uint64_t q = F.size();
    for (int d = 1; d <= max_degree; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FF> c((size_t)d + 1, 0);
            uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                c[(size_t)i] = (FF)(v % q);
                v /= q;
            }
            c[(size_t)d] = 1;
            Poly g(std::move(c));
            if (!is_irreducible(F, g)) continue;
            if (excl.count(g.c)) continue;
            out.push_back(PrimeIdeal{g, d});
        }
    }
    return out;
}

ResidueField make_residue_field(FieldPtr Fq, const PrimeIdeal& ideal) {
    ResidueField R;
    R.Fq = Fq;
    R.ideal = ideal;
    if (ideal.degree == 1) {
        R.K = Fq;
        R.t_image = Fq->neg(ideal.gen.coeff(0));
    } else {
        R.K = SmallField::extension(Fq, ideal.gen.c);
        R.t_image = R.K->from_coeffs({0, 1});
    }
    return R;
}

FF ResidueField::reduce(const Poly& a) const {
    if (ideal.degree == 1) return poly_eval(*Fq, a, t_image);
    Poly r = poly_mod(*Fq, a, ideal.gen);
    std::vector<FF> digits(r.c);
    return K->from_coeffs(digits);
}

Poly ResidueField::lift(FF a) const {
    if (ideal.degree == 1) return Poly::constant(a);
    std::vector<FF> c((size_t)ideal.degree, 0);
    for (int i = 0; i < ideal.degree; ++i) c[(size_t)i] = K->coeff(a, (uint32_t)i);
    return Poly(std::move(c));
}

FF residue_reduce(const ResidueField& R, const Poly& a) { return R.reduce(a); }

ResidueRing::ResidueRing(FieldPtr Fq, Poly modulus) : Fq_(std::move(Fq)) {
    if (modulus.is_zero() || modulus.degree_or(0) < 1)
        throw std::invalid_argument("ResidueRing: modulus must be non-constant");
    modulus_ = make_monic(*Fq_, modulus);
    size_ = 1;
    for (int i = 0; i < *modulus_.degree(); ++i) {
        size_ *= Fq_->size();
        if (size_ > (1ull << 26)) throw std::invalid_argument("ResidueRing: quotient too large");
    }
}

uint64_t ResidueRing::encode(const Poly& a) const {
    Poly r = poly_mod(*Fq_, a, modulus_);
    uint64_t idx = 0;
    for (size_t i = r.c.size(); i-- > 0;) idx = idx * Fq_->size() + r.c[i];
    return idx;
}

Poly ResidueRing::decode(uint64_t idx) const {
    std::vector<FF> c;
    while (idx) {
        c.push_back((FF)(idx % Fq_->size()));
        idx /= Fq_->size();
    }
    return Poly(std::move(c));
}

uint64_t ResidueRing::add(uint64_t a, uint64_t b) const {
    uint64_t q = Fq_->size(), r = 0, m = 1;
    while (a || b) {
        r += (uint64_t)Fq_->add((FF)(a % q), (FF)(b % q)) * m;
        a /= q;
        b /= q;
        m *= q;
    }
    return r;
}

uint64_t ResidueRing::neg(uint64_t a) const {
    uint64_t q = Fq_->size(), r = 0, m = 1;
    while (a) {
        r += (uint64_t)Fq_->neg((FF)(a % q)) * m;
        a /= q;
        m *= q;
    }
    return r;
}

uint64_t ResidueRing::mul(uint64_t a, uint64_t b) const {
    return encode(poly_mul(*Fq_, decode(a), decode(b)));
}

bool ResidueRing::is_unit(uint64_t a) const {
    Poly x = decode(a);
    if (x.is_zero()) return false;
    return *poly_gcd(*Fq_, x, modulus_).degree() == 0;
}

uint64_t ResidueRing::inv(uint64_t a) const {
    Poly x = decode(a);
    if (x.is_zero()) throw std::domain_error("ResidueRing::inv(0)");
    auto r = poly_xgcd(*Fq_, x, modulus_);
    if (*r.g.degree() != 0) throw std::domain_error("ResidueRing::inv: not a unit");
    return encode(r.u);
}

std::vector<uint64_t> ResidueRing::generated_unit_subgroup(
    const std::vector<uint64_t>& gens) const {
    for (uint64_t g : gens)
        if (!is_unit(g)) throw std::invalid_argument("generated_unit_subgroup: non-unit generator");
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> order;
    uint64_t e = one();
    seen.insert(e);
    order.push_back(e);
    for (size_t head = 0; head < order.size(); ++head) {
        for (uint64_t g : gens) {
            uint64_t n = mul(order[head], g);
            if (seen.insert(n).second) order.push_back(n);
        }
    }
    std::sort(order.begin(), order.end());
    return order;
}

uint64_t unit_group_order(uint64_t q, const std::vector<std::pair<int, int>>& deg_exp) {
    uint64_t total = 1;
    for (auto [d, e] : deg_exp) {
        uint64_t qd = 1;
        for (int i = 0; i < d; ++i) qd *= q;
        uint64_t full = 1;
        for (int i = 0; i < e; ++i) full *= qd;
        total *= full - full / qd;
    }
    return total;
}

}  // namespace drincert
