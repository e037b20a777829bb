#include "drincert/skew.hpp"

#include <stdexcept>

namespace drincert {

namespace {
void check_same_ring(const SkewPolyA& f, const SkewPolyA& g) {
    if (f.Fq.get() != g.Fq.get()) throw std::invalid_argument("skew: ring mismatch");
}
void check_same_ring(const SkewPolyF& f, const SkewPolyF& g) {
    if (f.K.get() != g.K.get() || f.twist_q != g.twist_q)
        throw std::invalid_argument("skew: ring mismatch");
}
}  // namespace

bool SkewPolyA::operator==(const SkewPolyA& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

SkewPolyA skew_a(FieldPtr Fq, std::vector<Poly> coeffs) {
    SkewPolyA f{std::move(Fq), std::move(coeffs)};
    f.strip();
    return f;
}

SkewPolyA skew_add(const SkewPolyA& f, const SkewPolyA& g) {
    check_same_ring(f, g);
    std::vector<Poly> r(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = poly_add(*f.Fq, f.coeff(i), g.coeff(i));
    return skew_a(f.Fq, std::move(r));
}

SkewPolyA skew_mul(const SkewPolyA& f, const SkewPolyA& g) {
    check_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return skew_a(f.Fq, {});
    const SmallField& F = *f.Fq;
    uint64_t q = F.size();
    std::vector<Poly> r(f.c.size() + g.c.size() - 1);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (g.c[j].is_zero()) continue;
            // tau^i * b = b^(q^i) * tau^i
            Poly tw = poly_frob_dilate(F, g.c[j], q, (uint32_t)i);
            r[i + j] = poly_add(F, r[i + j], poly_mul(F, f.c[i], tw));
        }
    }
    return skew_a(f.Fq, std::move(r));
}

SkewPolyA skew_scale(const SkewPolyA& f, const Poly& s) {
    std::vector<Poly> r(f.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = poly_mul(*f.Fq, s, f.c[i]);
    return skew_a(f.Fq, std::move(r));
}

std::string skew_to_string(const SkewPolyA& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + poly_to_string(*f.Fq, f.c[i]) + ")";
        if (i == 1) s += "*t";
        if (i > 1) s += "*t^" + std::to_string(i);
    }
    return s;
}

bool SkewPolyF::operator==(const SkewPolyF& o) const {
    return K.get() == o.K.get() && twist_q == o.twist_q && c == o.c;
}

SkewPolyF skew_f(FieldPtr K, uint64_t twist_q, std::vector<FF> coeffs) {
    SkewPolyF f{std::move(K), twist_q, std::move(coeffs)};
    f.strip();
    return f;
}

SkewPolyF skew_add(const SkewPolyF& f, const SkewPolyF& g) {
    check_same_ring(f, g);
    std::vector<FF> r(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.K->add(f.coeff(i), g.coeff(i));
    return skew_f(f.K, f.twist_q, std::move(r));
}

SkewPolyF skew_mul(const SkewPolyF& f, const SkewPolyF& g) {
    check_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return skew_f(f.K, f.twist_q, {});
    const SmallField& K = *f.K;
    std::vector<FF> r(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (g.c[j] == 0) continue;
            FF tw = K.frob_pow(g.c[j], f.twist_q, (uint32_t)i);
            r[i + j] = K.add(r[i + j], K.mul(f.c[i], tw));
        }
    }
    return skew_f(f.K, f.twist_q, std::move(r));
}

SkewPolyF skew_scale(const SkewPolyF& f, FF s) {
    std::vector<FF> r(f.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.K->mul(s, f.c[i]);
    return skew_f(f.K, f.twist_q, std::move(r));
}

SkewPolyF skew_pow(const SkewPolyF& f, uint32_t n) {
    SkewPolyF r = skew_f(f.K, f.twist_q, {1});
    for (uint32_t i = 0; i < n; ++i) r = skew_mul(r, f);
    return r;
}

std::string skew_to_string(const SkewPolyF& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += f.K->to_string(f.c[i]);
        if (i == 1) s += "*t";
        if (i > 1) s += "*t^" + std::to_string(i);
    }
    return s;
}

SkewPolyF skew_reduce(const SkewPolyA& f, const ResidueField& R) {
    std::vector<FF> r(f.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = R.reduce(f.c[i]);
    return skew_f(R.K, R.Fq->size(), std::move(r));
}

Poly to_linearized(const SkewPolyF& f) {
    if (f.is_zero()) return Poly();
    uint64_t deg = 1;
    for (int i = 0; i < f.tau_degree_or(0); ++i) {
        deg *= f.twist_q;
        if (deg > (1ull << 22)) throw std::length_error("to_linearized: degree cap exceeded");
    }
    std::vector<FF> c(deg + 1, 0);
    uint64_t e = 1;
    for (size_t i = 0; i < f.c.size(); ++i) {
        c[e] = f.c[i];
        e *= f.twist_q;
    }
    return Poly(std::move(c));
}

std::vector<std::pair<uint64_t, Poly>> to_linearized(const SkewPolyA& f) {
    std::vector<std::pair<uint64_t, Poly>> out;
    uint64_t e = 1;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i].is_zero()) out.emplace_back(e, f.c[i]);
        e *= f.Fq->size();
    }
    return out;
}

FF linearized_eval(const SkewPolyF& f, FF x) {
    const SmallField& K = *f.K;
    FF acc = 0, xp = x;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] != 0) acc = K.add(acc, K.mul(f.c[i], xp));
        xp = K.pow(xp, f.twist_q);
    }
    return acc;
}

}  // namespace drincert
