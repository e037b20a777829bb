#include "drincert/extfield.hpp"

#include <stdexcept>

namespace drincert {

namespace {

constexpr uint32_t kSeqSearchCap = 64;       // prime-power degree cap
constexpr uint64_t kSplitScanCap = 100000;   // splitting-degree scan cap
constexpr size_t kDenseDegreeCap = 4200;     // dense linearized polynomial cap

uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

ExtField::ExtField(FieldPtr K, std::vector<FF> modulus) : K_(std::move(K)), modulus_(std::move(modulus)) {
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw std::invalid_argument("ExtField: monic modulus of degree >= 1 required");
    n_ = (uint32_t)modulus_.size() - 1;
}

ExtField::Elem ExtField::one() const {
    Elem e(n_, 0);
    e[0] = 1;
    return e;
}

ExtField::Elem ExtField::gen() const {
    Elem e(n_, 0);
    if (n_ == 1) {
        e[0] = K_->neg(modulus_[0]);  // u = -m0 in the degree-1 quotient
    } else {
        e[1] = 1;
    }
    return e;
}

ExtField::Elem ExtField::from_base(FF a) const {
    Elem e(n_, 0);
    e[0] = a;
    return e;
}

bool ExtField::is_zero(const Elem& a) const {
    for (FF x : a)
        if (x) return false;
    return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = K_->add(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Elem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = K_->sub(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    std::vector<FF> prod(2 * n_ - 1, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < n_; ++j)
            if (b[j] != 0) prod[i + j] = K_->add(prod[i + j], K_->mul(a[i], b[j]));
    }
    // reduce by the monic modulus
    for (size_t k = prod.size(); k-- > n_;) {
        FF lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (uint32_t i = 0; i < n_; ++i)
            prod[k - n_ + i] = K_->sub(prod[k - n_ + i], K_->mul(lead, modulus_[i]));
    }
    prod.resize(n_);
    return prod;
}

ExtField::Elem ExtField::scale(FF s, const Elem& a) const {
    Elem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = K_->mul(s, a[i]);
    return r;
}

ExtField::Elem ExtField::pow(Elem a, uint64_t e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

const SmallField& ExtField::fq(uint64_t q0) const {
    if (K_->size() == q0) return *K_;
    if (!K_->is_prime_field() && K_->base().size() == q0) return K_->base();
    throw std::invalid_argument("ExtField: q0 is not K or its base");
}

uint32_t ExtField::fq_dim(uint64_t q0) const {
    if (K_->size() == q0) return n_;
    if (!K_->is_prime_field() && K_->base().size() == q0) return n_ * K_->ext_degree();
    throw std::invalid_argument("ExtField: q0 is not K or its base");
}

std::vector<FF> ExtField::flatten(const Elem& a, uint64_t q0) const {
    if (K_->size() == q0) return a;
    uint32_t kd = K_->ext_degree();
    std::vector<FF> v(n_ * kd);
    for (uint32_t i = 0; i < n_; ++i)
        for (uint32_t j = 0; j < kd; ++j) v[i * kd + j] = K_->coeff(a[i], j);
    return v;
}

ExtField::Elem ExtField::unflatten(const std::vector<FF>& v, uint64_t q0) const {
    if (K_->size() == q0) return v;
    uint32_t kd = K_->ext_degree();
    Elem a(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        std::vector<FF> digs(v.begin() + i * kd, v.begin() + (i + 1) * kd);
        a[i] = K_->from_coeffs(digs);
    }
    return a;
}

Mat ExtField::frobenius_matrix(uint64_t q0) const {
    uint32_t N = fq_dim(q0);
    uint32_t kd = N / n_;
    // images of the multiplicative generators of the basis t^j u^i
    Elem uq = pow(gen(), q0);
    std::vector<Elem> upow(n_);  // (u^q0)^i
    upow[0] = one();
    for (uint32_t i = 1; i < n_; ++i) upow[i] = mul(upow[i - 1], uq);
    std::vector<FF> tq_pows(kd, 1);  // (t^q0)^j in K
    if (kd > 1) {
        FF t = K_->from_coeffs({0, 1});
        FF tq = K_->pow(t, q0);
        for (uint32_t j = 1; j < kd; ++j) tq_pows[j] = K_->mul(tq_pows[j - 1], tq);
    }
    Mat M(N, N);
    for (uint32_t i = 0; i < n_; ++i)
        for (uint32_t j = 0; j < kd; ++j) {
            Elem img = scale(tq_pows[j], upow[i]);
            std::vector<FF> col = flatten(img, q0);
            for (uint32_t r = 0; r < N; ++r) M.at(r, i * kd + j) = col[r];
        }
    return M;
}

namespace {

// minimal polynomial of w in the tensor algebra K[x,y]/(h1(x),h2(y)) with
// coprime degrees a, b: the algebra is the field F_{|K|^(ab)}, so a full-
// degree minimal polynomial is automatically irreducible.
std::vector<FF> tensor_minpoly_search(const SmallField& K, const std::vector<FF>& h1,
                                      const std::vector<FF>& h2) {
    uint32_t a = (uint32_t)h1.size() - 1, b = (uint32_t)h2.size() - 1;
    uint32_t n = a * b;
    auto idx = [a](uint32_t i, uint32_t j) { return j * a + i; };
    // multiplication by x and by y on coefficient vectors
    auto mul_x = [&](const std::vector<FF>& v) {
        std::vector<FF> r(n, 0);
        for (uint32_t j = 0; j < b; ++j) {
            FF top = v[idx(a - 1, j)];
            for (uint32_t i = a - 1; i > 0; --i) r[idx(i, j)] = v[idx(i - 1, j)];
            r[idx(0, j)] = 0;
            if (top != 0)
                for (uint32_t i = 0; i < a; ++i)
                    r[idx(i, j)] = K.sub(r[idx(i, j)], K.mul(top, h1[i]));
        }
        return r;
    };
    auto mul_y = [&](const std::vector<FF>& v) {
        std::vector<FF> r(n, 0);
        for (uint32_t i = 0; i < a; ++i) {
            FF top = v[idx(i, b - 1)];
            for (uint32_t j = b - 1; j > 0; --j) r[idx(i, j)] = v[idx(i, j - 1)];
            r[idx(i, 0)] = 0;
            if (top != 0)
                for (uint32_t j = 0; j < b; ++j)
                    r[idx(i, j)] = K.sub(r[idx(i, j)], K.mul(top, h2[j]));
        }
        return r;
    };
    uint64_t seed = 0x5eedf00d;
    for (int trial = 0; trial < 200; ++trial) {
        // w = x + y on the first try, then pseudo-random elements
        std::vector<FF> w(n, 0);
        if (trial == 0) {
            w[idx(1 % a, 0)] = K.add(w[idx(1 % a, 0)], 1);
            w[idx(0, 1 % b)] = K.add(w[idx(0, 1 % b)], 1);
        } else {
            for (uint32_t i = 0; i < n; ++i) w[i] = (FF)(splitmix64(seed) % K.size());
        }
        // powers w^0 .. w^n
        std::vector<std::vector<FF>> pw(n + 1);
        pw[0].assign(n, 0);
        pw[0][0] = 1;
        for (uint32_t k = 1; k <= n; ++k) {
            // multiply pw[k-1] by w: expand w over the x^i y^j basis
            std::vector<FF> acc(n, 0);
            std::vector<FF> cur = pw[k - 1];  // cur * x^i y^j accumulated below
            // Horner over j then i is overkill; w is arbitrary, so do the
            // straightforward sum of shifted copies.
            std::vector<FF> xi = pw[k - 1];
            for (uint32_t i = 0; i < a; ++i) {
                std::vector<FF> xiyj = xi;
                for (uint32_t j = 0; j < b; ++j) {
                    FF coeff = w[idx(i, j)];
                    if (coeff != 0)
                        for (uint32_t t = 0; t < n; ++t)
                            acc[t] = K.add(acc[t], K.mul(coeff, xiyj[t]));
                    if (j + 1 < b) xiyj = mul_y(xiyj);
                }
                if (i + 1 < a) xi = mul_x(xi);
            }
            pw[k] = std::move(acc);
        }
        Mat M(n, n);
        for (uint32_t c = 0; c < n; ++c)
            for (uint32_t r = 0; r < n; ++r) M.at(r, c) = pw[c][r];
        LinearSolve sol = solve_linear(K, M, pw[n]);
        if (!sol.consistent || !sol.unique) continue;  // w generates a proper subfield
        std::vector<FF> minpoly(n + 1, 0);
        minpoly[n] = 1;
        for (uint32_t i = 0; i < n; ++i) minpoly[i] = K.neg(sol.x[i]);
        return minpoly;
    }
    throw std::runtime_error("tensor_minpoly_search: no primitive element found");
}

}  // namespace

std::vector<FF> find_irreducible(FieldPtr K, uint32_t degree) {
    if (degree == 0) throw std::invalid_argument("find_irreducible: degree >= 1");
    if (degree == 1) return {0, 1};
    // prime-power factor split
    std::vector<uint32_t> parts;
    uint32_t rem = degree;
    for (uint32_t d = 2; d * d <= rem; ++d)
        if (rem % d == 0) {
            uint32_t pp = 1;
            while (rem % d == 0) {
                rem /= d;
                pp *= d;
            }
            parts.push_back(pp);
        }
    if (rem > 1) parts.push_back(rem);
    std::vector<std::vector<FF>> mods;
    for (uint32_t pp : parts) {
        if (pp > kSeqSearchCap)
            throw std::runtime_error("find_irreducible: extension search overflow (prime-power degree " +
                                     std::to_string(pp) + ")");
        // lexicographic scan over monic degree-pp polynomials
        uint64_t cap = 1;
        bool found = false;
        std::vector<FF> mod;
        for (uint32_t i = 0; i < pp && cap <= (1ull << 40); ++i) cap *= K->size();
        for (uint64_t t = 0; t < cap; ++t) {
            std::vector<FF> m(pp + 1, 0);
            uint64_t v = t;
            for (uint32_t i = 0; i < pp; ++i) {
                m[i] = (FF)(v % K->size());
                v /= K->size();
            }
            m[pp] = 1;
            if (is_irreducible(*K, Poly(m))) {
                mod = std::move(m);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("find_irreducible: exhausted candidates");
        mods.push_back(std::move(mod));
    }
    std::vector<FF> acc = mods[0];
    for (size_t i = 1; i < mods.size(); ++i) acc = tensor_minpoly_search(*K, acc, mods[i]);
    return acc;
}

ExtField ext_field_build(FieldPtr K, uint32_t degree) {
    return ExtField(K, find_irreducible(K, degree));
}

ExtField::Elem linearized_eval_ext(const ExtField& E, const SkewPolyF& f,
                                   const ExtField::Elem& x) {
    ExtField::Elem acc = E.zero(), xp = x;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] != 0) acc = E.add(acc, E.scale(f.c[i], xp));
        if (i + 1 < f.c.size()) xp = E.pow(xp, f.twist_q);
    }
    return acc;
}

KernelBasis linearized_kernel(const SkewPolyF& f) {
    if (f.is_zero() || f.c[0] == 0)
        throw std::domain_error("linearized_kernel: bad reduction (zero tau^0 coefficient)");
    const SmallField& K = *f.K;
    uint32_t r = (uint32_t)f.tau_degree_or(0);
    if (r == 0) {
        // nonzero constant times identity map: kernel is {0}
        KernelBasis kb{ExtField(f.K, {0, 1}), {}, 1};
        return kb;
    }
    uint64_t dense = 1;
    for (uint32_t i = 0; i < r; ++i) {
        dense *= f.twist_q;
        if (dense > kDenseDegreeCap)
            throw std::runtime_error("linearized_kernel: extension search overflow (dense degree)");
    }
    // h1 := linearized(f)/x, squarefree since f is separable
    Poly h = to_linearized(f);
    std::vector<FF> h1c(h.c.begin() + 1, h.c.end());
    Poly h1(std::move(h1c));
    h1 = make_monic(K, h1);
    // minimal d' with all roots in F_{|K|^d'}: first d' with x^{|K|^d'} = x mod h1
    uint64_t cap = 1;
    for (uint32_t i = 0; i < r; ++i) {
        cap *= f.twist_q;
        if (cap > kSplitScanCap) {
            cap = kSplitScanCap;
            break;
        }
    }
    Poly x = Poly::var();
    Poly fr = x;
    uint32_t dprime = 0;
    for (uint64_t j = 1; j <= cap; ++j) {
        fr = poly_powmod(K, fr, K.size(), h1);
        if (fr == x) {
            dprime = (uint32_t)j;
            break;
        }
    }
    if (dprime == 0) throw std::runtime_error("linearized_kernel: extension search overflow (no splitting degree <= bound)");

    ExtField E = ext_field_build(f.K, dprime);
    uint64_t q0 = f.twist_q;
    uint32_t N = E.fq_dim(q0);
    Mat frob = E.frobenius_matrix(q0);
    // columns: f(e_j) for the flattened F_q-basis
    Mat M(N, N);
    for (uint32_t j = 0; j < N; ++j) {
        std::vector<FF> v(N, 0);
        v[j] = 1;
        ExtField::Elem e = E.unflatten(v, q0);
        // accumulate c_i * Frob^i(e) via repeated matrix application
        std::vector<FF> cur = v;
        ExtField::Elem acc = E.scale(f.c[0], e);
        for (uint32_t i = 1; i <= r; ++i) {
            cur = mat_vec(E.fq(q0), frob, cur);
            if (f.coeff(i) != 0)
                acc = E.add(acc, E.scale(f.coeff(i), E.unflatten(cur, q0)));
        }
        std::vector<FF> col = E.flatten(acc, q0);
        for (uint32_t rr = 0; rr < N; ++rr) M.at(rr, j) = col[rr];
    }
    const SmallField& Fq = E.fq(q0);
    auto kb = kernel_basis(Fq, M);
    if (kb.size() != r)
        throw std::runtime_error("linearized_kernel: kernel dimension " + std::to_string(kb.size()) +
                                 " != tau-degree " + std::to_string(r));
    KernelBasis out{std::move(E), {}, dprime};
    for (auto& v : kb) out.basis.push_back(out.E.unflatten(v, q0));
    return out;
}

}  // namespace drincert
