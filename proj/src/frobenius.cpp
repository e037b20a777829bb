#include "drincert/frobenius.hpp"

#include <stdexcept>

namespace drincert {

FrobCharPoly frob_charpoly_deg1(const DrinfeldModule& phi, FF c) {
    const SmallField& F = phi.F();
    if (c == 0) throw std::domain_error("frob_charpoly_deg1: bad reduction at (T)");
    if (!phi.in_family()) throw std::invalid_argument("frob_charpoly_deg1: module not in family");
    Poly gen = poly_sub(F, Poly::var(), Poly::constant(c));
    FrobCharPoly P;
    P.prime = make_prime_ideal(F, gen);
    P.rank = 3;
    P.a.resize(3);
    P.a[1] = Poly::constant(1);
    FF g1c = poly_eval(F, phi.g1, c);
    P.a[2] = Poly::constant(g1c == 0 ? 0 : F.pow(g1c, F.size() - 1));
    P.mu = 1;
    return P;
}

namespace {

// tau^k as a skew polynomial over K
SkewPolyF tau_power(FieldPtr K, uint64_t twist_q, uint32_t k) {
    std::vector<FF> c(k + 1, 0);
    c[k] = 1;
    return skew_f(std::move(K), twist_q, std::move(c));
}

// flatten an F_p coefficient into F_q coordinates (d of them)
void append_fq_coords(const ResidueField& R, FF a, std::vector<FF>& out) {
    if (R.ideal.degree == 1) {
        out.push_back(a);
        return;
    }
    for (int i = 0; i < R.ideal.degree; ++i) out.push_back(R.K->coeff(a, (uint32_t)i));
}

}  // namespace

FrobCharPoly frob_charpoly_solve(const ReducedModule& psi) {
    if (psi.type != ReductionType::Good)
        throw std::invalid_argument("frob_charpoly_solve: good reduction required");
    const ResidueField& R = psi.R;
    const SmallField& Fq = *R.Fq;
    uint64_t q = Fq.size();
    int d = psi.prime.degree;
    int r = psi.psiT.tau_degree_or(0);
    if (r < 1) throw std::invalid_argument("frob_charpoly_solve: rank 0 reduction");

    // psi_{T^j} for j = 0..max degree bound
    std::vector<int> bound((size_t)r, 0);  // bound[i-1] = deg cap of a_i
    int maxb = 0;
    for (int i = 1; i < r; ++i) {
        bound[(size_t)i - 1] = (int)((i * (int64_t)d + r - 1) / r);  // ceil(i*d/r)
        maxb = std::max(maxb, bound[(size_t)i - 1]);
    }
    std::vector<SkewPolyF> psiTj;
    psiTj.push_back(skew_f(R.K, q, {1}));
    int needed = std::max(maxb, d);
    for (int j = 1; j <= needed; ++j) psiTj.push_back(skew_mul(psiTj.back(), psi.psiT));

    // psi_p = sum p_k psi_{T^k}
    SkewPolyF psi_p = skew_f(R.K, q, {});
    for (size_t k = 0; k < psi.prime.gen.c.size(); ++k) {
        FF pk = psi.prime.gen.c[k];
        if (pk != 0) psi_p = skew_add(psi_p, skew_scale(psiTj[k], R.eval_fq(pk)));
    }

    // columns: a_i coefficient alpha_{i,j} multiplies psi_{T^j} * tau^{d(r-i)};
    // final column is mu multiplying -psi_p. RHS = -pi^r = -tau^{dr}.
    struct Col {
        SkewPolyF s;
    };
    std::vector<Col> cols;
    for (int i = 1; i < r; ++i) {
        SkewPolyF pw = tau_power(R.K, q, (uint32_t)(d * (r - i)));
        for (int j = 0; j <= bound[(size_t)i - 1]; ++j)
            cols.push_back({skew_mul(psiTj[(size_t)j], pw)});
    }
    {
        SkewPolyF neg;
        neg = skew_scale(psi_p, R.K->neg(1));
        cols.push_back({neg});
    }
    SkewPolyF rhs = skew_scale(tau_power(R.K, q, (uint32_t)(d * r)), R.K->neg(1));

    int max_tau = rhs.tau_degree_or(0);
    for (const auto& col : cols) max_tau = std::max(max_tau, col.s.tau_degree_or(0));

    size_t nrows = (size_t)(max_tau + 1) * (size_t)d;
    Mat M(nrows, cols.size());
    std::vector<FF> b;
    b.reserve(nrows);
    for (int t = 0; t <= max_tau; ++t) {
        std::vector<FF> coords;
        append_fq_coords(R, rhs.coeff((size_t)t), coords);
        for (FF x : coords) b.push_back(x);
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<FF> cc;
            append_fq_coords(R, cols[c].s.coeff((size_t)t), cc);
            for (size_t k = 0; k < cc.size(); ++k)
                M.at((size_t)t * (size_t)d + k, c) = cc[k];
        }
    }
    LinearSolve sol = solve_linear(Fq, M, b);
    if (!sol.consistent || !sol.unique)
        throw std::runtime_error("internal: charpoly system degenerate");

    FrobCharPoly P;
    P.prime = psi.prime;
    P.rank = r;
    P.a.assign((size_t)r, Poly());
    size_t pos = 0;
    for (int i = 1; i < r; ++i) {
        std::vector<FF> coeffs;
        for (int j = 0; j <= bound[(size_t)i - 1]; ++j) coeffs.push_back(sol.x[pos++]);
        P.a[(size_t)i] = Poly(std::move(coeffs));
    }
    P.mu = sol.x[pos++];
    if (P.mu == 0) throw std::runtime_error("internal: charpoly system degenerate");

    // exact re-substitution
    SkewPolyF acc = tau_power(R.K, q, (uint32_t)(d * r));
    for (int i = 1; i < r; ++i) {
        SkewPolyF psi_ai = skew_f(R.K, q, {});
        for (size_t k = 0; k < P.a[(size_t)i].c.size(); ++k)
            if (P.a[(size_t)i].c[k] != 0)
                psi_ai = skew_add(psi_ai, skew_scale(psiTj[k], R.eval_fq(P.a[(size_t)i].c[k])));
        acc = skew_add(acc, skew_mul(psi_ai, tau_power(R.K, q, (uint32_t)(d * (r - i)))));
    }
    acc = skew_add(acc, skew_scale(psi_p, R.K->neg(R.eval_fq(P.mu))));
    if (!acc.is_zero()) throw std::runtime_error("internal: charpoly re-substitution failed");
    return P;
}

FrobMatrix frob_matrix_oracle(const ReducedModule& psi, const PrimeIdeal& l) {
    if (psi.type != ReductionType::Good)
        throw std::invalid_argument("frob_matrix_oracle: good reduction required");
    if (l.gen == psi.prime.gen) throw std::invalid_argument("frob_matrix_oracle: l must differ from p");
    const SmallField& Fq = *psi.R.Fq;
    uint64_t q = Fq.size();

    SkewPolyF psi_l = psi.reduce_phi_a(l.gen);
    int r = psi_l.tau_degree_or(0);
    KernelBasis kb = linearized_kernel(psi_l);
    const ExtField& E = kb.E;
    uint32_t N = E.fq_dim(q);
    if ((int)kb.basis.size() != r)
        throw std::runtime_error("frob_matrix_oracle: unexpected kernel dimension");

    // T-action theta and |F_p|-power Frobenius on the kernel
    auto theta = [&](const ExtField::Elem& v) { return linearized_eval_ext(E, psi.psiT, v); };
    auto frob = [&](const ExtField::Elem& v) { return E.pow(v, psi.R.K->size()); };

    int dl = l.degree;
    if (r % dl != 0)
        throw std::runtime_error("frob_matrix_oracle: kernel dimension not a multiple of deg l");
    int rank = r / dl;

    // greedy F_l-basis: vectors v with {theta^m v} spanning the kernel
    std::vector<ExtField::Elem> chosen;
    std::vector<std::vector<FF>> span_cols;  // flattened theta^m(v_j)
    auto fl = [&](const ExtField::Elem& v) { return E.flatten(v, q); };
    auto in_span = [&](const std::vector<FF>& v) {
        if (span_cols.empty()) {
            for (FF x : v)
                if (x) return false;
            return true;
        }
        Mat M(N, span_cols.size());
        for (size_t c = 0; c < span_cols.size(); ++c)
            for (uint32_t rr = 0; rr < N; ++rr) M.at(rr, c) = span_cols[c][rr];
        return solve_linear(Fq, M, v).consistent;
    };
    for (const auto& w : kb.basis) {
        if ((int)chosen.size() == rank) break;
        if (in_span(fl(w))) continue;
        chosen.push_back(w);
        ExtField::Elem cur = w;
        for (int m = 0; m < dl; ++m) {
            span_cols.push_back(fl(cur));
            if (m + 1 < dl) cur = theta(cur);
        }
    }
    if ((int)chosen.size() != rank)
        throw std::runtime_error("frob_matrix_oracle: kernel dimension != " + std::to_string(rank) +
                                 " over F_l");

    // coordinates of Frobenius images in the chosen basis
    Mat S(N, span_cols.size());
    for (size_t c = 0; c < span_cols.size(); ++c)
        for (uint32_t rr = 0; rr < N; ++rr) S.at(rr, c) = span_cols[c][rr];
    FrobMatrix out;
    out.Fl = make_residue_field(psi.R.Fq, l);
    out.rank = rank;
    out.splitting_degree = kb.splitting_degree;
    for (const auto& v : chosen) out.basis.push_back(fl(v));
    out.m = Mat((size_t)rank, (size_t)rank);
    for (int j = 0; j < rank; ++j) {
        LinearSolve sol = solve_linear(Fq, S, fl(frob(chosen[(size_t)j])));
        if (!sol.consistent || !sol.unique)
            throw std::runtime_error("frob_matrix_oracle: Frobenius image outside kernel span");
        for (int i = 0; i < rank; ++i) {
            std::vector<FF> digs(sol.x.begin() + i * dl, sol.x.begin() + (i + 1) * dl);
            out.m.at((size_t)i, (size_t)j) = out.Fl.K->from_coeffs(digs);
        }
    }
    if (mat_det(*out.Fl.K, out.m) == 0)
        throw std::runtime_error("frob_matrix_oracle: singular Frobenius matrix");
    return out;
}

CharpolyModL charpoly_mod(const FrobCharPoly& P, const ResidueField& R) {
    CharpolyModL out;
    int r = P.rank;
    out.c.assign((size_t)r + 1, 0);
    out.c[(size_t)r] = 1;
    for (int i = 1; i < r; ++i) out.c[(size_t)(r - i)] = R.reduce(P.a[(size_t)i]);
    const SmallField& K = *R.K;
    FF p_bar = R.reduce(P.prime.gen);
    out.c[0] = K.neg(K.mul(R.eval_fq(P.mu), p_bar));
    out.trace = K.neg(out.c[(size_t)r - 1]);
    out.det = (r % 2 == 0) ? out.c[0] : K.neg(out.c[0]);
    FF tr3 = K.mul(out.trace, K.mul(out.trace, out.trace));
    if (out.det != 0) out.tr3_over_det = K.div(tr3, out.det);
    if (tr3 != 0 && out.det != 0) out.det_over_tr3 = K.div(out.det, tr3);
    return out;
}

CharpolyModRing charpoly_mod(const FrobCharPoly& P, const ResidueRing& ring) {
    CharpolyModRing out;
    int r = P.rank;
    out.c.assign((size_t)r + 1, 0);
    out.c[(size_t)r] = ring.encode(Poly::constant(1));
    for (int i = 1; i < r; ++i) out.c[(size_t)(r - i)] = ring.encode(P.a[(size_t)i]);
    uint64_t p_bar = ring.encode(P.prime.gen);
    uint64_t mu = ring.encode(Poly::constant(P.mu));
    out.c[0] = ring.neg(ring.mul(mu, p_bar));
    out.trace = ring.neg(out.c[(size_t)r - 1]);
    out.det = (r % 2 == 0) ? out.c[0] : ring.neg(out.c[0]);
    uint64_t tr3 = ring.mul(out.trace, ring.mul(out.trace, out.trace));
    if (ring.is_unit(out.det)) out.tr3_over_det = ring.mul(tr3, ring.inv(out.det));
    if (ring.is_unit(tr3) && ring.is_unit(out.det)) out.det_over_tr3 = ring.mul(out.det, ring.inv(tr3));
    return out;
}

}  // namespace drincert
