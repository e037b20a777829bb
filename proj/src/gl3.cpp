#include "drincert/gl3.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace drincert {

namespace {

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> f;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            f.emplace_back(d, e);
        }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

GroupOrder go_from_parts(const std::vector<uint64_t>& parts) {
    GroupOrder g;
    g.value = 1;
    std::map<uint64_t, int> acc;
    for (uint64_t p : parts) {
        g.value *= (unsigned __int128)p;
        for (auto [pr, e] : factor_u64(p)) acc[pr] += e;
    }
    for (auto [pr, e] : acc) g.factors.emplace_back(pr, e);
    return g;
}

GroupOrder go_divide(const GroupOrder& g, uint64_t d) {
    GroupOrder r = g;
    for (auto [pr, e] : factor_u64(d)) {
        bool found = false;
        for (auto& [p2, e2] : r.factors)
            if (p2 == pr) {
                if (e2 < e) throw std::logic_error("go_divide: not divisible");
                e2 -= e;
                found = true;
            }
        if (!found) throw std::logic_error("go_divide: not divisible");
        for (int i = 0; i < e; ++i) r.value /= pr;
    }
    r.factors.erase(std::remove_if(r.factors.begin(), r.factors.end(),
                                   [](const std::pair<uint64_t, int>& f) { return f.second == 0; }),
                    r.factors.end());
    return r;
}

}  // namespace

std::string GroupOrder::value_str() const {
    unsigned __int128 v = value;
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s += (char)('0' + (int)(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

bool GroupOrder::divisible_by(uint64_t d) const {
    for (auto [pr, e] : factor_u64(d)) {
        int have = 0;
        for (auto [p2, e2] : factors)
            if (p2 == pr) have = e2;
        if (have < e) return false;
    }
    return true;
}

GroupOrder group_order_from(unsigned __int128 value) {
    if (value > (unsigned __int128)UINT64_MAX)
        throw std::invalid_argument("group_order_from: use factored construction");
    return go_from_parts({(uint64_t)value});
}

ClassicalOrders classical_orders(uint64_t q) {
    if (q < 2) throw std::invalid_argument("classical_orders: prime power >= 2 required");
    auto qf = factor_u64(q);
    if (qf.size() != 1) throw std::invalid_argument("classical_orders: q must be a prime power");
    ClassicalOrders t;
    t.q = q;
    uint64_t q2 = q * q, q3 = q * q * q;
    t.gl3 = go_from_parts({q, q, q, q3 - 1, q2 - 1, q - 1});
    t.sl3 = go_from_parts({q, q, q, q3 - 1, q2 - 1});
    t.pgl3 = t.sl3;
    uint64_t z = std::gcd<uint64_t>(3, q - 1);
    t.psl3 = go_divide(t.sl3, z);
    t.wreath_gl1_s3 = go_from_parts({q - 1, q - 1, q - 1, 6});
    t.torus_gl1_q3 = go_from_parts({q3 - 1});
    uint64_t s = (uint64_t)std::llround(std::sqrt((double)q));
    if (s * s == q)
        t.gu3 = go_from_parts({s, s, s, s + 1, s * s - 1, s * s * s + 1});
    t.go3 = go_from_parts({2, q, q2 - 1});
    t.extraspecial = go_from_parts({8, 81});
    t.s_class.push_back(go_from_parts({168, z}));  // PSL3(2) x Z(SL3(F_q))
    t.s_class.push_back(go_from_parts({1080}));    // 3.A6
    t.s_class.push_back(go_from_parts({2160}));    // 3.A6.2_3
    t.s_class.push_back(go_from_parts({7560}));    // 3.A7
    return t;
}

SieveVerdict aschbacher_sieve(const SieveEvidence& ev) {
    SieveVerdict v;
    ClassicalOrders t = classical_orders(ev.q_prime);
    uint64_t D = ev.divisor;
    auto push = [&](const std::string& cls, ClassOutcome o, const std::string& why) {
        v.classes.push_back({cls, o, why});
    };

    // C1: reducible stabilizers
    if (ev.irreducible)
        push("C1", ClassOutcome::Excluded, "action on F_(q')^3 is irreducible");
    else
        push("C1", ClassOutcome::Failed, "irreducibility evidence missing");

    // C2: imprimitive GL1 wr S3
    if (!t.wreath_gl1_s3.divisible_by(D))
        push("C2", ClassOutcome::Excluded,
             "divisor " + std::to_string(D) + " does not divide (q'-1)^3*6 = " + t.wreath_gl1_s3.value_str());
    else
        push("C2", ClassOutcome::Failed, "divisor divides the wreath order");

    // C3: field extension torus GL1(F_(q'^3))
    if (!t.torus_gl1_q3.divisible_by(D))
        push("C3", ClassOutcome::Excluded,
             "divisor does not divide q'^3-1 = " + t.torus_gl1_q3.value_str());
    else
        push("C3", ClassOutcome::Failed, "divisor divides q'^3-1");

    // C4: tensor decomposition needs 3 = m*n with 1 < m <= n
    push("C4", ClassOutcome::NotApplicable, "no integer between 1 and sqrt(3)");

    // C5: subfield subgroups <Z, GL3(F_q0)>
    {
        auto qf = factor_u64(ev.q_prime);
        uint64_t p = qf[0].first;
        int eprime = qf[0].second;
        if (eprime == 1) {
            push("C5", ClassOutcome::NotApplicable, "q' is prime: no proper subfield");
        } else {
            bool all_excluded = true;
            std::string why;
            for (int d = 2; d <= eprime; ++d) {
                if (eprime % d) continue;
                uint64_t q0 = 1;
                for (int i = 0; i < eprime / d; ++i) q0 *= p;
                GroupOrder o = go_from_parts({q0, q0, q0, ev.q_prime - 1, q0 * q0 * q0 - 1, q0 * q0 - 1});
                if (o.divisible_by(D)) {
                    all_excluded = false;
                    why = "divisor divides the subfield-subgroup order at q0 = " + std::to_string(q0);
                    break;
                }
                if (!why.empty()) why += "; ";
                why += "q0 = " + std::to_string(q0) + ": divisor does not divide q0^3(q'-1)(q0^3-1)(q0^2-1) = " +
                       o.value_str();
            }
            push("C5", all_excluded ? ClassOutcome::Excluded : ClassOutcome::Failed, why);
        }
    }

    // C6: extraspecial normalizer, only at prime q' = p = 1 (mod 3)
    {
        auto qf = factor_u64(ev.q_prime);
        bool applicable = qf[0].second == 1 && ev.q_prime % 3 == 1;
        if (!applicable)
            push("C6", ClassOutcome::NotApplicable, "requires q' = p prime with p = 1 (mod 3)");
        else if (!t.extraspecial.divisible_by(D))
            push("C6", ClassOutcome::Excluded, "divisor does not divide |3^(1+2).Sp2(3)| = 648");
        else
            push("C6", ClassOutcome::Failed, "divisor divides 648");
    }

    // C7: tensor-induced needs 3 = m^t, t >= 2
    push("C7", ClassOutcome::NotApplicable, "3 is not a proper power");

    // C8: classical forms
    {
        std::string why = "(i) symplectic: none in odd dimension";
        bool all_excluded = true;
        if (t.gu3) {
            if (!t.gu3->divisible_by(D))
                why += "; (ii) unitary: divisor does not divide |GU3| = " + t.gu3->value_str();
            else {
                all_excluded = false;
                why += "; (ii) unitary: divisor divides |GU3|";
            }
        } else {
            why += "; (ii) unitary: q' is not a square";
        }
        if (!t.go3.divisible_by(D))
            why += "; (iii) orthogonal: divisor does not divide |GO3| = " + t.go3.value_str();
        else {
            all_excluded = false;
            why += "; (iii) orthogonal: divisor divides |GO3|";
        }
        push("C8", all_excluded ? ClassOutcome::Excluded : ClassOutcome::Failed, why);
    }

    // S: almost-simple candidates inside SL3, tested against |M n SL3|
    {
        if (!ev.det_full) {
            push("S", ClassOutcome::Failed, "full determinant evidence missing (needed for |M n SL3|)");
        } else if (!ev.center_contained) {
            push("S", ClassOutcome::Failed, "center containment evidence missing");
        } else {
            bool all_excluded = true;
            std::string why;
            const char* names[] = {"PSL3(2)xZ", "3.A6", "3.A6.2_3", "3.A7"};
            for (size_t i = 0; i < t.s_class.size(); ++i) {
                if (t.s_class[i].divisible_by(D)) {
                    all_excluded = false;
                    why = std::string(names[i]) + " order is divisible by the divisor";
                    break;
                }
            }
            if (all_excluded)
                why = "divisor (q')^2 divides none of the candidate orders {" +
                      t.s_class[0].value_str() + ", " + t.s_class[1].value_str() + ", " +
                      t.s_class[2].value_str() + ", " + t.s_class[3].value_str() + "}";
            push("S", all_excluded ? ClassOutcome::Excluded : ClassOutcome::Failed, why);
        }
    }

    v.surjective = true;
    for (const auto& c : v.classes)
        if (c.outcome == ClassOutcome::Failed) v.surjective = false;
    return v;
}

// ---------------------------------------------------------------- Prop 7.2

namespace {

struct M3 {
    std::array<uint8_t, 9> m{};
};

struct GroupCtx {
    uint32_t q;
    std::vector<M3> elems;          // all invertible matrices in index order
    std::vector<int32_t> pos_of;    // q^9-sized index -> position or -1
    std::vector<int> class_of;      // position -> class id
    std::vector<std::vector<int>> class_members;  // class id -> positions
    std::vector<int> class_rep;     // class id -> position
    std::vector<int> class_inv;     // class id of rep^-1
    std::vector<std::vector<uint32_t>> prod_mask;  // classes hit by rep_i * class_j

    uint32_t encode(const M3& a) const {
        uint32_t idx = 0;
        for (int i = 8; i >= 0; --i) idx = idx * q + a.m[(size_t)i];
        return idx;
    }
    M3 decode(uint32_t idx) const {
        M3 a;
        for (int i = 0; i < 9; ++i) {
            a.m[(size_t)i] = (uint8_t)(idx % q);
            idx /= q;
        }
        return a;
    }
    M3 mul(const M3& a, const M3& b) const {
        M3 c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                uint32_t s = 0;
                for (int k = 0; k < 3; ++k)
                    s += (uint32_t)a.m[(size_t)(3 * i + k)] * b.m[(size_t)(3 * k + j)];
                c.m[(size_t)(3 * i + j)] = (uint8_t)(s % q);
            }
        return c;
    }
    uint32_t det(const M3& a) const {
        auto v = [&](int i, int j) { return (int64_t)a.m[(size_t)(3 * i + j)]; };
        int64_t d = v(0, 0) * (v(1, 1) * v(2, 2) - v(1, 2) * v(2, 1)) -
                    v(0, 1) * (v(1, 0) * v(2, 2) - v(1, 2) * v(2, 0)) +
                    v(0, 2) * (v(1, 0) * v(2, 1) - v(1, 1) * v(2, 0));
        d %= (int64_t)q;
        if (d < 0) d += q;
        return (uint32_t)d;
    }
    M3 inverse(const M3& a) const {
        // adjugate / det
        auto v = [&](int i, int j) { return (int64_t)a.m[(size_t)(3 * i + j)]; };
        int64_t co[9];
        co[0] = v(1, 1) * v(2, 2) - v(1, 2) * v(2, 1);
        co[1] = -(v(0, 1) * v(2, 2) - v(0, 2) * v(2, 1));
        co[2] = v(0, 1) * v(1, 2) - v(0, 2) * v(1, 1);
        co[3] = -(v(1, 0) * v(2, 2) - v(1, 2) * v(2, 0));
        co[4] = v(0, 0) * v(2, 2) - v(0, 2) * v(2, 0);
        co[5] = -(v(0, 0) * v(1, 2) - v(0, 2) * v(1, 0));
        co[6] = v(1, 0) * v(2, 1) - v(1, 1) * v(2, 0);
        co[7] = -(v(0, 0) * v(2, 1) - v(0, 1) * v(2, 0));
        co[8] = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
        uint32_t d = det(a);
        // inverse of d mod q by scan (q <= 3)
        uint32_t dinv = 1;
        for (uint32_t x = 1; x < q; ++x)
            if (d * x % q == 1) dinv = x;
        M3 r;
        for (int i = 0; i < 9; ++i) {
            int64_t x = co[(size_t)i] % (int64_t)q;
            if (x < 0) x += q;
            r.m[(size_t)i] = (uint8_t)((uint64_t)x * dinv % q);
        }
        return r;
    }
};

}  // namespace

NormalSolvableReport normal_solvable_center_check(uint32_t q) {
    if (q != 2 && q != 3)
        throw std::invalid_argument(
            "normal_solvable_center_check: enumeration cap is q in {2, 3}");
    GroupCtx G;
    G.q = q;
    uint32_t total = 1;
    for (int i = 0; i < 9; ++i) total *= q;
    G.pos_of.assign(total, -1);
    for (uint32_t idx = 0; idx < total; ++idx) {
        M3 a = G.decode(idx);
        if (G.det(a) == 0) continue;
        G.pos_of[idx] = (int32_t)G.elems.size();
        G.elems.push_back(a);
    }
    size_t n = G.elems.size();

    NormalSolvableReport rep;
    rep.group_order = n;

    // conjugacy classes: orbit of each representative under all conjugations
    G.class_of.assign(n, -1);
    for (size_t pos = 0; pos < n; ++pos) {
        if (G.class_of[pos] >= 0) continue;
        int cid = (int)G.class_members.size();
        G.class_members.push_back({});
        G.class_rep.push_back((int)pos);
        const M3& x = G.elems[pos];
        for (size_t gp = 0; gp < n; ++gp) {
            M3 y = G.mul(G.mul(G.elems[gp], x), G.inverse(G.elems[gp]));
            int32_t ypos = G.pos_of[G.encode(y)];
            if (G.class_of[(size_t)ypos] < 0) {
                G.class_of[(size_t)ypos] = cid;
                G.class_members[(size_t)cid].push_back(ypos);
            }
        }
    }
    size_t ncls = G.class_members.size();
    rep.n_conjugacy_classes = ncls;
    if (ncls > 30) throw std::runtime_error("normal_solvable_center_check: class count exceeds subset cap");

    G.class_inv.assign(ncls, -1);
    for (size_t c = 0; c < ncls; ++c) {
        M3 inv = G.inverse(G.elems[(size_t)G.class_rep[c]]);
        G.class_inv[c] = G.class_of[(size_t)G.pos_of[G.encode(inv)]];
    }
    G.prod_mask.assign(ncls, std::vector<uint32_t>(ncls, 0));
    for (size_t i = 0; i < ncls; ++i) {
        const M3& ri = G.elems[(size_t)G.class_rep[i]];
        for (size_t j = 0; j < ncls; ++j) {
            uint32_t mask = 0;
            for (int mp : G.class_members[j]) {
                M3 prod = G.mul(ri, G.elems[(size_t)mp]);
                mask |= 1u << G.class_of[(size_t)G.pos_of[G.encode(prod)]];
            }
            G.prod_mask[i][j] = mask;
        }
    }

    // identity class first
    uint32_t idmask = 0;
    {
        M3 I;
        for (int i = 0; i < 3; ++i) I.m[(size_t)(3 * i + i)] = 1;
        idmask = 1u << G.class_of[(size_t)G.pos_of[G.encode(I)]];
    }
    std::vector<uint64_t> cls_size(ncls);
    for (size_t c = 0; c < ncls; ++c) cls_size[c] = G.class_members[c].size();

    // enumerate class-closed subsets containing the identity class,
    // pruned by Lagrange divisibility
    std::vector<uint32_t> normal_masks;
    int idbit = 0;
    while (!((idmask >> idbit) & 1)) ++idbit;
    uint32_t nfree = (uint32_t)ncls - 1;
    for (uint64_t m = 0; m < (1ull << nfree); ++m) {
        // insert forced identity bit
        uint32_t mask = (uint32_t)(((m >> idbit) << (idbit + 1)) | (m & ((1ull << idbit) - 1)) |
                                   (1u << idbit));
        uint64_t sum = 0;
        for (uint32_t b = mask; b;) {
            int c = std::countr_zero(b);
            sum += cls_size[(size_t)c];
            b &= b - 1;
        }
        if (n % sum) continue;
        // inverse closure
        bool ok = true;
        for (uint32_t b = mask; b && ok;) {
            int c = std::countr_zero(b);
            if (!((mask >> G.class_inv[(size_t)c]) & 1)) ok = false;
            b &= b - 1;
        }
        if (!ok) continue;
        for (uint32_t b1 = mask; b1 && ok;) {
            int i = std::countr_zero(b1);
            for (uint32_t b2 = mask; b2 && ok;) {
                int j = std::countr_zero(b2);
                if ((G.prod_mask[(size_t)i][(size_t)j] | mask) != mask) ok = false;
                b2 &= b2 - 1;
            }
            b1 &= b1 - 1;
        }
        if (ok) normal_masks.push_back(mask);
    }
    std::sort(normal_masks.begin(), normal_masks.end(), [&](uint32_t a, uint32_t b) {
        uint64_t sa = 0, sb = 0;
        for (uint32_t x = a; x;) {
            sa += cls_size[(size_t)std::countr_zero(x)];
            x &= x - 1;
        }
        for (uint32_t x = b; x;) {
            sb += cls_size[(size_t)std::countr_zero(x)];
            x &= x - 1;
        }
        return sa < sb;
    });

    auto mask_order = [&](uint32_t mask) {
        uint64_t s = 0;
        for (uint32_t x = mask; x;) {
            s += cls_size[(size_t)std::countr_zero(x)];
            x &= x - 1;
        }
        return s;
    };

    // derived subgroup within the normal lattice: smallest normal subgroup
    // containing every commutator [rep_a, b], a-classes and b in N
    auto derived = [&](uint32_t nmask) -> uint32_t {
        uint32_t commmask = 0;
        for (uint32_t b1 = nmask; b1;) {
            int i = std::countr_zero(b1);
            const M3& a = G.elems[(size_t)G.class_rep[i]];
            M3 ainv = G.inverse(a);
            for (uint32_t b2 = nmask; b2;) {
                int j = std::countr_zero(b2);
                for (int bp : G.class_members[(size_t)j]) {
                    const M3& b = G.elems[(size_t)bp];
                    M3 comm = G.mul(G.mul(a, b), G.mul(ainv, G.inverse(b)));
                    commmask |= 1u << G.class_of[(size_t)G.pos_of[G.encode(comm)]];
                }
                b2 &= b2 - 1;
            }
            b1 &= b1 - 1;
        }
        for (uint32_t cand : normal_masks)
            if ((cand & commmask) == commmask && (cand & nmask) == cand) return cand;
        // smallest normal subgroup containing the commutators ([N,N] itself
        // is normal in G, so the scan always finds one)
        throw std::logic_error("derived: no normal subgroup contains the commutators");
    };

    // center = scalar matrices
    uint32_t center_mask = 0;
    for (uint32_t s = 1; s < q; ++s) {
        M3 a;
        for (int i = 0; i < 3; ++i) a.m[(size_t)(3 * i + i)] = (uint8_t)s;
        center_mask |= 1u << G.class_of[(size_t)G.pos_of[G.encode(a)]];
    }

    uint64_t sl3_order = rep.group_order / (q - 1);
    bool all_central = true;
    for (uint32_t nm : normal_masks) {
        NormalSubgroupInfo info;
        info.order = mask_order(nm);
        // solvability: derived series inside the lattice
        uint32_t cur = nm;
        for (int step = 0; step < 40; ++step) {
            uint32_t nxt = derived(cur);
            if (nxt == cur) break;
            cur = nxt;
        }
        info.solvable = mask_order(cur) == 1;
        info.central = (nm | center_mask | idmask) == (center_mask | idmask);
        info.is_center = nm == (center_mask | idmask);
        // det = 1 on every class and the right order
        bool dets_one = true;
        for (uint32_t b = nm; b;) {
            int c = std::countr_zero(b);
            if (G.det(G.elems[(size_t)G.class_rep[c]]) != 1) dets_one = false;
            b &= b - 1;
        }
        info.is_sl3 = dets_one && info.order == sl3_order;
        if (info.solvable && !info.central) all_central = false;
        if (info.is_sl3 && !info.solvable) rep.sl3_detected_nonsolvable = true;
        if (info.is_center) rep.center_found = info.solvable;  // the center is abelian
        rep.normal_subgroups.push_back(info);
    }
    rep.all_solvable_central = all_central;
    rep.ok = all_central && rep.center_found && rep.sl3_detected_nonsolvable;
    return rep;
}

SubringResult subring_generated(const ResidueRing& ring, const std::vector<uint64_t>& gens) {
    const SmallField& F = ring.field();
    uint32_t p = F.characteristic();
    uint32_t e = F.degree_over_prime();
    uint32_t n = (uint32_t)(*ring.modulus().degree()) * e;  // F_p dimension of A/a
    auto Fp = SmallField::prime_field(p);

    auto to_vec = [&](uint64_t idx) {
        Poly a = ring.decode(idx);
        std::vector<FF> v(n, 0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (uint32_t j = 0; j < e; ++j) v[i * e + j] = F.coeff(a.c[i], j);
        return v;
    };

    // rref basis over F_p plus the ring elements that span it
    Mat basis(0, n);
    std::vector<uint64_t> reps;
    auto try_add = [&](uint64_t idx) {
        std::vector<FF> v = to_vec(idx);
        // reduce against current rows
        Mat aug(basis.nrows + 1, n);
        for (size_t r = 0; r < basis.nrows; ++r)
            for (size_t c = 0; c < n; ++c) aug.at(r, c) = basis.at(r, c);
        for (size_t c = 0; c < n; ++c) aug.at(basis.nrows, c) = v[c];
        if (mat_rank(*Fp, aug) > basis.nrows) {
            basis = aug;
            rref(*Fp, basis);
            reps.push_back(idx);
            return true;
        }
        return false;
    };

    try_add(ring.one());
    for (uint64_t g : gens) try_add(g);
    // close under products of spanning elements
    bool grew = true;
    while (grew && reps.size() < n) {
        grew = false;
        size_t cnt = reps.size();
        for (size_t i = 0; i < cnt && reps.size() < n; ++i)
            for (size_t j = i; j < cnt && reps.size() < n; ++j)
                if (try_add(ring.mul(reps[i], reps[j]))) grew = true;
    }
    SubringResult out;
    out.basis = reps;
    out.dim = (uint32_t)basis.nrows;
    out.size = 1;
    for (uint32_t i = 0; i < out.dim; ++i) out.size *= p;
    out.is_full = out.dim == n;
    return out;
}

CosetTestResult coset_trace_test(const ResidueField& R1, const CharpolyModL& P1,
                                 const ResidueField& R2, const CharpolyModL& P2) {
    if (R1.K->size() != R2.K->size()) return CosetTestResult::NotApplicable;
    const SmallField& K2 = *R2.K;
    auto isos = field_isomorphisms(*R1.K, *R2.K);
    FF t1 = P1.trace, d1 = P1.det;
    FF t2 = P2.trace, d2 = P2.det;
    for (const auto& sigma : isos) {
        FF st1 = sigma[t1], sd1 = sigma[d1];
        for (uint64_t l = 1; l < K2.size(); ++l) {
            FF lam = (FF)l;
            if (st1 != K2.mul(lam, t2)) continue;
            FF l3 = K2.mul(lam, K2.mul(lam, lam));
            if (sd1 == K2.mul(l3, d2)) return CosetTestResult::NotRefuted;
        }
    }
    return CosetTestResult::Refuted;
}

}  // namespace drincert
