#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drincert/algebra.hpp"
#include "drincert/frobenius.hpp"

namespace drincert {

// Exact group order with its prime factorization.
struct GroupOrder {
    unsigned __int128 value = 0;
    std::vector<std::pair<uint64_t, int>> factors;  // (prime, exponent), ascending

    std::string value_str() const;
    bool divisible_by(uint64_t d) const;
};

GroupOrder group_order_from(unsigned __int128 value);

// Order table for the sieve: classical groups at q, wreath/torus bounds, the
// extraspecial normalizer, and the S-class candidate orders.
struct ClassicalOrders {
    uint64_t q = 0;
    GroupOrder gl3, sl3, pgl3, psl3;
    GroupOrder wreath_gl1_s3;   // (q-1)^3 * 6
    GroupOrder torus_gl1_q3;    // q^3 - 1
    std::optional<GroupOrder> gu3;  // only when q is a square (at sqrt q)
    GroupOrder go3;             // 2q(q^2-1)
    GroupOrder extraspecial;    // 2^3 * 3^4
    std::vector<GroupOrder> s_class;  // PSL3(2) x Z(SL3), 3.A6, 3.A6.2_3, 3.A7
};

ClassicalOrders classical_orders(uint64_t q);

struct SieveEvidence {
    uint64_t q_prime = 0;  // |F_l|
    bool irreducible = false;
    uint64_t divisor = 0;  // certified divisor of |M|, (q')^2 from the inertia image
    bool det_full = false;
    bool center_contained = false;
};

enum class ClassOutcome { Excluded, NotApplicable, Failed };

struct ClassVerdict {
    std::string cls;  // "C1".."C8", "S"
    ClassOutcome outcome = ClassOutcome::Failed;
    std::string reason;
};

struct SieveVerdict {
    std::vector<ClassVerdict> classes;
    bool surjective = false;  // every class excluded or not-applicable
};

SieveVerdict aschbacher_sieve(const SieveEvidence& ev);

// Brute-force verification that every normal solvable subgroup of GL3(F_q)
// is central, by full enumeration (q in {2, 3}).
struct NormalSubgroupInfo {
    uint64_t order = 0;
    bool solvable = false;
    bool central = false;  // contained in Z(GL3)
    bool is_sl3 = false;
    bool is_center = false;
};

struct NormalSolvableReport {
    uint64_t group_order = 0;
    size_t n_conjugacy_classes = 0;
    std::vector<NormalSubgroupInfo> normal_subgroups;
    bool all_solvable_central = false;
    bool center_found = false;
    bool sl3_detected_nonsolvable = false;
    bool ok = false;
};

NormalSolvableReport normal_solvable_center_check(uint32_t q);

// Closure of S plus {0,1} under + and * inside A/a; full iff it is all of
// A/a. Elements are ResidueRing indices.
struct SubringResult {
    std::vector<uint64_t> basis;  // F_p-basis found (ring indices)
    uint32_t dim = 0;             // F_p-dimension of the closure
    uint64_t size = 0;            // p^dim
    bool is_full = false;
};

SubringResult subring_generated(const ResidueRing& ring, const std::vector<uint64_t>& gens);

// Second-type coset test of the pair argument. P1 is the charpoly data of
// Frob^{-1} on the l1 side, P2 of Frob on the l2 side, same underlying prime.
// Searches all field isomorphisms sigma: F_l1 -> F_l2 and all lambda in
// F_l2^x for trace/det consistency with
//   g ((M1^T)^{-1})^sigma g^{-1} = lambda M2.
enum class CosetTestResult { Refuted, NotRefuted, NotApplicable };

CosetTestResult coset_trace_test(const ResidueField& R1, const CharpolyModL& P1,
                                 const ResidueField& R2, const CharpolyModL& P2);

}  // namespace drincert
