#include "drincert/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace drincert {

std::vector<FF> charpoly(const SmallField& K, const Mat& m) {
    if (m.nrows != m.ncols) throw std::invalid_argument("charpoly: square required");
    size_t n = m.nrows;
    if (n > 6) throw std::invalid_argument("charpoly: size cap exceeded");
    // entries of xI - M are degree <= 1 polys (lo, hi)
    auto entry = [&](size_t i, size_t j) -> std::pair<FF, FF> {
        return {K.neg(m.at(i, j)), i == j ? (FF)1 : (FF)0};
    };
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<FF> acc(n + 1, 0);
    do {
        // permutation sign
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<FF> prod = {1};
        for (size_t i = 0; i < n; ++i) {
            auto [lo, hi] = entry(i, perm[i]);
            std::vector<FF> next(prod.size() + 1, 0);
            for (size_t k = 0; k < prod.size(); ++k) {
                if (prod[k] == 0) continue;
                next[k] = K.add(next[k], K.mul(prod[k], lo));
                next[k + 1] = K.add(next[k + 1], K.mul(prod[k], hi));
            }
            prod = std::move(next);
        }
        for (size_t k = 0; k < prod.size() && k <= n; ++k) {
            FF term = (inv % 2) ? K.neg(prod[k]) : prod[k];
            acc[k] = K.add(acc[k], term);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace drincert
