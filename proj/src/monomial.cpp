#include "multielim/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace multielim {

int block_degree(const GradedStructure& s, const ExpVec& e, int block) {
    int d = 0;
    const int off = s.block_offset(block);
    for (int k = 0; k <= s.dim(block); ++k) d += e[static_cast<std::size_t>(off + k)];
    return d;
}

MultiDegree multidegree_of(const GradedStructure& s, const ExpVec& e) {
    MultiDegree d = MultiDegree::zero(s.r());
    for (int j = 0; j < s.r(); ++j) d[j] = block_degree(s, e, j);
    return d;
}

int exp_compare(const GradedStructure& s, const ExpVec& a, const ExpVec& b) {
    for (int j = 0; j < s.r(); ++j) {
        const int da = block_degree(s, a, j);
        const int db = block_degree(s, b, j);
        if (da != db) return da < db ? -1 : 1;
        const int off = s.block_offset(j);
        for (int k = s.dim(j); k >= 0; --k) {
            const int diff = a[static_cast<std::size_t>(off + k)] - b[static_cast<std::size_t>(off + k)];
            if (diff != 0) return diff < 0 ? -1 : 1;
        }
    }
    return 0;
}

namespace {

// All (m+1)-part compositions of d, appended to out as raw tuples.
void compositions(int d, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        compositions(d - e, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<ExpVec> monomial_basis(const GradedStructure& s, const MultiDegree& nu) {
    if (nu.size() != s.r()) throw std::invalid_argument("degree arity mismatch");
    if (!nu.is_nonnegative()) return {};

    std::vector<std::vector<std::vector<int>>> per_block(static_cast<std::size_t>(s.r()));
    for (int j = 0; j < s.r(); ++j) {
        std::vector<int> cur;
        compositions(nu[j], s.dim(j) + 1, cur, per_block[static_cast<std::size_t>(j)]);
        // order inside the block: graded reverse lexicographic, largest first
        const int m = s.dim(j);
        std::sort(per_block[static_cast<std::size_t>(j)].begin(),
                  per_block[static_cast<std::size_t>(j)].end(),
                  [m](const std::vector<int>& a, const std::vector<int>& b) {
                      for (int k = m; k >= 0; --k)
                          if (a[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(k)])
                              return a[static_cast<std::size_t>(k)] < b[static_cast<std::size_t>(k)];
                      return false;
                  });
    }

    std::vector<ExpVec> basis;
    basis.reserve(static_cast<std::size_t>(monomial_count(s, nu)));
    ExpVec cur;
    cur.reserve(static_cast<std::size_t>(s.var_count()));
    // odometer over blocks, block 0 most significant
    std::vector<std::size_t> pos(static_cast<std::size_t>(s.r()), 0);
    while (true) {
        cur.clear();
        for (int j = 0; j < s.r(); ++j) {
            const auto& t = per_block[static_cast<std::size_t>(j)][pos[static_cast<std::size_t>(j)]];
            cur.insert(cur.end(), t.begin(), t.end());
        }
        basis.push_back(cur);
        int j = s.r() - 1;
        while (j >= 0) {
            if (++pos[static_cast<std::size_t>(j)] < per_block[static_cast<std::size_t>(j)].size()) break;
            pos[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return basis;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

long long monomial_count(const GradedStructure& s, const MultiDegree& nu) {
    if (nu.size() != s.r()) throw std::invalid_argument("degree arity mismatch");
    long long total = 1;
    for (int j = 0; j < s.r(); ++j) {
        if (nu[j] < 0) return 0;
        total *= binomial(nu[j] + s.dim(j), s.dim(j));
    }
    return total;
}

} // namespace multielim
