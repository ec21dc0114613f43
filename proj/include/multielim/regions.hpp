#ifndef MULTIELIM_REGIONS_HPP
#define MULTIELIM_REGIONS_HPP

#include <string>
#include <vector>

#include "multielim/structure.hpp"

namespace multielim {

// Translate of a signed orthant of Z^r: mu belongs iff for each
// coordinate j, signs[j] * (mu_j - base_j) >= 0.
struct SignedOrthant {
    MultiDegree base;
    std::vector<int> signs; // entries +1 / -1

    bool contains(const MultiDegree& mu) const {
        for (int j = 0; j < mu.size(); ++j)
            if (signs[static_cast<std::size_t>(j)] * (mu[j] - base[j]) < 0) return false;
        return true;
    }

    std::string str() const;
};

// Finite union of signed-orthant translates with exact membership.
class DegreeRegion {
public:
    explicit DegreeRegion(int r) : r_(r) {}

    // Adds an orthant, skipping it when an existing orthant with the
    // same sign pattern already covers it (and dropping ones it covers).
    void add(SignedOrthant o);

    bool contains(const MultiDegree& mu) const {
        for (const auto& o : orthants_)
            if (o.contains(mu)) return true;
        return false;
    }

    bool empty() const { return orthants_.empty(); }
    const std::vector<SignedOrthant>& orthants() const { return orthants_; }
    int r() const { return r_; }

    DegreeRegion united(const DegreeRegion& o) const;

    std::string str() const;

private:
    int r_;
    std::vector<SignedOrthant> orthants_;
};

// delta_j = (sum_i d_{i,j}) - (n_j + 1)
MultiDegree critical_degree(const GradedStructure& s);

// Support of the local cohomology factor selected by the block subset
// alpha (0-based block ids): sign -1 and base -(n_j+1) on blocks in
// alpha, sign +1 and base 0 elsewhere. Empty alpha gives the empty
// region.
DegreeRegion q_alpha(const std::vector<int>& dims, const std::vector<int>& alpha_blocks);

// Gamma_i as the union over proper nonempty block subsets alpha and
// generator subsets lambda with #lambda = n(alpha) + i of
// (sum_{l in lambda} d_l) + Q_alpha. The degree list may be shorter
// than n+1 (subsystems drop generators).
DegreeRegion gamma(const std::vector<int>& dims, const std::vector<MultiDegree>& degrees, int i);
DegreeRegion gamma(const GradedStructure& s, int i);

enum class NuKind { macaulay, hybrid, inadmissible };

struct NuClass {
    NuKind kind = NuKind::inadmissible;
    MultiDegree mu;         // witness for the hybrid case: nu = delta - mu
    bool drop_of_rank = false;

    std::string kind_str() const;
};

// Smallest degree of the drop-of-rank region:
// delta - (min_i d_{i,1} - 1, ..., min_i d_{i,r} - 1).
MultiDegree drop_of_rank_min(const GradedStructure& s);

// Classifies nu against the matrix-admissibility conditions:
//   macaulay:  nu outside (delta - N^r) u Gamma_0 u Gamma_1
//   hybrid:    nu = delta - mu with 0 <= mu_j < min_i d_{i,j}
// and flags membership in the drop-of-rank region.
NuClass classify_nu(const GradedStructure& s, const MultiDegree& nu);

} // namespace multielim

#endif
