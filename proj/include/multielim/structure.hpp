#ifndef MULTIELIM_STRUCTURE_HPP
#define MULTIELIM_STRUCTURE_HPP

#include <memory>
#include <vector>

#include "multielim/degree.hpp"

namespace multielim {

// The multiprojective setting: r factors P^{n_1} x ... x P^{n_r} and the
// n+1 multidegrees d_0,...,d_n of the square-plus-one system, with
// n = n_1 + ... + n_r. Every n_j >= 1 and every d_{i,j} >= 1.
class GradedStructure {
public:
    GradedStructure(std::vector<int> dims, std::vector<MultiDegree> degrees);

    int r() const { return static_cast<int>(dims_.size()); }
    int n() const { return n_; }
    int dim(int block) const { return dims_[static_cast<std::size_t>(block)]; }
    const std::vector<int>& dims() const { return dims_; }

    int poly_count() const { return static_cast<int>(degrees_.size()); }
    const MultiDegree& degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::vector<MultiDegree>& degrees() const { return degrees_; }

    // Flat variable indexing: block j contributes n_j + 1 slots.
    int var_count() const { return n_ + r(); }
    int var_index(int block, int k) const { return offsets_[static_cast<std::size_t>(block)] + k; }
    int block_offset(int block) const { return offsets_[static_cast<std::size_t>(block)]; }

    // min_i d_{i,j} per block.
    MultiDegree min_degrees() const;

    bool operator==(const GradedStructure& o) const {
        return dims_ == o.dims_ && degrees_ == o.degrees_;
    }

private:
    std::vector<int> dims_;
    std::vector<MultiDegree> degrees_;
    std::vector<int> offsets_;
    int n_ = 0;
};

using StructurePtr = std::shared_ptr<const GradedStructure>;

inline StructurePtr make_structure(std::vector<int> dims, std::vector<MultiDegree> degrees) {
    return std::make_shared<const GradedStructure>(std::move(dims), std::move(degrees));
}

// Structure with the same dims and all n+1 degrees equal to d.
StructurePtr make_uniform_structure(std::vector<int> dims, MultiDegree d);

} // namespace multielim

#endif
