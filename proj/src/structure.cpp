#include "multielim/structure.hpp"

#include <stdexcept>
#include <string>

namespace multielim {

GradedStructure::GradedStructure(std::vector<int> dims, std::vector<MultiDegree> degrees)
    : dims_(std::move(dims)), degrees_(std::move(degrees)) {
    if (dims_.empty()) throw std::invalid_argument("structure needs at least one factor");
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        if (dims_[j] < 1)
            throw std::invalid_argument("factor dimension n_" + std::to_string(j) +
                                        " must be >= 1");
        n_ += dims_[j];
    }
    const int expected = n_ + 1;
    if (static_cast<int>(degrees_.size()) != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " polynomial degrees, got " +
                                    std::to_string(degrees_.size()));
    for (const MultiDegree& d : degrees_) {
        if (d.size() != r()) throw std::invalid_argument("degree arity mismatch");
        for (int j = 0; j < r(); ++j)
            if (d[j] < 1) throw std::invalid_argument("all d_{i,j} must be >= 1");
    }
    offsets_.resize(dims_.size());
    int off = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        offsets_[j] = off;
        off += dims_[j] + 1;
    }
}

MultiDegree GradedStructure::min_degrees() const {
    MultiDegree m = degrees_.front();
    for (const MultiDegree& d : degrees_)
        for (int j = 0; j < r(); ++j)
            if (d[j] < m[j]) m[j] = d[j];
    return m;
}

StructurePtr make_uniform_structure(std::vector<int> dims, MultiDegree d) {
    int n = 0;
    for (int nj : dims) n += nj;
    return make_structure(std::move(dims), std::vector<MultiDegree>(static_cast<std::size_t>(n + 1), d));
}

} // namespace multielim
