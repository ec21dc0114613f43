#include "multielim/regions.hpp"

#include <stdexcept>

namespace multielim {

std::string SignedOrthant::str() const {
    std::string s = base.str() + "+(";
    for (std::size_t j = 0; j < signs.size(); ++j) {
        if (j) s += ",";
        s += signs[j] > 0 ? "+N" : "-N";
    }
    return s + ")";
}

namespace {

// a covered by b: same sign pattern and base of a on b's inner side.
bool covered(const SignedOrthant& a, const SignedOrthant& b) {
    if (a.signs != b.signs) return false;
    return b.contains(a.base);
}

} // namespace

void DegreeRegion::add(SignedOrthant o) {
    if (o.base.size() != r_ || static_cast<int>(o.signs.size()) != r_)
        throw std::invalid_argument("orthant arity mismatch");
    for (const auto& have : orthants_)
        if (covered(o, have)) return;
    std::erase_if(orthants_, [&o](const SignedOrthant& have) { return covered(have, o); });
    orthants_.push_back(std::move(o));
}

DegreeRegion DegreeRegion::united(const DegreeRegion& o) const {
    DegreeRegion u = *this;
    for (const auto& orth : o.orthants_) u.add(orth);
    return u;
}

std::string DegreeRegion::str() const {
    if (orthants_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < orthants_.size(); ++i) {
        if (i) s += " u ";
        s += orthants_[i].str();
    }
    return s;
}

MultiDegree critical_degree(const GradedStructure& s) {
    MultiDegree delta = MultiDegree::zero(s.r());
    for (int i = 0; i < s.poly_count(); ++i) delta = delta + s.degree(i);
    for (int j = 0; j < s.r(); ++j) delta[j] -= s.dim(j) + 1;
    return delta;
}

DegreeRegion q_alpha(const std::vector<int>& dims, const std::vector<int>& alpha_blocks) {
    const int r = static_cast<int>(dims.size());
    DegreeRegion region(r);
    if (alpha_blocks.empty()) return region;
    std::vector<bool> in_alpha(static_cast<std::size_t>(r), false);
    for (int b : alpha_blocks) {
        if (b < 0 || b >= r) throw std::invalid_argument("alpha block out of range");
        in_alpha[static_cast<std::size_t>(b)] = true;
    }
    SignedOrthant o;
    o.base = MultiDegree::zero(r);
    o.signs.assign(static_cast<std::size_t>(r), 1);
    for (int j = 0; j < r; ++j) {
        if (in_alpha[static_cast<std::size_t>(j)]) {
            o.signs[static_cast<std::size_t>(j)] = -1;
            o.base[j] = -(dims[static_cast<std::size_t>(j)] + 1);
        }
    }
    region.add(std::move(o));
    return region;
}

DegreeRegion gamma(const std::vector<int>& dims, const std::vector<MultiDegree>& degrees, int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("gamma index must be 0, 1 or 2");
    const int r = static_cast<int>(dims.size());
    const int count = static_cast<int>(degrees.size());
    DegreeRegion region(r);
    if (r == 1) return region; // no proper nonempty alpha exists

    for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
        std::vector<int> alpha;
        int n_alpha = 0;
        for (int j = 0; j < r; ++j) {
            if (mask & (1u << j)) {
                alpha.push_back(j);
                n_alpha += dims[static_cast<std::size_t>(j)];
            }
        }
        const int lambda_size = n_alpha + i;
        if (lambda_size > count) continue;
        const DegreeRegion q = q_alpha(dims, alpha);
        const SignedOrthant& base_orthant = q.orthants().front();

        // all lambda subsets of {0..count-1} of the required size
        std::vector<int> lambda(static_cast<std::size_t>(lambda_size));
        for (int t = 0; t < lambda_size; ++t) lambda[static_cast<std::size_t>(t)] = t;
        while (true) {
            MultiDegree shift = MultiDegree::zero(r);
            for (int l : lambda) shift = shift + degrees[static_cast<std::size_t>(l)];
            SignedOrthant o = base_orthant;
            o.base = o.base + shift;
            region.add(std::move(o));

            if (lambda_size == 0) break;
            int t = lambda_size - 1;
            while (t >= 0 && lambda[static_cast<std::size_t>(t)] == count - lambda_size + t) --t;
            if (t < 0) break;
            ++lambda[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < lambda_size; ++u)
                lambda[static_cast<std::size_t>(u)] = lambda[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
    return region;
}

DegreeRegion gamma(const GradedStructure& s, int i) { return gamma(s.dims(), s.degrees(), i); }

std::string NuClass::kind_str() const {
    switch (kind) {
        case NuKind::macaulay: return "macaulay";
        case NuKind::hybrid: return "hybrid";
        default: return "inadmissible";
    }
}

MultiDegree drop_of_rank_min(const GradedStructure& s) {
    MultiDegree nu = critical_degree(s);
    const MultiDegree mins = s.min_degrees();
    for (int j = 0; j < s.r(); ++j) nu[j] -= mins[j] - 1;
    return nu;
}

NuClass classify_nu(const GradedStructure& s, const MultiDegree& nu) {
    if (nu.size() != s.r()) throw std::invalid_argument("degree arity mismatch");
    NuClass out;
    const MultiDegree delta = critical_degree(s);
    const MultiDegree mins = s.min_degrees();
    out.mu = MultiDegree::zero(s.r());
    out.drop_of_rank = leq(drop_of_rank_min(s), nu);

    if (!nu.is_nonnegative()) return out;

    const MultiDegree mu = delta - nu;
    if (mu.is_nonnegative()) {
        bool hybrid = true;
        for (int j = 0; j < s.r(); ++j)
            if (mu[j] >= mins[j]) hybrid = false;
        if (hybrid) {
            out.kind = NuKind::hybrid;
            out.mu = mu;
        }
        return out; // inside delta - N^r, macaulay condition cannot hold
    }
    if (!gamma(s, 0).contains(nu) && !gamma(s, 1).contains(nu)) out.kind = NuKind::macaulay;
    return out;
}

} // namespace multielim
