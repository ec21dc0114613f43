#ifndef MULTIELIM_DEGREE_HPP
#define MULTIELIM_DEGREE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace multielim {

// Tuple of r integers, one per projective factor. Components may be
// negative (region arithmetic lives in Z^r).
struct MultiDegree {
    std::vector<int> c;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> v) : c(std::move(v)) {}
    MultiDegree(std::initializer_list<int> v) : c(v) {}

    static MultiDegree zero(int r) { return MultiDegree(std::vector<int>(r, 0)); }
    static MultiDegree ones(int r) { return MultiDegree(std::vector<int>(r, 1)); }

    int size() const { return static_cast<int>(c.size()); }
    int operator[](int j) const { return c[static_cast<std::size_t>(j)]; }
    int& operator[](int j) { return c[static_cast<std::size_t>(j)]; }

    bool operator==(const MultiDegree& o) const { return c == o.c; }
    bool operator!=(const MultiDegree& o) const { return c != o.c; }

    MultiDegree operator+(const MultiDegree& o) const {
        check(o);
        MultiDegree r = *this;
        for (int j = 0; j < size(); ++j) r[j] += o[j];
        return r;
    }
    MultiDegree operator-(const MultiDegree& o) const {
        check(o);
        MultiDegree r = *this;
        for (int j = 0; j < size(); ++j) r[j] -= o[j];
        return r;
    }

    bool is_nonnegative() const {
        for (int x : c)
            if (x < 0) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (int j = 0; j < size(); ++j) {
            if (j) s += ",";
            s += std::to_string(c[static_cast<std::size_t>(j)]);
        }
        return s + ")";
    }

private:
    void check(const MultiDegree& o) const {
        if (c.size() != o.c.size()) throw std::invalid_argument("multidegree length mismatch");
    }
};

// Componentwise partial order.
inline bool leq(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multidegree length mismatch");
    for (int j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

} // namespace multielim

#endif
