#ifndef MULTIELIM_LINALG_HPP
#define MULTIELIM_LINALG_HPP

#include <gmpxx.h>

#include <atomic>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "multielim/field.hpp"

namespace multielim {

struct MatrixSizeError : std::length_error {
    using std::length_error::length_error;
};

namespace detail {
inline std::atomic<int>& max_dense_dim_ref() {
    static std::atomic<int> cap{5000};
    return cap;
}
} // namespace detail

inline int max_dense_dim() { return detail::max_dense_dim_ref().load(); }
inline void set_max_dense_dim(int cap) { detail::max_dense_dim_ref().store(cap); }

// Dense matrix over an exact field. Construction is capped at
// max_dense_dim() per side; shape-only work never needs a Matrix.
template <class K>
class Matrix {
public:
    Matrix(int rows, int cols, K zero) : rows_(rows), cols_(cols), zero_(std::move(zero)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
        const int cap = max_dense_dim();
        if (rows > cap || cols > cap)
            throw MatrixSizeError("dense matrix " + std::to_string(rows) + "x" +
                                  std::to_string(cols) + " exceeds cap " + std::to_string(cap) +
                                  " (set MULTIELIM_MAX_DENSE to raise)");
        a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), zero_);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const K& zero_element() const { return zero_; }

    K& operator()(int i, int j) { return a_[idx(i, j)]; }
    const K& operator()(int i, int j) const { return a_[idx(i, j)]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // [this | extra columns]
    Matrix hstack(const Matrix& o) const {
        if (o.rows_ != rows_) throw std::invalid_argument("hstack row mismatch");
        Matrix m(rows_, cols_ + o.cols_, zero_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
        }
        return m;
    }

    Matrix with_column(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("column length mismatch");
        Matrix m(rows_, cols_ + 1, zero_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            m(i, cols_) = v[static_cast<std::size_t>(i)];
        }
        return m;
    }

    static Matrix identity(int n, const K& one) {
        Matrix m(n, n, zero_like(one));
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_, cols_;
    std::vector<K> a_;
    K zero_;
};

namespace detail {

// Fraction-free Bareiss elimination on an integer matrix; returns the
// rank and leaves the determinant data in prev/sign when square.
struct BareissResult {
    int rank = 0;
    mpz_class det; // valid for square inputs only
};

inline BareissResult bareiss(std::vector<std::vector<mpz_class>>& m) {
    BareissResult res;
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    mpz_class prev(1);
    int sign = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(row)]);
            sign = -sign;
        }
        auto& prow = m[static_cast<std::size_t>(row)];
        for (int i = row + 1; i < rows; ++i) {
            auto& irow = m[static_cast<std::size_t>(i)];
            for (int j = col + 1; j < cols; ++j) {
                mpz_class t = prow[static_cast<std::size_t>(col)] * irow[static_cast<std::size_t>(j)] -
                              irow[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                irow[static_cast<std::size_t>(j)] = std::move(t);
            }
            irow[static_cast<std::size_t>(col)] = 0;
        }
        prev = prow[static_cast<std::size_t>(col)];
        ++row;
    }
    res.rank = row;
    if (rows == cols) {
        if (row == rows) {
            res.det = sign > 0 ? prev : -prev;
        } else {
            res.det = 0;
        }
    }
    return res;
}

// Common-denominator integer lift, row by row. row_factor[i] is the
// multiplier applied to row i.
inline std::vector<std::vector<mpz_class>> lift_rows(const Matrix<Rational>& m,
                                                     std::vector<mpz_class>* row_factor) {
    std::vector<std::vector<mpz_class>> z(static_cast<std::size_t>(m.rows()));
    if (row_factor) row_factor->assign(static_cast<std::size_t>(m.rows()), mpz_class(1));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        auto& row = z[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            row[static_cast<std::size_t>(j)] = q.numerator() * (l / q.denominator());
        }
        if (row_factor) (*row_factor)[static_cast<std::size_t>(i)] = l;
    }
    return z;
}

template <class K>
int rank_by_elimination(Matrix<K> m) {
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        const K inv = m(row, col).inverse();
        for (int i = row + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const K f = m(i, col) * inv;
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
    }
    return row;
}

} // namespace detail

template <class K>
int rank(const Matrix<K>& m) {
    if constexpr (std::is_same_v<K, Rational>) {
        auto z = detail::lift_rows(m, nullptr);
        return detail::bareiss(z).rank;
    } else {
        return detail::rank_by_elimination(m);
    }
}

template <class K>
int corank(const Matrix<K>& m) {
    return m.rows() - rank(m);
}

template <class K>
K det(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return one_like(m.zero_element());
    if constexpr (std::is_same_v<K, Rational>) {
        std::vector<mpz_class> factors;
        auto z = detail::lift_rows(m, &factors);
        auto res = detail::bareiss(z);
        mpz_class denom(1);
        for (const auto& f : factors) denom *= f;
        return Rational(mpq_class(res.det, denom));
    } else {
        Matrix<K> w = m;
        K d = one_like(m.zero_element());
        for (int col = 0; col < w.cols(); ++col) {
            int pivot = -1;
            for (int i = col; i < w.rows(); ++i) {
                if (!w(i, col).is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return w.zero_element();
            if (pivot != col) {
                for (int j = col; j < w.cols(); ++j) std::swap(w(pivot, j), w(col, j));
                d = -d;
            }
            d *= w(col, col);
            const K inv = w(col, col).inverse();
            for (int i = col + 1; i < w.rows(); ++i) {
                if (w(i, col).is_zero()) continue;
                const K f = w(i, col) * inv;
                for (int j = col; j < w.cols(); ++j) w(i, j) -= f * w(col, j);
            }
        }
        return d;
    }
}

// Basis of the right kernel via reduced row echelon form.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
    Matrix<K> w = m;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < w.cols() && row < w.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < w.rows(); ++i) {
            if (!w(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < w.cols(); ++j) std::swap(w(pivot, j), w(row, j));
        const K inv = w(row, col).inverse();
        for (int j = col; j < w.cols(); ++j) w(row, j) *= inv;
        for (int i = 0; i < w.rows(); ++i) {
            if (i == row || w(i, col).is_zero()) continue;
            const K f = w(i, col);
            for (int j = col; j < w.cols(); ++j) w(i, j) -= f * w(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(w.cols()), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < w.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<K> v(static_cast<std::size_t>(w.cols()), m.zero_element());
        v[static_cast<std::size_t>(free)] = one_like(m.zero_element());
        for (std::size_t t = 0; t < pivot_col.size(); ++t)
            v[static_cast<std::size_t>(pivot_col[t])] = -w(static_cast<int>(t), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
bool in_column_space(const Matrix<K>& m, const std::vector<K>& v) {
    if (static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("vector length does not match row count");
    return rank(m.with_column(v)) == rank(m);
}

// Incremental row-space tracker: keeps a reduced basis of the span of
// the added vectors and answers membership queries.
template <class K>
class SpanChecker {
public:
    explicit SpanChecker(int len, K zero) : len_(len), zero_(std::move(zero)) {}

    // Returns true when the vector enlarged the span.
    bool add(std::vector<K> v) {
        reduce(v);
        int p = first_nonzero(v);
        if (p < 0) return false;
        const K inv = v[static_cast<std::size_t>(p)].inverse();
        for (auto& x : v) x *= inv;
        for (auto& row : rows_) {
            const K& c = row.vec[static_cast<std::size_t>(p)];
            if (!c.is_zero()) {
                const K f = c;
                for (int j = 0; j < len_; ++j)
                    row.vec[static_cast<std::size_t>(j)] -= f * v[static_cast<std::size_t>(j)];
            }
        }
        rows_.push_back({p, std::move(v)});
        return true;
    }

    bool contains(std::vector<K> v) const {
        reduce(v);
        return first_nonzero(v) < 0;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    int length() const { return len_; }

    std::vector<std::vector<K>> reduced_rows() const {
        std::vector<std::vector<K>> out;
        out.reserve(rows_.size());
        for (const auto& row : rows_) out.push_back(row.vec);
        return out;
    }

    // True when the other span is contained in this one.
    bool contains_all(const SpanChecker& o) const {
        for (const auto& row : o.rows_)
            if (!contains(row.vec)) return false;
        return true;
    }

private:
    struct Row {
        int pivot;
        std::vector<K> vec;
    };

    void reduce(std::vector<K>& v) const {
        for (const auto& row : rows_) {
            const K& c = v[static_cast<std::size_t>(row.pivot)];
            if (c.is_zero()) continue;
            const K f = c;
            for (int j = 0; j < len_; ++j)
                v[static_cast<std::size_t>(j)] -= f * row.vec[static_cast<std::size_t>(j)];
        }
    }

    int first_nonzero(const std::vector<K>& v) const {
        for (int j = 0; j < len_; ++j)
            if (!v[static_cast<std::size_t>(j)].is_zero()) return j;
        return -1;
    }

    int len_;
    K zero_;
    std::vector<Row> rows_;
};

// --- MatrixMarket coordinate I/O -------------------------------------
//
// Rationals are written with the "rational" field word as "p/q" (or a
// bare integer); Fp entries are written as integers with the modulus
// recorded in a comment line "% field: Fp:<p>".

template <class K>
void write_matrix_market(std::ostream& os, const Matrix<K>& m) {
    const bool is_q = std::is_same_v<K, Rational>;
    os << "%%MatrixMarket matrix coordinate " << (is_q ? "rational" : "integer") << " general\n";
    if constexpr (std::is_same_v<K, Fp>) {
        os << "% field: Fp:" << m.zero_element().modulus() << "\n";
    } else {
        os << "% field: Q\n";
    }
    std::size_t nnz = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) ++nnz;
    os << m.rows() << " " << m.cols() << " " << nnz << "\n";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) os << i + 1 << " " << j + 1 << " " << m(i, j).str() << "\n";
}

// Reads the header and the field comment; returns the spec so the
// caller can pick the element type.
FieldSpec peek_matrix_market_field(std::istream& is);

template <class K>
Matrix<K> read_matrix_market(std::istream& is, const K& zero) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket matrix coordinate", 0) != 0)
        throw std::invalid_argument("not a MatrixMarket coordinate file");
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '%') continue;
        if (!line.empty()) break;
    }
    std::istringstream dims(line);
    long long rows = 0, cols = 0, nnz = 0;
    if (!(dims >> rows >> cols >> nnz)) throw std::invalid_argument("bad MatrixMarket size line");
    Matrix<K> m(static_cast<int>(rows), static_cast<int>(cols), zero);
    for (long long t = 0; t < nnz; ++t) {
        long long i = 0, j = 0;
        std::string val;
        if (!(is >> i >> j >> val)) throw std::invalid_argument("truncated MatrixMarket data");
        m(static_cast<int>(i - 1), static_cast<int>(j - 1)) = parse_element(val, zero);
    }
    return m;
}

inline FieldSpec peek_matrix_market_field(std::istream& is) {
    FieldSpec spec;
    std::string line;
    const auto start = is.tellg();
    while (std::getline(is, line)) {
        if (line.rfind("% field:", 0) == 0) {
            std::string v = line.substr(8);
            const auto first = v.find_first_not_of(' ');
            if (first != std::string::npos) v = v.substr(first);
            spec = FieldSpec::parse(v);
            break;
        }
        if (!line.empty() && line[0] != '%') break;
    }
    is.clear();
    is.seekg(start);
    return spec;
}

} // namespace multielim

#endif
