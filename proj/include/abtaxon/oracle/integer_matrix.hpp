#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace abtaxon::oracle {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over the exact integers.  Entries never overflow.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);
    /// row[dst] += f * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant (Bareiss fraction-free elimination).  Square input.
Int determinant(const IntegerMatrix& a);

/// u * a * v = s with u, v unimodular and s diagonal, nonnegative, each
/// diagonal entry dividing the next.
struct SnfResult {
    IntegerMatrix u, s, v;
};

/// Smith normal form with a deterministic pivot policy: smallest absolute
/// nonzero entry in the remaining block, row-major tie-break.
SnfResult smith_normal_form(const IntegerMatrix& a);

/// Just the diagonal of the Smith form (same elimination, no u/v tracking).
std::vector<Int> smith_invariant_factors(const IntegerMatrix& a);

}  // namespace abtaxon::oracle
