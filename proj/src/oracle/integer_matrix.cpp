#include "abtaxon/oracle/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace abtaxon::oracle {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntegerMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntegerMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Int determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; every division is exact.
    IntegerMatrix m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

// One elimination engine serves both entry points: `track` controls whether
// the unimodular transforms are accumulated.
struct SnfWorker {
    IntegerMatrix s;
    IntegerMatrix u, v;
    bool track;

    explicit SnfWorker(const IntegerMatrix& a, bool track_transforms)
        : s(a),
          u(IntegerMatrix::identity(a.rows())),
          v(IntegerMatrix::identity(a.cols())),
          track(track_transforms) {}

    void row_add(std::size_t dst, std::size_t src, const Int& f) {
        s.add_row_multiple(dst, src, f);
        if (track) u.add_row_multiple(dst, src, f);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& f) {
        s.add_col_multiple(dst, src, f);
        if (track) v.add_col_multiple(dst, src, f);
    }
    void row_swap(std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        if (track) u.swap_rows(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        if (track) v.swap_cols(i, j);
    }
    void row_negate(std::size_t i) {
        s.negate_row(i);
        if (track) u.negate_row(i);
    }

    // Smallest absolute nonzero entry in the trailing block, row-major
    // tie-break.  Returns false when the block is all zero.
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j) {
                const Int& e = s.at(i, j);
                if (e == 0) continue;
                Int mag = abs(e);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    void run() {
        const std::size_t dim = std::min(s.rows(), s.cols());
        for (std::size_t t = 0; t < dim; ++t) {
            for (;;) {
                std::size_t pr = t, pc = t;
                if (!find_pivot(t, pr, pc)) goto done;  // trailing block zero
                row_swap(t, pr);
                col_swap(t, pc);

                // Clear the pivot row and column by Euclidean steps; a
                // nonzero remainder becomes the new, smaller pivot.
                bool cleared = true;
                for (std::size_t i = t + 1; i < s.rows(); ++i) {
                    if (s.at(i, t) == 0) continue;
                    Int q = s.at(i, t) / s.at(t, t);
                    row_add(i, t, -q);
                    if (s.at(i, t) != 0) cleared = false;
                }
                for (std::size_t j = t + 1; j < s.cols(); ++j) {
                    if (s.at(t, j) == 0) continue;
                    Int q = s.at(t, j) / s.at(t, t);
                    col_add(j, t, -q);
                    if (s.at(t, j) != 0) cleared = false;
                }
                if (!cleared) continue;

                // Enforce divisibility into the rest of the block: fold any
                // offending entry into the pivot row and retry.
                bool divides_all = true;
                for (std::size_t i = t + 1; i < s.rows() && divides_all; ++i)
                    for (std::size_t j = t + 1; j < s.cols(); ++j)
                        if (s.at(i, j) % s.at(t, t) != 0) {
                            row_add(t, i, 1);
                            divides_all = false;
                            break;
                        }
                if (divides_all) break;
            }
            if (s.at(t, t) < 0) row_negate(t);
        }
    done:
        // Zero diagonal entries (rank deficit) are already nonnegative and
        // sit after the nonzero chain under the smallest-pivot policy.
        return;
    }
};

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& a) {
    SnfWorker w(a, true);
    w.run();
    return SnfResult{std::move(w.u), std::move(w.s), std::move(w.v)};
}

std::vector<Int> smith_invariant_factors(const IntegerMatrix& a) {
    SnfWorker w(a, false);
    w.run();
    std::size_t dim = std::min(a.rows(), a.cols());
    std::vector<Int> d(dim);
    for (std::size_t i = 0; i < dim; ++i) d[i] = w.s.at(i, i);
    return d;
}

}  // namespace abtaxon::oracle
