/*
   Copyright 2026 The lefschetz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LEFSCHETZ_LINALG_HPP
#define LEFSCHETZ_LINALG_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Dense matrix over an exact field.
template <Field K>
class DenseMatrix {
  public:
    DenseMatrix(int rows, int cols, const K& zero)
        : rows_(rows),
          cols_(cols),
          zero_(zero),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), zero) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const K& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }

    // Stacks blocks vertically; all blocks must share the column count.
    static DenseMatrix stacked(const std::vector<DenseMatrix>& blocks, int cols, const K& zero) {
        int rows = 0;
        for (const auto& b : blocks) rows += b.rows();
        DenseMatrix r(rows, cols, zero);
        int off = 0;
        for (const auto& b : blocks) {
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < cols; ++j) r.at(off + i, j) = b.at(i, j);
            off += b.rows();
        }
        return r;
    }

    int rank() const {
        DenseMatrix m(*this);
        int rank = 0;
        for (int c = 0; c < cols_ && rank < rows_; ++c) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (!m.at(r, c).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            K inv = m.at(rank, c).inverse();
            for (int j = c; j < cols_; ++j) m.at(rank, j) = m.at(rank, j) * inv;
            for (int r = rank + 1; r < rows_; ++r) {
                if (m.at(r, c).is_zero()) continue;
                K f = m.at(r, c);
                for (int j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    // Right kernel dimension = cols - rank.
    int kernel_dimension() const { return cols_ - rank(); }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw ArityMismatch("matrix product shape mismatch");
        DenseMatrix r(rows_, o.cols_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }

    // Basis of the right kernel, read from the reduced row echelon form: one
    // vector per free column, with unit entry there.
    std::vector<std::vector<K>> kernel_basis() const {
        DenseMatrix m(*this);
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pivot = -1;
            for (int i = r; i < rows_; ++i)
                if (!m.at(i, c).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            K inv = m.at(r, c).inverse();
            for (int j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, c).is_zero()) continue;
                K f = m.at(i, c);
                for (int j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<std::vector<K>> out;
        std::size_t next_pivot = 0;
        for (int c = 0; c < cols_; ++c) {
            if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == c) {
                ++next_pivot;
                continue;
            }
            std::vector<K> v(static_cast<std::size_t>(cols_), zero_);
            v[static_cast<std::size_t>(c)] = zero_.one();
            for (std::size_t p = 0; p < pivot_col.size(); ++p)
                v[static_cast<std::size_t>(pivot_col[p])] = -m.at(static_cast<int>(p), c);
            out.push_back(std::move(v));
        }
        return out;
    }

    K determinant() const {
        if (rows_ != cols_) throw Error("determinant of a non-square matrix");
        DenseMatrix m(*this);
        K zero = a_.empty() ? K() : a_[0].zero();
        if (rows_ == 0) return zero;  // callers never hit this; guard anyway
        K det = a_[0].one();
        for (int c = 0; c < cols_; ++c) {
            int pivot = -1;
            for (int r = c; r < rows_; ++r)
                if (!m.at(r, c).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return zero;
            if (pivot != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
                det = -det;
            }
            det = det * m.at(c, c);
            K inv = m.at(c, c).inverse();
            for (int r = c + 1; r < rows_; ++r) {
                if (m.at(r, c).is_zero()) continue;
                K f = m.at(r, c) * inv;
                for (int j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
            }
        }
        return det;
    }

  private:
    int rows_;
    int cols_;
    K zero_;
    std::vector<K> a_;
};

// Row space in reduced row echelon form with pivot bookkeeping. Supports
// incremental insertion and canonical reduction of vectors modulo the space.
// Pivots are the earliest possible coordinates, so with coordinates listed
// descending the complement of the pivot set plays the role of standard
// monomials.
template <Field K>
class RowSpace {
  public:
    RowSpace(int cols, const K& zero) : cols_(cols), zero_(zero), row_of_pivot_(static_cast<std::size_t>(cols), -1) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces v modulo the space; the result has zeros in all pivot
    // coordinates.
    std::vector<K> reduce(std::vector<K> v) const {
        for (int c = 0; c < cols_; ++c) {
            if (v[static_cast<std::size_t>(c)].is_zero()) continue;
            int r = row_of_pivot_[static_cast<std::size_t>(c)];
            if (r < 0) continue;
            K f = v[static_cast<std::size_t>(c)];
            const auto& row = rows_[static_cast<std::size_t>(r)];
            for (int j = c; j < cols_; ++j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] - f * row[static_cast<std::size_t>(j)];
        }
        return v;
    }

    // Returns true if v enlarged the space.
    bool insert(std::vector<K> v) {
        v = reduce(std::move(v));
        int pivot = -1;
        for (int c = 0; c < cols_; ++c)
            if (!v[static_cast<std::size_t>(c)].is_zero()) {
                pivot = c;
                break;
            }
        if (pivot < 0) return false;
        K inv = v[static_cast<std::size_t>(pivot)].inverse();
        for (int c = pivot; c < cols_; ++c) v[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)] * inv;
        // keep RREF: eliminate the new pivot from existing rows
        for (auto& row : rows_) {
            K f = row[static_cast<std::size_t>(pivot)];
            if (f.is_zero()) continue;
            for (int c = pivot; c < cols_; ++c) row[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c)] - f * v[static_cast<std::size_t>(c)];
        }
        row_of_pivot_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool is_pivot(int c) const { return row_of_pivot_[static_cast<std::size_t>(c)] >= 0; }

    std::vector<int> non_pivot_columns() const {
        std::vector<int> out;
        for (int c = 0; c < cols_; ++c)
            if (row_of_pivot_[static_cast<std::size_t>(c)] < 0) out.push_back(c);
        return out;
    }

  private:
    int cols_;
    K zero_;
    std::vector<std::vector<K>> rows_;
    std::vector<int> row_of_pivot_;
};

// Matrix of polynomials (row-major).
template <Field K>
struct PolyMatrix {
    RingPtr<K> ring;
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial<K>> entries;

    PolyMatrix(RingPtr<K> r, int nrows, int ncols)
        : ring(std::move(r)), rows(nrows), cols(ncols),
          entries(static_cast<std::size_t>(nrows) * static_cast<std::size_t>(ncols), Polynomial<K>::zero(ring)) {}

    Polynomial<K>& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Polynomial<K>& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    PolyMatrix transposed() const {
        PolyMatrix t(ring, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    DenseMatrix<K> evaluated(const std::vector<K>& point) const {
        DenseMatrix<K> m(rows, cols, ring->unit.zero());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j).evaluated(point);
        return m;
    }
};

namespace detail {

// Determinant of the square submatrix on `sub_rows` (ascending) and all
// columns, by column-expansion dynamic programming over used-row subsets.
// Division free, which matters because entries are often monomials over F_p
// where fraction-free elimination would stall on zero pivots.
template <Field K>
Polynomial<K> subdeterminant(const PolyMatrix<K>& m, const std::vector<int>& sub_rows) {
    const int n = m.cols;
    const Polynomial<K> zero = Polynomial<K>::zero(m.ring);
    std::vector<Polynomial<K>> cur(static_cast<std::size_t>(1) << n, zero);
    cur[0] = Polynomial<K>::constant(m.ring, m.ring->unit);
    std::vector<std::uint32_t> masks_by_count{0};
    for (int col = 0; col < n; ++col) {
        std::vector<Polynomial<K>> nxt(static_cast<std::size_t>(1) << n, zero);
        std::vector<std::uint32_t> next_masks;
        for (std::uint32_t mask : masks_by_count) {
            const Polynomial<K>& v = cur[mask];
            if (v.is_zero()) continue;
            for (int pos = 0; pos < n; ++pos) {
                if (mask & (1u << pos)) continue;
                const Polynomial<K>& e = m.at(sub_rows[static_cast<std::size_t>(pos)], col);
                if (e.is_zero()) continue;
                // parity of the rows already used that sit below this one
                bool flip = std::popcount(mask >> (pos + 1)) & 1;
                std::uint32_t to = mask | (1u << pos);
                Polynomial<K> prod = v * e;
                if (nxt[to].is_zero()) next_masks.push_back(to);
                nxt[to] = flip ? nxt[to] - prod : nxt[to] + prod;
            }
        }
        std::sort(next_masks.begin(), next_masks.end());
        next_masks.erase(std::unique(next_masks.begin(), next_masks.end()), next_masks.end());
        masks_by_count = std::move(next_masks);
        cur = std::move(nxt);
    }
    return cur[(static_cast<std::size_t>(1) << n) - 1];
}

}  // namespace detail

// All maximal minors, indexed by row subsets of the taller orientation in
// ascending bitmask order. A matrix with a zero dimension has the single
// maximal minor 1 (the empty determinant).
template <Field K>
std::vector<Polynomial<K>> maximal_minors(const PolyMatrix<K>& m) {
    if (m.rows == 0 || m.cols == 0)
        return {Polynomial<K>::constant(m.ring, m.ring->unit)};
    const PolyMatrix<K> mat = m.rows >= m.cols ? m : m.transposed();
    const int rows = mat.rows, cols = mat.cols;
    if (rows > 31) throw Error("minor computation supports at most 31 rows");
    std::vector<Polynomial<K>> out;
    std::vector<int> sub;
    // enumerate row subsets of size `cols` in ascending bitmask order
    std::uint32_t mask = (1u << cols) - 1;
    const std::uint32_t limit = 1u << rows;
    while (mask < limit) {
        sub.clear();
        for (int r = 0; r < rows; ++r)
            if (mask & (1u << r)) sub.push_back(r);
        out.push_back(detail::subdeterminant(mat, sub));
        // next subset of the same popcount (Gosper's hack)
        std::uint32_t c = mask & -mask;
        std::uint32_t r2 = mask + c;
        if (r2 >= limit) break;
        mask = (((r2 ^ mask) >> 2) / c) | r2;
    }
    return out;
}

template <Field K>
Polynomial<K> poly_determinant(const PolyMatrix<K>& m) {
    if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
    if (m.rows == 0) return Polynomial<K>::constant(m.ring, m.ring->unit);
    std::vector<int> all(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) all[static_cast<std::size_t>(i)] = i;
    return detail::subdeterminant(m, all);
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_LINALG_HPP
