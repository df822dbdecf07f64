#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sullivan/rational.hpp"

namespace sullivan {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rat& bscale);
Rat sparse_dot(const SparseVec& a, const std::vector<Rat>& dense);

// Sparse matrix over the rationals with exact fraction-free elimination.
// Columns are indexed by canonical monomial bases; pivoting walks columns in
// ascending (canonical) order and picks the candidate row with the smallest
// support, ties to the earliest row.
class SparseRationalMatrix {
public:
    SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void set(int r, int c, const Rat& v);
    const SparseVec& row(int r) const { return data_[static_cast<size_t>(r)]; }

    long rank() const;

private:
    int rows_, cols_;
    std::vector<SparseVec> data_;
};

// Reduced row echelon span of a list of sparse vectors. Rows are kept monic
// with pivots eliminated from all other rows; pivot columns ascend. Built
// incrementally; reduction against the span is exact and deterministic.
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    long rank() const { return static_cast<long>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduces v against the span (returns the residual).
    SparseVec reduce(const SparseVec& v) const;
    // Reduces v and also accumulates the combination of inserted tags used,
    // for solve-style queries: v = sum coeff_i * original_i + residual.
    SparseVec reduce_tracked(const SparseVec& v, SparseVec& combination) const;

    // Inserts v (reduced first); returns false if v lies in the span already.
    bool insert(const SparseVec& v);
    bool insert_tagged(const SparseVec& v, int tag);

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    // A functional annihilating the span and nonzero on v; requires that v is
    // not in the span. Verified by a single sparse dot product per row.
    SparseVec refusal_functional(const SparseVec& v) const;

private:
    void back_eliminate(SparseVec& v, SparseVec* combo) const;

    int cols_;
    std::vector<SparseVec> rows_;        // monic, mutually reduced
    std::vector<SparseVec> row_combos_;  // tagged combinations producing rows_
    std::vector<int> pivots_;            // pivot column per row (ascending per insertion order)
};

// Evaluates a functional (sparse covector) on a sparse vector.
Rat functional_apply(const SparseVec& functional, const SparseVec& v);

// Kernel basis of a sparse matrix (columns = unknowns), in reduced echelon
// form against ascending column order; deterministic.
std::vector<SparseVec> kernel_basis(const SparseRationalMatrix& m);

}  // namespace sullivan
