#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "posetcomp/scalar.hpp"

namespace posetcomp {

/// Sparse matrix over the active field, indexed by positions in two bases.
/// Zero entries are never stored.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return entries_.size(); }

    /// Accumulates v into (r, c); an entry that cancels to zero is erased.
    void add(std::size_t r, std::size_t c, const Scalar& v);
    void set(std::size_t r, std::size_t c, const Scalar& v);
    Scalar get(std::size_t r, std::size_t c) const;

    const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return entries_; }

    SparseMatrix transpose() const;
    /// Applies row and column relabelings: entry (r, c) moves to (row_perm[r], col_perm[c]).
    SparseMatrix permuted(const std::vector<std::size_t>& row_perm,
                          const std::vector<std::size_t>& col_perm) const;
    bool is_zero() const { return entries_.empty(); }
    /// Entries reduced into the given field (identity over Q).
    SparseMatrix over(const FieldSpec& field) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

/// Rank by sparse Gaussian elimination with Markowitz pivoting.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field = {});
std::size_t kernel_dim(const SparseMatrix& m, const FieldSpec& field = {});

struct BettiTable {
    std::vector<std::pair<int, std::size_t>> degrees;

    std::size_t at(int degree) const;
    std::vector<std::size_t> values() const;
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Homology Betti numbers of a chain complex given by its boundaries.
///
/// boundaries[n] is the map from degree n to degree n-1, for n = 1..maxdeg+1
/// (boundaries[0] is ignored and taken to be the zero map out of degree 0).
/// dims[n] is the dimension of degree n. Throws composite-nonzero if two
/// consecutive boundaries do not compose to zero.
BettiTable betti_from_boundaries(const std::vector<SparseMatrix>& boundaries,
                                 const std::vector<std::size_t>& dims, int maxdeg,
                                 const FieldSpec& field = {});

}  // namespace posetcomp
