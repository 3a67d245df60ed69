#pragma once

#include <cstddef>
#include <vector>

#include "gfl/rational.hpp"

namespace gfl {

/// Dense rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    RationalMatrix transposed() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct NullspaceResult {
    std::size_t rank = 0;
    // Right-nullspace basis.  Each vector is primitive (integer entries,
    // content 1, first nonzero entry positive) and carries a 1-scaled unit
    // in its own free column before normalization, so the basis is in
    // reduced column echelon form up to positive scaling.
    std::vector<std::vector<Rational>> basis;
};

/// Exact rank over Q via fraction-free (Bareiss) elimination with partial
/// pivoting on the largest-magnitude pivot.
std::size_t rank_exact(const RationalMatrix& m);

/// Exact rank and right-nullspace basis; every basis vector v is re-checked
/// to satisfy M v = 0 exactly before returning.
NullspaceResult nullspace_exact(const RationalMatrix& m);

/// M v, exact.
std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v);

/// Scales to integer entries with content 1 and first nonzero entry positive.
/// The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace gfl
