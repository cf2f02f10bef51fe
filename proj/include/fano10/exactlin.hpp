#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano10/errors.hpp"

namespace fano10 {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer matrix with arbitrary-precision entries.
///
/// Every Gram matrix and every basis matrix in the library is one of these;
/// all arithmetic is exact, there is no floating point anywhere downstream.
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMat identity(int n);
    static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMat diagonal(const std::vector<Int>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    IntMat operator*(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat transposed() const;

    std::vector<Int> col(int j) const;
    std::vector<Int> mul_vec(const std::vector<Int>& x) const;
    void set_col(int j, const std::vector<Int>& v);

    /// Submatrix formed by the given column indices, in order.
    IntMat cols_subset(const std::vector<int>& idx) const;

    std::string str() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

/// Dense rational matrix; internal helper for dual bases, lifts, extensions.
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    explicit RatMat(const IntMat& m);

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMat& o) const = default;

    RatMat operator*(const RatMat& o) const;
    RatMat transposed() const;
    std::vector<Rat> mul_vec(const std::vector<Rat>& x) const;
    std::vector<Rat> col(int j) const;

    /// Gauss-Jordan inverse; throws Degenerate on singular input.
    RatMat inverse() const;

    bool is_integral() const;
    /// Throws Degenerate if any entry has a denominator != 1.
    IntMat to_int() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

/// Smith normal form u*a*v = d with u, v unimodular and d diagonal,
/// d_1 | d_2 | ... , all diagonal entries nonnegative.
struct SnfResult {
    IntMat d;
    IntMat u;
    IntMat v;

    /// Diagonal of d up to min(rows, cols).
    std::vector<Int> diagonal() const;
    /// Nonzero diagonal entries (the elementary divisors).
    std::vector<Int> invariant_factors() const;
    int rank() const;
};

/// Deterministic SNF: pivot is the smallest nonzero absolute value in the
/// working block, scanned row-major, so the transforms are reproducible.
SnfResult smith_normal_form(const IntMat& a);

/// Exact determinant by fraction-free Bareiss elimination.
Int determinant(const IntMat& a);

/// (positive, negative) inertia of a symmetric nondegenerate matrix,
/// computed by symmetric congruence reduction over exact rationals.
std::pair<int, int> signature(const IntMat& gram);

/// Columns form a saturated basis of {x integer : a*x = 0}, in column
/// Hermite normal form (byte-stable across runs).
IntMat kernel_basis(const IntMat& a);

/// Column-style Hermite normal form of a full-column-rank matrix: unique
/// lattice basis with positive pivots and reduced off-pivot entries.
IntMat hermite_column_form(const IntMat& a);

/// Integer solution x of a*x = rhs, or nullopt if none exists.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& rhs);

/// Hermite basis of the lattice spanned by the columns (zero columns dropped),
/// so wide or rank-deficient inputs yield exactly rank(a) columns.
IntMat column_space_basis(const IntMat& a);

Int gcd_of(const std::vector<Int>& xs);

}  // namespace fano10
