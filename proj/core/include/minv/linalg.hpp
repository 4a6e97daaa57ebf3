#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minv/rational.hpp"

namespace minv {

enum class Orientation { Row, Column };

/// Dense exact vector. Orientation distinguishes exponent rows from
/// coefficient columns; arithmetic requires matching orientations.
class RatVector {
 public:
  RatVector() = default;
  RatVector(std::vector<Rational> entries, Orientation orient);

  static RatVector row(std::vector<Rational> entries);
  static RatVector column(std::vector<Rational> entries);
  static RatVector zero(std::size_t n, Orientation orient);
  static RatVector unit(std::size_t n, std::size_t i, Orientation orient);

  std::size_t size() const { return entries_.size(); }
  Orientation orientation() const { return orient_; }
  bool is_row() const { return orient_ == Orientation::Row; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  RatVector transposed() const;

  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  RatVector& operator*=(const Rational& s);
  RatVector operator-() const;
  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& s, RatVector v) { return v *= s; }

  friend bool operator==(const RatVector& a, const RatVector& b) {
    return a.orient_ == b.orient_ && a.entries_ == b.entries_;
  }

  /// Entrywise lexicographic comparison, ignoring orientation; shorter vectors first.
  static int lex_compare(const RatVector& a, const RatVector& b);

  /// "(p, q, ...)" — for diagnostics only; file formats have their own printers.
  std::string str() const;

 private:
  std::vector<Rational> entries_;
  Orientation orient_ = Orientation::Row;
};

struct RatVectorLexLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    return RatVector::lex_compare(a, b) < 0;
  }
};

/// Exact inner product of a row with a column of the same length.
Rational inner_product(const RatVector& b, const RatVector& c);

/// Dense exact matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> rowMajor);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  RatVector row_vec(std::size_t i) const;
  RatVector column_vec(std::size_t j) const;
  RatMatrix transposed() const;
  RatMatrix without_column(std::size_t j) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

/// Exact reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of the right nullspace {v : m v = 0}. Each basis vector is a column
/// scaled to primitive integer entries with its first nonzero entry positive;
/// one vector per free column, in free-column order.
std::vector<RatVector> null_space(const RatMatrix& m);

enum class SolveKind { Inconsistent, Unique, Affine };

struct SolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  RatVector particular;              // meaningful unless Inconsistent
  std::vector<RatVector> nullspace;  // nonempty exactly when Affine

  bool consistent() const { return kind != SolveKind::Inconsistent; }
};

/// Exact solution set of a x = b. The particular solution sets every free
/// variable to zero, so output is canonical.
SolveResult solve(const RatMatrix& a, const RatVector& b);

/// Scales to primitive integer entries (coprime, first nonzero positive).
/// The zero vector is returned unchanged.
RatVector primitive_scaled(const RatVector& v);

}  // namespace minv
