#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace hypercyclic {

using Residue = std::int64_t;

/// Reduces any integer into [0, modulus).
Residue reduce_mod(std::int64_t value, Residue modulus);

/// Vector over Z_m; entries always reduced.
class ModVector {
 public:
  ModVector(Residue modulus, std::vector<std::int64_t> values);

  static ModVector zeros(Residue modulus, std::size_t size);

  Residue modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return values_.size(); }
  Residue operator[](std::size_t i) const { return values_[i]; }
  void set(std::size_t i, std::int64_t value) { values_.at(i) = reduce_mod(value, modulus_); }
  const std::vector<Residue>& values() const noexcept { return values_; }

  friend bool operator==(const ModVector&, const ModVector&) = default;

 private:
  Residue modulus_;
  std::vector<Residue> values_;
};

/// Dense row-major matrix over Z_m; entries always reduced.
class ModMatrix {
 public:
  ModMatrix(Residue modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  ModMatrix(Residue modulus, const std::vector<std::vector<std::int64_t>>& rows);

  static ModMatrix zeros(Residue modulus, std::size_t rows, std::size_t cols);
  static ModMatrix identity(Residue modulus, std::size_t size);

  Residue modulus() const noexcept { return modulus_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) { entries_.at(r * cols_ + c) = reduce_mod(value, modulus_); }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  friend class ModSolver;
  ModMatrix(Residue modulus, std::size_t rows, std::size_t cols);
  Residue& raw(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Residue modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

ModVector mat_vec_mod(const ModMatrix& a, const ModVector& x);
ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b);

/**
 * Diagonal reduction of a matrix over Z_m: row_transform * A * column_transform
 * equals a matrix whose only nonzero entries are diagonal(i) at (i, i), i < rank.
 *
 * Both transforms are products of integer-unimodular elementary operations
 * (swaps and 2x2 extended-gcd combinations), hence invertible over Z_m. Entries
 * never leave [0, m), so no big integers are involved. Solving then reduces to
 * one scalar congruence per diagonal entry, which makes the decision complete.
 *
 * Pivot rule at step k: the leftmost remaining column with a nonzero entry at or
 * below row k; within it the entry with minimal gcd(entry, m), ties to the
 * lowest row index.
 */
class ModSolver {
 public:
  explicit ModSolver(const ModMatrix& a);

  std::size_t rank() const noexcept { return diagonal_.size(); }
  const std::vector<Residue>& diagonal() const noexcept { return diagonal_; }
  const ModMatrix& row_transform() const noexcept { return row_transform_; }
  const ModMatrix& column_transform() const noexcept { return column_transform_; }

  /// Some x with A x = b (mod m), or nullopt when none exists. Zero b gives x = 0.
  std::optional<ModVector> solve(const ModVector& b) const;

 private:
  ModMatrix matrix_;
  ModMatrix row_transform_;
  ModMatrix column_transform_;
  std::vector<Residue> diagonal_;
};

/// Decides A x = b over Z_m. Any returned witness has been checked by substitution.
std::optional<ModVector> solve_linear_mod(const ModMatrix& a, const ModVector& b);

}  // namespace hypercyclic
