#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "terracini/field.hpp"

namespace terracini {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const PrimeField& field, std::size_t n);
  /// Rows given as vectors of equal length (entries reduced by the caller).
  static Matrix from_rows(const PrimeField& field, const std::vector<Vec>& rows,
                          std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> which) const;
  Matrix permute_cols(std::span<const std::size_t> order) const;
  /// vᵀ · M
  Vec left_multiply(std::span<const Elem> v) const;
  /// M · v
  Vec right_multiply(std::span<const Elem> v) const;

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Matrix block_diag(const Matrix& a, const Matrix& b);

struct RankProfile {
  std::size_t rank = 0;
  /// Basis of {v : vᵀ M = 0}; rank + basis size = rows.
  std::vector<Vec> left_kernel_basis;
};

/// Forward Gaussian elimination on [M | I]; pivots are the first nonzero entry
/// of each column among the unprocessed rows, in row order.
RankProfile rank_and_left_kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0}, from the reduced row echelon form.
std::vector<Vec> right_kernel(const Matrix& m);

/// Determinant of a square matrix.
Elem determinant(const Matrix& m);

/// Solves M x = b; returns false when inconsistent.
bool solve(const Matrix& m, std::span<const Elem> b, Vec& x);

using MatrixRecipe = std::function<Matrix(const PrimeField&)>;

struct MultiPrimeRank {
  std::size_t rank = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> per_prime;
  bool disagreement = false;
};

/// Rebuilds the matrix once per prime and returns the maximum rank. Ranks that
/// differ between primes set `disagreement`.
MultiPrimeRank multi_prime_rank(const MatrixRecipe& recipe,
                                std::span<const std::uint64_t> primes);

}  // namespace terracini
