#include "terracini/matrix.hpp"

#include <algorithm>
#include <utility>

namespace terracini {

namespace {

// Forward elimination over the first `pivot_cols` columns of a row-major
// buffer of width `width`. Row operations are applied across the full width.
// Returns the rank; on exit rows [0, rank) are the pivot rows.
std::size_t forward_eliminate(const PrimeField& f, std::vector<Elem>& a, std::size_t rows,
                              std::size_t width, std::size_t pivot_cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * width + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + piv * width, a.begin() + (piv + 1) * width,
                       a.begin() + r * width);
    }
    Elem* prow = a.data() + r * width;
    const Elem inv = f.inv(prow[c]);
    for (std::size_t j = c; j < width; ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Elem* row = a.data() + i * width;
      const Elem factor = row[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < width; ++j) {
        if (prow[j] != 0) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
      }
    }
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(const PrimeField& f, std::vector<Elem>& a, std::size_t rows,
                              std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols,
                       a.begin() + r * cols);
    }
    Elem* prow = a.data() + r * cols;
    const Elem inv = f.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* row = a.data() + i * cols;
      const Elem factor = row[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const PrimeField& field, const std::vector<Vec>& rows,
                         std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("from_rows: ragged input");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> which) const {
  Matrix s(field_, which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i) {
    auto src = row(which[i]);
    std::copy(src.begin(), src.end(), s.row(i).begin());
  }
  return s;
}

Matrix Matrix::permute_cols(std::span<const std::size_t> order) const {
  Matrix s(field_, rows_, order.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < order.size(); ++j) s.at(i, j) = at(i, order[j]);
  return s;
}

Vec Matrix::left_multiply(std::span<const Elem> v) const {
  if (v.size() != rows_) throw Error("left_multiply: size mismatch");
  Vec out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = field_.add(out[j], field_.mul(v[i], r[j]));
  }
  return out;
}

Vec Matrix::right_multiply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error("right_multiply: size mismatch");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    Elem acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul(r[j], v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error("block_diag: field mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

RankProfile rank_and_left_kernel(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t width = cols + rows;
  std::vector<Elem> a(rows * width, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    auto src = m.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * width);
    a[i * width + cols + i] = 1;
  }
  RankProfile out;
  out.rank = forward_eliminate(m.field(), a, rows, width, cols);
  for (std::size_t i = out.rank; i < rows; ++i) {
    out.left_kernel_basis.emplace_back(a.begin() + i * width + cols,
                                       a.begin() + (i + 1) * width);
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return rank(m.transpose());
  std::vector<Elem> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto src = m.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * m.cols());
  }
  return forward_eliminate(m.field(), a, m.rows(), m.cols(), m.cols());
}

std::vector<Vec> right_kernel(const Matrix& m) {
  const auto& f = m.field();
  std::vector<Elem> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto src = m.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * m.cols());
  }
  const auto pivots = rref(f, a, m.rows(), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(a[k * m.cols() + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Elem determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Elem> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto src = m.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * n);
  }
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(a.begin() + piv * n, a.begin() + (piv + 1) * n, a.begin() + c * n);
      det = f.neg(det);
    }
    det = f.mul(det, a[c * n + c]);
    const Elem inv = f.inv(a[c * n + c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem fac = f.mul(a[i * n + c], inv);
      if (fac == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(fac, a[c * n + j]));
    }
  }
  return det;
}

bool solve(const Matrix& m, std::span<const Elem> b, Vec& x) {
  if (b.size() != m.rows()) throw Error("solve: size mismatch");
  const auto& f = m.field();
  const std::size_t w = m.cols() + 1;
  std::vector<Elem> a(m.rows() * w);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto src = m.row(i);
    std::copy(src.begin(), src.end(), a.begin() + i * w);
    a[i * w + m.cols()] = b[i];
  }
  const auto pivots = rref(f, a, m.rows(), w);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k * w + m.cols()];
  return true;
}

MultiPrimeRank multi_prime_rank(const MatrixRecipe& recipe,
                                std::span<const std::uint64_t> primes) {
  if (primes.size() < 2) throw Error("multi_prime_rank: need at least two primes");
  MultiPrimeRank out;
  for (auto p : primes) {
    if (std::find(out.primes.begin(), out.primes.end(), p) != out.primes.end())
      throw Error("multi_prime_rank: primes must be distinct");
    const PrimeField field(p);
    const auto r = rank(recipe(field));
    out.primes.push_back(p);
    out.per_prime.push_back(r);
    out.rank = std::max(out.rank, r);
  }
  out.disagreement = std::any_of(out.per_prime.begin(), out.per_prime.end(),
                                 [&](std::size_t r) { return r != out.per_prime.front(); });
  return out;
}

}  // namespace terracini
