#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "terracini/cohomology.hpp"

using namespace terracini;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.element(f);
  return m;
}

bool annihilates(const Matrix& m, const Vec& v) {
  auto prod = m.left_multiply(v);
  return std::all_of(prod.begin(), prod.end(), [](Elem e) { return e == 0; });
}

}  // namespace

TEST_SUITE("exactlinalg") {
  TEST_CASE("field arithmetic") {
    PrimeField f;
    CHECK(f.modulus() == 2147483647ULL);
    CHECK(f.mul(f.inv(12345), 12345) == 1);
    CHECK(f.add(f.modulus() - 1, 2) == 1);
    CHECK(f.sub(1, 2) == f.modulus() - 1);
    Elem r = 0;
    REQUIRE(f.sqrt(49, r));
    CHECK(f.mul(r, r) == 49);
    // -1 is a non-residue mod 2^31-1 since p = 3 mod 4.
    CHECK_FALSE(f.sqrt(f.modulus() - 1, r));
    CHECK_THROWS(f.inv(0));
    CHECK_THROWS(PrimeField(100));
    CHECK(is_prime(kSecondPrime));
  }

  TEST_CASE("tonelli-shanks on a prime with large 2-adic part") {
    // 998244353 - 1 = 119 * 2^23.
    PrimeField f(998244353ULL);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      const Elem a = rng.nonzero(f);
      const Elem sq = f.mul(a, a);
      Elem r = 0;
      REQUIRE(f.sqrt(sq, r));
      CHECK(f.mul(r, r) == sq);
    }
  }

  TEST_CASE("identity over p = 101") {
    PrimeField f(101);
    const auto prof = rank_and_left_kernel(Matrix::identity(f, 3));
    CHECK(prof.rank == 3);
    CHECK(prof.left_kernel_basis.empty());
  }

  TEST_CASE("equal rows give kernel (1, -1)") {
    PrimeField f(101);
    const auto m = Matrix::from_rows(f, {{1, 2, 3}, {1, 2, 3}}, 3);
    const auto prof = rank_and_left_kernel(m);
    CHECK(prof.rank == 1);
    REQUIRE(prof.left_kernel_basis.size() == 1);
    const auto& v = prof.left_kernel_basis[0];
    CHECK(f.mul(v[0], f.inv(v[1])) == f.neg(1));
    CHECK(annihilates(m, v));
  }

  TEST_CASE("rank invariant under row and column permutations") {
    PrimeField f;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      // Rank-deficient by construction: rows 8,9 are combinations.
      auto m = random_matrix(f, 10, 15, seed);
      for (std::size_t j = 0; j < 15; ++j) {
        m.at(8, j) = f.add(m.at(0, j), m.at(1, j));
        m.at(9, j) = f.mul(3, m.at(2, j));
      }
      const auto r = rank(m);
      CHECK(r == 8);
      std::vector<std::size_t> rows(10), cols(15);
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      Rng rng(seed * 31);
      for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1], rows[rng.below(i)]);
      for (std::size_t i = cols.size(); i > 1; --i) std::swap(cols[i - 1], cols[rng.below(i)]);
      CHECK(rank(m.select_rows(rows).permute_cols(cols)) == r);
      const auto prof = rank_and_left_kernel(m);
      CHECK(prof.rank + prof.left_kernel_basis.size() == m.rows());
      for (const auto& v : prof.left_kernel_basis) CHECK(annihilates(m, v));
    }
  }

  TEST_CASE("rank of block diagonal is additive") {
    PrimeField f;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto a = random_matrix(f, 4, 6, seed);
      auto b = random_matrix(f, 7, 3, seed + 100);
      CHECK(rank(block_diag(a, b)) == rank(a) + rank(b));
    }
  }

  TEST_CASE("right kernel and solve") {
    PrimeField f;
    auto m = random_matrix(f, 5, 9, 3);
    const auto ker = right_kernel(m);
    CHECK(ker.size() == 4);
    for (const auto& v : ker) {
      auto prod = m.right_multiply(v);
      CHECK(std::all_of(prod.begin(), prod.end(), [](Elem e) { return e == 0; }));
    }
    Vec x0(9);
    Rng rng(4);
    for (auto& e : x0) e = rng.element(f);
    const auto b = m.right_multiply(x0);
    Vec x;
    REQUIRE(solve(m, b, x));
    CHECK(m.right_multiply(x) == b);
  }

  TEST_CASE("multi-prime rank") {
    const std::vector<std::uint64_t> small{101, 103};
    auto id = multi_prime_rank([](const PrimeField& f) { return Matrix::identity(f, 3); }, small);
    CHECK(id.rank == 3);
    CHECK_FALSE(id.disagreement);
    auto rep = multi_prime_rank(
        [](const PrimeField& f) { return Matrix::from_rows(f, {{1, 2}, {1, 2}, {0, 1}}, 2); }, small);
    CHECK(rep.rank == 2);
    CHECK(rep.per_prime == std::vector<std::size_t>{2, 2});
    const std::uint64_t one[] = {101};
    CHECK_THROWS(multi_prime_rank([](const PrimeField& f) { return Matrix::identity(f, 1); }, one));
    const std::uint64_t same[] = {101, 101};
    CHECK_THROWS(multi_prime_rank([](const PrimeField& f) { return Matrix::identity(f, 1); }, same));
  }

  TEST_CASE("double point matrix of 20 rows agrees across the two default primes") {
    // 5 double points in P^3 against quartics: 20 x 35.
    const std::uint64_t primes[] = {kDefaultPrime, kSecondPrime};
    auto rep = multi_prime_rank(
        [](const PrimeField& f) {
          auto pts = testutil::random_points(f, 3, 5, 99);
          return condition_rows(double_scheme(f, pts), 4);
        },
        primes);
    CHECK_FALSE(rep.disagreement);
    CHECK(rep.rank == 20);
  }
}
