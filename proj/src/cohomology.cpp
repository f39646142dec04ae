#include "terracini/cohomology.hpp"

#include <algorithm>

namespace terracini {

namespace {

void check_field(const PrimeField& f, int d) {
  if (d < 0) throw Error("negative twist");
  if (!f.is_geometric()) throw Error("cohomology needs a prime above 10^6");
  if (f.modulus() <= static_cast<std::uint64_t>(d)) throw Error("prime must exceed d");
}

CohomologyReport report_from_rank(const ZeroDimScheme& z, int d, std::size_t r) {
  CohomologyReport out;
  out.n = z.n();
  out.d = d;
  out.scheme_degree = z.degree();
  out.rank = r;
  out.h0 = static_cast<std::int64_t>(monomial_count(z.n(), d)) - static_cast<std::int64_t>(r);
  out.h1 = static_cast<std::int64_t>(z.degree()) - static_cast<std::int64_t>(r);
  return out;
}

}  // namespace

std::vector<std::size_t> condition_row_offsets(const ZeroDimScheme& z) {
  std::vector<std::size_t> off{0};
  for (const auto& c : z.components()) off.push_back(off.back() + c.degree());
  return off;
}

Matrix condition_rows(const ZeroDimScheme& z, int d) {
  const auto& f = z.field();
  check_field(f, d);
  const auto& basis = monomial_basis(z.n(), d);
  Matrix m(f, z.degree(), basis.size());
  std::size_t r = 0;
  auto put = [&](const Vec& row) {
    std::copy(row.begin(), row.end(), m.row(r++).begin());
  };
  for (const auto& c : z.components()) {
    const auto& p = c.base.coords();
    switch (c.kind) {
      case ComponentKind::Simple:
        put(monomial_values(f, basis, p));
        break;
      case ComponentKind::Jet:
        put(monomial_values(f, basis, p));
        put(monomial_directional(f, basis, p, c.direction));
        break;
      case ComponentKind::Double:
        for (std::size_t i = 0; i < p.size(); ++i) put(monomial_partials(f, basis, p, i));
        break;
    }
  }
  return m;
}

CohomologyReport cohomology(const ZeroDimScheme& z, int d) {
  auto out = report_from_rank(z, d, rank(condition_rows(z, d)));
  out.primes = {z.field().modulus()};
  out.per_prime_rank = {out.rank};
  return out;
}

CohomologyReport cohomology_multi_prime(const SchemeRecipe& recipe, int d,
                                        std::span<const std::uint64_t> primes) {
  std::size_t degree = 0;
  int n = 0;
  const auto mp = multi_prime_rank(
      [&](const PrimeField& f) {
        const auto z = recipe(f);
        degree = z.degree();
        n = z.n();
        return condition_rows(z, d);
      },
      primes);
  CohomologyReport out;
  out.n = n;
  out.d = d;
  out.scheme_degree = degree;
  out.rank = mp.rank;
  out.h0 = static_cast<std::int64_t>(monomial_count(n, d)) - static_cast<std::int64_t>(mp.rank);
  out.h1 = static_cast<std::int64_t>(degree) - static_cast<std::int64_t>(mp.rank);
  out.primes = mp.primes;
  out.per_prime_rank = mp.per_prime;
  out.disagreement = mp.disagreement;
  return out;
}

}  // namespace terracini
