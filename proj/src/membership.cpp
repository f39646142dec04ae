#include "terracini/membership.hpp"

namespace terracini {

namespace {

MembershipCertificate base_certificate(const PrimeField& f, std::span<const Point> s, int d,
                                       const CohomologyReport& rep) {
  MembershipCertificate c;
  c.n = static_cast<int>(s.front().ambient_dim());
  c.d = d;
  c.prime = f.modulus();
  c.points.assign(s.begin(), s.end());
  c.h0 = rep.h0;
  c.h1 = rep.h1;
  c.span_dim = span_dim(f, s);
  c.t1 = rep.h0 > 0 && rep.h1 > 0;
  c.terracini = c.t1 && c.span_dim == c.n;
  if (rep.h0 == 0) c.refutation = "h0 = 0";
  else if (rep.h1 == 0) c.refutation = "h1 = 0";
  return c;
}

}  // namespace

MembershipCertificate is_T1(const PrimeField& f, std::span<const Point> s, int d) {
  if (s.empty()) throw Error("is_T1: empty set");
  const auto rep = cohomology(double_scheme(f, s), d);
  return base_certificate(f, s, d, rep);
}

MembershipCertificate is_terracini(const PrimeField& f, std::span<const Point> s, int d) {
  auto c = is_T1(f, s, d);
  if (c.t1 && !c.terracini) c.refutation = "span deficient";
  return c;
}

MembershipCertificate is_minimally_terracini(const PrimeField& f, std::span<const Point> s,
                                             int d) {
  if (s.empty()) throw Error("is_minimally_terracini: empty set");
  const auto z = double_scheme(f, s);
  const auto prof = rank_and_left_kernel(condition_rows(z, d));
  CohomologyReport rep;
  rep.rank = prof.rank;
  rep.h0 = static_cast<std::int64_t>(monomial_count(z.n(), d)) - static_cast<std::int64_t>(prof.rank);
  rep.h1 = static_cast<std::int64_t>(z.degree()) - static_cast<std::int64_t>(prof.rank);
  auto c = base_certificate(f, s, d, rep);
  if (c.t1 && !c.terracini) c.refutation = "span deficient";
  c.minimality_checked = true;

  const std::size_t block = static_cast<std::size_t>(c.n) + 1;
  const auto& ker = prof.left_kernel_basis;
  c.subset_h1.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t r = 0;
    if (!ker.empty()) {
      Matrix k(f, ker.size(), block);
      for (std::size_t a = 0; a < ker.size(); ++a)
        for (std::size_t b = 0; b < block; ++b) k.at(a, b) = ker[a][i * block + b];
      r = rank(k);
    }
    c.subset_h1[i] = c.h1 - static_cast<std::int64_t>(r);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (c.subset_h1[i] > 0) {
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) c.violating_subset.push_back(j);
      break;
    }
  }
  c.minimal = c.terracini && c.violating_subset.empty();
  if (c.terracini && !c.minimal) c.refutation = "proper subset with h1 > 0";
  return c;
}

std::uint64_t rho(int n, int d) {
  const auto c = monomial_count(n, d);
  return (c + 1 + n) / (n + 1);
}

std::vector<BoundVerdict> check_member_bounds(const PrimeField& f,
                                              const MembershipCertificate& cert) {
  std::vector<BoundVerdict> out;
  const auto x = cert.points.size();
  out.push_back({"h1 <= n+1", cert.h1 <= cert.n + 1,
                 "h1 = " + std::to_string(cert.h1) + ", n+1 = " + std::to_string(cert.n + 1)});
  const auto up = cohomology(double_scheme(f, cert.points), cert.d + 1);
  out.push_back({"h1(2S, d+1) = 0", up.h1 == 0, "h1 = " + std::to_string(up.h1)});
  const auto r = rho(cert.n, cert.d);
  out.push_back({"x <= rho", x <= r, "x = " + std::to_string(x) + ", rho = " + std::to_string(r)});
  const auto c = monomial_count(cert.n, cert.d);
  if (c % (cert.n + 1) == 0) {
    const auto forbidden = 1 + c / (cert.n + 1);
    out.push_back({"x != 1 + C(n+d,n)/(n+1)", x != forbidden,
                   "x = " + std::to_string(x) + ", excluded = " + std::to_string(forbidden)});
  }
  return out;
}

}  // namespace terracini
