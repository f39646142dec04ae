#include "terracini/critical.hpp"

#include <algorithm>

namespace terracini {

ZeroDimScheme kernel_to_curvilinear(const PrimeField& f, std::span<const Point> s, int d,
                                    std::span<const Elem> lambda) {
  (void)d;
  if (s.empty()) throw Error("kernel_to_curvilinear: empty set");
  const int n = static_cast<int>(s.front().ambient_dim());
  const std::size_t block = n + 1;
  if (lambda.size() != block * s.size()) throw Error("kernel vector has the wrong length");
  if (std::all_of(lambda.begin(), lambda.end(), [](Elem e) { return e == 0; }))
    throw ZeroKernelVector("ZeroKernelVector");
  ZeroDimScheme z(f, n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vec lp(lambda.begin() + i * block, lambda.begin() + (i + 1) * block);
    if (std::all_of(lp.begin(), lp.end(), [](Elem e) { return e == 0; })) continue;
    auto dir = normalize_direction(f, s[i], lp);
    if (!dir) z.add(Component::simple(s[i]));
    else z.add({ComponentKind::Jet, s[i], std::move(*dir)});
  }
  return z;
}

CriticalScheme minimize(const ZeroDimScheme& z, int d) {
  const auto& f = z.field();
  for (const auto& c : z.components())
    if (c.kind == ComponentKind::Double) throw Error("minimize: components must have degree <= 2");
  auto prof = rank_and_left_kernel(condition_rows(z, d));
  if (prof.left_kernel_basis.empty()) throw NotPositiveH1("NotPositiveH1");

  // Current rows, tagged by component and whether the row is removable.
  struct Row {
    std::size_t comp;
    bool removable;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < z.components().size(); ++i) {
    const auto& c = z.components()[i];
    if (c.kind == ComponentKind::Simple) rows.push_back({i, true});
    else {
      rows.push_back({i, false});
      rows.push_back({i, true});
    }
  }
  auto ker = std::move(prof.left_kernel_basis);

  auto drop = [&](std::size_t r) {
    // Kernel vectors with λ_r = 0, then delete coordinate r.
    std::size_t piv = ker.size();
    for (std::size_t k = 0; k < ker.size(); ++k)
      if (ker[k][r] != 0) {
        piv = k;
        break;
      }
    if (piv != ker.size()) {
      const Elem inv = f.inv(ker[piv][r]);
      for (std::size_t k = 0; k < ker.size(); ++k) {
        if (k == piv || ker[k][r] == 0) continue;
        const Elem fac = f.mul(ker[k][r], inv);
        for (std::size_t j = 0; j < ker[k].size(); ++j)
          ker[k][j] = f.sub(ker[k][j], f.mul(fac, ker[piv][j]));
      }
      ker.erase(ker.begin() + piv);
    }
    for (auto& v : ker) v.erase(v.begin() + r);
    // A jet losing its derivative row becomes a removable simple point.
    const auto comp = rows[r].comp;
    rows.erase(rows.begin() + r);
    for (auto& row : rows)
      if (row.comp == comp) row.removable = true;
  };

  for (;;) {
    std::size_t chosen = rows.size();
    for (std::size_t r = 0; r < rows.size() && chosen == rows.size(); ++r) {
      if (!rows[r].removable) continue;
      if (ker.size() >= 2) chosen = r;
      else if (ker.front()[r] == 0) chosen = r;
    }
    if (chosen == rows.size()) break;
    drop(chosen);
  }

  // Rebuild the scheme from the surviving rows.
  ZeroDimScheme out(f, z.n());
  for (std::size_t i = 0; i < z.components().size(); ++i) {
    const auto count = std::count_if(rows.begin(), rows.end(), [&](const Row& r) { return r.comp == i; });
    if (count == 0) continue;
    const auto& c = z.components()[i];
    if (count == 2) out.add(c);
    else out.add(Component::simple(c.base));
  }
  CriticalScheme cs{out, d, cohomology(out, d).h1, {}, false};
  if (cs.h1 != 1) throw Error("minimize: result does not have h1 = 1");
  return cs;
}

CriticalScheme find_critical(const PrimeField& f, std::span<const Point> s, int d) {
  const auto prof = rank_and_left_kernel(condition_rows(double_scheme(f, s), d));
  if (prof.left_kernel_basis.empty()) throw NotPositiveH1("NotPositiveH1: h1(2S, d) = 0");
  const auto& lambda = prof.left_kernel_basis.front();
  auto cs = minimize(kernel_to_curvilinear(f, s, d, lambda), d);
  cs.kernel_vector = lambda;
  cs.full_support = cs.scheme.components().size() == s.size();
  return cs;
}

}  // namespace terracini
