#include <k3bps/noether_lefschetz.hpp>

#include <k3bps/error.hpp>
#include <k3bps/pairs.hpp>

#include <algorithm>

namespace k3bps {

std::vector<Integer> divisor_sigma_table(unsigned k, int N) {
  std::vector<Integer> sigma(static_cast<std::size_t>(std::max(N, 0)) + 1, 0);
  Integer dk;
  for (int d = 1; d <= N; ++d) {
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
    for (int n = d; n <= N; n += d) sigma[static_cast<std::size_t>(n)] += dk;
  }
  return sigma;
}

IntSeries eisenstein(int weight, int N) {
  if (N < 0) throw DomainError("eisenstein: N must be nonnegative");
  long scale = 0;
  unsigned power = 0;
  switch (weight) {
    case 4: scale = 240; power = 3; break;
    case 6: scale = -504; power = 5; break;
    default: throw DomainError("eisenstein: unsupported weight " + std::to_string(weight));
  }
  auto sigma = divisor_sigma_table(power, N);
  IntSeries e(static_cast<std::size_t>(N) + 1);
  e[0] = 1;
  for (int n = 1; n <= N; ++n) e[static_cast<std::size_t>(n)] = scale * sigma[static_cast<std::size_t>(n)];
  return e;
}

IntSeries stu_nl_series(int N) {
  const auto e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  IntSeries out(static_cast<std::size_t>(N) + 1, 0);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j)
      out[static_cast<std::size_t>(i + j)] += e4[static_cast<std::size_t>(i)] * e6[static_cast<std::size_t>(j)];
  for (auto& c : out) c *= -2;
  return out;
}

Integer lattice_discriminant(const std::vector<std::vector<long>>& gram, int h,
                             const std::vector<long>& degrees) {
  const std::size_t r = gram.size();
  if (degrees.size() != r) throw DomainError("discriminant: degree count differs from lattice rank");
  for (const auto& row : gram)
    if (row.size() != r) throw DomainError("discriminant: Gram matrix is not square");
  const std::size_t n = r + 1;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = gram[i][j];
    m[i][r] = degrees[i];
    m[r][i] = degrees[i];
  }
  m[r][r] = 2L * h - 2;

  // Bareiss fraction-free elimination.
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  const Integer det = sign * m[n - 1][n - 1];
  return (r % 2 == 0) ? det : Integer(-det);
}

Integer stu_discriminant(int h, int d1, int d2) {
  return lattice_discriminant({{0, 1}, {1, 0}}, h, {d1, d2});
}

NLProfile stu_profile(int h, int d1, int d2) {
  NLProfile p;
  p.h = h;
  p.degrees = {d1, d2};
  p.discriminant = stu_discriminant(h, d1, d2);
  const long exponent = 1L + static_cast<long>(d1) * d2 - h;
  if (exponent < 0) {
    p.nl_number = 0;
    return p;
  }
  p.nl_number = stu_nl_series(static_cast<int>(exponent))[static_cast<std::size_t>(exponent)];
  p.rnl_circ.add(0, 0, p.nl_number);
  if (exponent == 0)
    p.rnl_diamond.add(0, 1, 1);
  else
    p.rnl_diamond.add(0, 0, p.nl_number);
  return p;
}

SpinTable refined_pnl(const std::vector<NLProfile>& profiles, const std::vector<RefinedTriple>& tables) {
  SpinTable out;
  for (const auto& p : profiles) {
    if (p.h < 0) continue;
    if (static_cast<std::size_t>(p.h) >= tables.size())
      throw DomainError("refined P/NL: no refined tables for h=" + std::to_string(p.h));
    const auto& t = tables[static_cast<std::size_t>(p.h)];
    out += tensor(t.circ, p.rnl_circ);
    out += tensor(t.diamond, p.rnl_diamond);
  }
  return out;
}

bool stu_positive(int d1, int d2) { return d1 >= 0 && d2 >= 0 && d1 + d2 > 0; }

SpinTable conjecture_d(int d1, int d2) {
  if (!stu_positive(d1, d2))
    throw DomainError("conjecture-d: degrees (" + std::to_string(d1) + "," + std::to_string(d2) +
                      ") are not positive for the quasi-polarization");
  // Delta >= 0 exactly when h <= 1 + d1 d2.
  const int hmax = 1 + d1 * d2;
  const auto tables = refined_tables(hmax);
  std::vector<NLProfile> profiles;
  for (int h = 0; h <= hmax; ++h) profiles.push_back(stu_profile(h, d1, d2));
  SpinTable n = refined_pnl(profiles, tables);
  for (const auto& [k, c] : n.entries()) {
    if (c < 0 || !is_integer(c))
      throw Falsification("conjecture-d: multiplicity of [" + spin_label(k.first) + "," +
                          spin_label(k.second) + "] in class (" + std::to_string(d1) + "," +
                          std::to_string(d2) + ") is " + c.get_str());
  }
  return n;
}

std::map<int, BiLaurent> stu_betti_prediction(int d1, int d2, int mmax) {
  const SpinTable n = conjecture_d(d1, d2);
  const auto series = ckk_vcoeff({n}, 1, std::max(mmax, 1), CkkConvention::threefold);
  const BiLaurent v1 = series.coeff(1).truncate_y(mmax);
  std::map<int, BiLaurent> out;
  const int lo = std::min(v1.y_range().value_or(std::pair{0, 0}).first, mmax);
  for (int m = lo; m <= mmax; ++m) out.emplace(m, v1.y_coefficient(m));
  return out;
}

}  // namespace k3bps
