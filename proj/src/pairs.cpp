#include <k3bps/pairs.hpp>

#include <k3bps/error.hpp>
#include <k3bps/hodge.hpp>

#include <algorithm>

namespace k3bps {

namespace {

BiLaurent adams(const BiLaurent& p, int r) {
  BiLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(r * e.first, r * e.second, c);
  return out;
}

/// sum_{m=1}^{mmax} y^m [(m-1)/2]_u: the (m, j) part of the product index.
BiLaurent tower(int mmax) {
  BiLaurent f;
  for (int m = 1; m <= mmax; ++m)
    for (int j = 0; j < m; ++j) f.add_term(-m + 1 + 2 * j, m, 1);
  return f;
}

/// Character realizations of the entries with even / odd 2(j_L + j_R).
std::pair<BiLaurent, BiLaurent> split_by_parity(const SpinTable& t) {
  BiLaurent even, odd;
  for (const auto& [k, c] : t.entries()) {
    BiLaurent chi = (character(k.first, CharVar::y) * character(k.second, CharVar::u)) * c;
    ((k.first + k.second) % 2 == 0 ? even : odd) += chi;
  }
  return {even, odd};
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

/// Lower bound on the y-exponent per unit of v-degree over all log terms.
int log_min_y_bound(const std::vector<SpinTable>& tables, int K) {
  int bound = 0;
  for (int k = 1; k <= K; ++k) {
    const auto& t = tables[static_cast<std::size_t>(k - 1)];
    if (t.empty()) continue;
    bound = std::min(bound, (K / k) * std::min(0, 1 - t.max_jl2()));
  }
  return bound;
}

}  // namespace

int multiple_cover_genus(int h, int k) { return k * k * (h - 1) + 1; }

TruncatedSeries ckk_log(const std::vector<SpinTable>& tables, int K, int y_window,
                        CkkConvention convention) {
  if (K < 1) throw DomainError("ckk: K must be at least 1");
  if (tables.size() < static_cast<std::size_t>(K)) throw DomainError("ckk: need one table per multiplicity");
  TruncatedSeries log(Grading::v, K, y_window);
  for (int k = 1; k <= K; ++k) {
    const auto& table = tables[static_cast<std::size_t>(k - 1)];
    if (table.empty()) continue;
    const auto [even, odd] = split_by_parity(table);
    const int lowest = -table.max_jl2();  // smallest y-exponent of a character
    for (int r = 1; k * r <= K; ++r) {
      // psi_r multiplies y-exponents by r, so keep G = S * tower up to y_window / r.
      const int cap = floor_div(y_window, r);
      const BiLaurent f = tower(cap - lowest);
      const Rational alternating = Rational(sign_power(r + 1), r);
      BiLaurent term;
      if (!even.is_zero()) term += adams((even * f).truncate_y(cap), r) * alternating;
      if (!odd.is_zero()) {
        // surface: exponent -N with (1 + X); threefold: (1 - X)^{-N}.
        const Rational w = convention == CkkConvention::surface ? -alternating : Rational(1, r);
        term += adams((odd * f).truncate_y(cap), r) * w;
      }
      log.add_to_coeff(k * r, term);
    }
  }
  return log;
}

TruncatedSeries ckk_vcoeff(const std::vector<SpinTable>& tables, int K, int nwindow,
                           CkkConvention convention) {
  if (nwindow < 1) throw DomainError("ckk: window must be at least 1");
  if (K < 1) throw DomainError("ckk: K must be at least 1");
  if (tables.size() < static_cast<std::size_t>(K)) throw DomainError("ckk: need one table per multiplicity");
  // exp can pull terms down by (K - 1) times the most negative exponent, so
  // the log is computed on a correspondingly wider window.
  const int widen = std::max(K - 1, 0) * -log_min_y_bound(tables, K);
  auto log = ckk_log(tables, K, nwindow + widen, convention);
  auto product = series_exp(log);
  if (!product.y_window() || *product.y_window() < nwindow)
    throw WindowError("ckk: window too small to determine the requested coefficients");
  return product.restricted(K, nwindow);
}

BiLaurent kawai_yoshioka_series(int h, int nmax) {
  if (h < 0) return {};
  return ckk_vcoeff({refined_invariant(h)}, 1, std::max(nmax, 1)).coeff(1).truncate_y(nmax);
}

BiLaurent projective_space_class(int n) {
  BiLaurent p;
  for (int i = 0; i < n; ++i) p.add_term(1 - n + 2 * i, 0, 1);
  return p;
}

BiLaurent ky_prefactor() {
  return BiLaurent::y(1) + BiLaurent::y(-1) - BiLaurent::u(1) - BiLaurent::u(-1);
}

KyReport kawai_yoshioka_check(int hmax, int nmax) {
  if (hmax < 0) throw DomainError("ky-check: hmax must be nonnegative");
  KyReport report;
  report.hmax = hmax;
  report.nmax = nmax;
  const auto hodge = hodge_product(hmax);
  const BiLaurent prefactor = ky_prefactor();
  for (int h = 0; h <= hmax; ++h) {
    // One extra y-degree so the prefactor's y^{-1} term is covered at y^nmax.
    const BiLaurent pairs = kawai_yoshioka_series(h, nmax + 1);
    report.pairs_series.push_back(pairs.truncate_y(nmax));
    const BiLaurent lhs = (prefactor * pairs).truncate_y(nmax);
    const BiLaurent rhs = hodge.coeff(h).truncate_y(nmax);
    int lo = std::min(lhs.y_range().value_or(std::pair{0, 0}).first,
                      rhs.y_range().value_or(std::pair{0, 0}).first);
    for (int e = lo; e <= nmax; ++e) {
      BiLaurent a = lhs.y_coefficient(e), b = rhs.y_coefficient(e);
      if (a != b) report.mismatches.push_back({h, e, b, a});
    }
    if (auto r = pairs.y_range(); r && r->first < 1 - h) {
      for (int e = r->first; e < 1 - h; ++e) {
        BiLaurent a = pairs.y_coefficient(e);
        if (!a.is_zero()) report.mismatches.push_back({h, e, BiLaurent(), a});
      }
    }
  }
  report.ok = report.mismatches.empty();
  return report;
}

ConjectureCResult conjecture_c(int h, int K, int nwindow) {
  if (K < 1) throw DomainError("conjecture-c: K must be at least 1");
  if (h < 0) throw DomainError("conjecture-c: h must be nonnegative");
  std::vector<SpinTable> tables;
  int top = 0;
  for (int k = 1; k <= K; ++k) top = std::max(top, multiple_cover_genus(h, k));
  const auto all = refined_invariants(top);
  for (int k = 1; k <= K; ++k) {
    const int hk = multiple_cover_genus(h, k);
    tables.push_back(hk < 0 ? SpinTable{} : all[static_cast<std::size_t>(hk)]);
  }

  ConjectureCResult result;
  result.h = h;
  result.K = K;
  result.window = nwindow;
  // The log loses (K - 1) times the most negative y-exponent of Z, so widen
  // the product until the log is determined up to nwindow.
  int wide = nwindow;
  TruncatedSeries z = ckk_vcoeff(tables, K, wide);
  TruncatedSeries log = series_log(z);
  for (int attempt = 0; !log.y_window() || *log.y_window() < nwindow; ++attempt) {
    if (attempt == 8 || !log.y_window()) throw WindowError("conjecture-c: log window smaller than requested");
    wide += nwindow - *log.y_window();
    z = ckk_vcoeff(tables, K, wide);
    log = series_log(z);
  }
  z = z.restricted(K, nwindow);
  log = log.restricted(K, nwindow);

  for (int k = 1; k <= K; ++k) {
    const auto& zk = z.coeff(k);
    const auto& lk = log.coeff(k);
    for (int n = std::min(zk.y_range().value_or(std::pair{0, 0}).first,
                          lk.y_range().value_or(std::pair{0, 0}).first);
         n <= nwindow; ++n) {
      if (auto p = zk.y_coefficient(n); !p.is_zero()) {
        if (!p.has_integer_coefficients() || !p.is_palindromic_u())
          throw Falsification("conjecture-c: entry (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                              ") = " + p.to_string() + " is not an integral palindromic polynomial");
        result.partition.emplace(std::pair{n, k}, std::move(p));
      }
      if (auto p = lk.y_coefficient(n); !p.is_zero()) result.invariants.emplace(std::pair{n, k}, std::move(p));
    }
  }

  const BiLaurent ky = kawai_yoshioka_series(h, nwindow);
  for (int n = ky.y_range().value_or(std::pair{0, 0}).first; n <= nwindow; ++n) {
    const BiLaurent expected = ky.y_coefficient(n);
    auto it = result.partition.find({n, 1});
    const BiLaurent got = it == result.partition.end() ? BiLaurent() : it->second;
    if (got != expected)
      throw Falsification("conjecture-c: k=1 slice differs from the Kawai-Yoshioka series at n=" +
                          std::to_string(n));
  }
  return result;
}

std::map<std::pair<int, int>, Integer> pairs_unrefine(const PairsTable& table) {
  std::map<std::pair<int, int>, Integer> out;
  for (const auto& [key, poly] : table) {
    const Rational v = poly.evaluate(-1, 1);
    if (!is_integer(v))
      throw Falsification("pairs_unrefine: entry (n=" + std::to_string(key.first) + ", k=" +
                          std::to_string(key.second) + ") is not integral at u=-1");
    out.emplace(key, v.get_num());
  }
  return out;
}

}  // namespace k3bps
