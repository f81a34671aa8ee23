#pragma once

#include <k3bps/series.hpp>
#include <k3bps/su2.hpp>

#include <map>
#include <utility>
#include <vector>

namespace k3bps {

/// Sign convention for the refined product
///   prod_k prod_{j_L,j_R,m_L,m_R,m>=1,0<=j<m} (1 + X v^k)^{e},
///   X = u^{-m+1+2j-2m_R} y^{m-2m_L}, sigma = (-1)^{2(j_L+j_R)}.
enum class CkkConvention {
  /// (1 + X v^k)^{sigma R}: the K3 surface form.
  surface,
  /// (1 + sigma X v^k)^{sigma N}: fermionic/bosonic form for 3-fold tables.
  /// Agrees with `surface` whenever every j_L + j_R is an integer.
  threefold,
};

/// h[k] = k^2 (h - 1) + 1, the genus parameter of the k-fold multiple.
int multiple_cover_genus(int h, int k);

/// log of the refined product, as a series in v (trunc K) whose coefficients
/// are exact for y-exponents <= y_window. tables[k-1] feeds the v^k factors.
TruncatedSeries ckk_log(const std::vector<SpinTable>& tables, int K, int y_window,
                        CkkConvention convention = CkkConvention::surface);

/// The refined product itself (exp of ckk_log), exact for y <= nwindow.
TruncatedSeries ckk_vcoeff(const std::vector<SpinTable>& tables, int K, int nwindow,
                           CkkConvention convention = CkkConvention::surface);

/// sum_n H(P_n(S,h)) y^n for y-exponents <= nmax (the v^1 coefficient for R^h).
BiLaurent kawai_yoshioka_series(int h, int nmax);

/// u^{1-n}(1 + u^2 + ... + u^{2(n-1)}): the normalized P^{n-1} for h = 0.
BiLaurent projective_space_class(int n);

/// (u y - 1)(u^{-1} - y^{-1}) = y + y^{-1} - u - u^{-1}.
BiLaurent ky_prefactor();

struct KyMismatch {
  int h = 0;
  int y_exponent = 0;
  BiLaurent expected;  // from the Hodge product
  BiLaurent actual;    // prefactor times pairs series
};

struct KyReport {
  int hmax = 0;
  int nmax = 0;
  bool ok = true;
  std::vector<BiLaurent> pairs_series;  // index h
  std::vector<KyMismatch> mismatches;
};

/// Compares prefactor * sum_n H(P_n(S,h)) y^n with the q^h coefficient of
/// hodge_product for h <= hmax and y-exponents <= nmax. Also checks that the
/// pairs series vanishes below y^{1-h}.
KyReport kawai_yoshioka_check(int hmax, int nmax);

/// Association (n, k) -> Laurent polynomial in u.
using PairsTable = std::map<std::pair<int, int>, BiLaurent>;

struct ConjectureCResult {
  int h = 0;
  int K = 0;
  int window = 0;
  /// y^n v^k coefficients of the product: virtual Poincare polynomials of
  /// [P_n(S, k alpha)]^vir. Integral and palindromic.
  PairsTable partition;
  /// y^n v^k coefficients of series_log of the product (rational in general).
  PairsTable invariants;
};

/// Builds Z_h from the tables R^{h[k]}, k = 1..K, and extracts both the
/// partition-function coefficients and their logarithm for y-exponents
/// <= nwindow. Throws Falsification if a partition entry is non-integral or
/// not palindromic, or if the k = 1 slice disagrees with the Kawai-Yoshioka
/// series.
ConjectureCResult conjecture_c(int h, int K, int nwindow);

/// Substitutes u = -1 in every entry. Throws Falsification on a non-integer.
std::map<std::pair<int, int>, Integer> pairs_unrefine(const PairsTable& table);

}  // namespace k3bps
