#pragma once

#include <k3bps/hodge.hpp>
#include <k3bps/su2.hpp>

#include <map>
#include <vector>

namespace k3bps {

/// Integer q-expansion, index = power of q.
using IntSeries = std::vector<Integer>;

/// sigma_k(n) = sum of d^k over divisors d of n, for n = 0..N (sigma_k(0) = 0).
std::vector<Integer> divisor_sigma_table(unsigned k, int N);

/// E_4 = 1 + 240 sum sigma_3(n) q^n, E_6 = 1 - 504 sum sigma_5(n) q^n.
IntSeries eisenstein(int weight, int N);

/// -2 E_4 E_6 truncated at q^N.
IntSeries stu_nl_series(int N);

/// Delta(h, d) = (-1)^r det of the Gram matrix bordered by (d_1..d_r, 2h-2).
Integer lattice_discriminant(const std::vector<std::vector<long>>& gram, int h,
                             const std::vector<long>& degrees);

/// STU lattice [[0,1],[1,0]]: Delta = 2(1 + d1 d2 - h).
Integer stu_discriminant(int h, int d1, int d2);

struct NLProfile {
  int h = 0;
  std::vector<long> degrees;
  Integer discriminant;
  Integer nl_number;
  SpinTable rnl_circ;
  SpinTable rnl_diamond;
};

NLProfile stu_profile(int h, int d1, int d2);

/// sum_h R^{h,circ} (x) RNL^circ_h + R^{h,diamond} (x) RNL^diamond_h over the
/// supplied profiles. Profiles with h outside the tables contribute nothing
/// (R^{h<0} = 0); a profile with h beyond the tables is an error.
SpinTable refined_pnl(const std::vector<NLProfile>& profiles, const std::vector<RefinedTriple>& tables);

/// True when (d1, d2) has positive degree against the quasi-polarization
/// v1 + v2 with both degrees nonnegative.
bool stu_positive(int d1, int d2);

/// Refined invariants of the STU model in fiber class (d1, d2). Throws
/// Falsification on a negative or fractional multiplicity.
SpinTable conjecture_d(int d1, int d2);

/// Normalized Poincare polynomials of P_m(X,(d1,d2)) for y-exponents m <= mmax
/// (map key = m), from the v^1 coefficient of the 3-fold refined product.
std::map<int, BiLaurent> stu_betti_prediction(int d1, int d2, int mmax);

}  // namespace k3bps
