#pragma once

#include <k3bps/series.hpp>
#include <k3bps/su2.hpp>

#include <vector>

namespace k3bps {

/// The five monomials u^{-1}y^{-1}, u^{-1}y, 20, u y^{-1}, u y whose
/// inverse-factor product over n >= 1 is the Hodge series of Hilb(K3).
BiLaurent hodge_factor_base();
/// Same without the 20 trivial factors (the diamond part).
BiLaurent diamond_factor_base();
/// 2y^{-1} + 20 + 2y: the unrefined (u = -1 style) KKV product.
BiLaurent kkv_factor_base();

/// prod_{n>=1} prod_{c*M in base} (1 - M q^n)^{-c} truncated at q^hmax, computed
/// as exp of sum_d q^d sum_{r|d} psi_r(base)/r. base must have integer
/// coefficients.
TruncatedSeries plethystic_product(const BiLaurent& base, int hmax);

/// The same product multiplied out factor by factor with expand_factor and
/// series_mul. Slower; independent of the exp/log route.
TruncatedSeries product_by_factors(const BiLaurent& base, int hmax);

/// prod_n 1/[(1-u^-1y^-1 q^n)(1-u^-1y q^n)(1-q^n)^20(1-uy^-1 q^n)(1-uy q^n)].
TruncatedSeries hodge_product(int hmax);
/// hodge_product without the (1-q^n)^20 factors.
TruncatedSeries diamond_product(int hmax);

struct RefinedTriple {
  int h = 0;
  SpinTable full;     // R^h
  SpinTable diamond;  // R^{h,diamond}
  SpinTable circ;     // R^{h,circ} = R^h - R^{h,diamond}
};

/// Decomposes both products for h = 0..hmax. Throws Falsification if some
/// R^{h,circ} multiplicity is negative or fractional.
std::vector<RefinedTriple> refined_tables(int hmax);

/// R^h for h = 0..hmax only (index = h).
std::vector<SpinTable> refined_invariants(int hmax);

/// R^h for any integer h, with R^{h<0} = 0.
SpinTable refined_invariant(int h);

/// r^h_g read off directly from the KKV product in the basis
/// (-1)^g (y^{1/2} - y^{-1/2})^{2g}. Independent of decompose/unrefine.
std::vector<GenusTable> kkv_from_product(int hmax);

}  // namespace k3bps
