#pragma once

#include <k3bps/bilaurent.hpp>

#include <optional>
#include <vector>

namespace k3bps {

/// Virtual Poincare data of a mu_m-equivariant motive: the invariant part
/// (`even`) and the part on which mu_m acts nontrivially (`odd`), each a
/// Laurent polynomial in u. The realization is even - u * odd, so that
/// L^{1/2} = 1 - [mu_2, rho] realizes to u.
struct EqPoincare {
  BiLaurent even;
  BiLaurent odd;

  BiLaurent realize() const;
  bool operator==(const EqPoincare&) const = default;

  /// Class with trivial action.
  static EqPoincare trivial(const BiLaurent& p) { return {p, BiLaurent()}; }
  /// [mu_2, rho]: mu_2 acting on itself (even 1, odd 1).
  static EqPoincare mu2_regular() { return {BiLaurent(1), BiLaurent(1)}; }
  /// 1 - [mu_2, rho].
  static EqPoincare lefschetz_half();
};

/// Convolution product: even = e e' + u^2 o o', odd = e o' + o e'.
EqPoincare eq_mul(const EqPoincare& a, const EqPoincare& b);
EqPoincare eq_add(const EqPoincare& a, const EqPoincare& b);
EqPoincare eq_sub(const EqPoincare& a, const EqPoincare& b);

/// One stratum E_I^o of the divisor of f = prod z_i^{n_i}.
struct Stratum {
  std::vector<int> indices;          // I, zero-based, sorted, nonempty
  BiLaurent open_class;              // virtual Poincare of E_I^o
  std::optional<EqPoincare> cover;   // [E~_I, rho_I]; present iff m_I > 1
};

/// Local data of a monomial superpotential in a chart U.
struct StrataInput {
  std::vector<int> exponents;              // n_1..n_k, all >= 1; empty for f = 0
  int ambient_dim = 0;                     // dim U
  std::optional<BiLaurent> ambient_class;  // [U]; required when f = 0
  std::vector<Stratum> strata;             // one per nonempty I
};

/// gcd of the exponents selected by I.
int stratum_gcd(const StrataInput& s, const std::vector<int>& indices);

/// Checks completeness and the gcd/cover consistency; throws DomainError.
void validate(const StrataInput& s);

/// Realized motivic nearby cycle sum_{I} (1 - L)^{|I|-1} [E~_I, rho_I].
BiLaurent nearby_cycle(const StrataInput& s);

/// Realized motivic vanishing cycle L^{-dim U/2}([U_0] - MF).
BiLaurent vanishing_cycle(const StrataInput& s);

/// f = z1^2 z2^2 closed form: u^{-dim M}([M] + [E_12](u - u^2)).
/// With closed [E_12] it is also the global two-component formula.
BiLaurent x2y2_virtual(const BiLaurent& m_class, const BiLaurent& e12_class, int dim_m);

/// f = z1^2 z2 closed form: u^{-dim U}([E_1^o] - [E~_1, rho_1] + u^2 [E_12^o]).
BiLaurent x2y_local(const BiLaurent& e1_open, const EqPoincare& e1_cover, const BiLaurent& e12_open,
                    int dim_u);

/// Global nonreduced-divisor case:
///   u^{-(dim M + 1)}([M - D] - [M~ - D~, iota] + u^2 [D])
/// where the invariant part of the branched cover is [M - D]. Equals
/// u^{-(dim M+1)}(u * odd_cover + u^2 [D]).
BiLaurent x2y_virtual(const BiLaurent& m_reduced, const BiLaurent& d_class, const BiLaurent& odd_cover,
                      int dim_m);

/// Odd part of a double cover branched along D, minus ramification: the
/// total class minus the invariant part [M - D].
BiLaurent branched_cover_odd_part(const BiLaurent& cover_minus_ramification, const BiLaurent& base_minus_branch);

struct EllipticK3Report {
  BiLaurent p1_class;           // [P^1]
  BiLaurent k3_class;           // [S]
  BiLaurent p1_sf_class;        // [P_1(X, s+f)] = [S] + [P^1 x P^1] - [P^1]
  BiLaurent p1_sf_virtual;      // its virtual motive (two-component formula)
  BiLaurent log_sf_q0, log_sf_q1;  // v^{s+f} coefficients of log Z^mot
  BiLaurent log_f_q0, log_f_q1;    // v^f coefficients of log Z^mot
  BiLaurent two_fiber;          // [P_0(X, 2f)]^vir from the branched double cover
  bool ok = false;
};

/// The elliptically fibered K3 worked examples in classes s, f, s+f and 2f.
EllipticK3Report elliptic_k3_example();

}  // namespace k3bps
