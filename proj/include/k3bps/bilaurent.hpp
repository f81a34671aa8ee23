#pragma once

#include <k3bps/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace k3bps {

/// Laurent polynomial in the two character variables u and y with exact
/// rational coefficients.
///
/// Terms are keyed by the exponent pair (e_u, e_y) and kept in lexicographic
/// order; no stored coefficient is ever zero. Polynomials in u alone (virtual
/// Poincare polynomials) are represented as BiLaurent with e_y = 0.
class BiLaurent {
 public:
  using Exponent = std::pair<int, int>;  // (e_u, e_y)
  using Terms = std::map<Exponent, Rational>;

  BiLaurent() = default;
  BiLaurent(const Rational& c);  // NOLINT: constants promote implicitly
  BiLaurent(long c) : BiLaurent(Rational(c)) {}  // NOLINT
  BiLaurent(int c) : BiLaurent(Rational(c)) {}   // NOLINT

  static BiLaurent monomial(const Rational& c, int eu, int ey);
  static BiLaurent u(int e = 1) { return monomial(1, e, 0); }
  static BiLaurent y(int e = 1) { return monomial(1, 0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coeff(int eu, int ey) const;
  /// Adds c * u^eu y^ey in place, dropping the term if it cancels.
  void add_term(int eu, int ey, const Rational& c);

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const BiLaurent& o);
  BiLaurent& operator*=(const Rational& c);

  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator*(BiLaurent a, const Rational& c) { return a *= c; }
  friend BiLaurent operator*(const Rational& c, BiLaurent a) { return a *= c; }
  BiLaurent operator-() const;
  friend bool operator==(const BiLaurent& a, const BiLaurent& b) {
    return a.terms_ == b.terms_;
  }

  BiLaurent pow(unsigned n) const;

  /// u -> u^{-1} (resp. y -> y^{-1}).
  BiLaurent invert_u() const;
  BiLaurent invert_y() const;
  /// Substitutes y -> s * y (s = -1 is the sign flip used for unrefinement).
  BiLaurent scale_y(const Rational& s) const;
  /// Substitutes a value for u; the result only involves y. u must be nonzero
  /// if negative u-exponents occur.
  BiLaurent subs_u(const Rational& value) const;
  BiLaurent subs_y(const Rational& value) const;
  Rational evaluate(const Rational& u, const Rational& y) const;

  /// Coefficient of y^ey, as a polynomial in u.
  BiLaurent y_coefficient(int ey) const;
  /// Keeps only terms with e_y <= max_ey.
  BiLaurent truncate_y(int max_ey) const;

  std::optional<std::pair<int, int>> u_range() const;
  std::optional<std::pair<int, int>> y_range() const;

  /// Invariant under u -> u^{-1} and under y -> y^{-1}.
  bool is_symmetric() const;
  bool is_palindromic_u() const { return *this == invert_u(); }
  bool has_integer_coefficients() const;

  /// Canonical human-readable rendering, e.g. "u^-2 + 22 + u^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

std::string to_string(const BiLaurent& p);

}  // namespace k3bps
