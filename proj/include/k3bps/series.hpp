#pragma once

#include <k3bps/bilaurent.hpp>

#include <optional>
#include <string>
#include <vector>

namespace k3bps {

/// Which formal variable grades a series: q (genus / fiber degree) or
/// v (class multiplicity).
enum class Grading { q, v };

std::string grading_name(Grading g);

/// Formal power series sum_d c_d x^d over BiLaurent, known exactly for
/// d <= trunc_order().
///
/// When y_window() is set, each coefficient is exact only for y-exponents
/// <= *y_window(); nothing above the window is stored. Arithmetic propagates
/// both bounds so that every stored term is exact.
class TruncatedSeries {
 public:
  TruncatedSeries(Grading var, int trunc_order, std::optional<int> y_window = std::nullopt);

  static TruncatedSeries one(Grading var, int trunc_order,
                             std::optional<int> y_window = std::nullopt);

  Grading var() const { return var_; }
  int trunc_order() const { return trunc_; }
  std::optional<int> y_window() const { return y_window_; }
  const std::vector<BiLaurent>& coeffs() const { return coeffs_; }

  /// Exact coefficient of x^d; throws WindowError outside 0..trunc_order().
  const BiLaurent& coeff(int d) const;
  void set_coeff(int d, BiLaurent c);
  void add_to_coeff(int d, const BiLaurent& c);

  /// Smallest y-exponent occurring in any coefficient (nullopt if zero).
  std::optional<int> min_y_exponent() const;
  /// Re-truncates to a smaller order and/or window.
  TruncatedSeries restricted(int trunc_order, std::optional<int> y_window) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries operator*(const Rational& c) const;
  bool operator==(const TruncatedSeries& o) const = default;

 private:
  void clip(int d);

  Grading var_;
  int trunc_;
  std::optional<int> y_window_;
  std::vector<BiLaurent> coeffs_;
};

/// Cauchy product within the joint validity window.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Formal logarithm; the constant term must be exactly 1.
TruncatedSeries series_log(const TruncatedSeries& a);

/// Formal exponential; the constant term must be 0.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// Exact coefficient of x^d (WindowError beyond the truncation order).
BiLaurent coeff(const TruncatedSeries& a, int d);

/// Binomial expansion of (1 - m x^n)^e truncated at x^N, for a monomial m,
/// n >= 1 and any integer e (negative e gives the negative-binomial series).
TruncatedSeries expand_factor(const BiLaurent& m, int n, long e, int N, Grading var = Grading::q);

/// Generalized binomial coefficient binom(e, i) for integer e, i >= 0.
Rational binomial(long e, int i);

}  // namespace k3bps
