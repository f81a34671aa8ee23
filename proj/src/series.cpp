#include <k3bps/series.hpp>

#include <k3bps/error.hpp>

#include <algorithm>

namespace k3bps {

namespace {

void require_same_grading(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var() != b.var())
    throw DomainError("mismatched grading variables: " + grading_name(a.var()) + " vs " +
                      grading_name(b.var()));
}

std::optional<int> min_window(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

/// Window of exp/log results: a degree-n coefficient is a sum of products of
/// at most n input coefficients, so each extra factor can pull an unknown
/// term down by the most negative y-exponent present.
std::optional<int> composite_window(const TruncatedSeries& x) {
  if (!x.y_window()) return std::nullopt;
  int neg = std::min(x.min_y_exponent().value_or(0), 0);
  return *x.y_window() + std::max(x.trunc_order() - 1, 0) * neg;
}

BiLaurent clipped(const BiLaurent& p, std::optional<int> window) {
  return window ? p.truncate_y(*window) : p;
}

}  // namespace

std::string grading_name(Grading g) { return g == Grading::q ? "q" : "v"; }

TruncatedSeries::TruncatedSeries(Grading var, int trunc_order, std::optional<int> y_window)
    : var_(var), trunc_(trunc_order), y_window_(y_window) {
  if (trunc_order < 0) throw DomainError("truncation order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(trunc_order) + 1);
}

TruncatedSeries TruncatedSeries::one(Grading var, int trunc_order, std::optional<int> y_window) {
  TruncatedSeries s(var, trunc_order, y_window);
  s.set_coeff(0, BiLaurent(1));
  return s;
}

const BiLaurent& TruncatedSeries::coeff(int d) const {
  if (d < 0 || d > trunc_)
    throw WindowError("coefficient " + grading_name(var_) + "^" + std::to_string(d) +
                      " requested beyond truncation order " + std::to_string(trunc_));
  return coeffs_[static_cast<std::size_t>(d)];
}

void TruncatedSeries::set_coeff(int d, BiLaurent c) {
  coeff(d);  // bounds check
  coeffs_[static_cast<std::size_t>(d)] = std::move(c);
  clip(d);
}

void TruncatedSeries::add_to_coeff(int d, const BiLaurent& c) {
  coeff(d);
  coeffs_[static_cast<std::size_t>(d)] += c;
  clip(d);
}

void TruncatedSeries::clip(int d) {
  if (y_window_) {
    auto& c = coeffs_[static_cast<std::size_t>(d)];
    c = c.truncate_y(*y_window_);
  }
}

std::optional<int> TruncatedSeries::min_y_exponent() const {
  std::optional<int> lo;
  for (const auto& c : coeffs_) {
    if (auto r = c.y_range()) lo = lo ? std::min(*lo, r->first) : r->first;
  }
  return lo;
}

TruncatedSeries TruncatedSeries::restricted(int trunc_order, std::optional<int> y_window) const {
  int n = std::min(trunc_order, trunc_);
  auto w = min_window(y_window, y_window_);
  TruncatedSeries r(var_, n, w);
  for (int d = 0; d <= n; ++d) r.set_coeff(d, coeffs_[static_cast<std::size_t>(d)]);
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_grading(*this, o);
  *this = restricted(o.trunc_, o.y_window_);
  for (int d = 0; d <= trunc_; ++d) add_to_coeff(d, o.coeffs_[static_cast<std::size_t>(d)]);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_grading(*this, o);
  *this = restricted(o.trunc_, o.y_window_);
  for (int d = 0; d <= trunc_; ++d) add_to_coeff(d, -o.coeffs_[static_cast<std::size_t>(d)]);
  return *this;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  TruncatedSeries r = *this;
  for (auto& p : r.coeffs_) p *= c;
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_grading(a, b);
  const int n = std::min(a.trunc_order(), b.trunc_order());
  // y^t of the product is exact when every pairing stays inside both windows.
  std::optional<int> window;
  auto la = a.min_y_exponent(), lb = b.min_y_exponent();
  if (a.y_window() && lb) window = *a.y_window() + *lb;
  if (b.y_window() && la) window = min_window(window, *b.y_window() + *la);
  if (!window && (a.y_window() || b.y_window())) window = min_window(a.y_window(), b.y_window());

  TruncatedSeries r(a.var(), n, window);
  for (int d = 0; d <= n; ++d) {
    BiLaurent acc;
    for (int i = 0; i <= d; ++i) {
      const auto& x = a.coeff(i);
      const auto& y = b.coeff(d - i);
      if (x.is_zero() || y.is_zero()) continue;
      acc += x * y;
    }
    r.set_coeff(d, std::move(acc));
  }
  return r;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a.coeff(0) != BiLaurent(1)) throw DomainError("series_log: constant term must be exactly 1");
  const int n = a.trunc_order();
  TruncatedSeries x = a;
  x.set_coeff(0, BiLaurent());
  const auto window = composite_window(x);
  const int neg = std::min(x.min_y_exponent().value_or(0), 0);

  // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}, from A' = A L'.
  TruncatedSeries l(a.var(), n, window);
  std::vector<BiLaurent> work(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    BiLaurent acc = a.coeff(m) * Rational(m);
    for (int k = 1; k < m; ++k) {
      const auto& lk = work[static_cast<std::size_t>(k)];
      const auto& am = a.coeff(m - k);
      if (lk.is_zero() || am.is_zero()) continue;
      acc -= (lk * am) * Rational(k);
    }
    acc *= Rational(1, m);
    if (a.y_window()) acc = acc.truncate_y(*a.y_window() + (m - 1) * neg);
    work[static_cast<std::size_t>(m)] = acc;
    l.set_coeff(m, clipped(acc, window));
  }
  return l;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!a.coeff(0).is_zero()) throw DomainError("series_exp: constant term must be 0");
  const int n = a.trunc_order();
  const auto window = composite_window(a);
  const int neg = std::min(a.min_y_exponent().value_or(0), 0);

  // e_m = (1/m) sum_{k=1}^m k a_k e_{m-k}, from E' = A' E.
  TruncatedSeries e(a.var(), n, window);
  std::vector<BiLaurent> work(static_cast<std::size_t>(n) + 1);
  work[0] = BiLaurent(1);
  e.set_coeff(0, BiLaurent(1));
  for (int m = 1; m <= n; ++m) {
    BiLaurent acc;
    for (int k = 1; k <= m; ++k) {
      const auto& ak = a.coeff(k);
      const auto& em = work[static_cast<std::size_t>(m - k)];
      if (ak.is_zero() || em.is_zero()) continue;
      acc += (ak * em) * Rational(k);
    }
    acc *= Rational(1, m);
    if (a.y_window()) acc = acc.truncate_y(*a.y_window() + (m - 1) * neg);
    work[static_cast<std::size_t>(m)] = acc;
    e.set_coeff(m, clipped(acc, window));
  }
  return e;
}

BiLaurent coeff(const TruncatedSeries& a, int d) { return a.coeff(d); }

Rational binomial(long e, int i) {
  Rational r = 1;
  for (int t = 0; t < i; ++t) {
    r *= Rational(e - t);
    r /= Rational(t + 1);
  }
  return r;
}

TruncatedSeries expand_factor(const BiLaurent& m, int n, long e, int N, Grading var) {
  if (!m.is_monomial()) throw DomainError("expand_factor: factor must be a single monomial");
  if (n < 1) throw DomainError("expand_factor: grading degree must be positive");
  TruncatedSeries s(var, N);
  const BiLaurent neg_m = -m;
  BiLaurent power(1);
  for (int i = 0; static_cast<long>(i) * n <= N; ++i) {
    Rational b = binomial(e, i);
    if (b == 0) break;  // e >= 0 and i > e
    s.add_to_coeff(i * n, power * b);
    power *= neg_m;
  }
  return s;
}

}  // namespace k3bps
