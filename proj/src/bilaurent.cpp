#include <k3bps/bilaurent.hpp>

#include <k3bps/error.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace k3bps {

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return 1;
  if (base == 0) throw DomainError("negative power of zero");
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned n = static_cast<unsigned>(e > 0 ? e : -e);
  Rational r = 1;
  while (n) {
    if (n & 1u) r *= b;
    b *= b;
    n >>= 1u;
  }
  return r;
}

std::string monomial_string(int eu, int ey) {
  std::string s;
  auto var = [&s](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (e != 1) s += '^' + std::to_string(e);
  };
  var("u", eu);
  var("y", ey);
  return s;
}

}  // namespace

BiLaurent::BiLaurent(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

BiLaurent BiLaurent::monomial(const Rational& c, int eu, int ey) {
  BiLaurent p;
  if (c != 0) p.terms_.emplace(Exponent{eu, ey}, c);
  return p;
}

Rational BiLaurent::coeff(int eu, int ey) const {
  auto it = terms_.find({eu, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiLaurent::add_term(int eu, int ey, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{eu, ey}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& o) {
  *this = *this * o;
  return *this;
}

BiLaurent& BiLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  Rational t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      r.add_term(ea.first + eb.first, ea.second + eb.second, t);
    }
  }
  return r;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

BiLaurent BiLaurent::pow(unsigned n) const {
  BiLaurent result(1);
  BiLaurent base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

BiLaurent BiLaurent::invert_u() const {
  BiLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{-e.first, e.second}, c);
  return r;
}

BiLaurent BiLaurent::invert_y() const {
  BiLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.first, -e.second}, c);
  return r;
}

BiLaurent BiLaurent::scale_y(const Rational& s) const {
  BiLaurent r;
  for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c * rational_pow(s, e.second));
  return r;
}

BiLaurent BiLaurent::subs_u(const Rational& value) const {
  BiLaurent r;
  for (const auto& [e, c] : terms_) r.add_term(0, e.second, c * rational_pow(value, e.first));
  return r;
}

BiLaurent BiLaurent::subs_y(const Rational& value) const {
  BiLaurent r;
  for (const auto& [e, c] : terms_) r.add_term(e.first, 0, c * rational_pow(value, e.second));
  return r;
}

Rational BiLaurent::evaluate(const Rational& u, const Rational& y) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c * rational_pow(u, e.first) * rational_pow(y, e.second);
  return s;
}

BiLaurent BiLaurent::y_coefficient(int ey) const {
  BiLaurent r;
  for (const auto& [e, c] : terms_)
    if (e.second == ey) r.terms_.emplace(Exponent{e.first, 0}, c);
  return r;
}

BiLaurent BiLaurent::truncate_y(int max_ey) const {
  BiLaurent r;
  for (const auto& [e, c] : terms_)
    if (e.second <= max_ey) r.terms_.emplace(e, c);
  return r;
}

std::optional<std::pair<int, int>> BiLaurent::u_range() const {
  if (terms_.empty()) return std::nullopt;
  return std::pair{terms_.begin()->first.first, terms_.rbegin()->first.first};
}

std::optional<std::pair<int, int>> BiLaurent::y_range() const {
  if (terms_.empty()) return std::nullopt;
  int lo = terms_.begin()->first.second, hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e.second);
    hi = std::max(hi, e.second);
  }
  return std::pair{lo, hi};
}

bool BiLaurent::is_symmetric() const {
  return *this == invert_u() && *this == invert_y();
}

bool BiLaurent::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

std::string BiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  // Print by increasing y then increasing u: reads naturally for u-polynomials
  // and for series whose y-exponent is the Euler characteristic.
  std::vector<std::pair<Exponent, const Rational*>> order;
  order.reserve(terms_.size());
  for (const auto& [e, c] : terms_) order.emplace_back(e, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::pair{a.first.second, a.first.first} < std::pair{b.first.second, b.first.first};
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, cp] : order) {
    Rational c = *cp;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_string(e.first, e.second);
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << '*' << mono;
    }
  }
  return out.str();
}

std::string to_string(const BiLaurent& p) { return p.to_string(); }

}  // namespace k3bps
