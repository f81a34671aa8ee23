#include <k3bps/motivic.hpp>

#include <k3bps/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace k3bps {

BiLaurent EqPoincare::realize() const { return even - BiLaurent::u(1) * odd; }

EqPoincare EqPoincare::lefschetz_half() { return eq_sub(trivial(BiLaurent(1)), mu2_regular()); }

EqPoincare eq_mul(const EqPoincare& a, const EqPoincare& b) {
  return {a.even * b.even + BiLaurent::u(2) * (a.odd * b.odd), a.even * b.odd + a.odd * b.even};
}

EqPoincare eq_add(const EqPoincare& a, const EqPoincare& b) { return {a.even + b.even, a.odd + b.odd}; }

EqPoincare eq_sub(const EqPoincare& a, const EqPoincare& b) { return {a.even - b.even, a.odd - b.odd}; }

int stratum_gcd(const StrataInput& s, const std::vector<int>& indices) {
  int g = 0;
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= s.exponents.size())
      throw DomainError("stratum index " + std::to_string(i) + " out of range");
    g = std::gcd(g, s.exponents[static_cast<std::size_t>(i)]);
  }
  return g;
}

void validate(const StrataInput& s) {
  for (int n : s.exponents)
    if (n < 1) throw DomainError("monomial exponents must be positive");
  if (s.exponents.empty()) {
    if (!s.ambient_class) throw DomainError("f = 0 requires the ambient class [U]");
    if (!s.strata.empty()) throw DomainError("f = 0 has no strata");
    return;
  }
  const std::size_t k = s.exponents.size();
  if (k > 16) throw DomainError("too many coordinates in the monomial");
  std::set<std::vector<int>> seen;
  for (const auto& st : s.strata) {
    if (st.indices.empty()) throw DomainError("empty index set in strata data");
    std::vector<int> sorted = st.indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("repeated index in a stratum");
    if (!seen.insert(sorted).second) throw DomainError("duplicate stratum");
    const int m = stratum_gcd(s, sorted);
    if (m > 1 && !st.cover)
      throw DomainError("stratum with m_I = " + std::to_string(m) + " needs cover data");
    if (m == 1 && st.cover) throw DomainError("stratum with m_I = 1 must not carry cover data");
  }
  if (seen.size() != (std::size_t{1} << k) - 1) throw DomainError("strata data incomplete");
}

BiLaurent nearby_cycle(const StrataInput& s) {
  validate(s);
  const BiLaurent one_minus_l = BiLaurent(1) - BiLaurent::u(2);
  BiLaurent mf;
  for (const auto& st : s.strata) {
    const BiLaurent cover = st.cover ? st.cover->realize() : st.open_class;
    mf += one_minus_l.pow(static_cast<unsigned>(st.indices.size() - 1)) * cover;
  }
  return mf;
}

BiLaurent vanishing_cycle(const StrataInput& s) {
  validate(s);
  BiLaurent zero_fiber;
  if (s.exponents.empty()) {
    zero_fiber = *s.ambient_class;
  } else {
    for (const auto& st : s.strata) zero_fiber += st.open_class;
  }
  return BiLaurent::u(-s.ambient_dim) * (zero_fiber - nearby_cycle(s));
}

BiLaurent x2y2_virtual(const BiLaurent& m_class, const BiLaurent& e12_class, int dim_m) {
  return BiLaurent::u(-dim_m) * (m_class + e12_class * (BiLaurent::u(1) - BiLaurent::u(2)));
}

BiLaurent x2y_local(const BiLaurent& e1_open, const EqPoincare& e1_cover, const BiLaurent& e12_open,
                    int dim_u) {
  return BiLaurent::u(-dim_u) * (e1_open - e1_cover.realize() + BiLaurent::u(2) * e12_open);
}

BiLaurent x2y_virtual(const BiLaurent& m_reduced, const BiLaurent& d_class, const BiLaurent& odd_cover,
                      int dim_m) {
  const BiLaurent open = m_reduced - d_class;
  const EqPoincare cover{open, odd_cover};
  return BiLaurent::u(-(dim_m + 1)) * (open - cover.realize() + BiLaurent::u(2) * d_class);
}

BiLaurent branched_cover_odd_part(const BiLaurent& cover_minus_ramification,
                                  const BiLaurent& base_minus_branch) {
  return cover_minus_ramification - base_minus_branch;
}

namespace {

// Multi-graded series over classes a*s + b*f with a, b <= 1 and Euler
// characteristic n <= 1.
using ClassKey = std::tuple<int, int, int>;
using ClassSeries = std::map<ClassKey, BiLaurent>;

constexpr int kMaxA = 1, kMaxB = 1, kMaxN = 1;

ClassSeries class_mul(const ClassSeries& x, const ClassSeries& y) {
  ClassSeries out;
  for (const auto& [kx, px] : x) {
    for (const auto& [ky, py] : y) {
      const auto [a1, b1, n1] = kx;
      const auto [a2, b2, n2] = ky;
      const ClassKey k{a1 + a2, b1 + b2, n1 + n2};
      if (std::get<0>(k) > kMaxA || std::get<1>(k) > kMaxB || std::get<2>(k) > kMaxN) continue;
      out[k] += px * py;
    }
  }
  return out;
}

// log(1 + x) for x without constant term; nilpotent under the truncation.
ClassSeries class_log1p(const ClassSeries& x) {
  ClassSeries out, power = x;
  for (int j = 1; !power.empty(); ++j) {
    for (const auto& [k, p] : power) out[k] += p * Rational(sign_power(j + 1), j);
    power = class_mul(power, x);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

BiLaurent lookup(const ClassSeries& s, int a, int b, int n) {
  auto it = s.find({a, b, n});
  return it == s.end() ? BiLaurent() : it->second;
}

}  // namespace

EllipticK3Report elliptic_k3_example() {
  EllipticK3Report r;
  const BiLaurent u = BiLaurent::u(1);
  r.p1_class = BiLaurent(1) + BiLaurent::u(2);
  r.k3_class = BiLaurent(1) + BiLaurent::u(2) * Rational(22) + BiLaurent::u(4);
  const BiLaurent p1xp1 = r.p1_class * r.p1_class;

  // Two components E_1 = S and E_2 = P^1 x P^1 glued along the section.
  r.p1_sf_class = r.k3_class + p1xp1 - r.p1_class;
  r.p1_sf_virtual = x2y2_virtual(r.p1_sf_class, r.p1_class, 2);

  // Z^mot = 1 + sum_beta sum_n [P_n(S,beta)]^vir q^n v^beta, to order q.
  ClassSeries x;
  x[{1, 0, 1}] = BiLaurent(1);                          // P_1(S,s) = point
  x[{0, 1, 0}] = BiLaurent::u(-1) * r.p1_class;         // P_0(S,f) = P^1
  x[{0, 1, 1}] = BiLaurent::u(-2) * r.k3_class;         // P_1(S,f) = S
  x[{1, 1, 0}] = BiLaurent::u(-1) * r.p1_class;         // P_0(S,s+f) = P^1
  x[{1, 1, 1}] = r.p1_sf_virtual;
  const ClassSeries log = class_log1p(x);
  r.log_f_q0 = lookup(log, 0, 1, 0);
  r.log_f_q1 = lookup(log, 0, 1, 1);
  r.log_sf_q0 = lookup(log, 1, 1, 0);
  r.log_sf_q1 = lookup(log, 1, 1, 1);

  // 2f: P_0(S,2f) = Sym^2 P^1 = P^2, nonreduced along a conic D; the double
  // cover branched along D is a quadric Q.
  const BiLaurent p2 = BiLaurent(1) + BiLaurent::u(2) + BiLaurent::u(4);
  const BiLaurent conic = r.p1_class;
  const BiLaurent quadric_open = p1xp1 - conic;  // [Q - D~] = L^2 + L
  const BiLaurent odd = branched_cover_odd_part(quadric_open, p2 - conic);
  r.two_fiber = x2y_virtual(p2, conic, odd, 2);

  r.ok = r.log_sf_q0 == r.log_f_q0 && r.log_sf_q1 == r.log_f_q1 &&
         r.log_f_q0 == BiLaurent::u(-1) + u && r.log_f_q1 == BiLaurent::u(-2) + BiLaurent(22) + BiLaurent::u(2);
  return r;
}

}  // namespace k3bps
